//! Induced representations `Λ_α = ind_{A×{1}}^G α` realized on `ℓ²(K)`:
//!
//! `[Λ_α(a, κ) φ](κ′) = ⟨a, φ_{κ′}(α)⟩ · φ(κ⁻¹κ′)`.
//!
//! Basis vector `κ′` is the delta function at `κ′`.

use num_complex::Complex64;

use crate::group::{Character, GElem, KGroup, MotionGroup};
use crate::linalg::{self, CMatrix};
use crate::measure::GroupMeasure;

/// `Λ_α(x)` for a group element.
#[derive(Debug, Clone)]
pub struct RepMatrix {
    pub alpha: Character,
    pub matrix: CMatrix,
}

/// `μ̂(Λ_α)` or `Λ_α(μ)`.
#[derive(Debug, Clone)]
pub struct FourierBlock {
    pub alpha: Character,
    pub matrix: CMatrix,
}

/// Precomputed twisted characters `φ_{κ′}(α)` for one `α`.
struct Induced<'g> {
    g: &'g MotionGroup,
    twisted: Vec<Character>,
}

impl<'g> Induced<'g> {
    fn new(g: &'g MotionGroup, alpha: &Character) -> Self {
        let twisted = (0..g.k_order()).map(|k| g.dual_action(k, alpha)).collect();
        Self { g, twisted }
    }

    /// Adds `w · Λ_α(x)` into `out`.
    fn accumulate(&self, x: &GElem, w: Complex64, out: &mut CMatrix) {
        let k = self.g.k();
        let kinv = k.inv(x.k);
        for (row, chi) in self.twisted.iter().enumerate() {
            let col = k.mul(kinv, row);
            out[(row, col)] += w * self.g.pairing(&x.a, chi);
        }
    }
}

pub fn lambda_elem(g: &MotionGroup, alpha: &Character, x: &GElem) -> RepMatrix {
    let mut matrix = linalg::zeros(g.k_order());
    Induced::new(g, alpha).accumulate(x, Complex64::new(1.0, 0.0), &mut matrix);
    RepMatrix { alpha: alpha.clone(), matrix }
}

/// `μ̂(Λ_α) = Σ_x μ(x) Λ_α(x⁻¹)`.
pub fn fourier(mu: &GroupMeasure, alpha: &Character) -> FourierBlock {
    let g = mu.group();
    let induced = Induced::new(g, alpha);
    let mut matrix = linalg::zeros(g.k_order());
    for x in mu.support() {
        let xinv = g.element(g.inverse_index(x));
        induced.accumulate(&xinv, mu.weight(x), &mut matrix);
    }
    FourierBlock { alpha: alpha.clone(), matrix }
}

/// `Λ_α(μ) = Σ_x μ(x) Λ_α(x)`.
pub fn rep_of_measure(mu: &GroupMeasure, alpha: &Character) -> FourierBlock {
    let g = mu.group();
    let induced = Induced::new(g, alpha);
    let mut matrix = linalg::zeros(g.k_order());
    for x in mu.support() {
        induced.accumulate(&g.element(x), mu.weight(x), &mut matrix);
    }
    FourierBlock { alpha: alpha.clone(), matrix }
}

/// Orthonormal (Helmert) basis of the complement of the constants in `ℓ²(K)`,
/// as the columns of an `m × (m − 1)` matrix.
pub fn constants_complement_basis(m: usize) -> CMatrix {
    CMatrix::from_fn(m, m.saturating_sub(1), |i, j| {
        let j1 = j + 1;
        let norm = ((j1 * (j1 + 1)) as f64).sqrt();
        let v = if i < j1 {
            1.0 / norm
        } else if i == j1 {
            -(j1 as f64) / norm
        } else {
            0.0
        };
        Complex64::new(v, 0.0)
    })
}

/// `μ̂(Λ_0)` compressed to the orthocomplement of the constants.
pub fn lambda0_complement_block(mu: &GroupMeasure) -> CMatrix {
    let m = mu.group().k_order();
    let full = fourier(mu, &Character::zero(mu.group().rank())).matrix;
    compress_to_complement(&full, m)
}

pub fn compress_to_complement(full: &CMatrix, m: usize) -> CMatrix {
    let basis = constants_complement_basis(m);
    basis.adjoint() * full * &basis
}

/// `L_K(κ)`: `[L φ](κ′) = φ(κ⁻¹κ′)`.
pub fn left_regular(k: &KGroup, kappa: usize) -> CMatrix {
    let m = k.order();
    let kinv = k.inv(kappa);
    CMatrix::from_fn(m, m, |row, col| {
        if k.mul(kinv, row) == col {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `R_K(κ)`: `[R φ](κ′) = φ(κ′κ)`.
pub fn right_regular(k: &KGroup, kappa: usize) -> CMatrix {
    let m = k.order();
    CMatrix::from_fn(m, m, |row, col| {
        if k.mul(row, kappa) == col {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `max_x ‖Λ_{φ_{κ′}(α)}(x) − R(κ′) Λ_α(x) R(κ′)⁻¹‖` (entrywise max) over all of `G`.
pub fn orbit_conjugation_check(g: &MotionGroup, alpha: &Character, kprime: usize) -> f64 {
    let moved = g.dual_action(kprime, alpha);
    let r = right_regular(g.k(), kprime);
    let rinv = right_regular(g.k(), g.k().inv(kprime));
    let direct = Induced::new(g, &moved);
    let base = Induced::new(g, alpha);
    let m = g.k_order();
    let mut worst: f64 = 0.0;
    for x in g.elements() {
        let mut lhs = linalg::zeros(m);
        direct.accumulate(&x, Complex64::new(1.0, 0.0), &mut lhs);
        let mut inner = linalg::zeros(m);
        base.accumulate(&x, Complex64::new(1.0, 0.0), &mut inner);
        let rhs = &r * inner * &rinv;
        worst = worst.max(linalg::max_abs_diff(&lhs, &rhs));
    }
    worst
}

/// `‖μ̂(Λ_0) − Σ_κ π_K(μ)(κ) L_K(κ⁻¹)‖` (entrywise max).
pub fn pik_consistency(mu: &GroupMeasure) -> f64 {
    let g = mu.group();
    let k = g.k();
    let lhs = fourier(mu, &Character::zero(g.rank())).matrix;
    let pushed = mu.push_k();
    let mut rhs = linalg::zeros(k.order());
    for (kappa, w) in pushed.weights.iter().enumerate() {
        if w.norm_sqr() > 0.0 {
            rhs += left_regular(k, k.inv(kappa)) * *w;
        }
    }
    linalg::max_abs_diff(&lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::measure::{central_measure, GroupMeasure};
    use std::sync::Arc;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn random_measure(g: &Arc<MotionGroup>, salt: u64) -> GroupMeasure {
        // deterministic pseudo-random complex weights
        let mut state = 0x9e3779b97f4a7c15u64 ^ salt;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        let w = (0..g.order()).map(|_| Complex64::new(next(), next())).collect();
        GroupMeasure::new(g.clone(), w).unwrap()
    }

    fn groups() -> Vec<Arc<MotionGroup>> {
        vec![
            Arc::new(catalog::dihedral(5).unwrap()),
            Arc::new(catalog::multiplicative(7, 3, 2).unwrap()),
            Arc::new(catalog::matrix_group(2, 2, &[vec![vec![0, 1], vec![1, 0]], vec![vec![1, 1], vec![0, 1]]]).unwrap()),
            Arc::new(catalog::cyclic_action(3, 2, 4, &[vec![0, -1], vec![1, 0]]).unwrap()),
            Arc::new(catalog::multiplicative(5, 4, -1).unwrap()),
        ]
    }

    #[test]
    fn identity_and_trivial_character() {
        let g = catalog::dihedral(5).unwrap();
        let alpha = Character(vec![2]);
        let id = lambda_elem(&g, &alpha, &g.identity()).matrix;
        assert_eq!(linalg::max_abs_diff(&id, &linalg::identity(2)), 0.0);
        for x in g.elements() {
            let m = lambda_elem(&g, &Character(vec![0]), &x).matrix;
            assert_eq!(linalg::max_abs_diff(&m, &left_regular(g.k(), x.k)), 0.0);
        }
    }

    #[test]
    fn unitary_homomorphism_exhaustive() {
        for g in groups() {
            let elems: Vec<GElem> = g.elements().collect();
            for alpha in g.characters().take(6) {
                for x in &elems {
                    let mx = lambda_elem(&g, &alpha, x).matrix;
                    let gram = mx.adjoint() * &mx;
                    assert!(linalg::max_abs_diff(&gram, &linalg::identity(g.k_order())) < 1e-12);
                }
                for x in elems.iter().step_by(3) {
                    for y in elems.iter().step_by(2) {
                        let lhs = lambda_elem(&g, &alpha, x).matrix * lambda_elem(&g, &alpha, y).matrix;
                        let rhs = lambda_elem(&g, &alpha, &g.multiply(x, y)).matrix;
                        assert!(linalg::max_abs_diff(&lhs, &rhs) < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn fourier_examples() {
        for g in groups() {
            let e = GroupMeasure::identity(g.clone());
            let u = GroupMeasure::uniform(g.clone());
            for alpha in g.characters() {
                let fe = fourier(&e, &alpha).matrix;
                assert_eq!(linalg::max_abs_diff(&fe, &linalg::identity(g.k_order())), 0.0);
                if !alpha.is_zero() {
                    assert!(fourier(&u, &alpha).matrix.iter().all(|z| z.norm() < 1e-14));
                }
            }
        }
    }

    #[test]
    fn fourier_reverses_products_and_matches_adjoint() {
        for (i, g) in groups().into_iter().enumerate() {
            let mu = random_measure(&g, i as u64);
            let nu = random_measure(&g, 100 + i as u64);
            let prod = mu.convolve(&nu).unwrap();
            for alpha in g.characters() {
                let lhs = fourier(&prod, &alpha).matrix;
                let rhs = fourier(&nu, &alpha).matrix * fourier(&mu, &alpha).matrix;
                assert!(linalg::max_abs_diff(&lhs, &rhs) < 1e-12);
                let adj = rep_of_measure(&mu.conj(), &alpha).matrix.adjoint();
                assert!(linalg::max_abs_diff(&fourier(&mu, &alpha).matrix, &adj) < 1e-13);
                assert!(linalg::op_norm(&rep_of_measure(&mu, &alpha).matrix) <= mu.tv_norm() + 1e-12);
            }
        }
    }

    #[test]
    fn rep_of_point_mass() {
        let g = Arc::new(catalog::dihedral(5).unwrap());
        let alpha = Character(vec![1]);
        for x in 0..g.order() {
            let m = rep_of_measure(&GroupMeasure::point(g.clone(), x), &alpha).matrix;
            let direct = lambda_elem(&g, &alpha, &g.element(x)).matrix;
            assert_eq!(linalg::max_abs_diff(&m, &direct), 0.0);
        }
    }

    #[test]
    fn complement_block_examples() {
        let g = Arc::new(catalog::multiplicative(7, 3, 2).unwrap());
        let u = GroupMeasure::uniform(g.clone());
        assert!(lambda0_complement_block(&u).iter().all(|z| z.norm() < 1e-15));
        let trivial_k = Arc::new(catalog::direct_cyclic(5, 1).unwrap());
        assert_eq!(lambda0_complement_block(&GroupMeasure::uniform(trivial_k)).nrows(), 0);
        let b = constants_complement_basis(5);
        let gram = b.adjoint() * &b;
        assert!(linalg::max_abs_diff(&gram, &linalg::identity(4)) < 1e-15);
        let ones = CMatrix::from_element(5, 1, c(1.0));
        assert!((b.adjoint() * ones).iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn complement_spectrum_plus_constant_eigenvalue() {
        for (i, g) in groups().into_iter().enumerate() {
            let mu = random_measure(&g, 7 + i as u64);
            let full = fourier(&mu, &Character::zero(g.rank())).matrix;
            let block = lambda0_complement_block(&mu);
            // Λ_0 maps constants to (total mass)·constants
            let mass = mu.total_mass();
            let mut expected = linalg::eigenvalues(&block).unwrap();
            expected.push(mass);
            let got = linalg::eigenvalues(&full).unwrap();
            for z in &expected {
                let closest = got.iter().map(|w| (w - z).norm()).fold(f64::INFINITY, f64::min);
                assert!(closest < 1e-8, "eigenvalue {z} missing");
            }
            assert_eq!(expected.len(), got.len());
        }
    }

    #[test]
    fn orbit_conjugation_identity() {
        let g = catalog::dihedral(5).unwrap();
        assert_eq!(orbit_conjugation_check(&g, &Character(vec![1]), 0), 0.0);
        assert!(orbit_conjugation_check(&g, &Character(vec![1]), 1) <= 1e-14);
        for g in groups() {
            for alpha in g.characters() {
                for kp in 0..g.k_order() {
                    assert!(orbit_conjugation_check(&g, &alpha, kp) <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn pik_identity() {
        for (i, g) in groups().into_iter().enumerate() {
            assert_eq!(pik_consistency(&GroupMeasure::point(g.clone(), 7 % g.order())), 0.0);
            assert!(pik_consistency(&random_measure(&g, 50 + i as u64)) <= 1e-13);
            let u = GroupMeasure::uniform(g.clone());
            assert!(pik_consistency(&u) <= 1e-13);
            let m = g.k_order() as f64;
            let averaging = CMatrix::from_element(g.k_order(), g.k_order(), c(1.0 / m));
            let f0 = fourier(&u, &Character::zero(g.rank())).matrix;
            assert!(linalg::max_abs_diff(&f0, &averaging) < 1e-14);
        }
    }

    #[test]
    fn central_measure_transform() {
        for g in groups() {
            for orbit in g.dual_orbits().iter().skip(1) {
                let nu = central_measure(&g, &orbit.members).unwrap();
                for alpha in g.characters() {
                    let f = fourier(&nu, &alpha).matrix;
                    let scale = if orbit.members.contains(&alpha) { 1.0 } else { 0.0 };
                    let expect = linalg::identity(g.k_order()) * c(scale);
                    assert!(linalg::max_abs_diff(&f, &expect) < 1e-12);
                }
            }
            let all: Vec<Character> = g.characters().filter(|c| !c.is_zero()).collect();
            let nu = central_measure(&g, &all).unwrap();
            let f0 = fourier(&nu, &Character::zero(g.rank())).matrix;
            assert!(f0.iter().all(|z| z.norm() < 1e-12));
        }
    }

    #[test]
    fn fourier_is_injective_over_all_characters() {
        for g in groups().into_iter().take(3) {
            let m = g.k_order();
            let chars: Vec<Character> = g.characters().collect();
            let rows = chars.len() * m * m;
            let mut map = CMatrix::from_element(rows, g.order(), c(0.0));
            for x in 0..g.order() {
                let dx = GroupMeasure::point(g.clone(), x);
                for (ci, alpha) in chars.iter().enumerate() {
                    let f = fourier(&dx, alpha).matrix;
                    for i in 0..m {
                        for j in 0..m {
                            map[(ci * m * m + i * m + j, x)] = f[(i, j)];
                        }
                    }
                }
            }
            assert_eq!(linalg::rank(&map, 1e-10), g.order());
        }
    }

    #[test]
    fn kernel_of_push_k_matches_kernel_of_lambda0() {
        for g in groups() {
            let m = g.k_order();
            let order = g.order();
            let mut push = CMatrix::from_element(m, order, c(0.0));
            let mut lam = CMatrix::from_element(m * m, order, c(0.0));
            for x in 0..order {
                let dx = GroupMeasure::point(g.clone(), x);
                for (k, w) in dx.push_k().weights.iter().enumerate() {
                    push[(k, x)] = *w;
                }
                let f = fourier(&dx, &Character::zero(g.rank())).matrix;
                for i in 0..m {
                    for j in 0..m {
                        lam[(i * m + j, x)] = f[(i, j)];
                    }
                }
            }
            let mut stacked = CMatrix::from_element(m + m * m, order, c(0.0));
            stacked.rows_mut(0, m).copy_from(&push);
            stacked.rows_mut(m, m * m).copy_from(&lam);
            let rp = linalg::rank(&push, 1e-10);
            assert_eq!(rp, linalg::rank(&lam, 1e-10));
            assert_eq!(rp, linalg::rank(&stacked, 1e-10));
        }
    }
}
