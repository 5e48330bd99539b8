//! Dense complex linear algebra used by the spectral checks.
//!
//! Eigenvalues come from an in-house solver: diagonal balancing, Householder
//! reduction to upper Hessenberg form, then single-shift complex QR with
//! Wilkinson shifts and deflation. Singular values are delegated to
//! nalgebra's SVD.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Iterations allowed per eigenvalue before giving up.
pub const QR_ITERATIONS_PER_EIGENVALUE: usize = 60;

pub fn zeros(n: usize) -> CMatrix {
    CMatrix::from_element(n, n, ZERO)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Largest entrywise modulus of `a − b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Spectral (2-)norm.
pub fn op_norm(m: &CMatrix) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    m.clone().svd(false, false).singular_values.max()
}

pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    m.clone().svd(false, false).singular_values.iter().copied().collect()
}

pub fn min_singular_value(m: &CMatrix) -> f64 {
    singular_values(m).into_iter().fold(f64::INFINITY, f64::min)
}

/// Numerical rank with relative cutoff `rel_tol · σ_max`.
pub fn rank(m: &CMatrix, rel_tol: f64) -> usize {
    let sv = singular_values(m);
    let top = sv.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// `m^p` by binary powering.
pub fn matrix_power(m: &CMatrix, mut p: u64) -> CMatrix {
    let mut result = identity(m.nrows());
    let mut base = m.clone();
    while p > 0 {
        if p & 1 == 1 {
            result = &result * &base;
        }
        p >>= 1;
        if p > 0 {
            base = &base * &base;
        }
    }
    result
}

/// All eigenvalues of a square complex matrix.
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    assert!(m.is_square(), "eigenvalues of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    if m.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return Err(Error::NoConvergence(0));
    }
    let mut h = m.clone();
    balance(&mut h);
    hessenberg(&mut h);
    hessenberg_qr(&mut h)
}

/// `max |λ|`; an empty matrix has spectral radius 0.
pub fn spectral_radius(m: &CMatrix) -> Result<f64> {
    Ok(eigenvalues(m)?.into_iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Parlett–Reinsch diagonal scaling by powers of two.
fn balance(a: &mut CMatrix) {
    let n = a.nrows();
    let radix = 2.0f64;
    let mut done = false;
    let mut sweeps = 0;
    while !done && sweeps < 100 {
        done = true;
        sweeps += 1;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].l1_norm();
                    r += a[(i, j)].l1_norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let g = r / radix;
            let mut cc = c;
            while cc < g {
                f *= radix;
                cc *= radix * radix;
            }
            let g = r * radix;
            while cc > g {
                f /= radix;
                cc /= radix * radix;
            }
            if (cc + r / f) < 0.95 * s {
                done = false;
                for j in 0..n {
                    a[(i, j)] /= f;
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(h: &mut CMatrix) {
    let n = h.nrows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let len = n - k - 1;
        let mut v: Vec<Complex64> = (0..len).map(|i| h[(k + 1 + i, k)]).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let phase = if v[0].norm() == 0.0 { ONE } else { v[0] / v[0].norm() };
        let alpha = -phase * norm;
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // Left: H ← (I − 2vv*) H on rows k+1..n.
        for j in k..n {
            let dot: Complex64 = (0..len).map(|i| v[i].conj() * h[(k + 1 + i, j)]).sum();
            for i in 0..len {
                h[(k + 1 + i, j)] -= v[i] * dot * 2.0;
            }
        }
        // Right: H ← H (I − 2vv*) on columns k+1..n.
        for i in 0..n {
            let dot: Complex64 = (0..len).map(|j| h[(i, k + 1 + j)] * v[j]).sum();
            for j in 0..len {
                h[(i, k + 1 + j)] -= dot * v[j].conj() * 2.0;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = ZERO;
        }
    }
}

/// Rotation `[c s; −s̄ c]` mapping `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, ZERO);
    }
    if an == 0.0 {
        return (0.0, ONE);
    }
    let r = an.hypot(bn);
    (an / r, (a / an) * b.conj() / r)
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let l1 = mid + disc;
    let l2 = mid - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

fn hessenberg_qr(h: &mut CMatrix) -> Result<Vec<Complex64>> {
    let n = h.nrows();
    let mut eig = vec![ZERO; n];
    let scale = h.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(eig);
    }
    let eps = f64::EPSILON;
    let max_total = QR_ITERATIONS_PER_EIGENVALUE * n;
    let mut total = 0usize;
    let mut since_deflation = 0usize;
    let mut hi = n - 1;
    let mut rotations: Vec<(f64, Complex64)> = Vec::with_capacity(n);
    loop {
        if hi == 0 {
            eig[0] = h[(0, 0)];
            break;
        }
        // Locate the start of the active unreduced block.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let mut diag = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if diag == 0.0 {
                diag = scale;
            }
            if sub <= eps * diag {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eig[hi] = h[(hi, hi)];
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if total >= max_total {
            return Err(Error::NoConvergence(total));
        }
        total += 1;
        since_deflation += 1;
        let shift = if since_deflation % 11 == 10 {
            // Exceptional shift to break cycles.
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };
        for i in lo..=hi {
            h[(i, i)] -= shift;
        }
        rotations.clear();
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            rotations.push((c, s));
            for j in k..=hi {
                let x = h[(k, j)];
                let y = h[(k + 1, j)];
                h[(k, j)] = x * c + s * y;
                h[(k + 1, j)] = -s.conj() * x + y * c;
            }
            h[(k + 1, k)] = ZERO;
        }
        for (offset, &(c, s)) in rotations.iter().enumerate() {
            let k = lo + offset;
            let last = (k + 2).min(hi);
            for i in lo..=last {
                let x = h[(i, k)];
                let y = h[(i, k + 1)];
                h[(i, k)] = x * c + y * s.conj();
                h[(i, k + 1)] = -x * s + y * c;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += shift;
        }
    }
    Ok(eig)
}
