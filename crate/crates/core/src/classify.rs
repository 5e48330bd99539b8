//! Classification of probability measures against the six conditions
//!
//! * (SR) `ϱ(μ̂(U)) < 1` and (S) `1 ∉ σ(μ̂(U))` for all `[U] ∈ Ĝ ∖ {1_G}`,
//!   decided on the nonzero orbit blocks plus the `Λ_0` complement;
//! * (A) adapted and (ASA) adapted and strictly aperiodic, decided by
//!   subgroup and normal-closure computations on the support;
//! * (M) mixing, (E) ergodic and weak mixing, estimated from convolution
//!   powers acting on the mean-zero basis `f_x = δ_x − δ_e`.
//!
//! On finite groups these satisfy `(E) ⇔ (A) ⇔ (S)` and
//! `(M) ⇔ (ASA) ⇔ (SR)`; [`cross_check`] reports any violated implication.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::MotionGroup;
use crate::linalg::{self, CMatrix};
use crate::measure::{GroupMeasure, ProbabilityMeasure};
use crate::rep;
use crate::spectral::{self, BlockId};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Verdicts within `tol / FAIL_BAND_DIVISOR` of the boundary count as failing;
/// between that and `tol` they are indeterminate.
pub const FAIL_BAND_DIVISOR: f64 = 10.0;

/// An empirical floor must exceed this multiple of the threshold.
pub const FLOOR_FACTOR: f64 = 10.0;

/// Ratio `v(N) / v(N/4)` above which the sup-norm curve counts as flat. In
/// the non-mixing and non-ergodic cases the curve sits at exactly 2.
pub const FLAT_RATIO: f64 = 0.999;

/// Ratio between tail windows above which weak-mixing averages count as flat.
pub const WEAK_FLAT_RATIO: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TriState {
    Holds,
    Fails,
    Indeterminate,
}

impl TriState {
    pub fn conclusive(self) -> Option<bool> {
        match self {
            TriState::Holds => Some(true),
            TriState::Fails => Some(false),
            TriState::Indeterminate => None,
        }
    }
}

impl std::fmt::Display for TriState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TriState::Holds => "HOLDS",
            TriState::Fails => "FAILS",
            TriState::Indeterminate => "INDETERMINATE",
        })
    }
}

/// The block responsible for a verdict and its value.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub block: BlockId,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralVerdict {
    pub state: TriState,
    /// Largest radius (SR) or smallest margin (S).
    pub witness: Option<Witness>,
    pub blocks: Vec<Witness>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct StructuralVerdict {
    pub holds: bool,
    pub subgroup_size: usize,
    pub group_order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Empirical {
    Holds,
    Fails,
    Inconclusive,
}

impl Empirical {
    pub fn conclusive(self) -> Option<bool> {
        match self {
            Empirical::Holds => Some(true),
            Empirical::Fails => Some(false),
            Empirical::Inconclusive => None,
        }
    }
}

impl std::fmt::Display for Empirical {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Empirical::Holds => "HOLDS",
            Empirical::Fails => "FAILS",
            Empirical::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// A decay profile `(n, value)` with its verdict.
#[derive(Debug, Clone, Serialize)]
pub struct DecayCurve {
    pub points: Vec<(u64, f64)>,
    pub verdict: Empirical,
    pub threshold: f64,
}

impl DecayCurve {
    pub fn last(&self) -> f64 {
        self.points.last().map(|p| p.1).unwrap_or(f64::NAN)
    }
}

/// Weak-mixing profile: Cesàro averages plus their second-half windows.
#[derive(Debug, Clone, Serialize)]
pub struct WeakMixingCurve {
    pub points: Vec<(u64, f64)>,
    /// `(n, sup (2/n) Σ_{n/2 < k ≤ n} |⟨f∗μᵏ, h⟩|)`.
    pub tail_points: Vec<(u64, f64)>,
    pub verdict: Empirical,
    pub threshold: f64,
    pub test_function_count: usize,
}

fn spectral_state(distance: f64, tol: f64) -> TriState {
    if distance > tol {
        TriState::Holds
    } else if distance <= tol / FAIL_BAND_DIVISOR {
        TriState::Fails
    } else {
        TriState::Indeterminate
    }
}

/// (SR): every nontrivial block has spectral radius `< 1 − tol`.
pub fn check_sr(mu: &ProbabilityMeasure, tol: f64) -> Result<SpectralVerdict> {
    let mut blocks = Vec::new();
    for (block, m) in spectral::nontrivial_blocks(mu.measure()) {
        let value = linalg::spectral_radius(&m)?;
        blocks.push(Witness { block, value });
    }
    let witness = blocks
        .iter()
        .max_by(|a, b| a.value.total_cmp(&b.value))
        .cloned();
    let worst = witness.as_ref().map_or(0.0, |w| w.value);
    Ok(SpectralVerdict { state: spectral_state(1.0 - worst, tol), witness, blocks })
}

/// (S): `1 ∉ σ` on every nontrivial block, via the smallest singular value of `I − M`.
pub fn check_s(mu: &ProbabilityMeasure, tol: f64) -> Result<SpectralVerdict> {
    let blocks: Vec<Witness> = spectral::nontrivial_blocks(mu.measure())
        .into_iter()
        .map(|(block, m)| Witness { value: spectral::one_in_spectrum(&m, tol).margin, block })
        .collect();
    let witness = blocks
        .iter()
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .cloned();
    let worst = witness.as_ref().map_or(f64::INFINITY, |w| w.value);
    Ok(SpectralVerdict { state: spectral_state(worst, tol), witness, blocks })
}

/// Adapted: the support generates `G`.
pub fn adapted(mu: &ProbabilityMeasure) -> StructuralVerdict {
    let g = mu.group();
    let sub = g.generated_subgroup(&mu.measure().support());
    let size = sub.iter().filter(|&&b| b).count();
    StructuralVerdict { holds: size == g.order(), subgroup_size: size, group_order: g.order() }
}

/// Strictly aperiodic: the normal closure of `{s₀⁻¹ s : s ∈ supp μ}` is `G`.
pub fn strictly_aperiodic_check(mu: &ProbabilityMeasure) -> Result<StructuralVerdict> {
    let g = mu.group();
    let support = mu.measure().support();
    let &s0 = support.first().ok_or(Error::EmptySupport)?;
    let s0inv = g.inverse_index(s0);
    let diffs: Vec<usize> = support.iter().map(|&s| g.mul_index(s0inv, s)).collect();
    let closure = g.normal_closure(&diffs);
    let size = closure.iter().filter(|&&b| b).count();
    Ok(StructuralVerdict { holds: size == g.order(), subgroup_size: size, group_order: g.order() })
}

/// Dyadic schedule `1, 2, 4, …` up to `n_max`, with `n_max` appended if it is
/// not a power of two.
pub fn dyadic_schedule(n_max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 1u64;
    while n <= n_max {
        out.push(n);
        n *= 2;
    }
    if out.last() != Some(&n_max) && n_max >= 1 {
        out.push(n_max);
    }
    out
}

/// `sup_x ‖f_x ∗ ν‖₁` with `f_x = δ_x − δ_e`, i.e. `sup_x Σ_y |ν(x⁻¹y) − ν(y)|`.
pub fn sup_basis_norm(nu: &GroupMeasure) -> f64 {
    let g = nu.group();
    let order = g.order();
    let w = nu.weights();
    let mut best: f64 = 0.0;
    for x in 0..order {
        let xinv = g.inverse_index(x);
        let mut s = 0.0;
        for y in 0..order {
            s += (w[g.mul_index(xinv, y)] - w[y]).norm();
        }
        best = best.max(s);
    }
    best
}

/// Flat-floor test on the last three curve values.
fn flat_floor(values: &[f64], threshold: f64, ratio: f64) -> bool {
    if values.len() < 3 {
        return false;
    }
    let tail = &values[values.len() - 3..];
    let floor = tail.iter().copied().fold(f64::INFINITY, f64::min);
    floor > FLOOR_FACTOR * threshold && tail[2] >= ratio * tail[0]
}

fn decide(values: &[f64], threshold: f64, ratio: f64) -> Empirical {
    match values.last() {
        Some(&v) if v < threshold => Empirical::Holds,
        _ if flat_floor(values, threshold, ratio) => Empirical::Fails,
        _ => Empirical::Inconclusive,
    }
}

/// (MC) estimate: `sup_x ‖f_x ∗ μⁿ‖₁` along the dyadic schedule.
pub fn empirical_mixing(mu: &ProbabilityMeasure, n_max: u64, threshold: f64) -> DecayCurve {
    let schedule = dyadic_schedule(n_max);
    let mut points = Vec::with_capacity(schedule.len());
    let mut power = mu.measure().clone();
    let mut current = 1u64;
    for &n in &schedule {
        if n.is_power_of_two() {
            while current < n {
                power = power.convolve(&power).expect("same group");
                current *= 2;
            }
            points.push((n, sup_basis_norm(&power)));
        } else {
            points.push((n, sup_basis_norm(&mu.measure().power(n))));
        }
    }
    let values: Vec<f64> = points.iter().map(|p| p.1).collect();
    DecayCurve { verdict: decide(&values, threshold, FLAT_RATIO), points, threshold }
}

/// (EC) estimate: `sup_x ‖f_x ∗ S_n‖₁` with `S_n = (1/n) Σ_{k=1}^{n} μᵏ`.
pub fn empirical_ergodic(mu: &ProbabilityMeasure, n_max: u64, threshold: f64) -> DecayCurve {
    let schedule = dyadic_schedule(n_max);
    let mut points = Vec::with_capacity(schedule.len());
    let base = mu.measure();
    let mut power = base.clone();
    let mut running = base.clone();
    let mut next = schedule.iter().peekable();
    for k in 1..=n_max {
        if k > 1 {
            power = base.convolve(&power).expect("same group");
            running = &running + &power;
        }
        if next.peek() == Some(&&k) {
            next.next();
            let avg = running.scale(Complex64::new(1.0 / k as f64, 0.0));
            points.push((k, sup_basis_norm(&avg)));
        }
    }
    let values: Vec<f64> = points.iter().map(|p| p.1).collect();
    DecayCurve { verdict: decide(&values, threshold, FLAT_RATIO), points, threshold }
}

/// Bounded test functions `h` for the weak-mixing averages.
#[derive(Debug, Clone)]
pub struct TestFunctions {
    /// Include every matrix coefficient `x ↦ Λ_α(x)_{ij}` at orbit representatives.
    pub matrix_coefficients: bool,
    /// Additional functions given by their values over the canonical enumeration.
    pub extra: Vec<Vec<f64>>,
}

impl TestFunctions {
    /// All matrix coefficients plus `count` seeded random functions with values in `[−1, 1]`.
    pub fn standard(g: &MotionGroup, count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let extra = (0..count)
            .map(|_| (0..g.order()).map(|_| rng.random_range(-1.0..=1.0)).collect())
            .collect();
        Self { matrix_coefficients: true, extra }
    }
}

/// (WMC) estimate: Cesàro averages `(1/n) Σ_{k=1}^{n} |⟨f_x ∗ μᵏ, h⟩|`,
/// supremum over basis functions `f_x` and test functions `h`.
///
/// The verdict looks at the average over the second half of each dyadic
/// window, which vanishes geometrically for mixing walks and stays bounded
/// below otherwise.
pub fn empirical_weak_mixing(
    mu: &ProbabilityMeasure,
    n_max: u64,
    threshold: f64,
    tests: &TestFunctions,
) -> WeakMixingCurve {
    let g = mu.group().clone();
    let order = g.order();
    let kk = g.k_order();
    let elems: Vec<_> = g.elements().collect();

    // Matrix-coefficient channel: |[(Λ(x) − I) Λ(μ)^k]_{ij}|.
    struct Channel {
        step: CMatrix,
        power: CMatrix,
        reps: Vec<CMatrix>,
        sums: Vec<f64>,
    }
    let mut channels: Vec<Channel> = Vec::new();
    if tests.matrix_coefficients {
        for orbit in g.dual_orbits() {
            let step = rep::rep_of_measure(mu.measure(), &orbit.representative).matrix;
            let reps = elems
                .iter()
                .map(|x| rep::lambda_elem(&g, &orbit.representative, x).matrix - linalg::identity(kk))
                .collect();
            channels.push(Channel {
                power: linalg::identity(kk),
                step,
                reps,
                sums: vec![0.0; order * kk * kk],
            });
        }
    }
    let mut extra_sums = vec![vec![0.0; order]; tests.extra.len()];
    let test_function_count = channels.len() * kk * kk + tests.extra.len();

    let schedule = dyadic_schedule(n_max);
    let mut next = schedule.iter().peekable();
    let mut points = Vec::new();
    let mut tail_points = Vec::new();
    let mut previous: Option<(u64, Vec<f64>)> = None;
    let base = mu.measure();
    let mut power = GroupMeasure::identity(g.clone());

    for k in 1..=n_max {
        for ch in channels.iter_mut() {
            ch.power = &ch.power * &ch.step;
            for (xi, r) in ch.reps.iter().enumerate() {
                let prod = r * &ch.power;
                let slot = &mut ch.sums[xi * kk * kk..(xi + 1) * kk * kk];
                for (s, z) in slot.iter_mut().zip(prod.transpose().iter()) {
                    *s += z.norm();
                }
            }
        }
        if !tests.extra.is_empty() {
            power = base.convolve(&power).expect("same group");
            let pw: Vec<(usize, f64)> = power
                .weights()
                .iter()
                .enumerate()
                .filter(|(_, w)| w.re != 0.0)
                .map(|(i, w)| (i, w.re))
                .collect();
            for (h, sums) in tests.extra.iter().zip(extra_sums.iter_mut()) {
                for (x, s) in sums.iter_mut().enumerate() {
                    let mut c = 0.0;
                    for &(z, w) in &pw {
                        c += w * (h[g.mul_index(x, z)] - h[z]);
                    }
                    *s += c.abs();
                }
            }
        }
        if next.peek() == Some(&&k) {
            next.next();
            let flat: Vec<f64> = channels
                .iter()
                .flat_map(|c| c.sums.iter().copied())
                .chain(extra_sums.iter().flat_map(|s| s.iter().copied()))
                .collect();
            let sup = flat.iter().copied().fold(0.0, f64::max) / k as f64;
            points.push((k, sup));
            if let Some((k0, prev)) = &previous {
                let width = (k - k0) as f64;
                let tail = flat
                    .iter()
                    .zip(prev)
                    .map(|(a, b)| (a - b) / width)
                    .fold(0.0, f64::max);
                tail_points.push((k, tail));
            }
            previous = Some((k, flat));
        }
    }
    let tails: Vec<f64> = tail_points.iter().map(|p| p.1).collect();
    WeakMixingCurve {
        verdict: decide(&tails, threshold, WEAK_FLAT_RATIO),
        points,
        tail_points,
        threshold,
        test_function_count,
    }
}

/// `max_{α ≠ 0, j} ‖μ̂(Λ_α)ⁿ e_j‖` over nonzero orbit blocks.
pub fn strong_operator_decay(mu: &GroupMeasure, n: u64) -> f64 {
    spectral::orbit_blocks(mu)
        .into_iter()
        .filter(|(alpha, _)| !alpha.is_zero())
        .map(|(_, m)| max_column_norm(&linalg::matrix_power(&m, n)))
        .fold(0.0, f64::max)
}

/// `max_{α ≠ 0, j} ‖(1/n) Σ_{k=1}^{n} μ̂(Λ_α)ᵏ e_j‖` over nonzero orbit blocks.
pub fn cesaro_operator_decay(mu: &GroupMeasure, n: u64) -> f64 {
    spectral::orbit_blocks(mu)
        .into_iter()
        .filter(|(alpha, _)| !alpha.is_zero())
        .map(|(_, m)| {
            let size = m.nrows();
            let mut power = linalg::identity(size);
            let mut sum = linalg::zeros(size);
            for _ in 0..n {
                power = &power * &m;
                sum += &power;
            }
            max_column_norm(&(sum / Complex64::new(n as f64, 0.0)))
        })
        .fold(0.0, f64::max)
}

fn max_column_norm(m: &CMatrix) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .fold(0.0, f64::max)
}

/// Parameters for a full classification.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyConfig {
    pub tol: f64,
    pub n_max: u64,
    pub cesaro_n_max: u64,
    pub mixing_threshold: f64,
    pub ergodic_threshold: f64,
    pub weak_mixing_threshold: f64,
    pub random_test_functions: usize,
    pub seed: u64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            tol: spectral::DEFAULT_TOL,
            n_max: 1024,
            cesaro_n_max: 512,
            mixing_threshold: 1e-6,
            ergodic_threshold: 1e-3,
            weak_mixing_threshold: 1e-3,
            random_test_functions: 4,
            seed: 0,
        }
    }
}

/// All six conditions plus weak mixing and the implications they violate.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub sr: SpectralVerdict,
    pub s: SpectralVerdict,
    pub adapted: StructuralVerdict,
    pub strictly_aperiodic: StructuralVerdict,
    pub empirical_mixing: DecayCurve,
    pub empirical_ergodic: DecayCurve,
    pub weak_mixing_empirical: WeakMixingCurve,
    pub consistency: Vec<String>,
}

impl Verdict {
    /// (ASA): adapted and strictly aperiodic.
    pub fn aperiodic(&self) -> bool {
        self.adapted.holds && self.strictly_aperiodic.holds
    }

    pub fn any_indeterminate(&self) -> bool {
        self.sr.state == TriState::Indeterminate || self.s.state == TriState::Indeterminate
    }

    /// `(name, value)` for the conditions E, M, A, ASA, S, SR, WM; `None` when
    /// inconclusive.
    pub fn grid(&self) -> Vec<(&'static str, Option<bool>)> {
        vec![
            ("E", self.empirical_ergodic.verdict.conclusive()),
            ("M", self.empirical_mixing.verdict.conclusive()),
            ("A", Some(self.adapted.holds)),
            ("ASA", Some(self.aperiodic())),
            ("S", self.s.state.conclusive()),
            ("SR", self.sr.state.conclusive()),
            ("WM", self.weak_mixing_empirical.verdict.conclusive()),
        ]
    }
}

/// Evaluates everything and lists violated equivalences and implications.
pub fn cross_check(mu: &ProbabilityMeasure, cfg: &ClassifyConfig) -> Result<Verdict> {
    let tests = TestFunctions::standard(mu.group(), cfg.random_test_functions, cfg.seed);
    let verdict = Verdict {
        sr: check_sr(mu, cfg.tol)?,
        s: check_s(mu, cfg.tol)?,
        adapted: adapted(mu),
        strictly_aperiodic: strictly_aperiodic_check(mu)?,
        empirical_mixing: empirical_mixing(mu, cfg.n_max, cfg.mixing_threshold),
        empirical_ergodic: empirical_ergodic(mu, cfg.cesaro_n_max, cfg.ergodic_threshold),
        weak_mixing_empirical: empirical_weak_mixing(
            mu,
            cfg.cesaro_n_max,
            cfg.weak_mixing_threshold,
            &tests,
        ),
        consistency: Vec::new(),
    };
    let consistency = violations(&verdict);
    Ok(Verdict { consistency, ..verdict })
}

/// Violated relations among conclusive entries of the grid.
pub fn violations(v: &Verdict) -> Vec<String> {
    let grid: std::collections::HashMap<&str, Option<bool>> = v.grid().into_iter().collect();
    let mut out = Vec::new();
    let equivalences = [
        ("E", "A"),
        ("A", "S"),
        ("E", "S"),
        ("M", "ASA"),
        ("ASA", "SR"),
        ("M", "SR"),
        ("WM", "M"),
    ];
    for (p, q) in equivalences {
        if let (Some(a), Some(b)) = (grid[p], grid[q]) {
            if a != b {
                out.push(format!("({p}) <=> ({q})"));
            }
        }
    }
    let implications = [("E", "A"), ("M", "ASA"), ("SR", "S")];
    for (p, q) in implications {
        if let (Some(true), Some(false)) = (grid[p], grid[q]) {
            out.push(format!("({p}) => ({q})"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::GElem;
    use std::sync::Arc;

    fn d5() -> Arc<MotionGroup> {
        Arc::new(catalog::dihedral(5).unwrap())
    }

    fn prob(mu: GroupMeasure) -> ProbabilityMeasure {
        ProbabilityMeasure::new(mu).unwrap()
    }

    fn half_half(g: &Arc<MotionGroup>) -> ProbabilityMeasure {
        let r = g.index_of(&GElem::new(vec![1], 0));
        let s = g.index_of(&GElem::new(vec![0], 1));
        let mut w = vec![0.0; g.order()];
        w[r] = 0.5;
        w[s] = 0.5;
        prob(GroupMeasure::from_real(g.clone(), w).unwrap())
    }

    #[test]
    fn uniform_satisfies_everything() {
        let g = d5();
        let u = prob(GroupMeasure::uniform(g.clone()));
        let sr = check_sr(&u, 1e-8).unwrap();
        assert_eq!(sr.state, TriState::Holds);
        assert!(sr.blocks.iter().all(|b| b.value < 1e-12));
        assert_eq!(check_s(&u, 1e-8).unwrap().state, TriState::Holds);
        assert!(adapted(&u).holds);
        assert!(strictly_aperiodic_check(&u).unwrap().holds);
        let mix = empirical_mixing(&u, 1024, 1e-6);
        assert!(mix.points.iter().all(|p| p.1 < 1e-14));
        let erg = empirical_ergodic(&u, 512, 1e-3);
        assert!(erg.points.iter().all(|p| p.1 < 1e-14));
        let wm = empirical_weak_mixing(&u, 512, 1e-3, &TestFunctions::standard(&g, 2, 1));
        assert!(wm.points.iter().all(|p| p.1 < 1e-14));
        let v = cross_check(&u, &ClassifyConfig::default()).unwrap();
        assert!(v.grid().iter().all(|(_, x)| *x == Some(true)));
        assert!(v.consistency.is_empty());
    }

    #[test]
    fn identity_fails_everything() {
        let g = d5();
        let e = prob(GroupMeasure::identity(g.clone()));
        let sr = check_sr(&e, 1e-8).unwrap();
        assert_eq!(sr.state, TriState::Fails);
        assert!(sr.blocks.iter().all(|b| (b.value - 1.0).abs() < 1e-12));
        assert_eq!(check_s(&e, 1e-8).unwrap().state, TriState::Fails);
        let a = adapted(&e);
        assert!(!a.holds && a.subgroup_size == 1);
        let mix = empirical_mixing(&e, 64, 1e-6);
        assert!(mix.points.iter().all(|p| p.1 == 2.0));
        assert_eq!(mix.verdict, Empirical::Fails);
        let erg = empirical_ergodic(&e, 64, 1e-3);
        assert!(erg.points.iter().all(|p| p.1 == 2.0));
        assert_eq!(erg.verdict, Empirical::Fails);
        let v = cross_check(&e, &ClassifyConfig::default()).unwrap();
        assert!(v.grid().iter().all(|(_, x)| *x == Some(false)), "{:?}", v.grid());
        assert!(v.consistency.is_empty());
    }

    #[test]
    fn dihedral_half_half() {
        let g = d5();
        let mu = half_half(&g);
        let sr = check_sr(&mu, 1e-8).unwrap();
        assert_eq!(sr.state, TriState::Holds);
        assert_eq!(check_s(&mu, 1e-8).unwrap().state, TriState::Holds);
        assert!(strictly_aperiodic_check(&mu).unwrap().holds);
        // oracle: radius is cos(π/5) on the slow block, so n = 256 is far past 1e-9
        let p64 = mu.measure().power(256);
        for f in crate::measure::mean_zero_basis(&g) {
            assert!(f.convolve(&p64).unwrap().tv_norm() < 1e-9);
        }
        let v = cross_check(&mu, &ClassifyConfig::default()).unwrap();
        assert!(v.consistency.is_empty(), "{:?}", v.consistency);
        assert_eq!(v.empirical_mixing.verdict, Empirical::Holds);
    }

    #[test]
    fn subgroup_a_fails_at_lambda0_complement() {
        let g = d5();
        let mut w = vec![0.0; g.order()];
        for a in 0..5 {
            w[g.index_of(&GElem::new(vec![a], 0))] = 0.2;
        }
        let mu = prob(GroupMeasure::from_real(g.clone(), w).unwrap());
        let s = check_s(&mu, 1e-8).unwrap();
        assert_eq!(s.state, TriState::Fails);
        let witness = s.witness.unwrap();
        assert_eq!(witness.block, BlockId::Lambda0Complement);
        // recompute the failing quantity from the witness block
        let block = rep::lambda0_complement_block(mu.measure());
        assert!(linalg::max_abs_diff(&block, &linalg::identity(1)) < 1e-15);
        assert!((spectral::one_in_spectrum(&block, 1e-8).margin - witness.value).abs() < 1e-15);
    }

    #[test]
    fn structural_examples() {
        let g = d5();
        let r = g.index_of(&GElem::new(vec![1], 0));
        let mu = prob(GroupMeasure::point(g.clone(), r));
        let a = adapted(&mu);
        assert!(!a.holds && a.subgroup_size == 5);
        let sa = strictly_aperiodic_check(&mu).unwrap();
        assert!(!sa.holds && sa.subgroup_size == 1);
        let u = prob(GroupMeasure::uniform(g));
        assert!(strictly_aperiodic_check(&u).unwrap().holds);
    }

    #[test]
    fn order_two_point_mass_is_ergodic_not_mixing() {
        let (g, mu) = catalog::order_two_witness();
        let mu = prob(mu);
        let erg = empirical_ergodic(&mu, 512, 1e-3);
        assert_eq!(erg.verdict, Empirical::Holds);
        // S_n = ½(δ_0 + δ_1) for even n
        assert!(erg.points.iter().skip(1).all(|p| p.1 < 1e-15));
        assert!((erg.points[0].1 - 2.0).abs() < 1e-15);
        let mix = empirical_mixing(&mu, 1024, 1e-6);
        assert_eq!(mix.verdict, Empirical::Fails);
        assert_eq!(check_s(&mu, 1e-8).unwrap().state, TriState::Holds);
        assert_eq!(check_sr(&mu, 1e-8).unwrap().state, TriState::Fails);
        let wm = empirical_weak_mixing(&mu, 512, 1e-3, &TestFunctions::standard(&g, 2, 3));
        assert_eq!(wm.verdict, Empirical::Fails);
        let v = cross_check(&mu, &ClassifyConfig::default()).unwrap();
        assert!(v.consistency.is_empty(), "{:?}", v.consistency);
    }

    #[test]
    fn mixing_curve_sits_under_spectral_envelope() {
        let g = Arc::new(catalog::multiplicative(7, 3, 2).unwrap());
        let mu = prob(catalog::weighted(&g, &[0, 4, 8], 0.2, &mut ChaCha8Rng::seed_from_u64(5)));
        let sr = check_sr(&mu, 1e-8).unwrap();
        assert_eq!(sr.state, TriState::Holds);
        let rho = sr.witness.unwrap().value;
        let curve = empirical_mixing(&mu, 1024, 1e-6);
        let order = g.order() as f64;
        // eventually below |G|·ρⁿ up to a polynomial factor from non-normal blocks
        for &(n, v) in curve.points.iter().filter(|p| p.0 >= 16) {
            assert!(v <= 2.0f64.min(order * order * rho.powi(n as i32) * n as f64) + 1e-12, "n={n} v={v}");
        }
    }

    #[test]
    fn decision_rules() {
        assert_eq!(decide(&[1.0, 0.5, 1e-7], 1e-6, FLAT_RATIO), Empirical::Holds);
        assert_eq!(decide(&[2.0, 2.0, 2.0], 1e-6, FLAT_RATIO), Empirical::Fails);
        assert_eq!(decide(&[2.0, 1.0, 0.5], 1e-6, FLAT_RATIO), Empirical::Inconclusive);
        assert_eq!(dyadic_schedule(10), vec![1, 2, 4, 8, 10]);
        assert_eq!(dyadic_schedule(8), vec![1, 2, 4, 8]);
    }

    #[test]
    fn operator_decay_diagnostics() {
        let g = d5();
        let mu = half_half(&g);
        assert!(strong_operator_decay(mu.measure(), 1024) < 1e-6);
        assert!(cesaro_operator_decay(mu.measure(), 512) < 1e-2);
        let e = GroupMeasure::identity(g);
        assert!((strong_operator_decay(&e, 1024) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn not_probability_is_rejected() {
        let g = d5();
        let m = GroupMeasure::point(g, 1).scale(Complex64::new(0.0, 1.0));
        assert!(matches!(ProbabilityMeasure::new(m), Err(Error::NotProbability(_))));
    }
}
