//! Complex measures on a finite motion group.
//!
//! Haar measure is counting measure, so every measure is a function on `G`
//! and is stored as a dense weight vector over the canonical enumeration.
//! There is no singular part to track.

use std::collections::HashSet;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{Character, KGroup, MotionGroup};

/// Tolerance for the probability check on total mass and imaginary parts.
pub const PROBABILITY_TOL: f64 = 1e-12;

/// Finitely supported complex measure on `G`.
#[derive(Debug, Clone)]
pub struct GroupMeasure {
    group: Arc<MotionGroup>,
    weights: Vec<Complex64>,
}

impl GroupMeasure {
    pub fn new(group: Arc<MotionGroup>, weights: Vec<Complex64>) -> Result<Self> {
        if weights.len() != group.order() {
            return Err(Error::InvalidParameters(format!(
                "measure has {} weights but |G| = {}",
                weights.len(),
                group.order()
            )));
        }
        Ok(Self { group, weights })
    }

    pub fn from_real(group: Arc<MotionGroup>, weights: Vec<f64>) -> Result<Self> {
        Self::new(group, weights.into_iter().map(|w| Complex64::new(w, 0.0)).collect())
    }

    pub fn zero(group: Arc<MotionGroup>) -> Self {
        let n = group.order();
        Self { group, weights: vec![Complex64::new(0.0, 0.0); n] }
    }

    /// Point mass `δ_x` at canonical index `x`.
    pub fn point(group: Arc<MotionGroup>, x: usize) -> Self {
        let mut m = Self::zero(group);
        m.weights[x] = Complex64::new(1.0, 0.0);
        m
    }

    pub fn identity(group: Arc<MotionGroup>) -> Self {
        let e = group.identity_index();
        Self::point(group, e)
    }

    /// Normalized Haar measure.
    pub fn uniform(group: Arc<MotionGroup>) -> Self {
        let n = group.order();
        Self { group, weights: vec![Complex64::new(1.0 / n as f64, 0.0); n] }
    }

    pub fn group(&self) -> &Arc<MotionGroup> {
        &self.group
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn weight(&self, x: usize) -> Complex64 {
        self.weights[x]
    }

    pub fn same_group(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }

    pub fn support(&self) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| w.norm_sqr() > 0.0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn total_mass(&self) -> Complex64 {
        self.weights.iter().sum()
    }

    /// `‖μ‖ = Σ |μ(x)|`.
    pub fn tv_norm(&self) -> f64 {
        self.weights.iter().map(|w| w.norm()).sum()
    }

    pub fn conj(&self) -> Self {
        self.map(|w| w.conj())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|w| w * c)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { group: self.group.clone(), weights: self.weights.iter().map(|&w| f(w)).collect() }
    }

    /// `(μ∗ν)(x) = Σ_y μ(y) ν(y⁻¹x)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        if !self.same_group(other) {
            return Err(Error::GroupMismatch);
        }
        let g = &self.group;
        let order = g.order();
        let table = g.mul_table();
        let left: Vec<(usize, Complex64)> = nonzero(&self.weights);
        let right: Vec<(usize, Complex64)> = nonzero(&other.weights);
        let mut out = vec![Complex64::new(0.0, 0.0); order];
        for &(y, wy) in &left {
            let row = &table[y * order..(y + 1) * order];
            for &(z, wz) in &right {
                out[row[z] as usize] += wy * wz;
            }
        }
        Ok(Self { group: g.clone(), weights: out })
    }

    /// `μⁿ` by binary powering; `μ⁰ = δ_e`.
    pub fn power(&self, mut n: u64) -> Self {
        let mut result = Self::identity(self.group.clone());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.convolve(&base).expect("same group");
            }
            n >>= 1;
            if n > 0 {
                base = base.convolve(&base).expect("same group");
            }
        }
        result
    }

    /// Pushforward `π_K(μ)(κ) = Σ_a μ(a, κ)`.
    pub fn push_k(&self) -> KMeasure {
        let m = self.group.k_order();
        let mut w = vec![Complex64::new(0.0, 0.0); m];
        for (i, &x) in self.weights.iter().enumerate() {
            w[i % m] += x;
        }
        KMeasure { weights: w }
    }

    /// Checks the probability conditions (real, nonnegative, unit mass).
    pub fn check_probability(&self) -> Result<()> {
        for (i, w) in self.weights.iter().enumerate() {
            if w.im.abs() > PROBABILITY_TOL {
                return Err(Error::NotProbability(format!("weight {i} has imaginary part {}", w.im)));
            }
            if w.re < -PROBABILITY_TOL {
                return Err(Error::NotProbability(format!("weight {i} is negative ({})", w.re)));
            }
        }
        let mass = self.total_mass().re;
        if (mass - 1.0).abs() > PROBABILITY_TOL {
            return Err(Error::NotProbability(format!("total mass is {mass}")));
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn nonzero(w: &[Complex64]) -> Vec<(usize, Complex64)> {
    w.iter()
        .enumerate()
        .filter(|(_, x)| x.re != 0.0 || x.im != 0.0)
        .map(|(i, &x)| (i, x))
        .collect()
}

impl Add for &GroupMeasure {
    type Output = GroupMeasure;
    fn add(self, rhs: &GroupMeasure) -> GroupMeasure {
        assert!(self.same_group(rhs), "measures on different groups");
        GroupMeasure {
            group: self.group.clone(),
            weights: self.weights.iter().zip(&rhs.weights).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &GroupMeasure {
    type Output = GroupMeasure;
    fn sub(self, rhs: &GroupMeasure) -> GroupMeasure {
        assert!(self.same_group(rhs), "measures on different groups");
        GroupMeasure {
            group: self.group.clone(),
            weights: self.weights.iter().zip(&rhs.weights).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&GroupMeasure> for &GroupMeasure {
    type Output = GroupMeasure;
    fn mul(self, rhs: &GroupMeasure) -> GroupMeasure {
        self.convolve(rhs).expect("measures on different groups")
    }
}

/// A measure already validated as a probability measure.
#[derive(Debug, Clone)]
pub struct ProbabilityMeasure(GroupMeasure);

impl ProbabilityMeasure {
    pub fn new(mu: GroupMeasure) -> Result<Self> {
        mu.check_probability()?;
        Ok(Self(mu))
    }

    pub fn measure(&self) -> &GroupMeasure {
        &self.0
    }

    pub fn group(&self) -> &Arc<MotionGroup> {
        self.0.group()
    }

    /// Real weights.
    pub fn probabilities(&self) -> Vec<f64> {
        self.0.weights().iter().map(|w| w.re.max(0.0)).collect()
    }

    pub fn into_inner(self) -> GroupMeasure {
        self.0
    }
}

impl TryFrom<GroupMeasure> for ProbabilityMeasure {
    type Error = Error;
    fn try_from(mu: GroupMeasure) -> Result<Self> {
        Self::new(mu)
    }
}

/// Complex measure on `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct KMeasure {
    pub weights: Vec<Complex64>,
}

impl KMeasure {
    pub fn convolve(&self, other: &Self, k: &KGroup) -> Self {
        let m = k.order();
        let mut w = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..m {
            for j in 0..m {
                w[k.mul(i, j)] += self.weights[i] * other.weights[j];
            }
        }
        Self { weights: w }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// The central measure `ν = h ⊗ δ_1` with `h` the inverse Fourier transform on
/// `A` of the indicator of `s`, so that `ν̂(Λ_α) = 1_s(α)·I`.
pub fn central_measure(g: &Arc<MotionGroup>, s: &[Character]) -> Result<GroupMeasure> {
    let set: HashSet<&Character> = s.iter().collect();
    if set.iter().any(|c| c.is_zero()) {
        return Err(Error::ContainsZeroCharacter);
    }
    for alpha in &set {
        if !g.abelian().is_valid(&alpha.0) {
            return Err(Error::InvalidElement(format!("character {:?}", alpha.0)));
        }
        for k in 0..g.k_order() {
            if !set.contains(&g.dual_action(k, alpha)) {
                return Err(Error::NotOrbitClosed);
            }
        }
    }
    let a_order = g.abelian().order();
    let m = g.k_order();
    let mut w = vec![Complex64::new(0.0, 0.0); g.order()];
    for ai in 0..a_order {
        let a = g.abelian().vector_at(ai);
        let h: Complex64 = set.iter().map(|alpha| g.pairing(&a, alpha)).sum();
        w[ai * m] = h / a_order as f64;
    }
    GroupMeasure::new(g.clone(), w)
}

/// `f_x = δ_x − δ_e` for every `x ≠ e`: a basis of the mean-zero functions.
pub fn mean_zero_basis(g: &Arc<MotionGroup>) -> Vec<GroupMeasure> {
    let e = g.identity_index();
    (0..g.order())
        .filter(|&x| x != e)
        .map(|x| &GroupMeasure::point(g.clone(), x) - &GroupMeasure::identity(g.clone()))
        .collect()
}
