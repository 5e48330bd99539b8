//! Exact arithmetic for a measure on `Z² ⋊ Z` that is aperiodic yet has `1`
//! in the approximate point spectrum of an irreducible representation.
//!
//! `Z` acts on row vectors by `n ↦ nΓ` with `Γ = [[1,2],[2,3]]`, so
//! `(n,k)(m,l) = (n + mΓᵏ, k + l)`. With `a = (0,0,1)`, `b = (1,2,1)`,
//! `c = (2,3,1)` the measure is `μ = ¼(δ_a + δ_b + δ_{bc} + δ_{c²})`.
//! On `ℓ²(Z)` the representation
//! `[Λ_t(n,k)φ](m) = exp(2πi tΓ^{-m}n′) φ(m−k)` is unitary, and for a left
//! eigenvector `t` of `Γ⁻¹` with eigenvalue `λ = √5 − 2` the normalized
//! indicators `φ_n` are approximate fixed vectors of `Λ_t(μ)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `x + y√5` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    pub x: BigRational,
    pub y: BigRational,
}

impl QSqrt5 {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    pub fn from_integer(x: BigInt) -> Self {
        Self::new(BigRational::from_integer(x), BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Galois conjugate `x − y√5`.
    pub fn conj(&self) -> Self {
        Self::new(self.x.clone(), -self.y.clone())
    }

    /// Field norm `x² − 5y²`.
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - BigRational::from_integer(5.into()) * &self.y * &self.y
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(&self.x / &n, -&self.y / &n))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Nearest double. Opposite-sign coefficients go through
    /// `norm / conj` so that cancellation never happens in floating point,
    /// and all conversions carry a separate binary exponent.
    pub fn to_f64(&self) -> f64 {
        let sqrt5 = 5f64.sqrt();
        let den = if self.x.denom() == self.y.denom() {
            self.x.denom().clone()
        } else {
            self.x.denom().lcm(self.y.denom())
        };
        let xs = self.x.numer() * (&den / self.x.denom());
        let ys = self.y.numer() * (&den / self.y.denom());
        let (mx, ex) = scaled(&xs, &den);
        let (my, ey) = scaled(&ys, &den);
        if mx == 0.0 || my == 0.0 || (mx > 0.0) == (my > 0.0) {
            return ldexp(mx, ex) + sqrt5 * ldexp(my, ey);
        }
        // x + y√5 = (x² − 5y²) / (x − y√5) with x = X/D, y = Y/D
        let norm = &xs * &xs - BigInt::from(5) * &ys * &ys;
        let (mn, en) = scaled(&norm, &(&den * &den));
        let top = ex.max(ey);
        let conj = ldexp(mx, ex - top) - sqrt5 * ldexp(my, ey - top);
        ldexp(mn / conj, en - top)
    }
}

/// `p/q = m · 2^e` with `|m|` in `[2^63, 2^65)`, or `(0, 0)`; `q > 0`.
fn scaled(p: &BigInt, q: &BigInt) -> (f64, i64) {
    if p.is_zero() {
        return (0.0, 0);
    }
    let e = p.bits() as i64 - q.bits() as i64 - 64;
    let (num, den) = if e >= 0 {
        (p.clone(), q << (e as usize))
    } else {
        (p << ((-e) as usize), q.clone())
    };
    let m = (num / den).to_f64().expect("quotient fits");
    (m, e)
}

fn ldexp(mut m: f64, mut e: i64) -> f64 {
    const STEP: i64 = 1000;
    let big = 2f64.powi(STEP as i32);
    while e > STEP {
        m *= big;
        e -= STEP;
        if m.is_infinite() {
            return m;
        }
    }
    while e < -STEP {
        m /= big;
        e += STEP;
        if m == 0.0 {
            return 0.0;
        }
    }
    m * 2f64.powi(e as i32)
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√5", self.x, self.y)
    }
}

impl Serialize for QSqrt5 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QSqrt5", 2)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("y", &self.y.to_string())?;
        st.end()
    }
}

impl<'a> Add for &'a QSqrt5 {
    type Output = QSqrt5;
    fn add(self, o: &'a QSqrt5) -> QSqrt5 {
        QSqrt5::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl<'a> Sub for &'a QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, o: &'a QSqrt5) -> QSqrt5 {
        QSqrt5::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl<'a> Mul for &'a QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, o: &'a QSqrt5) -> QSqrt5 {
        let five = BigRational::from_integer(5.into());
        QSqrt5::new(
            &self.x * &o.x + five * &self.y * &o.y,
            &self.x * &o.y + &self.y * &o.x,
        )
    }
}

impl Neg for &QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5::new(-self.x.clone(), -self.y.clone())
    }
}

/// `2 × 2` integer matrix acting on row vectors from the right.
pub type Mat2 = [[BigInt; 2]; 2];

pub fn gamma() -> Mat2 {
    [[1.into(), 2.into()], [2.into(), 3.into()]]
}

pub fn gamma_inverse() -> Mat2 {
    [[(-3).into(), 2.into()], [2.into(), (-1).into()]]
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `Γᵏ` for any integer `k`.
pub fn gamma_pow(k: i64) -> Mat2 {
    let mut base = if k >= 0 { gamma() } else { gamma_inverse() };
    let mut e = k.unsigned_abs();
    let mut acc: Mat2 = [[1.into(), 0.into()], [0.into(), 1.into()]];
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        base = mat_mul(&base, &base);
        e >>= 1;
    }
    acc
}

fn row_times(v: &[BigInt; 2], m: &Mat2) -> [BigInt; 2] {
    [&v[0] * &m[0][0] + &v[1] * &m[1][0], &v[0] * &m[0][1] + &v[1] * &m[1][1]]
}

/// Element `(n₁, n₂, k)` of `Z² ⋊ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ZElem {
    #[serde(serialize_with = "ser_big")]
    pub n1: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub n2: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub k: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl ZElem {
    pub fn new(n1: i64, n2: i64, k: i64) -> Self {
        Self { n1: n1.into(), n2: n2.into(), k: k.into() }
    }

    pub fn identity() -> Self {
        Self::new(0, 0, 0)
    }

    fn k_i64(&self) -> i64 {
        self.k.to_i64().expect("k-component fits in i64")
    }

    pub fn vector(&self) -> [BigInt; 2] {
        [self.n1.clone(), self.n2.clone()]
    }
}

impl fmt::Display for ZElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n1, self.n2, self.k)
    }
}

/// `(n,k)(m,l) = (n + mΓᵏ, k + l)`.
pub fn z_multiply(x: &ZElem, y: &ZElem) -> ZElem {
    let moved = row_times(&y.vector(), &gamma_pow(x.k_i64()));
    ZElem { n1: &x.n1 + &moved[0], n2: &x.n2 + &moved[1], k: &x.k + &y.k }
}

/// `(n,k)⁻¹ = (−nΓ^{−k}, −k)`.
pub fn z_inverse(x: &ZElem) -> ZElem {
    let moved = row_times(&x.vector(), &gamma_pow(-x.k_i64()));
    ZElem { n1: -&moved[0], n2: -&moved[1], k: -&x.k }
}

/// The generators `a`, `b`, `c`.
pub fn generators() -> [ZElem; 3] {
    [ZElem::new(0, 0, 1), ZElem::new(1, 2, 1), ZElem::new(2, 3, 1)]
}

/// Atoms `a, b, bc, c²` with weight `¼` each.
pub fn rosenblatt_measure() -> Vec<(ZElem, f64)> {
    let [a, b, c] = generators();
    let bc = z_multiply(&b, &c);
    let cc = z_multiply(&c, &c);
    vec![(a, 0.25), (b, 0.25), (bc, 0.25), (cc, 0.25)]
}

/// Left eigenvector `t = (1, (1+√5)/2)` of `Γ⁻¹` and its eigenvalue `λ = √5 − 2`.
#[derive(Debug, Clone, Serialize)]
pub struct EigenParameter {
    pub t: [QSqrt5; 2],
    pub lambda: QSqrt5,
}

pub fn eigen_parameter() -> EigenParameter {
    let half = BigRational::new(1.into(), 2.into());
    EigenParameter {
        t: [QSqrt5::one(), QSqrt5::new(half.clone(), half)],
        lambda: QSqrt5::from_ints(-2, 1),
    }
}

/// `tM` for a row vector `t` over `Q(√5)` and an integer matrix `M`.
pub fn row_apply(t: &[QSqrt5; 2], m: &Mat2) -> [QSqrt5; 2] {
    let c = |i: usize, j: usize| QSqrt5::from_integer(m[i][j].clone());
    [
        &(&t[0] * &c(0, 0)) + &(&t[1] * &c(1, 0)),
        &(&t[0] * &c(0, 1)) + &(&t[1] * &c(1, 1)),
    ]
}

/// `t · v′` for an integer vector `v`.
pub fn dot(t: &[QSqrt5; 2], v: &[BigInt; 2]) -> QSqrt5 {
    &(&t[0] * &QSqrt5::from_integer(v[0].clone())) + &(&t[1] * &QSqrt5::from_integer(v[1].clone()))
}

/// `exp(2πi q)`. The nearest integer is subtracted exactly before the
/// conversion to double.
pub fn phase(q: &QSqrt5) -> Complex64 {
    let approx = q.to_f64().round();
    let shifted = match BigInt::from_f64(approx) {
        Some(r) if !r.is_zero() => q - &QSqrt5::from_integer(r),
        _ => q.clone(),
    };
    let frac = shifted.to_f64();
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * frac)
}

/// `λ` if `tΓ⁻¹ = λt`, for the eigenvalue `λ = √5 − 2`.
fn eigen_scalar(t: &[QSqrt5; 2]) -> Option<QSqrt5> {
    let lambda = eigen_parameter().lambda;
    let moved = row_apply(t, &gamma_inverse());
    (moved[0] == &lambda * &t[0] && moved[1] == &lambda * &t[1]).then_some(lambda)
}

/// Finitely supported vector in `ℓ²(Z)`: `values[i]` sits at `offset + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowVector {
    pub offset: i64,
    pub values: Vec<Complex64>,
}

impl WindowVector {
    /// `φ_n = n^{-1/2} 1_{[0,n)}`.
    pub fn indicator(n: usize) -> Self {
        let v = 1.0 / (n as f64).sqrt();
        Self { offset: 0, values: vec![Complex64::new(v, 0.0); n] }
    }

    pub fn get(&self, m: i64) -> Complex64 {
        let i = m - self.offset;
        if i < 0 || i as usize >= self.values.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[i as usize]
        }
    }

    pub fn end(&self) -> i64 {
        self.offset + self.values.len() as i64
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let (lo, hi) = match (self.values.is_empty(), other.values.is_empty()) {
            (true, _) => (other.offset, other.end()),
            (_, true) => (self.offset, self.end()),
            _ => (self.offset.min(other.offset), self.end().max(other.end())),
        };
        Self { offset: lo, values: (lo..hi).map(|m| f(self.get(m), other.get(m))).collect() }
    }

    /// `self + other` on the union of the windows.
    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self − other` on the union of the windows.
    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }
}

/// Phase exponents `tΓ^{-m}v` for `m` in `range`, one vector per entry of `vs`.
fn phase_exponents(t: &[QSqrt5; 2], vs: &[[BigInt; 2]], range: std::ops::Range<i64>) -> Vec<Vec<QSqrt5>> {
    let start = range.start;
    let len = (range.end - range.start).max(0) as usize;
    match eigen_scalar(t) {
        Some(lambda) => {
            // tΓ^{-m} = λᵐ t, with λᵐ = p + q√5 kept in Z[√5]
            let base: Vec<(BigInt, BigInt, BigInt)> = vs
                .iter()
                .map(|v| {
                    let b = dot(t, v);
                    let den = b.x.denom().lcm(b.y.denom());
                    let xs = b.x.numer() * (&den / b.x.denom());
                    let ys = b.y.numer() * (&den / b.y.denom());
                    (xs, ys, den)
                })
                .collect();
            let start_power = if start >= 0 {
                lambda.pow(start as u64)
            } else {
                lambda.inverse().expect("unit").pow(start.unsigned_abs())
            };
            let mut p = start_power.x.to_integer();
            let mut q = start_power.y.to_integer();
            let five = BigInt::from(5);
            (0..len)
                .map(|_| {
                    let row = base
                        .iter()
                        .map(|(bx, by, den)| {
                            QSqrt5::new(
                                BigRational::new_raw(&p * bx + &five * &q * by, den.clone()),
                                BigRational::new_raw(&p * by + &q * bx, den.clone()),
                            )
                        })
                        .collect();
                    // (p + q√5)(−2 + √5)
                    let np = &five * &q - &p * 2;
                    let nq = &p - &q * 2;
                    p = np;
                    q = nq;
                    row
                })
                .collect()
        }
        None => {
            let mut row = row_apply(t, &gamma_pow(-start));
            let step = gamma_inverse();
            (0..len)
                .map(|_| {
                    let out = vs.iter().map(|v| dot(&row, v)).collect();
                    row = row_apply(&row, &step);
                    out
                })
                .collect()
        }
    }
}

/// `Λ_t(μ)φ` via
/// `(Λ_t(μ)φ)(m) = ¼[1 + e₁(m)]φ(m−1) + ¼[e₂(m) + e₃(m)]φ(m−2)` with
/// `e_i(m) = exp(2πi tΓ^{-m}v_i)` for `v = (1,2), (9,15), (10,16)`.
/// The output window is the input window extended by two slots on the right.
pub fn apply_lambda_mu(t: &[QSqrt5; 2], phi: &WindowVector) -> WindowVector {
    let atoms = rosenblatt_measure();
    let vs: Vec<[BigInt; 2]> = atoms[1..].iter().map(|(x, _)| x.vector()).collect();
    let lo = phi.offset;
    let hi = phi.end() + 2;
    let exps = phase_exponents(t, &vs, lo..hi);
    let quarter = 0.25;
    let values = (lo..hi)
        .zip(exps)
        .map(|(m, e)| {
            let e: Vec<Complex64> = e.iter().map(phase).collect();
            (Complex64::new(1.0, 0.0) + e[0]) * quarter * phi.get(m - 1)
                + (e[1] + e[2]) * quarter * phi.get(m - 2)
        })
        .collect();
    WindowVector { offset: lo, values }
}

/// `Λ_t(x)φ` for one group element, with `tΓ^{-m}` formed from integer
/// matrix powers.
pub fn apply_element(t: &[QSqrt5; 2], x: &ZElem, phi: &WindowVector) -> WindowVector {
    let k = x.k_i64();
    let lo = phi.offset + k;
    let hi = phi.end() + k;
    let step = gamma_inverse();
    let mut row = row_apply(t, &gamma_pow(-lo));
    let v = x.vector();
    let values = (lo..hi)
        .map(|m| {
            let out = phase(&dot(&row, &v)) * phi.get(m - k);
            row = row_apply(&row, &step);
            out
        })
        .collect();
    WindowVector { offset: lo, values }
}

/// `Σ μ(x) Λ_t(x)φ` summed atom by atom.
pub fn apply_direct(t: &[QSqrt5; 2], phi: &WindowVector) -> WindowVector {
    let mut acc = WindowVector { offset: phi.offset, values: Vec::new() };
    for (x, w) in rosenblatt_measure() {
        let mut term = apply_element(t, &x, phi);
        term.values.iter_mut().for_each(|z| *z *= w);
        acc = acc.add(&term);
    }
    acc
}

/// `‖Λ_t(μ)φ_n − φ_n‖²` computed two ways.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DefectNorm {
    pub n: usize,
    pub direct: f64,
    pub closed_form: f64,
}

/// The defect of `φ_n`, directly and from the expansion
///
/// ```text
/// 1/n + (1/16n)|1 + e₁(1) − 4|² + (1/16n)|e₂(n+1) + e₃(n+1)|²
///     + (1/16n)|1 + e₁(n) + e₂(n) + e₃(n)|²
///     + (1/16n) Σ_{j=2}^{n−1} |1 + e₁(j) + e₂(j) + e₃(j) − 4|².
/// ```
pub fn defect_norm(t: &[QSqrt5; 2], n: usize) -> Result<DefectNorm> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("defect needs n >= 3, got {n}")));
    }
    let phi = WindowVector::indicator(n);
    let direct = apply_lambda_mu(t, &phi).sub(&phi).norm_sqr();

    let vs: Vec<[BigInt; 2]> = rosenblatt_measure()[1..].iter().map(|(x, _)| x.vector()).collect();
    let e: Vec<Vec<Complex64>> = phase_exponents(t, &vs, 0..n as i64 + 2)
        .iter()
        .map(|row| row.iter().map(phase).collect())
        .collect();
    let one = Complex64::new(1.0, 0.0);
    let four = Complex64::new(4.0, 0.0);
    let full = |j: usize| one + e[j][0] + e[j][1] + e[j][2];
    let scale = 1.0 / (16.0 * n as f64);
    let mut closed = 1.0 / n as f64
        + scale * (one + e[1][0] - four).norm_sqr()
        + scale * (e[n + 1][1] + e[n + 1][2]).norm_sqr()
        + scale * full(n).norm_sqr();
    closed += scale * (2..n).map(|j| (full(j) - four).norm_sqr()).sum::<f64>();
    Ok(DefectNorm { n, direct, closed_form: closed })
}

/// Shortest word lengths at which the standard generators
/// `(1,0,0)`, `(0,1,0)`, `(0,0,1)` were reached, if all were.
#[derive(Debug, Clone, Serialize)]
pub struct AperiodicityWitness {
    pub adapted: bool,
    pub strictly_aperiodic: bool,
    pub adapted_lengths: Option<[usize; 3]>,
    pub strict_lengths: Option<[usize; 3]>,
    pub max_word_length: usize,
}

impl AperiodicityWitness {
    pub fn holds(&self) -> bool {
        self.adapted && self.strictly_aperiodic
    }
}

fn standard_generators() -> [ZElem; 3] {
    [ZElem::new(1, 0, 0), ZElem::new(0, 1, 0), ZElem::new(0, 0, 1)]
}

/// Breadth-first search from `seeds` under `moves`. Returns the depth at
/// which each target first appears, or `None` if some target is missing
/// after `max_depth` rounds.
fn bfs_reach(
    seeds: &[ZElem],
    moves: impl Fn(&ZElem) -> Vec<ZElem>,
    targets: &[ZElem; 3],
    max_depth: usize,
    budget: usize,
) -> Result<Option<[usize; 3]>> {
    let mut depth: HashMap<ZElem, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if depth.insert(s.clone(), 1).is_none() {
            queue.push_back(s.clone());
        }
    }
    let found = |depth: &HashMap<ZElem, usize>| -> Option<[usize; 3]> {
        let mut out = [0; 3];
        for (slot, t) in out.iter_mut().zip(targets) {
            *slot = *depth.get(t)?;
        }
        Some(out)
    };
    while let Some(x) = queue.pop_front() {
        if let Some(done) = found(&depth) {
            return Ok(Some(done));
        }
        let d = depth[&x];
        if d >= max_depth {
            continue;
        }
        for y in moves(&x) {
            if !depth.contains_key(&y) {
                if depth.len() >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                depth.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    Ok(found(&depth))
}

/// Default cap on visited elements for [`aperiodicity_witness`].
pub const WITNESS_BUDGET: usize = 2_000_000;

/// Reaches the standard generators by words in `supp μ ∪ (supp μ)⁻¹`
/// (adaptedness) and by products and conjugates of the differences
/// `s₀⁻¹s` (strict aperiodicity), up to `max_word_length` steps.
pub fn aperiodicity_witness(max_word_length: usize, budget: usize) -> Result<AperiodicityWitness> {
    if max_word_length == 0 {
        return Err(Error::InvalidParameters("max_word_length must be >= 1".into()));
    }
    let support: Vec<ZElem> = rosenblatt_measure().into_iter().map(|(x, _)| x).collect();
    let targets = standard_generators();

    let mut letters = support.clone();
    letters.extend(support.iter().map(z_inverse));
    let adapted_lengths = bfs_reach(
        &letters,
        |x| letters.iter().map(|l| z_multiply(x, l)).collect(),
        &targets,
        max_word_length,
        budget,
    )?;

    let s0inv = z_inverse(&support[0]);
    let mut diffs: Vec<ZElem> = support
        .iter()
        .map(|s| z_multiply(&s0inv, s))
        .filter(|d| *d != ZElem::identity())
        .collect();
    diffs.extend(diffs.clone().iter().map(z_inverse));
    let conjugators: Vec<(ZElem, ZElem)> = targets
        .iter()
        .flat_map(|g| {
            let gi = z_inverse(g);
            [(g.clone(), gi.clone()), (gi, g.clone())]
        })
        .collect();
    let strict_lengths = bfs_reach(
        &diffs,
        |x| {
            let mut out: Vec<ZElem> = diffs.iter().map(|d| z_multiply(x, d)).collect();
            out.extend(conjugators.iter().map(|(g, gi)| z_multiply(&z_multiply(g, x), gi)));
            out
        },
        &targets,
        max_word_length,
        budget,
    )?;
    Ok(AperiodicityWitness {
        adapted: adapted_lengths.is_some(),
        strictly_aperiodic: strict_lengths.is_some(),
        adapted_lengths,
        strict_lengths,
        max_word_length,
    })
}

/// All elements reachable by words of length `≤ len` in `supp μ ∪ (supp μ)⁻¹`.
pub fn word_ball(len: usize) -> HashSet<ZElem> {
    let support: Vec<ZElem> = rosenblatt_measure().into_iter().map(|(x, _)| x).collect();
    let mut letters = support.clone();
    letters.extend(support.iter().map(z_inverse));
    let mut ball: HashSet<ZElem> = HashSet::from([ZElem::identity()]);
    let mut frontier = vec![ZElem::identity()];
    for _ in 0..len {
        let mut next = Vec::new();
        for x in &frontier {
            for l in &letters {
                let y = z_multiply(x, l);
                if ball.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    ball
}

/// Table for `n_list` together with `λ` and `t`.
#[derive(Debug, Clone, Serialize)]
pub struct RosenblattReport {
    pub lambda: QSqrt5,
    pub t: [QSqrt5; 2],
    pub rows: Vec<DefectNorm>,
}

pub fn report(n_list: &[usize]) -> Result<RosenblattReport> {
    use rayon::prelude::*;
    let ep = eigen_parameter();
    let rows = n_list
        .par_iter()
        .map(|&n| defect_norm(&ep.t, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(RosenblattReport { lambda: ep.lambda, t: ep.t, rows })
}
