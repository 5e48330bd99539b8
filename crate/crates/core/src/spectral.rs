//! Spectral quantities of measures: block spectra over the induced
//! representations, the Gelfand radius `lim ‖μⁿ‖^{1/n}` in `M(G)`, the
//! `D*(G)` norm, and a numerical check of the spectral radius formula
//!
//! `ϱ(μ) = sup_α ϱ(μ̂(Λ_α)) ∨ inf_n ‖(μⁿ)_s‖^{1/n}`.
//!
//! On a discrete group the singular part of every measure is zero, so the
//! second term is identically 0.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Character;
use crate::linalg::{self, CMatrix};
use crate::measure::GroupMeasure;
use crate::rep::{self, compress_to_complement};

pub use crate::linalg::spectral_radius;

/// Default guard band for spectral verdicts.
pub const DEFAULT_TOL: f64 = 1e-8;

pub const SINGULAR_TERM_REASON: &str = "discrete Haar: all measures absolutely continuous";

/// Which block of `⊕_α Λ_α` a record refers to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockId {
    /// The full `Λ_α` block at an orbit representative.
    Orbit { representative: Character },
    /// `μ̂(Λ_0)` restricted to the orthocomplement of the constants.
    Lambda0Complement,
}

impl std::fmt::Display for BlockId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockId::Orbit { representative } => {
                let coords: Vec<String> = representative.0.iter().map(|c| c.to_string()).collect();
                write!(f, "alpha=({})", coords.join(" "))
            }
            BlockId::Lambda0Complement => write!(f, "Lambda0-complement"),
        }
    }
}

/// Outcome of testing whether `1 ∈ σ(M)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OneInSpectrum {
    /// `true` when 1 lies in the spectrum within tolerance.
    pub verdict: bool,
    /// Smallest singular value of `I − M`. Infinite for an empty block.
    pub margin: f64,
    /// `min |λ − 1|` over computed eigenvalues, when the eigensolver converged.
    pub eigen_distance: Option<f64>,
}

pub fn one_in_spectrum(m: &CMatrix, tol: f64) -> OneInSpectrum {
    let n = m.nrows();
    if n == 0 {
        return OneInSpectrum { verdict: false, margin: f64::INFINITY, eigen_distance: None };
    }
    let shifted = linalg::identity(n) - m;
    let margin = linalg::min_singular_value(&shifted);
    let eigen_distance = linalg::eigenvalues(m).ok().map(|eig| {
        eig.into_iter()
            .map(|z| (z - num_complex::Complex64::new(1.0, 0.0)).norm())
            .fold(f64::INFINITY, f64::min)
    });
    OneInSpectrum { verdict: margin <= tol, margin, eigen_distance }
}

/// Spectral data of one block.
#[derive(Debug, Clone, Serialize)]
pub struct BlockRecord {
    pub block: BlockId,
    pub spectral_radius: f64,
    pub op_norm: f64,
    pub one_in_spectrum: bool,
    pub margin: f64,
}

impl BlockRecord {
    pub fn compute(block: BlockId, m: &CMatrix, tol: f64) -> Result<Self> {
        let one = one_in_spectrum(m, tol);
        Ok(Self {
            block,
            spectral_radius: linalg::spectral_radius(m)?,
            op_norm: linalg::op_norm(m),
            one_in_spectrum: one.verdict,
            margin: one.margin,
        })
    }
}

/// `μ̂(Λ_α)` at every orbit representative (the orbit of 0 first).
pub fn orbit_blocks(mu: &GroupMeasure) -> Vec<(Character, CMatrix)> {
    let orbits = mu.group().dual_orbits();
    orbits
        .into_par_iter()
        .map(|o| {
            let m = rep::fourier(mu, &o.representative).matrix;
            (o.representative, m)
        })
        .collect()
}

/// Blocks quantified by the conditions over `Ĝ ∖ {1_G}`: every nonzero orbit
/// plus the `Λ_0` complement.
pub fn nontrivial_blocks(mu: &GroupMeasure) -> Vec<(BlockId, CMatrix)> {
    let m = mu.group().k_order();
    let mut out = Vec::new();
    for (alpha, block) in orbit_blocks(mu) {
        if alpha.is_zero() {
            out.push((BlockId::Lambda0Complement, compress_to_complement(&block, m)));
        } else {
            out.push((BlockId::Orbit { representative: alpha }, block));
        }
    }
    out
}

/// Upper estimate of `ϱ(μ) = inf ‖μⁿ‖^{1/n}` along `n = 2^k`.
///
/// Each squaring is renormalized to unit norm and the running value of
/// `log ‖μ^{2^k}‖ / 2^k` is carried directly, so no power ever under- or
/// overflows. Stops when successive estimates differ by less than `tol` or
/// after `kmax` squarings.
pub fn gelfand_radius(mu: &GroupMeasure, tol: f64, kmax: u32) -> Result<f64> {
    let norm = mu.tv_norm();
    if norm == 0.0 {
        return Ok(0.0);
    }
    let mut nu = mu.scale(num_complex::Complex64::new(1.0 / norm, 0.0));
    let mut log_scaled = norm.ln();
    let mut estimate = norm;
    for k in 1..=kmax.max(1) {
        let sq = nu.convolve(&nu)?;
        let s = sq.tv_norm();
        if s == 0.0 {
            return Ok(0.0);
        }
        log_scaled += s.ln() / 2f64.powi(k as i32);
        if !log_scaled.is_finite() {
            return Err(Error::Overflow);
        }
        nu = sq.scale(num_complex::Complex64::new(1.0 / s, 0.0));
        let next = log_scaled.exp();
        if !next.is_finite() {
            return Err(Error::Overflow);
        }
        let converged = (next - estimate).abs() < tol;
        estimate = next;
        if converged {
            break;
        }
    }
    Ok(estimate)
}

/// `‖μ‖* = sup_{[U] ∈ Ĝ} ‖U(μ)‖`, evaluated as the largest `‖Λ_α(μ)‖` over
/// orbit representatives.
pub fn star_norm(mu: &GroupMeasure) -> f64 {
    mu.group()
        .dual_orbits()
        .into_par_iter()
        .map(|o| linalg::op_norm(&rep::rep_of_measure(mu, &o.representative).matrix))
        .reduce(|| 0.0, f64::max)
}

/// Both sides of the spectral radius formula.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub gelfand_radius_estimate: f64,
    pub per_orbit: Vec<BlockRecord>,
    pub lambda0_complement: BlockRecord,
    pub sup_block_radius: f64,
    pub star_norm: f64,
    pub singular_term: f64,
    pub singular_reason: String,
    pub formula_gap: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Squarings allowed when estimating the Gelfand radius for the formula check.
pub const SRF_KMAX: u32 = 60;

pub fn verify_srf(mu: &GroupMeasure, tol: f64) -> Result<SpectralReport> {
    verify_srf_with(mu, tol, SRF_KMAX)
}

pub fn verify_srf_with(mu: &GroupMeasure, tol: f64, kmax: u32) -> Result<SpectralReport> {
    let gelfand = gelfand_radius(mu, tol * 1e-3, kmax)?;
    let m = mu.group().k_order();
    let blocks = orbit_blocks(mu);
    let per_orbit = blocks
        .par_iter()
        .map(|(alpha, block)| {
            BlockRecord::compute(BlockId::Orbit { representative: alpha.clone() }, block, DEFAULT_TOL)
        })
        .collect::<Result<Vec<_>>>()?;
    let zero_block = &blocks[0].1;
    let lambda0_complement = BlockRecord::compute(
        BlockId::Lambda0Complement,
        &compress_to_complement(zero_block, m),
        DEFAULT_TOL,
    )?;
    let singular_term = 0.0;
    let sup_block_radius = per_orbit
        .iter()
        .map(|r| r.spectral_radius)
        .fold(singular_term, f64::max);
    let formula_gap = (gelfand - sup_block_radius).abs();
    Ok(SpectralReport {
        gelfand_radius_estimate: gelfand,
        per_orbit,
        lambda0_complement,
        sup_block_radius,
        star_norm: star_norm(mu),
        singular_term,
        singular_reason: SINGULAR_TERM_REASON.to_string(),
        formula_gap,
        tolerance: tol,
        pass: formula_gap <= tol,
    })
}
