//! Monte Carlo sampling of `X_n = ξ₁ξ₂⋯ξ_n` with `ξ_i` i.i.d. `∼ μ`.
//!
//! Trial `i` draws from a ChaCha8 stream selected by `i` under the shared
//! seed, so results do not depend on scheduling or thread count.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::measure::GroupMeasure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WalkConfig {
    pub steps: u64,
    pub trials: usize,
    pub seed: u64,
}

impl WalkConfig {
    pub fn new(steps: u64, trials: usize, seed: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidParameters("trials must be >= 1".into()));
        }
        Ok(Self { steps, trials, seed })
    }
}

/// Inverse-CDF sampler over the support of a probability measure.
struct Sampler {
    atoms: Vec<usize>,
    cumulative: Vec<f64>,
}

impl Sampler {
    fn new(mu: &GroupMeasure) -> Result<Self> {
        mu.check_probability()?;
        let mut atoms = Vec::new();
        let mut cumulative = Vec::new();
        let mut acc = 0.0;
        for (x, w) in mu.weights().iter().enumerate() {
            if w.re > 0.0 {
                acc += w.re;
                atoms.push(x);
                cumulative.push(acc);
            }
        }
        Ok(Self { atoms, cumulative })
    }

    fn draw(&self, rng: &mut impl Rng) -> usize {
        let total = *self.cumulative.last().expect("nonempty support");
        let u = rng.random::<f64>() * total;
        let i = self.cumulative.partition_point(|&c| c <= u);
        self.atoms[i.min(self.atoms.len() - 1)]
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Endpoint `X_n` (canonical index) of every trial.
pub fn sample_path(mu: &GroupMeasure, cfg: &WalkConfig) -> Result<Vec<usize>> {
    let sampler = Sampler::new(mu)?;
    let g = mu.group();
    Ok((0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(cfg.seed, trial);
            let mut x = g.identity_index();
            for _ in 0..cfg.steps {
                x = g.mul_index(x, sampler.draw(&mut rng));
            }
            x
        })
        .collect())
}

/// Normalized histogram of [`sample_path`] endpoints.
pub fn empirical_distribution(mu: &GroupMeasure, n: u64, trials: usize, seed: u64) -> Result<GroupMeasure> {
    let cfg = WalkConfig::new(n, trials, seed)?;
    let ends = sample_path(mu, &cfg)?;
    let mut counts = vec![0usize; mu.group().order()];
    for x in ends {
        counts[x] += 1;
    }
    let weights = counts
        .into_iter()
        .map(|c| Complex64::new(c as f64 / trials as f64, 0.0))
        .collect();
    GroupMeasure::new(mu.group().clone(), weights)
}

/// `½ Σ |ν(x) − 1/|G||`.
pub fn tv_to_uniform(dist: &GroupMeasure) -> Result<f64> {
    dist.check_probability()?;
    let u = 1.0 / dist.group().order() as f64;
    Ok(0.5 * dist.weights().iter().map(|w| (w - u).norm()).sum::<f64>())
}

/// `½ ‖ν − η‖₁`.
pub fn tv_distance(a: &GroupMeasure, b: &GroupMeasure) -> f64 {
    0.5 * (a - b).tv_norm()
}

/// Envelope `4 √(|G| / trials)` for the TV gap between an empirical and the exact law.
pub fn tv_envelope(order: usize, trials: usize) -> f64 {
    4.0 * (order as f64 / trials as f64).sqrt()
}

/// One row of a simulated decay table.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TvRow {
    pub n: u64,
    pub tv_exact: f64,
    pub tv_empirical: f64,
}

/// Exact and simulated distance to uniform at each `n` in `steps`.
pub fn tv_table(mu: &GroupMeasure, steps: &[u64], trials: usize, seed: u64) -> Result<Vec<TvRow>> {
    mu.check_probability()?;
    steps
        .iter()
        .map(|&n| {
            let exact = mu.power(n);
            let emp = empirical_distribution(mu, n, trials, seed)?;
            Ok(TvRow { n, tv_exact: tv_to_uniform(&exact)?, tv_empirical: tv_to_uniform(&emp)? })
        })
        .collect()
}
