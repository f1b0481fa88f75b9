//! Seeded Monte Carlo Bell-experiment simulator.
//!
//! Draws per-pair outcomes from one of three models, tallies the four
//! coincidence channels, and turns the tallies into correlation and CHSH
//! estimates with standard errors:
//!
//! * [`ModelKind::Phase`] samples the four-channel distribution of the
//!   phase-rotation model (cos²/2 on the equal channels).
//! * [`ModelKind::BellLocalDeterministic`] draws a shared hidden variable
//!   λ ~ U[0, π) and sets each side to the sign of cos 2(φ − λ); its
//!   λ-averaged correlation is the triangle wave 1 − 4θ/π on [0, π/2].
//! * [`ModelKind::BellLocalStochastic`] also shares λ but each side clicks
//!   `+` independently with probability cos²(φ − λ); its correlation is
//!   cos 2(φ₁ − φ₂)/2.
//!
//! Reproducibility contract: every random draw comes from a ChaCha substream
//! keyed by (seed, sub-experiment tag, partition index), so a run is fully
//! determined by its configuration regardless of thread scheduling. Trial i
//! belongs to partition i mod `partitions`; partitions may execute
//! concurrently and are merged in index order.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::model::{coincidence_probabilities_with_source, PairSourceSpec};

/// Largest allowed trial count; keeps channel sums clear of u64 overflow.
pub const MAX_TRIALS: u64 = 1 << 62;

#[derive(Debug, Error, PartialEq)]
pub enum SimError {
    #[error("experiment with zero trials")]
    EmptyRun,
    #[error("trials exceed the supported maximum of 2^62")]
    TooManyTrials,
    #[error("partitions must satisfy 1 <= partitions <= trials (got {partitions} for {trials} trials)")]
    InvalidPartitions { partitions: u64, trials: u64 },
    #[error("non-finite angle in experiment configuration")]
    NonFiniteAngle,
    #[error("coincidence count overflow while merging")]
    CountOverflow,
    #[error("cannot estimate from empty counts")]
    EmptyCounts,
    #[error("unknown model name {0:?} (expected phase, bell-det or bell-stoch)")]
    UnknownModel(String),
}

/// Which per-pair outcome law the simulator samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Phase,
    BellLocalDeterministic,
    BellLocalStochastic,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] =
        [ModelKind::Phase, ModelKind::BellLocalDeterministic, ModelKind::BellLocalStochastic];

    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::Phase => "phase",
            ModelKind::BellLocalDeterministic => "bell-det",
            ModelKind::BellLocalStochastic => "bell-stoch",
        }
    }

    /// Exact λ-averaged (or channel-derived) correlation of the model.
    ///
    /// Phase: cos 2(φ₁ − φ₂ − Δ). Deterministic baseline: triangle wave
    /// 1 − 4θ/π with θ the angle difference folded into [0, π/2] (period π).
    /// Stochastic baseline: cos 2(φ₁ − φ₂)/2. The baselines carry no source
    /// phase, so Δ is ignored for them.
    pub fn analytic_correlation(&self, phi1: f64, phi2: f64, source: &PairSourceSpec) -> f64 {
        match self {
            ModelKind::Phase => (2.0 * (phi1 - phi2 - source.delta)).cos(),
            ModelKind::BellLocalDeterministic => {
                let theta = fold_half_period(phi1 - phi2);
                1.0 - 4.0 * theta / PI
            }
            ModelKind::BellLocalStochastic => (2.0 * (phi1 - phi2)).cos() / 2.0,
        }
    }

    /// Exact channel probabilities (++, −−, +−, −+) of the model.
    pub fn analytic_channel_probabilities(
        &self,
        phi1: f64,
        phi2: f64,
        source: &PairSourceSpec,
    ) -> [f64; 4] {
        match self {
            ModelKind::Phase => {
                coincidence_probabilities_with_source(phi1, phi2, source).as_array()
            }
            // Both baselines have flat 1/2 marginals per side, so the four
            // channels follow from E alone.
            _ => {
                let e = self.analytic_correlation(phi1, phi2, source);
                let equal = (1.0 + e) / 4.0;
                let unequal = (1.0 - e) / 4.0;
                [equal, equal, unequal, unequal]
            }
        }
    }
}

// Fold an angle difference into [0, pi/2] under the period-pi, even symmetry
// of the sign-model correlation.
fn fold_half_period(theta: f64) -> f64 {
    let t = theta.rem_euclid(PI);
    t.min(PI - t)
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = SimError;
    fn from_str(s: &str) -> Result<Self, SimError> {
        match s {
            "phase" => Ok(ModelKind::Phase),
            "bell-det" => Ok(ModelKind::BellLocalDeterministic),
            "bell-stoch" => Ok(ModelKind::BellLocalStochastic),
            other => Err(SimError::UnknownModel(other.to_string())),
        }
    }
}

/// Joint outcome of one pair: detector sign on each arm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    PlusPlus,
    MinusMinus,
    PlusMinus,
    MinusPlus,
}

impl Outcome {
    fn from_signs(a_plus: bool, b_plus: bool) -> Outcome {
        match (a_plus, b_plus) {
            (true, true) => Outcome::PlusPlus,
            (false, false) => Outcome::MinusMinus,
            (true, false) => Outcome::PlusMinus,
            (false, true) => Outcome::MinusPlus,
        }
    }
}

/// One full Monte Carlo run description.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub model: ModelKind,
    /// Forward-arm rotator angle, radians.
    pub phi1: f64,
    /// Backward-arm rotator angle, radians.
    pub phi2: f64,
    pub source: PairSourceSpec,
    pub trials: u64,
    pub seed: u64,
    /// Independent RNG substreams the trials are split across.
    pub partitions: u64,
}

impl ExperimentConfig {
    fn validate(&self) -> Result<(), SimError> {
        if self.trials == 0 {
            return Err(SimError::EmptyRun);
        }
        if self.trials > MAX_TRIALS {
            return Err(SimError::TooManyTrials);
        }
        if self.partitions == 0 || self.partitions > self.trials {
            return Err(SimError::InvalidPartitions {
                partitions: self.partitions,
                trials: self.trials,
            });
        }
        if !self.phi1.is_finite()
            || !self.phi2.is_finite()
            || !self.source.delta.is_finite()
            || !self.source.phi0.is_finite()
        {
            return Err(SimError::NonFiniteAngle);
        }
        Ok(())
    }
}

/// Tallies of the four coincidence channels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CoincidenceCounts {
    pub n_pp: u64,
    pub n_mm: u64,
    pub n_pm: u64,
    pub n_mp: u64,
    pub total: u64,
}

impl CoincidenceCounts {
    pub const fn zero() -> Self {
        Self { n_pp: 0, n_mm: 0, n_pm: 0, n_mp: 0, total: 0 }
    }

    pub fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::PlusPlus => self.n_pp += 1,
            Outcome::MinusMinus => self.n_mm += 1,
            Outcome::PlusMinus => self.n_pm += 1,
            Outcome::MinusPlus => self.n_mp += 1,
        }
        self.total += 1;
    }

    pub fn as_array(&self) -> [u64; 4] {
        [self.n_pp, self.n_mm, self.n_pm, self.n_mp]
    }
}

/// Channelwise sum of two tallies; associative and commutative.
pub fn merge_counts(
    a: &CoincidenceCounts,
    b: &CoincidenceCounts,
) -> Result<CoincidenceCounts, SimError> {
    let add = |x: u64, y: u64| x.checked_add(y).ok_or(SimError::CountOverflow);
    Ok(CoincidenceCounts {
        n_pp: add(a.n_pp, b.n_pp)?,
        n_mm: add(a.n_mm, b.n_mm)?,
        n_pm: add(a.n_pm, b.n_pm)?,
        n_mp: add(a.n_mp, b.n_mp)?,
        total: add(a.total, b.total)?,
    })
}

/// Estimated correlation ê with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationEstimate {
    pub e_hat: f64,
    /// sqrt((1 − ê²)/n), the standard error of the mean of a ±1-valued
    /// product variable.
    pub std_err: f64,
    pub n: u64,
}

/// CHSH estimate assembled from four sub-experiments.
#[derive(Debug, Clone, Serialize)]
pub struct ChshEstimate {
    pub s_hat: f64,
    /// Root-sum-square of the four pair standard errors.
    pub std_err: f64,
    pub pairs: [PairEstimate; 4],
}

/// One of the four CHSH setting pairs with its counts and estimate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PairEstimate {
    pub phi1: f64,
    pub phi2: f64,
    pub counts: CoincidenceCounts,
    pub estimate: CorrelationEstimate,
}

/// ChaCha substream for one (seed, sub-experiment tag, partition) triple.
///
/// The tag occupies the high 32 bits of the stream id and the partition the
/// low 32, so sub-experiments and partitions never collide.
pub fn substream(seed: u64, tag: u32, partition: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((tag as u64) << 32) | partition as u64);
    rng
}

/// Draw one pair outcome from `model` at settings (φ₁, φ₂).
pub fn sample_outcome(
    model: ModelKind,
    phi1: f64,
    phi2: f64,
    source: &PairSourceSpec,
    rng: &mut ChaCha8Rng,
) -> Outcome {
    match model {
        ModelKind::Phase => {
            let p = coincidence_probabilities_with_source(phi1, phi2, source).as_array();
            sample_categorical(&p, rng)
        }
        ModelKind::BellLocalDeterministic => {
            let lambda = rng.random::<f64>() * PI;
            let a_plus = sign_plus((2.0 * (phi1 - lambda)).cos());
            let b_plus = sign_plus((2.0 * (phi2 - lambda)).cos());
            Outcome::from_signs(a_plus, b_plus)
        }
        ModelKind::BellLocalStochastic => {
            let lambda = rng.random::<f64>() * PI;
            let p1 = (phi1 - lambda).cos().powi(2);
            let p2 = (phi2 - lambda).cos().powi(2);
            let a_plus = rng.random::<f64>() < p1;
            let b_plus = rng.random::<f64>() < p2;
            Outcome::from_signs(a_plus, b_plus)
        }
    }
}

// sign(0) counts as +.
fn sign_plus(x: f64) -> bool {
    x >= 0.0
}

fn sample_categorical(probs: &[f64; 4], rng: &mut ChaCha8Rng) -> Outcome {
    let u = rng.random::<f64>();
    let mut acc = 0.0;
    for (k, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return match k {
                0 => Outcome::PlusPlus,
                1 => Outcome::MinusMinus,
                2 => Outcome::PlusMinus,
                _ => Outcome::MinusPlus,
            };
        }
    }
    Outcome::MinusPlus
}

// Number of trials i in [0, trials) with i mod partitions == p.
fn partition_trials(trials: u64, partitions: u64, p: u64) -> u64 {
    trials / partitions + u64::from(p < trials % partitions)
}

fn run_partition(config: &ExperimentConfig, tag: u32, partition: u32) -> CoincidenceCounts {
    let mut rng = substream(config.seed, tag, partition);
    let n = partition_trials(config.trials, config.partitions, partition as u64);
    let mut counts = CoincidenceCounts::zero();
    match config.model {
        ModelKind::Phase => {
            // Channel probabilities are fixed for the whole run; one uniform
            // draw per trial.
            let p = coincidence_probabilities_with_source(config.phi1, config.phi2, &config.source)
                .as_array();
            for _ in 0..n {
                counts.record(sample_categorical(&p, &mut rng));
            }
        }
        model => {
            for _ in 0..n {
                counts.record(sample_outcome(model, config.phi1, config.phi2, &config.source, &mut rng));
            }
        }
    }
    counts
}

/// Run one experiment under sub-experiment tag 0.
pub fn run_experiment(config: &ExperimentConfig) -> Result<CoincidenceCounts, SimError> {
    run_experiment_tagged(config, 0)
}

/// Run one experiment with an explicit sub-experiment tag, so several runs
/// sharing a seed (the four CHSH pairs, scan cells) draw from decorrelated
/// substreams.
pub fn run_experiment_tagged(
    config: &ExperimentConfig,
    tag: u32,
) -> Result<CoincidenceCounts, SimError> {
    config.validate()?;
    let partials: Vec<CoincidenceCounts> = (0..config.partitions as u32)
        .into_par_iter()
        .map(|p| run_partition(config, tag, p))
        .collect();
    partials.iter().try_fold(CoincidenceCounts::zero(), |acc, c| merge_counts(&acc, c))
}

/// Correlation estimate ê = (n₊₊ + n₋₋ − n₊₋ − n₋₊)/total.
pub fn estimate_correlation(counts: &CoincidenceCounts) -> Result<CorrelationEstimate, SimError> {
    if counts.total == 0 {
        return Err(SimError::EmptyCounts);
    }
    let n = counts.total as f64;
    let e_hat = (counts.n_pp as f64 + counts.n_mm as f64
        - counts.n_pm as f64
        - counts.n_mp as f64)
        / n;
    let std_err = ((1.0 - e_hat * e_hat).max(0.0) / n).sqrt();
    Ok(CorrelationEstimate { e_hat, std_err, n: counts.total })
}

/// Tags for the four CHSH sub-experiments (pairs in Eq-order).
const CHSH_TAGS: [u32; 4] = [1, 2, 3, 4];

/// Estimate S = ê(φ₁,φ₂) − ê(φ₁,φ₂′) + ê(φ₁′,φ₂) + ê(φ₁′,φ₂′) by running
/// four sub-experiments of `base.trials` pairs each.
pub fn estimate_chsh(
    base: &ExperimentConfig,
    phi1p: f64,
    phi2p: f64,
) -> Result<ChshEstimate, SimError> {
    if !phi1p.is_finite() || !phi2p.is_finite() {
        return Err(SimError::NonFiniteAngle);
    }
    let settings = [
        (base.phi1, base.phi2),
        (base.phi1, phi2p),
        (phi1p, base.phi2),
        (phi1p, phi2p),
    ];
    let mut pairs = Vec::with_capacity(4);
    for ((phi1, phi2), tag) in settings.into_iter().zip(CHSH_TAGS) {
        let config = ExperimentConfig { phi1, phi2, ..*base };
        let counts = run_experiment_tagged(&config, tag)?;
        let estimate = estimate_correlation(&counts)?;
        pairs.push(PairEstimate { phi1, phi2, counts, estimate });
    }
    let pairs: [PairEstimate; 4] = pairs.try_into().expect("four pairs");
    let e = |k: usize| pairs[k].estimate.e_hat;
    let s_hat = e(0) - e(1) + e(2) + e(3);
    let std_err = pairs.iter().map(|p| p.estimate.std_err.powi(2)).sum::<f64>().sqrt();
    Ok(ChshEstimate { s_hat, std_err, pairs })
}

/// Correlation estimates for every (a, b) in `grid` × `grid`, each from its
/// own tagged sub-experiment. Shared by the Monte Carlo CHSH scan and the
/// bound tests, which reuse the pair estimates across quadruples.
pub fn pair_grid_estimates(
    model: ModelKind,
    grid: &[f64],
    source: &PairSourceSpec,
    trials: u64,
    seed: u64,
    partitions: u64,
) -> Result<Vec<Vec<CorrelationEstimate>>, SimError> {
    // Tags 16.. leave 0..=4 free for plain runs and CHSH pairs.
    let n = grid.len();
    let mut rows = Vec::with_capacity(n);
    for (i, &a) in grid.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for (j, &b) in grid.iter().enumerate() {
            let config = ExperimentConfig {
                model,
                phi1: a,
                phi2: b,
                source: *source,
                trials,
                seed,
                partitions,
            };
            let tag = 16 + (i * n + j) as u32;
            let counts = run_experiment_tagged(&config, tag)?;
            row.push(estimate_correlation(&counts)?);
        }
        rows.push(row);
    }
    Ok(rows)
}
