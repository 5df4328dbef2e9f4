//! Operator-channel simulation: a sent subspace loses dimensions (erasures) and picks up
//! dimensions from outside (errors); the receiver decodes by minimum subspace distance.
//!
//! Each trial draws from its own ChaCha8 stream (`seed`, stream = trial index), so a run
//! is reproducible bit for bit and independent of how trials are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::subspace::{GrassmannianCode, Subspace};

const SAMPLING_ATTEMPTS: usize = 1000;
const INJECTION_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelConfig {
    /// Dimensions of the sent subspace that are lost.
    pub erasures: usize,
    /// Random outside dimensions injected into the received subspace.
    pub error_dims: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transmission {
    pub received: Subspace,
    /// Dimensions actually injected (can fall short of `error_dims` near the full space).
    pub injected_dims: usize,
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn random_vector(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let q = field.order();
    (0..n)
        .map(|_| field.element(rng.gen_range(0..q)).expect("below q"))
        .collect()
}

/// Sends `v` through the channel for trial number `trial`.
pub fn channel_transmit(v: &Subspace, cfg: &ChannelConfig, trial: u64) -> Result<Transmission> {
    transmit_with(v, cfg, &mut trial_rng(cfg.seed, trial))
}

fn transmit_with(v: &Subspace, cfg: &ChannelConfig, rng: &mut ChaCha8Rng) -> Result<Transmission> {
    let dim = v.dim();
    if cfg.erasures > dim {
        return Err(Error::TooManyErasures {
            erasures: cfg.erasures,
            dim,
        });
    }
    let field = v.field();
    let n = v.ambient_dim();
    let keep = dim - cfg.erasures;

    let mut current = if keep == dim {
        v.clone()
    } else {
        let basis = v.basis();
        let mut sampled = None;
        for _ in 0..SAMPLING_ATTEMPTS {
            let vectors: Vec<Vec<FieldElement>> = (0..keep)
                .map(|_| {
                    let coeffs = random_vector(field, dim, rng);
                    (0..n)
                        .map(|c| {
                            (0..dim).fold(FieldElement::ZERO, |acc, r| {
                                field.add(acc, field.mul(coeffs[r], basis.get(r, c)))
                            })
                        })
                        .collect()
                })
                .collect();
            let w = Subspace::from_vectors(field, n, &vectors)?;
            if w.dim() == keep {
                sampled = Some(w);
                break;
            }
        }
        sampled.ok_or(Error::SamplingFailed)?
    };

    let mut injected_dims = 0;
    for _ in 0..cfg.error_dims {
        for _ in 0..INJECTION_ATTEMPTS {
            let e = random_vector(field, n, rng);
            if !current.contains(&e)? {
                current = current.sum(&Subspace::from_vectors(field, n, &[e])?)?;
                injected_dims += 1;
                break;
            }
        }
    }
    Ok(Transmission {
        received: current,
        injected_dims,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decoded {
    /// The unique closest codeword, `None` when several tie.
    pub decoded: Option<usize>,
    /// All codewords at the minimum distance.
    pub tied: Vec<usize>,
    pub distance: usize,
}

/// Minimum subspace distance decoding; ties are reported, never broken.
pub fn decode_min_distance(code: &GrassmannianCode, received: &Subspace) -> Result<Decoded> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let mut best = usize::MAX;
    let mut tied = Vec::new();
    for (i, c) in code.codewords().iter().enumerate() {
        let d = c.distance(received)?;
        if d < best {
            best = d;
            tied.clear();
        }
        if d == best {
            tied.push(i);
        }
    }
    let decoded = (tied.len() == 1).then(|| tied[0]);
    Ok(Decoded {
        decoded,
        tied,
        distance: best,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialResult {
    pub trial: u64,
    pub sent_index: usize,
    pub decoded: Decoded,
    pub received: Subspace,
    pub injected_dims: usize,
    pub distance_to_sent: usize,
}

impl TrialResult {
    pub fn success(&self) -> bool {
        self.decoded.decoded == Some(self.sent_index)
    }

    pub fn ambiguous(&self) -> bool {
        self.decoded.tied.len() > 1
    }
}

/// One trial: pick a codeword uniformly, send it, decode.
pub fn run_trial(code: &GrassmannianCode, cfg: &ChannelConfig, trial: u64) -> Result<TrialResult> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let mut rng = trial_rng(cfg.seed, trial);
    let sent_index = rng.gen_range(0..code.len());
    let sent = &code.codewords()[sent_index];
    let tx = transmit_with(sent, cfg, &mut rng)?;
    let decoded = decode_min_distance(code, &tx.received)?;
    let distance_to_sent = tx.received.distance(sent)?;
    Ok(TrialResult {
        trial,
        sent_index,
        decoded,
        received: tx.received,
        injected_dims: tx.injected_dims,
        distance_to_sent,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramBin {
    pub distance: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationStats {
    pub config: ChannelConfig,
    pub trials: u64,
    pub code_size: usize,
    pub code_min_distance: Option<usize>,
    pub successes: u64,
    pub failures: u64,
    pub ambiguities: u64,
    pub success_rate: f64,
    pub ambiguity_rate: f64,
    pub mean_received_distance: f64,
    pub mean_injected_dims: f64,
    /// Trials with `2 d(U, sent) < D`, where unique decoding is guaranteed.
    pub guaranteed_trials: u64,
    /// Guaranteed trials that still failed; always zero for a correct decoder.
    pub guarantee_violations: u64,
    /// Histogram of `d(U, sent)` over all trials.
    pub distance_histogram: Vec<HistogramBin>,
    /// Histogram of `d(U, sent)` over failed trials only.
    pub failure_histogram: Vec<HistogramBin>,
}

fn histogram(values: impl Iterator<Item = usize>) -> Vec<HistogramBin> {
    let mut counts = std::collections::BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0u64) += 1;
    }
    counts
        .into_iter()
        .map(|(distance, count)| HistogramBin { distance, count })
        .collect()
}

pub fn simulate(
    code: &GrassmannianCode,
    cfg: &ChannelConfig,
    trials: u64,
) -> Result<SimulationStats> {
    simulate_with(code, cfg, trials, Exec::default())
}

pub fn simulate_with(
    code: &GrassmannianCode,
    cfg: &ChannelConfig,
    trials: u64,
    exec: Exec,
) -> Result<SimulationStats> {
    if trials == 0 {
        return Err(Error::NonPositive);
    }
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let results: Vec<TrialResult> = exec
        .map_range(trials as usize, |t| run_trial(code, cfg, t as u64))
        .into_iter()
        .collect::<Result<_>>()?;
    let min_d = code.min_distance().ok();
    let successes = results.iter().filter(|r| r.success()).count() as u64;
    let ambiguities = results.iter().filter(|r| r.ambiguous()).count() as u64;
    let guaranteed: Vec<&TrialResult> = match min_d {
        Some(d) => results
            .iter()
            .filter(|r| 2 * r.distance_to_sent < d)
            .collect(),
        None => Vec::new(),
    };
    let guarantee_violations = guaranteed
        .iter()
        .filter(|r| !r.success() || r.ambiguous())
        .count() as u64;
    let total_distance: u64 = results.iter().map(|r| r.distance_to_sent as u64).sum();
    let total_injected: u64 = results.iter().map(|r| r.injected_dims as u64).sum();
    Ok(SimulationStats {
        config: *cfg,
        trials,
        code_size: code.len(),
        code_min_distance: min_d,
        successes,
        failures: trials - successes,
        ambiguities,
        success_rate: successes as f64 / trials as f64,
        ambiguity_rate: ambiguities as f64 / trials as f64,
        mean_received_distance: total_distance as f64 / trials as f64,
        mean_injected_dims: total_injected as f64 / trials as f64,
        guaranteed_trials: guaranteed.len() as u64,
        guarantee_violations,
        distance_histogram: histogram(results.iter().map(|r| r.distance_to_sent)),
        failure_histogram: histogram(
            results
                .iter()
                .filter(|r| !r.success())
                .map(|r| r.distance_to_sent),
        ),
    })
}
