//! Windowed scans, multi-scale tables, slope estimation, and Monte Carlo
//! null-model calibration on top of the ordinal primitives.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::{
    entropy, pattern_histogram, pattern_histogram_partial, splitmix64, EntropyReport, TiePolicy,
    MAX_ORDER, MIN_ORDER,
};
use crate::series::TimeSeries;
use crate::synth::{generate, SyntheticKind, SyntheticSpec};

/// One [`EntropyReport`] per order in `n_min..=n_max`, each computed over
/// the full series.
pub fn entropy_profile(
    series: &TimeSeries,
    n_min: usize,
    n_max: usize,
    policy: &TiePolicy,
) -> Result<Vec<EntropyReport>> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n_min) || !(MIN_ORDER..=MAX_ORDER).contains(&n_max) {
        let bad = if (MIN_ORDER..=MAX_ORDER).contains(&n_min) {
            n_max
        } else {
            n_min
        };
        return Err(Error::UnsupportedOrder {
            order: bad,
            min: MIN_ORDER,
            max: MAX_ORDER,
        });
    }
    if n_min > n_max {
        return Err(Error::Parameter {
            name: "n_min",
            reason: format!("order range is empty: {n_min} > {n_max}"),
        });
    }
    if series.len() < n_max {
        return Err(Error::InsufficientData {
            required: n_max,
            available: series.len(),
        });
    }
    (n_min..=n_max)
        .map(|n| entropy(&pattern_histogram(series, n, policy)?))
        .collect()
}

/// Least-squares line through an entropy profile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearFit {
    /// Slope of entropy against `n - 1`; the per-symbol growth rate.
    pub k_slope: f64,
    /// Constant offset of the fitted line.
    pub intercept: f64,
    /// Orders the fit was computed over.
    pub orders_used: Vec<usize>,
    /// Largest absolute deviation of any profile point from the line.
    /// Large residuals flag profiles that do not grow linearly (fully
    /// random series grow like `n ln n` instead).
    pub max_residual: f64,
}

/// Fit `entropy_nats` against `n - 1` by unweighted least squares.
///
/// The slope approximates the large-`n` limit of the per-symbol entropy; on
/// linear profiles it matches `per_symbol` at the largest order closely.
pub fn estimate_k(profile: &[EntropyReport]) -> Result<LinearFit> {
    let mut orders_used: Vec<usize> = profile.iter().map(|r| r.order).collect();
    let mut distinct = orders_used.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(Error::InsufficientData {
            required: 2,
            available: distinct.len(),
        });
    }
    orders_used.sort_unstable();

    let m = profile.len() as f64;
    let xs = profile.iter().map(|r| (r.order - 1) as f64);
    let ys = profile.iter().map(|r| r.entropy_nats);
    let x_mean = xs.clone().sum::<f64>() / m;
    let y_mean = ys.clone().sum::<f64>() / m;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.clone().zip(ys.clone()) {
        sxx += (x - x_mean) * (x - x_mean);
        sxy += (x - x_mean) * (y - y_mean);
    }
    let k_slope = sxy / sxx;
    let intercept = y_mean - k_slope * x_mean;
    let max_residual = xs
        .zip(ys)
        .map(|(x, y)| (y - (k_slope * x + intercept)).abs())
        .fold(0.0, f64::max);
    Ok(LinearFit {
        k_slope,
        intercept,
        orders_used,
        max_residual,
    })
}

/// Sliding-window scan configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub order: usize,
    pub window_len: usize,
    pub step: usize,
    pub tie_policy: TiePolicy,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            order: 7,
            window_len: 10_000,
            step: 2_000,
            tie_policy: TiePolicy::StableRank,
        }
    }
}

/// One window of a sliding scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    /// Index of the window's first sample in the scanned series.
    pub start_index: usize,
    /// Timestamp of the window's first sample, when the series carries
    /// timestamps.
    pub timestamp: Option<i64>,
    pub report: EntropyReport,
}

/// Entropy of every length-`window_len` window, advancing by `step`.
///
/// Produces `floor((len - window_len) / step) + 1` points; each window's
/// report is independent of the others, so windows are evaluated in
/// parallel and collected in start order.
pub fn sliding_scan(series: &TimeSeries, cfg: &ScanConfig) -> Result<Vec<ScanPoint>> {
    if cfg.step < 1 {
        return Err(Error::Parameter {
            name: "step",
            reason: "step must be at least 1".into(),
        });
    }
    if cfg.window_len < cfg.order {
        return Err(Error::Parameter {
            name: "window_len",
            reason: format!(
                "window length {} is smaller than the pattern order {}",
                cfg.window_len, cfg.order
            ),
        });
    }
    if series.len() < cfg.window_len {
        return Err(Error::InsufficientData {
            required: cfg.window_len,
            available: series.len(),
        });
    }
    let points = (series.len() - cfg.window_len) / cfg.step + 1;
    (0..points)
        .into_par_iter()
        .map(|i| {
            let start = i * cfg.step;
            let starts = start..start + cfg.window_len - cfg.order + 1;
            let hist = pattern_histogram_partial(series, cfg.order, &cfg.tie_policy, starts)?;
            Ok(ScanPoint {
                start_index: start,
                timestamp: series.timestamps().map(|ts| ts[start]),
                report: entropy(&hist)?,
            })
        })
        .collect()
}

/// Where first differencing sits in the multi-scale pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Differencing {
    /// Analyze the subsampled values as-is.
    None,
    /// Subsample, then difference: each increment spans `scale` ticks.
    /// This is the default reading of a "k-tick difference".
    AfterSubsample,
    /// Difference, then subsample: keeps every `scale`-th single-tick
    /// increment. Provided for sensitivity studies.
    BeforeSubsample,
}

/// Entropy report per subsampling scale.
///
/// For each scale `k` the series is subsampled by `k`, optionally
/// differenced, and reported at order `n`. Errors name the scale that left
/// too few points.
pub fn multiscale_table(
    series: &TimeSeries,
    order: usize,
    scales: &[usize],
    differencing: Differencing,
    policy: &TiePolicy,
) -> Result<Vec<(usize, EntropyReport)>> {
    if scales.is_empty() {
        return Err(Error::Parameter {
            name: "scales",
            reason: "at least one scale is required".into(),
        });
    }
    let differenced = match differencing {
        Differencing::BeforeSubsample => Some(series.first_difference()?),
        _ => None,
    };
    let mut rows = Vec::with_capacity(scales.len());
    for &scale in scales {
        let transformed = match differencing {
            Differencing::None => series.subsample(scale)?,
            Differencing::AfterSubsample => {
                let sub = series.subsample(scale)?;
                if sub.len() < 2 {
                    return Err(Error::InsufficientDataAtScale {
                        scale,
                        required: order + 1,
                        available: sub.len(),
                    });
                }
                sub.first_difference()?
            }
            Differencing::BeforeSubsample => {
                differenced.as_ref().expect("precomputed").subsample(scale)?
            }
        };
        if transformed.len() < order {
            return Err(Error::InsufficientDataAtScale {
                scale,
                required: order,
                available: transformed.len(),
            });
        }
        let report = entropy(&pattern_histogram(&transformed, order, policy)?)?;
        rows.push((scale, report));
    }
    Ok(rows)
}

/// Which summary of the null trials is calibrated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NullStatistic {
    /// `entropy_nats / ln(n!)`, in `[0, 1]`.
    Normalized,
    /// Raw per-symbol entropy `entropy_nats / (n - 1)`, in
    /// `[0, ln(n!)/(n-1)]`.
    PerSymbol,
}

/// Parameters of a Monte Carlo null-model calibration run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NullModel {
    /// Length of each simulated random walk.
    pub series_len: usize,
    pub order: usize,
    pub trials: usize,
    /// Fraction of null trials that must exceed the critical value.
    pub confidence: f64,
    pub seed: u64,
    pub statistic: NullStatistic,
    /// Whether the statistic is computed on the first difference of each
    /// walk (the tick-table convention) or on the walk itself.
    pub difference: bool,
}

pub const MIN_NULL_TRIALS: usize = 100;

/// Result of a null-model calibration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NullCalibration {
    pub series_len: usize,
    pub order: usize,
    pub trials: usize,
    pub confidence: f64,
    /// Empirical `(1 - confidence)` quantile of the trial statistics: the
    /// threshold exceeded in a `confidence` fraction of null trials.
    pub critical_value: f64,
    pub seed: u64,
}

/// Seed for one trial, derived from the master seed so that trial streams
/// are independent of scheduling and worker count.
pub fn derive_trial_seed(master: u64, trial: u64) -> u64 {
    splitmix64(master ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Calibrate the rejection threshold for the chosen statistic against
/// seeded random walks. See [`calibrate_null_detailed`] for the per-trial
/// statistics.
pub fn calibrate_null(model: &NullModel) -> Result<NullCalibration> {
    Ok(calibrate_null_detailed(model)?.0)
}

/// As [`calibrate_null`], but also returns the sorted per-trial statistics
/// for external quantile checks.
pub fn calibrate_null_detailed(model: &NullModel) -> Result<(NullCalibration, Vec<f64>)> {
    if model.trials < MIN_NULL_TRIALS {
        return Err(Error::Parameter {
            name: "trials",
            reason: format!(
                "at least {MIN_NULL_TRIALS} trials are required, got {}",
                model.trials
            ),
        });
    }
    if !model.confidence.is_finite() || model.confidence <= 0.0 || model.confidence >= 1.0 {
        return Err(Error::Parameter {
            name: "confidence",
            reason: format!("confidence must lie strictly in (0, 1), got {}", model.confidence),
        });
    }
    let needed = if model.difference {
        model.order + 1
    } else {
        model.order
    };
    if model.series_len < needed {
        return Err(Error::InsufficientData {
            required: needed,
            available: model.series_len,
        });
    }

    let mut stats: Vec<f64> = (0..model.trials)
        .into_par_iter()
        .map(|trial| {
            let spec = SyntheticSpec {
                kind: SyntheticKind::RandomWalk,
                length: model.series_len,
                seed: derive_trial_seed(model.seed, trial as u64),
            };
            let walk = generate(&spec)?;
            let observed = if model.difference {
                walk.first_difference()?
            } else {
                walk
            };
            let report = entropy(&pattern_histogram(
                &observed,
                model.order,
                &TiePolicy::StableRank,
            )?)?;
            Ok(match model.statistic {
                NullStatistic::Normalized => report.normalized,
                NullStatistic::PerSymbol => report.per_symbol,
            })
        })
        .collect::<Result<_>>()?;
    stats.sort_by(f64::total_cmp);

    let alpha = 1.0 - model.confidence;
    let idx = lower_quantile_index(alpha, model.trials);
    let calibration = NullCalibration {
        series_len: model.series_len,
        order: model.order,
        trials: model.trials,
        confidence: model.confidence,
        critical_value: stats[idx],
        seed: model.seed,
    };
    Ok((calibration, stats))
}

/// Index of the order statistic such that at least a `1 - alpha` fraction
/// of the sorted sample strictly exceeds it (ties aside).
fn lower_quantile_index(alpha: f64, n: usize) -> usize {
    let k = (alpha * n as f64).ceil() as usize;
    k.saturating_sub(1).min(n - 1)
}
