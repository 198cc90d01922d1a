//! Ordinal-pattern encoding, histogram accumulation, and the entropy measures
//! derived from a pattern histogram.
//!
//! A window of `n` values maps to the permutation describing its relative
//! ordering (its *pattern*). Patterns are identified by the lexicographic
//! rank of the window's rank vector among all permutations of `(1..=n)`,
//! computed as a Lehmer code. Counting patterns over every stride-1 window
//! of a series gives the pattern histogram; Shannon entropy of that
//! histogram (natural log) is the permutation entropy.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// Smallest pattern order that describes a change.
pub const MIN_ORDER: usize = 2;

/// Largest supported pattern order. The histogram needs `n!` counters, so
/// this cap keeps the table at most `10! ≈ 3.6M` entries.
pub const MAX_ORDER: usize = 10;

const FACTORIALS: [u64; MAX_ORDER + 1] = [
    1, 1, 2, 6, 24, 120, 720, 5_040, 40_320, 362_880, 3_628_800,
];

/// Smallest admissible jitter amplitude, relative to the series value range.
/// Anything below 2⁻⁴⁰ of the range would vanish under f64 rounding.
pub const MIN_JITTER_RELATIVE_AMPLITUDE: f64 = 1.0 / 1_099_511_627_776.0; // 2^-40

/// `n!` for `n <= MAX_ORDER`.
///
/// Panics for larger arguments; callers are expected to validate orders
/// through the public operations first.
pub fn factorial(order: usize) -> u64 {
    FACTORIALS[order]
}

/// `ln(n!)`, the entropy of the uniform pattern distribution of order `n`.
pub fn ln_factorial(order: usize) -> f64 {
    (factorial(order) as f64).ln()
}

/// How equal values inside a window are ranked.
///
/// Real tick data (and especially first differences of it) contains equal
/// values, while ordinal ranking is defined for distinct ones. The policy
/// decides what happens to windows that contain ties.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TiePolicy {
    /// Earlier index receives the smaller rank. Deterministic and keeps
    /// every window. This is the default.
    StableRank,
    /// Windows containing any tie are dropped from the histogram.
    SkipWindow,
    /// Ties are broken pseudo-randomly by a keyed hash of (seed, sample
    /// index), equivalent to perturbing each sample by a noise amount
    /// smaller than any gap between distinct values. Distinct values are
    /// therefore never reordered. `amplitude` bounds the magnitude of the
    /// implied perturbation and must be strictly positive and at least
    /// 2⁻⁴⁰ of the series value range.
    Jitter { seed: u64, amplitude: f64 },
}

impl Default for TiePolicy {
    fn default() -> Self {
        TiePolicy::StableRank
    }
}

impl TiePolicy {
    /// Check the jitter amplitude against the value range it will be applied
    /// to. `StableRank` and `SkipWindow` always pass.
    pub fn validate_for_range(&self, value_range: f64) -> Result<()> {
        if let TiePolicy::Jitter { amplitude, .. } = self {
            if !amplitude.is_finite() || *amplitude <= 0.0 {
                return Err(Error::Parameter {
                    name: "amplitude",
                    reason: format!("jitter amplitude must be strictly positive, got {amplitude}"),
                });
            }
            let floor = value_range * MIN_JITTER_RELATIVE_AMPLITUDE;
            if *amplitude < floor {
                return Err(Error::Parameter {
                    name: "amplitude",
                    reason: format!(
                        "jitter amplitude {amplitude} is below 2^-40 of the value range \
                         ({floor:e}); it would vanish under rounding"
                    ),
                });
            }
        }
        Ok(())
    }
}

pub(crate) fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Tie-break key for the sample at `index` under jitter seed `seed`.
#[inline]
fn jitter_key(seed: u64, index: usize) -> u64 {
    splitmix64(seed ^ (index as u64).wrapping_mul(0xA076_1D64_78BD_642F))
}

/// Resolved per-pass comparator: decides whether element `(a, ia)` ranks
/// strictly below `(b, ib)`, with `ia`/`ib` the absolute sample indices.
#[derive(Clone, Copy)]
enum Ranking {
    Stable,
    Jittered { seed: u64 },
}

impl Ranking {
    #[inline]
    fn ranks_below(self, a: f64, ia: usize, b: f64, ib: usize) -> bool {
        if a < b {
            return true;
        }
        if a > b {
            return false;
        }
        match self {
            Ranking::Stable => ia < ib,
            Ranking::Jittered { seed } => {
                let (ka, kb) = (jitter_key(seed, ia), jitter_key(seed, ib));
                if ka != kb {
                    ka < kb
                } else {
                    ia < ib
                }
            }
        }
    }
}

fn ranking_of(policy: &TiePolicy) -> Ranking {
    match policy {
        TiePolicy::StableRank | TiePolicy::SkipWindow => Ranking::Stable,
        TiePolicy::Jitter { seed, .. } => Ranking::Jittered { seed: *seed },
    }
}

/// Identifier of one ordinal pattern: the lexicographic rank of its rank
/// vector among all permutations of `(1..=order)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternIndex {
    order: usize,
    index: usize,
}

impl PatternIndex {
    pub fn new(order: usize, index: usize) -> Result<Self> {
        check_order(order)?;
        let cardinality = factorial(order) as usize;
        if index >= cardinality {
            return Err(Error::Parameter {
                name: "index",
                reason: format!("pattern index {index} out of range for order {order} (max {})",
                    cardinality - 1),
            });
        }
        Ok(Self { order, index })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Decode the index back into its rank vector (1-based ranks).
    ///
    /// Inverse of the encoding: feeding the returned vector to
    /// [`encode_pattern`] reproduces `self`.
    pub fn rank_vector(&self) -> Vec<u8> {
        let n = self.order;
        let mut remaining: Vec<u8> = (1..=n as u8).collect();
        let mut rest = self.index;
        let mut out = Vec::with_capacity(n);
        for pos in 0..n {
            let block = factorial(n - 1 - pos) as usize;
            let digit = rest / block;
            rest %= block;
            out.push(remaining.remove(digit));
        }
        out
    }
}

/// Outcome of encoding one window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowPattern {
    Encoded(PatternIndex),
    /// The window contained a tie and the policy was [`TiePolicy::SkipWindow`].
    Skipped,
}

impl WindowPattern {
    pub fn pattern(&self) -> Option<PatternIndex> {
        match self {
            WindowPattern::Encoded(p) => Some(*p),
            WindowPattern::Skipped => None,
        }
    }
}

/// Encode a single window of values into its pattern index.
///
/// The rank vector assigns rank `1 + |{j : w_j < w_i}|` to each element,
/// with ties resolved by the policy; the pattern index is that vector's
/// lexicographic rank. Returns [`WindowPattern::Skipped`] only under
/// [`TiePolicy::SkipWindow`] when two values are equal.
pub fn encode_pattern(window: &[f64], policy: &TiePolicy) -> Result<WindowPattern> {
    let order = window.len();
    if order < MIN_ORDER {
        return Err(Error::InvalidOrder { order });
    }
    if order > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order,
            min: MIN_ORDER,
            max: MAX_ORDER,
        });
    }
    if let Some(i) = window.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            index: i,
            value: window[i],
        });
    }
    let range = window.iter().fold(f64::NEG_INFINITY, |m, v| m.max(*v))
        - window.iter().fold(f64::INFINITY, |m, v| m.min(*v));
    policy.validate_for_range(range)?;

    let (index, tied) = lehmer_index(window, 0, ranking_of(policy));
    if tied && *policy == TiePolicy::SkipWindow {
        return Ok(WindowPattern::Skipped);
    }
    Ok(WindowPattern::Encoded(PatternIndex { order, index }))
}

/// Lexicographic rank of the window's rank vector, plus whether the window
/// contains any tie. `base` is the absolute index of `window[0]` in the
/// underlying series (it keys the jitter tie-break).
///
/// Uses O(n²) insertion counting; for n ≤ 10 this beats sorting and needs
/// no allocation.
#[inline]
fn lehmer_index(window: &[f64], base: usize, ranking: Ranking) -> (usize, bool) {
    let n = window.len();
    let mut index = 0usize;
    let mut tied = false;
    for j in 0..n - 1 {
        let vj = window[j];
        let mut below_after = 0usize;
        for (k, &vk) in window.iter().enumerate().skip(j + 1) {
            if vk == vj {
                tied = true;
            }
            if ranking.ranks_below(vk, base + k, vj, base + j) {
                below_after += 1;
            }
        }
        index += below_after * FACTORIALS[n - 1 - j] as usize;
    }
    (index, tied)
}

/// Counts of each ordinal pattern over a set of windows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternHistogram {
    order: usize,
    counts: Vec<u64>,
    total_windows: u64,
    tie_windows: u64,
}

impl PatternHistogram {
    /// Build a histogram directly from per-pattern counts (for synthetic
    /// distributions and tests). `counts` must have exactly `order!`
    /// entries; the total is their sum and the tie count is zero.
    pub fn from_counts(order: usize, counts: Vec<u64>) -> Result<Self> {
        check_order(order)?;
        let expected = factorial(order) as usize;
        if counts.len() != expected {
            return Err(Error::Parameter {
                name: "counts",
                reason: format!(
                    "order {order} needs {expected} pattern counters, got {}",
                    counts.len()
                ),
            });
        }
        let total_windows = counts.iter().sum();
        Ok(Self {
            order,
            counts,
            total_windows,
            tie_windows: 0,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Per-pattern counts, indexed by pattern index.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count_of(&self, pattern: PatternIndex) -> u64 {
        if pattern.order() == self.order {
            self.counts[pattern.index()]
        } else {
            0
        }
    }

    /// Number of windows that entered the histogram.
    pub fn total_windows(&self) -> u64 {
        self.total_windows
    }

    /// Number of scanned windows that contained at least one tie
    /// (including windows dropped under [`TiePolicy::SkipWindow`]).
    pub fn tie_windows(&self) -> u64 {
        self.tie_windows
    }

    pub fn tie_fraction(&self) -> f64 {
        if self.total_windows == 0 {
            0.0
        } else {
            self.tie_windows as f64 / self.total_windows as f64
        }
    }

    /// Add another histogram's counts into this one.
    ///
    /// Merging partial histograms accumulated over disjoint window ranges is
    /// bit-identical to a single pass over the union, provided every window
    /// was assigned to exactly one partition.
    pub fn merge(&mut self, other: &PatternHistogram) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        for (c, o) in self.counts.iter_mut().zip(&other.counts) {
            *c += o;
        }
        self.total_windows += other.total_windows;
        self.tie_windows += other.tie_windows;
        Ok(())
    }
}

/// Pattern histogram over every stride-1 window of the series
/// (`len - order + 1` windows).
pub fn pattern_histogram(
    series: &TimeSeries,
    order: usize,
    policy: &TiePolicy,
) -> Result<PatternHistogram> {
    check_order(order)?;
    if series.len() < order {
        return Err(Error::InsufficientData {
            required: order,
            available: series.len(),
        });
    }
    pattern_histogram_partial(series, order, policy, 0..series.len() - order + 1)
}

/// Pattern histogram over the windows whose start index lies in
/// `window_starts` only.
///
/// Partial histograms over a partition of the start-index range merge (by
/// [`PatternHistogram::merge`]) into exactly the full-series histogram:
/// jitter tie-breaks are keyed by absolute sample index, so results do not
/// depend on how the range was split.
pub fn pattern_histogram_partial(
    series: &TimeSeries,
    order: usize,
    policy: &TiePolicy,
    window_starts: Range<usize>,
) -> Result<PatternHistogram> {
    check_order(order)?;
    let values = series.values();
    if values.len() < order {
        return Err(Error::InsufficientData {
            required: order,
            available: values.len(),
        });
    }
    let last_start = values.len() - order;
    if window_starts.start > window_starts.end || window_starts.end > last_start + 1 {
        return Err(Error::Parameter {
            name: "window_starts",
            reason: format!(
                "window start range {window_starts:?} exceeds valid starts 0..={last_start}"
            ),
        });
    }
    policy.validate_for_range(series.value_range())?;

    let ranking = ranking_of(policy);
    let skip_ties = *policy == TiePolicy::SkipWindow;
    let mut counts = vec![0u64; factorial(order) as usize];
    let mut total_windows = 0u64;
    let mut tie_windows = 0u64;
    for start in window_starts {
        let (index, tied) = lehmer_index(&values[start..start + order], start, ranking);
        if tied {
            tie_windows += 1;
            if skip_ties {
                continue;
            }
        }
        counts[index] += 1;
        total_windows += 1;
    }
    Ok(PatternHistogram {
        order,
        counts,
        total_windows,
        tie_windows,
    })
}

fn check_order(order: usize) -> Result<()> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
        return Err(Error::UnsupportedOrder {
            order,
            min: MIN_ORDER,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Entropy quantities computed from one pattern histogram.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    /// Pattern order `n`.
    pub order: usize,
    /// Shannon entropy of the pattern distribution, in nats.
    pub entropy_nats: f64,
    /// Entropy per symbol: `entropy_nats / (n - 1)`.
    pub per_symbol: f64,
    /// `entropy_nats / ln(n!)`, in `[0, 1]`. 1 means all patterns occur
    /// equally often; 0 means a single pattern dominates completely.
    pub normalized: f64,
    /// Windows counted in the histogram.
    pub total_windows: u64,
    /// Tie windows seen, relative to the counted windows.
    pub tie_fraction: f64,
}

/// Shannon entropy (natural log) of a pattern histogram, with the derived
/// per-symbol and normalized quantities.
///
/// Only nonzero counts contribute (`0·ln 0 := 0`). Computed as
/// `ln W - Σ cᵢ·ln cᵢ / W`, which is exact at both extremes: a single
/// occupied pattern gives exactly 0 and the flat histogram with unit counts
/// gives exactly `ln(n!)`.
pub fn entropy(hist: &PatternHistogram) -> Result<EntropyReport> {
    let total = hist.total_windows;
    if total == 0 {
        return Err(Error::InsufficientData {
            required: 1,
            available: 0,
        });
    }
    let w = total as f64;
    let mut occupied = 0usize;
    let mut sum_c_ln_c = 0.0;
    for &c in &hist.counts {
        if c > 0 {
            occupied += 1;
            if c > 1 {
                sum_c_ln_c += (c as f64) * (c as f64).ln();
            }
        }
    }
    let max_entropy = ln_factorial(hist.order);
    let entropy_nats = if occupied <= 1 {
        0.0
    } else {
        // clamp soaks up float rounding at the uniform extreme
        (w.ln() - sum_c_ln_c / w).clamp(0.0, max_entropy)
    };
    Ok(EntropyReport {
        order: hist.order,
        entropy_nats,
        per_symbol: entropy_nats / (hist.order - 1) as f64,
        normalized: entropy_nats / max_entropy,
        total_windows: total,
        tie_fraction: hist.tie_fraction(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(values: &[f64]) -> TimeSeries {
        TimeSeries::new(values.to_vec()).unwrap()
    }

    fn encoded_index(window: &[f64], policy: &TiePolicy) -> usize {
        match encode_pattern(window, policy).unwrap() {
            WindowPattern::Encoded(p) => p.index(),
            WindowPattern::Skipped => panic!("window unexpectedly skipped"),
        }
    }

    #[test]
    fn encode_monotone_window_is_identity_pattern() {
        assert_eq!(encoded_index(&[1.0, 2.0, 3.0], &TiePolicy::StableRank), 0);
    }

    #[test]
    fn encode_follows_lexicographic_enumeration() {
        // (1,2,3)=0 (1,3,2)=1 (2,1,3)=2 (2,3,1)=3 (3,1,2)=4 (3,2,1)=5
        assert_eq!(encoded_index(&[9.0, 1.0, 5.0], &TiePolicy::StableRank), 4);
        assert_eq!(encoded_index(&[1.0, 3.0, 2.0], &TiePolicy::StableRank), 1);
        assert_eq!(encoded_index(&[3.0, 2.0, 1.0], &TiePolicy::StableRank), 5);
    }

    #[test]
    fn encode_resolves_ties_by_policy() {
        // stable: the earlier equal value takes the smaller rank
        assert_eq!(encoded_index(&[1.0, 1.0, 2.0], &TiePolicy::StableRank), 0);
        assert_eq!(
            encode_pattern(&[1.0, 1.0, 2.0], &TiePolicy::SkipWindow).unwrap(),
            WindowPattern::Skipped
        );
        // tie-free windows are never skipped
        assert!(matches!(
            encode_pattern(&[2.0, 1.0, 3.0], &TiePolicy::SkipWindow).unwrap(),
            WindowPattern::Encoded(_)
        ));
    }

    #[test]
    fn encode_rejects_bad_windows() {
        assert!(matches!(
            encode_pattern(&[1.0], &TiePolicy::StableRank),
            Err(Error::InvalidOrder { order: 1 })
        ));
        assert!(matches!(
            encode_pattern(&[1.0, f64::NAN], &TiePolicy::StableRank),
            Err(Error::NonFinite { index: 1, .. })
        ));
        let too_wide: Vec<f64> = (0..11).map(|i| i as f64).collect();
        assert!(matches!(
            encode_pattern(&too_wide, &TiePolicy::StableRank),
            Err(Error::UnsupportedOrder { order: 11, .. })
        ));
    }

    #[test]
    fn jitter_amplitude_is_validated() {
        let policy = TiePolicy::Jitter {
            seed: 1,
            amplitude: 0.0,
        };
        assert!(matches!(
            encode_pattern(&[1.0, 2.0], &policy),
            Err(Error::Parameter { .. })
        ));
        let vanishing = TiePolicy::Jitter {
            seed: 1,
            amplitude: 1e-16,
        };
        assert!(matches!(
            encode_pattern(&[0.0, 1000.0], &vanishing),
            Err(Error::Parameter { .. })
        ));
        let fine = TiePolicy::Jitter {
            seed: 1,
            amplitude: 1e-6,
        };
        assert!(encode_pattern(&[0.0, 1000.0], &fine).is_ok());
    }

    #[test]
    fn rank_vector_decodes_known_patterns() {
        assert_eq!(PatternIndex::new(3, 4).unwrap().rank_vector(), vec![3, 1, 2]);
        assert_eq!(PatternIndex::new(3, 0).unwrap().rank_vector(), vec![1, 2, 3]);
        assert_eq!(PatternIndex::new(3, 5).unwrap().rank_vector(), vec![3, 2, 1]);
        assert!(PatternIndex::new(3, 6).is_err());
    }

    #[test]
    fn histogram_matches_hand_enumeration() {
        // windows: (4,7,9) (7,9,10) -> (1,2,3); (9,10,6) (6,11,3) -> (2,3,1);
        // (10,6,11) -> (2,1,3)
        let s = series(&[4.0, 7.0, 9.0, 10.0, 6.0, 11.0, 3.0]);
        let hist = pattern_histogram(&s, 3, &TiePolicy::StableRank).unwrap();
        assert_eq!(hist.total_windows(), 5);
        assert_eq!(hist.tie_windows(), 0);
        let mut expected = vec![0u64; 6];
        expected[0] = 2; // (1,2,3)
        expected[3] = 2; // (2,3,1)
        expected[2] = 1; // (2,1,3)
        assert_eq!(hist.counts(), expected.as_slice());
    }

    #[test]
    fn histogram_of_increasing_series_is_a_point_mass() {
        let s = TimeSeries::new((0..100).map(|i| i as f64).collect()).unwrap();
        let hist = pattern_histogram(&s, 4, &TiePolicy::StableRank).unwrap();
        assert_eq!(hist.counts()[0], 97);
        assert_eq!(hist.total_windows(), 97);
        assert_eq!(hist.counts().iter().sum::<u64>(), 97);
    }

    #[test]
    fn histogram_boundaries() {
        let s = series(&[3.0, 1.0, 2.0]);
        let hist = pattern_histogram(&s, 3, &TiePolicy::StableRank).unwrap();
        assert_eq!(hist.total_windows(), 1);

        assert!(matches!(
            pattern_histogram(&series(&[1.0, 2.0]), 3, &TiePolicy::StableRank),
            Err(Error::InsufficientData {
                required: 3,
                available: 2
            })
        ));
        assert!(matches!(
            pattern_histogram(&s, 11, &TiePolicy::StableRank),
            Err(Error::UnsupportedOrder { order: 11, .. })
        ));
        assert!(matches!(
            pattern_histogram(&s, 1, &TiePolicy::StableRank),
            Err(Error::UnsupportedOrder { order: 1, .. })
        ));
    }

    #[test]
    fn skip_window_drops_tied_windows_only() {
        let s = series(&[1.0, 1.0, 2.0, 3.0]);
        let hist = pattern_histogram(&s, 2, &TiePolicy::SkipWindow).unwrap();
        // windows: (1,1) skipped; (1,2) and (2,3) kept
        assert_eq!(hist.total_windows(), 2);
        assert_eq!(hist.tie_windows(), 1);
        assert_eq!(hist.counts(), &[2, 0]);

        let stable = pattern_histogram(&s, 2, &TiePolicy::StableRank).unwrap();
        assert_eq!(stable.total_windows(), 3);
        assert_eq!(stable.tie_windows(), 1);
        assert_eq!(stable.counts(), &[3, 0]);
    }

    #[test]
    fn partial_histograms_merge_to_the_full_pass() {
        let s = series(&[4.0, 7.0, 9.0, 10.0, 6.0, 11.0, 3.0, 3.0, 8.0]);
        for policy in [
            TiePolicy::StableRank,
            TiePolicy::SkipWindow,
            TiePolicy::Jitter {
                seed: 99,
                amplitude: 1e-6,
            },
        ] {
            let full = pattern_histogram(&s, 3, &policy).unwrap();
            let mut left = pattern_histogram_partial(&s, 3, &policy, 0..4).unwrap();
            let right = pattern_histogram_partial(&s, 3, &policy, 4..7).unwrap();
            left.merge(&right).unwrap();
            assert_eq!(left, full);
        }
    }

    #[test]
    fn merge_rejects_mismatched_orders() {
        let mut a = PatternHistogram::from_counts(2, vec![1, 1]).unwrap();
        let b = PatternHistogram::from_counts(3, vec![1; 6]).unwrap();
        assert!(matches!(a.merge(&b), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn entropy_of_uniform_histogram_is_maximal() {
        let hist = PatternHistogram::from_counts(3, vec![1; 6]).unwrap();
        let report = entropy(&hist).unwrap();
        assert_eq!(report.entropy_nats, 6.0_f64.ln());
        assert_eq!(report.normalized, 1.0);
    }

    #[test]
    fn entropy_of_point_mass_is_exactly_zero() {
        let hist = PatternHistogram::from_counts(3, vec![0, 0, 0, 0, 123, 0]).unwrap();
        let report = entropy(&hist).unwrap();
        assert_eq!(report.entropy_nats, 0.0);
        assert_eq!(report.normalized, 0.0);
        assert_eq!(report.per_symbol, 0.0);
    }

    #[test]
    fn entropy_matches_direct_evaluation() {
        // counts {2, 2, 1} over 5 windows; expected values frozen from the
        // direct -Σ p ln p evaluation
        let hist = PatternHistogram::from_counts(3, vec![2, 0, 1, 2, 0, 0]).unwrap();
        let report = entropy(&hist).unwrap();
        assert!((report.entropy_nats - 1.0549201679861442).abs() < 1e-12);
        assert!((report.per_symbol - 0.5274600839930721).abs() < 1e-12);
        assert!((report.normalized - 0.588762155916294).abs() < 1e-12);
    }

    #[test]
    fn entropy_rejects_empty_histograms() {
        let hist = PatternHistogram::from_counts(3, vec![0; 6]).unwrap();
        assert!(matches!(
            entropy(&hist),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn tie_fraction_is_reported() {
        let s = series(&[1.0, 1.0, 2.0, 3.0]);
        let report =
            entropy(&pattern_histogram(&s, 2, &TiePolicy::StableRank).unwrap()).unwrap();
        assert!((report.tie_fraction - 1.0 / 3.0).abs() < 1e-15);
    }
}
