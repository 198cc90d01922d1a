//! Time-series container and the basic transforms (differencing, subsampling).

use crate::error::{Error, Result};

/// An ordered sequence of finite samples, optionally tagged with
/// non-decreasing epoch-millisecond timestamps.
///
/// Construction validates the invariants once; every downstream operation can
/// then assume finite values and aligned, ordered timestamps.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
    timestamps: Option<Vec<i64>>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        validate_values(&values)?;
        Ok(Self {
            values,
            timestamps: None,
        })
    }

    pub fn with_timestamps(values: Vec<f64>, timestamps: Vec<i64>) -> Result<Self> {
        validate_values(&values)?;
        if timestamps.len() != values.len() {
            return Err(Error::TimestampLength {
                values: values.len(),
                timestamps: timestamps.len(),
            });
        }
        if let Some(i) = timestamps.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::TimestampOrder { index: i + 1 });
        }
        Ok(Self {
            values,
            timestamps: Some(timestamps),
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn timestamps(&self) -> Option<&[i64]> {
        self.timestamps.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Spread between the largest and smallest value (0.0 for an empty series).
    pub fn value_range(&self) -> f64 {
        let mut iter = self.values.iter();
        let Some(&first) = iter.next() else {
            return 0.0;
        };
        let (min, max) = iter.fold((first, first), |(lo, hi), &v| (lo.min(v), hi.max(v)));
        max - min
    }

    /// Series of successive changes: `out[i] = values[i+1] - values[i]`.
    ///
    /// The output is one sample shorter; each difference takes the later
    /// sample's timestamp.
    pub fn first_difference(&self) -> Result<TimeSeries> {
        if self.len() < 2 {
            return Err(Error::InsufficientData {
                required: 2,
                available: self.len(),
            });
        }
        let diffs: Vec<f64> = self.values.windows(2).map(|w| w[1] - w[0]).collect();
        match &self.timestamps {
            Some(ts) => TimeSeries::with_timestamps(diffs, ts[1..].to_vec()),
            None => TimeSeries::new(diffs),
        }
    }

    /// Keep every `stride`-th sample starting at index 0; the rest are
    /// discarded. Output length is `ceil(len / stride)`.
    pub fn subsample(&self, stride: usize) -> Result<TimeSeries> {
        if stride < 1 {
            return Err(Error::InvalidScale { scale: stride });
        }
        let values: Vec<f64> = self.values.iter().copied().step_by(stride).collect();
        match &self.timestamps {
            Some(ts) => {
                TimeSeries::with_timestamps(values, ts.iter().copied().step_by(stride).collect())
            }
            None => TimeSeries::new(values),
        }
    }
}

fn validate_values(values: &[f64]) -> Result<()> {
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            index: i,
            value: values[i],
        });
    }
    Ok(())
}
