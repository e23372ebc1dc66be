//! Time-indexed data model: named numeric series with missing values,
//! lag/difference transforms, sample trimming and CSV ingestion.
//!
//! Missing observations are `None`; any arithmetic touching an NA yields NA.
//! Observation indices are 1-based (`t = 1..=T`) and map to period labels
//! `start + t - 1`, so annual data starting in 1980 prints as 1980, 1981, ...

pub mod csv;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A single observation: a number or NA.
pub type Obs = Option<f64>;

#[derive(Debug, Clone, PartialEq)]
pub enum DatasetError {
    LengthMismatch { series: String, expected: usize, got: usize },
    UnknownSeries(String),
    LagTooLarge { lag: usize, t: usize },
    TooShort { needed: usize, t: usize },
    EmptyIntersection,
    EmptyList,
    InvalidName(String),
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatasetError::LengthMismatch { series, expected, got } => write!(
                f,
                "series '{}' has {} observations, dataset expects {}",
                series, got, expected
            ),
            DatasetError::UnknownSeries(name) => write!(f, "unknown series '{}'", name),
            DatasetError::LagTooLarge { lag, t } => {
                write!(f, "lag {} out of range for {} observations", lag, t)
            }
            DatasetError::TooShort { needed, t } => {
                write!(f, "need at least {} observations, have {}", needed, t)
            }
            DatasetError::EmptyIntersection => {
                write!(f, "no common sample: every observation has a missing value")
            }
            DatasetError::EmptyList => write!(f, "empty series list"),
            DatasetError::InvalidName(name) => write!(f, "invalid series name '{}'", name),
        }
    }
}

impl core::error::Error for DatasetError {}

/// Named column of observations.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    name: String,
    values: Vec<Obs>,
}

impl Series {
    pub fn new(name: impl Into<String>, values: Vec<Obs>) -> Self {
        Series {
            name: name.into(),
            values,
        }
    }

    pub fn from_values(name: impl Into<String>, values: &[f64]) -> Self {
        Series {
            name: name.into(),
            values: values.iter().map(|&v| Some(v)).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Obs] {
        &self.values
    }

    /// Observation at 1-based index `t`; NA outside the range.
    pub fn get(&self, t: usize) -> Obs {
        if t == 0 || t > self.values.len() {
            None
        } else {
            self.values[t - 1]
        }
    }

    /// Shift back by `k >= 1` periods: `result[t] = self[t - k]`, NA where the
    /// lag reaches before the sample. No interpolation, no wraparound.
    pub fn lag(&self, k: usize) -> Result<Series, DatasetError> {
        let t = self.values.len();
        if k == 0 || k >= t {
            return Err(DatasetError::LagTooLarge { lag: k, t });
        }
        let mut values = vec![None; t];
        values[k..t].copy_from_slice(&self.values[..t - k]);
        Ok(Series {
            name: format!("{}_{}", self.name, k),
            values,
        })
    }

    /// First difference, named `d_<name>`; NA at the first observation.
    pub fn diff(&self) -> Result<Series, DatasetError> {
        let t = self.values.len();
        if t < 2 {
            return Err(DatasetError::TooShort { needed: 2, t });
        }
        let mut values = vec![None; t];
        for (i, pair) in self.values.windows(2).enumerate() {
            values[i + 1] = match (pair[1], pair[0]) {
                (Some(a), Some(b)) => Some(a - b),
                _ => None,
            };
        }
        Ok(Series {
            name: format!("d_{}", self.name),
            values,
        })
    }
}

/// Inclusive 1-based observation range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleRange {
    pub first: usize,
    pub last: usize,
}

impl SampleRange {
    pub fn len(&self) -> usize {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false // first <= last by construction
    }

    /// 0-based iterator over the underlying vector indices.
    pub fn iter0(&self) -> impl Iterator<Item = usize> {
        (self.first - 1)..self.last
    }

    pub fn contains(&self, t: usize) -> bool {
        t >= self.first && t <= self.last
    }
}

/// Largest contiguous range of 1-based indices where every column is non-NA.
pub fn common_sample(columns: &[&[Obs]]) -> Result<SampleRange, DatasetError> {
    if columns.is_empty() {
        return Err(DatasetError::EmptyList);
    }
    let t = columns[0].len();
    let mut best: Option<(usize, usize)> = None;
    let mut run_start: Option<usize> = None;
    for i in 0..t {
        let ok = columns.iter().all(|c| c[i].is_some());
        if ok {
            if run_start.is_none() {
                run_start = Some(i);
            }
            let s = run_start.unwrap();
            if best.is_none_or(|(bs, be)| i - s > be - bs) {
                best = Some((s, i));
            }
        } else {
            run_start = None;
        }
    }
    match best {
        Some((s, e)) => Ok(SampleRange {
            first: s + 1,
            last: e + 1,
        }),
        None => Err(DatasetError::EmptyIntersection),
    }
}

/// Ordered collection of equal-length series with frequency metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    frequency: u32,
    start: i64,
    n_obs: usize,
    series: Vec<Series>,
}

impl Dataset {
    /// Empty dataset of `n_obs` periods (the `nulldata` command).
    pub fn new(n_obs: usize, frequency: u32, start: i64) -> Self {
        Dataset {
            frequency,
            start,
            n_obs,
            series: Vec::new(),
        }
    }

    pub fn n_obs(&self) -> usize {
        self.n_obs
    }

    pub fn frequency(&self) -> u32 {
        self.frequency
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn set_obs(&mut self, frequency: u32, start: i64) {
        self.frequency = frequency;
        self.start = start;
    }

    /// Period label of 1-based observation `t`.
    pub fn label(&self, t: usize) -> i64 {
        self.start + t as i64 - 1
    }

    pub fn series_names(&self) -> impl Iterator<Item = &str> {
        self.series.iter().map(|s| s.name())
    }

    pub fn series(&self, name: &str) -> Option<&Series> {
        self.series.iter().find(|s| s.name() == name)
    }

    pub fn has_series(&self, name: &str) -> bool {
        self.series(name).is_some()
    }

    /// Adds a series, replacing any existing series of the same name.
    pub fn add_series(&mut self, s: Series) -> Result<(), DatasetError> {
        if s.len() != self.n_obs {
            return Err(DatasetError::LengthMismatch {
                series: s.name().to_string(),
                expected: self.n_obs,
                got: s.len(),
            });
        }
        if let Some(existing) = self.series.iter_mut().find(|e| e.name() == s.name()) {
            *existing = s;
        } else {
            self.series.push(s);
        }
        Ok(())
    }

    /// The `genr time` command: 1, 2, ..., T.
    pub fn gen_time(&mut self) -> Result<(), DatasetError> {
        if self.n_obs == 0 {
            return Err(DatasetError::TooShort { needed: 1, t: 0 });
        }
        let values: Vec<Obs> = (1..=self.n_obs).map(|i| Some(i as f64)).collect();
        self.add_series(Series::new("time", values))
    }
}
