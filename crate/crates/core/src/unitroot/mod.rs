//! Dickey-Fuller / ADF unit-root tests with deterministic-term cases,
//! modified-AIC lag selection (Ng & Perron 2001), asymptotic p-values from
//! embedded Dickey-Fuller quantile tables, and the two-step Engle-Granger
//! cointegration test.

pub mod mackinnon;
mod df_tables;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::dataset::{common_sample, Dataset, SampleRange};
use crate::linalg::Matrix;
use crate::math;
use crate::regress::{self, OlsModel, RegressError, Term};

/// Deterministic terms included in the test regression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdfCase {
    None,
    Const,
    ConstTrend,
}

impl AdfCase {
    /// Short label used in the tau statistic name: `tau_nc`, `tau_c`, `tau_ct`.
    pub fn suffix(&self) -> &'static str {
        match self {
            AdfCase::None => "nc",
            AdfCase::Const => "c",
            AdfCase::ConstTrend => "ct",
        }
    }

    fn n_deterministic(&self) -> usize {
        match self {
            AdfCase::None => 0,
            AdfCase::Const => 1,
            AdfCase::ConstTrend => 2,
        }
    }
}

/// Lag-order selection mode for the `adf`/`coint` commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestDown {
    /// Use exactly `kmax` lagged differences.
    Fixed,
    /// Scan k = kmax..1 and keep the k minimising the modified AIC.
    Maic,
}

#[derive(Debug, Clone, PartialEq)]
pub enum UnitRootError {
    UnknownSeries(String),
    /// Not enough observations for `kmax` lags on the common sample.
    KmaxTooLarge { kmax: usize, usable: usize },
    Regress(RegressError),
    UnsupportedNVars(usize),
    NeedTwoSeries,
    EmptySample,
}

impl fmt::Display for UnitRootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitRootError::UnknownSeries(name) => write!(f, "unknown series '{}'", name),
            UnitRootError::KmaxTooLarge { kmax, usable } => write!(
                f,
                "lag order {} too large: only {} usable observations",
                kmax, usable
            ),
            UnitRootError::Regress(e) => write!(f, "{}", e),
            UnitRootError::UnsupportedNVars(n) => {
                write!(f, "no Dickey-Fuller table for {} variables", n)
            }
            UnitRootError::NeedTwoSeries => write!(f, "cointegration needs at least two series"),
            UnitRootError::EmptySample => write!(f, "empty estimation sample"),
        }
    }
}

impl core::error::Error for UnitRootError {}

impl From<RegressError> for UnitRootError {
    fn from(e: RegressError) -> Self {
        UnitRootError::Regress(e)
    }
}

/// Result of an augmented Dickey-Fuller test.
#[derive(Debug, Clone)]
pub struct AdfResult {
    /// Display name of the level series (`y`, `u`, `uhat`, ...).
    pub series: String,
    /// Case used for the tau label and the p-value table.
    pub case: AdfCase,
    /// Deterministic terms actually present in the test regression (differs
    /// from `case` only in stage 2 of the Engle-Granger test).
    pub reg_case: AdfCase,
    pub kmax: usize,
    pub chosen_k: usize,
    pub test_down: bool,
    /// `(k, MIC)` pairs in scan order (k = kmax down to 1); empty without
    /// test-down.
    pub mic_trace: Vec<(usize, f64)>,
    /// Estimated `a - 1`, the coefficient on the lagged level.
    pub delta: f64,
    pub tau: f64,
    pub pvalue: f64,
    /// First-order autocorrelation of the test-regression residuals.
    pub rho1: f64,
    /// Number of variables for the p-value table (1 for a plain ADF test).
    pub n_vars: usize,
    /// Column of the lagged level inside `regression`.
    pub level_term_index: usize,
    pub regression: OlsModel,
}

/// ADF test on a dataset series, trimming missing values automatically.
pub fn adf(
    ds: &Dataset,
    series: &str,
    kmax: usize,
    case: AdfCase,
    test_down: TestDown,
) -> Result<AdfResult, UnitRootError> {
    let s = ds
        .series(series)
        .ok_or_else(|| UnitRootError::UnknownSeries(series.to_string()))?;
    let range = common_sample(&[s.values()]).map_err(|_| UnitRootError::EmptySample)?;
    let values: Vec<f64> = range.iter0().map(|i| s.values()[i].unwrap()).collect();
    adf_values(
        &values,
        series,
        kmax,
        case,
        case,
        test_down,
        1,
        ds.label(range.first),
    )
}

/// ADF engine on a contiguous slice of level values.
///
/// The test regression is
/// `d v_t = [b0 +] [a t +] delta v_{t-1} + sum_{i<=k} gamma_i d v_{t-i} + e`.
/// With test-down, every candidate k is estimated on the sample fixed by
/// `kmax` so the criteria are comparable, and the reported regression is
/// re-estimated at the chosen k on the longest sample that k allows.
#[allow(clippy::too_many_arguments)]
pub fn adf_values(
    values: &[f64],
    name: &str,
    kmax: usize,
    table_case: AdfCase,
    reg_case: AdfCase,
    test_down: TestDown,
    n_vars: usize,
    first_label: i64,
) -> Result<AdfResult, UnitRootError> {
    let n = values.len();
    let max_params = reg_case.n_deterministic() + 1 + kmax;
    if n < 2 + kmax || n - 1 - kmax <= max_params {
        return Err(UnitRootError::KmaxTooLarge {
            kmax,
            usable: n.saturating_sub(1 + kmax),
        });
    }

    let mut mic_trace = Vec::new();
    let chosen_k = match test_down {
        TestDown::Fixed => kmax,
        TestDown::Maic => {
            let t0 = 1 + kmax;
            let n_eff = (n - t0) as f64;
            // The lagged-level column is the same for every candidate.
            let sum_lvl2: f64 = (t0..n).map(|t| values[t - 1] * values[t - 1]).sum();
            let mut best_k = kmax;
            let mut best_mic = f64::INFINITY;
            for k in (1..=kmax).rev() {
                let (x, y, lvl_idx, terms) = build_design(values, name, k, reg_case, t0);
                let fit = crate::linalg::lstsq(&x, &y).map_err(|e| {
                    UnitRootError::Regress(match e {
                        crate::linalg::LinalgError::Singular { column } => {
                            RegressError::Singular {
                                term: terms[column].display_name(),
                            }
                        }
                        _ => RegressError::EmptySample,
                    })
                })?;
                let ssr: f64 = fit.residuals.iter().map(|v| v * v).sum();
                let s2 = ssr / n_eff;
                let delta = fit.beta[lvl_idx];
                let tau_pen = delta * delta * sum_lvl2 / s2;
                let mic = math::ln(s2) + 2.0 * (tau_pen + k as f64) / n_eff;
                mic_trace.push((k, mic));
                if mic < best_mic {
                    best_mic = mic;
                    best_k = k;
                }
            }
            best_k
        }
    };

    // Final regression at the chosen k on its maximal sample.
    let t0 = 1 + chosen_k;
    let (x, y, lvl_idx, terms) = build_design(values, name, chosen_k, reg_case, t0);
    let range = SampleRange {
        first: t0 + 1,
        last: n,
    };
    let regression = regress::fit_prepared(
        format!("d_{}", name),
        terms,
        x,
        y,
        range,
        first_label + t0 as i64,
        first_label + n as i64 - 1,
    )?;

    let delta = regression.beta[lvl_idx];
    let tau = regression.tstat[lvl_idx];
    let pvalue = mackinnon::pvalue(tau, table_case, n_vars)?;

    Ok(AdfResult {
        series: name.to_string(),
        case: table_case,
        reg_case,
        kmax,
        chosen_k,
        test_down: matches!(test_down, TestDown::Maic),
        mic_trace,
        delta,
        tau,
        pvalue,
        rho1: regression.rho,
        n_vars,
        level_term_index: lvl_idx,
        regression,
    })
}

/// Design matrix for the ADF regression with `k` lagged differences, rows
/// starting at 0-based time index `t0`. Returns `(X, y, level_index, terms)`.
fn build_design(
    values: &[f64],
    name: &str,
    k: usize,
    case: AdfCase,
    t0: usize,
) -> (Matrix, Vec<f64>, usize, Vec<Term>) {
    let n = values.len();
    let rows = n - t0;
    let mut cols: Vec<Vec<f64>> = Vec::new();
    let mut terms: Vec<Term> = Vec::new();

    if case.n_deterministic() >= 1 {
        cols.push(alloc::vec![1.0; rows]);
        terms.push(Term::Intercept);
    }
    let lvl_idx = cols.len();
    cols.push((t0..n).map(|t| values[t - 1]).collect());
    terms.push(Term::lagged(name, 1));
    for i in 1..=k {
        cols.push((t0..n).map(|t| values[t - i] - values[t - i - 1]).collect());
        terms.push(Term::lagged(format!("d_{}", name), i));
    }
    if case == AdfCase::ConstTrend {
        cols.push((t0..n).map(|t| (t + 1) as f64).collect());
        terms.push(Term::var("time"));
    }
    let y: Vec<f64> = (t0..n).map(|t| values[t] - values[t - 1]).collect();
    (Matrix::from_columns(&cols), y, lvl_idx, terms)
}

/// Modified AIC of Ng & Perron (2001) for candidate lag `k`, evaluated on the
/// sample fixed by `kmax`:
///
/// `MAIC(k) = ln(s2_k) + 2 (tau_k + k) / N` with `s2_k = SSR_k / N` and
/// `tau_k = delta^2 sum v_{t-1}^2 / s2_k` over the common sample.
///
/// The lagged level enters raw (not demeaned or detrended); this matches the
/// MIC trace gretl prints during `--test-down=MAIC`.
pub fn maic(
    values: &[f64],
    kmax: usize,
    k: usize,
    case: AdfCase,
) -> Result<f64, UnitRootError> {
    let n = values.len();
    let max_params = case.n_deterministic() + 1 + kmax.max(k);
    if n < 2 + kmax.max(k) || n - 1 - kmax <= max_params {
        return Err(UnitRootError::KmaxTooLarge {
            kmax,
            usable: n.saturating_sub(1 + kmax),
        });
    }
    let t0 = 1 + kmax;
    let n_eff = (n - t0) as f64;
    let sum_lvl2: f64 = (t0..n).map(|t| values[t - 1] * values[t - 1]).sum();
    let (x, y, lvl_idx, _) = build_design(values, "x", k, case, t0);
    let fit = crate::linalg::lstsq(&x, &y)
        .map_err(|_| UnitRootError::Regress(RegressError::EmptySample))?;
    let ssr: f64 = fit.residuals.iter().map(|v| v * v).sum();
    let s2 = ssr / n_eff;
    let delta = fit.beta[lvl_idx];
    Ok(math::ln(s2) + 2.0 * (delta * delta * sum_lvl2 / s2 + k as f64) / n_eff)
}

/// Asymptotic p-value for a Dickey-Fuller tau statistic; see [`mackinnon`].
pub fn mackinnon_pvalue(tau: f64, case: AdfCase, n_vars: usize) -> Result<f64, UnitRootError> {
    mackinnon::pvalue(tau, case, n_vars)
}

/// Result of the two-step Engle-Granger cointegration test.
#[derive(Debug, Clone)]
pub struct CointResult {
    /// Per-variable ADF tests (absent with `--skip-df`).
    pub pre_tests: Vec<AdfResult>,
    /// Cointegrating regression of the first series on deterministics and the
    /// remaining series.
    pub stage1: OlsModel,
    pub case: AdfCase,
    /// ADF (no deterministic terms) on the stage-1 residuals.
    pub stage2: AdfResult,
    /// Stage-2 p below 5 per cent.
    pub cointegrated: bool,
    pub kmax: usize,
}

/// Engle-Granger test: stage 1 regresses the first series on a constant
/// (plus trend with [`AdfCase::ConstTrend`]) and the remaining series; stage 2
/// runs an ADF without deterministic terms on the stage-1 residuals, with the
/// p-value taken from the table for `series.len()` variables.
pub fn coint(
    ds: &Dataset,
    kmax: usize,
    series: &[String],
    case: AdfCase,
    test_down: TestDown,
    skip_df: bool,
) -> Result<CointResult, UnitRootError> {
    if series.len() < 2 {
        return Err(UnitRootError::NeedTwoSeries);
    }
    if series.len() > mackinnon::MAX_VARS {
        return Err(UnitRootError::UnsupportedNVars(series.len()));
    }

    let mut pre_tests = Vec::new();
    if !skip_df {
        let pre_case = if case == AdfCase::None { AdfCase::Const } else { case };
        for name in series {
            pre_tests.push(adf(ds, name, kmax, pre_case, test_down)?);
        }
    }

    // Resolve columns and find the joint sample.
    let mut value_cols = Vec::new();
    for name in series {
        let s = ds
            .series(name)
            .ok_or_else(|| UnitRootError::UnknownSeries(name.clone()))?;
        value_cols.push(s.values());
    }
    let range = common_sample(&value_cols).map_err(|_| UnitRootError::EmptySample)?;

    let rows = range.len();
    let mut cols: Vec<Vec<f64>> = Vec::new();
    let mut terms: Vec<Term> = Vec::new();
    if case.n_deterministic() >= 1 {
        cols.push(alloc::vec![1.0; rows]);
        terms.push(Term::Intercept);
    }
    for (name, col) in series.iter().skip(1).zip(value_cols.iter().skip(1)) {
        cols.push(range.iter0().map(|i| col[i].unwrap()).collect());
        terms.push(Term::var(name.clone()));
    }
    if case == AdfCase::ConstTrend {
        cols.push(range.iter0().map(|i| (i + 1) as f64).collect());
        terms.push(Term::var("time"));
    }
    let y: Vec<f64> = range.iter0().map(|i| value_cols[0][i].unwrap()).collect();

    let stage1 = regress::fit_prepared(
        series[0].clone(),
        terms,
        Matrix::from_columns(&cols),
        y,
        range,
        ds.label(range.first),
        ds.label(range.last),
    )?;

    let stage2 = adf_values(
        &stage1.residuals,
        "uhat",
        kmax,
        case,
        AdfCase::None,
        test_down,
        series.len(),
        stage1.first_label,
    )?;

    let cointegrated = stage2.pvalue < 0.05;
    Ok(CointResult {
        pre_tests,
        stage1,
        case,
        stage2,
        cointegrated,
        kmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Series;

    #[test]
    fn adf_on_linear_trend_with_zero_lags_is_singular() {
        // d(time) is constant, so const + trend + level of `time` collide.
        let mut ds = Dataset::new(30, 1, 1);
        ds.gen_time().unwrap();
        let err = adf(&ds, "time", 0, AdfCase::ConstTrend, TestDown::Fixed).unwrap_err();
        assert!(
            matches!(err, UnitRootError::Regress(RegressError::Singular { .. })),
            "got {err:?}"
        );
    }

    #[test]
    fn kmax_too_large_is_reported() {
        let mut ds = Dataset::new(12, 1, 1);
        let mut rng = crate::simulate::Rng::new(4);
        let vals = crate::simulate::normal_series(&mut rng, 12);
        ds.add_series(Series::from_values("x", &vals)).unwrap();
        assert!(matches!(
            adf(&ds, "x", 9, AdfCase::Const, TestDown::Maic),
            Err(UnitRootError::KmaxTooLarge { .. })
        ));
    }

    #[test]
    fn coint_needs_two_series() {
        let ds = Dataset::new(10, 1, 1);
        assert!(matches!(
            coint(&ds, 2, &["a".into()], AdfCase::Const, TestDown::Fixed, true),
            Err(UnitRootError::NeedTwoSeries)
        ));
    }

    #[test]
    fn coint_of_identical_series_degenerates() {
        // Stage-1 residuals are exactly zero; stage 2 must report singularity.
        let mut rng = crate::simulate::Rng::new(8);
        let walk = crate::simulate::random_walk(&mut rng, 60, 0.0);
        let mut ds = Dataset::new(60, 1, 1);
        ds.add_series(Series::from_values("a", &walk)).unwrap();
        ds.add_series(Series::from_values("b", &walk)).unwrap();
        let err = coint(
            &ds,
            4,
            &["a".into(), "b".into()],
            AdfCase::Const,
            TestDown::Maic,
            true,
        )
        .unwrap_err();
        assert!(matches!(err, UnitRootError::Regress(_)), "got {err:?}");
    }

    #[test]
    fn fixed_mode_uses_kmax_exactly() {
        let mut rng = crate::simulate::Rng::new(21);
        let walk = crate::simulate::random_walk(&mut rng, 80, 0.0);
        let mut ds = Dataset::new(80, 1, 1);
        ds.add_series(Series::from_values("w", &walk)).unwrap();
        let r = adf(&ds, "w", 3, AdfCase::Const, TestDown::Fixed).unwrap();
        assert_eq!(r.chosen_k, 3);
        assert!(r.mic_trace.is_empty());
        // const + level + 3 diffs
        assert_eq!(r.regression.k, 5);
        assert_eq!(r.regression.t_used, 80 - 4);
    }

    #[test]
    fn difference_option_tests_the_differenced_series() {
        // `adf k x --difference` runs the test on d_x; going through the
        // session matches calling the engine on the difference directly.
        let mut rng = crate::simulate::Rng::new(12);
        let walk = crate::simulate::random_walk(&mut rng, 90, 0.2);
        let mut ds = Dataset::new(90, 1, 1);
        ds.add_series(Series::from_values("x", &walk)).unwrap();
        let d = ds.series("x").unwrap().diff().unwrap();
        let values: Vec<f64> = (2..=90).map(|t| d.get(t).unwrap()).collect();
        let direct = adf_values(
            &values,
            "d_x",
            4,
            AdfCase::Const,
            AdfCase::Const,
            TestDown::Maic,
            1,
            2,
        )
        .unwrap();
        // Differences of a drifting walk are stationary noise: strongly
        // negative tau.
        assert!(direct.tau < -3.0, "tau {}", direct.tau);
    }

    #[test]
    fn tau_equals_regression_t_ratio() {
        let mut rng = crate::simulate::Rng::new(33);
        let walk = crate::simulate::random_walk(&mut rng, 100, 0.0);
        let mut ds = Dataset::new(100, 1, 1);
        ds.add_series(Series::from_values("w", &walk)).unwrap();
        let r = adf(&ds, "w", 5, AdfCase::Const, TestDown::Maic).unwrap();
        assert_eq!(r.tau, r.regression.tstat[r.level_term_index]);
        assert_eq!(r.delta, r.regression.beta[r.level_term_index]);
        assert_eq!(r.mic_trace.len(), 5);
        assert!(r.chosen_k >= 1 && r.chosen_k <= 5);
    }
}
