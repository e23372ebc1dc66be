//! OLS estimation with the complete summary-statistic block: coefficient
//! table, R-squared family, F test, log likelihood with the three information
//! criteria, first-order residual autocorrelation and Durbin-Watson (or
//! Durbin's h when a lagged dependent variable sits among the regressors).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::dataset::{common_sample, Dataset, Obs, SampleRange};
use crate::linalg::{self, special, Matrix};
use crate::math;

/// One design-matrix column: the intercept or a (possibly lagged) series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Intercept,
    Var { name: String, lag: usize },
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var {
            name: name.into(),
            lag: 0,
        }
    }

    pub fn lagged(name: impl Into<String>, lag: usize) -> Self {
        Term::Var {
            name: name.into(),
            lag,
        }
    }

    /// Display name in the coefficient table: `const`, `d_y`, `d_y_1`, ...
    pub fn display_name(&self) -> String {
        match self {
            Term::Intercept => "const".to_string(),
            Term::Var { name, lag: 0 } => name.clone(),
            Term::Var { name, lag } => format!("{}_{}", name, lag),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RegressError {
    UnknownSeries(String),
    NoRegressors,
    /// Effective sample too small after trimming: needs T > k.
    TooFewObservations { t: usize, k: usize },
    Singular { term: String },
    EmptySample,
    Dataset(crate::dataset::DatasetError),
}

impl fmt::Display for RegressError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegressError::UnknownSeries(name) => write!(f, "unknown series '{}'", name),
            RegressError::NoRegressors => write!(f, "no regressors given"),
            RegressError::TooFewObservations { t, k } => {
                write!(f, "{} observations for {} coefficients", t, k)
            }
            RegressError::Singular { term } => {
                write!(f, "singular design matrix: exact collinearity at '{}'", term)
            }
            RegressError::EmptySample => write!(f, "empty estimation sample"),
            RegressError::Dataset(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for RegressError {}

impl From<crate::dataset::DatasetError> for RegressError {
    fn from(e: crate::dataset::DatasetError) -> Self {
        RegressError::Dataset(e)
    }
}

/// Fitted OLS model with the full derived statistic block.
#[derive(Debug, Clone)]
pub struct OlsModel {
    pub dependent: String,
    pub terms: Vec<Term>,
    /// Sample range inside the dataset the model was estimated on.
    pub range: SampleRange,
    pub first_label: i64,
    pub last_label: i64,
    pub t_used: usize,
    pub k: usize,
    pub beta: Vec<f64>,
    pub se: Vec<f64>,
    pub tstat: Vec<f64>,
    pub pval: Vec<f64>,
    pub mean_y: f64,
    pub sd_y: f64,
    pub ssr: f64,
    pub ser: f64,
    pub r2: f64,
    pub adj_r2: f64,
    /// `(F, df1, df2, p)` for the all-slopes-zero test; absent with no slopes.
    pub f_test: Option<(f64, u32, u32, f64)>,
    pub loglik: f64,
    pub aic: f64,
    pub bic: f64,
    pub hqc: f64,
    /// Slope of the no-intercept regression of e_t on e_{t-1}.
    pub rho: f64,
    pub dw: f64,
    /// Durbin's h; present only when a lag of the dependent variable is a
    /// regressor and the radicand is positive.
    pub durbin_h: Option<f64>,
    pub has_intercept: bool,
    /// Design matrix, regressand, fitted values and residuals on the sample.
    pub design: Matrix,
    pub y: Vec<f64>,
    pub fitted: Vec<f64>,
    pub residuals: Vec<f64>,
}

impl OlsModel {
    pub fn term_names(&self) -> Vec<String> {
        self.terms.iter().map(|t| t.display_name()).collect()
    }

    /// Index of the first lag of the dependent variable, if any.
    pub fn lagged_dependent_index(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for (i, term) in self.terms.iter().enumerate() {
            if let Term::Var { name, lag } = term {
                if name == &self.dependent && *lag >= 1 && best.is_none_or(|(_, l)| *lag < l) {
                    best = Some((i, *lag));
                }
            }
        }
        best.map(|(i, _)| i)
    }
}

/// Resolves a term into a full-length value column.
fn resolve_column(ds: &Dataset, term: &Term) -> Result<Vec<Obs>, RegressError> {
    match term {
        Term::Intercept => Ok((0..ds.n_obs()).map(|_| Some(1.0)).collect()),
        Term::Var { name, lag } => {
            let s = ds
                .series(name)
                .ok_or_else(|| RegressError::UnknownSeries(name.clone()))?;
            if *lag == 0 {
                Ok(s.values().to_vec())
            } else {
                Ok(s.lag(*lag)?.values().to_vec())
            }
        }
    }
}

/// Estimates `dependent` on `terms` over the largest common sample, computing
/// the complete statistic block.
pub fn ols(ds: &Dataset, dependent: &str, terms: &[Term]) -> Result<OlsModel, RegressError> {
    if terms.is_empty() {
        return Err(RegressError::NoRegressors);
    }
    let dep_series = ds
        .series(dependent)
        .ok_or_else(|| RegressError::UnknownSeries(dependent.to_string()))?;
    let dep_col = dep_series.values().to_vec();
    let columns: Vec<Vec<Obs>> = terms
        .iter()
        .map(|t| resolve_column(ds, t))
        .collect::<Result<_, _>>()?;

    let mut all: Vec<&[Obs]> = Vec::with_capacity(columns.len() + 1);
    all.push(&dep_col);
    for c in &columns {
        all.push(c);
    }
    let range = common_sample(&all).map_err(|_| RegressError::EmptySample)?;

    let y: Vec<f64> = range.iter0().map(|i| dep_col[i].unwrap()).collect();
    let xcols: Vec<Vec<f64>> = columns
        .iter()
        .map(|c| range.iter0().map(|i| c[i].unwrap()).collect())
        .collect();
    let x = Matrix::from_columns(&xcols);

    fit_prepared(
        dependent.to_string(),
        terms.to_vec(),
        x,
        y,
        range,
        ds.label(range.first),
        ds.label(range.last),
    )
}

/// Core fit shared with the unit-root module, which builds its own design.
pub(crate) fn fit_prepared(
    dependent: String,
    terms: Vec<Term>,
    x: Matrix,
    y: Vec<f64>,
    range: SampleRange,
    first_label: i64,
    last_label: i64,
) -> Result<OlsModel, RegressError> {
    let t_used = x.rows();
    let k = x.cols();
    if t_used <= k {
        return Err(RegressError::TooFewObservations { t: t_used, k });
    }

    let fit = linalg::lstsq(&x, &y).map_err(|e| match e {
        linalg::LinalgError::Singular { column } => RegressError::Singular {
            term: terms
                .get(column)
                .map(|t| t.display_name())
                .unwrap_or_else(|| format!("column {}", column)),
        },
        linalg::LinalgError::TooFewRows { rows, cols } => {
            RegressError::TooFewObservations { t: rows, k: cols }
        }
        linalg::LinalgError::LengthMismatch { .. } => RegressError::EmptySample,
    })?;

    let tn = t_used as f64;
    let kn = k as f64;
    let ssr: f64 = fit.residuals.iter().map(|e| e * e).sum();
    let s2 = ssr / (tn - kn);
    let ser = math::sqrt(s2);

    let se: Vec<f64> = fit.xtx_inv_diag.iter().map(|d| math::sqrt(d * s2)).collect();
    let tstat: Vec<f64> = fit
        .beta
        .iter()
        .zip(&se)
        .map(|(b, s)| if *s > 0.0 { b / s } else { f64::INFINITY })
        .collect();
    let df_resid = (t_used - k) as u32;
    let pval: Vec<f64> = tstat
        .iter()
        .map(|&t| special::student_t_sf(t, df_resid))
        .collect();

    let mean_y = y.iter().sum::<f64>() / tn;
    let sd_y = if t_used > 1 {
        math::sqrt(y.iter().map(|v| (v - mean_y) * (v - mean_y)).sum::<f64>() / (tn - 1.0))
    } else {
        0.0
    };

    let has_intercept = terms.iter().any(|t| matches!(t, Term::Intercept));
    // Centered total sum of squares only when the model has an intercept.
    let tss = if has_intercept {
        y.iter().map(|v| (v - mean_y) * (v - mean_y)).sum::<f64>()
    } else {
        y.iter().map(|v| v * v).sum::<f64>()
    };
    let r2 = 1.0 - ssr / tss;
    let adj_r2 = 1.0 - (1.0 - r2) * (tn - 1.0) / (tn - kn);

    let n_slopes = k - usize::from(has_intercept);
    let f_test = if n_slopes >= 1 && (has_intercept || k >= 1) {
        let q = n_slopes as f64;
        let f = (r2 / q) / ((1.0 - r2) / (tn - kn));
        let p = special::f_sf(f, n_slopes as u32, df_resid);
        Some((f, n_slopes as u32, df_resid, p))
    } else {
        None
    };

    let loglik = -(tn / 2.0) * (1.0 + math::ln(2.0 * core::f64::consts::PI) + math::ln(ssr / tn));
    let aic = -2.0 * loglik + 2.0 * kn;
    let bic = -2.0 * loglik + kn * math::ln(tn);
    let hqc = -2.0 * loglik + 2.0 * kn * math::ln(math::ln(tn));

    let e = &fit.residuals;
    let mut num = 0.0;
    let mut den = 0.0;
    let mut dw_num = 0.0;
    for i in 1..e.len() {
        num += e[i] * e[i - 1];
        den += e[i - 1] * e[i - 1];
        dw_num += (e[i] - e[i - 1]) * (e[i] - e[i - 1]);
    }
    let rho = if den > 0.0 { num / den } else { 0.0 };
    let dw = if ssr > 0.0 { dw_num / ssr } else { 0.0 };

    let mut model = OlsModel {
        dependent,
        terms,
        range,
        first_label,
        last_label,
        t_used,
        k,
        beta: fit.beta,
        se,
        tstat,
        pval,
        mean_y,
        sd_y,
        ssr,
        ser,
        r2,
        adj_r2,
        f_test,
        loglik,
        aic,
        bic,
        hqc,
        rho,
        dw,
        durbin_h: None,
        has_intercept,
        design: x,
        y,
        fitted: fit.fitted,
        residuals: fit.residuals,
    };

    // Durbin's h when a lag of the dependent variable is a regressor:
    //   h = rho * sqrt(n / (1 - n * var(b_lag)))   with n = T - 1,
    // absent when the radicand is non-positive.
    if let Some(idx) = model.lagged_dependent_index() {
        let n = (model.t_used - 1) as f64;
        let var_b = model.se[idx] * model.se[idx];
        let radicand = 1.0 - n * var_b;
        if radicand > 0.0 {
            model.durbin_h = Some(model.rho * math::sqrt(n / radicand));
        }
    }

    Ok(model)
}

/// Row of the lag-order selection table.
#[derive(Debug, Clone, PartialEq)]
pub struct SelectionRow {
    pub label: String,
    pub bg_pvalue: f64,
    pub adj_r2: f64,
    pub aic: f64,
    pub bic: f64,
}

/// Summarises candidate models for lag-order selection: one row per model
/// with its autocorrelation (Breusch-Godfrey TR^2) p-value, adjusted
/// R-squared, AIC and Schwarz criterion.
pub fn model_selection_table(entries: &[(&OlsModel, f64)]) -> Vec<SelectionRow> {
    entries
        .iter()
        .map(|(model, bg_p)| {
            let rhs: Vec<String> = model
                .terms
                .iter()
                .map(|t| t.display_name())
                .collect();
            SelectionRow {
                label: format!("{} ~ {}", model.dependent, rhs.join(" ")),
                bg_pvalue: *bg_p,
                adj_r2: model.adj_r2,
                aic: model.aic,
                bic: model.bic,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Series;

    fn line_dataset() -> Dataset {
        // y = 2 + 3x exactly
        let mut ds = Dataset::new(6, 1, 1);
        ds.add_series(Series::from_values("x", &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]))
            .unwrap();
        ds.add_series(Series::from_values("yy", &[5.0, 8.0, 11.0, 14.0, 17.0, 20.0]))
            .unwrap();
        ds
    }

    #[test]
    fn exact_line_recovers_coefficients() {
        let ds = line_dataset();
        let m = ols(&ds, "yy", &[Term::Intercept, Term::var("x")]).unwrap();
        assert!((m.beta[0] - 2.0).abs() < 1e-12);
        assert!((m.beta[1] - 3.0).abs() < 1e-12);
        assert!(m.ssr < 1e-20);
        assert!((m.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn residuals_sum_to_zero_with_intercept() {
        let mut ds = line_dataset();
        // Perturb so residuals are non-trivial.
        ds.add_series(Series::from_values(
            "z",
            &[5.1, 7.9, 11.3, 13.8, 17.2, 19.7],
        ))
        .unwrap();
        let m = ols(&ds, "z", &[Term::Intercept, Term::var("x")]).unwrap();
        let sum: f64 = m.residuals.iter().sum();
        assert!(sum.abs() <= 1e-7 * m.t_used as f64 * m.ser);
    }

    #[test]
    fn trimming_uses_common_sample() {
        let mut ds = Dataset::new(5, 1, 2000);
        ds.add_series(Series::new(
            "a",
            alloc::vec![None, Some(2.0), Some(3.0), Some(4.0), Some(5.0)],
        ))
        .unwrap();
        ds.add_series(Series::from_values("b", &[1.0, 1.0, 2.0, 2.0, 3.0]))
            .unwrap();
        let m = ols(&ds, "a", &[Term::Intercept, Term::var("b")]).unwrap();
        assert_eq!(m.t_used, 4);
        assert_eq!(m.first_label, 2001);
        assert_eq!(m.last_label, 2004);
    }

    #[test]
    fn unknown_series_is_reported() {
        let ds = line_dataset();
        assert_eq!(
            ols(&ds, "nope", &[Term::Intercept]).unwrap_err(),
            RegressError::UnknownSeries("nope".into())
        );
    }

    #[test]
    fn collinear_terms_name_the_culprit() {
        let mut ds = line_dataset();
        ds.add_series(Series::from_values("x2", &[2.0, 4.0, 6.0, 8.0, 10.0, 12.0]))
            .unwrap();
        let err = ols(
            &ds,
            "yy",
            &[Term::Intercept, Term::var("x"), Term::var("x2")],
        )
        .unwrap_err();
        assert_eq!(err, RegressError::Singular { term: "x2".into() });
    }

    #[test]
    fn too_few_observations() {
        let mut ds = Dataset::new(2, 1, 1);
        ds.add_series(Series::from_values("a", &[1.0, 2.0])).unwrap();
        ds.add_series(Series::from_values("b", &[2.0, 1.0])).unwrap();
        let err = ols(&ds, "a", &[Term::Intercept, Term::var("b")]).unwrap_err();
        assert!(matches!(err, RegressError::TooFewObservations { .. }));
    }

    #[test]
    fn dropping_a_regressor_never_raises_r2() {
        let mut ds = line_dataset();
        ds.add_series(Series::from_values(
            "w",
            &[0.3, -0.2, 0.9, 0.1, -0.5, 0.4],
        ))
        .unwrap();
        ds.add_series(Series::from_values(
            "z",
            &[5.1, 7.9, 11.3, 13.8, 17.2, 19.7],
        ))
        .unwrap();
        let full = ols(
            &ds,
            "z",
            &[Term::Intercept, Term::var("x"), Term::var("w")],
        )
        .unwrap();
        let small = ols(&ds, "z", &[Term::Intercept, Term::var("x")]).unwrap();
        assert!(small.r2 <= full.r2 + 1e-12);
    }

    #[test]
    fn fitted_plus_residuals_reproduce_regressand() {
        let ds = line_dataset();
        let m = ols(&ds, "yy", &[Term::Intercept, Term::var("x")]).unwrap();
        for i in 0..m.t_used {
            assert!((m.fitted[i] + m.residuals[i] - m.y[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn selection_table_has_one_row_per_model() {
        let ds = line_dataset();
        let m = ols(&ds, "yy", &[Term::Intercept, Term::var("x")]).unwrap();
        let rows = model_selection_table(&[(&m, 0.5)]);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].bg_pvalue, 0.5);
        assert_eq!(rows[0].aic, m.aic);
    }
}
