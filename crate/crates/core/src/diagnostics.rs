//! Residual autocorrelation diagnostics: the Breusch-Godfrey LM test (F and
//! TR^2 forms), Ljung-Box portmanteau statistic, and ACF/PACF correlograms.
//!
//! References: Breusch (1978), Godfrey (1978); Ljung & Box (1979).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{self, special, Matrix};
use crate::math;
use crate::regress::OlsModel;

#[derive(Debug, Clone, PartialEq)]
pub enum DiagError {
    /// Order must satisfy 1 <= p and T - k - p > 0.
    BadOrder { order: usize, t: usize, k: usize },
    ZeroResidualVariance,
    ZeroVariance(String),
    LagTooLarge { lag: usize, t: usize },
    Singular,
}

impl fmt::Display for DiagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagError::BadOrder { order, t, k } => write!(
                f,
                "autocorrelation order {} invalid for T = {}, k = {}",
                order, t, k
            ),
            DiagError::ZeroResidualVariance => write!(f, "zero residual variance"),
            DiagError::ZeroVariance(name) => {
                write!(f, "series '{}' has zero variance", name)
            }
            DiagError::LagTooLarge { lag, t } => {
                write!(f, "maximum lag {} out of range for {} observations", lag, t)
            }
            DiagError::Singular => write!(f, "singular auxiliary regression"),
        }
    }
}

impl core::error::Error for DiagError {}

/// Breusch-Godfrey test result: auxiliary regression of the residuals on the
/// original regressors plus `order` lagged residuals, with LMF, TR^2 and the
/// Ljung-Box Q' computed on the model's own residuals.
#[derive(Debug, Clone)]
pub struct BgResult {
    pub order: usize,
    pub t_used: usize,
    pub first_label: i64,
    pub last_label: i64,
    pub coef_names: Vec<String>,
    pub beta: Vec<f64>,
    pub se: Vec<f64>,
    pub tstat: Vec<f64>,
    pub pval: Vec<f64>,
    pub aux_r2: f64,
    pub lmf: f64,
    pub p_lmf: f64,
    pub df_f: (u32, u32),
    pub tr2: f64,
    pub p_tr2: f64,
    pub ljung_box: f64,
    pub p_lb: f64,
}

/// LM test for serial correlation up to `order` in the residuals of `model`.
///
/// Pre-sample lagged residuals are set to zero, which keeps the auxiliary
/// sample at the model's full T.
pub fn breusch_godfrey(model: &OlsModel, order: usize) -> Result<BgResult, DiagError> {
    let t = model.t_used;
    let k = model.k;
    if order == 0 || t <= k + order {
        return Err(DiagError::BadOrder { order, t, k });
    }
    let e = &model.residuals;
    let mean_e = e.iter().sum::<f64>() / t as f64;
    let tss: f64 = e.iter().map(|v| (v - mean_e) * (v - mean_e)).sum();
    // Exact fits leave residuals at rounding-noise level; treat them as zero
    // relative to the regressand's scale.
    let y_scale = model.y.iter().fold(1.0_f64, |m, v| m.max(math::abs(*v)));
    if tss <= t as f64 * (1e-12 * y_scale) * (1e-12 * y_scale) {
        return Err(DiagError::ZeroResidualVariance);
    }

    // Augmented design: original columns, then zero-padded lagged residuals.
    let cols_total = k + order;
    let mut cols: Vec<Vec<f64>> = (0..k).map(|j| model.design.column(j)).collect();
    for lag in 1..=order {
        let mut c = vec![0.0; t];
        c[lag..t].copy_from_slice(&e[..t - lag]);
        cols.push(c);
    }
    let x_aug = Matrix::from_columns(&cols);
    let fit = linalg::lstsq(&x_aug, e).map_err(|_| DiagError::Singular)?;

    let ssr_aux: f64 = fit.residuals.iter().map(|v| v * v).sum();
    let aux_r2 = 1.0 - ssr_aux / tss;

    let tn = t as f64;
    let p = order as f64;
    let df2 = (t - k - order) as u32;
    let lmf = (aux_r2 / p) / ((1.0 - aux_r2) / df2 as f64);
    let p_lmf = special::f_sf(lmf, order as u32, df2);
    let tr2 = tn * aux_r2;
    let p_tr2 = special::chisq_sf(tr2, order as u32);

    let acf_e = acf(e, order)?;
    let mut q = 0.0;
    for (j, r) in acf_e.iter().enumerate() {
        let lag = (j + 1) as f64;
        q += r * r / (tn - lag);
    }
    let ljung = tn * (tn + 2.0) * q;
    let p_lb = special::chisq_sf(ljung, order as u32);

    let s2 = ssr_aux / (t - cols_total) as f64;
    let se: Vec<f64> = fit
        .xtx_inv_diag
        .iter()
        .map(|d| math::sqrt(d * s2))
        .collect();
    let tstat: Vec<f64> = fit.beta.iter().zip(&se).map(|(b, s)| b / s).collect();
    let pv: Vec<f64> = tstat
        .iter()
        .map(|&tv| special::student_t_sf(tv, (t - cols_total) as u32))
        .collect();

    let mut coef_names = model.term_names();
    for lag in 1..=order {
        coef_names.push(format!("uhat_{}", lag));
    }

    Ok(BgResult {
        order,
        t_used: t,
        first_label: model.first_label,
        last_label: model.last_label,
        coef_names,
        beta: fit.beta,
        se,
        tstat,
        pval: pv,
        aux_r2,
        lmf,
        p_lmf,
        df_f: (order as u32, df2),
        tr2,
        p_tr2,
        ljung_box: ljung,
        p_lb,
    })
}

/// Sample autocorrelations r_1..r_m with the common-denominator estimator
/// `r_j = sum_{t>j} (x_t - xbar)(x_{t-j} - xbar) / sum (x_t - xbar)^2`.
pub fn acf(values: &[f64], max_lag: usize) -> Result<Vec<f64>, DiagError> {
    let t = values.len();
    if max_lag >= t {
        return Err(DiagError::LagTooLarge { lag: max_lag, t });
    }
    let mean = values.iter().sum::<f64>() / t as f64;
    let denom: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    if denom <= 0.0 {
        return Err(DiagError::ZeroVariance(String::new()));
    }
    let mut out = Vec::with_capacity(max_lag);
    for j in 1..=max_lag {
        let mut num = 0.0;
        for i in j..t {
            num += (values[i] - mean) * (values[i - j] - mean);
        }
        out.push(num / denom);
    }
    Ok(out)
}

/// Partial autocorrelations via the Durbin-Levinson recursion on the ACF.
pub fn pacf_from_acf(acf: &[f64]) -> Vec<f64> {
    let m = acf.len();
    let mut pacf = Vec::with_capacity(m);
    let mut phi_prev: Vec<f64> = Vec::new();
    for k in 1..=m {
        let phi_kk = if k == 1 {
            acf[0]
        } else {
            let mut num = acf[k - 1];
            let mut den = 1.0;
            for (j, &p) in phi_prev.iter().enumerate() {
                num -= p * acf[k - 2 - j];
                den -= p * acf[j];
            }
            if den == 0.0 {
                0.0
            } else {
                num / den
            }
        };
        let mut phi_new = vec![0.0; k];
        phi_new[k - 1] = phi_kk;
        for j in 0..k - 1 {
            phi_new[j] = phi_prev[j] - phi_kk * phi_prev[k - 2 - j];
        }
        pacf.push(phi_kk);
        phi_prev = phi_new;
    }
    pacf
}

/// Ljung-Box statistics Q'_1..Q'_m and their p-values (df = lag).
pub fn ljung_box(values: &[f64], max_lag: usize) -> Result<(Vec<f64>, Vec<f64>), DiagError> {
    let acfs = acf(values, max_lag)?;
    let tn = values.len() as f64;
    let mut qs = Vec::with_capacity(max_lag);
    let mut ps = Vec::with_capacity(max_lag);
    let mut acc = 0.0;
    for (j, r) in acfs.iter().enumerate() {
        let lag = (j + 1) as f64;
        acc += r * r / (tn - lag);
        let q = tn * (tn + 2.0) * acc;
        qs.push(q);
        ps.push(special::chisq_sf(q, (j + 1) as u32));
    }
    Ok((qs, ps))
}

/// Correlogram of a series: ACF, PACF, the +-1.96/sqrt(T) confidence band and
/// cumulative Ljung-Box statistics per lag.
#[derive(Debug, Clone)]
pub struct Correlogram {
    pub series: String,
    pub t_used: usize,
    pub max_lag: usize,
    pub acf: Vec<f64>,
    pub pacf: Vec<f64>,
    pub band: f64,
    pub q: Vec<f64>,
    pub q_pval: Vec<f64>,
}

/// Builds the correlogram for already NA-trimmed values.
pub fn correlogram(name: &str, values: &[f64], max_lag: usize) -> Result<Correlogram, DiagError> {
    let acfs = acf(values, max_lag).map_err(|e| match e {
        DiagError::ZeroVariance(_) => DiagError::ZeroVariance(name.to_string()),
        other => other,
    })?;
    let pacf = pacf_from_acf(&acfs);
    let (q, q_pval) = ljung_box(values, max_lag)?;
    Ok(Correlogram {
        series: name.to_string(),
        t_used: values.len(),
        max_lag,
        acf: acfs,
        pacf,
        band: 1.96 / math::sqrt(values.len() as f64),
        q,
        q_pval,
    })
}
