//! Gretl-style text rendering of models and tests, plus gnuplot plot-file
//! contents. Labels are Spanish as in gretl's es locale but ASCII-folded
//! (no accents), and all numbers use `.` decimals.

pub mod fmt;
pub mod plot;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagnostics::{BgResult, Correlogram};
use crate::regress::{OlsModel, SelectionRow};
use crate::unitroot::{AdfCase, AdfResult, CointResult};
use fmt::{fmt_coef, fmt_f, fmt_g, fmt_pval, fmt_t, stars};

fn coef_row(name: &str, b: f64, se: f64, t: f64, p: f64, star: &str) -> String {
    format!(
        "  {:<10} {:>13} {:>14} {:>14} {:>10}  {}\n",
        name,
        fmt_coef(b),
        fmt_coef(se),
        fmt_t(t),
        fmt_pval(p),
        star
    )
}

fn coef_table_header() -> &'static str {
    "             Coeficiente   Desv. Tipica   Estadistico t   Valor p\n  \
     -----------------------------------------------------------------\n"
}

fn footer_pair(l1: &str, v1: &str, l2: &str, v2: &str) -> String {
    format!("{:<23} {:>9}   {:<23} {:>9}\n", l1, v1, l2, v2)
}

/// Full model block: header, coefficient table, statistic footer.
pub fn render_model(model: &OlsModel, title: &str) -> String {
    render_model_opts(model, title, true)
}

/// `include_f = false` reproduces the cointegrating-regression block, which
/// omits the F row.
pub fn render_model_opts(model: &OlsModel, title: &str, include_f: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{}: MCO, usando las observaciones {}-{} (T = {})\n",
        title, model.first_label, model.last_label, model.t_used
    ));
    out.push_str(&format!("Variable dependiente: {}\n\n", model.dependent));
    out.push_str(coef_table_header());
    let names = model.term_names();
    for i in 0..model.k {
        out.push_str(&coef_row(
            &names[i],
            model.beta[i],
            model.se[i],
            model.tstat[i],
            model.pval[i],
            stars(model.pval[i]),
        ));
    }
    out.push('\n');
    out.push_str(&footer_pair(
        "Media de la vble. dep.",
        &fmt_g(model.mean_y, 7),
        "D.T. de la vble. dep.",
        &fmt_g(model.sd_y, 7),
    ));
    out.push_str(&footer_pair(
        "Suma de cuad. residuos",
        &fmt_g(model.ssr, 7),
        "D.T. de la regresion",
        &fmt_g(model.ser, 7),
    ));
    out.push_str(&footer_pair(
        "R-cuadrado",
        &fmt_f(model.r2, 6),
        "R-cuadrado corregido",
        &fmt_f(model.adj_r2, 6),
    ));
    if include_f {
        if let Some((f, df1, df2, pf)) = model.f_test {
            out.push_str(&footer_pair(
                &format!("F({}, {})", df1, df2),
                &fmt_g(f, 7),
                "Valor p (de F)",
                &(if pf != 0.0 && pf < 1e-4 {
                    fmt::sci(pf, 3)
                } else {
                    fmt_f(pf, 6)
                }),
            ));
        }
    }
    out.push_str(&footer_pair(
        "Log-verosimilitud",
        &fmt_g(model.loglik, 7),
        "Criterio de Akaike",
        &fmt_g(model.aic, 7),
    ));
    out.push_str(&footer_pair(
        "Criterio de Schwarz",
        &fmt_g(model.bic, 7),
        "Crit. de Hannan-Quinn",
        &fmt_g(model.hqc, 7),
    ));
    match model.durbin_h {
        Some(h) => out.push_str(&footer_pair(
            "rho",
            &fmt_f(model.rho, 6),
            "h de Durbin",
            &fmt_f(h, 6),
        )),
        None => out.push_str(&footer_pair(
            "rho",
            &fmt_f(model.rho, 6),
            "Durbin-Watson",
            &fmt_f(model.dw, 6),
        )),
    }

    // Highest-p note, printed for models with three or more slope terms.
    let slope_idx: Vec<usize> = model
        .terms
        .iter()
        .enumerate()
        .filter(|(_, t)| !matches!(t, crate::regress::Term::Intercept))
        .map(|(i, _)| i)
        .collect();
    if slope_idx.len() >= 3 {
        if let Some(&worst) = slope_idx
            .iter()
            .max_by(|&&a, &&b| model.pval[a].partial_cmp(&model.pval[b]).unwrap())
        {
            if model.pval[worst] > 0.10 {
                out.push_str(&format!(
                    "\nSin considerar la constante, el valor p mas alto fue el de la variable ({})\n",
                    names[worst]
                ));
            }
        }
    }
    out
}

fn adf_case_lines(case: AdfCase) -> &'static str {
    match case {
        AdfCase::None => "   modelo: (1-L)y = (a-1)*y(-1) + ... + e\n",
        AdfCase::Const => {
            "   contraste con constante \n   modelo: (1-L)y = b0 + (a-1)*y(-1) + ... + e\n"
        }
        AdfCase::ConstTrend => {
            "   con constante y tendencia \n   modelo: (1-L)y = b0 + b1*t + (a-1)*y(-1) + ... + e\n"
        }
    }
}

/// ADF block: MIC trace, test summary and the augmented regression.
pub fn render_adf(result: &AdfResult) -> String {
    let mut out = String::new();
    for (k, mic) in &result.mic_trace {
        out.push_str(&format!("MIC = {} for k = {:02}\n", fmt_g(*mic, 6), k));
    }
    if !result.mic_trace.is_empty() {
        out.push('\n');
    }
    out.push_str(&format!(
        "Contraste aumentado de Dickey-Fuller para {}\n",
        result.series
    ));
    if result.chosen_k == 1 {
        out.push_str(&format!("incluyendo un retardo de (1-L){}\n", result.series));
    } else {
        out.push_str(&format!(
            "incluyendo {} retardos de (1-L){}\n",
            result.chosen_k, result.series
        ));
    }
    if result.test_down {
        out.push_str(&format!(
            "(el maximo fue {}, el criterio AIC modificado)\n",
            result.kmax
        ));
    }
    out.push_str(&format!("tamano muestral {}\n", result.regression.t_used));
    out.push_str("hipotesis nula de raiz unitaria: a = 1\n\n");
    out.push_str(adf_case_lines(result.reg_case));
    out.push_str(&format!(
        "   Coef. de autocorrelacion de primer orden de e: {}\n",
        fmt_f(result.rho1, 3)
    ));
    out.push_str(&format!(
        "   valor estimado de (a - 1): {}\n",
        fmt_g(result.delta, 6)
    ));
    out.push_str(&format!(
        "   Estadistico de contraste: tau_{}({}) = {}\n",
        result.case.suffix(),
        result.n_vars,
        fmt_g(result.tau, 6)
    ));
    out.push_str(&format!("   valor p asintotico {}\n\n", fmt_g(result.pvalue, 4)));

    out.push_str("Regresion aumentada de Dickey-Fuller\n");
    out.push_str(&format!(
        "MCO, usando las observaciones {}-{} (T = {})\n",
        result.regression.first_label, result.regression.last_label, result.regression.t_used
    ));
    out.push_str(&format!(
        "Variable dependiente: {}\n\n",
        result.regression.dependent
    ));
    out.push_str(coef_table_header());
    let names = result.regression.term_names();
    for i in 0..result.regression.k {
        // The lagged level row carries the asymptotic p-value, not the
        // Student-t one, and no stars.
        let (p, star) = if i == result.level_term_index {
            (result.pvalue, "")
        } else {
            (result.regression.pval[i], stars(result.regression.pval[i]))
        };
        out.push_str(&coef_row(
            &names[i],
            result.regression.beta[i],
            result.regression.se[i],
            result.regression.tstat[i],
            p,
            star,
        ));
    }
    out.push_str(&format!(
        "\n  AIC: {}   BIC: {}   HQC: {}\n",
        fmt_g(result.regression.aic, 6),
        fmt_g(result.regression.bic, 6),
        fmt_g(result.regression.hqc, 6)
    ));
    out
}

/// Two-step Engle-Granger block.
pub fn render_coint(result: &CointResult) -> String {
    let mut out = String::new();
    for (i, pre) in result.pre_tests.iter().enumerate() {
        out.push_str(&format!(
            "Paso {}: contraste de raiz unitaria en {}\n\n",
            i + 1,
            pre.series
        ));
        out.push_str(&render_adf(pre));
        out.push('\n');
    }
    out.push_str("Etapa 1: regresion cointegrante\n\n");
    out.push_str("Regresion cointegrante - \n");
    out.push_str(&render_model_opts(&result.stage1, "MCO", false).replacen("MCO: ", "", 1));
    out.push('\n');
    out.push_str("Etapa 2: contrastando la existencia de una raiz unitaria en uhat\n\n");
    out.push_str(&render_adf(&result.stage2));
    out.push('\n');
    out.push_str("Hay evidencia de una relacion cointegrante si:\n");
    out.push_str("(a) La hipotesis de existencia de raiz unitaria no se rechaza para las variables individuales.\n");
    out.push_str("(b) La hipotesis de existencia de raiz unitaria se rechaza para los residuos (uhat) de la regresion cointegrante.\n");
    out
}

/// Breusch-Godfrey block with the auxiliary regression table.
pub fn render_bg(bg: &BgResult) -> String {
    let mut out = String::new();
    if bg.order == 1 {
        out.push_str("Contraste Breusch-Godfrey de autocorrelacion de primer orden\n");
    } else {
        out.push_str(&format!(
            "Contraste Breusch-Godfrey de autocorrelacion hasta el orden {}\n",
            bg.order
        ));
    }
    out.push_str(&format!(
        "MCO, usando las observaciones {}-{} (T = {})\n",
        bg.first_label, bg.last_label, bg.t_used
    ));
    out.push_str("Variable dependiente: uhat\n\n");
    out.push_str(coef_table_header());
    for i in 0..bg.beta.len() {
        out.push_str(&coef_row(
            &bg.coef_names[i],
            bg.beta[i],
            bg.se[i],
            bg.tstat[i],
            bg.pval[i],
            "",
        ));
    }
    out.push_str(&format!("\n  R-cuadrado = {}\n", fmt_f(bg.aux_r2, 6)));
    out.push_str(&format!(
        "\nEstadistico de contraste: LMF = {},\ncon valor p  = P(F({},{}) > {}) = {}\n",
        fmt_f(bg.lmf, 6),
        bg.df_f.0,
        bg.df_f.1,
        fmt_g(bg.lmf, 6),
        fmt_g(bg.p_lmf, 3)
    ));
    out.push_str(&format!(
        "\nEstadistico alternativo: TR^2 = {},\ncon valor p  = P(Chi-cuadrado({}) > {}) = {}\n",
        fmt_f(bg.tr2, 6),
        bg.order,
        fmt_g(bg.tr2, 6),
        fmt_g(bg.p_tr2, 3)
    ));
    out.push_str(&format!(
        "\nLjung-Box Q' = {},\ncon valor p  = P(Chi-cuadrado({}) > {}) = {}\n",
        fmt_g(bg.ljung_box, 6),
        bg.order,
        fmt_g(bg.ljung_box, 6),
        fmt_g(bg.p_lb, 3)
    ));
    out
}

/// Correlogram table: lag, ACF, PACF, cumulative Ljung-Box Q and its p-value.
pub fn render_corrgm(c: &Correlogram) -> String {
    let mut out = String::new();
    out.push_str(&format!("Funcion de autocorrelacion para {}\n", c.series));
    out.push_str("***, ** y * indica significatividad a los niveles del 1%, 5% y 10%\n");
    out.push_str("utilizando el error estandar 1/T^0.5\n\n");
    out.push_str("  RETARDO      FAC          FACP        Estad-Q. [valor p]\n\n");
    let t_sqrt = crate::math::sqrt(c.t_used as f64);
    let star_of = |r: f64| {
        let z = crate::math::abs(r) * t_sqrt;
        if z > 2.5758 {
            "***"
        } else if z > 1.9600 {
            "** "
        } else if z > 1.6449 {
            "*  "
        } else {
            "   "
        }
    };
    for i in 0..c.max_lag {
        out.push_str(&format!(
            "{:>6}   {:>8}  {} {:>8} {}  {:>10}  [{}]\n",
            i + 1,
            fmt_f(c.acf[i], 4),
            star_of(c.acf[i]),
            fmt_f(c.pacf[i], 4),
            star_of(c.pacf[i]),
            fmt_g(c.q[i], 6),
            fmt_f(c.q_pval[i], 3)
        ));
    }
    out
}

/// Lag-order selection table.
pub fn render_selection_table(rows: &[SelectionRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<34} {:>15} {:>10} {:>10} {:>10}\n",
        "Ecuacion", "Autocorrelacion", "R2-corregido", "AIC", "Schwarz"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<34} {:>15} {:>10} {:>10} {:>10}\n",
            r.label,
            fmt_g(r.bg_pvalue, 3),
            fmt_f(r.adj_r2, 6),
            fmt_g(r.aic, 7),
            fmt_g(r.bic, 7)
        ));
    }
    out
}
