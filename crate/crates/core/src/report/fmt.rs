//! Number formatting for the text reports: a `%g`-style significant-digit
//! formatter (scientific for |x| >= 1e5 or < 1e-4), fixed-decimal helpers and
//! significance stars. Output always uses `.` as the decimal separator.

use alloc::format;
use alloc::string::{String, ToString};

use crate::math;

/// Shortest exact representation, used by the AST pretty-printer.
pub fn fmt_number_repr(v: f64) -> String {
    format!("{}", v)
}

/// `sig` significant digits; scientific notation outside [1e-4, 1e5).
pub fn fmt_g(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{}", x);
    }
    let ax = math::abs(x);
    let exp10 = math::floor(math::log10(ax)) as i32;
    if !(-4..5).contains(&exp10) {
        let mantissa = x / math::pow(10.0, exp10 as f64);
        let digits = sig.saturating_sub(1);
        let mut m = format!("{:.*}", digits, mantissa);
        // Rounding can push the mantissa to 10.0; renormalise.
        let (m2, exp10) = if m.starts_with("10.") || m == "10" || m.starts_with("-10.") || m == "-10" {
            (format!("{:.*}", digits, mantissa / 10.0), exp10 + 1)
        } else {
            (m.clone(), exp10)
        };
        m = trim_zeros(&m2);
        let sign = if exp10 < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", m, sign, exp10.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp10).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    }
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

/// Fixed decimals (footer statistics such as R-squared print with 6).
pub fn fmt_f(x: f64, decimals: usize) -> String {
    format!("{:.*}", decimals, x)
}

/// Coefficients and standard errors: 6 significant digits.
pub fn fmt_coef(x: f64) -> String {
    fmt_g(x, 6)
}

/// t-ratios: 4 significant digits.
pub fn fmt_t(x: f64) -> String {
    fmt_g(x, 4)
}

/// Coefficient-table p-values: four decimals, scientific below 1e-4.
pub fn fmt_pval(p: f64) -> String {
    if p != 0.0 && p < 1e-4 {
        sci(p, 3)
    } else {
        format!("{:.4}", p)
    }
}

/// Plain scientific with `sig` significant digits (keeps trailing zeros).
pub fn sci(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let ax = math::abs(x);
    let mut exp10 = math::floor(math::log10(ax)) as i32;
    let mut mantissa = x / math::pow(10.0, exp10 as f64);
    let digits = sig.saturating_sub(1);
    let rounded = format!("{:.*}", digits, mantissa);
    if rounded.starts_with("10.") || rounded == "10" || rounded.starts_with("-10") {
        exp10 += 1;
        mantissa /= 10.0;
    }
    let sign = if exp10 < 0 { '-' } else { '+' };
    format!("{:.*}e{}{:02}", digits, mantissa, sign, exp10.abs())
}

/// Significance stars at the 1/5/10 per cent levels.
pub fn stars(p: f64) -> &'static str {
    if p < 0.01 {
        "***"
    } else if p < 0.05 {
        "**"
    } else if p < 0.10 {
        "*"
    } else {
        ""
    }
}
