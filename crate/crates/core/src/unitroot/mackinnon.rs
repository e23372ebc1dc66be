//! Asymptotic p-values for Dickey-Fuller tau statistics.
//!
//! Lookup is monotone piecewise-linear interpolation in probability between
//! the tabulated quantiles of the asymptotic tau distributions (cases
//! nc/c/ct, 1..=4 variables), clamped to `[0.0001, 0.9999]`. A statistic
//! that lands exactly on a tabulated quantile returns that quantile's
//! probability exactly, so the embedded 5% critical value maps to 0.05.

use super::df_tables::{P_GRID, TAU_QUANTILES};
use super::{AdfCase, UnitRootError};

/// Largest number of variables covered by the embedded tables.
pub const MAX_VARS: usize = 4;

pub(crate) fn case_index(case: AdfCase) -> usize {
    match case {
        AdfCase::None => 0,
        AdfCase::Const => 1,
        AdfCase::ConstTrend => 2,
    }
}

/// Tabulated quantiles for a case / variable-count pair.
pub fn quantiles(case: AdfCase, n_vars: usize) -> Result<&'static [f64], UnitRootError> {
    if !(1..=MAX_VARS).contains(&n_vars) {
        return Err(UnitRootError::UnsupportedNVars(n_vars));
    }
    Ok(&TAU_QUANTILES[case_index(case)][n_vars - 1])
}

/// Tabulated critical value at probability `p` (must be on the grid).
pub fn critical_value(p: f64, case: AdfCase, n_vars: usize) -> Result<f64, UnitRootError> {
    let q = quantiles(case, n_vars)?;
    for (i, &gp) in P_GRID.iter().enumerate() {
        if (gp - p).abs() < 1e-12 {
            return Ok(q[i]);
        }
    }
    Err(UnitRootError::UnsupportedNVars(n_vars))
}

/// Asymptotic `P(tau_dist < tau)` for the Dickey-Fuller distribution of the
/// given case and number of variables.
pub fn pvalue(tau: f64, case: AdfCase, n_vars: usize) -> Result<f64, UnitRootError> {
    let q = quantiles(case, n_vars)?;
    let lo = P_GRID[0];
    let hi = P_GRID[P_GRID.len() - 1];
    if tau <= q[0] {
        return Ok(lo);
    }
    if tau >= q[q.len() - 1] {
        return Ok(hi);
    }
    // Binary search for the bracketing pair.
    let mut a = 0;
    let mut b = q.len() - 1;
    while b - a > 1 {
        let mid = (a + b) / 2;
        if q[mid] <= tau {
            a = mid;
        } else {
            b = mid;
        }
    }
    if tau == q[a] {
        return Ok(P_GRID[a]);
    }
    let frac = (tau - q[a]) / (q[b] - q[a]);
    Ok(P_GRID[a] + frac * (P_GRID[b] - P_GRID[a]))
}
