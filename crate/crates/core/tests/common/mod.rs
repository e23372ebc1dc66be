//! Shared helpers for the integration tests: the Spain 1980-2012 fixture and
//! assertions that honour the precision of a printed reference value.

use okun_core::dataset::{csv, Dataset};

pub fn annex_dataset() -> Dataset {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/okun_spain.csv");
    let text = std::fs::read_to_string(path).expect("annex CSV fixture");
    let mut ds = csv::parse(&text, None).expect("fixture parses");
    ds.set_obs(1, 1980);
    ds.gen_time().expect("time series");
    ds
}

/// Half-ulp tolerance inferred from the printed form: `"92.72732"` allows
/// half of 1e-5, `"3.68e+22"` half of 0.01e22, and so on. A 5 per cent slack
/// covers double rounding.
pub fn printed_tolerance(printed: &str) -> f64 {
    let s = printed.trim().trim_start_matches('-');
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().expect("exponent")),
        None => (s, 0),
    };
    let decimals = mantissa
        .split_once('.')
        .map(|(_, frac)| frac.len() as i32)
        .unwrap_or(0);
    0.525 * libm::pow(10.0, (exp - decimals) as f64)
}

/// Asserts agreement with a printed reference at that reference's precision.
#[track_caller]
pub fn assert_printed(got: f64, printed: &str) {
    let want: f64 = printed.parse().expect("printed value parses");
    let tol = printed_tolerance(printed);
    assert!(
        (got - want).abs() <= tol,
        "got {got}, printed reference {printed} (tolerance {tol:e})"
    );
}

/// Relative-error assertion.
#[track_caller]
pub fn assert_rel(got: f64, want: f64, tol: f64) {
    let denom = want.abs().max(f64::MIN_POSITIVE);
    assert!(
        ((got - want) / denom).abs() <= tol,
        "got {got}, want {want} (rel tol {tol:e})"
    );
}
