//! Time-series econometrics engine with a gretl-style script interpreter.
//!
//! The crate is organised around a small command language (see [`scriptlang`])
//! that drives a [`session::Session`]: datasets of named annual series,
//! OLS regression with the full summary-statistic block, ADF unit-root tests
//! with automatic lag selection, Engle-Granger cointegration, residual
//! autocorrelation diagnostics, correlograms and seeded stochastic-process
//! simulation.
//!
//! Everything numeric lives behind plain `f64` slices so the core stays
//! `no_std` (with `alloc`); file access is abstracted by [`session::ScriptIo`]
//! and provided by the companion CLI crate. Transcendental functions are
//! routed through `libm` so results are bit-identical across platforms.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]
// Index loops over several parallel slices read better than zipped iterator
// chains in the matrix and statistics kernels.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod dataset;
pub mod diagnostics;
pub mod linalg;
pub(crate) mod math;
pub mod regress;
pub mod report;
pub mod scriptlang;
pub mod session;
pub mod simulate;
pub mod unitroot;
