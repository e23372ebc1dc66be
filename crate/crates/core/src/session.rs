//! The interpreter: executes a [`ScriptProgram`] against a [`Session`],
//! maintaining the dataset, named scalars, the seeded RNG, the last estimated
//! model (for `$yhat`/`$uhat`) and the report stream.
//!
//! Series assignment is recursive: observations are evaluated in increasing
//! `t` and a self-reference through a negative lag reads the values already
//! written in this assignment, so `series y = 0.5*y(-1) + e` builds an AR(1)
//! path in place. Where the right-hand side is NA (for example the first
//! observation of a self-lag), the target keeps its previous value; fresh
//! targets start as all-NA, so those observations stay NA.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dataset::{common_sample, csv, Dataset, DatasetError, Obs, Series};
use crate::diagnostics::{self, DiagError};
use crate::regress::{self, OlsModel, RegressError, Term};
use crate::report::{self, plot};
use crate::scriptlang::{
    parse_program, Accessor, BinOp, Builtin, CaseFlag, Command, Expr, Regressor, ScriptProgram,
};
use crate::simulate::Rng;
use crate::unitroot::{self, AdfCase, TestDown, UnitRootError};

/// Default RNG seed of a fresh session (any `set seed` overrides it).
pub const DEFAULT_SEED: u64 = 1;

const MAX_RUN_DEPTH: usize = 16;

/// File access used by `open` and `run` and by plot emission. The CLI
/// provides a filesystem-backed implementation; tests use [`MemIo`].
pub trait ScriptIo {
    fn read_file(&mut self, path: &str) -> Result<String, String>;
    fn write_file(&mut self, path: &str, contents: &str) -> Result<(), String>;
}

/// In-memory `ScriptIo`.
#[derive(Debug, Default)]
pub struct MemIo {
    pub files: BTreeMap<String, String>,
}

impl ScriptIo for MemIo {
    fn read_file(&mut self, path: &str) -> Result<String, String> {
        self.files
            .get(path)
            .cloned()
            .ok_or_else(|| format!("cannot read '{}'", path))
    }

    fn write_file(&mut self, path: &str, contents: &str) -> Result<(), String> {
        self.files.insert(path.to_string(), contents.to_string());
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RuntimeErrorKind {
    NoDataset,
    NoModel,
    UnknownIdentifier(String),
    SelfReferenceAtLagZero(String),
    LaggedScalar(String),
    SeriesInScalarContext(String),
    Io(String),
    Csv(csv::CsvError),
    Dataset(DatasetError),
    Regress(RegressError),
    UnitRoot(UnitRootError),
    Diagnostics(DiagError),
    NestedParse(String),
    RunDepthExceeded,
    Unsupported(String),
}

impl fmt::Display for RuntimeErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuntimeErrorKind::NoDataset => write!(f, "no dataset loaded"),
            RuntimeErrorKind::NoModel => write!(f, "no model has been estimated yet"),
            RuntimeErrorKind::UnknownIdentifier(n) => write!(f, "unknown series or scalar '{}'", n),
            RuntimeErrorKind::SelfReferenceAtLagZero(n) => {
                write!(f, "series '{}' cannot reference itself at lag 0", n)
            }
            RuntimeErrorKind::LaggedScalar(n) => write!(f, "scalar '{}' cannot be lagged", n),
            RuntimeErrorKind::SeriesInScalarContext(n) => {
                write!(f, "series '{}' not allowed in a scalar expression", n)
            }
            RuntimeErrorKind::Io(m) => write!(f, "{}", m),
            RuntimeErrorKind::Csv(e) => write!(f, "{}", e),
            RuntimeErrorKind::Dataset(e) => write!(f, "{}", e),
            RuntimeErrorKind::Regress(e) => write!(f, "{}", e),
            RuntimeErrorKind::UnitRoot(e) => write!(f, "{}", e),
            RuntimeErrorKind::Diagnostics(e) => write!(f, "{}", e),
            RuntimeErrorKind::NestedParse(m) => write!(f, "{}", m),
            RuntimeErrorKind::RunDepthExceeded => write!(f, "'run' nesting too deep"),
            RuntimeErrorKind::Unsupported(m) => write!(f, "{}", m),
        }
    }
}

/// Runtime error with the 1-based source line of the offending command.
#[derive(Debug, Clone, PartialEq)]
pub struct RuntimeError {
    pub line: usize,
    pub kind: RuntimeErrorKind,
}

impl fmt::Display for RuntimeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

impl core::error::Error for RuntimeError {}

/// Interpreter state. Single-writer by contract: commands mutate the session
/// in order; distinct sessions are fully independent.
pub struct Session<I: ScriptIo> {
    io: I,
    dataset: Option<Dataset>,
    scalars: BTreeMap<String, f64>,
    rng: Rng,
    last_model: Option<OlsModel>,
    output: String,
    model_counter: usize,
    plot_counter: usize,
    seed_override: Option<u64>,
    run_depth: usize,
}

impl<I: ScriptIo> Session<I> {
    pub fn new(io: I) -> Self {
        Session {
            io,
            dataset: None,
            scalars: BTreeMap::new(),
            rng: Rng::new(DEFAULT_SEED),
            last_model: None,
            output: String::new(),
            model_counter: 0,
            plot_counter: 0,
            seed_override: None,
            run_depth: 0,
        }
    }

    /// Forces every `set seed` (and the initial state) to the given seed.
    pub fn with_seed_override(io: I, seed: u64) -> Self {
        let mut s = Session::new(io);
        s.rng = Rng::new(seed);
        s.seed_override = Some(seed);
        s
    }

    pub fn dataset(&self) -> Option<&Dataset> {
        self.dataset.as_ref()
    }

    pub fn scalar(&self, name: &str) -> Option<f64> {
        self.scalars.get(name).copied()
    }

    pub fn last_model(&self) -> Option<&OlsModel> {
        self.last_model.as_ref()
    }

    pub fn io(&self) -> &I {
        &self.io
    }

    pub fn io_mut(&mut self) -> &mut I {
        &mut self.io
    }

    /// Drains the accumulated report text.
    pub fn take_output(&mut self) -> String {
        core::mem::take(&mut self.output)
    }

    pub fn output(&self) -> &str {
        &self.output
    }

    fn say(&mut self, text: &str) {
        self.output.push_str(text);
    }

    /// Parses and executes a source string.
    pub fn execute_source(&mut self, source: &str) -> Result<(), RuntimeError> {
        let program = parse_program(source).map_err(|e| RuntimeError {
            line: e.line,
            kind: RuntimeErrorKind::NestedParse(e.to_string()),
        })?;
        self.execute(&program)
    }

    /// Executes the commands in order; the first failure aborts.
    pub fn execute(&mut self, program: &ScriptProgram) -> Result<(), RuntimeError> {
        for (cmd, line) in &program.commands {
            self.execute_command(cmd, *line)?;
        }
        Ok(())
    }

    fn fail<T>(&self, line: usize, kind: RuntimeErrorKind) -> Result<T, RuntimeError> {
        Err(RuntimeError { line, kind })
    }

    fn dataset_required(&self, line: usize) -> Result<&Dataset, RuntimeError> {
        self.dataset
            .as_ref()
            .ok_or(RuntimeError { line, kind: RuntimeErrorKind::NoDataset })
    }

    pub fn execute_command(&mut self, cmd: &Command, line: usize) -> Result<(), RuntimeError> {
        match cmd {
            Command::Open { path } => {
                let text = self
                    .io
                    .read_file(path)
                    .map_err(|m| RuntimeError { line, kind: RuntimeErrorKind::Io(m) })?;
                let ds = csv::parse(&text, None)
                    .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Csv(e) })?;
                self.dataset = Some(ds);
                self.last_model = None;
                Ok(())
            }
            Command::Run { path } => {
                if self.run_depth >= MAX_RUN_DEPTH {
                    return self.fail(line, RuntimeErrorKind::RunDepthExceeded);
                }
                let text = self
                    .io
                    .read_file(path)
                    .map_err(|m| RuntimeError { line, kind: RuntimeErrorKind::Io(m) })?;
                let program = parse_program(&text).map_err(|e| RuntimeError {
                    line,
                    kind: RuntimeErrorKind::NestedParse(format!("{}: {}", path, e)),
                })?;
                self.run_depth += 1;
                let r = self.execute(&program);
                self.run_depth -= 1;
                r
            }
            Command::Nulldata { n_obs } => {
                self.dataset = Some(Dataset::new(*n_obs, 1, 1));
                self.last_model = None;
                Ok(())
            }
            Command::Setobs { frequency, start, .. } => {
                let line_ = line;
                match self.dataset.as_mut() {
                    Some(ds) => {
                        ds.set_obs(*frequency, *start);
                        Ok(())
                    }
                    None => self.fail(line_, RuntimeErrorKind::NoDataset),
                }
            }
            Command::GenrTime => match self.dataset.as_mut() {
                Some(ds) => ds
                    .gen_time()
                    .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Dataset(e) }),
                None => self.fail(line, RuntimeErrorKind::NoDataset),
            },
            Command::SetSeed { seed } => {
                let effective = self.seed_override.unwrap_or(*seed);
                self.rng = Rng::new(effective);
                Ok(())
            }
            Command::SeriesAssign { name, expr } => self.assign_series(name, expr, line),
            Command::ScalarAssign { name, expr } => {
                let v = self.eval_scalar(expr, line)?;
                self.scalars.insert(name.clone(), v);
                Ok(())
            }
            Command::Diff { names } => {
                self.dataset_required(line)?;
                for name in names {
                    let ds = self.dataset.as_ref().unwrap();
                    let s = ds.series(name).ok_or(RuntimeError {
                        line,
                        kind: RuntimeErrorKind::UnknownIdentifier(name.clone()),
                    })?;
                    let d = s
                        .diff()
                        .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Dataset(e) })?;
                    self.dataset
                        .as_mut()
                        .unwrap()
                        .add_series(d)
                        .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Dataset(e) })?;
                }
                Ok(())
            }
            Command::Ols { dependent, regressors } => {
                let terms = expand_regressors(regressors);
                let ds = self.dataset_required(line)?;
                let model = regress::ols(ds, dependent, &terms)
                    .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Regress(e) })?;
                self.model_counter += 1;
                let title = format!("Modelo {}", self.model_counter);
                let text = report::render_model(&model, &title);
                self.say(&text);
                self.say("\n");
                self.last_model = Some(model);
                Ok(())
            }
            Command::Adf { kmax, series, case, test_down, difference } => {
                let ds = self.dataset_required(line)?;
                let td = if *test_down { TestDown::Maic } else { TestDown::Fixed };
                let result = if *difference {
                    let s = ds.series(series).ok_or(RuntimeError {
                        line,
                        kind: RuntimeErrorKind::UnknownIdentifier(series.clone()),
                    })?;
                    let d = s
                        .diff()
                        .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Dataset(e) })?;
                    let range = common_sample(&[d.values()]).map_err(|e| RuntimeError {
                        line,
                        kind: RuntimeErrorKind::Dataset(e),
                    })?;
                    let values: Vec<f64> =
                        range.iter0().map(|i| d.values()[i].unwrap()).collect();
                    unitroot::adf_values(
                        &values,
                        d.name(),
                        *kmax,
                        adf_case(*case),
                        adf_case(*case),
                        td,
                        1,
                        ds.label(range.first),
                    )
                } else {
                    unitroot::adf(ds, series, *kmax, adf_case(*case), td)
                }
                .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::UnitRoot(e) })?;
                let text = report::render_adf(&result);
                self.say(&text);
                self.say("\n");
                Ok(())
            }
            Command::Coint { kmax, series, case, test_down, skip_df } => {
                let ds = self.dataset_required(line)?;
                let td = if *test_down { TestDown::Maic } else { TestDown::Fixed };
                let result = unitroot::coint(ds, *kmax, series, adf_case(*case), td, *skip_df)
                    .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::UnitRoot(e) })?;
                let text = report::render_coint(&result);
                self.say(&text);
                self.say("\n");
                Ok(())
            }
            Command::Modtest { order } => {
                let model = self.last_model.as_ref().ok_or(RuntimeError {
                    line,
                    kind: RuntimeErrorKind::NoModel,
                })?;
                let bg = diagnostics::breusch_godfrey(model, *order)
                    .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Diagnostics(e) })?;
                let text = report::render_bg(&bg);
                self.say(&text);
                self.say("\n");
                Ok(())
            }
            Command::Corrgm { series, max_lag } => {
                let ds = self.dataset_required(line)?;
                let s = ds.series(series).ok_or(RuntimeError {
                    line,
                    kind: RuntimeErrorKind::UnknownIdentifier(series.clone()),
                })?;
                let range = common_sample(&[s.values()])
                    .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Dataset(e) })?;
                let values: Vec<f64> = range.iter0().map(|i| s.values()[i].unwrap()).collect();
                let t = values.len();
                // A requested order at or beyond T is capped at T - 1.
                let m = max_lag
                    .unwrap_or(t / 2)
                    .clamp(1, t.saturating_sub(1).max(1));
                let c = diagnostics::correlogram(series, &values, m)
                    .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Diagnostics(e) })?;
                let text = report::render_corrgm(&c);
                self.say(&text);
                self.say("\n");
                self.plot_counter += 1;
                let base = format!("{:02}_corrgm_{}", self.plot_counter, series);
                let (dat, gp) = plot::correlogram_plot(&base, &c);
                self.write_plot(&base, &dat, &gp, line)?;
                Ok(())
            }
            Command::Gnuplot { series, with_lines, time_series } => {
                self.plot_counter += 1;
                let base = format!("{:02}_gnuplot_{}", self.plot_counter, series[0]);
                let (dat, gp) = {
                    let ds = self.dataset_required(line)?;
                    let mut columns: Vec<&[Obs]> = Vec::new();
                    for name in series {
                        let s = ds.series(name).ok_or(RuntimeError {
                            line,
                            kind: RuntimeErrorKind::UnknownIdentifier(name.clone()),
                        })?;
                        columns.push(s.values());
                    }
                    let names: Vec<&str> = series.iter().map(|s| s.as_str()).collect();
                    plot::line_plot(&base, &names, &columns, ds.start(), *with_lines, *time_series)
                };
                self.write_plot(&base, &dat, &gp, line)?;
                Ok(())
            }
            Command::Scatters { series } => {
                self.plot_counter += 1;
                let counter = self.plot_counter;
                // One file pair per panel.
                let pairs = {
                    let ds = self.dataset_required(line)?;
                    let mut pairs = Vec::new();
                    for name in series {
                        let s = ds.series(name).ok_or(RuntimeError {
                            line,
                            kind: RuntimeErrorKind::UnknownIdentifier(name.clone()),
                        })?;
                        let base = format!("{:02}_scatters_{}", counter, name);
                        let (dat, gp) = plot::scatter_panel(&base, name, s.values(), ds.start());
                        pairs.push((base, dat, gp));
                    }
                    pairs
                };
                for (base, dat, gp) in pairs {
                    self.write_plot(&base, &dat, &gp, line)?;
                }
                Ok(())
            }
        }
    }

    fn write_plot(
        &mut self,
        base: &str,
        dat: &str,
        gp: &str,
        line: usize,
    ) -> Result<(), RuntimeError> {
        self.io
            .write_file(&format!("{}.dat", base), dat)
            .and_then(|_| self.io.write_file(&format!("{}.gp", base), gp))
            .map_err(|m| RuntimeError { line, kind: RuntimeErrorKind::Io(m) })
    }

    /// Fitted values or residuals of the last model, aligned to the dataset
    /// (NA outside the estimation sample).
    pub fn resolve_accessor(&self, which: Accessor) -> Result<Vec<Obs>, RuntimeErrorKind> {
        let model = self.last_model.as_ref().ok_or(RuntimeErrorKind::NoModel)?;
        let n = self
            .dataset
            .as_ref()
            .map(|d| d.n_obs())
            .unwrap_or(model.range.last);
        let mut out = vec![None; n];
        let source = match which {
            Accessor::Yhat => &model.fitted,
            Accessor::Uhat => &model.residuals,
        };
        for (offset, idx0) in model.range.iter0().enumerate() {
            if idx0 < n {
                out[idx0] = Some(source[offset]);
            }
        }
        Ok(out)
    }

    /// Recursive series assignment (see the module docs for the NA rule).
    fn assign_series(&mut self, name: &str, expr: &Expr, line: usize) -> Result<(), RuntimeError> {
        self.dataset_required(line)?;
        if references_at_lag_zero(expr, name) {
            return self.fail(line, RuntimeErrorKind::SelfReferenceAtLagZero(name.to_string()));
        }
        let n = self.dataset.as_ref().unwrap().n_obs();

        // Pre-resolve accessor columns so evaluation below cannot alias.
        let needs_yhat = expr_uses_accessor(expr, Accessor::Yhat);
        let needs_uhat = expr_uses_accessor(expr, Accessor::Uhat);
        let yhat = if needs_yhat {
            Some(self.resolve_accessor(Accessor::Yhat).map_err(|kind| RuntimeError { line, kind })?)
        } else {
            None
        };
        let uhat = if needs_uhat {
            Some(self.resolve_accessor(Accessor::Uhat).map_err(|kind| RuntimeError { line, kind })?)
        } else {
            None
        };

        let mut working: Vec<Obs> = match self.dataset.as_ref().unwrap().series(name) {
            Some(s) => s.values().to_vec(),
            None => vec![None; n],
        };

        for t in 1..=n {
            let v = {
                let ds = self.dataset.as_ref().unwrap();
                let mut ctx = EvalCtx {
                    ds,
                    scalars: &self.scalars,
                    rng: &mut self.rng,
                    target: Some((name, &working)),
                    yhat: yhat.as_deref(),
                    uhat: uhat.as_deref(),
                };
                ctx.eval(expr, t).map_err(|kind| RuntimeError { line, kind })?
            };
            if let Some(x) = v {
                working[t - 1] = Some(x);
            }
        }

        self.dataset
            .as_mut()
            .unwrap()
            .add_series(Series::new(name, working))
            .map_err(|e| RuntimeError { line, kind: RuntimeErrorKind::Dataset(e) })?;
        Ok(())
    }

    /// Scalar expressions may use constants, scalars and arithmetic only.
    fn eval_scalar(&mut self, expr: &Expr, line: usize) -> Result<f64, RuntimeError> {
        match expr {
            Expr::Const(v) => Ok(*v),
            Expr::Ref { name, lag } => {
                if *lag > 0 {
                    return self.fail(line, RuntimeErrorKind::LaggedScalar(name.clone()));
                }
                match self.scalars.get(name) {
                    Some(v) => Ok(*v),
                    None => {
                        if self.dataset.as_ref().is_some_and(|d| d.has_series(name)) {
                            self.fail(line, RuntimeErrorKind::SeriesInScalarContext(name.clone()))
                        } else {
                            self.fail(line, RuntimeErrorKind::UnknownIdentifier(name.clone()))
                        }
                    }
                }
            }
            Expr::Accessor(_) | Expr::Call(_) => {
                self.fail(line, RuntimeErrorKind::Unsupported(
                    "accessors and generators are series expressions".to_string(),
                ))
            }
            Expr::Neg(inner) => Ok(-self.eval_scalar(inner, line)?),
            Expr::Bin(op, l, r) => {
                let a = self.eval_scalar(l, line)?;
                let b = self.eval_scalar(r, line)?;
                Ok(apply_bin(*op, a, b))
            }
        }
    }
}

fn adf_case(flag: CaseFlag) -> AdfCase {
    match flag {
        CaseFlag::NoConst => AdfCase::None,
        CaseFlag::Const => AdfCase::Const,
        CaseFlag::ConstTrend => AdfCase::ConstTrend,
    }
}

/// Expands `ols` regressor specs into design terms; a lag range `(0 to -k)`
/// becomes one term per lag.
pub fn expand_regressors(specs: &[Regressor]) -> Vec<Term> {
    let mut terms = Vec::new();
    for spec in specs {
        match spec {
            Regressor::Const => terms.push(Term::Intercept),
            Regressor::Series { name, lag } => terms.push(Term::lagged(name.clone(), *lag)),
            Regressor::Range { name, max_lag } => {
                for lag in 0..=*max_lag {
                    terms.push(Term::lagged(name.clone(), lag));
                }
            }
        }
    }
    terms
}

fn apply_bin(op: BinOp, a: f64, b: f64) -> f64 {
    match op {
        BinOp::Add => a + b,
        BinOp::Sub => a - b,
        BinOp::Mul => a * b,
        BinOp::Div => a / b,
    }
}

fn references_at_lag_zero(expr: &Expr, name: &str) -> bool {
    match expr {
        Expr::Ref { name: n, lag: 0 } => n == name,
        Expr::Ref { .. } | Expr::Const(_) | Expr::Accessor(_) | Expr::Call(_) => false,
        Expr::Neg(e) => references_at_lag_zero(e, name),
        Expr::Bin(_, l, r) => {
            references_at_lag_zero(l, name) || references_at_lag_zero(r, name)
        }
    }
}

fn expr_uses_accessor(expr: &Expr, which: Accessor) -> bool {
    match expr {
        Expr::Accessor(a) => *a == which,
        Expr::Const(_) | Expr::Ref { .. } | Expr::Call(_) => false,
        Expr::Neg(e) => expr_uses_accessor(e, which),
        Expr::Bin(_, l, r) => expr_uses_accessor(l, which) || expr_uses_accessor(r, which),
    }
}

struct EvalCtx<'a> {
    ds: &'a Dataset,
    scalars: &'a BTreeMap<String, f64>,
    rng: &'a mut Rng,
    /// Name and working buffer of the assignment target.
    target: Option<(&'a str, &'a [Obs])>,
    yhat: Option<&'a [Obs]>,
    uhat: Option<&'a [Obs]>,
}

impl<'a> EvalCtx<'a> {
    /// Evaluates at 1-based observation `t`; NA propagates through arithmetic.
    fn eval(&mut self, expr: &Expr, t: usize) -> Result<Obs, RuntimeErrorKind> {
        match expr {
            Expr::Const(v) => Ok(Some(*v)),
            Expr::Ref { name, lag } => {
                if let Some((target, working)) = self.target {
                    if name == target {
                        let idx = t as isize - *lag as isize;
                        return Ok(if idx >= 1 {
                            working[(idx - 1) as usize]
                        } else {
                            None
                        });
                    }
                }
                if let Some(v) = self.scalars.get(name) {
                    if *lag > 0 {
                        return Err(RuntimeErrorKind::LaggedScalar(name.clone()));
                    }
                    return Ok(Some(*v));
                }
                match self.ds.series(name) {
                    Some(s) => {
                        let idx = t as isize - *lag as isize;
                        Ok(if idx >= 1 { s.get(idx as usize) } else { None })
                    }
                    None => Err(RuntimeErrorKind::UnknownIdentifier(name.clone())),
                }
            }
            Expr::Accessor(a) => {
                let col = match a {
                    Accessor::Yhat => self.yhat,
                    Accessor::Uhat => self.uhat,
                };
                match col {
                    Some(c) => Ok(c.get(t - 1).copied().flatten()),
                    None => Err(RuntimeErrorKind::NoModel),
                }
            }
            Expr::Call(b) => Ok(Some(match b {
                Builtin::Normal => self.rng.normal(),
                Builtin::Uniform => self.rng.uniform(),
            })),
            Expr::Neg(inner) => Ok(self.eval(inner, t)?.map(|v| -v)),
            Expr::Bin(op, l, r) => {
                let a = self.eval(l, t)?;
                let b = self.eval(r, t)?;
                Ok(match (a, b) {
                    (Some(x), Some(y)) => Some(apply_bin(*op, x, y)),
                    _ => None,
                })
            }
        }
    }
}
