//! The command language driving the interpreter: a lexer, a line-oriented
//! parser and the AST for the command set (`open`, `nulldata`, `setobs`,
//! `genr`, `set seed`, `series`/`scalar` assignment, `diff`, `ols`, `adf`,
//! `coint`, `modtest`, `corrgm`, `gnuplot`, `scatters`, `run`) plus the
//! expression sublanguage used in series assignments.
//!
//! Newline terminates a command; `#` starts a comment; a leading `? ` console
//! prompt is tolerated and stripped so transcripts can be replayed verbatim.

pub mod lexer;
pub mod parser;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use lexer::{tokenize, LexError, Line, Token};
pub use parser::{parse, parse_program, ParseError};

/// Model accessors available after an estimation command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accessor {
    Yhat,
    Uhat,
}

impl fmt::Display for Accessor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Accessor::Yhat => write!(f, "$yhat"),
            Accessor::Uhat => write!(f, "$uhat"),
        }
    }
}

/// No-argument generator functions usable in series expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Normal,
    Uniform,
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Normal => write!(f, "normal()"),
            Builtin::Uniform => write!(f, "uniform()"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(&self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

/// Expression in a series or scalar assignment.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    /// Series or scalar reference; `lag` periods back (0 = contemporaneous).
    /// Whether the name is a series or a scalar is resolved at run time.
    Ref { name: String, lag: usize },
    Accessor(Accessor),
    Call(Builtin),
    Neg(alloc::boxed::Box<Expr>),
    Bin(BinOp, alloc::boxed::Box<Expr>, alloc::boxed::Box<Expr>),
}

impl Expr {
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        match self {
            Expr::Const(v) => write!(f, "{}", crate::report::fmt::fmt_number_repr(*v)),
            Expr::Ref { name, lag: 0 } => write!(f, "{}", name),
            Expr::Ref { name, lag } => write!(f, "{}(-{})", name, lag),
            Expr::Accessor(a) => write!(f, "{}", a),
            Expr::Call(b) => write!(f, "{}", b),
            Expr::Neg(inner) => {
                // A nested negation needs parentheses, or `--x` would lex as
                // an option flag.
                if matches!(**inner, Expr::Neg(_)) {
                    write!(f, "-(")?;
                    inner.fmt_prec(f, 0)?;
                    write!(f, ")")
                } else {
                    write!(f, "-")?;
                    inner.fmt_prec(f, 3)
                }
            }
            Expr::Bin(op, l, r) => {
                let prec = op.precedence();
                let paren = prec < parent;
                if paren {
                    write!(f, "(")?;
                }
                l.fmt_prec(f, prec)?;
                write!(f, " {} ", op.symbol())?;
                // Right operand needs one more level so `a - (b - c)` survives.
                r.fmt_prec(f, prec + 1)?;
                if paren {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Regressor in an `ols` command: the intercept keyword or a series with a
/// lag specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regressor {
    Const,
    /// Single lag: `d_u(-1)` stores 1, a bare name stores 0.
    Series { name: String, lag: usize },
    /// Lag range `name(0 to -max_lag)`.
    Range { name: String, max_lag: usize },
}

impl fmt::Display for Regressor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regressor::Const => write!(f, "const"),
            Regressor::Series { name, lag: 0 } => write!(f, "{}", name),
            Regressor::Series { name, lag } => write!(f, "{}(-{})", name, lag),
            Regressor::Range { name, max_lag } => write!(f, "{}(0 to -{})", name, max_lag),
        }
    }
}

/// Deterministic-term flags shared by `adf` and `coint`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseFlag {
    NoConst,
    Const,
    ConstTrend,
}

/// One command of the script language.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Open { path: String },
    Run { path: String },
    Nulldata { n_obs: usize },
    Setobs { frequency: u32, start: i64, time_series: bool },
    GenrTime,
    SetSeed { seed: u64 },
    SeriesAssign { name: String, expr: Expr },
    ScalarAssign { name: String, expr: Expr },
    Diff { names: Vec<String> },
    Ols { dependent: String, regressors: Vec<Regressor> },
    Adf {
        kmax: usize,
        series: String,
        case: CaseFlag,
        test_down: bool,
        difference: bool,
    },
    Coint {
        kmax: usize,
        series: Vec<String>,
        case: CaseFlag,
        test_down: bool,
        skip_df: bool,
    },
    Modtest { order: usize },
    Corrgm { series: String, max_lag: Option<usize> },
    Gnuplot {
        series: Vec<String>,
        with_lines: bool,
        time_series: bool,
    },
    Scatters { series: Vec<String> },
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Open { path } => write!(f, "open {}", path),
            Command::Run { path } => write!(f, "run {}", path),
            Command::Nulldata { n_obs } => write!(f, "nulldata {}", n_obs),
            Command::Setobs { frequency, start, time_series } => {
                write!(f, "setobs {} {}", frequency, start)?;
                if *time_series {
                    write!(f, " --time-series")?;
                }
                Ok(())
            }
            Command::GenrTime => write!(f, "genr time"),
            Command::SetSeed { seed } => write!(f, "set seed {}", seed),
            Command::SeriesAssign { name, expr } => write!(f, "series {} = {}", name, expr),
            Command::ScalarAssign { name, expr } => write!(f, "scalar {} = {}", name, expr),
            Command::Diff { names } => {
                write!(f, "diff")?;
                for n in names {
                    write!(f, " {}", n)?;
                }
                Ok(())
            }
            Command::Ols { dependent, regressors } => {
                write!(f, "ols {}", dependent)?;
                for r in regressors {
                    write!(f, " {}", r)?;
                }
                Ok(())
            }
            Command::Adf { kmax, series, case, test_down, difference } => {
                write!(f, "adf {} {}", kmax, series)?;
                match case {
                    CaseFlag::NoConst => write!(f, " --nc")?,
                    CaseFlag::Const => write!(f, " --c")?,
                    CaseFlag::ConstTrend => write!(f, " --ct")?,
                }
                if *test_down {
                    write!(f, " --test-down=MAIC")?;
                }
                if *difference {
                    write!(f, " --difference")?;
                }
                Ok(())
            }
            Command::Coint { kmax, series, case, test_down, skip_df } => {
                write!(f, "coint {}", kmax)?;
                for s in series {
                    write!(f, " {}", s)?;
                }
                match case {
                    CaseFlag::NoConst => write!(f, " --nc")?,
                    CaseFlag::Const => {}
                    CaseFlag::ConstTrend => write!(f, " --ct")?,
                }
                if *test_down {
                    write!(f, " --test-down")?;
                }
                if *skip_df {
                    write!(f, " --skip-df")?;
                }
                Ok(())
            }
            Command::Modtest { order } => write!(f, "modtest --autocorr {}", order),
            Command::Corrgm { series, max_lag } => {
                write!(f, "corrgm {}", series)?;
                if let Some(m) = max_lag {
                    write!(f, " {}", m)?;
                }
                Ok(())
            }
            Command::Gnuplot { series, with_lines, time_series } => {
                write!(f, "gnuplot")?;
                for s in series {
                    write!(f, " {}", s)?;
                }
                if *with_lines {
                    write!(f, " --with-lines")?;
                }
                if *time_series {
                    write!(f, " --time-series")?;
                }
                Ok(())
            }
            Command::Scatters { series } => {
                write!(f, "scatters")?;
                for s in series {
                    write!(f, " {}", s)?;
                }
                Ok(())
            }
        }
    }
}

/// Parsed script: commands with their 1-based source lines.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScriptProgram {
    pub commands: Vec<(Command, usize)>,
}

impl ScriptProgram {
    pub fn len(&self) -> usize {
        self.commands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.commands.is_empty()
    }

    /// Canonical text form; `parse(pretty_print(p))` reproduces `p`.
    pub fn pretty_print(&self) -> String {
        let mut out = String::new();
        for (cmd, _) in &self.commands {
            out.push_str(&format!("{}\n", cmd));
        }
        out
    }
}
