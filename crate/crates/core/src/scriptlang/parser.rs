//! Recursive-descent parser: one command per token line, expressions with the
//! usual precedence (unary minus, then `* /`, then `+ -`, left associative).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::lexer::{tokenize, Line, Token};
use super::{Accessor, BinOp, Builtin, CaseFlag, Command, Expr, Regressor, ScriptProgram};

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl core::error::Error for ParseError {}

impl From<super::lexer::LexError> for ParseError {
    fn from(e: super::lexer::LexError) -> Self {
        ParseError {
            line: e.line,
            message: format!("column {}: {}", e.column, e.message),
        }
    }
}

/// Convenience: tokenize + parse in one step.
pub fn parse_program(source: &str) -> Result<ScriptProgram, ParseError> {
    parse(&tokenize(source)?)
}

/// Parses token lines into a program.
pub fn parse(lines: &[Line]) -> Result<ScriptProgram, ParseError> {
    let mut commands = Vec::new();
    for line in lines {
        let mut p = LineParser {
            tokens: &line.tokens,
            pos: 0,
            line: line.number,
        };
        let cmd = p.command()?;
        p.expect_end()?;
        commands.push((cmd, line.number));
    }
    Ok(ScriptProgram { commands })
}

struct LineParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
}

impl<'a> LineParser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => self.err(format!("unexpected '{}' at end of command", t)),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.next() {
            Some(Token::Ident(s)) => Ok(s.clone()),
            Some(t) => self.err(format!("expected {}, found '{}'", what, t)),
            None => self.err(format!("expected {}", what)),
        }
    }

    fn non_negative_int(&mut self, what: &str) -> Result<usize, ParseError> {
        match self.next() {
            Some(Token::Number(v)) if *v >= 0.0 && crate::math::floor(*v) == *v => {
                Ok(*v as usize)
            }
            Some(t) => self.err(format!("expected {}, found '{}'", what, t)),
            None => self.err(format!("expected {}", what)),
        }
    }

    fn path(&mut self, verb: &str) -> Result<String, ParseError> {
        match self.next() {
            Some(Token::Path(p)) => Ok(p.clone()),
            Some(Token::Str(p)) => Ok(p.clone()),
            _ => self.err(format!("'{}' needs a file path", verb)),
        }
    }

    /// Remaining tokens must all be flags from `allowed`; returns them.
    fn flags(&mut self, command: &str, allowed: &[&str]) -> Result<Vec<(String, Option<String>)>, ParseError> {
        let mut out = Vec::new();
        while let Some(t) = self.peek() {
            match t {
                Token::Flag { name, value } => {
                    if !allowed.contains(&name.as_str()) {
                        return self.err(format!("unknown option --{} for '{}'", name, command));
                    }
                    out.push((name.clone(), value.clone()));
                    self.pos += 1;
                }
                other => return self.err(format!("unexpected '{}' after {} arguments", other, command)),
            }
        }
        Ok(out)
    }

    fn command(&mut self) -> Result<Command, ParseError> {
        let verb = match self.next() {
            Some(Token::Ident(s)) => s.clone(),
            Some(t) => return self.err(format!("expected a command, found '{}'", t)),
            None => return self.err("empty command"),
        };
        match verb.as_str() {
            "open" => Ok(Command::Open { path: self.path("open")? }),
            "run" => Ok(Command::Run { path: self.path("run")? }),
            "nulldata" => Ok(Command::Nulldata { n_obs: self.non_negative_int("observation count")? }),
            "setobs" => {
                let frequency = self.non_negative_int("frequency")? as u32;
                let start = self.non_negative_int("start period")? as i64;
                let fl = self.flags("setobs", &["time-series"])?;
                Ok(Command::Setobs {
                    frequency,
                    start,
                    time_series: fl.iter().any(|(n, _)| n == "time-series"),
                })
            }
            "genr" => {
                // Only `genr time` appears in practice; `genr x = expr` is an
                // alias for a series assignment.
                let name = self.ident("variable name")?;
                if name == "time" && self.peek().is_none() {
                    Ok(Command::GenrTime)
                } else if matches!(self.peek(), Some(Token::Assign)) {
                    self.pos += 1;
                    let expr = self.expression()?;
                    Ok(Command::SeriesAssign { name, expr })
                } else {
                    self.err("'genr' supports 'genr time' or 'genr name = expression'")
                }
            }
            "set" => {
                let what = self.ident("set variable")?;
                if what != "seed" {
                    return self.err(format!("unsupported set variable '{}'", what));
                }
                let seed = self.non_negative_int("seed")? as u64;
                Ok(Command::SetSeed { seed })
            }
            "series" => {
                let name = self.ident("series name")?;
                match self.next() {
                    Some(Token::Assign) => {}
                    _ => return self.err("expected '=' in series assignment"),
                }
                Ok(Command::SeriesAssign { name, expr: self.expression()? })
            }
            "scalar" => {
                let name = self.ident("scalar name")?;
                match self.next() {
                    Some(Token::Assign) => {}
                    _ => return self.err("expected '=' in scalar assignment"),
                }
                Ok(Command::ScalarAssign { name, expr: self.expression()? })
            }
            "diff" => {
                let mut names = Vec::new();
                while let Some(Token::Ident(s)) = self.peek() {
                    names.push(s.clone());
                    self.pos += 1;
                }
                if names.is_empty() {
                    return self.err("'diff' needs at least one series");
                }
                Ok(Command::Diff { names })
            }
            "ols" => {
                let dependent = self.ident("dependent variable")?;
                let mut regressors = Vec::new();
                loop {
                    match self.peek() {
                        Some(Token::Ident(_)) => regressors.push(self.regressor()?),
                        Some(Token::Flag { name, .. }) => {
                            let name = name.clone();
                            return self.err(format!("unknown option --{} for 'ols'", name));
                        }
                        Some(t) => return self.err(format!("unexpected '{}' in regressor list", t)),
                        None => break,
                    }
                }
                if regressors.is_empty() {
                    return self.err("'ols' needs at least one regressor");
                }
                Ok(Command::Ols { dependent, regressors })
            }
            "adf" => {
                let kmax = self.non_negative_int("maximum lag order")?;
                let series = self.ident("series name")?;
                let fl = self.flags("adf", &["nc", "c", "ct", "test-down", "difference", "verbose"])?;
                let mut case = CaseFlag::Const;
                let mut test_down = false;
                let mut difference = false;
                for (name, value) in fl {
                    match name.as_str() {
                        "nc" => case = CaseFlag::NoConst,
                        "c" => case = CaseFlag::Const,
                        "ct" => case = CaseFlag::ConstTrend,
                        "difference" => difference = true,
                        "test-down" => {
                            match value.as_deref() {
                                None | Some("MAIC") => test_down = true,
                                Some(other) => {
                                    return self.err(format!(
                                        "unsupported test-down criterion '{}' (only MAIC)",
                                        other
                                    ))
                                }
                            }
                        }
                        _ => {}
                    }
                }
                Ok(Command::Adf { kmax, series, case, test_down, difference })
            }
            "coint" => {
                let kmax = self.non_negative_int("maximum lag order")?;
                let mut series = Vec::new();
                while let Some(Token::Ident(s)) = self.peek() {
                    series.push(s.clone());
                    self.pos += 1;
                }
                if series.len() < 2 {
                    return self.err("'coint' needs at least two series");
                }
                let fl = self.flags("coint", &["nc", "c", "ct", "test-down", "skip-df"])?;
                let mut case = CaseFlag::Const;
                let mut test_down = false;
                let mut skip_df = false;
                for (name, value) in fl {
                    match name.as_str() {
                        "nc" => case = CaseFlag::NoConst,
                        "c" => case = CaseFlag::Const,
                        "ct" => case = CaseFlag::ConstTrend,
                        "skip-df" => skip_df = true,
                        "test-down" => match value.as_deref() {
                            None | Some("MAIC") => test_down = true,
                            Some(other) => {
                                return self.err(format!(
                                    "unsupported test-down criterion '{}' (only MAIC)",
                                    other
                                ))
                            }
                        },
                        _ => {}
                    }
                }
                Ok(Command::Coint { kmax, series, case, test_down, skip_df })
            }
            "modtest" => {
                // Accept `modtest --autocorr 2` and `modtest 2 --autocorr`.
                let mut order: Option<usize> = None;
                let mut autocorr = false;
                while let Some(t) = self.peek() {
                    match t {
                        Token::Number(_) => {
                            if order.is_some() {
                                return self.err("duplicate order in 'modtest'");
                            }
                            order = Some(self.non_negative_int("order")?);
                        }
                        Token::Flag { name, .. } if name == "autocorr" => {
                            autocorr = true;
                            self.pos += 1;
                        }
                        Token::Flag { name, .. } => {
                            let name = name.clone();
                            return self.err(format!("unknown option --{} for 'modtest'", name));
                        }
                        other => return self.err(format!("unexpected '{}' in 'modtest'", other)),
                    }
                }
                if !autocorr {
                    return self.err("'modtest' supports only --autocorr");
                }
                Ok(Command::Modtest { order: order.unwrap_or(1) })
            }
            "corrgm" => {
                let series = self.ident("series name")?;
                let max_lag = match self.peek() {
                    Some(Token::Number(_)) => Some(self.non_negative_int("maximum lag")?),
                    _ => None,
                };
                Ok(Command::Corrgm { series, max_lag })
            }
            "gnuplot" => {
                let mut series = Vec::new();
                while let Some(Token::Ident(s)) = self.peek() {
                    series.push(s.clone());
                    self.pos += 1;
                }
                if series.is_empty() {
                    return self.err("'gnuplot' needs at least one series");
                }
                let fl = self.flags("gnuplot", &["with-lines", "time-series"])?;
                Ok(Command::Gnuplot {
                    series,
                    with_lines: fl.iter().any(|(n, _)| n == "with-lines"),
                    time_series: fl.iter().any(|(n, _)| n == "time-series"),
                })
            }
            "scatters" => {
                let mut series = Vec::new();
                while let Some(Token::Ident(s)) = self.peek() {
                    series.push(s.clone());
                    self.pos += 1;
                }
                if series.is_empty() {
                    return self.err("'scatters' needs at least one series");
                }
                Ok(Command::Scatters { series })
            }
            other => self.err(format!("unknown command '{}'", other)),
        }
    }

    /// Regressor: `const`, `name`, `name(-k)` or `name(0 to -k)`.
    fn regressor(&mut self) -> Result<Regressor, ParseError> {
        let name = self.ident("regressor")?;
        if name == "const" {
            return Ok(Regressor::Const);
        }
        if !matches!(self.peek(), Some(Token::LParen)) {
            return Ok(Regressor::Series { name, lag: 0 });
        }
        self.pos += 1; // (
        // Either `-k` or `0 to -k`.
        match self.next() {
            Some(Token::Minus) => {
                let k = self.non_negative_int("lag")?;
                if k == 0 {
                    return self.err("lag must be strictly negative");
                }
                match self.next() {
                    Some(Token::RParen) => Ok(Regressor::Series { name, lag: k }),
                    _ => self.err("expected ')' after lag"),
                }
            }
            Some(Token::Number(v)) if *v == 0.0 => {
                match self.next() {
                    Some(Token::Ident(kw)) if kw == "to" => {}
                    _ => return self.err("expected 'to' in lag range"),
                }
                match self.next() {
                    Some(Token::Minus) => {}
                    _ => return self.err("lag range end must be negative"),
                }
                let k = self.non_negative_int("lag range end")?;
                if k == 0 {
                    return self.err("lag range end must be strictly negative");
                }
                match self.next() {
                    Some(Token::RParen) => Ok(Regressor::Range { name, max_lag: k }),
                    _ => self.err("expected ')' after lag range"),
                }
            }
            _ => self.err("expected a lag like (-1) or a range like (0 to -1)"),
        }
    }

    fn expression(&mut self) -> Result<Expr, ParseError> {
        let e = self.additive()?;
        Ok(e)
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.multiplicative()?;
        loop {
            let op = match self.peek() {
                Some(Token::Plus) => BinOp::Add,
                Some(Token::Minus) => BinOp::Sub,
                _ => break,
            };
            self.pos += 1;
            let right = self.multiplicative()?;
            left = Expr::Bin(op, alloc::boxed::Box::new(left), alloc::boxed::Box::new(right));
        }
        Ok(left)
    }

    fn multiplicative(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Token::Star) => BinOp::Mul,
                Some(Token::Slash) => BinOp::Div,
                _ => break,
            };
            self.pos += 1;
            let right = self.unary()?;
            left = Expr::Bin(op, alloc::boxed::Box::new(left), alloc::boxed::Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr::Neg(alloc::boxed::Box::new(inner)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.next() {
            Some(Token::Number(v)) => Ok(Expr::Const(*v)),
            Some(Token::Dollar(name)) => match name.as_str() {
                "yhat" => Ok(Expr::Accessor(Accessor::Yhat)),
                "uhat" => Ok(Expr::Accessor(Accessor::Uhat)),
                other => self.err(format!("unknown accessor ${}", other)),
            },
            Some(Token::LParen) => {
                let inner = self.expression()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => self.err("expected ')'"),
                }
            }
            Some(Token::Ident(name)) => {
                let name = name.clone();
                if matches!(self.peek(), Some(Token::LParen)) {
                    self.pos += 1;
                    match self.peek() {
                        Some(Token::RParen) => {
                            self.pos += 1;
                            match name.as_str() {
                                "normal" => Ok(Expr::Call(Builtin::Normal)),
                                "uniform" => Ok(Expr::Call(Builtin::Uniform)),
                                other => self.err(format!("unknown function '{}'", other)),
                            }
                        }
                        Some(Token::Minus) => {
                            self.pos += 1;
                            let k = self.non_negative_int("lag")?;
                            if k == 0 {
                                return self.err("lag must be strictly negative");
                            }
                            match self.next() {
                                Some(Token::RParen) => Ok(Expr::Ref { name, lag: k }),
                                _ => self.err("expected ')' after lag"),
                            }
                        }
                        _ => self.err(format!(
                            "'{}(' must be a no-argument function call or a negative lag",
                            name
                        )),
                    }
                } else {
                    Ok(Expr::Ref { name, lag: 0 })
                }
            }
            Some(t) => self.err(format!("unexpected '{}' in expression", t)),
            None => self.err("truncated expression"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::boxed::Box;

    fn one(src: &str) -> Command {
        let p = parse_program(src).unwrap();
        assert_eq!(p.len(), 1, "{src}");
        p.commands[0].0.clone()
    }

    #[test]
    fn ar1_assignment_parses_with_precedence() {
        let cmd = one("series y = phi * y(-1) + e");
        let expected = Command::SeriesAssign {
            name: "y".into(),
            expr: Expr::Bin(
                BinOp::Add,
                Box::new(Expr::Bin(
                    BinOp::Mul,
                    Box::new(Expr::Ref { name: "phi".into(), lag: 0 }),
                    Box::new(Expr::Ref { name: "y".into(), lag: 1 }),
                )),
                Box::new(Expr::Ref { name: "e".into(), lag: 0 }),
            ),
        };
        assert_eq!(cmd, expected);
    }

    #[test]
    fn ols_with_lag_ranges() {
        let cmd = one("ols d_u const d_y(0 to -1) d_u(-1)");
        assert_eq!(
            cmd,
            Command::Ols {
                dependent: "d_u".into(),
                regressors: alloc::vec![
                    Regressor::Const,
                    Regressor::Range { name: "d_y".into(), max_lag: 1 },
                    Regressor::Series { name: "d_u".into(), lag: 1 },
                ],
            }
        );
    }

    #[test]
    fn setobs_annual_1980() {
        assert_eq!(
            one("setobs 1 1980 --time-series"),
            Command::Setobs { frequency: 1, start: 1980, time_series: true }
        );
    }

    #[test]
    fn bogus_flag_is_named_in_the_error() {
        let err = parse_program("ols y const time --bogus").unwrap_err();
        assert!(err.message.contains("--bogus"), "{}", err.message);
    }

    #[test]
    fn unknown_modtest_option_rejected() {
        let err = parse_program("modtest --normality").unwrap_err();
        assert!(err.message.contains("--normality"));
    }

    #[test]
    fn set_seed_parses() {
        assert_eq!(one("set seed 7777777"), Command::SetSeed { seed: 7_777_777 });
    }

    #[test]
    fn empty_source_is_an_empty_program() {
        assert!(parse_program("").unwrap().is_empty());
        assert!(parse_program("# only a comment\n").unwrap().is_empty());
    }

    #[test]
    fn positive_lag_is_rejected() {
        assert!(parse_program("series z = y(1)").is_err());
    }

    #[test]
    fn lag_range_must_start_at_zero() {
        assert!(parse_program("ols y const x(1 to -2)").is_err());
    }

    #[test]
    fn genr_alias_assignment() {
        let cmd = one("genr z = time + 1");
        assert!(matches!(cmd, Command::SeriesAssign { .. }));
    }

    #[test]
    fn ar1_simulation_listing_command_count() {
        // The AR(1) listing: counting non-blank, non-comment lines.
        let src = "\
# fija el tamano muestral y lo clasifica como temporal
nulldata 100
setobs 1 1 --time-series
genr time

# semilla de numeros aleatorios
set seed 7777777

# parametros fijos
scalar phi = .5

# generacion de series
series y = uniform()
series e = normal()

# modelo AR(1)
series y = phi * y(-1) + e

# representacion grafica
gnuplot y --with-lines --time-series
corrgm y 50
";
        let p = parse_program(src).unwrap();
        assert_eq!(p.len(), 10);
    }
}
