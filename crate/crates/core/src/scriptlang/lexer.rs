//! Line-oriented lexer. Each physical line becomes one token list; `#`
//! comments and a leading `? ` console prompt are stripped. The argument of
//! `open` and `run` is the remainder of the line (a file path), taken as a
//! single token so paths need no quoting.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    Ident(String),
    Number(f64),
    Str(String),
    /// `--name` or `--name=value`
    Flag { name: String, value: Option<String> },
    /// `$yhat`, `$uhat`
    Dollar(String),
    /// Rest-of-line path argument of `open`/`run`.
    Path(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Assign,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "{}", s),
            Token::Number(v) => write!(f, "{}", v),
            Token::Str(s) => write!(f, "\"{}\"", s),
            Token::Flag { name, value: None } => write!(f, "--{}", name),
            Token::Flag { name, value: Some(v) } => write!(f, "--{}={}", name, v),
            Token::Dollar(s) => write!(f, "${}", s),
            Token::Path(p) => write!(f, "{}", p),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Slash => write!(f, "/"),
            Token::Assign => write!(f, "="),
        }
    }
}

/// One source line with its tokens; blank and comment-only lines produce no
/// `Line` at all.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    pub number: usize,
    pub tokens: Vec<Token>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LexError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl core::error::Error for LexError {}

fn strip_line(raw: &str) -> &str {
    let mut s = raw.trim_start();
    // Console transcripts prefix executed commands with "? ".
    if let Some(rest) = s.strip_prefix("? ") {
        s = rest.trim_start();
    } else if s == "?" {
        s = "";
    }
    // Comment to end of line (no string literals contain '#' in this corpus,
    // but honour quoted strings anyway).
    let mut in_str = false;
    for (i, c) in s.char_indices() {
        match c {
            '"' => in_str = !in_str,
            '#' if !in_str => return s[..i].trim_end(),
            _ => {}
        }
    }
    s.trim_end()
}

/// Splits source text into token lines.
pub fn tokenize(source: &str) -> Result<Vec<Line>, LexError> {
    let mut out = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let number = idx + 1;
        let line = strip_line(raw);
        if line.is_empty() {
            continue;
        }
        let tokens = lex_line(line, number)?;
        if !tokens.is_empty() {
            out.push(Line { number, tokens });
        }
    }
    Ok(out)
}

fn lex_line(line: &str, number: usize) -> Result<Vec<Token>, LexError> {
    let bytes: Vec<char> = line.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;

    // First word decides whether the remainder is a path argument.
    let first_word: String = bytes.iter().take_while(|c| !c.is_whitespace()).collect();
    if first_word == "open" || first_word == "run" {
        let rest = line[first_word.len()..].trim();
        tokens.push(Token::Ident(first_word));
        if !rest.is_empty() {
            let rest = rest.trim_matches('"').to_string();
            tokens.push(Token::Path(rest));
        }
        return Ok(tokens);
    }

    while i < bytes.len() {
        let c = bytes[i];
        let column = i + 1;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '=' => {
                tokens.push(Token::Assign);
                i += 1;
            }
            '-' => {
                if i + 1 < bytes.len() && bytes[i + 1] == '-' {
                    // Option flag --name or --name=value
                    let mut j = i + 2;
                    let mut name = String::new();
                    while j < bytes.len()
                        && (bytes[j].is_ascii_alphanumeric() || bytes[j] == '-' || bytes[j] == '_')
                    {
                        name.push(bytes[j]);
                        j += 1;
                    }
                    if name.is_empty() {
                        return Err(LexError {
                            line: number,
                            column,
                            message: "empty option flag".to_string(),
                        });
                    }
                    let value = if j < bytes.len() && bytes[j] == '=' {
                        j += 1;
                        let mut v = String::new();
                        while j < bytes.len() && !bytes[j].is_whitespace() {
                            v.push(bytes[j]);
                            j += 1;
                        }
                        Some(v)
                    } else {
                        None
                    };
                    tokens.push(Token::Flag { name, value });
                    i = j;
                } else {
                    tokens.push(Token::Minus);
                    i += 1;
                }
            }
            '$' => {
                let mut j = i + 1;
                let mut name = String::new();
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == '_') {
                    name.push(bytes[j]);
                    j += 1;
                }
                if name.is_empty() {
                    return Err(LexError {
                        line: number,
                        column,
                        message: "'$' must be followed by an accessor name".to_string(),
                    });
                }
                tokens.push(Token::Dollar(name));
                i = j;
            }
            '"' => {
                let mut j = i + 1;
                let mut s = String::new();
                while j < bytes.len() && bytes[j] != '"' {
                    s.push(bytes[j]);
                    j += 1;
                }
                if j >= bytes.len() {
                    return Err(LexError {
                        line: number,
                        column,
                        message: "unterminated string".to_string(),
                    });
                }
                tokens.push(Token::Str(s));
                i = j + 1;
            }
            _ if c.is_ascii_digit() || c == '.' => {
                let mut j = i;
                let mut text = String::new();
                let mut seen_dot = false;
                while j < bytes.len() {
                    let d = bytes[j];
                    if d.is_ascii_digit() {
                        text.push(d);
                    } else if d == '.' && !seen_dot {
                        seen_dot = true;
                        text.push(d);
                    } else if (d == 'e' || d == 'E')
                        && j + 1 < bytes.len()
                        && (bytes[j + 1].is_ascii_digit()
                            || bytes[j + 1] == '+'
                            || bytes[j + 1] == '-')
                    {
                        text.push(d);
                        j += 1;
                        text.push(bytes[j]);
                    } else {
                        break;
                    }
                    j += 1;
                }
                match text.parse::<f64>() {
                    Ok(v) => tokens.push(Token::Number(v)),
                    Err(_) => {
                        return Err(LexError {
                            line: number,
                            column,
                            message: format!("malformed number '{}'", text),
                        })
                    }
                }
                i = j;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                let mut name = String::new();
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == '_') {
                    name.push(bytes[j]);
                    j += 1;
                }
                tokens.push(Token::Ident(name));
                i = j;
            }
            ',' => {
                // Decimal commas are documented as unsupported; saying so
                // beats a generic "illegal character".
                return Err(LexError {
                    line: number,
                    column,
                    message: "',' is not valid here (use '.' as the decimal separator)"
                        .to_string(),
                });
            }
            other => {
                return Err(LexError {
                    line: number,
                    column,
                    message: format!("illegal character '{}'", other),
                });
            }
        }
    }
    Ok(tokens)
}
