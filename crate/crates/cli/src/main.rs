//! `okuncli` - batch interpreter, one-shot command runner and REPL.
//!
//! Usage:
//!   okuncli run <script.inp> [--out DIR] [--seed N]
//!   okuncli -e "<command>" [-e "<command>" ...] [--out DIR] [--seed N]
//!   okuncli repl [--out DIR] [--seed N]
//!
//! `--out` (or the OKUNCLI_OUT environment variable) chooses where plot files
//! land; script and data paths are resolved against the current directory.
//! Exit codes: 0 success, 1 parse error, 2 runtime error.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use okun_core::scriptlang::{self, ScriptProgram};
use okun_core::session::{ScriptIo, Session};

/// Filesystem-backed `ScriptIo`: reads resolve against the working directory,
/// writes (plot files) land in the output directory.
struct FsIo {
    out_dir: PathBuf,
}

impl FsIo {
    fn new(out_dir: PathBuf) -> std::io::Result<Self> {
        if !out_dir.as_os_str().is_empty() {
            std::fs::create_dir_all(&out_dir)?;
        }
        Ok(FsIo { out_dir })
    }
}

impl ScriptIo for FsIo {
    fn read_file(&mut self, path: &str) -> Result<String, String> {
        let expanded = expand_home(path);
        std::fs::read_to_string(&expanded)
            .map_err(|e| format!("cannot read '{}': {}", expanded.display(), e))
    }

    fn write_file(&mut self, path: &str, contents: &str) -> Result<(), String> {
        let full = self.out_dir.join(path);
        std::fs::write(&full, contents)
            .map_err(|e| format!("cannot write '{}': {}", full.display(), e))
    }
}

fn expand_home(path: &str) -> PathBuf {
    if let Some(rest) = path.strip_prefix("~/") {
        if let Some(home) = std::env::var_os("HOME") {
            return Path::new(&home).join(rest);
        }
    }
    PathBuf::from(path)
}

enum Mode {
    Run(String),
    Eval(Vec<String>),
    Repl,
}

struct Options {
    mode: Mode,
    out_dir: PathBuf,
    seed: Option<u64>,
}

fn usage() -> &'static str {
    "usage: okuncli run <script.inp> [--out DIR] [--seed N]\n       \
     okuncli -e \"<command>\" [-e ...] [--out DIR] [--seed N]\n       \
     okuncli repl [--out DIR] [--seed N]"
}

fn parse_args(args: &[String]) -> Result<Options, String> {
    let mut mode: Option<Mode> = None;
    let mut out_dir: Option<PathBuf> = None;
    let mut seed: Option<u64> = None;
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "run" if mode.is_none() => {
                i += 1;
                let path = args.get(i).ok_or("'run' needs a script path")?;
                mode = Some(Mode::Run(path.clone()));
            }
            "repl" if mode.is_none() => {
                mode = Some(Mode::Repl);
            }
            "-e" => {
                i += 1;
                let cmd = args.get(i).ok_or("'-e' needs a command string")?;
                match &mut mode {
                    Some(Mode::Eval(cmds)) => cmds.push(cmd.clone()),
                    None => mode = Some(Mode::Eval(vec![cmd.clone()])),
                    _ => return Err("'-e' cannot be combined with run/repl".into()),
                }
            }
            "--out" => {
                i += 1;
                let dir = args.get(i).ok_or("'--out' needs a directory")?;
                out_dir = Some(PathBuf::from(dir));
            }
            "--seed" => {
                i += 1;
                let n = args.get(i).ok_or("'--seed' needs a number")?;
                seed = Some(n.parse().map_err(|_| format!("bad seed '{}'", n))?);
            }
            other => return Err(format!("unknown argument '{}'", other)),
        }
        i += 1;
    }
    let mode = mode.ok_or_else(usage)?;
    let out_dir = out_dir
        .or_else(|| std::env::var_os("OKUNCLI_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    Ok(Options { mode, out_dir, seed })
}

fn make_session(opts: &Options) -> Result<Session<FsIo>, String> {
    let io = FsIo::new(opts.out_dir.clone()).map_err(|e| e.to_string())?;
    Ok(match opts.seed {
        Some(s) => Session::with_seed_override(io, s),
        None => Session::new(io),
    })
}

fn flush_output(session: &mut Session<FsIo>) {
    let text = session.take_output();
    if !text.is_empty() {
        print!("{}", text);
        let _ = std::io::stdout().flush();
    }
}

/// Parse first so syntax problems exit with 1 before anything runs.
fn parse_or_exit1(source: &str, origin: &str) -> Result<ScriptProgram, ExitCode> {
    scriptlang::parse_program(source).map_err(|e| {
        eprintln!("{}: {}", origin, e);
        ExitCode::from(1)
    })
}

fn run_program(session: &mut Session<FsIo>, program: &ScriptProgram) -> ExitCode {
    let result = session.execute(program);
    flush_output(session);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn repl(session: &mut Session<FsIo>) -> ExitCode {
    let stdin = std::io::stdin();
    eprint!("? ");
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(_) => break,
        };
        match scriptlang::parse_program(&line) {
            Ok(program) => {
                if let Err(e) = session.execute(&program) {
                    flush_output(session);
                    eprintln!("error: {}", e);
                } else {
                    flush_output(session);
                }
            }
            Err(e) => eprintln!("parse error: {}", e),
        }
        eprint!("? ");
    }
    eprintln!();
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let opts = match parse_args(&args) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("{}", msg);
            eprintln!("{}", usage());
            return ExitCode::from(1);
        }
    };
    let mut session = match make_session(&opts) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {}", msg);
            return ExitCode::from(2);
        }
    };

    match &opts.mode {
        Mode::Run(path) => {
            let source = match std::fs::read_to_string(expand_home(path)) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: cannot read '{}': {}", path, e);
                    return ExitCode::from(2);
                }
            };
            let program = match parse_or_exit1(&source, path) {
                Ok(p) => p,
                Err(code) => return code,
            };
            run_program(&mut session, &program)
        }
        Mode::Eval(commands) => {
            let source = commands.join("\n");
            let program = match parse_or_exit1(&source, "-e") {
                Ok(p) => p,
                Err(code) => return code,
            };
            run_program(&mut session, &program)
        }
        Mode::Repl => repl(&mut session),
    }
}
