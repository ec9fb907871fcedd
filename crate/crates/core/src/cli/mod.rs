//! Batch front end: model files, command dispatch and reports.

mod command;
mod model;
mod report;

use std::path::PathBuf;

use clap::Parser;

pub use command::Command;
pub use model::{
    degree_guard_from_env, int_matrix_display, parse_model_file, ElementDecl, IntMatrixDecl,
    MapDecl, ModelFile, ModuleDecl, RingDecl, SubmoduleDecl,
};
pub use report::{Block, Entry, Format, Report};

use crate::error::Error;
use crate::resolution::DEFAULT_DEPTH;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gproj", version, about = "Homological algebra over quotients of polynomial rings")]
pub struct Cli {
    /// Model file declaring rings, modules, maps and tasks
    pub model: PathBuf,
    #[command(subcommand)]
    pub command: Command,
    /// Resolution and Ext depth
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    pub depth: usize,
    /// Maximum degree during Groebner computations [default: 32, or GPROJ_DEGREE_GUARD]
    #[arg(long, global = true)]
    pub degree_guard: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Rendered output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_rejection() {
        EXIT_REJECTED
    } else {
        EXIT_INPUT
    }
}

fn status(code: i32) -> &'static str {
    match code {
        EXIT_OK => "ok",
        EXIT_REJECTED => "rejected",
        _ => "input_error",
    }
}

/// Runs the tasks of a model in order; the exit code is the worst one.
pub fn run_report(model: &ModelFile, depth: usize, format: Format) -> (String, i32) {
    let mut out = String::new();
    let mut worst = EXIT_OK;
    let mut top = Block::new();
    top.kv("tasks", model.tasks.len());
    if format == Format::Machine {
        out.push_str(&top.machine());
    }
    for (i, task) in model.tasks.iter().enumerate() {
        let words = task.words().join(" ");
        let (code, rendered) = match task.run(model, depth) {
            Ok(r) => {
                let code = if r.rejected { EXIT_REJECTED } else { EXIT_OK };
                let mut b = r.body.clone();
                b.entries.insert(1, ("status".into(), Entry::Value(status(code).into())));
                (code, (r.summary, b))
            }
            Err(e) => {
                let code = exit_code(&e);
                let mut b = Block::new();
                b.kv("command", &words).kv("status", status(code)).kv("error", &e);
                (code, (format!("error: {e}"), b))
            }
        };
        worst = worst.max(code);
        let (summary, body) = rendered;
        match format {
            Format::Machine => {
                let mut wrap = Block::new();
                wrap.block(&format!("task{}", i + 1), body);
                out.push_str(&wrap.machine());
            }
            Format::Text => {
                out.push_str(&format!("== {words} ==\n{summary}\n"));
                out.push_str(&report::indent(&body.text(), 2));
            }
        }
    }
    (out, worst)
}

/// Parses arguments, loads the model and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let fail = |e: Error| Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: exit_code(&e),
    };
    let guard = match cli.degree_guard {
        Some(g) => g,
        None => match degree_guard_from_env() {
            Ok(g) => g,
            Err(e) => return fail(e),
        },
    };
    let text = match std::fs::read_to_string(&cli.model) {
        Ok(t) => t,
        Err(e) => return fail(Error::Model(format!("cannot read {}: {e}", cli.model.display()))),
    };
    let model = match parse_model_file(&text, guard) {
        Ok(m) => m,
        Err(e) => return fail(Error::Model(format!("{}: {e}", cli.model.display()))),
    };
    if cli.command == Command::Report {
        let (stdout, code) = run_report(&model, cli.depth, cli.format);
        return Outcome {
            stdout,
            stderr: String::new(),
            code,
        };
    }
    match cli.command.run(&model, cli.depth) {
        Ok(r) => Outcome {
            stdout: r.render(cli.format),
            stderr: String::new(),
            code: if r.rejected { EXIT_REJECTED } else { EXIT_OK },
        },
        Err(e) => fail(e),
    }
}
