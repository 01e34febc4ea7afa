//! Command-line front end for `tetra-core`.

pub mod args;
pub mod commands;
pub mod report;
pub mod suites;

use args::{Format, ParseOutcome};
pub use commands::{execute, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

/// Captured output of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, S>(argv: I) -> Invocation
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match args::parse(argv) {
        Err(ParseOutcome::Display(text)) => Invocation { stdout: text, stderr: String::new(), code: EXIT_OK },
        Err(ParseOutcome::Usage(line)) => Invocation {
            stdout: String::new(),
            stderr: format!("tetra: {}\n", line.trim_start_matches("error: ")),
            code: EXIT_USAGE,
        },
        Ok(cli) => {
            let (report, code) = execute(&cli.command);
            let stdout = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            let stderr = match report.result.get("error") {
                Some(e) => format!("tetra: {}\n", e.as_str().unwrap_or_default()),
                None => String::new(),
            };
            Invocation { stdout, stderr, code }
        }
    }
}
