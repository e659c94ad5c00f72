//! The `circlepack` command line.
//!
//! [`run`] parses arguments, runs one subcommand and writes CSV, JSON or SVG.
//! It returns the process exit code: 0 on success, 1 for invalid input
//! (including malformed arguments), 2 when verification finds a residual
//! above the tolerance.

pub mod args;
pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Map, Value};

use crate::args::{Cli, Format};
use crate::commands::{execute, JsonShape, Outcome};
use crate::output::{rows_json, write_csv, write_svg};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if help {
                let _ = stdout.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = stderr.write_all(text.as_bytes());
            return EXIT_INPUT;
        }
    };
    let opts = &cli.output;
    if !(opts.tolerance.is_finite() && opts.tolerance >= 0.0) {
        let _ = writeln!(
            stderr,
            "error: --tolerance: must be finite and non-negative"
        );
        return EXIT_INPUT;
    }

    let outcome = match execute(&cli.command, opts.tolerance) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
    };

    let digits = opts.precision;
    let bytes = match opts.format {
        Format::Csv => match write_csv(&outcome.table, digits) {
            Ok(b) => b,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
        },
        Format::Json => {
            let value = to_json(&outcome, digits, opts.verify());
            let mut b = serde_json::to_vec_pretty(&value).expect("json values serialize");
            b.push(b'\n');
            b
        }
        Format::Svg => write_svg(&outcome.figure, digits).into_bytes(),
    };

    let written = match &opts.out {
        Some(path) => std::fs::write(path, &bytes)
            .map_err(|e| format!("--out: cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(&bytes)
            .and_then(|()| stdout.flush())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_INPUT;
    }

    if outcome.truncated {
        let _ = writeln!(
            stderr,
            "warning: chain truncated, radii fell below the representable range"
        );
    }
    if opts.verify() && !outcome.report.pass {
        let worst = outcome.report.worst();
        let _ = match worst {
            Some(w) => writeln!(
                stderr,
                "verification failed: circle {} {}: residual {:e} exceeds tolerance {:e}",
                w.circle, w.constraint, w.value, outcome.report.tolerance
            ),
            None => writeln!(stderr, "verification failed"),
        };
        return EXIT_VERIFY;
    }
    EXIT_OK
}

fn to_json(o: &Outcome, digits: u8, verify: bool) -> Value {
    let rows = rows_json(&o.table, digits);
    match o.shape {
        JsonShape::Flat => rows
            .as_array()
            .and_then(|r| r.first().cloned())
            .unwrap_or(Value::Null),
        JsonShape::Listing(key) => {
            let mut m = Map::new();
            m.insert("region".into(), json!(o.region));
            m.insert("parameters".into(), o.parameters.clone());
            m.insert("truncated".into(), json!(o.truncated));
            m.insert(
                "verification".into(),
                if verify {
                    json!({
                        "pass": o.report.pass,
                        "max_residual": o.report.max_residual,
                        "tolerance": o.report.tolerance,
                    })
                } else {
                    Value::Null
                },
            );
            for (k, v) in &o.extra {
                m.insert(k.clone(), v.clone());
            }
            m.insert(key.into(), rows);
            Value::Object(m)
        }
    }
}
