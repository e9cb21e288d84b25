//! Command-line front end: `analyze` runs the full pipeline on a JSON input
//! and prints a report, `sigma-g` lists the spherical roots of a group, and
//! `check-saturation` verifies that the monoid is saturated in its lattice.
//!
//! Exit codes: 0 success, 1 internal error, 2 validation error, 3 saturation
//! failure.

use clap::{Parser, Subcommand, ValueEnum};
use sphmod_cli::doc::{self, parse_group_string, render_root_combination, InputDocument};
use sphmod_cli::text;
use sphmod::moduli::{analyze, AnalyzeOptions};
use sphmod::spherical::{enumerate_sigma_g, sigma_root_coefficients};
use sphmod::zlinalg::LatticeBasis;
use sphmod::{cones, rootsys, spherical, Error};
use std::io::Read;

#[derive(Parser)]
#[command(name = "sphmod", version, about = "Combinatorial invariants of moduli of affine spherical varieties with a prescribed weight monoid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a weight monoid: spherical roots, components, deviant roots,
    /// tangent weights and verdicts.
    Analyze {
        /// Input JSON file, or "-" for standard input.
        path: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Skip the saturation check and trust the input.
        #[arg(long)]
        assume_saturated: bool,
        /// Also decide whether the monoid is G-saturated.
        #[arg(long)]
        check_g_saturated: bool,
    },
    /// List the spherical roots of a group, e.g. "A3" or "B2xA1+T1".
    SigmaG {
        #[arg(long)]
        group: String,
    },
    /// Exit 0 when the monoid is saturated, 3 with a witness otherwise.
    CheckSaturation {
        /// Input JSON file, or "-" for standard input.
        path: String,
    },
}

const EXIT_OK: i32 = 0;

/// Writes to standard output, treating a closed pipe as an ordinary early
/// exit rather than an error.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {e}");
            std::process::exit(EXIT_INTERNAL);
        }
        std::process::exit(EXIT_OK);
    }
}
const EXIT_INTERNAL: i32 = 1;
const EXIT_VALIDATION: i32 = 2;
const EXIT_SATURATION: i32 = 3;

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NotSaturated { .. } => EXIT_SATURATION,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_VALIDATION,
    }
}

fn read_input(path: &str) -> Result<InputDocument, String> {
    let data = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    serde_json::from_str(&data).map_err(|e| format!("invalid input document: {e}"))
}

fn cmd_analyze(
    path: &str,
    format: Format,
    assume_saturated: bool,
    check_g_saturated: bool,
) -> i32 {
    let input = match read_input(path) {
        Ok(i) => i,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_VALIDATION;
        }
    };
    let spec = match input.group.to_spec() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    let options = AnalyzeOptions {
        assume_saturated: assume_saturated || input.options.assume_saturated,
        check_g_saturated,
    };
    let report = match analyze(spec, &input.weights(), &options) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let document = match doc::report_to_document(&report) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    match format {
        Format::Json => match serde_json::to_string_pretty(&document) {
            Ok(s) => emit(&format!("{s}\n")),
            Err(e) => {
                eprintln!("error: serialization failed: {e}");
                return EXIT_INTERNAL;
            }
        },
        Format::Text => emit(&text::render(&document)),
    }
    EXIT_OK
}

fn cmd_sigma_g(group: &str) -> i32 {
    let spec = match parse_group_string(group) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    let rs = match rootsys::build(spec) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    let roots = enumerate_sigma_g(&rs);
    let mut out = format!("group: {}\nspherical roots: {}\n", rs.spec(), roots.len());
    for r in &roots {
        let coeffs = sigma_root_coefficients(&rs, r);
        let pi_pp: Vec<String> = r.pi_pp.iter().map(|i| format!("a{}", i + 1)).collect();
        let pi_pp = if pi_pp.is_empty() { "{}".to_string() } else { format!("{{{}}}", pi_pp.join(", ")) };
        out.push_str(&format!(
            "  {}  shape {}{}{}  Pi^pp: {}\n",
            render_root_combination(&coeffs),
            r.table_row,
            if r.halved { " (halved)" } else { "" },
            if r.spherically_closed { "  [closed]" } else { "" },
            pi_pp,
        ));
    }
    emit(&out);
    EXIT_OK
}

fn cmd_check_saturation(path: &str) -> i32 {
    let input = match read_input(path) {
        Ok(i) => i,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_VALIDATION;
        }
    };
    let spec = match input.group.to_spec() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    let rs = match rootsys::build(spec) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VALIDATION;
        }
    };
    let ctx = match spherical::gamma_context(rs, &input.weights()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let ambient: Vec<Vec<sphmod::Int>> =
        ctx.generators.iter().map(|w| w.coords.clone()).collect();
    let lattice: &LatticeBasis = &ctx.lattice;
    match cones::saturation_witness(&ambient, lattice) {
        Ok(None) => {
            emit("saturated\n");
            EXIT_OK
        }
        Ok(Some(witness)) => {
            let coords: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            emit(&format!("not saturated; first missing element: ({})\n", coords.join(",")));
            EXIT_SATURATION
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { path, format, assume_saturated, check_g_saturated } => {
            cmd_analyze(&path, format, assume_saturated, check_g_saturated)
        }
        Command::SigmaG { group } => cmd_sigma_g(&group),
        Command::CheckSaturation { path } => cmd_check_saturation(&path),
    };
    std::process::exit(code);
}
