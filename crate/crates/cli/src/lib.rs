//! `bipconn` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error or oversized oracle instance,
//! 2 certificate failed verification. Data goes to `out`, diagnostics to `err`.

pub mod document;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use bipconn_core::{
    build_packing, build_witness, kappa_bipartite, kappa_terminal, min_terminal_index, normalize,
    oracle_kappa_k, oracle_spanning_packing, BipartiteOrder, Error, KappaBreakdown, Side,
    TerminalSet,
};
use clap::{Parser, Subcommand, ValueEnum};

use crate::document::{
    emit_dot, emit_json, flip_i, parse_json, verify_document, CertificateDocument, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bipconn",
    version,
    about = "Generalized k-connectivity of K_{a,b} with tree-packing certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print κ_k(K_{a,b}), or the per-terminal-set breakdown.
    Kappa {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: usize,
        /// Print A2/A1/A0 counts for every valid i (or only --i).
        #[arg(long)]
        breakdown: bool,
        /// Terminals on the first side.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Emit a maximum edge-disjoint spanning-tree packing.
    Pack {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit a maximum set of internally disjoint trees connecting S_i.
    Witness {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: usize,
        /// Terminals on the first side; defaults to a minimizing index.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Re-validate a JSON certificate.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Exhaustive search: spanning-tree packing number, or κ_k with --k.
    Oracle {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print "k<TAB>kappa" for every 2 <= k <= a+b.
    Table {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Kappa {
            a,
            b,
            k,
            breakdown,
            i,
        } => {
            let order = normalize(a, b)?;
            if !breakdown && i.is_none() {
                writeln!(out, "{}", kappa_bipartite(&order, k)?)?;
                return Ok(());
            }
            bipconn_core::bipartite::check_k(&order, k)?;
            let indices: Vec<usize> = match i {
                Some(i) => vec![caller_to_normalized(&order, k, i)?],
                None => TerminalSet::index_range(&order, k).collect(),
            };
            for n in indices {
                let bd = kappa_terminal(&order, k, n)?;
                writeln!(out, "{}", format_breakdown(&order, k, n, &bd))?;
            }
        }
        Command::Pack { a, b, format } => {
            let packing = build_packing(&normalize(a, b)?)?;
            emit(out, &CertificateDocument::from_packing(&packing), format)?;
        }
        Command::Witness { a, b, k, i, format } => {
            let order = normalize(a, b)?;
            bipconn_core::bipartite::check_k(&order, k)?;
            let n = match i {
                Some(i) => caller_to_normalized(&order, k, i)?,
                None => min_terminal_index(&order, k)?,
            };
            let witness = build_witness(&order, k, n)?;
            emit(out, &CertificateDocument::from_witness(&witness), format)?;
        }
        Command::Verify { input } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| usage(format!("cannot read {}: {e}", input.display())))?;
            let doc = parse_json(&text).map_err(|e| usage(format!("not a certificate: {e}")))?;
            match verify_document(&doc).map_err(|e| usage(e.0))? {
                Verdict::Valid { trees } => writeln!(out, "ok: {trees} trees verified")?,
                Verdict::Invalid(f) => {
                    return Err(Failure {
                        code: EXIT_VERIFY,
                        message: format!("verification failed: {}: {}", f.kind, f.detail),
                    })
                }
            }
        }
        Command::Oracle { a, b, k } => {
            let order = normalize(a, b)?;
            let value = match k {
                Some(k) => oracle_kappa_k(order.a(), order.b(), k)?,
                None => oracle_spanning_packing(order.a(), order.b())?.count,
            };
            writeln!(out, "{value}")?;
        }
        Command::Table { a, b } => {
            let order = normalize(a, b)?;
            for k in 2..=order.vertex_count() {
                writeln!(out, "{k}\t{}", kappa_bipartite(&order, k)?)?;
            }
        }
    }
    Ok(())
}

fn caller_to_normalized(order: &BipartiteOrder, k: usize, i: usize) -> Result<usize, Failure> {
    if i > k {
        return Err(usage(format!("i = {i} exceeds k = {k}")));
    }
    let n = flip_i(order, k, i);
    bipconn_core::terminal_set(order, k, n)?;
    Ok(n)
}

fn format_breakdown(order: &BipartiteOrder, k: usize, n: usize, bd: &KappaBreakdown) -> String {
    let side = match bd.a1_side {
        None => "-".to_owned(),
        Some(s) => {
            let s = if order.swapped() { s.opposite() } else { s };
            match s {
                Side::X => "first".to_owned(),
                Side::Y => "second".to_owned(),
            }
        }
    };
    format!(
        "i={}\ta2={}\ta1={}\ta1_side={side}\ta0={}\tkappa={}",
        flip_i(order, k, n),
        bd.a2,
        bd.a1,
        bd.a0,
        bd.kappa
    )
}

fn emit(out: &mut dyn Write, doc: &CertificateDocument, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", emit_json(doc)),
        Format::Dot => write!(out, "{}", emit_dot(doc)),
    }
}
