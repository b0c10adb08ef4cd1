//! Command-line front end. Answers go to stdout, diagnostics to stderr,
//! and the exit code is part of the interface:
//!
//! 0 = yes, 1 = no, 2 = unreadable or unparseable input, 3 = an answer
//! failed its oracle re-check, 4 = instance too large for an exact check.

use clap::{Parser, Subcommand, ValueEnum};
use pfaffian::apps::{is_even_digraph, polya_matrix, sign_nonsingular, EvennessVerdict};
use pfaffian::graph::{BipartiteGraph, Orientation};
use pfaffian::io;
use pfaffian::oracle::{
    self, evenness_witness_bruteforce, is_pfaffian_by_definition, is_pfaffian_orientation,
    weighting_makes_all_circuits_odd, Limits,
};
use pfaffian::orient::{pfaffian_orientation, PfaffianVerdict};
use pfaffian::Error;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pfaffian", version, about = "Pfaffian orientations of bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Re-check answers with the exact oracle when the instance fits the
    /// limits; a failed re-check exits with code 3.
    #[arg(long, global = true)]
    verify: bool,

    /// Largest matrix order for exact permanent and determinant checks.
    #[arg(long, global = true, default_value_t = 24, value_parser = positive)]
    oracle_limit: usize,

    /// Largest cyclomatic number (or arc count) for exhaustive searches.
    #[arg(long, global = true, default_value_t = 20, value_parser = positive)]
    brute_limit: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a Pfaffian orientation of a bipartite graph, or report
    /// why none exists.
    Pfaffian { graph_file: PathBuf },
    /// Sign a 0-1 matrix so that its determinant equals its permanent.
    Polya { matrix_file: PathBuf },
    /// Decide whether a digraph is even; print a weighting witness if not.
    Even { digraph_file: PathBuf },
    /// Decide whether a sign matrix is sign-nonsingular.
    Sns { matrix_file: PathBuf },
    /// Check a given orientation of a graph against the exact oracle.
    Verify { graph_file: PathBuf, orientation_file: PathBuf },
    /// Print the brace decomposition tree of a bipartite graph.
    Decompose { graph_file: PathBuf },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("limit must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure that already knows its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail<T>(code: u8, message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure { code, message: message.into() })
}

trait OrFail<T> {
    fn or_fail(self) -> Result<T, Failure>;
}

impl<T> OrFail<T> for pfaffian::Result<T> {
    fn or_fail(self) -> Result<T, Failure> {
        self.map_err(|e| {
            let code = match e {
                Error::Parse { .. } => 2,
                Error::SizeLimit(_) => 4,
                _ => 70,
            };
            Failure { code, message: e.to_string() }
        })
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_matrix_order: cli.oracle_limit,
        max_cyclomatic: cli.brute_limit,
        ..Limits::default()
    };
    match run(&cli, &limits) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, limits: &Limits) -> Result<u8, Failure> {
    match &cli.command {
        Command::Pfaffian { graph_file } => cmd_pfaffian(graph_file, cli, limits),
        Command::Polya { matrix_file } => cmd_polya(matrix_file, cli, limits),
        Command::Even { digraph_file } => cmd_even(digraph_file, cli, limits),
        Command::Sns { matrix_file } => cmd_sns(matrix_file, limits),
        Command::Verify { graph_file, orientation_file } => {
            cmd_verify(graph_file, orientation_file, limits)
        }
        Command::Decompose { graph_file } => cmd_decompose(graph_file, cli),
    }
}

/// Oracle confirmation of a produced orientation, skipping instances the
/// limits rule out. The permanent route needs balanced sides; everything
/// else falls back to the definitional circuit check.
fn recheck_orientation(
    g: &BipartiteGraph,
    d: &Orientation,
    limits: &Limits,
) -> Result<(), Failure> {
    let checked = if g.n_a() == g.n_b() {
        is_pfaffian_orientation(g, d, limits)
    } else {
        is_pfaffian_by_definition(g, d, limits)
    };
    match checked {
        Ok(true) => Ok(()),
        Ok(false) => fail(3, "produced orientation failed the oracle re-check"),
        Err(Error::SizeLimit(_)) => Ok(()),
        Err(e) => Err(e).or_fail(),
    }
}

fn cmd_pfaffian(path: &Path, cli: &Cli, limits: &Limits) -> Result<u8, Failure> {
    let g = io::parse_bipartite_graph(&read(path)?).or_fail()?;
    match pfaffian_orientation(&g).or_fail()? {
        PfaffianVerdict::Yes { orientation, .. } => {
            if cli.verify {
                recheck_orientation(&g, &orientation, limits)?;
            }
            match cli.format {
                Format::Text => print!("{}", io::write_orientation(&orientation)),
                Format::Dot => print!("{}", io::orientation_to_dot(&g, &orientation)),
                Format::Json => {
                    let edges: Vec<serde_json::Value> = orientation
                        .iter()
                        .map(|((a, b), dir)| {
                            serde_json::json!({"a": a + 1, "b": b + 1, "dir": io::dir_token(dir)})
                        })
                        .collect();
                    println!("{}", serde_json::json!({"verdict": "yes", "edges": edges}));
                }
            }
            Ok(0)
        }
        PfaffianVerdict::No { reason, .. } => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"verdict": "no", "reason": reason.to_string()})
                ),
                _ => println!("NONE: {reason}"),
            }
            Ok(1)
        }
    }
}

fn cmd_polya(path: &Path, cli: &Cli, limits: &Limits) -> Result<u8, Failure> {
    let a = io::parse_zero_one_matrix(&read(path)?).or_fail()?;
    match polya_matrix(&a, limits).or_fail()? {
        Some(b) => {
            if cli.verify && a.n() <= limits.max_matrix_order {
                let per = oracle::permanent(&a, limits).or_fail()?;
                if oracle::determinant(&b) != per {
                    return fail(3, "signed matrix failed the permanent re-check");
                }
            }
            print!("{}", io::write_sign_matrix(&b));
            Ok(0)
        }
        None => {
            println!("NONE: the support admits no Pfaffian orientation");
            Ok(1)
        }
    }
}

fn cmd_even(path: &Path, cli: &Cli, limits: &Limits) -> Result<u8, Failure> {
    let d = io::parse_digraph(&read(path)?).or_fail()?;
    match is_even_digraph(&d).or_fail()? {
        EvennessVerdict::Even => {
            if cli.verify && d.n_arcs() <= limits.max_cyclomatic {
                if evenness_witness_bruteforce(&d, limits).or_fail()?.is_some() {
                    return fail(3, "evenness contradicted by the brute-force search");
                }
            }
            println!("EVEN");
            Ok(0)
        }
        EvennessVerdict::NotEven(w) => {
            if cli.verify {
                match weighting_makes_all_circuits_odd(&d, &w, limits) {
                    Ok(true) | Err(Error::SizeLimit(_)) => {}
                    Ok(false) => return fail(3, "witness leaves an even-weight circuit"),
                    Err(e) => return Err(e).or_fail(),
                }
            }
            println!("NOT-EVEN");
            for ((u, v), x) in w.iter() {
                println!("w {} {} {x}", u + 1, v + 1);
            }
            Ok(1)
        }
    }
}

fn cmd_sns(path: &Path, limits: &Limits) -> Result<u8, Failure> {
    let m = io::parse_sign_matrix(&read(path)?).or_fail()?;
    if sign_nonsingular(&m, limits).or_fail()? {
        println!("SNS");
        Ok(0)
    } else {
        println!("NOT-SNS");
        Ok(1)
    }
}

fn cmd_verify(graph_path: &Path, orientation_path: &Path, limits: &Limits) -> Result<u8, Failure> {
    let g = io::parse_bipartite_graph(&read(graph_path)?).or_fail()?;
    let d = io::parse_orientation(&read(orientation_path)?).or_fail()?;
    d.validate_against(&g)
        .map_err(|e| Failure { code: 2, message: format!("orientation does not fit the graph: {e}") })?;
    let ok = if g.n_a() == g.n_b() {
        is_pfaffian_orientation(&g, &d, limits).or_fail()?
    } else {
        is_pfaffian_by_definition(&g, &d, limits).or_fail()?
    };
    if ok {
        println!("PFAFFIAN");
        Ok(0)
    } else {
        println!("NOT-PFAFFIAN");
        Ok(1)
    }
}

fn cmd_decompose(path: &Path, cli: &Cli) -> Result<u8, Failure> {
    let g = io::parse_bipartite_graph(&read(path)?).or_fail()?;
    let verdict = pfaffian_orientation(&g).or_fail()?;
    let tree = match &verdict {
        PfaffianVerdict::Yes { tree, .. } | PfaffianVerdict::No { tree, .. } => tree,
    };
    match cli.format {
        Format::Text => print!("{}", tree.render_text()),
        Format::Json => println!("{}", tree.to_json()),
        Format::Dot => return fail(2, "dot output applies to orientations, not trees"),
    }
    Ok(0)
}
