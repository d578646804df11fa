//! Command-line front end for `gdp-core`.
//!
//! [`run`] executes a parsed [`Cli`] against any writer and returns the exit
//! [`Status`]; the `gdp` binary is a thin wrapper around it.

pub mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gdp_core::oracle::{
    all_catalan_subsets, enumerate_hilbert_basis, kostka_reducible_bruteforce, reducible_bruteforce,
};
use gdp_core::{
    build_pi, common_reduce_with_limit, reduce, Error, KostkaOutcome, KostkaPair, ReduceOutcome,
    RunProfile, SearchBudget, SignedList, DEFAULT_SEARCH_LIMIT,
};
use serde_json::{json, Value};

pub use render::{path_vertices, render_svg, RenderSpec};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// A decomposition or split was found (or the command has no verdict).
    Found = 0,
    Irreducible = 1,
    Undecided = 2,
    InvalidInput = 3,
    BudgetExceeded = 4,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// A failed command: message for stderr plus the exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded(_) => Status::BudgetExceeded,
            _ => Status::InvalidInput,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            status: Status::InvalidInput,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gdp",
    version,
    about = "Reduce generalized Catalan lists and Kostka pairs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// A list given as one or more comma/space separated chunks, e.g.
/// `5,5,-3,-7` or `5 5 -3 -7`.
#[derive(Debug, Args)]
pub struct ListArg {
    #[arg(value_name = "LIST", num_args = 0..)]
    pub list: Vec<String>,
}

impl ListArg {
    fn parse(&self) -> Result<SignedList, Failure> {
        Ok(self.list.join(" ").parse()?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report the Catalan verdict, cost, width and run maxima.
    Check(ListArg),
    /// Decompose a Catalan list or certify that it is irreducible.
    Reduce {
        /// Widest list searched exhaustively when cost exceeds width.
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        list: ListArg,
    },
    /// Print the staircase permutation and the reordered list.
    Pi(ListArg),
    /// Find a common column split of a pair `λ / μ`.
    Kostka {
        /// Number of rows; defaults to the longer of the two partitions.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
        /// `λ / μ`, e.g. `5,3,1 / 3,3,2,1`.
        #[arg(value_name = "PAIR", required = true, num_args = 1..)]
        pair: Vec<String>,
    },
    /// Draw the list as a lattice path in SVG.
    Render {
        /// Positions drawn in the part color.
        #[arg(long, value_delimiter = ',')]
        highlight: Option<Vec<usize>>,
        /// Pixels per lattice unit.
        #[arg(long, default_value_t = 10.0)]
        scale: f64,
        /// Draw the axes.
        #[arg(long)]
        axis: bool,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        list: ListArg,
    },
    /// Exhaustive searches.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// First decomposition in lexicographic order, or `none`.
    Reduce {
        #[arg(long, default_value_t = SearchBudget::default().max_width)]
        max_width: usize,
        #[command(flatten)]
        list: ListArg,
    },
    /// Every position set carrying a Catalan sublist.
    Subsets {
        #[arg(long, default_value_t = SearchBudget::default().max_width)]
        max_width: usize,
        #[command(flatten)]
        list: ListArg,
    },
    /// First vector-sum decomposition of a pair `λ / μ`, or `none`.
    Kostka {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = SearchBudget::default().max_pair_size)]
        max_size: usize,
        #[arg(value_name = "PAIR", required = true, num_args = 1..)]
        pair: Vec<String>,
    },
    /// Irreducible pairs in `r` rows with `1 ≤ |λ| ≤ n`.
    Hilbert {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_pair_size)]
        max_size: usize,
    },
}

/// Lists may begin with a negative entry (`-1,1`), which clap would read as a
/// short flag. Tokens of the form `-<digit>…` get a leading space; list and
/// partition parsing ignore surrounding whitespace.
pub fn shield_negative_tokens<I: IntoIterator<Item = String>>(args: I) -> Vec<String> {
    args.into_iter()
        .map(|a| {
            let mut chars = a.chars();
            if chars.next() == Some('-') && chars.next().is_some_and(|c| c.is_ascii_digit()) {
                format!(" {a}")
            } else {
                a
            }
        })
        .collect()
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, Failure> {
    match &cli.command {
        Command::Check(list) => check(&list.parse()?, out),
        Command::Reduce { limit, json, list } => reduce_cmd(&list.parse()?, *limit, *json, out),
        Command::Pi(list) => {
            let p = build_pi(&list.parse()?)?;
            writeln!(out, "{p}")?;
            writeln!(out, "reordered={}", p.reordered)?;
            Ok(Status::Found)
        }
        Command::Kostka {
            r,
            limit,
            json,
            pair,
        } => kostka_cmd(&KostkaPair::parse(&pair.join(" "), *r)?, *limit, *json, out),
        Command::Render {
            highlight,
            scale,
            axis,
            output,
            list,
        } => {
            let spec = RenderSpec {
                scale: *scale,
                highlight: highlight.clone(),
                axis: *axis,
            };
            let svg = render_svg(&list.parse()?, &spec)?;
            match output {
                Some(path) => fs::write(path, svg).map_err(|e| Failure {
                    status: Status::InvalidInput,
                    message: format!("cannot write {}: {e}", path.display()),
                })?,
                None => out.write_all(svg.as_bytes())?,
            }
            Ok(Status::Found)
        }
        Command::Oracle(sub) => oracle_cmd(sub, out),
    }
}

fn check(xs: &SignedList, out: &mut dyn Write) -> Result<Status, Failure> {
    if !xs.is_generalized_catalan() {
        writeln!(out, "catalan=false")?;
        return Ok(Status::Found);
    }
    if xs.is_empty() {
        writeln!(out, "catalan=true cost=0 width=0 y=0 alphas= betas=")?;
        return Ok(Status::Found);
    }
    let runs = RunProfile::of(xs)?;
    writeln!(
        out,
        "catalan=true cost={} width={} y={} alphas={} betas={}",
        runs.cost(),
        runs.width(),
        runs.y,
        join(&runs.alphas),
        join(&runs.betas),
    )?;
    Ok(Status::Found)
}

fn reduce_cmd(
    xs: &SignedList,
    limit: usize,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<Status, Failure> {
    let outcome = reduce(xs, limit)?;
    if as_json {
        writeln!(out, "{}", reduce_json(xs, &outcome))?;
    } else {
        writeln!(out, "{outcome}")?;
    }
    Ok(match outcome {
        ReduceOutcome::Decomposition { .. } => Status::Found,
        ReduceOutcome::Irreducible(_) => Status::Irreducible,
        ReduceOutcome::Undecided { .. } => Status::Undecided,
    })
}

/// Machine-readable record for a list outcome.
pub fn reduce_json(xs: &SignedList, outcome: &ReduceOutcome) -> Value {
    match outcome {
        ReduceOutcome::Decomposition {
            decomposition,
            route,
        } => json!({
            "kind": outcome.kind(),
            "part": decomposition.part,
            "complement": decomposition.complement(xs.len()),
            "route": route.to_string(),
        }),
        ReduceOutcome::Irreducible(cert) => json!({
            "kind": outcome.kind(),
            "certificate": cert,
        }),
        ReduceOutcome::Undecided { width, limit } => json!({
            "kind": outcome.kind(),
            "width": width,
            "limit": limit,
        }),
    }
}

fn kostka_cmd(
    kp: &KostkaPair,
    limit: usize,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<Status, Failure> {
    let outcome = common_reduce_with_limit(kp, limit)?;
    if as_json {
        writeln!(out, "{}", kostka_json(kp, &outcome)?)?;
    } else {
        match &outcome {
            KostkaOutcome::Split(split) => {
                let (a, b) = split.halves(kp)?;
                writeln!(out, "kind=split columns={}", join(&split.columns))?;
                writeln!(out, "part lambda={} mu={}", a.lambda(), a.mu())?;
                writeln!(out, "rest lambda={} mu={}", b.lambda(), b.mu())?;
            }
            KostkaOutcome::Irreducible(cert) => {
                let reason = match cert.reason {
                    gdp_core::IrreducibleReason::SingleColumn => "single-column".to_string(),
                    gdp_core::IrreducibleReason::Coprime { alpha1, beta1 } => {
                        format!("coprime alpha1={alpha1} beta1={beta1}")
                    }
                    gdp_core::IrreducibleReason::Exhaustive => "exhaustive".to_string(),
                };
                let shape = |r: &Option<gdp_core::Rectangle>| {
                    r.map_or("none".to_string(), |r| format!("{}x{}", r.rows, r.columns))
                };
                writeln!(
                    out,
                    "kind=irreducible reason={reason} lambda_rectangle={} mu_rectangle={}",
                    shape(&cert.lambda_rectangle),
                    shape(&cert.mu_rectangle),
                )?;
            }
            KostkaOutcome::Undecided { width, limit } => {
                writeln!(out, "kind=undecided width={width} limit={limit}")?;
            }
        }
    }
    Ok(match outcome {
        KostkaOutcome::Split(_) => Status::Found,
        KostkaOutcome::Irreducible(_) => Status::Irreducible,
        KostkaOutcome::Undecided { .. } => Status::Undecided,
    })
}

/// Machine-readable record for a pair outcome.
pub fn kostka_json(kp: &KostkaPair, outcome: &KostkaOutcome) -> Result<Value, Failure> {
    Ok(match outcome {
        KostkaOutcome::Split(split) => {
            let (a, b) = split.halves(kp)?;
            let half = |h: &KostkaPair| json!({"lambda": h.lambda().parts(), "mu": h.mu().parts()});
            json!({
                "kind": outcome.kind(),
                "columns": split.columns,
                "part": half(&a),
                "rest": half(&b),
            })
        }
        KostkaOutcome::Irreducible(cert) => json!({
            "kind": outcome.kind(),
            "certificate": cert,
        }),
        KostkaOutcome::Undecided { width, limit } => json!({
            "kind": outcome.kind(),
            "width": width,
            "limit": limit,
        }),
    })
}

fn oracle_cmd(sub: &OracleCommand, out: &mut dyn Write) -> Result<Status, Failure> {
    let defaults = SearchBudget::default();
    match sub {
        OracleCommand::Reduce { max_width, list } => {
            let budget = SearchBudget {
                max_width: *max_width,
                ..defaults
            };
            let xs = list.parse()?;
            catalan_input(&xs)?;
            match reducible_bruteforce(&xs, &budget)? {
                Some(d) => {
                    writeln!(out, "part={}", join(&d.part))?;
                    Ok(Status::Found)
                }
                None => {
                    writeln!(out, "none")?;
                    Ok(Status::Irreducible)
                }
            }
        }
        OracleCommand::Subsets { max_width, list } => {
            let budget = SearchBudget {
                max_width: *max_width,
                ..defaults
            };
            for set in all_catalan_subsets(&list.parse()?, &budget)? {
                writeln!(out, "{{{}}}", join(&set))?;
            }
            Ok(Status::Found)
        }
        OracleCommand::Kostka { r, max_size, pair } => {
            let budget = SearchBudget {
                max_pair_size: *max_size,
                ..defaults
            };
            let kp = KostkaPair::parse(&pair.join(" "), *r)?;
            match kostka_reducible_bruteforce(&kp, &budget)? {
                Some((a, b)) => {
                    writeln!(out, "{a} + {b}")?;
                    Ok(Status::Found)
                }
                None => {
                    writeln!(out, "none")?;
                    Ok(Status::Irreducible)
                }
            }
        }
        OracleCommand::Hilbert { r, n, max_size } => {
            let budget = SearchBudget {
                max_pair_size: *max_size,
                ..defaults
            };
            for kp in enumerate_hilbert_basis(*r, *n, &budget)? {
                writeln!(out, "{kp}")?;
            }
            Ok(Status::Found)
        }
    }
}

fn catalan_input(xs: &SignedList) -> Result<(), Failure> {
    if xs.is_generalized_catalan() {
        Ok(())
    } else {
        Err(Error::NotCatalan.into())
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
