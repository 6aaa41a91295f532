//! `betpo`: command-line access to the betweenness library.
//!
//! Exit codes: 0 positive verdict, 2 negative verdict, 1 I/O, parse or
//! usage failure. Payloads go to stdout, diagnostics to stderr.

mod dot;
mod format;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use betpo_core::generators;
use betpo_core::mso::{theta_check, MsoVerdict, DEFAULT_MAX_COMPONENT};
use betpo_core::oracle::{exhaustive_structure_scan, posets_with_betweenness};
use betpo_core::{
    betweenness_of, cut_of, ext_graph, is_b_minimal, is_b_reconstructible, minimize, recognize,
    solutions_b_minimal, Error, Poset, RecognitionOutcome, TernaryStructure,
};
use clap::{Parser, Subcommand};

use crate::format::{parse, write_poset, write_ternary, StructureFile};

#[derive(Parser)]
#[command(
    name = "betpo",
    version,
    about = "Betweenness relations of finite partial orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a ternary structure is the betweenness of a poset
    Check {
        /// Ternary structure file, `-` for stdin
        file: String,
        /// Write the witness poset here (`OUT.<i>` per solution with --all-solutions)
        #[arg(long, value_name = "OUT")]
        emit_poset: Option<PathBuf>,
        /// Produce every B-minimal solution instead of one
        #[arg(long)]
        all_solutions: bool,
    },
    /// Print the betweenness structure of a poset
    Bet { file: String },
    /// Print the least sub-order with the same betweenness
    Minimize { file: String },
    /// Print a cut (L, U) of a poset without isolated elements
    Cut { file: String },
    /// Evaluate the MSO characterization componentwise by subset search
    Mso {
        file: String,
        /// Largest component searched exhaustively
        #[arg(long, env = "BETPO_MAX_COMPONENT", default_value_t = DEFAULT_MAX_COMPONENT)]
        max_component: usize,
    },
    /// Is the poset determined by its betweenness up to reversal?
    Reconstructible { file: String },
    /// Print the graph of extremal elements of a ternary structure
    Ext {
        file: String,
        #[arg(long)]
        dot: bool,
    },
    /// Write a generated structure or poset
    #[command(subcommand)]
    Gen(Gen),
    /// Exhaustive brute-force checks
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Subcommand)]
enum Gen {
    /// B-cycle on 2K vertices
    Bcycle {
        k: usize,
    },
    /// Fence poset on 2K vertices (K even)
    Fence {
        k: usize,
    },
    /// Chain 0 < 1 < ... < N-1
    Chain {
        n: usize,
    },
    Example3,
    Example5,
    /// Random poset: each forward pair with probability P, then closed
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Oracle {
    /// Compare recognition with the oracle on all B2-closed structures on N vertices
    Scan { n: usize },
    /// Count the posets whose betweenness is the given structure
    Count { file: String },
}

/// A command's result: its exit status, or a failure reported on stderr.
type Status = Result<ExitCode, String>;

const NEGATIVE: u8 = 2;

fn verdict(positive: bool) -> ExitCode {
    if positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(NEGATIVE)
    }
}

fn read_input(file: &str) -> Result<String, String> {
    if file == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))
    }
}

fn load(file: &str) -> Result<StructureFile, String> {
    parse(&read_input(file)?).map_err(|e| format!("{file}: {e}"))
}

fn load_ternary(file: &str) -> Result<TernaryStructure, String> {
    match load(file)? {
        StructureFile::Ternary(s) => Ok(s),
        StructureFile::Poset(_) => Err(format!("{file}: expected a `ternary` file, found `poset`")),
    }
}

fn load_poset(file: &str) -> Result<Poset, String> {
    match load(file)? {
        StructureFile::Poset(p) => Ok(p),
        StructureFile::Ternary(_) => {
            Err(format!("{file}: expected a `poset` file, found `ternary`"))
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn join(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn check(file: &str, emit: Option<&Path>, all: bool) -> Status {
    let s = load_ternary(file)?;
    match recognize(&s) {
        RecognitionOutcome::Accepted(witness) => {
            println!("accepted");
            if all {
                let solutions = solutions_b_minimal(&s).map_err(|e| e.to_string())?;
                println!("solutions: {}", solutions.len());
                if let Some(out) = emit {
                    for (i, p) in solutions.iter().enumerate() {
                        let mut path = out.as_os_str().to_owned();
                        path.push(format!(".{i}"));
                        write_file(Path::new(&path), &write_poset(p))?;
                    }
                }
            } else if let Some(out) = emit {
                write_file(out, &write_poset(&witness))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        RecognitionOutcome::Rejected(r) => {
            println!("rejected {}", r.reason);
            println!("component: {}", join(r.component.iter().copied()));
            if let Some(w) = &r.witness {
                println!("witness: {}", join(w.iter().copied()));
            }
            Ok(verdict(false))
        }
    }
}

fn run(cli: Cli) -> Status {
    match cli.command {
        Command::Check {
            file,
            emit_poset,
            all_solutions,
        } => check(&file, emit_poset.as_deref(), all_solutions),
        Command::Bet { file } => {
            print!("{}", write_ternary(&betweenness_of(&load_poset(&file)?)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimize { file } => {
            let p = load_poset(&file)?;
            let m = minimize(&p);
            for (x, y) in p.pairs().filter(|&(x, y)| !m.lt(x, y)) {
                println!("# removed {x} {y}");
            }
            print!("{}", write_poset(&m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cut { file } => match cut_of(&load_poset(&file)?) {
            Ok(c) => {
                println!("L: {}", join(c.lower));
                println!("U: {}", join(c.upper));
                Ok(ExitCode::SUCCESS)
            }
            Err(e @ (Error::HasIsolatedElement { .. } | Error::EmptyUniverse)) => {
                eprintln!("betpo: {e}");
                Ok(verdict(false))
            }
            Err(e) => Err(e.to_string()),
        },
        Command::Mso {
            file,
            max_component,
        } => {
            let s = load_ternary(&file)?;
            match theta_check(&s, max_component).map_err(|e| e.to_string())? {
                MsoVerdict::Satisfied { witnesses } => {
                    println!("satisfied");
                    for w in witnesses {
                        println!("component: {}", join(w.component));
                        println!("L: {}", join(w.lower));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                MsoVerdict::Unsatisfied { component } => {
                    println!("unsatisfied");
                    println!("component: {}", join(component));
                    Ok(verdict(false))
                }
            }
        }
        Command::Reconstructible { file } => {
            let yes = is_b_reconstructible(&load_poset(&file)?);
            println!("{}", if yes { "yes" } else { "no" });
            Ok(verdict(yes))
        }
        Command::Ext { file, dot } => {
            let g = ext_graph(&load_ternary(&file)?);
            if dot {
                print!("{}", dot::to_dot(&g, "ext"));
            } else {
                println!("vertices: {}", join(g.vertices()));
                for (u, v) in g.edges() {
                    println!("{u} {v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(g) => {
            let text = match g {
                Gen::Bcycle { k } => {
                    write_ternary(&generators::b_cycle(k).map_err(|e| e.to_string())?)
                }
                Gen::Fence { k } => {
                    write_poset(&generators::fence_poset(k).map_err(|e| e.to_string())?)
                }
                Gen::Chain { n } => write_poset(&generators::chain(n)),
                Gen::Example3 => write_poset(&generators::example3()),
                Gen::Example5 => write_poset(&generators::example5()),
                Gen::Random { n, p, seed } => {
                    write_poset(&generators::random_poset(n, p, seed).map_err(|e| e.to_string())?)
                }
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(Oracle::Scan { n }) => {
            let report = exhaustive_structure_scan(n).map_err(|e| e.to_string())?;
            println!("{report}");
            Ok(verdict(report.disagreements == 0))
        }
        Command::Oracle(Oracle::Count { file }) => {
            let s = load_ternary(&file)?;
            let posets = posets_with_betweenness(&s).map_err(|e| e.to_string())?;
            println!("posets: {}", posets.len());
            println!(
                "b-minimal: {}",
                posets.iter().filter(|p| is_b_minimal(p)).count()
            );
            Ok(verdict(!posets.is_empty()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("betpo: {msg}");
            ExitCode::FAILURE
        }
    }
}
