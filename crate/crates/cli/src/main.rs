// one report per process; not worth boxing
#![allow(clippy::result_large_err)]

use clap::{Parser, Subcommand};
use raagcoh::cert::SubsetPolicy;
use raagcoh_cli::{
    cmd_certify, cmd_classify, cmd_demushkin, cmd_massey, cmd_oracle, exit_code, Report,
};
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Z/p cohomology of pro-p RAAGs: classification verdicts, exactness
/// certificates, Massey witnesses and the Demushkin suite.
#[derive(Parser)]
#[command(name = "raagcoh", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the machine-readable JSON report
    #[arg(long, global = true, conflicts_with = "human")]
    json: bool,
    /// Emit the human rendering (default)
    #[arg(long, global = true)]
    human: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the graph by the theorem cascade
    Classify {
        graph: PathBuf,
        #[arg(short)]
        p: Option<u32>,
    },
    /// Run the per-support exactness ledger with certificates
    Certify {
        graph: PathBuf,
        #[arg(short)]
        p: Option<u32>,
        /// Force exhaustive subset enumeration
        #[arg(long, conflicts_with = "sample")]
        all_subsets: bool,
        /// Sample this many support subsets instead
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Build the unipotent Massey witness for a character tuple
    Massey {
        graph: PathBuf,
        chars: PathBuf,
        #[arg(short)]
        p: Option<u32>,
        #[arg(short)]
        n: Option<usize>,
        /// Also run the exhaustive search and compare
        #[arg(long)]
        oracle: bool,
    },
    /// Exhaustive unipotent search on the RAAG presentation
    Oracle {
        graph: PathBuf,
        chars: PathBuf,
        #[arg(short)]
        p: Option<u32>,
        #[arg(short)]
        n: Option<usize>,
    },
    /// Symplectic basis, H2 exactness and corestriction table for an
    /// alternating form (standard form when no file is given)
    Demushkin {
        #[arg(short)]
        p: Option<u32>,
        #[arg(short)]
        d: usize,
        form: Option<PathBuf>,
    },
}

fn read(path: &PathBuf, command: &str, echo: &BTreeMap<String, String>) -> Result<String, Report> {
    std::fs::read_to_string(path).map_err(|e| Report {
        command: command.into(),
        input: echo.clone(),
        warnings: Vec::new(),
        exit_code: exit_code::PARSE,
        body: raagcoh_cli::ReportBody::Error {
            message: format!("cannot read {}: {e}", path.display()),
        },
    })
}

fn main() {
    let cli = Cli::parse();
    let report = run(&cli.command);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.human());
    }
    std::process::exit(report.exit_code);
}

fn run(cmd: &Command) -> Report {
    match cmd {
        Command::Classify { graph, p } => {
            let mut echo = BTreeMap::new();
            echo.insert("graph".into(), graph.display().to_string());
            if let Some(p) = p {
                echo.insert("p".into(), p.to_string());
            }
            match read(graph, "classify", &echo) {
                Ok(text) => cmd_classify(&text, *p, echo),
                Err(r) => r,
            }
        }
        Command::Certify { graph, p, all_subsets, sample } => {
            let mut echo = BTreeMap::new();
            echo.insert("graph".into(), graph.display().to_string());
            if let Some(p) = p {
                echo.insert("p".into(), p.to_string());
            }
            let policy = if *all_subsets {
                echo.insert("subsets".into(), "all".into());
                SubsetPolicy::AllSubsets
            } else if let Some(n) = sample {
                echo.insert("subsets".into(), format!("sample {n}"));
                SubsetPolicy::Sample(*n)
            } else {
                SubsetPolicy::Auto
            };
            match read(graph, "certify", &echo) {
                Ok(text) => cmd_certify(&text, *p, policy, echo),
                Err(r) => r,
            }
        }
        Command::Massey { graph, chars, p, n, oracle } => {
            let mut echo = BTreeMap::new();
            echo.insert("graph".into(), graph.display().to_string());
            echo.insert("chars".into(), chars.display().to_string());
            let gtext = match read(graph, "massey", &echo) {
                Ok(t) => t,
                Err(r) => return r,
            };
            let ctext = match read(chars, "massey", &echo) {
                Ok(t) => t,
                Err(r) => return r,
            };
            cmd_massey(&gtext, &ctext, *p, *n, *oracle, echo)
        }
        Command::Oracle { graph, chars, p, n } => {
            let mut echo = BTreeMap::new();
            echo.insert("graph".into(), graph.display().to_string());
            echo.insert("chars".into(), chars.display().to_string());
            let gtext = match read(graph, "oracle", &echo) {
                Ok(t) => t,
                Err(r) => return r,
            };
            let ctext = match read(chars, "oracle", &echo) {
                Ok(t) => t,
                Err(r) => return r,
            };
            cmd_oracle(&gtext, &ctext, *p, *n, echo)
        }
        Command::Demushkin { p, d, form } => {
            let mut echo = BTreeMap::new();
            echo.insert("d".into(), d.to_string());
            if let Some(p) = p {
                echo.insert("p".into(), p.to_string());
            }
            let form_text = match form {
                Some(path) => {
                    echo.insert("form".into(), path.display().to_string());
                    match read(path, "demushkin", &echo) {
                        Ok(t) => Some(t),
                        Err(r) => return r,
                    }
                }
                None => None,
            };
            cmd_demushkin(*p, *d, form_text.as_deref(), echo)
        }
    }
}
