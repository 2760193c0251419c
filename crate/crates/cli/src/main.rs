use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use mspan::generators::{gen_cai, gen_from_buco, gen_intractable, parse_dimacs, IntractableLayout};
use mspan::verify::{verify_buco_reduction, verify_cai, verify_intractable, verify_unweighted_bound};
use mspan::{
    buco_brute, buco_dp, enumerate_front_with, eval, extreme_dichotomic, extreme_from_front, BucoInstance,
    EvalMode, ExtremeCertificate, Report, SolveOptions, Spanner, WeightedGraph, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "mspan", version, about = "Exact biobjective spanner tools")]
struct Cli {
    /// Maximum number of positive-cost edges to enumerate over.
    #[arg(long, global = true, env = "MSPAN_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "MSPAN_JOBS")]
    jobs: Option<usize>,
    /// Output file; `-` is stdout.
    #[arg(short, long, global = true, default_value = "-")]
    output: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate instances.
    #[command(subcommand)]
    Generate(Generate),
    /// Evaluate a spanner.
    Eval {
        instance: PathBuf,
        spanner: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::EdgeRestricted)]
        mode: Mode,
    },
    /// Exact Pareto front.
    Pareto {
        instance: PathBuf,
        /// Include one witness spanner per point.
        #[arg(long)]
        witnesses: bool,
    },
    /// Extreme points with weight certificates.
    Extreme {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = ExtremeMethod::Hull)]
        method: ExtremeMethod,
    },
    /// BUCO front.
    #[command(subcommand)]
    Buco(Buco),
    /// Check the structural claims; exit 1 on FAIL.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Args)]
struct MetaOut {
    /// Sidecar metadata file (default: `<output>.meta.json` when -o is a file).
    #[arg(long)]
    meta: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Generate {
    Intractable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        directed: bool,
        #[command(flatten)]
        meta: MetaOut,
    },
    FromBuco {
        file: PathBuf,
        #[arg(long)]
        directed: bool,
        #[command(flatten)]
        meta: MetaOut,
    },
    FromCnf {
        file: PathBuf,
        #[command(flatten)]
        meta: MetaOut,
    },
}

#[derive(Subcommand)]
enum Buco {
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BucoMethod::Dp)]
        method: BucoMethod,
    },
}

#[derive(Subcommand)]
enum Verify {
    Intractable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        directed: bool,
    },
    Buco {
        file: PathBuf,
        #[arg(long)]
        directed: bool,
    },
    Cai {
        file: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
    },
    Unweighted {
        instance: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    EdgeRestricted,
    AllPairs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtremeMethod {
    Hull,
    Dichotomic,
}

#[derive(Clone, Copy, ValueEnum)]
enum BucoMethod {
    Brute,
    Dp,
}

#[derive(Deserialize)]
struct AssignmentFile {
    assignment: Vec<bool>,
}

#[derive(Serialize)]
struct ExtremeOutput<'a> {
    certificates: &'a [ExtremeCertificate],
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = read_input(path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_instance(path: &Path) -> Result<WeightedGraph> {
    let text = read_input(path)?;
    WeightedGraph::from_json(&text).with_context(|| format!("loading instance {}", path.display()))
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        io::stdout().lock().write_all(text.as_bytes()).context("writing stdout")
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

impl MetaOut {
    fn path(&self, output: &Path) -> Option<PathBuf> {
        self.meta.clone().or_else(|| {
            (output.as_os_str() != "-").then(|| {
                let mut p = output.as_os_str().to_owned();
                p.push(".meta.json");
                PathBuf::from(p)
            })
        })
    }
}

impl Cli {
    fn options(&self, witnesses: bool) -> SolveOptions {
        SolveOptions {
            budget: self.budget,
            jobs: self.jobs,
            witnesses,
        }
    }

    fn emit_generated<M: Serialize>(&self, g: &WeightedGraph, meta: &M, sidecar: &MetaOut) -> Result<()> {
        write_output(&self.output, &to_json(g))?;
        if let Some(path) = sidecar.path(&self.output) {
            write_output(&path, &to_json(meta))?;
        }
        Ok(())
    }

    fn report(&self, report: &Report) -> Result<ExitCode> {
        write_output(&self.output, &to_json(report))?;
        Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
    }

    fn run(&self) -> Result<ExitCode> {
        match &self.command {
            Command::Generate(Generate::Intractable { n, directed, meta }) => {
                let g = gen_intractable(*n, *directed)?;
                self.emit_generated(&g, &IntractableLayout::new(*n), meta)?;
            }
            Command::Generate(Generate::FromBuco { file, directed, meta }) => {
                let inst: BucoInstance = read_json(file)?;
                let (g, m) = gen_from_buco(&inst, *directed)?;
                self.emit_generated(&g, &m, meta)?;
            }
            Command::Generate(Generate::FromCnf { file, meta }) => {
                let cnf = parse_dimacs(&read_input(file)?)?;
                let (g, m) = gen_cai(&cnf)?;
                self.emit_generated(&g, &m, meta)?;
            }
            Command::Eval { instance, spanner, mode } => {
                let g = read_instance(instance)?;
                let s: Spanner = read_json(spanner)?;
                let mode = match mode {
                    Mode::EdgeRestricted => EvalMode::EdgeRestricted,
                    Mode::AllPairs => EvalMode::AllPairs,
                };
                write_output(&self.output, &to_json(&eval(&g, &s, mode)?))?;
            }
            Command::Pareto { instance, witnesses } => {
                let g = read_instance(instance)?;
                let front = enumerate_front_with(&g, &self.options(*witnesses))?;
                write_output(&self.output, &to_json(&front))?;
            }
            Command::Extreme { instance, method } => {
                let g = read_instance(instance)?;
                let certificates = match method {
                    ExtremeMethod::Hull => extreme_from_front(&enumerate_front_with(&g, &self.options(false))?),
                    ExtremeMethod::Dichotomic => extreme_dichotomic(&g, &self.options(false))?,
                };
                write_output(&self.output, &to_json(&ExtremeOutput { certificates: &certificates }))?;
            }
            Command::Buco(Buco::Solve { file, method }) => {
                let inst: BucoInstance = read_json(file)?;
                let front = match method {
                    BucoMethod::Brute => buco_brute(&inst)?,
                    BucoMethod::Dp => buco_dp(&inst)?,
                };
                write_output(&self.output, &to_json(&front))?;
            }
            Command::Verify(Verify::Intractable { n, directed }) => {
                return self.report(&verify_intractable(*n, *directed, &self.options(false))?);
            }
            Command::Verify(Verify::Buco { file, directed }) => {
                let inst: BucoInstance = read_json(file)?;
                return self.report(&verify_buco_reduction(&inst, *directed, &self.options(false))?);
            }
            Command::Verify(Verify::Cai { file, assignment }) => {
                let cnf = parse_dimacs(&read_input(file)?)?;
                let a: AssignmentFile = read_json(assignment)?;
                return self.report(&verify_cai(&cnf, &a.assignment)?);
            }
            Command::Verify(Verify::Unweighted { instance }) => {
                let g = read_instance(instance)?;
                return self.report(&verify_unweighted_bound(&g, &self.options(false))?);
            }
        }
        Ok(ExitCode::SUCCESS)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("mspan: {e:#}");
            ExitCode::from(2)
        }
    }
}
