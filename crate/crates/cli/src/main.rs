use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use lefschetz_core::complex::{cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary, Face};
use lefschetz_core::harness::{
    load_wlp_input, parse_corpus_name, run_check_wlp, run_experiment, run_verify, Cell, CheckKind, Experiment,
    OutputFormat, RunConfig, Table, SEED_ENV_VAR,
};
use lefschetz_core::lefschetz::Outcome;
use lefschetz_core::stellar::Status;

/// Exit status when a Lefschetz witness was not found.
const EXIT_NO_WITNESS: u8 = 2;
/// Exit status when a proved statement failed on certified premises.
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "lefschetz-lab", version, about = "Lefschetz properties of Stanley-Reisner rings under stellar subdivision")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 32003)]
    prime: u64,
    /// Random witnesses tried per Lefschetz test.
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    #[arg(long, global = true, env = SEED_ENV_VAR)]
    seed: Option<u64>,
    /// Largest degree compared by degreewise checks (default d + q + 2).
    #[arg(long = "max-degree", global = true)]
    max_degree: Option<usize>,
    #[arg(long, global = true, default_value = "json")]
    output: String,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generated complex as JSON.
    Gen {
        #[command(subcommand)]
        spec: GenSpec,
    },
    /// Test the weak Lefschetz property of a complex or an ideal.
    CheckWlp {
        /// Corpus name, complex JSON file, or ideal JSON file.
        input: String,
        /// Number of random linear forms appended (default: dim + 1 for a
        /// complex, 0 for an ideal).
        #[arg(long)]
        forms: Option<usize>,
    },
    /// Run stellar-subdivision checks on one (complex, face) pair.
    Verify(VerifyArgs),
    /// Run a registered experiment and print its table.
    Experiment { name: String },
}

#[derive(Subcommand, Debug)]
enum GenSpec {
    /// Boundary of the cyclic polytope with N vertices in dimension D.
    Cyclic { n: u32, dim: u32 },
    /// Boundary of the simplex on N vertices.
    SimplexBoundary { n: u32 },
    /// Boundary of the M-dimensional cross-polytope.
    Cross { m: u32 },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Corpus name or complex JSON file.
    complex: String,
    /// Face to subdivide, as comma-separated vertex labels.
    #[arg(long)]
    sigma: String,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    hf: bool,
    #[arg(long = "c-decomposition")]
    c_decomposition: bool,
    #[arg(long)]
    g: bool,
    #[arg(long = "initial-ideal")]
    initial_ideal: bool,
    #[arg(long)]
    iq: bool,
    #[arg(long = "theorem-stellar")]
    theorem_stellar: bool,
    #[arg(long = "theorem-down")]
    theorem_down: bool,
    #[arg(long)]
    iff: bool,
    #[arg(long)]
    lemmas: bool,
    #[arg(long = "pa-pb")]
    pa_pb: bool,
    #[arg(long)]
    triple: bool,
    #[arg(long = "conjecture-g")]
    conjecture_g: bool,
}

impl VerifyArgs {
    fn kinds(&self) -> Vec<CheckKind> {
        use CheckKind::*;
        let picked: Vec<CheckKind> = [
            (self.hf, Hf),
            (self.c_decomposition, CDecomposition),
            (self.g, G),
            (self.initial_ideal, InitialIdeal),
            (self.iq, Iq),
            (self.theorem_stellar, TheoremStellar),
            (self.theorem_down, TheoremDown),
            (self.iff, Iff),
            (self.lemmas, LemmaConsistency),
            (self.pa_pb, PaPb),
            (self.triple, Triple),
            (self.conjecture_g, ConjectureG),
        ]
        .into_iter()
        .filter_map(|(on, k)| on.then_some(k))
        .collect();
        if self.all || picked.is_empty() {
            CheckKind::ALL.to_vec()
        } else {
            picked
        }
    }
}

fn parse_sigma(s: &str) -> Result<Face> {
    let labels = s
        .split(',')
        .map(|t| t.trim().parse::<u32>().with_context(|| format!("bad vertex label {t:?} in --sigma")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Face::from(labels))
}

fn run_config(g: &GlobalOpts) -> Result<RunConfig> {
    let mut cfg = RunConfig::new(g.prime, g.trials, RunConfig::resolve_seed(g.seed)?)?;
    cfg.m_max = g.max_degree;
    cfg.output = g.output.parse()?;
    cfg.jobs = g.jobs;
    Ok(cfg)
}

fn emit(table: &Table, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => println!("{}", table.to_json_string()),
        OutputFormat::Csv => print!("{}", table.to_csv_string()?),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = run_config(&cli.global)?;
    match cli.command {
        Command::Gen { spec } => {
            let complex = match spec {
                GenSpec::Cyclic { n, dim } => cyclic_polytope_boundary(n, dim)?,
                GenSpec::SimplexBoundary { n } => simplex_boundary(n)?,
                GenSpec::Cross { m } => cross_polytope_boundary(m)?,
            };
            println!("{}", complex.to_json_string());
            Ok(0)
        }
        Command::CheckWlp { input, forms } => {
            let input = load_wlp_input(&input, &cfg).with_context(|| format!("reading {input}"))?;
            let verdict = run_check_wlp(&input, forms, &cfg)?;
            match cfg.output {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&verdict)?),
                OutputFormat::Csv => {
                    let mut t = Table::new("check-wlp", &["property", "outcome", "prime", "seed", "trials"]);
                    let outcome = serde_json::to_value(verdict.outcome)?;
                    t.push(vec![
                        verdict.property.clone().into(),
                        outcome.as_str().unwrap_or_default().into(),
                        Cell::Int(i64::from(verdict.prime)),
                        verdict.seed.into(),
                        verdict.trials.into(),
                    ]);
                    emit(&t, OutputFormat::Csv)?;
                }
            }
            Ok(if verdict.outcome == Outcome::CertifiedTrue { 0 } else { EXIT_NO_WITNESS })
        }
        Command::Verify(args) => {
            let complex = parse_corpus_name(&args.complex)?.resolve()?;
            let sigma = parse_sigma(&args.sigma)?;
            let report = run_verify(complex, sigma, &args.kinds(), &cfg)?;
            match cfg.output {
                OutputFormat::Json => println!("{}", report.to_json_string()),
                OutputFormat::Csv => {
                    let mut t = Table::new("verify", &["check", "status"]);
                    for c in &report.checks {
                        let status = serde_json::to_value(c.status)?;
                        t.push(vec![c.name.clone().into(), status.as_str().unwrap_or_default().into()]);
                    }
                    emit(&t, OutputFormat::Csv)?;
                }
            }
            let violated = report.checks.iter().any(|c| c.status == Status::Violation);
            Ok(if violated { EXIT_VIOLATION } else { 0 })
        }
        Command::Experiment { name } => {
            let exp: Experiment = name.parse()?;
            emit(&run_experiment(exp, &cfg)?, cfg.output)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_parses() {
        assert_eq!(parse_sigma("1, 2").unwrap(), Face::from([1, 2]));
        assert!(parse_sigma("1,x").is_err());
    }

    #[test]
    fn no_flags_means_all_checks() {
        let cli = Cli::try_parse_from(["lefschetz-lab", "verify", "tetrahedron", "--sigma", "1,2"]).unwrap();
        let Command::Verify(args) = cli.command else { panic!("verify") };
        assert_eq!(args.kinds(), CheckKind::ALL.to_vec());
        let cli = Cli::try_parse_from(["lefschetz-lab", "verify", "--hf", "--iq", "x", "--sigma", "1"]).unwrap();
        let Command::Verify(args) = cli.command else { panic!("verify") };
        assert_eq!(args.kinds(), vec![CheckKind::Hf, CheckKind::Iq]);
    }
}
