use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use grundy_core::families::{Family, FamilySpec};
use grundy_core::graph::{parse_graph6, to_graph6};
use grundy_core::verify::{
    run_suite, search_counterexample, CheckId, CheckResult, Conjecture, Corpus,
};
use grundy_core::{Graph, InvariantReport};

#[derive(Parser)]
#[command(
    name = "glab",
    version,
    about = "Grundy number laboratory for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for every graph in a graph6 or edge-list file
    Invariants {
        /// Input file, or `-` for standard input
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build a family member and print it with its expected invariants
    Generate(GenerateArgs),
    /// Run bound checks over an enumerated or file corpus
    Verify(VerifyArgs),
    /// Search enumerated graphs for a counterexample to a conjecture
    Search {
        /// conj1 or conj2
        #[arg(long)]
        conjecture: Conjecture,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Write graph6 here and the metadata to `<file>.json`
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or a comma-separated list of check ids
    #[arg(long, default_value = "all")]
    suite: String,
    /// Enumerate every graph on 1..=N vertices
    #[arg(long, required_unless_present = "corpus", conflicts_with = "corpus")]
    max_n: Option<usize>,
    /// graph6 file, one graph per line
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a violation was found.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Invariants { input, format } => invariants(&input, format),
        Command::Generate(args) => generate(args).map(|()| true),
        Command::Verify(args) => verify(args),
        Command::Search { conjecture, max_n } => {
            let outcome = search_counterexample(conjecture, max_n)?;
            println!("{}", serde_json::to_string_pretty(&outcome)?);
            Ok(outcome.witness.is_none())
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// An edge list starts with an `n m` header; anything else is graph6.
fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    let Some(first) = first else {
        bail!("input contains no graphs")
    };
    let header: Vec<&str> = first.split_whitespace().collect();
    if header.len() == 2 && header.iter().all(|t| t.parse::<usize>().is_ok()) {
        return Ok(vec![Graph::parse_edge_list(text)?]);
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| parse_graph6(l).with_context(|| format!("graph on line {}", i + 1)))
        .collect()
}

fn invariants(input: &Path, format: Format) -> Result<bool> {
    let graphs = parse_graphs(&read_input(input)?)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut clean = true;
    let mut writer = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(InvariantReport::CSV_HEADER)?;
            Some(w)
        }
        Format::Json => None,
    };
    for g in &graphs {
        let report = InvariantReport::compute(g)?;
        let broken = report.bound_violations();
        if !broken.is_empty() {
            eprintln!("{}: bound violations {broken:?}", report.graph6);
            clean = false;
        }
        match writer.as_mut() {
            Some(w) => w.write_record(report.csv_record())?,
            None => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        }
    }
    if let Some(w) = writer {
        out.write_all(&w.into_inner()?)?;
    }
    Ok(clean)
}

fn generate(args: GenerateArgs) -> Result<()> {
    let values = args
        .family
        .params()
        .iter()
        .map(|&p| {
            let v = match p {
                "n" => args.n,
                "k" => args.k,
                "t" => args.t,
                "a" => args.a,
                "b" => args.b,
                _ => None,
            };
            v.with_context(|| format!("family {} needs --{p}", args.family))
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = FamilySpec::new(args.family, &values)?;
    let g6 = to_graph6(&spec.build()?)?;
    let meta = serde_json::to_string(&spec)?;
    match args.output {
        Some(path) => {
            fs::write(&path, format!("{g6}\n"))
                .with_context(|| format!("writing {}", path.display()))?;
            let mut side = path.into_os_string();
            side.push(".json");
            fs::write(&side, format!("{meta}\n"))
                .with_context(|| format!("writing {}", side.to_string_lossy()))?;
        }
        None => {
            println!("{g6}");
            println!("{meta}");
        }
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let checks = CheckId::parse_list(&args.suite)?;
    let corpus = match (&args.corpus, args.max_n) {
        (Some(path), _) => {
            Corpus::from_graph6(format!("file {}", path.display()), &read_input(path)?)?
        }
        (None, Some(n)) => Corpus::enumerated(n)?,
        (None, None) => bail!("either --max-n or --corpus is required"),
    };
    let run = run_suite(&corpus, &checks, args.jobs)?;
    let report = &run.report;
    let body = match args.format {
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Csv => results_csv(&run.results)?,
    };
    match &args.output {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().write_all(body.as_bytes())?,
    }
    eprintln!(
        "{} graphs, {} checks, {} violations in {:.2?}",
        report.graphs,
        checks.len(),
        report.violation_count(),
        report.elapsed
    );
    Ok(report.violation_count() == 0)
}

fn results_csv(results: &[CheckResult]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CheckResult::CSV_HEADER)?;
    for r in results {
        w.write_record(r.csv_record())?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
