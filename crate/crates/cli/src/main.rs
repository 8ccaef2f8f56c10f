use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;
use tuza_core::construct::{verify_certificates, ConstructionReport};
use tuza_core::io::{read_graph, write_graph};
use tuza_core::oracle::{exact_mu, exact_tau, DEFAULT_BUDGET};
use tuza_core::sweep::{self, Family, GraphClass, SweepOptions};
use tuza_core::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_CLASS: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_INEXACT: u8 = 4;

/// Triangle packings and hittings for threshold and co-chain graphs.
#[derive(Parser)]
#[command(name = "tuza", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graphs of a family as edge lists, plus manifest.json.
    Gen {
        /// threshold:<bits>, threshold-all:<n|a..b>, cochain:<profile-file>,
        /// cochain-rand:<ell>:<count>, clique:<n|a..b>
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run the construction and print the report (packing side).
    Pack(ConstructArgs),
    /// Run the construction and print the report (hitting side).
    Hit(ConstructArgs),
    /// Exact maximum packing or minimum hitting.
    #[command(group(ArgGroup::new("objective").required(true).args(["mu", "tau"])))]
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        mu: bool,
        #[arg(long)]
        tau: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a report against its graph.
    Verify { graph: PathBuf, report: PathBuf },
    /// Construct, verify and optionally solve exactly every graph of a family.
    Sweep {
        family: Family,
        /// Run the exact oracle on graphs with fewer vertices than this.
        #[arg(long, default_value_t = 0)]
        exact_below: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        class: Option<GraphClass>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct ConstructArgs {
    graph: PathBuf,
    /// Skip auto-detection.
    #[arg(long)]
    class: Option<GraphClass>,
    #[arg(long)]
    budget: Option<u64>,
}

fn budget(flag: Option<u64>) -> anyhow::Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("TUZA_ORACLE_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("TUZA_ORACLE_BUDGET is not a node count: {v:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn print_json(value: serde_json::Value) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, &value)?;
    writeln!(out)?;
    Ok(())
}

fn gen(family_arg: &str, seed: u64, out: &Path) -> anyhow::Result<u8> {
    let family: Family = family_arg.parse()?;
    let instances = sweep::generate(&family, seed)?;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let mut entries = Vec::with_capacity(instances.len());
    for inst in &instances {
        let file = format!("{}.txt", inst.id);
        write_graph(out.join(&file), &inst.graph)?;
        entries.push(json!({
            "id": inst.id,
            "file": file,
            "n": inst.graph.n(),
            "m": inst.graph.edge_count(),
            "descriptor": inst.descriptor,
        }));
    }
    let manifest = json!({ "family": family_arg, "seed": seed, "graphs": entries });
    fs::write(
        out.join("manifest.json"),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    Ok(0)
}

fn construct(args: &ConstructArgs) -> anyhow::Result<u8> {
    let g = read_graph(&args.graph)?;
    let (class, report) = sweep::construct(&g, args.class, None, budget(args.budget)?)?;
    let outcome = verify_certificates(&g, &report);
    let mut value = serde_json::to_value(&report)?;
    value["class"] = json!(class);
    print_json(value)?;
    if report.ratio_ok && outcome.passed {
        Ok(0)
    } else {
        eprintln!(
            "verification failed: {}",
            outcome
                .detail
                .as_deref()
                .unwrap_or("hitting exceeds twice the packing")
        );
        Ok(EXIT_VERIFY)
    }
}

fn oracle(graph: &Path, mu: bool, budget_flag: Option<u64>) -> anyhow::Result<u8> {
    let g = read_graph(graph)?;
    let b = budget(budget_flag)?;
    let result = if mu {
        exact_mu(&g, b)
    } else {
        exact_tau(&g, b)
    };
    print_json(serde_json::to_value(&result)?)?;
    if result.exact {
        Ok(0)
    } else {
        eprintln!("search stopped after {b} nodes; the value is a bound only");
        Ok(EXIT_INEXACT)
    }
}

fn verify(graph: &Path, report: &Path) -> anyhow::Result<u8> {
    let g = read_graph(graph)?;
    let text =
        fs::read_to_string(report).with_context(|| format!("reading {}", report.display()))?;
    let report: ConstructionReport = serde_json::from_str(&text).context("parsing report")?;
    let outcome = verify_certificates(&g, &report);
    print_json(serde_json::to_value(&outcome)?)?;
    Ok(if outcome.passed { 0 } else { EXIT_VERIFY })
}

fn run_sweep(
    family: &Family,
    seed: u64,
    opts: SweepOptions,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let instances = sweep::generate(family, seed)?;
    let rows = sweep::sweep(&instances, &opts)?;
    match out {
        Some(path) => {
            let file =
                fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
            sweep::write_csv(&rows, io::BufWriter::new(file))?;
        }
        None => sweep::write_csv(&rows, io::stdout().lock())?,
    }
    for row in rows.iter().filter(|r| !r.pass) {
        eprintln!(
            "{}: {}",
            row.graph_id,
            row.detail
                .as_deref()
                .unwrap_or("oracle disagrees with the certificates")
        );
    }
    Ok(if rows.iter().any(|r| !r.pass) {
        EXIT_VERIFY
    } else if rows.iter().any(|r| r.oracle_incomplete) {
        EXIT_INEXACT
    } else {
        0
    })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::NotInClass { .. } | Error::Precondition(_)) => EXIT_CLASS,
        Some(Error::Inexact(_)) => EXIT_INEXACT,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Gen { family, seed, out } => gen(family, *seed, out),
        Command::Pack(args) | Command::Hit(args) => construct(args),
        Command::Oracle {
            graph, mu, budget, ..
        } => oracle(graph, *mu, *budget),
        Command::Verify { graph, report } => verify(graph, report),
        Command::Sweep {
            family,
            exact_below,
            jobs,
            out,
            seed,
            class,
            budget: b,
        } => budget(*b).and_then(|budget| {
            let opts = SweepOptions {
                exact_below: *exact_below,
                budget,
                jobs: *jobs,
                class: *class,
            };
            run_sweep(family, *seed, opts, out.as_deref())
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            match e.downcast_ref::<Error>() {
                Some(Error::NotInClass {
                    witness: Some(w), ..
                }) => eprintln!("error: {e:#} (witness vertex {w})"),
                _ => eprintln!("error: {e:#}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
