//! Command-line interface: compute Betti tables and regularity for a graph
//! file, run named verification checks, and enumerate graph families.
//!
//! Exit codes: 0 success/pass, 1 usage or input error, 2 resource budget
//! exceeded, 3 verification failures present.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lcmreg::error::{Budgets, Error, Result};
use lcmreg::field::FieldSpec;
use lcmreg::graph::{parse_graph, render_graph, GraphFamily, NamedFamily};
use lcmreg::report::{compute_report, compute_report_csv, lattice_dump};
use lcmreg::verify::{run_check, CheckConfig, CHECK_IDS};

#[derive(Parser)]
#[command(
    name = "lcmreg",
    about = "Exact lcm-lattice homology, Betti numbers and regularity of edge ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Betti tables, regularity and lattice shape for a graph file.
    Compute(ComputeArgs),
    /// Run a named verification check over a graph family.
    Verify(VerifyArgs),
    /// Enumerate a graph family in the graph text format.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Maximum number of lcm-lattice elements.
    #[arg(long, default_value_t = Budgets::default().max_lattice_elements)]
    element_budget: usize,
    /// Maximum number of order-complex faces.
    #[arg(long, default_value_t = Budgets::default().max_faces)]
    face_budget: u64,
    /// Worker threads (defaults to the number of processors).
    #[arg(long)]
    jobs: Option<usize>,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph file: first line `n <count>`, then one `u v` edge per line.
    #[arg(long)]
    graph: PathBuf,
    /// Power of the edge ideal.
    #[arg(long, default_value_t = 1)]
    power: u32,
    /// Coefficient fields: q, f2, f3, ... (repeatable).
    #[arg(long = "field", value_parser = FieldSpec::parse)]
    fields: Vec<FieldSpec>,
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    output: String,
    /// Write the lcm-lattice (element exponent vectors and degrees) to a
    /// JSON file for debugging.
    #[arg(long)]
    dump_lattice: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: purity, chordal, froberg, cycle-sphere, lcm-hochster, cf-reg,
    /// square-power, genphan, li-bound, cf-lemmas.
    #[arg(long)]
    check: String,
    /// Sizes to run, comma separated (max acts as n_max; cycle-sphere runs
    /// each listed n).
    #[arg(long, value_delimiter = ',', default_value = "5")]
    n: Vec<u32>,
    /// Sample count for n >= 6 instead of exhaustive enumeration; requires
    /// an explicit seed.
    #[arg(long, requires = "seed")]
    samples: Option<u32>,
    /// Seed for sampling.
    #[arg(long)]
    seed: Option<u64>,
    /// Edge-ideal power for the purity check.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Largest degree restriction for li-bound.
    #[arg(long, default_value_t = 4)]
    i_max: u32,
    /// Override the check's default fields (repeatable).
    #[arg(long = "field", value_parser = FieldSpec::parse)]
    fields: Vec<FieldSpec>,
    /// Extra named instances, e.g. cycle-complement:6 (repeatable).
    #[arg(long = "extra", value_parser = parse_extra)]
    extras: Vec<(NamedFamily, u32)>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// One of: cf, chordal-complement, cycle-complement, all.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    common: CommonArgs,
}

fn parse_extra(s: &str) -> std::result::Result<(NamedFamily, u32), String> {
    let (fam, n) = s
        .split_once(':')
        .ok_or_else(|| format!("expected FAMILY:N, got {s:?}"))?;
    let family = NamedFamily::parse(fam).map_err(|e| e.to_string())?;
    let n: u32 = n.parse().map_err(|_| format!("bad size {n:?}"))?;
    Ok((family, n))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Compute(args) => {
            setup(&args.common)?;
            let budgets = budgets_of(&args.common);
            let text = std::fs::read_to_string(&args.graph).map_err(|e| {
                Error::InvalidInput(format!("cannot read {}: {e}", args.graph.display()))
            })?;
            let g = parse_graph(&text)?;
            let fields = if args.fields.is_empty() {
                vec![FieldSpec::F2, FieldSpec::Rationals]
            } else {
                args.fields.clone()
            };
            let report = compute_report(&g, args.power, &fields, &budgets)?;
            if let Some(path) = &args.dump_lattice {
                let dump = lattice_dump(&g, args.power, &budgets)?;
                std::fs::write(
                    path,
                    serde_json::to_string_pretty(&dump).expect("dump serialization cannot fail"),
                )?;
            }
            let rendered = match args.output.as_str() {
                "csv" => compute_report_csv(&report),
                _ => serde_json::to_string_pretty(&report)
                    .expect("report serialization cannot fail"),
            };
            emit(&args.common, &rendered)?;
            Ok(0)
        }
        Command::Verify(args) => {
            setup(&args.common)?;
            if !CHECK_IDS.contains(&args.check.as_str()) {
                return Err(Error::UnknownCheck(args.check.clone()));
            }
            let cfg = CheckConfig {
                n_list: args.n.clone(),
                samples: args.samples,
                seed: args.seed.unwrap_or(0),
                k: args.k,
                i_max: args.i_max,
                fields: (!args.fields.is_empty()).then(|| args.fields.clone()),
                extras: args.extras.clone(),
                budgets: budgets_of(&args.common),
            };
            let report = run_check(&args.check, &cfg)?;
            let rendered =
                serde_json::to_string_pretty(&report).expect("report serialization cannot fail");
            emit(&args.common, &rendered)?;
            Ok(if report.passed() { 0 } else { 3 })
        }
        Command::Enumerate(args) => {
            setup(&args.common)?;
            let family = GraphFamily::parse(&args.family)?;
            let members = family.members(args.n)?;
            let mut out = String::new();
            for g in &members {
                out.push_str(&render_graph(g));
                out.push('\n');
            }
            out.push_str(&format!("count {}\n", members.len()));
            emit(&args.common, &out)?;
            Ok(0)
        }
    }
}

fn budgets_of(common: &CommonArgs) -> Budgets {
    Budgets {
        max_lattice_elements: common.element_budget,
        max_faces: common.face_budget,
    }
}

fn setup(common: &CommonArgs) -> Result<()> {
    if let Some(jobs) = common.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::InvalidInput(format!("cannot configure thread pool: {e}")))?;
    }
    Ok(())
}

fn emit(common: &CommonArgs, content: &str) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            if !content.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}
