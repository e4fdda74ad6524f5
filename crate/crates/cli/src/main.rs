use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use milnor_core::bounds::{self, BoundOptions, BoundReport, ClaimStatus};
use milnor_core::catalog::{Group, ParamBits, SpaceDescriptor};
use milnor_core::config::{Config, OutputFormat};
use milnor_core::f2poly::{Presentation, ReducedRing};
use milnor_core::invariants::ZeroDivisorAlgebra;
use milnor_core::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_CLAIMS: u8 = 3;
const EXIT_BUDGET: u8 = 4;

/// Mod-2 cohomology rings of Milnor manifolds and bounds on their
/// LS-category and topological complexity.
#[derive(Debug, Parser)]
#[command(name = "milnor", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// TOML configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Maximum total dimension of a tensor square.
    #[arg(long, global = true, value_name = "N")]
    tensor_budget: Option<u128>,
    /// Maximum number of product evaluations per search.
    #[arg(long, global = true, value_name = "N")]
    node_budget: Option<usize>,
    /// Run searches on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a ring's presentation, rewrite basis and Hilbert function.
    Ring(RingArgs),
    /// Bound intervals for cat and TC, optionally equivariant.
    Bounds(BoundsArgs),
    /// Bound table over a grid of Milnor manifolds.
    Sweep(SweepArgs),
    /// Zero-divisor cup-length with a witness.
    Zcl(ZclArgs),
    /// Run the claim suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Args)]
struct RingArgs {
    /// Space descriptor, e.g. milnor-real:4,3.
    #[arg(
        long,
        required_unless_present = "from_json",
        conflicts_with = "from_json"
    )]
    space: Option<SpaceDescriptor>,
    /// Read the presentation from a JSON file instead.
    #[arg(long, value_name = "PATH")]
    from_json: Option<PathBuf>,
    /// Print only the Hilbert function.
    #[arg(long)]
    hilbert: bool,
    /// Write the presentation as JSON.
    #[arg(long, value_name = "PATH")]
    export_json: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Table => Format::Table,
        }
    }
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long)]
    space: SpaceDescriptor,
    /// Free action whose quotient gives equivariant bounds.
    #[arg(long)]
    group: Option<Group>,
    /// Parameter bits of the quotient ring.
    #[arg(long, requires = "group", value_parser = parse_bits)]
    params: Option<ParamBits>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Also run the all-zero-divisor oracle.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    MilnorReal,
    MilnorComplex,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_name = "R")]
    r_max: u32,
    #[arg(long, value_name = "S")]
    s_max: u32,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct ZclArgs {
    #[arg(long)]
    space: SpaceDescriptor,
    /// Search over all zero divisors rather than the basic ones.
    #[arg(long)]
    exhaustive: bool,
    /// Kernel dimension budget with --exhaustive, node budget otherwise.
    #[arg(long, value_name = "N")]
    budget: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Only run claims whose id matches this glob.
    #[arg(long, value_name = "ID-GLOB")]
    filter: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

fn parse_bits(s: &str) -> Result<ParamBits, Error> {
    ParamBits::parse(s)
}

enum Failure {
    Usage(String),
    Claims,
    Budget(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            e if e.is_budget() => Failure::Budget(e.to_string()),
            e @ (Error::Parameter { .. }
            | Error::Descriptor { .. }
            | Error::Config(_)
            | Error::UnknownLabel(_)) => Failure::Usage(e.to_string()),
            e => Failure::Other(e.into()),
        }
    }
}

struct RunContext {
    config: Config,
    opts: BoundOptions,
}

impl RunContext {
    fn new(g: &Global) -> Result<Self, Failure> {
        let config = match &g.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let mut opts = config.bound_options()?;
        if let Some(b) = g.tensor_budget {
            opts.search.tensor_budget = b;
        }
        if let Some(b) = g.node_budget {
            opts.search.node_budget = b;
        }
        if g.sequential {
            opts.search.parallel = false;
        }
        Ok(RunContext { config, opts })
    }

    fn format(&self, flag: Option<Format>, fallback: Format) -> Format {
        flag.or(self.config.format.map(Format::from))
            .unwrap_or(fallback)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunContext::new(&cli.global).and_then(|ctx| run(&ctx, cli.command));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Claims) => ExitCode::from(EXIT_CLAIMS),
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(ctx: &RunContext, command: Command) -> Result<(), Failure> {
    match command {
        Command::Ring(a) => ring(a),
        Command::Bounds(a) => bounds(ctx, a),
        Command::Sweep(a) => sweep(ctx, a),
        Command::Zcl(a) => zcl(ctx, a),
        Command::VerifyPaper(a) => verify(ctx, a),
    }
}

fn ring(a: RingArgs) -> Result<(), Failure> {
    let (label, presentation) = match (&a.space, &a.from_json) {
        (Some(d), _) => (d.to_string(), d.presentation()?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            (path.display().to_string(), Presentation::from_json(&text)?)
        }
        (None, None) => unreachable!("clap requires one of --space and --from-json"),
    };
    let ring = ReducedRing::new(&presentation)?;
    if let Some(path) = &a.export_json {
        std::fs::write(path, presentation.to_json()?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let hilbert = join(ring.hilbert());
    if a.hilbert {
        println!("{hilbert}");
        return Ok(());
    }
    let summary = ring.summary();
    println!("ring     {label}");
    println!("present  {}", summary.presentation);
    println!("dim      {}", ring.formal_dimension());
    println!("hilbert  {hilbert}");
    println!("total    {}", summary.total_dimension);
    println!("basis    {}", summary.rewrite_basis.join(", "));
    Ok(())
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn print_reports(reports: &[BoundReport], format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let text = if let [one] = reports {
                bounds::to_json(one)?
            } else {
                serde_json::to_string_pretty(reports).context("serializing reports")?
            };
            println!("{text}");
        }
        Format::Csv => print!("{}", bounds::to_csv(reports)?),
        Format::Table => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{}", bounds::render_table(r));
            }
        }
    }
    Ok(())
}

fn bounds(ctx: &RunContext, a: BoundsArgs) -> Result<(), Failure> {
    let mut opts = ctx.opts.clone();
    opts.exhaustive = a.exhaustive;
    let group = a.group.map(|g| {
        let params = a
            .params
            .clone()
            .unwrap_or_else(|| ctx.config.default_params(g));
        (g, params)
    });
    let report = bounds::report(&a.space, group, &opts)?;
    print_reports(&[report], ctx.format(a.format, Format::Table))
}

fn sweep(ctx: &RunContext, a: SweepArgs) -> Result<(), Failure> {
    let mut spaces = Vec::new();
    for r in 1..=a.r_max {
        for s in 1..=r.min(a.s_max) {
            spaces.push(match a.family {
                Family::MilnorReal => SpaceDescriptor::MilnorReal { r, s },
                Family::MilnorComplex => SpaceDescriptor::MilnorComplex { r, s },
            });
        }
    }
    let reports = spaces
        .iter()
        .map(|d| bounds::report(d, None, &ctx.opts))
        .collect::<Result<Vec<_>, _>>()?;
    match ctx.format(a.format, Format::Csv) {
        Format::Table => {
            println!("{}", bounds::CONVENTION_BANNER);
            println!(
                "{:<22}{:>4}{:>4}{:>5}  {:<10}{:<10}",
                "space", "dim", "cl", "zcl", "cat", "TC"
            );
            for r in &reports {
                let zcl = r
                    .zcl_basic
                    .as_ref()
                    .map_or("-".into(), |z| z.value.to_string());
                println!(
                    "{:<22}{:>4}{:>4}{:>5}  {:<10}{:<10}",
                    r.descriptor,
                    r.dim,
                    r.cl.value,
                    zcl,
                    r.cat.to_string(),
                    r.tc.to_string()
                );
            }
            Ok(())
        }
        f => print_reports(&reports, f),
    }
}

fn zcl(ctx: &RunContext, a: ZclArgs) -> Result<(), Failure> {
    let ring = a.space.ring()?;
    let mut search = ctx.opts.search.clone();
    let alg = ZeroDivisorAlgebra::with_budget(&ring, search.tensor_budget)?;
    let result = if a.exhaustive {
        alg.zcl_exhaustive(a.budget.unwrap_or(search.kernel_budget))?
    } else {
        if let Some(b) = a.budget {
            search.node_budget = b;
        }
        alg.zcl_basic(&search)?
    };
    println!("space    {}", a.space);
    println!("notion   {}", result.notion);
    println!("value    {}", result.value);
    println!("witness  {}", result.witness);
    println!("product  {}", result.product);
    Ok(())
}

fn verify(ctx: &RunContext, a: VerifyArgs) -> Result<(), Failure> {
    let reports = bounds::verify_claims(a.filter.as_deref(), &ctx.opts)?;
    if reports.is_empty() {
        return Err(Failure::Usage(format!(
            "no claim matches `{}`",
            a.filter.unwrap_or_default()
        )));
    }
    match ctx.format(a.format, Format::Table) {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&reports).context("serializing claims")?
        ),
        _ => {
            for r in &reports {
                let tag = match r.status {
                    ClaimStatus::Pass => "PASS",
                    ClaimStatus::Fail => "FAIL",
                    ClaimStatus::Skipped => "SKIP",
                };
                println!("{tag}  {:<24} {}", r.id, r.details);
            }
        }
    }
    let failed = reports
        .iter()
        .filter(|r| r.status == ClaimStatus::Fail)
        .count();
    if failed > 0 {
        eprintln!("{failed} of {} claims failed", reports.len());
        return Err(Failure::Claims);
    }
    Ok(())
}
