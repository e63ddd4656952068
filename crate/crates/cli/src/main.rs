use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heaps_core::animal::{animal_count, enumerate_animals, Animal, CountKind, Lattice, Source};
use heaps_core::gas::{evaluate_density, linear_density, GasObservables};
use heaps_core::heap::{enumerate_heaps, BaseFilter, HeapClass};
use heaps_core::random::random_animals;
use heaps_core::render::{render_decomposition, render_svg, RenderOptions, Rotation};
use heaps_core::verify::{run_suite, Suite, VerifyOptions};
use heaps_core::{CommutationGraph, Error, ExactSeries, ExactTraceSeries, Rational};

#[derive(Parser)]
#[command(name = "heaps", version, about = "Heaps of pieces, lattice animals and Motzkin paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw uniform random animals as JSON lines.
    Generate(GenerateArgs),
    /// List every animal of a size, or every heap on a graph.
    Enumerate(EnumerateArgs),
    /// Print the number of animals of a size.
    Count(CountArgs),
    /// Print a truncated generating series over a graph.
    Series(SeriesArgs),
    /// Run self-check suites.
    Verify(VerifyArgs),
    /// Hard-particle gas series.
    Gas(GasArgs),
    /// Render the first animal read from standard input.
    Render(RenderArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "square")]
    lattice: Lattice,
    #[arg(long, default_value = "point")]
    source: Source,
    #[arg(long, default_value_t = 1)]
    samples: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    size: usize,
    #[arg(long, default_value = "square")]
    lattice: Lattice,
    #[arg(long, default_value = "point")]
    source: Source,
    /// Graph literal file; lists heaps of size at most `--size` instead of animals.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    strict: bool,
    /// Keep only pyramids.
    #[arg(long)]
    pyramids: bool,
    /// Keep only pyramids whose base is this vertex.
    #[arg(long)]
    base: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountSource {
    Point,
    Compact,
    Equerre,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    size: usize,
    #[arg(long, default_value = "square")]
    lattice: Lattice,
    #[arg(long, value_enum, default_value = "point")]
    source: CountSource,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Configurations,
    Heaps,
    Pyramids,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesOp {
    Derive,
    Invert,
    Project,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    degree: usize,
    #[arg(long, value_enum, default_value = "heaps")]
    kind: SeriesKind,
    /// Weight each term by (-1)^size.
    #[arg(long)]
    signed: bool,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    base: Option<String>,
    /// Operations applied left to right; after `project`, `derive` is t d/dt.
    #[arg(long, value_enum)]
    op: Vec<SeriesOp>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct GasArgs {
    #[arg(long, conflicts_with = "linear", required_unless_present = "linear")]
    graph: Option<PathBuf>,
    #[arg(long)]
    linear: bool,
    #[arg(long)]
    degree: usize,
    /// Evaluate the linear density at this activity.
    #[arg(long, requires = "linear")]
    at: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RotationArg {
    Heap,
    Lattice,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum, default_value = "heap")]
    rotation: RotationArg,
    #[arg(long, default_value_t = 0.4)]
    radius: f64,
    /// Draw the decomposition tree edges under the cells.
    #[arg(long)]
    decomposition: bool,
    /// Print the decomposition tree as text instead of SVG.
    #[arg(long)]
    text: bool,
}

enum Failure {
    Input(Error),
    Io(io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn load_graph(path: &PathBuf) -> Result<Arc<CommutationGraph>, Failure> {
    let text = fs::read_to_string(path)?;
    Ok(Arc::new(CommutationGraph::parse_literal(&text)?))
}

fn generate(args: GenerateArgs, out: &mut impl Write) -> Outcome {
    let drawn = random_animals(args.size, args.lattice, args.source, args.seed, args.samples)?;
    let mut draws = 0u64;
    for (an, report) in &drawn {
        writeln!(out, "{}", an.to_json())?;
        draws += report.draws;
    }
    writeln!(out, "nb_tirages_total={draws}")?;
    Ok(())
}

fn enumerate(args: EnumerateArgs, out: &mut impl Write) -> Outcome {
    let Some(path) = &args.graph else {
        for an in enumerate_animals(args.size, args.lattice, args.source)? {
            writeln!(out, "{}", an.to_json())?;
        }
        return Ok(());
    };
    let graph = load_graph(path)?;
    let base = match &args.base {
        Some(label) => BaseFilter::Pyramid(graph.vertex(label)?),
        None if args.pyramids => BaseFilter::AnyPyramid,
        None => BaseFilter::Any,
    };
    let class = HeapClass { strict_only: args.strict, base };
    for heap in enumerate_heaps(&graph, args.size, class) {
        writeln!(out, "{}", heap.to_label_word())?;
    }
    Ok(())
}

fn count(args: CountArgs, out: &mut impl Write) -> Outcome {
    let kind = match args.source {
        CountSource::Point => CountKind::PointSource,
        CountSource::Compact => CountKind::CompactSource,
        CountSource::Equerre => CountKind::Equerre,
    };
    writeln!(out, "{}", animal_count(args.size, args.lattice, kind))?;
    Ok(())
}

enum SeriesValue {
    Trace(ExactTraceSeries),
    Projected(ExactSeries),
}

fn series(args: SeriesArgs, out: &mut impl Write) -> Outcome {
    let graph = load_graph(&args.graph)?;
    let base = args.base.as_deref().map(|label| graph.vertex(label)).transpose()?;
    let series = match args.kind {
        SeriesKind::Configurations => ExactTraceSeries::configurations(&graph, args.degree, args.signed),
        SeriesKind::Heaps => {
            let class = HeapClass { strict_only: args.strict, base: BaseFilter::Any };
            ExactTraceSeries::of_class(&graph, args.degree, args.signed, class)
        }
        SeriesKind::Pyramids => {
            let base = base.map_or(BaseFilter::AnyPyramid, BaseFilter::Pyramid);
            let class = HeapClass { strict_only: args.strict, base };
            ExactTraceSeries::of_class(&graph, args.degree, args.signed, class)
        }
    };
    let mut value = SeriesValue::Trace(series);
    for op in args.op {
        value = match (value, op) {
            (SeriesValue::Trace(s), SeriesOp::Derive) => SeriesValue::Trace(s.derive()),
            (SeriesValue::Trace(s), SeriesOp::Invert) => SeriesValue::Trace(s.invert()?),
            (SeriesValue::Trace(s), SeriesOp::Project) => SeriesValue::Projected(s.project()),
            (SeriesValue::Projected(s), SeriesOp::Derive) => SeriesValue::Projected(s.euler_derivative()),
            (SeriesValue::Projected(s), SeriesOp::Invert) => SeriesValue::Projected(s.inverse()?),
            (projected, SeriesOp::Project) => projected,
        };
    }
    match value {
        SeriesValue::Trace(s) => write!(out, "{}", s.dump())?,
        SeriesValue::Projected(s) => writeln!(out, "{}", s.to_line())?,
    }
    Ok(())
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Outcome {
    let suites: Vec<Suite> = if args.suite == "all" { Suite::ALL.to_vec() } else { vec![args.suite.parse()?] };
    let opts = VerifyOptions { degree: args.degree, seed: args.seed };
    let mut all_passed = true;
    for suite in suites {
        for check in run_suite(suite, &opts) {
            all_passed &= check.passed;
            writeln!(out, "{check}")?;
            out.flush()?;
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn gas(args: GasArgs, out: &mut impl Write) -> Outcome {
    if let Some(path) = &args.graph {
        let graph = load_graph(path)?;
        let obs = GasObservables::<Rational>::new(&graph, args.degree);
        let pyramids = heaps_core::gas::mean_particles_pyramids::<Rational>(&graph, args.degree);
        writeln!(out, "Z: {}", obs.partition.to_line())?;
        writeln!(out, "mean direct: {}", obs.mean_count.to_line())?;
        writeln!(out, "mean pyramids: {}", pyramids.to_line())?;
        if obs.mean_count == pyramids {
            writeln!(out, "PASS mean counts agree to degree {}", args.degree)?;
            return Ok(());
        }
        writeln!(out, "FAIL mean counts differ")?;
        return Err(Failure::Verification);
    }
    writeln!(out, "{}", linear_density(args.degree).to_line())?;
    if let Some(t) = args.at {
        writeln!(out, "{}", evaluate_density(t)?)?;
    }
    Ok(())
}

fn read_animal() -> Result<Animal, Failure> {
    for line in io::stdin().lock().lines() {
        let line = line?;
        if line.trim_start().starts_with('{') {
            return Ok(Animal::from_json(line.trim())?);
        }
    }
    Err(Error::Parse("no animal JSON on standard input".into()).into())
}

fn render(args: RenderArgs, out: &mut impl Write) -> Outcome {
    let an = read_animal()?;
    if args.text {
        write!(out, "{}", render_decomposition(&an)?)?;
        return Ok(());
    }
    let rotation = match args.rotation {
        RotationArg::Heap => Rotation::Heap,
        RotationArg::Lattice => Rotation::Lattice,
    };
    let opts = RenderOptions::new(args.radius, rotation, args.decomposition)?;
    write!(out, "{}", render_svg(&an, &opts))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Generate(a) => generate(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Count(a) => count(a, &mut out),
        Command::Series(a) => series(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
        Command::Gas(a) => gas(a, &mut out),
        Command::Render(a) => render(a, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Verification), _) => ExitCode::from(1),
        (Err(Failure::Input(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Err(Failure::Io(e)), _) | (Ok(()), Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
