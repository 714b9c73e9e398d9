//! Command-line front end for exact combinatorial depth.

mod commands;
mod io;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use combdepth::geom::Point;
use combdepth::DepthError;

/// Exit status contract.
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Io(String),
    Depth(DepthError),
}

impl From<DepthError> for CliError {
    fn from(e: DepthError) -> Self {
        match e {
            DepthError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            DepthError::Feature { ref source, .. }
                if matches!(**source, DepthError::CapExceeded { .. }) =>
            {
                CliError::Cap(e.to_string())
            }
            e => CliError::Depth(e),
        }
    }
}

/// Whether the property a command checks held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Parser)]
#[command(
    name = "combdepth",
    version,
    about = "Exact Tukey, Tverberg, enclosing and simplicial depth"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Instance file.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RegionMeasure {
    Td,
    Tvd,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Superadditive,
    Central,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Depth values and witness summaries at a query point.
    Depth {
        #[command(flatten)]
        input: Input,
        /// Query point as comma-separated rationals; defaults to the file's query.
        #[arg(long, value_parser = io::parse_point)]
        query: Option<Point>,
        /// Comma-separated measures: td, td-weighted, tvd, ed, sd, peel, tvd-hull.
        #[arg(long, value_delimiter = ',', default_value = "td,tvd,ed,sd,peel")]
        measures: Vec<combdepth::MeasureId>,
        /// Size cap for the exhaustive searches.
        #[arg(long, default_value_t = combdepth::depth::DEFAULT_CAP)]
        cap: usize,
    },
    /// Region dimensions, cascade sum and integral, and the median region.
    Regions {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        measure: RegionMeasure,
        /// Use point weights (Tukey only).
        #[arg(long)]
        weighted: bool,
        /// CSV report path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG drawing of the nested regions.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Cascade sum (or weighted integral) checked against zero.
    Cascade {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        measure: RegionMeasure,
        #[arg(long)]
        weighted: bool,
    },
    /// Axiom checks over a generated corpus.
    Axioms {
        /// Measure under test.
        #[arg(long)]
        measure: combdepth::MeasureId,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Corpus as key=value pairs, e.g. family=clusters,n=6,d=2,seed=1,count=4.
        #[arg(long)]
        corpus: String,
        /// CSV report path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One-dimensional bichromatic Radon construction or verification.
    Radon {
        #[command(flatten)]
        input: Input,
        /// Build the witness from a surrounding set.
        #[arg(long, conflicts_with = "verify")]
        construct: bool,
        /// Witness file with `red ...` and `blue ...` index lines.
        #[arg(long, requires = "c2")]
        verify: Option<PathBuf>,
        /// Required class fraction.
        #[arg(long, value_parser = parse_c2)]
        c2: Option<combdepth::geom::ExactScalar>,
    },
    /// Enclosing depth, exactly or through the planar lifting construction.
    Enclose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = io::parse_point)]
        query: Option<Point>,
        #[arg(long, conflicts_with = "construct_e2")]
        exact: bool,
        #[arg(long)]
        construct_e2: bool,
        #[arg(long, default_value_t = combdepth::depth::DEFAULT_CAP)]
        cap: usize,
    },
    /// Inequality chain and the planar Reay identity at a query.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = io::parse_point)]
        query: Option<Point>,
    },
    /// Generate an instance file.
    Gen {
        #[arg(long)]
        family: combdepth::corpus::Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        clusters: usize,
        #[arg(long, default_value_t = 2)]
        spread: i64,
        #[arg(long, default_value_t = 10)]
        extent: i64,
        /// Jitter bound in units of 1/64.
        #[arg(long, default_value_t = 0)]
        jitter: i64,
        #[arg(long)]
        weighted: bool,
        /// Also draw a random query point.
        #[arg(long)]
        with_query: bool,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_c2(text: &str) -> Result<combdepth::geom::ExactScalar, String> {
    combdepth::geom::parse_scalar(text).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<Verdict, CliError> {
    match cli.command {
        Command::Depth {
            input,
            query,
            measures,
            cap,
        } => commands::depth(&input.input, query.as_ref(), &measures, cap),
        Command::Regions {
            input,
            measure,
            weighted,
            out,
            svg,
        } => commands::regions(
            &input.input,
            measure,
            weighted,
            out.as_deref(),
            svg.as_deref(),
        ),
        Command::Cascade {
            input,
            measure,
            weighted,
        } => commands::cascade(&input.input, measure, weighted),
        Command::Axioms {
            measure,
            suite,
            corpus,
            out,
        } => commands::axioms(measure, suite, &corpus, out.as_deref()),
        Command::Radon {
            input,
            construct,
            verify,
            c2,
        } => commands::radon(&input.input, construct, verify.as_deref(), c2.as_ref()),
        Command::Enclose {
            input,
            query,
            exact,
            construct_e2,
            cap,
        } => commands::enclose(&input.input, query.as_ref(), !construct_e2 || exact, cap),
        Command::Check { input, query } => commands::check(&input.input, query.as_ref()),
        Command::Gen {
            family,
            n,
            d,
            seed,
            clusters,
            spread,
            extent,
            jitter,
            weighted,
            with_query,
            out,
        } => {
            let params = combdepth::corpus::CorpusParams {
                clusters,
                spread,
                extent,
                jitter,
                weighted,
                query: with_query,
            };
            let spec = combdepth::corpus::CorpusSpec::new(family, n, d, seed).with_params(params);
            commands::gen(&spec, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            let (code, msg) = match e {
                CliError::Usage(m) => (EXIT_USAGE, m),
                CliError::Cap(m) => (EXIT_CAP, m),
                CliError::Io(m) => (EXIT_USAGE, m),
                CliError::Depth(e) => (EXIT_USAGE, e.to_string()),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
