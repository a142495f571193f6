use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grover_cli::analyze::{analyze, render, AnalyzeOptions, Source};
use grover_cli::report::Format;
use grover_cli::search::{self, ParamRange, SearchFamily, SearchOptions};
use grover_cli::verify::{self, Suite};
use grover_cli::CliError;
use grover_core::graphs::{Family, Limits};

#[derive(Parser)]
#[command(name = "grover", version, about = "Periodicity of Grover walks on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = Limits::default().max_vertices)]
    max_vertices: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph.
    Analyze {
        /// Edge-list file, one `u v` pair per line.
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        graph: Option<String>,
        /// Family descriptor such as `cycle:n=5` or `hamming:d=2,q=2`.
        #[arg(long)]
        family: Option<String>,
        /// Record wall time per stage (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Scan a parameter range of a graph family.
    Search {
        #[arg(value_enum)]
        family: SearchFamily,
        /// Hamming diameter range, e.g. `1-6`.
        #[arg(long)]
        d: Option<ParamRange>,
        /// Hamming alphabet size range.
        #[arg(long)]
        q: Option<ParamRange>,
        /// Johnson ground-set size range.
        #[arg(long)]
        n: Option<ParamRange>,
        /// Johnson subset size, or valency for `srg`.
        #[arg(long)]
        k: Option<ParamRange>,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit ranges above the default parameter cap.
        #[arg(long)]
        lift_caps: bool,
        /// Skip building survivors for the unitary cross-check.
        #[arg(long)]
        no_confirm: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn limits(max_vertices: usize) -> Limits {
    Limits { max_vertices, ..Limits::default() }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Analyze { graph, family, timings, output } => {
            let source = match (graph, family) {
                (Some(path), _) => Source::EdgeList(path),
                (None, Some(spec)) => Source::Family(spec.parse::<Family>()?),
                (None, None) => return Err(CliError::Usage("one of --graph or --family is required".into())),
            };
            let opts = AnalyzeOptions { limits: limits(output.max_vertices), timings };
            let report = analyze(&source, &opts)?;
            emit(&render(&report, output.format)?, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { family, d, q, n, k, jobs, lift_caps, no_confirm, output } => {
            let opts = SearchOptions { limits: limits(output.max_vertices), confirm: !no_confirm, lift_caps };
            let range = |r: Option<ParamRange>, default| r.map(|r| r.0).unwrap_or(default);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
            let report = pool.install(|| match family {
                SearchFamily::Hamming => search::search_hamming(range(d, search::DEFAULT_D), range(q, search::DEFAULT_Q), &opts),
                SearchFamily::Johnson => search::search_johnson(range(n, search::DEFAULT_N), range(k, search::DEFAULT_K), &opts),
                SearchFamily::Srg => search::search_srg(range(k, search::DEFAULT_VALENCY), &opts),
            })?;
            emit(&report.render(output.format)?, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let results = verify::run(suite);
            print!("{}", verify::render_table(&results));
            Ok(if results.iter().all(|r| r.passed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
