use std::path::PathBuf;
use std::process::ExitCode;

use chi_certify_cli::sweep::{rows_csv, sweep, Grid};
use chi_certify_cli::{
    analysis_csv, analyze, certify, exit, input, json_lines, suites, verify_csv, verify_exit_code,
    CliError, CliResult, Format, Limits, Pipeline, PipelineParams, Suite, SuiteOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chi-certify", version, about = "Chromatic bound certificates for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// graph6 file, one graph per line ("-" for stdin)
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Generator spec such as "cycle:5", "mycielski:cycle:5" or "gnp:12:0.5"
    #[arg(long)]
    generate: Vec<String>,
    /// Base seed for generators given without one
    #[arg(long)]
    seed: Option<u64>,
    /// Instances per unseeded random generator
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Args)]
struct Output {
    /// Per-instance time budget in milliseconds
    #[arg(long, env = "CHI_CERTIFY_BUDGET_MS", value_parser = clap::value_parser!(u64).range(1..))]
    budget_ms: Option<u64>,
    /// Per-instance search node limit
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    node_limit: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineArg {
    Path,
    Broom,
    Structure,
}

impl From<PipelineArg> for Pipeline {
    fn from(p: PipelineArg) -> Self {
        match p {
            PipelineArg::Path => Pipeline::Path,
            PipelineArg::Broom => Pipeline::Broom,
            PipelineArg::Structure => Pipeline::Structure,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number, clique number, connectivity and pattern flags
    Analyze {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        output: Output,
        /// Report whether an induced path on p vertices is present
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Run a theorem pipeline and emit one certificate per graph
    Certify {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum)]
        pipeline: PipelineArg,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
    },
    /// Run bundled verification suites
    Verify {
        #[command(flatten)]
        output: Output,
        /// Suite name, or "all"
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        /// Largest enumerated graph order
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..=7))]
        max_n: u64,
    },
    /// Bound slack over generated families, as CSV or JSON rows
    Sweep {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum, default_value = "structure")]
        pipeline: PipelineArg,
        #[arg(long, value_delimiter = ',', default_values_t = [1])]
        p: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1])]
        q: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1])]
        s: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1])]
        t: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [2])]
        d: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1])]
        r: Vec<usize>,
    },
}

impl Output {
    fn limits(&self) -> Limits {
        Limits {
            budget_ms: self.budget_ms,
            node_limit: self.node_limit,
        }
    }

    fn format(&self, default: Format) -> Format {
        match self.format {
            Some(FormatArg::Json) => Format::Json,
            Some(FormatArg::Csv) => Format::Csv,
            None => default,
        }
    }

    fn write(&self, text: &str) -> CliResult<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

impl Inputs {
    fn collect(&self) -> CliResult<Vec<input::Instance>> {
        input::collect(&self.input, &self.generate, self.seed, self.count)
    }
}

fn positive(name: &str, v: usize) -> CliResult<()> {
    if v == 0 {
        Err(CliError::usage(format!("--{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Analyze {
            inputs,
            output,
            p,
            d,
            t,
        } => {
            let insts = inputs.collect()?;
            let limits = output.limits();
            let rows = insts
                .iter()
                .map(|i| analyze(i, p, d, t, &limits))
                .collect::<CliResult<Vec<_>>>()?;
            let text = match output.format(Format::Json) {
                Format::Json => json_lines(&rows)?,
                Format::Csv => analysis_csv(&rows)?,
            };
            output.write(&text)?;
            Ok(exit::SUCCESS)
        }
        Command::Certify {
            inputs,
            output,
            pipeline,
            p,
            r,
            d,
            t,
        } => {
            for (name, v) in [("p", p), ("r", r), ("d", d), ("t", t)] {
                positive(name, v)?;
            }
            let pipeline = Pipeline::from(pipeline);
            if pipeline == Pipeline::Structure {
                return Err(CliError::usage("certify takes --pipeline path or broom"));
            }
            let params = PipelineParams {
                p,
                r: (pipeline == Pipeline::Broom).then_some(r),
                d,
                t,
            };
            let insts = inputs.collect()?;
            let limits = output.limits();
            let records = insts
                .iter()
                .map(|i| certify(i, pipeline, &params, &limits))
                .collect::<CliResult<Vec<_>>>()?;
            output.write(&json_lines(&records)?)?;
            if let Some(bad) = records.iter().find(|r| !r.valid) {
                eprintln!("{}: certificate failed validation", bad.id);
                return Ok(exit::FAILURE);
            }
            Ok(exit::SUCCESS)
        }
        Command::Verify {
            output,
            suite,
            max_n,
        } => {
            let suites: Vec<Suite> = if suite.iter().any(|s| s == "all") {
                Suite::ALL.to_vec()
            } else {
                suite
                    .iter()
                    .map(|s| s.parse().map_err(CliError::usage))
                    .collect::<CliResult<_>>()?
            };
            let limits = output.limits();
            let opts = SuiteOptions {
                max_n: max_n as usize,
                budget_ms: limits.budget_ms,
                node_limit: limits.node_limit,
            };
            let mut reports = Vec::new();
            for s in suites {
                let report = suites::run_suite(s, &opts).map_err(|e| CliError::from_core(s.name(), e))?;
                for p in &report.properties {
                    eprintln!("{} {}: {}", p.status, report.suite, p.name);
                }
                reports.push(report);
            }
            let text = match output.format(Format::Json) {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&reports)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    s.push('\n');
                    s
                }
                Format::Csv => verify_csv(&reports)?,
            };
            output.write(&text)?;
            Ok(verify_exit_code(&reports))
        }
        Command::Sweep {
            inputs,
            output,
            pipeline,
            p,
            q,
            s,
            t,
            d,
            r,
        } => {
            let grid = Grid { p, q, s, t, d, r };
            for (name, list) in [
                ("p", &grid.p),
                ("q", &grid.q),
                ("s", &grid.s),
                ("t", &grid.t),
                ("d", &grid.d),
                ("r", &grid.r),
            ] {
                for &v in list {
                    positive(name, v)?;
                }
            }
            let insts = inputs.collect()?;
            let rows = sweep(&insts, pipeline.into(), &grid, &output.limits())?;
            let text = match output.format(Format::Csv) {
                Format::Csv => rows_csv(&rows)?,
                Format::Json => json_lines(&rows)?,
            };
            output.write(&text)?;
            if rows.iter().any(|r| r.certificate_kind == chi_certify_cli::sweep::INVALID) {
                return Ok(exit::FAILURE);
            }
            Ok(exit::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    };
    ExitCode::from(code as u8)
}
