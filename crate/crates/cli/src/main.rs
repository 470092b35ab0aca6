use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use logbundle_cli::suites::{self, SUITES};
use logbundle_cli::{run, CliError, Command, JobSpec, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "logbundle", about = "Logarithmic bundles of hypersurface arrangements, computed exactly")]
struct Cli {
    #[command(subcommand)]
    action: Action,
}

#[derive(clap::Args)]
struct JobArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
    twist_min: i64,
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    twist_max: i64,
    /// Twist of the bundle restricted by `splitting`.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    twist: i64,
    #[arg(long)]
    candidates: Option<PathBuf>,
    /// Two points spanning the line, e.g. `[[0,1,0],[0,0,1]]`.
    #[arg(long)]
    line: Option<String>,
}

#[derive(Subcommand)]
enum Action {
    /// Run one computation and print its JSON report.
    #[command(flatten)]
    Job(JobCommand),
    /// Run an acceptance suite (or `all`).
    Reproduce {
        name: Option<String>,
        #[arg(long = "suite")]
        suite: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

macro_rules! job_commands {
    ($($variant:ident => $cmd:expr),* $(,)?) => {
        #[derive(Subcommand)]
        enum JobCommand {
            $($variant(JobArgs),)*
        }

        impl JobCommand {
            fn into_spec(self) -> JobSpec {
                let (command, a) = match self {
                    $(Self::$variant(a) => ($cmd, a),)*
                };
                JobSpec {
                    command,
                    input: a.input,
                    seed: a.seed,
                    twist_min: a.twist_min,
                    twist_max: a.twist_max,
                    twist: a.twist,
                    candidates: a.candidates,
                    line: a.line,
                }
            }
        }
    };
}

job_commands! {
    Present => Command::Present,
    MonadCheck => Command::MonadCheck,
    Chern => Command::Chern,
    Cohomology => Command::Cohomology,
    Stability => Command::Stability,
    NcCheck => Command::NcCheck,
    Veronese => Command::Veronese,
    Pencil => Command::Pencil,
    Zeroes => Command::Zeroes,
    TorelliPair => Command::TorelliPair,
    IsoOracle => Command::IsoOracle,
    Unstable => Command::Unstable,
    Recover => Command::Recover,
    Rnc => Command::Rnc,
    Splitting => Command::Splitting,
}

fn reproduce(name: &str, seed: u64) -> Result<bool, CliError> {
    let selected: Vec<_> = if name == "all" {
        SUITES.iter().collect()
    } else {
        vec![suites::find(name).ok_or_else(|| CliError::UnknownSuite(name.into()))?]
    };
    let mut reports = Vec::new();
    let mut ok = true;
    for suite in selected {
        let r = suite.run(seed);
        eprintln!("{}", r.summary_line());
        for c in r.checks.iter().filter(|c| !c.pass) {
            eprintln!("    failed: {} {}", c.label, c.detail);
        }
        ok &= r.passed();
        reports.push(r.to_json());
    }
    let body = serde_json::json!({"seed": seed, "passed": ok, "suites": reports});
    println!("{}", serde_json::to_string_pretty(&body).expect("json"));
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.action {
        Action::Job(job) => run(&job.into_spec()).map(|o| {
            println!("{}", serde_json::to_string_pretty(&o.report).expect("json"));
            o.status as u8
        }),
        Action::Reproduce { name, suite, seed } => match name.or(suite) {
            None => Err(CliError::Usage("reproduce needs a suite name".into())),
            Some(n) => reproduce(&n, seed).map(|ok| if ok { 0 } else { 1 }),
        },
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
