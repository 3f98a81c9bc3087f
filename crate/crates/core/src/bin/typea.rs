use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use typea_cohomology::cohomology::{
    block_table_padded, conja_table_padded, pi_variety_table, CohomologyTable,
};
use typea_cohomology::partition::Partition;
use typea_cohomology::sweep::{run_suites, Suite, SweepConfig, VerifyReport};

/// Cohomology tables of parabolic Deligne-Lusztig varieties of type A.
#[derive(Parser, Debug)]
#[command(name = "typea", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a cohomology table.
    Table(TableArgs),
    /// Run verification sweeps; exits 2 on a counterexample.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    /// X_{n,d} with local system F_mu.
    Xnd,
    /// X(pi), assembled from the X_{n,1}.
    Pi,
    /// The block variety attached to a core.
    Block,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct TableArgs {
    kind: TableKind,
    #[arg(short = 'n', long = "n")]
    n: usize,
    #[arg(short = 'd', long = "d")]
    d: Option<usize>,
    /// Local system label, comma separated parts in either order.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    mu: String,
    /// Core label for block tables.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    core: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Beta-set padding (at least d).
    #[arg(long)]
    pad: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Perv,
    Triangle,
    Periodicity,
    PiVariety,
    Block,
    Uniqueness,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: SuiteArg,
    #[arg(short = 'n', long = "max-n", default_value_t = 6)]
    max_n: usize,
    /// A single d, or an inclusive range `lo..hi`.
    #[arg(short = 'd', long = "d")]
    d: Option<String>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    pad: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Table(args) => run_table(&args),
        Command::Verify(args) => run_verify(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run_table(args: &TableArgs) -> Result<u8, String> {
    let parse = |s: &str| s.parse::<Partition>().map_err(|e| e.to_string());
    let need_d = || {
        args.d
            .ok_or_else(|| "-d is required for this table".to_string())
    };
    let table = match args.kind {
        TableKind::Xnd => {
            let d = need_d()?;
            let mu = parse(&args.mu)?;
            conja_table_padded(args.n, d, &mu, args.pad.unwrap_or(d))
        }
        TableKind::Pi => pi_variety_table(args.n),
        TableKind::Block => {
            let d = need_d()?;
            let core = parse(&args.core)?;
            block_table_padded(args.n, d, &core, args.pad.unwrap_or(d))
        }
    }
    .map_err(|e| e.to_string())?;
    emit(&render_table(&table, args.format));
    Ok(0)
}

fn render_table(table: &CohomologyTable, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", table.to_json()),
        Format::Csv => table.to_csv(),
    }
}

fn parse_d_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad -d value {s:?}: {e}"))
    };
    match s.split_once("..") {
        Some((lo, hi)) => Ok((num(lo)?, num(hi.trim_start_matches('='))?)),
        None => {
            let d = num(s)?;
            Ok((d, d))
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<u8, String> {
    let config = SweepConfig {
        max_n: args.max_n,
        d_range: args.d.as_deref().map(parse_d_range).transpose()?,
        jobs: args.jobs,
        seed: args.seed,
        pad: args.pad,
    };
    config.validate().map_err(|e| e.to_string())?;
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::Perv => vec![Suite::Perv],
        SuiteArg::Triangle => vec![Suite::Triangle],
        SuiteArg::Periodicity => vec![Suite::Periodicity],
        SuiteArg::PiVariety => vec![Suite::PiVariety],
        SuiteArg::Block => vec![Suite::Block],
        SuiteArg::Uniqueness => vec![Suite::Uniqueness],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for suite in suites {
        eprintln!("verify {suite}: max_n = {}", config.max_n);
        let report = run_suites(&[suite], &config).map_err(|e| e.to_string())?;
        let s = &report.suites[0];
        eprintln!(
            "verify {suite}: {} items, {} checks, {:?}",
            s.items, s.checks, s.status
        );
        reports.extend(report.suites);
    }
    let report = VerifyReport {
        status: if reports.iter().all(|r| r.witness.is_none()) {
            typea_cohomology::sweep::Status::Pass
        } else {
            typea_cohomology::sweep::Status::Fail
        },
        suites: reports,
    };
    emit(&render_report(&report, args.format));
    if report.passed() {
        Ok(0)
    } else {
        if let Some(w) = report.first_witness() {
            eprintln!("counterexample: {w}");
        }
        Ok(2)
    }
}

fn render_report(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["suite", "status", "max_n", "items", "checks", "witness"])
                .expect("in-memory write");
            for s in &report.suites {
                let status = serde_json::to_value(s.status).expect("status serializes");
                writer
                    .write_record([
                        s.suite.clone(),
                        status.as_str().unwrap_or_default().to_string(),
                        s.max_n.to_string(),
                        s.items.to_string(),
                        s.checks.to_string(),
                        s.witness
                            .as_ref()
                            .map(|w| w.to_string())
                            .unwrap_or_default(),
                    ])
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
        }
    }
}

fn emit(s: &str) {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let _ = lock.write_all(s.as_bytes());
    let _ = lock.flush();
}
