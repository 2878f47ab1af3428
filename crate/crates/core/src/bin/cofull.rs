use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cofull::session::{emit_json, parse_session, run_session, sweep_session, GbCache, Report, RunOptions};

#[derive(Parser)]
#[command(name = "cofull", version, about = "Cohomological fullness of graded quotients")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every command of a session file.
    Run {
        #[command(flatten)]
        common: Common,
    },
    /// Run every command of a session file once per prime.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Comma-separated primes, e.g. 2,3,5.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
    },
}

#[derive(Args)]
struct Common {
    /// Session file.
    file: PathBuf,
    /// Print a JSON array of reports.
    #[arg(long)]
    json: bool,
    /// Largest Frobenius exponent used by `fullness`.
    #[arg(long, default_value_t = 1)]
    e_max: u32,
    /// Gröbner basis cache directory (defaults to $COFULL_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    threads: Option<usize>,
}

fn print_text(reports: &[Report]) {
    for r in reports {
        println!("> {}", r.input_echo);
        println!("{}", serde_json::to_string(&r.result).expect("serializable"));
        for w in &r.witnesses {
            println!("  witness {w}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, primes) = match cli.cmd {
        Cmd::Run { common } => (common, None),
        Cmd::Sweep { common, primes } => (common, Some(primes)),
    };
    if let Some(n) = common.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("cofull: {e}");
            return ExitCode::from(1);
        }
    }
    let text = match std::fs::read_to_string(&common.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cofull: {}: {e}", common.file.display());
            return ExitCode::from(1);
        }
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}:{e}", common.file.display());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let cache = match common.cache_dir.map(GbCache::new).or_else(GbCache::from_env).transpose() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("cofull: cache: {e}");
            return ExitCode::from(1);
        }
    };
    let opts = RunOptions { e_max: common.e_max, cache };
    let reports = match &primes {
        Some(ps) => sweep_session(&session, ps, &opts),
        None => run_session(&session, &opts),
    };
    if common.json {
        print!("{}", emit_json(&reports));
    } else {
        print_text(&reports);
    }
    for r in &reports {
        if let Some((code, _)) = &r.error {
            eprintln!("cofull: `{}` failed with {code}", r.input_echo);
        }
    }
    let status = reports.iter().map(Report::exit_code).max().unwrap_or(0);
    ExitCode::from(status as u8)
}
