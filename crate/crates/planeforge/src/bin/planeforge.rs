//! Thin command-line front end: list the catalog, verify scenarios into a
//! JSON report, or render one constructed instance as SVG.

use clap::{Parser, Subcommand};
use planeforge::report::Report;
use planeforge::scenario::{build_instance, catalog, run_scenario};
use planeforge::{Status, Tolerance};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "planeforge", version, about = "Plane-geometry statement verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the scenario catalog (id, tier, anchor).
    List,
    /// Run scenarios and write a JSON report.
    Verify {
        /// Scenario id, or "all".
        #[arg(long)]
        scenario: String,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        tol_pass: Option<f64>,
        #[arg(long)]
        tol_fail: Option<f64>,
        /// Report path (JSON).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Render one constructed instance as an SVG figure.
    Render {
        #[arg(long)]
        scenario: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        trial: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn configure_threads() {
    if let Ok(v) = std::env::var("PLANEFORGE_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match cli.command {
        Command::List => {
            for def in catalog() {
                println!("{:<7} tier {}  {}", def.id, def.tier, def.anchor);
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            scenario,
            trials,
            seed,
            tol_pass,
            tol_fail,
            report,
        } => {
            let tol = match Tolerance::new(tol_pass.unwrap_or(1e-8), tol_fail.unwrap_or(1e-4)) {
                Ok(t) => t,
                Err(_) => {
                    eprintln!("invalid tolerances: need 0 < pass < fail < 1");
                    return ExitCode::from(2);
                }
            };
            let ids: Vec<String> = if scenario == "all" {
                catalog().iter().map(|d| d.id.to_string()).collect()
            } else {
                vec![scenario]
            };
            let mut verdicts = vec![];
            for id in &ids {
                match run_scenario(id, trials, seed, &tol) {
                    Ok(v) => verdicts.push(v),
                    Err(e) => {
                        eprintln!("{id}: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            println!(
                "{:<7} {:<4} {:<13} {:>5} {:>5} {:>5}  {:<12} {:<12}",
                "id", "tier", "status", "req", "done", "skip", "median", "probe"
            );
            let mut failed_low_tier = false;
            for v in &verdicts {
                let med = v
                    .relations
                    .iter()
                    .map(|r| r.residual_median)
                    .fold(f64::NAN, f64::max);
                let probe = v
                    .relations
                    .iter()
                    .map(|r| r.probe_margin_median)
                    .fold(f64::NAN, f64::min);
                println!(
                    "{:<7} {:<4} {:<13} {:>5} {:>5} {:>5}  {:<12.3e} {:<12.3e}",
                    v.id,
                    v.tier,
                    v.status.to_string(),
                    v.trials_requested,
                    v.trials_completed,
                    v.trials_skipped,
                    med,
                    probe
                );
                if v.tier <= 2 && v.status == Status::Fail {
                    failed_low_tier = true;
                }
            }
            let doc = Report::new(seed, trials, &tol, verdicts);
            if let Some(path) = report {
                if let Err(e) = std::fs::write(&path, doc.to_json()) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if failed_low_tier {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Render {
            scenario,
            seed,
            trial,
            out,
        } => {
            match build_instance(&scenario, seed, trial) {
                Ok(built) => {
                    let svg = planeforge::svg::render(&built);
                    if let Err(e) = std::fs::write(&out, svg) {
                        eprintln!("cannot write {}: {e}", out.display());
                        return ExitCode::from(2);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{scenario}: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
