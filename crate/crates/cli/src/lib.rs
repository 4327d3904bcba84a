//! Command-line front end for `densecap-core`.
//!
//! Every command that writes a CSV also writes `<out>.manifest.json`, from
//! which `densecap --from-manifest` reproduces the run.

pub mod config_file;
pub mod error;
pub mod job;
pub mod output;
pub mod validate;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use densecap_core::scaling::geometric_grid;
use densecap_core::{QuadratureConfig, Receiver, SweepMethod, SweepReceiver, SweepSpec};

use crate::error::{CliError, Result};
use crate::job::{parse_receiver, Corr, Expr, Job};
use crate::output::RunManifest;

#[derive(Debug, Parser)]
#[command(name = "densecap", version, about = "Sum spectral efficiency of dense Poisson networks")]
pub struct Cli {
    /// Worker threads (results do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Re-run the job recorded in a manifest.
    #[arg(long, value_name = "MANIFEST")]
    pub from_manifest: Option<PathBuf>,

    /// Output path when re-running from a manifest (default: the recorded one).
    #[arg(long, requires = "from_manifest")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// key=value configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Override one configuration key, e.g. `--set density=1e-4`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monte Carlo estimate of the sum spectral efficiency.
    Simulate {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        realizations: u64,
        /// mrc or zfsic:<L>
        #[arg(long, default_value = "mrc", value_parser = parse_receiver)]
        receiver: Receiver,
        /// none or exp:<rho>
        #[arg(long, default_value = "none")]
        corr: Corr,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact integrals, closed forms and bounds.
    Analytic {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, value_enum)]
        expr: Expr,
        /// Interferers cancelled for sic_exact (default N_r − 1).
        #[arg(long)]
        cancel: Option<usize>,
        /// Link distance for fixed-distance forms, in m.
        #[arg(long)]
        distance: Option<f64>,
        /// none or exp:<rho> (corr_lower only)
        #[arg(long, default_value = "none")]
        corr: Corr,
        #[arg(long)]
        out: PathBuf,
    },
    /// Density sweep with N_r = ceil(c λ^β).
    Sweep {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        c: f64,
        /// λ_min:λ_max:points, geometric.
        #[arg(long, value_parser = parse_grid)]
        grid: Grid,
        /// mrc or zfsic (ZF-SIC cancels N_r − 1 interferers).
        #[arg(long, default_value = "mrc", value_parser = parse_sweep_receiver)]
        receiver: SweepReceiver,
        /// Comma-separated subset of mc,exact,lower,upper.
        #[arg(long, default_value = "exact", value_delimiter = ',')]
        methods: Vec<SweepMethod>,
        #[arg(long, default_value_t = 20_000)]
        realizations: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte Carlo versus analytic checks for one configuration.
    Validate {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 50_000)]
        realizations: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Geometric density grid parsed from `λ_min:λ_max:points`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<f64>);

pub fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(format!("expected λ_min:λ_max:points, got '{s}'"));
    };
    let lo: f64 = lo.parse().map_err(|_| format!("bad λ_min '{lo}'"))?;
    let hi: f64 = hi.parse().map_err(|_| format!("bad λ_max '{hi}'"))?;
    let n: usize = n.parse().map_err(|_| format!("bad point count '{n}'"))?;
    geometric_grid(lo, hi, n).map(Grid).map_err(|e| e.to_string())
}

fn parse_sweep_receiver(s: &str) -> std::result::Result<SweepReceiver, String> {
    match s {
        "mrc" => Ok(SweepReceiver::Mrc),
        "zfsic" => Ok(SweepReceiver::ZfSic),
        _ => Err(format!("expected mrc or zfsic, got '{s}'")),
    }
}

fn load(args: &ConfigArgs) -> Result<densecap_core::NetworkConfig> {
    config_file::load(args.config.as_deref(), &args.overrides)
}

/// Runs a job, writes its CSV and manifest, and reports partial failures.
fn run_job(job: &Job, out: &Path) -> Result<()> {
    if job_realizations(job) == Some(0) {
        return Err(CliError::Usage("--realizations must be positive".into()));
    }
    let outcome = job::execute(job)?;
    output::write_csv(out, &outcome.rows)?;
    let manifest = output::write_manifest(&RunManifest::new(job, out), out)?;
    println!("wrote {} rows to {} (manifest {})", outcome.rows.len(), out.display(), manifest.display());
    if outcome.failures.is_empty() {
        return Ok(());
    }
    for f in &outcome.failures {
        eprintln!("failed: {f}");
    }
    Err(CliError::Numeric(format!("{} partial failures", outcome.failures.len())))
}

fn job_realizations(job: &Job) -> Option<u64> {
    match job {
        Job::Simulate { realizations, .. } => Some(*realizations),
        Job::Sweep { spec } if spec.methods.contains(&SweepMethod::Mc) => Some(spec.realizations),
        _ => None,
    }
}

pub fn run(cli: Cli) -> Result<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    if let Some(path) = &cli.from_manifest {
        if cli.command.is_some() {
            return Err(CliError::Usage("--from-manifest cannot be combined with a subcommand".into()));
        }
        let manifest = RunManifest::read(path)?;
        let out = match &cli.out {
            Some(p) => p.clone(),
            None => manifest
                .outputs
                .first()
                .cloned()
                .ok_or_else(|| CliError::Usage("manifest lists no output".into()))?,
        };
        return run_job(&manifest.job, &out);
    }
    let Some(command) = cli.command else {
        return Err(CliError::Usage("expected a subcommand or --from-manifest".into()));
    };
    match command {
        Command::Simulate {
            config,
            seed,
            realizations,
            receiver,
            corr,
            out,
        } => {
            let job = Job::Simulate {
                config: load(&config)?,
                receiver,
                corr,
                realizations,
                seed,
            };
            run_job(&job, &out)
        }
        Command::Analytic {
            config,
            expr,
            cancel,
            distance,
            corr,
            out,
        } => {
            let job = Job::Analytic {
                config: load(&config)?,
                expr,
                cancel,
                distance,
                corr,
            };
            run_job(&job, &out)
        }
        Command::Sweep {
            config,
            beta,
            c,
            grid,
            receiver,
            methods,
            realizations,
            seed,
            out,
        } => {
            let spec = SweepSpec {
                lambda_grid: grid.0,
                c,
                beta,
                receiver,
                methods,
                base: load(&config)?,
                realizations,
                seed,
                quad: QuadratureConfig::default(),
            };
            run_job(&Job::Sweep { spec }, &out)
        }
        Command::Validate {
            config,
            realizations,
            seed,
        } => {
            if realizations < densecap_core::simulator::MIN_REALIZATIONS {
                return Err(CliError::Usage("--realizations must be at least 100".into()));
            }
            let cfg = load(&config)?;
            let checks = validate::run_checks(&cfg, realizations, seed)?;
            for c in &checks {
                println!("{} [{}]: {}", c.name, if c.pass { "PASS" } else { "FAIL" }, c.detail);
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            if failed > 0 {
                return Err(CliError::Validation(format!("{failed} of {} checks failed", checks.len())));
            }
            println!("all {} checks passed", checks.len());
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_strings() {
        assert_eq!(parse_grid("1e-5:1e-3:3").unwrap().0.len(), 3);
        assert!(parse_grid("1e-5:1e-3").is_err());
        assert!(parse_grid("1e-3:1e-5:3").is_err());
        assert!(parse_grid("a:1e-3:3").is_err());
    }
}
