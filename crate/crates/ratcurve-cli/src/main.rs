//! `ratcurve` — construct and certify rational-function pairs (f, g)
//! with f∘g real, verify the group-theoretic Proposition, and plot the
//! image curves. Every invocation produces one JSON report.

mod job;
mod plot;
mod report;
mod run;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use job::JobSpec;
use report::Report;

#[derive(Parser)]
#[command(name = "ratcurve", version, about)]
struct Cli {
    /// Load a JobSpec from a TOML or JSON file; flags override its fields.
    #[arg(long, global = true)]
    job: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Interval-embedding precision in bits (RATCURVE_PRECISION_BITS, 128).
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Seed for all randomized phases.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certified pair from a catalog curve.
    Construct {
        #[arg(long)]
        curve: Option<String>,
    },
    /// Run all certificates on a pair (catalog curve or explicit f, g).
    Verify {
        #[arg(long)]
        curve: Option<String>,
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Decide whether g(ℝ̂) is a circle or line.
    Circle {
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Certify injectivity of g on ℝ̂.
    Injective {
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Search for a weak-injectivity witness for g.
    WeakInjective {
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Verify the intermediate-subgroup Proposition over a group sweep.
    GroupSearch {
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        group_budget: Option<usize>,
        #[arg(long)]
        order_cap: Option<usize>,
        /// Check a single named catalog group instead of sweeping.
        #[arg(long)]
        group: Option<String>,
    },
    /// Instantiate a named family, e.g. "pakovich:n=5,zeta_order=5".
    Family {
        #[arg(long)]
        family: Option<String>,
    },
    /// Sample g over ℝ̂ and emit an SVG plot with a CSV sidecar.
    Plot {
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        post: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        plot_out: Option<PathBuf>,
    },
}

fn flags_to_job(cli: &Cli) -> JobSpec {
    let mut job = JobSpec {
        out: cli.out.clone(),
        precision: cli.precision,
        seed: cli.seed,
        ..Default::default()
    };
    match &cli.command {
        None => {}
        Some(Command::Construct { curve }) => {
            job.command = "construct".into();
            job.curve = curve.clone();
        }
        Some(Command::Verify { curve, f, g, field }) => {
            job.command = "verify".into();
            job.curve = curve.clone();
            job.f = f.clone();
            job.g = g.clone();
            job.field = field.clone();
        }
        Some(Command::Circle { g, field }) => {
            job.command = "circle".into();
            job.g = g.clone();
            job.field = field.clone();
        }
        Some(Command::Injective { g, field }) => {
            job.command = "injective".into();
            job.g = g.clone();
            job.field = field.clone();
        }
        Some(Command::WeakInjective { g, field }) => {
            job.command = "weak-injective".into();
            job.g = g.clone();
            job.field = field.clone();
        }
        Some(Command::GroupSearch { max_degree, group_budget, order_cap, group }) => {
            job.command = "group-search".into();
            job.max_degree = *max_degree;
            job.group_budget = *group_budget;
            job.order_cap = *order_cap;
            job.group = group.clone();
        }
        Some(Command::Family { family }) => {
            job.command = "family".into();
            job.family = family.clone();
        }
        Some(Command::Plot { g, field, post, samples, plot_out }) => {
            job.command = "plot".into();
            job.g = g.clone();
            job.field = field.clone();
            job.post = post.clone();
            job.samples = *samples;
            job.plot_out = plot_out.clone();
        }
    }
    job
}

fn emit(text: &str, out: &Option<PathBuf>) {
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("failed to write report: {e}");
            }
        }
        None => println!("{text}"),
    }
}

fn main() {
    let cli = Cli::parse();
    let mut job = match &cli.job {
        Some(path) => match JobSpec::from_file(path) {
            Ok(spec) => spec,
            Err(e) => {
                eprintln!("{e}");
                std::process::exit(1);
            }
        },
        None => JobSpec::default(),
    };
    job = job.merge(flags_to_job(&cli));

    let started = Instant::now();
    match run::run(&job) {
        Ok((results, code)) => {
            let report =
                Report::new(&job, results, started.elapsed().as_secs_f64() * 1e3);
            emit(&report.to_json(), &job.out);
            std::process::exit(code);
        }
        Err(e) => {
            let report = Report::new(
                &job,
                json!({"error": e.to_string()}),
                started.elapsed().as_secs_f64() * 1e3,
            );
            emit(&report.to_json(), &job.out);
            std::process::exit(1);
        }
    }
}
