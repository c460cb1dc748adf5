//! Command-line front end: per-permutation queries, exhaustive verification
//! sweeps, counting tables, and DOT/JSON export.
//!
//! Exit statuses: 0 pass, 1 claim failure or disagreement, 2 usage error,
//! 3 resource cap exceeded.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mposet::export::{export_document, to_dot, to_json};
use mposet::join_irr::build_m;
use mposet::patterns::find_b2;
use mposet::perm::{avoids_all, inversion_set, lehmer_code, PatternSet, Permutation};
use mposet::verify::{
    catalan, count_avoiders, count_b2_free, verify_claim, Claim, SweepOptions,
};
use mposet::weak_order::lambda_interval;
use mposet::Error;

#[derive(Parser)]
#[command(name = "mposet", version, about = "Lehmer-code lattices and their join-irreducible posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Lehmer code of a permutation.
    Code { perm: String },
    /// Print the inversion set of a permutation, one "i j" pair per line.
    Inv { perm: String },
    /// List the weak-order interval [e, w], one permutation per line.
    Lambda { perm: String },
    /// Export the join-irreducible poset M_w.
    Mposet {
        perm: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
    /// Check both sides of the main equivalence independently.
    Check { perm: String },
    /// Sweep a claim over all of S_n.
    Verify(VerifyArgs),
    /// Count pattern-avoiding permutations and/or B2-free M posets as CSV.
    Count(CountArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim identifier, e.g. MAIN_THEOREM or LEMMA_3_8.
    claim: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long, default_value_t = 100)]
    max_witnesses: usize,
    /// Run past the claim's default size cap.
    #[arg(long)]
    override_cap: bool,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n_max: usize,
    /// Comma-separated forbidden patterns, e.g. "231" or "3412,3421".
    #[arg(long)]
    avoid: Option<String>,
    /// Count permutations whose M poset is B2-free.
    #[arg(long)]
    b2_free: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::ResourceLimit(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Code { perm } => {
            let w = Permutation::parse(&perm)?;
            println!("{}", lehmer_code(&w));
            Ok(ExitCode::SUCCESS)
        }
        Command::Inv { perm } => {
            let w = Permutation::parse(&perm)?;
            for (i, j) in inversion_set(&w).pairs() {
                println!("{i} {j}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lambda { perm } => {
            let w = Permutation::parse(&perm)?;
            for sigma in lambda_interval(&w) {
                println!("{sigma}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mposet { perm, format } => {
            let w = Permutation::parse(&perm)?;
            match format {
                ExportFormat::Json => print!("{}", to_json(&export_document(&w))),
                ExportFormat::Dot => print!("{}", to_dot(&build_m(&w))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { perm } => {
            let w = Permutation::parse(&perm)?;
            // Each side computed by its own module; agreement is the theorem.
            let b2_free = find_b2(build_m(&w).poset()).is_none();
            let avoids = avoids_all(&w, &main_patterns());
            let agree = b2_free == avoids;
            println!("b2_free={b2_free} avoids_3412_3421={avoids} agree={agree}");
            Ok(if agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Verify(args) => {
            let claim = Claim::from_str(&args.claim)?;
            let opts = SweepOptions {
                workers: args.workers,
                max_witnesses: args.max_witnesses,
                override_cap: args.override_cap,
            };
            let report = verify_claim(claim, args.n, &opts)?;
            match args.format {
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"))
                }
                ReportFormat::Text => {
                    println!(
                        "{} n={} checked={} counterexamples={} elapsed={:.3}s => {}",
                        report.claim,
                        report.n,
                        report.checked,
                        report.total_counterexamples,
                        report.elapsed_secs,
                        if report.pass() { "PASS" } else { "FAIL" }
                    );
                    for cx in &report.counterexamples {
                        println!("  counterexample omega={} {}", cx.omega, cx.detail);
                    }
                }
            }
            Ok(if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Count(args) => {
            if args.avoid.is_none() && !args.b2_free {
                return Err(Error::InvalidArgument(
                    "pass --avoid <patterns> and/or --b2-free".into(),
                ));
            }
            if let Some(avoid) = &args.avoid {
                let patterns: Vec<Permutation> = avoid
                    .split(',')
                    .map(Permutation::parse)
                    .collect::<Result<_, _>>()?;
                let all_s3 = patterns.iter().all(|p| p.n() == 3);
                let ps = PatternSet::new(patterns)?;
                if all_s3 {
                    println!("n,count,catalan,match");
                } else {
                    println!("n,count");
                }
                for n in 1..=args.n_max {
                    let count = count_avoiders(n, &ps)?;
                    if all_s3 {
                        let cat = catalan(n);
                        println!("{n},{count},{cat},{}", count == cat);
                    } else {
                        println!("{n},{count}");
                    }
                }
            }
            if args.b2_free {
                println!("n,count");
                for n in 1..=args.n_max {
                    println!("{n},{}", count_b2_free(n)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main_patterns() -> PatternSet {
    PatternSet::new(vec![
        Permutation::parse("3412").unwrap(),
        Permutation::parse("3421").unwrap(),
    ])
    .unwrap()
}
