use std::fs;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ptmc_core::{
    binomial_row, compare_table, generate_ptmc, run_exhaustive, run_monte_carlo, verify, CodeSpec,
    SimConfig,
};

use ptmc_cli::format;

/// Exit codes: 0 success / property holds, 1 property violated,
/// 2 usage or parse error. clap's own usage failures also exit 2.
#[derive(Parser)]
#[command(name = "ptmc", version, about = "Zero-cross-correlation spreading code toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=N of Pascal's triangle
    Pascal {
        /// Last row to print (at most 60)
        n: usize,
    },
    /// Generate the code matrix for N users at weight W
    Generate {
        /// Number of users (at least 2)
        #[arg(long)]
        users: usize,
        /// Code weight (at least 2)
        #[arg(long)]
        weight: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Output path, - for standard output
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Check weights, length, and pairwise cross-correlation of a matrix
    Verify {
        /// Matrix file in the text format, - for standard input
        path: String,
        /// Also require every codeword to have this weight
        #[arg(long)]
        expect_weight: Option<usize>,
    },
    /// Evaluate the published code families at a requested size
    Compare {
        /// Requested number of users
        #[arg(long)]
        users: u64,
        /// Requested code weight
        #[arg(long)]
        weight: u64,
        /// Emit CSV instead of the aligned table
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Emit a JSON array instead of the aligned table
        #[arg(long)]
        json: bool,
    },
    /// Transmit traffic through the chip-level channel and decode it
    Simulate {
        /// Matrix file in the text format, - for standard input
        path: String,
        /// Number of Monte Carlo trials
        #[arg(long, required_unless_present = "exhaustive")]
        trials: Option<u64>,
        /// PRNG seed
        #[arg(long, required_unless_present = "exhaustive")]
        seed: Option<u64>,
        /// Additive Gaussian noise deviation per chip
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        /// Probability each user sends bit 1
        #[arg(long, default_value_t = 0.5)]
        activity: f64,
        /// Enumerate all 2^N traffic patterns instead of sampling
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Pascal { n } => {
            // Reject out-of-range rows before printing anything.
            binomial_row(n)?;
            for row in 0..=n {
                let row = binomial_row(row)?;
                let line: Vec<String> = row.entries().iter().map(u64::to_string).collect();
                println!("{}", line.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            users,
            weight,
            format: output,
            out,
        } => {
            let spec = CodeSpec::new(users, weight)?;
            let matrix = generate_ptmc(spec)?;
            let content = match output {
                OutputFormat::Text => {
                    let mut text = format::matrix_header(users, weight, matrix.cols());
                    text.push_str(&format::matrix_to_text(&matrix));
                    text
                }
                OutputFormat::Json => format::matrix_to_json(&matrix, users, weight),
            };
            write_output(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { path, expect_weight } => {
            let matrix = format::matrix_from_text(&read_input(&path)?)?;
            let report = verify(&matrix, expect_weight)?;
            print!("{}", format::report_to_json(&report));
            let ok = report.is_zcc && report.weight_mismatches.is_empty();
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Compare {
            users,
            weight,
            csv,
            json,
        } => {
            let rows = compare_table(users, weight)?;
            let rendered = if csv {
                format::family_rows_to_csv(&rows)
            } else if json {
                format::family_rows_to_json(&rows)
            } else {
                format::family_rows_to_table(&rows)
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate {
            path,
            trials,
            seed,
            noise,
            activity,
            exhaustive,
        } => {
            let matrix = format::matrix_from_text(&read_input(&path)?)?;
            let report = if exhaustive {
                run_exhaustive(&matrix)?
            } else {
                let mut config = SimConfig::new(
                    trials.expect("required unless exhaustive"),
                    seed.expect("required unless exhaustive"),
                );
                config.noise_sigma = noise;
                config.activity = activity;
                run_monte_carlo(&matrix, &config)?
            };
            print!("{}", format::sim_report_to_json(&report));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .context("reading standard input")?;
        Ok(buffer)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(path: &str, content: &str) -> Result<()> {
    if path == "-" {
        print!("{content}");
        Ok(())
    } else {
        fs::write(path, content).with_context(|| format!("writing {path}"))
    }
}
