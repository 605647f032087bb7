use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use curvinv::error::Error;
use curvinv::groebner::Budget;
use curvinv::io::{self, verify};
use curvinv::local::{CharPairs, SingularityRecord};

#[derive(Parser)]
#[command(
    name = "curvinv",
    about = "Invariants of reduced complex projective plane curves",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Reduction-step budget per Groebner-basis computation.
    #[arg(long, global = true, default_value_t = 200_000)]
    max_steps: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a curve description file.
    Analyze {
        file: PathBuf,
        /// Also write the machine-readable report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Total Tjurina number and free/nearly-free classification only.
    Freeness { file: PathBuf },
    /// Local invariants of a unibranch singularity from Newton pairs,
    /// e.g. --pairs "2,3;2,3".
    Local {
        #[arg(long)]
        pairs: String,
    },
    /// Alexander-polynomial bound of a curve, before and after the
    /// prime-power filter.
    Bound { file: PathBuf },
    /// Run the bundled regression suite and print one row per claim.
    VerifyPaper {
        /// Restrict to one section (freeness, local, bound, zariski,
        /// abelian, smooth, properties) or an id substring.
        #[arg(long)]
        only: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget {
        max_steps: cli.max_steps,
    };
    match dispatch(cli.command, budget) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(command: Command, budget: Budget) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze { file, json } => {
            let (curve_file, _, _) = io::load_curve_file(&file)?;
            let report = io::analyze(&curve_file, budget)?;
            print!("{}", io::render_text(&curve_file.name, &report));
            if let Some(path) = json {
                std::fs::write(&path, report.to_json())?;
                println!("json report written to {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Freeness { file } => {
            let (curve_file, _, _) = io::load_curve_file(&file)?;
            let report = io::analyze(&curve_file, budget)?;
            println!("degree: {}", report.degree);
            println!("tau: {}", report.tau);
            let class = match report.freeness.kind {
                curvinv::invariants::FreenessKind::Free { d1, d2 } => {
                    format!("free({d1},{d2})")
                }
                curvinv::invariants::FreenessKind::NearlyFree { d1, d2 } => {
                    format!("nearly_free({d1},{d2})")
                }
                curvinv::invariants::FreenessKind::Neither => "neither".to_string(),
            };
            println!("classification: {class}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Local { pairs } => {
            let parsed = parse_pairs(&pairs)?;
            let char_pairs = CharPairs::new(parsed)?;
            let record = SingularityRecord::unibranch(char_pairs.clone());
            println!("pairs: {:?}", char_pairs.pairs());
            println!("linking coefficients: {:?}", char_pairs.linking_coefficients());
            println!("milnor number: {}", char_pairs.milnor_number());
            println!("delta invariant: {}", record.delta()?);
            let delta = char_pairs.local_alexander();
            println!("local Alexander polynomial: {}", delta);
            println!("expanded: {}", delta.expand()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { file } => {
            let (curve_file, _, _) = io::load_curve_file(&file)?;
            let report = io::analyze(&curve_file, budget)?;
            println!("before filter: {}", report.alexander_bound.before_filter);
            println!(
                "after filter:  {} = {}",
                report.alexander_bound.after_filter, report.alexander_bound.after_filter_expanded
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { only } => {
            let rows = verify::run(only.as_deref());
            if rows.is_empty() {
                eprintln!(
                    "no rows match '{}' (sections: {})",
                    only.unwrap_or_default(),
                    verify::known_sections().join(", ")
                );
                return Ok(ExitCode::from(1));
            }
            print!("{}", verify::render_table(&rows));
            if rows.iter().all(|r| r.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn parse_pairs(text: &str) -> Result<Vec<(u32, u32)>, Error> {
    let mut out = Vec::new();
    for (i, chunk) in text.split(';').enumerate() {
        let parts: Vec<&str> = chunk.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Validation(format!(
                "pair {} must look like 'p,q' (got '{chunk}')",
                i + 1
            )));
        }
        let p = parts[0]
            .parse::<u32>()
            .map_err(|_| Error::Validation(format!("invalid integer '{}'", parts[0])))?;
        let q = parts[1]
            .parse::<u32>()
            .map_err(|_| Error::Validation(format!("invalid integer '{}'", parts[1])))?;
        out.push((p, q));
    }
    Ok(out)
}
