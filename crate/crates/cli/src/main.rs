mod output;
mod records;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use cubic3_core::admissibility::{admissible_up_to, classify_d};
use cubic3_core::oracle::compare;
use cubic3_core::parametrization::st_max_for;
use cubic3_core::trinomials::{classify, construct, emit};
use cubic3_core::{represent_u3v, SetKind};

use output::{Format, Sink};
use records::*;

#[derive(Parser)]
#[command(
    name = "cubic3",
    version,
    about = "Cyclic cubic trinomials X^3 - aX + b and the curve points behind them"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "jsonl", global = true)]
    format: Format,
    /// Write records here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Representations n = u^2 + 3v^2 with u, v > 0 and gcd(u, 3v) = 1.
    Represent {
        #[arg(value_parser = positive)]
        n: i128,
    },
    /// Admissible gcd classes up to --max, or the verdict for one --D.
    Admissible {
        #[arg(long, value_parser = positive, default_value = "100", conflicts_with = "d")]
        max: i128,
        #[arg(long = "D", value_parser = positive)]
        d: Option<i128>,
    },
    /// Constructed points of one set with z (or z/D for X1D kinds) up to --zmax.
    Points {
        #[arg(long = "D", value_parser = positive)]
        d: i128,
        #[arg(long, value_parser = positive, default_value = "100")]
        zmax: i128,
        #[arg(long, default_value = "X1D_STAR")]
        kind: SetKind,
    },
    /// Every cyclic cubic trinomial of gcd class --D from pairs with max(|s|, |t|) <= --st-max.
    Trinomials {
        #[arg(long = "D", value_parser = positive)]
        d: i128,
        #[arg(long = "st-max", value_parser = positive, default_value = "20")]
        st_max: i128,
    },
    /// Classify each {"a", "b"} line of a JSONL file.
    Verify { file: PathBuf },
    /// Compare a constructed set against exhaustive search.
    Oracle {
        #[arg(long = "D", value_parser = positive)]
        d: i128,
        #[arg(long, value_parser = positive, default_value = "100")]
        zmax: i128,
        #[arg(long, default_value = "X1D_STAR")]
        kind: SetKind,
    },
}

fn positive(s: &str) -> Result<i128, String> {
    match s.parse::<i128>() {
        Ok(n) if n >= 1 => Ok(n),
        Ok(n) => Err(format!("must be at least 1, got {n}")),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut sink = Sink::open(cli.format, cli.out.as_deref())?;
    let mut ok = true;
    match cli.cmd {
        Cmd::Represent { n } => {
            for r in represent_u3v(n).iter() {
                sink.write(&RepRecord::from(r))?;
            }
        }
        Cmd::Admissible { max, d: None } => {
            for a in admissible_up_to(max)? {
                sink.write(&AdmissibleRecord::from(&a))?;
            }
        }
        Cmd::Admissible { d: Some(d), .. } => {
            let rec = match classify_d(d)? {
                Ok(_) => VerdictRecord {
                    d,
                    admissible: true,
                    reason: String::new(),
                },
                Err(why) => VerdictRecord {
                    d,
                    admissible: false,
                    reason: why.to_string(),
                },
            };
            sink.write(&rec)?;
        }
        Cmd::Points { d, zmax, kind } => {
            for p in &construct(kind, d, zmax)? {
                sink.write(&PointRecord::from(p))?;
            }
        }
        Cmd::Trinomials { d, st_max } => {
            let e = emit(d, st_max)?;
            if let Some(why) = e.inadmissible {
                bail!("D = {d} is not admissible: {why}");
            }
            let mut recs = e.records;
            recs.sort_by_key(|r| (r.trinomial.a.abs(), r.trinomial.b));
            for r in &recs {
                sink.write(&TrinomialRecord::from(r))?;
            }
        }
        Cmd::Verify { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let rec = match serde_json::from_str::<Candidate>(line) {
                    Ok(c) => match classify(c.a, c.b) {
                        Ok(cl) => VerifyRecord::from_classification(i + 1, &c, &cl),
                        Err(e) => VerifyRecord::error(i + 1, e.to_string()),
                    },
                    Err(e) => VerifyRecord::error(i + 1, format!("malformed record: {e}")),
                };
                ok &= rec.cyclic_cubic;
                sink.write(&rec)?;
            }
        }
        Cmd::Oracle { d, zmax, kind } => {
            let built = construct(kind, d, zmax)?;
            let report = compare(kind, d, zmax, &built)?;
            for p in &report.missing {
                eprintln!("missing: {p}");
            }
            for p in &report.extra {
                eprintln!("extra: {p}");
            }
            ok = report.is_match();
            sink.write(&OracleRecord::new(&report, st_max_for(zmax)))?;
        }
    }
    sink.finish()?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
