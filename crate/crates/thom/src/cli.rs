//! The `thom` command line.

use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use thom_core::closed_forms::{
    a3_seed, f_i_r, geometric_seed, mersenne_seed, thom_a1, thom_a2, thom_a3, thom_i22, thom_iii23,
    thom_porteous, PascalStaircase,
};
use thom_core::schur::{schur, Alphabet, AlphabetDiff, Letter};
use thom_core::{BigInt, Partition, SingularityId};

use crate::format::{to_json, to_text, Labelled};
use crate::golden;
use crate::run::{compute, plan, verify_table, Computed};

#[derive(Debug, Parser)]
#[command(
    name = "thom",
    version,
    about = "Thom polynomials of singularities via restriction equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosedFamily {
    A1,
    A2,
    A3,
    I22,
    Iii23,
    Fir,
    Porteous,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the restriction equations of a singularity (A1 and A2 use their closed forms).
    Solve {
        /// Singularity name such as III33, I23, I22, III23 or A3.
        name: String,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Do not restrict III33 candidates to a second row of length at most r.
        #[arg(long)]
        no_second_row_cap: bool,
        /// Wall-time budget in seconds.
        #[arg(long, default_value_t = 900)]
        budget: u64,
    },
    /// Evaluate a closed-form expansion.
    Closed {
        #[arg(value_enum, ignore_case = true)]
        family: ClosedFamily,
        #[arg(long)]
        r: Option<u32>,
        /// Index i for Fir and porteous.
        #[arg(long)]
        i: Option<u32>,
        /// Offset for porteous.
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check golden tables (built-in names or files) against the solver.
    Verify {
        tables: Vec<String>,
        /// List the built-in tables.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        no_second_row_cap: bool,
        #[arg(long, default_value_t = 900)]
        budget: u64,
    },
    /// Expand a Schur function S_I(A - B) with A and B given as comma separated linear forms.
    Schur {
        /// Partition, e.g. 23, 2,11,13 or S_{4,10}.
        partition: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        plus: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        minus: String,
    },
    /// Print a Pascal staircase.
    Staircase {
        /// mersenne (2^i - 1), a3, geometric:Y, or an explicit comma separated seed.
        #[arg(long, default_value = "mersenne", allow_hyphen_values = true)]
        seed: String,
        #[arg(long, default_value_t = 7)]
        rows: usize,
    },
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command. `Ok(false)` means the command completed but reported
/// a failure (a verify mismatch).
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<bool> {
    match cli.command {
        Command::Solve {
            name,
            r,
            format,
            no_second_row_cap,
            budget,
        } => {
            let family = name.parse().map_err(|e| anyhow!("{e}"))?;
            let target = SingularityId::new(family, r)?;
            let plan = plan(
                &target,
                !no_second_row_cap,
                Some(Duration::from_secs(budget)),
            );
            let computed =
                compute(&target, &plan).with_context(|| format!("solving {name} r={r}"))?;
            emit(
                out,
                format,
                &Labelled::new(target.family.name(), r.into(), computed.expansion().clone()),
            )?;
            match &computed {
                Computed::Closed(_) => writeln!(err, "{target}: closed form")?,
                Computed::Solved(rep) => writeln!(
                    err,
                    "{target}: {} candidates, {} equations, {} rows, rank {}, {:.2?}, verified",
                    rep.candidates_considered,
                    rep.equations_used,
                    rep.rows,
                    rep.rank,
                    rep.wall_time
                )?,
            }
            for n in &plan.notes {
                writeln!(err, "note: {n}")?;
            }
            Ok(true)
        }
        Command::Closed {
            family,
            r,
            i,
            offset,
            format,
        } => {
            let need_r = || r.ok_or_else(|| anyhow!("--r is required"));
            let need_i = || i.ok_or_else(|| anyhow!("--i is required"));
            let labelled = match family {
                ClosedFamily::A1 => Labelled::new("A1", need_r()?.into(), thom_a1(need_r()?)?),
                ClosedFamily::A2 => Labelled::new("A2", need_r()?.into(), thom_a2(need_r()?)?),
                ClosedFamily::A3 => Labelled::new("A3", need_r()?.into(), thom_a3(need_r()?)?),
                ClosedFamily::I22 => Labelled::new("I22", need_r()?.into(), thom_i22(need_r()?)?),
                ClosedFamily::Iii23 => {
                    Labelled::new("III23", need_r()?.into(), thom_iii23(need_r()?)?)
                }
                ClosedFamily::Fir => Labelled::new(
                    format!("F{}", need_i()?),
                    need_r()?.into(),
                    f_i_r(need_i()?, need_r()?)?,
                ),
                ClosedFamily::Porteous => {
                    let offset = offset.ok_or_else(|| anyhow!("--offset is required"))?;
                    Labelled::new(
                        format!("porteous{}", need_i()?),
                        offset,
                        thom_porteous(need_i()?, offset)?,
                    )
                }
            };
            emit(out, format, &labelled)?;
            Ok(true)
        }
        Command::Verify {
            tables,
            list,
            no_second_row_cap,
            budget,
        } => {
            if list {
                for name in golden::builtin_names() {
                    writeln!(out, "{name}")?;
                }
                return Ok(true);
            }
            if tables.is_empty() {
                bail!("no tables given; use --list to see the built-in ones");
            }
            let loaded = tables
                .iter()
                .map(|t| golden::load(t))
                .collect::<Result<Vec<_>, _>>()?;
            let budget = Some(Duration::from_secs(budget));
            let verdicts = std::thread::scope(|s| {
                let jobs: Vec<_> = loaded
                    .iter()
                    .map(|t| {
                        s.spawn(move || {
                            verify_table(t, &plan(&t.singularity, !no_second_row_cap, budget))
                        })
                    })
                    .collect();
                jobs.into_iter()
                    .map(|j| j.join().expect("verify job panicked"))
                    .collect::<Vec<_>>()
            });
            let mut ok = true;
            for v in verdicts {
                writeln!(out, "{v}")?;
                ok &= v.passed();
            }
            Ok(ok)
        }
        Command::Schur {
            partition,
            plus,
            minus,
        } => {
            let p: Partition = partition.parse()?;
            let d = AlphabetDiff::new(parse_alphabet(&plus)?, parse_alphabet(&minus)?);
            writeln!(out, "{}", schur(&p, &d))?;
            Ok(true)
        }
        Command::Staircase { seed, rows } => {
            let seed = parse_seed(&seed, rows)?;
            let p = PascalStaircase::new(&seed, rows)?;
            for s in 1..=p.num_rows() {
                let row: Vec<String> = p.row(s).iter().map(BigInt::to_string).collect();
                writeln!(out, "{s}\t{}", row.join("\t"))?;
            }
            Ok(true)
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, l: &Labelled) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", to_text(&l.expansion)),
        Format::Json => writeln!(out, "{}", to_json(l)),
    }
}

fn parse_alphabet(s: &str) -> anyhow::Result<Alphabet> {
    let letters = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.parse::<Letter>().with_context(|| format!("letter {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Alphabet::new(letters))
}

fn parse_seed(s: &str, rows: usize) -> anyhow::Result<Vec<BigInt>> {
    Ok(match s {
        "mersenne" => mersenne_seed(rows),
        "a3" => a3_seed(rows),
        _ => {
            if let Some(y) = s.strip_prefix("geometric:") {
                geometric_seed(
                    y.trim().parse().with_context(|| format!("ratio {y:?}"))?,
                    rows,
                )
            } else {
                s.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<BigInt>()
                            .map_err(|_| anyhow!("bad seed entry {t:?}"))
                    })
                    .collect::<Result<_, _>>()?
            }
        }
    })
}
