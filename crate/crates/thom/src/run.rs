//! Solver settings per singularity, and checking tables against the solver.

use std::fmt;
use std::time::{Duration, Instant};

use thom_core::closed_forms::{thom_a1, thom_a2};
use thom_core::solver::{self, solve_with_clock, SolveOptions, SolveReport};
use thom_core::{BigInt, Family, Partition, SchurExpansion, SingularityId};

use crate::clock::InstantClock;
use crate::golden::GoldenTable;

/// Solver options for one target plus notes on anything non-default.
#[derive(Debug, Clone)]
pub struct Plan {
    pub options: SolveOptions,
    pub notes: Vec<String>,
}

/// The command-line defaults: the second-row cap for III33 unless disabled,
/// and for I23 at r >= 5 the candidates containing (r+2)^3 are excluded,
/// since the restriction equations alone leave them undetermined.
pub fn plan(target: &SingularityId, second_row_cap: bool, budget: Option<Duration>) -> Plan {
    let mut options = SolveOptions {
        budget,
        ..SolveOptions::default()
    };
    let mut notes = Vec::new();
    if target.family == Family::III(3, 3) && second_row_cap {
        options.use_second_row_cap = true;
        notes.push("second-row cap on".to_string());
    }
    if target.family == Family::I(2, 3) && target.r >= 5 {
        options.exclude_sigma3 = true;
        notes.push(format!(
            "candidates containing ({0},{0},{0}) excluded; the equations alone do not determine them",
            target.r + 2
        ));
    }
    Plan { options, notes }
}

#[derive(Debug)]
pub enum Computed {
    Closed(SchurExpansion),
    Solved(SolveReport),
}

impl Computed {
    pub fn expansion(&self) -> &SchurExpansion {
        match self {
            Computed::Closed(e) => e,
            Computed::Solved(r) => &r.expansion,
        }
    }
}

/// A1 and A2 come from their closed forms, everything else from the solver.
pub fn compute(target: &SingularityId, plan: &Plan) -> anyhow::Result<Computed> {
    match target.family {
        Family::A(1) => Ok(Computed::Closed(thom_a1(target.r)?)),
        Family::A(2) => Ok(Computed::Closed(thom_a2(target.r)?)),
        _ => Ok(Computed::Solved(solve_with_clock(
            target,
            &plan.options,
            &InstantClock::start(),
        )?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub partition: Partition,
    pub table: BigInt,
    pub computed: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: table {}, computed {}",
            self.partition, self.table, self.computed
        )
    }
}

/// The first partition, in graded-lex order, where the coefficients differ.
pub fn first_mismatch(table: &SchurExpansion, computed: &SchurExpansion) -> Option<Mismatch> {
    let mut all: Vec<&Partition> = table.partitions().chain(computed.partitions()).collect();
    all.sort();
    all.dedup();
    all.into_iter().find_map(|p| {
        let (a, b) = (table.coeff(p), computed.coeff(p));
        (a != b).then(|| Mismatch {
            partition: p.clone(),
            table: a,
            computed: b,
        })
    })
}

#[derive(Debug)]
pub struct Verdict {
    pub table: String,
    pub target: SingularityId,
    pub terms: usize,
    pub notes: Vec<String>,
    pub outcome: Result<Check, String>,
    pub elapsed: Duration,
}

#[derive(Debug)]
pub struct Check {
    pub mismatch: Option<Mismatch>,
    /// Whether the table satisfies its restriction equations; `None` when
    /// the singularity has no equation system.
    pub equations_hold: Option<bool>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Ok(c) if c.mismatch.is_none() && c.equations_hold != Some(false))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} r={}, {} terms, {:.2?})",
            self.table, self.target.family, self.target.r, self.terms, self.elapsed
        )?;
        match &self.outcome {
            Err(e) => write!(f, ": {e}")?,
            Ok(c) => {
                if let Some(m) = &c.mismatch {
                    write!(f, ": first mismatch {m}")?;
                }
                match c.equations_hold {
                    Some(false) => write!(f, "; table fails its restriction equations")?,
                    Some(true) if c.mismatch.is_some() => {
                        write!(f, "; table satisfies its restriction equations")?
                    }
                    _ => {}
                }
            }
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Recomputes the table's singularity and compares term sets, then checks
/// the table itself against the restriction equations.
pub fn verify_table(table: &GoldenTable, plan: &Plan) -> Verdict {
    let start = Instant::now();
    let target = table.singularity;
    let mut notes = plan.notes.clone();
    if let Some(s) = &table.suspect {
        notes.push(format!("table flagged suspect: {s}"));
    }
    for (printed, fixed) in &table.errata {
        notes.push(format!(
            "erratum applied: printed {printed} read as {fixed}"
        ));
    }
    let outcome = compute(&target, plan)
        .map_err(|e| e.to_string())
        .map(|computed| {
            let mismatch = first_mismatch(&table.expansion, computed.expansion());
            // A solved expansion has already passed the same check.
            let equations_hold = match (&mismatch, &computed) {
                (None, Computed::Solved(_)) if plan.options.post_verify => Some(true),
                _ => solver::verify(&table.expansion, &target).ok(),
            };
            Check {
                mismatch,
                equations_hold,
            }
        });
    Verdict {
        table: table.name.clone(),
        target,
        terms: table.expansion.len(),
        notes,
        outcome,
        elapsed: start.elapsed(),
    }
}
