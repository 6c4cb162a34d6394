//! Assembling and solving restriction-equation systems, and independent
//! verification of candidate expansions.

use alloc::vec::Vec;
use core::time::Duration;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{LinearSystem, Monomial, Polynomial, SolveError, VarId};
use crate::catalog::{
    auto_vanishing, restriction_system, CatalogError, Family, RestrictionEquation, SingularityId,
};
use crate::partitions::{enumerate_candidates, Partition, SchurExpansion};
use crate::schur::{
    complete, complete_in, evaluate_expansion, resultant, schur, schur_in, split_for_factorization,
    Alphabet, AlphabetDiff, Letter,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Linear(#[from] SolveError),
    #[error("time budget of {budget:?} exceeded after {elapsed:?}")]
    Timeout { budget: Duration, elapsed: Duration },
    #[error("no candidate partitions for {0}")]
    NoCandidates(SingularityId),
    #[error("solution fails the independent check of the {0} equation")]
    Verification(SingularityId),
}

/// Source of elapsed time for the solve budget. The core crate has no clock
/// of its own; [`NullClock`] never advances.
pub trait Clock {
    fn elapsed(&self) -> Duration;
}

pub struct NullClock;

impl Clock for NullClock {
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Restrict candidates by the second-row bound (applied only to
    /// `III_{3,3}`, where it is known).
    pub use_second_row_cap: bool,
    /// Divide the common resultant factor out of equations whose
    /// non-vanishing candidates all factor.
    pub strip_resultant: bool,
    /// Re-check the solution against every equation through the
    /// independent determinant path.
    pub post_verify: bool,
    /// Drop candidates containing the `(r+2)^3` rectangle of `Σ³`. Without
    /// it the listed `I_{2,3}` equations leave a kernel from `r = 5` on.
    pub exclude_sigma3: bool,
    /// Take the part of maximal length `p = dim Q − 1` to be `Φ_p(T_{r−1})`,
    /// solving the lower `r` first. Needed for uniqueness of `I_{2,3}` from
    /// `r = 5` on.
    pub column_recursion: bool,
    pub budget: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            use_second_row_cap: false,
            strip_resultant: true,
            post_verify: true,
            column_recursion: false,
            exclude_sigma3: false,
            budget: Some(Duration::from_secs(15 * 60)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub target: SingularityId,
    pub expansion: SchurExpansion,
    pub candidates_considered: usize,
    pub equations_used: usize,
    pub rows: usize,
    pub rank: usize,
    pub wall_time: Duration,
}

/// Candidate index partitions: weight `codim`, containing `(r+1)^2` for
/// `Σ²` singularities and `(r)` for Morin ones, at most `dim Q − 1` parts,
/// narrowed by the options.
pub fn candidates(target: &SingularityId, options: &SolveOptions) -> Vec<Partition> {
    let r = target.r;
    let (width, height) = match target.sigma_rank() {
        0 => (0, 0),
        1 => (r, 1),
        _ => (r + 1, 2),
    };
    let cap = (options.use_second_row_cap && target.family == Family::III(3, 3)).then_some(r);
    let mut out = enumerate_candidates(target.codim(), width, height, target.length_bound(), cap);
    if options.exclude_sigma3 {
        out.retain(|p| !p.contains_rectangle(r + 2, 3));
    }
    out
}

/// The flattened linear system for `target` over the given candidates, with
/// the known terms `fixed` moved to the right-hand side. Returns the system
/// and the number of equations that contributed rows.
pub fn assemble(
    target: &SingularityId,
    candidates: &[Partition],
    fixed: &SchurExpansion,
    options: &SolveOptions,
    clock: &dyn Clock,
) -> Result<(LinearSystem, usize), SolverError> {
    let equations = restriction_system(target)?;
    let mut system = LinearSystem::new(candidates.to_vec());
    let mut all: Vec<Partition> = candidates.to_vec();
    all.extend(fixed.partitions().cloned());
    let mut used = 0;
    for eq in &equations {
        check_budget(options, clock)?;
        let active: Vec<usize> = (0..all.len())
            .filter(|&k| !auto_vanishing(&all[k], eq))
            .collect();
        if active.is_empty() && eq.rhs.is_zero() {
            continue;
        }
        used += 1;
        let (mut lhs, mut rhs) = equation_polynomials(&all, &active, eq, options.strip_resultant);
        let split = active.partition_point(|&k| k < candidates.len());
        for (poly, &k) in lhs.drain(split..).zip(&active[split..]) {
            rhs = &rhs - &poly.scale(&fixed.coeff(&all[k]));
        }
        flatten_into(&mut system, candidates.len(), &active[..split], &lhs, &rhs)?;
    }
    system.dedup_rows();
    Ok((system, used))
}

/// Per-candidate polynomials and the right-hand side of one equation, with
/// the resultant divided out when every active candidate factors.
fn equation_polynomials(
    candidates: &[Partition],
    active: &[usize],
    eq: &RestrictionEquation,
    strip: bool,
) -> (Vec<Polynomial>, Polynomial) {
    let d = eq.substitution.reduced();
    let (m, n) = (d.plus.len(), d.minus.len());
    if strip && m > 0 && n > 0 {
        let splits: Option<Vec<(Partition, Partition)>> = active
            .iter()
            .map(|&k| split_for_factorization(&candidates[k], m, n as u32))
            .collect();
        if let Some(splits) = splits {
            let r = resultant(&d.plus, &d.minus);
            if let Some(rhs) = eq.rhs.div_exact(&r) {
                let plus = AlphabetDiff::plus_only(d.plus.clone());
                let minus = AlphabetDiff::minus_only(d.minus.clone());
                let plus_upto = splits.iter().map(|(t, _)| max_index(t)).max().unwrap_or(0);
                let minus_upto = splits.iter().map(|(_, j)| max_index(j)).max().unwrap_or(0);
                let plus_comp = complete(&plus, plus_upto);
                let minus_comp = complete(&minus, minus_upto);
                let lhs = splits
                    .iter()
                    .map(|(top, lower)| {
                        schur_in::<Polynomial>(top, &plus_comp)
                            * schur_in::<Polynomial>(lower, &minus_comp)
                    })
                    .collect();
                return (lhs, rhs);
            }
        }
    }
    let upto = active
        .iter()
        .map(|&k| max_index(&candidates[k]))
        .max()
        .unwrap_or(0);
    let comp = complete(&d, upto);
    (
        active
            .iter()
            .map(|&k| schur_in(&candidates[k], &comp))
            .collect(),
        eq.rhs.clone(),
    )
}

fn max_index(p: &Partition) -> usize {
    (p.largest() as usize + p.length()).saturating_sub(1)
}

fn flatten_into(
    system: &mut LinearSystem,
    unknowns: usize,
    active: &[usize],
    lhs: &[Polynomial],
    rhs: &Polynomial,
) -> Result<(), SolverError> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<(Vec<BigInt>, BigInt)> = Vec::new();
    let mut row_of = |m: &Monomial, rows: &mut Vec<(Vec<BigInt>, BigInt)>| -> usize {
        *index.entry(m.clone()).or_insert_with(|| {
            rows.push((alloc::vec![BigInt::zero(); unknowns], BigInt::zero()));
            rows.len() - 1
        })
    };
    for (poly, &k) in lhs.iter().zip(active) {
        for (m, c) in poly.terms() {
            let i = row_of(m, &mut rows);
            rows[i].0[k] = c.clone();
        }
    }
    for (m, c) in rhs.terms() {
        let i = row_of(m, &mut rows);
        rows[i].1 = c.clone();
    }
    for (row, b) in rows {
        system.push_row(row, b)?;
    }
    Ok(())
}

fn check_budget(options: &SolveOptions, clock: &dyn Clock) -> Result<(), SolverError> {
    if let Some(budget) = options.budget {
        let elapsed = clock.elapsed();
        if elapsed > budget {
            return Err(SolverError::Timeout { budget, elapsed });
        }
    }
    Ok(())
}

/// Solves the restriction equations of `target` for its Schur expansion.
pub fn solve(target: &SingularityId, options: &SolveOptions) -> Result<SolveReport, SolverError> {
    solve_with_clock(target, options, &NullClock)
}

pub fn solve_with_clock(
    target: &SingularityId,
    options: &SolveOptions,
    clock: &dyn Clock,
) -> Result<SolveReport, SolverError> {
    let mut cands = candidates(target, options);
    let mut fixed = SchurExpansion::new();
    let p = target.length_bound();
    if options.column_recursion && target.r > target.family.min_r() {
        let lower = SingularityId::new(target.family, target.r - 1)?;
        let below = solve_with_clock(
            &lower,
            &SolveOptions {
                post_verify: false,
                ..options.clone()
            },
            clock,
        )?;
        fixed = below.expansion.phi(p).expect("length within bound");
        cands.retain(|q| q.length() < p);
    }
    if cands.is_empty() && fixed.is_empty() {
        return Err(SolverError::NoCandidates(*target));
    }
    let (system, equations_used) = assemble(target, &cands, &fixed, options, clock)?;
    check_budget(options, clock)?;
    let solution = if cands.is_empty() {
        None
    } else {
        Some(system.solve()?)
    };
    let rank = solution.as_ref().map_or(0, |s| s.rank);
    let mut expansion: SchurExpansion = cands
        .iter()
        .cloned()
        .zip(solution.map(|s| s.values).unwrap_or_default())
        .collect();
    expansion = expansion.add(&fixed);
    if options.post_verify {
        check_budget(options, clock)?;
        for eq in restriction_system(target)? {
            if !check_equation(&expansion, &eq) {
                return Err(SolverError::Verification(eq.source));
            }
        }
    }
    Ok(SolveReport {
        target: *target,
        expansion,
        candidates_considered: cands.len(),
        equations_used,
        rows: system.num_rows(),
        rank,
        wall_time: clock.elapsed(),
    })
}

/// Outcome of checking one equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationCheck {
    pub source: SingularityId,
    pub normalizing: bool,
    pub holds: bool,
}

/// Checks every restriction equation of `target` against `expansion`
/// through full Jacobi–Trudi determinants, never the factorized path.
pub fn verify_report(
    expansion: &SchurExpansion,
    target: &SingularityId,
) -> Result<Vec<EquationCheck>, SolverError> {
    Ok(restriction_system(target)?
        .iter()
        .map(|eq| EquationCheck {
            source: eq.source,
            normalizing: eq.normalizing,
            holds: check_equation(expansion, eq),
        })
        .collect())
}

/// True iff `expansion` satisfies every restriction equation of `target`.
pub fn verify(expansion: &SchurExpansion, target: &SingularityId) -> Result<bool, SolverError> {
    Ok(verify_report(expansion, target)?.iter().all(|c| c.holds))
}

/// Like [`verify`], expanding both sides as polynomials. Exact but slow; a
/// cross-check for the evaluation-based test on small instances.
pub fn verify_symbolic(
    expansion: &SchurExpansion,
    target: &SingularityId,
) -> Result<bool, SolverError> {
    Ok(restriction_system(target)?
        .iter()
        .all(|eq| evaluate_expansion(expansion, &eq.substitution) == eq.rhs))
}

/// Exact test of `Σ α_I S_I(sub) = rhs` as a polynomial identity.
///
/// Each variable's degree in the difference is bounded (a letter on the
/// plus side contributes at most the largest part, one on the minus side at
/// most the length), so agreement on a grid with one more point than the
/// bound in every variable proves the identity. When both sides are
/// homogeneous of the same degree one variable is set to 1.
pub fn check_equation(expansion: &SchurExpansion, eq: &RestrictionEquation) -> bool {
    if expansion.is_empty() {
        return eq.rhs.is_zero();
    }
    let d = eq.substitution.reduced();
    let largest = expansion
        .partitions()
        .map(Partition::largest)
        .max()
        .unwrap_or(0);
    let longest = expansion.max_length() as u32;
    let heaviest = expansion
        .partitions()
        .map(Partition::weight)
        .max()
        .unwrap_or(0);

    let mut vars: Vec<VarId> = d.plus.variables();
    vars.extend(d.minus.variables());
    vars.extend(eq.rhs.variables());
    vars.sort_unstable();
    vars.dedup();
    if vars.is_empty() {
        return numeric_residual(expansion, &d, &eq.rhs, &|_| BigInt::zero()).is_zero();
    }
    let bounds: Vec<u32> = vars
        .iter()
        .map(|&v| {
            let plus = d.plus.letters().iter().filter(|l| l.involves(v)).count() as u32 * largest;
            let minus = d.minus.letters().iter().filter(|l| l.involves(v)).count() as u32 * longest;
            (plus + minus).min(heaviest).max(eq.rhs.degree_in(v))
        })
        .collect();

    let homogeneous = d
        .plus
        .letters()
        .iter()
        .chain(d.minus.letters())
        .all(|l| l.is_linear_homogeneous())
        && expansion.weight().is_some()
        && (eq.rhs.is_zero()
            || (eq.rhs.is_homogeneous() && eq.rhs.total_degree() == expansion.weight()));
    let fixed = if homogeneous {
        (0..vars.len()).max_by_key(|&k| bounds[k])
    } else {
        None
    };
    let block = symmetric_block(&d, &eq.rhs, &vars, &bounds, fixed);

    let grid = |k: usize| -> Vec<BigInt> {
        (0..=bounds[k] as i64)
            .map(|j| BigInt::from(if j % 2 == 1 { (j + 1) / 2 } else { -(j / 2) }))
            .collect()
    };
    let axes: Vec<Vec<BigInt>> = (0..vars.len())
        .map(|k| {
            if Some(k) == fixed {
                alloc::vec![BigInt::one()]
            } else {
                grid(k)
            }
        })
        .collect();
    let mut counter = alloc::vec![0usize; vars.len()];
    loop {
        let point = |v: VarId| -> BigInt {
            let k = vars.binary_search(&v).expect("variable outside the grid");
            axes[k][counter[k]].clone()
        };
        let sorted = block.windows(2).all(|w| counter[w[0]] <= counter[w[1]]);
        if sorted && !numeric_residual(expansion, &d, &eq.rhs, &point).is_zero() {
            return false;
        }
        let mut k = 0;
        loop {
            if k == vars.len() {
                return true;
            }
            counter[k] += 1;
            if counter[k] < axes[k].len() {
                break;
            }
            counter[k] = 0;
            k += 1;
        }
    }
}

/// Grid positions of the `b` variables when the equation is symmetric in
/// them (every adjacent transposition fixes both alphabets and the rhs) and
/// they share one axis. Points whose `b` coordinates are out of order can
/// then be skipped. Empty when there is nothing to exploit.
fn symmetric_block(
    d: &AlphabetDiff,
    rhs: &Polynomial,
    vars: &[VarId],
    bounds: &[u32],
    fixed: Option<usize>,
) -> Vec<usize> {
    let block: Vec<usize> = (0..vars.len())
        .filter(|&k| vars[k].b_index().is_some() && Some(k) != fixed)
        .collect();
    if block.len() < 2
        || block.iter().any(|&k| bounds[k] != bounds[block[0]])
        || vars.contains(&VarId::T)
    {
        return Vec::new();
    }
    let swap_alphabet = |a: &Alphabet, x: VarId, y: VarId| {
        let sw = |v: VarId| {
            if v == x {
                y
            } else if v == y {
                x
            } else {
                v
            }
        };
        Alphabet::new(
            a.letters()
                .iter()
                .map(|l| {
                    Letter::new(
                        l.terms().iter().map(|&(v, c)| (sw(v), c)),
                        l.constant_term(),
                    )
                })
                .collect(),
        )
    };
    let symmetric = block.windows(2).all(|w| {
        let (x, y) = (vars[w[0]], vars[w[1]]);
        let t = Polynomial::var(VarId::T);
        let swapped = rhs
            .substitute(x, &t)
            .substitute(y, &Polynomial::var(x))
            .substitute(VarId::T, &Polynomial::var(y));
        swap_alphabet(&d.plus, x, y) == d.plus
            && swap_alphabet(&d.minus, x, y) == d.minus
            && swapped == *rhs
    });
    if symmetric {
        block
    } else {
        Vec::new()
    }
}

fn numeric_residual(
    expansion: &SchurExpansion,
    d: &AlphabetDiff,
    rhs: &Polynomial,
    point: &dyn Fn(VarId) -> BigInt,
) -> BigInt {
    let plus: Vec<BigInt> = d.plus.letters().iter().map(|l| l.eval(point)).collect();
    let minus: Vec<BigInt> = d.minus.letters().iter().map(|l| l.eval(point)).collect();
    let upto = expansion.partitions().map(max_index).max().unwrap_or(0);
    let comp = complete_in(&plus, &minus, upto);
    let mut total = -rhs.eval(point);
    for (p, c) in expansion.iter() {
        let s: BigInt = schur_in(p, &comp);
        total += s * c;
    }
    total
}

/// `S_I` at a substitution through the full determinant; exposed for
/// cross-checks against the factorized assembly.
pub fn schur_at(partition: &Partition, eq: &RestrictionEquation) -> Polynomial {
    schur(partition, &eq.substitution)
}
