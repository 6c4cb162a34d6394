use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("underdetermined system: rank {rank} < {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("inconsistent system: no exact solution")]
    Inconsistent,
    #[error("rational but non-integral solution for unknown {0}")]
    NonIntegral(Partition),
    #[error("row {row} has {len} entries, expected {unknowns}")]
    Shape {
        row: usize,
        len: usize,
        unknowns: usize,
    },
}

/// An integer linear system `matrix · α = rhs` whose unknowns are labelled
/// by partitions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearSystem {
    matrix: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    unknowns: Vec<Partition>,
}

/// An exact solution together with the rank certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<BigInt>,
    pub rank: usize,
}

impl LinearSystem {
    pub fn new(unknowns: Vec<Partition>) -> Self {
        LinearSystem {
            matrix: Vec::new(),
            rhs: Vec::new(),
            unknowns,
        }
    }

    pub fn from_rows(
        unknowns: Vec<Partition>,
        rows: Vec<(Vec<BigInt>, BigInt)>,
    ) -> Result<Self, SolveError> {
        let mut sys = LinearSystem::new(unknowns);
        for (row, rhs) in rows {
            sys.push_row(row, rhs)?;
        }
        Ok(sys)
    }

    pub fn push_row(&mut self, row: Vec<BigInt>, rhs: BigInt) -> Result<(), SolveError> {
        if row.len() != self.unknowns.len() {
            return Err(SolveError::Shape {
                row: self.matrix.len(),
                len: row.len(),
                unknowns: self.unknowns.len(),
            });
        }
        self.matrix.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn unknowns(&self) -> &[Partition] {
        &self.unknowns
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[BigInt], &BigInt)> + '_ {
        self.matrix.iter().map(Vec::as_slice).zip(self.rhs.iter())
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.len()
    }

    /// Sorts rows canonically and removes duplicates and `0 = 0` rows.
    pub fn dedup_rows(&mut self) {
        let mut rows: Vec<(Vec<BigInt>, BigInt)> = core::mem::take(&mut self.matrix)
            .into_iter()
            .zip(core::mem::take(&mut self.rhs))
            .collect();
        rows.retain(|(row, rhs)| !(rhs.is_zero() && row.iter().all(Zero::is_zero)));
        rows.sort();
        rows.dedup();
        let (matrix, rhs) = rows.into_iter().unzip();
        self.matrix = matrix;
        self.rhs = rhs;
    }

    /// True when `values` satisfies every row exactly.
    pub fn is_satisfied_by(&self, values: &[BigInt]) -> bool {
        values.len() == self.unknowns.len()
            && self.rows().all(|(row, rhs)| dot(row, values) == *rhs)
    }

    /// Solves the system exactly.
    ///
    /// Independent pivot rows are first located modulo a 61-bit prime; the
    /// selected square subsystem is then solved by fraction-free elimination
    /// over the integers (every division is asserted exact), and the result
    /// is checked against every original row. If the modular rank is
    /// deficient the rank is recomputed exactly before reporting
    /// [`SolveError::Underdetermined`].
    pub fn solve(&self) -> Result<Solution, SolveError> {
        let n = self.unknowns.len();
        if n == 0 {
            return if self.rhs.iter().all(Zero::is_zero) {
                Ok(Solution {
                    values: Vec::new(),
                    rank: 0,
                })
            } else {
                Err(SolveError::Inconsistent)
            };
        }
        let mut pivots = modular_pivot_rows(&self.matrix, n);
        if pivots.len() < n {
            let (rank, rows) = exact_rank(&self.matrix, n);
            if rank < n {
                return Err(SolveError::Underdetermined { rank, unknowns: n });
            }
            pivots = rows;
        }
        let square: Vec<Vec<BigInt>> = pivots
            .iter()
            .map(|&i| {
                let mut row = self.matrix[i].clone();
                row.push(self.rhs[i].clone());
                row
            })
            .collect();
        let (det, numerators) = cramer_numerators(square);
        for (row, rhs) in self.rows() {
            if dot(row, &numerators) != rhs * &det {
                return Err(SolveError::Inconsistent);
            }
        }
        let mut values = Vec::with_capacity(n);
        for (k, num) in numerators.into_iter().enumerate() {
            let (q, r) = num.div_rem(&det);
            if !r.is_zero() {
                return Err(SolveError::NonIntegral(self.unknowns[k].clone()));
            }
            values.push(q);
        }
        Ok(Solution { values, rank: n })
    }

    /// Exact rank of the coefficient matrix.
    pub fn rank(&self) -> usize {
        exact_rank(&self.matrix, self.unknowns.len()).0
    }

    /// Solves and labels the values by their partitions.
    pub fn solve_map(&self) -> Result<BTreeMap<Partition, BigInt>, SolveError> {
        let sol = self.solve()?;
        Ok(self.unknowns.iter().cloned().zip(sol.values).collect())
    }
}

fn dot(row: &[BigInt], values: &[BigInt]) -> BigInt {
    row.iter()
        .zip(values)
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, v)| a * v)
        .sum()
}

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(
        r.is_zero(),
        "inexact division during fraction-free elimination"
    );
    q
}

const PRIME: u64 = (1 << 61) - 1;

fn reduce(a: &BigInt) -> u64 {
    let (sign, _) = a.to_u64_digits();
    let m = a.abs() % BigInt::from(PRIME);
    let v = m.iter_u64_digits().next().unwrap_or(0);
    if sign == Sign::Minus && v != 0 {
        PRIME - v
    } else {
        v
    }
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

/// Indices of rows that are linearly independent modulo the prime, chosen
/// greedily in row order, stopping once `n` are found. Rows independent
/// modulo a prime are independent over the rationals.
fn modular_pivot_rows(matrix: &[Vec<BigInt>], n: usize) -> Vec<usize> {
    // basis[c] = normalized reduced row with leading entry 1 in column c.
    let mut basis: Vec<Option<Vec<u64>>> = alloc::vec![None; n];
    let mut chosen = Vec::new();
    for (idx, row) in matrix.iter().enumerate() {
        let mut v: Vec<u64> = row.iter().map(reduce).collect();
        let mut lead = None;
        for c in 0..n {
            if v[c] == 0 {
                continue;
            }
            match &basis[c] {
                Some(b) => {
                    let f = v[c];
                    for k in c..n {
                        v[k] = (v[k] + PRIME - mul_mod(f, b[k])) % PRIME;
                    }
                }
                None => {
                    lead = Some(c);
                    break;
                }
            }
        }
        if let Some(c) = lead {
            let inv = pow_mod(v[c], PRIME - 2);
            for x in v.iter_mut().skip(c) {
                *x = mul_mod(*x, inv);
            }
            basis[c] = Some(v);
            chosen.push(idx);
            if chosen.len() == n {
                break;
            }
        }
    }
    chosen
}

/// Exact rank of the coefficient matrix by fraction-free row echelon form,
/// with the original indices of a maximal independent set of rows.
fn exact_rank(matrix: &[Vec<BigInt>], n: usize) -> (usize, Vec<usize>) {
    let mut rows: Vec<(usize, Vec<BigInt>)> = matrix.iter().cloned().enumerate().collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i].1[col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank].1;
        let pivot = pivot_row[col].clone();
        for (_, row) in tail.iter_mut() {
            let factor = row[col].clone();
            for k in col..n {
                let v = &row[k] * &pivot - &factor * &pivot_row[k];
                row[k] = exact_div(&v, &prev);
            }
        }
        prev = pivot;
        rank += 1;
    }
    let mut chosen: Vec<usize> = rows[..rank].iter().map(|(i, _)| *i).collect();
    chosen.sort_unstable();
    (rank, chosen)
}

/// One-step Bareiss elimination on a nonsingular `n × (n+1)` augmented
/// matrix. Returns `(d, N)` with `d ≠ 0` and `N_i / d` the solution.
fn cramer_numerators(mut a: Vec<Vec<BigInt>>) -> (BigInt, Vec<BigInt>) {
    let n = a.len();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .expect("selected subsystem is singular");
        a.swap(k, p);
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..=n {
                let v = &row[j] * &pivot_row[k] - &factor * &pivot_row[j];
                row[j] = exact_div(&v, &prev);
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    let mut num = alloc::vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &det * &a[i][n];
        for j in i + 1..n {
            acc -= &a[i][j] * &num[j];
        }
        num[i] = exact_div(&acc, &a[i][i]);
    }
    (det, num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    fn system(unknowns: usize, rows: &[(&[i64], i64)]) -> LinearSystem {
        let labels = (1..=unknowns as u32).map(|k| p(&[k])).collect();
        LinearSystem::from_rows(
            labels,
            rows.iter()
                .map(|(r, b)| (ints(r), BigInt::from(*b)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_returns_rhs() {
        let sys = system(3, &[(&[1, 0, 0], 4), (&[0, 1, 0], -7), (&[0, 0, 1], 12)]);
        let sol = sys.solve().unwrap();
        assert_eq!(sol.values, ints(&[4, -7, 12]));
        assert_eq!(sol.rank, 3);
    }

    #[test]
    fn overdetermined_consistent() {
        // 2a + 3b = 13, a - b = -1, 4a + b = 11 → a = 2, b = 3.
        let sys = system(
            2,
            &[(&[2, 3], 13), (&[1, -1], -1), (&[4, 1], 11), (&[0, 0], 0)],
        );
        assert_eq!(sys.solve().unwrap().values, ints(&[2, 3]));
    }

    #[test]
    fn zero_leading_minor_needs_row_swap() {
        let sys = system(3, &[(&[0, 2, 1], 7), (&[1, 0, 0], 1), (&[0, 1, 1], 5)]);
        let sol = sys.solve().unwrap();
        assert_eq!(sol.values, ints(&[1, 2, 3]));
        assert!(sys.is_satisfied_by(&sol.values));
    }

    #[test]
    fn failure_modes() {
        let deficient = system(3, &[(&[1, 2, 3], 1), (&[2, 4, 6], 2)]);
        assert_eq!(
            deficient.solve(),
            Err(SolveError::Underdetermined {
                rank: 1,
                unknowns: 3
            })
        );
        let inconsistent = system(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 3)]);
        assert_eq!(inconsistent.solve(), Err(SolveError::Inconsistent));
        let fractional = system(2, &[(&[2, 0], 1), (&[0, 1], 1)]);
        assert_eq!(fractional.solve(), Err(SolveError::NonIntegral(p(&[1]))));
        let mut bad = LinearSystem::new(vec![p(&[1])]);
        assert!(matches!(
            bad.push_row(ints(&[1, 2]), BigInt::one()),
            Err(SolveError::Shape { .. })
        ));
    }

    #[test]
    fn multiples_of_the_prime_fall_back_to_exact_rank() {
        // Independent over the rationals but not modulo the prime.
        let q = PRIME as i64;
        let sys = system(2, &[(&[1, 1], 3), (&[1, 1 + q], 3 + 2 * q)]);
        assert_eq!(sys.solve().unwrap().values, ints(&[1, 2]));
    }

    #[test]
    fn dedup_drops_trivial_rows() {
        let mut sys = system(2, &[(&[1, 0], 1), (&[0, 0], 0), (&[1, 0], 1), (&[0, 1], 2)]);
        sys.dedup_rows();
        assert_eq!(sys.num_rows(), 2);
    }
}
