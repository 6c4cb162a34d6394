use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Alphabet, AlphabetDiff, SchurError};
use crate::algebra::{determinant, Polynomial, Ring, VarId};
use crate::partitions::Partition;

/// `[S_0, …, S_upto]` of `plus − minus` for letter values in any ring, from
/// `Σ S_k z^k = Π(1 − b z) / Π(1 − a z)`.
pub fn complete_in<R: Ring>(plus: &[R], minus: &[R], upto: usize) -> Vec<R> {
    let mut c: Vec<R> = (0..=upto)
        .map(|k| if k == 0 { R::one() } else { R::zero() })
        .collect();
    for b in minus {
        for k in (1..=upto).rev() {
            if !c[k - 1].is_zero() {
                c[k] = c[k].sub_ref(&b.mul_ref(&c[k - 1]));
            }
        }
    }
    for a in plus {
        for k in 1..=upto {
            if !c[k - 1].is_zero() {
                c[k] = c[k].add_ref(&a.mul_ref(&c[k - 1]));
            }
        }
    }
    c
}

/// `[S_0(A−B), …, S_upto(A−B)]` as polynomials.
pub fn complete(d: &AlphabetDiff, upto: usize) -> Vec<Polynomial> {
    let plus: Vec<Polynomial> = d.plus.letters().iter().map(|l| l.to_polynomial()).collect();
    let minus: Vec<Polynomial> = d
        .minus
        .letters()
        .iter()
        .map(|l| l.to_polynomial())
        .collect();
    complete_in(&plus, &minus, upto)
}

/// Jacobi–Trudi determinant `|S_{i_q+q−p}|` for an arbitrary integer index
/// sequence, given a long enough complete-function prefix. Negative indices
/// give zero entries.
pub fn schur_seq_in<R: Ring>(indices: &[i64], comp: &[R]) -> R {
    let columns: Vec<&[R]> = alloc::vec![comp; indices.len()];
    jacobi_trudi(indices, &columns)
}

/// `S_I` from a complete-function prefix covering index `i_s + s − 1`.
pub fn schur_in<R: Ring>(partition: &Partition, comp: &[R]) -> R {
    let indices: Vec<i64> = partition.parts().iter().map(|&p| i64::from(p)).collect();
    schur_seq_in(&indices, comp)
}

fn jacobi_trudi<R: Ring>(indices: &[i64], columns: &[&[R]]) -> R {
    let s = indices.len();
    let matrix: Vec<Vec<R>> = (0..s)
        .map(|p| {
            (0..s)
                .map(|q| {
                    let idx = indices[q] + q as i64 - p as i64;
                    if idx < 0 {
                        R::zero()
                    } else {
                        columns[q]
                            .get(idx as usize)
                            .expect("complete-function prefix too short")
                            .clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

fn max_index(indices: &[i64]) -> usize {
    indices
        .iter()
        .enumerate()
        .map(|(q, &i)| i + q as i64)
        .max()
        .unwrap_or(0)
        .max(0) as usize
}

/// `S_I(A − B)` as a polynomial.
pub fn schur(partition: &Partition, d: &AlphabetDiff) -> Polynomial {
    if partition.is_empty() {
        return Polynomial::one();
    }
    let upto = partition.largest() as usize + partition.length() - 1;
    schur_in(partition, &complete(d, upto))
}

/// `S_I(A − B)` with every letter evaluated at an integer point.
pub fn schur_numeric(
    partition: &Partition,
    d: &AlphabetDiff,
    point: impl Fn(VarId) -> BigInt,
) -> BigInt {
    if partition.is_empty() {
        return BigInt::from(1);
    }
    let plus: Vec<BigInt> = d.plus.letters().iter().map(|l| l.eval(&point)).collect();
    let minus: Vec<BigInt> = d.minus.letters().iter().map(|l| l.eval(&point)).collect();
    let upto = partition.largest() as usize + partition.length() - 1;
    schur_in(partition, &complete_in(&plus, &minus, upto))
}

/// Multi-Schur function `|S_{i_q+q−p}(A^q − B^q)|` with one alphabet
/// difference per column.
pub fn multi_schur(indices: &[i64], columns: &[AlphabetDiff]) -> Result<Polynomial, SchurError> {
    transformed_multi_schur(indices, columns, &[])
}

/// Multi-Schur function in block notation: `[(2, A−C), (1, B−D)]` stands
/// for `S_{i,j;k}(A−C; B−D)`.
pub fn multi_schur_blocks(
    indices: &[i64],
    blocks: &[(usize, AlphabetDiff)],
) -> Result<Polynomial, SchurError> {
    let columns: Vec<AlphabetDiff> = blocks
        .iter()
        .flat_map(|(count, d)| core::iter::repeat(d.clone()).take(*count))
        .collect();
    multi_schur(indices, &columns)
}

/// The determinant `|S_{i_q+q−p}(A^q − B^q − E^p)|` where row `p` (counted
/// from the top, starting at 0) additionally subtracts `row_minus[p]`.
/// Missing rows subtract nothing.
pub fn transformed_multi_schur(
    indices: &[i64],
    columns: &[AlphabetDiff],
    row_minus: &[Alphabet],
) -> Result<Polynomial, SchurError> {
    if columns.len() != indices.len() {
        return Err(SchurError::ColumnCount {
            columns: columns.len(),
            parts: indices.len(),
        });
    }
    let s = indices.len();
    let upto = max_index(indices);
    let mut cache: Vec<(AlphabetDiff, Vec<Polynomial>)> = Vec::new();
    let mut comp_for = |d: AlphabetDiff| -> usize {
        if let Some(k) = cache.iter().position(|(e, _)| *e == d) {
            return k;
        }
        let c = complete(&d, upto);
        cache.push((d, c));
        cache.len() - 1
    };
    let mut slots = alloc::vec![alloc::vec![0usize; s]; s];
    for (p, row) in slots.iter_mut().enumerate() {
        for (q, slot) in row.iter_mut().enumerate() {
            let extra = row_minus.get(p).cloned().unwrap_or_default();
            *slot = comp_for(columns[q].minus_alphabet(&extra));
        }
    }
    let matrix: Vec<Vec<Polynomial>> = (0..s)
        .map(|p| {
            (0..s)
                .map(|q| {
                    let idx = indices[q] + q as i64 - p as i64;
                    if idx < 0 {
                        Polynomial::zero()
                    } else {
                        cache[slots[p][q]].1[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&matrix))
}

/// `R(A, B) = Π_{a∈A, b∈B} (a − b)`.
pub fn resultant(a: &Alphabet, b: &Alphabet) -> Polynomial {
    let mut r = Polynomial::one();
    for x in a.letters() {
        for y in b.letters() {
            r = &r * &x.sub(y).to_polynomial();
        }
    }
    r
}

/// Splits `I` as `(J, top + n)` where `top` are the `m` largest parts
/// lowered by `n`, provided each of them is at least `n`.
pub fn split_for_factorization(
    partition: &Partition,
    m: usize,
    n: u32,
) -> Option<(Partition, Partition)> {
    let parts = partition.padded(m);
    let cut = parts.len() - m;
    let (lower, upper) = parts.split_at(cut);
    if upper.iter().any(|&p| p < n) {
        return None;
    }
    let top = Partition::new(upper.iter().map(|&p| p - n).collect()).ok()?;
    let lower = Partition::new(lower.to_vec()).ok()?;
    Some((top, lower))
}

/// `S_I(A_m − B_n) = S_top(A_m) · R(A_m, B_n) · S_J(−B_n)` for partitions
/// whose `m` largest parts are all at least `n`.
pub fn schur_factorized(partition: &Partition, d: &AlphabetDiff) -> Result<Polynomial, SchurError> {
    let (m, n) = (d.plus.len(), d.minus.len());
    let (top, lower) =
        split_for_factorization(partition, m, n as u32).ok_or_else(|| SchurError::Shape {
            partition: partition.clone(),
            m,
            n,
        })?;
    let left = schur(&top, &AlphabetDiff::plus_only(d.plus.clone()));
    let right = schur(&lower, &AlphabetDiff::minus_only(d.minus.clone()));
    Ok(left * resultant(&d.plus, &d.minus) * right)
}
