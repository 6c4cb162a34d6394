use alloc::vec;
use alloc::vec::Vec;

use super::Ring;

/// Determinant of a square matrix over any commutative ring, by Laplace
/// expansion along rows with memoization over column subsets.
///
/// The cost is `O(n · 2^n)` ring operations and no division is needed, which
/// suits the small Jacobi–Trudi matrices (`n` is a partition length) whose
/// entries are polynomials.
pub fn determinant<R: Ring>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    assert!(
        n < usize::BITS as usize - 1,
        "matrix too large for subset expansion"
    );
    match n {
        0 => return R::one(),
        1 => return matrix[0][0].clone(),
        2 => {
            return matrix[0][0]
                .mul_ref(&matrix[1][1])
                .sub_ref(&matrix[0][1].mul_ref(&matrix[1][0]));
        }
        _ => {}
    }
    // minors[mask] = determinant of the submatrix made of the last
    // popcount(mask) rows and the columns in `mask`.
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(R::one());
    for size in 1..=n {
        let row = n - size;
        for mask in 1usize..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut acc = R::zero();
            let mut sign_positive = true;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = &matrix[row][col];
                if !entry.is_zero() {
                    if let Some(minor) = &minors[mask & !(1 << col)] {
                        if !minor.is_zero() {
                            let term = entry.mul_ref(minor);
                            acc = if sign_positive {
                                acc.add_ref(&term)
                            } else {
                                acc.sub_ref(&term)
                            };
                        }
                    }
                }
                sign_positive = !sign_positive;
            }
            minors[mask] = Some(acc);
        }
        // Minors of the previous size are no longer needed.
        if size >= 2 {
            for (mask, slot) in minors.iter_mut().enumerate() {
                if mask.count_ones() as usize == size - 1 {
                    *slot = None;
                }
            }
        }
    }
    minors[(1 << n) - 1].take().unwrap()
}
