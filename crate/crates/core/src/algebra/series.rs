use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{Polynomial, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("series quotient involves variable {0} besides the series variable")]
    ForeignVariable(VarId),
    #[error("coefficient of z^{0} is not an integer")]
    NonIntegral(usize),
}

/// The first `n` coefficients of the power series `numerator / denominator`
/// in the variable `z`.
///
/// Both inputs must be polynomials in `z` alone. The quotient is computed by
/// long division in increasing degree, which stays in the integers whenever
/// the constant term of the denominator divides every intermediate value
/// (always the case for constant term `±1`).
pub fn taylor_coeffs(
    numerator: &Polynomial,
    denominator: &Polynomial,
    z: VarId,
    n: usize,
) -> Result<Vec<BigInt>, SeriesError> {
    let num = univariate(numerator, z)?;
    let den = univariate(denominator, z)?;
    let d0 = den.first().cloned().unwrap_or_default();
    if d0.is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.get(k).cloned().unwrap_or_default();
        for (j, dj) in den.iter().enumerate().skip(1).take(k) {
            acc -= dj * &out[k - j];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(SeriesError::NonIntegral(k));
        }
        out.push(q);
    }
    Ok(out)
}

fn univariate(p: &Polynomial, z: VarId) -> Result<Vec<BigInt>, SeriesError> {
    let mut coeffs = alloc::vec![BigInt::zero(); p.degree_in(z) as usize + 1];
    for (m, c) in p.terms() {
        if let Some((v, _)) = m.iter().find(|&(v, _)| v != z) {
            return Err(SeriesError::ForeignVariable(v));
        }
        coeffs[m.exponent(z) as usize] += c;
    }
    Ok(coeffs)
}
