use alloc::vec::Vec;

use super::functions::{complete, resultant, schur_in};
use super::{Alphabet, AlphabetDiff, Letter, SchurError};
use crate::algebra::{Polynomial, VarId};
use crate::partitions::{partitions_in_box, Partition, SchurExpansion};

/// `π(x1^j x2^i) = S_{i,j}(X2)`, extended linearly.
///
/// Monomials with `i > j` go through the two-row determinant: `S_{i,j}` is
/// zero when `i = j + 1` and equals `−S_{j+1,i−1}` when `i > j + 1`.
pub fn pi_operator(p: &Polynomial) -> Result<SchurExpansion, SchurError> {
    let mut out = SchurExpansion::new();
    for (m, c) in p.terms() {
        if let Some((v, _)) = m.iter().find(|&(v, _)| v != VarId::X1 && v != VarId::X2) {
            return Err(SchurError::ForeignVariable(v));
        }
        let j = m.exponent(VarId::X1);
        let i = m.exponent(VarId::X2);
        if i <= j {
            out.add_term(Partition::new(alloc::vec![i, j]).unwrap(), c.clone());
        } else if i > j + 1 {
            out.add_term(Partition::new(alloc::vec![j + 1, i - 1]).unwrap(), -c);
        }
    }
    Ok(out)
}

/// `Σ α_I S_I(A − B)`.
pub fn evaluate_expansion(e: &SchurExpansion, d: &AlphabetDiff) -> Polynomial {
    let upto = e
        .partitions()
        .map(|p| (p.largest() as usize + p.length()).saturating_sub(1))
        .max()
        .unwrap_or(0);
    let comp = complete(d, upto);
    let mut total = Polynomial::zero();
    for (p, c) in e.iter() {
        let s: Polynomial = schur_in(p, &comp);
        total = &total + &s.scale(c);
    }
    total
}

/// `F(A, x − B) = Σ_{I ⊆ (n^m)} S_I(A) S_{n−i_m, …, n−i_1, n+|I|}(x − B)`
/// with `m = |A|`, `n = |B|`.
pub fn f_function(a: &Alphabet, x: &Letter, b: &Alphabet) -> Polynomial {
    let (m, n) = (a.len(), b.len() as u32);
    let a_diff = AlphabetDiff::plus_only(a.clone());
    let a_comp = complete(&a_diff, n as usize + m);
    let xb = AlphabetDiff::new(Alphabet::new(alloc::vec![x.clone()]), b.clone());
    let xb_comp = complete(&xb, (n as usize) * (m + 1) + m + 1);
    let mut total = Polynomial::zero();
    for i in partitions_in_box(n, m) {
        let parts = i.padded(m);
        let mut idx: Vec<u32> = parts.iter().rev().map(|&p| n - p).collect();
        idx.push(n + i.weight());
        let j = Partition::new(idx).expect("complementary index is weakly increasing");
        let sa: Polynomial = schur_in(&i, &a_comp);
        if sa.is_zero() {
            continue;
        }
        let sxb: Polynomial = schur_in(&j, &xb_comp);
        total = &total + &(&sa * &sxb);
    }
    total
}

/// Checks `F(A, x − B) = R(x + Ax, B)` where `A` consists of constants and
/// `Ax` is the alphabet of letters `a·x`.
pub fn f_resultant_check(a: &Alphabet, x: &Letter, b: &Alphabet) -> Result<bool, SchurError> {
    let mut scaled = alloc::vec![x.clone()];
    for l in a.letters() {
        let k = l
            .as_constant()
            .ok_or_else(|| SchurError::NonConstantLetter(l.clone()))?;
        scaled.push(x.scale(k));
    }
    Ok(f_function(a, x, b) == resultant(&Alphabet::new(scaled), b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::schur;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn consts(v: &[i64]) -> Alphabet {
        v.iter().map(|&k| Letter::constant(k)).collect()
    }

    #[test]
    fn pi_on_monomials() {
        let x1 = Polynomial::var(VarId::X1);
        let x2 = Polynomial::var(VarId::X2);
        for j in 0..=5u32 {
            for i in 0..=j {
                let e = pi_operator(&(x1.pow(j) * x2.pow(i))).unwrap();
                assert_eq!(
                    e,
                    SchurExpansion::single(Partition::new(alloc::vec![i, j]).unwrap(), 1)
                );
            }
        }
        assert_eq!(
            pi_operator(&Polynomial::one()).unwrap(),
            SchurExpansion::single(Partition::empty(), 1)
        );
        let image = evaluate_expansion(
            &pi_operator(&x1.pow(2)).unwrap(),
            &AlphabetDiff::plus_only(Alphabet::x2()),
        );
        assert_eq!(image, x1.pow(2) + &x1 * &x2 + x2.pow(2));
        assert!(pi_operator(&x2.pow(1)).unwrap().is_empty());
        assert!(pi_operator(&Polynomial::var(VarId::b(1))).is_err());
    }

    #[test]
    fn pi_is_the_divided_difference() {
        // π(f) = (x1 f(x1,x2) − x2 f(x2,x1)) / (x1 − x2), on monomials with i > j too.
        let x1 = Polynomial::var(VarId::X1);
        let x2 = Polynomial::var(VarId::X2);
        let swap = |f: &Polynomial| {
            let t = f.substitute(VarId::X1, &Polynomial::var(VarId::T));
            t.substitute(VarId::X2, &x1).substitute(VarId::T, &x2)
        };
        let f = x2.pow(4) * &x1 + Polynomial::constant(3) * x2.pow(2) - x1.pow(3);
        let lhs = evaluate_expansion(
            &pi_operator(&f).unwrap(),
            &AlphabetDiff::plus_only(Alphabet::x2()),
        );
        let rhs = (&x1 * &f - &x2 * &swap(&f))
            .div_exact(&(&x1 - &x2))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_function_is_a_resultant() {
        let x = Letter::var(VarId::X);
        assert!(f_resultant_check(&consts(&[2]), &x, &Alphabet::b(2)).unwrap());
        assert!(f_resultant_check(&consts(&[2, 3]), &x, &Alphabet::b(3)).unwrap());
        assert!(f_resultant_check(&Alphabet::empty(), &x, &Alphabet::b(3)).unwrap());
        let single = AlphabetDiff::new(Alphabet::new(alloc::vec![x.clone()]), Alphabet::b(3));
        assert_eq!(
            f_function(&Alphabet::empty(), &x, &Alphabet::b(3)),
            schur(&p("3"), &single)
        );
        assert!(f_resultant_check(&Alphabet::x2(), &x, &Alphabet::b(1)).is_err());
    }
}
