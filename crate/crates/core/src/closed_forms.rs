//! Closed forms and recursions: Porteous, `A_1`, `A_2`, the 1-parts
//! `F^{(i)}_r`, `III_{2,3}`, Pascal staircases, `W(d, A)`, and the full
//! `I_{2,2}` and `A_3` constructions.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{taylor_coeffs, Polynomial, VarId};
use crate::catalog::alphabet_d;
use crate::partitions::{partitions_in_box, Partition, SchurExpansion};
use crate::schur::{
    complete, complete_in, evaluate_expansion, resultant, schur_in, schur_seq_in, Alphabet,
    AlphabetDiff,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosedFormError {
    #[error("{0}")]
    Parameter(String),
}

fn bad(msg: impl Into<String>) -> ClosedFormError {
    ClosedFormError::Parameter(msg.into())
}

fn part(parts: &[i64]) -> Partition {
    Partition::new(
        parts
            .iter()
            .map(|&p| u32::try_from(p).expect("nonnegative part"))
            .collect(),
    )
    .expect("weakly increasing index")
}

/// A Pascal staircase: the first column is the seed, `p_{s+1,t} = p_{s,t−1}
/// + p_{s,t}`, and rows `2k−1, 2k` vanish from column `k+1` on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalStaircase {
    rows: Vec<Vec<BigInt>>,
}

impl PascalStaircase {
    pub fn new(seed: &[BigInt], rows: usize) -> Result<Self, ClosedFormError> {
        if rows > seed.len() {
            return Err(bad(alloc::format!(
                "{rows} rows need a seed of that length, got {}",
                seed.len()
            )));
        }
        let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
        for s in 1..=rows {
            let width = s.div_ceil(2);
            let mut row = Vec::with_capacity(width);
            row.push(seed[s - 1].clone());
            for t in 2..=width {
                let prev = &out[s - 2];
                let left = prev.get(t - 2).cloned().unwrap_or_default();
                let above = prev.get(t - 1).cloned().unwrap_or_default();
                row.push(left + above);
            }
            out.push(row);
        }
        Ok(PascalStaircase { rows: out })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// `p_{s,t}`, 1-based; zero outside the stored triangle.
    pub fn get(&self, s: usize, t: usize) -> BigInt {
        if s == 0 || t == 0 {
            return BigInt::zero();
        }
        self.rows
            .get(s - 1)
            .and_then(|r| r.get(t - 1))
            .cloned()
            .unwrap_or_default()
    }

    /// The structurally nonzero prefix of row `s`.
    pub fn row(&self, s: usize) -> &[BigInt] {
        &self.rows[s - 1]
    }
}

/// `2^i − 1` for `i = 1..=n`.
pub fn mersenne_seed(n: usize) -> Vec<BigInt> {
    (1..=n).map(|i| (BigInt::one() << i) - 1).collect()
}

/// Taylor coefficients of `(5 − 6z) / ((1 − z)(1 − 2z)(1 − 3z))`.
pub fn a3_seed(n: usize) -> Vec<BigInt> {
    let z = Polynomial::var(VarId::Z);
    let one = Polynomial::one();
    let lin = |k: i64| &one - &(Polynomial::constant(k) * &z);
    let num = Polynomial::constant(5) - Polynomial::constant(6) * &z;
    taylor_coeffs(&num, &(lin(1) * lin(2) * lin(3)), VarId::Z, n)
        .expect("denominator has constant term 1")
}

/// Powers `y^0, y^1, …` of an integer, the seed of `1/(1 − zy)`.
pub fn geometric_seed(y: i64, n: usize) -> Vec<BigInt> {
    (0..n).map(|k| BigInt::from(y).pow(k as u32)).collect()
}

/// `W(d, A) = Σ p_{d+1−i, j+1} S_i(−A) S_{j, d−i−j}(X_2)`, summed over the
/// pairs with `j ≤ d − i − j`, which are exactly the staircase's nonzero
/// positions.
pub fn w_function(
    d: usize,
    a: &Alphabet,
    p: &PascalStaircase,
) -> Result<Polynomial, ClosedFormError> {
    if p.num_rows() < d + 1 {
        return Err(bad(alloc::format!("W({d}) needs {} staircase rows", d + 1)));
    }
    let minus = complete(&AlphabetDiff::minus_only(a.clone()), d);
    let x2 = complete(&AlphabetDiff::plus_only(Alphabet::x2()), d + 1);
    let mut total = Polynomial::zero();
    for (i, minus_i) in minus.iter().enumerate() {
        for j in 0..=(d - i) / 2 {
            let c = p.get(d + 1 - i, j + 1);
            if c.is_zero() {
                continue;
            }
            let s: Polynomial = schur_in(&part(&[j as i64, (d - i - j) as i64]), &x2);
            total = &total + &(minus_i * &s).scale(&c);
        }
    }
    Ok(total)
}

/// Giambelli–Thom–Porteous: `S_{(offset+i)^i}`.
pub fn thom_porteous(i: u32, offset: i64) -> Result<SchurExpansion, ClosedFormError> {
    if i == 0 || offset < 1 - i as i64 {
        return Err(bad(alloc::format!(
            "Porteous needs i >= 1 and offset >= {}",
            1 - i as i64
        )));
    }
    Ok(SchurExpansion::single(
        Partition::rectangle((offset + i as i64) as u32, i as usize),
        1,
    ))
}

fn require_r(r: u32, min: u32) -> Result<(), ClosedFormError> {
    if r < min {
        return Err(bad(alloc::format!("r must be at least {min}, got {r}")));
    }
    Ok(())
}

/// `S_r`.
pub fn thom_a1(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    require_r(r, 1)?;
    Ok(SchurExpansion::single(part(&[r as i64]), 1))
}

/// `Σ_{j ≤ r} 2^j S_{r−j, r+j}`.
pub fn thom_a2(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    require_r(r, 1)?;
    let r = r as i64;
    Ok((0..=r)
        .map(|j| (part(&[r - j, r + j]), BigInt::one() << j))
        .collect())
}

/// The 1-part of `T^{A_i}_r`: `Σ_{J ⊆ (r^{i−1})} S_J(2+3+…+i) S_{r−j_{i−1}, …, r−j_1, r+|J|}`.
pub fn f_i_r(i: u32, r: u32) -> Result<SchurExpansion, ClosedFormError> {
    if i == 0 {
        return Err(bad("i must be at least 1"));
    }
    require_r(r, 1)?;
    if i == 1 {
        return thom_a1(r);
    }
    let m = (i - 1) as usize;
    let consts: Vec<BigInt> = (2..=i as i64).map(BigInt::from).collect();
    let comp = complete_in(&consts, &[], r as usize + m);
    let mut out = SchurExpansion::new();
    for j in partitions_in_box(r, m) {
        let coeff: BigInt = schur_in(&j, &comp);
        let padded = j.padded(m);
        let mut idx: Vec<i64> = padded.iter().rev().map(|&p| (r - p) as i64).collect();
        idx.push((r + j.weight()) as i64);
        out.add_term(part(&idx), coeff);
    }
    Ok(out)
}

/// `Σ_{i=1}^{r+1} 2^i S_{r+1−i, r+1, r+i}`.
pub fn thom_iii23(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    require_r(r, 2)?;
    let r = r as i64;
    Ok((1..=r + 1)
        .map(|i| (part(&[r + 1 - i, r + 1, r + i]), BigInt::one() << i))
        .collect())
}

/// `T̄_r = Σ_{2j ≤ r+1} P_{r,j} S_{r+j, 2r+1−j}` over the `2^i − 1` staircase.
pub fn i22_bar(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    require_r(r, 1)?;
    let p = PascalStaircase::new(&mersenne_seed(r as usize), r as usize)?;
    let r = r as i64;
    Ok((1..=(r + 1) / 2)
        .map(|j| (part(&[r + j, 2 * r + 1 - j]), p.get(r as usize, j as usize)))
        .collect())
}

/// `T_r = Σ_{t < r} Φ_3^t(T̄_{r−t})`.
pub fn thom_i22(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    require_r(r, 1)?;
    let mut out = SchurExpansion::new();
    for t in 0..r {
        out = out.add(&i22_bar(r - t)?.phi_pow(3, t).expect("at most three parts"));
    }
    Ok(out)
}

/// `H̄_r = Σ_{2j ≤ r} P_{r−1,j} S_{r+j, 2r−j}` over the staircase of
/// `(5 − 6z)/((1 − z)(1 − 2z)(1 − 3z))`; defined for `r ≥ 2`.
pub fn a3_h_bar(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    require_r(r, 2)?;
    let rows = r as usize - 1;
    let p = PascalStaircase::new(&a3_seed(rows), rows)?;
    let r = r as i64;
    Ok((1..=r / 2)
        .map(|j| (part(&[r + j, 2 * r - j]), p.get(rows, j as usize)))
        .collect())
}

/// The 2-part `H_r = Σ_{t ≤ r−2} Φ_3^t(H̄_{r−t})`, zero for `r = 1`.
pub fn a3_h(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    require_r(r, 1)?;
    let mut out = SchurExpansion::new();
    for t in 0..r.saturating_sub(1) {
        out = out.add(&a3_h_bar(r - t)?.phi_pow(3, t).expect("at most three parts"));
    }
    Ok(out)
}

/// `T^{A_3}_r = F^{(3)}_r + H_r`.
pub fn thom_a3(r: u32) -> Result<SchurExpansion, ClosedFormError> {
    Ok(f_i_r(3, r)?.add(&a3_h(r)?))
}

/// `3^{r−2}(3 S_{r−2}(X_2) − 2 S_{1,r−3}(X_2))`, with `S_{1,−1} = −1`
/// from the determinant.
pub fn v_r_at_zero(r: u32) -> Result<Polynomial, ClosedFormError> {
    require_r(r, 2)?;
    let r = r as i64;
    let comp = complete(&AlphabetDiff::plus_only(Alphabet::x2()), r as usize);
    let a: Polynomial = schur_seq_in(&[r - 2], &comp);
    let b: Polynomial = schur_seq_in(&[1, r - 3], &comp);
    let inner = a.scale(&BigInt::from(3)) - b.scale(&BigInt::from(2));
    Ok(inner.scale(&BigInt::from(3).pow((r - 2) as u32)))
}

/// Outcome of the checks behind the `A_3` construction at one `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct A3ProofChecks {
    /// `R(X_2, D + B_{r−2})` divides `F_r` and `H_r` at `X_2 − D − B_{r−2}`.
    pub resultant_divides: bool,
    /// `V_r(X_2; 0)` has the closed form.
    pub v_closed_form: bool,
    /// `U_r(X_2; 0) = −V_r(X_2; 0)`.
    pub u_is_minus_v: bool,
    /// `(F_r + H_r)(X_2 − D − B_{r−2}) = 0`.
    pub vanishes: bool,
    /// `T̄_r^{I_{2,2}}(X_2) = (x_1 x_2)^{r+1} S_{r−1}(D)`.
    pub i22_bar_value: bool,
}

impl A3ProofChecks {
    pub fn all(&self) -> bool {
        self.resultant_divides
            && self.v_closed_form
            && self.u_is_minus_v
            && self.vanishes
            && self.i22_bar_value
    }
}

/// Runs the symbolic checks for `2 ≤ r ≤ 6`.
pub fn a3_proof_checks(r: u32) -> Result<A3ProofChecks, ClosedFormError> {
    if !(2..=6).contains(&r) {
        return Err(bad(alloc::format!(
            "checks are defined for 2 <= r <= 6, got {r}"
        )));
    }
    let f = f_i_r(3, r)?;
    let h = a3_h(r)?;
    let x2 = Alphabet::x2();
    let d = alphabet_d();
    let with_b = d.union(&Alphabet::b(r - 2));
    let sub = AlphabetDiff::new(x2.clone(), with_b.clone());
    let f_sub = evaluate_expansion(&f, &sub);
    let h_sub = evaluate_expansion(&h, &sub);
    let res = resultant(&x2, &with_b);
    let u = f_sub.div_exact(&res);
    let v = h_sub.div_exact(&res);

    // The quotients at b = 0, not at an empty B: R(X_2, D + B) keeps its
    // (x_1 x_2)^{r−2} factor from the b letters.
    let at_zero = |q: &Polynomial| {
        (1..=r - 2).fold(q.clone(), |acc, j| {
            acc.substitute(VarId::b(j), &Polynomial::zero())
        })
    };
    let u0 = u.as_ref().map(at_zero);
    let v0 = v.as_ref().map(at_zero);
    let expected_v = v_r_at_zero(r)?;

    let x1x2 = Polynomial::var(VarId::X1) * Polynomial::var(VarId::X2);
    let segre: Polynomial = schur_seq_in(
        &[r as i64 - 1],
        &complete(&AlphabetDiff::plus_only(d), r as usize),
    );
    let bar_value = evaluate_expansion(&i22_bar(r)?, &AlphabetDiff::plus_only(x2));

    Ok(A3ProofChecks {
        resultant_divides: u.is_some() && v.is_some(),
        v_closed_form: v0.as_ref() == Some(&expected_v),
        u_is_minus_v: matches!((&u0, &v0), (Some(u), Some(v)) if *u == -v),
        vanishes: (&f_sub + &h_sub).is_zero(),
        i22_bar_value: bar_value == x1x2.pow(r + 1) * segre,
    })
}
