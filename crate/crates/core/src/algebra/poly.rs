//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::VarId;

/// A monomial: sorted `(variable, exponent)` pairs with positive exponents.
///
/// Monomials are ordered graded-lexicographically: total degree first, then
/// the exponent of the earliest variable (in [`VarId`] order) where the two
/// monomials differ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(alloc::vec![(v, exp)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Drops every factor of `v`.
    fn without(&self, v: VarId) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial in [`VarId`]s with [`BigInt`] coefficients.
///
/// Terms are kept sorted in ascending monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::monomial(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::monomial(Monomial::var(v, 1), 1)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: alloc::vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_default() += c;
        }
        Polynomial {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn from_hash(map: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(n, _)| n.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// The constant term, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Largest monomial with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    /// True for the zero polynomial and for polynomials whose terms all
    /// share one total degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(n, _)| n.degree() == d)
            }
        }
    }

    /// Sorted list of variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.iter().map(|(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        // Multiplying by a monomial preserves the order of terms.
        Polynomial {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c * k)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates the polynomial at an integer point.
    pub fn eval(&self, point: impl Fn(VarId) -> BigInt) -> BigInt {
        let mut cache: BTreeMap<VarId, Vec<BigInt>> = BTreeMap::new();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                let powers = cache
                    .entry(v)
                    .or_insert_with(|| alloc::vec![BigInt::one(), point(v)]);
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * &powers[1];
                    powers.push(next);
                }
                term *= &powers[e as usize];
            }
            total += term;
        }
        total
    }

    /// Replaces every occurrence of `v` by `value`.
    pub fn substitute(&self, v: VarId, value: &Polynomial) -> Polynomial {
        let max = self.degree_in(v) as usize;
        if max == 0 {
            return self.clone();
        }
        let mut powers = alloc::vec![Polynomial::one()];
        for k in 1..=max {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut grouped: BTreeMap<u32, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            grouped
                .entry(m.exponent(v))
                .or_default()
                .push((m.without(v), c.clone()));
        }
        let mut out = Polynomial::zero();
        for (e, terms) in grouped {
            let rest = Polynomial::from_terms(terms);
            out = &out + &(&rest * &powers[e as usize]);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (including non-integral coefficient quotients).
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if let Some(k) = divisor.as_constant() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(&k);
                if !r.is_zero() {
                    return None;
                }
                terms.push((m.clone(), q));
            }
            return Some(Polynomial { terms });
        }
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lead_m)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            // The leading term cancels by construction; subtract the rest.
            for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.entry(key) {
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        quotient.reverse();
        Some(Polynomial { terms: quotient })
    }

    /// Content-free sign normalization is not attempted; this returns the
    /// gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    fn add_impl(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })),
        );
        Polynomial { terms: out }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if let Some(k) = self.as_constant() {
            return other.scale(&k);
        }
        if let Some(k) = other.as_constant() {
            return self.scale(&k);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * 2 + other.terms.len() * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial::from_hash(acc)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(c)
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(rhs, false)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(rhs, true)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_impl(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending monomial order, e.g. `x1^2 + x1*x2 - 3*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x1() -> Polynomial {
        Polynomial::var(VarId::X1)
    }
    fn x2() -> Polynomial {
        Polynomial::var(VarId::X2)
    }

    #[test]
    fn difference_of_squares() {
        let p = (x1() + x2()) * (x1() - x2());
        let expected = x1().pow(2) - x2().pow(2);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let p = x1().pow(3) + Polynomial::constant(-7) * x2();
        assert_eq!(&p + &Polynomial::zero(), p);
        assert!((&p - &p).is_zero());
        assert_eq!(p.clone() * Polynomial::one(), p);
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::from_pairs([(VarId::X1, 2)]);
        let b = Monomial::from_pairs([(VarId::X1, 1), (VarId::X2, 1)]);
        let c = Monomial::from_pairs([(VarId::X2, 2)]);
        let d = Monomial::from_pairs([(VarId::X1, 1)]);
        assert!(a > b && b > c && c > d);
        assert!(d > Monomial::one());
    }

    #[test]
    fn exact_division() {
        let f = (x1() - x2()).pow(3) * (x1() + Polynomial::constant(2) * x2());
        let q = f.div_exact(&(x1() - x2())).unwrap();
        assert_eq!(
            q,
            (x1() - x2()).pow(2) * (x1() + Polynomial::constant(2) * x2())
        );
        assert!(f.div_exact(&(x1() + x2())).is_none());
        assert!(Polynomial::constant(3)
            .div_exact(&Polynomial::constant(2))
            .is_none());
        assert!((x1() * Polynomial::constant(2))
            .div_exact(&(x1() * Polynomial::constant(4)))
            .is_none());
    }

    #[test]
    fn substitution_and_evaluation() {
        let p = x1().pow(2) * x2() + Polynomial::constant(3);
        let sub = p.substitute(VarId::X2, &(x1() + Polynomial::one()));
        assert_eq!(sub, x1().pow(3) + x1().pow(2) + Polynomial::constant(3));
        let value = p.eval(|v| {
            if v == VarId::X1 {
                BigInt::from(2)
            } else {
                BigInt::from(-5)
            }
        });
        assert_eq!(value, BigInt::from(-17));
    }

    #[test]
    fn truncated_series_product() {
        // (1 - 2z)(5 + 24z + 89z^2 + 300z^3) = 5 + 14z + 41z^2 + ...
        let z = Polynomial::var(VarId::Z);
        let series = [5, 24, 89, 300]
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (k, &c)| {
                acc + z.pow(k as u32) * Polynomial::constant(c)
            });
        let prod = (Polynomial::one() - Polynomial::constant(2) * z.clone()) * series;
        let coeffs: Vec<BigInt> = (0..3)
            .map(|k| prod.coefficient(&Monomial::var(VarId::Z, k)))
            .collect();
        assert_eq!(coeffs, [5, 14, 41].map(BigInt::from));
    }
}
