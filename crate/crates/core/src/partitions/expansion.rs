use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpansionError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("cannot parse term {0:?}")]
    Term(String),
}

/// A finite integer combination `Σ α_I S_I` of Schur functions, iterated in
/// graded-lex partition order. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn single(p: Partition, coeff: impl Into<BigInt>) -> Self {
        let mut e = SchurExpansion::new();
        e.add_term(p, coeff.into());
        e
    }

    /// Builds an expansion from terms, combining repeated partitions.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut e = SchurExpansion::new();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weight of all index partitions, if there is one.
    pub fn weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Partition::weight);
        let w = weights.next()?;
        weights.all(|v| v == w).then_some(w)
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Partition::length).max().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> SchurExpansion {
        SchurExpansion::from_terms(self.iter().map(|(p, c)| (p.clone(), c * k)))
    }

    /// The sub-expansion over partitions satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Φ_p`: adds a column of height `p` to every index partition.
    pub fn phi(&self, p: usize) -> Result<SchurExpansion, PartitionError> {
        self.phi_pow(p, 1)
    }

    /// `Φ_p^k`.
    pub fn phi_pow(&self, p: usize, k: u32) -> Result<SchurExpansion, PartitionError> {
        let mut terms = BTreeMap::new();
        for (part, c) in self.iter() {
            terms.insert(part.add_columns(p, k)?, c.clone());
        }
        Ok(SchurExpansion { terms })
    }

    /// The `h`-part: terms whose partition contains `(offset+h)^h` but not
    /// `(offset+h+1)^(h+1)`.
    pub fn h_part(&self, h: usize, offset: u32) -> SchurExpansion {
        let h32 = h as u32;
        self.filter(|p| {
            p.contains_rectangle(offset + h32, h) && !p.contains_rectangle(offset + h32 + 1, h + 1)
        })
    }
}

impl FromIterator<(Partition, BigInt)> for SchurExpansion {
    fn from_iter<T: IntoIterator<Item = (Partition, BigInt)>>(iter: T) -> Self {
        SchurExpansion::from_terms(iter)
    }
}

impl fmt::Display for SchurExpansion {
    /// `4S_37 + 16S_46 + S_{8,14}`; `0` for the empty expansion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SchurExpansion {
    type Err = ExpansionError;

    /// Parses the text rendering, e.g. `4S_37 + 16S_46 - S_{8,14}` or `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(SchurExpansion::new());
        }
        let mut out = SchurExpansion::new();
        let mut rest = s;
        let mut first = true;
        while !rest.is_empty() {
            let mut negative = false;
            rest = rest.trim_start();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                negative = true;
                rest = r.trim_start();
            } else if !first {
                return Err(ExpansionError::Term(rest.into()));
            }
            first = false;
            let end = rest.find([' ', '+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let pos = term
                .find("S_")
                .ok_or_else(|| ExpansionError::Term(term.into()))?;
            let (coeff, index) = term.split_at(pos);
            let mut c = if coeff.is_empty() {
                BigInt::one()
            } else {
                coeff
                    .parse::<BigInt>()
                    .map_err(|_| ExpansionError::Term(term.into()))?
            };
            if negative {
                c = -c;
            }
            out.add_term(index.parse()?, c);
        }
        Ok(out)
    }
}

/// Builds an expansion from `(coefficient, index)` pairs such as
/// `[(4, "37"), (16, "46")]`.
pub fn expansion_from_pairs(pairs: &[(i64, &str)]) -> Result<SchurExpansion, PartitionError> {
    let mut terms = Vec::with_capacity(pairs.len());
    for &(c, idx) in pairs {
        terms.push((idx.parse::<Partition>()?, BigInt::from(c)));
    }
    Ok(SchurExpansion::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn e(s: &str) -> SchurExpansion {
        s.parse().unwrap()
    }

    #[test]
    fn render_and_parse() {
        let x = e("4S_37 + 16S_46 + 28S_55 + S_2233");
        assert_eq!(x.to_string(), "S_2233 + 4S_37 + 16S_46 + 28S_55");
        let y = e("127S_{8,14} + 119S_{9,13} - 3S_{10,12}");
        assert_eq!(y.to_string().parse::<SchurExpansion>().unwrap(), y);
        assert_eq!(y.coeff(&"10,12".parse().unwrap()), BigInt::from(-3));
        assert_eq!(e("0"), SchurExpansion::new());
        assert!("4S_37 16S_46".parse::<SchurExpansion>().is_err());
        assert!("4T_37".parse::<SchurExpansion>().is_err());
    }

    #[test]
    fn phi_adds_a_column() {
        assert_eq!(e("S_22").phi(3).unwrap(), e("S_133"));
        assert!(SchurExpansion::new().phi(4).unwrap().is_empty());
        assert_eq!(e("2S_122 + 4S_23").phi(4).unwrap(), e("2S_1233 + 4S_1134"));
        assert!(e("S_1111").phi(3).is_err());
        assert_eq!(e("S_22").phi_pow(3, 2).unwrap(), e("S_244"));
    }

    #[test]
    fn h_parts() {
        let t = e("S_222 + 5S_123 + 6S_114 + 19S_24 + 30S_15 + 36S_6 + 5S_33");
        assert_eq!(t.h_part(2, 1), e("5S_33"));
        let total = (1..=3).fold(SchurExpansion::new(), |acc, h| acc.add(&t.h_part(h, 1)));
        assert_eq!(total.add(&t.h_part(0, 1)), t);
        assert!(e("S_7").h_part(2, 0).is_empty());
    }

    #[test]
    fn arithmetic() {
        let a = e("S_1 + 2S_2");
        let b = e("S_1 - S_3");
        assert_eq!(a.sub(&b), e("2S_2 + S_3"));
        assert_eq!(a.add(&a.scale(&BigInt::from(-1))), SchurExpansion::new());
        assert_eq!(e("2S_122 + 4S_23").weight(), Some(5));
        assert_eq!(a.weight(), None);
        assert_eq!(e("3S_34 + S_133").coefficient_sum(), BigInt::from(4));
    }
}
