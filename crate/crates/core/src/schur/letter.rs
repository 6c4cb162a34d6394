use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::{Polynomial, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LetterError {
    #[error("cannot parse linear form {0:?}")]
    Syntax(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// One letter of an alphabet: an integer linear form `Σ c_v v + c_0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    terms: Vec<(VarId, i64)>,
    constant: i64,
}

impl Letter {
    /// Normalizes the given terms: merges repeated variables and drops zero
    /// coefficients.
    pub fn new(terms: impl IntoIterator<Item = (VarId, i64)>, constant: i64) -> Self {
        let mut merged: Vec<(VarId, i64)> = Vec::new();
        let mut all: Vec<(VarId, i64)> = terms.into_iter().collect();
        all.sort_by_key(|&(v, _)| v);
        for (v, c) in all {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += c,
                _ => merged.push((v, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        Letter {
            terms: merged,
            constant,
        }
    }

    pub fn var(v: VarId) -> Self {
        Letter::new([(v, 1)], 0)
    }

    /// `k·v`.
    pub fn scaled_var(k: i64, v: VarId) -> Self {
        Letter::new([(v, k)], 0)
    }

    pub fn constant(c: i64) -> Self {
        Letter {
            terms: Vec::new(),
            constant: c,
        }
    }

    pub fn terms(&self) -> &[(VarId, i64)] {
        &self.terms
    }

    pub fn constant_term(&self) -> i64 {
        self.constant
    }

    /// The value when the letter has no variables.
    pub fn as_constant(&self) -> Option<i64> {
        self.terms.is_empty().then_some(self.constant)
    }

    pub fn is_linear_homogeneous(&self) -> bool {
        self.constant == 0
    }

    pub fn involves(&self, v: VarId) -> bool {
        self.terms.iter().any(|&(w, _)| w == v)
    }

    pub fn scale(&self, k: i64) -> Letter {
        Letter::new(
            self.terms.iter().map(|&(v, c)| (v, c * k)),
            self.constant * k,
        )
    }

    /// Multiplies a constant letter `k` by `other`, giving `k·other`.
    pub fn times(&self, other: &Letter) -> Option<Letter> {
        self.as_constant()
            .map(|k| other.scale(k))
            .or_else(|| other.as_constant().map(|k| self.scale(k)))
    }

    pub fn add(&self, other: &Letter) -> Letter {
        Letter::new(
            self.terms.iter().chain(other.terms.iter()).copied(),
            self.constant + other.constant,
        )
    }

    pub fn sub(&self, other: &Letter) -> Letter {
        self.add(&other.scale(-1))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::constant(self.constant);
        for &(v, c) in &self.terms {
            p = &p + &(Polynomial::var(v) * Polynomial::constant(c));
        }
        p
    }

    pub fn eval(&self, point: impl Fn(VarId) -> BigInt) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::from(self.constant), |acc, &(v, c)| {
                acc + point(v) * c
            })
    }
}

impl fmt::Display for Letter {
    /// `2x1+3x2`, `x1+x2`, `-b3`, `5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{}", self.constant);
        }
        for (k, &(v, c)) in self.terms.iter().enumerate() {
            if c < 0 {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{v}")?;
        }
        if self.constant > 0 {
            write!(f, "+{}", self.constant)?;
        } else if self.constant < 0 {
            write!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Letter {
    type Err = LetterError;

    /// Parses linear forms such as `2x1+3x2`, `x1 + x2`, `-b3`, `3*x`, `7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || LetterError::Syntax(s.into());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(syntax());
        }
        let mut terms = Vec::new();
        let mut constant = 0i64;
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut chunks = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes()[0] {
                b'-' => (-1, &chunk[1..]),
                b'+' => (1, &chunk[1..]),
                _ => (1, chunk),
            };
            if body.is_empty() {
                return Err(syntax());
            }
            let split = body
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(body.len());
            let (digits, rest) = body.split_at(split);
            let rest = rest.strip_prefix('*').unwrap_or(rest);
            let coeff: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| syntax())?
            };
            if rest.is_empty() {
                if digits.is_empty() {
                    return Err(syntax());
                }
                constant += sign * coeff;
            } else {
                let v =
                    VarId::parse(rest).ok_or_else(|| LetterError::UnknownVariable(rest.into()))?;
                terms.push((v, sign * coeff));
            }
        }
        Ok(Letter::new(terms, constant))
    }
}

/// A multiset of letters, kept sorted so that equal multisets compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Alphabet(Vec<Letter>);

impl Alphabet {
    pub fn new(mut letters: Vec<Letter>) -> Self {
        letters.sort();
        Alphabet(letters)
    }

    pub fn empty() -> Self {
        Alphabet(Vec::new())
    }

    /// `{x1, x2}`.
    pub fn x2() -> Self {
        Alphabet::new(alloc::vec![Letter::var(VarId::X1), Letter::var(VarId::X2)])
    }

    /// `{b_first, …, b_last}`; empty when `last < first`.
    pub fn b_range(first: u32, last: u32) -> Self {
        Alphabet::new((first..=last).map(|j| Letter::var(VarId::b(j))).collect())
    }

    /// `B_n = {b_1, …, b_n}`.
    pub fn b(n: u32) -> Self {
        Alphabet::b_range(1, n)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    pub fn with(&self, letter: Letter) -> Alphabet {
        let mut v = self.0.clone();
        v.push(letter);
        Alphabet::new(v)
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self
            .0
            .iter()
            .flat_map(|l| l.terms().iter().map(|&(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }
}

impl FromIterator<Letter> for Alphabet {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Alphabet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Alphabet {
    /// `{x1, x2, 2x1+3x2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The formal difference `plus − minus` of two alphabets.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphabetDiff {
    pub plus: Alphabet,
    pub minus: Alphabet,
}

impl AlphabetDiff {
    pub fn new(plus: Alphabet, minus: Alphabet) -> Self {
        AlphabetDiff { plus, minus }
    }

    pub fn plus_only(plus: Alphabet) -> Self {
        AlphabetDiff::new(plus, Alphabet::empty())
    }

    pub fn minus_only(minus: Alphabet) -> Self {
        AlphabetDiff::new(Alphabet::empty(), minus)
    }

    /// The same difference with letters common to both sides cancelled.
    /// Schur functions are unchanged by this.
    pub fn reduced(&self) -> AlphabetDiff {
        let mut plus = Vec::new();
        let mut minus: Vec<Option<&Letter>> = self.minus.letters().iter().map(Some).collect();
        for l in self.plus.letters() {
            match minus.iter_mut().find(|m| **m == Some(l)) {
                Some(slot) => *slot = None,
                None => plus.push(l.clone()),
            }
        }
        AlphabetDiff::new(
            Alphabet::new(plus),
            Alphabet::new(minus.into_iter().flatten().cloned().collect()),
        )
    }

    /// `(A − B) − C`.
    pub fn minus_alphabet(&self, c: &Alphabet) -> AlphabetDiff {
        AlphabetDiff::new(self.plus.clone(), self.minus.union(c))
    }

    /// `B − A`.
    pub fn swapped(&self) -> AlphabetDiff {
        AlphabetDiff::new(self.minus.clone(), self.plus.clone())
    }
}

impl fmt::Display for AlphabetDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

impl fmt::Debug for AlphabetDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
