//! Singularities, their codimensions, Chern and Euler data, and the
//! restriction equations that characterize their Thom polynomials.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{Polynomial, VarId};
use crate::partitions::Partition;
use crate::schur::{resultant, Alphabet, AlphabetDiff, Letter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("no restriction equations are cataloged for {0}")]
    Unsupported(SingularityId),
    #[error("invalid singularity: {0}")]
    Invalid(String),
}

/// Mather's families of stable germs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Morin singularity `A_i`.
    A(u32),
    /// `I_{a,b}`, `2 ≤ a ≤ b`.
    I(u32, u32),
    /// `III_{a,b}`, `2 ≤ a ≤ b`.
    III(u32, u32),
}

impl Family {
    /// `A3`, `I23`, `III33`, or `III_{2,10}` when an index exceeds 9.
    pub fn name(&self) -> String {
        let (head, a, b) = match *self {
            Family::A(i) => return alloc::format!("A{i}"),
            Family::I(a, b) => ("I", a, b),
            Family::III(a, b) => ("III", a, b),
        };
        if a < 10 && b < 10 {
            alloc::format!("{head}{a}{b}")
        } else {
            alloc::format!("{head}_{{{a},{b}}}")
        }
    }

    /// `dim Q_η`, the dimension of the local algebra.
    pub fn local_algebra_dim(&self) -> u32 {
        match *self {
            Family::A(i) => i + 1,
            Family::I(a, b) => a + b,
            Family::III(a, b) => a + b - 1,
        }
    }

    /// Codimension of the singularity with shifted parameter `r`.
    pub fn codim(&self, r: u32) -> u32 {
        match *self {
            Family::A(i) => r * i,
            Family::I(a, b) => r * (a + b - 1) + 1,
            Family::III(a, b) => r * (a + b - 2) + 2,
        }
    }

    /// The smallest `r` for which the family is defined.
    pub fn min_r(&self) -> u32 {
        match self {
            Family::III(..) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Family {
    type Err = CatalogError;

    /// Accepts `A3`, `A_3`, `I23`, `I_{2,3}`, `III33`, `III_{3,3}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || CatalogError::Invalid(s.into());
        let t = s.trim();
        let (head, rest) = if let Some(rest) = t.strip_prefix("III") {
            ("III", rest)
        } else if let Some(rest) = t.strip_prefix('I') {
            ("I", rest)
        } else if let Some(rest) = t.strip_prefix('A') {
            ("A", rest)
        } else {
            return Err(invalid());
        };
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let rest = rest
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .unwrap_or(rest);
        let nums: Vec<u32> = if rest.contains(',') {
            rest.split(',')
                .map(|x| x.trim().parse().map_err(|_| invalid()))
                .collect::<Result<_, _>>()?
        } else if head == "A" {
            alloc::vec![rest.parse().map_err(|_| invalid())?]
        } else {
            if rest.len() != 2 || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            rest.bytes().map(|b| u32::from(b - b'0')).collect()
        };
        let family = match (head, nums.as_slice()) {
            ("A", [i]) => Family::A(*i),
            ("I", [a, b]) => Family::I(*a, *b),
            ("III", [a, b]) => Family::III(*a, *b),
            _ => return Err(invalid()),
        };
        if let Family::I(a, b) | Family::III(a, b) = family {
            if a < 2 || b < a {
                return Err(invalid());
            }
        }
        Ok(family)
    }
}

/// A singularity `η(r)`: a family together with the shifted parameter
/// `r = k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityId {
    pub family: Family,
    pub r: u32,
}

impl SingularityId {
    pub fn new(family: Family, r: u32) -> Result<Self, CatalogError> {
        if let Family::I(a, b) | Family::III(a, b) = family {
            if a < 2 || b < a {
                return Err(CatalogError::Invalid(alloc::format!(
                    "{family} needs 2 ≤ a ≤ b"
                )));
            }
        }
        if r < family.min_r() {
            return Err(CatalogError::Invalid(alloc::format!(
                "{family} needs r ≥ {}, got {r}",
                family.min_r()
            )));
        }
        Ok(SingularityId { family, r })
    }

    pub fn codim(&self) -> u32 {
        self.family.codim(self.r)
    }

    pub fn local_algebra_dim(&self) -> u32 {
        self.family.local_algebra_dim()
    }

    /// Upper bound on the length of the index partitions of the Thom
    /// polynomial: `dim Q − 1`.
    pub fn length_bound(&self) -> usize {
        self.local_algebra_dim() as usize - 1
    }

    /// `Σ^i` rank-drop type: 1 for `A_i`, 2 for `I` and `III`.
    pub fn sigma_rank(&self) -> usize {
        match self.family {
            Family::A(0) => 0,
            Family::A(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for SingularityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(r={})", self.family, self.r)
    }
}

/// One restriction equation `T_r(plus − minus) = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionEquation {
    /// The singularity whose Chern (and, for the normalizing equation,
    /// Euler) class produced the equation.
    pub source: SingularityId,
    pub substitution: AlphabetDiff,
    pub rhs: Polynomial,
    pub normalizing: bool,
}

impl RestrictionEquation {
    fn vanishing(source: SingularityId, substitution: AlphabetDiff) -> Self {
        RestrictionEquation {
            source,
            substitution,
            rhs: Polynomial::zero(),
            normalizing: false,
        }
    }
}

fn x() -> Letter {
    Letter::var(VarId::X)
}

fn kx(k: i64) -> Letter {
    Letter::scaled_var(k, VarId::X)
}

fn lin(c1: i64, c2: i64) -> Letter {
    Letter::new([(VarId::X1, c1), (VarId::X2, c2)], 0)
}

fn poly(c1: i64, c2: i64) -> Polynomial {
    lin(c1, c2).to_polynomial()
}

fn alphabet(letters: &[Letter]) -> Alphabet {
    Alphabet::new(letters.to_vec())
}

/// `D = {2x1, 2x2, x1+x2}`.
pub fn alphabet_d() -> Alphabet {
    alphabet(&[lin(2, 0), lin(0, 2), lin(1, 1)])
}

/// `E = {2x1, 2x2}`.
pub fn alphabet_e() -> Alphabet {
    alphabet(&[lin(2, 0), lin(0, 2)])
}

/// `F = {2x1, 3x2, x1+x2}`.
pub fn alphabet_f() -> Alphabet {
    alphabet(&[lin(2, 0), lin(0, 3), lin(1, 1)])
}

/// `G = {3x1, 3x2, x1+x2}`.
pub fn alphabet_g() -> Alphabet {
    alphabet(&[lin(3, 0), lin(0, 3), lin(1, 1)])
}

/// `H = {2x1, 4x2, x1+x2}`.
pub fn alphabet_h() -> Alphabet {
    alphabet(&[lin(2, 0), lin(0, 4), lin(1, 1)])
}

/// `B_n` for `n ≥ 0`, empty for negative `n`.
fn b_alphabet(n: i64) -> Alphabet {
    Alphabet::b(n.max(0) as u32)
}

/// `Π_j (c1 x1 + c2 x2 − b_j)` over `j = 1..n`.
fn b_product(n: i64, c1: i64, c2: i64) -> Polynomial {
    resultant(&alphabet(&[lin(c1, c2)]), &b_alphabet(n))
}

/// Substitution of the vanishing equation for a source singularity.
pub fn substitution(source: &SingularityId) -> Result<AlphabetDiff, CatalogError> {
    let r = i64::from(source.r);
    let x2 = Alphabet::x2();
    Ok(match source.family {
        Family::A(i) => AlphabetDiff::new(
            alphabet(&[x()]),
            b_alphabet(r - 1).with(kx(i64::from(i) + 1)),
        ),
        Family::I(2, 2) => AlphabetDiff::new(x2, alphabet_e().union(&b_alphabet(r - 1))),
        Family::I(2, 3) => AlphabetDiff::new(
            alphabet(&[kx(2), kx(3)]),
            alphabet(&[kx(5), kx(6)]).union(&b_alphabet(r - 1)),
        ),
        Family::III(2, 2) => AlphabetDiff::new(x2, alphabet_d().union(&b_alphabet(r - 2))),
        Family::III(2, 3) => AlphabetDiff::new(x2, alphabet_f().union(&b_alphabet(r - 2))),
        Family::III(2, 4) => AlphabetDiff::new(x2, alphabet_h().union(&b_alphabet(r - 2))),
        Family::III(3, 3) => AlphabetDiff::new(x2, alphabet_g().union(&b_alphabet(r - 2))),
        _ => return Err(CatalogError::Unsupported(*source)),
    })
}

/// Right-hand side of the normalizing equation of `target`, evaluated at
/// [`substitution`]`(target)`.
pub fn normalizing_rhs(target: &SingularityId) -> Result<Polynomial, CatalogError> {
    let r = i64::from(target.r);
    let x1x2 = poly(1, 0) * poly(0, 1);
    Ok(match target.family {
        Family::A(i) => {
            let plus: Alphabet = (1..=i64::from(i)).map(kx).collect();
            resultant(&plus, &b_alphabet(r - 1).with(kx(i64::from(i) + 1)))
        }
        Family::I(2, 2) => {
            &x1x2
                * &poly(1, -2)
                * poly(-2, 1)
                * resultant(&Alphabet::x2().with(lin(1, 1)), &b_alphabet(r - 1))
        }
        Family::I(2, 3) => {
            // The sign is reversed relative to the printed Euler-class form,
            // which is incompatible with the positive r = 1 expansion.
            let two_x = kx(2).to_polynomial();
            let main = resultant(
                &alphabet(&[kx(2), kx(3)]),
                &alphabet(&[kx(5), kx(6)]).union(&b_alphabet(r - 1)),
            );
            let extra = resultant(&alphabet(&[kx(4), kx(6)]), &b_alphabet(r - 1));
            -(two_x * main * extra)
        }
        Family::III(2, 2) => resultant(&Alphabet::x2(), &alphabet_d().union(&b_alphabet(r - 2))),
        Family::III(2, 3) => {
            Polynomial::constant(2)
                * poly(0, 1)
                * poly(1, -1)
                * resultant(&Alphabet::x2(), &alphabet_f().union(&b_alphabet(r - 2)))
                * b_product(r - 2, 0, 2)
        }
        Family::III(3, 3) => {
            &x1x2
                * &poly(3, -2)
                * poly(-2, 3)
                * resultant(&Alphabet::x2(), &alphabet_g().union(&b_alphabet(r - 2)))
                * b_product(r - 2, 2, 0)
                * b_product(r - 2, 0, 2)
        }
        _ => return Err(CatalogError::Unsupported(*target)),
    })
}

/// Source singularities of the vanishing equations for `target`, in order.
fn vanishing_sources(target: &SingularityId) -> Result<Vec<Family>, CatalogError> {
    let r = target.r;
    let a = |n: u32| (0..=n).map(Family::A);
    let iii = |fams: &[Family]| if r >= 2 { fams.to_vec() } else { Vec::new() };
    Ok(match target.family {
        Family::A(i) if i <= 3 => {
            let iii22 = Family::III(2, 2);
            let mut v: Vec<Family> = (0..i).map(Family::A).collect();
            if r >= 2 && iii22.codim(r) <= target.codim() {
                v.push(iii22);
            }
            v
        }
        Family::I(2, 2) => a(3).chain(iii(&[Family::III(2, 2)])).collect(),
        Family::I(2, 3) => a(3)
            .chain([Family::I(2, 2)])
            .chain(iii(&[Family::III(2, 2), Family::III(2, 3)]))
            .collect(),
        Family::III(2, 3) => a(3)
            .chain([Family::I(2, 2)])
            .chain(iii(&[Family::III(2, 2)]))
            .collect(),
        Family::III(3, 3) => a(4)
            .chain([Family::I(2, 2), Family::I(2, 3)])
            .chain(iii(&[
                Family::III(2, 2),
                Family::III(2, 3),
                Family::III(2, 4),
            ]))
            .collect(),
        _ => return Err(CatalogError::Unsupported(*target)),
    })
}

/// The restriction equations characterizing `T_r` of `target`: vanishing
/// equations first, the normalizing equation last.
pub fn restriction_system(
    target: &SingularityId,
) -> Result<Vec<RestrictionEquation>, CatalogError> {
    let mut eqs = Vec::new();
    for family in vanishing_sources(target)? {
        let source = SingularityId {
            family,
            r: target.r,
        };
        eqs.push(RestrictionEquation::vanishing(
            source,
            substitution(&source)?,
        ));
    }
    eqs.push(RestrictionEquation {
        source: *target,
        substitution: substitution(target)?,
        rhs: normalizing_rhs(target)?,
        normalizing: true,
    });
    Ok(eqs)
}

/// True when `S_I` vanishes identically at the equation's substitution by
/// the hook criterion (after cancelling letters common to both sides).
pub fn auto_vanishing(partition: &Partition, eq: &RestrictionEquation) -> bool {
    let d = eq.substitution.reduced();
    !partition.hook_contained(d.plus.len(), d.minus.len() as u32)
}

/// Total Chern class `c(ξ)` as displayed, written as numerator and
/// denominator polynomials with the Chern roots `y_j` renamed `b_j`.
pub fn chern_class(source: &SingularityId) -> Result<(Polynomial, Polynomial), CatalogError> {
    let r = i64::from(source.r);
    let one = Polynomial::one();
    let ys = |n: i64| {
        (1..=n).fold(Polynomial::one(), |acc, j| {
            acc * (&one + &Polynomial::var(VarId::b(j as u32)))
        })
    };
    let xv = Polynomial::var(VarId::X);
    let f = |c1: i64, c2: i64| &one + &poly(c1, c2);
    Ok(match source.family {
        Family::A(i) => (
            (&one + &(Polynomial::constant(i64::from(i) + 1) * &xv)) * ys(r - 1),
            &one + &xv,
        ),
        Family::I(2, 2) => (f(2, 0) * f(0, 2) * ys(r - 1), f(1, 0) * f(0, 1)),
        Family::I(2, 3) => {
            let fx = |k: i64| &one + &(Polynomial::constant(k) * &xv);
            (fx(5) * fx(6) * ys(r - 1), fx(2) * fx(3))
        }
        Family::III(2, 2) => (f(2, 0) * f(0, 2) * f(1, 1) * ys(r - 2), f(1, 0) * f(0, 1)),
        Family::III(a, b) if a <= 3 && b <= 4 => (
            f(i64::from(a), 0) * f(0, i64::from(b)) * f(1, 1) * ys(r - 2),
            f(1, 0) * f(0, 1),
        ),
        _ => return Err(CatalogError::Unsupported(*source)),
    })
}

/// Euler class `e(η)` as displayed for the singularities with explicit
/// formulas, with `y_j` renamed `b_j`.
pub fn euler_class(target: &SingularityId) -> Result<Polynomial, CatalogError> {
    let r = i64::from(target.r);
    let c = Polynomial::constant;
    let (x1, x2) = (poly(1, 0), poly(0, 1));
    let over_b = |n: i64, forms: &[(i64, i64)]| {
        let mut acc = Polynomial::one();
        for j in 1..=n {
            let b = Polynomial::var(VarId::b(j as u32));
            for &(c1, c2) in forms {
                acc = acc * (poly(c1, c2) - &b);
            }
        }
        acc
    };
    Ok(match target.family {
        Family::A(i) => {
            let i = i64::from(i);
            let xv = Polynomial::var(VarId::X);
            let mut acc = c((1..=i).product::<i64>()) * xv.pow(i as u32);
            for j in 1..=r - 1 {
                let b = Polynomial::var(VarId::b(j as u32));
                for k in 1..=i {
                    acc = acc * (&b - &(c(k) * &xv));
                }
            }
            acc
        }
        Family::I(2, 2) => {
            let mut acc = &x1 * &x2 * poly(2, -1) * poly(-1, 2);
            for j in 1..=r - 1 {
                let b = Polynomial::var(VarId::b(j as u32));
                acc = acc * (&b - &x1) * (&b - &x2) * (&b - &poly(1, 1));
            }
            acc
        }
        Family::III(2, 2) => {
            (&x1 * &x2).pow(2) * poly(1, -2) * poly(-2, 1) * over_b(r - 2, &[(1, 0), (0, 1)])
        }
        Family::III(2, 3) => {
            c(4) * x1.pow(2)
                * x2.pow(3)
                * poly(1, -1)
                * poly(1, -3)
                * poly(-2, 1)
                * over_b(r - 2, &[(1, 0), (0, 1), (0, 2)])
        }
        Family::III(3, 3) => {
            c(4) * (&x1 * &x2).pow(3)
                * poly(3, -1)
                * poly(3, -2)
                * poly(-1, 3)
                * poly(-2, 3)
                * over_b(r - 2, &[(1, 0), (2, 0), (0, 1), (0, 2)])
        }
        _ => return Err(CatalogError::Unsupported(*target)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::schur;
    use alloc::string::ToString;

    fn id(s: &str, r: u32) -> SingularityId {
        SingularityId::new(s.parse().unwrap(), r).unwrap()
    }

    #[test]
    fn codimensions_and_algebra_dimensions() {
        for r in 1..6 {
            assert_eq!(id("A3", r).codim(), 3 * r);
            assert_eq!(id("I22", r).codim(), 3 * r + 1);
            assert_eq!(id("I23", r).codim(), 4 * r + 1);
        }
        for r in 2..6 {
            assert_eq!(id("III33", r).codim(), 4 * r + 2);
            assert_eq!(id("III23", r).codim(), 3 * r + 2);
        }
        assert_eq!(id("A3", 1).length_bound(), 3);
        assert_eq!(id("III33", 2).length_bound(), 4);
        assert_eq!(id("I23", 1).local_algebra_dim(), 5);
    }

    #[test]
    fn names() {
        for s in ["A0", "A3", "I22", "I23", "III23", "III33"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert_eq!("III_{3,3}".parse::<Family>().unwrap(), Family::III(3, 3));
        assert_eq!(
            "I_{2,10}".parse::<Family>().unwrap().to_string(),
            "I_{2,10}"
        );
        assert!("III32".parse::<Family>().is_err());
        assert!("B2".parse::<Family>().is_err());
        assert!(SingularityId::new(Family::III(3, 3), 1).is_err());
    }

    #[test]
    fn system_shapes() {
        let sys = restriction_system(&id("I23", 2)).unwrap();
        let labels: Vec<String> = sys.iter().map(|e| e.source.family.name()).collect();
        assert_eq!(
            labels,
            ["A0", "A1", "A2", "A3", "I22", "III22", "III23", "I23"]
        );
        assert!(sys.last().unwrap().normalizing);
        let sys = restriction_system(&id("III33", 2)).unwrap();
        assert_eq!(sys.len(), 11);
        let sys = restriction_system(&id("A3", 1)).unwrap();
        let labels: Vec<String> = sys.iter().map(|e| e.source.family.name()).collect();
        assert_eq!(labels, ["A0", "A1", "A2", "A3"]);
        let sys = restriction_system(&id("A3", 2)).unwrap();
        assert_eq!(sys.len(), 5);
        assert!(restriction_system(&id("III24", 2)).is_err());
    }

    #[test]
    fn normalizing_rhs_is_homogeneous_of_codim_degree() {
        for (name, r) in [
            ("A1", 2),
            ("A2", 3),
            ("A3", 2),
            ("I22", 3),
            ("I23", 2),
            ("III22", 3),
            ("III23", 3),
            ("III33", 4),
        ] {
            let t = id(name, r);
            let rhs = normalizing_rhs(&t).unwrap();
            assert!(rhs.is_homogeneous(), "{name}");
            assert_eq!(rhs.total_degree(), Some(t.codim()), "{name}");
        }
    }

    #[test]
    fn a0_reduces_to_pure_minus() {
        let eq = &restriction_system(&id("III33", 3)).unwrap()[0];
        let d = eq.substitution.reduced();
        assert!(d.plus.is_empty());
        assert_eq!(d.minus, Alphabet::b(2));
    }

    #[test]
    fn a1_normalization_at_r1() {
        let t = id("A1", 1);
        assert_eq!(normalizing_rhs(&t).unwrap(), -Polynomial::var(VarId::X));
        assert_eq!(
            schur(&"1".parse().unwrap(), &substitution(&t).unwrap()),
            -Polynomial::var(VarId::X)
        );
    }

    #[test]
    fn hook_skipping() {
        let r = 3;
        let eq = RestrictionEquation::vanishing(id("A2", r), substitution(&id("A2", r)).unwrap());
        assert!(auto_vanishing(&"44".parse().unwrap(), &eq));
        assert!(!auto_vanishing(&"3".parse().unwrap(), &eq));
    }

    #[test]
    fn substitutions_match_chern_classes() {
        // c(ξ) = Π(1 + minus) / Π(1 + plus) for the substitution plus − minus.
        let prod = |a: &Alphabet| {
            a.letters().iter().fold(Polynomial::one(), |acc, l| {
                acc * (Polynomial::one() + l.to_polynomial())
            })
        };
        for (name, r) in [
            ("A0", 3),
            ("A2", 2),
            ("I22", 3),
            ("I23", 2),
            ("III22", 3),
            ("III23", 4),
            ("III24", 2),
            ("III33", 3),
        ] {
            let s = id(name, r);
            let d = substitution(&s).unwrap();
            let (num, den) = chern_class(&s).unwrap();
            assert_eq!(prod(&d.minus) * den, prod(&d.plus) * num, "{name}");
        }
    }

    #[test]
    fn normalizing_rhs_matches_euler_class_up_to_sign() {
        for (name, r) in [
            ("A1", 2),
            ("A3", 3),
            ("I22", 2),
            ("I22", 3),
            ("III22", 3),
            ("III23", 3),
            ("III33", 3),
        ] {
            let t = id(name, r);
            let rhs = normalizing_rhs(&t).unwrap();
            let e = euler_class(&t).unwrap();
            assert!(rhs == e || rhs == -e.clone(), "{name} r={r}");
        }
    }
}
