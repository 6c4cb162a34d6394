//! Partitions, containment and hook tests, candidate enumeration, and Schur
//! expansions.

mod expansion;

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

pub use expansion::{expansion_from_pairs, ExpansionError, SchurExpansion};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be weakly increasing: {0:?}")]
    NotIncreasing(Vec<u32>),
    #[error("invalid partition syntax: {0:?}")]
    Syntax(String),
    #[error("partition {partition} has length {length} > {max}")]
    TooLong {
        partition: Partition,
        length: usize,
        max: usize,
    },
}

/// An integer partition, stored as weakly increasing positive parts.
///
/// `(1,3,3,4,5)` is the partition written `S_13345` as a Schur index; the
/// largest part is the last one. Partitions are ordered graded
/// lexicographically: by weight, then by the stored part sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly increasing parts. Leading zeros are
    /// accepted as padding and dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(PartitionError::NotIncreasing(parts));
        }
        Ok(Partition(parts.into_iter().filter(|&p| p > 0).collect()))
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle with `height` rows of length `width`.
    pub fn rectangle(width: u32, height: usize) -> Self {
        if width == 0 {
            Partition::empty()
        } else {
            Partition(alloc::vec![width; height])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn largest(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// Parts padded on the left with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut out = alloc::vec![0; len.saturating_sub(self.0.len())];
        out.extend_from_slice(&self.0);
        out
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts: Vec<u32> = (1..=self.largest())
            .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
            .collect();
        parts.reverse();
        Partition(parts)
    }

    /// Diagram containment `self ⊆ other`: aligning the largest parts, each
    /// part of `self` is at most the corresponding part of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length()
            && self
                .0
                .iter()
                .rev()
                .zip(other.0.iter().rev())
                .all(|(a, b)| a <= b)
    }

    /// True iff the diagram contains the `width^height` rectangle.
    pub fn contains_rectangle(&self, width: u32, height: usize) -> bool {
        height == 0
            || width == 0
            || (self.length() >= height && self.0[self.length() - height] >= width)
    }

    /// True iff the diagram fits the `(m,n)`-hook: at most `m` parts exceed
    /// `n`.
    pub fn hook_contained(&self, m: usize, n: u32) -> bool {
        self.0.iter().filter(|&&p| p > n).count() <= m
    }

    /// Adds `k` columns of height `p`: pads to `p` parts and adds `k` to
    /// each.
    pub fn add_columns(&self, p: usize, k: u32) -> Result<Partition, PartitionError> {
        if self.length() > p {
            return Err(PartitionError::TooLong {
                partition: self.clone(),
                length: self.length(),
                max: p,
            });
        }
        if k == 0 {
            return Ok(self.clone());
        }
        Ok(Partition(
            self.padded(p).into_iter().map(|x| x + k).collect(),
        ))
    }

    /// Index notation: digits concatenated (`37`, `1135`) when every part is
    /// a single digit, comma separated otherwise (`8,14`), `0` when empty.
    pub fn index_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.0.is_empty() {
            s.push('0');
        } else if self.0.iter().all(|&p| p < 10) {
            for p in &self.0 {
                let _ = write!(s, "{p}");
            }
        } else {
            for (k, p) in self.0.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{p}");
            }
        }
        s
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// `S_37`, `S_{8,14}`, `S_{10}`, `S_0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self.index_string();
        if self.0.iter().any(|&p| p >= 10) {
            write!(f, "S_{{{idx}}}")
        } else {
            write!(f, "S_{idx}")
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.index_string())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `S_37`, `S_{8,14}`, `S_{10}`, `37`, `8,14`, `{8,14}`, `(1,2,2)`
    /// and `0` (or an empty string) for the empty partition. Unbraced digit
    /// strings without commas are read one part per digit.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || PartitionError::Syntax(s.into());
        let mut body = s.trim();
        body = body.strip_prefix("S_").unwrap_or(body);
        let mut listed = false;
        if let Some(inner) = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            body = inner;
            listed = true;
        } else if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner;
            listed = true;
        }
        let body = body.trim();
        if body.is_empty() || body == "0" {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = if listed || body.contains(',') {
            body.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| syntax()))
                .collect::<Result<_, _>>()?
        } else {
            if !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax());
            }
            body.bytes().map(|b| u32::from(b - b'0')).collect()
        };
        Partition::new(parts)
    }
}

/// `i ⊆ j` in the sense of Young diagrams sharing their lowest row and
/// leftmost column.
pub fn contains(i: &Partition, j: &Partition) -> bool {
    i.is_contained_in(j)
}

/// All partitions of `weight` containing the `rect_width^rect_height`
/// rectangle and having at most `max_length` parts, in graded-lex order.
///
/// When `second_row_cap` is given, the second entry of the parts padded with
/// zeros to `max_length` entries (the second row from the top of the
/// diagram, drawn with its largest row at the bottom) must not exceed it.
pub fn enumerate_candidates(
    weight: u32,
    rect_width: u32,
    rect_height: usize,
    max_length: usize,
    second_row_cap: Option<u32>,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(
        weight,
        weight,
        max_length,
        &mut current,
        &mut |desc: &[u32]| {
            let mut parts = desc.to_vec();
            parts.reverse();
            let p = Partition(parts);
            if !p.contains_rectangle(rect_width, rect_height) {
                return;
            }
            if let Some(cap) = second_row_cap {
                if max_length >= 2 && p.padded(max_length)[1] > cap {
                    return;
                }
            }
            out.push(p);
        },
    );
    out.sort();
    out
}

/// All partitions of `weight` with at most `max_length` parts.
pub fn partitions_of(weight: u32, max_length: usize) -> Vec<Partition> {
    enumerate_candidates(weight, 0, 0, max_length, None)
}

/// All partitions fitting in the `width × height` box (at most `height`
/// parts, each at most `width`), in graded-lex order.
pub fn partitions_in_box(width: u32, height: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=width * height as u32 {
        out.extend(
            partitions_of(w, height)
                .into_iter()
                .filter(|p| p.largest() <= width),
        );
    }
    out
}

/// Calls `f` with every partition of `remaining` into at most `slots` parts
/// each `≤ bound`, given as a weakly decreasing slice appended to `current`.
fn partitions_rec(
    remaining: u32,
    bound: u32,
    slots: usize,
    current: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if remaining == 0 {
        f(current);
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=bound.min(remaining)).rev() {
        // The remaining slots must be able to absorb what is left.
        if u64::from(part) * (slots as u64) < u64::from(remaining) {
            break;
        }
        current.push(part);
        partitions_rec(remaining - part, part, slots - 1, current, f);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(p("5").conjugate(), p("11111"));
        assert_eq!(p("2568").conjugate(), p("11233344"));
        assert_eq!(p("2568").conjugate().conjugate(), p("2568"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn containment() {
        assert!(contains(&p("22"), &p("2568")));
        assert!(contains(&p("2568"), &p("2568")));
        assert!(!contains(&p("33"), &p("2,10")));
        assert!(contains(&Partition::empty(), &p("1")));
        assert!(p("1135").contains_rectangle(3, 2));
        assert!(!p("1135").contains_rectangle(3, 3));
    }

    #[test]
    fn hooks() {
        assert!(!p("2568").hook_contained(2, 4));
        assert!(Partition::empty().hook_contained(0, 0));
        assert!(p("44").hook_contained(2, 3));
        assert!(p("3").hook_contained(1, 2));
        assert!(!p("33").hook_contained(1, 2));
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(p("1,5,11").to_string(), "S_{1,5,11}");
        assert_eq!(p("37").to_string(), "S_37");
        assert_eq!(Partition::empty().to_string(), "S_0");
        for s in ["S_37", "S_{8,14}", "S_0", "S_1135", "S_{10}", "S_{12}"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("(1,2,2)"), p("122"));
        assert_eq!(p("S_{10}").parts(), &[10]);
        assert!("S_10".parse::<Partition>().is_err());
        assert_eq!(p("0,2"), p("2"));
        assert!("21".parse::<Partition>().is_err());
        assert!("1x".parse::<Partition>().is_err());
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![p("55"), p("1"), p("37"), p("1135"), p("46")];
        v.sort();
        assert_eq!(v, vec![p("1"), p("1135"), p("37"), p("46"), p("55")]);
    }

    #[test]
    fn candidates() {
        assert_eq!(enumerate_candidates(4, 2, 2, 3, None), vec![p("22")]);
        assert!(enumerate_candidates(3, 2, 2, 4, None).is_empty());
        let with_cap = enumerate_candidates(10, 3, 2, 4, Some(2));
        let listed = [
            "37", "46", "55", "145", "136", "235", "244", "1135", "1234", "1144", "2233",
        ];
        assert!(with_cap.len() >= listed.len());
        for s in listed {
            assert!(with_cap.contains(&p(s)), "{s} missing");
        }
        assert!(with_cap.windows(2).all(|w| w[0] < w[1]));
        let without = enumerate_candidates(10, 3, 2, 4, None);
        assert!(with_cap.iter().all(|c| without.contains(c)));
        assert!(without.contains(&p("1333")));
        assert!(!with_cap.contains(&p("1333")));
    }

    #[test]
    fn partition_counts() {
        // p(10) = 42 and p(10, ≤ 3 parts) = 14.
        assert_eq!(partitions_of(10, 10).len(), 42);
        assert_eq!(partitions_of(10, 3).len(), 14);
        assert_eq!(partitions_of(0, 3), vec![Partition::empty()]);
        // Binomial(5, 2) partitions fit in a 3 × 2 box.
        assert_eq!(partitions_in_box(3, 2).len(), 10);
    }

    #[test]
    fn columns() {
        assert_eq!(p("22").add_columns(3, 1).unwrap(), p("133"));
        assert!(p("1111").add_columns(3, 1).is_err());
    }
}
