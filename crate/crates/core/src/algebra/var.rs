use core::fmt;

/// A variable of the fixed universe `x, x1, x2, b1, b2, …, y1, y2, …, z, t`.
///
/// The encoding doubles as the canonical variable order
/// `x < x1 < x2 < b1 < b2 < … < y1 < y2 < … < z < t`, so comparing two
/// `VarId`s compares their positions in that order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(u32);

const FAMILY_SHIFT: u32 = 24;
const INDEX_MASK: u32 = (1 << FAMILY_SHIFT) - 1;
const B_FAMILY: u32 = 1 << FAMILY_SHIFT;
const Y_FAMILY: u32 = 2 << FAMILY_SHIFT;
const TAIL_FAMILY: u32 = 3 << FAMILY_SHIFT;

impl VarId {
    pub const X: VarId = VarId(0);
    pub const X1: VarId = VarId(1);
    pub const X2: VarId = VarId(2);
    pub const Z: VarId = VarId(TAIL_FAMILY);
    pub const T: VarId = VarId(TAIL_FAMILY + 1);

    /// The letter `b_j` of a symbolic alphabet `B`, `j ≥ 1`.
    pub fn b(j: u32) -> VarId {
        assert!((1..=INDEX_MASK).contains(&j), "b index out of range: {j}");
        VarId(B_FAMILY + j)
    }

    /// The Chern root `y_j`, `j ≥ 1`.
    pub fn y(j: u32) -> VarId {
        assert!((1..=INDEX_MASK).contains(&j), "y index out of range: {j}");
        VarId(Y_FAMILY + j)
    }

    /// Returns `Some(j)` when this is `b_j`.
    pub fn b_index(self) -> Option<u32> {
        (self.0 & !INDEX_MASK == B_FAMILY).then_some(self.0 & INDEX_MASK)
    }

    pub fn parse(name: &str) -> Option<VarId> {
        match name {
            "x" => return Some(VarId::X),
            "x1" => return Some(VarId::X1),
            "x2" => return Some(VarId::X2),
            "z" => return Some(VarId::Z),
            "t" => return Some(VarId::T),
            _ => {}
        }
        let (family, digits) = name.split_at(1);
        if digits.is_empty()
            || !digits.bytes().all(|c| c.is_ascii_digit())
            || digits.starts_with('0')
        {
            return None;
        }
        let j: u32 = digits.parse().ok()?;
        if j > INDEX_MASK {
            return None;
        }
        match family {
            "b" => Some(VarId::b(j)),
            "y" => Some(VarId::y(j)),
            _ => None,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarId::X => f.write_str("x"),
            VarId::X1 => f.write_str("x1"),
            VarId::X2 => f.write_str("x2"),
            VarId::Z => f.write_str("z"),
            VarId::T => f.write_str("t"),
            VarId(raw) => match raw & !INDEX_MASK {
                B_FAMILY => write!(f, "b{}", raw & INDEX_MASK),
                Y_FAMILY => write!(f, "y{}", raw & INDEX_MASK),
                _ => write!(f, "v{raw}"),
            },
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
