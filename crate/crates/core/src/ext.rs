use std::fmt;

use serde::{Serialize, Serializer};

/// A natural number or infinity. Infinity compares above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(usize),
    Infinite,
}

/// Homological connectivity: `η(K)`.
pub type EtaValue = ExtNat;

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Infinite => None,
        }
    }

    /// `⌈x/2⌉`, with `⌈∞/2⌉ = ∞`.
    pub fn ceil_half(self) -> Self {
        match self {
            ExtNat::Finite(n) => ExtNat::Finite(n.div_ceil(2)),
            ExtNat::Infinite => ExtNat::Infinite,
        }
    }

    /// `⌈x/k⌉` for `k >= 1`.
    pub fn ceil_div(self, k: usize) -> Self {
        match self {
            ExtNat::Finite(n) => ExtNat::Finite(n.div_ceil(k)),
            ExtNat::Infinite => ExtNat::Infinite,
        }
    }

    /// `base - self - 1` as a signed threshold; `None` stands for `-∞`.
    pub fn threshold_below(self, base: usize) -> Option<i64> {
        self.finite().map(|g| base as i64 - g as i64 - 1)
    }
}

impl From<usize> for ExtNat {
    fn from(n: usize) -> Self {
        ExtNat::Finite(n)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => write!(f, "inf"),
        }
    }
}

/// Finite values serialize as numbers, infinity as the string `"inf"`.
impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(n) => s.serialize_u64(*n as u64),
            ExtNat::Infinite => s.serialize_str("inf"),
        }
    }
}
