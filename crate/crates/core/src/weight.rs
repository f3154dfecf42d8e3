//! Nonnegative integer edge weights with a distinguished infinity.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

/// A nonnegative edge length. `Weight::INF` marks a dart that may not be used.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(u64);

impl Weight {
    pub const ZERO: Weight = Weight(0);
    pub const INF: Weight = Weight(u64::MAX);

    /// Finite weight. Values at or above `u64::MAX` saturate to infinity.
    pub const fn new(value: u64) -> Self {
        Weight(value)
    }

    pub const fn is_finite(self) -> bool {
        self.0 != u64::MAX
    }

    pub fn finite(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }

    pub const fn raw(self) -> u64 {
        self.0
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        if !self.is_finite() || !rhs.is_finite() {
            return Weight::INF;
        }
        Weight(self.0.saturating_add(rhs.0))
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |a, b| a + b)
    }
}

impl From<u64> for Weight {
    fn from(v: u64) -> Self {
        Weight(v)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.finite() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl FromStr for Weight {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Weight::INF);
        }
        if s.starts_with('-') {
            return Err(format!("negative weight `{s}`"));
        }
        s.parse::<u64>().map(Weight).map_err(|e| format!("bad weight `{s}`: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs() {
        assert_eq!(Weight::new(3) + Weight::INF, Weight::INF);
        assert_eq!(Weight::new(3) + Weight::new(4), Weight::new(7));
        assert!(Weight::new(u64::MAX - 1) < Weight::INF);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("inf".parse::<Weight>().unwrap(), Weight::INF);
        assert_eq!("17".parse::<Weight>().unwrap().to_string(), "17");
        assert!("-1".parse::<Weight>().is_err());
    }
}
