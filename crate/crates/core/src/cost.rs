//! Exact fixed-point vertex costs.
//!
//! Costs are decimals with at most six fractional digits, stored as integer
//! multiples of `10^-6`. All sums are exact; the total cost of a graph is capped
//! at `2^62` raw units so that no load computation can overflow.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Index, Sub, SubAssign};
use core::str::FromStr;

use crate::error::{Error, Result};

/// Raw units per unit cost.
pub const SCALE: u64 = 1_000_000;
const FRACTION_DIGITS: usize = 6;
/// Largest admissible total cost, in raw units.
pub const MAX_TOTAL: u64 = 1 << 62;

/// A nonnegative fixed-point cost (raw units of `10^-6`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cost(u64);

impl Cost {
    pub const ZERO: Cost = Cost(0);

    pub const fn from_raw(raw: u64) -> Self {
        Cost(raw)
    }

    /// Whole units, e.g. `Cost::from_units(3)` is `3.000000`.
    pub const fn from_units(units: u64) -> Self {
        Cost(units * SCALE)
    }

    pub const fn raw(self) -> u64 {
        self.0
    }

    pub fn checked_add(self, other: Cost) -> Option<Cost> {
        self.0.checked_add(other.0).map(Cost)
    }

    pub fn saturating_sub(self, other: Cost) -> Cost {
        Cost(self.0.saturating_sub(other.0))
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl AddAssign for Cost {
    fn add_assign(&mut self, rhs: Cost) {
        self.0 += rhs.0;
    }
}

impl Sub for Cost {
    type Output = Cost;
    fn sub(self, rhs: Cost) -> Cost {
        Cost(self.0 - rhs.0)
    }
}

impl SubAssign for Cost {
    fn sub_assign(&mut self, rhs: Cost) {
        self.0 -= rhs.0;
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Cost> for Cost {
    fn sum<I: Iterator<Item = &'a Cost>>(iter: I) -> Cost {
        iter.copied().sum()
    }
}

impl fmt::Display for Cost {
    /// Shortest exact decimal: `5`, `0.25`, `1.000001`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            return write!(f, "{whole}");
        }
        let digits = format!("{frac:06}");
        write!(f, "{whole}.{}", digits.trim_end_matches('0'))
    }
}

impl FromStr for Cost {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cost> {
        let s = s.trim();
        if s.starts_with('-') {
            return Err(Error::NegativeCost(s.to_string()));
        }
        let body = s.strip_prefix('+').unwrap_or(s);
        let invalid = || Error::InvalidCost(s.to_string());
        let (whole, frac) = match body.split_once('.') {
            Some((w, f)) => (w, f),
            None => (body, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(invalid());
        }
        if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        if frac.len() > FRACTION_DIGITS {
            return Err(invalid());
        }
        let whole: u64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| invalid())?
        };
        let mut frac_raw: u64 = 0;
        for (i, b) in frac.bytes().enumerate() {
            frac_raw += u64::from(b - b'0') * 10u64.pow((FRACTION_DIGITS - 1 - i) as u32);
        }
        let raw = whole
            .checked_mul(SCALE)
            .and_then(|w| w.checked_add(frac_raw))
            .filter(|&r| r <= MAX_TOTAL)
            .ok_or(Error::CostOverflow)?;
        Ok(Cost(raw))
    }
}

/// Per-vertex costs with their cached exact total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostVector {
    costs: Vec<Cost>,
    total: Cost,
}

impl CostVector {
    pub fn new(costs: Vec<Cost>) -> Result<Self> {
        let mut total: u64 = 0;
        for c in &costs {
            total = total
                .checked_add(c.raw())
                .filter(|&t| t <= MAX_TOTAL)
                .ok_or(Error::CostOverflow)?;
        }
        Ok(CostVector {
            costs,
            total: Cost(total),
        })
    }

    /// Integer costs in whole units.
    pub fn from_units<I: IntoIterator<Item = u64>>(units: I) -> Result<Self> {
        let mut costs = Vec::new();
        for u in units {
            let raw = u.checked_mul(SCALE).ok_or(Error::CostOverflow)?;
            costs.push(Cost(raw));
        }
        Self::new(costs)
    }

    pub fn uniform(n: usize, cost: Cost) -> Result<Self> {
        Self::new(alloc::vec![cost; n])
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn total(&self) -> Cost {
        self.total
    }

    pub fn as_slice(&self) -> &[Cost] {
        &self.costs
    }

    /// Copy with every vertex failing `keep` set to zero.
    pub fn masked<F: Fn(usize) -> bool>(&self, keep: F) -> CostVector {
        let costs: Vec<Cost> = self
            .costs
            .iter()
            .enumerate()
            .map(|(v, &c)| if keep(v) { c } else { Cost::ZERO })
            .collect();
        let total = costs.iter().sum();
        CostVector { costs, total }
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.costs.len() != n {
            return Err(Error::CostLength {
                expected: n,
                got: self.costs.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for CostVector {
    type Output = Cost;
    fn index(&self, v: usize) -> &Cost {
        &self.costs[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!("3".parse::<Cost>().unwrap(), Cost::from_units(3));
        assert_eq!("0.5".parse::<Cost>().unwrap().raw(), 500_000);
        assert_eq!(".25".parse::<Cost>().unwrap().raw(), 250_000);
        assert_eq!("1.000001".parse::<Cost>().unwrap().raw(), 1_000_001);
        assert_eq!("7.".parse::<Cost>().unwrap(), Cost::from_units(7));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!("-1".parse::<Cost>(), Err(Error::NegativeCost(_))));
        assert!(matches!(
            "1.0000001".parse::<Cost>(),
            Err(Error::InvalidCost(_))
        ));
        assert!(matches!("abc".parse::<Cost>(), Err(Error::InvalidCost(_))));
        assert!(matches!(".".parse::<Cost>(), Err(Error::InvalidCost(_))));
        assert!(matches!(
            "99999999999999999".parse::<Cost>(),
            Err(Error::CostOverflow)
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "5", "0.25", "1.000001", "123.5"] {
            assert_eq!(s.parse::<Cost>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn total_is_exact_and_guarded() {
        let v = CostVector::from_units([1, 19, 3]).unwrap();
        assert_eq!(v.total(), Cost::from_units(23));
        let big = CostVector::new(alloc::vec![Cost::from_raw(MAX_TOTAL), Cost::from_raw(1)]);
        assert_eq!(big, Err(Error::CostOverflow));
    }
}
