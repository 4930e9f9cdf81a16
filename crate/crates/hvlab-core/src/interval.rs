//! Exact rationals in [0,1] and interval numbers over them.
//!
//! All membership degrees in this crate are exact rationals — no floats
//! anywhere — so comparisons are decidable and reports are reproducible
//! byte for byte. Interval numbers [lo, hi] carry the componentwise
//! partial order; incomparable pairs make both `leq` directions false,
//! which the predicate checkers rely on.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::HvError;

/// An exact rational constrained to [0,1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational01(Ratio<i64>);

impl Rational01 {
    /// Builds `numer/denom`, rejecting values outside [0,1] or zero denominators.
    pub fn new(numer: i64, denom: i64) -> Result<Self, HvError> {
        if denom == 0 {
            return Err(HvError::RationalSyntax(format!("{numer}/{denom}")));
        }
        let r = Ratio::new(numer, denom);
        Self::from_ratio(r)
    }

    pub fn from_ratio(r: Ratio<i64>) -> Result<Self, HvError> {
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(HvError::RationalRange(r.to_string()));
        }
        Ok(Rational01(r))
    }

    pub fn zero() -> Self {
        Rational01(Ratio::zero())
    }

    pub fn one() -> Self {
        Rational01(Ratio::one())
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Exact product; [0,1] is closed under multiplication.
    pub fn mul(self, other: Self) -> Self {
        Rational01(self.0 * other.0)
    }

    /// Exact sum, or `None` when it leaves [0,1].
    pub fn try_add(self, other: Self) -> Option<Self> {
        let sum = self.0 + other.0;
        if sum > Ratio::one() {
            None
        } else {
            Some(Rational01(sum))
        }
    }

    /// True when `self + other <= 1`, the constraint on membership pairs.
    pub fn sum_within_one(self, other: Self) -> bool {
        self.try_add(other).is_some()
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }
}

impl fmt::Display for Rational01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Ratio prints integers without the "/1" suffix, so 0 and 1 come
        // out in the shorthand the file format accepts.
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational01 {
    type Err = HvError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int =
            |t: &str| -> Result<i64, HvError> { t.parse().map_err(|_| HvError::RationalSyntax(s.to_string())) };
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let (n, d) = (parse_int(n)?, parse_int(d)?);
                if d == 0 {
                    return Err(HvError::RationalSyntax(s.to_string()));
                }
                Ratio::new(n, d)
            }
            None => Ratio::from_integer(parse_int(s)?),
        };
        Rational01::from_ratio(r)
    }
}

impl Serialize for Rational01 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational01 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: HvError| D::Error::custom(e.to_string()))
    }
}

/// An interval number [lo, hi] with 0 <= lo <= hi <= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalNumber {
    lo: Rational01,
    hi: Rational01,
}

impl IntervalNumber {
    /// Builds [lo, hi], rejecting lo > hi.
    pub fn new(lo: Rational01, hi: Rational01) -> Result<Self, HvError> {
        if lo > hi {
            return Err(HvError::IntervalOrder {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(IntervalNumber { lo, hi })
    }

    /// The degenerate interval [v, v].
    pub fn degenerate(v: Rational01) -> Self {
        IntervalNumber { lo: v, hi: v }
    }

    /// Lattice bottom [0, 0].
    pub fn bottom() -> Self {
        Self::degenerate(Rational01::zero())
    }

    /// Lattice top [1, 1].
    pub fn top() -> Self {
        Self::degenerate(Rational01::one())
    }

    pub fn lo(self) -> Rational01 {
        self.lo
    }

    pub fn hi(self) -> Rational01 {
        self.hi
    }

    /// Componentwise order: lo <= other.lo and hi <= other.hi.
    pub fn leq(self, other: Self) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }

    pub fn geq(self, other: Self) -> bool {
        other.leq(self)
    }

    /// Componentwise minimum (lattice meet).
    pub fn meet(self, other: Self) -> Self {
        IntervalNumber {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    /// Componentwise maximum (lattice join).
    pub fn join(self, other: Self) -> Self {
        IntervalNumber {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Scales both endpoints by `k`; order is preserved since k >= 0.
    pub fn scale(self, k: Rational01) -> Self {
        IntervalNumber {
            lo: k.mul(self.lo),
            hi: k.mul(self.hi),
        }
    }
}

impl fmt::Display for IntervalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

// The product order is partial: incomparable intervals compare as None.
impl PartialOrd for IntervalNumber {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        if self == other {
            Some(Equal)
        } else if self.leq(*other) {
            Some(Less)
        } else if self.geq(*other) {
            Some(Greater)
        } else {
            None
        }
    }
}

impl Serialize for IntervalNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.lo, &self.hi).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntervalNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (lo, hi) = <(Rational01, Rational01)>::deserialize(deserializer)?;
        IntervalNumber::new(lo, hi).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Componentwise infimum of a family; `None` for the empty family.
pub fn inf_set(xs: &[IntervalNumber]) -> Option<IntervalNumber> {
    xs.iter().copied().reduce(IntervalNumber::meet)
}

/// Componentwise supremum of a family; `None` for the empty family.
pub fn sup_set(xs: &[IntervalNumber]) -> Option<IntervalNumber> {
    xs.iter().copied().reduce(IntervalNumber::join)
}

/// Shorthand used by tests and fixtures: r("2/3").
pub fn r(s: &str) -> Rational01 {
    s.parse().expect("valid rational literal")
}

/// Shorthand used by tests and fixtures: iv("1/4", "1/2").
pub fn iv(lo: &str, hi: &str) -> IntervalNumber {
    IntervalNumber::new(r(lo), r(hi)).expect("valid interval literal")
}
