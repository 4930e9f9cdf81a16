//! Interval-valued fuzzy sets, membership/nonmembership pairs, and cuts.
//!
//! A fuzzy set assigns an interval number to each carrier element. A pair
//! (M, N) of membership and nonmembership sets is admissible when
//! M(x).hi + N(x).hi <= 1 pointwise. Level cuts against a threshold
//! [t, s] produce the carrier subsets the structural checkers consume;
//! the attained-endpoint grid is a finite threshold set whose cuts realize
//! every cut any threshold could produce.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::carrier::{Carrier, Subset};
use crate::error::{HvError, Result};
use crate::interval::{inf_set, sup_set, IntervalNumber, Rational01};
use crate::report::{CheckReport, Witness};

/// An interval-valued fuzzy set over a carrier, by element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IVFuzzySet {
    values: Vec<IntervalNumber>,
}

impl IVFuzzySet {
    pub fn new(values: Vec<IntervalNumber>) -> Self {
        IVFuzzySet { values }
    }

    pub fn constant(n: usize, v: IntervalNumber) -> Self {
        IVFuzzySet {
            values: vec![v; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: usize) -> IntervalNumber {
        self.values[i]
    }

    pub fn values(&self) -> &[IntervalNumber] {
        &self.values
    }

    /// Infimum over a subset of elements; `None` when the subset is empty.
    pub fn inf_over(&self, s: Subset) -> Option<IntervalNumber> {
        let vs: Vec<IntervalNumber> = s.iter().map(|i| self.values[i]).collect();
        inf_set(&vs)
    }

    /// Supremum over a subset of elements; `None` when the subset is empty.
    pub fn sup_over(&self, s: Subset) -> Option<IntervalNumber> {
        let vs: Vec<IntervalNumber> = s.iter().map(|i| self.values[i]).collect();
        sup_set(&vs)
    }
}

/// A scalar fuzzy set: one rational grade in [0,1] per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarFuzzySet {
    values: Vec<Rational01>,
}

impl ScalarFuzzySet {
    pub fn new(values: Vec<Rational01>) -> Self {
        ScalarFuzzySet { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: usize) -> Rational01 {
        self.values[i]
    }

    pub fn values(&self) -> &[Rational01] {
        &self.values
    }

    /// The degenerate-interval embedding [g, g] of each grade.
    pub fn embed(&self) -> IVFuzzySet {
        IVFuzzySet::new(
            self.values
                .iter()
                .map(|&g| IntervalNumber::degenerate(g))
                .collect(),
        )
    }
}

/// A membership/nonmembership pair over one carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ivifs {
    m: IVFuzzySet,
    n: IVFuzzySet,
}

impl Ivifs {
    /// Pairs two fuzzy sets of equal length. The admissibility constraint
    /// is a checked property (`validate_ivifs`), not a construction rule,
    /// so violating instances can be represented and reported on.
    pub fn new(m: IVFuzzySet, n: IVFuzzySet) -> Result<Self> {
        if m.len() != n.len() {
            return Err(HvError::FuzzyShape {
                got: n.len(),
                want: m.len(),
            });
        }
        Ok(Ivifs { m, n })
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn membership(&self) -> &IVFuzzySet {
        &self.m
    }

    pub fn nonmembership(&self) -> &IVFuzzySet {
        &self.n
    }

    pub fn m(&self, i: usize) -> IntervalNumber {
        self.m.value(i)
    }

    pub fn n(&self, i: usize) -> IntervalNumber {
        self.n.value(i)
    }
}

/// Checks the pointwise admissibility constraint M(x).hi + N(x).hi <= 1.
/// The witness names the first violating element in carrier order.
pub fn validate_ivifs(a: &Ivifs, carrier: &Carrier) -> Result<CheckReport> {
    const CHECK: &str = "ivifs";
    if a.len() != carrier.size() {
        return Err(HvError::FuzzyShape {
            got: a.len(),
            want: carrier.size(),
        });
    }
    for i in 0..a.len() {
        let (m, n) = (a.m(i), a.n(i));
        if !m.hi().sum_within_one(n.hi()) {
            return Ok(CheckReport::fail(
                CHECK,
                Witness::new("membership_sum")
                    .with("x", carrier.label(i), Some(i))
                    .sides(m.to_string(), n.to_string())
                    .note("sup M(x) + sup N(x) exceeds 1"),
            ));
        }
    }
    Ok(CheckReport::pass(CHECK))
}

/// A threshold pair [t, s] with t <= s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Threshold {
    t: Rational01,
    s: Rational01,
}

impl Threshold {
    pub fn new(t: Rational01, s: Rational01) -> Result<Self> {
        if t > s {
            return Err(HvError::ThresholdOrder {
                t: t.to_string(),
                s: s.to_string(),
            });
        }
        Ok(Threshold { t, s })
    }

    pub fn t(self) -> Rational01 {
        self.t
    }

    pub fn s(self) -> Rational01 {
        self.s
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.t, self.s)
    }
}

/// Elements whose value dominates the threshold: lo >= t and hi >= s.
pub fn upper_cut(f: &IVFuzzySet, th: Threshold) -> Subset {
    Subset::from_indices(
        (0..f.len()).filter(|&i| f.value(i).lo() >= th.t && f.value(i).hi() >= th.s),
    )
}

/// Elements whose value is dominated by the threshold: lo <= t and hi <= s.
pub fn lower_cut(f: &IVFuzzySet, th: Threshold) -> Subset {
    Subset::from_indices(
        (0..f.len()).filter(|&i| f.value(i).lo() <= th.t && f.value(i).hi() <= th.s),
    )
}

/// The attained-endpoint threshold grid: every pair [t, s] with t <= s
/// drawn from {0, 1} plus all endpoints occurring in either component.
/// Rounding any threshold to this grid preserves both cut families, so
/// quantifying over it is as strong as quantifying over all thresholds.
pub fn attained_thresholds(a: &Ivifs) -> Vec<Threshold> {
    let mut endpoints: BTreeSet<Rational01> = BTreeSet::new();
    endpoints.insert(Rational01::zero());
    endpoints.insert(Rational01::one());
    for f in [&a.m, &a.n] {
        for v in f.values() {
            endpoints.insert(v.lo());
            endpoints.insert(v.hi());
        }
    }
    let points: Vec<Rational01> = endpoints.into_iter().collect();
    let mut out = Vec::new();
    for (i, &t) in points.iter().enumerate() {
        for &s in &points[i..] {
            out.push(Threshold { t, s });
        }
    }
    out
}

/// Pushes a pair forward along an index map: membership by supremum over
/// the preimage (default [0,0] off the range), nonmembership by infimum
/// (default [1,1]).
pub fn image_ivifs(map: &[usize], a: &Ivifs, target_size: usize) -> Result<Ivifs> {
    if map.len() != a.len() {
        return Err(HvError::FuzzyShape {
            got: a.len(),
            want: map.len(),
        });
    }
    if let Some(&bad) = map.iter().find(|&&y| y >= target_size) {
        return Err(HvError::MapOutOfRange {
            index: bad,
            size: target_size,
        });
    }
    let mut m_vals = Vec::with_capacity(target_size);
    let mut n_vals = Vec::with_capacity(target_size);
    for y in 0..target_size {
        let pre: Vec<usize> = (0..map.len()).filter(|&x| map[x] == y).collect();
        let ms: Vec<IntervalNumber> = pre.iter().map(|&x| a.m(x)).collect();
        let ns: Vec<IntervalNumber> = pre.iter().map(|&x| a.n(x)).collect();
        m_vals.push(sup_set(&ms).unwrap_or_else(IntervalNumber::bottom));
        n_vals.push(inf_set(&ns).unwrap_or_else(IntervalNumber::top));
    }
    Ivifs::new(IVFuzzySet::new(m_vals), IVFuzzySet::new(n_vals))
}

/// Pulls a pair back along an index map: composition with the map.
pub fn preimage_ivifs(map: &[usize], b: &Ivifs) -> Result<Ivifs> {
    if let Some(&bad) = map.iter().find(|&&y| y >= b.len()) {
        return Err(HvError::MapOutOfRange {
            index: bad,
            size: b.len(),
        });
    }
    let m_vals = map.iter().map(|&y| b.m(y)).collect();
    let n_vals = map.iter().map(|&y| b.n(y)).collect();
    Ivifs::new(IVFuzzySet::new(m_vals), IVFuzzySet::new(n_vals))
}
