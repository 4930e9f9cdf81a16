//! Finite carriers and bitset subsets.
//!
//! Every structure in this crate lives on a small labelled carrier; subsets
//! are single-word bitsets indexed by carrier order, so the exhaustive
//! axiom scans reduce to word operations. Carrier size is capped (default
//! 16, `HVLAB_MAX_CARRIER` overrides, hard ceiling 64).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{HvError, Result};

/// Absolute limit imposed by the u64 bitset representation.
pub const HARD_CEILING: usize = 64;
const DEFAULT_CAP: usize = 16;

/// Configured carrier cap: `HVLAB_MAX_CARRIER` clamped to [1, 64].
pub fn max_carrier() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("HVLAB_MAX_CARRIER")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .map(|v| v.clamp(1, HARD_CEILING))
            .unwrap_or(DEFAULT_CAP)
    })
}

/// An ordered, labelled finite set of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carrier {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl Carrier {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(HvError::EmptyCarrier);
        }
        let cap = max_carrier();
        if labels.len() > cap {
            return Err(HvError::CarrierTooLarge(labels.len(), cap));
        }
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(HvError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier { labels, index })
    }

    /// Carrier with labels "0", "1", ..., n-1.
    pub fn numbered(n: usize) -> Result<Self> {
        Carrier::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| HvError::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size()
    }

    /// Renders a subset as "{a, b}" using carrier labels.
    pub fn render(&self, s: Subset) -> String {
        let names: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// A subset of a carrier, as a bitset. Element indices must stay below the
/// owning carrier's size; the carrier cap keeps them below 64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < HARD_CEILING);
        Subset(1 << i)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= HARD_CEILING);
        if n == HARD_CEILING {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < HARD_CEILING && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < HARD_CEILING);
        self.0 |= 1 << i;
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Self) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Lowest element, if any.
    pub fn first(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iteration over member indices.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// All 2^n - 1 nonempty subsets of an n-element carrier, ascending by
    /// bit pattern.
    pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(n < 32, "subset enumeration is for small carriers");
        (1u64..(1u64 << n)).map(Subset)
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_rejects_duplicates_and_empty() {
        assert!(matches!(Carrier::new(vec![]), Err(HvError::EmptyCarrier)));
        let dup = Carrier::new(vec!["a".into(), "a".into()]);
        assert!(matches!(dup, Err(HvError::DuplicateLabel(_))));
    }

    #[test]
    fn carrier_lookup_round_trips() {
        let c = Carrier::new(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        assert_eq!(c.size(), 3);
        assert_eq!(c.index_of("y").unwrap(), 1);
        assert_eq!(c.label(2), "z");
        assert!(c.index_of("w").is_err());
    }

    #[test]
    fn subset_operations() {
        let a = Subset::from_indices([0, 2]);
        let b = Subset::from_indices([1, 2]);
        assert_eq!(a.union(b), Subset::from_indices([0, 1, 2]));
        assert_eq!(a.inter(b), Subset::singleton(2));
        assert!(a.intersects(b));
        assert!(!a.is_subset_of(b));
        assert!(a.inter(b).is_subset_of(a));
        assert_eq!(a.len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(a.first(), Some(0));
        assert!(Subset::empty().is_empty());
    }

    #[test]
    fn full_subset_matches_carrier() {
        let c = Carrier::numbered(4).unwrap();
        assert_eq!(c.full(), Subset::from_indices([0, 1, 2, 3]));
        assert_eq!(c.render(Subset::from_indices([1, 3])), "{1, 3}");
        assert_eq!(c.render(Subset::empty()), "{}");
    }

    #[test]
    fn nonempty_subset_enumeration_counts() {
        assert_eq!(Subset::nonempty_subsets(3).count(), 7);
        assert_eq!(Subset::nonempty_subsets(1).count(), 1);
    }

    #[test]
    fn default_cap_is_sixteen() {
        // The env override is exercised in CLI tests where the process
        // environment can be controlled per invocation.
        if std::env::var("HVLAB_MAX_CARRIER").is_err() {
            assert_eq!(max_carrier(), 16);
            assert!(Carrier::numbered(17).is_err());
        }
    }
}
