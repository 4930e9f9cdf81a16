//! Ready-made structures shared by unit tests, integration tests, the
//! command-line fixtures and the benchmarks.
//!
//! Everything here is small, deterministic, and validated on construction;
//! builders panic on misuse because they only ever receive literal tables.

use crate::carrier::Carrier;
use crate::fuzzy::{IVFuzzySet, Ivifs};
use crate::hyper::{ExternalOp, HvModule, HvRing, HyperOp};
use crate::interval::iv;

/// The total hyperoperation on `n` elements: every product is the whole
/// carrier.
pub fn total_op(n: usize) -> HyperOp {
    let full = crate::carrier::Subset::full(n);
    HyperOp::new(n, vec![full; n * n], "total").unwrap()
}

/// Addition on Z2 with singleton cells.
pub fn z2_add() -> HyperOp {
    HyperOp::from_singletons(2, &[0, 1, 1, 0], "z2.add").unwrap()
}

/// Multiplication on Z2 with singleton cells.
pub fn z2_mul() -> HyperOp {
    HyperOp::from_singletons(2, &[0, 0, 0, 1], "z2.mul").unwrap()
}

/// The ring Z2 viewed as a hyperstructure (all cells singletons).
pub fn z2_ring() -> HvRing {
    HvRing::new(Carrier::numbered(2).unwrap(), z2_add(), z2_mul()).unwrap()
}

/// The one-element ring; its tables are forced.
pub fn trivial_ring() -> HvRing {
    let op = || HyperOp::from_singletons(1, &[0], "trivial").unwrap();
    HvRing::new(Carrier::numbered(1).unwrap(), op(), op()).unwrap()
}

/// Assembles a module over `ring` from parts, with a numbered carrier.
/// Panics on malformed input; intended for fixtures built from literals.
pub fn module_with_action(
    ring: HvRing,
    add: HyperOp,
    action: ExternalOp,
    zero: Option<usize>,
) -> HvModule {
    let carrier = Carrier::numbered(add.size()).unwrap();
    HvModule::new(ring, carrier, add, action, zero).unwrap()
}

/// Z2 as a module over the ring Z2: the action is ordinary multiplication.
pub fn z2_module() -> HvModule {
    let action = ExternalOp::from_rows(
        2,
        2,
        vec![vec![vec![0], vec![0]], vec![vec![0], vec![1]]],
        "z2.action",
    )
    .unwrap();
    module_with_action(z2_ring(), z2_add(), action, Some(0))
}

/// Two elements with the total addition over the one-element ring; the
/// scalar acts as the identity. Total addition makes every pair of
/// elements indistinguishable, so the only submodule is the whole carrier
/// and the fundamental quotient is a single class.
pub fn m2tot() -> HvModule {
    let action =
        ExternalOp::from_rows(1, 2, vec![vec![vec![0], vec![1]]], "m2tot.action").unwrap();
    module_with_action(trivial_ring(), total_op(2), action, None)
}

/// Z2 addition over the one-element ring, scalar acting as the constant
/// zero map. This is the degenerate embedding of an ordinary group as a
/// module: its quotient is Z2 again.
pub fn z2_over_trivial() -> HvModule {
    let action =
        ExternalOp::from_rows(1, 2, vec![vec![vec![0], vec![0]]], "z2t.action").unwrap();
    module_with_action(trivial_ring(), z2_add(), action, Some(0))
}

/// The one-point module over the one-element ring.
pub fn one_point_module() -> HvModule {
    let action = ExternalOp::from_rows(1, 1, vec![vec![vec![0]]], "p1.action").unwrap();
    module_with_action(trivial_ring(), HyperOp::from_singletons(1, &[0], "p1.add").unwrap(), action, Some(0))
}

/// A four-element module over the one-element ring (identity action)
/// whose addition is genuinely multivalued. Together with
/// `strict_gap_ivifs` it separates the two readings of the existential
/// membership conditions: every nonempty cut of the pair is a submodule,
/// the one-witness reading fails at (x, a) = (1, 2), and the two-witness
/// reading passes. Four elements is minimal for this separation.
pub fn strict_gap_module() -> HvModule {
    let add = HyperOp::from_rows(
        vec![
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]],
            vec![vec![0, 1], vec![1], vec![1, 2], vec![1, 3]],
            vec![vec![0, 1, 2], vec![2], vec![2], vec![1, 2, 3]],
            vec![vec![0, 3], vec![1, 3], vec![2, 3], vec![3]],
        ],
        "gap.add",
    )
    .unwrap();
    let action = ExternalOp::from_rows(
        1,
        4,
        vec![vec![vec![0], vec![1], vec![2], vec![3]]],
        "gap.action",
    )
    .unwrap();
    module_with_action(trivial_ring(), add, action, None)
}

/// The membership/nonmembership pair that exhibits the reading gap on
/// `strict_gap_module`.
pub fn strict_gap_ivifs() -> Ivifs {
    let m = IVFuzzySet::new(vec![
        iv("2/5", "3/5"),
        iv("3/5", "7/10"),
        iv("1/2", "7/10"),
        iv("3/5", "7/10"),
    ]);
    let n = IVFuzzySet::new(vec![
        iv("1/5", "1/5"),
        iv("1/5", "1/5"),
        iv("1/10", "3/20"),
        iv("1/4", "3/10"),
    ]);
    Ivifs::new(m, n).unwrap()
}

/// A constant pair: the same membership and nonmembership value at every
/// element. Constant pairs satisfy every membership condition on any
/// module, which makes them a convenient smoke fixture.
pub fn constant_ivifs(n: usize, m: &str, n_lo_hi: &str) -> Ivifs {
    let parse = |s: &str| {
        let (lo, hi) = s.split_once(';').unwrap();
        iv(lo, hi)
    };
    Ivifs::new(
        IVFuzzySet::constant(n, parse(m)),
        IVFuzzySet::constant(n, parse(n_lo_hi)),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::validate_ivifs;
    use crate::hyper::{check_hv_module, check_hv_ring};

    #[test]
    fn fixtures_are_valid() {
        assert!(check_hv_ring(&z2_ring()).passed());
        assert!(check_hv_ring(&trivial_ring()).passed());
        for m in [
            z2_module(),
            m2tot(),
            z2_over_trivial(),
            one_point_module(),
            strict_gap_module(),
        ] {
            assert!(check_hv_module(&m).passed());
        }
    }

    #[test]
    fn strict_gap_pair_is_admissible() {
        let m = strict_gap_module();
        let a = strict_gap_ivifs();
        assert!(validate_ivifs(&a, m.carrier()).unwrap().passed());
    }

    #[test]
    fn constant_pair_parses() {
        let a = constant_ivifs(3, "1/2;3/4", "0;1/5");
        assert_eq!(a.len(), 3);
        assert_eq!(a.m(1), iv("1/2", "3/4"));
        assert_eq!(a.n(2), iv("0", "1/5"));
    }
}
