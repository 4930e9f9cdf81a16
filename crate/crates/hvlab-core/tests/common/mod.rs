#![allow(dead_code)]

pub mod naive;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use hvlab_core::{Carrier, ExternalOp, HvModule, HvRing, HyperOp, Subset};

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Subset {
    let bits = rng.gen_range(1..(1u64 << n));
    Subset::from_indices((0..n).filter(|&i| bits & (1 << i) != 0))
}

/// A structurally well-formed but otherwise arbitrary module: every cell
/// is a uniform nonempty subset, so the axiom verdict is genuinely open.
pub fn raw_random_module(rng: &mut ChaCha8Rng) -> HvModule {
    let rn = rng.gen_range(1..=2);
    let mn = rng.gen_range(1..=3);
    let table = |rng: &mut ChaCha8Rng, n: usize| -> Vec<Subset> {
        (0..n * n).map(|_| random_subset(rng, n)).collect()
    };
    let ring = HvRing::new(
        Carrier::numbered(rn).unwrap(),
        HyperOp::new(rn, table(rng, rn), "ring.add").unwrap(),
        HyperOp::new(rn, table(rng, rn), "ring.mul").unwrap(),
    )
    .unwrap();
    let add = HyperOp::new(mn, table(rng, mn), "module.add").unwrap();
    let action_cells: Vec<Subset> = (0..rn * mn).map(|_| random_subset(rng, mn)).collect();
    HvModule::new(
        ring,
        Carrier::numbered(mn).unwrap(),
        add,
        ExternalOp::new(rn, mn, action_cells, "action").unwrap(),
        None,
    )
    .unwrap()
}
