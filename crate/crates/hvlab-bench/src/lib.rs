//! Shared inputs for the benchmark suite: seeded, pregenerated streams so
//! the benchmarks measure checking and verification, not generation.

use hvlab_core::{
    generate_hv_modules, generate_ivifs, GenConfig, HvModule, Ivifs, IvifsTarget,
};

pub const STREAM_SEED: u64 = 0xBE9C;

/// A reproducible batch of valid structures.
pub fn module_stream(max_m: usize, max_r: usize, count: usize) -> Vec<HvModule> {
    generate_hv_modules(&GenConfig::random(max_m, max_r, STREAM_SEED, count))
        .expect("seeded stream generates")
}

/// Each module with a mix of arbitrary and predicate-passing pairs.
pub fn paired_stream(
    max_m: usize,
    max_r: usize,
    count: usize,
    pairs: usize,
) -> Vec<(HvModule, Vec<Ivifs>)> {
    module_stream(max_m, max_r, count)
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            let cfg = GenConfig::random(max_m, max_r, STREAM_SEED.wrapping_add(i as u64), pairs);
            let mut ps = generate_ivifs(&m, &cfg, IvifsTarget::Unconstrained)
                .expect("unconstrained pairs generate");
            ps.extend(
                generate_ivifs(&m, &cfg, IvifsTarget::Passing).expect("passing pairs generate"),
            );
            (m, ps)
        })
        .collect()
}
