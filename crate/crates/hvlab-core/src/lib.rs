//! Exact, finite model-checking for weak hyperstructures: modules whose
//! operations return sets, interval-valued membership/nonmembership
//! pairs over them, and the predicates, cut criteria, transport laws and
//! fundamental quotients that tie the two together.
//!
//! Everything is exhaustive and exact: carriers are small and indexed,
//! subsets are bitsets, scalars are rationals in [0,1], and every checker
//! reports a replayable witness for its first failure in a deterministic
//! scan order.

pub mod carrier;
pub mod error;
pub mod fundamental;
pub mod fuzzy;
pub mod generate;
pub mod hom;
pub mod hyper;
pub mod interval;
pub mod io;
pub mod norm;
pub mod ordinary;
pub mod plift;
pub mod report;
pub mod samples;
pub mod submodule;

pub use carrier::{max_carrier, Carrier, Subset};
pub use error::{HvError, Result};
pub use fundamental::{
    achievable_sets, build_fundamental_quotient, epsilon_star, gamma_star, quotient_ivifs,
    quotient_ivifs_with, verify_quotient_descent, ExpressionFamily, FundamentalQuotient, Partition,
};
pub use fuzzy::{
    attained_thresholds, image_ivifs, lower_cut, preimage_ivifs, upper_cut, validate_ivifs,
    IVFuzzySet, Ivifs, ScalarFuzzySet, Threshold,
};
pub use generate::{
    generate_hv_modules, generate_ivifs, hunt_counterexamples, GenConfig, GenMode, HuntFinding,
    HuntReport, HuntTarget, IvifsTarget, Weaken,
};
pub use hom::{
    all_maps, classify_map, strong_maps, verify_image_closure, verify_preimage_closure,
    verify_submodule_pullback, MapClass, MapClassification, ModuleMap,
};
pub use hyper::{
    all_hv_submodules, check_hv_group, check_hv_module, check_hv_ring, check_hv_submodule,
    weak_commutative, ExternalOp, HvModule, HvRing, HyperOp,
};
pub use interval::{IntervalNumber, Rational01};
pub use io::{
    build_structure, parse_structure_file, render_structure_file, structure_to_file,
    ParsedStructure, StructureFile,
};
pub use norm::{
    lift_norm, validate_idempotent_norm, validate_norm_pair, IntervalNorm, IntervalNormPair,
    NormKind, NormRule, NormTable, ScalarNorm,
};
pub use ordinary::{OrdinaryGroup, OrdinaryModule, OrdinaryRing};
pub use plift::{admissible_lifts, build_lifted_module, LiftVariant};
pub use report::{CheckReport, Verdict, Witness, WitnessElement};
pub use submodule::{
    check_fuzzy_hv_submodule, check_st_hv_submodule, check_st_hv_submodule_with,
    check_st_submodule_ordinary, cut_signature, distinct_cuts, verify_cut_equivalence,
    CutEquivalence, Strictness,
};
