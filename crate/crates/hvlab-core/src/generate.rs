//! Deterministic enumeration and seeded sampling of small modules and
//! membership/nonmembership pairs, plus the hypothesis-weakening
//! counterexample hunts built on top of them.
//!
//! Enumeration walks every cell-subset assignment in lexicographic order
//! and keeps what the axiom checkers accept, so it is exhaustive at tiny
//! sizes. Sampling draws random tables, repairs reproduction
//! deterministically (missing elements join the first cell of their
//! row/column, lowest index first), and filters by the same checkers.
//! Everything is driven by a seeded generator: same seed, same stream.

use num_rational::Ratio;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::carrier::{max_carrier, Carrier, Subset};
use crate::error::{HvError, Result};
use crate::fuzzy::{image_ivifs, preimage_ivifs, IVFuzzySet, Ivifs};
use crate::fundamental::{build_fundamental_quotient, quotient_ivifs_with, verify_quotient_descent};
use crate::hom::{all_maps, classify_map, MapClass};
use crate::hyper::{
    all_hv_submodules, check_hv_group, check_hv_module, check_hv_ring, weak_commutative, ExternalOp,
    HvModule, HvRing, HyperOp,
};
use crate::interval::{IntervalNumber, Rational01};
use crate::norm::{IntervalNormPair, ScalarNorm};
use crate::report::{Verdict, Witness};
use crate::hom::verify_submodule_pullback;
use crate::submodule::{
    check_st_hv_submodule, check_st_hv_submodule_with, check_st_submodule_ordinary,
    verify_cut_equivalence, Strictness,
};

/// How modules are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenMode {
    Enumerate,
    Random,
}

/// Generation parameters shared by the module, pair, and hunt drivers.
#[derive(Debug, Clone, Serialize)]
pub struct GenConfig {
    pub max_module_size: usize,
    pub max_ring_size: usize,
    pub seed: u64,
    pub budget: usize,
    pub mode: GenMode,
    /// Endpoint grid: multiples of 1/denominator inside [0,1].
    pub grid_denominator: u32,
}

impl GenConfig {
    pub fn enumerate(max_module_size: usize, max_ring_size: usize) -> Self {
        GenConfig {
            max_module_size,
            max_ring_size,
            seed: 0,
            budget: usize::MAX,
            mode: GenMode::Enumerate,
            grid_denominator: 9,
        }
    }

    pub fn random(max_module_size: usize, max_ring_size: usize, seed: u64, budget: usize) -> Self {
        GenConfig {
            max_module_size,
            max_ring_size,
            seed,
            budget,
            mode: GenMode::Random,
            grid_denominator: 9,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_grid(mut self, denominator: u32) -> Self {
        self.grid_denominator = denominator;
        self
    }

    fn validate(&self) -> Result<()> {
        let cap = max_carrier();
        for (what, n) in [
            ("max_module_size", self.max_module_size),
            ("max_ring_size", self.max_ring_size),
        ] {
            if n == 0 || n > cap {
                return Err(HvError::Usage(format!(
                    "{what} must be between 1 and the carrier cap {cap}, got {n}"
                )));
            }
        }
        if self.grid_denominator == 0 {
            return Err(HvError::Usage("grid denominator must be positive".to_string()));
        }
        Ok(())
    }
}

/// Iterates every table of `cells` nonempty subsets of an `elems`-element
/// carrier, in lexicographic order of cell bit patterns.
fn for_each_table(cells: usize, elems: usize, mut f: impl FnMut(&[Subset]) -> bool) {
    let limit = 1u64 << elems;
    let mut table = vec![Subset::from_indices([0usize]); cells];
    let mut bits = vec![1u64; cells];
    loop {
        if !f(&table) {
            return;
        }
        let mut pos = cells;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            bits[pos] += 1;
            if bits[pos] < limit {
                table[pos] = subset_from_bits(bits[pos]);
                break;
            }
            bits[pos] = 1;
            table[pos] = subset_from_bits(1);
        }
    }
}

fn subset_from_bits(bits: u64) -> Subset {
    Subset::from_indices((0..64).filter(|&i| bits & (1 << i) != 0))
}

/// Designates a zero element only when the addition is single valued
/// with a two-sided identity; hyper additions get no designated zero.
fn detect_zero(add: &HyperOp) -> Option<usize> {
    if !add.is_singleton_valued() {
        return None;
    }
    let n = add.size();
    (0..n).find(|&e| {
        (0..n).all(|x| add.cell(e, x) == Subset::singleton(x) && add.cell(x, e) == Subset::singleton(x))
    })
}

fn enumerate_modules(cfg: &GenConfig, out: &mut Vec<HvModule>) {
    for rn in 1..=cfg.max_ring_size {
        let ring_carrier = Carrier::numbered(rn).expect("validated size");
        let mut rings: Vec<HvRing> = Vec::new();
        for_each_table(rn * rn, rn, |add_cells| {
            let add = HyperOp::new(rn, add_cells.to_vec(), "ring.add").expect("enumerated cells are valid");
            if !check_hv_group(&ring_carrier, &add).passed() {
                return true;
            }
            for_each_table(rn * rn, rn, |mul_cells| {
                let mul = HyperOp::new(rn, mul_cells.to_vec(), "ring.mul").expect("enumerated cells are valid");
                let ring = HvRing::new(ring_carrier.clone(), add.clone(), mul.clone())
                    .expect("sizes agree");
                if check_hv_ring(&ring).passed() {
                    rings.push(ring);
                }
                true
            });
            true
        });

        for mn in 1..=cfg.max_module_size {
            let module_carrier = Carrier::numbered(mn).expect("validated size");
            for ring in &rings {
                if out.len() >= cfg.budget {
                    return;
                }
                for_each_table(mn * mn, mn, |addm_cells| {
                    let addm =
                        HyperOp::new(mn, addm_cells.to_vec(), "module.add").expect("enumerated cells are valid");
                    if !check_hv_group(&module_carrier, &addm).passed() || !weak_commutative(&addm) {
                        return true;
                    }
                    let zero = detect_zero(&addm);
                    let mut keep_going = true;
                    for_each_table(rn * mn, mn, |action_cells| {
                        let action = ExternalOp::new(rn, mn, action_cells.to_vec(), "action")
                            .expect("enumerated cells are valid");
                        let m = HvModule::new(
                            ring.clone(),
                            module_carrier.clone(),
                            addm.clone(),
                            action,
                            zero,
                        )
                        .expect("sizes agree");
                        if check_hv_module(&m).passed() {
                            out.push(m);
                        }
                        keep_going = out.len() < cfg.budget;
                        keep_going
                    });
                    keep_going
                });
            }
        }
    }
}

fn random_nonempty_subset(rng: &mut ChaCha8Rng, n: usize) -> Subset {
    subset_from_bits(rng.gen_range(1..(1u64 << n)))
}

/// Grows row and column unions to the full carrier: each missing element
/// joins the first cell of its row (then column), lowest element first.
fn repair_reproduction(cells: &mut [Subset], n: usize) {
    for a in 0..n {
        let mut row = Subset::empty();
        for b in 0..n {
            row = row.union(cells[a * n + b]);
        }
        for e in Subset::full(n).minus(row).iter() {
            cells[a * n].insert(e);
        }
    }
    for a in 0..n {
        let mut col = Subset::empty();
        for b in 0..n {
            col = col.union(cells[b * n + a]);
        }
        for e in Subset::full(n).minus(col).iter() {
            cells[a].insert(e);
        }
    }
}

fn random_table(rng: &mut ChaCha8Rng, n: usize, repair: bool) -> Vec<Subset> {
    let mut cells: Vec<Subset> = (0..n * n).map(|_| random_nonempty_subset(rng, n)).collect();
    if repair {
        repair_reproduction(&mut cells, n);
    }
    cells
}

fn sample_modules(cfg: &GenConfig, out: &mut Vec<HvModule>) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let attempt_cap = cfg.budget.saturating_mul(400).max(10_000);
    let mut attempts = 0usize;
    while out.len() < cfg.budget && attempts < attempt_cap {
        attempts += 1;
        let rn = rng.gen_range(1..=cfg.max_ring_size);
        let mn = rng.gen_range(1..=cfg.max_module_size);
        let ring_add = random_table(&mut rng, rn, true);
        let ring_mul = random_table(&mut rng, rn, false);
        let module_add = random_table(&mut rng, mn, true);
        let action_cells: Vec<Subset> = (0..rn * mn)
            .map(|_| random_nonempty_subset(&mut rng, mn))
            .collect();

        let ring = HvRing::new(
            Carrier::numbered(rn).expect("validated size"),
            HyperOp::new(rn, ring_add, "ring.add").expect("sampled cells are valid"),
            HyperOp::new(rn, ring_mul, "ring.mul").expect("sampled cells are valid"),
        )
        .expect("sizes agree");
        let addm = HyperOp::new(mn, module_add, "module.add").expect("sampled cells are valid");
        let zero = detect_zero(&addm);
        let m = HvModule::new(
            ring,
            Carrier::numbered(mn).expect("validated size"),
            addm,
            ExternalOp::new(rn, mn, action_cells, "action").expect("sampled cells are valid"),
            zero,
        )
        .expect("sizes agree");
        if check_hv_module(&m).passed() {
            out.push(m);
        }
    }
}

/// Modules passing the full axiom check, produced per the configured
/// mode. Enumeration is exhaustive up to the configured sizes (subject
/// to the budget); sampling retries up to a generous attempt cap and may
/// return fewer than `budget` instances only if validity is very rare.
pub fn generate_hv_modules(cfg: &GenConfig) -> Result<Vec<HvModule>> {
    cfg.validate()?;
    let mut out = Vec::new();
    match cfg.mode {
        GenMode::Enumerate => enumerate_modules(cfg, &mut out),
        GenMode::Random => sample_modules(cfg, &mut out),
    }
    Ok(out)
}

/// What the pair generator aims for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IvifsTarget {
    /// Arbitrary admissible pairs from the endpoint grid.
    Unconstrained,
    /// Pairs built over a chain of verified submodules, constant per
    /// layer, filtered to pass the membership predicate.
    Passing,
}

fn grid_values(denominator: u32) -> Vec<Rational01> {
    (0..=denominator)
        .map(|k| Rational01::new(k as i64, denominator as i64).expect("grid point in range"))
        .collect()
}

fn complement(r: Rational01) -> Rational01 {
    Rational01::from_ratio(Ratio::one() - r.ratio()).expect("complement stays in range")
}

fn draw(rng: &mut ChaCha8Rng, grid: &[Rational01]) -> Rational01 {
    grid[rng.gen_range(0..grid.len())]
}

fn unconstrained_ivifs(rng: &mut ChaCha8Rng, grid: &[Rational01], n: usize) -> Ivifs {
    let mut m_vals = Vec::with_capacity(n);
    let mut n_vals = Vec::with_capacity(n);
    for _ in 0..n {
        loop {
            let (a, b) = (draw(rng, grid), draw(rng, grid));
            let (m_lo, m_hi) = (a.min(b), a.max(b));
            let (c, d) = (draw(rng, grid), draw(rng, grid));
            let (n_lo, n_hi) = (c.min(d), c.max(d));
            if m_hi.sum_within_one(n_hi) {
                m_vals.push(IntervalNumber::new(m_lo, m_hi).expect("ordered endpoints"));
                n_vals.push(IntervalNumber::new(n_lo, n_hi).expect("ordered endpoints"));
                break;
            }
        }
    }
    Ivifs::new(IVFuzzySet::new(m_vals), IVFuzzySet::new(n_vals)).expect("equal lengths")
}

/// Builds a layered pair over a random chain of submodules: membership
/// descends from the innermost layer outward, nonmembership ascends, and
/// each layer respects the admissibility constraint. With `bump` set, one
/// element of the innermost layer gets its upper membership endpoint
/// raised above its layer — the nonmembership stays aligned, so the pair
/// remains admissible but its top cut need not be a substructure.
fn layered_ivifs(
    rng: &mut ChaCha8Rng,
    grid: &[Rational01],
    submodules: &[Subset],
    n: usize,
    bump: bool,
) -> Ivifs {
    // Chain from innermost to outermost; the outermost layer is the full
    // carrier, which is always present for a valid module.
    let full = Subset::full(n);
    let mut chain: Vec<Subset> = vec![full];
    let mut current = full;
    loop {
        let options: Vec<Subset> = submodules
            .iter()
            .copied()
            .filter(|&s| s != current && s.is_subset_of(current))
            .collect();
        if options.is_empty() || rng.gen_range(0..3) == 0 {
            break;
        }
        current = options[rng.gen_range(0..options.len())];
        chain.insert(0, current);
    }
    let k = chain.len();

    let mut sorted_desc = |count: usize| -> Vec<Rational01> {
        let mut vs: Vec<Rational01> = (0..count).map(|_| draw(rng, grid)).collect();
        vs.sort();
        vs.reverse();
        vs
    };
    let m_hi = sorted_desc(k);
    let m_lo: Vec<Rational01> = sorted_desc(k)
        .into_iter()
        .zip(&m_hi)
        .map(|(lo, &hi)| lo.min(hi))
        .collect();
    let mut sorted_asc = |count: usize| -> Vec<Rational01> {
        let mut vs: Vec<Rational01> = (0..count).map(|_| draw(rng, grid)).collect();
        vs.sort();
        vs
    };
    let n_hi: Vec<Rational01> = sorted_asc(k)
        .into_iter()
        .enumerate()
        .map(|(j, v)| v.min(complement(m_hi[j])))
        .collect();
    let n_lo: Vec<Rational01> = sorted_asc(k)
        .into_iter()
        .zip(&n_hi)
        .map(|(lo, &hi)| lo.min(hi))
        .collect();

    let layer_of = |x: usize| (0..k).find(|&j| chain[j].contains(x)).expect("outermost layer is full");
    let mut m_vals: Vec<IntervalNumber> = (0..n)
        .map(|x| {
            let j = layer_of(x);
            IntervalNumber::new(m_lo[j], m_hi[j]).expect("ordered endpoints")
        })
        .collect();
    let n_vals: Vec<IntervalNumber> = (0..n)
        .map(|x| {
            let j = layer_of(x);
            IntervalNumber::new(n_lo[j], n_hi[j]).expect("ordered endpoints")
        })
        .collect();
    if bump {
        let star = chain[0].first().expect("chain sets are nonempty");
        let cur = m_vals[star];
        let cap = complement(n_vals[star].hi());
        let options: Vec<Rational01> = grid
            .iter()
            .copied()
            .filter(|&v| cur.hi() < v && v <= cap)
            .collect();
        if !options.is_empty() {
            let raised = options[rng.gen_range(0..options.len())];
            m_vals[star] = IntervalNumber::new(cur.lo(), raised).expect("raised endpoint stays ordered");
        }
    }
    Ivifs::new(IVFuzzySet::new(m_vals), IVFuzzySet::new(n_vals)).expect("equal lengths")
}

/// Membership/nonmembership pairs over the module's carrier, per target.
/// The passing stream is filtered by the predicate under the strict
/// reading with the min/max norms, so every emitted pair passes; the
/// unconstrained stream mixes passing and failing pairs.
pub fn generate_ivifs(m: &HvModule, cfg: &GenConfig, target: IvifsTarget) -> Result<Vec<Ivifs>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let grid = grid_values(cfg.grid_denominator);
    let n = m.size();
    let mut out = Vec::new();
    match target {
        IvifsTarget::Unconstrained => {
            while out.len() < cfg.budget {
                out.push(unconstrained_ivifs(&mut rng, &grid, n));
            }
        }
        IvifsTarget::Passing => {
            let submodules = all_hv_submodules(m);
            let norms = IntervalNormPair::min_max();
            let attempt_cap = cfg.budget.saturating_mul(50).max(1000);
            let mut attempts = 0usize;
            while out.len() < cfg.budget && attempts < attempt_cap {
                attempts += 1;
                let a = layered_ivifs(&mut rng, &grid, &submodules, n, false);
                if check_st_hv_submodule(m, &a, &norms)?.passed() {
                    out.push(a);
                }
            }
        }
    }
    Ok(out)
}

/// The law a hunt probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HuntTarget {
    /// Predicate ⟺ cut-family equivalence.
    CutEquivalence,
    /// Preimages of submodules under strong epimorphisms.
    Pullback,
    /// Image/preimage closure of passing pairs under strong maps.
    Transport,
    /// Descent of passing pairs to the fundamental quotient.
    Descent,
}

impl HuntTarget {
    pub fn name(self) -> &'static str {
        match self {
            HuntTarget::CutEquivalence => "cut-equivalence",
            HuntTarget::Pullback => "pullback",
            HuntTarget::Transport => "transport",
            HuntTarget::Descent => "descent",
        }
    }
}

/// Which hypothesis the hunt drops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Weaken {
    None,
    /// Replace the idempotent t-norm with the product t-norm, bypassing
    /// validation.
    ProductNorm,
    /// Accept inclusion-class maps where a strong map is required.
    InclusionMap,
    /// Skip the zero-class override in the induced quotient pair.
    NoZeroOverride,
}

impl Weaken {
    pub fn name(self) -> &'static str {
        match self {
            Weaken::None => "none",
            Weaken::ProductNorm => "product-norm",
            Weaken::InclusionMap => "inclusion-map",
            Weaken::NoZeroOverride => "no-zero-override",
        }
    }
}

impl std::str::FromStr for Weaken {
    type Err = HvError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Weaken::None),
            "product-norm" => Ok(Weaken::ProductNorm),
            "inclusion-map" => Ok(Weaken::InclusionMap),
            "no-zero-override" => Ok(Weaken::NoZeroOverride),
            other => Err(HvError::Usage(format!(
                "unknown weakening {other:?}: expected none, product-norm, inclusion-map or no-zero-override"
            ))),
        }
    }
}

/// A located counterexample: where it was found and the failing witness.
#[derive(Debug, Clone, Serialize)]
pub struct HuntFinding {
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Outcome of a hunt: how much was examined and the first find, if any.
#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    pub target: &'static str,
    pub weaken: &'static str,
    pub seed: u64,
    pub examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finding: Option<HuntFinding>,
}

/// Near-miss pairs for the cut hunts: layered with one raised membership
/// endpoint, deliberately not filtered by any predicate.
fn bumped_ivifs(m: &HvModule, cfg: &GenConfig, count: usize) -> Vec<Ivifs> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
    let grid = grid_values(cfg.grid_denominator);
    let submodules = all_hv_submodules(m);
    (0..count)
        .map(|_| layered_ivifs(&mut rng, &grid, &submodules, m.size(), true))
        .collect()
}

fn admissible(target: HuntTarget, weaken: Weaken) -> Result<()> {
    let ok = matches!(
        (target, weaken),
        (_, Weaken::None)
            | (HuntTarget::CutEquivalence, Weaken::ProductNorm)
            | (HuntTarget::Transport, Weaken::InclusionMap)
            | (HuntTarget::Descent, Weaken::NoZeroOverride)
    );
    if ok {
        Ok(())
    } else {
        Err(HvError::Usage(format!(
            "weakening {} does not apply to {}",
            weaken.name(),
            target.name()
        )))
    }
}

/// Searches the generated space for an instance satisfying all
/// hypotheses except the weakened one whose conclusion fails. Reports the
/// first find or exhaustion of the budget. With `Weaken::None` this is a
/// sanity sweep expected to find nothing.
pub fn hunt_counterexamples(target: HuntTarget, weaken: Weaken, cfg: &GenConfig) -> Result<HuntReport> {
    admissible(target, weaken)?;
    cfg.validate()?;

    let module_budget = cfg.budget.div_euclid(8).clamp(1, 400);
    let module_cfg = cfg.clone().with_budget(module_budget);
    let modules = generate_hv_modules(&module_cfg)?;

    let mut examined = 0usize;
    let mut finding = None;

    match target {
        HuntTarget::CutEquivalence => {
            let norms = match weaken {
                Weaken::ProductNorm => {
                    IntervalNormPair::new(ScalarNorm::product_tnorm(), ScalarNorm::max_snorm())?
                }
                _ => IntervalNormPair::min_max(),
            };
            'outer: for (i, m) in modules.iter().enumerate() {
                let pair_cfg = cfg.clone().with_budget(4).with_seed(cfg.seed.wrapping_add(i as u64));
                let mut pairs = generate_ivifs(m, &pair_cfg, IvifsTarget::Unconstrained)?;
                pairs.extend(bumped_ivifs(m, &pair_cfg, 4));
                pairs.extend(generate_ivifs(m, &pair_cfg.with_budget(2), IvifsTarget::Passing)?);
                for (j, a) in pairs.iter().enumerate() {
                    if examined >= cfg.budget {
                        break 'outer;
                    }
                    examined += 1;
                    let v = verify_cut_equivalence(m, a, &norms, Strictness::Strict)?;
                    if !v.equivalent {
                        finding = Some(HuntFinding {
                            description: format!(
                                "module {i}, pair {j}: predicate {} but cut family {}",
                                v.predicate, v.cuts
                            ),
                            witness: v.witness,
                        });
                        break 'outer;
                    }
                }
            }
        }
        HuntTarget::Pullback => {
            'outer: for (i, m) in modules.iter().enumerate().filter(|(_, m)| m.size() <= 3) {
                for (k, f) in all_maps(m, m).into_iter().enumerate() {
                    if classify_map(&f).class != MapClass::Strong || !f.is_surjective() {
                        continue;
                    }
                    for sub in all_hv_submodules(m) {
                        if examined >= cfg.budget {
                            break 'outer;
                        }
                        let rep = verify_submodule_pullback(&f, sub);
                        match rep.verdict {
                            Verdict::Skip => {}
                            Verdict::Pass => examined += 1,
                            Verdict::Fail => {
                                examined += 1;
                                finding = Some(HuntFinding {
                                    description: format!(
                                        "module {i}, endomap {k}: preimage of {} is not a submodule",
                                        m.carrier().render(sub)
                                    ),
                                    witness: rep.witness,
                                });
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        HuntTarget::Transport => {
            let norms = IntervalNormPair::min_max();
            'outer: for (i, m) in modules.iter().enumerate().filter(|(_, m)| m.size() <= 3) {
                let pair_cfg = cfg.clone().with_budget(3).with_seed(cfg.seed.wrapping_add(i as u64));
                let pairs = generate_ivifs(m, &pair_cfg, IvifsTarget::Passing)?;
                for (k, f) in all_maps(m, m).into_iter().enumerate() {
                    let class = classify_map(&f).class;
                    let admitted = match weaken {
                        Weaken::InclusionMap => class >= MapClass::Inclusion,
                        _ => class == MapClass::Strong,
                    };
                    if !admitted {
                        continue;
                    }
                    for (j, a) in pairs.iter().enumerate() {
                        if examined >= cfg.budget {
                            break 'outer;
                        }
                        // Image direction: a passes on the source by
                        // construction; its pushforward must pass on the
                        // target.
                        examined += 1;
                        let image = image_ivifs(f.mapping(), a, f.target().size())?;
                        let image_rep =
                            check_st_hv_submodule_with(f.target(), &image, &norms, Strictness::Strict)?;
                        if !image_rep.passed() {
                            finding = Some(HuntFinding {
                                description: format!(
                                    "module {i}, endomap {k} (class {class}), pair {j}: image fails the predicate"
                                ),
                                witness: image_rep.witness,
                            });
                            break 'outer;
                        }
                        // Preimage direction: the same pair read on the
                        // target side pulls back along f.
                        let pre = preimage_ivifs(f.mapping(), a)?;
                        let pre_rep =
                            check_st_hv_submodule_with(f.source(), &pre, &norms, Strictness::Strict)?;
                        if !pre_rep.passed() {
                            finding = Some(HuntFinding {
                                description: format!(
                                    "module {i}, endomap {k} (class {class}), pair {j}: preimage fails the predicate"
                                ),
                                witness: pre_rep.witness,
                            });
                            break 'outer;
                        }
                    }
                }
            }
        }
        HuntTarget::Descent => {
            let norms = IntervalNormPair::min_max();
            'outer: for (i, m) in modules.iter().enumerate() {
                let pair_cfg = cfg.clone().with_budget(4).with_seed(cfg.seed.wrapping_add(i as u64));
                let pairs = generate_ivifs(m, &pair_cfg, IvifsTarget::Passing)?;
                for (j, a) in pairs.iter().enumerate() {
                    if examined >= cfg.budget {
                        break 'outer;
                    }
                    examined += 1;
                    let (verdict, witness) = match weaken {
                        Weaken::NoZeroOverride => {
                            let q = build_fundamental_quotient(m)?;
                            let b = quotient_ivifs_with(a, &q, false)?;
                            let rep = check_st_submodule_ordinary(q.module(), &b, &norms)?;
                            (rep.verdict, rep.witness)
                        }
                        _ => {
                            let rep = verify_quotient_descent(m, a, &norms, Strictness::Strict)?;
                            (rep.verdict, rep.witness)
                        }
                    };
                    if verdict == Verdict::Fail {
                        finding = Some(HuntFinding {
                            description: format!(
                                "module {i}, pair {j}: induced quotient pair fails the predicate"
                            ),
                            witness,
                        });
                        break 'outer;
                    }
                }
            }
        }
    }

    Ok(HuntReport {
        target: target.name(),
        weaken: weaken.name(),
        seed: cfg.seed,
        examined,
        finding,
    })
}
