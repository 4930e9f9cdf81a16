//! Maps between modules over one ring: classification and the transport
//! verifiers (submodule pullback, image and preimage closure).
//!
//! A map is classified by how it interacts with the hyperoperations:
//! weak (images of sums meet sums of images), inclusion (containment),
//! strong (equality, on sums and on the action alike). The verifiers
//! check the transport laws that strong maps are expected to satisfy and
//! SKIP — rather than fail — when their preconditions do not hold, so
//! hypothesis-weakening hunts can probe them without false alarms.

use serde::Serialize;

use crate::carrier::Subset;
use crate::error::{HvError, Result};
use crate::fuzzy::{image_ivifs, preimage_ivifs, Ivifs};
use crate::hyper::{check_hv_submodule, HvModule};
use crate::norm::IntervalNormPair;
use crate::report::{CheckReport, Witness};
use crate::submodule::{check_st_hv_submodule_with, Strictness};

/// A total map between the carriers of two modules over the same ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: HvModule,
    target: HvModule,
    mapping: Vec<usize>,
}

impl ModuleMap {
    /// Requires the two modules to be over the same ring (compared by
    /// value: same carrier labels and tables).
    pub fn new(source: HvModule, target: HvModule, mapping: Vec<usize>) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(HvError::RingMismatch);
        }
        if mapping.len() != source.size() {
            return Err(HvError::TableShape {
                context: "map".to_string(),
                got: mapping.len(),
                want: source.size(),
            });
        }
        if let Some(&bad) = mapping.iter().find(|&&y| y >= target.size()) {
            return Err(HvError::MapOutOfRange {
                index: bad,
                size: target.size(),
            });
        }
        Ok(ModuleMap {
            source,
            target,
            mapping,
        })
    }

    pub fn source(&self) -> &HvModule {
        &self.source
    }

    pub fn target(&self) -> &HvModule {
        &self.target
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    /// Elementwise image of a source subset.
    pub fn image_subset(&self, s: Subset) -> Subset {
        Subset::from_indices(s.iter().map(|x| self.mapping[x]))
    }

    /// Full preimage of a target subset.
    pub fn preimage_subset(&self, s: Subset) -> Subset {
        Subset::from_indices((0..self.mapping.len()).filter(|&x| s.contains(self.mapping[x])))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_subset(Subset::full(self.source.size())) == Subset::full(self.target.size())
    }
}

/// Map classes ordered by strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapClass {
    None,
    Weak,
    Inclusion,
    Strong,
}

impl std::fmt::Display for MapClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MapClass::None => "none",
            MapClass::Weak => "weak",
            MapClass::Inclusion => "inclusion",
            MapClass::Strong => "strong",
        };
        f.write_str(s)
    }
}

/// Outcome of classification: the strongest class attained, the three
/// individual levels, and the first obstruction to the next level up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapClassification {
    pub class: MapClass,
    pub weak: bool,
    pub inclusion: bool,
    pub strong: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Witness>,
}

/// Classifies a map by exhaustive comparison of f(x+y) against
/// f(x)+f(y) and f(r.x) against r.f(x).
///
/// Weak needs the additive sides to intersect; inclusion needs
/// containment on both the additive and the action side; strong needs
/// equality on both. Since cells are nonempty, strong implies inclusion
/// implies weak — asserted below.
pub fn classify_map(f: &ModuleMap) -> MapClassification {
    let n = f.source.size();
    let rn = f.source.ring().size();
    let tc = f.target.carrier();

    // For each comparison site, the pair (image of the source cell,
    // composite in the target).
    let add_site = |x: usize, y: usize| {
        let lhs = f.image_subset(f.source.add().cell(x, y));
        let rhs = f.target.add().cell(f.apply(x), f.apply(y));
        (lhs, rhs)
    };
    let act_site = |r: usize, x: usize| {
        let lhs = f.image_subset(f.source.action().cell(r, x));
        let rhs = f.target.action().cell(r, f.apply(x));
        (lhs, rhs)
    };

    let mut weak = true;
    let mut inclusion = true;
    let mut strong = true;
    let mut weak_w = None;
    let mut inclusion_w = None;
    let mut strong_w = None;

    for x in 0..n {
        for y in 0..n {
            let (lhs, rhs) = add_site(x, y);
            let witness = |cond: &str| {
                Witness::new(cond)
                    .with("x", f.source.carrier().label(x), Some(x))
                    .with("y", f.source.carrier().label(y), Some(y))
                    .sides(tc.render(lhs), tc.render(rhs))
                    .note("compares f(x+y) with f(x)+f(y)")
            };
            if weak && !lhs.intersects(rhs) {
                weak = false;
                weak_w = Some(witness("weak_add"));
            }
            if inclusion && !lhs.is_subset_of(rhs) {
                inclusion = false;
                inclusion_w = Some(witness("inclusion_add"));
            }
            if strong && lhs != rhs {
                strong = false;
                strong_w = Some(witness("strong_add"));
            }
        }
    }
    for r in 0..rn {
        for x in 0..n {
            let (lhs, rhs) = act_site(r, x);
            let witness = |cond: &str| {
                Witness::new(cond)
                    .with("r", f.source.ring().carrier().label(r), Some(r))
                    .with("x", f.source.carrier().label(x), Some(x))
                    .sides(tc.render(lhs), tc.render(rhs))
                    .note("compares f(r.x) with r.f(x)")
            };
            if inclusion && !lhs.is_subset_of(rhs) {
                inclusion = false;
                inclusion_w = Some(witness("inclusion_action"));
            }
            if strong && lhs != rhs {
                strong = false;
                strong_w = Some(witness("strong_action"));
            }
        }
    }

    // Nonempty cells force the class lattice.
    assert!(!strong || inclusion, "equality on nonempty cells implies containment");
    assert!(!inclusion || weak, "containment of a nonempty cell implies intersection");

    let (class, obstruction) = if strong {
        (MapClass::Strong, None)
    } else if inclusion {
        (MapClass::Inclusion, strong_w)
    } else if weak {
        (MapClass::Weak, inclusion_w)
    } else {
        (MapClass::None, weak_w)
    };
    MapClassification {
        class,
        weak,
        inclusion,
        strong,
        obstruction,
    }
}

/// Checks that the preimage of a submodule under a strong surjective map
/// is again a submodule. Preconditions (strong, surjective, the subset is
/// a submodule of the target) are reported as SKIP when unmet. A FAIL
/// here would contradict the supporting theory and is worded accordingly.
pub fn verify_submodule_pullback(f: &ModuleMap, n_sub: Subset) -> CheckReport {
    const CHECK: &str = "submodule_pullback";
    let class = classify_map(f).class;
    if class != MapClass::Strong {
        return CheckReport::skip(CHECK, format!("map classifies as {class}, not strong"));
    }
    if !f.is_surjective() {
        return CheckReport::skip(CHECK, "map is not surjective");
    }
    let target_rep = check_hv_submodule(f.target(), n_sub);
    if !target_rep.passed() {
        return CheckReport::skip(CHECK, "subset is not a submodule of the target");
    }
    let pre = f.preimage_subset(n_sub);
    let rep = check_hv_submodule(f.source(), pre);
    if rep.passed() {
        CheckReport::pass(CHECK)
    } else {
        let inner = rep.witness.expect("failed check carries a witness");
        CheckReport::fail(
            CHECK,
            Witness::new("pullback")
                .with("preimage", f.source().carrier().render(pre), None)
                .note(format!(
                    "unexpected: preimage of a submodule fails {} — contradicts the pullback law",
                    inner.condition
                )),
        )
    }
}

/// Checks that the image of a predicate-passing pair under a strong map
/// passes the predicate on the target. SKIPs when the map is not strong
/// or the pair does not pass on the source.
pub fn verify_image_closure(
    f: &ModuleMap,
    a: &Ivifs,
    norms: &IntervalNormPair,
    strictness: Strictness,
) -> Result<CheckReport> {
    const CHECK: &str = "image_closure";
    if classify_map(f).class != MapClass::Strong {
        return Ok(CheckReport::skip(CHECK, "map is not strong"));
    }
    let source_rep = check_st_hv_submodule_with(f.source(), a, norms, strictness)?;
    if !source_rep.passed() {
        return Ok(CheckReport::skip(CHECK, "pair does not pass on the source"));
    }
    let image = image_ivifs(f.mapping(), a, f.target().size())?;
    let rep = check_st_hv_submodule_with(f.target(), &image, norms, strictness)?;
    Ok(transport_outcome(CHECK, rep, "image"))
}

/// Checks that the preimage of a predicate-passing pair under a strong
/// map passes the predicate on the source. SKIPs symmetric to
/// `verify_image_closure`.
pub fn verify_preimage_closure(
    f: &ModuleMap,
    b: &Ivifs,
    norms: &IntervalNormPair,
    strictness: Strictness,
) -> Result<CheckReport> {
    const CHECK: &str = "preimage_closure";
    if classify_map(f).class != MapClass::Strong {
        return Ok(CheckReport::skip(CHECK, "map is not strong"));
    }
    let target_rep = check_st_hv_submodule_with(f.target(), b, norms, strictness)?;
    if !target_rep.passed() {
        return Ok(CheckReport::skip(CHECK, "pair does not pass on the target"));
    }
    let pre = preimage_ivifs(f.mapping(), b)?;
    let rep = check_st_hv_submodule_with(f.source(), &pre, norms, strictness)?;
    Ok(transport_outcome(CHECK, rep, "preimage"))
}

/// Every index map between two modules over the same ring, in
/// lexicographic order of the index array. Empty when the rings differ.
/// Intended for small carriers; the count is |target|^|source|.
pub fn all_maps(source: &HvModule, target: &HvModule) -> Vec<ModuleMap> {
    if source.ring() != target.ring() {
        return Vec::new();
    }
    let (sn, tn) = (source.size(), target.size());
    let total = tn.checked_pow(sn as u32).expect("map space fits in usize");
    let mut out = Vec::with_capacity(total);
    let mut mapping = vec![0usize; sn];
    loop {
        out.push(
            ModuleMap::new(source.clone(), target.clone(), mapping.clone())
                .expect("in-range mapping over a shared ring"),
        );
        // Advance the odometer, most significant digit first.
        let mut pos = sn;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            mapping[pos] += 1;
            if mapping[pos] < tn {
                break;
            }
            mapping[pos] = 0;
        }
    }
}

/// The maps from `all_maps` that classify as strong.
pub fn strong_maps(source: &HvModule, target: &HvModule) -> Vec<ModuleMap> {
    all_maps(source, target)
        .into_iter()
        .filter(|f| classify_map(f).class == MapClass::Strong)
        .collect()
}

fn transport_outcome(check: &str, rep: CheckReport, what: &str) -> CheckReport {
    if rep.passed() {
        CheckReport::pass(check)
    } else {
        let inner = rep.witness.expect("failed check carries a witness");
        let mut w = inner.clone();
        w.note = Some(format!(
            "unexpected: {what} fails {} — contradicts the transport law{}",
            inner.condition,
            inner.note.map(|n| format!(" ({n})")).unwrap_or_default()
        ));
        CheckReport::fail(check, w)
    }
}
