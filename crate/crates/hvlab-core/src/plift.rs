//! Hyperactions lifted from an ordinary module through distinguished
//! subsets.
//!
//! Starting from a classical module over a ring, each constructor keeps
//! the additive group as-is (singleton cells) and fattens only the
//! external action by threading a fixed subset through it: a ring subset
//! multiplied in before acting, a module subset added in before acting,
//! or both at once. Under the matching hypothesis the result satisfies
//! the weak module axioms, which the test-suite asserts exhaustively at
//! small sizes.

use crate::carrier::Subset;
use crate::error::{HvError, Result};
use crate::hyper::{ExternalOp, HvModule, HyperOp};
use crate::ordinary::OrdinaryModule;

/// Which lifted action to build. The CLI exposes these as variants
/// `a`, `b` and `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftVariant {
    /// r ∘ x = (rP)x for a ring subset P.
    Pstar,
    /// r ∘ x = r(P+x) for a module subset P.
    Pplus,
    /// r ∘ x = (rP₁)(P₂+x) for a ring subset P₁ and a module subset P₂.
    PstarPlus,
}

impl LiftVariant {
    /// The CLI token for this variant.
    pub fn letter(self) -> &'static str {
        match self {
            LiftVariant::Pstar => "a",
            LiftVariant::Pplus => "b",
            LiftVariant::PstarPlus => "c",
        }
    }
}

impl std::str::FromStr for LiftVariant {
    type Err = HvError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(LiftVariant::Pstar),
            "b" => Ok(LiftVariant::Pplus),
            "c" => Ok(LiftVariant::PstarPlus),
            other => Err(HvError::Usage(format!(
                "unknown variant {other:?}: expected a, b or c"
            ))),
        }
    }
}

fn range_check(p: Subset, size: usize, what: &str) -> Result<()> {
    if !p.is_subset_of(Subset::full(size)) {
        return Err(HvError::Usage(format!(
            "{what} contains element indices outside a carrier of size {size}"
        )));
    }
    Ok(())
}

/// Builds the lifted module. `p_ring` feeds the `Pstar` side (and P₁ of
/// `PstarPlus`); `p_module` feeds the `Pplus` side (and P₂). The unused
/// argument of a single-subset variant is ignored. Hypothesis failures
/// are reported as errors naming the variant and the violated condition.
pub fn build_lifted_module(
    m: &OrdinaryModule,
    variant: LiftVariant,
    p_ring: Subset,
    p_module: Subset,
) -> Result<HvModule> {
    let rn = m.ring().size();
    let mn = m.size();
    let center = m.ring().center();

    let cells: Vec<Subset> = match variant {
        LiftVariant::Pstar => {
            range_check(p_ring, rn, "P")?;
            let good = p_ring
                .inter(center)
                .iter()
                .any(|p| p_ring.contains(m.ring().mul(p, p)));
            if !good {
                return Err(HvError::Hypothesis {
                    variant: "a",
                    detail: "no p ∈ P ∩ Z(R) with p² ∈ P".to_string(),
                });
            }
            (0..rn)
                .flat_map(|r| (0..mn).map(move |x| (r, x)))
                .map(|(r, x)| {
                    Subset::from_indices(p_ring.iter().map(|p| m.act(m.ring().mul(r, p), x)))
                })
                .collect()
        }
        LiftVariant::Pplus => {
            range_check(p_module, mn, "P")?;
            if !p_module.contains(m.zero()) {
                let z = m.group().carrier().label(m.zero());
                return Err(HvError::Hypothesis {
                    variant: "b",
                    detail: format!("{z} ∉ P"),
                });
            }
            (0..rn)
                .flat_map(|r| (0..mn).map(move |x| (r, x)))
                .map(|(r, x)| {
                    Subset::from_indices(p_module.iter().map(|p| m.act(r, m.group().add(p, x))))
                })
                .collect()
        }
        LiftVariant::PstarPlus => {
            range_check(p_ring, rn, "P₁")?;
            range_check(p_module, mn, "P₂")?;
            let good = p_ring.inter(center).iter().any(|p1| {
                m.ring().mul(p1, p1) == p1
                    && p_module.iter().any(|p2| m.act(p1, p2) == m.zero())
            });
            if !good {
                return Err(HvError::Hypothesis {
                    variant: "c",
                    detail: "no p₁ ∈ P₁ ∩ Z(R) with p₁² = p₁ and p₂ ∈ P₂ with p₁p₂ = 0"
                        .to_string(),
                });
            }
            (0..rn)
                .flat_map(|r| (0..mn).map(move |x| (r, x)))
                .map(|(r, x)| {
                    Subset::from_indices(p_ring.iter().flat_map(|q| {
                        p_module
                            .iter()
                            .map(move |p| m.act(m.ring().mul(r, q), m.group().add(p, x)))
                    }))
                })
                .collect()
        }
    };

    let add = HyperOp::from_singletons(mn, m.group().add_table(), "module.add")
        .expect("validated tables embed");
    let action = ExternalOp::new(rn, mn, cells, "action").expect("lifted cells are nonempty");
    HvModule::new(
        m.ring().to_hv(),
        m.group().carrier().clone(),
        add,
        action,
        Some(m.zero()),
    )
}

/// Every admissible (variant, ring-subset, module-subset) triple for the
/// given module, in variant order then ascending subset order. Each entry
/// builds successfully by construction.
pub fn admissible_lifts(m: &OrdinaryModule) -> Vec<(LiftVariant, Subset, Subset)> {
    let rn = m.ring().size();
    let mn = m.size();
    let mut out = Vec::new();
    for p in Subset::nonempty_subsets(rn) {
        if build_lifted_module(m, LiftVariant::Pstar, p, Subset::empty()).is_ok() {
            out.push((LiftVariant::Pstar, p, Subset::empty()));
        }
    }
    for p in Subset::nonempty_subsets(mn) {
        if build_lifted_module(m, LiftVariant::Pplus, Subset::empty(), p).is_ok() {
            out.push((LiftVariant::Pplus, Subset::empty(), p));
        }
    }
    for p1 in Subset::nonempty_subsets(rn) {
        for p2 in Subset::nonempty_subsets(mn) {
            if build_lifted_module(m, LiftVariant::PstarPlus, p1, p2).is_ok() {
                out.push((LiftVariant::PstarPlus, p1, p2));
            }
        }
    }
    out
}
