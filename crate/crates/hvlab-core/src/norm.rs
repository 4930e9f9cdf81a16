//! Triangular norms on [0,1] rationals and their interval lifts.
//!
//! A checker validates the idempotent-norm axioms (commutativity,
//! associativity, idempotency, monotonicity in both arguments, and the
//! boundary law for the declared kind) exhaustively on the closure of a
//! finite value set. Validation never assumes the classical consequence
//! that such a norm is min (or max for the dual kind); that rigidity is
//! asserted elsewhere as a property. Evaluation always applies the rule
//! or table as given.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{HvError, Result};
use crate::interval::{IntervalNumber, Rational01};
use crate::report::{CheckReport, Verdict, Witness};

/// Which boundary law a norm must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    /// Unit 1: n(x, 1) = x.
    TNorm,
    /// Unit 0: n(x, 0) = x.
    SNorm,
}

impl NormKind {
    pub fn unit(self) -> Rational01 {
        match self {
            NormKind::TNorm => Rational01::one(),
            NormKind::SNorm => Rational01::zero(),
        }
    }
}

/// Explicit finite table for a binary operation on rationals.
///
/// Lookup is by exact key; commutativity is a checked axiom, not a storage
/// convention, so both (a,b) and (b,a) must be present to pass validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormTable {
    entries: BTreeMap<(Rational01, Rational01), Rational01>,
}

impl NormTable {
    pub fn new(entries: BTreeMap<(Rational01, Rational01), Rational01>) -> Self {
        NormTable { entries }
    }

    /// The min (or max) table over `values` — the canonical passing input.
    pub fn extremum_on(values: &[Rational01], kind: NormKind) -> Self {
        let mut entries = BTreeMap::new();
        for &a in values {
            for &b in values {
                let v = match kind {
                    NormKind::TNorm => a.min(b),
                    NormKind::SNorm => a.max(b),
                };
                entries.insert((a, b), v);
            }
        }
        NormTable { entries }
    }

    pub fn get(&self, a: Rational01, b: Rational01) -> Option<Rational01> {
        self.entries.get(&(a, b)).copied()
    }

    pub fn insert(&mut self, a: Rational01, b: Rational01, v: Rational01) {
        self.entries.insert((a, b), v);
    }

    /// Every rational mentioned by the table, as key or value.
    pub fn mentioned_values(&self) -> Vec<Rational01> {
        let mut set = BTreeSet::new();
        for (&(a, b), &v) in &self.entries {
            set.insert(a);
            set.insert(b);
            set.insert(v);
        }
        set.into_iter().collect()
    }
}

/// How a norm computes its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormRule {
    Min,
    Max,
    /// Ordinary product — the classic non-idempotent t-norm, kept for
    /// negative tests and weakened counterexample hunts.
    Product,
    Table(NormTable),
}

/// A scalar binary operation on [0,1] with a declared boundary kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarNorm {
    pub kind: NormKind,
    pub rule: NormRule,
}

impl ScalarNorm {
    pub fn min_tnorm() -> Self {
        ScalarNorm {
            kind: NormKind::TNorm,
            rule: NormRule::Min,
        }
    }

    pub fn max_snorm() -> Self {
        ScalarNorm {
            kind: NormKind::SNorm,
            rule: NormRule::Max,
        }
    }

    pub fn product_tnorm() -> Self {
        ScalarNorm {
            kind: NormKind::TNorm,
            rule: NormRule::Product,
        }
    }

    /// Applies the rule. Tables error outside their domain.
    pub fn apply(&self, a: Rational01, b: Rational01) -> Result<Rational01> {
        match &self.rule {
            NormRule::Min => Ok(a.min(b)),
            NormRule::Max => Ok(a.max(b)),
            NormRule::Product => Ok(a.mul(b)),
            NormRule::Table(t) => t
                .get(a, b)
                .ok_or_else(|| HvError::NormDomain(a.to_string(), b.to_string())),
        }
    }
}

/// Rounds of closure growth tolerated before validation gives up. A norm
/// that keeps producing fresh values cannot be idempotent, but the loop
/// still needs a hard stop to stay total on adversarial rules.
const CLOSURE_ROUNDS: usize = 64;
const CLOSURE_SIZE_CAP: usize = 4096;

/// Exhaustively validates the idempotent-norm axioms for `n` on the closure
/// of `values` (0 and 1 are always included). Scan order, and therefore the
/// reported witness, is deterministic: idempotency is checked as the value
/// set grows, then commutativity, associativity, monotonicity in each
/// argument, and the boundary law on the closed set.
pub fn validate_idempotent_norm(n: &ScalarNorm, values: &[Rational01]) -> CheckReport {
    const CHECK: &str = "idempotent_norm";
    let fail = |w: Witness| CheckReport::fail(CHECK, w);

    let mut set: BTreeSet<Rational01> = values.iter().copied().collect();
    set.insert(Rational01::zero());
    set.insert(Rational01::one());

    // Idempotency first, so a non-idempotent rule is reported on the input
    // values instead of diverging into closure growth.
    for &x in &set {
        match n.apply(x, x) {
            Err(_) => {
                return fail(domain_witness(x, x));
            }
            Ok(v) if v != x => {
                return fail(
                    Witness::new("idempotency")
                        .with("x", x.to_string(), None)
                        .sides(v.to_string(), x.to_string()),
                );
            }
            Ok(_) => {}
        }
    }

    // Grow to the closure, re-checking idempotency on every new value.
    let mut frontier: Vec<Rational01> = set.iter().copied().collect();
    for _ in 0..CLOSURE_ROUNDS {
        if frontier.is_empty() {
            break;
        }
        let mut fresh = Vec::new();
        let known: Vec<Rational01> = set.iter().copied().collect();
        for &a in &known {
            for &b in &frontier {
                for (x, y) in [(a, b), (b, a)] {
                    match n.apply(x, y) {
                        Err(_) => return fail(domain_witness(x, y)),
                        Ok(v) => {
                            if set.insert(v) {
                                match n.apply(v, v) {
                                    Err(_) => return fail(domain_witness(v, v)),
                                    Ok(w) if w != v => {
                                        return fail(
                                            Witness::new("idempotency")
                                                .with("x", v.to_string(), None)
                                                .sides(w.to_string(), v.to_string()),
                                        );
                                    }
                                    Ok(_) => {}
                                }
                                fresh.push(v);
                            }
                        }
                    }
                }
            }
        }
        if set.len() > CLOSURE_SIZE_CAP {
            return fail(Witness::new("closure_diverged").note(format!(
                "value set exceeded {CLOSURE_SIZE_CAP} elements while closing under the norm"
            )));
        }
        frontier = fresh;
    }
    if !frontier.is_empty() {
        return fail(
            Witness::new("closure_diverged")
                .note(format!("closure did not stabilize within {CLOSURE_ROUNDS} rounds")),
        );
    }

    let vs: Vec<Rational01> = set.iter().copied().collect();
    let ap = |a: Rational01, b: Rational01| n.apply(a, b).expect("closure is total");

    for &x in &vs {
        for &y in &vs {
            let (l, r) = (ap(x, y), ap(y, x));
            if l != r {
                return fail(
                    Witness::new("commutativity")
                        .with("x", x.to_string(), None)
                        .with("y", y.to_string(), None)
                        .sides(l.to_string(), r.to_string()),
                );
            }
        }
    }

    for &x in &vs {
        for &y in &vs {
            for &z in &vs {
                let (l, r) = (ap(x, ap(y, z)), ap(ap(x, y), z));
                if l != r {
                    return fail(
                        Witness::new("associativity")
                            .with("x", x.to_string(), None)
                            .with("y", y.to_string(), None)
                            .with("z", z.to_string(), None)
                            .sides(l.to_string(), r.to_string()),
                    );
                }
            }
        }
    }

    // Monotone in each argument; commutativity makes one direction
    // redundant, but both are scanned so the witness names the argument.
    for (cond, swap) in [("monotonicity_left", false), ("monotonicity_right", true)] {
        for &fixed in &vs {
            for (i, &x) in vs.iter().enumerate() {
                for &x2 in &vs[i..] {
                    // vs is sorted ascending, so x <= x2.
                    let (l, r) = if swap {
                        (ap(fixed, x), ap(fixed, x2))
                    } else {
                        (ap(x, fixed), ap(x2, fixed))
                    };
                    if l > r {
                        return fail(
                            Witness::new(cond)
                                .with("x", x.to_string(), None)
                                .with("x'", x2.to_string(), None)
                                .with("fixed", fixed.to_string(), None)
                                .sides(l.to_string(), r.to_string()),
                        );
                    }
                }
            }
        }
    }

    let unit = n.kind.unit();
    for &x in &vs {
        let v = ap(x, unit);
        if v != x {
            return fail(
                Witness::new("boundary_unit")
                    .with("x", x.to_string(), None)
                    .with("unit", unit.to_string(), None)
                    .sides(v.to_string(), x.to_string()),
            );
        }
    }
    if n.kind == NormKind::SNorm {
        let v = ap(Rational01::one(), Rational01::one());
        if !v.is_one() {
            return fail(
                Witness::new("boundary_top")
                    .with("x", "1", None)
                    .sides(v.to_string(), "1".to_string()),
            );
        }
    }

    CheckReport::pass(CHECK)
}

fn domain_witness(a: Rational01, b: Rational01) -> Witness {
    Witness::new("domain_totality")
        .with("x", a.to_string(), None)
        .with("y", b.to_string(), None)
        .note("norm table has no entry for this pair")
}

/// Componentwise interval lift of a scalar norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalNorm {
    pub scalar: ScalarNorm,
}

impl IntervalNorm {
    pub fn apply(&self, a: IntervalNumber, b: IntervalNumber) -> Result<IntervalNumber> {
        let lo = self.scalar.apply(a.lo(), b.lo())?;
        let hi = self.scalar.apply(a.hi(), b.hi())?;
        // A monotone scalar norm keeps lo <= hi; an invalid one may not,
        // and that surfaces here as an error rather than a bad interval.
        IntervalNumber::new(lo, hi)
    }
}

/// Lifts a scalar norm to intervals, endpoint by endpoint.
pub fn lift_norm(n: ScalarNorm) -> IntervalNorm {
    IntervalNorm { scalar: n }
}

/// The (T, S) pair used by interval-valued predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalNormPair {
    t: IntervalNorm,
    s: IntervalNorm,
}

impl IntervalNormPair {
    /// Pairs a t-norm with an s-norm; mismatched kinds are rejected.
    pub fn new(t: ScalarNorm, s: ScalarNorm) -> Result<Self> {
        if t.kind != NormKind::TNorm {
            return Err(HvError::NormKind("first component must be a t-norm".into()));
        }
        if s.kind != NormKind::SNorm {
            return Err(HvError::NormKind("second component must be an s-norm".into()));
        }
        Ok(IntervalNormPair {
            t: lift_norm(t),
            s: lift_norm(s),
        })
    }

    /// The default pair: componentwise min and max.
    pub fn min_max() -> Self {
        IntervalNormPair::new(ScalarNorm::min_tnorm(), ScalarNorm::max_snorm())
            .expect("min/max kinds are correct")
    }

    pub fn t_apply(&self, a: IntervalNumber, b: IntervalNumber) -> Result<IntervalNumber> {
        self.t.apply(a, b)
    }

    pub fn s_apply(&self, a: IntervalNumber, b: IntervalNumber) -> Result<IntervalNumber> {
        self.s.apply(a, b)
    }
}

/// Validates both components of a pair over a shared value set.
pub fn validate_norm_pair(t: &ScalarNorm, s: &ScalarNorm, values: &[Rational01]) -> CheckReport {
    let rt = validate_idempotent_norm(t, values);
    if !rt.passed() {
        return rt;
    }
    let rs = validate_idempotent_norm(s, values);
    if !rs.passed() {
        return rs;
    }
    let mut report = CheckReport::pass("idempotent_norm_pair");
    report.verdict = Verdict::Pass;
    report
}
