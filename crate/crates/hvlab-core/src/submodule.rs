//! Fuzzy submodule predicates and the level-cut equivalence verifier.
//!
//! Three predicates live here: the scalar one (conditions i–iv), the
//! interval-valued membership/nonmembership one against a validated norm
//! pair (conditions c1–c4), and its counterpart on ordinary modules
//! (conditions i–iii). The verifier ties the second predicate to the
//! structural cut criterion: the predicate holds exactly when every
//! nonempty upper cut of the membership side and every nonempty lower cut
//! of the nonmembership side is a submodule.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;

use crate::carrier::Subset;
use crate::error::{HvError, Result};
use crate::fuzzy::{attained_thresholds, lower_cut, upper_cut, IVFuzzySet, Ivifs, ScalarFuzzySet, Threshold};
use crate::hyper::{check_hv_submodule, HvModule};
use crate::interval::Rational01;
use crate::norm::IntervalNormPair;
use crate::ordinary::OrdinaryModule;
use crate::report::{CheckReport, Verdict, Witness};

/// How the existential conditions c2/c3 quantify their witness.
///
/// `Strict` demands one element satisfying the membership and the
/// nonmembership inequality simultaneously; `Independent` allows a
/// different element for each. The readings genuinely differ (see the
/// strict-gap fixture), and only the independent one is equivalent to the
/// cut criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    #[default]
    Strict,
    Independent,
}

impl FromStr for Strictness {
    type Err = HvError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Strictness::Strict),
            "independent" => Ok(Strictness::Independent),
            other => Err(HvError::Parse {
                path: "strictness".to_string(),
                detail: format!("expected 'strict' or 'independent', got '{other}'"),
            }),
        }
    }
}

fn shape_guard(got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(HvError::FuzzyShape { got, want });
    }
    Ok(())
}

fn finish(check: &str, conditions: Vec<(&'static str, Option<Witness>)>) -> CheckReport {
    let all_ok = conditions.iter().all(|(_, w)| w.is_none());
    let witness = conditions.iter().find_map(|(_, w)| w.clone());
    let mut report = CheckReport {
        check: check.to_string(),
        verdict: Verdict::from_bool(all_ok),
        witness,
        properties: Default::default(),
        skip_reason: None,
    };
    for (name, w) in &conditions {
        report.properties.insert((*name).to_string(), w.is_none());
    }
    report
}

/// Scalar predicate: grades in [0,1], compared under min.
///
/// Conditions: (i) min(mu(x), mu(y)) bounds every grade on x+y from
/// below; (ii)/(iii) every x reaches back across a+y (resp. z+a) through
/// some element graded at least min(mu(a), mu(x)); (iv) the action never
/// lowers grades.
pub fn check_fuzzy_hv_submodule(m: &HvModule, f: &ScalarFuzzySet) -> Result<CheckReport> {
    shape_guard(f.len(), m.size())?;
    let n = m.size();
    let c = m.carrier();
    let mu = |i: usize| f.value(i);
    let floor_over = |s: Subset| s.iter().map(mu).reduce(Rational01::min).unwrap();

    let cond_i = || -> Option<Witness> {
        for x in 0..n {
            for y in 0..n {
                let cell = m.add().cell(x, y);
                let need = mu(x).min(mu(y));
                let got = floor_over(cell);
                if !(need <= got) {
                    return Some(
                        Witness::new("i")
                            .with("x", c.label(x), Some(x))
                            .with("y", c.label(y), Some(y))
                            .sides(need.to_string(), got.to_string())
                            .note(format!("lowest grade on x+y = {} undercuts min(mu(x), mu(y))", c.render(cell))),
                    );
                }
            }
        }
        None
    };

    let translation = |cond: &'static str, solve_left: bool| -> Option<Witness> {
        for x in 0..n {
            for a in 0..n {
                let need = mu(a).min(mu(x));
                let candidates: Vec<usize> = (0..n)
                    .filter(|&y| {
                        let cell = if solve_left { m.add().cell(a, y) } else { m.add().cell(y, a) };
                        cell.contains(x)
                    })
                    .collect();
                if !candidates.iter().any(|&y| need <= mu(y)) {
                    let side = if solve_left { "a+y" } else { "y+a" };
                    return Some(
                        Witness::new(cond)
                            .with("x", c.label(x), Some(x))
                            .with("a", c.label(a), Some(a))
                            .sides(need.to_string(), c.render(Subset::from_indices(candidates)))
                            .note(format!("no y with x in {side} is graded at least min(mu(a), mu(x))")),
                    );
                }
            }
        }
        None
    };

    let cond_iv = || -> Option<Witness> {
        for r in 0..m.ring().size() {
            for x in 0..n {
                let cell = m.action().cell(r, x);
                let got = floor_over(cell);
                if !(mu(x) <= got) {
                    return Some(
                        Witness::new("iv")
                            .with("r", m.ring().carrier().label(r), Some(r))
                            .with("x", c.label(x), Some(x))
                            .sides(mu(x).to_string(), got.to_string())
                            .note(format!("lowest grade on r.x = {} undercuts mu(x)", c.render(cell))),
                    );
                }
            }
        }
        None
    };

    Ok(finish(
        "fuzzy_submodule",
        vec![
            ("i", cond_i()),
            ("ii", translation("ii", true)),
            ("iii", translation("iii", false)),
            ("iv", cond_iv()),
        ],
    ))
}

/// Membership/nonmembership predicate against a validated norm pair.
/// Uses the strict reading of the existential conditions.
pub fn check_st_hv_submodule(m: &HvModule, a: &Ivifs, norms: &IntervalNormPair) -> Result<CheckReport> {
    check_st_hv_submodule_with(m, a, norms, Strictness::Strict)
}

/// As `check_st_hv_submodule`, with an explicit witness reading.
pub fn check_st_hv_submodule_with(
    m: &HvModule,
    a: &Ivifs,
    norms: &IntervalNormPair,
    strictness: Strictness,
) -> Result<CheckReport> {
    shape_guard(a.len(), m.size())?;
    let n = m.size();
    let c = m.carrier();

    // c1: on every cell x+y the membership floor T(M(x), M(y)) bounds all
    // values from below and the nonmembership ceiling S(N(x), N(y)) from
    // above.
    let mut c1 = None;
    'c1: for x in 0..n {
        for y in 0..n {
            let cell = m.add().cell(x, y);
            let tv = norms.t_apply(a.m(x), a.m(y))?;
            let inf_m = a.membership().inf_over(cell).unwrap();
            if !tv.leq(inf_m) {
                c1 = Some(
                    Witness::new("c1")
                        .with("x", c.label(x), Some(x))
                        .with("y", c.label(y), Some(y))
                        .sides(tv.to_string(), inf_m.to_string())
                        .note(format!("membership floor violated on x+y = {}", c.render(cell))),
                );
                break 'c1;
            }
            let sv = norms.s_apply(a.n(x), a.n(y))?;
            let sup_n = a.nonmembership().sup_over(cell).unwrap();
            if !sup_n.leq(sv) {
                c1 = Some(
                    Witness::new("c1")
                        .with("x", c.label(x), Some(x))
                        .with("y", c.label(y), Some(y))
                        .sides(sup_n.to_string(), sv.to_string())
                        .note(format!("nonmembership ceiling violated on x+y = {}", c.render(cell))),
                );
                break 'c1;
            }
        }
    }

    // c2/c3: every x is reachable from a through a witness element whose
    // membership clears T(M(a), M(x)) and whose nonmembership stays under
    // S(N(a), N(x)).
    let translation = |cond: &'static str, solve_left: bool| -> Result<Option<Witness>> {
        for x in 0..n {
            for aa in 0..n {
                let tv = norms.t_apply(a.m(aa), a.m(x))?;
                let sv = norms.s_apply(a.n(aa), a.n(x))?;
                let ys: Vec<usize> = (0..n)
                    .filter(|&y| {
                        let cell = if solve_left { m.add().cell(aa, y) } else { m.add().cell(y, aa) };
                        cell.contains(x)
                    })
                    .collect();
                let m_ok = |y: usize| tv.leq(a.m(y));
                let n_ok = |y: usize| a.n(y).leq(sv);
                let ok = match strictness {
                    Strictness::Strict => ys.iter().any(|&y| m_ok(y) && n_ok(y)),
                    Strictness::Independent => {
                        ys.iter().any(|&y| m_ok(y)) && ys.iter().any(|&y| n_ok(y))
                    }
                };
                if !ok {
                    let side = if solve_left { "a+y" } else { "y+a" };
                    let reading = match strictness {
                        Strictness::Strict => "one y must satisfy both bounds",
                        Strictness::Independent => "each bound needs some y",
                    };
                    return Ok(Some(
                        Witness::new(cond)
                            .with("x", c.label(x), Some(x))
                            .with("a", c.label(aa), Some(aa))
                            .sides(tv.to_string(), sv.to_string())
                            .note(format!(
                                "no admissible y with x in {side} among {} ({reading})",
                                c.render(Subset::from_indices(ys.iter().copied()))
                            )),
                    ));
                }
            }
        }
        Ok(None)
    };
    let c2 = translation("c2", true)?;
    let c3 = translation("c3", false)?;

    // c4: acting by any scalar keeps membership at least M(x) and
    // nonmembership at most N(x) across the whole cell r.x.
    let mut c4 = None;
    'c4: for r in 0..m.ring().size() {
        for x in 0..n {
            let cell = m.action().cell(r, x);
            let inf_m = a.membership().inf_over(cell).unwrap();
            if !a.m(x).leq(inf_m) {
                c4 = Some(
                    Witness::new("c4")
                        .with("r", m.ring().carrier().label(r), Some(r))
                        .with("x", c.label(x), Some(x))
                        .sides(a.m(x).to_string(), inf_m.to_string())
                        .note(format!("membership floor violated on r.x = {}", c.render(cell))),
                );
                break 'c4;
            }
            let sup_n = a.nonmembership().sup_over(cell).unwrap();
            if !sup_n.leq(a.n(x)) {
                c4 = Some(
                    Witness::new("c4")
                        .with("r", m.ring().carrier().label(r), Some(r))
                        .with("x", c.label(x), Some(x))
                        .sides(sup_n.to_string(), a.n(x).to_string())
                        .note(format!("nonmembership ceiling violated on r.x = {}", c.render(cell))),
                );
                break 'c4;
            }
        }
    }

    let mut report = finish(
        "st_submodule",
        vec![("c1", c1), ("c2", c2), ("c3", c3), ("c4", c4)],
    );
    report
        .properties
        .insert("strict_mode".to_string(), strictness == Strictness::Strict);
    Ok(report)
}

/// The predicate on an ordinary module: (i) the zero carries membership
/// [1,1] and nonmembership [0,0]; (ii) closure under difference respects
/// the norm bounds; (iii) the action never worsens either side.
pub fn check_st_submodule_ordinary(
    m: &OrdinaryModule,
    a: &Ivifs,
    norms: &IntervalNormPair,
) -> Result<CheckReport> {
    shape_guard(a.len(), m.size())?;
    let n = m.size();
    let c = m.group().carrier();
    let top = crate::interval::IntervalNumber::top();
    let bottom = crate::interval::IntervalNumber::bottom();

    let z = m.zero();
    let cond_i = if a.m(z) != top {
        Some(
            Witness::new("i")
                .with("0", c.label(z), Some(z))
                .sides(a.m(z).to_string(), top.to_string())
                .note("membership at the zero element must be the top interval"),
        )
    } else if a.n(z) != bottom {
        Some(
            Witness::new("i")
                .with("0", c.label(z), Some(z))
                .sides(a.n(z).to_string(), bottom.to_string())
                .note("nonmembership at the zero element must be the bottom interval"),
        )
    } else {
        None
    };

    let mut cond_ii = None;
    'ii: for x in 0..n {
        for y in 0..n {
            let d = m.group().sub(x, y);
            let tv = norms.t_apply(a.m(x), a.m(y))?;
            if !tv.leq(a.m(d)) {
                cond_ii = Some(
                    Witness::new("ii")
                        .with("x", c.label(x), Some(x))
                        .with("y", c.label(y), Some(y))
                        .with("x-y", c.label(d), Some(d))
                        .sides(tv.to_string(), a.m(d).to_string())
                        .note("membership of the difference undercuts the floor"),
                );
                break 'ii;
            }
            let sv = norms.s_apply(a.n(x), a.n(y))?;
            if !a.n(d).leq(sv) {
                cond_ii = Some(
                    Witness::new("ii")
                        .with("x", c.label(x), Some(x))
                        .with("y", c.label(y), Some(y))
                        .with("x-y", c.label(d), Some(d))
                        .sides(a.n(d).to_string(), sv.to_string())
                        .note("nonmembership of the difference exceeds the ceiling"),
                );
                break 'ii;
            }
        }
    }

    let mut cond_iii = None;
    'iii: for r in 0..m.ring().size() {
        for x in 0..n {
            let rx = m.act(r, x);
            if !a.m(x).leq(a.m(rx)) {
                cond_iii = Some(
                    Witness::new("iii")
                        .with("r", m.ring().carrier().label(r), Some(r))
                        .with("x", c.label(x), Some(x))
                        .sides(a.m(x).to_string(), a.m(rx).to_string())
                        .note("membership drops under the action"),
                );
                break 'iii;
            }
            if !a.n(rx).leq(a.n(x)) {
                cond_iii = Some(
                    Witness::new("iii")
                        .with("r", m.ring().carrier().label(r), Some(r))
                        .with("x", c.label(x), Some(x))
                        .sides(a.n(rx).to_string(), a.n(x).to_string())
                        .note("nonmembership rises under the action"),
                );
                break 'iii;
            }
        }
    }

    Ok(finish(
        "st_submodule_ordinary",
        vec![("i", cond_i), ("ii", cond_ii), ("iii", cond_iii)],
    ))
}

/// For every attained threshold, the upper cut of the membership side and
/// the lower cut of the nonmembership side, in grid order.
pub fn cut_signature(a: &Ivifs) -> Vec<(Threshold, Subset, Subset)> {
    attained_thresholds(a)
        .into_iter()
        .map(|th| (th, upper_cut(a.membership(), th), lower_cut(a.nonmembership(), th)))
        .collect()
}

/// Distinct nonempty cuts of one side over a threshold grid, each paired
/// with the first threshold producing it.
pub fn distinct_cuts(f: &IVFuzzySet, grid: &[Threshold], upper: bool) -> Vec<(Threshold, Subset)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &th in grid {
        let cut = if upper { upper_cut(f, th) } else { lower_cut(f, th) };
        if !cut.is_empty() && seen.insert(cut) {
            out.push((th, cut));
        }
    }
    out
}

/// Outcome of the cut-equivalence verification: the predicate verdict P,
/// the cut-family verdict Q, whether they agree, and a witness for the
/// disagreeing side when they do not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutEquivalence {
    pub predicate: bool,
    pub cuts: bool,
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CutEquivalence {
    pub fn passed(&self) -> bool {
        self.equivalent
    }
}

/// Verifies that the membership/nonmembership predicate agrees with the
/// cut criterion: P = predicate verdict, Q = "every nonempty upper cut of
/// the membership side and every nonempty lower cut of the nonmembership
/// side is a submodule", quantified over the attained threshold grid.
/// Empty cuts are skipped. Returns pass exactly when P and Q agree.
pub fn verify_cut_equivalence(
    m: &HvModule,
    a: &Ivifs,
    norms: &IntervalNormPair,
    strictness: Strictness,
) -> Result<CutEquivalence> {
    let predicate_report = check_st_hv_submodule_with(m, a, norms, strictness)?;
    let predicate = predicate_report.passed();

    let grid = attained_thresholds(a);
    let mut cut_witness = None;
    'families: for (family, f, upper) in [
        ("upper", a.membership(), true),
        ("lower", a.nonmembership(), false),
    ] {
        for (th, cut) in distinct_cuts(f, &grid, upper) {
            let rep = check_hv_submodule(m, cut);
            if !rep.passed() {
                let inner = rep
                    .witness
                    .map(|w| w.condition)
                    .unwrap_or_else(|| "unknown".to_string());
                cut_witness = Some(
                    Witness::new("cut_submodule")
                        .with("t", th.t().to_string(), None)
                        .with("s", th.s().to_string(), None)
                        .with("cut", m.carrier().render(cut), None)
                        .note(format!("{family} cut fails {inner}")),
                );
                break 'families;
            }
        }
    }
    let cuts = cut_witness.is_none();

    let equivalent = predicate == cuts;
    let witness = if equivalent {
        None
    } else if predicate {
        cut_witness
    } else {
        predicate_report.witness
    };
    Ok(CutEquivalence {
        predicate,
        cuts,
        equivalent,
        witness,
    })
}
