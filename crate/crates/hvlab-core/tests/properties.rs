//! Randomized law-level properties: lattice laws on intervals, cut
//! monotonicity and transport, norm rigidity, classical embeddings,
//! generator determinism, and replay of failure witnesses against the
//! naive model.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::naive::{self, act, meets, product, single, NaiveModule, Set};
use hvlab_core::interval::{inf_set, sup_set};
use hvlab_core::{
    achievable_sets, attained_thresholds, check_hv_module, check_st_hv_submodule_with,
    epsilon_star, gamma_star, generate_hv_modules, generate_ivifs, image_ivifs, lower_cut,
    preimage_ivifs, upper_cut, validate_idempotent_norm, GenConfig, IVFuzzySet, IntervalNormPair,
    IntervalNumber, Ivifs, IvifsTarget, NormKind, NormRule, NormTable, OrdinaryModule, Rational01,
    ScalarNorm, Strictness, Subset, Threshold,
};

fn arb_rational() -> impl Strategy<Value = Rational01> {
    (1i64..=10).prop_flat_map(|d| (0..=d).prop_map(move |n| Rational01::new(n, d).unwrap()))
}

fn arb_interval() -> impl Strategy<Value = IntervalNumber> {
    (arb_rational(), arb_rational())
        .prop_map(|(a, b)| IntervalNumber::new(a.min(b), a.max(b)).unwrap())
}

fn arb_threshold() -> impl Strategy<Value = Threshold> {
    (arb_rational(), arb_rational())
        .prop_map(|(a, b)| Threshold::new(a.min(b), a.max(b)).unwrap())
}

/// One admissible (membership, nonmembership) entry: both intervals over
/// a common denominator with sup M + sup N <= 1.
fn arb_entry() -> impl Strategy<Value = (IntervalNumber, IntervalNumber)> {
    (1i64..=8).prop_flat_map(|d| {
        (0..=d).prop_flat_map(move |mh| {
            (0..=mh, 0..=(d - mh)).prop_flat_map(move |(ml, nh)| {
                (0..=nh).prop_map(move |nl| {
                    let q = |a: i64| Rational01::new(a, d).unwrap();
                    (
                        IntervalNumber::new(q(ml), q(mh)).unwrap(),
                        IntervalNumber::new(q(nl), q(nh)).unwrap(),
                    )
                })
            })
        })
    })
}

fn arb_ivifs(n: usize) -> impl Strategy<Value = Ivifs> {
    prop::collection::vec(arb_entry(), n).prop_map(|entries| {
        let (ms, ns): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        Ivifs::new(IVFuzzySet::new(ms), IVFuzzySet::new(ns)).unwrap()
    })
}

fn sized_ivifs() -> impl Strategy<Value = Ivifs> {
    (1usize..=5).prop_flat_map(arb_ivifs)
}

proptest! {
    #[test]
    fn interval_lattice_laws(a in arb_interval(), b in arb_interval(), c in arb_interval()) {
        prop_assert_eq!(a.meet(b), b.meet(a));
        prop_assert_eq!(a.join(b), b.join(a));
        prop_assert_eq!(a.meet(b).meet(c), a.meet(b.meet(c)));
        prop_assert_eq!(a.join(b).join(c), a.join(b.join(c)));
        prop_assert_eq!(a.meet(a), a);
        prop_assert_eq!(a.join(a), a);
        prop_assert_eq!(a.meet(a.join(b)), a);
        prop_assert_eq!(a.join(a.meet(b)), a);

        prop_assert_eq!(a.leq(b), a.meet(b) == a);
        prop_assert_eq!(a.leq(b), a.join(b) == b);
        prop_assert_eq!(b.geq(a), a.leq(b));
        prop_assert!(a.meet(b).leq(a) && a.leq(a.join(b)));
        prop_assert!(IntervalNumber::bottom().leq(a) && a.leq(IntervalNumber::top()));

        let xs = [a, b, c];
        prop_assert_eq!(inf_set(&xs), Some(a.meet(b).meet(c)));
        prop_assert_eq!(sup_set(&xs), Some(a.join(b).join(c)));
        prop_assert_eq!(inf_set(&[]), None);
    }

    #[test]
    fn cuts_shrink_as_thresholds_rise(a in sized_ivifs(), t1 in arb_threshold(), t2 in arb_threshold()) {
        let lo = Threshold::new(t1.t().min(t2.t()), t1.s().min(t2.s())).unwrap();
        let hi = Threshold::new(t1.t().max(t2.t()), t1.s().max(t2.s())).unwrap();
        prop_assert!(upper_cut(a.membership(), hi).is_subset_of(upper_cut(a.membership(), lo)));
        prop_assert!(lower_cut(a.nonmembership(), lo).is_subset_of(lower_cut(a.nonmembership(), hi)));
    }

    #[test]
    fn preimage_commutes_with_cuts(
        (map, b) in (1usize..=5, 1usize..=4).prop_flat_map(|(src, tgt)| {
            (prop::collection::vec(0..tgt, src), arb_ivifs(tgt))
        }),
        th in arb_threshold(),
    ) {
        let pulled = preimage_ivifs(&map, &b).unwrap();
        let direct_u = upper_cut(pulled.membership(), th);
        let expect_u = {
            let cut = upper_cut(b.membership(), th);
            Subset::from_indices((0..map.len()).filter(|&x| cut.contains(map[x])))
        };
        prop_assert_eq!(direct_u, expect_u);
        let direct_l = lower_cut(pulled.nonmembership(), th);
        let expect_l = {
            let cut = lower_cut(b.nonmembership(), th);
            Subset::from_indices((0..map.len()).filter(|&x| cut.contains(map[x])))
        };
        prop_assert_eq!(direct_l, expect_l);
    }

    #[test]
    fn image_transports_cut_membership(
        (map, tgt, a) in (1usize..=5, 1usize..=4).prop_flat_map(|(src, tgt)| {
            (prop::collection::vec(0..tgt, src), Just(tgt), arb_ivifs(src))
        }),
        th in arb_threshold(),
    ) {
        let pushed = image_ivifs(&map, &a, tgt).unwrap();
        let fwd = |cut: Subset| Subset::from_indices(cut.iter().map(|x| map[x]));
        // Supremum over a fiber dominates each member, so images of cut
        // elements land in the cut of the image; dually for infima.
        prop_assert!(fwd(upper_cut(a.membership(), th))
            .is_subset_of(upper_cut(pushed.membership(), th)));
        prop_assert!(fwd(lower_cut(a.nonmembership(), th))
            .is_subset_of(lower_cut(pushed.nonmembership(), th)));
    }
}

fn extended(values: &[Rational01]) -> Vec<Rational01> {
    let mut vs: Vec<Rational01> = values.to_vec();
    vs.push(Rational01::zero());
    vs.push(Rational01::one());
    vs.sort();
    vs.dedup();
    vs
}

fn extremum_table(vs: &[Rational01], kind: NormKind) -> ScalarNorm {
    ScalarNorm {
        kind,
        rule: NormRule::Table(NormTable::extremum_on(vs, kind)),
    }
}

fn agrees_with_extremum(n: &ScalarNorm, vs: &[Rational01], kind: NormKind) -> bool {
    vs.iter().all(|&a| {
        vs.iter().all(|&b| {
            let want = match kind {
                NormKind::TNorm => a.min(b),
                NormKind::SNorm => a.max(b),
            };
            n.apply(a, b).map(|got| got == want).unwrap_or(false)
        })
    })
}

proptest! {
    /// Any table that passes the idempotent-norm axioms computes min (or
    /// max for the dual kind) on its value set; the extremum table itself
    /// always passes. Mutations either coincide with the extremum or are
    /// rejected.
    #[test]
    fn idempotent_norms_are_rigid(
        values in prop::collection::vec(arb_rational(), 0..6),
        picks in prop::collection::vec((0usize..12, 0usize..12, 0usize..12), 1..3),
        dual in any::<bool>(),
    ) {
        let kind = if dual { NormKind::SNorm } else { NormKind::TNorm };
        let vs = extended(&values);

        let pristine = extremum_table(&vs, kind);
        prop_assert!(validate_idempotent_norm(&pristine, &vs).passed());
        prop_assert!(agrees_with_extremum(&pristine, &vs, kind));

        let mut table = NormTable::extremum_on(&vs, kind);
        for &(i, j, k) in &picks {
            let (a, b, v) = (vs[i % vs.len()], vs[j % vs.len()], vs[k % vs.len()]);
            table.insert(a, b, v);
            table.insert(b, a, v);
        }
        let mutated = ScalarNorm { kind, rule: NormRule::Table(table) };
        if validate_idempotent_norm(&mutated, &vs).passed() {
            prop_assert!(agrees_with_extremum(&mutated, &vs, kind));
        }
    }

    /// The product rule is a t-norm but not idempotent: it passes the
    /// checker exactly when every supplied value is 0 or 1.
    #[test]
    fn product_norm_passes_only_on_booleans(values in prop::collection::vec(arb_rational(), 0..5)) {
        let trivial = values.iter().all(|v| v.is_zero() || v.is_one());
        let verdict = validate_idempotent_norm(&ScalarNorm::product_tnorm(), &values).passed();
        prop_assert_eq!(verdict, trivial);
    }

    /// Singleton-celled structures satisfy every weak axiom, and their
    /// fundamental partitions are discrete: nothing is glued because every
    /// achievable set is a singleton.
    #[test]
    fn classical_modules_embed_discretely(n in 1usize..=6) {
        let ord = OrdinaryModule::cyclic(n).unwrap();
        let hv = ord.to_hv();
        prop_assert!(check_hv_module(&hv).passed());
        let fam = achievable_sets(&hv);
        prop_assert!(epsilon_star(&hv, &fam).is_identity());
        prop_assert!(gamma_star(hv.ring()).unwrap().is_identity());
        prop_assert_eq!(OrdinaryModule::from_hv(&hv).unwrap(), ord);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generation_is_deterministic_per_seed(seed in any::<u64>()) {
        let cfg = GenConfig::random(3, 2, seed, 5);
        let first = generate_hv_modules(&cfg).unwrap();
        let second = generate_hv_modules(&cfg).unwrap();
        prop_assert_eq!(&first, &second);
        for m in &first {
            prop_assert!(check_hv_module(m).passed());
            prop_assert!(m.size() <= 3 && m.ring().size() <= 2);
        }
        if let Some(m) = first.first() {
            let pairs = generate_ivifs(m, &cfg, IvifsTarget::Unconstrained).unwrap();
            let again = generate_ivifs(m, &cfg, IvifsTarget::Unconstrained).unwrap();
            prop_assert_eq!(pairs, again);
        }
    }

    /// The one-witness reading is the stronger one, and when it holds the
    /// whole attained cut family consists of submodules.
    #[test]
    fn strict_reading_dominates(seed in any::<u64>()) {
        let cfg = GenConfig::random(3, 2, seed, 3);
        let norms = IntervalNormPair::min_max();
        for m in generate_hv_modules(&cfg).unwrap() {
            let nm = NaiveModule::of(&m);
            let mut pairs = generate_ivifs(&m, &cfg, IvifsTarget::Unconstrained).unwrap();
            pairs.extend(generate_ivifs(&m, &cfg, IvifsTarget::Passing).unwrap());
            for a in &pairs {
                let strict = check_st_hv_submodule_with(&m, a, &norms, Strictness::Strict)
                    .unwrap()
                    .passed();
                let indep = check_st_hv_submodule_with(&m, a, &norms, Strictness::Independent)
                    .unwrap()
                    .passed();
                if strict {
                    prop_assert!(indep, "strict pass without independent pass");
                    prop_assert!(naive::all_cuts_are_submodules(&nm, a, &attained_thresholds(a)));
                }
            }
        }
    }

    /// Every FAIL witness replays: evaluating the named law at the witness
    /// indices on plain set tables reproduces the violation.
    #[test]
    fn failure_witnesses_replay_on_the_naive_model(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..6 {
            let m = common::raw_random_module(&mut rng);
            let report = check_hv_module(&m);
            if let Some(w) = report.witness {
                let nm = NaiveModule::of(&m);
                prop_assert!(
                    witness_replays(&nm, &w.condition, &w.indices()),
                    "witness for {} did not replay at {:?}",
                    w.condition,
                    w.indices()
                );
            }
        }
    }
}

/// True when the named law indeed fails at the witness indices, evaluated
/// on the plain set tables.
fn witness_replays(nm: &NaiveModule, cond: &str, idx: &[usize]) -> bool {
    let ra = &nm.ring_add;
    let rm = &nm.ring_mul;
    let ma = &nm.module_add;
    let ac = &nm.action;
    let breaks_reproduction = |t: &[Vec<Set>], a: usize| {
        let n = t.len();
        let full = naive::full_set(n);
        let row: Set = (0..n).flat_map(|b| t[a][b].iter().copied()).collect();
        let col: Set = (0..n).flat_map(|b| t[b][a].iter().copied()).collect();
        row != full || col != full
    };
    match (cond, idx) {
        ("ring.add.weak_associativity", &[x, y, z]) => !meets(
            &product(ra, &single(x), &ra[y][z]),
            &product(ra, &ra[x][y], &single(z)),
        ),
        ("ring.mul.weak_associativity", &[x, y, z]) => !meets(
            &product(rm, &single(x), &rm[y][z]),
            &product(rm, &rm[x][y], &single(z)),
        ),
        ("ring.add.reproduction", &[a]) => breaks_reproduction(ra, a),
        ("ring.weak_distributivity_left", &[x, y, z]) => !meets(
            &product(rm, &single(x), &ra[y][z]),
            &product(ra, &rm[x][y], &rm[x][z]),
        ),
        ("ring.weak_distributivity_right", &[x, y, z]) => !meets(
            &product(rm, &ra[x][y], &single(z)),
            &product(ra, &rm[x][z], &rm[y][z]),
        ),
        ("module_add.weak_associativity", &[x, y, z]) => !meets(
            &product(ma, &single(x), &ma[y][z]),
            &product(ma, &ma[x][y], &single(z)),
        ),
        ("module_add.reproduction", &[a]) => breaks_reproduction(ma, a),
        ("module_add.weak_commutativity", &[x, y]) => !meets(&ma[x][y], &ma[y][x]),
        ("axiom_i", &[a, x, y]) => !meets(
            &act(ac, &single(a), &ma[x][y]),
            &product(ma, &ac[a][x], &ac[a][y]),
        ),
        ("axiom_ii", &[a, b, x]) => !meets(
            &act(ac, &ra[a][b], &single(x)),
            &product(ma, &ac[a][x], &ac[b][x]),
        ),
        ("axiom_iii", &[a, b, x]) => !meets(
            &act(ac, &rm[a][b], &single(x)),
            &act(ac, &single(a), &ac[b][x]),
        ),
        _ => false,
    }
}
