//! Agreement between the bitset implementations and the literal
//! set-based reference in `common::naive`, over exhaustive small streams
//! and seeded random ones.

mod common;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::naive::{self, NaiveModule, Set};
use hvlab_core::{
    achievable_sets, all_hv_submodules, attained_thresholds, check_hv_module, check_hv_submodule,
    check_st_hv_submodule_with, epsilon_star, gamma_star, generate_hv_modules, generate_ivifs,
    lower_cut, upper_cut, verify_cut_equivalence, GenConfig, IntervalNormPair, IvifsTarget,
    Strictness, Subset,
};

/// The three nonempty subsets of a two-element carrier, as plain sets.
fn nonempty_sets(n: usize) -> Vec<Set> {
    (1u64..(1 << n))
        .map(|bits| (0..n).filter(|&i| bits & (1 << i) != 0).collect())
        .collect()
}

#[test]
fn naive_enumeration_recounts_the_pinned_stream() {
    // Fully independent recount of the exhaustive |M| <= 2, |R| = 1
    // stream: plain set tables, no bitsets anywhere.
    let trivial = vec![vec![Set::from([0])]];
    let mut count = 0usize;

    // One-point module: a single choice of add and action cell.
    let one = NaiveModule {
        ring_add: trivial.clone(),
        ring_mul: trivial.clone(),
        module_add: vec![vec![Set::from([0])]],
        action: vec![vec![Set::from([0])]],
    };
    if naive::is_hv_module(&one) {
        count += 1;
    }

    let choices = nonempty_sets(2);
    for c00 in &choices {
        for c01 in &choices {
            for c10 in &choices {
                for c11 in &choices {
                    let add = vec![
                        vec![c00.clone(), c01.clone()],
                        vec![c10.clone(), c11.clone()],
                    ];
                    for a0 in &choices {
                        for a1 in &choices {
                            let nm = NaiveModule {
                                ring_add: trivial.clone(),
                                ring_mul: trivial.clone(),
                                module_add: add.clone(),
                                action: vec![vec![a0.clone(), a1.clone()]],
                            };
                            if naive::is_hv_module(&nm) {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    assert_eq!(count, 194);
    let cfg = GenConfig::enumerate(2, 1);
    assert_eq!(generate_hv_modules(&cfg).unwrap().len(), count);
}

#[test]
fn axiom_checker_agrees_with_naive_on_raw_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut valid = 0usize;
    for _ in 0..400 {
        let m = common::raw_random_module(&mut rng);
        let lib = check_hv_module(&m).passed();
        let naive_verdict = naive::is_hv_module(&NaiveModule::of(&m));
        assert_eq!(lib, naive_verdict, "verdicts split on {m:?}");
        valid += usize::from(lib);
    }
    assert!(valid > 0, "the raw stream never produced a valid module");
    assert!(valid < 400, "the raw stream never produced an invalid module");
}

#[test]
fn submodule_checker_agrees_with_naive_on_every_subset() {
    let mut modules = generate_hv_modules(&GenConfig::enumerate(2, 1).with_budget(40)).unwrap();
    modules.extend(generate_hv_modules(&GenConfig::random(3, 2, 77, 25)).unwrap());
    for m in &modules {
        let nm = NaiveModule::of(m);
        let mut listed = Vec::new();
        for s in Subset::nonempty_subsets(m.size()) {
            let lib = check_hv_submodule(m, s).passed();
            assert_eq!(lib, naive::is_hv_submodule(&nm, &naive::to_set(s)));
            if lib {
                listed.push(s);
            }
        }
        assert_eq!(listed, all_hv_submodules(m));
    }
}

#[test]
fn achievable_sets_and_partitions_agree_with_naive() {
    let mut modules = generate_hv_modules(&GenConfig::enumerate(2, 1).with_budget(60)).unwrap();
    modules.extend(generate_hv_modules(&GenConfig::random(4, 2, 99, 20)).unwrap());
    for m in &modules {
        let nm = NaiveModule::of(m);
        let fam = achievable_sets(m);
        let lib_ring: BTreeSet<Set> = fam.ring_sets().iter().map(|&s| naive::to_set(s)).collect();
        let lib_module: BTreeSet<Set> = fam.module_sets().iter().map(|&s| naive::to_set(s)).collect();
        assert_eq!(lib_ring, naive::achievable_ring_sets(&nm));
        assert_eq!(lib_module, naive::achievable_module_sets(&nm));

        let eps = epsilon_star(m, &fam);
        let lib_classes: Vec<Set> = eps.classes().iter().map(|&c| naive::to_set(c)).collect();
        assert_eq!(lib_classes, naive::epsilon_partition(&nm));

        let gam = gamma_star(m.ring()).unwrap();
        let lib_ring_classes: Vec<Set> = gam.classes().iter().map(|&c| naive::to_set(c)).collect();
        assert_eq!(lib_ring_classes, naive::gamma_partition(&nm));
    }
}

#[test]
fn cut_families_agree_with_naive_scans() {
    let modules = generate_hv_modules(&GenConfig::random(4, 2, 5, 10)).unwrap();
    for (i, m) in modules.iter().enumerate() {
        let cfg = GenConfig::random(4, 2, 100 + i as u64, 6);
        for a in generate_ivifs(m, &cfg, IvifsTarget::Unconstrained).unwrap() {
            let grid = attained_thresholds(&a);
            for &th in &grid {
                assert_eq!(
                    naive::to_set(upper_cut(a.membership(), th)),
                    naive::upper_cut(&a, th)
                );
                assert_eq!(
                    naive::to_set(lower_cut(a.nonmembership(), th)),
                    naive::lower_cut(&a, th)
                );
            }
        }
    }
}

#[test]
fn independent_reading_matches_the_naive_cut_criterion() {
    let norms = IntervalNormPair::min_max();
    let modules = generate_hv_modules(&GenConfig::random(3, 2, 31, 25)).unwrap();
    let mut passing_seen = 0usize;
    let mut failing_seen = 0usize;
    for (i, m) in modules.iter().enumerate() {
        let nm = NaiveModule::of(m);
        let cfg = GenConfig::random(3, 2, 500 + i as u64, 4);
        let mut pairs = generate_ivifs(m, &cfg, IvifsTarget::Unconstrained).unwrap();
        pairs.extend(generate_ivifs(m, &cfg.clone().with_budget(2), IvifsTarget::Passing).unwrap());
        for a in &pairs {
            let naive_q = naive::all_cuts_are_submodules(&nm, a, &attained_thresholds(a));
            let p = check_st_hv_submodule_with(m, a, &norms, Strictness::Independent)
                .unwrap()
                .passed();
            assert_eq!(
                p, naive_q,
                "independent predicate and naive cut criterion split on module {i}"
            );
            let v = verify_cut_equivalence(m, a, &norms, Strictness::Independent).unwrap();
            assert_eq!(v.predicate, p);
            assert_eq!(v.cuts, naive_q);
            assert!(v.equivalent);
            passing_seen += usize::from(naive_q);
            failing_seen += usize::from(!naive_q);
        }
    }
    assert!(passing_seen > 0, "stream never exercised the passing side");
    assert!(failing_seen > 0, "stream never exercised the failing side");
}
