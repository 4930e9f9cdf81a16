//! Set-based reference implementations used to cross-check the bitset
//! algorithms. Everything here favours the most literal formulation over
//! speed: subsets are `BTreeSet<usize>`, products are double loops, and
//! partitions are grown by merging overlapping classes until stable.

use std::collections::BTreeSet;

use hvlab_core::{HvModule, Ivifs, Subset, Threshold};

pub type Set = BTreeSet<usize>;

pub fn to_set(s: Subset) -> Set {
    s.iter().collect()
}

pub fn full_set(n: usize) -> Set {
    (0..n).collect()
}

/// A module re-expressed as plain set tables.
pub struct NaiveModule {
    pub ring_add: Vec<Vec<Set>>,
    pub ring_mul: Vec<Vec<Set>>,
    pub module_add: Vec<Vec<Set>>,
    /// Indexed `[r][x]`.
    pub action: Vec<Vec<Set>>,
}

fn square_table(n: usize, cell: impl Fn(usize, usize) -> Subset) -> Vec<Vec<Set>> {
    (0..n)
        .map(|a| (0..n).map(|b| to_set(cell(a, b))).collect())
        .collect()
}

impl NaiveModule {
    pub fn of(m: &HvModule) -> Self {
        let rn = m.ring().size();
        let mn = m.size();
        NaiveModule {
            ring_add: square_table(rn, |a, b| m.ring().add().cell(a, b)),
            ring_mul: square_table(rn, |a, b| m.ring().mul().cell(a, b)),
            module_add: square_table(mn, |a, b| m.add().cell(a, b)),
            action: (0..rn)
                .map(|r| (0..mn).map(|x| to_set(m.action().cell(r, x))).collect())
                .collect(),
        }
    }

    pub fn ring_size(&self) -> usize {
        self.ring_add.len()
    }

    pub fn module_size(&self) -> usize {
        self.module_add.len()
    }
}

pub fn product(table: &[Vec<Set>], a: &Set, b: &Set) -> Set {
    let mut out = Set::new();
    for &x in a {
        for &y in b {
            out.extend(table[x][y].iter().copied());
        }
    }
    out
}

pub fn act(action: &[Vec<Set>], s: &Set, a: &Set) -> Set {
    let mut out = Set::new();
    for &r in s {
        for &x in a {
            out.extend(action[r][x].iter().copied());
        }
    }
    out
}

pub fn single(x: usize) -> Set {
    Set::from([x])
}

pub fn meets(a: &Set, b: &Set) -> bool {
    a.intersection(b).next().is_some()
}

pub fn weak_associative(table: &[Vec<Set>]) -> bool {
    let n = table.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let l = product(table, &single(x), &table[y][z]);
                let r = product(table, &table[x][y], &single(z));
                meets(&l, &r)
            })
        })
    })
}

pub fn reproduction(table: &[Vec<Set>]) -> bool {
    let n = table.len();
    let all = full_set(n);
    (0..n).all(|a| {
        let row: Set = (0..n).flat_map(|b| table[a][b].iter().copied()).collect();
        let col: Set = (0..n).flat_map(|b| table[b][a].iter().copied()).collect();
        row == all && col == all
    })
}

pub fn weak_commutative(table: &[Vec<Set>]) -> bool {
    let n = table.len();
    (0..n).all(|x| (0..n).all(|y| meets(&table[x][y], &table[y][x])))
}

pub fn is_hv_ring(ring_add: &[Vec<Set>], ring_mul: &[Vec<Set>]) -> bool {
    let n = ring_add.len();
    weak_associative(ring_add)
        && reproduction(ring_add)
        && weak_associative(ring_mul)
        && (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let dl = meets(
                        &product(ring_mul, &single(x), &ring_add[y][z]),
                        &product(ring_add, &ring_mul[x][y], &ring_mul[x][z]),
                    );
                    let dr = meets(
                        &product(ring_mul, &ring_add[x][y], &single(z)),
                        &product(ring_add, &ring_mul[x][z], &ring_mul[y][z]),
                    );
                    dl && dr
                })
            })
        })
}

pub fn is_hv_module(nm: &NaiveModule) -> bool {
    let rn = nm.ring_size();
    let mn = nm.module_size();
    if !is_hv_ring(&nm.ring_add, &nm.ring_mul) {
        return false;
    }
    if !(weak_associative(&nm.module_add)
        && reproduction(&nm.module_add)
        && weak_commutative(&nm.module_add))
    {
        return false;
    }
    // a(x+y) meets ax + ay.
    let axiom_i = (0..rn).all(|a| {
        (0..mn).all(|x| {
            (0..mn).all(|y| {
                let l = act(&nm.action, &single(a), &nm.module_add[x][y]);
                let r = product(&nm.module_add, &nm.action[a][x], &nm.action[a][y]);
                meets(&l, &r)
            })
        })
    });
    // (a+b)x meets ax + bx.
    let axiom_ii = (0..rn).all(|a| {
        (0..rn).all(|b| {
            (0..mn).all(|x| {
                let l = act(&nm.action, &nm.ring_add[a][b], &single(x));
                let r = product(&nm.module_add, &nm.action[a][x], &nm.action[b][x]);
                meets(&l, &r)
            })
        })
    });
    // (ab)x meets a(bx).
    let axiom_iii = (0..rn).all(|a| {
        (0..rn).all(|b| {
            (0..mn).all(|x| {
                let l = act(&nm.action, &nm.ring_mul[a][b], &single(x));
                let r = act(&nm.action, &single(a), &nm.action[b][x]);
                meets(&l, &r)
            })
        })
    });
    axiom_i && axiom_ii && axiom_iii
}

/// Closure + reproduction inside `s` + stability under the whole ring.
pub fn is_hv_submodule(nm: &NaiveModule, s: &Set) -> bool {
    if s.is_empty() {
        return false;
    }
    let closed = s
        .iter()
        .all(|&a| s.iter().all(|&b| nm.module_add[a][b].is_subset(s)));
    if !closed {
        return false;
    }
    let reproduces = s.iter().all(|&a| {
        let row: Set = s.iter().flat_map(|&b| nm.module_add[a][b].iter().copied()).collect();
        let col: Set = s.iter().flat_map(|&b| nm.module_add[b][a].iter().copied()).collect();
        row == *s && col == *s
    });
    if !reproduces {
        return false;
    }
    (0..nm.ring_size()).all(|r| s.iter().all(|&x| nm.action[r][x].is_subset(s)))
}

/// All sets of ring elements reachable from singletons by finite + and *
/// combinations, grown to a fixed point.
pub fn achievable_ring_sets(nm: &NaiveModule) -> BTreeSet<Set> {
    let mut family: BTreeSet<Set> = (0..nm.ring_size()).map(single).collect();
    loop {
        let snapshot: Vec<Set> = family.iter().cloned().collect();
        let before = family.len();
        for u in &snapshot {
            for v in &snapshot {
                family.insert(product(&nm.ring_add, u, v));
                family.insert(product(&nm.ring_mul, u, v));
            }
        }
        if family.len() == before {
            return family;
        }
    }
}

/// Module-side achievable sets: closed under + and under the action of
/// every achievable ring set.
pub fn achievable_module_sets(nm: &NaiveModule) -> BTreeSet<Set> {
    let ring_sets = achievable_ring_sets(nm);
    let mut family: BTreeSet<Set> = (0..nm.module_size()).map(single).collect();
    loop {
        let snapshot: Vec<Set> = family.iter().cloned().collect();
        let before = family.len();
        for u in &snapshot {
            for v in &snapshot {
                family.insert(product(&nm.module_add, u, v));
            }
            for s in &ring_sets {
                family.insert(act(&nm.action, s, u));
            }
        }
        if family.len() == before {
            return family;
        }
    }
}

/// Partition induced by gluing every achievable set, merged to stability
/// and normalized by ascending least element.
fn partition_from(n: usize, sets: &BTreeSet<Set>) -> Vec<Set> {
    let mut classes: Vec<Set> = (0..n).map(single).collect();
    loop {
        let mut changed = false;
        for s in sets {
            let touching: Vec<usize> = classes
                .iter()
                .enumerate()
                .filter(|(_, c)| meets(c, s))
                .map(|(i, _)| i)
                .collect();
            if touching.len() > 1 {
                let mut merged = Set::new();
                for &i in touching.iter().rev() {
                    merged.extend(classes.remove(i));
                }
                classes.push(merged);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    classes.sort_by_key(|c| *c.iter().next().expect("classes are nonempty"));
    classes
}

pub fn epsilon_partition(nm: &NaiveModule) -> Vec<Set> {
    partition_from(nm.module_size(), &achievable_module_sets(nm))
}

pub fn gamma_partition(nm: &NaiveModule) -> Vec<Set> {
    partition_from(nm.ring_size(), &achievable_ring_sets(nm))
}

/// Upper cut by direct scan: both membership endpoints clear the
/// threshold.
pub fn upper_cut(a: &Ivifs, th: Threshold) -> Set {
    (0..a.len())
        .filter(|&x| a.m(x).lo() >= th.t() && a.m(x).hi() >= th.s())
        .collect()
}

/// Lower cut by direct scan: both nonmembership endpoints stay under the
/// threshold.
pub fn lower_cut(a: &Ivifs, th: Threshold) -> Set {
    (0..a.len())
        .filter(|&x| a.n(x).lo() <= th.t() && a.n(x).hi() <= th.s())
        .collect()
}

/// The cut criterion evaluated naively: every nonempty cut of either
/// family, over every attained threshold, is a submodule.
pub fn all_cuts_are_submodules(nm: &NaiveModule, a: &Ivifs, grid: &[Threshold]) -> bool {
    grid.iter().all(|&th| {
        let u = upper_cut(a, th);
        let l = lower_cut(a, th);
        (u.is_empty() || is_hv_submodule(nm, &u)) && (l.is_empty() || is_hv_submodule(nm, &l))
    })
}
