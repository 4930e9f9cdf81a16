//! Ordinary (single-valued) rings, abelian groups and modules.
//!
//! These are the classical structures that hyperstructure constructions
//! start from and that fundamental quotients collapse back to. All axioms
//! are verified exhaustively at construction; a value of one of these
//! types is therefore known-good, and later code leans on that.

use crate::carrier::{Carrier, Subset};
use crate::error::{HvError, Result};
use crate::hyper::{ExternalOp, HyperOp, HvModule, HvRing};

fn table_get(table: &[usize], n: usize, a: usize, b: usize) -> usize {
    table[a * n + b]
}

fn check_table_shape(table: &[usize], n: usize, context: &'static str) -> Result<()> {
    if table.len() != n * n {
        return Err(HvError::TableShape {
            context: context.to_string(),
            got: table.len(),
            want: n * n,
        });
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= n) {
        return Err(HvError::CellOutOfRange {
            context: context.to_string(),
            index: bad,
            size: n,
        });
    }
    Ok(())
}

/// Finds the two-sided identity of a total binary operation, if any.
fn find_identity(table: &[usize], n: usize) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| table_get(table, n, e, x) == x && table_get(table, n, x, e) == x))
}

/// Derives the inverse map of an operation known to have identity `zero`.
fn derive_inverses(table: &[usize], n: usize, zero: usize, kind: &'static str) -> Result<Vec<usize>> {
    (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| table_get(table, n, x, y) == zero && table_get(table, n, y, x) == zero)
                .ok_or_else(|| HvError::InvalidStructure {
                    kind,
                    detail: format!("element {x} has no additive inverse"),
                })
        })
        .collect()
}

fn check_associative(table: &[usize], n: usize, kind: &'static str, op_name: &str) -> Result<()> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = table_get(table, n, x, table_get(table, n, y, z));
                let r = table_get(table, n, table_get(table, n, x, y), z);
                if l != r {
                    return Err(HvError::InvalidStructure {
                        kind,
                        detail: format!("{op_name} is not associative at ({x}, {y}, {z})"),
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_commutative(table: &[usize], n: usize, kind: &'static str, op_name: &str) -> Result<()> {
    for x in 0..n {
        for y in 0..n {
            if table_get(table, n, x, y) != table_get(table, n, y, x) {
                return Err(HvError::InvalidStructure {
                    kind,
                    detail: format!("{op_name} is not commutative at ({x}, {y})"),
                });
            }
        }
    }
    Ok(())
}

/// A classical abelian group on a labelled carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryGroup {
    carrier: Carrier,
    add: Vec<usize>,
    zero: usize,
    neg: Vec<usize>,
}

impl OrdinaryGroup {
    pub fn new(carrier: Carrier, add: Vec<usize>) -> Result<Self> {
        const KIND: &str = "abelian group";
        let n = carrier.size();
        check_table_shape(&add, n, "group.add")?;
        check_associative(&add, n, KIND, "+")?;
        check_commutative(&add, n, KIND, "+")?;
        let zero = find_identity(&add, n).ok_or(HvError::InvalidStructure {
            kind: KIND,
            detail: "no additive identity".to_string(),
        })?;
        let neg = derive_inverses(&add, n, zero, KIND)?;
        Ok(OrdinaryGroup {
            carrier,
            add,
            zero,
            neg,
        })
    }

    /// The cyclic group Z_n with labels "0".."n-1".
    pub fn cyclic(n: usize) -> Result<Self> {
        let carrier = Carrier::numbered(n)?;
        let mut add = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
            }
        }
        OrdinaryGroup::new(carrier, add)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        table_get(&self.add, self.size(), a, b)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }
}

/// A classical (not necessarily unital) ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryRing {
    group: OrdinaryGroup,
    mul: Vec<usize>,
}

impl OrdinaryRing {
    pub fn new(carrier: Carrier, add: Vec<usize>, mul: Vec<usize>) -> Result<Self> {
        const KIND: &str = "ring";
        let n = carrier.size();
        check_table_shape(&mul, n, "ring.mul")?;
        let group = OrdinaryGroup::new(carrier, add)?;
        check_associative(&mul, n, KIND, "*")?;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let yz = group.add(y, z);
                    let l = table_get(&mul, n, x, yz);
                    let r = group.add(table_get(&mul, n, x, y), table_get(&mul, n, x, z));
                    if l != r {
                        return Err(HvError::InvalidStructure {
                            kind: KIND,
                            detail: format!("left distributivity fails at ({x}, {y}, {z})"),
                        });
                    }
                    let xy = group.add(x, y);
                    let l = table_get(&mul, n, xy, z);
                    let r = group.add(table_get(&mul, n, x, z), table_get(&mul, n, y, z));
                    if l != r {
                        return Err(HvError::InvalidStructure {
                            kind: KIND,
                            detail: format!("right distributivity fails at ({x}, {y}, {z})"),
                        });
                    }
                }
            }
        }
        Ok(OrdinaryRing { group, mul })
    }

    /// The ring Z_n with modular addition and multiplication.
    pub fn modular(n: usize) -> Result<Self> {
        let carrier = Carrier::numbered(n)?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
                mul.push((a * b) % n);
            }
        }
        OrdinaryRing::new(carrier, add, mul)
    }

    pub fn carrier(&self) -> &Carrier {
        self.group.carrier()
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.group.add(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        table_get(&self.mul, self.size(), a, b)
    }

    pub fn zero(&self) -> usize {
        self.group.zero()
    }

    pub fn neg(&self, x: usize) -> usize {
        self.group.neg(x)
    }

    pub fn group(&self) -> &OrdinaryGroup {
        &self.group
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    /// Elements commuting with the whole ring under multiplication.
    pub fn center(&self) -> Subset {
        let n = self.size();
        Subset::from_indices((0..n).filter(|&r| (0..n).all(|s| self.mul(r, s) == self.mul(s, r))))
    }

    /// Embeds as an H_v-ring with singleton cells.
    pub fn to_hv(&self) -> HvRing {
        let n = self.size();
        let add = HyperOp::from_singletons(n, self.group.add_table(), "ring.add").expect("validated tables embed");
        let mul = HyperOp::from_singletons(n, &self.mul, "ring.mul").expect("validated tables embed");
        HvRing::new(self.carrier().clone(), add, mul).expect("validated tables embed")
    }

    /// Reads a singleton-valued H_v-ring back as an ordinary ring.
    pub fn from_hv(ring: &HvRing) -> Result<Self> {
        if !ring.add().is_singleton_valued() || !ring.mul().is_singleton_valued() {
            return Err(HvError::NotOrdinary("ring"));
        }
        let n = ring.size();
        let flatten = |op: &HyperOp| -> Vec<usize> {
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| op.cell(a, b).first().unwrap())
                .collect()
        };
        OrdinaryRing::new(ring.carrier().clone(), flatten(ring.add()), flatten(ring.mul()))
    }
}

/// A classical module: an abelian group with a compatible ring action.
/// Unitality is not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryModule {
    ring: OrdinaryRing,
    group: OrdinaryGroup,
    action: Vec<usize>,
}

impl OrdinaryModule {
    pub fn new(ring: OrdinaryRing, group: OrdinaryGroup, action: Vec<usize>) -> Result<Self> {
        const KIND: &str = "module";
        let (rn, mn) = (ring.size(), group.size());
        if action.len() != rn * mn {
            return Err(HvError::TableShape {
                context: "action".to_string(),
                got: action.len(),
                want: rn * mn,
            });
        }
        if let Some(&bad) = action.iter().find(|&&v| v >= mn) {
            return Err(HvError::CellOutOfRange {
                context: "action".to_string(),
                index: bad,
                size: mn,
            });
        }
        let act = |r: usize, x: usize| action[r * mn + x];
        for r in 0..rn {
            for x in 0..mn {
                for y in 0..mn {
                    if act(r, group.add(x, y)) != group.add(act(r, x), act(r, y)) {
                        return Err(HvError::InvalidStructure {
                            kind: KIND,
                            detail: format!("r(x+y) = rx + ry fails at ({r}, {x}, {y})"),
                        });
                    }
                }
            }
        }
        for r in 0..rn {
            for s in 0..rn {
                for x in 0..mn {
                    if act(ring.add(r, s), x) != group.add(act(r, x), act(s, x)) {
                        return Err(HvError::InvalidStructure {
                            kind: KIND,
                            detail: format!("(r+s)x = rx + sx fails at ({r}, {s}, {x})"),
                        });
                    }
                    if act(ring.mul(r, s), x) != act(r, act(s, x)) {
                        return Err(HvError::InvalidStructure {
                            kind: KIND,
                            detail: format!("(rs)x = r(sx) fails at ({r}, {s}, {x})"),
                        });
                    }
                }
            }
        }
        Ok(OrdinaryModule {
            ring,
            group,
            action,
        })
    }

    /// Z_n as a module over itself.
    pub fn cyclic(n: usize) -> Result<Self> {
        let ring = OrdinaryRing::modular(n)?;
        let group = OrdinaryGroup::cyclic(n)?;
        let mut action = Vec::with_capacity(n * n);
        for r in 0..n {
            for x in 0..n {
                action.push((r * x) % n);
            }
        }
        OrdinaryModule::new(ring, group, action)
    }

    pub fn ring(&self) -> &OrdinaryRing {
        &self.ring
    }

    pub fn group(&self) -> &OrdinaryGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    pub fn act(&self, r: usize, x: usize) -> usize {
        self.action[r * self.group.size() + x]
    }

    pub fn zero(&self) -> usize {
        self.group.zero()
    }

    /// Embeds as an H_v-module with singleton cells and a designated zero.
    pub fn to_hv(&self) -> HvModule {
        let mn = self.size();
        let add =
            HyperOp::from_singletons(mn, self.group.add_table(), "module.add").expect("validated tables embed");
        let action = ExternalOp::new(
            self.ring.size(),
            mn,
            self.action.iter().map(|&v| Subset::singleton(v)).collect(),
            "action",
        )
        .expect("validated tables embed");
        HvModule::new(
            self.ring.to_hv(),
            self.group.carrier().clone(),
            add,
            action,
            Some(self.zero()),
        )
        .expect("validated tables embed")
    }

    /// Reads a singleton-valued H_v-module back as an ordinary module.
    pub fn from_hv(m: &HvModule) -> Result<Self> {
        if !m.add().is_singleton_valued() || !m.action().is_singleton_valued() {
            return Err(HvError::NotOrdinary("module"));
        }
        let ring = OrdinaryRing::from_hv(m.ring())?;
        let mn = m.size();
        let add: Vec<usize> = (0..mn)
            .flat_map(|a| (0..mn).map(move |b| (a, b)))
            .map(|(a, b)| m.add().cell(a, b).first().unwrap())
            .collect();
        let group = OrdinaryGroup::new(m.carrier().clone(), add)?;
        let action: Vec<usize> = (0..ring.size())
            .flat_map(|r| (0..mn).map(move |x| (r, x)))
            .map(|(r, x)| m.action().cell(r, x).first().unwrap())
            .collect();
        OrdinaryModule::new(ring, group, action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_structures_validate() {
        for n in 1..=4 {
            let g = OrdinaryGroup::cyclic(n).unwrap();
            assert_eq!(g.zero(), 0);
            let r = OrdinaryRing::modular(n).unwrap();
            assert_eq!(r.center(), Subset::full(n), "Z_{n} is commutative");
            OrdinaryModule::cyclic(n).unwrap();
        }
    }

    #[test]
    fn negation_is_derived() {
        let g = OrdinaryGroup::cyclic(3).unwrap();
        assert_eq!(g.neg(0), 0);
        assert_eq!(g.neg(1), 2);
        assert_eq!(g.sub(0, 1), 2);
    }

    #[test]
    fn broken_group_is_rejected() {
        // x + y = x: no identity from the left side.
        let c = Carrier::numbered(2).unwrap();
        let err = OrdinaryGroup::new(c, vec![0, 0, 1, 1]);
        assert!(matches!(err, Err(HvError::InvalidStructure { .. })));
    }

    #[test]
    fn broken_module_action_is_rejected() {
        let ring = OrdinaryRing::modular(2).unwrap();
        let group = OrdinaryGroup::cyclic(2).unwrap();
        // 1.x = 1 constant: r(x+y) = 1 but rx + ry = 0 at x = y = 0... pick
        // the simplest violation: action [0,0, 1,1] means 1.0 = 1.
        let err = OrdinaryModule::new(ring, group, vec![0, 0, 1, 1]);
        assert!(matches!(err, Err(HvError::InvalidStructure { .. })));
    }

    #[test]
    fn hv_round_trip() {
        let m = OrdinaryModule::cyclic(3).unwrap();
        let hv = m.to_hv();
        assert_eq!(hv.zero(), Some(0));
        let back = OrdinaryModule::from_hv(&hv).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn from_hv_rejects_hyper_cells() {
        let m2 = crate::samples::m2tot();
        assert!(matches!(OrdinaryModule::from_hv(&m2), Err(HvError::NotOrdinary(_))));
    }
}
