//! Hyperoperation tables and the weak algebraic axiom checkers.
//!
//! A hyperoperation maps each ordered pair of carrier elements to a
//! nonempty subset of the carrier. The "weak" axioms only ask that the two
//! sides of a law intersect, so every checker here scans all tuples
//! exhaustively over subset products and reports the first violation in
//! lexicographic order.

use serde::Serialize;

use crate::carrier::{Carrier, Subset};
use crate::error::{HvError, Result};
use crate::report::{CheckReport, Witness};

/// A binary hyperoperation on an n-element carrier: n*n nonempty cells,
/// row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperOp {
    n: usize,
    cells: Vec<Subset>,
}

impl HyperOp {
    /// Validates shape, cell nonemptiness and index range. `context` names
    /// the table in error messages, e.g. "module.add".
    pub fn new(n: usize, cells: Vec<Subset>, context: &str) -> Result<Self> {
        if cells.len() != n * n {
            return Err(HvError::TableShape {
                context: context.to_string(),
                got: cells.len(),
                want: n * n,
            });
        }
        let range = Subset::full(n);
        for (k, &cell) in cells.iter().enumerate() {
            let (a, b) = (k / n, k % n);
            if cell.is_empty() {
                return Err(HvError::EmptyCell(format!("{context}[{a}][{b}]")));
            }
            if !cell.is_subset_of(range) {
                let bad = cell.minus(range).first().unwrap();
                return Err(HvError::CellOutOfRange {
                    context: format!("{context}[{a}][{b}]"),
                    index: bad,
                    size: n,
                });
            }
        }
        Ok(HyperOp { n, cells })
    }

    /// Builds from explicit element lists, mostly for tests and fixtures.
    pub fn from_rows(rows: Vec<Vec<Vec<usize>>>, context: &str) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(HvError::TableShape {
                    context: context.to_string(),
                    got: row.len(),
                    want: n,
                });
            }
            for cell in row {
                cells.push(Subset::from_indices(cell.iter().copied()));
            }
        }
        HyperOp::new(n, cells, context)
    }

    /// The ordinary (single-valued) operation `f(a,b) = table[a][b]` as a
    /// hyperoperation with singleton cells.
    pub fn from_singletons(n: usize, table: &[usize], context: &str) -> Result<Self> {
        let cells = table.iter().map(|&v| Subset::singleton(v)).collect();
        HyperOp::new(n, cells, context)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn cell(&self, a: usize, b: usize) -> Subset {
        self.cells[a * self.n + b]
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    /// True when every cell is a singleton, i.e. the operation is ordinary.
    pub fn is_singleton_valued(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Subsetwise product: the union of cells over all element pairs.
    /// Empty operands are rejected — an empty subset has no product.
    pub fn subset_product(&self, a: Subset, b: Subset) -> Result<Subset> {
        if a.is_empty() || b.is_empty() {
            return Err(HvError::EmptySubsetOperand("subset_product"));
        }
        Ok(self.product(a, b))
    }

    /// Infallible subsetwise product for internal scans; empty operands
    /// yield the empty union.
    pub fn product(&self, a: Subset, b: Subset) -> Subset {
        let mut out = Subset::empty();
        for x in a.iter() {
            for y in b.iter() {
                out = out.union(self.cell(x, y));
            }
        }
        out
    }

    /// Union of row `a`: a + H.
    pub fn row_union(&self, a: usize) -> Subset {
        (0..self.n).fold(Subset::empty(), |acc, b| acc.union(self.cell(a, b)))
    }

    /// Union of column `a`: H + a.
    pub fn col_union(&self, a: usize) -> Subset {
        (0..self.n).fold(Subset::empty(), |acc, b| acc.union(self.cell(b, a)))
    }
}

/// An external hyperoperation R x M -> P*(M): ring_n * module_n nonempty
/// cells over the module carrier, row-major by ring element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExternalOp {
    ring_n: usize,
    module_n: usize,
    cells: Vec<Subset>,
}

impl ExternalOp {
    pub fn new(ring_n: usize, module_n: usize, cells: Vec<Subset>, context: &str) -> Result<Self> {
        if cells.len() != ring_n * module_n {
            return Err(HvError::TableShape {
                context: context.to_string(),
                got: cells.len(),
                want: ring_n * module_n,
            });
        }
        let range = Subset::full(module_n);
        for (k, &cell) in cells.iter().enumerate() {
            let (r, x) = (k / module_n, k % module_n);
            if cell.is_empty() {
                return Err(HvError::EmptyCell(format!("{context}[{r}][{x}]")));
            }
            if !cell.is_subset_of(range) {
                let bad = cell.minus(range).first().unwrap();
                return Err(HvError::CellOutOfRange {
                    context: format!("{context}[{r}][{x}]"),
                    index: bad,
                    size: module_n,
                });
            }
        }
        Ok(ExternalOp {
            ring_n,
            module_n,
            cells,
        })
    }

    pub fn from_rows(ring_n: usize, module_n: usize, rows: Vec<Vec<Vec<usize>>>, context: &str) -> Result<Self> {
        let mut cells = Vec::with_capacity(ring_n * module_n);
        for row in &rows {
            for cell in row {
                cells.push(Subset::from_indices(cell.iter().copied()));
            }
        }
        ExternalOp::new(ring_n, module_n, cells, context)
    }

    pub fn ring_size(&self) -> usize {
        self.ring_n
    }

    pub fn module_size(&self) -> usize {
        self.module_n
    }

    pub fn cell(&self, r: usize, x: usize) -> Subset {
        self.cells[r * self.module_n + x]
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    pub fn is_singleton_valued(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Subsetwise action S . A for S a ring subset, A a module subset.
    pub fn act(&self, s: Subset, a: Subset) -> Result<Subset> {
        if s.is_empty() || a.is_empty() {
            return Err(HvError::EmptySubsetOperand("external action"));
        }
        Ok(self.act_product(s, a))
    }

    pub fn act_product(&self, s: Subset, a: Subset) -> Subset {
        let mut out = Subset::empty();
        for r in s.iter() {
            for x in a.iter() {
                out = out.union(self.cell(r, x));
            }
        }
        out
    }
}

/// A carrier with hyper-addition and hyper-multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HvRing {
    carrier: Carrier,
    add: HyperOp,
    mul: HyperOp,
}

impl HvRing {
    pub fn new(carrier: Carrier, add: HyperOp, mul: HyperOp) -> Result<Self> {
        for (op, name) in [(&add, "ring.add"), (&mul, "ring.mul")] {
            if op.size() != carrier.size() {
                return Err(HvError::TableShape {
                    context: name.to_string(),
                    got: op.size(),
                    want: carrier.size(),
                });
            }
        }
        Ok(HvRing { carrier, add, mul })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn add(&self) -> &HyperOp {
        &self.add
    }

    pub fn mul(&self) -> &HyperOp {
        &self.mul
    }
}

/// A module-side structure: hyper-addition on the module carrier plus an
/// external hyperaction of a ring. `zero` optionally designates an element
/// known to act as the additive zero of an underlying ordinary group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HvModule {
    ring: HvRing,
    carrier: Carrier,
    add: HyperOp,
    action: ExternalOp,
    zero: Option<usize>,
}

impl HvModule {
    pub fn new(
        ring: HvRing,
        carrier: Carrier,
        add: HyperOp,
        action: ExternalOp,
        zero: Option<usize>,
    ) -> Result<Self> {
        if add.size() != carrier.size() {
            return Err(HvError::TableShape {
                context: "module.add".to_string(),
                got: add.size(),
                want: carrier.size(),
            });
        }
        if action.ring_size() != ring.size() || action.module_size() != carrier.size() {
            return Err(HvError::TableShape {
                context: "action".to_string(),
                got: action.ring_size() * action.module_size(),
                want: ring.size() * carrier.size(),
            });
        }
        if let Some(z) = zero {
            if z >= carrier.size() {
                return Err(HvError::CellOutOfRange {
                    context: "module.zero".to_string(),
                    index: z,
                    size: carrier.size(),
                });
            }
        }
        Ok(HvModule {
            ring,
            carrier,
            add,
            action,
            zero,
        })
    }

    pub fn ring(&self) -> &HvRing {
        &self.ring
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn add(&self) -> &HyperOp {
        &self.add
    }

    pub fn action(&self) -> &ExternalOp {
        &self.action
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }
}

/// Condition identifiers shared by reports and tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupLaw {
    WeakAssociativity,
    Reproduction,
}

fn witness_triple(c: &Carrier, cond: &str, x: usize, y: usize, z: usize, lhs: Subset, rhs: Subset) -> Witness {
    Witness::new(cond)
        .with("x", c.label(x), Some(x))
        .with("y", c.label(y), Some(y))
        .with("z", c.label(z), Some(z))
        .sides(c.render(lhs), c.render(rhs))
}

/// Scans weak associativity: (x+(y+z)) and ((x+y)+z) must intersect for
/// every triple. Returns the first violating triple.
fn scan_weak_associativity(c: &Carrier, op: &HyperOp, cond: &str) -> Option<Witness> {
    let n = op.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = op.product(Subset::singleton(x), op.cell(y, z));
                let rhs = op.product(op.cell(x, y), Subset::singleton(z));
                if !lhs.intersects(rhs) {
                    return Some(witness_triple(c, cond, x, y, z, lhs, rhs));
                }
            }
        }
    }
    None
}

/// Scans reproduction: a + H = H = H + a for every a.
fn scan_reproduction(c: &Carrier, op: &HyperOp, cond: &str) -> Option<Witness> {
    let full = Subset::full(op.size());
    for a in 0..op.size() {
        let row = op.row_union(a);
        if row != full {
            return Some(
                Witness::new(cond)
                    .with("a", c.label(a), Some(a))
                    .sides(c.render(row), c.render(full))
                    .note("a + H does not cover the carrier"),
            );
        }
        let col = op.col_union(a);
        if col != full {
            return Some(
                Witness::new(cond)
                    .with("a", c.label(a), Some(a))
                    .sides(c.render(col), c.render(full))
                    .note("H + a does not cover the carrier"),
            );
        }
    }
    None
}

/// True when x+y and y+x intersect for every pair.
pub fn weak_commutative(op: &HyperOp) -> bool {
    let n = op.size();
    (0..n).all(|x| (0..n).all(|y| op.cell(x, y).intersects(op.cell(y, x))))
}

/// Checks the H_v-group axioms (weak associativity + reproduction) and
/// reports the weak-commutativity flag alongside the verdict.
pub fn check_hv_group(carrier: &Carrier, op: &HyperOp) -> CheckReport {
    const CHECK: &str = "hv_group";
    let wc = weak_commutative(op);
    let report = if let Some(w) = scan_weak_associativity(carrier, op, "weak_associativity") {
        CheckReport::fail(CHECK, w)
    } else if let Some(w) = scan_reproduction(carrier, op, "reproduction") {
        CheckReport::fail(CHECK, w)
    } else {
        CheckReport::pass(CHECK)
    };
    report.with_property("weak_commutative", wc)
}

/// Checks the H_v-ring axioms: (R,+) an H_v-group, (R,*) weakly
/// associative, and both weak distributive laws.
pub fn check_hv_ring(ring: &HvRing) -> CheckReport {
    const CHECK: &str = "hv_ring";
    let c = ring.carrier();
    let (add, mul) = (ring.add(), ring.mul());

    if let Some(w) = scan_weak_associativity(c, add, "add.weak_associativity") {
        return CheckReport::fail(CHECK, w);
    }
    if let Some(w) = scan_reproduction(c, add, "add.reproduction") {
        return CheckReport::fail(CHECK, w);
    }
    if let Some(w) = scan_weak_associativity(c, mul, "mul.weak_associativity") {
        return CheckReport::fail(CHECK, w);
    }

    let n = c.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // x*(y+z) vs x*y + x*z
                let lhs = mul.product(Subset::singleton(x), add.cell(y, z));
                let rhs = add.product(mul.cell(x, y), mul.cell(x, z));
                if !lhs.intersects(rhs) {
                    return CheckReport::fail(
                        CHECK,
                        witness_triple(c, "weak_distributivity_left", x, y, z, lhs, rhs),
                    );
                }
                // (x+y)*z vs x*z + y*z
                let lhs = mul.product(add.cell(x, y), Subset::singleton(z));
                let rhs = add.product(mul.cell(x, z), mul.cell(y, z));
                if !lhs.intersects(rhs) {
                    return CheckReport::fail(
                        CHECK,
                        witness_triple(c, "weak_distributivity_right", x, y, z, lhs, rhs),
                    );
                }
            }
        }
    }
    CheckReport::pass(CHECK)
}

/// Checks the H_v-module axioms over an already supplied ring: (M,+) a
/// weak commutative H_v-group and the three compatibility laws between
/// ring operations and the external action.
pub fn check_hv_module(m: &HvModule) -> CheckReport {
    const CHECK: &str = "hv_module";
    let rc = check_hv_ring(m.ring());
    if !rc.passed() {
        let mut w = rc.witness.expect("failed ring check carries a witness");
        w.condition = format!("ring.{}", w.condition);
        return CheckReport::fail(CHECK, w);
    }

    let c = m.carrier();
    let add = m.add();
    if let Some(w) = scan_weak_associativity(c, add, "module_add.weak_associativity") {
        return CheckReport::fail(CHECK, w);
    }
    if let Some(w) = scan_reproduction(c, add, "module_add.reproduction") {
        return CheckReport::fail(CHECK, w);
    }
    // Def of the module side asks for a *weak commutative* H_v-group.
    let n = c.size();
    for x in 0..n {
        for y in 0..n {
            if !add.cell(x, y).intersects(add.cell(y, x)) {
                return CheckReport::fail(
                    CHECK,
                    Witness::new("module_add.weak_commutativity")
                        .with("x", c.label(x), Some(x))
                        .with("y", c.label(y), Some(y))
                        .sides(c.render(add.cell(x, y)), c.render(add.cell(y, x))),
                );
            }
        }
    }

    let act = m.action();
    let rn = m.ring().size();
    let rc_carrier = m.ring().carrier();
    // (i) a(x+y) meets ax + ay.
    for a in 0..rn {
        for x in 0..n {
            for y in 0..n {
                let lhs = act.act_product(Subset::singleton(a), add.cell(x, y));
                let rhs = add.product(act.cell(a, x), act.cell(a, y));
                if !lhs.intersects(rhs) {
                    return CheckReport::fail(
                        CHECK,
                        Witness::new("axiom_i")
                            .with("a", rc_carrier.label(a), Some(a))
                            .with("x", c.label(x), Some(x))
                            .with("y", c.label(y), Some(y))
                            .sides(c.render(lhs), c.render(rhs)),
                    );
                }
            }
        }
    }
    // (ii) (a+b)x meets ax + bx.
    for a in 0..rn {
        for b in 0..rn {
            for x in 0..n {
                let lhs = act.act_product(m.ring().add().cell(a, b), Subset::singleton(x));
                let rhs = add.product(act.cell(a, x), act.cell(b, x));
                if !lhs.intersects(rhs) {
                    return CheckReport::fail(
                        CHECK,
                        Witness::new("axiom_ii")
                            .with("a", rc_carrier.label(a), Some(a))
                            .with("b", rc_carrier.label(b), Some(b))
                            .with("x", c.label(x), Some(x))
                            .sides(c.render(lhs), c.render(rhs)),
                    );
                }
            }
        }
    }
    // (iii) (ab)x meets a(bx).
    for a in 0..rn {
        for b in 0..rn {
            for x in 0..n {
                let lhs = act.act_product(m.ring().mul().cell(a, b), Subset::singleton(x));
                let rhs = act.act_product(Subset::singleton(a), act.cell(b, x));
                if !lhs.intersects(rhs) {
                    return CheckReport::fail(
                        CHECK,
                        Witness::new("axiom_iii")
                            .with("a", rc_carrier.label(a), Some(a))
                            .with("b", rc_carrier.label(b), Some(b))
                            .with("x", c.label(x), Some(x))
                            .sides(c.render(lhs), c.render(rhs)),
                    );
                }
            }
        }
    }
    CheckReport::pass(CHECK)
}

/// Checks that `s` is an H_v-submodule: the restricted addition stays
/// inside `s` and reproduces `s`, and the ring action maps into `s`.
pub fn check_hv_submodule(m: &HvModule, s: Subset) -> CheckReport {
    const CHECK: &str = "hv_submodule";
    let c = m.carrier();
    if s.is_empty() {
        return CheckReport::fail(CHECK, Witness::new("empty_subset").note("a submodule must be nonempty"));
    }
    if !s.is_subset_of(c.full()) {
        return CheckReport::fail(
            CHECK,
            Witness::new("out_of_carrier").note("subset mentions indices outside the carrier"),
        );
    }
    let add = m.add();
    // Closure: a + b inside s for a, b in s.
    for a in s.iter() {
        for b in s.iter() {
            let cell = add.cell(a, b);
            if !cell.is_subset_of(s) {
                return CheckReport::fail(
                    CHECK,
                    Witness::new("closure")
                        .with("a", c.label(a), Some(a))
                        .with("b", c.label(b), Some(b))
                        .sides(c.render(cell), c.render(s)),
                );
            }
        }
    }
    // Reproduction within s: a + s = s = s + a.
    for a in s.iter() {
        let row = s.iter().fold(Subset::empty(), |acc, b| acc.union(add.cell(a, b)));
        if row != s {
            return CheckReport::fail(
                CHECK,
                Witness::new("reproduction")
                    .with("a", c.label(a), Some(a))
                    .sides(c.render(row), c.render(s))
                    .note("a + S does not reproduce S"),
            );
        }
        let col = s.iter().fold(Subset::empty(), |acc, b| acc.union(add.cell(b, a)));
        if col != s {
            return CheckReport::fail(
                CHECK,
                Witness::new("reproduction")
                    .with("a", c.label(a), Some(a))
                    .sides(c.render(col), c.render(s))
                    .note("S + a does not reproduce S"),
            );
        }
    }
    // R . S inside s.
    let act = m.action();
    for r in 0..m.ring().size() {
        for x in s.iter() {
            let cell = act.cell(r, x);
            if !cell.is_subset_of(s) {
                return CheckReport::fail(
                    CHECK,
                    Witness::new("action_closure")
                        .with("r", m.ring().carrier().label(r), Some(r))
                        .with("x", c.label(x), Some(x))
                        .sides(c.render(cell), c.render(s)),
                );
            }
        }
    }
    CheckReport::pass(CHECK)
}

/// All nonempty subsets of the module carrier that pass
/// [`check_hv_submodule`], ascending by bit pattern.
pub fn all_hv_submodules(m: &HvModule) -> Vec<Subset> {
    Subset::nonempty_subsets(m.size())
        .filter(|&s| check_hv_submodule(m, s).passed())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;
    use crate::samples;

    #[test]
    fn hyperop_rejects_empty_cells() {
        let err = HyperOp::from_rows(vec![vec![vec![0], vec![]], vec![vec![1], vec![0]]], "module.add");
        assert!(matches!(err, Err(HvError::EmptyCell(ref s)) if s == "module.add[0][1]"));
    }

    #[test]
    fn hyperop_rejects_out_of_range() {
        let err = HyperOp::from_rows(vec![vec![vec![0], vec![2]], vec![vec![1], vec![0]]], "t");
        assert!(matches!(err, Err(HvError::CellOutOfRange { .. })));
    }

    #[test]
    fn subset_product_unions_cells() {
        // Total hyperoperation on {0,1}: every product is the carrier.
        let op = samples::total_op(2);
        let full = Subset::full(2);
        assert_eq!(op.subset_product(Subset::singleton(0), Subset::singleton(1)).unwrap(), full);
        // Z2 addition: {1} + {1} = {0}.
        let z2 = samples::z2_add();
        assert_eq!(
            z2.subset_product(Subset::singleton(1), Subset::singleton(1)).unwrap(),
            Subset::singleton(0)
        );
        // Mixed operands: {0,1} + {0} = {0,1} in Z2.
        assert_eq!(z2.subset_product(Subset::full(2), Subset::singleton(0)).unwrap(), full);
        assert!(z2.subset_product(Subset::empty(), full).is_err());
    }

    #[test]
    fn total_op_is_hv_group_and_weak_commutative() {
        let c = Carrier::numbered(2).unwrap();
        let report = check_hv_group(&c, &samples::total_op(2));
        assert!(report.passed());
        assert_eq!(report.properties.get("weak_commutative"), Some(&true));
    }

    #[test]
    fn z2_is_hv_group() {
        let c = Carrier::numbered(2).unwrap();
        let report = check_hv_group(&c, &samples::z2_add());
        assert!(report.passed());
        assert_eq!(report.properties.get("weak_commutative"), Some(&true));
    }

    #[test]
    fn left_projection_fails_reproduction() {
        // x + y = {x}: rows are fine, columns collapse.
        let c = Carrier::numbered(2).unwrap();
        let op = HyperOp::from_rows(vec![vec![vec![0], vec![0]], vec![vec![1], vec![1]]], "t").unwrap();
        let report = check_hv_group(&c, &op);
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert_eq!(w.condition, "reproduction");
        assert_eq!(w.elements[0].index, Some(0));
        assert_eq!(w.lhs.as_deref(), Some("{0}"));
    }

    #[test]
    fn z2_ring_passes() {
        assert!(check_hv_ring(&samples::z2_ring()).passed());
        assert!(check_hv_ring(&samples::trivial_ring()).passed());
    }

    #[test]
    fn total_add_left_projection_mul_is_hv_ring() {
        // Derived by hand and confirmed against the naive oracle in the
        // integration tests: weak associativity of x*y={x} holds, and both
        // distributive sides intersect thanks to the total addition.
        let c = Carrier::numbered(2).unwrap();
        let add = samples::total_op(2);
        let mul = HyperOp::from_rows(vec![vec![vec![0], vec![0]], vec![vec![1], vec![1]]], "mul").unwrap();
        let ring = HvRing::new(c, add, mul).unwrap();
        assert!(check_hv_ring(&ring).passed());
    }

    #[test]
    fn z2_module_and_m2tot_pass() {
        assert!(check_hv_module(&samples::z2_module()).passed());
        assert!(check_hv_module(&samples::m2tot()).passed());
    }

    #[test]
    fn broken_action_fails_axiom_ii() {
        // Z2 module with action 1.x = {1} for all x: (1+1).x = 0.x = {0}
        // but 1.x + 1.x = {1}+{1} = {0}. That still intersects, so instead
        // break axiom (i): action 0.x = {x}, 1.x = {x}, i.e. identity — then
        // a(x+y) = x+y and ax+ay = x+y intersect too. Use a genuinely bad
        // one: 0.x = {1-x}.
        let flip = ExternalOp::from_rows(
            2,
            2,
            vec![vec![vec![1], vec![0]], vec![vec![0], vec![1]]],
            "action",
        )
        .unwrap();
        let m = samples::module_with_action(samples::z2_ring(), samples::z2_add(), flip, Some(0));
        let report = check_hv_module(&m);
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        // 0.(0+0) = 0.{0} = {1}, 0.0 + 0.0 = {1}+{1} = {0}: axiom (i) at (0,0,0).
        assert_eq!(w.condition, "axiom_i");
        assert_eq!(w.indices(), vec![0, 0, 0]);
    }

    #[test]
    fn submodule_checks_on_z2() {
        let m = samples::z2_module();
        assert!(check_hv_submodule(&m, Subset::full(2)).passed());
        assert!(check_hv_submodule(&m, Subset::singleton(0)).passed());
        let report = check_hv_submodule(&m, Subset::singleton(1));
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        // 1 + 1 = {0} escapes {1}.
        assert_eq!(w.condition, "closure");
        assert_eq!(w.indices(), vec![1, 1]);
    }

    #[test]
    fn m2tot_has_only_full_submodule() {
        // Total addition reproduces only on the whole carrier.
        assert_eq!(all_hv_submodules(&samples::m2tot()), vec![Subset::full(2)]);
    }

    #[test]
    fn z2_submodule_enumeration() {
        let subs = all_hv_submodules(&samples::z2_module());
        assert_eq!(subs, vec![Subset::singleton(0), Subset::full(2)]);
    }
}
