use thiserror::Error;

use crate::ring::{max_order, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimoduleError {
    #[error("carrier of order {0} is empty or exceeds the cap")]
    BadOrder(usize),
    #[error("{table} table has the wrong shape")]
    Shape { table: &'static str },
    #[error("{table} table entry {value} is out of range")]
    EntryOutOfRange { table: &'static str, value: usize },
    #[error("{axiom} fails at {witness:?}")]
    Axiom {
        axiom: &'static str,
        witness: Vec<usize>,
    },
    #[error("Z_{m} is not a module over {ring}")]
    NotCyclicQuotient { m: usize, ring: String },
}

fn axiom(axiom: &'static str, witness: &[usize]) -> BimoduleError {
    BimoduleError::Axiom {
        axiom,
        witness: witness.to_vec(),
    }
}

/// A finite `(L, R)`-bimodule: an abelian group with a left `L`-action and a
/// right `R`-action, all given by tables and validated on construction.
#[derive(Debug, Clone)]
pub struct Bimodule {
    label: String,
    order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    left: FiniteRing,
    right: FiniteRing,
    left_action: Vec<u32>,
    right_action: Vec<u32>,
}

impl PartialEq for Bimodule {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.add == other.add
            && self.left == other.left
            && self.right == other.right
            && self.left_action == other.left_action
            && self.right_action == other.right_action
    }
}

impl Eq for Bimodule {}

impl Bimodule {
    /// Builds from closures on indices. Carrier index 0 must be the zero.
    pub fn from_fn(
        label: impl Into<String>,
        order: usize,
        left: &FiniteRing,
        right: &FiniteRing,
        add: impl Fn(usize, usize) -> usize,
        act_left: impl Fn(usize, usize) -> usize,
        act_right: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, BimoduleError> {
        if order == 0 || order > max_order() {
            return Err(BimoduleError::BadOrder(order));
        }
        let add_table: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| add(a, b)).collect())
            .collect();
        let lt: Vec<Vec<usize>> = left
            .elements()
            .map(|r| (0..order).map(|m| act_left(r, m)).collect())
            .collect();
        let rt: Vec<Vec<usize>> = (0..order)
            .map(|m| right.elements().map(|s| act_right(m, s)).collect())
            .collect();
        Self::from_tables(label, add_table, left, right, lt, rt)
    }

    /// `add_table` is `order × order`; `left_action[r][m]` is `r·m`;
    /// `right_action[m][s]` is `m·s`.
    pub fn from_tables(
        label: impl Into<String>,
        add_table: Vec<Vec<usize>>,
        left: &FiniteRing,
        right: &FiniteRing,
        left_action: Vec<Vec<usize>>,
        right_action: Vec<Vec<usize>>,
    ) -> Result<Self, BimoduleError> {
        let order = add_table.len();
        if order == 0 || order > max_order() {
            return Err(BimoduleError::BadOrder(order));
        }
        let flatten = |name: &'static str,
                       t: &[Vec<usize>],
                       rows: usize,
                       cols: usize|
         -> Result<Vec<u32>, BimoduleError> {
            if t.len() != rows || t.iter().any(|r| r.len() != cols) {
                return Err(BimoduleError::Shape { table: name });
            }
            let mut out = Vec::with_capacity(rows * cols);
            for &v in t.iter().flatten() {
                if v >= order {
                    return Err(BimoduleError::EntryOutOfRange {
                        table: name,
                        value: v,
                    });
                }
                out.push(v as u32);
            }
            Ok(out)
        };
        let add = flatten("add", &add_table, order, order)?;
        let left_action = flatten("left action", &left_action, left.order(), order)?;
        let right_action = flatten("right action", &right_action, order, right.order())?;
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == 0)
                    .map(|b| b as u32)
                    .ok_or_else(|| axiom("additive inverses", &[a]))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let module = Self {
            label: label.into(),
            order,
            add,
            neg,
            left: left.clone(),
            right: right.clone(),
            left_action,
            right_action,
        };
        module.validate()?;
        Ok(module)
    }

    /// A ring as a bimodule over itself.
    pub fn regular(ring: &FiniteRing) -> Self {
        Self::from_fn(
            ring.label(),
            ring.order(),
            ring,
            ring,
            |a, b| ring.add(a, b),
            |r, m| ring.mul(r, m),
            |m, s| ring.mul(m, s),
        )
        .expect("a ring is a bimodule over itself")
    }

    pub fn zero(left: &FiniteRing, right: &FiniteRing) -> Self {
        Self::from_fn("0", 1, left, right, |_, _| 0, |_, _| 0, |_, _| 0)
            .expect("the zero module is a bimodule")
    }

    /// `Z_m` as a `(Z_a, Z_b)`-bimodule through reduction mod `m`.
    /// Requires both rings to be standard cyclic rings with `m | a`, `m | b`.
    pub fn cyclic(m: usize, left: &FiniteRing, right: &FiniteRing) -> Result<Self, BimoduleError> {
        for ring in [left, right] {
            match ring.as_cyclic() {
                Some(n) if m >= 1 && n % m == 0 => {}
                _ => {
                    return Err(BimoduleError::NotCyclicQuotient {
                        m,
                        ring: ring.label().to_string(),
                    })
                }
            }
        }
        Self::from_fn(
            format!("Z_{m}"),
            m,
            left,
            right,
            |a, b| (a + b) % m,
            |r, x| (r * x) % m,
            |x, s| (x * s) % m,
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn left_ring(&self) -> &FiniteRing {
        &self.left
    }

    pub fn right_ring(&self) -> &FiniteRing {
        &self.right
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn act_left(&self, r: usize, m: usize) -> usize {
        self.left_action[r * self.order + m] as usize
    }

    #[inline]
    pub fn act_right(&self, m: usize, s: usize) -> usize {
        self.right_action[m * self.right.order() + s] as usize
    }

    /// `r·m = m·r` for all `r, m`; needs `left == right`.
    pub fn is_symmetric(&self) -> bool {
        self.left == self.right
            && self.left.elements().all(|r| {
                self.elements()
                    .all(|m| self.act_left(r, m) == self.act_right(m, r))
            })
    }

    /// True iff `set` contains 0 and is closed under addition and both
    /// actions.
    pub fn is_submodule(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &m in set {
            if m >= self.order {
                return false;
            }
            member[m] = true;
        }
        if !member[0] {
            return false;
        }
        set.iter().all(|&a| {
            set.iter().all(|&b| member[self.add(a, b)])
                && self.left.elements().all(|r| member[self.act_left(r, a)])
                && self.right.elements().all(|s| member[self.act_right(a, s)])
        })
    }

    /// Every submodule, ascending by size then lexicographically.
    ///
    /// Sub-bimodules are generated by closing single elements and then
    /// closing pairwise sums until nothing new appears.
    pub fn submodules(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for m in self.elements() {
            let s = self.closure(&[m]);
            if !found.contains(&s) {
                found.push(s);
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let mut gens = found[i].clone();
                gens.extend_from_slice(&found[j]);
                let s = self.closure(&gens);
                if !found.contains(&s) {
                    found.push(s);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        found
    }

    /// Smallest sub-bimodule containing `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        let mut members = Vec::new();
        let mut work = vec![0];
        work.extend_from_slice(gens);
        while let Some(x) = work.pop() {
            if member[x] {
                continue;
            }
            member[x] = true;
            members.push(x);
            for &y in &members {
                work.push(self.add(x, y));
            }
            for r in self.left.elements() {
                work.push(self.act_left(r, x));
            }
            for s in self.right.elements() {
                work.push(self.act_right(x, s));
            }
        }
        members.sort_unstable();
        members
    }

    fn validate(&self) -> Result<(), BimoduleError> {
        let n = self.order;
        for a in 0..n {
            if self.add(0, a) != a {
                return Err(axiom("additive identity", &[a]));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(axiom("additive commutativity", &[a, b]));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(axiom("additive associativity", &[a, b, c]));
                    }
                }
            }
        }
        let (l, r) = (&self.left, &self.right);
        for m in 0..n {
            if self.act_left(l.one(), m) != m {
                return Err(axiom("left unital", &[m]));
            }
            if self.act_right(m, r.one()) != m {
                return Err(axiom("right unital", &[m]));
            }
        }
        for x in l.elements() {
            for m in 0..n {
                let xm = self.act_left(x, m);
                for y in l.elements() {
                    if self.act_left(l.mul(x, y), m) != self.act_left(x, self.act_left(y, m)) {
                        return Err(axiom("left associativity", &[x, y, m]));
                    }
                    if self.act_left(l.add(x, y), m) != self.add(xm, self.act_left(y, m)) {
                        return Err(axiom("left additivity in the ring", &[x, y, m]));
                    }
                }
                for m2 in 0..n {
                    if self.act_left(x, self.add(m, m2)) != self.add(xm, self.act_left(x, m2)) {
                        return Err(axiom("left additivity in the module", &[x, m, m2]));
                    }
                }
                for s in r.elements() {
                    if self.act_right(xm, s) != self.act_left(x, self.act_right(m, s)) {
                        return Err(axiom("actions commute", &[x, m, s]));
                    }
                }
            }
        }
        for m in 0..n {
            for s in r.elements() {
                let ms = self.act_right(m, s);
                for t in r.elements() {
                    if self.act_right(m, r.mul(s, t)) != self.act_right(ms, t) {
                        return Err(axiom("right associativity", &[m, s, t]));
                    }
                    if self.act_right(m, r.add(s, t)) != self.add(ms, self.act_right(m, t)) {
                        return Err(axiom("right additivity in the ring", &[m, s, t]));
                    }
                }
                for m2 in 0..n {
                    if self.act_right(self.add(m, m2), s) != self.add(ms, self.act_right(m2, s)) {
                        return Err(axiom("right additivity in the module", &[m, m2, s]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A balanced bimodule map `P × Q → T` where `P` is a `(C, B)`-bimodule,
/// `Q` a `(B, A)`-bimodule and `T` a `(C, A)`-bimodule: biadditive,
/// `φ(p·b, q) = φ(p, b·q)`, `φ(c·p, q) = c·φ(p, q)`, `φ(p, q·a) = φ(p, q)·a`.
///
/// In the 3×3 triangular ring this is the composition `A32 × A21 → A31`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingMap {
    table: Vec<u32>,
    right_len: usize,
    zero: bool,
}

impl PairingMap {
    pub fn zero(left: &Bimodule, right: &Bimodule) -> Self {
        Self {
            table: vec![0; left.order() * right.order()],
            right_len: right.order(),
            zero: true,
        }
    }

    pub fn from_fn(
        left: &Bimodule,
        right: &Bimodule,
        target: &Bimodule,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, BimoduleError> {
        let mut table = Vec::with_capacity(left.order() * right.order());
        for p in left.elements() {
            for q in right.elements() {
                let v = f(p, q);
                if v >= target.order() {
                    return Err(BimoduleError::EntryOutOfRange {
                        table: "pairing",
                        value: v,
                    });
                }
                table.push(v as u32);
            }
        }
        let map = Self {
            zero: table.iter().all(|&v| v == 0),
            table,
            right_len: right.order(),
        };
        map.validate(left, right, target)?;
        Ok(map)
    }

    #[inline]
    pub fn apply(&self, p: usize, q: usize) -> usize {
        self.table[p * self.right_len + q] as usize
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    fn validate(
        &self,
        left: &Bimodule,
        right: &Bimodule,
        target: &Bimodule,
    ) -> Result<(), BimoduleError> {
        if left.right_ring() != right.left_ring() {
            return Err(axiom("pairing middle rings agree", &[]));
        }
        if left.left_ring() != target.left_ring() || right.right_ring() != target.right_ring() {
            return Err(axiom("pairing outer rings agree", &[]));
        }
        let middle = left.right_ring();
        for p in left.elements() {
            for q in right.elements() {
                let v = self.apply(p, q);
                for p2 in left.elements() {
                    if self.apply(left.add(p, p2), q) != target.add(v, self.apply(p2, q)) {
                        return Err(axiom("pairing additive on the left", &[p, p2, q]));
                    }
                }
                for q2 in right.elements() {
                    if self.apply(p, right.add(q, q2)) != target.add(v, self.apply(p, q2)) {
                        return Err(axiom("pairing additive on the right", &[p, q, q2]));
                    }
                }
                for b in middle.elements() {
                    if self.apply(left.act_right(p, b), q) != self.apply(p, right.act_left(b, q)) {
                        return Err(axiom("pairing balanced", &[p, b, q]));
                    }
                }
                for c in target.left_ring().elements() {
                    if self.apply(left.act_left(c, p), q) != target.act_left(c, v) {
                        return Err(axiom("pairing left linear", &[c, p, q]));
                    }
                }
                for a in target.right_ring().elements() {
                    if self.apply(p, right.act_right(q, a)) != target.act_right(v, a) {
                        return Err(axiom("pairing right linear", &[p, q, a]));
                    }
                }
            }
        }
        Ok(())
    }
}
