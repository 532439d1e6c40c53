//! Finite unital rings given by explicit operation tables.
//!
//! Elements are the indices `0..order`. Index 0 is always the additive
//! identity. Every `FiniteRing` value has passed [`validate_ring`]; the only
//! way to obtain one is through a validating constructor.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on ring order accepted by the validator.
pub const DEFAULT_MAX_ORDER: usize = 256;
/// Default cap on ring order for exhaustive ideal enumeration.
pub const DEFAULT_MAX_IDEAL_ENUM_ORDER: usize = 64;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);
static MAX_IDEAL_ENUM_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_IDEAL_ENUM_ORDER);

/// Largest ring order the validator (and therefore every constructor) accepts.
pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_order(cap: usize) {
    MAX_ORDER.store(cap.max(1), Ordering::Relaxed);
}

/// Largest ring order for which [`crate::ideals::all_ideals`] enumerates.
pub fn max_ideal_enum_order() -> usize {
    MAX_IDEAL_ENUM_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_ideal_enum_order(cap: usize) {
    MAX_IDEAL_ENUM_ORDER.store(cap.max(1), Ordering::Relaxed);
}

/// Serialized form of a ring: `{label, order, one, add_table, mul_table}`.
///
/// `neg_table` is optional on input and derived when absent. `construction`
/// records how a built-in constructor produced the ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingRecord {
    pub label: String,
    pub order: usize,
    pub one: usize,
    pub add_table: Vec<Vec<usize>>,
    pub mul_table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg_table: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
}

/// Malformed tables. Distinct from an axiom failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("ring order must be positive")]
    EmptyRing,
    #[error("{table} table has {found} rows, expected {expected}")]
    RowCount {
        table: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("{table} table row {row} has {found} entries, expected {expected}")]
    RowLength {
        table: &'static str,
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("{table} table entry {value} at {position:?} is out of range for order {order}")]
    EntryOutOfRange {
        table: &'static str,
        position: (usize, usize),
        value: usize,
        order: usize,
    },
    #[error("unity index {one} is out of range for order {order}")]
    OneOutOfRange { one: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("ring order {order} exceeds the cap of {cap}")]
    TooLarge { order: u128, cap: usize },
    #[error("ring axioms violated: {0}")]
    Axioms(ValidationReport),
    #[error("element {index} is out of range for a ring of order {order}")]
    NoSuchElement { index: usize, order: usize },
}

/// A ring axiom the validator checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    NegTable,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
    MulIdentity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::AddAssociative => "additive associativity",
            Axiom::AddCommutative => "additive commutativity",
            Axiom::AddIdentity => "additive identity at index 0",
            Axiom::AddInverse => "additive inverses",
            Axiom::NegTable => "negation table",
            Axiom::MulAssociative => "multiplicative associativity",
            Axiom::LeftDistributive => "left distributivity",
            Axiom::RightDistributive => "right distributivity",
            Axiom::MulIdentity => "multiplicative identity",
        };
        f.write_str(name)
    }
}

/// One violated axiom, with the first witness tuple found and the number of
/// failing tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    /// `one == zero`: the one-element ring.
    pub trivial: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(
                f,
                "{} fails at {:?} ({} tuples)",
                v.axiom, v.witness, v.count
            )?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct ViolationLog {
    violations: Vec<Violation>,
}

impl ViolationLog {
    fn record(&mut self, axiom: Axiom, witness: &[usize]) {
        match self.violations.iter_mut().find(|v| v.axiom == axiom) {
            Some(v) => v.count += 1,
            None => self.violations.push(Violation {
                axiom,
                witness: witness.to_vec(),
                count: 1,
            }),
        }
    }
}

fn check_table(name: &'static str, table: &[Vec<usize>], n: usize) -> Result<(), StructureError> {
    if table.len() != n {
        return Err(StructureError::RowCount {
            table: name,
            found: table.len(),
            expected: n,
        });
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(StructureError::RowLength {
                table: name,
                row: i,
                found: row.len(),
                expected: n,
            });
        }
        if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(StructureError::EntryOutOfRange {
                table: name,
                position: (i, j),
                value: v,
                order: n,
            });
        }
    }
    Ok(())
}

fn check_structure(record: &RingRecord) -> Result<(), RingError> {
    let n = record.order;
    if n == 0 {
        return Err(StructureError::EmptyRing.into());
    }
    if n > max_order() {
        return Err(RingError::TooLarge {
            order: n as u128,
            cap: max_order(),
        });
    }
    check_table("add", &record.add_table, n)?;
    check_table("mul", &record.mul_table, n)?;
    if record.one >= n {
        return Err(StructureError::OneOutOfRange {
            one: record.one,
            order: n,
        }
        .into());
    }
    if let Some(neg) = &record.neg_table {
        if neg.len() != n {
            return Err(StructureError::RowLength {
                table: "neg",
                row: 0,
                found: neg.len(),
                expected: n,
            }
            .into());
        }
        if let Some((i, &v)) = neg.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(StructureError::EntryOutOfRange {
                table: "neg",
                position: (0, i),
                value: v,
                order: n,
            }
            .into());
        }
    }
    Ok(())
}

/// Exhaustive O(n³) check of the ring axioms.
///
/// Structural problems (wrong shapes, out-of-range entries, order above the
/// cap) are reported as `Err`; axiom failures are collected into the report,
/// each with a witness.
pub fn validate_ring(record: &RingRecord) -> Result<ValidationReport, RingError> {
    check_structure(record)?;
    let n = record.order;
    let add = |a: usize, b: usize| record.add_table[a][b];
    let mul = |a: usize, b: usize| record.mul_table[a][b];
    let one = record.one;
    let mut log = ViolationLog::default();

    for a in 0..n {
        if add(0, a) != a || add(a, 0) != a {
            log.record(Axiom::AddIdentity, &[a]);
        }
        if !(0..n).any(|b| add(a, b) == 0) {
            log.record(Axiom::AddInverse, &[a]);
        }
        if let Some(neg) = &record.neg_table {
            if add(a, neg[a]) != 0 {
                log.record(Axiom::NegTable, &[a, neg[a]]);
            }
        }
        if mul(one, a) != a || mul(a, one) != a {
            log.record(Axiom::MulIdentity, &[a]);
        }
        for b in 0..n {
            if add(a, b) != add(b, a) {
                log.record(Axiom::AddCommutative, &[a, b]);
            }
            let ab_add = add(a, b);
            let ab_mul = mul(a, b);
            for c in 0..n {
                if add(ab_add, c) != add(a, add(b, c)) {
                    log.record(Axiom::AddAssociative, &[a, b, c]);
                }
                if mul(ab_mul, c) != mul(a, mul(b, c)) {
                    log.record(Axiom::MulAssociative, &[a, b, c]);
                }
                if mul(a, add(b, c)) != add(ab_mul, mul(a, c)) {
                    log.record(Axiom::LeftDistributive, &[a, b, c]);
                }
                if mul(ab_add, c) != add(mul(a, c), mul(b, c)) {
                    log.record(Axiom::RightDistributive, &[a, b, c]);
                }
            }
        }
    }

    Ok(ValidationReport {
        trivial: n == 1,
        violations: log.violations,
    })
}

/// A validated finite unital ring.
///
/// Equality compares tables only; labels, provenance and element names are
/// presentation.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    label: String,
    construction: Option<String>,
    n: usize,
    one: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inverse: Vec<Option<u32>>,
    units: Vec<usize>,
    idempotents: Vec<usize>,
    names: Option<Vec<String>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.one == other.one && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl FiniteRing {
    /// Validates a serialized ring.
    pub fn from_record(record: RingRecord) -> Result<Self, RingError> {
        let report = validate_ring(&record)?;
        if !report.is_ok() {
            return Err(RingError::Axioms(report));
        }
        let n = record.order;
        let flatten = |t: &[Vec<usize>]| -> Vec<u32> {
            t.iter()
                .flat_map(|row| row.iter().map(|&v| v as u32))
                .collect()
        };
        let add = flatten(&record.add_table);
        let mul = flatten(&record.mul_table);
        let neg = match record.neg_table {
            Some(neg) => neg.iter().map(|&v| v as u32).collect(),
            None => derive_negation(&add, n),
        };
        Ok(Self::assemble(
            record.label,
            record.construction,
            n,
            record.one,
            add,
            mul,
            neg,
            None,
        ))
    }

    /// Builds and validates a ring from operation closures on indices.
    ///
    /// The order cap is checked before any table is allocated.
    pub fn from_fn(
        label: impl Into<String>,
        order: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, RingError> {
        if order > max_order() {
            return Err(RingError::TooLarge {
                order: order as u128,
                cap: max_order(),
            });
        }
        let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..order)
                .map(|a| (0..order).map(|b| op(a, b)).collect())
                .collect()
        };
        Self::from_record(RingRecord {
            label: label.into(),
            order,
            one,
            add_table: table(&add),
            mul_table: table(&mul),
            neg_table: None,
            construction: None,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        label: String,
        construction: Option<String>,
        n: usize,
        one: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        names: Option<Vec<String>>,
    ) -> Self {
        let mut inverse = vec![None; n];
        for x in 0..n {
            if inverse[x].is_some() {
                continue;
            }
            // One-sided inverses are two-sided in a finite ring, but both
            // products are checked anyway.
            if let Some(y) =
                (0..n).find(|&y| mul[x * n + y] as usize == one && mul[y * n + x] as usize == one)
            {
                inverse[x] = Some(y as u32);
                inverse[y] = Some(x as u32);
            }
        }
        let units = (0..n).filter(|&x| inverse[x].is_some()).collect();
        let idempotents = (0..n).filter(|&x| mul[x * n + x] as usize == x).collect();
        Self {
            label,
            construction,
            n,
            one,
            add,
            mul,
            neg,
            inverse,
            units,
            idempotents,
            names,
        }
    }

    pub fn to_record(&self) -> RingRecord {
        let table = |t: &[u32]| -> Vec<Vec<usize>> {
            t.chunks(self.n)
                .map(|row| row.iter().map(|&v| v as usize).collect())
                .collect()
        };
        RingRecord {
            label: self.label.clone(),
            order: self.n,
            one: self.one,
            add_table: table(&self.add),
            mul_table: table(&self.mul),
            neg_table: None,
            construction: self.construction.clone(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_construction(mut self, construction: impl Into<String>) -> Self {
        self.construction = Some(construction.into());
        self
    }

    /// Attaches display names for elements. Ignored if the length is wrong.
    pub fn with_element_names(mut self, names: Vec<String>) -> Self {
        if names.len() == self.n {
            self.names = Some(names);
        }
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn construction(&self) -> Option<&str> {
        self.construction.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn element_name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn elem(&self, index: usize) -> Result<ElemRef<'_>, RingError> {
        if index < self.n {
            Ok(ElemRef { ring: self, index })
        } else {
            Err(RingError::NoSuchElement {
                index,
                order: self.n,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, x: usize, k: u32) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, x))
    }

    /// `k·x` for a non-negative integer `k`.
    pub fn scale(&self, k: usize, x: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }

    #[inline]
    pub fn is_unit(&self, x: usize) -> bool {
        self.inverse[x].is_some()
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inverse[x].map(|y| y as usize)
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    #[inline]
    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.elements().all(|r| self.mul(r, x) == self.mul(x, r))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut p = x;
        for _ in 0..self.n {
            if p == 0 {
                return true;
            }
            p = self.mul(p, x);
        }
        p == 0
    }

    pub fn has_nonzero_nilpotents(&self) -> bool {
        (1..self.n).any(|x| self.is_nilpotent(x))
    }

    /// Elements `x` with `1 − a·x` a unit for every `a`.
    pub fn jacobson_radical(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| {
                self.elements()
                    .all(|a| self.is_unit(self.sub(self.one, self.mul(a, x))))
            })
            .collect()
    }

    /// True iff each `e_i` is idempotent, `e_i·e_j = 0` for `i ≠ j`, and the
    /// `e_i` sum to one.
    pub fn is_complete_orthogonal(&self, es: &[usize]) -> bool {
        if es.iter().any(|&e| e >= self.n || !self.is_idempotent(e)) {
            return false;
        }
        for (i, &a) in es.iter().enumerate() {
            for (j, &b) in es.iter().enumerate() {
                if i != j && self.mul(a, b) != 0 {
                    return false;
                }
            }
        }
        es.iter().fold(0, |acc, &e| self.add(acc, e)) == self.one
    }

    /// Left multiples `{r·y : r ∈ R}` as a membership mask.
    pub fn left_multiples(&self, y: usize) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for r in self.elements() {
            mask[self.mul(r, y)] = true;
        }
        mask
    }

    /// True iff this ring is `Z_n` with the standard labelling (index `i`
    /// is the residue `i`). Returns `n`.
    pub fn as_cyclic(&self) -> Option<usize> {
        let n = self.n;
        let one_ok = self.one == 1 % n;
        let tables_ok = self.elements().all(|a| {
            self.elements()
                .all(|b| self.add(a, b) == (a + b) % n && self.mul(a, b) == (a * b) % n)
        });
        (one_ok && tables_ok).then_some(n)
    }
}

fn derive_negation(add: &[u32], n: usize) -> Vec<u32> {
    (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| add[a * n + b] == 0)
                .expect("validated ring has additive inverses") as u32
        })
        .collect()
}

/// An element together with the ring it lives in.
#[derive(Debug, Clone, Copy)]
pub struct ElemRef<'r> {
    ring: &'r FiniteRing,
    index: usize,
}

impl<'r> ElemRef<'r> {
    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.index)
    }

    pub fn inverse(&self) -> Option<usize> {
        self.ring.inverse(self.index)
    }

    pub fn is_idempotent(&self) -> bool {
        self.ring.is_idempotent(self.index)
    }

    pub fn is_central(&self) -> bool {
        self.ring.is_central(self.index)
    }
}

/// Ways a candidate Jacobson radical can fail cross-validation.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "defect", rename_all = "kebab-case")]
pub enum RadicalDefect {
    #[error("not an ideal: {a} and {b} combine to {result} outside the set")]
    NotIdeal { a: usize, b: usize, result: usize },
    #[error("1 - {a}*{x}*{b} is not a unit")]
    TwoSided { a: usize, x: usize, b: usize },
    #[error("1 + {x} is not a unit")]
    OnePlusNotUnit { x: usize },
    #[error("nonzero idempotent {e} lies in the radical")]
    ContainsIdempotent { e: usize },
}

/// Cross-checks a radical candidate: ideal closure, the two-sided
/// quasi-regularity test `1 − a·x·b ∈ U(R)`, `1 + J ⊆ U(R)`, and absence of
/// nonzero idempotents.
pub fn check_radical(ring: &FiniteRing, radical: &[usize]) -> Result<(), RadicalDefect> {
    let mut member = vec![false; ring.order()];
    for &x in radical {
        member[x] = true;
    }
    for &x in radical {
        for &y in radical {
            let s = ring.add(x, y);
            if !member[s] {
                return Err(RadicalDefect::NotIdeal {
                    a: x,
                    b: y,
                    result: s,
                });
            }
        }
        for r in ring.elements() {
            for p in [ring.mul(r, x), ring.mul(x, r)] {
                if !member[p] {
                    return Err(RadicalDefect::NotIdeal {
                        a: r,
                        b: x,
                        result: p,
                    });
                }
            }
        }
    }
    for &x in radical {
        for a in ring.elements() {
            let ax = ring.mul(a, x);
            for b in ring.elements() {
                if !ring.is_unit(ring.sub(ring.one(), ring.mul(ax, b))) {
                    return Err(RadicalDefect::TwoSided { a, x, b });
                }
            }
        }
        if !ring.is_unit(ring.add(ring.one(), x)) {
            return Err(RadicalDefect::OnePlusNotUnit { x });
        }
        if x != 0 && ring.is_idempotent(x) {
            return Err(RadicalDefect::ContainsIdempotent { e: x });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_record(n: usize) -> RingRecord {
        RingRecord {
            label: format!("Z_{n}"),
            order: n,
            one: 1 % n,
            add_table: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            mul_table: (0..n)
                .map(|a| (0..n).map(|b| (a * b) % n).collect())
                .collect(),
            neg_table: None,
            construction: None,
        }
    }

    fn zn(n: usize) -> FiniteRing {
        FiniteRing::from_record(zn_record(n)).unwrap()
    }

    #[test]
    fn z4_validates() {
        let report = validate_ring(&zn_record(4)).unwrap();
        assert!(report.is_ok());
        assert!(!report.trivial);
    }

    #[test]
    fn corrupted_z4_reports_witnesses() {
        let mut record = zn_record(4);
        record.mul_table[2][2] = 1;
        let report = validate_ring(&record).unwrap();
        assert!(!report.is_ok());
        // Brute force: 2·(2·2) = 2·1 = 2 but (2·2)·2 = 1·2 = 2; the scan
        // finds associativity or distributivity failures elsewhere.
        let assoc = report.violated(Axiom::MulAssociative);
        let dist = report
            .violated(Axiom::LeftDistributive)
            .or(report.violated(Axiom::RightDistributive));
        assert!(assoc.is_some() || dist.is_some());
        for v in &report.violations {
            assert!(!v.witness.is_empty());
            assert!(v.count >= 1);
        }
        // (1+1)·2 = 2·2 = 1, but 1·2 + 1·2 = 0.
        let rd = report.violated(Axiom::RightDistributive).unwrap();
        let (a, b, c) = (rd.witness[0], rd.witness[1], rd.witness[2]);
        let t = &record;
        assert_ne!(
            t.mul_table[t.add_table[a][b]][c],
            t.add_table[t.mul_table[a][c]][t.mul_table[b][c]]
        );
        assert!(matches!(
            FiniteRing::from_record(record),
            Err(RingError::Axioms(_))
        ));
    }

    #[test]
    fn trivial_ring_is_flagged() {
        let report = validate_ring(&zn_record(1)).unwrap();
        assert!(report.is_ok());
        assert!(report.trivial);
        let r = zn(1);
        assert!(r.is_trivial());
        assert!(r.is_unit(0));
        assert!(r.is_idempotent(0));
    }

    #[test]
    fn malformed_tables_are_structural_errors() {
        let mut record = zn_record(3);
        record.add_table[1].pop();
        assert!(matches!(
            validate_ring(&record),
            Err(RingError::Structure(StructureError::RowLength { .. }))
        ));
        let mut record = zn_record(3);
        record.mul_table[0][0] = 7;
        assert!(matches!(
            validate_ring(&record),
            Err(RingError::Structure(StructureError::EntryOutOfRange { .. }))
        ));
        let mut record = zn_record(3);
        record.one = 3;
        assert!(matches!(
            validate_ring(&record),
            Err(RingError::Structure(StructureError::OneOutOfRange { .. }))
        ));
    }

    #[test]
    fn oversized_ring_is_rejected() {
        let err = FiniteRing::from_fn("big", max_order() + 1, 1, |a, _| a, |a, _| a).unwrap_err();
        assert!(matches!(err, RingError::TooLarge { .. }));
    }

    #[test]
    fn units_and_inverses() {
        let z6 = zn(6);
        assert!(z6.is_unit(5));
        assert_eq!(z6.inverse(5), Some(5));
        assert!(!z6.is_unit(2));
        assert_eq!(z6.inverse(2), None);
        assert_eq!(z6.units(), &[1, 5]);
        assert_eq!(zn(2).units(), &[1]);
        assert_eq!(z6.inverse(z6.one()), Some(1));
    }

    #[test]
    fn idempotent_sets() {
        assert_eq!(zn(6).idempotents(), &[0, 1, 3, 4]);
        assert_eq!(zn(4).idempotents(), &[0, 1]);
    }

    #[test]
    fn nilpotents() {
        assert!(zn(4).has_nonzero_nilpotents());
        assert!(zn(4).is_nilpotent(2));
        assert!(!zn(6).has_nonzero_nilpotents());
        assert!(!zn(2).has_nonzero_nilpotents());
    }

    #[test]
    fn radicals_of_cyclic_rings() {
        assert_eq!(zn(4).jacobson_radical(), vec![0, 2]);
        assert_eq!(zn(6).jacobson_radical(), vec![0]);
        assert_eq!(zn(5).jacobson_radical(), vec![0]);
        assert_eq!(zn(8).jacobson_radical(), vec![0, 2, 4, 6]);
        for n in 1..=16 {
            let r = zn(n);
            check_radical(&r, &r.jacobson_radical()).unwrap();
        }
    }

    #[test]
    fn radical_defects_are_detected() {
        let z4 = zn(4);
        assert_eq!(
            check_radical(&z4, &[0, 1]),
            Err(RadicalDefect::NotIdeal {
                a: 1,
                b: 1,
                result: 2
            })
        );
        assert!(matches!(
            check_radical(&zn(6), &[0, 2, 4]),
            Err(RadicalDefect::TwoSided { .. })
        ));
    }

    #[test]
    fn complete_orthogonal_sets() {
        let z6 = zn(6);
        assert!(z6.is_complete_orthogonal(&[1]));
        assert!(z6.is_complete_orthogonal(&[3, 4]));
        assert!(!z6.is_complete_orthogonal(&[3, 3]));
        assert!(!z6.is_complete_orthogonal(&[3]));
        assert!(!z6.is_complete_orthogonal(&[2, 5]));
    }

    #[test]
    fn commutative_rings_are_central_everywhere() {
        let z12 = zn(12);
        assert!(z12.is_commutative());
        assert!(z12.elements().all(|x| z12.is_central(x)));
    }

    #[test]
    fn cyclic_detection() {
        assert_eq!(zn(6).as_cyclic(), Some(6));
        assert_eq!(zn(1).as_cyclic(), Some(1));
    }

    #[test]
    fn record_round_trip() {
        let z5 = zn(5);
        let json = serde_json::to_string(&z5.to_record()).unwrap();
        let back: RingRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(FiniteRing::from_record(back).unwrap(), z5);
    }

    #[test]
    fn elem_refs() {
        let z6 = zn(6);
        let e = z6.elem(5).unwrap();
        assert!(e.is_unit());
        assert_eq!(e.inverse(), Some(5));
        assert!(e.is_central());
        assert!(z6.elem(6).is_err());
    }
}
