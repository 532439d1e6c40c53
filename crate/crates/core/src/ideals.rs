//! Two-sided ideals of finite rings as explicit element sets.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::constructions::{
    Bimodule, ConstructionError, CornerRing, Idealization, MatrixRing, MoritaRing, ProductRing,
    SeriesRing, Tri2Ring, Tri3Ring,
};
use crate::ring::{max_ideal_enum_order, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{ring} has order {order}; ideal enumeration is capped at {cap}")]
    TooLarge {
        ring: String,
        order: usize,
        cap: usize,
    },
    #[error("element set is not a two-sided ideal of {0}")]
    NotIdeal(String),
    #[error("element {element} is out of range for {ring}")]
    OutOfRange { ring: String, element: usize },
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// A two-sided ideal: a sorted set of element indices of one ring.
///
/// Equality is set equality within the same ring order.
#[derive(Debug, Clone, Serialize)]
pub struct IdealSet {
    ring_label: String,
    #[serde(skip)]
    ring_order: usize,
    members: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<usize>>,
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring_order == other.ring_order && self.members == other.members
    }
}

impl Eq for IdealSet {}

impl fmt::Display for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl IdealSet {
    fn new(ring: &FiniteRing, mut members: Vec<usize>, generators: Option<Vec<usize>>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self {
            ring_label: ring.label().to_string(),
            ring_order: ring.order(),
            members,
            generators,
        }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Self::new(ring, vec![0], Some(vec![]))
    }

    pub fn full(ring: &FiniteRing) -> Self {
        Self::new(ring, ring.elements().collect(), Some(vec![ring.one()]))
    }

    pub fn jacobson(ring: &FiniteRing) -> Self {
        Self::new(ring, ring.jacobson_radical(), None)
    }

    /// Smallest two-sided ideal containing `gens`, by worklist closure under
    /// addition and multiplication on either side.
    pub fn closure(ring: &FiniteRing, gens: &[usize]) -> Self {
        let mut member = vec![false; ring.order()];
        let mut members: Vec<usize> = Vec::new();
        let mut work: Vec<usize> = vec![0];
        work.extend(gens.iter().copied().filter(|&g| g < ring.order()));
        while let Some(x) = work.pop() {
            if member[x] {
                continue;
            }
            member[x] = true;
            members.push(x);
            for &y in &members {
                work.push(ring.add(x, y));
            }
            for r in ring.elements() {
                work.push(ring.mul(r, x));
                work.push(ring.mul(x, r));
            }
        }
        debug_assert!(members.iter().all(|&x| member[ring.neg(x)]));
        Self::new(ring, members, Some(gens.to_vec()))
    }

    /// Wraps an explicit element set after checking it is an ideal.
    pub fn from_members(ring: &FiniteRing, members: Vec<usize>) -> Result<Self, IdealError> {
        if let Some(&bad) = members.iter().find(|&&x| x >= ring.order()) {
            return Err(IdealError::OutOfRange {
                ring: ring.label().to_string(),
                element: bad,
            });
        }
        if !is_ideal(ring, &members) {
            return Err(IdealError::NotIdeal(ring.label().to_string()));
        }
        Ok(Self::new(ring, members, None))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn ring_label(&self) -> &str {
        &self.ring_label
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.ring_order
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Membership mask over the ambient ring.
    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.ring_order];
        for &x in &self.members {
            mask[x] = true;
        }
        mask
    }

    /// Short display form: the member list for small ideals, otherwise the
    /// generators.
    pub fn label(&self) -> String {
        let list = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.members.len() == self.ring_order {
            "R".to_string()
        } else if self.members.len() <= 8 {
            format!("{{{}}}", list(&self.members))
        } else {
            match &self.generators {
                Some(g) => format!("<{}>[{}]", list(g), self.members.len()),
                None => format!("I[{}]", self.members.len()),
            }
        }
    }
}

/// True iff `set` contains 0 and is closed under addition and under
/// multiplication by ring elements on either side.
pub fn is_ideal(ring: &FiniteRing, set: &[usize]) -> bool {
    let mut member = vec![false; ring.order()];
    for &x in set {
        if x >= ring.order() {
            return false;
        }
        member[x] = true;
    }
    if !member[0] {
        return false;
    }
    set.iter().all(|&a| {
        member[ring.neg(a)]
            && set.iter().all(|&b| member[ring.add(a, b)])
            && ring
                .elements()
                .all(|r| member[ring.mul(r, a)] && member[ring.mul(a, r)])
    })
}

fn same_ring(i: &IdealSet, j: &IdealSet) -> Result<(), IdealError> {
    if i.ring_order == j.ring_order && i.ring_label == j.ring_label {
        Ok(())
    } else {
        Err(IdealError::RingMismatch)
    }
}

/// `I + J = {a + b}`.
pub fn ideal_sum(ring: &FiniteRing, i: &IdealSet, j: &IdealSet) -> Result<IdealSet, IdealError> {
    same_ring(i, j)?;
    let mut members: Vec<usize> = i
        .members
        .iter()
        .flat_map(|&a| j.members.iter().map(move |&b| ring.add(a, b)))
        .collect();
    members.sort_unstable();
    members.dedup();
    debug_assert!(is_ideal(ring, &members));
    let generators = match (&i.generators, &j.generators) {
        (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
        _ => None,
    };
    Ok(IdealSet::new(ring, members, generators))
}

pub fn ideal_intersection(
    ring: &FiniteRing,
    i: &IdealSet,
    j: &IdealSet,
) -> Result<IdealSet, IdealError> {
    same_ring(i, j)?;
    let members = i
        .members
        .iter()
        .copied()
        .filter(|&x| j.contains(x))
        .collect();
    Ok(IdealSet::new(ring, members, None))
}

/// Principal ideals `⟨x⟩` for every `x`, deduplicated, in order of first
/// appearance.
pub fn principal_ideals(ring: &FiniteRing) -> Vec<IdealSet> {
    let mut out: Vec<IdealSet> = Vec::new();
    for x in ring.elements() {
        let i = IdealSet::closure(ring, &[x]);
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

/// Every two-sided ideal, sorted by size then members.
///
/// Each ideal is the sum of the principal ideals of its elements, so closing
/// the principal ideals under pairwise sums reaches all of them. Refuses
/// rings above [`max_ideal_enum_order`].
pub fn all_ideals(ring: &FiniteRing) -> Result<Vec<IdealSet>, IdealError> {
    let cap = max_ideal_enum_order();
    if ring.order() > cap {
        return Err(IdealError::TooLarge {
            ring: ring.label().to_string(),
            order: ring.order(),
            cap,
        });
    }
    let mut found = principal_ideals(ring);
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let s = ideal_sum(ring, &found[i], &found[j])?;
            if !found.contains(&s) {
                found.push(s);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    Ok(found)
}

/// [`all_ideals`] when the ring is small enough, otherwise the principal
/// ideals. The flag reports whether the list is known to be complete.
pub fn ideals_or_principal(ring: &FiniteRing) -> (Vec<IdealSet>, bool) {
    match all_ideals(ring) {
        Ok(all) => (all, true),
        Err(_) => {
            let mut p = principal_ideals(ring);
            p.sort_by(|a, b| {
                a.len()
                    .cmp(&b.len())
                    .then_with(|| a.members.cmp(&b.members))
            });
            (p, false)
        }
    }
}

fn induced(ring: &FiniteRing, members: Vec<usize>) -> Result<IdealSet, IdealError> {
    if is_ideal(ring, &members) {
        Ok(IdealSet::new(ring, members, None))
    } else {
        Err(IdealError::NotIdeal(ring.label().to_string()))
    }
}

/// Cartesian product of digit choices, encoded.
fn digit_product(choices: &[&[usize]], encode: impl Fn(&[usize]) -> usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut digits = vec![0; choices.len()];
    fn rec(
        level: usize,
        choices: &[&[usize]],
        digits: &mut Vec<usize>,
        out: &mut Vec<usize>,
        encode: &dyn Fn(&[usize]) -> usize,
    ) {
        if level == choices.len() {
            out.push(encode(digits));
            return;
        }
        for &c in choices[level] {
            digits[level] = c;
            rec(level + 1, choices, digits, out, encode);
        }
    }
    if choices.iter().all(|c| !c.is_empty()) {
        rec(0, choices, &mut digits, &mut out, &encode);
    }
    out
}

/// `M_k(I)`: matrices with every entry in `I`.
pub fn matrix_ideal(m: &MatrixRing, ideal: &IdealSet) -> Result<IdealSet, IdealError> {
    let k = m.dimension();
    let choices: Vec<&[usize]> = vec![ideal.members(); k * k];
    induced(m.ring(), digit_product(&choices, |d| m.encode(d)))
}

/// `∏ I_α` inside `∏ R_α`.
pub fn product_ideal(p: &ProductRing, ideals: &[IdealSet]) -> Result<IdealSet, IdealError> {
    if ideals.len() != p.factors().len() {
        return Err(IdealError::RingMismatch);
    }
    let choices: Vec<&[usize]> = ideals.iter().map(IdealSet::members).collect();
    induced(p.ring(), digit_product(&choices, |d| p.encode(d)))
}

/// `I(N) = {(r, n) : r ∈ I, n ∈ N}` for a submodule `N`.
pub fn idealization_ideal(
    id: &Idealization,
    ideal: &IdealSet,
    submodule: &[usize],
) -> Result<IdealSet, IdealError> {
    if !id.module().is_submodule(submodule) {
        return Err(ConstructionError::NotSubmodule(id.module().label().to_string()).into());
    }
    let mut n = submodule.to_vec();
    n.sort_unstable();
    induced(
        id.ring(),
        digit_product(&[ideal.members(), &n], |d| id.encode(d)),
    )
}

fn full_slot(module: &Bimodule) -> Vec<usize> {
    module.elements().collect()
}

/// `[[I, 0], [N, J]]` in a 2×2 triangular ring; `slot = None` takes all of
/// the bimodule.
pub fn tri2_ideal(
    t: &Tri2Ring,
    i: &IdealSet,
    slot: Option<&[usize]>,
    j: &IdealSet,
) -> Result<IdealSet, IdealError> {
    let full = full_slot(t.module());
    let slot = slot.unwrap_or(&full);
    induced(
        t.ring(),
        digit_product(&[i.members(), slot, j.members()], |d| t.encode(d)),
    )
}

/// `[[I, 0, 0], [S21, J, 0], [S31, S32, K]]`; `None` slots take the whole
/// bimodule.
pub fn tri3_ideal(
    t: &Tri3Ring,
    ideals: [&IdealSet; 3],
    slots: [Option<&[usize]>; 3],
) -> Result<IdealSet, IdealError> {
    let [m21, m31, m32] = t.modules();
    let fulls = [full_slot(m21), full_slot(m31), full_slot(m32)];
    let s: Vec<&[usize]> = slots
        .iter()
        .zip(&fulls)
        .map(|(s, f)| s.unwrap_or(f.as_slice()))
        .collect();
    let choices = [
        ideals[0].members(),
        s[0],
        ideals[1].members(),
        s[1],
        s[2],
        ideals[2].members(),
    ];
    induced(t.ring(), digit_product(&choices, |d| t.encode(d)))
}

/// `[[I, M'], [N', J]]` in a Morita context ring; `None` slots take the
/// whole bimodule.
pub fn morita_ideal(
    t: &MoritaRing,
    i: &IdealSet,
    upper: Option<&[usize]>,
    lower: Option<&[usize]>,
    j: &IdealSet,
) -> Result<IdealSet, IdealError> {
    let (fu, fl) = (full_slot(t.upper()), full_slot(t.lower()));
    let choices = [
        i.members(),
        upper.unwrap_or(&fu),
        lower.unwrap_or(&fl),
        j.members(),
    ];
    induced(t.ring(), digit_product(&choices, |d| t.encode(d)))
}

/// Truncated series with every coefficient in `I`.
pub fn series_ideal(s: &SeriesRing, ideal: &IdealSet) -> Result<IdealSet, IdealError> {
    let choices: Vec<&[usize]> = vec![ideal.members(); s.truncation()];
    induced(s.ring(), digit_product(&choices, |d| s.encode(d)))
}

/// `eIe`, in corner-ring indices.
pub fn corner_ideal(
    ring: &FiniteRing,
    c: &CornerRing,
    ideal: &IdealSet,
) -> Result<IdealSet, IdealError> {
    let e = c.idempotent();
    let members = ideal
        .members()
        .iter()
        .map(|&x| {
            c.locate(ring.mul(ring.mul(e, x), e))
                .expect("exe lies in eRe")
        })
        .collect();
    induced(c.ring(), members)
}

/// The image of `I` in `R/J`, in quotient indices.
pub fn quotient_ideal(
    q: &crate::constructions::QuotientRing,
    ideal: &IdealSet,
) -> Result<IdealSet, IdealError> {
    let members = ideal.members().iter().map(|&x| q.project(x)).collect();
    induced(q.ring(), members)
}
