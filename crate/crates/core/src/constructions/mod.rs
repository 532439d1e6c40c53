//! Ring constructors.
//!
//! Every constructor returns a validated [`FiniteRing`] (wrapped, where the
//! construction has a layout worth keeping, in a struct that derefs to the
//! ring). Composite elements use a fixed mixed-radix encoding: for digits
//! `d_0, d_1, …` with radices `n_0, n_1, …` the index is
//! `d_0 + n_0·(d_1 + n_1·(d_2 + …))`. Digit 0 is least significant and the
//! all-zero tuple is index 0. The digit order for each construction is
//! documented on the constructor.

mod bimodule;
mod det;
mod triangular;

use std::ops::Deref;

use thiserror::Error;

use crate::ideals::IdealSet;
use crate::ring::{max_order, FiniteRing, RingError};

pub use bimodule::{Bimodule, BimoduleError, PairingMap};
pub use det::{cofactor, det, MatrixView, MAX_DET_DIMENSION};
pub use triangular::{
    idealization, morita_zero, tri2, tri3, Idealization, MoritaRing, Tri2Ring, Tri3Ring,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error("{0} must be commutative")]
    NonCommutative(String),
    #[error("{what}: expected a module over {expected}, found one over {found}")]
    SideMismatch {
        what: &'static str,
        expected: String,
        found: String,
    },
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("element set is not a two-sided ideal of {0}")]
    NotIdeal(String),
    #[error("set is not a submodule of {0}")]
    NotSubmodule(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Fixed mixed-radix codec for composite element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedRadix {
    radices: Vec<usize>,
}

impl MixedRadix {
    pub fn new(radices: Vec<usize>) -> Self {
        Self { radices }
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    /// Total count as `u128`, so oversized products can be reported.
    pub fn size_u128(&self) -> u128 {
        self.radices
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
            .unwrap_or(u128::MAX)
    }

    /// Total count, or `TooLarge` if it exceeds the ring order cap.
    pub fn checked_size(&self) -> Result<usize, RingError> {
        let size = self.size_u128();
        if size > max_order() as u128 {
            Err(RingError::TooLarge {
                order: size,
                cap: max_order(),
            })
        } else {
            Ok(size as usize)
        }
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.radices.len());
        digits
            .iter()
            .zip(&self.radices)
            .rev()
            .fold(0, |acc, (&d, &r)| acc * r + d)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        self.radices
            .iter()
            .map(|&r| {
                let d = index % r;
                index /= r;
                d
            })
            .collect()
    }

    /// Decoded digits for every index `0..size`. Caller checks the size.
    fn decode_all(&self, size: usize) -> Vec<Vec<usize>> {
        (0..size).map(|i| self.decode(i)).collect()
    }
}

fn tuple_name(parts: impl IntoIterator<Item = String>) -> String {
    format!("({})", parts.into_iter().collect::<Vec<_>>().join(","))
}

/// Integers mod `n`; index `i` is the residue `i`. `zn(1)` is the trivial
/// ring.
pub fn zn(n: usize) -> Result<FiniteRing, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter(
            "Z_0 is not finite".into(),
        ));
    }
    Ok(FiniteRing::from_fn(
        format!("Z_{n}"),
        n,
        1 % n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    )?
    .with_construction(format!("(zn {n})")))
}

/// Direct product of finitely many rings. Digit `i` is the component in
/// factor `i`.
#[derive(Debug, Clone)]
pub struct ProductRing {
    ring: FiniteRing,
    factors: Vec<FiniteRing>,
    radix: MixedRadix,
}

impl Deref for ProductRing {
    type Target = FiniteRing;
    fn deref(&self) -> &FiniteRing {
        &self.ring
    }
}

impl ProductRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    pub fn factors(&self) -> &[FiniteRing] {
        &self.factors
    }

    pub fn encode(&self, components: &[usize]) -> usize {
        self.radix.encode(components)
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        self.radix.decode(x)
    }
}

pub fn direct_product(factors: &[FiniteRing]) -> Result<ProductRing, ConstructionError> {
    if factors.is_empty() {
        return Err(ConstructionError::InvalidParameter(
            "a direct product needs at least one factor".into(),
        ));
    }
    let radix = MixedRadix::new(factors.iter().map(FiniteRing::order).collect());
    let order = radix.checked_size()?;
    let digits = radix.decode_all(order);
    let combine = |a: usize, b: usize, op: &dyn Fn(&FiniteRing, usize, usize) -> usize| {
        let comps: Vec<usize> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| op(f, digits[a][i], digits[b][i]))
            .collect();
        radix.encode(&comps)
    };
    let one = radix.encode(&factors.iter().map(FiniteRing::one).collect::<Vec<_>>());
    let label = factors
        .iter()
        .map(|f| f.label().to_string())
        .collect::<Vec<_>>()
        .join(" x ");
    let construction = format!(
        "(product {})",
        factors
            .iter()
            .map(|f| f.construction().unwrap_or(f.label()).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    let names = digits
        .iter()
        .map(|d| tuple_name(d.iter().zip(factors).map(|(&c, f)| f.element_name(c))))
        .collect();
    let ring = FiniteRing::from_fn(
        label,
        order,
        one,
        |a, b| combine(a, b, &|f, x, y| f.add(x, y)),
        |a, b| combine(a, b, &|f, x, y| f.mul(x, y)),
    )?
    .with_construction(construction)
    .with_element_names(names);
    Ok(ProductRing {
        ring,
        factors: factors.to_vec(),
        radix,
    })
}

/// `k×k` matrices over a ring. Entry `(i, j)` (0-based) is digit `i·k + j`.
#[derive(Debug, Clone)]
pub struct MatrixRing {
    ring: FiniteRing,
    base: FiniteRing,
    k: usize,
    radix: MixedRadix,
}

impl Deref for MatrixRing {
    type Target = FiniteRing;
    fn deref(&self) -> &FiniteRing {
        &self.ring
    }
}

impl MatrixRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn encode(&self, entries: &[usize]) -> usize {
        self.radix.encode(entries)
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        self.radix.decode(x)
    }

    /// The matrix unit `E_ij` scaled by `x` (0-based indices).
    pub fn scaled_unit(&self, x: usize, i: usize, j: usize) -> usize {
        let mut entries = vec![0; self.k * self.k];
        entries[i * self.k + j] = x;
        self.encode(&entries)
    }
}

pub fn matrix_ring(base: &FiniteRing, k: usize) -> Result<MatrixRing, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::InvalidParameter(
            "matrix dimension must be at least 1".into(),
        ));
    }
    let radix = MixedRadix::new(vec![base.order(); k * k]);
    let order = radix.checked_size()?;
    let digits = radix.decode_all(order);
    let view = MatrixView::new(base, k);
    let mut identity = vec![0; k * k];
    for i in 0..k {
        identity[i * k + i] = base.one();
    }
    let names = digits
        .iter()
        .map(|m| {
            let rows: Vec<String> = m
                .chunks(k)
                .map(|row| {
                    format!(
                        "[{}]",
                        row.iter()
                            .map(|&c| base.element_name(c))
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                })
                .collect();
            format!("[{}]", rows.join(""))
        })
        .collect();
    let ring = FiniteRing::from_fn(
        format!("M_{k}({})", base.label()),
        order,
        radix.encode(&identity),
        |a, b| radix.encode(&view.add(&digits[a], &digits[b])),
        |a, b| radix.encode(&view.mul(&digits[a], &digits[b])),
    )?
    .with_construction(format!(
        "(matrix {k} {})",
        base.construction().unwrap_or(base.label())
    ))
    .with_element_names(names);
    Ok(MatrixRing {
        ring,
        base: base.clone(),
        k,
        radix,
    })
}

/// `R[x]/(x^k)`. Digit `i` is the coefficient of `x^i`.
#[derive(Debug, Clone)]
pub struct SeriesRing {
    ring: FiniteRing,
    base: FiniteRing,
    k: usize,
    radix: MixedRadix,
}

impl Deref for SeriesRing {
    type Target = FiniteRing;
    fn deref(&self) -> &FiniteRing {
        &self.ring
    }
}

impl SeriesRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn truncation(&self) -> usize {
        self.k
    }

    pub fn encode(&self, coefficients: &[usize]) -> usize {
        self.radix.encode(coefficients)
    }

    pub fn decode(&self, f: usize) -> Vec<usize> {
        self.radix.decode(f)
    }

    pub fn constant_term(&self, f: usize) -> usize {
        f % self.base.order()
    }

    /// The image of the indeterminate, or 0 when `k = 1`.
    pub fn indeterminate(&self) -> usize {
        if self.k < 2 {
            return 0;
        }
        let mut c = vec![0; self.k];
        c[1] = self.base.one();
        self.encode(&c)
    }

    /// Embeds a constant.
    pub fn constant(&self, a: usize) -> usize {
        a
    }
}

pub fn truncated_power_series(
    base: &FiniteRing,
    k: usize,
) -> Result<SeriesRing, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::InvalidParameter(
            "truncation length must be at least 1".into(),
        ));
    }
    let radix = MixedRadix::new(vec![base.order(); k]);
    let order = radix.checked_size()?;
    let digits = radix.decode_all(order);
    let add = |a: usize, b: usize| {
        let c: Vec<usize> = (0..k)
            .map(|i| base.add(digits[a][i], digits[b][i]))
            .collect();
        radix.encode(&c)
    };
    let mul = |a: usize, b: usize| {
        let c: Vec<usize> = (0..k)
            .map(|i| {
                (0..=i).fold(0, |acc, j| {
                    base.add(acc, base.mul(digits[a][j], digits[b][i - j]))
                })
            })
            .collect();
        radix.encode(&c)
    };
    let mut one = vec![0; k];
    one[0] = base.one();
    let names = digits
        .iter()
        .map(|c| {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| match i {
                    0 => base.element_name(a),
                    1 => format!("{}x", base.element_name(a)),
                    _ => format!("{}x^{i}", base.element_name(a)),
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let ring = FiniteRing::from_fn(
        format!("{}[x]/(x^{k})", base.label()),
        order,
        radix.encode(&one),
        add,
        mul,
    )?
    .with_construction(format!(
        "(series {} {k})",
        base.construction().unwrap_or(base.label())
    ))
    .with_element_names(names);
    Ok(SeriesRing {
        ring,
        base: base.clone(),
        k,
        radix,
    })
}

/// `R/I`. Cosets are numbered by ascending minimal representative, so the
/// coset of 0 is index 0.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    ring: FiniteRing,
    projection: Vec<usize>,
    representatives: Vec<usize>,
}

impl Deref for QuotientRing {
    type Target = FiniteRing;
    fn deref(&self) -> &FiniteRing {
        &self.ring
    }
}

impl QuotientRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    /// Element of `R` → coset index.
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    /// Minimal representative of each coset.
    pub fn representative(&self, coset: usize) -> usize {
        self.representatives[coset]
    }
}

pub fn quotient(ring: &FiniteRing, ideal: &IdealSet) -> Result<QuotientRing, ConstructionError> {
    if !crate::ideals::is_ideal(ring, ideal.members()) {
        return Err(ConstructionError::NotIdeal(ring.label().to_string()));
    }
    let n = ring.order();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in ring.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let coset = representatives.len();
        representatives.push(x);
        for &i in ideal.members() {
            projection[ring.add(x, i)] = coset;
        }
    }
    let reps = representatives.clone();
    let proj = projection.clone();
    let names = reps
        .iter()
        .map(|&r| format!("{}+I", ring.element_name(r)))
        .collect();
    let q = FiniteRing::from_fn(
        format!("{}/{}", ring.label(), ideal.label()),
        reps.len(),
        proj[ring.one()],
        |a, b| proj[ring.add(reps[a], reps[b])],
        |a, b| proj[ring.mul(reps[a], reps[b])],
    )?
    .with_construction(format!(
        "(quotient {} (ideal {}))",
        ring.construction().unwrap_or(ring.label()),
        ideal
            .generators()
            .unwrap_or(ideal.members())
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ))
    .with_element_names(names);
    Ok(QuotientRing {
        ring: q,
        projection,
        representatives,
    })
}

/// The corner ring `eRe` with unity `e`. Corner elements are numbered by
/// ascending index in `R`.
#[derive(Debug, Clone)]
pub struct CornerRing {
    ring: FiniteRing,
    idempotent: usize,
    embedding: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Deref for CornerRing {
    type Target = FiniteRing;
    fn deref(&self) -> &FiniteRing {
        &self.ring
    }
}

impl CornerRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    pub fn idempotent(&self) -> usize {
        self.idempotent
    }

    /// Corner index → element of `R`.
    pub fn embed(&self, x: usize) -> usize {
        self.embedding[x]
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// Element of `R` → corner index, if it lies in `eRe`.
    pub fn locate(&self, x: usize) -> Option<usize> {
        self.position[x]
    }
}

pub fn corner_ring(ring: &FiniteRing, e: usize) -> Result<CornerRing, ConstructionError> {
    if e >= ring.order() || !ring.is_idempotent(e) {
        return Err(ConstructionError::NotIdempotent(e));
    }
    let mut in_corner = vec![false; ring.order()];
    for x in ring.elements() {
        in_corner[ring.mul(ring.mul(e, x), e)] = true;
    }
    let embedding: Vec<usize> = ring.elements().filter(|&x| in_corner[x]).collect();
    let mut position = vec![None; ring.order()];
    for (i, &x) in embedding.iter().enumerate() {
        position[x] = Some(i);
    }
    let emb = &embedding;
    let pos = &position;
    let names = embedding.iter().map(|&x| ring.element_name(x)).collect();
    let corner = FiniteRing::from_fn(
        format!("{}e{}", ring.label(), ring.element_name(e)),
        embedding.len(),
        pos[e].expect("e = e·e·e lies in eRe"),
        |a, b| pos[ring.add(emb[a], emb[b])].expect("eRe is closed under addition"),
        |a, b| pos[ring.mul(emb[a], emb[b])].expect("eRe is closed under multiplication"),
    )?
    .with_construction(format!(
        "(corner {} {e})",
        ring.construction().unwrap_or(ring.label())
    ))
    .with_element_names(names);
    Ok(CornerRing {
        ring: corner,
        idempotent: e,
        embedding,
        position,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::IdealSet;

    #[test]
    fn mixed_radix_round_trip() {
        let mr = MixedRadix::new(vec![2, 3, 4]);
        assert_eq!(mr.size_u128(), 24);
        for i in 0..24 {
            assert_eq!(mr.encode(&mr.decode(i)), i);
        }
        assert_eq!(mr.encode(&[1, 2, 3]), 1 + 2 * (2 + 3 * 3));
    }

    #[test]
    fn cyclic_rings() {
        let z2 = zn(2).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.units(), &[1]);
        assert_eq!(zn(6).unwrap().idempotents(), &[0, 1, 3, 4]);
        assert!(zn(1).unwrap().is_trivial());
        assert!(zn(0).is_err());
    }

    #[test]
    fn products() {
        let z2 = zn(2).unwrap();
        let p = direct_product(&[z2.clone(), z2.clone()]).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.units(), &[p.encode(&[1, 1])]);

        let single = direct_product(&[zn(5).unwrap()]).unwrap();
        assert_eq!(*single.ring(), zn(5).unwrap());

        let p23 = direct_product(&[z2, zn(3).unwrap()]).unwrap();
        assert_eq!(p23.units().len(), 2);
        assert_eq!(p23.idempotents().len(), 4);
        assert!(direct_product(&[]).is_err());
    }

    #[test]
    fn oversized_product_is_a_size_error() {
        let z16 = zn(16).unwrap();
        let err = direct_product(&[z16.clone(), z16.clone(), z16]).unwrap_err();
        assert!(matches!(
            err,
            ConstructionError::Ring(RingError::TooLarge { order: 4096, .. })
        ));
    }

    #[test]
    fn matrices_over_z2() {
        let z2 = zn(2).unwrap();
        assert_eq!(*matrix_ring(&z2, 1).unwrap().ring(), z2);
        let m2 = matrix_ring(&z2, 2).unwrap();
        assert_eq!(m2.order(), 16);
        assert_eq!(m2.units().len(), 6);
        let id = m2.encode(&[1, 0, 0, 1]);
        assert_eq!(id, m2.one());
        assert!(m2.is_idempotent(id) && m2.is_unit(id));
        let e11 = m2.scaled_unit(1, 0, 0);
        assert!(!m2.is_central(e11));
        assert!(m2.is_central(id));
        assert!(!m2.is_commutative());
    }

    #[test]
    fn series_rings() {
        let z2 = zn(2).unwrap();
        assert_eq!(*truncated_power_series(&z2, 1).unwrap().ring(), z2);
        let s = truncated_power_series(&z2, 2).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.units(), &[s.encode(&[1, 0]), s.encode(&[1, 1])]);
        let s3 = truncated_power_series(&zn(4).unwrap(), 3).unwrap();
        let x = s3.indeterminate();
        assert_ne!(s3.pow(x, 2), 0);
        assert_eq!(s3.pow(x, 3), 0);
        for f in s3.elements() {
            assert_eq!(s3.is_unit(f), s3.base().is_unit(s3.constant_term(f)));
        }
    }

    #[test]
    fn quotients() {
        let z6 = zn(6).unwrap();
        let q = quotient(&z6, &IdealSet::zero(&z6)).unwrap();
        assert_eq!(*q.ring(), z6);

        let z8 = zn(8).unwrap();
        let q = quotient(&z8, &IdealSet::closure(&z8, &[4])).unwrap();
        assert_eq!(q.order(), 4);
        let z4 = zn(4).unwrap();
        assert_eq!(q.units().len(), z4.units().len());
        assert_eq!(q.idempotents().len(), z4.idempotents().len());
        for a in z8.elements() {
            for b in z8.elements() {
                assert_eq!(q.project(z8.add(a, b)), q.add(q.project(a), q.project(b)));
                assert_eq!(q.project(z8.mul(a, b)), q.mul(q.project(a), q.project(b)));
            }
        }

        let j = IdealSet::jacobson(&z4);
        let q = quotient(&z4, &j).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.units().len(), 1);
    }

    #[test]
    fn corners_of_z6() {
        let z6 = zn(6).unwrap();
        assert_eq!(*corner_ring(&z6, 1).unwrap().ring(), z6);
        let c3 = corner_ring(&z6, 3).unwrap();
        assert_eq!(c3.embedding(), &[0, 3]);
        assert_eq!(c3.embed(c3.one()), 3);
        let c4 = corner_ring(&z6, 4).unwrap();
        assert_eq!(c4.embedding(), &[0, 2, 4]);
        assert_eq!(c4.embed(c4.one()), 4);
        assert_eq!(c4.units().len(), 2);
        assert!(c4.jacobson_radical() == vec![0]);
        assert!(corner_ring(&z6, 2).is_err());
    }
}
