use super::{ConstructionError, MixedRadix};
use crate::ring::FiniteRing;

/// Determinants are computed by cofactor expansion only up to this size.
pub const MAX_DET_DIMENSION: usize = 4;

fn check_square(ring: &FiniteRing, k: usize, entries: &[usize]) -> Result<(), ConstructionError> {
    if !ring.is_commutative() {
        return Err(ConstructionError::NonCommutative(ring.label().to_string()));
    }
    if k == 0 || k > MAX_DET_DIMENSION {
        return Err(ConstructionError::InvalidParameter(format!(
            "determinant dimension {k} outside 1..={MAX_DET_DIMENSION}"
        )));
    }
    if entries.len() != k * k {
        return Err(ConstructionError::InvalidParameter(format!(
            "expected {} entries for a {k}x{k} matrix, found {}",
            k * k,
            entries.len()
        )));
    }
    if let Some(&bad) = entries.iter().find(|&&e| e >= ring.order()) {
        return Err(ConstructionError::InvalidParameter(format!(
            "entry {bad} is not an element of {}",
            ring.label()
        )));
    }
    Ok(())
}

fn minor(k: usize, entries: &[usize], row: usize, col: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity((k - 1) * (k - 1));
    for i in (0..k).filter(|&i| i != row) {
        for j in (0..k).filter(|&j| j != col) {
            out.push(entries[i * k + j]);
        }
    }
    out
}

/// Cofactor expansion along the first row. Caller guarantees commutativity.
fn expand(ring: &FiniteRing, k: usize, entries: &[usize]) -> usize {
    match k {
        1 => entries[0],
        2 => ring.sub(
            ring.mul(entries[0], entries[3]),
            ring.mul(entries[1], entries[2]),
        ),
        _ => (0..k).fold(0, |acc, j| {
            let term = ring.mul(entries[j], expand(ring, k - 1, &minor(k, entries, 0, j)));
            if j % 2 == 0 {
                ring.add(acc, term)
            } else {
                ring.sub(acc, term)
            }
        }),
    }
}

fn signed_minor(ring: &FiniteRing, k: usize, entries: &[usize], i: usize, j: usize) -> usize {
    let m = if k == 1 {
        ring.one()
    } else {
        expand(ring, k - 1, &minor(k, entries, i, j))
    };
    if (i + j).is_multiple_of(2) {
        m
    } else {
        ring.neg(m)
    }
}

/// Determinant of a row-major `k×k` matrix over a commutative ring.
pub fn det(ring: &FiniteRing, k: usize, entries: &[usize]) -> Result<usize, ConstructionError> {
    check_square(ring, k, entries)?;
    Ok(expand(ring, k, entries))
}

/// The cofactor `(−1)^{i+j}·det(minor_ij)`, 0-based `i, j`.
pub fn cofactor(
    ring: &FiniteRing,
    k: usize,
    entries: &[usize],
    i: usize,
    j: usize,
) -> Result<usize, ConstructionError> {
    check_square(ring, k, entries)?;
    if i >= k || j >= k {
        return Err(ConstructionError::InvalidParameter(format!(
            "cofactor position ({i}, {j}) outside a {k}x{k} matrix"
        )));
    }
    Ok(signed_minor(ring, k, entries, i, j))
}

/// Matrix arithmetic over a base ring without materializing `M_k(R)`.
///
/// Used where the full matrix ring would exceed the table cap but the
/// relevant sets (an ideal, the idempotents) are still small enough to scan.
#[derive(Debug, Clone, Copy)]
pub struct MatrixView<'r> {
    base: &'r FiniteRing,
    k: usize,
}

impl<'r> MatrixView<'r> {
    pub fn new(base: &'r FiniteRing, k: usize) -> Self {
        Self { base, k }
    }

    pub fn base(&self) -> &'r FiniteRing {
        self.base
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn identity(&self) -> Vec<usize> {
        let mut m = vec![0; self.k * self.k];
        for i in 0..self.k {
            m[i * self.k + i] = self.base.one();
        }
        m
    }

    pub fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect()
    }

    pub fn sub(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.sub(x, y))
            .collect()
    }

    pub fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let (r, k) = (self.base, self.k);
        let mut out = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                out[i * k + j] =
                    (0..k).fold(0, |acc, l| r.add(acc, r.mul(a[i * k + l], b[l * k + j])));
            }
        }
        out
    }

    /// Unit test through the determinant; requires a commutative base.
    pub fn is_unit(&self, a: &[usize]) -> Result<bool, ConstructionError> {
        Ok(self.base.is_unit(det(self.base, self.k, a)?))
    }

    /// Number of matrices, saturating.
    pub fn count(&self) -> u128 {
        MixedRadix::new(vec![self.base.order(); self.k * self.k]).size_u128()
    }

    /// All idempotent matrices, by scanning every matrix. Refuses when
    /// there are more than `limit` matrices to scan.
    pub fn idempotents(&self, limit: u128) -> Result<Vec<Vec<usize>>, ConstructionError> {
        let total = self.count();
        if total > limit {
            return Err(ConstructionError::InvalidParameter(format!(
                "{total} matrices exceed the scan limit {limit}"
            )));
        }
        let radix = MixedRadix::new(vec![self.base.order(); self.k * self.k]);
        Ok((0..total as usize)
            .map(|i| radix.decode(i))
            .filter(|m| self.mul(m, m) == *m)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, zn};

    /// Leibniz formula over all permutations.
    fn leibniz(ring: &FiniteRing, k: usize, a: &[usize]) -> usize {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(k).into_iter().fold(0, |acc, p| {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let term = (0..k).fold(ring.one(), |t, i| ring.mul(t, a[i * k + p[i]]));
            if inversions % 2 == 0 {
                ring.add(acc, term)
            } else {
                ring.sub(acc, term)
            }
        })
    }

    #[test]
    fn identity_has_determinant_one() {
        let z6 = zn(6).unwrap();
        for k in 1..=4 {
            let id = MatrixView::new(&z6, k).identity();
            assert_eq!(det(&z6, k, &id).unwrap(), 1);
        }
    }

    #[test]
    fn two_by_two_over_z6() {
        let z6 = zn(6).unwrap();
        // 1·4 − 2·3 = −2 ≡ 4.
        assert_eq!(det(&z6, 2, &[1, 2, 3, 4]).unwrap(), 4);
    }

    #[test]
    fn agrees_with_leibniz() {
        let z5 = zn(5).unwrap();
        let radix = MixedRadix::new(vec![5; 9]);
        for i in (0..5usize.pow(9)).step_by(997) {
            let a = radix.decode(i);
            assert_eq!(det(&z5, 3, &a).unwrap(), leibniz(&z5, 3, &a));
        }
        let z3 = zn(3).unwrap();
        let radix = MixedRadix::new(vec![3; 16]);
        for i in (0..3usize.pow(16)).step_by(104_729) {
            let a = radix.decode(i);
            assert_eq!(det(&z3, 4, &a).unwrap(), leibniz(&z3, 4, &a));
        }
    }

    #[test]
    fn rejects_noncommutative_and_oversized() {
        let m2 = matrix_ring(&zn(2).unwrap(), 2).unwrap();
        assert!(matches!(
            det(&m2, 2, &[0, 0, 0, 0]),
            Err(ConstructionError::NonCommutative(_))
        ));
        let z2 = zn(2).unwrap();
        assert!(det(&z2, 5, &[0; 25]).is_err());
        assert!(det(&z2, 2, &[0; 3]).is_err());
        assert!(cofactor(&z2, 2, &[0; 4], 2, 0).is_err());
    }

    #[test]
    fn cofactors_of_one_by_one() {
        let z6 = zn(6).unwrap();
        assert_eq!(cofactor(&z6, 1, &[3], 0, 0).unwrap(), 1);
        // [[1,2],[3,4]]: C_01 = −3 ≡ 3, C_11 = 1.
        assert_eq!(cofactor(&z6, 2, &[1, 2, 3, 4], 0, 1).unwrap(), 3);
        assert_eq!(cofactor(&z6, 2, &[1, 2, 3, 4], 1, 1).unwrap(), 1);
    }

    #[test]
    fn view_units_match_matrix_ring() {
        let z2 = zn(2).unwrap();
        let m2 = matrix_ring(&z2, 2).unwrap();
        let view = MatrixView::new(&z2, 2);
        for x in m2.elements() {
            assert_eq!(m2.is_unit(x), view.is_unit(&m2.decode(x)).unwrap());
        }
        let idem = view.idempotents(1 << 20).unwrap();
        assert_eq!(idem.len(), m2.idempotents().len());
    }
}
