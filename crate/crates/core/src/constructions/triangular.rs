//! Block rings: Morita contexts with zero pairing, formal triangular rings
//! and idealizations.

use std::ops::Deref;

use super::{Bimodule, ConstructionError, MixedRadix, PairingMap};
use crate::ring::FiniteRing;

macro_rules! ring_wrapper {
    ($name:ident) => {
        impl Deref for $name {
            type Target = FiniteRing;
            fn deref(&self) -> &FiniteRing {
                &self.ring
            }
        }

        impl $name {
            pub fn ring(&self) -> &FiniteRing {
                &self.ring
            }

            pub fn into_ring(self) -> FiniteRing {
                self.ring
            }

            pub fn encode(&self, digits: &[usize]) -> usize {
                self.radix.encode(digits)
            }

            pub fn decode(&self, x: usize) -> Vec<usize> {
                self.radix.decode(x)
            }
        }
    };
}

fn require_side(
    what: &'static str,
    expected: &FiniteRing,
    found: &FiniteRing,
) -> Result<(), ConstructionError> {
    if expected == found {
        Ok(())
    } else {
        Err(ConstructionError::SideMismatch {
            what,
            expected: expected.label().to_string(),
            found: found.label().to_string(),
        })
    }
}

fn spec_of(r: &FiniteRing) -> &str {
    r.construction().unwrap_or(r.label())
}

/// The Morita context ring `[[R, M], [N, S]]` with zero pairings.
///
/// `M` is an `(R, S)`-bimodule in position (1,2) and `N` an
/// `(S, R)`-bimodule in position (2,1). Digits are `(r, m, n, s)`.
#[derive(Debug, Clone)]
pub struct MoritaRing {
    ring: FiniteRing,
    upper: Bimodule,
    lower: Bimodule,
    radix: MixedRadix,
}

ring_wrapper!(MoritaRing);

impl MoritaRing {
    pub fn upper(&self) -> &Bimodule {
        &self.upper
    }

    pub fn lower(&self) -> &Bimodule {
        &self.lower
    }
}

pub fn morita_zero(
    r: &FiniteRing,
    s: &FiniteRing,
    m: &Bimodule,
    n: &Bimodule,
) -> Result<MoritaRing, ConstructionError> {
    require_side("M left ring", r, m.left_ring())?;
    require_side("M right ring", s, m.right_ring())?;
    require_side("N left ring", s, n.left_ring())?;
    require_side("N right ring", r, n.right_ring())?;
    let radix = MixedRadix::new(vec![r.order(), m.order(), n.order(), s.order()]);
    let order = radix.checked_size()?;
    let d: Vec<Vec<usize>> = (0..order).map(|i| radix.decode(i)).collect();
    let add = |a: usize, b: usize| {
        let (x, y) = (&d[a], &d[b]);
        radix.encode(&[
            r.add(x[0], y[0]),
            m.add(x[1], y[1]),
            n.add(x[2], y[2]),
            s.add(x[3], y[3]),
        ])
    };
    let mul = |a: usize, b: usize| {
        let (x, y) = (&d[a], &d[b]);
        radix.encode(&[
            r.mul(x[0], y[0]),
            m.add(m.act_left(x[0], y[1]), m.act_right(x[1], y[3])),
            n.add(n.act_right(x[2], y[0]), n.act_left(x[3], y[2])),
            s.mul(x[3], y[3]),
        ])
    };
    let names = d
        .iter()
        .map(|x| {
            format!(
                "[[{} {}][{} {}]]",
                r.element_name(x[0]),
                x[1],
                x[2],
                s.element_name(x[3])
            )
        })
        .collect();
    let ring = FiniteRing::from_fn(
        format!(
            "[[{}, {}], [{}, {}]]",
            r.label(),
            m.label(),
            n.label(),
            s.label()
        ),
        order,
        radix.encode(&[r.one(), 0, 0, s.one()]),
        add,
        mul,
    )?
    .with_construction(format!(
        "(morita {} {} {} {})",
        spec_of(r),
        spec_of(s),
        m.label(),
        n.label()
    ))
    .with_element_names(names);
    Ok(MoritaRing {
        ring,
        upper: m.clone(),
        lower: n.clone(),
        radix,
    })
}

/// Lower triangular `[[R, 0], [M, S]]` with `M` an `(S, R)`-bimodule.
/// Digits are `(r, m, s)`.
#[derive(Debug, Clone)]
pub struct Tri2Ring {
    ring: FiniteRing,
    module: Bimodule,
    radix: MixedRadix,
}

ring_wrapper!(Tri2Ring);

impl Tri2Ring {
    pub fn module(&self) -> &Bimodule {
        &self.module
    }
}

pub fn tri2(r: &FiniteRing, s: &FiniteRing, m: &Bimodule) -> Result<Tri2Ring, ConstructionError> {
    require_side("M left ring", s, m.left_ring())?;
    require_side("M right ring", r, m.right_ring())?;
    let radix = MixedRadix::new(vec![r.order(), m.order(), s.order()]);
    let order = radix.checked_size()?;
    let d: Vec<Vec<usize>> = (0..order).map(|i| radix.decode(i)).collect();
    let add = |a: usize, b: usize| {
        let (x, y) = (&d[a], &d[b]);
        radix.encode(&[r.add(x[0], y[0]), m.add(x[1], y[1]), s.add(x[2], y[2])])
    };
    let mul = |a: usize, b: usize| {
        let (x, y) = (&d[a], &d[b]);
        radix.encode(&[
            r.mul(x[0], y[0]),
            m.add(m.act_right(x[1], y[0]), m.act_left(x[2], y[1])),
            s.mul(x[2], y[2]),
        ])
    };
    let names = d
        .iter()
        .map(|x| {
            format!(
                "[[{} 0][{} {}]]",
                r.element_name(x[0]),
                x[1],
                s.element_name(x[2])
            )
        })
        .collect();
    let ring = FiniteRing::from_fn(
        format!("[[{}, 0], [{}, {}]]", r.label(), m.label(), s.label()),
        order,
        radix.encode(&[r.one(), 0, s.one()]),
        add,
        mul,
    )?
    .with_construction(format!(
        "(tri2 {} {} {})",
        spec_of(r),
        spec_of(s),
        m.label()
    ))
    .with_element_names(names);
    Ok(Tri2Ring {
        ring,
        module: m.clone(),
        radix,
    })
}

/// Lower triangular 3×3 ring
/// `[[A1, 0, 0], [A21, A2, 0], [A31, A32, A3]]` with a composition map
/// `A32 × A21 → A31`. Digits are `(a1, a21, a2, a31, a32, a3)`.
#[derive(Debug, Clone)]
pub struct Tri3Ring {
    ring: FiniteRing,
    modules: [Bimodule; 3],
    radix: MixedRadix,
}

ring_wrapper!(Tri3Ring);

impl Tri3Ring {
    /// `[A21, A31, A32]`.
    pub fn modules(&self) -> &[Bimodule; 3] {
        &self.modules
    }
}

#[allow(clippy::too_many_arguments)]
pub fn tri3(
    a1: &FiniteRing,
    a2: &FiniteRing,
    a3: &FiniteRing,
    a21: &Bimodule,
    a31: &Bimodule,
    a32: &Bimodule,
    comp: Option<&PairingMap>,
) -> Result<Tri3Ring, ConstructionError> {
    require_side("A21 left ring", a2, a21.left_ring())?;
    require_side("A21 right ring", a1, a21.right_ring())?;
    require_side("A31 left ring", a3, a31.left_ring())?;
    require_side("A31 right ring", a1, a31.right_ring())?;
    require_side("A32 left ring", a3, a32.left_ring())?;
    require_side("A32 right ring", a2, a32.right_ring())?;
    let zero_comp;
    let comp = match comp {
        Some(c) => c,
        None => {
            zero_comp = PairingMap::zero(a32, a21);
            &zero_comp
        }
    };
    let radix = MixedRadix::new(vec![
        a1.order(),
        a21.order(),
        a2.order(),
        a31.order(),
        a32.order(),
        a3.order(),
    ]);
    let order = radix.checked_size()?;
    let d: Vec<Vec<usize>> = (0..order).map(|i| radix.decode(i)).collect();
    let add = |a: usize, b: usize| {
        let (x, y) = (&d[a], &d[b]);
        radix.encode(&[
            a1.add(x[0], y[0]),
            a21.add(x[1], y[1]),
            a2.add(x[2], y[2]),
            a31.add(x[3], y[3]),
            a32.add(x[4], y[4]),
            a3.add(x[5], y[5]),
        ])
    };
    let mul = |a: usize, b: usize| {
        let (x, y) = (&d[a], &d[b]);
        let c31 = a31.add(
            a31.add(a31.act_right(x[3], y[0]), comp.apply(x[4], y[1])),
            a31.act_left(x[5], y[3]),
        );
        radix.encode(&[
            a1.mul(x[0], y[0]),
            a21.add(a21.act_right(x[1], y[0]), a21.act_left(x[2], y[1])),
            a2.mul(x[2], y[2]),
            c31,
            a32.add(a32.act_right(x[4], y[2]), a32.act_left(x[5], y[4])),
            a3.mul(x[5], y[5]),
        ])
    };
    let names = d
        .iter()
        .map(|x| {
            format!(
                "[[{} 0 0][{} {} 0][{} {} {}]]",
                a1.element_name(x[0]),
                x[1],
                a2.element_name(x[2]),
                x[3],
                x[4],
                a3.element_name(x[5])
            )
        })
        .collect();
    let ring = FiniteRing::from_fn(
        format!(
            "[[{}, 0, 0], [{}, {}, 0], [{}, {}, {}]]",
            a1.label(),
            a21.label(),
            a2.label(),
            a31.label(),
            a32.label(),
            a3.label()
        ),
        order,
        radix.encode(&[a1.one(), 0, a2.one(), 0, 0, a3.one()]),
        add,
        mul,
    )?
    .with_construction(format!(
        "(tri3 {} {} {} {} {} {})",
        spec_of(a1),
        spec_of(a2),
        spec_of(a3),
        a21.label(),
        a31.label(),
        a32.label()
    ))
    .with_element_names(names);
    Ok(Tri3Ring {
        ring,
        modules: [a21.clone(), a31.clone(), a32.clone()],
        radix,
    })
}

/// The idealization `R(M)` on `R × M` with
/// `(r, m)(r', m') = (rr', r·m' + r'·m)`. Digits are `(r, m)`.
#[derive(Debug, Clone)]
pub struct Idealization {
    ring: FiniteRing,
    base: FiniteRing,
    module: Bimodule,
    radix: MixedRadix,
}

ring_wrapper!(Idealization);

impl Idealization {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn module(&self) -> &Bimodule {
        &self.module
    }
}

pub fn idealization(
    base: &FiniteRing,
    module: &Bimodule,
) -> Result<Idealization, ConstructionError> {
    if !base.is_commutative() {
        return Err(ConstructionError::NonCommutative(base.label().to_string()));
    }
    require_side("module ring", base, module.left_ring())?;
    if !module.is_symmetric() {
        return Err(ConstructionError::InvalidParameter(format!(
            "{} is not a symmetric {}-module",
            module.label(),
            base.label()
        )));
    }
    let (r, m) = (base, module);
    let radix = MixedRadix::new(vec![r.order(), m.order()]);
    let order = radix.checked_size()?;
    let d: Vec<Vec<usize>> = (0..order).map(|i| radix.decode(i)).collect();
    let ring = FiniteRing::from_fn(
        format!("{}({})", r.label(), m.label()),
        order,
        radix.encode(&[r.one(), 0]),
        |a, b| radix.encode(&[r.add(d[a][0], d[b][0]), m.add(d[a][1], d[b][1])]),
        |a, b| {
            let (x, y) = (&d[a], &d[b]);
            radix.encode(&[
                r.mul(x[0], y[0]),
                m.add(m.act_left(x[0], y[1]), m.act_left(y[0], x[1])),
            ])
        },
    )?
    .with_construction(format!("(idealize {} {})", spec_of(r), m.label()))
    .with_element_names(
        d.iter()
            .map(|x| format!("({},{})", r.element_name(x[0]), x[1]))
            .collect(),
    );
    Ok(Idealization {
        ring,
        base: base.clone(),
        module: module.clone(),
        radix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, zn};

    #[test]
    fn morita_with_zero_modules_is_a_product() {
        let z2 = zn(2).unwrap();
        let z3 = zn(3).unwrap();
        let t = morita_zero(
            &z2,
            &z3,
            &Bimodule::zero(&z2, &z3),
            &Bimodule::zero(&z3, &z2),
        )
        .unwrap();
        let p = direct_product(&[z2, z3]).unwrap();
        // Digits (r, 0, 0, s) encode exactly as the product's (r, s).
        assert_eq!(*t.ring(), *p.ring());
    }

    #[test]
    fn morita_over_z2() {
        let z2 = zn(2).unwrap();
        let reg = Bimodule::regular(&z2);
        let t = morita_zero(&z2, &z2, &reg, &reg).unwrap();
        assert_eq!(t.order(), 16);
        assert_eq!(t.one(), t.encode(&[1, 0, 0, 1]));
        for x in t.elements() {
            let d = t.decode(x);
            assert_eq!(t.is_unit(x), z2.is_unit(d[0]) && z2.is_unit(d[3]));
        }
    }

    #[test]
    fn morita_side_mismatch() {
        let z2 = zn(2).unwrap();
        let z4 = zn(4).unwrap();
        let err =
            morita_zero(&z2, &z4, &Bimodule::regular(&z2), &Bimodule::zero(&z4, &z2)).unwrap_err();
        assert!(matches!(err, ConstructionError::SideMismatch { .. }));
    }

    #[test]
    fn tri2_over_z2() {
        let z2 = zn(2).unwrap();
        let t = tri2(&z2, &z2, &Bimodule::regular(&z2)).unwrap();
        assert_eq!(t.order(), 8);
        let units: Vec<usize> = t
            .elements()
            .filter(|&x| {
                let d = t.decode(x);
                d[0] == 1 && d[2] == 1
            })
            .collect();
        assert_eq!(t.units(), units.as_slice());
        assert_eq!(t.idempotents().len(), 6);
        for &e in t.idempotents() {
            let d = t.decode(e);
            assert!(z2.is_idempotent(d[0]) && z2.is_idempotent(d[2]));
        }
        let z = tri2(&z2, &z2, &Bimodule::zero(&z2, &z2)).unwrap();
        assert_eq!(
            *z.ring(),
            *direct_product(&[z2.clone(), z2]).unwrap().ring()
        );
    }

    #[test]
    fn tri2_matches_morita_with_zero_upper() {
        let z2 = zn(2).unwrap();
        let z4 = zn(4).unwrap();
        let m = Bimodule::cyclic(2, &z4, &z2).unwrap();
        let t = tri2(&z2, &z4, &m).unwrap();
        let mo = morita_zero(&z2, &z4, &Bimodule::zero(&z2, &z4), &m).unwrap();
        assert_eq!(*t.ring(), *mo.ring());
    }

    #[test]
    fn tri3_unity_and_zero_modules() {
        let z2 = zn(2).unwrap();
        let z0 = Bimodule::zero(&z2, &z2);
        let t = tri3(&z2, &z2, &z2, &z0, &z0, &z0, None).unwrap();
        assert_eq!(t.decode(t.one()), vec![1, 0, 1, 0, 0, 1]);
        let p = direct_product(&[z2.clone(), z2.clone(), z2]).unwrap();
        assert_eq!(*t.ring(), *p.ring());
    }

    #[test]
    fn idealization_of_z4() {
        let z4 = zn(4).unwrap();
        let id = idealization(&z4, &Bimodule::regular(&z4)).unwrap();
        let u = id.encode(&[1, 3]);
        let v = id.encode(&[1, 1]);
        assert_eq!(id.mul(u, v), id.encode(&[1, 0]));
        assert_eq!(id.inverse(u), Some(v));
        assert!(!id.is_unit(id.encode(&[2, 1])));
        let trivial = idealization(&z4, &Bimodule::zero(&z4, &z4)).unwrap();
        assert_eq!(*trivial.ring(), z4);
    }
}
