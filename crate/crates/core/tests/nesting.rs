//! A 3×3 lower triangular ring is a 2×2 triangular ring over a smaller
//! triangular corner, under the obvious re-encoding of digits.

use wclean::constructions::{tri2, tri3, zn, Bimodule, MixedRadix, PairingMap};
use wclean::FiniteRing;

fn check_nesting(
    a: [&FiniteRing; 3],
    a21: &Bimodule,
    a31: &Bimodule,
    a32: &Bimodule,
    comp: Option<&PairingMap>,
) {
    let [a1, a2, a3] = a;
    let flat = tri3(a1, a2, a3, a21, a31, a32, comp).unwrap();
    let zero_comp = PairingMap::zero(a32, a21);
    let comp = comp.unwrap_or(&zero_comp);

    let s = tri2(a2, a3, a32).unwrap();
    let col = MixedRadix::new(vec![a21.order(), a31.order()]);
    let size = a21.order() * a31.order();
    let m = Bimodule::from_fn(
        "col",
        size,
        s.ring(),
        a1,
        |x, y| {
            let (p, q) = (col.decode(x), col.decode(y));
            col.encode(&[a21.add(p[0], q[0]), a31.add(p[1], q[1])])
        },
        |t, x| {
            let (d, p) = (s.decode(t), col.decode(x));
            col.encode(&[
                a21.act_left(d[0], p[0]),
                a31.add(comp.apply(d[1], p[0]), a31.act_left(d[2], p[1])),
            ])
        },
        |x, r| {
            let p = col.decode(x);
            col.encode(&[a21.act_right(p[0], r), a31.act_right(p[1], r)])
        },
    )
    .unwrap();
    let nested = tri2(a1, s.ring(), &m).unwrap();

    let phi = |x: usize| {
        let d = flat.decode(x);
        nested.encode(&[
            d[0],
            col.encode(&[d[1], d[3]]),
            s.encode(&[d[2], d[4], d[5]]),
        ])
    };
    let (f, g) = (flat.ring(), nested.ring());
    assert_eq!(f.order(), g.order());
    let mut hit = vec![false; g.order()];
    for x in f.elements() {
        hit[phi(x)] = true;
    }
    assert!(hit.iter().all(|&h| h), "re-encoding is a bijection");
    assert_eq!(phi(f.one()), g.one());
    for x in f.elements() {
        for y in f.elements() {
            assert_eq!(phi(f.add(x, y)), g.add(phi(x), phi(y)));
            assert_eq!(phi(f.mul(x, y)), g.mul(phi(x), phi(y)));
        }
    }
    assert_eq!(f.units().len(), g.units().len());
    assert_eq!(f.idempotents().len(), g.idempotents().len());
}

#[test]
fn binary_regular_modules() {
    let z2 = zn(2).unwrap();
    let reg = Bimodule::regular(&z2);
    check_nesting([&z2; 3], &reg, &reg, &reg, None);
}

#[test]
fn binary_with_multiplication_composition() {
    let z2 = zn(2).unwrap();
    let reg = Bimodule::regular(&z2);
    let mult = PairingMap::from_fn(&reg, &reg, &reg, |p, q| z2.mul(p, q)).unwrap();
    check_nesting([&z2; 3], &reg, &reg, &reg, Some(&mult));
}

#[test]
fn mixed_zero_modules() {
    let z2 = zn(2).unwrap();
    let reg = Bimodule::regular(&z2);
    let zero = Bimodule::zero(&z2, &z2);
    check_nesting([&z2; 3], &reg, &zero, &reg, None);
}

#[test]
fn mixed_orders_with_composition() {
    let (z2, z4) = (zn(2).unwrap(), zn(4).unwrap());
    let a21 = Bimodule::cyclic(2, &z4, &z2).unwrap();
    let a31 = Bimodule::regular(&z2);
    let a32 = Bimodule::cyclic(2, &z2, &z4).unwrap();
    let comp = PairingMap::from_fn(&a32, &a21, &a31, |p, q| (p * q) % 2).unwrap();
    check_nesting([&z2, &z4, &z2], &a21, &a31, &a32, None);
    check_nesting([&z2, &z4, &z2], &a21, &a31, &a32, Some(&comp));
}
