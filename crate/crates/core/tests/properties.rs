use std::sync::LazyLock;

use proptest::prelude::*;

use wclean::clean::{
    is_clean_element, is_clean_ideal, is_weakly_clean_element, is_weakly_clean_ideal,
    is_weakly_exchange_ideal, ExchangeMode,
};
use wclean::constructions::{direct_product, zn};
use wclean::ideals::ideals_or_principal;
use wclean::laws::catalog_rings;
use wclean::localized::{
    classify_ideal, normalize_ideal, product_clean_class, CompElem, Component, LocElem, LocIdeal,
    LocalizedZ,
};

static RINGS: LazyLock<Vec<wclean::FiniteRing>> = LazyLock::new(catalog_rings);

const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

fn prime_set() -> impl Strategy<Value = Vec<u64>> {
    proptest::sample::subsequence(PRIMES.to_vec(), 1..=3)
}

/// A fraction `a/b` of the ring, with `b` built from primes outside `P`.
fn element(primes: &[u64], a: i64, b_seed: u64) -> LocElem {
    let ring = LocalizedZ::from_primes(primes.iter().copied()).unwrap();
    let mut b: i64 = 1;
    for q in [2i64, 3, 5, 7, 11, 13] {
        if !primes.contains(&(q as u64)) && b_seed.is_multiple_of(q as u64) {
            b *= q;
        }
    }
    ring.elem(a, b).unwrap()
}

proptest! {
    #[test]
    fn negation_swaps_signs(primes in prime_set(), a in -500i64..500, b_seed in 1u64..1000) {
        let ring = LocalizedZ::from_primes(primes.iter().copied()).unwrap();
        let x = element(&primes, a, b_seed);
        let (plus, minus) = ring.sign_flags(&x);
        let (nplus, nminus) = ring.sign_flags(&-&x);
        prop_assert_eq!(plus, nminus);
        prop_assert_eq!(minus, nplus);
    }

    #[test]
    fn normalized_ideal_tracks_valuations(primes in prime_set(), a in -500i64..500, b_seed in 1u64..1000) {
        let ring = LocalizedZ::from_primes(primes.iter().copied()).unwrap();
        let g = element(&primes, a, b_seed);
        let ideal = normalize_ideal(&ring, &g);
        prop_assert!(ideal.contains(&ring, &g));
        match &ideal {
            LocIdeal::Zero => prop_assert!(g.is_zero()),
            LocIdeal::Principal { exponents } => {
                for (p, e) in ring.primes().primes().iter().zip(exponents) {
                    prop_assert_eq!(ring.valuation(*p, &g), Some(*e));
                }
                let d = LocElem::integer(i64::try_from(ideal.generator(ring.primes())).unwrap());
                prop_assert_eq!(normalize_ideal(&ring, &d), ideal.clone());
                prop_assert!(ideal.contains(&ring, &(&g * &element(&primes, 7, b_seed + 1))));
            }
        }
    }

    #[test]
    fn case_table_clean_implies_weakly_clean(primes in prime_set(), exps in proptest::collection::vec(0u32..3, 3)) {
        let ring = LocalizedZ::from_primes(primes.iter().copied()).unwrap();
        let ideal = LocIdeal::principal(ring.primes(), exps[..primes.len()].to_vec()).unwrap();
        let v = classify_ideal(ring.primes(), &ideal);
        prop_assert!(!v.clean || v.weakly_clean);
    }

    #[test]
    fn clean_elements_are_weakly_clean(idx in 0usize..64, x in 0usize..256) {
        let r = &RINGS[idx % RINGS.len()];
        let x = x % r.order();
        let class = is_weakly_clean_element(r, x);
        prop_assert_eq!(class.is_clean(), is_clean_element(r, x));
        prop_assert!(!class.is_clean() || class.is_weakly_clean());
        for d in class.plus.iter().chain(&class.minus) {
            prop_assert!(r.is_idempotent(d.idempotent));
            prop_assert!(r.is_unit(d.unit));
        }
    }

    #[test]
    fn exchange_readings_agree(idx in 0usize..64) {
        let r = &RINGS[idx % RINGS.len()];
        let (ideals, _) = ideals_or_principal(r);
        for i in &ideals {
            let strict = is_weakly_exchange_ideal(r, i, ExchangeMode::Strict);
            let relaxed = is_weakly_exchange_ideal(r, i, ExchangeMode::Relaxed);
            prop_assert_eq!(strict.holds, relaxed.holds);
            let clean = is_clean_ideal(r, i).holds;
            prop_assert!(!clean || is_weakly_clean_ideal(r, i).holds);
        }
    }

    #[test]
    fn product_units_are_componentwise(ns in proptest::collection::vec(1usize..7, 1..4), x in 0usize..1000) {
        let factors: Vec<_> = ns.iter().map(|&n| zn(n).unwrap()).collect();
        let p = direct_product(&factors).unwrap();
        let x = x % p.ring().order();
        let parts = p.decode(x);
        let componentwise = factors.iter().zip(&parts).all(|(f, &c)| f.is_unit(c));
        prop_assert_eq!(p.ring().is_unit(x), componentwise);
        prop_assert_eq!(p.encode(&parts), x);
    }

    #[test]
    fn product_tuple_fails_iff_signs_split(a in -40i64..40, b in -40i64..40, n in 0usize..6) {
        let ring = LocalizedZ::from_primes([3, 5]).unwrap();
        let z6 = zn(6).unwrap();
        let (x, y) = (ring.elem(a, 8).unwrap(), ring.elem(b, 1).unwrap());
        let flags = [ring.sign_flags(&x), ring.sign_flags(&y), (true, true)];
        let tuple = vec![
            (Component::Localized(ring.clone()), CompElem::Loc(x)),
            (Component::Localized(ring.clone()), CompElem::Loc(y)),
            (Component::Finite(z6), CompElem::Fin(n)),
        ];
        let class = product_clean_class(&tuple).unwrap();
        let fails = flags.iter().any(|f| !f.0) && flags.iter().any(|f| !f.1);
        prop_assert_eq!(class.is_weakly_clean(), !fails);
        prop_assert_eq!(class.is_clean(), flags.iter().all(|f| f.0));
    }
}
