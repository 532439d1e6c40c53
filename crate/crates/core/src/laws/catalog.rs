//! The built-in catalog of rings and law instances.

use serde::Serialize;

use crate::constructions::{
    direct_product, idealization, matrix_ring, morita_zero, quotient, tri2, tri3,
    truncated_power_series, zn, Bimodule, PairingMap,
};
use crate::ideals::IdealSet;
use crate::localized::{CompIdeal, Component, LocIdeal, LocalizedZ, DEFAULT_SEARCH_BOUND};
use crate::ring::FiniteRing;

use super::constructed::{
    law_det_cofactor, law_idealization, law_matrix_ideal, law_morita, law_product, law_series,
    law_tri3, DetMode,
};
use super::generic::GENERIC_LAWS;
use super::local::{law_localized_criterion, law_product_localized};
use super::{run_jobs, LawReport, Summary};

/// A deferred law run.
pub type Job<'a> = Box<dyn Fn() -> LawReport + Send + Sync + 'a>;

type ProductCase = fn() -> Vec<(Component, CompIdeal)>;

/// Sample bound for the product search over localized factors.
const PRODUCT_SAMPLE_BOUND: u64 = 16;

fn z(n: usize) -> FiniteRing {
    zn(n).expect("cyclic catalog rings fit the cap")
}

fn tri3_z2(comp: bool) -> FiniteRing {
    let z2 = z(2);
    let reg = Bimodule::regular(&z2);
    let mult = PairingMap::from_fn(&reg, &reg, &reg, |p, q| z2.mul(p, q))
        .expect("multiplication is balanced");
    let (ring, label) = if comp {
        (
            tri3(&z2, &z2, &z2, &reg, &reg, &reg, Some(&mult)),
            "T3(Z_2; mult)",
        )
    } else {
        (tri3(&z2, &z2, &z2, &reg, &reg, &reg, None), "T3(Z_2)")
    };
    ring.expect("tri3 over Z_2 fits")
        .into_ring()
        .with_label(label)
}

/// The fixed catalog: cyclic rings, small products, matrix rings,
/// triangular and Morita rings, idealizations, truncated series, and the
/// quotient by the radical of every entry with a nonzero radical.
pub fn catalog_rings() -> Vec<FiniteRing> {
    let (z2, z3, z4) = (z(2), z(3), z(4));
    let mut rings: Vec<FiniteRing> = (1..=12).chain([16]).map(z).collect();
    let built = [
        direct_product(&[z2.clone(), z2.clone()]).map(|r| r.into_ring()),
        direct_product(&[z2.clone(), z4.clone()]).map(|r| r.into_ring()),
        matrix_ring(&z2, 2).map(|r| r.into_ring()),
        matrix_ring(&z3, 2).map(|r| r.into_ring()),
        tri2(&z2, &z2, &Bimodule::regular(&z2)).map(|r| r.into_ring()),
        Ok(tri3_z2(false)),
        Ok(tri3_z2(true)),
        morita_zero(&z2, &z2, &Bimodule::regular(&z2), &Bimodule::regular(&z2))
            .map(|r| r.into_ring()),
        idealization(&z4, &Bimodule::regular(&z4)).map(|r| r.into_ring()),
        Bimodule::cyclic(2, &z4, &z4)
            .map_err(Into::into)
            .and_then(|m| idealization(&z4, &m))
            .map(|r| r.into_ring()),
        truncated_power_series(&z2, 2).map(|r| r.into_ring()),
        truncated_power_series(&z2, 3).map(|r| r.into_ring()),
        truncated_power_series(&z4, 2).map(|r| r.into_ring()),
        truncated_power_series(&z4, 3).map(|r| r.into_ring()),
    ];
    rings.extend(built.into_iter().map(|r| r.expect("catalog construction")));
    let quotients: Vec<FiniteRing> = rings
        .iter()
        .filter(|r| r.jacobson_radical().len() > 1)
        .map(|r| {
            let j = IdealSet::jacobson(r);
            quotient(r, &j)
                .expect("the radical is an ideal")
                .into_ring()
                .with_label(format!("{}/J", r.label()))
        })
        .collect();
    rings.extend(quotients);
    rings
}

fn loc(primes: &[u64]) -> LocalizedZ {
    LocalizedZ::from_primes(primes.iter().copied()).expect("catalog primes")
}

fn loc_ideal(r: &LocalizedZ, exps: &[u32]) -> LocIdeal {
    LocIdeal::principal(r.primes(), exps.to_vec()).expect("exponents match primes")
}

/// Every law instance of the catalog, borrowing `rings` for the generic
/// laws.
pub fn catalog_jobs(rings: &[FiniteRing]) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    for (_, law) in GENERIC_LAWS {
        for r in rings {
            let law = *law;
            jobs.push(Box::new(move || law(r)));
        }
    }

    jobs.push(Box::new(|| law_det_cofactor(&z(6), 2, DetMode::Exhaustive)));
    jobs.push(Box::new(|| {
        law_det_cofactor(
            &z(5),
            3,
            DetMode::Sampled {
                count: 200,
                seed: 5,
            },
        )
    }));
    jobs.push(Box::new(|| {
        law_det_cofactor(
            &z(6),
            3,
            DetMode::Sampled {
                count: 200,
                seed: 6,
            },
        )
    }));

    for n in [2, 3, 4, 6] {
        jobs.push(Box::new(move || law_matrix_ideal(&z(n), 2)));
    }

    for factors in [vec![4, 6], vec![6], vec![2, 2], vec![2, 4], vec![3, 4]] {
        jobs.push(Box::new(move || {
            let fs: Vec<FiniteRing> = factors.iter().map(|&n| z(n)).collect();
            law_product(&fs)
        }));
    }

    jobs.push(Box::new(|| {
        let z2 = z(2);
        let reg = Bimodule::regular(&z2);
        law_morita(&z2, &z2, &reg, &reg)
    }));
    jobs.push(Box::new(|| {
        let z2 = z(2);
        let zero = Bimodule::zero(&z2, &z2);
        law_morita(&z2, &z2, &zero, &zero)
    }));
    jobs.push(Box::new(|| {
        let (z4, z6) = (z(4), z(6));
        let m = Bimodule::cyclic(2, &z4, &z6).expect("2 divides 4 and 6");
        let n = Bimodule::cyclic(2, &z6, &z4).expect("2 divides 4 and 6");
        law_morita(&z4, &z6, &m, &n)
    }));

    for variant in 0..3 {
        for half in 0..2 {
            jobs.push(Box::new(move || {
                let z2 = z(2);
                let reg = Bimodule::regular(&z2);
                let zero = Bimodule::zero(&z2, &z2);
                let mult =
                    PairingMap::from_fn(&reg, &reg, &reg, |p, q| z2.mul(p, q)).expect("balanced");
                let [fwd, conv] = match variant {
                    0 => law_tri3([&z2; 3], [&reg; 3], None, "T3(Z_2)"),
                    1 => law_tri3([&z2; 3], [&reg; 3], Some(&mult), "T3(Z_2; mult)"),
                    _ => law_tri3([&z2; 3], [&zero; 3], None, "T3(Z_2; zero modules)"),
                };
                if half == 0 {
                    fwd
                } else {
                    conv
                }
            }));
        }
    }

    for (n, k) in [(2, 1), (2, 2), (2, 3), (4, 2), (4, 3)] {
        jobs.push(Box::new(move || law_series(&z(n), k)));
    }

    jobs.push(Box::new(|| {
        let z4 = z(4);
        law_idealization(&z4, &Bimodule::regular(&z4))
    }));
    jobs.push(Box::new(|| {
        let z4 = z(4);
        law_idealization(&z4, &Bimodule::zero(&z4, &z4))
    }));
    jobs.push(Box::new(|| {
        let z4 = z(4);
        law_idealization(&z4, &Bimodule::cyclic(2, &z4, &z4).expect("2 divides 4"))
    }));
    jobs.push(Box::new(|| {
        let z6 = z(6);
        law_idealization(&z6, &Bimodule::regular(&z6))
    }));

    jobs.push(Box::new(|| {
        let (r35, r23, r357) = (loc(&[3, 5]), loc(&[2, 3]), loc(&[3, 5, 7]));
        let cases = vec![
            (r35.clone(), LocIdeal::Zero),
            (r35.clone(), loc_ideal(&r35, &[1, 1])),
            (r35.clone(), loc_ideal(&r35, &[0, 0])),
            (r35.clone(), loc_ideal(&r35, &[1, 0])),
            (r23.clone(), loc_ideal(&r23, &[0, 1])),
            (r357.clone(), loc_ideal(&r357, &[0, 0, 0])),
        ];
        law_localized_criterion(&cases, DEFAULT_SEARCH_BOUND)
    }));

    let product_cases: Vec<ProductCase> = vec![
        || {
            let r = loc(&[3, 5]);
            let whole = loc_ideal(&r, &[0, 0]);
            vec![
                (
                    Component::Localized(r.clone()),
                    CompIdeal::Loc(whole.clone()),
                ),
                (Component::Localized(r), CompIdeal::Loc(whole)),
            ]
        },
        || {
            let r = loc(&[3, 5]);
            vec![
                (
                    Component::Localized(r.clone()),
                    CompIdeal::Loc(loc_ideal(&r, &[1, 0])),
                ),
                (
                    Component::Localized(r.clone()),
                    CompIdeal::Loc(loc_ideal(&r, &[1, 1])),
                ),
            ]
        },
        || {
            let r = loc(&[3, 5]);
            let z6 = z(6);
            vec![
                (
                    Component::Localized(r.clone()),
                    CompIdeal::Loc(loc_ideal(&r, &[0, 0])),
                ),
                (
                    Component::Finite(z6.clone()),
                    CompIdeal::Fin(IdealSet::full(&z6)),
                ),
            ]
        },
        || {
            let r = loc(&[2, 3]);
            let z4 = z(4);
            vec![
                (
                    Component::Localized(r.clone()),
                    CompIdeal::Loc(loc_ideal(&r, &[0, 1])),
                ),
                (
                    Component::Finite(z4.clone()),
                    CompIdeal::Fin(IdealSet::full(&z4)),
                ),
            ]
        },
        || {
            let (a, b) = (loc(&[3, 5]), loc(&[5, 7]));
            vec![
                (
                    Component::Localized(a.clone()),
                    CompIdeal::Loc(loc_ideal(&a, &[1, 0])),
                ),
                (
                    Component::Localized(b.clone()),
                    CompIdeal::Loc(loc_ideal(&b, &[1, 1])),
                ),
            ]
        },
    ];
    for case in product_cases {
        jobs.push(Box::new(move || {
            law_product_localized(&case(), PRODUCT_SAMPLE_BOUND)
        }));
    }
    jobs
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRun {
    pub rings: Vec<String>,
    pub reports: Vec<LawReport>,
    pub summary: Summary,
}

/// Runs every catalog job, in parallel, with deterministic report order.
pub fn run_catalog() -> CatalogRun {
    let rings = catalog_rings();
    let reports = run_jobs(&catalog_jobs(&rings));
    CatalogRun {
        rings: rings.iter().map(|r| r.label().to_string()).collect(),
        summary: Summary::of(&reports),
        reports,
    }
}
