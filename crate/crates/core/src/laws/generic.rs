//! Laws that apply to any finite ring and scan its ideal lattice.

use crate::clean::{
    is_clean_ideal, is_uniquely_weakly_clean_ideal, is_weakly_clean_element, is_weakly_clean_ideal,
    is_weakly_exchange_ideal, lift_idempotent, peirce_analysis, ring_is_clean,
    ring_is_weakly_clean, ExchangeMode, Sign,
};
use crate::constructions::quotient;
use crate::ideals::{ideal_sum, ideals_or_principal, quotient_ideal, IdealSet};
use crate::ring::{check_radical, FiniteRing};

use super::{LawReport, LawWitness, Tally};

/// Every generic law, by id, in catalog order.
/// A law over one finite ring.
pub type RingLaw = fn(&FiniteRing) -> LawReport;

pub const GENERIC_LAWS: &[(&str, RingLaw)] = &[
    ("proper-ideals", law_proper_ideals),
    ("all-ideals-clean", law_all_ideals_clean),
    ("sign-symmetry", law_sign_symmetry),
    (
        "weakly-clean-implies-exchange",
        law_weakly_clean_implies_exchange,
    ),
    ("central-equivalence", law_central_equivalence),
    ("reduced-exchange", law_reduced_exchange),
    ("unique-central", law_unique_central),
    ("subset-monotone", law_subset_monotone),
    ("peirce", law_peirce_default),
    ("radical", law_radical),
    ("lifting", law_lifting),
    ("radical-quotient", law_radical_quotient),
    ("sum-with-radical", law_sum_with_radical),
];

fn start(id: &str, r: &FiniteRing) -> (Tally, Vec<IdealSet>) {
    let mut t = Tally::new(id, vec![r.label().to_string()]);
    let (ideals, complete) = ideals_or_principal(r);
    if !complete {
        t.note(format!(
            "order {} is above the ideal enumeration cap; principal ideals only",
            r.order()
        ));
    }
    (t, ideals)
}

pub fn law_proper_ideals(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("proper-ideals", r);
    let proper: Vec<&IdealSet> = ideals.iter().filter(|i| i.is_proper()).collect();
    t.instance();
    t.scanned(r.order() * 2 + proper.iter().map(|i| i.len() * 2).sum::<usize>());
    let ring_wc = ring_is_weakly_clean(r);
    let ring_c = ring_is_clean(r);
    let proper_wc = proper.iter().all(|i| is_weakly_clean_ideal(r, i).holds);
    let proper_c = proper.iter().all(|i| is_clean_ideal(r, i).holds);
    if ring_wc != proper_wc {
        t.fail(LawWitness::new(
            r.label(),
            format!("ring weakly clean: {ring_wc}, all proper ideals weakly clean: {proper_wc}"),
        ));
    }
    if ring_c != proper_c {
        t.fail(LawWitness::new(
            r.label(),
            format!("ring clean: {ring_c}, all proper ideals clean: {proper_c}"),
        ));
    }
    if proper.is_empty() {
        t.note("no proper ideals; both sides reduce to the ring itself");
    }
    t.finish()
}

pub fn law_all_ideals_clean(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("all-ideals-clean", r);
    for i in &ideals {
        t.instance();
        let v = is_clean_ideal(r, i);
        t.scanned(v.scanned);
        if !v.holds {
            t.fail(
                LawWitness::new(r.label(), format!("ideal {i} is not clean"))
                    .ideal(i)
                    .predicate(v.witness),
            );
        }
    }
    t.note(format!("{} ideals verified clean", ideals.len()));
    t.finish()
}

pub fn law_sign_symmetry(r: &FiniteRing) -> LawReport {
    let mut t = Tally::new("sign-symmetry", vec![r.label().to_string()]);
    t.instance();
    for x in r.elements() {
        t.scanned(1);
        let cx = is_weakly_clean_element(r, x);
        let neg = is_weakly_clean_element(r, r.neg(x));
        if cx.clean_minus != neg.clean_plus {
            t.fail(
                LawWitness::new(r.label(), "minus class of x differs from plus class of -x")
                    .element(x),
            );
        }
        for d in &cx.minus {
            let mapped = neg.plus.iter().any(|p| {
                p.sign == Sign::Plus && p.idempotent == d.idempotent && p.unit == r.neg(d.unit)
            });
            if !mapped {
                t.fail(
                    LawWitness::new(
                        r.label(),
                        format!(
                            "(e, u) = ({}, {}) does not map to (e, -u) for -x",
                            d.idempotent, d.unit
                        ),
                    )
                    .element(x),
                );
            }
        }
    }
    t.finish()
}

pub fn law_weakly_clean_implies_exchange(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("weakly-clean-implies-exchange", r);
    let mut divergent = 0;
    for i in &ideals {
        t.instance();
        let wc = is_weakly_clean_ideal(r, i);
        let strict = is_weakly_exchange_ideal(r, i, ExchangeMode::Strict);
        let relaxed = is_weakly_exchange_ideal(r, i, ExchangeMode::Relaxed);
        t.scanned(wc.scanned + strict.scanned + relaxed.scanned);
        if strict.holds != relaxed.holds {
            divergent += 1;
        }
        if wc.holds && !strict.holds {
            t.fail(
                LawWitness::new(
                    r.label(),
                    format!("{i} is weakly clean but not weakly exchange"),
                )
                .ideal(i)
                .predicate(strict.witness),
            );
        }
    }
    t.note(format!(
        "idempotent in I versus any idempotent: {divergent} of {} ideals differ",
        ideals.len()
    ));
    t.finish()
}

fn noncentral_idempotent(r: &FiniteRing, i: &IdealSet) -> Option<usize> {
    r.idempotents()
        .iter()
        .copied()
        .find(|&e| i.contains(e) && !r.is_central(e))
}

pub fn law_central_equivalence(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("central-equivalence", r);
    for i in &ideals {
        if let Some(e) = noncentral_idempotent(r, i) {
            t.skip(format!(
                "ideal contains the non-central idempotent {}",
                r.element_name(e)
            ));
            continue;
        }
        t.instance();
        let wc = is_weakly_clean_ideal(r, i);
        let ex = is_weakly_exchange_ideal(r, i, ExchangeMode::Strict);
        t.scanned(wc.scanned + ex.scanned);
        if wc.holds != ex.holds {
            t.fail(
                LawWitness::new(
                    r.label(),
                    format!(
                        "{i}: weakly clean {}, weakly exchange {}",
                        wc.holds, ex.holds
                    ),
                )
                .ideal(i)
                .predicate(wc.witness.or(ex.witness)),
            );
        }
    }
    t.finish()
}

pub fn law_reduced_exchange(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("reduced-exchange", r);
    if let Some(x) = r.elements().find(|&x| x != 0 && r.is_nilpotent(x)) {
        t.skip(format!("{} is a nonzero nilpotent", r.element_name(x)));
        return t.finish();
    }
    for i in &ideals {
        t.instance();
        let ex = is_weakly_exchange_ideal(r, i, ExchangeMode::Strict);
        let wc = is_weakly_clean_ideal(r, i);
        t.scanned(wc.scanned + ex.scanned);
        if ex.holds && !wc.holds {
            t.fail(
                LawWitness::new(
                    r.label(),
                    format!("{i} is weakly exchange but not weakly clean"),
                )
                .ideal(i)
                .predicate(wc.witness),
            );
        }
    }
    t.finish()
}

pub fn law_unique_central(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("unique-central", r);
    let mut unique = 0;
    for i in &ideals {
        t.instance();
        let v = is_uniquely_weakly_clean_ideal(r, i);
        t.scanned(v.scanned);
        if !v.holds {
            continue;
        }
        unique += 1;
        if let Some(e) = noncentral_idempotent(r, i) {
            t.fail(
                LawWitness::new(
                    r.label(),
                    format!("{i} is uniquely weakly clean but contains a non-central idempotent"),
                )
                .ideal(i)
                .element(e),
            );
        }
    }
    t.note(format!(
        "{unique} of {} ideals are uniquely weakly clean",
        ideals.len()
    ));
    t.finish()
}

pub fn law_subset_monotone(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("subset-monotone", r);
    let wc: Vec<bool> = ideals
        .iter()
        .map(|i| {
            let v = is_weakly_clean_ideal(r, i);
            t.scanned(v.scanned);
            v.holds
        })
        .collect();
    for (a, i) in ideals.iter().enumerate() {
        for (b, big) in ideals.iter().enumerate() {
            if i.is_subset(big) {
                t.instance();
                if wc[b] && !wc[a] {
                    t.fail(
                        LawWitness::new(
                            r.label(),
                            format!("{i} inside weakly clean {big} is not weakly clean"),
                        )
                        .ideal(i),
                    );
                }
            }
        }
    }
    t.finish()
}

/// The smallest nontrivial idempotent with its complement, if any.
fn split_idempotent(r: &FiniteRing) -> Option<[usize; 2]> {
    r.idempotents()
        .iter()
        .copied()
        .find(|&e| e != 0 && e != r.one())
        .map(|e| [e, r.sub(r.one(), e)])
}

fn law_peirce_default(r: &FiniteRing) -> LawReport {
    law_peirce(r, None)
}

/// Runs the corner check for `[1]` and for `es` (or, by default, a split
/// `[e, 1 − e]` when the ring has a nontrivial idempotent).
pub fn law_peirce(r: &FiniteRing, es: Option<&[usize]>) -> LawReport {
    let (mut t, ideals) = start("peirce", r);
    let mut sets: Vec<Vec<usize>> = vec![vec![r.one()]];
    match es {
        Some(es) => sets.push(es.to_vec()),
        None => sets.extend(split_idempotent(r).map(|s| s.to_vec())),
    }
    for es in &sets {
        let names: Vec<String> = es.iter().map(|&e| r.element_name(e)).collect();
        t.note(format!("idempotents [{}]", names.join(", ")));
        for i in &ideals {
            let rep = match peirce_analysis(r, es, i) {
                Ok(rep) => rep,
                Err(e) => {
                    t.skip(e.to_string());
                    continue;
                }
            };
            t.instance();
            t.scanned(
                i.len()
                    + rep
                        .corners
                        .iter()
                        .map(|c| c.corner_ideal.len())
                        .sum::<usize>(),
            );
            if rep.corner_condition && !rep.ideal_weakly_clean {
                t.fail(
                    LawWitness::new(
                        r.label(),
                        format!("corners of {i} satisfy the condition but {i} is not weakly clean"),
                    )
                    .ideal(i),
                );
            }
            if es.len() == 1 && rep.corners[0].weakly_clean != rep.ideal_weakly_clean {
                t.fail(
                    LawWitness::new(r.label(), format!("corner 1{i}1 and {i} disagree")).ideal(i),
                );
            }
        }
    }
    t.finish()
}

pub fn law_radical(r: &FiniteRing) -> LawReport {
    let mut t = Tally::new("radical", vec![r.label().to_string()]);
    t.instance();
    let j = r.jacobson_radical();
    t.scanned(r.order() * r.order());
    if let Err(d) = check_radical(r, &j) {
        t.fail(LawWitness::new(r.label(), d.to_string()));
        return t.finish();
    }
    let jset = IdealSet::jacobson(r);
    match quotient(r, &jset) {
        Ok(q) => {
            let jq = q.jacobson_radical();
            if jq != [0] {
                t.fail(LawWitness::new(
                    q.label(),
                    format!("R/J(R) has radical of size {}", jq.len()),
                ));
            }
        }
        Err(e) => t.fail(LawWitness::new(
            r.label(),
            format!("quotient by J(R) failed: {e}"),
        )),
    }
    t.note(format!("|J(R)| = {}", j.len()));
    t.finish()
}

pub fn law_lifting(r: &FiniteRing) -> LawReport {
    let mut t = Tally::new("lifting", vec![r.label().to_string()]);
    let jset = IdealSet::jacobson(r);
    let q = match quotient(r, &jset) {
        Ok(q) => q,
        Err(e) => {
            t.fail(LawWitness::new(
                r.label(),
                format!("quotient by J(R) failed: {e}"),
            ));
            return t.finish();
        }
    };
    for &c in q.idempotents() {
        t.instance();
        t.scanned(1);
        match lift_idempotent(r, &q, c) {
            Ok(e) if r.is_idempotent(e) && jset.contains(r.sub(e, q.representative(c))) => {}
            Ok(e) => t.fail(
                LawWitness::new(r.label(), format!("lift {e} of coset {c} does not verify"))
                    .element(e),
            ),
            Err(err) => t.fail(LawWitness::new(r.label(), err.to_string())),
        }
    }
    t.note(format!("{} idempotent cosets", q.idempotents().len()));
    t.finish()
}

pub fn law_radical_quotient(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("radical-quotient", r);
    let jset = IdealSet::jacobson(r);
    let q = match quotient(r, &jset) {
        Ok(q) => q,
        Err(e) => {
            t.fail(LawWitness::new(
                r.label(),
                format!("quotient by J(R) failed: {e}"),
            ));
            return t.finish();
        }
    };
    if jset.is_zero() {
        t.note("J(R) = 0, so R/J(R) is R");
    }
    // The proof lifts idempotents of the quotient; do so explicitly.
    for &c in q.idempotents() {
        if lift_idempotent(r, &q, c).is_err() {
            t.fail(LawWitness::new(
                r.label(),
                format!("coset {c} has no idempotent lift"),
            ));
        }
    }
    for i in &ideals {
        if !jset.is_subset(i) {
            t.skip("J(R) is not contained in the ideal");
            continue;
        }
        t.instance();
        let qi = match quotient_ideal(&q, i) {
            Ok(qi) => qi,
            Err(e) => {
                t.fail(
                    LawWitness::new(r.label(), format!("image of {i} is not an ideal: {e}"))
                        .ideal(i),
                );
                continue;
            }
        };
        let (a, b) = (
            is_weakly_clean_ideal(r, i),
            is_weakly_clean_ideal(q.ring(), &qi),
        );
        let (c, d) = (is_clean_ideal(r, i), is_clean_ideal(q.ring(), &qi));
        t.scanned(a.scanned + b.scanned + c.scanned + d.scanned);
        if a.holds != b.holds || c.holds != d.holds {
            t.fail(
                LawWitness::new(
                    r.label(),
                    format!(
                        "{i}: weakly clean {} vs quotient {}, clean {} vs quotient {}",
                        a.holds, b.holds, c.holds, d.holds
                    ),
                )
                .ideal(i),
            );
        }
    }
    t.finish()
}

pub fn law_sum_with_radical(r: &FiniteRing) -> LawReport {
    let (mut t, ideals) = start("sum-with-radical", r);
    let jset = IdealSet::jacobson(r);
    let small: Vec<&IdealSet> = ideals.iter().filter(|j| j.is_subset(&jset)).collect();
    for i in &ideals {
        let v = is_weakly_clean_ideal(r, i);
        t.scanned(v.scanned);
        if !v.holds {
            t.skip("ideal is not weakly clean");
            continue;
        }
        for j in &small {
            t.instance();
            let s = match ideal_sum(r, i, j) {
                Ok(s) => s,
                Err(e) => {
                    t.fail(LawWitness::new(r.label(), e.to_string()).ideal(i));
                    continue;
                }
            };
            let w = is_weakly_clean_ideal(r, &s);
            t.scanned(w.scanned);
            if !w.holds {
                t.fail(
                    LawWitness::new(r.label(), format!("{i} + {j} is not weakly clean"))
                        .ideal(&s)
                        .predicate(w.witness),
                );
            }
        }
    }
    t.finish()
}
