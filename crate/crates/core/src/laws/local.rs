//! Laws over the localized integers, where the hypotheses can fail.

use crate::clean::is_clean_element;
use crate::localized::{
    compare_with_oracle, ideal_samples, is_weakly_clean_ideal_prod, product_clean_class, CompElem,
    CompIdeal, Component, LocIdeal, LocalizedZ,
};

use super::{LawReport, LawWitness, Tally};

pub fn law_localized_criterion(cases: &[(LocalizedZ, LocIdeal)], bound: u64) -> LawReport {
    let inputs = cases
        .iter()
        .map(|(r, i)| format!("{} {}", r.label(), i.label(r.primes())))
        .collect();
    let mut t = Tally::new("localized-criterion", inputs);
    for (r, i) in cases {
        t.instance();
        let cmp = compare_with_oracle(r, i, bound);
        t.scanned(ideal_samples(r, i, bound).len() * 2);
        if !cmp.agrees() {
            t.fail(LawWitness::new(
                &r.label(),
                format!(
                    "{}: case table says clean {} / weakly clean {}, oracle witnesses {:?} / {:?}",
                    cmp.ideal,
                    cmp.analytic.clean,
                    cmp.analytic.weakly_clean,
                    cmp.clean_witness.map(|x| x.to_string()),
                    cmp.weakly_clean_witness.map(|x| x.to_string())
                ),
            ));
        }
        if !cmp.analytic.validated_envelope {
            t.note(format!("{}: analytic (unvalidated envelope)", r.label()));
        }
    }
    t.finish()
}

/// Sign classes `(plus, minus)` realized by sampled elements of one factor
/// ideal, with one example element per class.
fn realized_classes(c: &Component, ideal: &CompIdeal, bound: u64) -> Vec<((bool, bool), CompElem)> {
    let mut seen: Vec<((bool, bool), CompElem)> = Vec::new();
    let mut push = |flags: (bool, bool), x: CompElem| {
        if !seen.iter().any(|(f, _)| *f == flags) {
            seen.push((flags, x));
        }
    };
    match (c, ideal) {
        (Component::Localized(r), CompIdeal::Loc(i)) => {
            for x in ideal_samples(r, i, bound) {
                push(r.sign_flags(&x), CompElem::Loc(x));
            }
        }
        (Component::Finite(r), CompIdeal::Fin(i)) => {
            for &x in i.members() {
                push(
                    (is_clean_element(r, x), is_clean_element(r, r.neg(x))),
                    CompElem::Fin(x),
                );
            }
        }
        _ => {}
    }
    seen
}

/// Compares a direct search for a tuple without a common sign against the
/// product criterion computed from the factor verdicts.
pub fn law_product_localized(components: &[(Component, CompIdeal)], bound: u64) -> LawReport {
    let inputs = components
        .iter()
        .map(|(c, i)| {
            let ideal = match (c, i) {
                (Component::Localized(r), CompIdeal::Loc(i)) => i.label(r.primes()),
                (_, CompIdeal::Fin(i)) => i.label(),
                _ => "?".to_string(),
            };
            format!("{} {}", c.label(), ideal)
        })
        .collect();
    let mut t = Tally::new("product-localized", inputs);
    let verdict = match is_weakly_clean_ideal_prod(components, bound) {
        Ok(v) => v,
        Err(e) => {
            t.skip(e.to_string());
            return t.finish();
        }
    };
    t.instance();
    let classes: Vec<_> = components
        .iter()
        .map(|(c, i)| realized_classes(c, i, bound))
        .collect();
    t.scanned(classes.iter().map(Vec::len).sum());
    // A tuple fails iff one slot lacks + and a slot lacks −; a single
    // element lacking both suffices.
    let mut bad: Option<Vec<CompElem>> = None;
    let zeros: Vec<CompElem> = components
        .iter()
        .map(|(c, _)| match c {
            Component::Localized(_) => CompElem::Loc(crate::localized::LocElem::zero()),
            Component::Finite(_) => CompElem::Fin(0),
        })
        .collect();
    'outer: for (a, ca) in classes.iter().enumerate() {
        for ((pa, ma), xa) in ca {
            if !pa && !ma {
                let mut tuple = zeros.clone();
                tuple[a] = xa.clone();
                bad = Some(tuple);
                break 'outer;
            }
            if *pa {
                continue;
            }
            for (b, cb) in classes.iter().enumerate() {
                if a == b {
                    continue;
                }
                if let Some((_, xb)) = cb.iter().find(|((_, mb), _)| !mb) {
                    let mut tuple = zeros.clone();
                    tuple[a] = xa.clone();
                    tuple[b] = xb.clone();
                    bad = Some(tuple);
                    break 'outer;
                }
            }
        }
    }
    let direct = bad.is_none();
    if let Some(tuple) = &bad {
        let pairs: Vec<(Component, CompElem)> = components
            .iter()
            .map(|(c, _)| c.clone())
            .zip(tuple.iter().cloned())
            .collect();
        match product_clean_class(&pairs) {
            Ok(cc) if !cc.is_weakly_clean() => {
                let shown: Vec<String> = tuple.iter().map(ToString::to_string).collect();
                t.note(format!(
                    "tuple without a common sign: ({})",
                    shown.join(", ")
                ));
            }
            _ => t.fail(LawWitness::new(
                "product",
                "direct witness tuple does not replay",
            )),
        }
    }
    if direct != verdict.weakly_clean {
        t.fail(LawWitness::new(
            "product",
            format!(
                "direct search: {direct}, factor criterion: {}",
                verdict.weakly_clean
            ),
        ));
    }
    if verdict.weakly_clean != verdict.witness.is_none() {
        t.fail(LawWitness::new(
            "product",
            "criterion and returned witness disagree",
        ));
    }
    t.note(format!(
        "product ideal weakly clean: {}",
        verdict.weakly_clean
    ));
    t.finish()
}
