use wclean::clean::{check_ideal, lift_idempotent, Predicate};
use wclean::constructions::quotient;
use wclean::ideals::{all_ideals, IdealSet};
use wclean::laws::{run_catalog, to_json_lines, Verdict};
use wclean::ring::check_radical;

#[test]
fn every_catalog_law_passes() {
    let run = run_catalog();
    assert_eq!(
        run.summary.failed,
        0,
        "{}",
        wclean::laws::to_table(&run.reports)
    );
    assert!(run.summary.laws >= 15);
    assert!(run.rings.len() >= 25);
    for r in &run.reports {
        if let Verdict::Skipped { reason } = &r.verdict {
            assert!(!reason.is_empty());
        }
    }
    for law in [
        "all-ideals-clean",
        "radical",
        "lifting",
        "sign-symmetry",
        "det-cofactor",
    ] {
        assert!(
            run.reports
                .iter()
                .any(|r| r.law == law && r.verdict == Verdict::Pass),
            "{law} ran"
        );
    }
}

#[test]
fn catalog_json_is_stable() {
    let a = to_json_lines(&run_catalog().reports);
    let b = to_json_lines(&run_catalog().reports);
    assert_eq!(a, b);
    assert!(a.ends_with('\n'));
}

#[test]
fn radicals_quotients_and_lifts() {
    for r in wclean::laws::catalog_rings() {
        let j = IdealSet::jacobson(&r);
        assert!(check_radical(&r, j.members()).is_ok(), "{}", r.label());
        let q = quotient(&r, &j).unwrap();
        assert_eq!(q.ring().jacobson_radical(), vec![0], "{}/J", r.label());
        for &c in q.ring().idempotents() {
            let e = lift_idempotent(&r, &q, c).unwrap();
            assert!(r.is_idempotent(e));
            assert_eq!(q.project(e), c);
        }
    }
}

#[test]
fn every_ideal_of_small_catalog_rings_is_clean() {
    for r in wclean::laws::catalog_rings()
        .iter()
        .filter(|r| r.order() <= 64)
    {
        for i in all_ideals(r).unwrap() {
            let v = check_ideal(r, &i, Predicate::Clean);
            assert!(v.holds, "{} {}", r.label(), i.label());
        }
    }
}
