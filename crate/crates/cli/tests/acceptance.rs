//! Release acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero when any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use wclean::clean::{is_clean_ideal, lift_idempotent};
use wclean::constructions::{quotient, zn};
use wclean::ideals::{all_ideals, IdealSet};
use wclean::laws::{catalog_rings, law_det_cofactor, run_catalog, DetMode, Verdict};
use wclean::localized::{
    oracle_grid, product_clean_class, reproduce_examples, CompElem, Component, LocalizedZ,
    DEFAULT_SEARCH_BOUND,
};
use wclean::ring::{check_radical, max_order, set_max_ideal_enum_order};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn catalog_suite() -> Check {
    let start = Instant::now();
    let run = run_catalog();
    let elapsed = start.elapsed();
    let s = &run.summary;
    ensure(s.failed == 0, format!("{} law reports failed", s.failed))?;
    ensure(s.laws >= 15, format!("only {} laws ran", s.laws))?;
    ensure(
        run.rings.len() >= 25,
        format!("only {} catalog rings", run.rings.len()),
    )?;
    ensure(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:.1?}"),
    )?;
    Ok(format!(
        "{} reports over {} laws and {} rings, {} passed, {} skipped, 0 failed in {:.2?}",
        s.reports,
        s.laws,
        run.rings.len(),
        s.passed,
        s.skipped,
        elapsed
    ))
}

fn unit_ideal_example() -> Check {
    let u = reproduce_examples().unit_ideal;
    ensure(
        u.generator_is_unit && u.ideal_is_whole_ring,
        "2/11 should generate the whole ring",
    )?;
    ensure(
        u.weakly_clean && !u.clean,
        "expected weakly clean and not clean",
    )?;
    let w = u
        .oracle_witness
        .ok_or("the oracle found no non-clean element")?;
    let bound = DEFAULT_SEARCH_BOUND.into();
    ensure(
        w.element.numer().magnitude() <= &bound && w.element.denom() <= &bound.into(),
        "oracle witness outside the bound",
    )?;
    ensure(
        !w.clean_plus && !w.is_unit && !w.minus_one_is_unit,
        "oracle witness has a clean decomposition",
    )?;
    let f = &u.featured_witness;
    ensure(
        f.element.to_string() == "3/8",
        "featured witness should be 3/8",
    )?;
    ensure(
        !f.is_unit && !f.minus_one_is_unit && f.plus_one_is_unit,
        "3/8 should have x and x-1 non-units and x+1 a unit",
    )?;
    Ok(format!(
        "<{}> = R in {}, weakly clean true, clean false, oracle witness {}, 3/8 checked",
        u.generator, u.ring, w.element
    ))
}

fn product_example() -> Check {
    let p = reproduce_examples().product_ideal;
    ensure(p.sum_is_whole_ring, "both generators should be units")?;
    ensure(
        !p.weakly_clean && !p.at_most_one_not_clean,
        "product should not be weakly clean",
    )?;
    let [a, b] = [&p.featured_witness[0], &p.featured_witness[1]];
    ensure(
        a.clean_minus && !a.clean_plus && b.clean_plus && !b.clean_minus,
        "featured components should have opposite exclusive sign classes",
    )?;
    ensure(
        !p.featured_witness_weakly_clean,
        "featured tuple decomposes",
    )?;
    let ring = LocalizedZ::from_primes([3, 5]).map_err(|e| e.to_string())?;
    let tuple = p.verdict.witness.as_ref().ok_or("no search witness")?;
    let pairs: Vec<(Component, CompElem)> = tuple
        .iter()
        .map(|x| (Component::Localized(ring.clone()), x.clone()))
        .collect();
    let replay = product_clean_class(&pairs).map_err(|e| e.to_string())?;
    ensure(!replay.is_weakly_clean(), "search witness does not replay")?;
    Ok(format!(
        "not weakly clean; featured ({}, {}) has classes (-only, +only); search witness replays",
        a.element, b.element
    ))
}

fn oracle_agreement() -> Check {
    let grid = oracle_grid(&[2, 3, 5, 7, 11], 3, 2, DEFAULT_SEARCH_BOUND);
    let bad: Vec<String> = grid
        .iter()
        .filter(|c| !c.agrees())
        .map(|c| format!("{} {}", c.ring, c.ideal))
        .collect();
    ensure(bad.is_empty(), format!("disagreements: {}", bad.join(", ")))?;
    Ok(format!(
        "{} ideals compared at bound {}, 0 disagreements",
        grid.len(),
        DEFAULT_SEARCH_BOUND
    ))
}

fn radicals() -> Check {
    let rings = catalog_rings();
    for r in &rings {
        let j = IdealSet::jacobson(r);
        check_radical(r, j.members()).map_err(|d| format!("{}: {d}", r.label()))?;
        let q = quotient(r, &j).map_err(|e| format!("{}: {e}", r.label()))?;
        ensure(
            q.ring().jacobson_radical() == [0],
            format!("{}/J has a nonzero radical", r.label()),
        )?;
    }
    Ok(format!(
        "{} rings: radical checks pass and every R/J has trivial radical",
        rings.len()
    ))
}

fn lifting() -> Check {
    let rings = catalog_rings();
    let mut lifts = 0;
    for r in &rings {
        let j = IdealSet::jacobson(r);
        let q = quotient(r, &j).map_err(|e| e.to_string())?;
        for &c in q.ring().idempotents() {
            let e = lift_idempotent(r, &q, c)
                .map_err(|err| format!("{} coset {c}: {err}", r.label()))?;
            let diff = r.sub(e, q.representative(c));
            ensure(
                r.is_idempotent(e) && j.contains(diff),
                format!("{} coset {c}: bad lift {e}", r.label()),
            )?;
            lifts += 1;
        }
    }
    Ok(format!(
        "{lifts} idempotent cosets lifted and verified over {} rings",
        rings.len()
    ))
}

fn det_identity() -> Check {
    let z5 = zn(5).map_err(|e| e.to_string())?;
    let z6 = zn(6).map_err(|e| e.to_string())?;
    let runs = [
        law_det_cofactor(&z6, 2, DetMode::Exhaustive),
        law_det_cofactor(
            &z5,
            3,
            DetMode::Sampled {
                count: 200,
                seed: 5,
            },
        ),
        law_det_cofactor(
            &z6,
            3,
            DetMode::Sampled {
                count: 200,
                seed: 6,
            },
        ),
    ];
    for r in &runs {
        ensure(
            r.verdict == Verdict::Pass,
            format!("{:?}: {:?}", r.inputs, r.verdict),
        )?;
    }
    ensure(
        runs[0].stats.instances == 6u64.pow(5) * 4,
        "exhaustive run is incomplete",
    )?;
    ensure(
        runs[1].stats.instances == 200 && runs[2].stats.instances == 200,
        "sample count",
    )?;
    Ok(format!(
        "Z_6 k=2: {} evaluations; Z_5 and Z_6 k=3: 200 samples each; identity holds throughout",
        runs[0].stats.instances
    ))
}

fn determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_wclean"))
            .args(["laws", "--catalog", "--json"])
            .env_remove("WCLEAN_MAX_ORDER")
            .env_remove("WCLEAN_MAX_IDEAL_ORDER")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(
        a.status.success() && b.status.success(),
        "laws --catalog --json exited nonzero",
    )?;
    ensure(!a.stdout.is_empty(), "empty output")?;
    ensure(a.stdout == b.stdout, "outputs differ between runs")?;
    Ok(format!(
        "two runs of `wclean laws --catalog --json` are byte-identical ({} bytes)",
        a.stdout.len()
    ))
}

fn finite_cleanness() -> Check {
    // Enumerate the ideals of every catalog ring, including those above the
    // default enumeration cap.
    set_max_ideal_enum_order(max_order());
    let rings = catalog_rings();
    let mut ideals = 0;
    for r in &rings {
        for i in all_ideals(r).map_err(|e| format!("{}: {e}", r.label()))? {
            let v = is_clean_ideal(r, &i);
            ensure(v.holds, format!("{} {} is not clean", r.label(), i.label()))?;
            ideals += 1;
        }
    }
    Ok(format!(
        "{ideals} ideals over {} rings verified clean by exhaustive search",
        rings.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("catalog law suite", catalog_suite),
        ("unit-generated ideal of Z_(3,5)", unit_ideal_example),
        ("product ideal of Z_(3,5) x Z_(3,5)", product_example),
        ("case table vs bounded oracle", oracle_agreement),
        ("radical correctness", radicals),
        ("idempotent lifting", lifting),
        ("determinant cofactor identity", det_identity),
        ("deterministic JSON", determinism),
        ("finite-cleanness scan", finite_cleanness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
