use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value as Json;
use wclean_cli::dsl::{
    parse, parse_with, ErrorKind, IdealSpec, ModuleRef, NoNames, PairingRef, Pos, RingSpec,
};

fn wclean(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wclean"))
        .args(args)
        .env_remove("WCLEAN_MAX_ORDER")
        .env_remove("WCLEAN_MAX_IDEAL_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wclean-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, instance: &Json) {
    let errors: Vec<String> = v.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{instance}");
}

fn name() -> impl Strategy<Value = String> {
    "[A-Z][a-z0-9]{0,4}"
}

fn module() -> impl Strategy<Value = ModuleRef> {
    prop_oneof![
        Just(ModuleRef::Regular),
        Just(ModuleRef::Zero),
        (1usize..9).prop_map(ModuleRef::ZnMod),
        name().prop_map(ModuleRef::Named),
    ]
}

fn ideal() -> impl Strategy<Value = IdealSpec> {
    prop_oneof![
        Just(IdealSpec::Radical),
        Just(IdealSpec::All),
        proptest::collection::vec(0usize..20, 0..3).prop_map(IdealSpec::Gens),
    ]
}

fn ring_spec() -> impl Strategy<Value = RingSpec> {
    let leaf = prop_oneof![
        (1usize..20).prop_map(RingSpec::Zn),
        proptest::collection::vec(2u64..12, 1..3).prop_map(RingSpec::Localized),
        name().prop_map(RingSpec::Named),
        "[a-z]{1,6}\\.json".prop_map(RingSpec::Record),
    ];
    leaf.prop_recursive(3, 24, 4, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        prop_oneof![
            proptest::collection::vec(inner.clone(), 1..3).prop_map(RingSpec::Product),
            (1usize..3, b()).prop_map(|(k, r)| RingSpec::Matrix(k, r)),
            (b(), b(), module()).prop_map(|(r, s, m)| RingSpec::Tri2(r, s, m)),
            (
                [inner.clone(), inner.clone(), inner.clone()],
                [module(), module(), module()],
                proptest::option::of(prop_oneof![
                    Just(PairingRef::Mult),
                    Just(PairingRef::Zero),
                    name().prop_map(PairingRef::Named)
                ])
            )
                .prop_map(|(a, m, c)| RingSpec::Tri3(Box::new(a), m, c)),
            (b(), b(), module(), module()).prop_map(|(r, s, m, n)| RingSpec::Morita(r, s, m, n)),
            (b(), module()).prop_map(|(r, m)| RingSpec::Idealize(r, m)),
            (b(), ideal()).prop_map(|(r, i)| RingSpec::Quotient(r, i)),
            (b(), 1usize..4).prop_map(|(r, k)| RingSpec::Series(r, k)),
            (b(), 0usize..9).prop_map(|(r, e)| RingSpec::Corner(r, e)),
        ]
    })
}

proptest! {
    #[test]
    fn pretty_print_round_trips(spec in ring_spec()) {
        let text = spec.to_string();
        let back = parse_with(&text, &NoNames, usize::MAX).map_err(|d| TestCaseError::fail(format!("{text}: {d}")))?;
        prop_assert_eq!(back, spec);
    }
}

#[test]
fn diagnostics_carry_position_and_expectation() {
    let d = parse("(matrix 2").unwrap_err();
    assert_eq!(d.kind, ErrorKind::Syntax);
    assert_eq!(d.pos, Pos { line: 1, col: 10 });
    assert_eq!(d.expected, [")"]);
    assert_eq!(parse("(zn 6))").unwrap_err().kind, ErrorKind::Syntax);
    assert_eq!(parse("(zn \"6\")").unwrap_err().kind, ErrorKind::Lexical);
    assert_eq!(parse("(series (zn 2))").unwrap_err().kind, ErrorKind::Arity);
    let d = parse("(product (zn 16) (zn 16) (zn 2))").unwrap_err();
    assert_eq!(
        (d.kind, d.pos),
        (ErrorKind::SizeCap, Pos { line: 1, col: 1 })
    );
    let d = parse("(tri2 (zn 2) (zn 2) bogus-)").unwrap();
    assert_eq!(
        d,
        RingSpec::Tri2(
            Box::new(RingSpec::Zn(2)),
            Box::new(RingSpec::Zn(2)),
            ModuleRef::Named("bogus-".into())
        )
    );
}

#[test]
fn parse_errors_exit_two() {
    let o = wclean(&["analyze", "(matrix 2", "--element", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("syntax error at 1:10"), "{err}");
    assert!(err.contains("expected `)`"), "{err}");
    assert_eq!(
        wclean(&["ideal", "(zn 6)", "--gens", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(wclean(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        wclean(&["analyze", "(zn 6)", "--element", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wclean(&["laws", "--law", "no-such-law"]).status.code(),
        Some(2)
    );
}

#[test]
fn weakly_clean_ideal_of_z6() {
    let o = wclean(&["ideal", "(zn 6)", "--gens", "3", "--check", "weakly-clean"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: true"));
    assert!(text.contains("3 = "));
    let o = wclean(&[
        "--json",
        "ideal",
        "(zn 6)",
        "--gens",
        "3",
        "--check",
        "weakly-clean",
    ]);
    let j: Json = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["verdict"], Json::Bool(true));
    assert_eq!(j["ideal"], serde_json::json!([0, 3]));
    assert_eq!(j["elements"].as_array().unwrap().len(), 2);
    assert_valid(&schema("ideal.schema.json"), &j);
}

#[test]
fn findings_exit_one() {
    let o = wclean(&[
        "ideal",
        "(localized 3 5)",
        "--gens",
        "2/11",
        "--check",
        "clean",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = wclean(&[
        "analyze",
        "(product (localized 3 5) (localized 3 5))",
        "--element",
        "3/8;-3/8",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("weakly clean: false"));
    let o = wclean(&["analyze", "(localized 3 5)", "--element", "3/8"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn text_and_json_agree_on_verdicts() {
    let cases: &[&[&str]] = &[
        &["ideal", "(zn 8)", "--gens", "2", "--check", "uniquely"],
        &[
            "ideal",
            "(matrix 2 (zn 2))",
            "--gens",
            "all",
            "--check",
            "exchange",
        ],
        &[
            "ideal",
            "(localized 2 3)",
            "--gens",
            "3",
            "--check",
            "weakly-clean",
        ],
        &[
            "ideal",
            "(product (localized 3 5) (zn 4))",
            "--gens",
            "3;2",
            "--check",
            "weakly-clean",
        ],
    ];
    for args in cases {
        let text = wclean(args);
        let mut json_args = vec!["--json"];
        json_args.extend_from_slice(args);
        let json = wclean(&json_args);
        assert_eq!(text.status.code(), json.status.code(), "{args:?}");
        let j: Json = serde_json::from_str(&stdout(&json)).unwrap();
        assert_valid(&schema("ideal.schema.json"), &j);
        let verdict = j["verdict"].as_bool().unwrap();
        assert!(
            stdout(&text).contains(&format!("verdict: {verdict}")),
            "{args:?}"
        );
    }
}

#[test]
fn json_outputs_match_schemas() {
    let analyze = schema("analyze.schema.json");
    for args in [
        ["--json", "analyze", "(zn 4)", "--element", "2"],
        ["--json", "analyze", "(localized 3 5)", "--element", "3/8"],
        [
            "--json",
            "analyze",
            "(product (localized 3 5) (zn 2))",
            "--element",
            "3/8;1",
        ],
    ] {
        let j: Json = serde_json::from_str(&stdout(&wclean(&args))).unwrap();
        assert_valid(&analyze, &j);
    }
    let j: Json = serde_json::from_str(&stdout(&wclean(&[
        "--json",
        "radical",
        "(series (zn 4) 2)",
    ])))
    .unwrap();
    assert_valid(&schema("radical.schema.json"), &j);
    let list = schema("list.schema.json");
    for args in [
        ["--json", "units", "(zn 12)"],
        ["--json", "idempotents", "(localized 2)"],
    ] {
        let j: Json = serde_json::from_str(&stdout(&wclean(&args))).unwrap();
        assert_valid(&list, &j);
    }
    let j: Json = serde_json::from_str(&stdout(&wclean(&["--json", "examples"]))).unwrap();
    assert_valid(&schema("examples.schema.json"), &j);
    let line = schema("law-line.schema.json");
    let o = wclean(&[
        "--json",
        "laws",
        "--spec",
        "(zn 8)",
        "--spec",
        "(localized 3 5)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    for l in stdout(&o).lines() {
        assert_valid(&line, &serde_json::from_str(l).unwrap());
    }
}

#[test]
fn every_output_ends_with_newline() {
    for args in [
        vec!["examples"],
        vec!["units", "(zn 5)"],
        vec!["parse", "(matrix 2 (zn 2))"],
        vec!["--json", "parse", "(zn 2)"],
        vec!["laws", "--spec", "(zn 4)"],
    ] {
        let out = stdout(&wclean(&args));
        assert!(out.ends_with('\n'), "{args:?}");
    }
}

#[test]
fn size_cap_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_wclean"))
        .args(["units", "(zn 16)"])
        .env("WCLEAN_MAX_ORDER", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size-cap"));
    let o = Command::new(env!("CARGO_BIN_EXE_wclean"))
        .args(["units", "(zn 2)"])
        .env("WCLEAN_MAX_ORDER", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spec_file_definitions() {
    let file = scratch(
        "defs.wspec",
        "; Z_2 acting on itself, written out\n\
         (bimodule M (left (zn 2)) (right (zn 2))\n\
           (add ((0 1) (1 0)))\n\
           (left-action ((0 0) (0 1)))\n\
           (right-action ((0 0) (0 1))))\n\
         (pairing C (left M) (right M) (target M) (table ((0 0) (0 1))))\n\
         (ring T (tri3 (zn 2) (zn 2) (zn 2) M M M C))\n",
    );
    let f = file.to_str().unwrap();
    let o = wclean(&["--spec-file", f, "units", "T"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("units: 8"));
    let o = wclean(&[
        "--spec-file",
        f,
        "laws",
        "--spec",
        "T",
        "--law",
        "all-ideals-clean",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let direct = wclean(&[
        "units",
        "(tri3 (zn 2) (zn 2) (zn 2) regular regular regular mult)",
    ]);
    assert_eq!(
        stdout(&direct).lines().skip(1).collect::<Vec<_>>(),
        stdout(&wclean(&["--spec-file", f, "units", "T"]))
            .lines()
            .skip(1)
            .collect::<Vec<_>>()
    );
    let o = wclean(&["--spec-file", f, "units", "(tri2 (zn 2) (zn 2) Missing)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("name error"));
    let bad = scratch("bad.wspec", "(ring regular (zn 2))\n");
    assert_eq!(
        wclean(&["--spec-file", bad.to_str().unwrap(), "examples"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn ring_records_load_from_disk() {
    let record = wclean::constructions::zn(4).unwrap().to_record();
    let path = scratch("z4.json", &serde_json::to_string(&record).unwrap());
    let spec = format!("@{}", path.display());
    let o = wclean(&["radical", &spec]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("radical: {0, 2}"));
    let broken = scratch("broken.json", "{\"label\": \"x\"}");
    let o = wclean(&["units", &format!("@{}", broken.display())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn canonical_form_is_printed() {
    let o = wclean(&["parse", "(matrix   2\n (zn 2))"]);
    assert_eq!(stdout(&o), "(matrix 2 (zn 2))\n");
}
