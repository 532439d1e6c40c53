//! Command implementations. Each returns the text to print and whether the
//! run found a failure (exit code 1).

use std::fmt::Write as _;

use serde::Serialize;
use wclean::clean::{
    check_ideal, exchange_idempotent, is_uniquely_weakly_clean_element, is_weakly_clean_element,
    working_idempotents, CleanClass, Decomposition, ExchangeMode, Predicate, Sign, VerdictRecord,
};
use wclean::constructions::quotient;
use wclean::ideals::IdealSet;
use wclean::laws::{
    law_localized_criterion, law_product_localized, run_catalog, run_jobs, to_json_lines, to_table,
    Job, LawReport, Summary, GENERIC_LAWS,
};
use wclean::localized::{
    compare_with_oracle, is_weakly_clean_ideal_prod, normalize_ideal, product_clean_class,
    reproduce_examples, CompElem, CompIdeal, Component, ElementCheck, LocElem, LocIdeal,
    LocalizedZ, OracleComparison, ProductVerdict,
};
use wclean::ring::check_radical;
use wclean::FiniteRing;

use crate::eval::{EvalError, Value};

/// What a command prints and whether it counts as a finding.
pub struct Output {
    pub body: String,
    pub finding: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Self {
            body,
            finding: false,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn invalid(msg: impl Into<String>) -> EvalError {
    EvalError::Invalid(msg.into())
}

/// An element given by index or by its printed name.
pub fn finite_element(ring: &FiniteRing, text: &str) -> Result<usize, EvalError> {
    let text = text.trim();
    if let Ok(i) = text.parse::<usize>() {
        if i < ring.order() {
            return Ok(i);
        }
        return Err(invalid(format!(
            "{i} is out of range for {} (order {})",
            ring.label(),
            ring.order()
        )));
    }
    ring.elements()
        .find(|&x| ring.element_name(x) == text)
        .ok_or_else(|| invalid(format!("no element named `{text}` in {}", ring.label())))
}

fn comp_element(c: &Component, text: &str) -> Result<CompElem, EvalError> {
    match c {
        Component::Localized(r) => Ok(CompElem::Loc(r.parse(text.trim())?)),
        Component::Finite(r) => finite_element(r, text).map(CompElem::Fin),
    }
}

fn split_components(text: &str, n: usize) -> Result<Vec<&str>, EvalError> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != n {
        return Err(invalid(format!(
            "expected {n} components separated by `;`, got {}",
            parts.len()
        )));
    }
    Ok(parts)
}

fn show(ring: &FiniteRing, x: usize) -> String {
    let name = ring.element_name(x);
    if name == x.to_string() {
        name
    } else {
        format!("{name} (#{x})")
    }
}

fn describe_decomposition<E: std::fmt::Display>(x: &str, d: &Decomposition<E>) -> String {
    let op = match d.sign {
        Sign::Plus => '+',
        Sign::Minus => '-',
    };
    format!("{x} = {} {op} {}", d.unit, d.idempotent)
}

#[derive(Serialize)]
struct AnalyzeFinite<'a> {
    ring: &'a str,
    order: usize,
    element: usize,
    name: String,
    is_unit: bool,
    is_idempotent: bool,
    clean: bool,
    weakly_clean: bool,
    uniquely_weakly_clean: bool,
    class: CleanClass,
}

#[derive(Serialize)]
struct AnalyzeLocalized {
    ring: String,
    element: LocElem,
    is_unit: bool,
    clean: bool,
    weakly_clean: bool,
    class: CleanClass<LocElem>,
}

#[derive(Serialize)]
struct AnalyzeMixed {
    ring: String,
    element: Vec<CompElem>,
    clean: bool,
    weakly_clean: bool,
    class: CleanClass<Vec<CompElem>>,
}

fn class_lines<E: std::fmt::Display>(out: &mut String, x: &str, class: &CleanClass<E>) {
    let _ = writeln!(out, "clean: {}", class.is_clean());
    let _ = writeln!(out, "weakly clean: {}", class.is_weakly_clean());
    if class.plus.is_empty() && class.minus.is_empty() {
        let _ = writeln!(out, "decompositions: none");
    } else {
        let _ = writeln!(out, "decompositions:");
        for d in class.plus.iter().chain(&class.minus) {
            let _ = writeln!(out, "  {}", describe_decomposition(x, d));
        }
    }
}

struct Tuple<'a>(&'a [CompElem]);

impl std::fmt::Display for Tuple<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn analyze(value: &Value, element: &str, as_json: bool) -> Result<Output, EvalError> {
    match value {
        Value::Finite(r) => {
            let x = finite_element(r, element)?;
            let class = is_weakly_clean_element(r, x);
            let report = AnalyzeFinite {
                ring: r.label(),
                order: r.order(),
                element: x,
                name: r.element_name(x),
                is_unit: r.is_unit(x),
                is_idempotent: r.is_idempotent(x),
                clean: class.is_clean(),
                weakly_clean: class.is_weakly_clean(),
                uniquely_weakly_clean: is_uniquely_weakly_clean_element(r, x),
                class,
            };
            let finding = !report.weakly_clean;
            let body = if as_json {
                json(&report)
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "ring: {} (order {})", r.label(), r.order());
                let _ = writeln!(out, "element: {}", show(r, x));
                let _ = writeln!(out, "unit: {}", report.is_unit);
                let _ = writeln!(out, "idempotent: {}", report.is_idempotent);
                let _ = writeln!(
                    out,
                    "uniquely weakly clean: {}",
                    report.uniquely_weakly_clean
                );
                class_lines(&mut out, &x.to_string(), &report.class);
                out
            };
            Ok(Output { body, finding })
        }
        Value::Localized(r) => {
            let x = r.parse(element.trim())?;
            let class = r.clean_class(&x);
            let report = AnalyzeLocalized {
                ring: r.label(),
                is_unit: r.is_unit(&x),
                clean: class.is_clean(),
                weakly_clean: class.is_weakly_clean(),
                element: x,
                class,
            };
            let finding = !report.weakly_clean;
            let body = if as_json {
                json(&report)
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "ring: {}", report.ring);
                let _ = writeln!(out, "element: {}", report.element);
                let _ = writeln!(out, "unit: {}", report.is_unit);
                class_lines(&mut out, &report.element.to_string(), &report.class);
                out
            };
            Ok(Output { body, finding })
        }
        Value::Mixed(cs) => {
            let parts = split_components(element, cs.len())?;
            let tuple: Vec<(Component, CompElem)> = cs
                .iter()
                .zip(parts)
                .map(|(c, p)| comp_element(c, p).map(|x| (c.clone(), x)))
                .collect::<Result<_, _>>()?;
            let class = product_clean_class(&tuple).map_err(|e| invalid(e.to_string()))?;
            let element: Vec<CompElem> = tuple.into_iter().map(|(_, x)| x).collect();
            let report = AnalyzeMixed {
                ring: value.label(),
                clean: class.is_clean(),
                weakly_clean: class.is_weakly_clean(),
                element,
                class,
            };
            let finding = !report.weakly_clean;
            let body = if as_json {
                json(&report)
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "ring: {}", report.ring);
                let x = Tuple(&report.element).to_string();
                let _ = writeln!(out, "element: {x}");
                let _ = writeln!(out, "clean: {}", report.clean);
                let _ = writeln!(out, "weakly clean: {}", report.weakly_clean);
                let _ = writeln!(out, "decompositions:");
                for d in report.class.plus.iter().chain(&report.class.minus) {
                    let sign = if d.sign == Sign::Plus { '+' } else { '-' };
                    let _ = writeln!(
                        out,
                        "  {x} = {} {sign} {}",
                        Tuple(&d.unit),
                        Tuple(&d.idempotent)
                    );
                }
                if report.class.plus.is_empty() && report.class.minus.is_empty() {
                    let _ = writeln!(out, "  none");
                }
                out
            };
            Ok(Output { body, finding })
        }
    }
}

/// The `--check` values of the `ideal` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Clean,
    WeaklyClean,
    Uniquely,
    Exchange,
    ExchangeRelaxed,
}

impl Check {
    fn predicate(self) -> Predicate {
        match self {
            Check::Clean => Predicate::Clean,
            Check::WeaklyClean => Predicate::WeaklyClean,
            Check::Uniquely => Predicate::UniquelyWeaklyClean,
            Check::Exchange => Predicate::WeaklyExchange,
            Check::ExchangeRelaxed => Predicate::WeaklyExchangeRelaxed,
        }
    }
}

/// Why one ideal element passes (or what was found for it).
#[derive(Serialize)]
struct ElementWitness {
    element: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    idempotents: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exchange_idempotent: Option<usize>,
}

#[derive(Serialize)]
struct IdealReport {
    #[serde(flatten)]
    record: VerdictRecord,
    elements: Vec<ElementWitness>,
}

fn finite_gens(ring: &FiniteRing, gens: &str) -> Result<IdealSet, EvalError> {
    match gens.trim() {
        "all" => return Ok(IdealSet::full(ring)),
        "radical" => return Ok(IdealSet::jacobson(ring)),
        _ => {}
    }
    let gs = gens
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|g| finite_element(ring, g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IdealSet::closure(ring, &gs))
}

fn loc_gens(ring: &LocalizedZ, gens: &str) -> Result<LocIdeal, EvalError> {
    if gens.trim() == "all" {
        return Ok(LocIdeal::full(ring.primes()));
    }
    let mut sum = LocIdeal::Zero;
    for g in gens.split([',', ' ']).filter(|s| !s.is_empty()) {
        let i = normalize_ideal(ring, &ring.parse(g)?);
        sum = match (sum, i) {
            (LocIdeal::Zero, i) | (i, LocIdeal::Zero) => i,
            (LocIdeal::Principal { exponents: a }, LocIdeal::Principal { exponents: b }) => {
                LocIdeal::Principal {
                    exponents: a.iter().zip(&b).map(|(x, y)| *x.min(y)).collect(),
                }
            }
        };
    }
    Ok(sum)
}

fn element_witness(r: &FiniteRing, ideal: &IdealSet, x: usize, check: Check) -> ElementWitness {
    let class = is_weakly_clean_element(r, x);
    let mut w = ElementWitness {
        element: x,
        decomposition: None,
        idempotents: None,
        exchange_idempotent: None,
    };
    match check {
        Check::Clean => w.decomposition = class.plus.into_iter().next(),
        Check::WeaklyClean => w.decomposition = class.plus.into_iter().chain(class.minus).next(),
        Check::Uniquely => w.idempotents = Some(working_idempotents(r, x)),
        Check::Exchange => {
            w.exchange_idempotent = exchange_idempotent(r, ideal, x, ExchangeMode::Strict)
        }
        Check::ExchangeRelaxed => {
            w.exchange_idempotent = exchange_idempotent(r, ideal, x, ExchangeMode::Relaxed)
        }
    }
    w
}

#[derive(Serialize)]
struct LocIdealReport {
    check: &'static str,
    verdict: bool,
    #[serde(flatten)]
    comparison: OracleComparison,
}

#[derive(Serialize)]
struct MixedIdealReport {
    check: &'static str,
    verdict: bool,
    #[serde(flatten)]
    product: ProductVerdict,
}

pub fn ideal(
    value: &Value,
    gens: &str,
    check: Check,
    bound: u64,
    as_json: bool,
) -> Result<Output, EvalError> {
    let name = check.predicate().name();
    match value {
        Value::Finite(r) => {
            let ideal = finite_gens(r, gens)?;
            let v = check_ideal(r, &ideal, check.predicate());
            let report = IdealReport {
                record: VerdictRecord::new(r, &ideal, &v),
                elements: if v.holds {
                    ideal
                        .members()
                        .iter()
                        .map(|&x| element_witness(r, &ideal, x, check))
                        .collect()
                } else {
                    Vec::new()
                },
            };
            let body = if as_json {
                json(&report)
            } else {
                let mut out = String::new();
                let members: Vec<String> = ideal.members().iter().map(|&x| show(r, x)).collect();
                let _ = writeln!(out, "ring: {} (order {})", r.label(), r.order());
                let _ = writeln!(out, "ideal: {{{}}}", members.join(", "));
                let _ = writeln!(out, "check: {name}");
                let _ = writeln!(out, "verdict: {}", v.holds);
                if let Some(w) = &v.witness {
                    let _ = writeln!(
                        out,
                        "witness: {}",
                        serde_json::to_string(w).expect("witness serializes")
                    );
                }
                for w in &report.elements {
                    let x = w.element.to_string();
                    let detail = match (&w.decomposition, &w.idempotents, w.exchange_idempotent) {
                        (Some(d), _, _) => describe_decomposition(&x, d),
                        (_, Some(es), _) => format!("{x}: working idempotents {es:?}"),
                        (_, _, Some(e)) => format!("{x}: exchange idempotent {e}"),
                        _ => format!("{x}: -"),
                    };
                    let _ = writeln!(out, "  {detail}");
                }
                out
            };
            Ok(Output {
                body,
                finding: !v.holds,
            })
        }
        Value::Localized(r) => {
            let want_clean = match check {
                Check::Clean => true,
                Check::WeaklyClean => false,
                _ => {
                    return Err(invalid(format!(
                        "`{name}` is not available over localized rings"
                    )))
                }
            };
            let ideal = loc_gens(r, gens)?;
            let comparison = compare_with_oracle(r, &ideal, bound);
            let verdict = if want_clean {
                comparison.analytic.clean
            } else {
                comparison.analytic.weakly_clean
            };
            let report = LocIdealReport {
                check: name,
                verdict,
                comparison,
            };
            let body = if as_json {
                json(&report)
            } else {
                let c = &report.comparison;
                let mut out = String::new();
                let _ = writeln!(out, "ring: {}", c.ring);
                let _ = writeln!(out, "ideal: {}", c.ideal);
                let _ = writeln!(out, "check: {name}");
                let _ = writeln!(out, "verdict: {verdict}");
                let _ = writeln!(out, "case: {:?}", c.analytic.case);
                if !c.analytic.validated_envelope {
                    let _ = writeln!(out, "note: analytic (unvalidated envelope)");
                }
                let witness = if want_clean {
                    &c.clean_witness
                } else {
                    &c.weakly_clean_witness
                };
                match witness {
                    Some(x) => {
                        let e = ElementCheck::new(r, x);
                        let _ = writeln!(
                            out,
                            "witness: {x} (unit {}, {x}-1 unit {}, {x}+1 unit {})",
                            e.is_unit, e.minus_one_is_unit, e.plus_one_is_unit
                        );
                    }
                    None => {
                        let _ = writeln!(out, "witness: none within bound {bound}");
                    }
                }
                let _ = writeln!(out, "oracle agrees: {}", c.agrees());
                out
            };
            Ok(Output {
                body,
                finding: !verdict || !report.comparison.agrees(),
            })
        }
        Value::Mixed(cs) => {
            let want_clean = match check {
                Check::Clean => true,
                Check::WeaklyClean => false,
                _ => {
                    return Err(invalid(format!(
                        "`{name}` is not available over mixed products"
                    )))
                }
            };
            let parts = split_components(gens, cs.len())?;
            let comps: Vec<(Component, CompIdeal)> = cs
                .iter()
                .zip(parts)
                .map(|(c, g)| {
                    Ok((
                        c.clone(),
                        match c {
                            Component::Localized(r) => CompIdeal::Loc(loc_gens(r, g)?),
                            Component::Finite(r) => CompIdeal::Fin(finite_gens(r, g)?),
                        },
                    ))
                })
                .collect::<Result<_, EvalError>>()?;
            let product =
                is_weakly_clean_ideal_prod(&comps, bound).map_err(|e| invalid(e.to_string()))?;
            let verdict = if want_clean {
                product.clean
            } else {
                product.weakly_clean
            };
            let report = MixedIdealReport {
                check: name,
                verdict,
                product,
            };
            let body = if as_json {
                json(&report)
            } else {
                let p = &report.product;
                let mut out = String::new();
                let _ = writeln!(out, "ring: {}", value.label());
                let _ = writeln!(out, "check: {name}");
                let _ = writeln!(out, "verdict: {verdict}");
                for c in &p.components {
                    let _ = writeln!(
                        out,
                        "  {} {}: clean {}, weakly clean {}",
                        c.ring, c.ideal, c.clean, c.weakly_clean
                    );
                }
                if let Some(t) = &p.witness {
                    let _ = writeln!(out, "witness: {}", Tuple(t));
                }
                out
            };
            Ok(Output {
                body,
                finding: !verdict,
            })
        }
    }
}

fn require_finite<'v>(value: &'v Value, what: &str) -> Result<&'v FiniteRing, EvalError> {
    match value {
        Value::Finite(r) => Ok(r),
        other => Err(invalid(format!(
            "`{what}` needs a finite ring, got {}",
            other.label()
        ))),
    }
}

#[derive(Serialize)]
struct RadicalReport<'a> {
    ring: &'a str,
    order: usize,
    radical: Vec<usize>,
    names: Vec<String>,
    checks_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    defect: Option<String>,
    quotient_order: usize,
    quotient_radical_trivial: bool,
}

pub fn radical(value: &Value, as_json: bool) -> Result<Output, EvalError> {
    let r = require_finite(value, "radical")?;
    let j = IdealSet::jacobson(r);
    let check = check_radical(r, j.members());
    let q = quotient(r, &j)?;
    let report = RadicalReport {
        ring: r.label(),
        order: r.order(),
        radical: j.members().to_vec(),
        names: j.members().iter().map(|&x| r.element_name(x)).collect(),
        checks_pass: check.is_ok(),
        defect: check.err().map(|d| d.to_string()),
        quotient_order: q.ring().order(),
        quotient_radical_trivial: q.ring().jacobson_radical() == [0],
    };
    let finding = !report.checks_pass || !report.quotient_radical_trivial;
    let body = if as_json {
        json(&report)
    } else {
        let mut out = String::new();
        let members: Vec<String> = j.members().iter().map(|&x| show(r, x)).collect();
        let _ = writeln!(out, "ring: {} (order {})", r.label(), r.order());
        let _ = writeln!(out, "radical: {{{}}}", members.join(", "));
        let _ = writeln!(
            out,
            "checks: {}",
            report.defect.as_deref().unwrap_or("pass")
        );
        let _ = writeln!(
            out,
            "quotient: order {}, radical trivial: {}",
            report.quotient_order, report.quotient_radical_trivial
        );
        out
    };
    Ok(Output { body, finding })
}

#[derive(Serialize)]
struct Listed {
    index: usize,
    name: String,
}

#[derive(Serialize)]
struct ListReport<'a> {
    ring: String,
    kind: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<Listed>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    description: Option<String>,
}

/// `units` or `idempotents`.
pub fn list(value: &Value, kind: &'static str, as_json: bool) -> Result<Output, EvalError> {
    let report = match value {
        Value::Finite(r) => {
            let xs = if kind == "units" {
                r.units()
            } else {
                r.idempotents()
            };
            ListReport {
                ring: r.label().to_string(),
                kind,
                elements: Some(
                    xs.iter()
                        .map(|&x| Listed {
                            index: x,
                            name: r.element_name(x),
                        })
                        .collect(),
                ),
                description: None,
            }
        }
        Value::Localized(r) => ListReport {
            ring: r.label(),
            kind,
            elements: None,
            description: Some(if kind == "units" {
                format!(
                    "a/b in lowest terms with a coprime to {}",
                    r.primes().modulus()
                )
            } else {
                "0 and 1".to_string()
            }),
        },
        Value::Mixed(_) => ListReport {
            ring: value.label(),
            kind,
            elements: None,
            description: Some(format!("componentwise {kind} of each factor")),
        },
    };
    let body = if as_json {
        json(&report)
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "ring: {}", report.ring);
        match (&report.elements, &report.description) {
            (Some(xs), _) => {
                let _ = writeln!(out, "{kind}: {}", xs.len());
                for x in xs {
                    let _ = writeln!(out, "  {:>4}  {}", x.index, x.name);
                }
            }
            (None, Some(d)) => {
                let _ = writeln!(out, "{kind}: {d}");
            }
            (None, None) => {}
        }
        out
    };
    Ok(Output::ok(body))
}

fn render_laws(reports: &[LawReport], as_json: bool) -> Output {
    let summary = Summary::of(reports);
    Output {
        body: if as_json {
            to_json_lines(reports)
        } else {
            to_table(reports)
        },
        finding: summary.failed > 0,
    }
}

pub fn laws_catalog(filter: &[String], as_json: bool) -> Output {
    let mut reports = run_catalog().reports;
    if !filter.is_empty() {
        reports.retain(|r| filter.iter().any(|f| f == r.law));
    }
    render_laws(&reports, as_json)
}

/// Generic laws over finite rings; the ideal criterion over localized
/// rings; the product criterion over mixed products.
pub fn laws_for(values: &[Value], filter: &[String], bound: u64, as_json: bool) -> Output {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    for v in values {
        match v {
            Value::Finite(r) => {
                for (_, law) in GENERIC_LAWS {
                    let law = *law;
                    jobs.push(Box::new(move || law(r)));
                }
            }
            Value::Localized(r) => {
                jobs.push(Box::new(move || {
                    let n = r.primes().len() as u32;
                    let mut cases = vec![(r.clone(), LocIdeal::Zero)];
                    for code in 0..3u32.pow(n) {
                        let exps: Vec<u32> = (0..n).map(|i| code / 3u32.pow(i) % 3).collect();
                        let ideal =
                            LocIdeal::principal(r.primes(), exps).expect("one exponent per prime");
                        cases.push((r.clone(), ideal));
                    }
                    law_localized_criterion(&cases, bound)
                }));
            }
            Value::Mixed(cs) => {
                jobs.push(Box::new(move || {
                    let comps: Vec<(Component, CompIdeal)> = cs
                        .iter()
                        .map(|c| {
                            let ideal = match c {
                                Component::Localized(r) => {
                                    CompIdeal::Loc(LocIdeal::full(r.primes()))
                                }
                                Component::Finite(r) => CompIdeal::Fin(IdealSet::full(r)),
                            };
                            (c.clone(), ideal)
                        })
                        .collect();
                    law_product_localized(&comps, bound)
                }));
            }
        }
    }
    let mut reports = run_jobs(&jobs);
    if !filter.is_empty() {
        reports.retain(|r| filter.iter().any(|f| f == r.law));
    }
    render_laws(&reports, as_json)
}

pub fn examples(as_json: bool) -> Output {
    let report = reproduce_examples();
    let u = &report.unit_ideal;
    let p = &report.product_ideal;
    let as_expected = u.weakly_clean
        && !u.clean
        && !u.featured_witness.clean_plus
        && !p.weakly_clean
        && !p.featured_witness_weakly_clean;
    let body = if as_json {
        json(&report)
    } else {
        let mut out = String::new();
        let flags = |e: &ElementCheck| {
            format!(
                "{x}: unit {}, {x}-1 unit {}, {x}+1 unit {}, clean(+) {}, clean(-) {}",
                e.is_unit,
                e.minus_one_is_unit,
                e.plus_one_is_unit,
                e.clean_plus,
                e.clean_minus,
                x = e.element
            )
        };
        let _ = writeln!(out, "unit-generated ideal <{}> of {}", u.generator, u.ring);
        let _ = writeln!(out, "  generator is a unit: {}", u.generator_is_unit);
        let _ = writeln!(out, "  ideal is the whole ring: {}", u.ideal_is_whole_ring);
        let _ = writeln!(
            out,
            "  weakly clean: {}, clean: {}",
            u.weakly_clean, u.clean
        );
        if let Some(w) = &u.oracle_witness {
            let _ = writeln!(out, "  oracle witness {}", flags(w));
        }
        let _ = writeln!(out, "  featured witness {}", flags(&u.featured_witness));
        let pv = &u.proper_variant;
        let _ = writeln!(
            out,
            "  proper ideal {}: weakly clean {}, clean {}, witness {}",
            pv.ideal,
            pv.analytic.weakly_clean,
            pv.analytic.clean,
            pv.clean_witness
                .as_ref()
                .map_or("none".to_string(), ToString::to_string)
        );
        for f in &u.findings {
            let _ = writeln!(out, "  finding: {f}");
        }
        let _ = writeln!(
            out,
            "product ideal <{}> x <{}> of {}",
            p.generators[0], p.generators[1], p.ring
        );
        let _ = writeln!(out, "  generators are units: {:?}", p.generators_are_units);
        let _ = writeln!(out, "  weakly clean: {}", p.weakly_clean);
        let _ = writeln!(
            out,
            "  every factor weakly clean and at most one not clean: {}",
            p.at_most_one_not_clean
        );
        if let Some(t) = &p.verdict.witness {
            let _ = writeln!(out, "  search witness {}", Tuple(t));
        }
        for e in &p.featured_witness {
            let _ = writeln!(out, "  featured component {}", flags(e));
        }
        let _ = writeln!(
            out,
            "  featured tuple weakly clean: {}",
            p.featured_witness_weakly_clean
        );
        for f in &p.findings {
            let _ = writeln!(out, "  finding: {f}");
        }
        out
    };
    Output {
        body,
        finding: !as_expected,
    }
}
