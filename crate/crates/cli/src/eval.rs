//! Turns parsed specifications into rings, and loads spec files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use thiserror::Error;
use wclean::constructions::{
    corner_ring, direct_product, idealization, matrix_ring, morita_zero, quotient, tri2, tri3,
    truncated_power_series, zn, Bimodule, BimoduleError, ConstructionError, PairingMap,
};
use wclean::ideals::{IdealError, IdealSet};
use wclean::localized::{Component, LocError, LocalizedZ};
use wclean::ring::max_order;
use wclean::{FiniteRing, RingError, RingRecord};

use crate::dsl::{
    is_identifier, module_from_sexp, parse_forms, parse_with, ring_from_sexp, Diagnostic,
    IdealSpec, ModuleRef, Names, PairingRef, RingSpec, Sexp, RESERVED,
};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("{origin}: {source}")]
    Parse { origin: String, source: Diagnostic },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Localized(#[from] LocError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: invalid ring record: {source}")]
    Record {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Invalid(String),
}

/// A ring the tool can analyze.
#[derive(Debug, Clone)]
pub enum Value {
    Finite(FiniteRing),
    Localized(LocalizedZ),
    /// A product with at least one localized factor.
    Mixed(Vec<Component>),
}

impl Value {
    pub fn label(&self) -> String {
        match self {
            Value::Finite(r) => r.label().to_string(),
            Value::Localized(r) => r.label(),
            Value::Mixed(cs) => cs
                .iter()
                .map(Component::label)
                .collect::<Vec<_>>()
                .join(" x "),
        }
    }

    fn components(self) -> Vec<Component> {
        match self {
            Value::Finite(r) => vec![Component::Finite(r)],
            Value::Localized(r) => vec![Component::Localized(r)],
            Value::Mixed(cs) => cs,
        }
    }
}

/// Named bimodules, pairings and rings from a spec file.
#[derive(Debug, Default)]
pub struct Env {
    modules: BTreeMap<String, Bimodule>,
    pairings: BTreeMap<String, PairingMap>,
    rings: BTreeMap<String, Value>,
}

impl Names for Env {
    fn ring_order(&self, name: &str) -> Option<Option<u128>> {
        self.rings.get(name).map(|v| match v {
            Value::Finite(r) => Some(r.order() as u128),
            _ => None,
        })
    }

    fn module_order(&self, name: &str) -> Option<u128> {
        self.modules.get(name).map(|m| m.order() as u128)
    }

    fn has_pairing(&self, name: &str) -> bool {
        self.pairings.contains_key(name)
    }

    fn strict(&self) -> bool {
        true
    }
}

fn finite(v: Value, what: &str) -> Result<FiniteRing, EvalError> {
    match v {
        Value::Finite(r) => Ok(r),
        other => Err(EvalError::Invalid(format!(
            "{what} needs a finite ring, got {}",
            other.label()
        ))),
    }
}

impl Env {
    /// Parses `input` against these definitions.
    pub fn parse(&self, input: &str) -> Result<RingSpec, EvalError> {
        parse_with(input, self, max_order()).map_err(|source| EvalError::Parse {
            origin: "spec".to_string(),
            source,
        })
    }

    pub fn eval(&self, spec: &RingSpec) -> Result<Value, EvalError> {
        let fin = |s: &RingSpec, what: &str| -> Result<FiniteRing, EvalError> {
            finite(self.eval(s)?, what)
        };
        Ok(match spec {
            RingSpec::Zn(n) => Value::Finite(zn(*n)?),
            RingSpec::Product(specs) => {
                let values = specs
                    .iter()
                    .map(|s| self.eval(s))
                    .collect::<Result<Vec<_>, _>>()?;
                if values.iter().all(|v| matches!(v, Value::Finite(_))) {
                    let rings: Vec<FiniteRing> = values
                        .into_iter()
                        .map(|v| finite(v, "product"))
                        .collect::<Result<_, _>>()?;
                    Value::Finite(direct_product(&rings)?.into_ring())
                } else {
                    Value::Mixed(values.into_iter().flat_map(Value::components).collect())
                }
            }
            RingSpec::Matrix(k, r) => {
                Value::Finite(matrix_ring(&fin(r, "matrix")?, *k)?.into_ring())
            }
            RingSpec::Tri2(r, s, m) => {
                let (r, s) = (fin(r, "tri2")?, fin(s, "tri2")?);
                let m = self.module(m, &s, &r)?;
                Value::Finite(tri2(&r, &s, &m)?.into_ring())
            }
            RingSpec::Tri3(a, m, comp) => {
                let [a1, a2, a3] = [
                    fin(&a[0], "tri3")?,
                    fin(&a[1], "tri3")?,
                    fin(&a[2], "tri3")?,
                ];
                let m21 = self.module(&m[0], &a2, &a1)?;
                let m31 = self.module(&m[1], &a3, &a1)?;
                let m32 = self.module(&m[2], &a3, &a2)?;
                let comp = match comp {
                    None | Some(PairingRef::Zero) => None,
                    Some(PairingRef::Mult) => {
                        let orders = [m21.order(), m31.order(), m32.order()];
                        if orders.iter().any(|&o| o != a1.order()) || a1 != a2 || a2 != a3 {
                            return Err(EvalError::Invalid(
                                "`mult` needs one ring on the diagonal and regular modules"
                                    .to_string(),
                            ));
                        }
                        Some(PairingMap::from_fn(&m32, &m21, &m31, |p, q| a1.mul(p, q))?)
                    }
                    Some(PairingRef::Named(n)) => Some(self.pairings[n].clone()),
                };
                Value::Finite(tri3(&a1, &a2, &a3, &m21, &m31, &m32, comp.as_ref())?.into_ring())
            }
            RingSpec::Morita(r, s, m, n) => {
                let (r, s) = (fin(r, "morita")?, fin(s, "morita")?);
                let m = self.module(m, &r, &s)?;
                let n = self.module(n, &s, &r)?;
                Value::Finite(morita_zero(&r, &s, &m, &n)?.into_ring())
            }
            RingSpec::Idealize(r, m) => {
                let r = fin(r, "idealize")?;
                let m = self.module(m, &r, &r)?;
                Value::Finite(idealization(&r, &m)?.into_ring())
            }
            RingSpec::Quotient(r, ideal) => {
                let r = fin(r, "quotient")?;
                let ideal = ideal_of(&r, ideal)?;
                Value::Finite(quotient(&r, &ideal)?.into_ring())
            }
            RingSpec::Series(r, k) => {
                Value::Finite(truncated_power_series(&fin(r, "series")?, *k)?.into_ring())
            }
            RingSpec::Localized(ps) => {
                Value::Localized(LocalizedZ::from_primes(ps.iter().copied())?)
            }
            RingSpec::Corner(r, e) => {
                Value::Finite(corner_ring(&fin(r, "corner")?, *e)?.into_ring())
            }
            RingSpec::Named(n) => self
                .rings
                .get(n)
                .cloned()
                .ok_or_else(|| EvalError::Invalid(format!("unknown ring `{n}`")))?,
            RingSpec::Record(path) => Value::Finite(load_record(Path::new(path))?),
        })
    }

    fn module(
        &self,
        m: &ModuleRef,
        left: &FiniteRing,
        right: &FiniteRing,
    ) -> Result<Bimodule, EvalError> {
        Ok(match m {
            ModuleRef::Regular => {
                if left != right {
                    return Err(EvalError::Invalid(format!(
                        "`regular` needs equal rings on both sides, got {} and {}",
                        left.label(),
                        right.label()
                    )));
                }
                Bimodule::regular(left)
            }
            ModuleRef::Zero => Bimodule::zero(left, right),
            ModuleRef::ZnMod(k) => Bimodule::cyclic(*k, left, right)?,
            ModuleRef::Named(n) => self
                .modules
                .get(n)
                .cloned()
                .ok_or_else(|| EvalError::Invalid(format!("unknown bimodule `{n}`")))?,
        })
    }

    /// Reads a spec file of `bimodule`, `pairing` and `ring` definitions.
    pub fn load(path: &Path) -> Result<Self, EvalError> {
        let text = std::fs::read_to_string(path).map_err(|source| EvalError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let origin = path.display().to_string();
        let mut env = Env::default();
        let forms = parse_forms(&text).map_err(|source| EvalError::Parse {
            origin: origin.clone(),
            source,
        })?;
        for form in &forms {
            env.define(form).map_err(|e| match e {
                EvalError::Parse { source, .. } => EvalError::Parse {
                    origin: origin.clone(),
                    source,
                },
                other => EvalError::Invalid(format!("{origin}:{}: {other}", form.pos())),
            })?;
        }
        Ok(env)
    }

    fn define(&mut self, form: &Sexp) -> Result<(), EvalError> {
        let fail = |pos, msg: String| EvalError::Invalid(format!("{pos}: {msg}"));
        let Sexp::List { items, pos, .. } = form else {
            return Err(fail(form.pos(), "expected a definition".to_string()));
        };
        let (kind, name) = match items.as_slice() {
            [Sexp::Atom { text: k, .. }, Sexp::Atom { text: n, .. }, ..] => (k.as_str(), n.clone()),
            _ => {
                return Err(fail(
                    *pos,
                    "expected (bimodule|pairing|ring NAME ...)".to_string(),
                ))
            }
        };
        if !is_identifier(&name) || RESERVED.contains(&name.as_str()) {
            return Err(fail(*pos, format!("`{name}` cannot name a definition")));
        }
        let parse_err = |source| EvalError::Parse {
            origin: String::new(),
            source,
        };
        match kind {
            "ring" => {
                let [_, _, body] = items.as_slice() else {
                    return Err(fail(*pos, "expected (ring NAME SPEC)".to_string()));
                };
                let spec = ring_from_sexp(body, self, max_order()).map_err(parse_err)?;
                let value = self.eval(&spec)?;
                let value = match value {
                    Value::Finite(r) => Value::Finite(r.with_label(name.clone())),
                    other => other,
                };
                self.rings.insert(name, value);
            }
            "bimodule" => {
                let fields = keyed(
                    &items[2..],
                    &["left", "right", "add", "left-action", "right-action"],
                )
                .map_err(|m| fail(*pos, m))?;
                let left = finite(
                    self.eval(&ring_from_sexp(fields[0], self, max_order()).map_err(parse_err)?)?,
                    "bimodule",
                )?;
                let right = finite(
                    self.eval(&ring_from_sexp(fields[1], self, max_order()).map_err(parse_err)?)?,
                    "bimodule",
                )?;
                let [add, lt, rt] = [table(fields[2])?, table(fields[3])?, table(fields[4])?];
                let m = Bimodule::from_tables(name.clone(), add, &left, &right, lt, rt)?;
                self.modules.insert(name, m);
            }
            "pairing" => {
                let fields = keyed(&items[2..], &["left", "right", "target", "table"])
                    .map_err(|m| fail(*pos, m))?;
                let mut mods = Vec::new();
                for f in &fields[..3] {
                    let r = module_from_sexp(f, self).map_err(parse_err)?;
                    match r {
                        ModuleRef::Named(n) => mods.push(self.modules[&n].clone()),
                        _ => {
                            return Err(fail(f.pos(), "pairings take named bimodules".to_string()))
                        }
                    }
                }
                let t = table(fields[3])?;
                let p = PairingMap::from_fn(&mods[0], &mods[1], &mods[2], |a, b| {
                    t.get(a)
                        .and_then(|row| row.get(b))
                        .copied()
                        .unwrap_or(usize::MAX)
                })?;
                self.pairings.insert(name, p);
            }
            other => return Err(fail(*pos, format!("unknown definition kind `{other}`"))),
        }
        Ok(())
    }
}

/// Picks `(key value)` fields in the order of `keys`; each is required once.
fn keyed<'s>(fields: &'s [Sexp], keys: &[&str]) -> Result<Vec<&'s Sexp>, String> {
    let mut found: Vec<Option<&Sexp>> = vec![None; keys.len()];
    for f in fields {
        let Sexp::List { items, .. } = f else {
            return Err(format!("expected a ({} ...) field", keys.join("|")));
        };
        let [Sexp::Atom { text, .. }, value] = items.as_slice() else {
            return Err(format!("{}: expected (key value)", f.pos()));
        };
        let i = keys
            .iter()
            .position(|k| k == text)
            .ok_or_else(|| format!("{}: unknown field `{text}`", f.pos()))?;
        if found[i].replace(value).is_some() {
            return Err(format!("{}: duplicate field `{text}`", f.pos()));
        }
    }
    found
        .into_iter()
        .zip(keys)
        .map(|(v, k)| v.ok_or_else(|| format!("missing field `{k}`")))
        .collect()
}

fn table(s: &Sexp) -> Result<Vec<Vec<usize>>, EvalError> {
    let bad = |p| EvalError::Invalid(format!("{p}: expected a table of non-negative integers"));
    let Sexp::List { items, pos, .. } = s else {
        return Err(bad(s.pos()));
    };
    items
        .iter()
        .map(|row| match row {
            Sexp::List { items, .. } => items
                .iter()
                .map(|c| match c {
                    Sexp::Atom { text, pos } => text.parse().map_err(|_| bad(*pos)),
                    other => Err(bad(other.pos())),
                })
                .collect(),
            _ => Err(bad(*pos)),
        })
        .collect()
}

pub fn load_record(path: &Path) -> Result<FiniteRing, EvalError> {
    let text = std::fs::read_to_string(path).map_err(|source| EvalError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let record: RingRecord = serde_json::from_str(&text).map_err(|source| EvalError::Record {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(FiniteRing::from_record(record)?)
}

/// The ideal an [`IdealSpec`] names in `ring`.
pub fn ideal_of(ring: &FiniteRing, spec: &IdealSpec) -> Result<IdealSet, EvalError> {
    Ok(match spec {
        IdealSpec::All => IdealSet::full(ring),
        IdealSpec::Radical => IdealSet::jacobson(ring),
        IdealSpec::Gens(gs) => {
            if let Some(g) = gs.iter().find(|&&g| g >= ring.order()) {
                return Err(EvalError::Invalid(format!(
                    "generator {g} is not an element of {} (order {})",
                    ring.label(),
                    ring.order()
                )));
            }
            IdealSet::closure(ring, gs)
        }
    })
}
