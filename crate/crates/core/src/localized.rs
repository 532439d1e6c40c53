//! The semilocal rings `Z_P = { a/b : gcd(b, ∏P) = 1 }` and finite products
//! mixing them with finite rings.
//!
//! `Z_P` is a domain, so its idempotents are `0` and `1` and an element `x`
//! is `+`-clean iff `x` or `x − 1` is a unit, `−`-clean iff `x` or `x + 1`
//! is a unit. Ideals are `0` or `⟨∏ p^{e_p}⟩`.
//!
//! Ideal verdicts come from a case table over `Z = { p : e_p = 0 }`:
//!
//! | ideal                                   | clean | weakly clean |
//! |-----------------------------------------|-------|--------------|
//! | zero                                    | yes   | yes          |
//! | `Z` empty                               | yes   | yes          |
//! | `Z = P`, `|P| = 1`                      | yes   | yes          |
//! | `2 ∈ Z`, otherwise                      | no    | no           |
//! | `2 ∉ Z`, `|Z| = 1`                      | no    | yes          |
//! | `2 ∉ Z`, `|Z| = 2`, `Z = P`             | no    | yes          |
//! | `2 ∉ Z`, any other                      | no    | no           |
//!
//! Every `x ∈ I` is divisible by the primes outside `Z` and free modulo the
//! primes in `Z` (CRT). `x` fails `+` iff some prime divides `x` and some
//! `q ∈ Z` has `x ≡ 1`; it fails `−` likewise with `x ≡ −1`. An odd `q`
//! cannot see both `1` and `−1`, the prime `2` always does.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::clean::{admits_weak_decomposition, is_clean_element, CleanClass, Decomposition, Sign};
use crate::ideals::IdealSet;
use crate::ring::FiniteRing;

/// Default numerator/denominator bound for the witness oracle.
pub const DEFAULT_SEARCH_BOUND: u64 = 64;

/// Largest prime set for which the case table has been checked against the
/// oracle.
pub const VALIDATED_PRIME_COUNT: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocError {
    #[error("prime set is empty")]
    EmptyPrimeSet,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} listed twice")]
    DuplicatePrime(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{value} is not in {ring}: denominator shares the prime {prime}")]
    NotInRing {
        value: String,
        ring: String,
        prime: u64,
    },
    #[error("cannot parse {0:?} as a fraction")]
    Parse(String),
    #[error("exponent vector has {found} entries, prime set has {expected}")]
    ExponentLength { expected: usize, found: usize },
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// A finite nonempty set of distinct primes, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    primes: Vec<u64>,
    modulus: BigInt,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self, LocError> {
        let mut ps: Vec<u64> = primes.into_iter().collect();
        if ps.is_empty() {
            return Err(LocError::EmptyPrimeSet);
        }
        if let Some(&bad) = ps.iter().find(|&&p| !is_prime(p)) {
            return Err(LocError::NotPrime(bad));
        }
        ps.sort_unstable();
        if let Some(w) = ps.windows(2).find(|w| w[0] == w[1]) {
            return Err(LocError::DuplicatePrime(w[0]));
        }
        let modulus = ps.iter().map(|&p| BigInt::from(p)).product();
        Ok(Self {
            primes: ps,
            modulus,
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    fn coprime(&self, n: &BigInt) -> bool {
        n.gcd(&self.modulus).is_one()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        write!(f, "Z_({})", ps.join(","))
    }
}

impl Serialize for PrimeSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.primes.serialize(s)
    }
}

/// An exact fraction. Membership in a particular `Z_P` is checked by
/// `LocalizedZ`; arithmetic never leaves a ring the operands belong to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocElem(BigRational);

impl LocElem {
    pub fn integer(n: i64) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for LocElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl Serialize for LocElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for LocElem {
    type Err = LocError;

    fn from_str(text: &str) -> Result<Self, LocError> {
        let bad = || LocError::Parse(text.to_string());
        let (n, d) = match text.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(LocError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(n, d)))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LocElem {
            type Output = LocElem;
            fn $m(self, rhs: LocElem) -> LocElem {
                LocElem(self.0.$m(rhs.0))
            }
        }
        impl $tr for &LocElem {
            type Output = LocElem;
            fn $m(self, rhs: &LocElem) -> LocElem {
                LocElem((&self.0).$m(&rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for LocElem {
    type Output = LocElem;
    fn neg(self) -> LocElem {
        LocElem(-self.0)
    }
}

impl Neg for &LocElem {
    type Output = LocElem;
    fn neg(self) -> LocElem {
        LocElem(-&self.0)
    }
}

/// `Z_P` for a fixed prime set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LocalizedZ {
    primes: PrimeSet,
}

impl LocalizedZ {
    pub fn new(primes: PrimeSet) -> Self {
        Self { primes }
    }

    pub fn from_primes(primes: impl IntoIterator<Item = u64>) -> Result<Self, LocError> {
        PrimeSet::new(primes).map(Self::new)
    }

    pub fn primes(&self) -> &PrimeSet {
        &self.primes
    }

    pub fn label(&self) -> String {
        self.primes.to_string()
    }

    /// Checks that `x`'s reduced denominator avoids every prime of `P`.
    pub fn check(&self, x: LocElem) -> Result<LocElem, LocError> {
        match self
            .primes
            .primes
            .iter()
            .find(|&&p| (x.denom() % p).is_zero())
        {
            Some(&p) => Err(LocError::NotInRing {
                value: x.to_string(),
                ring: self.label(),
                prime: p,
            }),
            None => Ok(x),
        }
    }

    pub fn elem(&self, a: i64, b: i64) -> Result<LocElem, LocError> {
        if b == 0 {
            return Err(LocError::ZeroDenominator);
        }
        self.check(LocElem(BigRational::new(a.into(), b.into())))
    }

    pub fn parse(&self, text: &str) -> Result<LocElem, LocError> {
        self.check(text.parse()?)
    }

    pub fn contains(&self, x: &LocElem) -> bool {
        self.primes.coprime(x.denom())
    }

    pub fn is_unit(&self, x: &LocElem) -> bool {
        self.primes.coprime(x.numer())
    }

    /// `x⁻¹` when `x` is a unit.
    pub fn inverse(&self, x: &LocElem) -> Option<LocElem> {
        self.is_unit(x).then(|| LocElem(x.0.recip()))
    }

    /// A domain has only the trivial idempotents.
    pub fn idempotents(&self) -> [LocElem; 2] {
        [LocElem::zero(), LocElem::one()]
    }

    /// `(clean_plus, clean_minus)` without building witnesses.
    pub fn sign_flags(&self, x: &LocElem) -> (bool, bool) {
        if self.is_unit(x) {
            return (true, true);
        }
        let one = LocElem::one();
        (self.is_unit(&(x - &one)), self.is_unit(&(x + &one)))
    }

    pub fn clean_class(&self, x: &LocElem) -> CleanClass<LocElem> {
        let mut all = Vec::new();
        for sign in Sign::BOTH {
            for e in self.idempotents() {
                let u = match sign {
                    Sign::Plus => x - &e,
                    Sign::Minus => x + &e,
                };
                if self.is_unit(&u) {
                    all.push(Decomposition {
                        sign,
                        idempotent: e,
                        unit: u,
                    });
                }
            }
        }
        CleanClass::from_decompositions(all)
    }

    /// The `p`-adic valuation of `x`, or `None` for `x = 0`.
    pub fn valuation(&self, p: u64, x: &LocElem) -> Option<u32> {
        if x.is_zero() {
            return None;
        }
        let p = BigInt::from(p);
        let mut n = x.numer().abs();
        let mut v = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            v += 1;
        }
        Some(v)
    }
}

impl fmt::Display for LocalizedZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.primes.fmt(f)
    }
}

/// An ideal of `Z_P`: zero, or generated by `∏ p^{e_p}` with exponents in
/// the order of the prime set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LocIdeal {
    Zero,
    Principal { exponents: Vec<u32> },
}

impl LocIdeal {
    pub fn full(p: &PrimeSet) -> Self {
        LocIdeal::Principal {
            exponents: vec![0; p.len()],
        }
    }

    pub fn principal(p: &PrimeSet, exponents: Vec<u32>) -> Result<Self, LocError> {
        if exponents.len() != p.len() {
            return Err(LocError::ExponentLength {
                expected: p.len(),
                found: exponents.len(),
            });
        }
        Ok(LocIdeal::Principal { exponents })
    }

    /// The canonical generator `∏ p^{e_p}`; `0` for the zero ideal.
    pub fn generator(&self, p: &PrimeSet) -> BigInt {
        match self {
            LocIdeal::Zero => BigInt::zero(),
            LocIdeal::Principal { exponents } => p
                .primes()
                .iter()
                .zip(exponents)
                .map(|(&q, &e)| BigInt::from(q).pow(e))
                .product(),
        }
    }

    /// Primes with exponent zero; `None` for the zero ideal.
    pub fn unit_primes(&self, p: &PrimeSet) -> Option<Vec<u64>> {
        match self {
            LocIdeal::Zero => None,
            LocIdeal::Principal { exponents } => Some(
                p.primes()
                    .iter()
                    .zip(exponents)
                    .filter(|&(_, &e)| e == 0)
                    .map(|(&q, _)| q)
                    .collect(),
            ),
        }
    }

    pub fn is_whole_ring(&self) -> bool {
        matches!(self, LocIdeal::Principal { exponents } if exponents.iter().all(|&e| e == 0))
    }

    pub fn contains(&self, ring: &LocalizedZ, x: &LocElem) -> bool {
        match self {
            LocIdeal::Zero => x.is_zero(),
            LocIdeal::Principal { exponents } => {
                x.is_zero()
                    || ring
                        .primes()
                        .primes()
                        .iter()
                        .zip(exponents)
                        .all(|(&q, &e)| ring.valuation(q, x).is_some_and(|v| v >= e))
            }
        }
    }

    pub fn label(&self, p: &PrimeSet) -> String {
        match self {
            LocIdeal::Zero => "0".to_string(),
            _ if self.is_whole_ring() => "R".to_string(),
            _ => format!("<{}>", self.generator(p)),
        }
    }
}

/// `⟨g⟩` in canonical form.
pub fn normalize_ideal(ring: &LocalizedZ, g: &LocElem) -> LocIdeal {
    if g.is_zero() {
        return LocIdeal::Zero;
    }
    LocIdeal::Principal {
        exponents: ring
            .primes()
            .primes()
            .iter()
            .map(|&p| ring.valuation(p, g).unwrap_or(0))
            .collect(),
    }
}

/// Which row of the case table decided an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocCase {
    ZeroIdeal,
    NoUnitPrimes,
    SinglePrimeWholeRing,
    TwoIsUnitPrime,
    OneOddUnitPrime,
    TwoOddPrimesWholeRing,
    TooManyUnitPrimes,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyticVerdict {
    pub clean: bool,
    pub weakly_clean: bool,
    pub case: LocCase,
    /// False when `|P|` is beyond the range checked against the oracle.
    pub validated_envelope: bool,
}

pub fn classify_ideal(p: &PrimeSet, ideal: &LocIdeal) -> AnalyticVerdict {
    let verdict = |clean, weakly_clean, case| AnalyticVerdict {
        clean,
        weakly_clean,
        case,
        validated_envelope: p.len() <= VALIDATED_PRIME_COUNT,
    };
    let Some(z) = ideal.unit_primes(p) else {
        return verdict(true, true, LocCase::ZeroIdeal);
    };
    let whole = z.len() == p.len();
    match z.len() {
        0 => verdict(true, true, LocCase::NoUnitPrimes),
        1 if whole => verdict(true, true, LocCase::SinglePrimeWholeRing),
        _ if z.contains(&2) => verdict(false, false, LocCase::TwoIsUnitPrime),
        1 => verdict(false, true, LocCase::OneOddUnitPrime),
        2 if whole => verdict(false, true, LocCase::TwoOddPrimesWholeRing),
        _ => verdict(false, false, LocCase::TooManyUnitPrimes),
    }
}

pub fn is_clean_ideal_loc(p: &PrimeSet, ideal: &LocIdeal) -> bool {
    classify_ideal(p, ideal).clean
}

pub fn is_weakly_clean_ideal_loc(p: &PrimeSet, ideal: &LocIdeal) -> bool {
    classify_ideal(p, ideal).weakly_clean
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchKind {
    Clean,
    WeaklyClean,
}

/// Numerators in search order: `0, 1, −1, 2, −2, …, ±bound`.
fn numerators(bound: u64) -> impl Iterator<Item = i64> {
    let bound = bound as i64;
    std::iter::once(0).chain((1..=bound).flat_map(|a| [a, -a]))
}

/// Ideal elements `d·a/b` with `|a|, b ≤ bound` and `b` coprime to `∏P`, in
/// search order: `b` ascending, then `a` by absolute value, positive first.
pub fn ideal_samples(ring: &LocalizedZ, ideal: &LocIdeal, bound: u64) -> Vec<LocElem> {
    if *ideal == LocIdeal::Zero {
        return vec![LocElem::zero()];
    }
    let d = ideal.generator(ring.primes());
    let mut out = Vec::new();
    for b in 1..=bound {
        let b = BigInt::from(b);
        if !ring.primes().coprime(&b) {
            continue;
        }
        for a in numerators(bound) {
            let x = LocElem(BigRational::new(&d * a, b.clone()));
            // A smaller reduced denominator means an earlier repeat.
            if x.denom() == &b {
                out.push(x);
            }
        }
    }
    out
}

/// The first sampled ideal element with no decomposition of the requested
/// kind.
pub fn witness_search(
    ring: &LocalizedZ,
    ideal: &LocIdeal,
    bound: u64,
    kind: SearchKind,
) -> Option<LocElem> {
    ideal_samples(ring, ideal, bound).into_iter().find(|x| {
        let (plus, minus) = ring.sign_flags(x);
        match kind {
            SearchKind::Clean => !plus,
            SearchKind::WeaklyClean => !(plus || minus),
        }
    })
}

/// Result of checking the case table against the oracle on one ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub ring: String,
    pub ideal: String,
    pub analytic: AnalyticVerdict,
    pub clean_witness: Option<LocElem>,
    pub weakly_clean_witness: Option<LocElem>,
}

impl OracleComparison {
    /// Analytic "false" has an oracle witness and analytic "true" has none.
    pub fn agrees(&self) -> bool {
        self.analytic.clean == self.clean_witness.is_none()
            && self.analytic.weakly_clean == self.weakly_clean_witness.is_none()
    }
}

pub fn compare_with_oracle(ring: &LocalizedZ, ideal: &LocIdeal, bound: u64) -> OracleComparison {
    OracleComparison {
        ring: ring.label(),
        ideal: ideal.label(ring.primes()),
        analytic: classify_ideal(ring.primes(), ideal),
        clean_witness: witness_search(ring, ideal, bound, SearchKind::Clean),
        weakly_clean_witness: witness_search(ring, ideal, bound, SearchKind::WeaklyClean),
    }
}

/// Every prime set drawn from `primes` with at most `max_size` members and
/// every exponent vector with entries up to `max_exp`, plus the zero ideal.
pub fn oracle_grid(
    primes: &[u64],
    max_size: usize,
    max_exp: u32,
    bound: u64,
) -> Vec<OracleComparison> {
    let mut cases = Vec::new();
    let n = primes.len();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() as usize > max_size {
            continue;
        }
        let chosen: Vec<u64> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| primes[i])
            .collect();
        let ring = LocalizedZ::from_primes(chosen).expect("grid primes are prime");
        cases.push((ring.clone(), LocIdeal::Zero));
        let k = ring.primes().len();
        let total = (max_exp as usize + 1).pow(k as u32);
        for idx in 0..total {
            let mut rest = idx;
            let exps = (0..k)
                .map(|_| {
                    let e = rest % (max_exp as usize + 1);
                    rest /= max_exp as usize + 1;
                    e as u32
                })
                .collect();
            cases.push((ring.clone(), LocIdeal::Principal { exponents: exps }));
        }
    }
    cases
        .par_iter()
        .map(|(ring, ideal)| compare_with_oracle(ring, ideal, bound))
        .collect()
}

/// One factor of a mixed product ring.
#[derive(Debug, Clone)]
pub enum Component {
    Localized(LocalizedZ),
    Finite(FiniteRing),
}

impl Component {
    pub fn label(&self) -> String {
        match self {
            Component::Localized(r) => r.label(),
            Component::Finite(r) => r.label().to_string(),
        }
    }
}

/// An element of one factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CompElem {
    Loc(LocElem),
    Fin(usize),
}

impl fmt::Display for CompElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompElem::Loc(x) => x.fmt(f),
            CompElem::Fin(x) => write!(f, "#{x}"),
        }
    }
}

/// An ideal of one factor.
#[derive(Debug, Clone)]
pub enum CompIdeal {
    Loc(LocIdeal),
    Fin(IdealSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("component {0}: element and ring kinds differ")]
    KindMismatch(usize),
    #[error("component {index}: {source}")]
    Loc { index: usize, source: LocError },
    #[error("component {0}: element index out of range")]
    OutOfRange(usize),
}

fn component_flags(
    c: &Component,
    x: &CompElem,
    index: usize,
) -> Result<(bool, bool), ProductError> {
    match (c, x) {
        (Component::Localized(r), CompElem::Loc(x)) => {
            r.check(x.clone())
                .map_err(|source| ProductError::Loc { index, source })?;
            Ok(r.sign_flags(x))
        }
        (Component::Finite(r), CompElem::Fin(x)) => {
            if *x >= r.order() {
                return Err(ProductError::OutOfRange(index));
            }
            Ok((is_clean_element(r, *x), is_clean_element(r, r.neg(*x))))
        }
        _ => Err(ProductError::KindMismatch(index)),
    }
}

fn first_decomposition(c: &Component, x: &CompElem, sign: Sign) -> Option<(CompElem, CompElem)> {
    match (c, x) {
        (Component::Localized(r), CompElem::Loc(x)) => {
            let cc = r.clean_class(x);
            let list = if sign == Sign::Plus {
                cc.plus
            } else {
                cc.minus
            };
            list.into_iter()
                .next()
                .map(|d| (CompElem::Loc(d.idempotent), CompElem::Loc(d.unit)))
        }
        (Component::Finite(r), CompElem::Fin(x)) => r.idempotents().iter().find_map(|&e| {
            let u = crate::clean::candidate_unit(r, *x, sign, e);
            r.is_unit(u).then_some((CompElem::Fin(e), CompElem::Fin(u)))
        }),
        _ => None,
    }
}

/// Sign classes of a tuple. The sign in `x = u ± e` is shared by every
/// component, so a sign is available iff every component allows it. Each
/// available sign carries one witness tuple (first decomposition per
/// component).
pub fn product_clean_class(
    components: &[(Component, CompElem)],
) -> Result<CleanClass<Vec<CompElem>>, ProductError> {
    let mut plus = true;
    let mut minus = true;
    for (i, (c, x)) in components.iter().enumerate() {
        let (p, m) = component_flags(c, x, i)?;
        plus &= p;
        minus &= m;
    }
    let witness = |sign: Sign| -> Vec<Decomposition<Vec<CompElem>>> {
        let parts: Option<Vec<(CompElem, CompElem)>> = components
            .iter()
            .map(|(c, x)| first_decomposition(c, x, sign))
            .collect();
        parts
            .map(|ps| {
                let (es, us) = ps.into_iter().unzip();
                vec![Decomposition {
                    sign,
                    idempotent: es,
                    unit: us,
                }]
            })
            .unwrap_or_default()
    };
    Ok(CleanClass {
        clean_plus: plus,
        clean_minus: minus,
        plus: if plus {
            witness(Sign::Plus)
        } else {
            Vec::new()
        },
        minus: if minus {
            witness(Sign::Minus)
        } else {
            Vec::new()
        },
    })
}

/// Per-factor facts the product decision is built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentProfile {
    pub ring: String,
    pub ideal: String,
    pub clean: bool,
    pub weakly_clean: bool,
    /// An element with no `+` decomposition, when one exists.
    pub non_clean_witness: Option<CompElem>,
    /// An element with no decomposition at all, when one exists.
    pub non_weakly_clean_witness: Option<CompElem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductVerdict {
    pub weakly_clean: bool,
    pub clean: bool,
    pub components: Vec<ComponentProfile>,
    /// A tuple with no common sign, when the product ideal is not weakly
    /// clean.
    pub witness: Option<Vec<CompElem>>,
}

fn zero_of(c: &Component) -> CompElem {
    match c {
        Component::Localized(_) => CompElem::Loc(LocElem::zero()),
        Component::Finite(_) => CompElem::Fin(0),
    }
}

fn negate(c: &Component, x: &CompElem) -> CompElem {
    match (c, x) {
        (Component::Finite(r), CompElem::Fin(x)) => CompElem::Fin(r.neg(*x)),
        (_, CompElem::Loc(x)) => CompElem::Loc(-x),
        (_, x) => x.clone(),
    }
}

fn profile(
    c: &Component,
    ideal: &CompIdeal,
    bound: u64,
    index: usize,
) -> Result<ComponentProfile, ProductError> {
    match (c, ideal) {
        (Component::Localized(r), CompIdeal::Loc(i)) => {
            let v = classify_ideal(r.primes(), i);
            Ok(ComponentProfile {
                ring: r.label(),
                ideal: i.label(r.primes()),
                clean: v.clean,
                weakly_clean: v.weakly_clean,
                non_clean_witness: witness_search(r, i, bound, SearchKind::Clean)
                    .map(CompElem::Loc),
                non_weakly_clean_witness: witness_search(r, i, bound, SearchKind::WeaklyClean)
                    .map(CompElem::Loc),
            })
        }
        (Component::Finite(r), CompIdeal::Fin(i)) => {
            let nc = i
                .members()
                .iter()
                .copied()
                .find(|&x| !is_clean_element(r, x));
            let nw = i
                .members()
                .iter()
                .copied()
                .find(|&x| !admits_weak_decomposition(r, x));
            Ok(ComponentProfile {
                ring: r.label().to_string(),
                ideal: i.label(),
                clean: nc.is_none(),
                weakly_clean: nw.is_none(),
                non_clean_witness: nc.map(CompElem::Fin),
                non_weakly_clean_witness: nw.map(CompElem::Fin),
            })
        }
        _ => Err(ProductError::KindMismatch(index)),
    }
}

/// Decides whether `∏ I_α` is weakly clean in `∏ R_α`.
///
/// A tuple fails iff one component lacks `+` and one lacks `−`. Ideals are
/// closed under negation and `x` is `+`-clean iff `−x` is `−`-clean, so the
/// product is weakly clean iff every factor ideal is weakly clean and at most
/// one is not clean. The witness tuple is replayed through
/// `product_clean_class` before it is returned.
pub fn is_weakly_clean_ideal_prod(
    components: &[(Component, CompIdeal)],
    bound: u64,
) -> Result<ProductVerdict, ProductError> {
    let profiles = components
        .iter()
        .enumerate()
        .map(|(i, (c, id))| profile(c, id, bound, i))
        .collect::<Result<Vec<_>, _>>()?;
    let clean = profiles.iter().all(|p| p.clean);
    let non_clean: Vec<usize> = (0..profiles.len())
        .filter(|&i| !profiles[i].clean)
        .collect();
    let weakly_clean = profiles.iter().all(|p| p.weakly_clean) && non_clean.len() <= 1;
    let mut tuple: Vec<CompElem> = components.iter().map(|(c, _)| zero_of(c)).collect();
    let mut found = false;
    if let Some(i) = profiles.iter().position(|p| !p.weakly_clean) {
        if let Some(w) = &profiles[i].non_weakly_clean_witness {
            tuple[i] = w.clone();
            found = true;
        }
    } else if let [a, b, ..] = non_clean[..] {
        if let (Some(wa), Some(wb)) = (
            &profiles[a].non_clean_witness,
            &profiles[b].non_clean_witness,
        ) {
            tuple[a] = wa.clone();
            tuple[b] = negate(&components[b].0, wb);
            found = true;
        }
    }
    let witness = if found {
        let pairs: Vec<(Component, CompElem)> = components
            .iter()
            .map(|(c, _)| c.clone())
            .zip(tuple.iter().cloned())
            .collect();
        let cc = product_clean_class(&pairs)?;
        (!cc.is_weakly_clean()).then_some(tuple)
    } else {
        None
    };
    Ok(ProductVerdict {
        weakly_clean,
        clean,
        components: profiles,
        witness,
    })
}

/// The three unit tests behind an element's sign classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementCheck {
    pub element: LocElem,
    pub is_unit: bool,
    pub minus_one_is_unit: bool,
    pub plus_one_is_unit: bool,
    pub clean_plus: bool,
    pub clean_minus: bool,
}

impl ElementCheck {
    pub fn new(ring: &LocalizedZ, x: &LocElem) -> Self {
        let one = LocElem::one();
        let (p, m) = ring.sign_flags(x);
        Self {
            element: x.clone(),
            is_unit: ring.is_unit(x),
            minus_one_is_unit: ring.is_unit(&(x - &one)),
            plus_one_is_unit: ring.is_unit(&(x + &one)),
            clean_plus: p,
            clean_minus: m,
        }
    }
}

/// A principal ideal of `Z_(3,5)` generated by a unit: weakly clean, not
/// clean.
#[derive(Debug, Clone, Serialize)]
pub struct UnitIdealReport {
    pub ring: String,
    pub generator: LocElem,
    pub generator_is_unit: bool,
    pub ideal: LocIdeal,
    pub ideal_is_whole_ring: bool,
    pub weakly_clean: bool,
    pub clean: bool,
    /// First non-clean element the oracle finds.
    pub oracle_witness: Option<ElementCheck>,
    /// The element `3/8`, checked directly.
    pub featured_witness: ElementCheck,
    /// The proper ideal `⟨3⟩`, which shows the same behavior.
    pub proper_variant: OracleComparison,
    pub findings: Vec<String>,
}

/// `⟨2/11⟩ × ⟨4/7⟩` in `Z_(3,5) × Z_(3,5)`: not weakly clean.
#[derive(Debug, Clone, Serialize)]
pub struct ProductIdealReport {
    pub ring: String,
    pub generators: [LocElem; 2],
    pub generators_are_units: [bool; 2],
    pub sum_is_whole_ring: bool,
    pub weakly_clean: bool,
    pub at_most_one_not_clean: bool,
    pub verdict: ProductVerdict,
    /// `(3/8, −3/8)`, checked directly.
    pub featured_witness: Vec<ElementCheck>,
    pub featured_witness_weakly_clean: bool,
    pub findings: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExamplesReport {
    pub unit_ideal: UnitIdealReport,
    pub product_ideal: ProductIdealReport,
}

/// Rebuilds both worked examples for `P = {3, 5}` with explicit witnesses.
pub fn reproduce_examples() -> ExamplesReport {
    let ring = LocalizedZ::from_primes([3, 5]).expect("3 and 5 are prime");
    let p = ring.primes();
    let elem = |a, b| ring.elem(a, b).expect("denominator coprime to 15");
    let g = elem(2, 11);
    let ideal = normalize_ideal(&ring, &g);
    let verdict = classify_ideal(p, &ideal);
    let oracle = witness_search(&ring, &ideal, DEFAULT_SEARCH_BOUND, SearchKind::Clean);
    let featured = ElementCheck::new(&ring, &elem(3, 8));
    let mut findings = Vec::new();
    if ring.is_unit(&g) {
        findings.push(format!(
            "{g} is a unit of {}, so <{g}> is the whole ring; the verdict is that of R itself",
            ring.label()
        ));
    }
    let three = LocIdeal::principal(p, vec![1, 0]).expect("two primes");
    let unit_ideal = UnitIdealReport {
        ring: ring.label(),
        generator: g.clone(),
        generator_is_unit: ring.is_unit(&g),
        ideal_is_whole_ring: ideal.is_whole_ring(),
        ideal,
        weakly_clean: verdict.weakly_clean,
        clean: verdict.clean,
        oracle_witness: oracle.as_ref().map(|x| ElementCheck::new(&ring, x)),
        featured_witness: featured,
        proper_variant: compare_with_oracle(&ring, &three, DEFAULT_SEARCH_BOUND),
        findings,
    };

    let h = elem(4, 7);
    let i1 = normalize_ideal(&ring, &g);
    let i2 = normalize_ideal(&ring, &h);
    let comps = vec![
        (
            Component::Localized(ring.clone()),
            CompIdeal::Loc(i1.clone()),
        ),
        (
            Component::Localized(ring.clone()),
            CompIdeal::Loc(i2.clone()),
        ),
    ];
    let pv = is_weakly_clean_ideal_prod(&comps, DEFAULT_SEARCH_BOUND).expect("components match");
    let x = elem(3, 8);
    let pair = [x.clone(), -&x];
    let featured_tuple: Vec<(Component, CompElem)> = pair
        .iter()
        .map(|e| (Component::Localized(ring.clone()), CompElem::Loc(e.clone())))
        .collect();
    let featured_wc = product_clean_class(&featured_tuple)
        .expect("components match")
        .is_weakly_clean();
    let mut findings = Vec::new();
    if ring.is_unit(&g) && ring.is_unit(&h) {
        findings.push(format!(
            "{g} and {h} are units, so the ideal sum is all of R x R"
        ));
    }
    let at_most_one = pv.components.iter().all(|c| c.weakly_clean)
        && pv.components.iter().filter(|c| !c.clean).count() <= 1;
    let product_ideal = ProductIdealReport {
        ring: format!("{0} x {0}", ring.label()),
        generators_are_units: [ring.is_unit(&g), ring.is_unit(&h)],
        generators: [g, h],
        sum_is_whole_ring: i1.is_whole_ring() && i2.is_whole_ring(),
        weakly_clean: pv.weakly_clean,
        at_most_one_not_clean: at_most_one,
        verdict: pv,
        featured_witness: pair.iter().map(|e| ElementCheck::new(&ring, e)).collect(),
        featured_witness_weakly_clean: featured_wc,
        findings,
    };
    ExamplesReport {
        unit_ideal,
        product_ideal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zn;

    fn z(ps: &[u64]) -> LocalizedZ {
        LocalizedZ::from_primes(ps.iter().copied()).unwrap()
    }

    #[test]
    fn prime_sets() {
        assert_eq!(PrimeSet::new([5, 3]).unwrap().primes(), &[3, 5]);
        assert_eq!(PrimeSet::new([]), Err(LocError::EmptyPrimeSet));
        assert_eq!(PrimeSet::new([4]), Err(LocError::NotPrime(4)));
        assert_eq!(PrimeSet::new([3, 3]), Err(LocError::DuplicatePrime(3)));
        assert_eq!(PrimeSet::new([3, 5]).unwrap().modulus(), &BigInt::from(15));
    }

    #[test]
    fn membership_and_units() {
        let r = z(&[3, 5]);
        assert!(r.is_unit(&r.elem(2, 11).unwrap()));
        assert!(!r.is_unit(&r.elem(3, 8).unwrap()));
        assert!(r.is_unit(&LocElem::one()));
        assert!(matches!(
            r.elem(1, 3),
            Err(LocError::NotInRing { prime: 3, .. })
        ));
        assert!(matches!(
            r.elem(1, 10),
            Err(LocError::NotInRing { prime: 5, .. })
        ));
        // 6/3 reduces to 2, which is fine.
        assert_eq!(r.elem(6, 3).unwrap(), LocElem::integer(2));
        assert_eq!(r.elem(1, 0), Err(LocError::ZeroDenominator));
        let x = r.elem(4, 7).unwrap();
        let inv = r.inverse(&x).unwrap();
        assert_eq!(&x * &inv, LocElem::one());
    }

    #[test]
    fn parsing() {
        let r = z(&[3, 5]);
        assert_eq!(r.parse("3/8").unwrap(), r.elem(3, 8).unwrap());
        assert_eq!(r.parse("-6").unwrap(), LocElem::integer(-6));
        assert!(r.parse("x").is_err());
        assert!(r.parse("1/3").is_err());
        assert_eq!(r.elem(-3, 8).unwrap().to_string(), "-3/8");
    }

    #[test]
    fn idempotents_are_trivial() {
        for ps in [&[3u64, 5][..], &[2], &[3, 5, 7]] {
            let r = z(ps);
            for e in r.idempotents() {
                assert_eq!(&e * &e, e);
            }
        }
    }

    #[test]
    fn clean_classes() {
        let r = z(&[3, 5]);
        let c = r.clean_class(&r.elem(3, 8).unwrap());
        assert!(!c.clean_plus && c.clean_minus);
        let c = r.clean_class(&LocElem::one());
        assert!(c.clean_plus && c.clean_minus);
        let c = r.clean_class(&LocElem::integer(6));
        assert!(!c.clean_plus && c.clean_minus);
        for d in c.minus {
            assert_eq!(&d.unit - &d.idempotent, LocElem::integer(6));
        }
    }

    #[test]
    fn normalization() {
        let r = z(&[3, 5]);
        assert!(normalize_ideal(&r, &r.elem(2, 11).unwrap()).is_whole_ring());
        assert_eq!(normalize_ideal(&r, &LocElem::zero()), LocIdeal::Zero);
        assert_eq!(
            normalize_ideal(&r, &r.elem(45, 2).unwrap()),
            LocIdeal::Principal {
                exponents: vec![2, 1]
            }
        );
        let i = LocIdeal::principal(r.primes(), vec![1, 0]).unwrap();
        assert!(i.contains(&r, &r.elem(3, 8).unwrap()));
        assert!(!i.contains(&r, &r.elem(5, 8).unwrap()));
        assert_eq!(i.label(r.primes()), "<3>");
    }

    #[test]
    fn anchor_cases() {
        let p35 = PrimeSet::new([3, 5]).unwrap();
        let v = classify_ideal(&p35, &LocIdeal::Zero);
        assert!(v.clean && v.weakly_clean);
        let all_pos = LocIdeal::principal(&p35, vec![1, 2]).unwrap();
        assert!(is_clean_ideal_loc(&p35, &all_pos));
        let whole = LocIdeal::full(&p35);
        assert!(is_weakly_clean_ideal_loc(&p35, &whole) && !is_clean_ideal_loc(&p35, &whole));
        let three = LocIdeal::principal(&p35, vec![1, 0]).unwrap();
        assert!(is_weakly_clean_ideal_loc(&p35, &three) && !is_clean_ideal_loc(&p35, &three));
        let p23 = PrimeSet::new([2, 3]).unwrap();
        let three = LocIdeal::principal(&p23, vec![0, 1]).unwrap();
        assert!(!is_weakly_clean_ideal_loc(&p23, &three));
        let p357 = PrimeSet::new([3, 5, 7]).unwrap();
        assert!(!is_weakly_clean_ideal_loc(&p357, &LocIdeal::full(&p357)));
    }

    #[test]
    fn oracle_finds_expected_witnesses() {
        let r = z(&[3, 5]);
        let three = LocIdeal::principal(r.primes(), vec![1, 0]).unwrap();
        let w = witness_search(&r, &three, DEFAULT_SEARCH_BOUND, SearchKind::Clean).unwrap();
        let (plus, _) = r.sign_flags(&w);
        assert!(!plus);
        assert!(
            witness_search(&r, &three, DEFAULT_SEARCH_BOUND, SearchKind::WeaklyClean).is_none()
        );

        let r = z(&[2, 3]);
        let three = LocIdeal::principal(r.primes(), vec![0, 1]).unwrap();
        let w = witness_search(&r, &three, DEFAULT_SEARCH_BOUND, SearchKind::WeaklyClean).unwrap();
        assert_eq!(w, LocElem::integer(3));

        let r = z(&[3, 5, 7]);
        let w = witness_search(
            &r,
            &LocIdeal::full(r.primes()),
            DEFAULT_SEARCH_BOUND,
            SearchKind::WeaklyClean,
        )
        .unwrap();
        assert_eq!(w, LocElem::integer(6));
    }

    #[test]
    fn product_classes() {
        let r = z(&[3, 5]);
        let x = r.elem(3, 8).unwrap();
        let tuple = vec![
            (Component::Localized(r.clone()), CompElem::Loc(x.clone())),
            (Component::Localized(r.clone()), CompElem::Loc(-&x)),
        ];
        let c = product_clean_class(&tuple).unwrap();
        assert!(!c.is_weakly_clean());
        let ones = vec![
            (
                Component::Localized(r.clone()),
                CompElem::Loc(LocElem::one()),
            ),
            (
                Component::Localized(r.clone()),
                CompElem::Loc(LocElem::one()),
            ),
        ];
        let c = product_clean_class(&ones).unwrap();
        assert!(c.clean_plus && c.clean_minus);
        assert_eq!(c.plus[0].unit.len(), 2);
        let mixed = vec![(Component::Localized(r.clone()), CompElem::Fin(0))];
        assert_eq!(
            product_clean_class(&mixed),
            Err(ProductError::KindMismatch(0))
        );
    }

    #[test]
    fn product_ideals() {
        let r = z(&[3, 5]);
        let whole = LocIdeal::full(r.primes());
        let two = vec![
            (
                Component::Localized(r.clone()),
                CompIdeal::Loc(whole.clone()),
            ),
            (
                Component::Localized(r.clone()),
                CompIdeal::Loc(whole.clone()),
            ),
        ];
        let v = is_weakly_clean_ideal_prod(&two, DEFAULT_SEARCH_BOUND).unwrap();
        assert!(!v.weakly_clean);
        assert!(v.witness.is_some());

        let z6 = zn(6).unwrap();
        let mixed = vec![
            (Component::Localized(r.clone()), CompIdeal::Loc(whole)),
            (
                Component::Finite(z6.clone()),
                CompIdeal::Fin(IdealSet::full(&z6)),
            ),
        ];
        let v = is_weakly_clean_ideal_prod(&mixed, DEFAULT_SEARCH_BOUND).unwrap();
        assert!(v.weakly_clean && !v.clean && v.witness.is_none());
    }

    #[test]
    fn examples_report() {
        let rep = reproduce_examples();
        let u = &rep.unit_ideal;
        assert!(u.generator_is_unit && u.ideal_is_whole_ring);
        assert!(u.weakly_clean && !u.clean);
        let w = u.oracle_witness.as_ref().unwrap();
        assert!(!w.clean_plus);
        let f = &u.featured_witness;
        assert!(!f.is_unit && !f.minus_one_is_unit && f.plus_one_is_unit);
        assert!(!u.findings.is_empty());

        let p = &rep.product_ideal;
        assert!(p.sum_is_whole_ring && !p.weakly_clean && !p.at_most_one_not_clean);
        assert!(!p.featured_witness_weakly_clean);
        let (a, b) = (&p.featured_witness[0], &p.featured_witness[1]);
        assert!(!a.clean_plus && a.clean_minus && a.is_unit == b.is_unit);
        assert!(b.clean_plus && !b.clean_minus);
        assert!(p.verdict.witness.is_some());
    }
}
