//! The ring specification language: parenthesized prefix forms such as
//! `(matrix 2 (zn 2))` or `(quotient (zn 8) (ideal 4))`.

use std::fmt;

use thiserror::Error;

/// A 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Lexical,
    Syntax,
    Arity,
    SizeCap,
    Name,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorKind::Lexical => "lexical",
            ErrorKind::Syntax => "syntax",
            ErrorKind::Arity => "arity",
            ErrorKind::SizeCap => "size-cap",
            ErrorKind::Name => "name",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} error at {pos}: {message}{}", expected_suffix(.expected))]
pub struct Diagnostic {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    match expected {
        [] => String::new(),
        [one] => format!("; expected `{one}`"),
        many => {
            let quoted: Vec<String> = many.iter().map(|e| format!("`{e}`")).collect();
            format!("; expected one of {}", quoted.join(", "))
        }
    }
}

impl Diagnostic {
    fn new(kind: ErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        Self {
            kind,
            pos,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

/// A bare s-expression with source positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom {
        text: String,
        pos: Pos,
    },
    List {
        items: Vec<Sexp>,
        pos: Pos,
        end: Pos,
    },
}

impl Sexp {
    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom { pos, .. } | Sexp::List { pos, .. } => *pos,
        }
    }

    fn describe(&self) -> String {
        match self {
            Sexp::Atom { text, .. } => format!("`{text}`"),
            Sexp::List { .. } => "a list".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Atom(String),
}

fn is_atom_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || "_-+/.@:~".contains(c)
}

fn lex(input: &str) -> Result<Vec<(Token, Pos)>, Diagnostic> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == ';' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c == '(' || c == ')' {
            chars.next();
            col += 1;
            out.push((if c == '(' { Token::Open } else { Token::Close }, pos));
        } else if is_atom_char(c) {
            let mut text = String::new();
            while let Some(&c) = chars.peek().filter(|&&c| is_atom_char(c)) {
                text.push(c);
                chars.next();
                col += 1;
            }
            out.push((Token::Atom(text), pos));
        } else {
            return Err(Diagnostic::new(
                ErrorKind::Lexical,
                pos,
                format!("unexpected character {c:?}"),
            ));
        }
    }
    Ok(out)
}

fn end_pos(input: &str) -> Pos {
    let line = input.split('\n').count();
    let col = input.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Pos { line, col }
}

/// Every top-level form of `input`.
pub fn parse_forms(input: &str) -> Result<Vec<Sexp>, Diagnostic> {
    let tokens = lex(input)?;
    let eof = end_pos(input);
    let mut stack: Vec<(Pos, Vec<Sexp>)> = Vec::new();
    let mut top = Vec::new();
    for (tok, pos) in tokens {
        match tok {
            Token::Open => stack.push((pos, Vec::new())),
            Token::Close => {
                let (open, items) = stack.pop().ok_or_else(|| {
                    Diagnostic::new(ErrorKind::Syntax, pos, "unmatched `)`")
                        .expecting(&["(", "atom"])
                })?;
                let list = Sexp::List {
                    items,
                    pos: open,
                    end: pos,
                };
                match stack.last_mut() {
                    Some((_, items)) => items.push(list),
                    None => top.push(list),
                }
            }
            Token::Atom(text) => {
                let atom = Sexp::Atom { text, pos };
                match stack.last_mut() {
                    Some((_, items)) => items.push(atom),
                    None => top.push(atom),
                }
            }
        }
    }
    if !stack.is_empty() {
        return Err(
            Diagnostic::new(ErrorKind::Syntax, eof, "unexpected end of input").expecting(&[")"]),
        );
    }
    Ok(top)
}

/// A bimodule argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleRef {
    Regular,
    Zero,
    /// `Z_m` as a bimodule over rings whose characteristic `m` divides.
    ZnMod(usize),
    Named(String),
}

/// The composition map of a 3×3 triangular ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingRef {
    Mult,
    Zero,
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    Gens(Vec<usize>),
    Radical,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zn(usize),
    Product(Vec<RingSpec>),
    Matrix(usize, Box<RingSpec>),
    Tri2(Box<RingSpec>, Box<RingSpec>, ModuleRef),
    Tri3(Box<[RingSpec; 3]>, [ModuleRef; 3], Option<PairingRef>),
    Morita(Box<RingSpec>, Box<RingSpec>, ModuleRef, ModuleRef),
    Idealize(Box<RingSpec>, ModuleRef),
    Quotient(Box<RingSpec>, IdealSpec),
    Series(Box<RingSpec>, usize),
    Localized(Vec<u64>),
    Corner(Box<RingSpec>, usize),
    Named(String),
    /// A JSON ring record on disk, written `@path`.
    Record(String),
}

/// Words with a fixed meaning; they cannot name a definition.
pub const RESERVED: &[&str] = &[
    "zn",
    "product",
    "matrix",
    "tri2",
    "tri3",
    "morita",
    "idealize",
    "quotient",
    "series",
    "localized",
    "corner",
    "regular",
    "zero",
    "znmod",
    "mult",
    "ideal",
    "radical",
    "all",
    "bimodule",
    "pairing",
    "ring",
];

const RING_KEYWORDS: &[&str] = &[
    "zn",
    "product",
    "matrix",
    "tri2",
    "tri3",
    "morita",
    "idealize",
    "quotient",
    "series",
    "localized",
    "corner",
];

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Sizes of named definitions, for the size estimate.
pub trait Names {
    fn ring_order(&self, name: &str) -> Option<Option<u128>>;
    fn module_order(&self, name: &str) -> Option<u128>;
    fn has_pairing(&self, name: &str) -> bool;
    /// Unknown names are tolerated (and unsized) when false.
    fn strict(&self) -> bool;
}

/// No definitions; names pass through unchecked.
pub struct NoNames;

impl Names for NoNames {
    fn ring_order(&self, _: &str) -> Option<Option<u128>> {
        None
    }
    fn module_order(&self, _: &str) -> Option<u128> {
        None
    }
    fn has_pairing(&self, _: &str) -> bool {
        false
    }
    fn strict(&self) -> bool {
        false
    }
}

/// `Some(None)` means infinite (a localized ring); `None` means unknown.
type Size = Option<Option<u128>>;

struct Converter<'a> {
    names: &'a dyn Names,
    cap: u128,
}

fn syntax(pos: Pos, message: impl Into<String>, expected: &[&str]) -> Diagnostic {
    Diagnostic::new(ErrorKind::Syntax, pos, message).expecting(expected)
}

fn mul_size(a: Size, b: Size) -> Size {
    match (a, b) {
        (Some(Some(x)), Some(Some(y))) => Some(Some(x.saturating_mul(y))),
        (Some(None), _) | (_, Some(None)) => Some(None),
        _ => None,
    }
}

fn pow_size(base: Size, k: usize) -> Size {
    let mut acc = Some(Some(1));
    for _ in 0..k {
        acc = mul_size(acc, base);
    }
    acc
}

impl Converter<'_> {
    fn int(&self, s: &Sexp, what: &str) -> Result<usize, Diagnostic> {
        match s {
            Sexp::Atom { text, pos } => text.parse::<usize>().map_err(|_| {
                syntax(
                    *pos,
                    format!("{what} must be a non-negative integer, got `{text}`"),
                    &["integer"],
                )
            }),
            other => Err(syntax(
                other.pos(),
                format!("{what} must be an integer, got a list"),
                &["integer"],
            )),
        }
    }

    fn positive(&self, s: &Sexp, what: &str) -> Result<usize, Diagnostic> {
        let n = self.int(s, what)?;
        if n == 0 {
            return Err(syntax(
                s.pos(),
                format!("{what} must be positive"),
                &["positive integer"],
            ));
        }
        Ok(n)
    }

    fn check_size(&self, size: Size, pos: Pos) -> Result<(), Diagnostic> {
        if let Some(Some(n)) = size {
            if n > self.cap {
                return Err(Diagnostic::new(
                    ErrorKind::SizeCap,
                    pos,
                    format!("estimated order {n} exceeds the cap of {}", self.cap),
                ));
            }
        }
        Ok(())
    }

    fn arity(&self, head: &str, pos: Pos, got: usize, want: &str) -> Diagnostic {
        Diagnostic::new(
            ErrorKind::Arity,
            pos,
            format!("`{head}` takes {want}, got {got}"),
        )
    }

    fn module(&self, s: &Sexp, base: Size) -> Result<(ModuleRef, Size), Diagnostic> {
        const EXPECTED: &[&str] = &["regular", "zero", "(znmod m)", "module name"];
        match s {
            Sexp::Atom { text, pos } => match text.as_str() {
                "regular" => Ok((ModuleRef::Regular, base)),
                "zero" => Ok((ModuleRef::Zero, Some(Some(1)))),
                name if is_identifier(name) && !RESERVED.contains(&name) => {
                    let size = self.names.module_order(name);
                    if size.is_none() && self.names.strict() {
                        return Err(Diagnostic::new(
                            ErrorKind::Name,
                            *pos,
                            format!("unknown bimodule `{name}`"),
                        ));
                    }
                    Ok((ModuleRef::Named(name.to_string()), size.map(Some)))
                }
                _ => Err(syntax(
                    *pos,
                    format!("expected a bimodule, got `{text}`"),
                    EXPECTED,
                )),
            },
            Sexp::List { items, pos, .. } => match items.first() {
                Some(Sexp::Atom { text, .. }) if text == "znmod" => {
                    if items.len() != 2 {
                        return Err(self.arity("znmod", *pos, items.len() - 1, "1 argument"));
                    }
                    let m = self.positive(&items[1], "the modulus")?;
                    Ok((ModuleRef::ZnMod(m), Some(Some(m as u128))))
                }
                _ => Err(syntax(*pos, "expected a bimodule", EXPECTED)),
            },
        }
    }

    fn pairing(&self, s: &Sexp) -> Result<PairingRef, Diagnostic> {
        const EXPECTED: &[&str] = &["mult", "zero", "pairing name"];
        match s {
            Sexp::Atom { text, pos } => match text.as_str() {
                "mult" => Ok(PairingRef::Mult),
                "zero" => Ok(PairingRef::Zero),
                name if is_identifier(name) && !RESERVED.contains(&name) => {
                    if self.names.strict() && !self.names.has_pairing(name) {
                        return Err(Diagnostic::new(
                            ErrorKind::Name,
                            *pos,
                            format!("unknown pairing `{name}`"),
                        ));
                    }
                    Ok(PairingRef::Named(name.to_string()))
                }
                _ => Err(syntax(
                    *pos,
                    format!("expected a pairing, got `{text}`"),
                    EXPECTED,
                )),
            },
            other => Err(syntax(other.pos(), "expected a pairing", EXPECTED)),
        }
    }

    fn ideal(&self, s: &Sexp) -> Result<IdealSpec, Diagnostic> {
        const EXPECTED: &[&str] = &["(ideal g ...)", "radical", "all"];
        match s {
            Sexp::Atom { text, .. } if text == "radical" => Ok(IdealSpec::Radical),
            Sexp::Atom { text, .. } if text == "all" => Ok(IdealSpec::All),
            Sexp::List { items, pos, .. } => match items.first() {
                Some(Sexp::Atom { text, .. }) if text == "ideal" => items[1..]
                    .iter()
                    .map(|g| self.int(g, "a generator"))
                    .collect::<Result<_, _>>()
                    .map(IdealSpec::Gens),
                _ => Err(syntax(*pos, "expected an ideal", EXPECTED)),
            },
            other => Err(syntax(
                other.pos(),
                format!("expected an ideal, got {}", other.describe()),
                EXPECTED,
            )),
        }
    }

    fn ring(&self, s: &Sexp) -> Result<(RingSpec, Size), Diagnostic> {
        const EXPECTED: &[&str] = &["(", "ring name", "@file"];
        let (items, pos, end) = match s {
            Sexp::Atom { text, pos } => {
                if let Some(path) = text.strip_prefix('@') {
                    if path.is_empty() {
                        return Err(syntax(*pos, "empty file path", &["@file"]));
                    }
                    return Ok((RingSpec::Record(path.to_string()), None));
                }
                if is_identifier(text) && !RESERVED.contains(&text.as_str()) {
                    let size = self.names.ring_order(text);
                    if size.is_none() && self.names.strict() {
                        return Err(Diagnostic::new(
                            ErrorKind::Name,
                            *pos,
                            format!("unknown ring `{text}`"),
                        ));
                    }
                    return Ok((RingSpec::Named(text.clone()), size));
                }
                return Err(syntax(
                    *pos,
                    format!("expected a ring, got `{text}`"),
                    EXPECTED,
                ));
            }
            Sexp::List { items, pos, end } => (items, *pos, *end),
        };
        let head = match items.first() {
            Some(Sexp::Atom { text, .. }) if RING_KEYWORDS.contains(&text.as_str()) => {
                text.as_str()
            }
            Some(other) => {
                return Err(syntax(
                    other.pos(),
                    format!("unknown ring constructor {}", other.describe()),
                    RING_KEYWORDS,
                ))
            }
            None => return Err(syntax(end, "empty form", RING_KEYWORDS)),
        };
        let args = &items[1..];
        let need = |n: usize, want: &str| {
            if args.len() == n {
                Ok(())
            } else {
                Err(self.arity(head, pos, args.len(), want))
            }
        };
        let (spec, size) = match head {
            "zn" => {
                need(1, "1 argument")?;
                let n = self.positive(&args[0], "the modulus")?;
                (RingSpec::Zn(n), Some(Some(n as u128)))
            }
            "product" => {
                if args.is_empty() {
                    return Err(self.arity(head, pos, 0, "at least 1 argument"));
                }
                let mut specs = Vec::new();
                let mut size = Some(Some(1));
                for a in args {
                    let (r, s) = self.ring(a)?;
                    size = mul_size(size, s);
                    specs.push(r);
                }
                (RingSpec::Product(specs), size)
            }
            "matrix" => {
                need(2, "2 arguments")?;
                let k = self.positive(&args[0], "the dimension")?;
                let (r, s) = self.ring(&args[1])?;
                let size = pow_size(s, k * k);
                (RingSpec::Matrix(k, Box::new(r)), size)
            }
            "tri2" => {
                need(3, "3 arguments")?;
                let (r, rs) = self.ring(&args[0])?;
                let (t, ts) = self.ring(&args[1])?;
                let (m, ms) = self.module(&args[2], rs)?;
                (
                    RingSpec::Tri2(Box::new(r), Box::new(t), m),
                    mul_size(mul_size(rs, ts), ms),
                )
            }
            "tri3" => {
                if args.len() != 6 && args.len() != 7 {
                    return Err(self.arity(head, pos, args.len(), "6 or 7 arguments"));
                }
                let (a1, s1) = self.ring(&args[0])?;
                let (a2, s2) = self.ring(&args[1])?;
                let (a3, s3) = self.ring(&args[2])?;
                let (m21, z21) = self.module(&args[3], s1)?;
                let (m31, z31) = self.module(&args[4], s1)?;
                let (m32, z32) = self.module(&args[5], s2)?;
                let comp = args.get(6).map(|c| self.pairing(c)).transpose()?;
                let size = [s2, s3, z21, z31, z32].into_iter().fold(s1, mul_size);
                (
                    RingSpec::Tri3(Box::new([a1, a2, a3]), [m21, m31, m32], comp),
                    size,
                )
            }
            "morita" => {
                need(4, "4 arguments")?;
                let (r, rs) = self.ring(&args[0])?;
                let (t, ts) = self.ring(&args[1])?;
                let (m, ms) = self.module(&args[2], rs)?;
                let (n, ns) = self.module(&args[3], ts)?;
                let size = [ts, ms, ns].into_iter().fold(rs, mul_size);
                (RingSpec::Morita(Box::new(r), Box::new(t), m, n), size)
            }
            "idealize" => {
                need(2, "2 arguments")?;
                let (r, rs) = self.ring(&args[0])?;
                let (m, ms) = self.module(&args[1], rs)?;
                (RingSpec::Idealize(Box::new(r), m), mul_size(rs, ms))
            }
            "quotient" => {
                need(2, "2 arguments")?;
                let (r, rs) = self.ring(&args[0])?;
                let ideal = self.ideal(&args[1])?;
                (RingSpec::Quotient(Box::new(r), ideal), rs)
            }
            "series" => {
                need(2, "2 arguments")?;
                let (r, rs) = self.ring(&args[0])?;
                let k = self.positive(&args[1], "the truncation")?;
                let size = pow_size(rs, k);
                (RingSpec::Series(Box::new(r), k), size)
            }
            "localized" => {
                if args.is_empty() {
                    return Err(self.arity(head, pos, 0, "at least 1 prime"));
                }
                let primes = args
                    .iter()
                    .map(|a| self.positive(a, "a prime").map(|p| p as u64))
                    .collect::<Result<_, _>>()?;
                (RingSpec::Localized(primes), Some(None))
            }
            "corner" => {
                need(2, "2 arguments")?;
                let (r, rs) = self.ring(&args[0])?;
                let e = self.int(&args[1], "the idempotent")?;
                (RingSpec::Corner(Box::new(r), e), rs)
            }
            _ => unreachable!("head checked against the keyword list"),
        };
        self.check_size(size, pos)?;
        Ok((spec, size))
    }
}

/// Converts one form to a ring spec, resolving names against `names`.
pub fn ring_from_sexp(s: &Sexp, names: &dyn Names, cap: usize) -> Result<RingSpec, Diagnostic> {
    let conv = Converter {
        names,
        cap: cap as u128,
    };
    conv.ring(s).map(|(r, _)| r)
}

pub(crate) fn module_from_sexp(s: &Sexp, names: &dyn Names) -> Result<ModuleRef, Diagnostic> {
    let conv = Converter {
        names,
        cap: u128::MAX,
    };
    conv.module(s, None).map(|(m, _)| m)
}

/// Parses exactly one ring specification.
pub fn parse_with(input: &str, names: &dyn Names, cap: usize) -> Result<RingSpec, Diagnostic> {
    let forms = parse_forms(input)?;
    match forms.as_slice() {
        [one] => ring_from_sexp(one, names, cap),
        [] => Err(syntax(end_pos(input), "empty input", &["("])),
        [_, second, ..] => Err(syntax(
            second.pos(),
            "trailing input after the ring",
            &["end of input"],
        )),
    }
}

/// Parses with no named definitions and the current order cap.
pub fn parse(input: &str) -> Result<RingSpec, Diagnostic> {
    parse_with(input, &NoNames, wclean::ring::max_order())
}

impl fmt::Display for ModuleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleRef::Regular => f.write_str("regular"),
            ModuleRef::Zero => f.write_str("zero"),
            ModuleRef::ZnMod(m) => write!(f, "(znmod {m})"),
            ModuleRef::Named(n) => f.write_str(n),
        }
    }
}

impl fmt::Display for PairingRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingRef::Mult => f.write_str("mult"),
            PairingRef::Zero => f.write_str("zero"),
            PairingRef::Named(n) => f.write_str(n),
        }
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSpec::Radical => f.write_str("radical"),
            IdealSpec::All => f.write_str("all"),
            IdealSpec::Gens(gs) => {
                f.write_str("(ideal")?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "(zn {n})"),
            RingSpec::Product(rs) => {
                f.write_str("(product")?;
                for r in rs {
                    write!(f, " {r}")?;
                }
                f.write_str(")")
            }
            RingSpec::Matrix(k, r) => write!(f, "(matrix {k} {r})"),
            RingSpec::Tri2(r, s, m) => write!(f, "(tri2 {r} {s} {m})"),
            RingSpec::Tri3(a, m, comp) => {
                write!(
                    f,
                    "(tri3 {} {} {} {} {} {}",
                    a[0], a[1], a[2], m[0], m[1], m[2]
                )?;
                if let Some(c) = comp {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
            RingSpec::Morita(r, s, m, n) => write!(f, "(morita {r} {s} {m} {n})"),
            RingSpec::Idealize(r, m) => write!(f, "(idealize {r} {m})"),
            RingSpec::Quotient(r, i) => write!(f, "(quotient {r} {i})"),
            RingSpec::Series(r, k) => write!(f, "(series {r} {k})"),
            RingSpec::Localized(ps) => {
                f.write_str("(localized")?;
                for p in ps {
                    write!(f, " {p}")?;
                }
                f.write_str(")")
            }
            RingSpec::Corner(r, e) => write!(f, "(corner {r} {e})"),
            RingSpec::Named(n) => f.write_str(n),
            RingSpec::Record(p) => write!(f, "@{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_forms() {
        assert_eq!(parse("(zn 6)").unwrap(), RingSpec::Zn(6));
        assert_eq!(
            parse("(matrix 2 (zn 2))").unwrap(),
            RingSpec::Matrix(2, Box::new(RingSpec::Zn(2)))
        );
        assert_eq!(
            parse("(quotient (zn 8) (ideal 4))").unwrap(),
            RingSpec::Quotient(Box::new(RingSpec::Zn(8)), IdealSpec::Gens(vec![4]))
        );
        assert_eq!(
            parse("(localized 3 5)").unwrap(),
            RingSpec::Localized(vec![3, 5])
        );
    }

    #[test]
    fn unterminated_form() {
        let d = parse("(matrix 2").unwrap_err();
        assert_eq!(d.kind, ErrorKind::Syntax);
        assert_eq!(d.pos, Pos { line: 1, col: 10 });
        assert_eq!(d.expected, vec![")".to_string()]);
    }

    #[test]
    fn error_kinds_are_distinct() {
        assert_eq!(parse("(zn #)").unwrap_err().kind, ErrorKind::Lexical);
        assert_eq!(parse("(zn 2 3)").unwrap_err().kind, ErrorKind::Arity);
        assert_eq!(parse("(frob 2)").unwrap_err().kind, ErrorKind::Syntax);
        assert_eq!(
            parse("(matrix 3 (zn 4))").unwrap_err().kind,
            ErrorKind::SizeCap
        );
        let d = parse("(product (zn 2)\n  (zn 2 2))").unwrap_err();
        assert_eq!((d.kind, d.pos), (ErrorKind::Arity, Pos { line: 2, col: 3 }));
    }

    #[test]
    fn localized_is_not_capped() {
        assert!(parse("(product (localized 3 5) (zn 4))").is_ok());
    }
}
