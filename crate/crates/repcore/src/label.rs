//! Symbolic names of indecomposable modules and formal direct sums of them.
//!
//! Grammar: `X+(s)`, `P-(s)`, `M+(s,n)`, `W-(s,n)`, `E+(s,n,[a:b])`, where
//! `a` and `b` use the field-element string form of [`cyclo::text`].

use std::fmt;

use cyclo::text::parse_elem;
use cyclo::{FieldCtx, FieldElem};
use serde_json::{json, Value};

use crate::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// The group law on `{+,-} ≅ Z/2`.
    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `κ(+) = 1`, `κ(-) = -1`.
    pub fn kappa(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A point of the projective line, stored as `[1:β]` or `[0:1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLinePoint {
    l1: FieldElem,
    l2: FieldElem,
}

impl ProjLinePoint {
    pub fn new(l1: FieldElem, l2: FieldElem) -> Result<ProjLinePoint, RepError> {
        if l1.is_zero() {
            if l2.is_zero() {
                return Err(RepError::InvalidParam("[0:0] is not a point of P^1".into()));
            }
            return Ok(ProjLinePoint::infinity(l1.ctx()));
        }
        let beta = l2.div(&l1)?;
        Ok(ProjLinePoint { l1: l1.ctx().one(), l2: beta })
    }

    /// `[1:β]`.
    pub fn finite(beta: FieldElem) -> ProjLinePoint {
        ProjLinePoint { l1: beta.ctx().one(), l2: beta }
    }

    /// `[0:1]`.
    pub fn infinity(ctx: &'static FieldCtx) -> ProjLinePoint {
        ProjLinePoint { l1: ctx.zero(), l2: ctx.one() }
    }

    pub fn ratio(ctx: &'static FieldCtx, a: i64, b: i64) -> Result<ProjLinePoint, RepError> {
        ProjLinePoint::new(ctx.int(a), ctx.int(b))
    }

    pub fn coords(&self) -> (&FieldElem, &FieldElem) {
        (&self.l1, &self.l2)
    }

    /// `β` for `[1:β]`, `None` for `[0:1]`.
    pub fn beta(&self) -> Option<&FieldElem> {
        if self.l1.is_zero() {
            None
        } else {
            Some(&self.l2)
        }
    }

    /// `cλ = [cλ₁:λ₂]` for nonzero `c`.
    pub fn scale(&self, c: &FieldElem) -> Result<ProjLinePoint, RepError> {
        if c.is_zero() {
            return Err(RepError::InvalidParam("scaling a point of P^1 by zero".into()));
        }
        ProjLinePoint::new(c * &self.l1, self.l2.clone())
    }

    pub fn scale_int(&self, c: i64) -> ProjLinePoint {
        self.scale(&self.l1.ctx().int(c)).expect("nonzero integer scale")
    }

    /// Whether this is `[1:0]` or `[0:1]`.
    pub fn is_coordinate_point(&self) -> bool {
        self.l1.is_zero() || self.l2.is_zero()
    }
}

impl fmt::Display for ProjLinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.l1, self.l2)
    }
}

impl fmt::Debug for ProjLinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Family tags, declared in the order used for sorting decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    M,
    W,
    E,
    P,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::X => 'X',
            Family::M => 'M',
            Family::W => 'W',
            Family::E => 'E',
            Family::P => 'P',
        }
    }
}

/// Name of an indecomposable module. `n` is 1 for `X` and `P`; `lambda` is
/// set only for `E`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleLabel {
    pub family: Family,
    pub sign: Sign,
    pub s: u32,
    pub n: u32,
    pub lambda: Option<ProjLinePoint>,
}

impl ModuleLabel {
    pub fn x(sign: Sign, s: u32) -> ModuleLabel {
        ModuleLabel { family: Family::X, sign, s, n: 1, lambda: None }
    }

    pub fn p(sign: Sign, s: u32) -> ModuleLabel {
        ModuleLabel { family: Family::P, sign, s, n: 1, lambda: None }
    }

    pub fn m(sign: Sign, s: u32, n: u32) -> ModuleLabel {
        ModuleLabel { family: Family::M, sign, s, n, lambda: None }
    }

    pub fn w(sign: Sign, s: u32, n: u32) -> ModuleLabel {
        ModuleLabel { family: Family::W, sign, s, n, lambda: None }
    }

    pub fn e(sign: Sign, s: u32, n: u32, lambda: ProjLinePoint) -> ModuleLabel {
        ModuleLabel { family: Family::E, sign, s, n, lambda: Some(lambda) }
    }

    pub fn lambda(&self) -> Option<&ProjLinePoint> {
        self.lambda.as_ref()
    }

    /// Checks ranges and rewrites aliases:
    /// `P(p) = X(p)`, `W_s^±(1) = X_s^±`, `M_s^±(1) = X_{p-s}^∓`,
    /// `E_0^±(1) = X_p^∓`, `E_p^±(1) = X_p^±`.
    pub fn canonical(&self, p: u32) -> Result<ModuleLabel, RepError> {
        let bad = |why: &str| Err(RepError::InvalidParam(format!("{self} at p={p}: {why}")));
        if self.n == 0 {
            return bad("n must be positive");
        }
        match self.family {
            Family::X => {
                if !(1..=p).contains(&self.s) {
                    return bad("s must lie in 1..=p");
                }
                Ok(ModuleLabel::x(self.sign, self.s))
            }
            Family::P => {
                if !(1..=p).contains(&self.s) {
                    return bad("s must lie in 1..=p");
                }
                if self.s == p {
                    Ok(ModuleLabel::x(self.sign, p))
                } else {
                    Ok(ModuleLabel::p(self.sign, self.s))
                }
            }
            Family::M | Family::W => {
                if !(1..p).contains(&self.s) {
                    return bad("s must lie in 1..p");
                }
                if self.n == 1 {
                    return Ok(if self.family == Family::W {
                        ModuleLabel::x(self.sign, self.s)
                    } else {
                        ModuleLabel::x(self.sign.flip(), p - self.s)
                    });
                }
                Ok(self.clone())
            }
            Family::E => {
                if self.lambda.is_none() {
                    return bad("missing λ");
                }
                if self.s == 0 || self.s == p {
                    if self.n != 1 {
                        return bad("boundary alias E_0/E_p needs n=1");
                    }
                    let sign = if self.s == 0 { self.sign.flip() } else { self.sign };
                    return Ok(ModuleLabel::x(sign, p));
                }
                if self.s > p {
                    return bad("s must lie in 1..p");
                }
                Ok(self.clone())
            }
        }
    }

    /// Dimension per the standard formulas (label assumed canonical).
    pub fn dim(&self, p: u32) -> usize {
        let (p, s, n) = (p as usize, self.s as usize, self.n as usize);
        match self.family {
            Family::X => s,
            Family::P => 2 * p,
            Family::M => p * n - s,
            Family::W => p * n - p + s,
            Family::E => p * n,
        }
    }

    /// Block id in `0..=p`: `X_s^+` lies in block `s`, `X_s^-` in `p-s`.
    pub fn block(&self, p: u32) -> u32 {
        match self.sign {
            Sign::Plus => self.s,
            Sign::Minus => p - self.s,
        }
    }

    pub fn is_projective(&self, p: u32) -> bool {
        self.family == Family::P || (self.family == Family::X && self.s == p)
    }

    pub fn is_simple(&self) -> bool {
        self.family == Family::X
    }

    /// Sort key: block, family, n, λ, then sign and s.
    pub fn sort_key(&self, p: u32) -> (u32, Family, u32, Option<ProjLinePoint>, Sign, u32) {
        (self.block(p), self.family, self.n, self.lambda.clone(), self.sign, self.s)
    }

    pub fn parse(text: &str, ctx: &'static FieldCtx) -> Result<ModuleLabel, RepError> {
        let t: String = text.trim().replace('−', "-");
        let err = |why: &str| RepError::Parse(format!("`{text}`: {why}"));
        let mut chars = t.chars();
        let family = match chars.next() {
            Some('X') => Family::X,
            Some('P') => Family::P,
            Some('M') => Family::M,
            Some('W') => Family::W,
            Some('E') => Family::E,
            _ => return Err(err("expected one of X, P, M, W, E")),
        };
        let sign = match chars.next() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(err("expected a sign after the family letter")),
        };
        let rest = chars.as_str().trim();
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err("arguments must be wrapped in parentheses"))?;
        let (ints, lambda) = match inner.find('[') {
            Some(i) => {
                let close = inner.rfind(']').ok_or_else(|| err("unterminated [a:b]"))?;
                let body = &inner[i + 1..close];
                let (a, b) = body.split_once(':').ok_or_else(|| err("λ must be written [a:b]"))?;
                let a = parse_elem(a, ctx)?;
                let b = parse_elem(b, ctx)?;
                let head = inner[..i].trim().trim_end_matches(',');
                (head, Some(ProjLinePoint::new(a, b)?))
            }
            None => (inner, None),
        };
        let nums = ints
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| err("expected unsigned integers")))
            .collect::<Result<Vec<_>, _>>()?;
        let label = match (family, nums.as_slice(), lambda) {
            (Family::X, [s], None) => ModuleLabel::x(sign, *s),
            (Family::P, [s], None) => ModuleLabel::p(sign, *s),
            (Family::M, [s, n], None) => ModuleLabel::m(sign, *s, *n),
            (Family::W, [s, n], None) => ModuleLabel::w(sign, *s, *n),
            (Family::E, [s, n], Some(l)) => ModuleLabel::e(sign, *s, *n, l),
            _ => return Err(err("wrong number of arguments for this family")),
        };
        Ok(label)
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = format!("{}{}", self.family.letter(), self.sign.symbol());
        match self.family {
            Family::X | Family::P => write!(f, "{head}({})", self.s),
            Family::M | Family::W => write!(f, "{head}({},{})", self.s, self.n),
            Family::E => match &self.lambda {
                Some(l) => write!(f, "{head}({},{},{l})", self.s, self.n),
                None => write!(f, "{head}({},{},?)", self.s, self.n),
            },
        }
    }
}

impl fmt::Debug for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A formal direct sum of canonical labels with positive multiplicities,
/// kept sorted by [`ModuleLabel::sort_key`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalDecomp {
    p: u32,
    summands: Vec<(ModuleLabel, usize)>,
}

impl FormalDecomp {
    pub fn new(p: u32) -> FormalDecomp {
        FormalDecomp { p, summands: Vec::new() }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn summands(&self) -> &[(ModuleLabel, usize)] {
        &self.summands
    }

    pub fn add(&mut self, label: &ModuleLabel, mult: usize) -> Result<(), RepError> {
        if mult == 0 {
            return Ok(());
        }
        let label = label.canonical(self.p)?;
        match self.summands.iter_mut().find(|(l, _)| *l == label) {
            Some((_, m)) => *m += mult,
            None => {
                self.summands.push((label, mult));
                let p = self.p;
                self.summands.sort_by_cached_key(|(l, _)| l.sort_key(p));
            }
        }
        Ok(())
    }

    pub fn merge(&mut self, other: &FormalDecomp) -> Result<(), RepError> {
        for (l, m) in &other.summands {
            self.add(l, *m)?;
        }
        Ok(())
    }

    /// `other` with every multiplicity multiplied by `k`, added to `self`.
    pub fn merge_scaled(&mut self, other: &FormalDecomp, k: usize) -> Result<(), RepError> {
        for (l, m) in &other.summands {
            self.add(l, m * k)?;
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|(l, m)| l.dim(self.p) * m).sum()
    }

    pub fn count(&self) -> usize {
        self.summands.iter().map(|(_, m)| m).sum()
    }

    pub fn mult(&self, label: &ModuleLabel) -> usize {
        let Ok(label) = label.canonical(self.p) else { return 0 };
        self.summands.iter().find(|(l, _)| *l == label).map_or(0, |(_, m)| *m)
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn to_json(&self, certificate: &str) -> Value {
        json!({
            "p": self.p,
            "summands": self
                .summands
                .iter()
                .map(|(l, m)| json!({"label": l.to_string(), "mult": m}))
                .collect::<Vec<_>>(),
            "dim": self.dim(),
            "certificate": certificate,
        })
    }

    pub fn from_json(v: &Value) -> Result<FormalDecomp, RepError> {
        let bad = |why: &str| RepError::Json(why.to_string());
        let p = v["p"].as_u64().ok_or_else(|| bad("missing p"))? as u32;
        let ctx = FieldCtx::get(p)?;
        let mut out = FormalDecomp::new(p);
        for s in v["summands"].as_array().ok_or_else(|| bad("missing summands"))? {
            let label = s["label"].as_str().ok_or_else(|| bad("summand without label"))?;
            let mult = s["mult"].as_u64().ok_or_else(|| bad("summand without mult"))?;
            out.add(&ModuleLabel::parse(label, ctx)?, mult as usize)?;
        }
        Ok(out)
    }
}

impl fmt::Display for FormalDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(l, m)| if *m == 1 { l.to_string() } else { format!("{l}^{m}") })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl fmt::Debug for FormalDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
