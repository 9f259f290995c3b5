//! Tensor products of indecomposables as formal direct sums.
//!
//! The printed formulas cover products of plus-signed modules; minus signs
//! are moved out through `X_1^-`, using
//! `X_1^- ⊗ Z` (sign flip, `E`: `λ ↦ (-1)^{p-1}λ`) and
//! `Z ⊗ X_1^-` (sign flip, `E`: `λ ↦ -λ`). A projective factor is handled by
//! splitting the other factor into its composition factors, which is exact
//! because tensoring with a projective module gives split sequences.

use cyclo::{qint, FieldCtx, FieldElem};
use repcore::{Family, FormalDecomp, ModuleLabel, ProjLinePoint, Sign};

use crate::composition::composition_factors_rule;
use crate::index::{index_i, index_j};
use crate::RuleError;

/// How the `M ⊗ W` formula is read for the factor order `W ⊗ M`.
///
/// The printed statement reads `M_s(m) ⊗ W_{s'}(n) ≅ W_{s'}(m) ⊗ M_s(n)`.
/// `Commuted` treats the right-hand product as `W_{s'}(n) ⊗ M_s(m)`, the
/// same two modules in the other order. `Literal` takes the indices as
/// printed, which does not even conserve dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WmReading {
    Commuted,
    Literal,
}

/// The two ways of moving minus signs out of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `A^- = X_1^- ⊗ A'`, `B^- = B' ⊗ X_1^-`: signs leave on the outside.
    Outer,
    /// `A^- = A'' ⊗ X_1^-`, `B^- = X_1^- ⊗ B''`: the `X_1^-` factors meet in
    /// the middle and are passed through the other factor.
    Inner,
}

#[derive(Clone, Copy, Debug)]
pub struct RuleOptions {
    pub wm: WmReading,
}

impl Default for RuleOptions {
    fn default() -> Self {
        RuleOptions { wm: WmReading::Commuted }
    }
}

fn sign_factor(lam: &ProjLinePoint, k: i64) -> ProjLinePoint {
    if k.rem_euclid(2) == 0 {
        lam.clone()
    } else {
        lam.scale_int(-1)
    }
}

/// `X_1^- ⊗ Z`.
pub fn twist_left(p: u32, l: &ModuleLabel) -> ModuleLabel {
    let mut out = l.clone();
    out.sign = l.sign.flip();
    if let Some(lam) = &l.lambda {
        out.lambda = Some(sign_factor(lam, p as i64 - 1));
    }
    out
}

/// `Z ⊗ X_1^-`.
pub fn twist_right(l: &ModuleLabel) -> ModuleLabel {
    let mut out = l.clone();
    out.sign = l.sign.flip();
    if let Some(lam) = &l.lambda {
        out.lambda = Some(lam.scale_int(-1));
    }
    out
}

fn map_decomp(d: &FormalDecomp, f: impl Fn(&ModuleLabel) -> ModuleLabel) -> Result<FormalDecomp, RuleError> {
    let mut out = FormalDecomp::new(d.p());
    for (l, m) in d.summands() {
        out.add(&f(l), *m)?;
    }
    Ok(out)
}

/// Accumulates summands, skipping zero multiplicities.
struct Acc {
    p: u32,
    d: FormalDecomp,
}

impl Acc {
    fn new(p: u32) -> Acc {
        Acc { p, d: FormalDecomp::new(p) }
    }

    fn add(&mut self, l: ModuleLabel, mult: i64) -> Result<(), RuleError> {
        if mult < 0 {
            return Err(RuleError::Internal(format!("negative multiplicity for {l}")));
        }
        if mult > 0 {
            self.d.add(&l.canonical(self.p)?, mult as usize)?;
        }
        Ok(())
    }

    /// `⊕_{t ∈ J_σ} (P_t^sign)^mult`.
    fn add_j(&mut self, sigma: i64, sign: Sign, mult: i64) -> Result<(), RuleError> {
        for t in index_j(self.p, sigma) {
            self.add(ModuleLabel::p(sign, t), mult)?;
        }
        Ok(())
    }
}

fn qratio(ctx: &'static FieldCtx, a: u32, b: u32) -> Result<FieldElem, RuleError> {
    Ok(qint(ctx, a as i64).div(&qint(ctx, b as i64))?)
}

/// `[a]/[b] · λ`, times `(-1)^k`.
fn scaled(ctx: &'static FieldCtx, lam: &ProjLinePoint, a: u32, b: u32, k: i64) -> Result<ProjLinePoint, RuleError> {
    Ok(sign_factor(&lam.scale(&qratio(ctx, a, b)?)?, k))
}

/// Projective `a` (sign `σ`) times simple `x`, in the given order; both
/// orders agree.
fn projective_times_simple(p: u32, a: &ModuleLabel, x: &ModuleLabel) -> Result<FormalDecomp, RuleError> {
    let sign = a.sign.mul(x.sign);
    let (s, s2) = (a.s as i64, x.s as i64);
    let mut acc = Acc::new(p);
    if a.family == Family::X {
        // X_p ⊗ X_{s'}
        for t in index_i(p, a.s, x.s)? {
            acc.add(ModuleLabel::x(sign, t), 1)?;
        }
        acc.add_j(s + s2, sign, 1)?;
    } else {
        for t in index_i(p, a.s, x.s)? {
            acc.add(ModuleLabel::p(sign, t), 1)?;
        }
        acc.add_j(s + s2, sign, 2)?;
        acc.add_j(p as i64 - s + s2, sign.flip(), 2)?;
    }
    Ok(acc.d)
}

fn simple_times_simple(p: u32, a: &ModuleLabel, b: &ModuleLabel) -> Result<FormalDecomp, RuleError> {
    let sign = a.sign.mul(b.sign);
    let mut acc = Acc::new(p);
    for t in index_i(p, a.s, b.s)? {
        acc.add(ModuleLabel::x(sign, t), 1)?;
    }
    acc.add_j((a.s + b.s) as i64, sign, 1)?;
    Ok(acc.d)
}

/// `A ⊗ B` for canonical labels.
pub fn tensor_rule(ctx: &'static FieldCtx, a: &ModuleLabel, b: &ModuleLabel) -> Result<FormalDecomp, RuleError> {
    tensor_rule_with(ctx, a, b, RuleOptions::default())
}

/// As [`tensor_rule`], also checking that both sign routes agree.
pub fn tensor_rule_with(
    ctx: &'static FieldCtx,
    a: &ModuleLabel,
    b: &ModuleLabel,
    opts: RuleOptions,
) -> Result<FormalDecomp, RuleError> {
    let outer = tensor_rule_via(ctx, a, b, Route::Outer, opts)?;
    let inner = tensor_rule_via(ctx, a, b, Route::Inner, opts)?;
    if outer != inner {
        return Err(RuleError::RouteMismatch { outer: outer.to_string(), inner: inner.to_string() });
    }
    Ok(outer)
}

pub fn tensor_rule_via(
    ctx: &'static FieldCtx,
    a: &ModuleLabel,
    b: &ModuleLabel,
    route: Route,
    opts: RuleOptions,
) -> Result<FormalDecomp, RuleError> {
    let p = ctx.p();
    let a = a.canonical(p)?;
    let b = b.canonical(p)?;
    if a.is_projective(p) || b.is_projective(p) {
        let (proj, other) = if a.is_projective(p) { (&a, &b) } else { (&b, &a) };
        let mut out = FormalDecomp::new(p);
        for (x, m) in composition_factors_rule(p, other)?.summands() {
            let piece = projective_times_simple(p, proj, x)?;
            out.merge_scaled(&piece, *m)?;
        }
        return Ok(out);
    }
    if a.family == Family::X && b.family == Family::X {
        return simple_times_simple(p, &a, &b);
    }
    let untwist_left = |l: &ModuleLabel| twist_left(p, l);
    let untwist_right = twist_right;
    let plus = |x: &ModuleLabel, y: &ModuleLabel| plus_rule(ctx, x, y, opts);
    let minus_a = a.sign == Sign::Minus;
    let minus_b = b.sign == Sign::Minus;
    match route {
        Route::Outer => {
            let a1 = if minus_a { untwist_left(&a) } else { a.clone() };
            let b1 = if minus_b { untwist_right(&b) } else { b.clone() };
            let mut d = plus(&a1, &b1)?;
            if minus_a {
                d = map_decomp(&d, |l| twist_left(p, l))?;
            }
            if minus_b {
                d = map_decomp(&d, twist_right)?;
            }
            Ok(d)
        }
        Route::Inner => match (minus_a, minus_b) {
            (false, false) => plus(&a, &b),
            (true, false) => {
                // A'' ⊗ (X_1^- ⊗ B) = A'' ⊗ B'' ⊗ X_1^-
                let a2 = untwist_right(&a);
                let b2 = untwist_right(&twist_left(p, &b));
                map_decomp(&plus(&a2, &b2)?, twist_right)
            }
            (false, true) => {
                // (A ⊗ X_1^-) ⊗ B'' = X_1^- ⊗ A'' ⊗ B''
                let b2 = untwist_left(&b);
                let a2 = untwist_left(&twist_right(&a));
                map_decomp(&plus(&a2, &b2)?, |l| twist_left(p, l))
            }
            (true, true) => {
                let a2 = untwist_right(&a);
                let b2 = twist_left(p, &b);
                plus(&a2, &b2)
            }
        },
    }
}

/// Products of non-projective plus-signed indecomposables.
fn plus_rule(ctx: &'static FieldCtx, a: &ModuleLabel, b: &ModuleLabel, opts: RuleOptions) -> Result<FormalDecomp, RuleError> {
    use Family::*;
    let p = ctx.p();
    let pp = p as i64;
    if a.sign != Sign::Plus || b.sign != Sign::Plus {
        return Err(RuleError::Internal(format!("plus_rule called with {a} and {b}")));
    }
    let mut acc = Acc::new(p);
    let (plus, minus) = (Sign::Plus, Sign::Minus);
    match (a.family, b.family) {
        (X, X) => return simple_times_simple(p, a, b),
        (M, X) | (X, M) | (W, X) | (X, W) => {
            let (z, x) = if a.family == X { (b, a) } else { (a, b) };
            let (s, s2, n) = (z.s as i64, x.s as i64, z.n as i64);
            let (top, soc) = if z.family == M { (n - 1, n) } else { (n, n - 1) };
            for t in index_i(p, z.s, x.s)? {
                let l = if z.family == M { ModuleLabel::m(plus, t, z.n) } else { ModuleLabel::w(plus, t, z.n) };
                acc.add(l, 1)?;
            }
            acc.add_j(s + s2, plus, top)?;
            acc.add_j(pp - s + s2, minus, soc)?;
        }
        (M, M) | (W, W) => {
            let (s, s2, m, n) = (a.s as i64, b.s as i64, a.n as i64, b.n as i64);
            for t in index_i(p, a.s, b.s)? {
                let l = if a.family == M {
                    ModuleLabel::m(minus, p - t, (m + n - 1) as u32)
                } else {
                    ModuleLabel::w(plus, t, (m + n - 1) as u32)
                };
                acc.add(l, 1)?;
                acc.add(ModuleLabel::p(plus, t), (m - 1) * (n - 1))?;
            }
            let (j1, j2, j3, j4) = if a.family == M {
                ((m - 1) * (n - 1), m * n, (m - 1) * n, m * (n - 1))
            } else {
                (m * n, (m - 1) * (n - 1), m * (n - 1), (m - 1) * n)
            };
            acc.add_j(s + s2, plus, j1)?;
            acc.add_j(2 * pp - s - s2, plus, j2)?;
            acc.add_j(pp + s - s2, minus, j3)?;
            acc.add_j(pp - s + s2, minus, j4)?;
        }
        (M, W) | (W, M) => {
            let (mm, ww) = if a.family == M { (a, b) } else { (b, a) };
            let (m, n) = match (a.family, opts.wm) {
                (M, _) | (W, WmReading::Commuted) => (mm.n as i64, ww.n as i64),
                (W, WmReading::Literal) => (ww.n as i64, mm.n as i64),
                _ => unreachable!("families checked above"),
            };
            let (s, s2) = (mm.s as i64, ww.s as i64);
            for t in index_i(p, mm.s, ww.s)? {
                if m > n {
                    acc.add(ModuleLabel::m(plus, t, (m - n + 1) as u32), 1)?;
                    acc.add(ModuleLabel::p(plus, t), m * (n - 1))?;
                } else if m == n {
                    acc.add(ModuleLabel::x(minus, p - t), 1)?;
                    acc.add(ModuleLabel::p(plus, t), n * (n - 1))?;
                } else {
                    acc.add(ModuleLabel::w(minus, p - t, (n - m + 1) as u32), 1)?;
                    acc.add(ModuleLabel::p(plus, t), (m - 1) * n)?;
                }
            }
            acc.add_j(s + s2, plus, (m - 1) * n)?;
            acc.add_j(2 * pp - s - s2, plus, m * (n - 1))?;
            acc.add_j(pp + s - s2, minus, (m - 1) * (n - 1))?;
            acc.add_j(pp - s + s2, minus, m * n)?;
        }
        (E, X) | (X, E) => {
            let (e, x) = if a.family == E { (a, b) } else { (b, a) };
            let lam = e.lambda().expect("canonical E has λ");
            let (s, s2, n) = (e.s as i64, x.s as i64, e.n as i64);
            let k = if a.family == E { 0 } else { s2 - 1 };
            for t in index_i(p, e.s, x.s)? {
                acc.add(ModuleLabel::e(plus, t, e.n, scaled(ctx, lam, e.s, t, k)?), 1)?;
            }
            acc.add_j(s + s2, plus, n)?;
            acc.add_j(pp - s + s2, minus, n)?;
        }
        (E, M) | (M, E) | (E, W) | (W, E) => {
            let (e, z) = if a.family == E { (a, b) } else { (b, a) };
            let lam = e.lambda().expect("canonical E has λ");
            let (s, s2, m, n) = (e.s as i64, z.s as i64, e.n as i64, z.n as i64);
            let e_first = a.family == E;
            for t in index_i(p, e.s, z.s)? {
                if z.family == M {
                    let k = if e_first { 1 } else { s2 };
                    acc.add(ModuleLabel::e(minus, p - t, e.n, scaled(ctx, lam, e.s, t, k)?), 1)?;
                } else {
                    let k = if e_first { 0 } else { s2 - 1 };
                    acc.add(ModuleLabel::e(plus, t, e.n, scaled(ctx, lam, e.s, t, k)?), 1)?;
                }
                acc.add(ModuleLabel::p(plus, t), m * (n - 1))?;
            }
            let (j1, j2, j3, j4) = if z.family == M {
                (m * (n - 1), m * n, m * n, m * (n - 1))
            } else {
                (m * n, m * (n - 1), m * (n - 1), m * n)
            };
            acc.add_j(s + s2, plus, j1)?;
            acc.add_j(2 * pp - s - s2, plus, j2)?;
            acc.add_j(pp + s - s2, minus, j3)?;
            acc.add_j(pp - s + s2, minus, j4)?;
        }
        (E, E) => {
            let (lam, mu) = (a.lambda().expect("λ"), b.lambda().expect("μ"));
            let (s, s2, m, n) = (a.s as i64, b.s as i64, a.n as i64, b.n as i64);
            for t in index_i(p, a.s, b.s)? {
                let left = scaled(ctx, lam, a.s, t, 0)?;
                let right = scaled(ctx, mu, b.s, t, s - 1)?;
                if left == right {
                    let l = m.min(n);
                    acc.add(ModuleLabel::e(plus, t, l as u32, left.clone()), 1)?;
                    acc.add(ModuleLabel::e(minus, p - t, l as u32, left.scale_int(-1)), 1)?;
                    acc.add(ModuleLabel::p(plus, t), m * n - l)?;
                } else {
                    acc.add(ModuleLabel::p(plus, t), m * n)?;
                }
            }
            acc.add_j(s + s2, plus, m * n)?;
            acc.add_j(2 * pp - s - s2, plus, m * n)?;
            acc.add_j(pp + s - s2, minus, m * n)?;
            acc.add_j(pp - s + s2, minus, m * n)?;
        }
        _ => return Err(RuleError::NoRule(format!("{a} ⊗ {b}"))),
    }
    Ok(acc.d)
}

/// Compares `A ⊗ B` with `B ⊗ A`; `None` if they agree, else both sides.
pub fn commutes(
    ctx: &'static FieldCtx,
    a: &ModuleLabel,
    b: &ModuleLabel,
) -> Result<Option<(FormalDecomp, FormalDecomp)>, RuleError> {
    let ab = tensor_rule(ctx, a, b)?;
    let ba = tensor_rule(ctx, b, a)?;
    Ok(if ab == ba { None } else { Some((ab, ba)) })
}
