//! Constructors for the indecomposable families.
//!
//! `X` and `E(1;λ)` follow the printed bases verbatim. `E(n;λ)`, `M(n)` and
//! `W(n)` are length-2 glued modules: `nt` top copies of the `X_s^σ` basis
//! `b_i(m)` and `ns` socle copies of the `X_{p-s}^{-σ}` basis `x_j(m)`,
//! joined by an `E`-gluing (where `λ₂` enters) and an `F`-gluing (where `λ₁`
//! enters). `P_s^σ` is cut out of `X_p^σ ⊗ X_{p-s+1}^+` by its block.

use cyclo::{qint, FieldCtx, Matrix};

use crate::label::{Family, ModuleLabel, ProjLinePoint, Sign};
use crate::ops::{block_decompose, sign_twist, tensor};
use crate::rep::{Algebra, Rep};
use crate::RepError;

fn sign_elem(ctx: &'static FieldCtx, sign: Sign) -> cyclo::FieldElem {
    ctx.int(sign.kappa())
}

/// `X_s^σ` on the basis `a_0..a_{s-1}`.
pub fn build_simple(ctx: &'static FieldCtx, s: u32, sign: Sign) -> Result<Rep, RepError> {
    let p = ctx.p();
    if !(1..=p).contains(&s) {
        return Err(RepError::InvalidParam(format!("X_s needs 1 <= s <= {p}, got {s}")));
    }
    let n = s as usize;
    let sg = sign_elem(ctx, sign);
    let mut e = Matrix::zeros(ctx, n, n);
    let mut f = Matrix::zeros(ctx, n, n);
    let mut k = Matrix::zeros(ctx, n, n);
    for i in 0..n {
        let ii = i as i64;
        k.set(i, i, &sg * &ctx.q_power(s as i64 - 1 - 2 * ii));
        if i > 0 {
            e.set(i - 1, i, &sg * &(&qint(ctx, ii) * &qint(ctx, s as i64 - ii)));
        }
        if i + 1 < n {
            f.set(i + 1, i, ctx.one());
        }
    }
    Ok(Rep::new(Algebra::U, e, f, k)?.with_label(ModuleLabel::x(sign, s).to_string()))
}

/// Length-2 glued module with `nt` top copies of `X_s^σ` and `ns` socle
/// copies of `X_{p-s}^{-σ}`.
///
/// Basis order: `b_i(m)` at `m·s + i`, then `x_j(m)` at `nt·s + m(p-s) + j`.
/// `E b_0(m) = Σ_{m'} eglue[m'][m] x_{p-s-1}(m')` and
/// `F b_{s-1}(m) = Σ_{m'} fglue[m'][m] x_0(m')`; both glue matrices are
/// `ns × nt`. Every choice of glue matrices satisfies the relations; the
/// isomorphism type is that of the Kronecker pencil `(fglue, eglue)`.
pub fn build_glued(
    ctx: &'static FieldCtx,
    s: u32,
    sign: Sign,
    nt: usize,
    ns: usize,
    fglue: &Matrix,
    eglue: &Matrix,
) -> Result<Rep, RepError> {
    let p = ctx.p();
    if !(1..p).contains(&s) {
        return Err(RepError::InvalidParam(format!("glued module needs 1 <= s < {p}, got {s}")));
    }
    for g in [fglue, eglue] {
        if g.rows() != ns || g.cols() != nt {
            return Err(RepError::InvalidParam(format!("glue matrices must be {ns}x{nt}")));
        }
    }
    let (su, tu) = (s as usize, (p - s) as usize);
    let dim = nt * su + ns * tu;
    let b = |m: usize, i: usize| m * su + i;
    let x = |m: usize, j: usize| nt * su + m * tu + j;
    let sg = sign_elem(ctx, sign);
    let nsg = -&sg;
    let mut e = Matrix::zeros(ctx, dim, dim);
    let mut f = Matrix::zeros(ctx, dim, dim);
    let mut k = Matrix::zeros(ctx, dim, dim);
    for m in 0..nt {
        for i in 0..su {
            let ii = i as i64;
            k.set(b(m, i), b(m, i), &sg * &ctx.q_power(s as i64 - 1 - 2 * ii));
            if i > 0 {
                e.set(b(m, i - 1), b(m, i), &sg * &(&qint(ctx, ii) * &qint(ctx, s as i64 - ii)));
            }
            if i + 1 < su {
                f.set(b(m, i + 1), b(m, i), ctx.one());
            }
        }
        for m2 in 0..ns {
            let ge = eglue.get(m2, m);
            if !ge.is_zero() {
                e.set(x(m2, tu - 1), b(m, 0), ge.clone());
            }
            let gf = fglue.get(m2, m);
            if !gf.is_zero() {
                f.set(x(m2, 0), b(m, su - 1), gf.clone());
            }
        }
    }
    let t = (p - s) as i64;
    for m in 0..ns {
        for j in 0..tu {
            let jj = j as i64;
            k.set(x(m, j), x(m, j), &nsg * &ctx.q_power(t - 1 - 2 * jj));
            if j > 0 {
                e.set(x(m, j - 1), x(m, j), &nsg * &(&qint(ctx, jj) * &qint(ctx, t - jj)));
            }
            if j + 1 < tu {
                f.set(x(m, j + 1), x(m, j), ctx.one());
            }
        }
    }
    Rep::new(Algebra::U, e, f, k)
}

/// `N` with ones at `(i-1, i)`.
fn shift(ctx: &'static FieldCtx, n: usize) -> Matrix {
    Matrix::from_fn(ctx, n, n, |i, j| if j == i + 1 { ctx.one() } else { ctx.zero() })
}

/// `E_s^σ(n;λ)`, built directly with sign `σ`.
///
/// For `λ = [1:β]` the gluing is the printed one, `F b_{s-1}(m) = x_0(m)` and
/// `E b_0(m) = β x_{p-s-1}(m) + x_{p-s-1}(m-1)`. For `λ = [0:1]` the nilpotent
/// part moves to the `F`-gluing, `F b_{s-1}(m) = x_0(m-1)` and
/// `E b_0(m) = x_{p-s-1}(m)`, because putting `λ₁ = 0` into the printed
/// formulas leaves a decomposable module once `n ≥ 2`.
pub fn build_e(ctx: &'static FieldCtx, s: u32, sign: Sign, n: u32, lambda: &ProjLinePoint) -> Result<Rep, RepError> {
    if n == 0 {
        return Err(RepError::InvalidParam("E(n;λ) needs n >= 1".into()));
    }
    let nn = n as usize;
    let id = Matrix::identity(ctx, nn);
    let nil = shift(ctx, nn);
    let (fglue, eglue) = match lambda.beta() {
        Some(beta) => (id.clone(), &Matrix::scalar(ctx, nn, beta) + &nil),
        None => (nil, id),
    };
    let label = ModuleLabel::e(sign, s, n, lambda.clone());
    Ok(build_glued(ctx, s, sign, nn, nn, &fglue, &eglue)?.with_label(label.to_string()))
}

/// `M_s^σ(n)` or `W_s^σ(n)` for `n ≥ 2`.
///
/// `M(n)`: `n-1` top copies, `n` socle copies, `E`-glue `Σ e_{i,i}`,
/// `F`-glue `Σ e_{i+1,i}`. `W(n)`: `n` top copies, `n-1` socle copies,
/// `E`-glue `Σ e_{i,i}`, `F`-glue `Σ e_{i,i+1}`.
pub fn build_mw(ctx: &'static FieldCtx, family: Family, s: u32, sign: Sign, n: u32) -> Result<Rep, RepError> {
    if n < 2 {
        return Err(RepError::InvalidParam("M(n), W(n) are built for n >= 2; n = 1 is a simple".into()));
    }
    let n = n as usize;
    let (nt, ns, label) = match family {
        Family::M => (n - 1, n, ModuleLabel::m(sign, s, n as u32)),
        Family::W => (n, n - 1, ModuleLabel::w(sign, s, n as u32)),
        _ => return Err(RepError::InvalidParam("build_mw takes family M or W".into())),
    };
    let one = |c: bool| if c { ctx.one() } else { ctx.zero() };
    let eglue = Matrix::from_fn(ctx, ns, nt, |i, j| one(i == j));
    let fglue = match family {
        Family::M => Matrix::from_fn(ctx, ns, nt, |i, j| one(i == j + 1)),
        _ => Matrix::from_fn(ctx, ns, nt, |i, j| one(j == i + 1)),
    };
    Ok(build_glued(ctx, s, sign, nt, ns, &fglue, &eglue)?.with_label(label.to_string()))
}

/// `P_s^σ` for `1 ≤ s ≤ p-1`: the block of `X_s^σ` inside
/// `X_p^σ ⊗ X_{p-s+1}^+`. `P_p^σ` is `X_p^σ`.
pub fn build_p(ctx: &'static FieldCtx, s: u32, sign: Sign) -> Result<Rep, RepError> {
    let p = ctx.p();
    if !(1..=p).contains(&s) {
        return Err(RepError::InvalidParam(format!("P_s needs 1 <= s <= {p}, got {s}")));
    }
    if s == p {
        return build_simple(ctx, p, sign);
    }
    let big = tensor(&build_simple(ctx, p, sign)?, &build_simple(ctx, p - s + 1, Sign::Plus)?)?;
    let want = ModuleLabel::x(sign, s).block(p);
    let piece = block_decompose(&big)?
        .into_iter()
        .find(|(b, _)| *b == want)
        .ok_or_else(|| RepError::Internal(format!("block {want} missing from X_p ⊗ X_(p-s+1)")))?;
    let rep = piece.1.rep;
    if rep.dim() != 2 * p as usize {
        return Err(RepError::Internal(format!("projective block has dimension {}", rep.dim())));
    }
    Ok(rep.with_label(ModuleLabel::p(sign, s).to_string()))
}

/// Builds the module named by `label` (after canonicalization).
pub fn build(ctx: &'static FieldCtx, label: &ModuleLabel) -> Result<Rep, RepError> {
    let l = label.canonical(ctx.p())?;
    let rep = match l.family {
        Family::X => build_simple(ctx, l.s, l.sign)?,
        Family::P => build_p(ctx, l.s, l.sign)?,
        Family::M | Family::W => build_mw(ctx, l.family, l.s, l.sign, l.n)?,
        Family::E => build_e(ctx, l.s, l.sign, l.n, l.lambda().expect("canonical E has λ"))?,
    };
    Ok(rep.with_label(l.to_string()))
}

/// Builds a minus-sign module as `X_1^- ⊗ (plus version)`, with
/// `E_s^-(n;λ) = X_1^- ⊗ E_s^+(n;(-1)^{p-1}λ)`. Plus-sign labels are built
/// directly.
pub fn build_twisted(ctx: &'static FieldCtx, label: &ModuleLabel) -> Result<Rep, RepError> {
    let p = ctx.p();
    let l = label.canonical(p)?;
    if l.sign == Sign::Plus {
        return build(ctx, &l);
    }
    let mut plus = l.clone();
    plus.sign = Sign::Plus;
    if let Some(lam) = &l.lambda {
        plus.lambda = Some(if p % 2 == 0 { lam.scale_int(-1) } else { lam.clone() });
    }
    Ok(sign_twist(&build(ctx, &plus)?)?.with_label(l.to_string()))
}
