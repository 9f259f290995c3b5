use std::fmt;

use cyclo::{qint, FieldCtx, FieldElem, Matrix};
use repcore::ops::{direct_sum, intertwines};
use repcore::{build_e, Algebra, ProjLinePoint, Rep, Sign};

use crate::DoubleError;

/// The parameter `α ∈ {1, -1, √-1, -√-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alpha {
    One,
    MinusOne,
    I,
    MinusI,
}

impl Alpha {
    pub const ALL: [Alpha; 4] = [Alpha::One, Alpha::MinusOne, Alpha::I, Alpha::MinusI];

    /// `α = ζ^k` with `ζ` a primitive `4p`-th root of unity.
    fn zeta_exponent(self, p: u32) -> i64 {
        let p = p as i64;
        match self {
            Alpha::One => 0,
            Alpha::I => p,
            Alpha::MinusOne => 2 * p,
            Alpha::MinusI => 3 * p,
        }
    }

    pub fn value(self, ctx: &'static FieldCtx) -> FieldElem {
        ctx.zeta_power(self.zeta_exponent(ctx.p()))
    }

    pub fn parse(text: &str) -> Option<Alpha> {
        match text {
            "1" => Some(Alpha::One),
            "-1" => Some(Alpha::MinusOne),
            "i" => Some(Alpha::I),
            "-i" => Some(Alpha::MinusI),
            _ => None,
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alpha::One => "1",
            Alpha::MinusOne => "-1",
            Alpha::I => "i",
            Alpha::MinusI => "-i",
        })
    }
}

/// `T^s(α,κ,n)` as a `D̄`-module of dimension `2pn`.
///
/// Basis: `e_u(m)` at `(m-1)p + u` and `ê_u(m)` at `np + (m-1)p + u`, for
/// `0 ≤ u < p`, `1 ≤ m ≤ n`. The `u = 0` vectors of one copy are sent by `e`
/// to `κ_i` times the `u = p-1` vector of the other copy plus the one from the
/// previous Jordan layer.
pub fn build_t(ctx: &'static FieldCtx, s: u32, alpha: Alpha, kappa: (&FieldElem, &FieldElem), n: u32) -> Result<Rep, DoubleError> {
    let p = ctx.p();
    if !(1..p).contains(&s) {
        return Err(DoubleError::InvalidParam(format!("s={s} must lie in 1..{p}")));
    }
    if n == 0 {
        return Err(DoubleError::InvalidParam("n must be positive".into()));
    }
    if kappa.0.is_zero() || kappa.1.is_zero() {
        return Err(DoubleError::InvalidParam("κ must have nonzero entries".into()));
    }
    let (pu, nu) = (p as usize, n as usize);
    let dim = 2 * pu * nu;
    let idx = |hat: usize, m: usize, u: usize| hat * pu * nu + (m - 1) * pu + u;
    let a = alpha.zeta_exponent(p);
    let a2 = alpha.value(ctx).pow(2);
    let mut e = Matrix::zeros(ctx, dim, dim);
    let mut f = Matrix::zeros(ctx, dim, dim);
    let mut t = Matrix::zeros(ctx, dim, dim);
    let kap = [kappa.0, kappa.1];
    for hat in 0..2 {
        for m in 1..=nu {
            for u in 0..pu {
                let i = idx(hat, m, u);
                let w = ctx.zeta_power(a + s as i64 - 1 - 2 * u as i64);
                t.set(i, i, if hat == 0 { w } else { -&w });
                if u + 1 < pu {
                    f.set(idx(hat, m, u + 1), i, ctx.one());
                }
                if u > 0 {
                    let c = &a2 * &(&qint(ctx, u as i64) * &qint(ctx, s as i64 - u as i64));
                    e.set(idx(hat, m, u - 1), i, c);
                } else {
                    e.set(idx(1 - hat, m, pu - 1), i, kap[hat].clone());
                    if m > 1 {
                        e.set(idx(1 - hat, m - 1, pu - 1), i, ctx.one());
                    }
                }
            }
        }
    }
    let rep = Rep::new(Algebra::D, e, f, t)?.with_label(format!("T^{s}({alpha},({},{}),{n})", kappa.0, kappa.1));
    Ok(rep)
}

/// The `Ū`-module obtained through `K ↦ t²`.
pub fn restrict_to_u(z: &Rep) -> Result<Rep, DoubleError> {
    if z.algebra() != Algebra::D {
        return Err(DoubleError::WrongAlgebra("D"));
    }
    Ok(z.restrict_to_u())
}

/// Outcome of [`jordan_split_check`].
pub struct JordanSplit {
    /// `Q` with `Q⁻¹ [[0, J(κ₂)], [J(κ₁), 0]] Q = diag(J(β), J(-β))`.
    pub q: Matrix,
    /// `Ψ : T|_Ū → E_s^+(n;[1:β]) ⊕ E_s^+(n;[1:-β])`.
    pub psi: Matrix,
    pub target: Rep,
    pub passed: bool,
}

fn jordan_cell(ctx: &'static FieldCtx, n: usize, x: &FieldElem) -> Matrix {
    Matrix::from_fn(ctx, n, n, |i, j| {
        if i == j {
            x.clone()
        } else if j == i + 1 {
            ctx.one()
        } else {
            ctx.zero()
        }
    })
}

/// A Jordan chain `v_1, …, v_n` of `a` for the eigenvalue `x`, assuming a
/// single Jordan block of size `n` for `x`: `a v_k = x v_k + v_{k-1}`.
fn jordan_chain(a: &Matrix, x: &FieldElem, n: usize) -> Result<Vec<Vec<FieldElem>>, DoubleError> {
    let ctx = a.ctx();
    let shifted = a - &Matrix::scalar(ctx, a.rows(), x);
    let top = shifted.pow(n as u32).nullspace();
    let below = shifted.pow(n as u32 - 1);
    let v = top
        .columns()
        .into_iter()
        .find(|v| below.apply(v).iter().any(|c| !c.is_zero()))
        .ok_or_else(|| DoubleError::Internal(format!("no Jordan chain of length {n} for {x}")))?;
    let mut chain = vec![v];
    for _ in 1..n {
        let next = shifted.apply(chain.last().expect("nonempty"));
        chain.push(next);
    }
    chain.reverse();
    Ok(chain)
}

/// Builds `Q` and `Ψ` for `T^s(α,κ,n)` with `α = ±1` and checks exactly that
/// `Ψ` is a bijective `Ū`-intertwiner onto `E_s^+(n;[1:β]) ⊕ E_s^+(n;[1:-β])`.
pub fn jordan_split_check(
    ctx: &'static FieldCtx,
    s: u32,
    alpha: Alpha,
    kappa: (&FieldElem, &FieldElem),
    n: u32,
    beta: &FieldElem,
) -> Result<JordanSplit, DoubleError> {
    if !matches!(alpha, Alpha::One | Alpha::MinusOne) {
        return Err(DoubleError::InvalidParam("the splitting is stated for α = ±1".into()));
    }
    if &beta.pow(2) != &(kappa.0 * kappa.1) {
        return Err(DoubleError::InvalidParam(format!("β² = {} differs from κ₁κ₂", beta.pow(2))));
    }
    let p = ctx.p() as usize;
    let nu = n as usize;
    let t = restrict_to_u(&build_t(ctx, s, alpha, kappa, n)?)?;
    let mut a = Matrix::zeros(ctx, 2 * nu, 2 * nu);
    let (j1, j2) = (jordan_cell(ctx, nu, kappa.0), jordan_cell(ctx, nu, kappa.1));
    for i in 0..nu {
        for j in 0..nu {
            a.set(i, nu + j, j2.get(i, j).clone());
            a.set(nu + i, j, j1.get(i, j).clone());
        }
    }
    let mut cols = jordan_chain(&a, beta, nu)?;
    cols.extend(jordan_chain(&a, &-beta, nu)?);
    let q = Matrix::from_columns(ctx, 2 * nu, &cols);
    // b_u(c) = Σ_r e_u(r) Q[r][c], with r, c running over (copy, m)
    let dim = 2 * p * nu;
    let old = |r: usize, u: usize| (r / nu) * p * nu + (r % nu) * p + u;
    let mut change = Matrix::zeros(ctx, dim, dim);
    for u in 0..p {
        for c in 0..2 * nu {
            for r in 0..2 * nu {
                change.set(old(r, u), old(c, u), q.get(r, c).clone());
            }
        }
    }
    // E_s^+(n;λ): b_i(m) at m·s + i, x_j(m) at n·s + m(p-s) + j
    let su = s as usize;
    let mut place = Matrix::zeros(ctx, dim, dim);
    for c in 0..2 * nu {
        let (copy, m) = (c / nu, c % nu);
        for u in 0..p {
            let local = if u < su { m * su + u } else { nu * su + m * (p - su) + (u - su) };
            place.set(copy * p * nu + local, old(c, u), ctx.one());
        }
    }
    let target = direct_sum(&[
        build_e(ctx, s, Sign::Plus, n, &ProjLinePoint::finite(beta.clone()))?,
        build_e(ctx, s, Sign::Plus, n, &ProjLinePoint::finite(-beta))?,
    ])?;
    let psi = &place * &change.inverse()?;
    let passed = intertwines(&t, &target, &psi) && psi.is_invertible();
    Ok(JordanSplit { q, psi, target, passed })
}
