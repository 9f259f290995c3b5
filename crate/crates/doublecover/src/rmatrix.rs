//! The universal R-matrix
//! `R̄ = (1/4p) Σ_{m<p} Σ_{n,j<4p} (q-q⁻¹)^m/[m]! · q^{m(m-1)/2 + m(n-j) - nj/2} e^m t^n ⊗ f^m t^j`
//! evaluated on `A ⊗ B`, with `q^{1/2} = ζ`.

use cyclo::{qfact, FieldCtx, FieldElem, Matrix};
use repcore::ops::{intertwines, tensor};
use repcore::{Algebra, Rep};

use crate::DoubleError;

fn coefficient(ctx: &'static FieldCtx, m: u32) -> Result<FieldElem, DoubleError> {
    let q = ctx.q();
    let d = &q - &q.inv()?;
    Ok(d.pow(m as u64).div(&qfact(ctx, m))?)
}

fn check_d(z: &Rep) -> Result<(), DoubleError> {
    if z.algebra() != Algebra::D {
        return Err(DoubleError::WrongAlgebra("D"));
    }
    Ok(())
}

/// Spectral projectors of `t`: `P_a = (1/4p) Σ_n ζ^{-an} t^n` for the
/// exponents `a` that occur.
fn projectors(z: &Rep) -> Vec<(i64, Matrix)> {
    let ctx = z.ctx();
    let order = 4 * ctx.p() as i64;
    let id = Matrix::identity(ctx, z.dim());
    let mut powers = vec![id];
    for _ in 1..order {
        let next = z.k() * powers.last().expect("nonempty");
        powers.push(next);
    }
    let inv = ctx.frac(1, order).expect("nonzero");
    (0..order)
        .filter_map(|a| {
            let mut acc = Matrix::zeros(ctx, z.dim(), z.dim());
            for (n, tn) in powers.iter().enumerate() {
                acc = &acc + &tn.scale(&ctx.zeta_power(-a * n as i64));
            }
            let proj = acc.scale(&inv);
            (!proj.is_zero()).then_some((a, proj))
        })
        .collect()
}

/// `R̄` on `A ⊗ B`. The sums over `n, j` collapse through the spectral
/// projectors of `t`: on `ζ^a`- and `ζ^b`-eigenvectors they contribute
/// `ζ^{(a+2m)(b-2m)}`.
pub fn rmatrix_on(a: &Rep, b: &Rep) -> Result<Matrix, DoubleError> {
    check_d(a)?;
    check_d(b)?;
    let ctx = a.ctx();
    let p = ctx.p();
    let (pa, pb) = (projectors(a), projectors(b));
    let mut out = Matrix::zeros(ctx, a.dim() * b.dim(), a.dim() * b.dim());
    let (mut em, mut fm) = (Matrix::identity(ctx, a.dim()), Matrix::identity(ctx, b.dim()));
    for m in 0..p {
        let mi = m as i64;
        let c = &coefficient(ctx, m)? * &ctx.zeta_power(mi * (mi - 1));
        for (x, px) in &pa {
            let left = &em * px;
            for (y, py) in &pb {
                let scal = &c * &ctx.zeta_power((x + 2 * mi) * (y - 2 * mi));
                out = &out + &left.kron(&(&fm * py)).scale(&scal);
            }
        }
        em = a.e() * &em;
        fm = b.f() * &fm;
    }
    Ok(out)
}

/// `R̄` on `A ⊗ B` summed term by term as printed; for cross-checking
/// [`rmatrix_on`] on small modules.
pub fn rmatrix_literal(a: &Rep, b: &Rep) -> Result<Matrix, DoubleError> {
    check_d(a)?;
    check_d(b)?;
    let ctx = a.ctx();
    let p = ctx.p();
    let order = 4 * p as i64;
    let mut out = Matrix::zeros(ctx, a.dim() * b.dim(), a.dim() * b.dim());
    for m in 0..p as i64 {
        let c = coefficient(ctx, m as u32)?;
        let (em, fm) = (a.e().pow(m as u32), b.f().pow(m as u32));
        for n in 0..order {
            let left = &em * &a.k().pow(n as u32);
            for j in 0..order {
                // q^{m(m-1)/2 + m(n-j) - nj/2} = ζ^{m(m-1) + 2m(n-j) - nj}
                let scal = &c * &ctx.zeta_power(m * (m - 1) + 2 * m * (n - j) - n * j);
                out = &out + &left.kron(&(&fm * &b.k().pow(j as u32))).scale(&scal);
            }
        }
    }
    Ok(out.scale(&ctx.frac(1, order)?))
}

/// The flip `σ : A ⊗ B → B ⊗ A`.
pub fn swap(ctx: &'static FieldCtx, da: usize, db: usize) -> Matrix {
    let mut s = Matrix::zeros(ctx, da * db, da * db);
    for i in 0..da {
        for k in 0..db {
            s.set(k * da + i, i * db + k, ctx.one());
        }
    }
    s
}

pub struct BraidingCheck {
    /// `σ ∘ R̄ : A ⊗ B → B ⊗ A`.
    pub map: Matrix,
    pub intertwines: bool,
    pub invertible: bool,
}

impl BraidingCheck {
    pub fn passed(&self) -> bool {
        self.intertwines && self.invertible
    }
}

/// Checks that `σ ∘ R̄` is an invertible `D̄`-intertwiner `A ⊗ B → B ⊗ A`.
pub fn braiding_check(a: &Rep, b: &Rep) -> Result<BraidingCheck, DoubleError> {
    let ctx = a.ctx();
    let map = &swap(ctx, a.dim(), b.dim()) * &rmatrix_on(a, b)?;
    let ab = tensor(a, b)?;
    let ba = tensor(b, a)?;
    let intertwines = intertwines(&ab, &ba, &map);
    let invertible = map.is_invertible();
    Ok(BraidingCheck { map, intertwines, invertible })
}
