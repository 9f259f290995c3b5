//! Kronecker pencils: representations `U ⇉ S` of the Kronecker quiver,
//! given by two `dim S × dim U` matrices `A1, A2`.
//!
//! The indecomposables are `W(n)` (dims `(n, n-1)`), `M(n)` (dims
//! `(n-1, n)`) and the regular `E(n;λ)` (dims `(n, n)`) with
//! `λ = [λ₁:λ₂]`, where `λ₂ A1 = λ₁ A2` on the eigenvectors. Each has a
//! local endomorphism ring, so summands are split off one type at a time by
//! the same trace pairing used for modules.

use cyclo::{Echelon, FieldCtx, FieldElem, Matrix};
use repcore::ProjLinePoint;

use crate::roots::{charpoly, roots_in_field};
use crate::split::{invertible_minor, trace_of_product};
use crate::HomError;

#[derive(Clone, Debug)]
pub struct Pencil {
    pub u: usize,
    pub v: usize,
    pub a1: Matrix,
    pub a2: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KronType {
    W(u32),
    M(u32),
    E(u32, ProjLinePoint),
}

/// One summand, with bases of its `U`- and `S`-parts in the coordinates
/// of the pencil that was decomposed.
#[derive(Clone, Debug)]
pub struct KronPiece {
    pub kind: KronType,
    pub top: Matrix,
    pub soc: Matrix,
}

/// A pencil morphism `(φ_U, φ_S)` with `φ_S A_i = A'_i φ_U`.
#[derive(Clone, Debug)]
struct PencilHom {
    u: Matrix,
    s: Matrix,
}

fn unit(ctx: &'static FieldCtx, c: bool) -> FieldElem {
    if c {
        ctx.one()
    } else {
        ctx.zero()
    }
}

impl Pencil {
    pub fn new(a1: Matrix, a2: Matrix) -> Pencil {
        assert_eq!((a1.rows(), a1.cols()), (a2.rows(), a2.cols()));
        Pencil { u: a1.cols(), v: a1.rows(), a1, a2 }
    }

    /// `W(n)`: `A1 = [I | 0]`, `A2 = [0 | I]`.
    pub fn model_w(ctx: &'static FieldCtx, n: usize) -> Pencil {
        Pencil::new(
            Matrix::from_fn(ctx, n - 1, n, |i, j| unit(ctx, i == j)),
            Matrix::from_fn(ctx, n - 1, n, |i, j| unit(ctx, j == i + 1)),
        )
    }

    /// `M(n)`: `A1 = [I ; 0]`, `A2 = [0 ; I]`.
    pub fn model_m(ctx: &'static FieldCtx, n: usize) -> Pencil {
        Pencil::new(
            Matrix::from_fn(ctx, n, n - 1, |i, j| unit(ctx, i == j)),
            Matrix::from_fn(ctx, n, n - 1, |i, j| unit(ctx, i == j + 1)),
        )
    }

    /// `E(n;[1:β])`: `A1 = I`, `A2 = βI + N`; `E(n;[0:1])`: `A1 = N`,
    /// `A2 = I`.
    pub fn model_e(ctx: &'static FieldCtx, n: usize, lambda: &ProjLinePoint) -> Pencil {
        let id = Matrix::identity(ctx, n);
        let nil = Matrix::from_fn(ctx, n, n, |i, j| unit(ctx, j == i + 1));
        match lambda.beta() {
            Some(b) => Pencil::new(id, &Matrix::scalar(ctx, n, b) + &nil),
            None => Pencil::new(nil, id),
        }
    }

    fn ctx(&self) -> &'static FieldCtx {
        self.a1.ctx()
    }

    /// Restriction to the subpencil on the column spaces of `bu`, `bs`.
    fn restrict(&self, bu: &Matrix, bs: &Matrix) -> Result<Pencil, HomError> {
        let ctx = self.ctx();
        if bu.cols() == 0 || bs.cols() == 0 {
            return Ok(Pencil::new(Matrix::zeros(ctx, bs.cols(), bu.cols()), Matrix::zeros(ctx, bs.cols(), bu.cols())));
        }
        let a1 = bs.solve(&(&self.a1 * bu)).ok_or_else(|| crate::internal("kronecker", "subpencil not invariant"))?;
        let a2 = bs.solve(&(&self.a2 * bu)).ok_or_else(|| crate::internal("kronecker", "subpencil not invariant"))?;
        Ok(Pencil::new(a1, a2))
    }

    fn generic_rank(&self) -> usize {
        let ctx = self.ctx();
        (0..=(self.u.min(self.v) as i64 + 1))
            .map(|t| (&self.a1 + &self.a2.scale(&ctx.int(t))).rank())
            .max()
            .unwrap_or(0)
    }
}

/// Morphisms `p → q`.
fn pencil_homs(p: &Pencil, q: &Pencil) -> Vec<PencilHom> {
    let ctx = p.ctx();
    let nu = q.u * p.u;
    let nvars = nu + q.v * p.v;
    let mut ech = Echelon::new(ctx, nvars);
    let vu = |a: usize, b: usize| a * p.u + b;
    let vs = |c: usize, d: usize| nu + c * p.v + d;
    for (x, y) in [(&p.a1, &q.a1), (&p.a2, &q.a2)] {
        // (φ_S x)[c][b] - (y φ_U)[c][b] = 0
        for c in 0..q.v {
            for b in 0..p.u {
                let mut row = Vec::new();
                for d in 0..p.v {
                    let e = x.get(d, b);
                    if !e.is_zero() {
                        row.push((vs(c, d), e.clone()));
                    }
                }
                for (a, e) in y.row_entries(c) {
                    row.push((vu(a, b), -e));
                }
                if !row.is_empty() {
                    ech.add_row(row);
                }
            }
        }
    }
    ech.nullspace()
        .into_iter()
        .map(|sol| PencilHom {
            u: Matrix::from_fn(ctx, q.u, p.u, |a, b| sol[vu(a, b)].clone()),
            s: Matrix::from_fn(ctx, q.v, p.v, |c, d| sol[vs(c, d)].clone()),
        })
        .collect()
}

fn hcat_all(ctx: &'static FieldCtx, rows: usize, ms: impl Iterator<Item = Matrix>) -> Matrix {
    ms.fold(Matrix::zeros(ctx, rows, 0), |acc, m| acc.hcat(&m))
}

fn vcat_all(ctx: &'static FieldCtx, cols: usize, ms: impl Iterator<Item = Matrix>) -> Matrix {
    ms.fold(Matrix::zeros(ctx, 0, cols), |acc, m| acc.vcat(&m))
}

fn kernel_of(m: &Matrix, n: usize) -> Matrix {
    if m.rows() == 0 {
        return Matrix::identity(m.ctx(), n);
    }
    m.nullspace()
}

/// Splits every summand isomorphic to `model` out of `p`. Returns the
/// embeddings of the summands and the complement with its bases.
fn split_model(p: &Pencil, model: &Pencil) -> Result<(Vec<PencilHom>, Matrix, Matrix, Pencil), HomError> {
    let ctx = p.ctx();
    let keep = || (Vec::new(), Matrix::identity(ctx, p.u), Matrix::identity(ctx, p.v), p.clone());
    let to = pencil_homs(p, model);
    let from = pencil_homs(model, p);
    if to.is_empty() || from.is_empty() {
        return Ok(keep());
    }
    let g = Matrix::from_fn(ctx, to.len(), from.len(), |i, j| {
        &trace_of_product(&to[i].u, &from[j].u) + &trace_of_product(&to[i].s, &from[j].s)
    });
    let (ri, cj) = invertible_minor(&g);
    if ri.is_empty() {
        return Ok(keep());
    }
    let iota_u = hcat_all(ctx, p.u, cj.iter().map(|&j| from[j].u.clone()));
    let iota_s = hcat_all(ctx, p.v, cj.iter().map(|&j| from[j].s.clone()));
    let pi_u = vcat_all(ctx, p.u, ri.iter().map(|&i| to[i].u.clone()));
    let pi_s = vcat_all(ctx, p.v, ri.iter().map(|&i| to[i].s.clone()));
    let inv = |m: Matrix| -> Result<Matrix, HomError> {
        if m.rows() == 0 {
            return Ok(m);
        }
        m.inverse().map_err(|_| crate::internal("kronecker", "pairing minor does not lift"))
    };
    let rho_u = &inv(&pi_u * &iota_u)? * &pi_u;
    let rho_s = &inv(&pi_s * &iota_s)? * &pi_s;
    let bu = kernel_of(&rho_u, p.u);
    let bs = kernel_of(&rho_s, p.v);
    if bu.cols() + ri.len() * model.u != p.u || bs.cols() + ri.len() * model.v != p.v {
        return Err(crate::internal("kronecker", "complement has the wrong dimension"));
    }
    let rest = p.restrict(&bu, &bs)?;
    Ok((cj.iter().map(|&j| from[j].clone()).collect(), bu, bs, rest))
}

/// Decomposes a pencil into indecomposables.
pub fn kronecker_decompose(p: &Pencil) -> Result<Vec<KronPiece>, HomError> {
    let ctx = p.ctx();
    let mut pieces = Vec::new();
    let mut cur = p.clone();
    let mut base_u = Matrix::identity(ctx, p.u);
    let mut base_s = Matrix::identity(ctx, p.v);
    let r = cur.generic_rank();
    let (mut want_w, mut want_m) = (cur.u - r, cur.v - r);

    let mut take = |cur: &mut Pencil,
                    base_u: &mut Matrix,
                    base_s: &mut Matrix,
                    model: &Pencil,
                    kind: KronType|
     -> Result<usize, HomError> {
        let (embeds, bu, bs, rest) = split_model(cur, model)?;
        let count = embeds.len();
        for e in embeds {
            pieces.push(KronPiece { kind: kind.clone(), top: &*base_u * &e.u, soc: &*base_s * &e.s });
        }
        *base_u = &*base_u * &bu;
        *base_s = &*base_s * &bs;
        *cur = rest;
        Ok(count)
    };

    let mut n = 1;
    while want_w > 0 {
        if n > p.u {
            return Err(crate::internal("kronecker", "W summands not exhausted"));
        }
        want_w -= take(&mut cur, &mut base_u, &mut base_s, &Pencil::model_w(ctx, n), KronType::W(n as u32))?;
        n += 1;
    }
    let mut n = 1;
    while want_m > 0 {
        if n > p.v {
            return Err(crate::internal("kronecker", "M summands not exhausted"));
        }
        want_m -= take(&mut cur, &mut base_u, &mut base_s, &Pencil::model_m(ctx, n), KronType::M(n as u32))?;
        n += 1;
    }
    if cur.u != cur.v {
        return Err(crate::internal("kronecker", "regular part is not square"));
    }
    if cur.u > 0 {
        let t = (0..=(cur.u as i64 + 1))
            .find(|&t| (&cur.a1 + &cur.a2.scale(&ctx.int(t))).is_invertible())
            .ok_or_else(|| crate::internal("kronecker", "regular part has no invertible member"))?;
        let b = &cur.a1 + &cur.a2.scale(&ctx.int(t));
        let op = &b.inverse()? * &cur.a2;
        let mus = roots_in_field(&charpoly(&op))?;
        for mu in mus {
            // A2 v = μ (A1 + t A2) v gives (1 - μt) A2 v = μ A1 v
            let lam = ProjLinePoint::new(&ctx.one() - &mu.scale_int(t), mu.clone())?;
            for n in 1..=cur.u.max(1) {
                if cur.u == 0 {
                    break;
                }
                take(&mut cur, &mut base_u, &mut base_s, &Pencil::model_e(ctx, n, &lam), KronType::E(n as u32, lam.clone()))?;
            }
        }
        if cur.u != 0 {
            return Err(HomError::Unclassified(format!("regular pencil part of size {} left over", cur.u)));
        }
    }
    Ok(pieces)
}
