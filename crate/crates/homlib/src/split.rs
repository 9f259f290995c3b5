//! Splitting off summands with local endomorphism rings by the trace
//! pairing `Hom(Z, M) × Hom(M, Z) → k`, `(f, g) ↦ tr(f∘g) / dim M`.
//!
//! For `M` with local `End(M)` the radical of `End(M)` is nilpotent, so the
//! pairing reads off the scalar part of `f∘g`, and its rank is the
//! multiplicity of `M` as a direct summand of `Z`.

use cyclo::{FieldElem, Matrix};
use repcore::ops::restrict;
use repcore::{ModuleLabel, Rep, Subrep};

use crate::catalog::catalog;
use crate::hom::{hom_space, weight_kernel};
use crate::HomError;

/// `tr(f g)` without forming the product.
pub(crate) fn trace_of_product(f: &Matrix, g: &Matrix) -> FieldElem {
    let ctx = f.ctx();
    let mut acc = ctx.zero();
    for i in 0..f.rows() {
        for (k, x) in f.row_entries(i) {
            let y = g.get(k, i);
            if !y.is_zero() {
                acc += &(x * y);
            }
        }
    }
    acc
}

/// Indices `(I, J)` with `G[I][J]` invertible and `|I| = rank G`.
pub(crate) fn invertible_minor(g: &Matrix) -> (Vec<usize>, Vec<usize>) {
    let rows = g.echelon_pivot_rows();
    let sub = g.select(&rows, &(0..g.cols()).collect::<Vec<_>>());
    let cols = sub.transpose().echelon_pivot_rows();
    (rows, cols)
}

/// Splits every summand isomorphic to `model` (which must have local
/// endomorphism ring) out of `z`. Returns injective homs `model → z`, one per
/// summand, and the complement as a submodule of `z` with a weight basis.
pub fn split_local_summands(z: &Rep, model: &Rep) -> Result<(Vec<Matrix>, Subrep), HomError> {
    let ctx = z.ctx();
    let diag = z.k_diagonal().ok_or(repcore::RepError::NotDiagonalizable)?;
    let whole = || Subrep { rep: z.clone(), inclusion: Matrix::identity(ctx, z.dim()) };
    let to = hom_space(z, model)?.basis;
    if to.is_empty() {
        return Ok((Vec::new(), whole()));
    }
    let from = hom_space(model, z)?.basis;
    if from.is_empty() {
        return Ok((Vec::new(), whole()));
    }
    let g = Matrix::from_fn(ctx, to.len(), from.len(), |i, j| trace_of_product(&to[i], &from[j]));
    let (ri, cj) = invertible_minor(&g);
    if ri.is_empty() {
        return Ok((Vec::new(), whole()));
    }
    let m = model.dim();
    let mut iota = Matrix::zeros(ctx, z.dim(), 0);
    for &j in &cj {
        iota = iota.hcat(&from[j]);
    }
    let mut pi = Matrix::zeros(ctx, 0, z.dim());
    for &i in &ri {
        pi = pi.vcat(&to[i]);
    }
    let comp = &pi * &iota;
    let comp_inv = comp.inverse().map_err(|_| crate::internal("split", "pairing minor does not lift to an isomorphism"))?;
    let retraction = &comp_inv * &pi;
    let kb = weight_kernel(&retraction, &diag);
    if kb.cols() + ri.len() * m != z.dim() {
        return Err(crate::internal("split", "complement has the wrong dimension"));
    }
    let rep = restrict(z, &kb)?;
    let embeds = cj.iter().map(|&j| from[j].clone()).collect();
    Ok((embeds, Subrep { rep, inclusion: kb }))
}

/// Projective summands of `z` and their complement.
#[derive(Clone, Debug)]
pub struct ProjSplit {
    /// Each summand with an injective hom from the built projective into `z`.
    pub projectives: Vec<(ModuleLabel, Matrix)>,
    pub complement: Subrep,
}

/// Splits off all projective summands (including Steinberg modules), one
/// isomorphism type at a time. `z` must have diagonal `K`.
pub fn split_projective_summands(z: &Rep) -> Result<ProjSplit, HomError> {
    split_projectives_in_block(z, None)
}

/// As [`split_projective_summands`], trying only the projectives of `block`
/// when one is given.
pub(crate) fn split_projectives_in_block(z: &Rep, block: Option<u32>) -> Result<ProjSplit, HomError> {
    let ctx = z.ctx();
    let cat = catalog(ctx)?;
    let mut cur = Subrep { rep: z.clone(), inclusion: Matrix::identity(ctx, z.dim()) };
    let mut projectives = Vec::new();
    for proj in &cat.projectives {
        if block.is_some_and(|b| proj.label.block(ctx.p()) != b) {
            continue;
        }
        if cur.rep.dim() == 0 {
            break;
        }
        let (embeds, comp) = split_local_summands(&cur.rep, &proj.rep)?;
        for e in embeds {
            projectives.push((proj.label.clone(), &cur.inclusion * &e));
        }
        cur = Subrep { inclusion: &cur.inclusion * &comp.inclusion, rep: comp.rep };
    }
    Ok(ProjSplit { projectives, complement: cur })
}
