//! Projective covers and `Ext¹` from the cover presentation.

use cyclo::{Echelon, FieldElem, Matrix};
use repcore::ops::{direct_sum, restrict, weight_adapt};
use repcore::{ModuleLabel, Rep, Subrep};

use crate::catalog::catalog;
use crate::hom::{hom_dim, hom_space, weight_kernel, weighted_rank};
use crate::layers::radical;
use crate::HomError;

/// `0 → Ω → P → Z → 0` with `P` a projective cover.
#[derive(Clone, Debug)]
pub struct Cover {
    pub summands: Vec<ModuleLabel>,
    pub projective: Rep,
    /// `dim Z × dim P`, surjective.
    pub map: Matrix,
    pub kernel: Subrep,
}

fn sparse(v: &[FieldElem]) -> Vec<(usize, FieldElem)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Projective cover. For each simple `S` in the top, homs `P(S) → Z` are
/// chosen greedily from a basis of `Hom(P(S), Z)` so that the images of the
/// generator of `P(S)` are independent modulo `rad Z`. The greedy choice is
/// complete because `Hom(P(S), Z) → Hom(P(S), top Z)` is onto.
pub fn projective_cover(z: &Rep) -> Result<Cover, HomError> {
    let ctx = z.ctx();
    let (z, adapt) = if z.k_diagonal().is_some() {
        (z.clone(), None)
    } else {
        let (a, t) = weight_adapt(z)?;
        (a, Some(t))
    };
    let cat = catalog(ctx)?;
    let rad = radical(&z)?;
    let mut ech = Echelon::new(ctx, z.dim());
    for c in rad.inclusion.columns() {
        ech.add_row(sparse(&c));
    }
    let mut summands = Vec::new();
    let mut parts = Vec::new();
    let mut maps: Vec<Matrix> = Vec::new();
    for proj in &cat.projectives {
        let homs = hom_space(&proj.rep, &z)?;
        for h in homs.basis {
            let img = h.apply(&proj.generator);
            if ech.add_row(sparse(&img)) {
                summands.push(proj.label.clone());
                parts.push(proj.rep.clone());
                maps.push(h);
            }
        }
    }
    let projective = if parts.is_empty() { Rep::zero(ctx, z.algebra()) } else { direct_sum(&parts)? };
    let mut map = Matrix::zeros(ctx, z.dim(), 0);
    for m in &maps {
        map = map.hcat(m);
    }
    let pd = projective.k_diagonal().expect("built projectives have diagonal K");
    let zd = z.k_diagonal().expect("adapted");
    if weighted_rank(&map, &pd, &zd) != z.dim() {
        return Err(crate::internal("projective_cover", "cover map is not surjective"));
    }
    let kb = weight_kernel(&map, &pd);
    let kernel = Subrep { rep: restrict(&projective, &kb)?, inclusion: kb };
    if let Some(t) = adapt {
        map = &t * &map;
    }
    Ok(Cover { summands, projective, map, kernel })
}

/// `dim Ext¹(A, B) = dim Hom(Ω, B) - dim Hom(P, B) + dim Hom(A, B)` for a
/// projective cover `0 → Ω → P → A → 0`.
pub fn ext1(a: &Rep, b: &Rep) -> Result<usize, HomError> {
    let cover = projective_cover(a)?;
    let omega = hom_dim(&cover.kernel.rep, b)?;
    let hp = if cover.projective.dim() == 0 { 0 } else { hom_dim(&cover.projective, b)? };
    let ha = hom_dim(a, b)?;
    (omega + ha).checked_sub(hp).ok_or_else(|| crate::internal("ext1", "negative Euler count"))
}
