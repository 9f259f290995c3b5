//! Socle, radical, top and the radical series, all computed from Homs to and
//! from the `2p` simple modules.

use cyclo::Matrix;
use repcore::ops::{quotient, restrict, submodule_generated, weight_adapt};
use repcore::{FormalDecomp, Rep, Subrep};

use crate::catalog::catalog;
use crate::hom::{hom_space, weight_kernel};
use crate::HomError;

/// A semisimple layer: the submodule or quotient together with its
/// multiplicities over the simples.
#[derive(Clone, Debug)]
pub struct Layer {
    pub rep: Rep,
    pub mults: FormalDecomp,
}

fn adapted(z: &Rep) -> Result<Rep, HomError> {
    Ok(if z.k_diagonal().is_some() { z.clone() } else { weight_adapt(z)?.0 })
}

/// Sum of the images of all homs from simples; the multiplicity of `S` is
/// `dim Hom(S, Z)`.
pub fn socle(z: &Rep) -> Result<(Subrep, FormalDecomp), HomError> {
    let cat = catalog(z.ctx())?;
    let mut mults = FormalDecomp::new(z.p());
    let mut gens = Vec::new();
    for (label, s) in &cat.simples {
        let h = hom_space(s, z)?;
        mults.add(label, h.dim())?;
        gens.extend(h.basis.iter().map(|t| t.column(0)));
    }
    Ok((submodule_generated(z, &gens)?, mults))
}

/// Intersection of the kernels of all homs `Z → S`, as a submodule with a
/// weight basis. `z` must have diagonal `K`.
pub fn radical(z: &Rep) -> Result<Subrep, HomError> {
    let ctx = z.ctx();
    let diag = z.k_diagonal().ok_or(repcore::RepError::NotDiagonalizable)?;
    let cat = catalog(ctx)?;
    let mut stacked = Matrix::zeros(ctx, 0, z.dim());
    for (_, s) in &cat.simples {
        for t in hom_space(z, s)?.basis {
            stacked = stacked.vcat(&t);
        }
    }
    let basis = weight_kernel(&stacked, &diag);
    let rep = restrict(z, &basis)?;
    Ok(Subrep { rep, inclusion: basis })
}

/// `Z / rad Z`; the multiplicity of `S` is `dim Hom(Z, S)`.
pub fn top(z: &Rep) -> Result<Layer, HomError> {
    let z = adapted(z)?;
    let rad = radical(&z)?;
    let (rep, _) = quotient(&z, &rad.inclusion)?;
    Ok(Layer { mults: layer_mults(&rep)?, rep })
}

fn layer_mults(semisimple: &Rep) -> Result<FormalDecomp, HomError> {
    let cat = catalog(semisimple.ctx())?;
    let mut mults = FormalDecomp::new(semisimple.p());
    for (label, s) in &cat.simples {
        mults.add(label, hom_space(s, semisimple)?.dim())?;
    }
    Ok(mults)
}

/// Multiplicities of the layers `rad^i Z / rad^{i+1} Z`, top first.
pub fn radical_layers(z: &Rep) -> Result<Vec<FormalDecomp>, HomError> {
    let mut cur = adapted(z)?;
    let mut out = Vec::new();
    while cur.dim() > 0 {
        let rad = radical(&cur)?;
        if rad.rep.dim() == cur.dim() {
            return Err(crate::internal("radical_layers", "radical did not shrink"));
        }
        let (q, _) = quotient(&cur, &rad.inclusion)?;
        out.push(layer_mults(&q)?);
        cur = rad.rep;
    }
    Ok(out)
}

pub fn semisimple_length(z: &Rep) -> Result<usize, HomError> {
    Ok(radical_layers(z)?.len())
}

pub fn composition_factors(z: &Rep) -> Result<FormalDecomp, HomError> {
    let mut total = FormalDecomp::new(z.p());
    for layer in radical_layers(z)? {
        total.merge(&layer)?;
    }
    Ok(total)
}
