//! Decomposition of arbitrary modules into labeled indecomposables.
//!
//! Pipeline: weight-adapt, split into Casimir blocks, split off projective
//! summands, and read the remaining length-2 part of each block as two
//! Kronecker pencils. In block `s` (`1 ≤ s ≤ p-1`) the highest weight
//! vectors of the `X_s^+` factors span `V+` (weight `q^{s-1}`) and those of
//! the `X_{p-s}^-` factors span `V-` (weight `q^{-s-1}`). The maps
//! `F^s, E^{p-s}: V+ → V-` glue tops of type `X_s^+` onto socles of type
//! `X_{p-s}^-`; `F^{p-s}, E^s: V- → V+` glue the other way.

use cyclo::{qfact, FieldCtx, FieldElem, Matrix};
use repcore::ops::{block_decompose, intertwines, submodule_generated, weight_adapt};
use repcore::{build, FormalDecomp, ModuleLabel, Rep, Sign, Subrep};
use serde_json::Value;

use crate::hom::{find_invertible, hom_space, weighted_rank};
use crate::kron::{kronecker_decompose, KronType, Pencil};
use crate::split::split_projectives_in_block;
use crate::{HomError, DEFAULT_SEED};

/// One summand: its label and an injective hom `build(label) → Z`.
#[derive(Clone, Debug)]
pub struct Piece {
    pub label: ModuleLabel,
    pub embedding: Matrix,
}

/// A decomposition whose embeddings have been checked to intertwine and
/// to assemble into an isomorphism `⊕ build(label) → Z`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub decomp: FormalDecomp,
    pub pieces: Vec<Piece>,
}

impl Decomposition {
    /// The isomorphism `⊕ build(label_i) → Z`, pieces in order.
    pub fn witness(&self) -> Matrix {
        let ctx = self.pieces.first().map(|p| p.embedding.ctx());
        match ctx {
            None => Matrix::zeros(FieldCtx::get(self.decomp.p()).expect("valid p"), 0, 0),
            Some(ctx) => {
                let rows = self.pieces[0].embedding.rows();
                self.pieces.iter().fold(Matrix::zeros(ctx, rows, 0), |acc, p| acc.hcat(&p.embedding))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        self.decomp.to_json("isomorphism")
    }
}

fn unit_columns(ctx: &'static FieldCtx, n: usize, idx: &[usize]) -> Matrix {
    Matrix::from_fn(ctx, n, idx.len(), |i, j| if idx[j] == i { ctx.one() } else { ctx.zero() })
}

/// `(-σ)^{p-t-1} ([p-t-1]!)²`: the factor picked up by `E^{p-t}` on the
/// highest weight vector of a glued top `X_t^σ`, relative to the `E`-glue.
fn glue_scale(ctx: &'static FieldCtx, t: u32, sign: Sign) -> FieldElem {
    let k = ctx.p() - t - 1;
    let f = qfact(ctx, k);
    let sg = if sign == Sign::Plus && k % 2 == 1 { -1 } else { 1 };
    (&f * &f).scale_int(sg)
}

/// Finds an isomorphism from `build(label)` onto the submodule of `z`
/// generated by `gens`, returned as a hom into `z`.
fn embed(z: &Rep, label: &ModuleLabel, gens: &[Vec<FieldElem>]) -> Result<Piece, HomError> {
    let ctx = z.ctx();
    let label = label.canonical(ctx.p())?;
    let model = build(ctx, &label)?;
    let sub = submodule_generated(z, gens)?;
    if sub.rep.dim() != model.dim() {
        return Err(crate::internal(
            "decompose",
            format!("summand {label} spans dimension {} instead of {}", sub.rep.dim(), model.dim()),
        ));
    }
    let hom = hom_space(&model, &sub.rep)?;
    let h = find_invertible(&hom, &model, &sub.rep, DEFAULT_SEED)
        .ok_or_else(|| crate::internal("decompose", format!("no isomorphism from {label} onto its summand")))?;
    Ok(Piece { embedding: &sub.inclusion * &h, label })
}

/// The two pencils of a block-`s` module without projective summands.
fn length_two_pieces(c: &Rep, s: u32) -> Result<Vec<Piece>, HomError> {
    let ctx = c.ctx();
    let p = ctx.p();
    let n = c.dim();
    let diag = c.k_diagonal().ok_or(repcore::RepError::NotDiagonalizable)?;
    let wp = ctx.q_power(s as i64 - 1);
    let wm = ctx.q_power(-(s as i64) - 1);
    let vp: Vec<usize> = (0..n).filter(|&i| diag[i] == wp).collect();
    let vm: Vec<usize> = (0..n).filter(|&i| diag[i] == wm).collect();
    let (t, tc) = (s, p - s);
    let fs = c.f().pow(t);
    let ec = c.e().pow(tc);
    let et = c.e().pow(t);
    let fc = c.f().pow(tc);
    // V+ → V-
    let a1 = fs.select(&vm, &vp);
    let a2 = ec.select(&vm, &vp);
    // V- → V+
    let b1 = fc.select(&vp, &vm);
    let b2 = et.select(&vp, &vm);

    let span = |x: &Matrix, y: &Matrix, rows: usize| {
        let m = x.hcat(y);
        if m.cols() == 0 { Matrix::zeros(ctx, rows, 0) } else { m.column_basis() }
    };
    let soc_p = span(&b1, &b2, vp.len());
    let soc_m = span(&a1, &a2, vm.len());
    let complement = |soc: &Matrix, len: usize| {
        let piv = if soc.cols() == 0 { Vec::new() } else { soc.echelon_pivot_rows() };
        let idx: Vec<usize> = (0..len).filter(|i| !piv.contains(i)).collect();
        unit_columns(ctx, len, &idx)
    };
    let top_p = complement(&soc_p, vp.len());
    let top_m = complement(&soc_m, vm.len());

    let mut pieces = Vec::new();
    // (sign of the tops, top type, top coords, socle coords, A1, A2 on V-rows)
    let sides = [
        (Sign::Plus, t, &vp, &vm, &top_p, &soc_m, &a1, &a2),
        (Sign::Minus, tc, &vm, &vp, &top_m, &soc_p, &b1, &b2),
    ];
    for (sign, st, top_idx, soc_idx, top_b, soc_b, g1, g2) in sides {
        let pencil = if top_b.cols() == 0 || soc_b.cols() == 0 {
            Pencil::new(Matrix::zeros(ctx, soc_b.cols(), top_b.cols()), Matrix::zeros(ctx, soc_b.cols(), top_b.cols()))
        } else {
            let solve = |g: &Matrix| {
                soc_b.solve(&(g * top_b)).ok_or_else(|| crate::internal("decompose", "gluing leaves the socle span"))
            };
            let scale = glue_scale(ctx, st, sign).inv()?;
            Pencil::new(solve(g1)?, solve(g2)?.scale(&scale))
        };
        for kp in kronecker_decompose(&pencil)? {
            let label = match kp.kind {
                KronType::W(m) => ModuleLabel::w(sign, st, m),
                KronType::M(m) => ModuleLabel::m(sign, st, m),
                KronType::E(m, lam) => ModuleLabel::e(sign, st, m, lam),
            };
            let lift = |idx: &[usize], basis: &Matrix, coords: &Matrix| -> Vec<Vec<FieldElem>> {
                (basis * coords)
                    .columns()
                    .into_iter()
                    .map(|col| {
                        let mut v = vec![ctx.zero(); n];
                        for (k, &i) in idx.iter().enumerate() {
                            v[i] = col[k].clone();
                        }
                        v
                    })
                    .collect()
            };
            let mut gens = lift(top_idx, top_b, &kp.top);
            gens.extend(lift(soc_idx, soc_b, &kp.soc));
            pieces.push(embed(c, &label, &gens)?);
        }
    }
    Ok(pieces)
}

fn block_pieces(block: u32, sub: &Subrep) -> Result<Vec<Piece>, HomError> {
    let z = &sub.rep;
    let ctx = z.ctx();
    let p = ctx.p();
    let n = z.dim();
    let mut local = Vec::new();
    if block == 0 || block == p {
        // semisimple: every highest weight coordinate generates a Steinberg copy
        let sign = if block == p { Sign::Plus } else { Sign::Minus };
        let hw = if block == p { ctx.q_power(p as i64 - 1) } else { ctx.q_power(-1) };
        let diag = z.k_diagonal().ok_or(repcore::RepError::NotDiagonalizable)?;
        let label = ModuleLabel::x(sign, p);
        for i in (0..n).filter(|&i| diag[i] == hw) {
            let mut v = vec![ctx.zero(); n];
            v[i] = ctx.one();
            local.push(embed(z, &label, &[v])?);
        }
    } else {
        let split = split_projectives_in_block(z, Some(block))?;
        for (label, e) in split.projectives {
            local.push(Piece { label, embedding: e });
        }
        let comp = &split.complement;
        for piece in length_two_pieces(&comp.rep, block)? {
            local.push(Piece { embedding: &comp.inclusion * &piece.embedding, label: piece.label });
        }
    }
    Ok(local.into_iter().map(|pc| Piece { embedding: &sub.inclusion * &pc.embedding, label: pc.label }).collect())
}

/// Decomposes `z` with embeddings of every summand. The result is checked:
/// each embedding intertwines and together they give a bijection.
pub fn decompose_full(z: &Rep) -> Result<Decomposition, HomError> {
    let ctx = z.ctx();
    let p = ctx.p();
    if z.algebra() != repcore::Algebra::U {
        return Err(repcore::RepError::Mismatch("decompose expects a Ū-Rep".into()).into());
    }
    let (za, adapt) = weight_adapt(z)?;
    let mut pieces = Vec::new();
    for (b, sub) in block_decompose(&za)? {
        pieces.extend(block_pieces(b, &sub)?);
    }
    // certificate, in the weight-adapted coordinates
    let mut src_diag = Vec::new();
    let mut witness = Matrix::zeros(ctx, za.dim(), 0);
    for pc in &pieces {
        let model = build(ctx, &pc.label)?;
        if !intertwines(&model, &za, &pc.embedding) {
            return Err(crate::internal("certificate", format!("embedding of {} does not intertwine", pc.label)));
        }
        src_diag.extend(model.k_diagonal().expect("built modules have diagonal K"));
        witness = witness.hcat(&pc.embedding);
    }
    let za_diag = za.k_diagonal().expect("weight-adapted");
    if witness.cols() != za.dim() || weighted_rank(&witness, &src_diag, &za_diag) != za.dim() {
        return Err(crate::internal("certificate", "summand embeddings do not give an isomorphism"));
    }
    let mut decomp = FormalDecomp::new(p);
    for pc in &mut pieces {
        decomp.add(&pc.label, 1)?;
        pc.embedding = &adapt * &pc.embedding;
    }
    Ok(Decomposition { decomp, pieces })
}

pub fn decompose(z: &Rep) -> Result<FormalDecomp, HomError> {
    Ok(decompose_full(z)?.decomp)
}

/// Label of an indecomposable module.
pub fn identify(z: &Rep) -> Result<ModuleLabel, HomError> {
    let d = decompose(z)?;
    match d.summands() {
        [(label, 1)] => Ok(label.clone()),
        _ => Err(HomError::Unclassified(format!("module is not indecomposable: {d}"))),
    }
}
