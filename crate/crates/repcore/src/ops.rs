//! Operations on Reps: tensor products, duals, sums, submodules, quotients,
//! weight spaces and the block splitting by the Casimir element.

use std::collections::BTreeMap;

use cyclo::{Echelon, FieldCtx, FieldElem, Matrix};

use crate::rep::{Algebra, Rep};
use crate::RepError;

fn same_kind(a: &Rep, b: &Rep) -> Result<(), RepError> {
    if a.algebra() != b.algebra() {
        return Err(RepError::Mismatch(format!("{:?} vs {:?}", a.algebra(), b.algebra())));
    }
    if !std::ptr::eq(a.ctx(), b.ctx()) {
        return Err(RepError::Mismatch(format!("p={} vs p={}", a.p(), b.p())));
    }
    Ok(())
}

/// `A ⊗ B` through the coproduct: `E ↦ E⊗K + 1⊗E`, `F ↦ F⊗1 + K⁻¹⊗F`,
/// `K ↦ K⊗K`. On `D̄` the same with `t²` in place of `K` in the `e, f`
/// formulas and `t ↦ t⊗t`. Basis `a_i ⊗ b_k` sits at `i·dim B + k`.
pub fn tensor(a: &Rep, b: &Rep) -> Result<Rep, RepError> {
    same_kind(a, b)?;
    let ctx = a.ctx();
    let ia = Matrix::identity(ctx, a.dim());
    let ib = Matrix::identity(ctx, b.dim());
    let kb = b.cartan_u();
    let kai = match a.algebra() {
        Algebra::U => a.kinv().clone(),
        Algebra::D => a.kinv() * a.kinv(),
    };
    let e = &a.e().kron(&kb) + &ia.kron(b.e());
    let f = &a.f().kron(&ib) + &kai.kron(b.f());
    let k = a.k().kron(b.k());
    let kinv = a.kinv().kron(b.kinv());
    Rep::with_inverse(a.algebra(), e, f, k, kinv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualSide {
    /// Action through the antipode `S`.
    Right,
    /// Action through `S⁻¹`.
    Left,
}

/// Dual module: `a` acts by the transpose of `ρ(S(a))` (right) or
/// `ρ(S⁻¹(a))` (left), with `S(E) = -EK⁻¹`, `S(F) = -KF`, `S(K) = K⁻¹`,
/// `S⁻¹(E) = -K⁻¹E`, `S⁻¹(F) = -FK`.
pub fn dual(z: &Rep, side: DualSide) -> Result<Rep, RepError> {
    let (ku, kui) = match z.algebra() {
        Algebra::U => (z.k().clone(), z.kinv().clone()),
        Algebra::D => (z.k() * z.k(), z.kinv() * z.kinv()),
    };
    let (se, sf) = match side {
        DualSide::Right => (-&(z.e() * &kui), -&(&ku * z.f())),
        DualSide::Left => (-&(&kui * z.e()), -&(z.f() * &ku)),
    };
    Rep::with_inverse(z.algebra(), se.transpose(), sf.transpose(), z.kinv().transpose(), z.k().transpose())
}

pub fn direct_sum(parts: &[Rep]) -> Result<Rep, RepError> {
    let first = parts.first().ok_or_else(|| RepError::InvalidParam("direct sum of no modules".into()))?;
    for r in parts {
        same_kind(first, r)?;
    }
    let ctx = first.ctx();
    let gens: Vec<Matrix> = (0..4)
        .map(|g| Matrix::block_diag(ctx, &parts.iter().map(|r| r.generators()[g].clone()).collect::<Vec<_>>()))
        .collect();
    let [e, f, k, kinv]: [Matrix; 4] = gens.try_into().expect("four generators");
    Rep::with_inverse(first.algebra(), e, f, k, kinv)
}

/// `X_1^- ⊗ Z` on the same basis: `E ↦ E`, `F ↦ -F`, `K ↦ -K`.
pub fn sign_twist(z: &Rep) -> Result<Rep, RepError> {
    if z.algebra() != Algebra::U {
        return Err(RepError::Mismatch("sign twist is defined on Ū-Reps".into()));
    }
    Rep::with_inverse(Algebra::U, z.e().clone(), -z.f(), -z.k(), -z.kinv())
}

/// A submodule with its inclusion; the columns of `inclusion` are the chosen
/// basis in the coordinates of the ambient module.
#[derive(Clone, Debug)]
pub struct Subrep {
    pub rep: Rep,
    pub inclusion: Matrix,
}

/// Action on the subspace spanned by the columns of `basis` (assumed
/// independent). Fails if the span is not invariant.
pub fn restrict(z: &Rep, basis: &Matrix) -> Result<Rep, RepError> {
    let ctx = z.ctx();
    if basis.cols() == 0 {
        return Ok(Rep::zero(ctx, z.algebra()));
    }
    let names = z.algebra().generator_names();
    let mut out = Vec::with_capacity(4);
    for (g, name) in z.generators().into_iter().zip(names) {
        let img = g * basis;
        let x = basis.solve(&img).ok_or_else(|| RepError::NotInvariant(name.to_string()))?;
        out.push(x);
    }
    let [e, f, k, kinv]: [Matrix; 4] = out.try_into().expect("four generators");
    Rep::with_inverse(z.algebra(), e, f, k, kinv)
}

fn sparse(v: &[FieldElem]) -> Vec<(usize, FieldElem)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Closure of the span of `vectors` under all four generators.
pub fn submodule_generated(z: &Rep, vectors: &[Vec<FieldElem>]) -> Result<Subrep, RepError> {
    let ctx = z.ctx();
    let n = z.dim();
    let mut ech = Echelon::new(ctx, n);
    let mut basis: Vec<Vec<FieldElem>> = Vec::new();
    let mut queue: Vec<Vec<FieldElem>> = Vec::new();
    for v in vectors {
        if v.len() != n {
            return Err(RepError::InvalidParam(format!("vector of length {} in a module of dim {n}", v.len())));
        }
        if ech.add_row(sparse(v)) {
            basis.push(v.clone());
            queue.push(v.clone());
        }
    }
    let diag_k = z.k_diagonal().is_some();
    while let Some(v) = queue.pop() {
        let gens: &[&Matrix] = if diag_k && is_weight_vector(z, &v) {
            &[z.e(), z.f()]
        } else {
            &[z.e(), z.f(), z.k(), z.kinv()]
        };
        for g in gens {
            let w = g.apply(&v);
            if ech.add_row(sparse(&w)) {
                basis.push(w.clone());
                queue.push(w);
            }
        }
    }
    let inclusion = Matrix::from_columns(ctx, n, &basis);
    let rep = restrict(z, &inclusion)?;
    Ok(Subrep { rep, inclusion })
}

fn is_weight_vector(z: &Rep, v: &[FieldElem]) -> bool {
    let mut val: Option<&FieldElem> = None;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let kii = z.k().get(i, i);
        match val {
            None => val = Some(kii),
            Some(w) if w == kii => {}
            Some(_) => return false,
        }
    }
    true
}

/// `Z / S` where the columns of `sub_basis` span a submodule `S`. Returns
/// the quotient and the projection matrix (`dim Z/S × dim Z`).
///
/// The quotient basis is the images of the standard basis vectors not
/// among the pivots of `S`, so a diagonal `K` stays diagonal whenever `S`
/// is spanned by weight vectors.
pub fn quotient(z: &Rep, sub_basis: &Matrix) -> Result<(Rep, Matrix), RepError> {
    let ctx = z.ctx();
    let n = z.dim();
    let mut ech = Echelon::new(ctx, n);
    for c in sub_basis.columns() {
        ech.add_row(sparse(&c));
    }
    let pivots: Vec<usize> = ech.rows().map(|(p, _)| *p).collect();
    let comp: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    // full basis [S | e_comp]
    let sb = sub_basis.column_basis();
    let r = sb.cols();
    let full = sb.hcat(&Matrix::from_fn(ctx, n, comp.len(), |i, j| if i == comp[j] { ctx.one() } else { ctx.zero() }));
    let inv = full.inverse()?;
    let rows: Vec<usize> = (r..n).collect();
    let proj = inv.select(&rows, &(0..n).collect::<Vec<_>>());
    let lift = full.select(&(0..n).collect::<Vec<_>>(), &rows);
    let mut gens = Vec::with_capacity(4);
    for g in z.generators() {
        gens.push(&(&proj * g) * &lift);
    }
    let [e, f, k, kinv]: [Matrix; 4] = gens.try_into().expect("four generators");
    if !(&(&proj * z.e()) * &sb).is_zero() || !(&(&proj * z.f()) * &sb).is_zero() {
        return Err(RepError::NotInvariant("E or F".into()));
    }
    Ok((Rep::with_inverse(z.algebra(), e, f, k, kinv)?, proj))
}

/// Eigenspaces of `K` (or `t` on a `D̄`-Rep) as bases in columns, keyed by
/// eigenvalue and ordered by `ζ`-exponent. Fails if `K` is not
/// diagonalizable.
pub fn weight_spaces(z: &Rep) -> Result<Vec<(FieldElem, Matrix)>, RepError> {
    let ctx = z.ctx();
    let n = z.dim();
    let mut out = Vec::new();
    if let Some(diag) = z.k_diagonal() {
        let mut groups: BTreeMap<u32, (FieldElem, Vec<usize>)> = BTreeMap::new();
        for (i, w) in diag.into_iter().enumerate() {
            let key = w.zeta_log().ok_or(RepError::NotDiagonalizable)?;
            groups.entry(key).or_insert_with(|| (w, Vec::new())).1.push(i);
        }
        for (_, (w, idx)) in groups {
            let m = Matrix::from_fn(ctx, n, idx.len(), |i, j| if i == idx[j] { ctx.one() } else { ctx.zero() });
            out.push((w, m));
        }
        return Ok(out);
    }
    let mut total = 0;
    for j in 0..ctx.root_order() {
        let w = ctx.zeta_power(j as i64);
        let ker = (z.k() - &Matrix::scalar(ctx, n, &w)).nullspace();
        if ker.cols() > 0 {
            total += ker.cols();
            out.push((w, ker));
        }
    }
    if total != n {
        return Err(RepError::NotDiagonalizable);
    }
    Ok(out)
}

/// Change of basis to a weight basis: returns `(Z', T)` with `Z'` having
/// diagonal `K` and `T` mapping `Z'`-coordinates to `Z`-coordinates.
pub fn weight_adapt(z: &Rep) -> Result<(Rep, Matrix), RepError> {
    let ctx = z.ctx();
    if z.k_diagonal().is_some() {
        return Ok((z.clone(), Matrix::identity(ctx, z.dim())));
    }
    let spaces = weight_spaces(z)?;
    let mut cols = Vec::new();
    for (_, m) in &spaces {
        cols.extend(m.columns());
    }
    let t = Matrix::from_columns(ctx, z.dim(), &cols);
    Ok((restrict(z, &t)?, t))
}

/// Whether `t` (`dim dst × dim src`) intertwines the actions of
/// `E, F, K`.
pub fn intertwines(src: &Rep, dst: &Rep, t: &Matrix) -> bool {
    if t.rows() != dst.dim() || t.cols() != src.dim() {
        return false;
    }
    (0..3).all(|g| &(dst.generators()[g] * t) == &(t * src.generators()[g]))
}

/// `C = EF + (q⁻¹K + qK⁻¹)/(q - q⁻¹)²`, computed on the restriction to `Ū`.
pub fn casimir_action(z: &Rep) -> Result<Matrix, RepError> {
    let u = z.restrict_to_u();
    let ctx = u.ctx();
    let q = ctx.q();
    let qi = q.inv()?;
    let d = &q - &qi;
    let den = (&d * &d).inv()?;
    let lin = &u.k().scale(&qi) + &u.kinv().scale(&q);
    Ok(&(u.e() * u.f()) + &lin.scale(&den))
}

/// `c_b = (q^b + q^{-b})/(q - q⁻¹)²`, the Casimir eigenvalue on block `b`
/// (the block of `X_b^+` and `X_{p-b}^-`). Distinct for `b = 0..=p`.
pub fn block_eigenvalue(ctx: &'static FieldCtx, b: u32) -> FieldElem {
    let q = ctx.q();
    let d = &q - &q.inv().expect("q is a unit");
    let num = &ctx.q_power(b as i64) + &ctx.q_power(-(b as i64));
    num.div(&(&d * &d)).expect("q - q^-1 is nonzero")
}

/// Splits `Z` into generalized Casimir eigenspaces. Each returned basis
/// consists of weight vectors, so the pieces keep a diagonal `K`. Requires
/// a diagonal `K`; use [`weight_adapt`] first otherwise.
pub fn block_decompose(z: &Rep) -> Result<Vec<(u32, Subrep)>, RepError> {
    let ctx = z.ctx();
    let p = ctx.p();
    let n = z.dim();
    if z.algebra() != Algebra::U {
        return Err(RepError::Mismatch("block_decompose expects a Ū-Rep".into()));
    }
    let c = casimir_action(z)?;
    for g in [z.e(), z.f(), z.k()] {
        if &(&c * g) != &(g * &c) {
            return Err(RepError::Internal("Casimir element fails to commute".into()));
        }
    }
    let spaces = weight_spaces(z)?;
    let evs: Vec<FieldElem> = (0..=p).map(|b| block_eigenvalue(ctx, b)).collect();
    let mut per_block: Vec<Vec<Vec<FieldElem>>> = vec![Vec::new(); p as usize + 1];
    for (_, basis) in &spaces {
        // C preserves each weight space; work in its coordinates
        let cw = basis.solve(&(&c * basis)).ok_or_else(|| RepError::Internal("C leaves a weight space".into()))?;
        let d = cw.rows();
        let mut found = 0;
        for (b, ev) in evs.iter().enumerate() {
            let shifted = &cw - &Matrix::scalar(ctx, d, ev);
            let mut pw = shifted.clone();
            let mut ker = pw.nullspace();
            if ker.cols() == 0 {
                continue;
            }
            loop {
                pw = &pw * &shifted;
                let next = pw.nullspace();
                if next.cols() == ker.cols() {
                    break;
                }
                ker = next;
            }
            found += ker.cols();
            let emb = basis * &ker;
            per_block[b].extend(emb.columns());
        }
        if found != d {
            return Err(RepError::Internal("Casimir eigenvalue outside the known block values".into()));
        }
    }
    let mut out = Vec::new();
    for (b, cols) in per_block.into_iter().enumerate() {
        if cols.is_empty() {
            continue;
        }
        let inclusion = Matrix::from_columns(ctx, n, &cols);
        let rep = restrict(z, &inclusion)?;
        out.push((b as u32, Subrep { rep, inclusion }));
    }
    Ok(out)
}

/// `T⁻¹ ρ T` for an invertible `t`.
pub fn conjugate(z: &Rep, t: &Matrix) -> Result<Rep, RepError> {
    restrict(z, t)
}
