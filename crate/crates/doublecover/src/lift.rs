//! Lifting `Ū`-modules to `D̄`.
//!
//! A lift is a `t` with `t² = K`, `t E t⁻¹ = qE`, `t F t⁻¹ = q⁻¹F`. Such a `t`
//! commutes with `K`, so on the `K = ζ^{2c}` weight space it is `ζ^c S` with
//! `S² = 1`. The conditions on `S` are linear,
//! `S E = ε E S` and `S F = ε' F S` with signs `ε, ε'` fixed by the weights.
//!
//! The search first tries `S` diagonal with entries `±1`, propagating signs
//! along the nonzero entries of `E` and `F`. When that fails, the linear
//! solutions `L` are computed. For an indecomposable module, `L·L` lies in
//! the local ring `End(Z)`, so `tr(S²)/dim` is the scalar part of `S²`. If
//! some lift `S₀` exists, every invertible `S ∈ L` is `S₀c` and has that
//! scalar equal to a square. An invertible `S` then gives the involution
//! `S·(S²)^{-1/2}` after rescaling.

use std::collections::{BTreeMap, VecDeque};

use cyclo::{Echelon, FieldCtx, FieldElem, Matrix};
use homlib::roots::roots_in_field;
use homlib::{decompose_full, HomError};
use repcore::ops::weight_adapt;
use repcore::{build, Algebra, Rep};

use crate::DoubleError;

#[derive(Clone, Debug)]
pub enum Obstruction {
    /// Weight spaces are lines, so `S` is diagonal, and these sign equations
    /// along `E`/`F` entries close up with product `-1`.
    SignCycle(Vec<String>),
    /// The linear conditions on `S` have only the zero solution; the sign
    /// equations show where the diagonal attempt broke.
    NoSolution(Vec<String>),
    /// The trace form `tr(S S')` vanishes on the solution space, so no
    /// solution is invertible.
    Degenerate,
    /// An invertible solution has `S²` with scalar part outside the squares.
    NonSquare(FieldElem),
}

impl Obstruction {
    pub fn equations(&self) -> Vec<String> {
        match self {
            Obstruction::SignCycle(eqs) => eqs.clone(),
            Obstruction::NoSolution(eqs) => {
                let mut out = vec!["linear conditions on S have only the zero solution".to_string()];
                out.extend(eqs.iter().cloned());
                out
            }
            Obstruction::Degenerate => vec!["tr(S S') = 0 on all solutions S, S'".into()],
            Obstruction::NonSquare(x) => vec![format!("scalar part of S^2 is {x}, not a square")],
        }
    }
}

#[derive(Clone, Debug)]
pub enum LiftOutcome {
    /// The `D̄`-module with the same `e, f` and the lifted `t`.
    Lifted(Rep),
    NotLiftable(Obstruction),
    /// A decomposable module with a summand that does not lift on its own.
    Undetermined(String),
}

impl LiftOutcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            LiftOutcome::Lifted(_) => "liftable",
            LiftOutcome::NotLiftable(_) => "not-liftable",
            LiftOutcome::Undetermined(_) => "undetermined",
        }
    }
}

/// Weight data of a module with diagonal `K`: `c_i` with `K_ii = ζ^{2c_i}`.
struct Weights {
    half: Vec<i64>,
}

impl Weights {
    fn new(z: &Rep) -> Result<Weights, DoubleError> {
        let diag = z.k_diagonal().ok_or_else(|| DoubleError::Internal("K not diagonal".into()))?;
        let half = diag
            .iter()
            .map(|x| match x.zeta_log() {
                Some(k) if k % 2 == 0 => Ok(k as i64 / 2),
                _ => Err(DoubleError::InvalidParam(format!("K eigenvalue {x} is not a power of q"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Weights { half })
    }

    /// `ε` with `S_i X_ij = ε X_ij S_j`, where `t X t⁻¹ = ζ^{shift} X`.
    fn sign(&self, ctx: &'static FieldCtx, shift: i64, i: usize, j: usize) -> Result<bool, DoubleError> {
        let eps = ctx.zeta_power(shift + self.half[j] - self.half[i]);
        if eps.is_one() {
            Ok(false)
        } else if (-&eps).is_one() {
            Ok(true)
        } else {
            Err(DoubleError::Internal(format!("entry ({i},{j}) joins weights not differing by q^±2")))
        }
    }

    fn same(&self, i: usize, j: usize, p: u32) -> bool {
        (self.half[i] - self.half[j]).rem_euclid(2 * p as i64) == 0
    }

    fn t_diag(&self, ctx: &'static FieldCtx) -> Vec<FieldElem> {
        self.half.iter().map(|&c| ctx.zeta_power(c)).collect()
    }
}

fn generators(z: &Rep) -> [(&'static str, &Matrix, i64); 2] {
    [("E", z.e(), 2), ("F", z.f(), -2)]
}

/// Diagonal `±1` solution, or the sign equations of an inconsistent cycle.
fn diagonal_signs(z: &Rep, w: &Weights) -> Result<Result<Vec<bool>, Vec<String>>, DoubleError> {
    let ctx = z.ctx();
    let d = z.dim();
    // adjacency: (neighbour, negative, text)
    let mut adj: Vec<Vec<(usize, bool, String)>> = vec![Vec::new(); d];
    for (name, x, shift) in generators(z) {
        for i in 0..d {
            for (j, _) in x.row_entries(i) {
                let neg = w.sign(ctx, shift, i, j)?;
                let text = format!("S[{i}] = {}S[{j}] ({name})", if neg { "-" } else { "" });
                adj[i].push((j, neg, text.clone()));
                adj[j].push((i, neg, text));
            }
        }
    }
    let mut sign: Vec<Option<bool>> = vec![None; d];
    let mut parent: Vec<Option<(usize, String)>> = vec![None; d];
    let path = |parent: &Vec<Option<(usize, String)>>, mut v: usize| {
        let mut out = Vec::new();
        while let Some((u, t)) = &parent[v] {
            out.push(t.clone());
            v = *u;
        }
        out
    };
    for root in 0..d {
        if sign[root].is_some() {
            continue;
        }
        sign[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = sign[u].expect("visited");
            for (v, neg, text) in &adj[u] {
                let want = su ^ neg;
                match sign[*v] {
                    None => {
                        sign[*v] = Some(want);
                        parent[*v] = Some((u, text.clone()));
                        queue.push_back(*v);
                    }
                    Some(have) if have != want => {
                        let mut eqs = path(&parent, u);
                        eqs.reverse();
                        eqs.push(text.clone());
                        eqs.extend(path(&parent, *v));
                        eqs.dedup();
                        return Ok(Err(eqs));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Ok(sign.into_iter().map(|s| s.expect("all visited")).collect()))
}

/// Basis of the weight-preserving `S` with `S X = ε X S` for `X = E, F`.
fn solution_space(z: &Rep, w: &Weights) -> Result<Vec<Matrix>, DoubleError> {
    let ctx = z.ctx();
    let p = ctx.p();
    let d = z.dim();
    let mut var = vec![vec![None; d]; d];
    let mut pairs = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if w.same(i, j, p) {
                var[i][j] = Some(pairs.len());
                pairs.push((i, j));
            }
        }
    }
    let mut ech = Echelon::new(ctx, pairs.len());
    for (_, x, shift) in generators(z) {
        let xt = x.transpose();
        for i in 0..d {
            for l in 0..d {
                let target = w.half[l] + shift;
                if (w.half[i] - target).rem_euclid(2 * p as i64) != 0 {
                    continue;
                }
                let neg = w.sign(ctx, shift, i, l)?;
                let mut row: BTreeMap<usize, FieldElem> = BTreeMap::new();
                // (S X)_il = Σ_j S_ij X_jl
                for (j, v) in xt.row_entries(l) {
                    if let Some(k) = var[i][j] {
                        let e = row.entry(k).or_insert_with(|| ctx.zero());
                        *e = &*e + v;
                    }
                }
                // -ε (X S)_il = -ε Σ_j X_ij S_jl
                for (j, v) in x.row_entries(i) {
                    if let Some(k) = var[j][l] {
                        let e = row.entry(k).or_insert_with(|| ctx.zero());
                        *e = if neg { &*e + v } else { &*e - v };
                    }
                }
                let row: Vec<(usize, FieldElem)> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    ech.add_row(row);
                }
            }
        }
    }
    Ok(ech
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(ctx, d, d);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                m.set(i, j, v[k].clone());
            }
            m
        })
        .collect())
}

fn trace(m: &Matrix) -> FieldElem {
    let ctx = m.ctx();
    (0..m.rows()).fold(ctx.zero(), |acc, i| &acc + m.get(i, i))
}

/// `(1 + N)^{-1/2}` for nilpotent `N`.
fn inv_sqrt_unipotent(n: &Matrix) -> Result<Matrix, DoubleError> {
    let ctx = n.ctx();
    let d = n.rows();
    let mut out = Matrix::identity(ctx, d);
    let mut term = Matrix::identity(ctx, d);
    let mut coeff = ctx.one();
    for k in 1..=d {
        term = &term * n;
        if term.is_zero() {
            break;
        }
        // binom(-1/2, k) = binom(-1/2, k-1) · (-1/2 - (k-1)) / k
        coeff = &coeff * &ctx.frac(-(2 * k as i64 - 1), 2 * k as i64)?;
        out = &out + &term.scale(&coeff);
    }
    Ok(out)
}

fn assemble(z: &Rep, t: Matrix) -> Result<Rep, DoubleError> {
    let rep = Rep::new(Algebra::D, z.e().clone(), z.f().clone(), t)?;
    rep.validate()?;
    if &(rep.k() * rep.k()) != z.k() {
        return Err(DoubleError::Internal("t² differs from K".into()));
    }
    Ok(rep)
}

/// Decides whether `Z` lifts to a `D̄`-module and returns the lift or an
/// obstruction. Every lift is verified against the `D̄` relations.
pub fn lift(z: &Rep) -> Result<LiftOutcome, DoubleError> {
    if z.algebra() != Algebra::U {
        return Err(DoubleError::WrongAlgebra("U"));
    }
    z.validate()?;
    if z.k_diagonal().is_none() {
        let (za, basis) = weight_adapt(z)?;
        return Ok(match lift(&za)? {
            LiftOutcome::Lifted(r) => {
                let t = &(&basis * r.k()) * &basis.inverse()?;
                LiftOutcome::Lifted(assemble(z, t)?)
            }
            other => other,
        });
    }
    let ctx = z.ctx();
    let w = Weights::new(z)?;
    let root = w.t_diag(ctx);
    let cycle = match diagonal_signs(z, &w)? {
        Ok(signs) => {
            let diag: Vec<FieldElem> = root.iter().zip(&signs).map(|(r, &neg)| if neg { -r } else { r.clone() }).collect();
            return Ok(LiftOutcome::Lifted(assemble(z, Matrix::diagonal(ctx, &diag))?));
        }
        Err(eqs) => eqs,
    };
    let p = ctx.p();
    let d = z.dim();
    if (0..d).all(|i| (0..d).all(|j| i == j || !w.same(i, j, p))) {
        return Ok(LiftOutcome::NotLiftable(Obstruction::SignCycle(cycle)));
    }
    let sols = solution_space(z, &w)?;
    if sols.is_empty() {
        return Ok(LiftOutcome::NotLiftable(Obstruction::NoSolution(cycle)));
    }
    let dec = decompose_full(z)?;
    if dec.pieces.len() > 1 {
        return lift_pieces(z, &dec);
    }
    let mut pick = None;
    'outer: for i in 0..sols.len() {
        for j in i..sols.len() {
            let s = if i == j { sols[i].clone() } else { &sols[i] + &sols[j] };
            if !trace(&(&s * &s)).is_zero() {
                pick = Some(s);
                break 'outer;
            }
        }
    }
    let Some(s) = pick else {
        return Ok(LiftOutcome::NotLiftable(Obstruction::Degenerate));
    };
    let lambda = trace(&(&s * &s)).div(&ctx.int(d as i64))?;
    let r = match roots_in_field(&[-&lambda, ctx.zero(), ctx.one()]) {
        Ok(rs) => rs.into_iter().next().ok_or_else(|| DoubleError::Internal("no square root".into()))?,
        Err(HomError::EigenvalueOutsideField) => return Ok(LiftOutcome::NotLiftable(Obstruction::NonSquare(lambda))),
        Err(e) => return Err(e.into()),
    };
    let s1 = s.scale(&r.inv()?);
    let nil = &(&s1 * &s1) - &Matrix::identity(ctx, d);
    if !nil.pow(d as u32).is_zero() {
        return Err(DoubleError::Internal("S² is not scalar plus nilpotent on an indecomposable module".into()));
    }
    let inv = &s1 * &inv_sqrt_unipotent(&nil)?;
    let t = &Matrix::diagonal(ctx, &root) * &inv;
    Ok(LiftOutcome::Lifted(assemble(z, t)?))
}

/// Lifts each summand of a decomposition and transports the result.
fn lift_pieces(z: &Rep, dec: &homlib::Decomposition) -> Result<LiftOutcome, DoubleError> {
    let ctx = z.ctx();
    let mut blocks = Vec::new();
    for piece in &dec.pieces {
        match lift(&build(ctx, &piece.label)?)? {
            LiftOutcome::Lifted(r) => blocks.push(r.k().clone()),
            _ => {
                return Ok(LiftOutcome::Undetermined(format!(
                    "summand {} does not lift on its own; a lift of the sum would have to mix summands",
                    piece.label
                )))
            }
        }
    }
    let wit = dec.witness();
    let t = &(&wit * &Matrix::block_diag(ctx, &blocks)) * &wit.inverse()?;
    Ok(LiftOutcome::Lifted(assemble(z, t)?))
}
