//! Intertwiner spaces.

use std::collections::{BTreeMap, HashMap};

use cyclo::{Echelon, FieldElem, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repcore::ops::weight_adapt;
use repcore::{Rep, RepError};

use crate::HomError;

/// Basis of `Hom(source, target)`; each matrix is `dim target × dim source`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn group_by_weight(diag: &[FieldElem]) -> HashMap<FieldElem, Vec<usize>> {
    let mut m: HashMap<FieldElem, Vec<usize>> = HashMap::new();
    for (i, w) in diag.iter().enumerate() {
        m.entry(w.clone()).or_default().push(i);
    }
    m
}

/// `Hom(a, b)` as the nullspace of `ρ_b(g)T = Tρ_a(g)`.
///
/// With diagonal `K` on both sides the unknowns are only the entries
/// `T[i][j]` with equal weights, which keeps the system small; other inputs
/// are weight-adapted first.
pub fn hom_space(a: &Rep, b: &Rep) -> Result<HomSpace, HomError> {
    if a.algebra() != b.algebra() || !std::ptr::eq(a.ctx(), b.ctx()) {
        return Err(RepError::Mismatch("hom_space between different algebras or fields".into()).into());
    }
    match (a.k_diagonal(), b.k_diagonal()) {
        (Some(da), Some(db)) => Ok(hom_diagonal(a, b, &da, &db)),
        _ => {
            let (a2, ta) = weight_adapt(a)?;
            let (b2, tb) = weight_adapt(b)?;
            let inner = hom_diagonal(&a2, &b2, &a2.k_diagonal().expect("adapted"), &b2.k_diagonal().expect("adapted"));
            let ta_inv = ta.inverse()?;
            let basis = inner.basis.iter().map(|t| &(&tb * t) * &ta_inv).collect();
            Ok(HomSpace { source_dim: a.dim(), target_dim: b.dim(), basis })
        }
    }
}

fn hom_diagonal(a: &Rep, b: &Rep, da: &[FieldElem], db: &[FieldElem]) -> HomSpace {
    let ctx = a.ctx();
    let (na, nb) = (a.dim(), b.dim());
    let wa = group_by_weight(da);
    // position of each source index inside its weight class
    let mut pos_a = vec![0usize; na];
    for idx in wa.values() {
        for (k, &j) in idx.iter().enumerate() {
            pos_a[j] = k;
        }
    }
    let wb = group_by_weight(db);
    let mut offset = vec![usize::MAX; nb];
    let mut nvars = 0;
    for i in 0..nb {
        if let Some(cls) = wa.get(&db[i]) {
            offset[i] = nvars;
            nvars += cls.len();
        }
    }
    let var = |i: usize, j: usize| offset[i] + pos_a[j];
    let mut ech = Echelon::new(ctx, nvars);
    if nvars > 0 {
        for g in 0..2 {
            let (ga, gb) = (a.generators()[g], b.generators()[g]);
            let mut eqs: HashMap<(usize, usize), BTreeMap<usize, FieldElem>> = HashMap::new();
            let mut push = |eq: (usize, usize), v: usize, c: FieldElem| {
                let row = eqs.entry(eq).or_default();
                let e = row.entry(v).or_insert_with(|| ctx.zero());
                *e += &c;
            };
            // (ρ_b T)[i][j] = Σ_k ρ_b[i][k] T[k][j]
            for i in 0..nb {
                for (k, c) in gb.row_entries(i) {
                    if offset[k] == usize::MAX {
                        continue;
                    }
                    for &j in &wa[&db[k]] {
                        push((i, j), var(k, j), c.clone());
                    }
                }
            }
            // (T ρ_a)[i][j] = Σ_k T[i][k] ρ_a[k][j]
            for k in 0..na {
                let Some(rows) = wb.get(&da[k]) else { continue };
                for (j, c) in ga.row_entries(k) {
                    for &i in rows {
                        push((i, j), var(i, k), -c);
                    }
                }
            }
            for (_, row) in eqs {
                let row: Vec<(usize, FieldElem)> = row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !row.is_empty() {
                    ech.add_row(row);
                }
            }
        }
    }
    let basis = ech
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut t = Matrix::zeros(ctx, nb, na);
            for i in 0..nb {
                if offset[i] == usize::MAX {
                    continue;
                }
                for &j in &wa[&db[i]] {
                    let x = &v[var(i, j)];
                    if !x.is_zero() {
                        t.set(i, j, x.clone());
                    }
                }
            }
            t
        })
        .collect();
    HomSpace { source_dim: na, target_dim: nb, basis }
}

pub fn hom_dim(a: &Rep, b: &Rep) -> Result<usize, HomError> {
    Ok(hom_space(a, b)?.dim())
}

/// Kernel of a weight-preserving map, with a basis of weight vectors of
/// the source (whose `K` is diagonal with entries `src_diag`).
pub fn weight_kernel(t: &Matrix, src_diag: &[FieldElem]) -> Matrix {
    let ctx = t.ctx();
    let n = src_diag.len();
    let rows: Vec<usize> = (0..t.rows()).collect();
    let mut groups: Vec<(FieldElem, Vec<usize>)> = group_by_weight(src_diag).into_iter().collect();
    groups.sort_by_key(|(_, idx)| idx[0]);
    let mut cols = Vec::new();
    for (_, idx) in groups {
        let ker = t.select(&rows, &idx).nullspace();
        for c in ker.columns() {
            let mut v = vec![ctx.zero(); n];
            for (k, &j) in idx.iter().enumerate() {
                v[j] = c[k].clone();
            }
            cols.push(v);
        }
    }
    Matrix::from_columns(ctx, n, &cols)
}

/// Rank of a weight-preserving map, computed one weight at a time.
pub fn weighted_rank(t: &Matrix, src_diag: &[FieldElem], dst_diag: &[FieldElem]) -> usize {
    let ws = group_by_weight(src_diag);
    let wd = group_by_weight(dst_diag);
    ws.iter()
        .map(|(w, idx)| match wd.get(w) {
            Some(rows) => t.select(rows, idx).rank(),
            None => 0,
        })
        .sum()
}

fn is_bijective(t: &Matrix, a: &Rep, b: &Rep) -> bool {
    if a.dim() != b.dim() {
        return false;
    }
    match (a.k_diagonal(), b.k_diagonal()) {
        (Some(da), Some(db)) => weighted_rank(t, &da, &db) == a.dim(),
        _ => t.is_invertible(),
    }
}

fn combine(basis: &[Matrix], coeffs: &[i64]) -> Matrix {
    let ctx = basis[0].ctx();
    let mut acc = Matrix::zeros(ctx, basis[0].rows(), basis[0].cols());
    for (m, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &m.scale(&ctx.int(c));
        }
    }
    acc
}

/// Searches `Hom(a, b)` for an invertible element: each basis element, then
/// integer combinations with coefficients in `{-2..2}` (deterministic order,
/// at most sixty), then seeded pseudo-random combinations.
pub fn find_invertible(hom: &HomSpace, a: &Rep, b: &Rep, seed: u64) -> Option<Matrix> {
    if a.dim() != b.dim() {
        return None;
    }
    if a.dim() == 0 {
        return Some(Matrix::zeros(a.ctx(), 0, 0));
    }
    let basis = &hom.basis;
    let k = basis.len();
    if k == 0 {
        return None;
    }
    for m in basis {
        if is_bijective(m, a, b) {
            return Some(m.clone());
        }
    }
    // small coefficient vectors in a fixed order
    let budget = 60usize;
    let mut coeffs = vec![0i64; k];
    let mut tried = 0;
    'outer: loop {
        // odometer over digits 0, 1, 2, -2, -1
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            coeffs[i] = match coeffs[i] {
                0 => 1,
                1 => 2,
                2 => -2,
                -2 => -1,
                _ => 0,
            };
            if coeffs[i] != 0 {
                break;
            }
            i += 1;
        }
        if coeffs.iter().filter(|c| **c != 0).count() < 2 {
            continue;
        }
        tried += 1;
        if tried > budget {
            break;
        }
        let m = combine(basis, &coeffs);
        if is_bijective(&m, a, b) {
            return Some(m);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..24 {
        let c: Vec<i64> = (0..k).map(|_| rng.gen_range(-50..=50)).collect();
        let m = combine(basis, &c);
        if is_bijective(&m, a, b) {
            return Some(m);
        }
    }
    None
}
