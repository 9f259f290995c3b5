//! Polynomials over the cyclotomic field and their roots in the field.
//!
//! Roots are located numerically under every complex embedding (up to
//! conjugation), the embedded values are matched across embeddings, the
//! rational coordinates are recovered by continued fractions, and each
//! candidate is then checked exactly. Nothing is accepted on numerical
//! evidence alone.

use std::f64::consts::PI;

use cyclo::{FieldCtx, FieldElem, Matrix};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::HomError;

/// Coefficients low degree first; the zero polynomial is empty.
pub type Poly = Vec<FieldElem>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn eval(p: &[FieldElem], x: &FieldElem) -> FieldElem {
    let ctx = x.ctx();
    p.iter().rev().fold(ctx.zero(), |acc, c| &(&acc * x) + c)
}

pub fn derivative(p: &[FieldElem]) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(i as i64)).collect())
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[FieldElem], b: &[FieldElem]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let ctx = b[0].ctx();
    let mut quot = vec![ctx.zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &(&c * y);
        }
        quot[k] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn monic(p: Poly) -> Poly {
    let inv = p.last().expect("nonzero").inv().expect("nonzero");
    p.iter().map(|c| c * &inv).collect()
}

pub fn gcd(a: &[FieldElem], b: &[FieldElem]) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        monic(x)
    }
}

/// Monic squarefree part `p / gcd(p, p')`.
pub fn squarefree(p: &[FieldElem]) -> Poly {
    let g = gcd(p, &derivative(p));
    monic(divrem(p, &g).0)
}

/// Characteristic polynomial `det(x - T)` by Faddeev–LeVerrier.
pub fn charpoly(t: &Matrix) -> Poly {
    let ctx = t.ctx();
    let n = t.rows();
    let mut coeffs = vec![ctx.zero(); n + 1];
    coeffs[n] = ctx.one();
    let mut m = Matrix::zeros(ctx, n, n);
    for k in 1..=n {
        m = &(t * &m) + &Matrix::scalar(ctx, n, &coeffs[n + 1 - k]);
        let tm = t * &m;
        let mut tr = ctx.zero();
        for i in 0..n {
            tr += tm.get(i, i);
        }
        coeffs[n - k] = -&tr.div(&ctx.int(k as i64)).expect("k is nonzero");
    }
    coeffs
}

fn embed(x: &FieldElem, k: u32) -> Complex64 {
    let n = x.ctx().root_order() as f64;
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), 2.0 * PI * (j as f64) * (k as f64) / n))
        .sum()
}

fn eval_c(p: &[Complex64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// All complex roots of a monic polynomial (Durand–Kerner, then Newton).
fn complex_roots(p: &[Complex64]) -> Vec<Complex64> {
    let d = p.len() - 1;
    let scale = 1.0 + p.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d).map(|i| Complex64::from_polar(scale * 0.9, 0.4 + 2.0 * PI * i as f64 / d as f64)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval_c(p, z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * scale {
            break;
        }
    }
    let dp: Vec<Complex64> = p.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    for r in z.iter_mut() {
        for _ in 0..5 {
            let dv = eval_c(&dp, *r);
            if dv.norm() == 0.0 {
                break;
            }
            *r -= eval_c(p, *r) / dv;
        }
    }
    z
}

/// Best rational approximation by continued fractions.
fn rationalize(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let tol = 1e-8 * x.abs().max(1.0);
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let ai = a as i128;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if k1 > 10_000_000 {
            return None;
        }
        if ((h1 as f64) / (k1 as f64) - x).abs() <= tol {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = r - a;
        if frac.abs() < 1e-300 {
            break;
        }
        r = 1.0 / frac;
    }
    ((h1 as f64) / (k1 as f64) - x).abs().le(&tol).then(|| BigRational::new(BigInt::from(h1), BigInt::from(k1)))
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Solves a small dense real system by partial pivoting.
fn solve_real(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[piv][c].abs() < 1e-12 {
            return None;
        }
        a.swap(c, piv);
        b.swap(c, piv);
        for r in 0..n {
            if r != c {
                let f = a[r][c] / a[c][c];
                for k in c..n {
                    a[r][k] -= f * a[c][k];
                }
                b[r] -= f * b[c];
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// The distinct roots of `p` lying in the field. Fails with
/// [`HomError::EigenvalueOutsideField`] unless the squarefree part of `p`
/// splits completely.
pub fn roots_in_field(p: &[FieldElem]) -> Result<Vec<FieldElem>, HomError> {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return Err(crate::internal("roots", "zero polynomial"));
    }
    let ctx: &'static FieldCtx = p[0].ctx();
    let g = squarefree(&p);
    let d = g.len() - 1;
    if d == 0 {
        return Ok(Vec::new());
    }
    if d == 1 {
        return Ok(vec![-&g[0]]);
    }
    let n = ctx.root_order();
    let phi = ctx.degree();
    let reps: Vec<u32> = (1..n / 2).filter(|&k| gcd_u32(k, n) == 1).collect();
    debug_assert_eq!(reps.len() * 2, phi);
    let per_embedding: Vec<Vec<Complex64>> =
        reps.iter().map(|&k| complex_roots(&g.iter().map(|c| embed(c, k)).collect::<Vec<_>>())).collect();
    // rows: Re and Im of Σ_j x_j ζ_k^j for each representative k
    let mut lhs = Vec::with_capacity(phi);
    for &k in &reps {
        let ang = |j: usize| 2.0 * PI * (j as f64) * (k as f64) / n as f64;
        lhs.push((0..phi).map(|j| ang(j).cos()).collect::<Vec<_>>());
        lhs.push((0..phi).map(|j| ang(j).sin()).collect::<Vec<_>>());
    }
    let mut found: Vec<FieldElem> = Vec::new();
    for &z0 in &per_embedding[0] {
        let others = reps.len() - 1;
        let total = d.pow(others as u32);
        for code in 0..total {
            let mut c = code;
            let mut vals = vec![z0];
            for e in 1..reps.len() {
                vals.push(per_embedding[e][c % d]);
                c /= d;
            }
            let rhs: Vec<f64> = vals.iter().flat_map(|v| [v.re, v.im]).collect();
            let Some(x) = solve_real(lhs.clone(), rhs) else { continue };
            let Some(coords) = x.iter().map(|&v| rationalize(v)).collect::<Option<Vec<_>>>() else { continue };
            let cand = ctx.from_coeffs(coords);
            if eval(&g, &cand).is_zero() {
                if !found.contains(&cand) {
                    found.push(cand);
                }
                break;
            }
        }
    }
    if found.len() != d {
        return Err(HomError::EigenvalueOutsideField);
    }
    found.sort();
    Ok(found)
}
