//! The cyclotomic field `Q(ζ_N)`, `N = 4p`, in the power basis.
//!
//! Elements are reduced modulo `Φ_N` with exact rational coordinates, so two
//! elements are equal exactly when their coordinate vectors agree.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::cyclotomic_poly;
use crate::FieldError;

/// Immutable data shared by every element of one field.
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    n: u32,
    /// `Φ_N`, low degree first, monic.
    phi: Vec<i64>,
    degree: usize,
    /// `ζ^k` for `k in 0..N`, as reduced coordinate vectors.
    zeta_pows: Vec<Vec<BigRational>>,
}

impl FieldCtx {
    /// The shared context for `Q(ζ_{4p})`. Contexts are built once and leaked,
    /// so elements can hold a plain `&'static` reference.
    pub fn get(p: u32) -> Result<&'static FieldCtx, FieldError> {
        if p < 2 {
            return Err(FieldError::InvalidP(p));
        }
        static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static FieldCtx>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = reg.lock().expect("field registry poisoned");
        Ok(*map.entry(p).or_insert_with(|| Box::leak(Box::new(FieldCtx::build(p)))))
    }

    fn build(p: u32) -> FieldCtx {
        let n = 4 * p;
        let phi = cyclotomic_poly(n);
        let degree = phi.len() - 1;
        let mut zeta_pows = Vec::with_capacity(n as usize);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..n {
            zeta_pows.push(cur.clone());
            // multiply by ζ: shift up, then fold the top coefficient back with Φ.
            let top = cur[degree - 1].clone();
            for k in (1..degree).rev() {
                cur[k] = cur[k - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for (j, c) in cur.iter_mut().enumerate() {
                    *c -= &top * BigRational::from_integer(BigInt::from(phi[j]));
                }
            }
        }
        FieldCtx { p, n, phi, degree, zeta_pows }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Root order `N = 4p`.
    pub fn root_order(&self) -> u32 {
        self.n
    }

    /// `φ(N)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.phi
    }

    pub fn zero(&'static self) -> FieldElem {
        FieldElem { ctx: self, c: Vec::new() }
    }

    pub fn one(&'static self) -> FieldElem {
        self.int(1)
    }

    pub fn int(&'static self, v: i64) -> FieldElem {
        self.rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn frac(&'static self, num: i64, den: i64) -> Result<FieldElem, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.rational(BigRational::new(num.into(), den.into())))
    }

    /// Embeds a rational number.
    pub fn rational(&'static self, v: BigRational) -> FieldElem {
        if v.is_zero() {
            return self.zero();
        }
        let mut c = vec![BigRational::zero(); self.degree];
        c[0] = v;
        FieldElem { ctx: self, c }
    }

    /// Canonical form of `ζ^k` for any integer `k`.
    pub fn zeta_power(&'static self, k: i64) -> FieldElem {
        let idx = k.rem_euclid(self.n as i64) as usize;
        FieldElem { ctx: self, c: self.zeta_pows[idx].clone() }
    }

    /// `q^k` with `q = ζ^2`.
    pub fn q_power(&'static self, k: i64) -> FieldElem {
        self.zeta_power(2 * k)
    }

    pub fn q(&'static self) -> FieldElem {
        self.q_power(1)
    }

    /// Builds an element from raw coordinates, reducing modulo `Φ_N`.
    pub fn from_coeffs(&'static self, coeffs: Vec<BigRational>) -> FieldElem {
        let mut c = coeffs;
        self.reduce(&mut c);
        FieldElem::normalized(self, c)
    }

    fn reduce(&self, c: &mut Vec<BigRational>) {
        let d = self.degree;
        if c.len() > d {
            for k in (d..c.len()).rev() {
                if c[k].is_zero() {
                    continue;
                }
                let top = std::mem::take(&mut c[k]);
                for j in 0..d {
                    let pj = self.phi[j];
                    if pj != 0 {
                        c[k - d + j] -= &top * BigRational::from_integer(BigInt::from(pj));
                    }
                }
            }
            c.truncate(d);
        }
        c.resize(d, BigRational::zero());
    }
}

/// An element of `Q(ζ_{4p})`.
///
/// The zero element stores no coordinates; every other element stores exactly
/// `φ(N)` of them.
#[derive(Clone)]
pub struct FieldElem {
    ctx: &'static FieldCtx,
    c: Vec<BigRational>,
}

impl FieldElem {
    fn normalized(ctx: &'static FieldCtx, c: Vec<BigRational>) -> FieldElem {
        if c.iter().all(|x| x.is_zero()) {
            FieldElem { ctx, c: Vec::new() }
        } else {
            FieldElem { ctx, c }
        }
    }

    pub fn ctx(&self) -> &'static FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// Coordinate vector of length `φ(N)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        if self.c.is_empty() {
            vec![BigRational::zero(); self.ctx.degree]
        } else {
            self.c.clone()
        }
    }

    /// The value as a rational number, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c.is_empty() {
            return Some(BigRational::zero());
        }
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn same_field(&self, other: &FieldElem) {
        assert!(
            std::ptr::eq(self.ctx, other.ctx),
            "mixing elements of Q(ζ_{}) and Q(ζ_{})",
            self.ctx.n,
            other.ctx.n
        );
    }

    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.ctx.rational(r.recip()));
        }
        let a = trim(self.c.clone());
        let phi: Vec<BigRational> = self
            .ctx
            .phi
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        // extended Euclid: track u with u·a ≡ r (mod Φ)
        let (mut r0, mut r1) = (phi, a);
        let (mut u0, mut u1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (qt, rem) = divrem(&r0, &r1);
            let u2 = poly_sub(&u0, &poly_mul(&qt, &u1));
            r0 = std::mem::replace(&mut r1, rem);
            u0 = std::mem::replace(&mut u1, u2);
            debug_assert!(!r1.is_empty(), "Φ_N is irreducible");
        }
        let lead = r1[0].recip();
        let u: Vec<BigRational> = u1.into_iter().map(|x| x * &lead).collect();
        Ok(self.ctx.from_coeffs(u))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Scales by an integer.
    pub fn scale_int(&self, k: i64) -> FieldElem {
        if k == 0 || self.is_zero() {
            return self.ctx.zero();
        }
        let f = BigRational::from_integer(k.into());
        FieldElem { ctx: self.ctx, c: self.c.iter().map(|x| x * &f).collect() }
    }

    /// If this element is `±ζ^k`, returns `k mod N`.
    pub fn zeta_log(&self) -> Option<u32> {
        (0..self.ctx.n).find(|&k| self.c == self.ctx.zeta_pows[k as usize])
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        quot[k] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.c == other.c
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.n.hash(state);
        self.c.hash(state);
    }
}

/// Lexicographic order on coordinates. This is a total order used for
/// canonical sorting only; it has nothing to do with the field structure.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.ctx.degree.max(other.ctx.degree);
        let zero = BigRational::zero();
        for k in 0..d {
            let a = self.c.get(k).unwrap_or(&zero);
            let b = other.c.get(k).unwrap_or(&zero);
            match a.cmp(b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect();
        FieldElem::normalized(self.ctx, c)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return -rhs;
        }
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect();
        FieldElem::normalized(self.ctx, c)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.ctx.zero();
        }
        let d = self.ctx.degree;
        let mut out = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.ctx.reduce(&mut out);
        FieldElem::normalized(self.ctx, out)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { ctx: self.ctx, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        self.same_field(rhs);
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
        if self.c.iter().all(|x| x.is_zero()) {
            self.c.clear();
        }
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = -rhs;
            return;
        }
        self.same_field(rhs);
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
        if self.c.iter().all(|x| x.is_zero()) {
            self.c.clear();
        }
    }
}

impl fmt::Display for FieldElem {
    /// `c0 + c1*z + c2*z^2 + ...`, listing nonzero terms only; zero prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A cheap size measure (sum of numerator and denominator magnitudes), used to
/// prefer small pivots.
pub fn height(x: &FieldElem) -> BigInt {
    x.c.iter()
        .map(|r| r.numer().abs() + r.denom())
        .fold(BigInt::zero(), |a, b| a + b)
}
