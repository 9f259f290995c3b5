//! Quantum integers, factorials and binomials at `q = ζ^2`.

use crate::field::{FieldCtx, FieldElem};
use crate::FieldError;

/// `[n] = (q^n - q^{-n}) / (q - q^{-1})`, evaluated as the finite sum
/// `q^{n-1} + q^{n-3} + ... + q^{1-n}` so no division is needed.
pub fn qint(ctx: &'static FieldCtx, n: i64) -> FieldElem {
    if n < 0 {
        return -qint(ctx, -n);
    }
    let mut acc = ctx.zero();
    let mut e = n - 1;
    while e >= 1 - n {
        acc += &ctx.q_power(e);
        e -= 2;
    }
    acc
}

/// `[n]! = [1][2]...[n]`.
pub fn qfact(ctx: &'static FieldCtx, n: u32) -> FieldElem {
    (1..=n as i64).fold(ctx.one(), |acc, k| &acc * &qint(ctx, k))
}

/// Quantum binomial `[n]! / ([k]! [n-k]!)`, defined for `0 <= k <= n < p`.
pub fn qbinom(ctx: &'static FieldCtx, n: u32, k: u32) -> Result<FieldElem, FieldError> {
    if k > n {
        return Err(FieldError::Domain(format!("qbinom: k={k} exceeds n={n}")));
    }
    if n >= ctx.p() {
        return Err(FieldError::Domain(format!(
            "qbinom: n={n} must be below p={} (denominator [k]! vanishes)",
            ctx.p()
        )));
    }
    qfact(ctx, n).div(&(&qfact(ctx, k) * &qfact(ctx, n - k)))
}
