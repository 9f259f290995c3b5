//! Integer polynomials, just enough to produce cyclotomic polynomials.
//!
//! Coefficients are stored low degree first.

/// Divides `num` by the monic polynomial `den`, returning the quotient.
///
/// Returns `None` when the division leaves a remainder.
fn exact_div(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1, "divisor must be monic");
    if num.len() <= dn {
        return if num.iter().all(|&c| c == 0) {
            Some(vec![0])
        } else {
            None
        };
    }
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    Some(quot)
}

/// The `n`-th cyclotomic polynomial, computed by dividing `x^n - 1` by
/// `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic_poly: n must be positive");
    let mut f = vec![0i64; n as usize + 1];
    f[0] = -1;
    f[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            f = exact_div(&f, &phi_d).expect("cyclotomic factor divides x^n - 1");
        }
    }
    f
}

/// Euler's totient, by trial division.
pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
