//! String and JSON forms of field elements.
//!
//! The string form is `c0 + c1*z + c2*z^2 + ...` with rational coefficients
//! written `a` or `a/b`; `z` stands for `ζ_N`. The JSON form is the full
//! coordinate vector as an array of rational strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::field::{FieldCtx, FieldElem};
use crate::FieldError;

fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::Parse(format!("bad rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

fn parse_term(term: &str, ctx: &'static FieldCtx) -> Result<FieldElem, FieldError> {
    let bad = || FieldError::Parse(format!("bad term `{term}`"));
    let (coef, power) = match term.find('z') {
        None => (term, None),
        Some(i) => {
            let exp = &term[i + 1..];
            let k: i64 = if exp.is_empty() {
                1
            } else {
                exp.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
            };
            (term[..i].trim_end_matches('*'), Some(k))
        }
    };
    let c = match coef {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        s => parse_rational(s.strip_prefix('+').unwrap_or(s))?,
    };
    let c = ctx.rational(c);
    Ok(match power {
        None => c,
        Some(k) => &c * &ctx.zeta_power(k),
    })
}

/// Parses the string form. Whitespace is ignored and terms may be joined by
/// `+` or `-`; powers of `z` beyond the field degree are reduced.
pub fn parse_elem(s: &str, ctx: &'static FieldCtx) -> Result<FieldElem, FieldError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(FieldError::Parse("empty field element".into()));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        let splits = match ch {
            '+' => prev.is_some_and(|p| !"^*/".contains(p)),
            '-' => prev.is_some_and(|p| !"+^*/".contains(p)),
            _ => false,
        };
        if splits {
            terms.push(std::mem::take(&mut cur));
            if ch == '-' {
                cur.push('-');
            }
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    terms.push(cur);
    let mut acc = ctx.zero();
    for t in &terms {
        acc += &parse_term(t, ctx)?;
    }
    Ok(acc)
}

/// JSON array of `φ(N)` rational strings.
pub fn to_json(x: &FieldElem) -> Value {
    Value::Array(x.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn from_json(v: &Value, ctx: &'static FieldCtx) -> Result<FieldElem, FieldError> {
    let arr = v
        .as_array()
        .ok_or_else(|| FieldError::Parse("expected an array of rational strings".into()))?;
    if arr.len() != ctx.degree() {
        return Err(FieldError::Parse(format!(
            "expected {} coordinates, got {}",
            ctx.degree(),
            arr.len()
        )));
    }
    let coeffs = arr
        .iter()
        .map(|x| {
            x.as_str()
                .ok_or_else(|| FieldError::Parse("coordinate is not a string".into()))
                .and_then(parse_rational)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ctx.from_coeffs(coeffs))
}
