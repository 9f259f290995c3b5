//! The index sets `I_{s,s'}` and `J_{s+s'}`.

use std::collections::BTreeSet;

use crate::RuleError;

fn check(p: u32, s: u32) -> Result<(), RuleError> {
    if (1..=p).contains(&s) {
        Ok(())
    } else {
        Err(RuleError::OutOfRange(format!("index {s} outside 1..={p}")))
    }
}

/// `I_{s,s'} = {s'-s+2i-1 : i = 1..s, t ≤ 2p-s-s'}` for `s ≤ s'`,
/// symmetric in `(s, s')`.
pub fn index_i(p: u32, s: u32, s2: u32) -> Result<BTreeSet<u32>, RuleError> {
    check(p, s)?;
    check(p, s2)?;
    let (a, b) = (s.min(s2) as i64, s.max(s2) as i64);
    let bound = 2 * p as i64 - a - b;
    Ok((1..=a).map(|i| b - a + 2 * i - 1).filter(|&t| t <= bound).map(|t| t as u32).collect())
}

/// `J_{s,s'} = {2p-2i-s'+s+1 : i = 1..s, t ≤ p}` for `s ≤ s'`. It depends
/// only on `σ = s+s'`; any `σ` outside `2..=2p` gives the empty set.
pub fn index_j(p: u32, sigma: i64) -> BTreeSet<u32> {
    let p = p as i64;
    if sigma < 2 || sigma > 2 * p {
        return BTreeSet::new();
    }
    let s = (sigma - p).max(1);
    let s2 = sigma - s;
    (1..=s).map(|i| 2 * p - 2 * i - s2 + s + 1).filter(|&t| t <= p).map(|t| t as u32).collect()
}

/// `J_{s,s'}` from the pair.
pub fn index_j_pair(p: u32, s: u32, s2: u32) -> Result<BTreeSet<u32>, RuleError> {
    check(p, s)?;
    check(p, s2)?;
    Ok(index_j(p, (s + s2) as i64))
}
