use repcore::{Family, FormalDecomp, ModuleLabel};

use crate::RuleError;

/// Composition factors with multiplicity.
pub fn composition_factors_rule(p: u32, l: &ModuleLabel) -> Result<FormalDecomp, RuleError> {
    let l = l.canonical(p)?;
    let mut out = FormalDecomp::new(p);
    let (top, soc) = match l.family {
        Family::X => {
            out.add(&l, 1)?;
            return Ok(out);
        }
        Family::P => (2, 2),
        Family::M => (l.n - 1, l.n),
        Family::W => (l.n, l.n - 1),
        Family::E => (l.n, l.n),
    };
    if top > 0 {
        out.add(&ModuleLabel::x(l.sign, l.s), top as usize)?;
    }
    if soc > 0 {
        out.add(&ModuleLabel::x(l.sign.flip(), p - l.s), soc as usize)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use repcore::Sign;

    #[test]
    fn dimensions_add_up() {
        let p = 5;
        for s in 1..p {
            for n in 1..4 {
                for l in [ModuleLabel::m(Sign::Plus, s, n), ModuleLabel::w(Sign::Minus, s, n), ModuleLabel::p(Sign::Plus, s)] {
                    let l = l.canonical(p).unwrap();
                    assert_eq!(composition_factors_rule(p, &l).unwrap().dim(), l.dim(p), "{l}");
                }
            }
        }
    }
}
