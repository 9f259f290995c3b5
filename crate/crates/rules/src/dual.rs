use cyclo::FieldCtx;
use repcore::ops::DualSide;
use repcore::{Family, ModuleLabel, Sign};

use crate::RuleError;

/// Label of the dual module. Both sides give the same label.
///
/// `E_s^+(n;λ)* = E_{p-s}^-(n;(-1)^s λ)`, `E_s^-(n;λ)* = E_{p-s}^+(n;(-1)^{p-s} λ)`,
/// `M_s^±(n)* = W_{p-s}^∓(n)` and the reverse; simples and projectives are
/// self-dual.
pub fn dual_rule(ctx: &'static FieldCtx, l: &ModuleLabel, _side: DualSide) -> Result<ModuleLabel, RuleError> {
    let p = ctx.p();
    let l = l.canonical(p)?;
    let out = match l.family {
        Family::X | Family::P => l.clone(),
        Family::M => ModuleLabel::w(l.sign.flip(), p - l.s, l.n),
        Family::W => ModuleLabel::m(l.sign.flip(), p - l.s, l.n),
        Family::E => {
            let lam = l.lambda().expect("canonical E has λ");
            let k = match l.sign {
                Sign::Plus => l.s,
                Sign::Minus => p - l.s,
            };
            let lam = if k % 2 == 0 { lam.clone() } else { lam.scale_int(-1) };
            ModuleLabel::e(l.sign.flip(), p - l.s, l.n, lam)
        }
    };
    Ok(out.canonical(p)?)
}
