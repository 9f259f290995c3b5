//! Formulas against the matrix oracle: build both factors, tensor them and
//! decompose.

use cyclo::FieldCtx;
use cyclo::qint;
use homlib::{decompose, identify};
use repcore::ops::{dual, tensor, DualSide};
use repcore::{build, FormalDecomp, ModuleLabel, ProjLinePoint, Sign};
use rules::{dual_rule, tensor_rule, tensor_rule_with, RuleOptions, WmReading};

fn sample(ctx: &'static FieldCtx) -> Vec<ModuleLabel> {
    let p = ctx.p();
    let lams = [(1, 1), (0, 1), (1, 0), (-1, 1), (2, 1)];
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for s in 1..=p {
            out.push(ModuleLabel::x(sign, s));
        }
        for s in 1..p {
            out.push(ModuleLabel::p(sign, s));
            out.push(ModuleLabel::m(sign, s, 2));
            out.push(ModuleLabel::w(sign, s, 2));
            for &(a, b) in &lams {
                out.push(ModuleLabel::e(sign, s, 1, ProjLinePoint::ratio(ctx, a, b).unwrap()));
            }
            out.push(ModuleLabel::e(sign, s, 2, ProjLinePoint::ratio(ctx, 1, 1).unwrap()));
        }
    }
    out
}

fn oracle(ctx: &'static FieldCtx, a: &ModuleLabel, b: &ModuleLabel) -> FormalDecomp {
    let z = tensor(&build(ctx, a).unwrap(), &build(ctx, b).unwrap()).unwrap();
    decompose(&z).unwrap()
}

fn check_products(p: u32, max_dim: usize) {
    let ctx = FieldCtx::get(p).unwrap();
    let labels = sample(ctx);
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in &labels {
        for b in &labels {
            if a.dim(p) * b.dim(p) > max_dim {
                continue;
            }
            checked += 1;
            let want = oracle(ctx, a, b);
            match tensor_rule(ctx, a, b) {
                Ok(got) if got == want => {}
                Ok(got) => failures.push(format!("{a} ⊗ {b}: rule {got}, oracle {want}")),
                Err(e) => failures.push(format!("{a} ⊗ {b}: {e}")),
            }
        }
    }
    assert!(failures.is_empty(), "{} of {checked} products differ:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn products_match_oracle_p2() {
    check_products(2, 200);
}

#[test]
fn products_match_oracle_p3() {
    check_products(3, 150);
}

/// The `W ⊗ M` formula read with the indices as printed conserves neither
/// dimension nor the oracle; the commuted reading matches.
#[test]
fn wm_reading() {
    let ctx = FieldCtx::get(3).unwrap();
    let p = ctx.p();
    let a = ModuleLabel::w(Sign::Plus, 1, 2);
    let b = ModuleLabel::m(Sign::Plus, 1, 3);
    let want = oracle(ctx, &a, &b);
    let commuted = tensor_rule_with(ctx, &a, &b, RuleOptions { wm: WmReading::Commuted }).unwrap();
    let literal = tensor_rule_with(ctx, &a, &b, RuleOptions { wm: WmReading::Literal }).unwrap();
    assert_eq!(commuted, want);
    assert_ne!(literal, want);
    assert_ne!(literal.dim(), a.dim(p) * b.dim(p));
}

/// `X_{s'}^β ⊗ E_s^α(1;λ)` with the printed coefficient `κ(β)^{s'-1}[s]/[t]`.
fn printed_x_times_e(ctx: &'static FieldCtx, x: &ModuleLabel, e: &ModuleLabel) -> FormalDecomp {
    let p = ctx.p();
    let sign = x.sign.mul(e.sign);
    let lam = e.lambda().unwrap();
    let mut out = FormalDecomp::new(p);
    for t in rules::index_i(p, e.s, x.s).unwrap() {
        let c = qint(ctx, e.s as i64).div(&qint(ctx, t as i64)).unwrap();
        let mut l = lam.scale(&c).unwrap();
        if x.sign == Sign::Minus && (x.s - 1) % 2 == 1 {
            l = l.scale_int(-1);
        }
        out.add(&ModuleLabel::e(sign, t, 1, l).canonical(p).unwrap(), 1).unwrap();
    }
    for (sigma, sg) in [((e.s + x.s) as i64, sign), ((p - e.s + x.s) as i64, sign.flip())] {
        for t in rules::index_j(p, sigma) {
            out.add(&ModuleLabel::p(sg, t).canonical(p).unwrap(), 1).unwrap();
        }
    }
    out
}

/// The printed coefficient of `X ⊗ E` disagrees with the oracle once
/// `s' = 2`; the rule uses `(-1)^{s'-1} κ(β)^{p-1}`.
#[test]
fn x_times_e_coefficient() {
    for p in [3u32, 5] {
        let ctx = FieldCtx::get(p).unwrap();
        let x = ModuleLabel::x(Sign::Plus, 2);
        let e = ModuleLabel::e(Sign::Plus, 1, 1, ProjLinePoint::ratio(ctx, 1, 1).unwrap());
        let want = oracle(ctx, &x, &e);
        assert_eq!(tensor_rule(ctx, &x, &e).unwrap(), want);
        assert_ne!(printed_x_times_e(ctx, &x, &e), want, "p={p}");
    }
}

#[test]
fn duals_match_oracle() {
    for p in [2u32, 3] {
        let ctx = FieldCtx::get(p).unwrap();
        for l in sample(ctx) {
            let z = build(ctx, &l).unwrap();
            for side in [DualSide::Right, DualSide::Left] {
                let got = identify(&dual(&z, side).unwrap()).unwrap();
                assert_eq!(dual_rule(ctx, &l, side).unwrap(), got, "{l} {side:?}");
            }
        }
    }
}
