use std::collections::BTreeSet;

use cyclo::FieldCtx;
use proptest::prelude::*;
use repcore::{FormalDecomp, ModuleLabel, ProjLinePoint, Sign};
use rules::{
    commutes, composition_factors_rule, dual_rule, index_i, index_j, tensor_rule, tensor_rule_via, DualSide, Route,
    RuleOptions,
};

fn labels(ctx: &'static FieldCtx, max_n: u32) -> Vec<ModuleLabel> {
    let p = ctx.p();
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for s in 1..=p {
            out.push(ModuleLabel::x(sign, s));
        }
        for s in 1..p {
            out.push(ModuleLabel::p(sign, s));
            for n in 2..=max_n {
                out.push(ModuleLabel::m(sign, s, n));
                out.push(ModuleLabel::w(sign, s, n));
            }
            for n in 1..=max_n {
                for (a, b) in [(1, 1), (0, 1), (1, 0), (-1, 1), (3, 2)] {
                    out.push(ModuleLabel::e(sign, s, n, ProjLinePoint::ratio(ctx, a, b).unwrap()));
                }
            }
        }
    }
    out
}

fn set(v: &[u32]) -> BTreeSet<u32> {
    v.iter().copied().collect()
}

fn parse(ctx: &'static FieldCtx, text: &str) -> ModuleLabel {
    ModuleLabel::parse(text, ctx).unwrap()
}

fn decomp(ctx: &'static FieldCtx, parts: &[(&str, usize)]) -> FormalDecomp {
    let mut d = FormalDecomp::new(ctx.p());
    for (t, m) in parts {
        d.add(&parse(ctx, t).canonical(ctx.p()).unwrap(), *m).unwrap();
    }
    d
}

#[test]
fn index_examples() {
    assert_eq!(index_i(5, 2, 3).unwrap(), set(&[2, 4]));
    assert_eq!(index_j(5, 9), set(&[2, 4]));
    assert_eq!(index_j(5, 2), set(&[]));
    assert!(index_i(5, 0, 3).is_err());
    assert!(index_i(5, 2, 6).is_err());
}

#[test]
fn index_set_properties() {
    for p in 2..=7u32 {
        for s in 1..=p {
            assert!(index_i(p, p, s).unwrap().is_empty());
            for s2 in 1..=p {
                let i = index_i(p, s, s2).unwrap();
                let j = index_j(p, (s + s2) as i64);
                assert_eq!(i, index_i(p, s2, s).unwrap());
                assert!(i.iter().all(|&t| (1..p).contains(&t)));
                assert!(j.iter().all(|&t| (1..=p).contains(&t)));
                assert!(i.is_disjoint(&j));
                if s < p {
                    let mirrored: BTreeSet<u32> = i.iter().map(|t| p - t).collect();
                    assert_eq!(index_i(p, p - s, s2).unwrap(), mirrored);
                }
                for t in 1..=p {
                    assert_eq!(i.contains(&t), index_i(p, s, t).unwrap().contains(&s2), "p={p} s={s} s'={s2} t={t}");
                }
            }
        }
    }
}

#[test]
fn printed_examples() {
    let ctx = FieldCtx::get(5).unwrap();
    let t = |a: &str, b: &str| tensor_rule(ctx, &parse(ctx, a), &parse(ctx, b)).unwrap();
    assert_eq!(t("X+(2)", "X+(3)"), decomp(ctx, &[("X+(2)", 1), ("X+(4)", 1)]));
    assert_eq!(t("X+(5)", "X+(5)"), decomp(ctx, &[("P+(1)", 1), ("P+(3)", 1), ("X+(5)", 1)]));

    let ctx = FieldCtx::get(3).unwrap();
    let t = |a: &str, b: &str| tensor_rule(ctx, &parse(ctx, a), &parse(ctx, b)).unwrap();
    assert_eq!(t("E+(1,1,[1:1])", "X+(2)"), decomp(ctx, &[("X-(3)", 1), ("E+(2,1,[1:1])", 1)]));
    assert_eq!(t("X+(2)", "E+(1,1,[1:1])"), decomp(ctx, &[("X-(3)", 1), ("E+(2,1,[-1:1])", 1)]));
    let mw = t("M+(1,2)", "W+(1,2)");
    assert_eq!(mw.mult(&parse(ctx, "X-(2)")), 1);
    assert_eq!(mw.mult(&parse(ctx, "P+(1)")), 2);
}

#[test]
fn dimension_is_conserved() {
    for p in [2u32, 3, 5] {
        let ctx = FieldCtx::get(p).unwrap();
        let ls = labels(ctx, 3);
        for a in &ls {
            for b in &ls {
                let d = tensor_rule(ctx, a, b).unwrap_or_else(|e| panic!("{a} ⊗ {b}: {e}"));
                assert_eq!(d.dim(), a.dim(p) * b.dim(p), "{a} ⊗ {b} = {d}");
            }
        }
    }
}

fn flatten(p: u32, d: &FormalDecomp) -> FormalDecomp {
    let mut out = FormalDecomp::new(p);
    for (l, m) in d.summands() {
        out.merge_scaled(&composition_factors_rule(p, l).unwrap(), *m).unwrap();
    }
    out
}

#[test]
fn composition_factors_are_conserved() {
    for p in [2u32, 3, 5] {
        let ctx = FieldCtx::get(p).unwrap();
        let ls = labels(ctx, 2);
        for a in &ls {
            for b in &ls {
                let mut want = FormalDecomp::new(p);
                for (x, i) in composition_factors_rule(p, a).unwrap().summands() {
                    for (y, j) in composition_factors_rule(p, b).unwrap().summands() {
                        want.merge_scaled(&flatten(p, &tensor_rule(ctx, x, y).unwrap()), i * j).unwrap();
                    }
                }
                assert_eq!(flatten(p, &tensor_rule(ctx, a, b).unwrap()), want, "{a} ⊗ {b}");
            }
        }
    }
}

#[test]
fn duality_reverses_products() {
    let ctx = FieldCtx::get(3).unwrap();
    let p = ctx.p();
    let ls = labels(ctx, 2);
    let dual_of = |d: &FormalDecomp| {
        let mut out = FormalDecomp::new(p);
        for (l, m) in d.summands() {
            out.add(&dual_rule(ctx, l, DualSide::Right).unwrap(), *m).unwrap();
        }
        out
    };
    for a in &ls {
        let da = dual_rule(ctx, a, DualSide::Right).unwrap();
        assert_eq!(&dual_rule(ctx, &da, DualSide::Left).unwrap(), &a.canonical(p).unwrap());
        for b in &ls {
            let db = dual_rule(ctx, b, DualSide::Right).unwrap();
            assert_eq!(dual_of(&tensor_rule(ctx, a, b).unwrap()), tensor_rule(ctx, &db, &da).unwrap(), "{a} ⊗ {b}");
        }
    }
}

#[test]
fn composition_factor_examples() {
    let ctx = FieldCtx::get(5).unwrap();
    let cf = |t: &str| composition_factors_rule(5, &parse(ctx, t)).unwrap();
    assert_eq!(cf("P+(2)"), decomp(ctx, &[("X+(2)", 2), ("X-(3)", 2)]));
    assert_eq!(cf("E+(2,3,[1:1])"), decomp(ctx, &[("X+(2)", 3), ("X-(3)", 3)]));
    assert_eq!(cf("X-(4)"), decomp(ctx, &[("X-(4)", 1)]));
}

#[test]
fn commutativity() {
    let ctx = FieldCtx::get(2).unwrap();
    let ls = labels(ctx, 3);
    for a in &ls {
        for b in &ls {
            assert!(commutes(ctx, a, b).unwrap().is_none(), "{a} {b}");
        }
    }
    for p in [3u32, 5] {
        let ctx = FieldCtx::get(p).unwrap();
        let ls: Vec<_> = labels(ctx, 2).into_iter().filter(|l| l.lambda.is_none()).collect();
        for a in &ls {
            for b in &ls {
                assert!(commutes(ctx, a, b).unwrap().is_none(), "{a} {b}");
            }
        }
    }
    let ctx = FieldCtx::get(3).unwrap();
    let (ab, ba) = commutes(ctx, &parse(ctx, "E+(1,1,[1:1])"), &parse(ctx, "X+(2)")).unwrap().unwrap();
    assert_eq!(ab.mult(&parse(ctx, "E+(2,1,[1:1])")), 1);
    assert_eq!(ba.mult(&parse(ctx, "E+(2,1,[-1:1])")), 1);
}

fn arb_label(ctx: &'static FieldCtx) -> impl Strategy<Value = ModuleLabel> {
    let ls = labels(ctx, 4);
    (0..ls.len()).prop_map(move |i| ls[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn routes_agree_p5(a in arb_label(FieldCtx::get(5).unwrap()), b in arb_label(FieldCtx::get(5).unwrap())) {
        let ctx = FieldCtx::get(5).unwrap();
        let o = RuleOptions::default();
        let outer = tensor_rule_via(ctx, &a, &b, Route::Outer, o).unwrap();
        let inner = tensor_rule_via(ctx, &a, &b, Route::Inner, o).unwrap();
        prop_assert_eq!(&outer, &inner);
        prop_assert_eq!(outer.dim(), a.dim(5) * b.dim(5));
    }
}
