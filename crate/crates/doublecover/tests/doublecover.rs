use cyclo::{FieldCtx, FieldElem, Matrix};
use doublecover::{
    braiding_check, build_t, jordan_split_check, lift, restrict_to_u, rmatrix_literal, rmatrix_on, Alpha, LiftOutcome,
};
use homlib::{decompose, is_iso};
use repcore::ops::tensor;
use repcore::{build, Family, FormalDecomp, ModuleLabel, ProjLinePoint, Rep, Sign};

fn kappas(ctx: &'static FieldCtx) -> Vec<(FieldElem, FieldElem)> {
    vec![
        (ctx.one(), ctx.one()),
        (ctx.int(2), ctx.int(3)),
        (ctx.int(-1), ctx.one()),
        (ctx.frac(1, 2).unwrap(), ctx.int(5)),
    ]
}

fn lifted(z: &Rep) -> Rep {
    match lift(z).unwrap() {
        LiftOutcome::Lifted(r) => r,
        other => panic!("expected a lift, got {other:?}"),
    }
}

#[test]
fn t_modules_satisfy_relations() {
    for p in [2u32, 3] {
        let ctx = FieldCtx::get(p).unwrap();
        for s in 1..p {
            for alpha in Alpha::ALL {
                for n in 1..=2 {
                    for (k1, k2) in kappas(ctx) {
                        let t = build_t(ctx, s, alpha, (&k1, &k2), n).unwrap();
                        assert_eq!(t.dim(), (2 * p * n) as usize);
                        t.validate().unwrap_or_else(|e| panic!("p={p} s={s} α={alpha} n={n}: {e}"));
                        restrict_to_u(&t).unwrap().validate().unwrap();
                    }
                }
            }
        }
    }
}

#[test]
fn t_spectrum() {
    let ctx = FieldCtx::get(3).unwrap();
    let one = ctx.one();
    for alpha in Alpha::ALL {
        let t = build_t(ctx, 2, alpha, (&one, &one), 1).unwrap();
        let a = alpha.value(ctx);
        for u in 0..3usize {
            let w = &a * &ctx.zeta_power(2 - 1 - 2 * u as i64);
            assert_eq!(t.k().get(u, u), &w);
            assert_eq!(t.k().get(3 + u, 3 + u), &-&w);
        }
    }
    // e on e_0(2) reaches ê_{p-1}(2) and ê_{p-1}(1)
    let k = ctx.int(7);
    let t = build_t(ctx, 1, Alpha::One, (&k, &one), 2).unwrap();
    assert_eq!(t.e().get(6 + 3 + 2, 3), &k);
    assert_eq!(t.e().get(6 + 2, 3), &one);
}

#[test]
fn restriction_splits_into_two_e_modules() {
    let ctx = FieldCtx::get(3).unwrap();
    for s in 1..3 {
        for n in 1..=2 {
            for k in [1, 2] {
                let kap = ctx.int(k);
                let t = build_t(ctx, s, Alpha::One, (&kap, &kap), n).unwrap();
                let mut want = FormalDecomp::new(3);
                for b in [k, -k] {
                    want.add(&ModuleLabel::e(Sign::Plus, s, n, ProjLinePoint::finite(ctx.int(b))), 1).unwrap();
                }
                assert_eq!(decompose(&restrict_to_u(&t).unwrap()).unwrap(), want, "s={s} n={n} κ={k}");
            }
        }
    }
}

#[test]
fn jordan_splitting() {
    let ctx = FieldCtx::get(3).unwrap();
    let one = ctx.one();
    let js = jordan_split_check(ctx, 1, Alpha::One, (&one, &one), 2, &one).unwrap();
    assert!(js.passed);
    let t = restrict_to_u(&build_t(ctx, 1, Alpha::One, (&one, &one), 2).unwrap()).unwrap();
    assert!(is_iso(&t, &js.target).unwrap().is_iso());

    for p in [2u32, 3, 5] {
        let ctx = FieldCtx::get(p).unwrap();
        for s in 1..p {
            for alpha in [Alpha::One, Alpha::MinusOne] {
                for n in 1..=3 {
                    let (k1, k2, b) = (ctx.int(2), ctx.int(8), ctx.int(4));
                    let js = jordan_split_check(ctx, s, alpha, (&k1, &k2), n, &b).unwrap();
                    assert!(js.passed, "p={p} s={s} α={alpha} n={n}");
                    if n == 1 {
                        assert_eq!(js.q.rows(), 2);
                    }
                }
            }
        }
    }
    let two = ctx.int(2);
    assert!(jordan_split_check(ctx, 1, Alpha::One, (&one, &one), 1, &two).is_err());
    assert!(jordan_split_check(ctx, 1, Alpha::I, (&one, &one), 1, &one).is_err());
}

#[test]
fn rmatrix_collapsed_sum_matches_printed_sum() {
    let ctx = FieldCtx::get(2).unwrap();
    let one = ctx.one();
    let t = build_t(ctx, 1, Alpha::One, (&one, &ctx.int(3)), 1).unwrap();
    let x = lifted(&build(ctx, &ModuleLabel::x(Sign::Minus, 2)).unwrap());
    assert_eq!(rmatrix_on(&t, &x).unwrap(), rmatrix_literal(&t, &x).unwrap());
    assert_eq!(rmatrix_on(&x, &t).unwrap(), rmatrix_literal(&x, &t).unwrap());
}

#[test]
fn braiding() {
    for p in [2u32, 3] {
        let ctx = FieldCtx::get(p).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let x1 = lifted(&build(ctx, &ModuleLabel::x(sign, 1)).unwrap());
            assert!(braiding_check(&x1, &x1).unwrap().passed());
        }
    }
    let ctx = FieldCtx::get(3).unwrap();
    let one = ctx.one();
    let t = build_t(ctx, 1, Alpha::One, (&one, &one), 1).unwrap();
    let x2 = lifted(&build(ctx, &ModuleLabel::x(Sign::Plus, 2)).unwrap());
    assert!(braiding_check(&t, &x2).unwrap().passed());
    assert!(braiding_check(&x2, &t).unwrap().passed());
    let m = lifted(&build(ctx, &ModuleLabel::m(Sign::Minus, 1, 2)).unwrap());
    assert!(braiding_check(&t, &m).unwrap().passed());
}

/// `σR̄` sends `E(β) ⊗ Z` onto `Z ⊗ E(-β)` inside `T ⊗ Z → Z ⊗ T`.
#[test]
fn braiding_swaps_the_summands() {
    let ctx = FieldCtx::get(3).unwrap();
    let one = ctx.one();
    let js = jordan_split_check(ctx, 1, Alpha::One, (&one, &one), 1, &one).unwrap();
    let t = build_t(ctx, 1, Alpha::One, (&one, &one), 1).unwrap();
    let z = lifted(&build(ctx, &ModuleLabel::x(Sign::Plus, 2)).unwrap());
    let map = braiding_check(&t, &z).unwrap().map;
    // columns of Ψ⁻¹ spanning each E summand inside T
    let psi_inv = js.psi.inverse().unwrap();
    let half = t.dim() / 2;
    let plus: Vec<usize> = (0..half).collect();
    let minus: Vec<usize> = (half..t.dim()).collect();
    let rows: Vec<usize> = (0..t.dim()).collect();
    let e_plus = psi_inv.select(&rows, &plus);
    let e_minus = psi_inv.select(&rows, &minus);
    let iz = Matrix::identity(ctx, z.dim());
    let image = &map * &e_plus.kron(&iz);
    let swapped = iz.kron(&e_minus);
    let same = iz.kron(&e_plus);
    assert_eq!(swapped.hcat(&image).rank(), swapped.rank());
    assert_ne!(same.hcat(&image).rank(), same.rank());
    assert!(is_iso(&restrict_to_u(&tensor(&t, &z).unwrap()).unwrap(), &restrict_to_u(&tensor(&z, &t).unwrap()).unwrap())
        .unwrap()
        .is_iso());
}

#[test]
fn lemma_table_p3() {
    let p = 3;
    let ctx = FieldCtx::get(p).unwrap();
    let lams = [(1, 0), (0, 1), (1, 1), (1, -1)];
    let mut labels = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for s in 1..=p {
            labels.push(ModuleLabel::x(sign, s));
        }
        for s in 1..p {
            labels.push(ModuleLabel::p(sign, s));
            labels.push(ModuleLabel::m(sign, s, 2));
            labels.push(ModuleLabel::w(sign, s, 2));
            for n in 1..=2 {
                for (a, b) in lams {
                    labels.push(ModuleLabel::e(sign, s, n, ProjLinePoint::ratio(ctx, a, b).unwrap()));
                }
            }
        }
    }
    for l in labels {
        let z = build(ctx, &l).unwrap();
        let expect_lift = l.family != Family::E || l.lambda().unwrap().is_coordinate_point();
        match lift(&z).unwrap() {
            LiftOutcome::Lifted(r) => {
                assert!(expect_lift, "{l} lifted unexpectedly");
                let back = restrict_to_u(&r).unwrap();
                assert_eq!(back.e(), z.e());
                assert_eq!(back.f(), z.f());
                assert_eq!(back.k(), z.k());
            }
            LiftOutcome::NotLiftable(ob) => {
                assert!(!expect_lift, "{l}: {:?}", ob.equations());
                assert!(!ob.equations().is_empty());
            }
            LiftOutcome::Undetermined(why) => panic!("{l}: undetermined ({why})"),
        }
    }
}

#[test]
fn sums_and_tensor_products_lift() {
    let ctx = FieldCtx::get(3).unwrap();
    let a = build(ctx, &ModuleLabel::x(Sign::Plus, 2)).unwrap();
    let b = build(ctx, &ModuleLabel::m(Sign::Minus, 1, 2)).unwrap();
    let z = tensor(&a, &b).unwrap();
    let r = lifted(&z);
    assert_eq!(restrict_to_u(&r).unwrap().k(), z.k());
    // T restricted to Ū is liftable, although neither E summand is
    let one = ctx.one();
    let tu = restrict_to_u(&build_t(ctx, 1, Alpha::One, (&one, &one), 1).unwrap()).unwrap();
    assert!(matches!(lift(&tu).unwrap(), LiftOutcome::Lifted(_)));
}
