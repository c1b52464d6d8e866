//! Invariants over random exact inputs.

use bialg::catalog;
use bialg::classify::fingerprint;
use bialg::derived::{
    convolution, convolution_unit, rota_baxter_residual, ContextKind, EndoAlgebraContext, Side,
};
use bialg::tensor::{basis, evaluate_comult, evaluate_mult};
use bialg::{
    check_bundle, Bundle, BundleKind, ComultTensor, Field, LinearEndo, MultTensor, Scalar,
};
use proptest::prelude::*;

fn q(v: i64) -> Scalar {
    Field::Q.int(v)
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| &q(a) * &q(b).inv().unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(rational(), n)
}

fn endo(n: usize) -> impl Strategy<Value = LinearEndo> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |m| LinearEndo::from_ints(n, Field::Q, &m).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = LinearEndo> {
    endo(n).prop_filter("singular", |f| !f.det().is_zero())
}

fn axpy(a: &Scalar, x: &[Scalar], b: &Scalar, y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(u, v)| &(a * u) + &(b * v)).collect()
}

fn mults(n: usize) -> Vec<MultTensor> {
    catalog::mults(n)
        .iter()
        .map(|e| e.mult().unwrap().clone())
        .collect()
}

/// Every listed pair of the given dimension, as a bialgebra bundle.
fn pairs(n: usize) -> Vec<Bundle> {
    catalog::listed_pairs()
        .into_iter()
        .map(|(_, _, b)| b)
        .filter(|b| b.dim() == n)
        .collect()
}

fn contexts(n: usize) -> Vec<EndoAlgebraContext> {
    pairs(n)
        .into_iter()
        .map(|b| {
            EndoAlgebraContext::new(
                b.mults()[0].clone(),
                b.comults()[0].clone(),
                b.unit().to_vec(),
                ContextKind::Bialgebra,
            )
            .unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mult_is_bilinear(which in 0usize..5, a in rational(), b in rational(),
                        x in vector(3), y in vector(3), z in vector(3)) {
        let ms = mults(3);
        let m = &ms[which % ms.len()];
        let left = evaluate_mult(m, &axpy(&a, &x, &b, &y), &z).unwrap();
        let want = axpy(&a, &evaluate_mult(m, &x, &z).unwrap(), &b, &evaluate_mult(m, &y, &z).unwrap());
        prop_assert_eq!(left, want);
        let right = evaluate_mult(m, &z, &axpy(&a, &x, &b, &y)).unwrap();
        let want = axpy(&a, &evaluate_mult(m, &z, &x).unwrap(), &b, &evaluate_mult(m, &z, &y).unwrap());
        prop_assert_eq!(right, want);
    }

    #[test]
    fn comult_is_linear(which in 0usize..40, a in rational(), b in rational(), x in vector(3), y in vector(3)) {
        let cs = catalog::comults(3);
        let c = cs[which % cs.len()].comult().unwrap();
        let lhs = evaluate_comult(c, &axpy(&a, &x, &b, &y)).unwrap();
        let rhs = evaluate_comult(c, &x).unwrap().scale(&a).add(&evaluate_comult(c, &y).unwrap().scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transport_is_a_group_action(which in 0usize..40, f in invertible(3), g in invertible(3)) {
        let bs = pairs(3);
        let b = &bs[which % bs.len()];
        prop_assert_eq!(&b.transport(&LinearEndo::identity(3, Field::Q)).unwrap(), b);
        let stepwise = b.transport(&f).unwrap().transport(&g).unwrap();
        prop_assert_eq!(stepwise, b.transport(&g.compose(&f).unwrap()).unwrap());
        prop_assert_eq!(&b.transport(&f).unwrap().transport(&f.inverse().unwrap()).unwrap(), b);
    }

    #[test]
    fn transport_preserves_verdict_and_fingerprint(which in 0usize..40, f in invertible(3)) {
        let bs = pairs(3);
        let b = &bs[which % bs.len()];
        let t = b.transport(&f).unwrap();
        prop_assert!(check_bundle(&t).unwrap().passed);
        prop_assert_eq!(fingerprint(&t), fingerprint(b));
    }

    #[test]
    fn transport_preserves_failure(which in 0usize..5, f in invertible(3)) {
        // μ2 paired with a μ1 comultiplication is never a bialgebra.
        let ms = mults(3);
        let b = Bundle::pair(BundleKind::Bialgebra, ms[which % ms.len()].clone(),
                             catalog::get_comult("delta_1_1_3").unwrap()).unwrap();
        let before = check_bundle(&b).unwrap().passed;
        prop_assert_eq!(check_bundle(&b.transport(&f).unwrap()).unwrap().passed, before);
    }

    #[test]
    fn op_cop_is_an_involution_and_preserves_verdicts(which in 0usize..40, f in invertible(3)) {
        let bs = pairs(3);
        let b = bs[which % bs.len()].transport(&f).unwrap();
        prop_assert_eq!(&b.op_cop().op_cop(), &b);
        prop_assert!(check_bundle(&b.op_cop()).unwrap().passed);
        let fp = fingerprint(&b.op_cop());
        prop_assert_eq!(fp, fingerprint(&b));
    }

    #[test]
    fn convolution_is_bilinear_associative_and_unital(which in 0usize..40, a in rational(),
            f in endo(3), g in endo(3), h in endo(3)) {
        let cs = contexts(3);
        let ctx = &cs[which % cs.len()];
        let fg = convolution(ctx, &f, &g).unwrap();
        prop_assert_eq!(convolution(ctx, &fg, &h).unwrap(),
                        convolution(ctx, &f, &convolution(ctx, &g, &h).unwrap()).unwrap());
        let lin = convolution(ctx, &f.scale(&a).add(&h).unwrap(), &g).unwrap();
        prop_assert_eq!(lin, fg.scale(&a).add(&convolution(ctx, &h, &g).unwrap()).unwrap());
        let u = convolution_unit(ctx);
        prop_assert_eq!(&convolution(ctx, &u, &f).unwrap(), &f);
        prop_assert_eq!(&convolution(ctx, &f, &u).unwrap(), &f);
    }

    #[test]
    fn rota_baxter_residual_is_bilinear(which in 0usize..40, left in any::<bool>(), a in rational(),
            f in endo(3), g in endo(3), h in endo(3)) {
        let cs = contexts(3);
        let ctx = &cs[which % cs.len()];
        let side = if left { Side::Left } else { Side::Right };
        let r = |x: &LinearEndo, y: &LinearEndo| rota_baxter_residual(ctx, side, x, y).unwrap();
        let combo = g.scale(&a).add(&h).unwrap();
        prop_assert_eq!(r(&f, &combo), r(&f, &g).scale(&a).add(&r(&f, &h)).unwrap());
        prop_assert_eq!(r(&combo, &f), r(&g, &f).scale(&a).add(&r(&h, &f)).unwrap());
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    #[test]
    fn prime_field_laws(pi in 0usize..6, a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let p = [2u32, 3, 5, 7, 11, 13][pi];
        let f = Field::fp(p).unwrap();
        let (x, y, z) = (f.int(a), f.int(b), f.int(c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &y, -&(&y - &x));
        prop_assert_eq!(f.int(a * b), &x * &y);
        prop_assert_eq!(q(a).to_field(f).unwrap(), x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn frozen_transport() {
    let m = catalog::get_mult("mu1_2").unwrap();
    let c = catalog::get_comult("delta_1_3_2").unwrap();
    let b = Bundle::pair(BundleKind::Bialgebra, m, c).unwrap();
    let f = LinearEndo::from_ints(2, Field::Q, &[1, 0, 0, -1]).unwrap();
    let t = b.transport(&f).unwrap();
    let e2 = basis(Field::Q, 2, 1);
    assert_eq!(
        evaluate_mult(&t.mults()[0], &e2, &e2).unwrap(),
        vec![q(0), q(-1)]
    );
    let d = evaluate_comult(&t.comults()[0], &e2).unwrap();
    assert_eq!(d.coeffs(), &[q(0), q(1), q(1), q(1)][..]);
    assert_eq!(t.comults()[0].counit(), &[q(1), q(0)][..]);
    assert_eq!(t.unit(), &[q(1), q(0)][..]);
    assert!(check_bundle(&t).unwrap().passed);
}

#[test]
fn transport_rejects_singular_and_mismatched_maps() {
    let b = pairs(2).remove(0);
    assert!(b.transport(&LinearEndo::zero(2, Field::Q)).is_err());
    assert!(b.transport(&LinearEndo::identity(3, Field::Q)).is_err());
    assert!(b
        .transport(&LinearEndo::identity(2, Field::fp(3).unwrap()))
        .is_err());
}

#[test]
fn comult_tensor_rejects_wrong_counit_length() {
    let c = ComultTensor::zero(2, Field::Q).unwrap();
    assert!(c.with_counit(vec![q(1)]).is_err());
}
