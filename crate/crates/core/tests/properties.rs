use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use roquette::curve::{ActionTable, RoquetteCurve};
use roquette::ff::Field;
use roquette::group::{GroupElement, RoquetteGroup};
use roquette::jacobian::{act_on_class, Jacobian};
use roquette::report::{emit_json, run_pipeline, Options, VerificationReport};

fn group5() -> &'static Arc<RoquetteGroup> {
    static G: OnceLock<Arc<RoquetteGroup>> = OnceLock::new();
    G.get_or_init(|| RoquetteGroup::enumerate(5).unwrap())
}

fn table5() -> &'static ActionTable {
    static T: OnceLock<ActionTable> = OnceLock::new();
    T.get_or_init(|| {
        let curve = RoquetteCurve::new(5, 4).unwrap();
        ActionTable::build(&curve, group5(), curve.points()).unwrap()
    })
}

fn field_params() -> impl Strategy<Value = (u64, usize)> {
    (prop::sample::select(vec![5u64, 7, 11, 13, 65521]), 1usize..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms((p, k) in field_params(), a in any::<u128>(), b in any::<u128>(), c in any::<u128>()) {
        let f = Field::new(p, k).unwrap();
        let q = f.order();
        let (a, b, c) = (f.element_at(a % q), f.element_at(b % q), f.element_at(c % q));
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, f.zero());
        if !a.is_zero() {
            prop_assert_eq!(a * a.inv().unwrap(), f.one());
            prop_assert_eq!(a.pow(q - 1), f.one());
        }
        prop_assert_eq!(a.pow(q), a);
    }

    #[test]
    fn square_roots_square_back((p, k) in field_params(), a in any::<u128>()) {
        let f = Field::new(p, k).unwrap();
        let a = f.element_at(a % f.order());
        let sq = a * a;
        let r = sq.sqrt().unwrap();
        prop_assert_eq!(r * r, sq);
        prop_assert!(r <= -r);
    }

    #[test]
    fn group_axioms(i in 0usize..240, j in 0usize..240, k in 0usize..240) {
        let els = group5().elements();
        let (a, b, c) = (els[i], els[j], els[k]);
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.mul(&a.inv()).unwrap().is_identity());
        prop_assert_eq!(a.mul(&group5().identity()).unwrap(), a);
        prop_assert!(group5().index_of(&a.mul(&b).unwrap()).is_some());
    }

    #[test]
    fn normal_form_is_idempotent(i in 0usize..240, mu in 1u32..5) {
        let g = group5().elements()[i];
        let f2 = Field::new(5, 2).unwrap();
        prop_assert_eq!(GroupElement::new(g.matrix(), g.lambda()).unwrap(), g);
        // (mu I, (mu|5) mu) lies in the kernel
        let sign = if mu == 1 || mu == 4 { 1 } else { -1 };
        let scaled = GroupElement::new(g.matrix().map(|v| v * mu % 5), f2.from_int(sign * mu as i64) * g.lambda());
        prop_assert_eq!(scaled.unwrap(), g);
    }

    #[test]
    fn action_law(i in 0usize..240, j in 0usize..240) {
        let (left, _) = table5().composition_orders(group5(), std::iter::once((i, j)));
        prop_assert!(left);
    }

    #[test]
    fn action_preserves_the_curve(i in 0usize..240, pt in 0usize..1000) {
        let curve = RoquetteCurve::new(5, 4).unwrap();
        let t = table5();
        let pt = &t.points[pt % t.points.len()];
        let img = curve.act(&group5().elements()[i], pt).unwrap();
        prop_assert!(curve.is_on_curve(&img));
    }

    #[test]
    fn cantor_group_laws(seed in any::<u64>(), p in prop::sample::select(vec![5u64, 7, 11])) {
        let jac = Jacobian::new(p, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = jac.random_divisor(&mut rng).unwrap();
        let b = jac.random_divisor(&mut rng).unwrap();
        let c = jac.random_divisor(&mut rng).unwrap();
        let ab = jac.add(&a, &b).unwrap();
        prop_assert!(jac.is_valid(&ab));
        prop_assert_eq!(&ab, &jac.add(&b, &a).unwrap());
        prop_assert_eq!(jac.add(&ab, &c).unwrap(), jac.add(&a, &jac.add(&b, &c).unwrap()).unwrap());
        prop_assert!(jac.add(&a, &jac.neg(&a)).unwrap().is_zero());
        let two_a = jac.add(&ab, &jac.sub(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(jac.scalar_mul_u64(3, &a).unwrap(), jac.add(&two_a, &a).unwrap());
    }

    #[test]
    fn class_action_is_a_homomorphism(seed in any::<u64>(), i in 0usize..240, j in 0usize..240) {
        let jac = Jacobian::new(5, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = jac.random_divisor(&mut rng).unwrap();
        let (g, h) = (group5().elements()[i], group5().elements()[j]);
        let lhs = act_on_class(&jac, &g.mul(&h).unwrap(), &d).unwrap();
        let rhs = act_on_class(&jac, &g, &act_on_class(&jac, &h, &d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn json_is_deterministic_and_round_trips(seed in any::<u64>()) {
        let opts = Options { ells: Some(vec![3]), seed, ..Options::default() };
        let a = run_pipeline(5, &opts).unwrap();
        let b = run_pipeline(5, &opts).unwrap();
        let ja = emit_json(&a);
        prop_assert_eq!(&ja, &emit_json(&b));
        let back: VerificationReport = serde_json::from_str(&ja).unwrap();
        prop_assert_eq!(emit_json(&back), ja);
    }
}
