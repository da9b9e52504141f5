use alia::exactmath::Field;
use alia::funring::{
    jordan_eval, mobius_pullback, taylor_jet, Mobius, PoleRationalFunction, Poly, RationalFunction, SpherePoint,
};
use alia::Scalar;
use proptest::prelude::*;

fn poles() -> Vec<SpherePoint> {
    vec![
        SpherePoint::Infinity,
        SpherePoint::Finite(Scalar::int(1)),
        SpherePoint::Finite(Scalar::zeta(3)),
    ]
}

// Functions in the ring generated by z, 1/(z-1), 1/(z-ζ3).
fn func() -> impl Strategy<Value = PoleRationalFunction> {
    (prop::collection::vec(-3i64..=3, 1..4), 0usize..3, 0usize..2, -2i64..=2).prop_map(|(c, k1, k2, s)| {
        let p = Poly::new(c.into_iter().map(Scalar::int).collect());
        let f = RationalFunction::polynomial(p)
            .mul(&RationalFunction::linear_power(&Scalar::int(1), -(k1 as i64)))
            .mul(&RationalFunction::linear_power(&Scalar::zeta(3), -(k2 as i64)))
            .scale(&Scalar::zeta(3).pow(s).unwrap());
        PoleRationalFunction::new(f, poles()).unwrap()
    })
}

fn point() -> impl Strategy<Value = SpherePoint> {
    prop_oneof![
        Just(SpherePoint::Finite(Scalar::int(0))),
        Just(SpherePoint::Finite(Scalar::ratio(-1, 2))),
        Just(SpherePoint::Finite(Scalar::zeta(4))),
    ]
}

fn mobius() -> impl Strategy<Value = Mobius> {
    (prop::collection::vec(-3i64..=3, 4), 0i64..6).prop_filter_map("singular", |(v, k)| {
        Mobius::new(
            Scalar::int(v[0]).mul_ref(&Scalar::zeta_pow(6, k)),
            Scalar::int(v[1]),
            Scalar::int(v[2]),
            Scalar::int(v[3]),
        )
        .ok()
    })
}

proptest! {
    #[test]
    fn jordan_eval_is_a_ring_map(f in func(), g in func(), x in point(), m in 1usize..5) {
        let a = jordan_eval(&f, &x, m).unwrap();
        let b = jordan_eval(&g, &x, m).unwrap();
        prop_assert_eq!(jordan_eval(&f.add(&g), &x, m).unwrap(), a.add(&b));
        prop_assert_eq!(jordan_eval(&f.mul(&g), &x, m).unwrap(), a.mul(&b));
    }

    #[test]
    fn jets_convolve(f in func(), g in func(), x in point(), m in 1usize..6) {
        let jf = taylor_jet(&f, &x, m).unwrap();
        let jg = taylor_jet(&g, &x, m).unwrap();
        prop_assert_eq!(taylor_jet(&f.mul(&g), &x, m).unwrap(), jf.mul(&jg));
    }

    #[test]
    fn pullback_is_an_action(f in func(), g1 in mobius(), g2 in mobius()) {
        let lhs = mobius_pullback(&f, &g1.compose(&g2).to_matrix()).unwrap();
        let rhs = mobius_pullback(&mobius_pullback(&f, &g2.to_matrix()).unwrap(), &g1.to_matrix()).unwrap();
        prop_assert_eq!(lhs.function(), rhs.function());
        let id = mobius_pullback(&f, &Mobius::identity().to_matrix()).unwrap();
        prop_assert_eq!(id, f);
    }

    #[test]
    fn text_round_trips(f in func()) {
        let s = f.to_string();
        let back = PoleRationalFunction::parse(&s, poles()).unwrap();
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(back, f);
    }
}
