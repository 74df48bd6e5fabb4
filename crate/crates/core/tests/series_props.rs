use proptest::prelude::*;
use typeb_core::{ratio, Rational, Series};

const ORDER: usize = 7;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn series_with(constant: Option<i64>) -> impl Strategy<Value = Series> {
    proptest::collection::vec(small_rational(), ORDER + 1).prop_map(move |mut cs| {
        if let Some(c) = constant {
            cs[0] = ratio(c, 1);
        }
        Series::from_coeffs(cs)
    })
}

fn unit_series() -> impl Strategy<Value = Series> {
    series_with(Some(1))
}

fn nilpotent_series() -> impl Strategy<Value = Series> {
    series_with(Some(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exp_inverts_log(s in unit_series()) {
        prop_assert_eq!(s.log1().unwrap().exp0().unwrap(), s);
    }

    #[test]
    fn log_inverts_exp(t in nilpotent_series()) {
        prop_assert_eq!(t.exp0().unwrap().log1().unwrap(), t);
    }

    #[test]
    fn product_commutes_and_associates(a in series_with(None), b in series_with(None), c in series_with(None)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn division_inverts_product(a in series_with(None), b in unit_series()) {
        let q = (&a * &b).div(&b).unwrap();
        prop_assert_eq!(&q, &a);
        prop_assert_eq!(&a.div(&b).unwrap() * &b, a);
    }

    #[test]
    fn division_after_common_power(a in series_with(None), b in unit_series(), v in 1usize..3) {
        let num = (&a * &b).shift_up(v);
        let den = b.shift_up(v);
        let q = num.div(&den).unwrap();
        prop_assert_eq!(q.order(), ORDER);
        prop_assert_eq!(q, a);
    }

    #[test]
    fn powers_add(s in unit_series(), a in small_rational(), b in small_rational()) {
        let lhs = s.pow(&(&a + &b)).unwrap();
        let rhs = &s.pow(&a).unwrap() * &s.pow(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integer_powers_match_repeated_products(s in unit_series(), k in 0u32..5) {
        prop_assert_eq!(s.pow(&ratio(k as i64, 1)).unwrap(), s.powi(k));
    }

    #[test]
    fn composition_associates(f in series_with(None), g in nilpotent_series(), h in nilpotent_series()) {
        let left = f.compose(&g.compose(&h).unwrap()).unwrap();
        let right = f.compose(&g).unwrap().compose(&h).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn egf_round_trip(s in series_with(None)) {
        prop_assert_eq!(Series::from_egf(&s.egf_sequence()), s);
    }
}
