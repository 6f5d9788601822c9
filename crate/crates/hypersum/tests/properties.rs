//! Randomized structural properties of the core arithmetic.

use num_traits::One;
use proptest::prelude::*;

use hypersum::closed_forms::f32_even;
use hypersum::exact::series::TruncatedSeries;
use hypersum::exact::{pochhammer, rat, ratio, Rational};
use hypersum::hyper::HyperSpec;
use hypersum::km::{
    km_coefficients_hyper, km_coefficients_stirling, sigma_coefficients, KMFamily,
};

fn small_rational() -> impl Strategy<Value = Rational> {
    (1i64..40, 1i64..6).prop_map(|(p, q)| ratio(p, q))
}

fn small_series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-20i64..20, 1i64..5).prop_map(|(p, q)| ratio(p, q)), 1..8)
        .prop_map(TruncatedSeries::from_coeffs)
}

proptest! {
    #[test]
    fn pochhammer_recurrence(a in small_rational(), n in 0u64..20) {
        let lhs = pochhammer(&a, n + 1);
        let rhs = pochhammer(&a, n) * (&a + rat(n as i64));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pochhammer_splits_at_midpoint(a in small_rational(), n in 0u64..12, m in 0u64..12) {
        // (a)_{n+m} = (a)_n (a+n)_m
        let lhs = pochhammer(&a, n + m);
        let rhs = pochhammer(&a, n) * pochhammer(&(&a + rat(n as i64)), m);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_multiplication_distributes(f in small_series(), g in small_series(), h in small_series()) {
        let lhs = &(&f + &g) * &h;
        let rhs = &(&f * &h) + &(&g * &h);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_multiplication_commutes(f in small_series(), g in small_series()) {
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn terminating_sum_ignores_parameter_order(
        a in small_rational(),
        b in small_rational(),
        c in small_rational(),
        e in small_rational(),
        n in 0i64..8,
        z in (-6i64..=6, 1i64..4).prop_map(|(p, q)| ratio(p, q)),
    ) {
        let forward = HyperSpec::new(vec![rat(-n), a.clone(), b.clone()], vec![c.clone(), e.clone()]).unwrap();
        let shuffled = HyperSpec::new(vec![b, rat(-n), a], vec![e, c]).unwrap();
        prop_assert_eq!(forward.eval_terminating(&z).unwrap(), shuffled.eval_terminating(&z).unwrap());
    }

    #[test]
    fn even_argument2_sum_is_d_free(
        n in 0u64..6,
        a in small_rational(),
        d1 in small_rational(),
        d2 in small_rational(),
    ) {
        prop_assert_eq!(f32_even(n, &a, &d1).unwrap(), f32_even(n, &a, &d2).unwrap());
    }

    #[test]
    fn sigma_coefficients_interpolate_the_product(
        d in small_rational(),
        m in 1u32..5,
        x in 0i64..10,
    ) {
        let family = KMFamily::single(d.clone(), m).unwrap();
        let sigma = sigma_coefficients(&family);
        let direct = pochhammer(&(&d + rat(x)), m as u64);
        let horner: Rational = sigma
            .iter()
            .enumerate()
            .map(|(j, s)| s * rat(x).pow(j as i32))
            .sum();
        prop_assert_eq!(direct, horner);
    }

    #[test]
    fn coefficient_routes_agree(
        d1 in small_rational(),
        m1 in 1u32..4,
        d2 in small_rational(),
        m2 in 1u32..4,
    ) {
        let family = KMFamily::new(vec![(d1, m1), (d2, m2)]).unwrap();
        let stirling = km_coefficients_stirling(&family);
        let hyper = km_coefficients_hyper(&family).unwrap();
        for k in 0..=family.total_m() as usize {
            prop_assert_eq!(stirling.coeff(k), hyper.coeff(k));
        }
        prop_assert_eq!(stirling.coeff(0), &Rational::one());
    }
}
