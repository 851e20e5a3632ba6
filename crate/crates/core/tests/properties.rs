use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use drg_resistance::arrays::{derive_layers, validate, IntersectionArray};
use drg_resistance::bounds::srg::{sign_with_sqrt2, SrgParameters};
use drg_resistance::bounds::{full_report, screen, srg_eigenvalues, ScreenResult};
use drg_resistance::exact::{rational, render_decimal};
use drg_resistance::oracle::{ConcreteGraph, Family, Oracle, DEFAULT_MAX_N};
use drg_resistance::potentials::{phi_closed_form, phi_recursive, resistances};

/// Families whose arrays are known to be realised, at array level only.
fn known_array() -> impl Strategy<Value = IntersectionArray> {
    prop_oneof![
        (1u64..10, 2u64..7).prop_map(|(d, q)| Family::Hamming { d, q }.claimed_array()),
        (2u64..24)
            .prop_flat_map(|n| (Just(n), 1..n))
            .prop_map(|(n, e)| Family::Johnson { n, e }.claimed_array()),
        (3u64..60).prop_map(|n| Family::Cycle { n }.claimed_array()),
        (2u64..8, 2u64..8).prop_map(|(m, t)| Family::CompleteMultipartite { m, t }.claimed_array()),
        (2u64..40).prop_map(|n| Family::Complete { n }.claimed_array()),
    ]
}

fn small_graph() -> impl Strategy<Value = Family> {
    prop_oneof![
        (2u64..9).prop_map(|n| Family::Complete { n }),
        (3u64..13).prop_map(|n| Family::Cycle { n }),
        (1u64..5).prop_map(|d| Family::Hypercube { d }),
        (2u64..4, 1u64..4).prop_map(|(m, t)| Family::CompleteMultipartite { m, t }),
        (4u64..7).prop_map(|n| Family::Johnson { n, e: 2 }),
        (1u64..3, 2u64..4).prop_map(|(d, q)| Family::Hamming { d, q }),
        Just(Family::Petersen),
    ]
}

fn arbitrary_array() -> impl Strategy<Value = IntersectionArray> {
    (1usize..6)
        .prop_flat_map(|d| {
            (
                prop::collection::vec(1u64..7, d),
                prop::collection::vec(1u64..7, d),
            )
        })
        .prop_map(|(b, c)| IntersectionArray::new(b, c).expect("positive entries"))
}

proptest! {
    #[test]
    fn closed_form_matches_recursion(arr in known_array()) {
        let phi = phi_recursive(&arr).unwrap();
        for (i, value) in phi.values().iter().enumerate() {
            prop_assert_eq!(&phi_closed_form(&arr, i).unwrap(), value);
        }
    }

    #[test]
    fn potentials_decrease_and_resistances_increase(arr in known_array()) {
        let phi = phi_recursive(&arr).unwrap();
        prop_assert!(phi.values().windows(2).all(|w| w[1] < w[0]));
        let d = resistances(&phi);
        prop_assert!(d.d.windows(2).all(|w| w[0] < w[1]));
        if arr.valency() >= 3 {
            prop_assert!(d.below_potential_bound);
            prop_assert!(d.below_valency_bound);
        }
    }

    #[test]
    fn known_families_have_no_binding_failures(arr in known_array()) {
        prop_assert!(validate(&arr).is_feasible());
        let report = full_report(&phi_recursive(&arr).unwrap());
        let failures: Vec<String> = report.binding_failures().map(|c| c.to_string()).collect();
        prop_assert!(failures.is_empty(), "{}: {:?}", arr, failures);
        prop_assert_eq!(report.anomalies().count(), 0);
    }

    #[test]
    fn screen_commutes_with_permutation(
        arrays in prop::collection::vec(arbitrary_array(), 0..12),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order: Vec<usize> = (0..arrays.len()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));

        let direct: Vec<ScreenResult> = screen(arrays.iter().cloned().map(Ok)).collect();
        let permuted: Vec<ScreenResult> =
            screen(order.iter().map(|&i| Ok(arrays[i].clone()))).collect();
        for (pos, &i) in order.iter().enumerate() {
            prop_assert_eq!(&permuted[pos], &direct[i]);
        }
    }

    #[test]
    fn array_text_round_trips(arr in arbitrary_array()) {
        let text = arr.to_string();
        prop_assert_eq!(text.parse::<IntersectionArray>().unwrap(), arr.clone());
        let json = serde_json::to_string(&arr).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntersectionArray>(&json).unwrap(), arr);
    }

    #[test]
    fn layer_sizes_satisfy_the_recurrence(arr in known_array()) {
        let layers = derive_layers(&arr).unwrap();
        for i in 1..arr.diameter() {
            let lhs = &layers.sizes[i] * BigInt::from(arr.b(i));
            let rhs = &layers.sizes[i + 1] * BigInt::from(arr.c(i + 1));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rendering_is_within_half_an_ulp(n in -100_000i64..100_000, d in 1i64..10_000, digits in 0usize..8) {
        let q = rational(n, d);
        let text = render_decimal(&q, digits);
        let (int_part, frac) = text.split_once('.').unwrap();
        let negative = int_part.starts_with('-');
        let digits_str = format!("{}{}", int_part.trim_start_matches('-'), frac);
        let mut value = BigRational::new(digits_str.parse::<BigInt>().unwrap(), BigInt::from(10u32).pow(frac.len() as u32));
        if negative {
            value = -value;
        }
        let half_ulp = BigRational::new(BigInt::from(1), BigInt::from(2) * BigInt::from(10u32).pow(digits as u32));
        let diff = if value > q { &value - &q } else { &q - &value };
        prop_assert!(diff <= half_ulp, "{} rendered {}", q, text);
    }

    #[test]
    fn sqrt2_sign_matches_floats(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let exact = sign_with_sqrt2(&BigInt::from(a), &BigInt::from(b));
        let approx = a as f64 + b as f64 * std::f64::consts::SQRT_2;
        if approx.abs() > 1e-6 {
            prop_assert_eq!(exact, approx.partial_cmp(&0.0).unwrap());
        }
    }

    #[test]
    fn srg_eigenvalue_identities(v in 5u64..80, k in 2u64..40, a1 in 0u64..38, c2 in 1u64..40) {
        if let Ok(p) = SrgParameters::new(v, k, a1, c2) {
            let e = srg_eigenvalues(&p);
            prop_assert!(e.product_identity && e.sum_identity, "{}", p);
            prop_assert!(e.theta1.to_f64() > e.theta2.to_f64());
        }
    }

    #[test]
    fn resistance_is_a_metric(fam in small_graph(), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let g = ConcreteGraph::build(fam, DEFAULT_MAX_N).unwrap();
        let o = Oracle::new(&g).unwrap();
        let n = g.order();
        let (u, v, w) = (picks[0].index(n), picks[1].index(n), picks[2].index(n));
        let r = |x, y| o.effective_resistance(x, y).unwrap();
        prop_assert_eq!(r(u, v), r(v, u));
        prop_assert!(r(u, w) <= r(u, v) + r(v, w));
        prop_assert_eq!(r(u, u), rational(0, 1));
    }

    #[test]
    fn grounding_choice_is_irrelevant(fam in small_graph(), ground in any::<prop::sample::Index>(), pair in any::<(prop::sample::Index, prop::sample::Index)>()) {
        let g = ConcreteGraph::build(fam, DEFAULT_MAX_N).unwrap();
        let n = g.order();
        let a = Oracle::new(&g).unwrap();
        let b = Oracle::with_ground(&g, ground.index(n)).unwrap();
        let (u, v) = (pair.0.index(n), pair.1.index(n));
        prop_assert_eq!(a.effective_resistance(u, v).unwrap(), b.effective_resistance(u, v).unwrap());
    }
}

#[test]
fn dodecahedron_resistances_are_vertex_transitive() {
    let g = ConcreteGraph::build(Family::Dodecahedron, DEFAULT_MAX_N).unwrap();
    let o = Oracle::new(&g).unwrap();
    let profile = |u: usize| {
        let mut row: Vec<_> = (0..g.order()).map(|v| o.effective_resistance(u, v).unwrap()).collect();
        row.sort();
        row
    };
    let first = profile(0);
    for u in 1..g.order() {
        assert_eq!(profile(u), first, "vertex {u}");
    }
}
