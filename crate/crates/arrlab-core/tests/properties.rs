//! Property-based suites over the exact arithmetic, lattice, and
//! geometry layers.

use num::BigInt;
use proptest::prelude::*;

use arrlab_core::exact::{poly_roots_quadratic, Poly, QuadExt, Rational};
use arrlab_core::geometry::{
    apply_transform, conjugate_arrangement, incidence_of, random_rational_arrangement,
    ProjTransform,
};
use arrlab_core::lattice::{find_isomorphism, profile_of};

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Strategy: a field discriminant and elements of that field.
fn field_d() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![-3i64, -1, 2, 3, 5, -7, 13])
}

fn quadext(d: i64) -> impl Strategy<Value = QuadExt> {
    ((-50i64..=50, 1i64..=15), (-50i64..=50, 1i64..=15)).prop_map(move |(a, b)| {
        QuadExt::new(rational(a.0, a.1), rational(b.0, b.1), d).unwrap()
    })
}

fn triple(d: i64) -> impl Strategy<Value = (QuadExt, QuadExt, QuadExt)> {
    (quadext(d), quadext(d), quadext(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms((a, b, c) in field_d().prop_flat_map(triple)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QuadExt::from_int(0));
        if !a.is_zero() {
            prop_assert_eq!(&(&b / &a) * &a, b);
            prop_assert_eq!(&a / &a, QuadExt::from_int(1));
        }
    }

    #[test]
    fn conjugation_is_a_field_automorphism((a, b, _) in field_d().prop_flat_map(triple)) {
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!((&b / &a).conjugate(), &b.conjugate() / &a.conjugate());
        }
        // The norm a * conj(a) is rational.
        prop_assert!((&a * &a.conjugate()).radical_part().numer() == &BigInt::from(0));
    }

    #[test]
    fn quadratic_roots_expand_back(
        p in -40i64..=40, q in -40i64..=40, lead in prop::sample::select(vec![1i64, 2, -3])
    ) {
        // lead * (x - p)(x - q) must report exactly the rational roots p, q.
        let poly = Poly::new(vec![
            QuadExt::from_int(lead * p * q),
            QuadExt::from_int(-lead * (p + q)),
            QuadExt::from_int(lead),
        ]);
        let (roots, d) = poly_roots_quadratic(&poly).unwrap();
        prop_assert_eq!(d, 1);
        let mut got: Vec<QuadExt> = roots.into_iter().map(|(r, _)| r).collect();
        let mut want = vec![QuadExt::from_int(p), QuadExt::from_int(q)];
        got.sort_by(|x, y| format!("{x}").cmp(&format!("{y}")));
        want.sort_by(|x, y| format!("{x}").cmp(&format!("{y}")));
        want.dedup();
        got.dedup();
        prop_assert_eq!(got, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn iso_witnesses_validate_and_relabeling_is_invisible(
        seed in 0u64..5_000, perm_seed in 0u64..1_000_000
    ) {
        let s = incidence_of(&random_rational_arrangement(9, seed));
        // Fisher-Yates from the auxiliary seed.
        let mut perm: Vec<usize> = (0..9).collect();
        let mut state = perm_seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        for i in (1..9).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = s.relabel(&perm).unwrap();
        let iso = find_isomorphism(&s, &relabeled);
        prop_assert!(iso.is_some(), "relabeled lattice must be isomorphic");
        prop_assert!(iso.unwrap().validates(&s, &relabeled));
        prop_assert_eq!(profile_of(&s).unwrap(), profile_of(&relabeled).unwrap());
    }

    #[test]
    fn transforms_and_conjugation_preserve_incidence(
        seed in 0u64..5_000,
        m in prop::sample::select(vec![
            [[2i64, 1, 0], [0, 1, 1], [1, 0, 3]],
            [[1, 0, 0], [5, 1, 0], [0, -2, 1]],
            [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
            [[3, -1, 2], [1, 1, 0], [0, 2, 1]],
        ])
    ) {
        let arr = random_rational_arrangement(8, seed);
        let t = ProjTransform::from_ints(m).unwrap();
        let mapped = apply_transform(&arr, &t).unwrap();
        prop_assert_eq!(incidence_of(&mapped), incidence_of(&arr));
        let conj = conjugate_arrangement(&arr);
        prop_assert_eq!(incidence_of(&conj), incidence_of(&arr));
    }
}
