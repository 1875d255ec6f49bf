mod common;

use appell_core::{Blade, Multivector};
use common::{dim_field, multivector, vector};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_is_an_involutive_anti_automorphism(
        (a, b) in dim_field().prop_flat_map(|(m, f)| (multivector(m, f), multivector(m, f)))
    ) {
        prop_assert_eq!(a.clifford_conjugate().clifford_conjugate(), a.clone());
        let ab = &a * &b;
        prop_assert_eq!(ab.clifford_conjugate(), &b.clifford_conjugate() * &a.clifford_conjugate());
    }

    #[test]
    fn conjugate_norm_is_positive(a in dim_field().prop_flat_map(|(m, f)| multivector(m, f))) {
        let n = (&a.clifford_conjugate() * &a).scalar_part();
        if a.is_zero() {
            prop_assert!(n.is_zero());
        } else {
            prop_assert!(n.is_positive_real(), "norm {n} of {a:?}");
        }
    }

    #[test]
    fn vector_product_splits(
        (u, v) in dim_field().prop_flat_map(|(m, f)| (vector(m, f), multivector(m, f)))
    ) {
        let w = Multivector::wedge_by_vector(&u, &v).unwrap();
        let d = Multivector::dot_by_vector(&u, &v).unwrap();
        prop_assert_eq!(&u * &v, &w + &d);
        for s in v.grades() {
            let vs = v.grade_project(s).unwrap();
            let ws = Multivector::wedge_by_vector(&u, &vs).unwrap();
            let ds = Multivector::dot_by_vector(&u, &vs).unwrap();
            prop_assert!(ws.is_zero() || ws.is_grade(s + 1));
            prop_assert!(ds.is_zero() || (s > 0 && ds.is_grade(s - 1)));
        }
    }

    #[test]
    fn product_is_associative(
        (a, b, c) in dim_field().prop_flat_map(|(m, f)| (multivector(m, f), multivector(m, f), multivector(m, f)))
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn basis_vectors_square_to_minus_one(i in 1usize..=8, j in 1usize..=8) {
        let (s, b) = Blade::vector(i).product(Blade::vector(j));
        if i == j {
            prop_assert_eq!((s, b), (-1, Blade::SCALAR));
        } else {
            let (t, c) = Blade::vector(j).product(Blade::vector(i));
            prop_assert_eq!(b, c);
            prop_assert_eq!(s, -t);
        }
    }
}
