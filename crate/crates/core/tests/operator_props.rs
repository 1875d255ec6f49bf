mod common;

use appell_core::json::{poly_from_json, poly_to_json, PolyJson};
use appell_core::MVPoly;
use common::{dim_field, poly};
use proptest::prelude::*;

fn dirac_pair() -> impl Strategy<Value = MVPoly> {
    dim_field().prop_flat_map(|(m, f)| poly(m, f, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dirac_splits_into_raising_and_lowering(p in dirac_pair()) {
        prop_assert_eq!(&p.dirac_plus() + &p.dirac_minus(), p.dirac());
    }

    #[test]
    fn dirac_squares_to_minus_laplacian(p in dirac_pair()) {
        prop_assert_eq!(p.dirac().dirac(), -&p.laplacian());
    }

    #[test]
    fn vector_variable_multiplication_splits(p in dirac_pair()) {
        prop_assert_eq!(&p.x_wedge() + &p.x_dot(), p.x_mul());
    }

    #[test]
    fn raising_and_lowering_shift_grade(p in dirac_pair(), s in 0usize..=5) {
        let s = s.min(p.dim());
        let q = p.grade_project(s).unwrap();
        let up = q.dirac_plus();
        let down = q.dirac_minus();
        prop_assert!(up.is_zero() || up.is_grade(s + 1));
        prop_assert!(down.is_zero() || (s > 0 && down.is_grade(s - 1)));
        let xw = q.x_wedge();
        prop_assert!(xw.is_zero() || xw.is_grade(s + 1));
    }

    #[test]
    fn reflections_are_involutions(p in dirac_pair(), i in 1usize..=5) {
        let i = i.min(p.dim());
        let twice = p.h_action_generator(i).unwrap().h_action_generator(i).unwrap();
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn reflections_commute_with_dirac(p in dirac_pair(), i in 1usize..=5) {
        let i = i.min(p.dim());
        let lhs = p.h_action_generator(i).unwrap().dirac();
        let rhs = p.dirac().h_action_generator(i).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(p in dirac_pair()) {
        let text = serde_json::to_string(&poly_to_json(&p)).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(poly_from_json(&back).unwrap(), p.clone());
        let direct: MVPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(direct, p);
    }
}
