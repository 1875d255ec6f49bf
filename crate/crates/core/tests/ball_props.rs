mod common;

use appell_core::ball::{gram_matrix, l2_inner_product, monomial_ball_integral};
use appell_core::basis::hdr_basis;
use appell_core::scalar::rational;
use appell_core::{Field, MVPoly};
use common::{field, poly};
use num_traits::Zero;
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = (MVPoly, MVPoly)> {
    (2usize..=4, field()).prop_flat_map(|(m, f)| (poly(m, f, 3), poly(m, f, 3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inner_product_is_hermitian((f, g) in pair()) {
        let fg = l2_inner_product(&f, &g).unwrap().value;
        let gf = l2_inner_product(&g, &f).unwrap().value;
        prop_assert_eq!(fg, gf.conj());
    }

    #[test]
    fn norm_is_positive((f, _g) in pair()) {
        let n = l2_inner_product(&f, &f).unwrap().value;
        let ok = if f.is_zero() { n.is_zero() } else { n.is_positive_real() };
        prop_assert!(ok, "norm {}", n);
    }

    #[test]
    fn different_degrees_are_orthogonal_for_harmonic_solutions(k1 in 0u32..3, k2 in 0u32..3, i in 0usize..5, j in 0usize..5) {
        prop_assume!(k1 != k2);
        let a = hdr_basis(1, 3, k1, Field::Real).unwrap();
        let b = hdr_basis(1, 3, k2, Field::Real).unwrap();
        let (f, g) = (&a[i % a.len()].poly, &b[j % b.len()].poly);
        prop_assert!(l2_inner_product(f, g).unwrap().value.is_zero());
    }

    #[test]
    fn reflections_preserve_the_inner_product((f, g) in pair(), i in 1usize..=4) {
        let i = i.min(f.dim());
        let lhs = l2_inner_product(&f.h_action_generator(i).unwrap(), &g.h_action_generator(i).unwrap()).unwrap();
        prop_assert_eq!(lhs.value, l2_inner_product(&f, &g).unwrap().value);
    }
}

/// `∫_{B_m} |x|^{2n} = |S^{m-1}| / (2n + m)` with `|S^{m-1}| = m |B_m|`.
#[test]
fn radial_moments_match_polar_coordinates() {
    for m in 2..=6usize {
        let vol = monomial_ball_integral(&vec![0; m], m).unwrap();
        for n in 0..=3u32 {
            // |x|^{2n} expanded by the multinomial theorem
            let x2 = MVPoly::vector_variable(m, Field::Real, m).x_mul();
            let r2n = (-&x2).pow(n);
            let mut total = num_rational::BigRational::zero();
            for (mono, v) in r2n.terms() {
                total += monomial_ball_integral(mono.exponents(), m).unwrap() * v.scalar_part().re();
            }
            let expected = vol.clone() * rational(m as i64, 2 * n as i64 + m as i64);
            assert_eq!(total, expected, "m={m} n={n}");
        }
    }
}

#[test]
fn gram_of_constant_one() {
    let g = gram_matrix(&[MVPoly::one(3, Field::Real)]).unwrap();
    assert_eq!(g.entries[0][0].re(), &rational(4, 3));
    assert_eq!(g.pi_power, 1);
}
