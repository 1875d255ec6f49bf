#![allow(dead_code)]

use appell_core::{Blade, Field, MVPoly, Monomial, Multivector, Scalar};
use proptest::prelude::*;

pub fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Real), Just(Field::Complex)]
}

pub fn scalar(field: Field) -> impl Strategy<Value = Scalar> {
    (-7i64..=7, 1i64..=4, -7i64..=7, 1i64..=4).prop_map(move |(a, b, c, d)| match field {
        Field::Real => Scalar::ratio(a, b),
        Field::Complex => &Scalar::ratio(a, b) + &(&Scalar::ratio(c, d) * &Scalar::i()),
    })
}

pub fn multivector(dim: usize, field: Field) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u32..1 << dim, scalar(field)), 0..6).prop_map(move |terms| {
        let mut v = Multivector::zero(dim, field);
        for (bits, c) in terms {
            v = &v + &Multivector::from_terms(dim, field, [(Blade::from_bits(bits), c)]).unwrap();
        }
        v
    })
}

pub fn vector(dim: usize, field: Field) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(scalar(field), dim).prop_map(move |cs| {
        let terms = cs.into_iter().enumerate().map(|(i, c)| (Blade::vector(i + 1), c));
        Multivector::from_terms(dim, field, terms).unwrap()
    })
}

pub fn poly(dim: usize, field: Field, max_degree: u32) -> impl Strategy<Value = MVPoly> {
    let term = (prop::collection::vec(0u32..=max_degree, dim), multivector(dim, field));
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = MVPoly::zero(dim, field);
        for (exps, v) in terms {
            p = &p + &MVPoly::term(Monomial::new(exps), v);
        }
        p
    })
}

/// Dimension and field first, then the values depending on them.
pub fn dim_field() -> impl Strategy<Value = (usize, Field)> {
    (2usize..=5, field())
}
