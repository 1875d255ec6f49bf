//! Generalized Taylor expansion of Hodge-de Rham polynomials in the Appell basis.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::ball::l2_inner_product;
use crate::basis::{blade_e, enumerate_i, enumerate_j, BasisBuilder, BasisLabel};
use crate::clifford::{Blade, Multivector};
use crate::error::{domain, Error, Result};
use crate::factors::factorial;
use crate::linalg::invert_dense;
use crate::mvpoly::MVPoly;
use crate::oracle::blades_of_grades;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorCoefficient {
    pub label: BasisLabel,
    /// The coefficient of `f^{s,ν}_{k,μ}` in the expansion.
    pub value: Scalar,
    /// `(1/k!) ∂_{t_2}^{k_2} ∂_{x_3}^{k_3-k_2} ... ∂_{x_m}^{k-k_{m-1}} g^ν` at the origin.
    /// A scalar in complex mode; in real mode it lies in `span{1, e_12}` and only its
    /// scalar part is comparable with `value`.
    pub chain_value: Multivector,
}

/// `∂_{t_2} = (1/2)(∂_1 + t_2 i ∂_2)` in complex mode, `(1/2)(∂_1 + e_12 ∂_2)` in real mode.
pub fn d_t2(p: &MVPoly, t2: i32) -> MVPoly {
    let half = Scalar::ratio(1, 2);
    let d2 = p.partial(2);
    let twisted = match p.field() {
        Field::Complex => d2.scaled(&Scalar::gaussian(0, t2 as i64)),
        Field::Real => d2.left_mul(
            &Multivector::from_terms(p.dim(), Field::Real, [(Blade::from_bits(0b11), Scalar::int(1))])
                .expect("e_12 exists for m >= 2"),
        ),
    };
    (&p.partial(1) + &twisted).scaled(&half)
}

/// The derivative chain `∂_{t_2}^{k_2} ∂_{x_3}^{k_3-k_2} ... ∂_{x_m}^{k-k_{m-1}}` of a label.
pub fn derivative_chain(p: &MVPoly, label: &BasisLabel) -> Result<MVPoly> {
    if p.dim() != label.m {
        return Err(Error::DimensionMismatch(p.dim(), label.m));
    }
    let mut q = p.clone();
    for r in (3..=label.m).rev() {
        let n = label.degree_at(r) - label.degree_at(r - 1);
        q = q.partial_pow(r, n)?;
    }
    if label.t2().abs() == 1 {
        for _ in 0..label.k2() {
            q = d_t2(&q, label.t2());
        }
    }
    Ok(q)
}

fn value_at_origin(p: &MVPoly) -> Multivector {
    p.coeff(&crate::mvpoly::Monomial::one(p.dim()))
}

/// Components `g^ν` of a grade-s valued polynomial: `g = Σ_ν g^ν e^{s,ν}`.
pub fn resolve_components(g: &MVPoly, s: usize) -> Result<BTreeMap<Vec<i32>, MVPoly>> {
    let (m, field) = (g.dim(), g.field());
    let nus = enumerate_j(s, m)?;
    let blades = blades_of_grades(m, &[s].into_iter().collect());
    let cols: Vec<Multivector> = nus.iter().map(|nu| blade_e(s, nu, m, field)).collect::<Result<_>>()?;
    let a: Vec<Vec<Scalar>> = blades.iter().map(|b| cols.iter().map(|e| e.coeff(*b)).collect()).collect();
    let inv = invert_dense(&a).ok_or_else(|| Error::Domain("blades e^{s,ν} are not a basis".into()))?;
    let mut out: BTreeMap<Vec<i32>, MVPoly> = nus.iter().map(|nu| (nu.clone(), MVPoly::zero(m, field))).collect();
    for (mono, mv) in g.terms() {
        for (row, nu) in inv.iter().zip(&nus) {
            let mut c = <Scalar as num_traits::Zero>::zero();
            for (x, b) in row.iter().zip(&blades) {
                c += &(x * &mv.coeff(*b));
            }
            if !num_traits::Zero::is_zero(&c) {
                let p = out.get_mut(nu).expect("ν present");
                p.push(mono.clone(), Multivector::scalar(m, field, c));
            }
        }
    }
    Ok(out)
}

fn check_input(g: &MVPoly, s: usize, m: usize, kmax: u32, field: Field) -> Result<()> {
    if g.dim() != m {
        return Err(Error::DimensionMismatch(g.dim(), m));
    }
    if g.field() != field {
        return Err(Error::FieldMismatch);
    }
    if !g.is_zero() && !g.is_grade(s) {
        return domain(format!("polynomial is not {s}-vector valued (grades {:?})", g.grades()));
    }
    if !g.dirac_plus().is_zero() || !g.dirac_minus().is_zero() {
        return domain("polynomial does not solve the Hodge-de Rham system");
    }
    if g.degree().is_some_and(|d| d > kmax) {
        return domain(format!("polynomial degree exceeds K = {kmax}"));
    }
    Ok(())
}

/// Expansion coefficients of `g` for all labels of degree at most `kmax`.
pub fn taylor_coefficients(g: &MVPoly, s: usize, m: usize, kmax: u32, field: Field) -> Result<Vec<TaylorCoefficient>> {
    taylor_coefficients_with(&mut BasisBuilder::new(field), g, s, m, kmax)
}

pub fn taylor_coefficients_with(
    builder: &mut BasisBuilder,
    g: &MVPoly,
    s: usize,
    m: usize,
    kmax: u32,
) -> Result<Vec<TaylorCoefficient>> {
    let field = builder.field();
    check_input(g, s, m, kmax, field)?;
    let comps = resolve_components(g, s)?;
    let mut out = Vec::new();
    for k in 0..=kmax {
        let inv_fact = Scalar::real(BigRational::new(1.into(), factorial(k)));
        let labels = enumerate_i(s, m, k, field)?;
        let basis = match field {
            Field::Real => Some(builder.hdr_basis(s, m, k)?),
            Field::Complex => None,
        };
        for (i, label) in labels.into_iter().enumerate() {
            let chain = value_at_origin(&derivative_chain(&comps[&label.nu], &label)?).scaled(&inv_fact);
            let value = match &basis {
                None => chain.scalar_part(),
                Some(b) => {
                    let f = &b[i].poly;
                    debug_assert_eq!(b[i].label, label);
                    let num = l2_inner_product(f, g)?.value;
                    let den = l2_inner_product(f, f)?.value;
                    &num * &den.inv().expect("basis elements are nonzero")
                }
            };
            out.push(TaylorCoefficient { label, value, chain_value: chain });
        }
    }
    Ok(out)
}

/// `Σ c_i f_{label_i}`.
pub fn taylor_reconstruct(coeffs: &[Scalar], labels: &[BasisLabel], m: usize, field: Field) -> Result<MVPoly> {
    taylor_reconstruct_with(&mut BasisBuilder::new(field), coeffs, labels, m)
}

pub fn taylor_reconstruct_with(
    builder: &mut BasisBuilder,
    coeffs: &[Scalar],
    labels: &[BasisLabel],
    m: usize,
) -> Result<MVPoly> {
    let field = builder.field();
    if coeffs.len() != labels.len() {
        return Err(Error::DimensionMismatch(coeffs.len(), labels.len()));
    }
    let mut groups: BTreeMap<(usize, u32), Vec<(usize, &BasisLabel)>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        if l.m != m {
            return Err(Error::DimensionMismatch(l.m, m));
        }
        if l.field != field {
            return Err(Error::FieldMismatch);
        }
        l.validate()?;
        groups.entry((l.s, l.k)).or_default().push((i, l));
    }
    let mut out = MVPoly::zero(m, field);
    for ((s, k), members) in groups {
        let basis = builder.hdr_basis(s, m, k)?;
        for (i, l) in members {
            let e = basis
                .iter()
                .find(|e| &e.label == l)
                .ok_or_else(|| Error::Domain(format!("label {l:?} not in I^{{{s},{m}}}_{k}")))?;
            out = &out + &e.poly.scaled(&coeffs[i]);
        }
    }
    Ok(out)
}
