//! Multivector-valued polynomials on `R^m` and the first-order operators acting on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, Multivector};
use crate::error::{domain, Error, Result};
use crate::scalar::{Field, Scalar};

/// Exponent vector `x^α = x_1^{α_1} ... x_m^{α_m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    /// The coordinate `x_i` (1-based).
    pub fn variable(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials of total degree `k` in `dim` variables, in ascending order.
    pub fn all_of_degree(dim: usize, k: u32) -> Vec<Monomial> {
        fn rec(dim: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == dim {
                prefix.push(k);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in 0..=k {
                prefix.push(a);
                rec(dim, k - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if dim == 0 {
            if k == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(dim, k, &mut Vec::with_capacity(dim), &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

/// A polynomial map `R^dim → Cl_dim` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "crate::json::PolyJson", try_from = "crate::json::PolyJson")]
pub struct MVPoly {
    dim: usize,
    field: Field,
    terms: BTreeMap<Monomial, Multivector>,
}

impl MVPoly {
    pub fn zero(dim: usize, field: Field) -> Self {
        MVPoly { dim, field, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize, field: Field) -> Self {
        Self::constant(Multivector::one(dim, field))
    }

    pub fn constant(value: Multivector) -> Self {
        let dim = value.dim();
        let mut p = Self::zero(dim, value.field());
        p.push(Monomial::one(dim), value);
        p
    }

    /// The scalar coordinate function `x_i`.
    pub fn coordinate(dim: usize, field: Field, i: usize) -> Self {
        Self::term(Monomial::variable(dim, i), Multivector::one(dim, field))
    }

    pub fn term(monomial: Monomial, value: Multivector) -> Self {
        assert_eq!(monomial.dim(), value.dim(), "monomial/value dimension mismatch");
        let mut p = Self::zero(value.dim(), value.field());
        p.push(monomial, value);
        p
    }

    pub fn from_terms(
        dim: usize,
        field: Field,
        terms: impl IntoIterator<Item = (Monomial, Multivector)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim, field);
        for (mono, mv) in terms {
            if mono.dim() != dim {
                return Err(Error::DimensionMismatch(mono.dim(), dim));
            }
            if mv.dim() != dim {
                return Err(Error::DimensionMismatch(mv.dim(), dim));
            }
            if mv.field() != field {
                return Err(Error::FieldMismatch);
            }
            p.push(mono, mv);
        }
        Ok(p)
    }

    /// The vector variable `x = x_1 e_1 + ... + x_n e_n` using the first `n` axes.
    pub fn vector_variable(dim: usize, field: Field, n: usize) -> Self {
        let mut p = Self::zero(dim, field);
        for i in 1..=n {
            p.push(Monomial::variable(dim, i), Multivector::basis_vector(dim, field, i));
        }
        p
    }

    pub(crate) fn push(&mut self, mono: Monomial, value: Multivector) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Accumulate a single blade coefficient.
    pub(crate) fn push_coeff(&mut self, mono: Monomial, blade: Blade, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let (dim, field) = (self.dim, self.field);
        let entry = self.terms.entry(mono.clone()).or_insert_with(|| Multivector::zero(dim, field));
        entry.push(blade, c);
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Multivector)> {
        self.terms.iter()
    }

    /// Flattened `(monomial, blade, coefficient)` triples in canonical order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&Monomial, Blade, &Scalar)> {
        self.terms.iter().flat_map(|(m, v)| v.terms().map(move |(b, c)| (m, *b, c)))
    }

    pub fn coeff(&self, mono: &Monomial) -> Multivector {
        self.terms.get(mono).cloned().unwrap_or_else(|| Multivector::zero(self.dim, self.field))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Grades occurring in any coefficient, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.values().flat_map(|v| v.grades()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn is_grade(&self, s: usize) -> bool {
        self.terms.values().all(|v| v.is_grade(s))
    }

    /// Largest basis-vector index used by any blade.
    pub fn max_blade_index(&self) -> usize {
        self.coefficients().map(|(_, b, _)| b.max_index()).max().unwrap_or(0)
    }

    /// Largest coordinate index with a nonzero exponent.
    pub fn max_variable(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.exponents().iter().rposition(|&a| a > 0).map(|p| p + 1))
            .max()
            .unwrap_or(0)
    }

    fn check_compatible(&self, other: &MVPoly) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MVPoly) -> Result<MVPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.push(m.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MVPoly) -> Result<MVPoly> {
        self.check_compatible(other)?;
        let mut out = MVPoly::zero(self.dim, self.field);
        for (ma, va) in &self.terms {
            for (mb, vb) in &other.terms {
                out.push(ma.mul(mb), va * vb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<MVPoly> {
        if !c.fits(self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.scaled(c))
    }

    pub(crate) fn scaled(&self, c: &Scalar) -> MVPoly {
        if c.is_zero() {
            return MVPoly::zero(self.dim, self.field);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v.scaled(c))).collect();
        MVPoly { dim: self.dim, field: self.field, terms }
    }

    /// Left multiplication by a constant multivector.
    pub fn left_mul(&self, a: &Multivector) -> MVPoly {
        let mut out = MVPoly::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            out.push(m.clone(), a * v);
        }
        out
    }

    pub fn right_mul(&self, a: &Multivector) -> MVPoly {
        let mut out = MVPoly::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            out.push(m.clone(), v * a);
        }
        out
    }

    /// `e_i * self`.
    pub fn left_basis(&self, i: usize) -> MVPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.left_blade(Blade::vector(i))))
            .collect();
        MVPoly { dim: self.dim, field: self.field, terms }
    }

    /// `self * e_i`.
    pub fn right_basis(&self, i: usize) -> MVPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.right_blade(Blade::vector(i))))
            .collect();
        MVPoly { dim: self.dim, field: self.field, terms }
    }

    /// `x_i * self`, multiplication by a coordinate function.
    pub fn mul_coordinate(&self, i: usize) -> MVPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| {
                let mut e = m.0.clone();
                e[i - 1] += 1;
                (Monomial(e), v.clone())
            })
            .collect();
        MVPoly { dim: self.dim, field: self.field, terms }
    }

    fn check_axis(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim });
        }
        Ok(())
    }

    pub fn partial_derivative(&self, i: usize) -> Result<MVPoly> {
        self.check_axis(i)?;
        Ok(self.partial(i))
    }

    pub(crate) fn partial(&self, i: usize) -> MVPoly {
        let mut out = MVPoly::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            let a = m.0[i - 1];
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i - 1] -= 1;
            out.push(Monomial(e), v.scaled(&Scalar::int(a as i64)));
        }
        out
    }

    /// Repeated partial derivative `∂_{x_i}^n`.
    pub fn partial_pow(&self, i: usize, n: u32) -> Result<MVPoly> {
        self.check_axis(i)?;
        let mut p = self.clone();
        for _ in 0..n {
            p = p.partial(i);
        }
        Ok(p)
    }

    fn first_order(&self, n: usize, op: impl Fn(&Multivector, usize) -> Multivector) -> MVPoly {
        let mut out = MVPoly::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            for j in 1..=n {
                let a = m.0[j - 1];
                if a == 0 {
                    continue;
                }
                let mut e = m.0.clone();
                e[j - 1] -= 1;
                out.push(Monomial(e), op(v, j).scaled(&Scalar::int(a as i64)));
            }
        }
        out
    }

    /// Dirac operator `∂ = Σ_j e_j ∂_{x_j}` (left multiplication).
    pub fn dirac(&self) -> MVPoly {
        self.first_order(self.dim, |v, j| v.left_blade(Blade::vector(j)))
    }

    /// `∂⁺ P = Σ_j e_j ∧ ∂_{x_j} P`.
    pub fn dirac_plus(&self) -> MVPoly {
        self.first_order(self.dim, |v, j| v.wedge_basis(j))
    }

    /// `∂⁻ P = Σ_j e_j • ∂_{x_j} P`.
    pub fn dirac_minus(&self) -> MVPoly {
        self.first_order(self.dim, |v, j| v.dot_basis(j))
    }

    pub fn laplacian(&self) -> MVPoly {
        let mut out = MVPoly::zero(self.dim, self.field);
        for i in 1..=self.dim {
            out = &out + &self.partial(i).partial(i);
        }
        out
    }

    fn vector_op(&self, n: usize, op: impl Fn(&Multivector, usize) -> Multivector) -> MVPoly {
        let mut out = MVPoly::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            for j in 1..=n {
                let mut e = m.0.clone();
                e[j - 1] += 1;
                out.push(Monomial(e), op(v, j));
            }
        }
        out
    }

    /// `(x ∧) P = Σ_j x_j e_j ∧ P`.
    pub fn x_wedge(&self) -> MVPoly {
        self.x_wedge_axes(self.dim)
    }

    /// `(x •) P = Σ_j x_j e_j • P`.
    pub fn x_dot(&self) -> MVPoly {
        self.x_dot_axes(self.dim)
    }

    /// Outer multiplication by `x_1 e_1 + ... + x_n e_n` (the first `n` axes only).
    pub fn x_wedge_axes(&self, n: usize) -> MVPoly {
        assert!(n <= self.dim);
        self.vector_op(n, |v, j| v.wedge_basis(j))
    }

    pub fn x_dot_axes(&self, n: usize) -> MVPoly {
        assert!(n <= self.dim);
        self.vector_op(n, |v, j| v.dot_basis(j))
    }

    /// Left multiplication by the vector variable `x`.
    pub fn x_mul(&self) -> MVPoly {
        self.vector_op(self.dim, |v, j| v.left_blade(Blade::vector(j)))
    }

    /// `H(e_i)`: `P ↦ e_i P(e_i^{-1} x e_i) e_i^{-1}`. The substitution negates every
    /// coordinate except `x_i`.
    pub fn h_action_generator(&self, i: usize) -> Result<MVPoly> {
        self.check_axis(i)?;
        let e = Blade::vector(i);
        let mut out = MVPoly::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            let flips: u32 = m.0.iter().enumerate().filter(|(j, _)| j + 1 != i).map(|(_, a)| a).sum();
            // e_i v e_i^{-1} = -e_i v e_i
            let conj = -&v.left_blade(e).right_blade(e);
            out.push(m.clone(), if flips % 2 == 1 { -&conj } else { conj });
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Multivector> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch(point.len(), self.dim));
        }
        if point.iter().any(|c| !c.fits(self.field)) {
            return Err(Error::FieldMismatch);
        }
        let mut out = Multivector::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            let mut c = Scalar::one();
            for (x, &a) in point.iter().zip(&m.0) {
                for _ in 0..a {
                    c = &c * x;
                }
            }
            out = &out + &v.scaled(&c);
        }
        Ok(out)
    }

    pub fn grade_project(&self, s: usize) -> Result<MVPoly> {
        if s > self.dim {
            return domain(format!("grade {s} exceeds dimension {}", self.dim));
        }
        let mut out = MVPoly::zero(self.dim, self.field);
        for (m, v) in &self.terms {
            out.push(m.clone(), v.grade_part(s));
        }
        Ok(out)
    }

    pub fn homogeneous_part(&self, k: u32) -> MVPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, v)| (m.clone(), v.clone()))
            .collect();
        MVPoly { dim: self.dim, field: self.field, terms }
    }

    /// Regard as a polynomial on `R^dim` with values in `Cl_dim`, `dim >= self.dim()`.
    pub fn embed(&self, dim: usize) -> Result<MVPoly> {
        if dim < self.dim {
            return domain(format!("cannot embed dimension {} into {dim}", self.dim));
        }
        let mut out = MVPoly::zero(dim, self.field);
        for (m, v) in &self.terms {
            let mut e = m.0.clone();
            e.resize(dim, 0);
            out.push(Monomial(e), v.embed(dim)?);
        }
        Ok(out)
    }

    pub fn with_field(&self, field: Field) -> Result<MVPoly> {
        let mut out = MVPoly::zero(self.dim, field);
        for (m, v) in &self.terms {
            out.push(m.clone(), v.with_field(field)?);
        }
        Ok(out)
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, n: u32) -> MVPoly {
        let mut out = MVPoly::one(self.dim, self.field);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl<'a> Add<&'a MVPoly> for &'a MVPoly {
    type Output = MVPoly;
    /// Panics on mismatch; see [`MVPoly::try_add`].
    fn add(self, rhs: &MVPoly) -> MVPoly {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Sub<&'a MVPoly> for &'a MVPoly {
    type Output = MVPoly;
    fn sub(self, rhs: &MVPoly) -> MVPoly {
        self + &(-rhs)
    }
}

impl Neg for &MVPoly {
    type Output = MVPoly;
    fn neg(self) -> MVPoly {
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), -v)).collect();
        MVPoly { dim: self.dim, field: self.field, terms }
    }
}

impl<'a> Mul<&'a MVPoly> for &'a MVPoly {
    type Output = MVPoly;
    /// Panics on mismatch; see [`MVPoly::try_mul`].
    fn mul(self, rhs: &MVPoly) -> MVPoly {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl fmt::Debug for MVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, v)| format!("({v:?})·{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blade(idx: &[usize]) -> Blade {
        Blade::from_indices(idx).unwrap()
    }

    /// `c · x^α · e_A` in dimension `dim`, real field.
    fn t(dim: usize, alpha: &[u32], idx: &[usize], c: i64) -> MVPoly {
        let mv = Multivector::blade(dim, Field::Real, blade(idx), Scalar::int(c)).unwrap();
        MVPoly::term(Monomial::new(alpha.to_vec()), mv)
    }

    fn sum(ps: &[MVPoly]) -> MVPoly {
        ps.iter().fold(MVPoly::zero(ps[0].dim(), ps[0].field()), |a, p| &a + p)
    }

    #[test]
    fn ring_examples() {
        let p = t(2, &[1, 0], &[1], 1);
        assert_eq!(&p * &p, t(2, &[2, 0], &[], -1));
        assert_eq!(&p * &MVPoly::one(2, Field::Real), p);
        let q = &t(2, &[1, 0], &[], 1) - &t(2, &[0, 1], &[1, 2], 1);
        let expect = sum(&[t(2, &[2, 0], &[], 1), t(2, &[0, 2], &[], -1), t(2, &[1, 1], &[1, 2], -2)]);
        assert_eq!(&q * &q, expect);
        assert!(p.try_mul(&MVPoly::one(3, Field::Real)).is_err());
    }

    #[test]
    fn partial_examples() {
        assert_eq!(t(3, &[2, 0, 0], &[1], 1).partial_derivative(1).unwrap(), t(3, &[1, 0, 0], &[1], 2));
        assert!(t(3, &[1, 0, 0], &[], 1).partial_derivative(2).unwrap().is_zero());
        assert_eq!(
            t(3, &[1, 0, 1], &[1, 2], 1).partial_derivative(3).unwrap(),
            t(3, &[1, 0, 0], &[1, 2], 1)
        );
        assert!(t(3, &[1, 0, 0], &[], 1).partial_derivative(4).is_err());
    }

    #[test]
    fn dirac_examples() {
        for m in 2..=5 {
            let x = MVPoly::vector_variable(m, Field::Real, m);
            assert_eq!(x.dirac(), MVPoly::constant(Multivector::one(m, Field::Real).scaled(&Scalar::int(-(m as i64)))));
            assert!(MVPoly::one(m, Field::Real).dirac().is_zero());
        }
        // (x_1 - e_12 x_2) e_1
        let seed = &t(2, &[1, 0], &[1], 1) - &t(2, &[0, 1], &[2], 1);
        let base = &t(2, &[1, 0], &[], 1) - &t(2, &[0, 1], &[1, 2], 1);
        assert_eq!(base.right_basis(1), seed);
        assert!(seed.dirac().is_zero());
    }

    #[test]
    fn dirac_split_examples() {
        let p = sum(&[t(3, &[2, 1, 0], &[], 1), t(3, &[0, 0, 3], &[], -4)]);
        assert_eq!(p.dirac_plus(), p.dirac());
        assert!(p.dirac_minus().is_zero());
        let q = t(3, &[1, 0, 0], &[1], 1);
        assert_eq!(q.dirac_minus(), t(3, &[0, 0, 0], &[], -1));
        assert!(q.dirac_plus().is_zero());
    }

    #[test]
    fn x_multiplication_examples() {
        let one = MVPoly::one(3, Field::Real);
        assert_eq!(one.x_wedge(), MVPoly::vector_variable(3, Field::Real, 3));
        assert!(one.x_dot().is_zero());
        assert_eq!(t(3, &[0, 0, 0], &[1], 1).x_dot(), t(3, &[1, 0, 0], &[], -1));
    }

    #[test]
    fn laplacian_examples() {
        let p = &t(2, &[2, 0], &[], 1) - &t(2, &[0, 2], &[], 1);
        assert!(p.laplacian().is_zero());
        for m in 2..=4 {
            let r2 = (1..=m).fold(MVPoly::zero(m, Field::Real), |a, i| {
                let xi = MVPoly::coordinate(m, Field::Real, i);
                &a + &(&xi * &xi)
            });
            assert_eq!(r2.laplacian(), MVPoly::constant(Multivector::one(m, Field::Real).scaled(&Scalar::int(2 * m as i64))));
        }
    }

    #[test]
    fn h_action_examples() {
        let c = t(3, &[0, 0, 0], &[2], 3);
        let e1 = Multivector::basis_vector(3, Field::Real, 1);
        let e1_inv = -&e1;
        let expect = MVPoly::constant(&(&e1 * &c.coeff(&Monomial::one(3))) * &e1_inv);
        assert_eq!(c.h_action_generator(1).unwrap(), expect);
        let p = sum(&[t(3, &[1, 2, 0], &[1, 3], 2), t(3, &[0, 1, 2], &[2], -1), t(3, &[3, 0, 0], &[], 5)]);
        for i in 1..=3 {
            let twice = p.h_action_generator(i).unwrap().h_action_generator(i).unwrap();
            assert_eq!(twice, p);
        }
        assert!(p.h_action_generator(0).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let pt = vec![Scalar::int(2), Scalar::int(0)];
        assert_eq!(MVPoly::one(2, Field::Real).evaluate(&pt).unwrap(), Multivector::one(2, Field::Real));
        assert_eq!(
            t(2, &[1, 0], &[1], 1).evaluate(&pt).unwrap(),
            Multivector::basis_vector(2, Field::Real, 1).scaled(&Scalar::int(2))
        );
        assert!(t(2, &[1, 0], &[1], 1).evaluate(&pt[..1]).is_err());
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(5, 3).len(), 35);
        assert!(Monomial::all_of_degree(4, 3).iter().all(|m| m.degree() == 3));
    }
}
