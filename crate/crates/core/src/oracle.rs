//! Brute-force oracles: exact kernels of the defining PDE systems on the full
//! coordinate space of `(monomial, blade)` pairs, and span comparison.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::clifford::{Blade, Multivector};
use crate::error::{domain, Result};
use crate::linalg::{Echelon, IntegerEchelon, SparseVec};
use crate::mvpoly::{MVPoly, Monomial};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Constraint {
    /// `∂⁺P = 0` and `∂⁻P = 0`.
    Hdr,
    /// `∂P = 0`.
    Monogenic,
    /// `ΔP = 0`.
    Harmonic,
}

pub type Coordinate = (Monomial, Blade);

/// The constraint matrix of an operator on k-homogeneous polynomials with values in
/// a set of grades. Column `c` corresponds to `basis_index[c]`.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub m: usize,
    pub k: u32,
    pub basis_index: Vec<Coordinate>,
    pub rows: Vec<Vec<BigInt>>,
}

pub fn blades_of_grades(m: usize, grades: &BTreeSet<usize>) -> Vec<Blade> {
    let mut out: Vec<Blade> =
        (0u32..1 << m).map(Blade::from_bits).filter(|b| grades.contains(&b.grade())).collect();
    out.sort();
    out
}

fn integer(c: &Scalar) -> BigInt {
    assert!(c.is_real() && c.re().is_integer(), "operator coefficient {c} is not an integer");
    c.re().to_integer()
}

impl LinearSystem {
    pub fn build(constraint: Constraint, grades: &BTreeSet<usize>, m: usize, k: u32) -> Result<Self> {
        if m < 2 {
            return domain(format!("oracle needs m >= 2, got {m}"));
        }
        if grades.iter().any(|&s| s > m) {
            return domain(format!("grade out of range for m = {m}: {grades:?}"));
        }
        let blades = blades_of_grades(m, grades);
        let mut basis_index = Vec::new();
        for mono in Monomial::all_of_degree(m, k) {
            for &b in &blades {
                basis_index.push((mono.clone(), b));
            }
        }
        // (operator tag, output coordinate) -> sparse row
        let mut rows: BTreeMap<(u8, Coordinate), Vec<(usize, BigInt)>> = BTreeMap::new();
        for (col, (mono, b)) in basis_index.iter().enumerate() {
            let unit = MVPoly::term(
                mono.clone(),
                Multivector::from_terms(m, Field::Real, [(*b, Scalar::int(1))])?,
            );
            let images: Vec<(u8, MVPoly)> = match constraint {
                Constraint::Hdr => vec![(0, unit.dirac_plus()), (1, unit.dirac_minus())],
                Constraint::Monogenic => vec![(0, unit.dirac())],
                Constraint::Harmonic => vec![(0, unit.laplacian())],
            };
            for (tag, img) in images {
                for (om, ob, c) in img.coefficients() {
                    rows.entry((tag, (om.clone(), ob))).or_default().push((col, integer(c)));
                }
            }
        }
        let n = basis_index.len();
        let rows = rows
            .into_values()
            .map(|entries| {
                let mut row = vec![BigInt::zero(); n];
                for (c, v) in entries {
                    row[c] += v;
                }
                row
            })
            .collect();
        Ok(LinearSystem { m, k, basis_index, rows })
    }

    pub fn num_coordinates(&self) -> usize {
        self.basis_index.len()
    }

    pub fn echelon(&self) -> IntegerEchelon {
        IntegerEchelon::new(self.rows.clone(), self.num_coordinates())
    }

    pub fn vector_to_poly(&self, v: &[BigInt], field: Field) -> MVPoly {
        let mut p = MVPoly::zero(self.m, field);
        for ((mono, b), c) in self.basis_index.iter().zip(v) {
            if !c.is_zero() {
                p.push_coeff(mono.clone(), *b, Scalar::real(c.clone().into()));
            }
        }
        p
    }
}

/// Basis of the exact kernel of `constraint` on k-homogeneous polynomials with values
/// in `grades`. The operators have integer coefficients, so the kernel is computed
/// over the integers and tagged with `field`.
pub fn oracle_space(
    constraint: Constraint,
    grades: &BTreeSet<usize>,
    m: usize,
    k: u32,
    field: Field,
) -> Result<Vec<MVPoly>> {
    let sys = LinearSystem::build(constraint, grades, m, k)?;
    Ok(sys.echelon().nullspace().iter().map(|v| sys.vector_to_poly(v, field)).collect())
}

/// Dimension of the kernel without materializing it.
pub fn oracle_rank(constraint: Constraint, grades: &BTreeSet<usize>, m: usize, k: u32) -> Result<usize> {
    let sys = LinearSystem::build(constraint, grades, m, k)?;
    Ok(sys.num_coordinates() - sys.echelon().rank())
}

/// All grades `0..=m`.
pub fn full_algebra(m: usize) -> BTreeSet<usize> {
    (0..=m).collect()
}

pub fn poly_vector(p: &MVPoly) -> SparseVec<Coordinate> {
    p.coefficients().map(|(mono, b, c)| ((mono.clone(), b), c.clone())).collect()
}

/// Exact rank of a list of polynomials.
pub fn poly_rank(polys: &[MVPoly]) -> usize {
    let mut e = Echelon::new();
    polys.iter().filter(|p| e.insert(&poly_vector(p))).count()
}

#[derive(Debug, Clone, Serialize)]
pub struct SpanReport {
    pub passed: bool,
    pub constructed: usize,
    pub oracle: usize,
    pub constructed_rank: usize,
    pub oracle_rank: usize,
    /// Indices of constructed elements dependent on earlier ones.
    pub dependent_constructed: Vec<usize>,
    /// Indices of oracle elements outside the constructed span.
    pub unspanned_oracle: Vec<usize>,
    /// Indices of constructed elements outside the oracle span.
    pub outside_oracle: Vec<usize>,
    /// First failing polynomial, if any.
    pub witness: Option<MVPoly>,
}

/// Compare two spans in both directions.
pub fn check_span_equality(constructed: &[MVPoly], oracle: &[MVPoly]) -> SpanReport {
    let mut ce = Echelon::new();
    let mut dependent = Vec::new();
    for (i, p) in constructed.iter().enumerate() {
        if !ce.insert(&poly_vector(p)) {
            dependent.push(i);
        }
    }
    let mut oe = Echelon::new();
    for p in oracle {
        oe.insert(&poly_vector(p));
    }
    let unspanned: Vec<usize> =
        (0..oracle.len()).filter(|&i| !ce.contains(&poly_vector(&oracle[i]))).collect();
    let outside: Vec<usize> =
        (0..constructed.len()).filter(|&i| !oe.contains(&poly_vector(&constructed[i]))).collect();
    let witness = dependent
        .first()
        .map(|&i| constructed[i].clone())
        .or_else(|| unspanned.first().map(|&i| oracle[i].clone()))
        .or_else(|| outside.first().map(|&i| constructed[i].clone()));
    SpanReport {
        passed: constructed.len() == oracle.len()
            && dependent.is_empty()
            && unspanned.is_empty()
            && outside.is_empty(),
        constructed: constructed.len(),
        oracle: oracle.len(),
        constructed_rank: ce.rank(),
        oracle_rank: oe.rank(),
        dependent_constructed: dependent,
        unspanned_oracle: unspanned,
        outside_oracle: outside,
        witness,
    }
}
