//! Exact Clifford algebras `R_{0,m}` and `C_m` with `e_i e_j + e_j e_i = -2 δ_ij`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::scalar::{Field, Scalar};

/// Largest supported ambient dimension (blades are stored as bitmasks).
pub const MAX_DIM: usize = 31;

/// A canonical basis blade `e_{i1} e_{i2} ... e_{is}` with `i1 < i2 < ... < is`.
///
/// Stored as a bitmask: bit `i - 1` set means `e_i` occurs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Build from a strictly increasing index list.
    pub fn from_indices(indices: &[usize]) -> Result<Blade> {
        let mut bits = 0u32;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, dim: MAX_DIM });
            }
            if i <= prev {
                return domain(format!("blade indices must be strictly increasing: {indices:?}"));
            }
            prev = i;
            bits |= 1 << (i - 1);
        }
        Ok(Blade(bits))
    }

    /// The basis vector `e_i` (1-based).
    pub fn vector(i: usize) -> Blade {
        assert!(i >= 1 && i <= MAX_DIM, "basis index {i} out of range");
        Blade(1 << (i - 1))
    }

    pub fn from_bits(bits: u32) -> Blade {
        Blade(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    /// Largest index present, 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }

    /// Sign and blade of the geometric product `self * other`.
    pub fn product(self, other: Blade) -> (i8, Blade) {
        let mut s = self.0 >> 1;
        let mut swaps = 0u32;
        while s != 0 {
            swaps += (s & other.0).count_ones();
            s >>= 1;
        }
        // each shared e_i contributes e_i^2 = -1
        swaps += (self.0 & other.0).count_ones();
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        (sign, Blade(self.0 ^ other.0))
    }
}

/// Grade first, then lexicographic on the ascending index sequence.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.grade().cmp(&other.grade()) {
            Ordering::Equal => {
                let d = self.0 ^ other.0;
                if d == 0 {
                    Ordering::Equal
                } else if self.0 & d & d.wrapping_neg() != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            o => o,
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        let idx = self.indices();
        let sep = if idx.iter().any(|&i| i >= 10) { "," } else { "" };
        let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// Checked blade product against an ambient dimension.
pub fn blade_product(a: Blade, b: Blade, dim: usize) -> Result<(i8, Blade)> {
    for blade in [a, b] {
        if blade.max_index() > dim {
            return Err(Error::IndexOutOfRange { index: blade.max_index(), dim });
        }
    }
    Ok(a.product(b))
}

/// An element of the Clifford algebra over `R^dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    field: Field,
    terms: BTreeMap<Blade, Scalar>,
}

impl Multivector {
    pub fn zero(dim: usize, field: Field) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Multivector { dim, field, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize, field: Field) -> Self {
        Self::scalar(dim, field, Scalar::one())
    }

    pub fn scalar(dim: usize, field: Field, c: Scalar) -> Self {
        let mut mv = Self::zero(dim, field);
        mv.push(Blade::SCALAR, c);
        mv
    }

    /// `c · blade`, validating the blade against `dim` and `c` against the field.
    pub fn blade(dim: usize, field: Field, blade: Blade, c: Scalar) -> Result<Self> {
        if blade.max_index() > dim {
            return Err(Error::IndexOutOfRange { index: blade.max_index(), dim });
        }
        if !c.fits(field) {
            return Err(Error::FieldMismatch);
        }
        let mut mv = Self::zero(dim, field);
        mv.push(blade, c);
        Ok(mv)
    }

    /// The basis vector `e_i`.
    pub fn basis_vector(dim: usize, field: Field, i: usize) -> Self {
        assert!(i >= 1 && i <= dim, "basis index {i} out of range 1..={dim}");
        let mut mv = Self::zero(dim, field);
        mv.push(Blade::vector(i), Scalar::one());
        mv
    }

    pub fn from_terms(
        dim: usize,
        field: Field,
        terms: impl IntoIterator<Item = (Blade, Scalar)>,
    ) -> Result<Self> {
        let mut mv = Self::zero(dim, field);
        for (b, c) in terms {
            if b.max_index() > dim {
                return Err(Error::IndexOutOfRange { index: b.max_index(), dim });
            }
            if !c.fits(field) {
                return Err(Error::FieldMismatch);
            }
            mv.push(b, c);
        }
        Ok(mv)
    }

    /// Accumulate `c · blade`, pruning zeros. Caller guarantees validity.
    pub(crate) fn push(&mut self, blade: Blade, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coeff(Blade::SCALAR)
    }

    /// Distinct grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// `Some(s)` if every stored blade has grade `s`; `None` for mixed grades or zero.
    pub fn grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [s] => Some(*s),
            _ => None,
        }
    }

    pub fn is_grade(&self, s: usize) -> bool {
        self.terms.keys().all(|b| b.grade() == s)
    }

    fn check_compatible(&self, other: &Multivector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Reinterpret in a larger (or equal) dimension; fails if a blade does not fit.
    pub fn embed(&self, dim: usize) -> Result<Multivector> {
        if let Some(b) = self.terms.keys().find(|b| b.max_index() > dim) {
            return Err(Error::IndexOutOfRange { index: b.max_index(), dim });
        }
        Ok(Multivector { dim, field: self.field, terms: self.terms.clone() })
    }

    /// Reinterpret with another coefficient field. Real to complex always works.
    pub fn with_field(&self, field: Field) -> Result<Multivector> {
        if self.terms.values().any(|c| !c.fits(field)) {
            return Err(Error::FieldMismatch);
        }
        Ok(Multivector { dim: self.dim, field, terms: self.terms.clone() })
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.push(*b, c.clone());
        }
        out
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Scalar) -> Result<Multivector> {
        if !c.fits(self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.scaled(c))
    }

    pub(crate) fn scaled(&self, c: &Scalar) -> Multivector {
        debug_assert!(c.fits(self.field));
        if c.is_zero() {
            return Multivector::zero(self.dim, self.field);
        }
        let terms = self.terms.iter().map(|(b, x)| (*b, x * c)).collect();
        Multivector { dim: self.dim, field: self.field, terms }
    }

    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Multivector) -> Multivector {
        let mut out = Multivector::zero(self.dim, self.field);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (sign, blade) = a.product(*b);
                let c = x * y;
                out.push(blade, if sign < 0 { -c } else { c });
            }
        }
        out
    }

    /// Left multiplication by a single signed blade, a fast path for `e_j * self`.
    pub(crate) fn left_blade(&self, blade: Blade) -> Multivector {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| {
                let (sign, r) = blade.product(*b);
                (r, if sign < 0 { -c } else { c.clone() })
            })
            .collect();
        Multivector { dim: self.dim, field: self.field, terms }
    }

    pub(crate) fn right_blade(&self, blade: Blade) -> Multivector {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| {
                let (sign, r) = b.product(blade);
                (r, if sign < 0 { -c } else { c.clone() })
            })
            .collect();
        Multivector { dim: self.dim, field: self.field, terms }
    }

    /// `e_j ∧ self`: keeps the blades not containing `j`.
    pub(crate) fn wedge_basis(&self, j: usize) -> Multivector {
        let e = Blade::vector(j);
        let mut out = Multivector::zero(self.dim, self.field);
        for (b, c) in &self.terms {
            if !b.contains(j) {
                let (sign, r) = e.product(*b);
                out.terms.insert(r, if sign < 0 { -c } else { c.clone() });
            }
        }
        out
    }

    /// `e_j • self`: keeps the blades containing `j`.
    pub(crate) fn dot_basis(&self, j: usize) -> Multivector {
        let e = Blade::vector(j);
        let mut out = Multivector::zero(self.dim, self.field);
        for (b, c) in &self.terms {
            if b.contains(j) {
                let (sign, r) = e.product(*b);
                out.terms.insert(r, if sign < 0 { -c } else { c.clone() });
            }
        }
        out
    }

    pub fn grade_project(&self, s: usize) -> Result<Multivector> {
        if s > self.dim {
            return domain(format!("grade {s} exceeds dimension {}", self.dim));
        }
        Ok(self.grade_part(s))
    }

    pub(crate) fn grade_part(&self, s: usize) -> Multivector {
        let terms = self
            .terms
            .iter()
            .filter(|(b, _)| b.grade() == s)
            .map(|(b, c)| (*b, c.clone()))
            .collect();
        Multivector { dim: self.dim, field: self.field, terms }
    }

    /// `u ∧ v = Σ_s (u v_s + (-1)^s v_s u) / 2` for a 1-vector `u`.
    pub fn wedge_by_vector(u: &Multivector, v: &Multivector) -> Result<Multivector> {
        Self::split_product(u, v, 1)
    }

    /// `u • v = Σ_s (u v_s - (-1)^s v_s u) / 2` for a 1-vector `u`.
    pub fn dot_by_vector(u: &Multivector, v: &Multivector) -> Result<Multivector> {
        Self::split_product(u, v, -1)
    }

    fn split_product(u: &Multivector, v: &Multivector, parity: i64) -> Result<Multivector> {
        u.check_compatible(v)?;
        if !u.is_grade(1) {
            return domain("left operand of the inner/outer product must be a 1-vector");
        }
        let half = Scalar::ratio(1, 2);
        let mut out = Multivector::zero(v.dim, v.field);
        for s in v.grades() {
            let vs = v.grade_part(s);
            let sign = if s % 2 == 0 { parity } else { -parity };
            let uv = u.mul_unchecked(&vs);
            let vu = vs.mul_unchecked(u).scaled(&Scalar::int(sign));
            out = out.add_unchecked(&uv.add_unchecked(&vu).scaled(&half));
        }
        Ok(out)
    }

    /// Clifford conjugation: `(-1)^{s(s+1)/2}` on grade `s`; in complex mode the
    /// coefficients are complex-conjugated as well.
    pub fn clifford_conjugate(&self) -> Multivector {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| {
                let s = b.grade();
                let c = match self.field {
                    Field::Real => c.clone(),
                    Field::Complex => c.conj(),
                };
                (*b, if (s * (s + 1) / 2) % 2 == 1 { -c } else { c })
            })
            .collect();
        Multivector { dim: self.dim, field: self.field, terms }
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    /// Panics on dimension or field mismatch; see [`Multivector::try_add`].
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("incompatible multivectors")
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        let terms = self.terms.iter().map(|(b, c)| (*b, -c)).collect();
        Multivector { dim: self.dim, field: self.field, terms }
    }
}

impl<'a> Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    /// Geometric product. Panics on mismatch; see [`Multivector::geometric_product`].
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("incompatible multivectors")
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("{c}·{b:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(idx: &[usize]) -> Blade {
        Blade::from_indices(idx).unwrap()
    }

    fn mv(dim: usize, terms: &[(&[usize], i64)]) -> Multivector {
        Multivector::from_terms(dim, Field::Real, terms.iter().map(|(i, c)| (b(i), Scalar::int(*c))))
            .unwrap()
    }

    #[test]
    fn blade_product_examples() {
        assert_eq!(blade_product(b(&[1]), b(&[1]), 3).unwrap(), (-1, b(&[])));
        assert_eq!(blade_product(b(&[1]), b(&[2]), 3).unwrap(), (1, b(&[1, 2])));
        assert_eq!(blade_product(b(&[2]), b(&[1, 2]), 3).unwrap(), (1, b(&[1])));
        assert!(blade_product(b(&[4]), b(&[1]), 3).is_err());
    }

    #[test]
    fn blade_validation() {
        assert!(Blade::from_indices(&[2, 1]).is_err());
        assert!(Blade::from_indices(&[0]).is_err());
        assert_eq!(b(&[1, 3]).indices(), vec![1, 3]);
        assert!(b(&[1]) < b(&[2]) && b(&[3]) < b(&[1, 2]) && b(&[1, 3]) < b(&[2, 3]));
    }

    /// Geometric product by expanding both blades as words and normalizing with
    /// bubble sort directly from the defining relations.
    fn word_product(a: Blade, c: Blade) -> (i8, Blade) {
        let mut word: Vec<usize> = a.indices();
        word.extend(c.indices());
        let mut sign = 1i8;
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < word.len() {
                if word[i] > word[i + 1] {
                    word.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                } else if word[i] == word[i + 1] {
                    word.drain(i..i + 2);
                    sign = -sign;
                    changed = true;
                    continue;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        (sign, Blade::from_indices(&word).unwrap())
    }

    #[test]
    fn blade_product_matches_word_rewriting_and_is_associative() {
        for m in 1..=5u32 {
            let n = 1u32 << m;
            for x in 0..n {
                for y in 0..n {
                    let (bx, by) = (Blade::from_bits(x), Blade::from_bits(y));
                    assert_eq!(bx.product(by), word_product(bx, by));
                    for z in 0..n {
                        let bz = Blade::from_bits(z);
                        let (s1, xy) = bx.product(by);
                        let (s2, l) = xy.product(bz);
                        let (s3, yz) = by.product(bz);
                        let (s4, r) = bx.product(yz);
                        assert_eq!((s1 * s2, l), (s3 * s4, r));
                    }
                }
            }
        }
    }

    #[test]
    fn geometric_product_examples() {
        let e1 = mv(3, &[(&[1], 1)]);
        assert_eq!(&e1 * &e1, mv(3, &[(&[], -1)]));
        let a = mv(2, &[(&[], 1), (&[1, 2], 1)]);
        let c = mv(2, &[(&[], 1), (&[1, 2], -1)]);
        assert_eq!(&a * &c, mv(2, &[(&[], 2)]));
        let e3 = mv(3, &[(&[3], 1)]);
        let g = mv(3, &[(&[1], 2), (&[2, 3], -1), (&[], 5)]);
        assert_eq!(&e3 * &(&e3 * &g), -&g);
        let cplx = Multivector::one(3, Field::Complex);
        assert_eq!(e1.geometric_product(&cplx), Err(Error::FieldMismatch));
        assert!(e1.geometric_product(&Multivector::one(4, Field::Real)).is_err());
    }

    #[test]
    fn grade_projection() {
        let a = mv(3, &[(&[], 3), (&[1], 2), (&[1, 2], 1)]);
        assert_eq!(a.grade_project(1).unwrap(), mv(3, &[(&[1], 2)]));
        let e1e2 = &mv(3, &[(&[1], 1)]) * &mv(3, &[(&[2], 1)]);
        assert_eq!(e1e2.grade_project(2).unwrap(), mv(3, &[(&[1, 2], 1)]));
        assert_eq!(e1e2.grade_project(2).unwrap(), e1e2);
        assert!(a.grade_project(4).is_err());
        assert_eq!(a.grades(), vec![0, 1, 2]);
        assert_eq!(e1e2.grade(), Some(2));
    }

    #[test]
    fn wedge_and_dot_examples() {
        let e1 = mv(3, &[(&[1], 1)]);
        let e2 = mv(3, &[(&[2], 1)]);
        let w = Multivector::wedge_by_vector;
        let d = Multivector::dot_by_vector;
        assert_eq!(w(&e1, &e2).unwrap(), mv(3, &[(&[1, 2], 1)]));
        assert!(w(&e1, &e1).unwrap().is_zero());
        assert_eq!(w(&e1, &mv(3, &[(&[2, 3], 1)])).unwrap(), mv(3, &[(&[1, 2, 3], 1)]));
        assert_eq!(d(&e1, &e1).unwrap(), mv(3, &[(&[], -1)]));
        assert!(d(&e1, &e2).unwrap().is_zero());
        assert_eq!(d(&e1, &mv(3, &[(&[1, 2], 1)])).unwrap(), mv(3, &[(&[2], -1)]));
        assert!(w(&mv(3, &[(&[1, 2], 1)]), &e1).is_err());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(mv(3, &[(&[1], 1)]).clifford_conjugate(), mv(3, &[(&[1], -1)]));
        assert_eq!(mv(3, &[(&[1, 2], 1)]).clifford_conjugate(), mv(3, &[(&[1, 2], -1)]));
        assert_eq!(mv(3, &[(&[], 1)]).clifford_conjugate(), mv(3, &[(&[], 1)]));
        let z = Multivector::blade(2, Field::Complex, b(&[1]), Scalar::gaussian(1, 1)).unwrap();
        let expect = Multivector::blade(2, Field::Complex, b(&[1]), Scalar::gaussian(-1, 1)).unwrap();
        assert_eq!(z.clifford_conjugate(), expect);
    }

    #[test]
    fn basis_helpers_agree() {
        let v = mv(4, &[(&[], 1), (&[2], 3), (&[1, 3], -2), (&[2, 4], 5), (&[1, 2, 3, 4], 7)]);
        for j in 1..=4 {
            let ej = Multivector::basis_vector(4, Field::Real, j);
            assert_eq!(v.wedge_basis(j), Multivector::wedge_by_vector(&ej, &v).unwrap());
            assert_eq!(v.dot_basis(j), Multivector::dot_by_vector(&ej, &v).unwrap());
            assert_eq!(v.left_blade(Blade::vector(j)), &ej * &v);
            assert_eq!(v.right_blade(Blade::vector(j)), &v * &ej);
        }
    }
}
