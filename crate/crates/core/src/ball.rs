//! Exact `L^2(B_m)` inner products of multivector polynomials.
//!
//! Every value is stored divided by `π^{⌊m/2⌋}`, which makes all ball moments of
//! polynomials rational.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::clifford::Blade;
use crate::error::{Error, Result};
use crate::mvpoly::{MVPoly, Monomial};
use crate::scalar::{Field, Scalar};

/// An integral over the unit ball `B_m`, divided by `π^{⌊m/2⌋}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedBallValue {
    pub value: Scalar,
    pub m: usize,
}

impl NormalizedBallValue {
    pub fn pi_power(&self) -> usize {
        self.m / 2
    }
}

/// `Γ(n/2)` as `(q, p)` meaning `q · sqrt(π)^p`, `p ∈ {0, 1}`.
fn gamma_half(n: u32) -> (BigRational, u32) {
    assert!(n > 0, "Γ has a pole at 0");
    let (mut value, mut z, parity) = if n % 2 == 0 {
        (BigRational::one(), 2u32, 0)
    } else {
        (BigRational::one(), 1u32, 1)
    };
    // Γ(z/2 + 1) = (z/2) Γ(z/2)
    while z < n {
        value *= BigRational::new(BigInt::from(z), BigInt::from(2));
        z += 2;
    }
    (value, parity)
}

/// `∫_{B_m} x^α dλ / π^{⌊m/2⌋}`.
pub fn monomial_ball_integral(alpha: &[u32], m: usize) -> Result<BigRational> {
    if alpha.len() != m {
        return Err(Error::DimensionMismatch(alpha.len(), m));
    }
    if alpha.iter().any(|a| a % 2 == 1) {
        return Ok(BigRational::zero());
    }
    let total: u32 = alpha.iter().sum::<u32>() + m as u32;
    // 2 Π Γ((α_i+1)/2) / (Γ((|α|+m)/2) (|α|+m))
    let mut num = BigRational::from_integer(2.into());
    let mut sqrt_pi = 0u32;
    for &a in alpha {
        let (g, p) = gamma_half(a + 1);
        num *= g;
        sqrt_pi += p;
    }
    let (g, p) = gamma_half(total);
    sqrt_pi -= p;
    debug_assert_eq!(sqrt_pi as usize, 2 * (m / 2));
    Ok(num / (g * BigRational::from_integer(total.into())))
}

/// Weight `[ē_A e_A]_0` (before coefficient conjugation).
fn blade_weight(b: Blade) -> i64 {
    let s = b.grade();
    let conj_sign = if (s * (s + 1) / 2) % 2 == 1 { -1 } else { 1 };
    let (sq, _) = b.product(b);
    conj_sign * sq as i64
}

fn check_pair(f: &MVPoly, g: &MVPoly) -> Result<()> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch(f.dim(), g.dim()));
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

fn conj_for(c: &Scalar, field: Field) -> Scalar {
    match field {
        Field::Real => c.clone(),
        Field::Complex => c.conj(),
    }
}

/// `(f, g) = ∫_{B_m} [f̄ g]_0`, Hermitian in complex mode.
pub fn l2_inner_product(f: &MVPoly, g: &MVPoly) -> Result<NormalizedBallValue> {
    check_pair(f, g)?;
    let m = f.dim();
    let mut by_blade: BTreeMap<Blade, Vec<(&Monomial, &Scalar)>> = BTreeMap::new();
    for (mono, b, c) in g.coefficients() {
        by_blade.entry(b).or_default().push((mono, c));
    }
    let mut acc = Scalar::zero();
    for (ma, b, a) in f.coefficients() {
        let Some(gs) = by_blade.get(&b) else { continue };
        let ca = conj_for(a, f.field()).scale_int(blade_weight(b));
        for (mb, c) in gs {
            let moment = monomial_ball_integral(ma.mul(mb).exponents(), m)?;
            if !moment.is_zero() {
                acc += &(&ca * *c).scaled_rational(&moment);
            }
        }
    }
    Ok(NormalizedBallValue { value: acc, m })
}

impl Scalar {
    pub(crate) fn scaled_rational(&self, r: &BigRational) -> Scalar {
        Scalar::new(self.re() * r, self.im() * r)
    }
}

/// Dense Gram matrix, normalized by `π^{pi_power}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub m: usize,
    pub pi_power: usize,
    pub entries: Vec<Vec<Scalar>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn off_diagonal_nonzeros(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i != j && !v.is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Exactly diagonal with positive rational diagonal.
    pub fn is_positive_diagonal(&self) -> bool {
        self.off_diagonal_nonzeros().is_empty()
            && self.entries.iter().enumerate().all(|(i, row)| row[i].is_positive_real())
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        self.entries.iter().enumerate().map(|(i, row)| row[i].clone()).collect()
    }

    pub fn is_hermitian(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i].conj()))
    }
}

/// Gram matrix of pairwise inner products. Each element is first multiplied by the
/// moment matrix `(∫ x^{α+β})_{α,β}` so that entries reduce to coordinate dot products.
pub fn gram_matrix(basis: &[MVPoly]) -> Result<GramMatrix> {
    let Some(first) = basis.first() else {
        return Ok(GramMatrix { m: 0, pi_power: 0, entries: Vec::new() });
    };
    for p in basis {
        check_pair(first, p)?;
    }
    let m = first.dim();
    let field = first.field();
    let mut monos: Vec<Monomial> = basis.iter().flat_map(|p| p.terms().map(|(mo, _)| mo.clone())).collect();
    monos.sort();
    monos.dedup();
    let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, mo)| (mo, i)).collect();
    let moments: Vec<Vec<BigRational>> = monos
        .par_iter()
        .map(|a| monos.iter().map(|b| monomial_ball_integral(a.mul(b).exponents(), m)).collect::<Result<_>>())
        .collect::<Result<_>>()?;

    // per element: blade -> dense coefficient column over `monos`
    let columns: Vec<BTreeMap<Blade, Vec<(usize, Scalar)>>> = basis
        .iter()
        .map(|p| {
            let mut cols: BTreeMap<Blade, Vec<(usize, Scalar)>> = BTreeMap::new();
            for (mo, b, c) in p.coefficients() {
                cols.entry(b).or_default().push((index[mo], c.clone()));
            }
            cols
        })
        .collect();
    let weighted: Vec<BTreeMap<Blade, Vec<Scalar>>> = columns
        .par_iter()
        .map(|cols| {
            cols.iter()
                .map(|(b, entries)| {
                    let w: Vec<Scalar> = (0..monos.len())
                        .map(|a| {
                            let mut acc = Scalar::zero();
                            for (i, c) in entries {
                                let mom = &moments[a][*i];
                                if !mom.is_zero() {
                                    acc += &c.scaled_rational(mom);
                                }
                            }
                            acc
                        })
                        .collect();
                    (*b, w)
                })
                .collect()
        })
        .collect();
    let entries: Vec<Vec<Scalar>> = columns
        .par_iter()
        .map(|fi| {
            weighted
                .iter()
                .map(|gj| {
                    let mut acc = Scalar::zero();
                    for (b, entries) in fi {
                        let Some(w) = gj.get(b) else { continue };
                        let sign = blade_weight(*b);
                        for (i, c) in entries {
                            if !w[*i].is_zero() {
                                acc += &(&conj_for(c, field) * &w[*i]).scale_int(sign);
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Ok(GramMatrix { m, pi_power: m / 2, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{harmonic_basis, hdr_basis};
    use crate::clifford::Multivector;
    use crate::scalar::rational;

    #[test]
    fn gamma_at_half_integers() {
        assert_eq!(gamma_half(1), (rational(1, 1), 1));
        assert_eq!(gamma_half(2), (rational(1, 1), 0));
        assert_eq!(gamma_half(3), (rational(1, 2), 1));
        assert_eq!(gamma_half(5), (rational(3, 4), 1));
        assert_eq!(gamma_half(8), (rational(6, 1), 0));
    }

    #[test]
    fn ball_moment_examples() {
        assert_eq!(monomial_ball_integral(&[0, 0, 0], 3).unwrap(), rational(4, 3));
        assert_eq!(monomial_ball_integral(&[2, 0, 0], 3).unwrap(), rational(4, 15));
        assert!(monomial_ball_integral(&[1, 2, 0], 3).unwrap().is_zero());
        // area of the unit disc is π, volume of B_4 is π²/2
        assert_eq!(monomial_ball_integral(&[0, 0], 2).unwrap(), rational(1, 1));
        assert_eq!(monomial_ball_integral(&[0, 0, 0, 0], 4).unwrap(), rational(1, 2));
        assert!(monomial_ball_integral(&[0, 0], 3).is_err());
    }

    /// Moments of B_m from the radial split and sphere moments computed by the
    /// recursion ∫_{S^{m-1}} x^α = (α_1 - 1)/(|α| + m - 2) · ∫_{S^{m-1}} x^{α - 2e_1}.
    #[test]
    fn ball_moments_match_radial_recursion() {
        fn sphere(alpha: &[u32], m: usize) -> BigRational {
            // normalized by the sphere area
            if alpha.iter().any(|a| a % 2 == 1) {
                return BigRational::zero();
            }
            let Some(i) = alpha.iter().position(|&a| a > 0) else {
                return BigRational::one();
            };
            let total: u32 = alpha.iter().sum();
            let mut lower = alpha.to_vec();
            lower[i] -= 2;
            rational(alpha[i] as i64 - 1, (total + m as u32 - 2) as i64) * sphere(&lower, m)
        }
        for m in 2..=5usize {
            let vol = monomial_ball_integral(&vec![0; m], m).unwrap();
            for mono in Monomial::all_of_degree(m, 4).iter().chain(Monomial::all_of_degree(m, 2).iter()) {
                let a = mono.exponents();
                let total: u32 = a.iter().sum();
                // ∫_B x^α = |S| ∫_0^1 r^{|α|+m-1} dr · ⟨x^α⟩_S and |S| = m |B|
                let expect = &vol * rational(m as i64, (total as i64) + m as i64) * sphere(a, m);
                assert_eq!(monomial_ball_integral(a, m).unwrap(), expect, "{a:?}");
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let one = MVPoly::one(3, Field::Real);
        assert_eq!(l2_inner_product(&one, &one).unwrap().value, Scalar::ratio(4, 3));
        let e1 = MVPoly::constant(Multivector::basis_vector(3, Field::Real, 1));
        let e2 = MVPoly::constant(Multivector::basis_vector(3, Field::Real, 2));
        assert!(l2_inner_product(&e1, &e2).unwrap().value.is_zero());
        assert_eq!(l2_inner_product(&e1, &e1).unwrap().value, Scalar::ratio(4, 3));
        assert!(l2_inner_product(&e1, &MVPoly::one(4, Field::Real)).is_err());
    }

    #[test]
    fn gram_examples() {
        let g = gram_matrix(&[MVPoly::one(3, Field::Real)]).unwrap();
        assert_eq!(g.entries, vec![vec![Scalar::ratio(4, 3)]]);
        assert_eq!(g.pi_power, 1);
        let polys: Vec<MVPoly> = hdr_basis(1, 3, 1, Field::Real).unwrap().into_iter().map(|e| e.poly).collect();
        let g = gram_matrix(&polys).unwrap();
        assert_eq!(g.size(), 5);
        assert!(g.is_positive_diagonal(), "{:?}", g.off_diagonal_nonzeros());
        let h: Vec<MVPoly> = harmonic_basis(3, 1, Field::Complex).unwrap().into_iter().map(|e| e.1).collect();
        let g = gram_matrix(&h).unwrap();
        assert_eq!(g.size(), 3);
        assert!(g.is_positive_diagonal());
        for i in 0..polys.len() {
            for j in 0..polys.len() {
                assert_eq!(g_entry(&polys, i, j), gram_matrix(&polys).unwrap().entries[i][j]);
            }
        }
    }

    fn g_entry(p: &[MVPoly], i: usize, j: usize) -> Scalar {
        l2_inner_product(&p[i], &p[j]).unwrap().value
    }
}
