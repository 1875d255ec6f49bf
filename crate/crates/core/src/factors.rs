//! Pochhammer symbols, Gegenbauer polynomials and the embedding factors that lift
//! solutions from `R^{m-1}` to `R^m`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::clifford::Multivector;
use crate::error::{domain, Error, Result};
use crate::mvpoly::{MVPoly, Monomial};
use crate::scalar::{rational, Field, Scalar};

/// Rising factorial `(ν)_n = ν (ν+1) ... (ν+n-1)`.
pub fn pochhammer(nu: &BigRational, n: u32) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, i| acc * (nu + BigRational::from_integer(i.into())))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Univariate polynomial with rational coefficients, `coeffs[i]` multiplying `z^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * z + c)
    }
}

/// `C^ν_k(z) = Σ_{i ≤ k/2} (-1)^i (ν)_{k-i} / (i! (k-2i)!) (2z)^{k-2i}`.
pub fn gegenbauer(nu: &BigRational, k: u32) -> UniPoly {
    let mut coeffs = vec![BigRational::zero(); k as usize + 1];
    for i in 0..=k / 2 {
        let p = k - 2 * i;
        let denom = factorial(i) * factorial(p);
        let mut c = pochhammer(nu, k - i) * BigRational::from_integer(BigInt::from(2).pow(p))
            / BigRational::from_integer(denom);
        if i % 2 == 1 {
            c = -c;
        }
        coeffs[p as usize] = c;
    }
    UniPoly::new(coeffs)
}

fn radius_squared(dim: usize, field: Field) -> MVPoly {
    let mut r2 = MVPoly::zero(dim, field);
    for i in 1..=dim {
        let mut e = vec![0; dim];
        e[i - 1] = 2;
        r2.push(Monomial::new(e), Multivector::one(dim, field));
    }
    r2
}

/// Harmonic embedding factor
/// `F^{(k-j)}_{m,j} = (j+1)_{k-j} / (m-2+2j)_{k-j} · |x|^{k-j} C^{m/2+j-1}_{k-j}(x_m/|x|)`,
/// expanded as a polynomial in `x_m` and `|x|^2`.
pub fn factor_f(m: usize, k: u32, j: u32, field: Field) -> Result<MVPoly> {
    if m < 2 || j > k {
        return domain(format!("F factor needs m >= 2 and j <= k (m={m}, k={k}, j={j})"));
    }
    let n = k - j;
    let mi = m as i64;
    let ji = j as i64;
    let den = pochhammer(&rational(mi - 2 + 2 * ji, 1), n);
    if den.is_zero() {
        return domain(format!("F factor undefined for m={m}, j={j}, k={k}"));
    }
    let c = pochhammer(&rational(ji + 1, 1), n) / den;
    let nu = rational(mi + 2 * ji - 2, 2);
    let geg = gegenbauer(&nu, n);
    let r2 = radius_squared(m, field);
    let mut out = MVPoly::zero(m, field);
    let mut r2_pow = MVPoly::one(m, field);
    // C^ν_n has only powers z^{n-2i}; pair z^{n-2i} with |x|^{2i}
    for i in 0..=n / 2 {
        let p = n - 2 * i;
        let coeff = geg.coeff(p as usize);
        if !coeff.is_zero() {
            let mut e = vec![0; m];
            e[m - 1] = p;
            let xm = MVPoly::term(Monomial::new(e), Multivector::one(m, field));
            out = &out + &(&xm * &r2_pow).scaled(&Scalar::real(&c * coeff));
        }
        r2_pow = &r2_pow * &r2;
    }
    Ok(out)
}

/// Monogenic embedding factor
/// `X^{(k-j)}_{m,j} = F^{(k-j)}_{m,j} + (j+1)/(m+2j-1) · F^{(k-j-1)}_{m,j+1} · x' e_m`
/// with `x' = x_1 e_1 + ... + x_{m-1} e_{m-1}` and `F^{(-1)} = 0`.
pub fn factor_x(m: usize, k: u32, j: u32, field: Field) -> Result<MVPoly> {
    let f = factor_f(m, k, j, field)?;
    if j == k {
        return Ok(f);
    }
    let lower = factor_f(m, k, j + 1, field)?;
    let c = Scalar::ratio(j as i64 + 1, m as i64 + 2 * j as i64 - 1);
    let xe = MVPoly::vector_variable(m, field, m - 1).right_basis(m);
    Ok(&f + &(&lower * &xe).scaled(&c))
}

/// `β^{s,m}_k = -(k+m-s)/(k+s)`.
pub fn beta_const(s: usize, m: usize, k: u32) -> Result<BigRational> {
    let den = k as i64 + s as i64;
    if den == 0 {
        return domain("beta constant requires k + s > 0");
    }
    Ok(rational(-(k as i64 + m as i64 - s as i64), den))
}

/// Whether `(t, j)` belongs to the branching set `N^{s,m}_k`.
pub fn in_branch_set(s: usize, m: usize, k: u32, t: usize, j: u32) -> bool {
    t < m && j <= k && (t == s || t + 1 == s) && (!(t == 0 || t == m - 1) || j == 0)
}

/// Constants of one Hodge-de Rham embedding factor `X^{s,t,m}_{k,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HdrFactorSpec {
    pub m: usize,
    pub s: usize,
    pub t: usize,
    pub k: u32,
    pub j: u32,
    pub alpha: BigRational,
    /// `None` when `alpha = 0` and the second summand is absent.
    pub beta: Option<BigRational>,
}

pub fn make_hdr_factor_spec(m: usize, s: usize, t: usize, k: u32, j: u32) -> Result<HdrFactorSpec> {
    if m < 3 || s > m {
        return domain(format!("HdR factor needs m >= 3 and s <= m (m={m}, s={s})"));
    }
    if !in_branch_set(s, m, k, t, j) {
        return domain(format!("(t={t}, j={j}) is not in N^{{{s},{m}}}_{k}"));
    }
    if t == 0 || t == m - 1 {
        return Ok(HdrFactorSpec { m, s, t, k, j, alpha: BigRational::zero(), beta: None });
    }
    let (ji, mi, ti) = (j as i64, m as i64, t as i64);
    let alpha = rational(-(ji + 1), mi + 2 * ji - 1);
    let beta = rational(-(ji + mi - 1 - ti), ji + ti);
    debug_assert!(!beta.is_zero());
    Ok(HdrFactorSpec { m, s, t, k, j, alpha, beta: Some(beta) })
}

/// Where `e_m^{s-t+1}` is placed in the second summand of `X^{s,t,m}_{k,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorOrder {
    /// `(β^{t-s}(x'∧) + β^{t-s+1}(x'•))` acts on `e_m^{s-t+1} g`.
    OperandFirst,
    /// `e_m^{s-t+1}` multiplies `(β^{t-s} x'∧g + β^{t-s+1} x'•g)` from the right.
    RightMultiplied,
}

/// A Hodge-de Rham embedding factor with its polynomial parts precomputed.
#[derive(Debug, Clone)]
pub struct HdrFactor {
    spec: HdrFactorSpec,
    field: Field,
    leading: MVPoly,
    trailing: Option<MVPoly>,
}

impl HdrFactor {
    pub fn new(spec: HdrFactorSpec, field: Field) -> Result<Self> {
        let leading = factor_x(spec.m, spec.k, spec.j, field)?;
        let trailing = if spec.alpha.is_zero() || spec.j == spec.k {
            None
        } else {
            Some(factor_x(spec.m, spec.k, spec.j + 1, field)?)
        };
        Ok(HdrFactor { spec, field, leading, trailing })
    }

    pub fn spec(&self) -> &HdrFactorSpec {
        &self.spec
    }

    fn check_seed(&self, g: &MVPoly) -> Result<()> {
        let HdrFactorSpec { m, t, j, .. } = self.spec;
        if g.dim() != m - 1 {
            return domain(format!("seed lives in dimension {}, expected {}", g.dim(), m - 1));
        }
        if g.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if !g.is_grade(t) {
            return domain(format!("seed is not {t}-vector valued (grades {:?})", g.grades()));
        }
        if !g.is_homogeneous(j) {
            return domain(format!("seed is not {j}-homogeneous"));
        }
        if !g.dirac().is_zero() {
            return domain(format!("seed is not monogenic in R^{}", m - 1));
        }
        Ok(())
    }

    /// `X^{s,t,m}_{k,j} g` for a `t`-vector valued `j`-homogeneous monogenic `g` on `R^{m-1}`.
    pub fn apply(&self, g: &MVPoly) -> Result<MVPoly> {
        self.apply_with_order(g, OperatorOrder::OperandFirst)
    }

    pub fn apply_with_order(&self, g: &MVPoly, order: OperatorOrder) -> Result<MVPoly> {
        let (first, second) = self.summands(g, order)?;
        Ok(&first + &second)
    }

    /// The two summands `X^{(k-j)}_{m,j} e_m^{s-t} g` and the α-term; individually they
    /// need not be `s`-vector valued.
    pub fn summands(&self, g: &MVPoly, order: OperatorOrder) -> Result<(MVPoly, MVPoly)> {
        self.check_seed(g)?;
        let HdrFactorSpec { m, s, t, .. } = self.spec;
        let g = g.embed(m)?;
        let shifted = if s == t { g.clone() } else { g.left_basis(m) };
        let first = &self.leading * &shifted;
        let Some(trailing) = &self.trailing else {
            return Ok((first, MVPoly::zero(m, self.field)));
        };
        let beta = Scalar::real(self.spec.beta.clone().expect("beta is set whenever alpha != 0"));
        // (β^{t-s}, β^{t-s+1}) for s - t ∈ {0, 1}
        let (cw, cd) = if s == t {
            (Scalar::one(), beta)
        } else {
            (beta.inv().expect("beta is nonzero"), Scalar::one())
        };
        let inner = match order {
            OperatorOrder::OperandFirst => {
                // e_m^{s-t+1} g
                let h = if s == t { g.left_basis(m) } else { -&g };
                &h.x_wedge_axes(m - 1).scaled(&cw) + &h.x_dot_axes(m - 1).scaled(&cd)
            }
            OperatorOrder::RightMultiplied => {
                let w = &g.x_wedge_axes(m - 1).scaled(&cw) + &g.x_dot_axes(m - 1).scaled(&cd);
                if s == t {
                    w.right_basis(m)
                } else {
                    -&w
                }
            }
        };
        let second = (trailing * &inner).scaled(&Scalar::real(self.spec.alpha.clone()));
        Ok((first, second))
    }
}

pub fn apply_hdr_factor(spec: &HdrFactorSpec, g: &MVPoly) -> Result<MVPoly> {
    HdrFactor::new(spec.clone(), g.field())?.apply(g)
}

/// `((x∧) + β^{s,m}_{k-1} (x•)) f` for `f ∈ H^s_{k-1}(R^m)`.
pub fn apply_gmt_factor(s: usize, m: usize, k: u32, f: &MVPoly) -> Result<MVPoly> {
    if k == 0 {
        return domain("the (x∧)+β(x•) factor needs k >= 1");
    }
    if f.dim() != m {
        return Err(Error::DimensionMismatch(f.dim(), m));
    }
    if !f.is_grade(s) || !f.is_homogeneous(k - 1) {
        return domain(format!("input is not an {s}-vector valued {}-homogeneous polynomial", k - 1));
    }
    if !f.dirac().is_zero() {
        return domain("input is not monogenic");
    }
    let beta = beta_const(s, m, k - 1)?;
    Ok(&f.x_wedge() + &f.x_dot().scaled(&Scalar::real(beta)))
}

/// `x' e_m` as a univariate helper for tests and documentation.
pub fn x_prime_em(m: usize, field: Field) -> MVPoly {
    MVPoly::vector_variable(m, field, m - 1).right_basis(m)
}
