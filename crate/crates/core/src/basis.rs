//! Index sets and the recursive Gelfand-Tsetlin constructions.
//!
//! A Hodge-de Rham basis element in `R^m` is obtained from a dimension-2 seed by
//! applying the embedding factors `X^{s_r, s_{r-1}, r}_{k_r, k_{r-1}}` for
//! `r = 3, ..., m`. Labels record the chain of grades `ν` and degrees `μ`.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::Multivector;
use crate::error::{domain, Result};
use crate::factors::{apply_gmt_factor, factor_f, in_branch_set, make_hdr_factor_spec, HdrFactor};
use crate::mvpoly::{MVPoly, Monomial};
use crate::scalar::{Field, Scalar};

/// One pair `(t, j)` of the branching set `N^{s,m}_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BranchPair {
    pub t: usize,
    pub j: u32,
}

/// `N^{s,m}_k`, ordered by `t` then `j`.
pub fn enumerate_n(s: usize, m: usize, k: u32) -> Result<Vec<BranchPair>> {
    if m < 3 || s > m {
        return domain(format!("N^{{s,m}}_k needs m >= 3 and 0 <= s <= m (s={s}, m={m})"));
    }
    let mut out = Vec::new();
    for t in s.saturating_sub(1)..=s.min(m - 1) {
        for j in 0..=k {
            if in_branch_set(s, m, k, t, j) {
                out.push(BranchPair { t, j });
            }
        }
    }
    Ok(out)
}

/// Label `(m, field, s, k, ν, μ)` of a basis element `f^{s,ν}_{k,μ}`, with
/// `ν = (s_{m-1}, ..., s_3, t_2)` and `μ = (k_{m-1}, ..., k_2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisLabel {
    pub m: usize,
    pub field: Field,
    pub s: usize,
    pub k: u32,
    pub nu: Vec<i32>,
    pub mu: Vec<u32>,
}

impl BasisLabel {
    pub fn t2(&self) -> i32 {
        *self.nu.last().expect("nu is nonempty")
    }

    pub fn k2(&self) -> u32 {
        *self.mu.last().expect("mu is nonempty")
    }

    /// `s_r` for `2 <= r <= m` (with `s_2 = |t_2|`, `s_m = s`).
    pub fn grade_at(&self, r: usize) -> usize {
        if r == self.m {
            self.s
        } else if r == 2 {
            self.t2().unsigned_abs() as usize
        } else {
            self.nu[self.m - 1 - r] as usize
        }
    }

    /// `k_r` for `2 <= r <= m` (with `k_m = k`).
    pub fn degree_at(&self, r: usize) -> u32 {
        if r == self.m {
            self.k
        } else {
            self.mu[self.m - 1 - r]
        }
    }

    /// The same `(ν, μ)` at another top degree.
    pub fn with_degree(&self, k: u32) -> BasisLabel {
        BasisLabel { k, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.m;
        if m < 3 || self.s > m || self.nu.len() != m - 2 || self.mu.len() != m - 2 {
            return domain(format!("malformed label {self:?}"));
        }
        if (self.s == 0 || self.s == m) && self.k > 0 {
            return domain(format!("H^{}_{} of R^{m} is trivial", self.s, self.k));
        }
        match (self.t2(), self.k2()) {
            (0, 0) | (2, 0) | (1, _) | (-1, _) => {}
            other => return domain(format!("inadmissible seed (t_2, k_2) = {other:?}")),
        }
        for r in 3..=m {
            let (t, j) = (self.grade_at(r - 1), self.degree_at(r - 1));
            if !in_branch_set(self.grade_at(r), r, self.degree_at(r), t, j) {
                return domain(format!("label {self:?} breaks the branching condition at r={r}"));
            }
        }
        Ok(())
    }

    fn sort_key(&self) -> (&[i32], &[u32]) {
        (&self.nu, &self.mu)
    }
}

/// `I^{s,m}_k` in lexicographic order on `(ν, μ)`. Empty for `s ∈ {0, m}`, `k >= 1`.
pub fn enumerate_i(s: usize, m: usize, k: u32, field: Field) -> Result<Vec<BasisLabel>> {
    if m < 3 || s > m {
        return domain(format!("I^{{s,m}}_k needs m >= 3 and 0 <= s <= m (s={s}, m={m})"));
    }
    if (s == 0 || s == m) && k > 0 {
        return Ok(Vec::new());
    }
    fn chains(s: usize, r: usize, k: u32, out: &mut Vec<(Vec<i32>, Vec<u32>)>) {
        if r == 2 {
            match s {
                0 => out.push((vec![0], vec![0])),
                2 => out.push((vec![2], vec![0])),
                _ => {
                    out.push((vec![1], vec![k]));
                    out.push((vec![-1], vec![k]));
                }
            }
            return;
        }
        for BranchPair { t, j } in enumerate_n(s, r, k).expect("valid range") {
            let mut sub = Vec::new();
            chains(t, r - 1, j, &mut sub);
            for (mut nu, mut mu) in sub {
                if r > 3 {
                    nu.insert(0, t as i32);
                    mu.insert(0, j);
                }
                out.push((nu, mu));
            }
        }
    }
    let mut raw = Vec::new();
    chains(s, m, k, &mut raw);
    let mut labels: Vec<BasisLabel> =
        raw.into_iter().map(|(nu, mu)| BasisLabel { m, field, s, k, nu, mu }).collect();
    labels.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(labels)
}

/// `J^{s,m}`: grade chains `ν = (s_{m-1}, ..., s_3, t_2)` indexing the blades `e^{s,ν}`.
pub fn enumerate_j(s: usize, m: usize) -> Result<Vec<Vec<i32>>> {
    if m < 2 || s > m {
        return domain(format!("J^{{s,m}} needs m >= 2 and 0 <= s <= m (s={s}, m={m})"));
    }
    fn rec(s: usize, r: usize, prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if r == 2 {
            let seeds: &[i32] = match s {
                0 => &[0],
                1 => &[1, -1],
                2 => &[2],
                _ => &[],
            };
            for &t2 in seeds {
                prefix.push(t2);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for t in s.saturating_sub(1)..=s.min(r - 1) {
            if r > 3 {
                prefix.push(t as i32);
            }
            rec(t, r - 1, prefix, out);
            if r > 3 {
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(s, m, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// The dimension-2 seed blade `e^{s_2, t_2}`.
pub fn seed_blade(t2: i32, field: Field) -> Result<Multivector> {
    let e = |i: usize| Multivector::basis_vector(2, field, i);
    Ok(match (t2, field) {
        (0, _) => Multivector::one(2, field),
        (2, _) => &e(2) * &e(1),
        (1, Field::Real) => e(1),
        (-1, Field::Real) => e(2),
        (1, Field::Complex) => &e(1) - &e(2).scaled(&Scalar::i()),
        (-1, Field::Complex) => &e(1) + &e(2).scaled(&Scalar::i()),
        _ => return domain(format!("no seed blade for t_2 = {t2}")),
    })
}

/// `e^{s,ν} = e_m^{s - s_{m-1}} ... e_3^{s_3 - s_2} e^{s_2, t_2}` in `Cl_m`.
pub fn blade_e(s: usize, nu: &[i32], m: usize, field: Field) -> Result<Multivector> {
    let expected = if m == 2 { 1 } else { m.saturating_sub(2) };
    if m < 2 || nu.len() != expected {
        return domain(format!("ν must have length {expected} for m = {m}"));
    }
    let t2 = *nu.last().ok_or_else(|| crate::Error::Domain("empty ν".into()))?;
    let grade = |r: usize| -> usize {
        if r == m {
            s
        } else if r == 2 {
            t2.unsigned_abs() as usize
        } else {
            nu[m - 1 - r] as usize
        }
    };
    let mut out = seed_blade(t2, field)?.embed(m)?;
    for r in 3..=m {
        let (hi, lo) = (grade(r), grade(r - 1));
        if hi == lo + 1 {
            out = &Multivector::basis_vector(m, field, r) * &out;
        } else if hi != lo {
            return domain(format!("ν = {nu:?} is not a grade chain for s = {s}"));
        }
    }
    Ok(out)
}

/// Dimension-2 Hodge-de Rham seed `f^{t_2}_{k_2}`.
pub fn base_case_dim2(t2: i32, k2: u32, field: Field) -> Result<MVPoly> {
    match t2 {
        0 | 2 if k2 > 0 => domain(format!("H^{t2}_{k2}(R^2) is trivial")),
        0 | 2 => Ok(MVPoly::constant(seed_blade(t2, field)?)),
        1 | -1 => {
            let x1 = MVPoly::coordinate(2, field, 1);
            let x2 = MVPoly::coordinate(2, field, 2);
            let base = match field {
                // x_1 - e_12 x_2
                Field::Real => &x1 - &x2.left_basis(2).left_basis(1),
                // x_1 ∓ i x_2
                Field::Complex => &x1 - &x2.scaled(&Scalar::gaussian(0, t2 as i64)),
            };
            Ok(base.pow(k2).right_mul(&seed_blade(t2, field)?))
        }
        _ => domain(format!("inadmissible seed t_2 = {t2}")),
    }
}

/// Label of a harmonic basis element: `μ = (k_{m-1}, ..., k_3, ±k_2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HarmonicLabel {
    pub m: usize,
    pub k: u32,
    pub mu: Vec<i64>,
}

/// Complex spherical harmonics `h_{k,μ} = (x_1 ∓ i x_2)^{k_2} Π_{r=3}^m F^{(k_r - k_{r-1})}_{r,k_{r-1}}`.
pub fn harmonic_basis(m: usize, k: u32, field: Field) -> Result<Vec<(HarmonicLabel, MVPoly)>> {
    if field != Field::Complex {
        return domain("the harmonic Gelfand-Tsetlin basis is complex; use the complex field");
    }
    if m < 3 {
        return domain("harmonic basis needs m >= 3");
    }
    fn seqs(top: u32, len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=top {
            prefix.push(v);
            seqs(v, len - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    seqs(k, m - 2, &mut Vec::new(), &mut raw);
    let x1 = MVPoly::coordinate(m, field, 1);
    let ix2 = MVPoly::coordinate(m, field, 2).scaled(&Scalar::i());
    let mut out = Vec::new();
    for ks in raw {
        // ks = (k_{m-1}, ..., k_2)
        let degree_at = |r: usize| if r == m { k } else { ks[m - 1 - r] };
        let mut prod = MVPoly::one(m, field);
        for r in 3..=m {
            let f = factor_f(r, degree_at(r), degree_at(r - 1), field)?.embed(m)?;
            prod = &prod * &f;
        }
        let k2 = degree_at(2);
        let signs: &[i64] = if k2 == 0 { &[1] } else { &[1, -1] };
        for &sign in signs {
            let base = if sign > 0 { &x1 - &ix2 } else { &x1 + &ix2 };
            let mut mu: Vec<i64> = ks.iter().map(|&v| v as i64).collect();
            *mu.last_mut().expect("m >= 3") *= sign;
            out.push((HarmonicLabel { m, k, mu }, &base.pow(k2) * &prod));
        }
    }
    out.sort_by(|a, b| a.0.mu.cmp(&b.0.mu));
    Ok(out)
}

/// A constructed Hodge-de Rham basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTBasisElement {
    pub label: BasisLabel,
    pub poly: MVPoly,
}

type Chain = (Vec<i32>, Vec<u32>, MVPoly);

/// Memoizing builder for Hodge-de Rham bases; sub-bases in lower dimensions are
/// shared across all labels and degrees requested from the same builder.
pub struct BasisBuilder {
    field: Field,
    cache: HashMap<(usize, usize, u32), Arc<Vec<Chain>>>,
}

impl BasisBuilder {
    pub fn new(field: Field) -> Self {
        BasisBuilder { field, cache: HashMap::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn chains(&mut self, s: usize, r: usize, k: u32) -> Result<Arc<Vec<Chain>>> {
        if let Some(c) = self.cache.get(&(s, r, k)) {
            return Ok(c.clone());
        }
        let field = self.field;
        let mut out = Vec::new();
        if r == 2 {
            let seeds: &[i32] = match s {
                0 => &[0],
                1 => &[1, -1],
                2 => &[2],
                _ => &[],
            };
            for &t2 in seeds {
                out.push((vec![t2], vec![k], base_case_dim2(t2, k, field)?));
            }
        } else {
            for BranchPair { t, j } in enumerate_n(s, r, k)? {
                let sub = self.chains(t, r - 1, j)?;
                let factor = HdrFactor::new(make_hdr_factor_spec(r, s, t, k, j)?, field)?;
                let lifted: Result<Vec<Chain>> = sub
                    .par_iter()
                    .map(|(nu, mu, g)| {
                        let poly = factor.apply(g)?;
                        let (mut nu, mut mu) = (nu.clone(), mu.clone());
                        if r > 3 {
                            nu.insert(0, t as i32);
                            mu.insert(0, j);
                        }
                        Ok((nu, mu, poly))
                    })
                    .collect();
                out.extend(lifted?);
            }
        }
        let out = Arc::new(out);
        self.cache.insert((s, r, k), out.clone());
        Ok(out)
    }

    /// Basis of `H^s_k(R^m)`, ordered like [`enumerate_i`].
    pub fn hdr_basis(&mut self, s: usize, m: usize, k: u32) -> Result<Vec<GTBasisElement>> {
        if m < 3 || s > m {
            return domain(format!("hdr basis needs m >= 3 and 0 <= s <= m (s={s}, m={m})"));
        }
        if (s == 0 || s == m) && k > 0 {
            return Ok(Vec::new());
        }
        let field = self.field;
        let mut out: Vec<GTBasisElement> = self
            .chains(s, m, k)?
            .iter()
            .map(|(nu, mu, poly)| GTBasisElement {
                label: BasisLabel { m, field, s, k, nu: nu.clone(), mu: mu.clone() },
                poly: poly.clone(),
            })
            .collect();
        out.sort_by(|a, b| a.label.sort_key().cmp(&b.label.sort_key()));
        Ok(out)
    }

    /// Images of the `(m-1)`-dimensional bases under a single branching factor
    /// `X^{s,t,m}_{k,j}`, for every `(t, j) ∈ N^{s,m}_k`.
    pub fn branching_pieces(&mut self, s: usize, m: usize, k: u32) -> Result<Vec<(BranchPair, Vec<MVPoly>)>> {
        let mut out = Vec::new();
        for pair in enumerate_n(s, m, k)? {
            let factor = HdrFactor::new(make_hdr_factor_spec(m, s, pair.t, k, pair.j)?, self.field)?;
            let images: Result<Vec<MVPoly>> =
                self.lower_basis(pair.t, m - 1, pair.j)?.iter().map(|g| factor.apply(g)).collect();
            out.push((pair, images?));
        }
        Ok(out)
    }

    /// The `H^t_j(R^{r})` basis used as seed space for the branching in `R^{r+1}`,
    /// including the dimension-2 seeds.
    pub fn lower_basis(&mut self, t: usize, r: usize, j: u32) -> Result<Vec<MVPoly>> {
        if r == 2 {
            return Ok(self.chains(t, 2, j)?.iter().map(|c| c.2.clone()).collect());
        }
        Ok(self.hdr_basis(t, r, j)?.into_iter().map(|e| e.poly).collect())
    }

    /// Basis of `M_k(R^m, Cl^S_m)` following the Moisil-Théodoresco decomposition.
    pub fn gmt_basis(&mut self, grades: &BTreeSet<usize>, m: usize, k: u32) -> Result<Vec<GmtElement>> {
        if let Some(&s) = grades.iter().find(|&&s| s > m) {
            return domain(format!("grade {s} exceeds dimension {m}"));
        }
        let mut out = Vec::new();
        for &s in grades {
            for e in self.hdr_basis(s, m, k)? {
                out.push(GmtElement { kind: GmtKind::Hdr, label: e.label, poly: e.poly });
            }
        }
        if k >= 1 {
            for s in lifted_grades(grades, m) {
                for e in self.hdr_basis(s, m, k - 1)? {
                    let poly = apply_gmt_factor(s, m, k, &e.poly)?;
                    out.push(GmtElement { kind: GmtKind::Lifted, label: e.label, poly });
                }
            }
        }
        Ok(out)
    }
}

/// `S' = {s : s - 1 ∈ S and s + 1 ∈ S}`.
pub fn lifted_grades(grades: &BTreeSet<usize>, m: usize) -> Vec<usize> {
    (1..m).filter(|s| grades.contains(&(s - 1)) && grades.contains(&(s + 1))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GmtKind {
    /// An element `f^{s,ν}_{k,μ}` of `H^s_k`.
    Hdr,
    /// `((x∧) + β^{s,m}_{k-1}(x•)) f^{s,ν}_{k-1,μ}`; the label is that of the lower element.
    Lifted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmtElement {
    pub kind: GmtKind,
    pub label: BasisLabel,
    pub poly: MVPoly,
}

pub fn hdr_basis(s: usize, m: usize, k: u32, field: Field) -> Result<Vec<GTBasisElement>> {
    BasisBuilder::new(field).hdr_basis(s, m, k)
}

pub fn gmt_basis(grades: &BTreeSet<usize>, m: usize, k: u32, field: Field) -> Result<Vec<GmtElement>> {
    BasisBuilder::new(field).gmt_basis(grades, m, k)
}

/// Number of monomials of degree `k` in `m` variables.
pub fn monomial_count(m: usize, k: u32) -> usize {
    Monomial::all_of_degree(m, k).len()
}
