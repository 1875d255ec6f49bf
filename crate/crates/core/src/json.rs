//! JSON wire format. Rationals are lowest-terms strings, so values survive a
//! round trip exactly.

use serde::{Deserialize, Serialize};

use crate::ball::GramMatrix;
use crate::basis::{BasisLabel, GTBasisElement, GmtElement, GmtKind, HarmonicLabel};
use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::mvpoly::{MVPoly, Monomial};
use crate::scalar::{format_rational, parse_rational, Field, Scalar};
use crate::taylor::TaylorCoefficient;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub re: String,
    pub im: String,
}

impl From<&Scalar> for ScalarJson {
    fn from(c: &Scalar) -> Self {
        ScalarJson { re: format_rational(c.re()), im: format_rational(c.im()) }
    }
}

impl ScalarJson {
    pub fn parse(&self) -> Result<Scalar> {
        Ok(Scalar::new(parse_rational(&self.re)?, parse_rational(&self.im)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BladeJson {
    pub indices: Vec<usize>,
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub monomial: Vec<u32>,
    pub blades: Vec<BladeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub m: usize,
    pub field: Field,
    pub terms: Vec<TermJson>,
}

pub fn terms_to_json(p: &MVPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(mono, mv)| TermJson {
            monomial: mono.exponents().to_vec(),
            blades: multivector_to_json(mv),
        })
        .collect()
}

pub fn terms_from_json(m: usize, field: Field, terms: &[TermJson]) -> Result<MVPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if t.monomial.len() != m {
            return Err(Error::DimensionMismatch(t.monomial.len(), m));
        }
        let mut blades = Vec::with_capacity(t.blades.len());
        for b in &t.blades {
            if b.indices.iter().any(|&i| i > m) {
                return Err(Error::IndexOutOfRange { index: *b.indices.iter().max().unwrap(), dim: m });
            }
            let c = Scalar::new(parse_rational(&b.re)?, parse_rational(&b.im)?);
            if !c.fits(field) {
                return Err(Error::Parse(format!("complex coefficient in {} polynomial", field.name())));
            }
            blades.push((Blade::from_indices(&b.indices)?, c));
        }
        out.push((Monomial::new(t.monomial.clone()), Multivector::from_terms(m, field, blades)?));
    }
    MVPoly::from_terms(m, field, out)
}

pub fn poly_to_json(p: &MVPoly) -> PolyJson {
    PolyJson { m: p.dim(), field: p.field(), terms: terms_to_json(p) }
}

pub fn poly_from_json(j: &PolyJson) -> Result<MVPoly> {
    terms_from_json(j.m, j.field, &j.terms)
}

impl From<MVPoly> for PolyJson {
    fn from(p: MVPoly) -> Self {
        poly_to_json(&p)
    }
}

impl TryFrom<PolyJson> for MVPoly {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<MVPoly> {
        poly_from_json(&j)
    }
}

/// A Hodge-de Rham basis element with its squared norm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElementJson {
    pub m: usize,
    pub field: Field,
    pub s: usize,
    pub k: u32,
    pub nu: Vec<i32>,
    pub mu: Vec<u32>,
    pub norm2: String,
    pub terms: Vec<TermJson>,
}

impl BasisElementJson {
    pub fn new(e: &GTBasisElement, norm2: &Scalar) -> Self {
        let l = &e.label;
        BasisElementJson {
            m: l.m,
            field: l.field,
            s: l.s,
            k: l.k,
            nu: l.nu.clone(),
            mu: l.mu.clone(),
            norm2: format_rational(norm2.re()),
            terms: terms_to_json(&e.poly),
        }
    }

    pub fn label(&self) -> BasisLabel {
        BasisLabel { m: self.m, field: self.field, s: self.s, k: self.k, nu: self.nu.clone(), mu: self.mu.clone() }
    }

    pub fn poly(&self) -> Result<MVPoly> {
        terms_from_json(self.m, self.field, &self.terms)
    }
}

/// A generalized Moisil-Théodoresco basis element. For lifted elements `k` is the
/// degree of the element itself while `nu`/`mu` label the lower element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmtElementJson {
    pub kind: GmtKind,
    pub m: usize,
    pub field: Field,
    pub s: usize,
    pub k: u32,
    pub nu: Vec<i32>,
    pub mu: Vec<u32>,
    pub norm2: String,
    pub terms: Vec<TermJson>,
}

impl GmtElementJson {
    pub fn new(e: &GmtElement, k: u32, norm2: &Scalar) -> Self {
        GmtElementJson {
            kind: e.kind,
            m: e.label.m,
            field: e.label.field,
            s: e.label.s,
            k,
            nu: e.label.nu.clone(),
            mu: e.label.mu.clone(),
            norm2: format_rational(norm2.re()),
            terms: terms_to_json(&e.poly),
        }
    }

    pub fn poly(&self) -> Result<MVPoly> {
        terms_from_json(self.m, self.field, &self.terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicElementJson {
    pub m: usize,
    pub field: Field,
    pub k: u32,
    pub mu: Vec<i64>,
    pub norm2: String,
    pub terms: Vec<TermJson>,
}

impl HarmonicElementJson {
    pub fn new(label: &HarmonicLabel, poly: &MVPoly, norm2: &Scalar) -> Self {
        HarmonicElementJson {
            m: label.m,
            field: poly.field(),
            k: label.k,
            mu: label.mu.clone(),
            norm2: format_rational(norm2.re()),
            terms: terms_to_json(poly),
        }
    }

    pub fn poly(&self) -> Result<MVPoly> {
        terms_from_json(self.m, self.field, &self.terms)
    }
}

/// Gram matrix as dense arrays of rational strings; the true inner products are
/// the entries times `π^pi_power`. Imaginary parts appear only in complex mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramJson {
    pub m: usize,
    pub field: Field,
    pub pi_power: usize,
    pub size: usize,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries_im: Option<Vec<Vec<String>>>,
}

impl GramJson {
    pub fn new(g: &GramMatrix, field: Field) -> Self {
        let part = |f: fn(&Scalar) -> String| -> Vec<Vec<String>> {
            g.entries.iter().map(|row| row.iter().map(f).collect()).collect()
        };
        GramJson {
            m: g.m,
            field,
            pi_power: g.pi_power,
            size: g.size(),
            entries: part(|c| format_rational(c.re())),
            entries_im: (field == Field::Complex).then(|| part(|c| format_rational(c.im()))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaylorCoefficientJson {
    pub k: u32,
    pub nu: Vec<i32>,
    pub mu: Vec<u32>,
    pub value: ScalarJson,
    /// The derivative-chain value as a multivector.
    pub chain_value: Vec<BladeJson>,
}

impl From<&TaylorCoefficient> for TaylorCoefficientJson {
    fn from(c: &TaylorCoefficient) -> Self {
        TaylorCoefficientJson {
            k: c.label.k,
            nu: c.label.nu.clone(),
            mu: c.label.mu.clone(),
            value: (&c.value).into(),
            chain_value: multivector_to_json(&c.chain_value),
        }
    }
}

pub fn multivector_to_json(v: &Multivector) -> Vec<BladeJson> {
    v.terms()
        .map(|(b, c)| BladeJson { indices: b.indices(), re: format_rational(c.re()), im: format_rational(c.im()) })
        .collect()
}
