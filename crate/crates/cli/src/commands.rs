use std::path::PathBuf;

use appell_core::ball::{gram_matrix, l2_inner_product};
use appell_core::basis::{harmonic_basis, BasisBuilder};
use appell_core::json::{
    poly_from_json, poly_to_json, BasisElementJson, GmtElementJson, GramJson, HarmonicElementJson, PolyJson,
    TaylorCoefficientJson,
};
use appell_core::taylor::{taylor_coefficients_with, taylor_reconstruct_with};
use appell_core::verify::{dimension_table, random_hdr_polynomial, run_suite, DimensionRow, Suite, SuiteParams, SuiteReport};
use appell_core::{Field, MVPoly, Scalar};
use rayon::prelude::*;
use serde::Serialize;

use crate::{parse_grades, usage, write_atomic, Command, Failure};

/// Largest dimension accepted on the command line; the coordinate spaces grow like
/// `2^m` binomial(k+m-1, k).
const MAX_M: usize = 10;

fn check_m(m: usize) -> Result<(), Failure> {
    if !(3..=MAX_M).contains(&m) {
        return usage(format!("--m must be between 3 and {MAX_M}, got {m}"));
    }
    Ok(())
}

fn check_s(s: usize, m: usize) -> Result<(), Failure> {
    if s > m {
        return usage(format!("--s {s} exceeds --m {m}"));
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, value: &impl Serialize) -> Result<(), Failure> {
    let mut bytes = serde_json::to_vec_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    bytes.push(b'\n');
    match out {
        Some(path) => write_atomic(path, &bytes).map_err(|e| Failure::Internal(format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&bytes).map_err(|e| Failure::Internal(e.to_string()))
        }
    }
}

fn norms(polys: &[&MVPoly]) -> Result<Vec<Scalar>, Failure> {
    polys
        .par_iter()
        .map(|p| l2_inner_product(p, p).map(|v| v.value).map_err(Failure::from))
        .collect()
}

#[derive(Serialize)]
struct BasisDoc<E> {
    command: &'static str,
    m: usize,
    field: Field,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grades: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kmax: Option<u32>,
    /// `norm2` values are the squared norms divided by `π^pi_power`.
    pi_power: usize,
    count: usize,
    elements: Vec<E>,
}

#[derive(Serialize)]
struct VerifyDoc {
    command: &'static str,
    params: SuiteParams,
    passed: bool,
    reports: Vec<SuiteReport>,
}

#[derive(Serialize)]
struct GramDoc {
    command: &'static str,
    family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grades: Option<Vec<usize>>,
    k: u32,
    diagonal: bool,
    gram: GramJson,
}

#[derive(Serialize)]
struct TaylorDoc {
    command: &'static str,
    m: usize,
    s: usize,
    kmax: u32,
    field: Field,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    input: PolyJson,
    round_trip: bool,
    coefficients: Vec<TaylorCoefficientJson>,
}

#[derive(Serialize)]
struct DimsDoc {
    command: &'static str,
    m: usize,
    kmax: u32,
    consistent: bool,
    rows: Vec<DimensionRow>,
}

pub fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::BasisHdr(a) => {
            check_m(a.m)?;
            check_s(a.s, a.m)?;
            let field: Field = a.field.into();
            let degrees: Vec<u32> = match (a.k, a.kmax) {
                (Some(k), _) => vec![k],
                (None, Some(kmax)) => (0..=kmax).collect(),
                (None, None) => return usage("one of --k or --kmax is required"),
            };
            let mut b = BasisBuilder::new(field);
            let mut elements = Vec::new();
            for k in degrees {
                elements.extend(b.hdr_basis(a.s, a.m, k)?);
            }
            let n = norms(&elements.iter().map(|e| &e.poly).collect::<Vec<_>>())?;
            let elements: Vec<BasisElementJson> =
                elements.iter().zip(&n).map(|(e, n)| BasisElementJson::new(e, n)).collect();
            emit(
                &a.common.out,
                &BasisDoc {
                    command: "basis-hdr",
                    m: a.m,
                    field,
                    s: Some(a.s),
                    grades: None,
                    k: a.k,
                    kmax: a.kmax,
                    pi_power: a.m / 2,
                    count: elements.len(),
                    elements,
                },
            )
        }
        Command::BasisGmt(a) => {
            check_m(a.m)?;
            let grades = parse_grades(&a.grades, a.m)?;
            let field: Field = a.field.into();
            let elements = BasisBuilder::new(field).gmt_basis(&grades, a.m, a.k)?;
            let n = norms(&elements.iter().map(|e| &e.poly).collect::<Vec<_>>())?;
            let elements: Vec<GmtElementJson> =
                elements.iter().zip(&n).map(|(e, n)| GmtElementJson::new(e, a.k, n)).collect();
            emit(
                &a.common.out,
                &BasisDoc {
                    command: "basis-gmt",
                    m: a.m,
                    field,
                    s: None,
                    grades: Some(grades.into_iter().collect()),
                    k: Some(a.k),
                    kmax: None,
                    pi_power: a.m / 2,
                    count: elements.len(),
                    elements,
                },
            )
        }
        Command::BasisHarmonic(a) => {
            check_m(a.m)?;
            let field: Field = a.field.into();
            if field != Field::Complex {
                return usage("the harmonic basis is complex; use --field complex");
            }
            let basis = harmonic_basis(a.m, a.k, field)?;
            let n = norms(&basis.iter().map(|(_, p)| p).collect::<Vec<_>>())?;
            let elements: Vec<HarmonicElementJson> =
                basis.iter().zip(&n).map(|((l, p), n)| HarmonicElementJson::new(l, p, n)).collect();
            emit(
                &a.common.out,
                &BasisDoc {
                    command: "basis-harmonic",
                    m: a.m,
                    field,
                    s: None,
                    grades: None,
                    k: Some(a.k),
                    kmax: None,
                    pi_power: a.m / 2,
                    count: elements.len(),
                    elements,
                },
            )
        }
        Command::Verify(a) => {
            let suites: Vec<Suite> = if a.suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![a.suite.parse().map_err(|e: appell_core::Error| Failure::Usage(e.to_string()))?]
            };
            if suites != [Suite::Algebra] {
                check_m(a.m)?;
            }
            if let Some(s) = a.s {
                check_s(s, a.m)?;
            }
            let field: Field = a.field.into();
            if suites == [Suite::Harmonic] && field != Field::Complex {
                return usage("the harmonic suite needs --field complex");
            }
            let grades = a.grades.as_deref().map(|g| parse_grades(g, a.m)).transpose()?;
            let params = SuiteParams {
                m: a.m,
                s: a.s,
                grades,
                k: a.k,
                kmax: a.kmax,
                field,
                seed: a.seed,
                trials: a.trials,
            };
            let mut reports = Vec::new();
            for suite in suites {
                let p = if suite == Suite::Harmonic { SuiteParams { field: Field::Complex, ..params.clone() } } else { params.clone() };
                reports.push(run_suite(suite, &p)?);
            }
            let passed = reports.iter().all(|r| r.passed);
            emit(&a.common.out, &VerifyDoc { command: "verify", params, passed, reports })?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Gram(a) => {
            check_m(a.m)?;
            let field: Field = a.field.into();
            let mut b = BasisBuilder::new(field);
            let (family, polys, s, grades) = match a.family {
                crate::Family::Hdr => {
                    let Some(s) = a.s else { return usage("--family hdr needs --s") };
                    check_s(s, a.m)?;
                    let polys: Vec<MVPoly> = b.hdr_basis(s, a.m, a.k)?.into_iter().map(|e| e.poly).collect();
                    ("hdr", polys, Some(s), None)
                }
                crate::Family::Gmt => {
                    let Some(list) = &a.grades else { return usage("--family gmt needs --S") };
                    let grades = parse_grades(list, a.m)?;
                    let polys: Vec<MVPoly> = b.gmt_basis(&grades, a.m, a.k)?.into_iter().map(|e| e.poly).collect();
                    ("gmt", polys, None, Some(grades.into_iter().collect()))
                }
                crate::Family::Harmonic => {
                    if field != Field::Complex {
                        return usage("the harmonic basis is complex; use --field complex");
                    }
                    let polys: Vec<MVPoly> = harmonic_basis(a.m, a.k, field)?.into_iter().map(|(_, p)| p).collect();
                    ("harmonic", polys, None, None)
                }
            };
            let g = gram_matrix(&polys)?;
            let diagonal = g.off_diagonal_nonzeros().is_empty() && g.is_positive_diagonal();
            emit(
                &a.common.out,
                &GramDoc { command: "gram", family, s, grades, k: a.k, diagonal, gram: GramJson::new(&g, field) },
            )
        }
        Command::Taylor(a) => {
            check_m(a.m)?;
            check_s(a.s, a.m)?;
            let field: Field = a.field.into();
            let mut b = BasisBuilder::new(field);
            let (g, seed) = match &a.input {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let j: PolyJson = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let g = poly_from_json(&j).map_err(|e| Failure::Usage(e.to_string()))?;
                    if g.dim() != a.m || g.field() != field {
                        return usage("input polynomial does not match --m/--field");
                    }
                    (g, None)
                }
                None => (random_hdr_polynomial(&mut b, a.s, a.m, a.kmax, a.seed)?, Some(a.seed)),
            };
            let coeffs = match taylor_coefficients_with(&mut b, &g, a.s, a.m, a.kmax) {
                Ok(c) => c,
                Err(appell_core::Error::Domain(msg)) if a.input.is_some() => return usage(msg),
                Err(e) => return Err(e.into()),
            };
            let values: Vec<Scalar> = coeffs.iter().map(|c| c.value.clone()).collect();
            let labels: Vec<_> = coeffs.iter().map(|c| c.label.clone()).collect();
            let round_trip = taylor_reconstruct_with(&mut b, &values, &labels, a.m)? == g;
            emit(
                &a.common.out,
                &TaylorDoc {
                    command: "taylor",
                    m: a.m,
                    s: a.s,
                    kmax: a.kmax,
                    field,
                    seed,
                    input: poly_to_json(&g),
                    round_trip,
                    coefficients: coeffs.iter().map(TaylorCoefficientJson::from).collect(),
                },
            )?;
            if round_trip {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Dims(a) => {
            check_m(a.m)?;
            let rows = dimension_table(a.m, a.kmax)?;
            let consistent = rows.iter().all(DimensionRow::agrees);
            emit(&a.common.out, &DimsDoc { command: "dims", m: a.m, kmax: a.kmax, consistent, rows })?;
            if consistent {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}
