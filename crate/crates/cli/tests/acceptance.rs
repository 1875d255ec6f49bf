//! Acceptance run: one line per criterion, nonzero exit if any fails. All
//! comparisons are exact (tolerance zero).

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use appell_core::basis::{enumerate_i, BasisBuilder};
use appell_core::oracle::{oracle_rank, Constraint};
use appell_core::verify::{
    algebra_suite, alternative_order_counterexample, appell_suite, branching_suite, completeness_suite,
    gmt_suite, harmonic_suite, kernel_suite, orthogonality_suite, taylor_suite, SuiteReport,
};
use appell_core::{Field, Result};

const SEED: u64 = 20_241_014;

/// `(m, kmax)` pairs of the main grid; every grade `0..=m` is covered.
const GRID: [(usize, u32); 3] = [(3, 4), (4, 4), (5, 3)];

struct Outcome {
    passed: bool,
    summary: String,
}

fn from_reports(reports: Vec<SuiteReport>, extra: &[(bool, String)]) -> Outcome {
    let mut total = SuiteReport::new("acceptance");
    for r in reports {
        total.merge(r);
    }
    let mut passed = total.passed;
    let mut summary = format!("{} checks, {} failed", total.checks, total.failed);
    for (ok, msg) in extra {
        passed &= ok;
        summary.push_str("; ");
        summary.push_str(msg);
    }
    if let Some(f) = total.failures.first() {
        summary.push_str(&format!("; first failure {} at {} ({})", f.check, f.config, f.detail.clone().unwrap_or_default()));
    }
    Outcome { passed, summary }
}

fn grid_reports(
    field: Field,
    grid: &[(usize, u32)],
    mut suite: impl FnMut(&mut BasisBuilder, usize, usize, u32) -> Result<SuiteReport>,
) -> Result<Vec<SuiteReport>> {
    let mut out = Vec::new();
    for &(m, kmax) in grid {
        let mut b = BasisBuilder::new(field);
        for s in 0..=m {
            for k in 0..=kmax {
                out.push(suite(&mut b, s, m, k)?);
            }
        }
    }
    Ok(out)
}

fn kernel() -> Result<Outcome> {
    Ok(from_reports(grid_reports(Field::Real, &GRID, kernel_suite)?, &[]))
}

fn orthogonality() -> Result<Outcome> {
    let mut reports = grid_reports(Field::Real, &GRID, orthogonality_suite)?;
    reports.extend(grid_reports(Field::Complex, &[(3, 4)], orthogonality_suite)?);
    Ok(from_reports(reports, &[]))
}

fn completeness() -> Result<Outcome> {
    let reports = grid_reports(Field::Real, &GRID, completeness_suite)?;
    let mut riesz = true;
    for k in 0..=4u32 {
        let expected = 2 * k as usize + 3;
        riesz &= enumerate_i(1, 3, k, Field::Real)?.len() == expected;
        riesz &= oracle_rank(Constraint::Hdr, &[1].into_iter().collect(), 3, k)? == expected;
    }
    let mut constants = true;
    for &(m, _) in &GRID {
        for s in 0..=m {
            let c = (0..s).fold(1usize, |acc, i| acc * (m - i) / (i + 1));
            constants &= enumerate_i(s, m, 0, Field::Real)?.len() == c;
        }
    }
    Ok(from_reports(
        reports,
        &[(riesz, format!("|I^(1,3)_k| = 2k+3: {riesz}")), (constants, format!("|I^(s,m)_0| = C(m,s): {constants}"))],
    ))
}

fn appell() -> Result<Outcome> {
    let mut reports = Vec::new();
    for &(m, kmax) in &GRID {
        let mut b = BasisBuilder::new(Field::Real);
        for s in 0..=m {
            reports.push(appell_suite(&mut b, s, m, kmax, false)?);
        }
    }
    for m in [3, 4] {
        let mut b = BasisBuilder::new(Field::Complex);
        for s in 0..=m {
            reports.push(appell_suite(&mut b, s, m, 4, true)?);
        }
    }
    Ok(from_reports(reports, &[]))
}

fn branching() -> Result<Outcome> {
    let reports = grid_reports(Field::Real, &[(3, 3), (4, 3)], branching_suite)?;
    let alt = alternative_order_counterexample(Field::Real, 4, 3)?;
    let msg = match &alt {
        Some(x) => format!(
            "right-multiplied reading fails at m={} s={} t={} k={} j={} with grades {:?}",
            x.m, x.s, x.t, x.k, x.j, x.grades
        ),
        None => "right-multiplied reading never failed".into(),
    };
    Ok(from_reports(reports, &[(alt.is_some(), msg)]))
}

fn gmt() -> Result<Outcome> {
    let mut reports = Vec::new();
    for m in [3usize, 4] {
        let sets: [BTreeSet<usize>; 3] =
            [[1].into_iter().collect(), [1, 3].into_iter().collect(), (0..=m).collect()];
        let mut b = BasisBuilder::new(Field::Real);
        for set in &sets {
            for k in 0..=3 {
                reports.push(gmt_suite(&mut b, set, m, k)?);
            }
        }
    }
    Ok(from_reports(reports, &[]))
}

fn taylor() -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut b = BasisBuilder::new(Field::Complex);
    for s in [1, 2] {
        for kmax in 0..=3 {
            reports.push(taylor_suite(&mut b, s, 3, kmax, SEED, 100)?);
        }
    }
    Ok(from_reports(reports, &[]))
}

fn harmonic() -> Result<Outcome> {
    let mut reports = Vec::new();
    for m in [3, 4] {
        for k in 0..=4 {
            reports.push(harmonic_suite(m, k)?);
        }
    }
    Ok(from_reports(reports, &[]))
}

fn algebra() -> Result<Outcome> {
    Ok(from_reports(vec![algebra_suite(SEED, 1000)?], &[]))
}

fn run_cli(args: &[&str], out: &std::path::Path) -> std::io::Result<(Option<i32>, Vec<u8>)> {
    let status = Command::new(env!("CARGO_BIN_EXE_appell")).args(args).arg("--out").arg(out).status()?;
    Ok((status.code(), std::fs::read(out)?))
}

fn determinism() -> Result<Outcome> {
    let jobs: [&[&str]; 8] = [
        &["basis-hdr", "--m", "4", "--s", "2", "--kmax", "2", "--field", "real"],
        &["basis-hdr", "--m", "3", "--s", "1", "--k", "3", "--field", "complex"],
        &["basis-gmt", "--m", "4", "--S", "1,3", "--k", "2"],
        &["basis-harmonic", "--m", "4", "--k", "3"],
        &["gram", "--m", "3", "--s", "1", "--k", "2", "--field", "complex"],
        &["taylor", "--m", "3", "--s", "2", "--kmax", "3", "--seed", "5"],
        &["dims", "--m", "4", "--kmax", "3"],
        &["verify", "--suite", "all", "--m", "3", "--kmax", "2", "--seed", "9", "--trials", "20"],
    ];
    let dir = tempfile::tempdir().map_err(|e| appell_core::Error::Domain(e.to_string()))?;
    let mut ok = true;
    let mut mismatched = Vec::new();
    for (i, job) in jobs.iter().enumerate() {
        let a = run_cli(job, &dir.path().join(format!("a{i}.json")));
        let b = run_cli(job, &dir.path().join(format!("b{i}.json")));
        let same = match (a, b) {
            (Ok((Some(0), x)), Ok((Some(0), y))) => x == y && !x.is_empty(),
            _ => false,
        };
        if !same {
            ok = false;
            mismatched.push(job.join(" "));
        }
    }
    let msg = if ok { format!("{} jobs byte-identical", jobs.len()) } else { format!("differing or failing: {mismatched:?}") };
    Ok(Outcome { passed: ok, summary: msg })
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 10] = [
        ("kernel membership", kernel),
        ("orthogonality", orthogonality),
        ("completeness vs oracle", completeness),
        ("appell identities", appell),
        ("branching decomposition", branching),
        ("gmt decomposition", gmt),
        ("taylor round trip", taylor),
        ("harmonic basis", harmonic),
        ("operator algebra", algebra),
        ("cli determinism", determinism),
    ];
    let mut all = true;
    println!("acceptance: exact arithmetic, tolerance 0, seed {SEED}");
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f().unwrap_or_else(|e| Outcome { passed: false, summary: format!("error: {e}") });
        all &= outcome.passed;
        println!(
            "criterion {:>2} {:<24} {}  ({:.1}s) {}",
            i + 1,
            name,
            if outcome.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            outcome.summary
        );
    }
    println!("acceptance: {}", if all { "all criteria pass" } else { "FAILED" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
