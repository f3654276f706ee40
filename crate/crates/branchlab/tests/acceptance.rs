//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

use std::time::{Duration, Instant};

use branchlab::branching::branch_case_params;
use branchlab::verify::{
    check_dimension, check_independence, check_pi_casimir, check_rank_identity, check_relations,
    check_strong_multiplicity_free, check_transfer, ix_witness, CheckResult,
};
use branchlab::{all_cases, dgx, CaseRecord, CaseTag};
use num_bigint::BigInt;

const MAX_N: usize = 3;
const BOUND: i64 = 8;
const NMAX: u32 = 12;
const RELATION_BUDGET: Duration = Duration::from_secs(60);

type CriterionFn = fn(&[CaseRecord]) -> Outcome;

struct Outcome {
    ok: bool,
    detail: String,
}

/// Runs `check` on every case and summarizes the first failure.
fn over_cases(cases: &[CaseRecord], check: impl Fn(&CaseRecord) -> Vec<CheckResult>) -> Outcome {
    let (mut run, mut failed) = (0, 0);
    let mut first = None;
    for c in cases {
        for r in check(c) {
            run += r.run;
            failed += r.failed;
            if first.is_none() && !r.passed() {
                first = Some(format!("{} {}: {:?}", c.id, r.name, r.first_failure));
            }
        }
    }
    let mut detail = format!("{} cases, {run} instances, {failed} failed", cases.len());
    if let Some(f) = first {
        detail.push_str(&format!("; first: {f}"));
    }
    Outcome { ok: failed == 0 && run > 0, detail }
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1(cases: &[CaseRecord]) -> Outcome {
    let start = Instant::now();
    let mut out = over_cases(cases, |c| check_relations(c, BOUND).checks);
    let elapsed = start.elapsed();
    out.ok &= elapsed < RELATION_BUDGET;
    out.detail.push_str(&format!("; {:.1} s (budget {} s)", elapsed.as_secs_f64(), RELATION_BUDGET.as_secs()));
    out
}

fn criterion_2(cases: &[CaseRecord]) -> Outcome {
    over_cases(cases, |c| check_transfer(c, BOUND).checks)
}

fn criterion_3(cases: &[CaseRecord]) -> Outcome {
    let mut out = over_cases(cases, |c| vec![check_rank_identity(c)]);
    let star = cases.iter().find(|c| c.id.tag == CaseTag::Star);
    let star_ok = star.is_some_and(|c| c.table_ranks == (2, 1, 3));
    out.ok &= star_ok;
    out.detail.push_str(&format!("; star row (2,1,3): {star_ok}"));
    out
}

fn criterion_4(cases: &[CaseRecord]) -> Outcome {
    let mut out = over_cases(cases, |c| vec![check_dimension(c, BOUND)]);
    let vi = cases.iter().find(|c| c.id.tag == CaseTag::Vi).expect("case vi in catalog");
    let mut harmonic_ok = true;
    for j in 0..=6 {
        let harmonic = binom(j + 15, 15) - binom(j + 13, 15);
        let total: Option<BigInt> = branch_case_params(vi, &[j])
            .ok()
            .and_then(|ts| ts.iter().map(|t| vi.theta_irrep(&t.params).and_then(|l| l.dimension()).ok()).sum());
        harmonic_ok &= total == Some(harmonic);
    }
    out.ok &= harmonic_ok;
    out.detail.push_str(&format!("; harmonic polynomials on R^16 split over Spin(9) for j<=6: {harmonic_ok}"));
    out
}

fn criterion_5(cases: &[CaseRecord]) -> Outcome {
    over_cases(cases, |c| vec![check_strong_multiplicity_free(c, BOUND)])
}

fn criterion_6(cases: &[CaseRecord]) -> Outcome {
    use CaseTag::*;
    let required = [I, Iii, Iv, V, Vi, Vii, Viii, Ix, X, Xi, Star];
    let missing: Vec<&str> = required
        .iter()
        .filter(|t| !cases.iter().any(|c| c.id.tag == **t && c.hilbert.is_some()))
        .map(|t| t.name())
        .collect();
    let modelled: Vec<CaseRecord> = cases.iter().filter(|c| c.hilbert.is_some()).cloned().collect();
    let mut out = over_cases(&modelled, |c| {
        branchlab::verify::check_degrees(c, NMAX).into_iter().filter(|r| r.name == "generator-degrees").collect()
    });
    out.ok &= missing.is_empty();
    out.detail.push_str(&format!("; required tags without a model: {missing:?}"));
    out
}

fn criterion_7(cases: &[CaseRecord]) -> Outcome {
    let star = cases.iter().find(|c| c.id.tag == CaseTag::Star).expect("case star in catalog");
    let checks = dgx::suite(star, 6);
    let expected = ["dgx-membership", "x-not-in-R", "r-plus-rx", "dgx-casimir-tables"];
    let present = expected.iter().all(|n| checks.iter().any(|c| c.name == *n));
    let mut out = over_cases(std::slice::from_ref(star), |_| checks.clone());
    out.ok &= present;
    out.detail.push_str(&format!("; checks {}", checks.iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(",")));
    out
}

fn criterion_8(cases: &[CaseRecord]) -> Outcome {
    let mut out = over_cases(cases, |c| vec![check_independence(c, BOUND, 2)]);
    let ix = cases.iter().find(|c| c.id.tag == CaseTag::Ix).expect("case ix in catalog");
    let witness = ix_witness(ix, BOUND);
    let holds = witness.as_ref().is_ok_and(|w| w.holds());
    out.ok &= holds;
    out.detail.push_str(&format!("; ix parity witness: {holds}"));
    if let Ok(w) = witness {
        if let Some((a, b)) = w.separating_pair {
            out.detail.push_str(&format!(" (pair {a:?} / {b:?})"));
        }
    }
    out
}

fn criterion_9(cases: &[CaseRecord]) -> Outcome {
    over_cases(cases, |c| vec![check_pi_casimir(c, BOUND)])
}

fn main() {
    let cases = all_cases(MAX_N);
    let criteria: [(&str, CriterionFn); 9] = [
        ("relations", criterion_1),
        ("transfer", criterion_2),
        ("rank identity", criterion_3),
        ("dimension conservation", criterion_4),
        ("strong multiplicity-freeness", criterion_5),
        ("generator degrees", criterion_6),
        ("polynomial model", criterion_7),
        ("independence", criterion_8),
        ("p-side casimir", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run(&cases);
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        failures += usize::from(!out.ok);
        println!(
            "criterion {} [{name}]: {verdict} tolerance 0 (exact) | {} | {:.1} s",
            i + 1,
            out.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
