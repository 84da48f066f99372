//! Acceptance suite: one test per top-level guarantee, each printing a
//! PASS/FAIL line. Shared coefficient tables are computed once and reused
//! across criteria.
//!
//! Run with `cargo test -p kdiamond --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use kdiamond::audit::{audit_ratio, audit_sandwich, audit_tail_sum, audit_x_threshold, Verdict};
use kdiamond::interval::Interval;
use kdiamond::qseries::{delta_coeffs, eta_quotient_coeffs, EtaQuotient};
use kdiamond::rademacher::{
    applicable, delta_engine, error_bound, main_term, Applicability, DEFAULT_PRECISION_CAP,
};
use kdiamond::turan::{log_concave_at, multiplicative_violations, scan_minimal_shift, turan3_at};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use std::sync::OnceLock;

fn delta_table(k: u64) -> &'static Vec<BigInt> {
    static T1: OnceLock<Vec<BigInt>> = OnceLock::new();
    static T2: OnceLock<Vec<BigInt>> = OnceLock::new();
    let cell = match k {
        1 => &T1,
        2 => &T2,
        _ => unreachable!("tables cached for k = 1, 2 only"),
    };
    cell.get_or_init(|| delta_coeffs(k, 5001).coeffs().to_vec())
}

fn verdict_line(criterion: &str, pass: bool, detail: &str) {
    println!(
        "{} criterion {criterion}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

/// 1. Certified series enclosures round-trip the exact coefficients for
///    k in {1,2}, 1 <= n <= 1000, with exactly one integer per enclosure.
#[test]
fn criterion_1_series_round_trip() {
    let mut all_ok = true;
    for k in [1u64, 2] {
        let table = delta_table(k);
        let engine = delta_engine(k).expect("k = 1, 2 applicable");
        engine.prepare(64);
        let mismatches: Vec<u64> = (1..=1000u64)
            .into_par_iter()
            .filter(|&n| {
                let (value, _) = engine
                    .eval_integer(n, DEFAULT_PRECISION_CAP)
                    .expect("series evaluation");
                value != table[n as usize]
            })
            .collect();
        if !mismatches.is_empty() {
            all_ok = false;
            verdict_line(
                "1 (round trip)",
                false,
                &format!("k={k}: mismatches at {mismatches:?}"),
            );
        }
    }
    verdict_line(
        "1 (round trip)",
        all_ok,
        "k=1,2 and n=1..=1000: unique-integer enclosures equal exact coefficients",
    );
    assert!(all_ok);
}

/// 2. The gcd-periodic constants reproduce the reference table exactly.
#[test]
fn criterion_2_constants_table() {
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let expected_alpha_1: Vec<BigRational> = [(7, 3), (4, 3), (1, 1), (4, 3), (7, 3), (4, 1)]
        .iter()
        .map(|&(n, d)| rat(n, d))
        .collect();
    let expected_beta_1: Vec<BigRational> = [(5, 72), (5, 18), (11, 24), (5, 18), (5, 72), (5, 6)]
        .iter()
        .map(|&(n, d)| rat(n, d))
        .collect();
    let expected_alpha_2: Vec<BigRational> = [
        (12, 5),
        (6, 5),
        (12, 5),
        (6, 5),
        (0, 1),
        (6, 5),
        (12, 5),
        (6, 5),
        (12, 5),
        (6, 1),
    ]
    .iter()
    .map(|&(n, d)| rat(n, d))
    .collect();
    let expected_beta_2: Vec<BigRational> = [
        (0, 1),
        (3, 20),
        (0, 1),
        (3, 20),
        (1, 2),
        (3, 20),
        (0, 1),
        (3, 20),
        (0, 1),
        (3, 4),
    ]
    .iter()
    .map(|&(n, d)| rat(n, d))
    .collect();

    let mut ok = true;
    for (k, ea, eb) in [
        (1u64, &expected_alpha_1, &expected_beta_1),
        (2, &expected_alpha_2, &expected_beta_2),
    ] {
        let c = kdiamond::rademacher::SeriesConstants::new(&EtaQuotient::broken_diamond(k));
        let alpha: Vec<BigRational> = (1..=4 * k + 2).map(|j| c.c3(j).clone()).collect();
        let beta: Vec<BigRational> = (1..=4 * k + 2).map(|j| c.beta(j).clone()).collect();
        if &alpha != ea || &beta != eb {
            ok = false;
        }
    }
    verdict_line(
        "2 (constants table)",
        ok,
        "alpha_k(j), beta_k(j) for j = 1..=4k+2, k = 1,2 match exactly",
    );
    assert!(ok);
}

/// 3. Minimal-shift scan at horizon 2000 reproduces the reference rows for
///    d = 2..=13, both k.
#[test]
fn criterion_3_minimal_shift_table() {
    let expected_1: [usize; 12] = [0, 4, 17, 41, 72, 116, 171, 238, 320, 415, 525, 650];
    let expected_2: [usize; 12] = [0, 4, 17, 34, 62, 99, 147, 200, 272, 355, 445, 552];
    let mut ok = true;
    for (k, expected) in [(1u64, &expected_1), (2, &expected_2)] {
        let table = delta_table(k);
        let rows: Vec<Option<usize>> = (2..=13usize)
            .into_par_iter()
            .map(|d| scan_minimal_shift(table, d, 2000).minimal_shift)
            .collect();
        for (i, (got, want)) in rows.iter().zip(expected.iter()).enumerate() {
            if *got != Some(*want) {
                ok = false;
                verdict_line(
                    "3 (shift table)",
                    false,
                    &format!("k={k}, d={}: got {got:?}, want {want}", i + 2),
                );
            }
        }
    }
    verdict_line(
        "3 (shift table)",
        ok,
        "N(d) rows for d = 2..=13 at horizon 2000 match the reference table (conjectural beyond)",
    );
    assert!(ok);
}

/// 4. Log-concavity holds for 1 <= n <= 5000, k in {1,2}, exactly.
#[test]
fn criterion_4_log_concavity_at_scale() {
    let mut ok = true;
    for k in [1u64, 2] {
        let table = delta_table(k);
        let failures: Vec<usize> = (1..=5000usize)
            .filter(|&n| !log_concave_at(table, n))
            .collect();
        if !failures.is_empty() {
            ok = false;
            verdict_line(
                "4 (log-concavity)",
                false,
                &format!("k={k} failures at {failures:?}"),
            );
        }
    }
    verdict_line(
        "4 (log-concavity)",
        ok,
        "Delta_k(n)^2 >= Delta_k(n-1) Delta_k(n+1) for n = 1..=5000, k = 1,2",
    );
    assert!(ok);
}

/// 5. Multiplicative inequality holds on the 200 x 200 rectangle, exactly.
#[test]
fn criterion_5_multiplicative() {
    let mut ok = true;
    for k in [1u64, 2] {
        let table = delta_table(k);
        let violations = multiplicative_violations(table, 200, 200);
        if !violations.is_empty() {
            ok = false;
            verdict_line(
                "5 (multiplicative)",
                false,
                &format!("k={k} violations: {violations:?}"),
            );
        }
    }
    verdict_line(
        "5 (multiplicative)",
        ok,
        "Delta_k(a) Delta_k(b) >= Delta_k(a+b) for 1 <= a,b <= 200, k = 1,2",
    );
    assert!(ok);
}

/// 6. The error envelope dominates |Delta_k(n) - mid(M_k(n))| for
///    n = 1..=1000 (plus interval slack).
#[test]
fn criterion_6_error_envelope() {
    let mut ok = true;
    for k in [1u64, 2] {
        let table = delta_table(k);
        let bad: Vec<u64> = (1..=1000u64)
            .into_par_iter()
            .filter(|&n| {
                let p = 256;
                let m = main_term(k, n, p).expect("domain ok").value;
                let bound = error_bound(k, n, p).expect("domain ok");
                let exact = Interval::from_bigint(&table[n as usize], p);
                // |exact - mid(M)| <= hi(bound) + width(M)/2
                let mid = Interval::from_rational(&m.mid(), p);
                let diff = exact.sub(&mid).abs();
                let slack = m.width().mul_pow2(-1);
                !(diff.lo() <= &bound.hi().add_exact(&slack))
            })
            .collect();
        if !bad.is_empty() {
            ok = false;
            verdict_line(
                "6 (error envelope)",
                false,
                &format!("k={k} envelope misses at {bad:?}"),
            );
        }
    }
    verdict_line(
        "6 (error envelope)",
        ok,
        "|Delta_k(n) - mid(M_k(n))| <= error bound for n = 1..=1000, k = 1,2",
    );
    assert!(ok);
}

/// 7. Sandwich certification at the boundary and interior sample points.
#[test]
fn criterion_7_sandwich_certified() {
    let mut ok = true;
    for k in [1u64, 2] {
        let table = delta_table(k);
        for n in [3512u64, 3600, 4096, 5000] {
            let report = audit_sandwich(k, n, &table[n as usize], DEFAULT_PRECISION_CAP);
            if report.verdict != Verdict::CertifiedTrue {
                ok = false;
                verdict_line(
                    "7 (sandwich)",
                    false,
                    &format!("k={k}, n={n}: {:?}", report.verdict),
                );
            }
        }
    }
    verdict_line(
        "7 (sandwich)",
        ok,
        "M_k(n)(1 -+ x^-6) brackets Delta_k(n) at n in {3512, 3600, 4096, 5000}, k = 1,2",
    );
    assert!(ok);
}

/// 8. Bessel ratio bound certified at the same sample points.
#[test]
fn criterion_8_ratio_certified() {
    let mut ok = true;
    for k in [1u64, 2] {
        for n in [3512u64, 3600, 4096, 5000] {
            let report = audit_ratio(k, n, DEFAULT_PRECISION_CAP);
            if report.verdict != Verdict::CertifiedTrue {
                ok = false;
                verdict_line(
                    "8 (ratio)",
                    false,
                    &format!("k={k}, n={n}: {:?}", report.verdict),
                );
            }
        }
    }
    verdict_line(
        "8 (ratio)",
        ok,
        "I_2 ratio exceeds 1 + pi^4 sqrt(alpha)/(9x^3) - 1100/x^4 at all sample points",
    );
    assert!(ok);
}

/// 9. The series applicability test rejects k = 3 with witness j = 1.
#[test]
fn criterion_9_inapplicability_witness() {
    let verdict = applicable(&EtaQuotient::broken_diamond(3));
    let ok = verdict == Applicability::Inapplicable { witness: 1 };
    verdict_line(
        "9 (inapplicability)",
        ok,
        &format!("k=3 quotient: {verdict:?}"),
    );
    assert!(ok);
}

/// 10. Negative controls on the ordinary partition function through the
///     generic engine: log-concavity fails at 25 and holds on 26..=500;
///     the order-3 inequality holds from 95 on the scanned range.
#[test]
fn criterion_10_partition_controls() {
    let p = eta_quotient_coeffs(&EtaQuotient::partition(), 600)
        .coeffs()
        .to_vec();
    let mut ok = !log_concave_at(&p, 25);
    for n in 26..=500 {
        ok &= log_concave_at(&p, n);
    }
    ok &= !turan3_at(&p, 94);
    for n in 95..=500 {
        ok &= turan3_at(&p, n);
    }
    // The same facts through the scanner: d=3 minimal shift 94 corresponds
    // to the order-3 inequality holding from n = 95.
    let scan = scan_minimal_shift(&p, 3, 500);
    ok &= scan.minimal_shift == Some(94);
    let scan2 = scan_minimal_shift(&p, 2, 500);
    ok &= scan2.minimal_shift == Some(25);
    verdict_line(
        "10 (partition controls)",
        ok,
        "p(n): log-concave exactly from 26; order-3 exactly from 95 (shift 94) on scanned range",
    );
    assert!(ok);
}

/// Supplementary: the displayed tail comparison holds where it is true and
/// is correctly refuted where it is not (the runtime truncation machinery
/// uses the corrected class-wise bound instead).
#[test]
fn supplementary_tail_sum_samples() {
    let s10 = Interval::from_i64(10, 96);
    let mut ok = true;
    ok &= audit_tail_sum(&s10, 5, 10_000, 1024).verdict == Verdict::CertifiedTrue;
    ok &= audit_tail_sum(&s10, 10, 10_000, 1024).verdict == Verdict::CertifiedTrue;
    ok &= audit_tail_sum(&s10, 2, 10_000, 1024).verdict == Verdict::CertifiedFalse;
    let s50 = Interval::from_i64(50, 96);
    ok &= audit_tail_sum(&s50, 10, 10_000, 1024).verdict == Verdict::CertifiedTrue;
    ok &= audit_tail_sum(&s50, 2, 10_000, 1024).verdict == Verdict::CertifiedFalse;
    verdict_line(
        "S (tail samples)",
        ok,
        "displayed tail bound certified true/false per the verified sample outcomes",
    );
    assert!(ok);
}

/// Supplementary: x-threshold certification for both k.
#[test]
fn supplementary_x_threshold() {
    let mut ok = true;
    for k in [1u64, 2] {
        let r = audit_x_threshold(k, 1024);
        ok &= r.verdict == Verdict::CertifiedTrue && r.point.n == Some(3512);
    }
    verdict_line(
        "S (x threshold)",
        ok,
        "minimal n with x_k(n) >= 152 certified as 3512 for k = 1 and k = 2",
    );
    assert!(ok);
}

/// Supplementary: exact-series support for the k >= 3 log-concavity
/// conjecture on a finite prefix.
#[test]
fn supplementary_high_k_log_concavity() {
    let mut ok = true;
    for k in [3u64, 4, 5] {
        let table = delta_coeffs(k, 2001);
        for n in 1..=2000usize {
            if !log_concave_at(table.coeffs(), n) {
                ok = false;
                verdict_line(
                    "S (k>=3 log-concavity)",
                    false,
                    &format!("k={k} fails at n={n}"),
                );
            }
        }
    }
    verdict_line(
        "S (k>=3 log-concavity)",
        ok,
        "Delta_k log-concave for n = 1..=2000, k = 3,4,5 (exact series)",
    );
    assert!(ok);
}
