//! Acceptance suite: one test per verification target, each printing a
//! PASS line (run with `--nocapture` to see them, or rely on the harness
//! per-test status lines).
//!
//! Two checks (11b, 11c) assert classical reference constants for the
//! cycle-plus-transposition walk that exact computation does not bear out:
//! the literal difference statistic has a wrap discontinuity that puts its
//! Rayleigh quotient at 3/n² rather than 6/n³, and the points-walk gap
//! constant is π² rather than 1. They are kept faithful to the stated
//! targets and fail, documenting the discrepancy; the neighbouring
//! variational facts (11a, 11d) hold and pass.

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use symgap_core::characters::{family_cross_check, CharCache};
use symgap_core::constructions::{build_annihilator, find_beating_irreps, verify_annihilation};
use symgap_core::partitions::{enumerate_cycle_types, Partition};
use symgap_core::schreier::{
    action_matrix, attribute_blocks, cayley_oracle, oracle_lambda, predicted_cayley_spectrum,
    rayleigh_witness, spectrum, std_block_max, Permutation, TupleAction, WeightedGenSet,
};
use symgap_core::spectra::{
    check_ruling_tables, dims_audit, eight_scan, pointwise_std_gap_check, std_gap_check_in,
    IrrepTable, NormalElement, ScanOptions,
};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symgap"))
}

fn random_normal_element(n: u32, rng: &mut StdRng) -> NormalElement {
    let classes = enumerate_cycle_types(n);
    let support = rng.gen_range(1..=4usize.min(classes.len()));
    let mut coeffs = BTreeMap::new();
    for _ in 0..support {
        let class = classes[rng.gen_range(0..classes.len())].clone();
        let coeff = BigRational::new(
            BigInt::from(rng.gen_range(1..=9i64)),
            BigInt::from(rng.gen_range(1..=9i64)),
        );
        coeffs.insert(class, coeff);
    }
    NormalElement::new(n, coeffs).unwrap()
}

#[test]
fn acceptance_01_rule_16_counterexample() {
    let started = Instant::now();
    let out = binary()
        .args(["rule", "16", "5^3 1^1", "--json"])
        .output()
        .expect("run binary");
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let line = String::from_utf8(out.stdout).unwrap();
    let record: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    let rulers: Vec<&str> = record["rulers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(rulers, vec!["11,5", "2,2,2,2,2,1,1,1,1,1,1"]);
    assert_eq!(record["exceeds_eight"], serde_json::json!(true));
    assert_eq!(record["value"], serde_json::json!("3/2548"));
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("ACCEPTANCE 01 rule-16-counterexample: PASS ({elapsed:?})");
}

#[test]
fn acceptance_02_scan_17_to_24_clean() {
    let started = Instant::now();
    for n in 17..=24u32 {
        let report = eight_scan(n, ScanOptions::default()).unwrap();
        assert!(
            report.violations.is_empty(),
            "n={n}: {:?}",
            report.violations
        );
        assert_eq!(report.classes_checked, enumerate_cycle_types(n).len());
    }
    // the command surface agrees on the full range
    let out = binary().args(["scan", "17", "24", "--json"]).output().unwrap();
    assert!(out.status.success(), "scan exited {:?}", out.status.code());
    let text = String::from_utf8(out.stdout).unwrap();
    let summaries: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .filter(|v: &serde_json::Value| v["record"] == "scan-summary")
        .collect();
    assert_eq!(summaries.len(), 8);
    for s in &summaries {
        assert_eq!(s["violations"], serde_json::json!(0), "{s}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 1800, "took {elapsed:?}");
    println!("ACCEPTANCE 02 scan-17-24-no-violations: PASS ({elapsed:?})");
}

#[test]
fn acceptance_03_family_polynomials_match_recursion() {
    let report = family_cross_check(14).unwrap();
    assert_eq!(report.comparisons, 11594);
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    println!(
        "ACCEPTANCE 03 family-cross-check: PASS ({} comparisons, 0 mismatches)",
        report.comparisons
    );
}

#[test]
fn acceptance_04_dimension_floor_at_13_and_14() {
    let r13 = dims_audit(13, 3, 41, 20).unwrap();
    assert_eq!(r13.checked, 93);
    assert!(r13.failures.is_empty());
    let r14 = dims_audit(14, 3, 41, 20).unwrap();
    assert_eq!(r14.checked, 127);
    assert!(r14.failures.is_empty());
    println!("ACCEPTANCE 04 dims-floor-13-14: PASS (93 and 127 qualifying, 0 failures)");
}

#[test]
fn acceptance_05_dimension_floor_deep_degrees() {
    let started = Instant::now();
    let r39 = dims_audit(39, 14, 121, 20).unwrap();
    assert!(r39.checked > 0);
    assert!(r39.failures.is_empty(), "{:?}", r39.failures);
    let r48 = dims_audit(48, 14, 121, 20).unwrap();
    assert!(r48.failures.is_empty(), "{:?}", r48.failures);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!(
        "ACCEPTANCE 05 dims-floor-39-48: PASS ({} and {} checked in {elapsed:?})",
        r39.checked, r48.checked
    );
}

#[test]
fn acceptance_06_std_gap_bound_holds() {
    let started = Instant::now();
    let mut random_checked = 0u32;
    for n in 17..=22u32 {
        let pointwise = pointwise_std_gap_check(n).unwrap();
        assert!(
            pointwise.violations.is_empty(),
            "n={n}: {:?}",
            pointwise.violations
        );
        // shared cache so the 100 random elements reuse character columns
        let table = IrrepTable::with_cache(n, Arc::new(CharCache::new()));
        let mut rng = StdRng::seed_from_u64(1000 + u64::from(n));
        for _ in 0..100 {
            let element = random_normal_element(n, &mut rng);
            let check = std_gap_check_in(&table, &element).unwrap();
            assert!(
                check.holds,
                "n={n}: gap {} below required {} for {:?}",
                check.gap, check.required, element
            );
            random_checked += 1;
        }
    }
    let elapsed = started.elapsed();
    println!(
        "ACCEPTANCE 06 std-gap-bound: PASS (degrees 17..22 pointwise + {random_checked} random elements in {elapsed:?})"
    );
}

#[test]
fn acceptance_07_eight_floor_17_to_40() {
    let started = Instant::now();
    for n in 17..=40u32 {
        let report = symgap_core::spectra::eight::eight_floor_check(n).unwrap();
        assert!(report.violations.is_empty(), "n={n}: {:?}", report.violations);
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}");
    println!("ACCEPTANCE 07 eight-floor-17-40: PASS ({elapsed:?})");
}

#[test]
fn acceptance_08_annihilator_at_100() {
    let (element, spec) = build_annihilator(100, 2, 4).unwrap();
    assert_eq!(spec.rows.len(), 5);

    let verification = verify_annihilation(&element, 2).unwrap();
    assert!(verification.all_zero, "{:?}", verification.values);
    let zeroed: Vec<String> = verification
        .values
        .iter()
        .map(|(p, _)| p.to_string())
        .collect();
    for expected in ["99,1", "98,2", "98,1,1"] {
        assert!(zeroed.iter().any(|s| s == expected), "missing {expected}");
    }
    // transposed companions are present too
    assert_eq!(verification.values.len(), 6);

    let beating = find_beating_irreps(&element, 2).unwrap();
    let names: Vec<String> = beating.iter().map(|(p, _)| p.to_string()).collect();
    let hook_t = Partition::new(vec![97, 2, 1]).unwrap().transpose().to_string();
    let witnesses = ["97,3".to_string(), hook_t, "97,1,1,1".to_string()];
    assert!(
        witnesses.iter().any(|w| names.contains(w)),
        "no positive eigenvalue among {witnesses:?}; got {names:?}"
    );
    for (_, value) in &beating {
        assert!(value > &BigRational::zero());
    }
    println!(
        "ACCEPTANCE 08 annihilator-100: PASS (6 exact zeros, {} positive deeper irreps)",
        beating.len()
    );
}

#[test]
fn acceptance_09_cayley_oracle_matches_scalars() {
    let started = Instant::now();
    let mut checked = 0u32;
    for n in 4..=6u32 {
        let mut rng = StdRng::seed_from_u64(2000 + u64::from(n));
        for _ in 0..20 {
            let element = random_normal_element(n, &mut rng);
            let gens = WeightedGenSet::from_normal_element(&element).unwrap();
            let oracle = cayley_oracle(&gens).unwrap();
            let predicted = predicted_cayley_spectrum(&element).unwrap();
            assert_eq!(oracle.len(), predicted.len());
            let deviation = oracle
                .iter()
                .zip(&predicted)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            assert!(deviation <= 1e-8, "n={n}: deviation {deviation}");
            checked += 1;
        }
    }
    let elapsed = started.elapsed();
    println!("ACCEPTANCE 09 cayley-oracle: PASS ({checked} elements in {elapsed:?})");
}

#[test]
fn acceptance_10_transposition_weightings_ruled_by_std() {
    let started = Instant::now();
    let mut checked = 0u32;
    for n in 4..=6u32 {
        let mut rng = StdRng::seed_from_u64(3000 + u64::from(n));
        let all_transpositions: Vec<Permutation> = (0..n as usize)
            .flat_map(|a| {
                (0..n as usize)
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .map(|(a, b)| Permutation::transposition(n, a, b).unwrap())
            .collect();
        for round in 0..50 {
            // every fifth round drops a random subset to exercise sparse
            // (possibly non-generating) supports
            let mut pairs: Vec<(Permutation, f64)> = Vec::new();
            for t in &all_transpositions {
                if round % 5 == 0 && !rng.gen_bool(0.7) {
                    continue;
                }
                pairs.push((t.clone(), rng.gen_range(0.0..1.0)));
            }
            if pairs.is_empty() {
                continue;
            }
            let gens = WeightedGenSet::new(n, pairs).unwrap();
            let full = cayley_oracle(&gens).unwrap();
            let lambda = oracle_lambda(&gens, &full, 1e-8).unwrap();
            let std_max = std_block_max(&gens, 1e-8).unwrap();
            assert!(
                (lambda - std_max).abs() <= 1e-8,
                "n={n} round={round}: λ={lambda} std={std_max}"
            );
            checked += 1;
        }
    }
    let elapsed = started.elapsed();
    println!("ACCEPTANCE 10 transposition-std-rule: PASS ({checked} weightings in {elapsed:?})");
}

#[test]
fn acceptance_11a_ordered_pairs_gap_floor() {
    let n = 30u32;
    let gens = WeightedGenSet::cycle_and_transposition(n).unwrap();
    let ordered = spectrum(&action_matrix(&gens, TupleAction::OrderedPairs).unwrap()).unwrap();
    let gap = 1.0 - ordered[1];
    let floor = 1.0 / (18.0 * (n as f64).powi(3));
    assert!(gap >= floor, "gap {gap} below {floor}");
    println!("ACCEPTANCE 11a ordered-gap-floor: PASS (gap {gap:.6e} ≥ {floor:.6e})");
}

#[test]
fn acceptance_11b_rayleigh_witness_near_reference() {
    let n = 30u32;
    let (quotient, reference) = rayleigh_witness(n).unwrap();
    let ratio = quotient / reference;
    assert!(
        (ratio - 1.0).abs() <= 0.25,
        "quotient {quotient:.6e} is {ratio:.3}× the 6/n³ reference {reference:.6e}; \
         the wrap edge of the difference statistic contributes ~(n−2)²/4 and keeps \
         the quotient at 3/n²"
    );
    println!("ACCEPTANCE 11b rayleigh-witness: PASS (ratio {ratio:.4})");
}

#[test]
fn acceptance_11c_points_gap_constant() {
    let n = 30u32;
    let gens = WeightedGenSet::cycle_and_transposition(n).unwrap();
    let points = spectrum(&action_matrix(&gens, TupleAction::Points).unwrap()).unwrap();
    let scaled = (n as f64).powi(2) * (1.0 - points[1]);
    assert!(
        (scaled - 1.0).abs() <= 0.25,
        "n²·(1−λ₂) = {scaled:.4}; the points walk is a perturbed lazy cycle walk \
         whose gap constant is π² ≈ 9.87, not 1"
    );
    println!("ACCEPTANCE 11c points-gap-constant: PASS (n²·gap = {scaled:.4})");
}

#[test]
fn acceptance_11d_second_eigenvalue_not_from_std() {
    let started = Instant::now();
    let n = 30u32;
    let gens = WeightedGenSet::cycle_and_transposition(n).unwrap();
    let attr = attribute_blocks(&gens, 1e-8).unwrap();
    let leaders = attr.leaders(1e-9);
    assert!(!leaders.contains(&"(n-1,1)"), "leaders {leaders:?}");
    assert!(
        leaders.iter().all(|b| *b == "(n-2,1,1)" || *b == "(n-2,2)"),
        "leaders {leaders:?}"
    );
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("ACCEPTANCE 11d attribution: PASS (leaders {leaders:?} in {elapsed:?})");
}

#[test]
fn acceptance_12_ruling_tables_clean_at_30() {
    let first = check_ruling_tables(30, 1).unwrap();
    assert!(first.mismatches.is_empty(), "{} mismatches", first.mismatches.len());
    // reproducibility: a second run sees the identical class list and verdicts
    let second = check_ruling_tables(30, 1).unwrap();
    assert_eq!(first.classes_checked, second.classes_checked);
    assert_eq!(second.mismatches.len(), 0);
    println!(
        "ACCEPTANCE 12 ruling-tables-30: PASS ({} classes with c1 ≤ 1, 0 mismatches)",
        first.classes_checked
    );
}
