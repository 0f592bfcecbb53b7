//! Command implementations. Each returns the number of violations or
//! failures it found; the process exits non-zero iff that count is.

use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Context};
use num::bigint::BigInt;
use num::rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use symgap_core::characters::{family_cross_check, CharCache};
use symgap_core::constructions::{build_annihilator, find_beating_irreps, verify_annihilation};
use symgap_core::partitions::{enumerate_cycle_types, CycleType};
use symgap_core::schreier::{
    action_matrix, attribute_blocks, cayley_oracle, diameter_bound, log_factorial,
    predicted_cayley_spectrum, rayleigh_witness, spectrum, TupleAction, WeightedGenSet,
};
use symgap_core::spectra::{
    check_ruling_tables, dims_audit, eight_max, eight_scan_in, pointwise_std_gap_check_in,
    ruling_set_in, std_gap_check_in, IrrepTable, NormalElement, ScanOptions,
};

use crate::output::{f17, rat, Emitter};

fn make_table(n: u32, cache: &Option<Arc<CharCache>>) -> IrrepTable {
    match cache {
        Some(c) => IrrepTable::with_cache(n, Arc::clone(c)),
        None => IrrepTable::new(n),
    }
}

pub fn cmd_rule(
    emitter: &Emitter,
    cache: &Option<Arc<CharCache>>,
    n: u32,
    class_text: &str,
) -> anyhow::Result<usize> {
    let class = CycleType::from_str(class_text).context("cycle type")?;
    if class.n() != n {
        bail!("cycle type {class} sums to {} but n = {n}", class.n());
    }
    let table = make_table(n, cache);
    let (value, rulers) = ruling_set_in(&table, &class)?;
    let mut record = json!({
        "record": "rule",
        "n": n,
        "class": class.to_string(),
        "value": rat(&value),
        "rulers": rulers.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    if n >= 8 {
        let (emax, _) = eight_max(n, &class)?;
        record["eight_max"] = json!(rat(&emax));
        record["exceeds_eight"] = json!(value > emax);
    }
    emitter.emit(record);
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_scan(
    emitter: &Emitter,
    cache: &Option<Arc<CharCache>>,
    n_from: u32,
    n_to: u32,
    eight_only: bool,
    prune: bool,
    prune_eps: f64,
) -> anyhow::Result<usize> {
    let mut failures = 0usize;
    for n in n_from..=n_to {
        let started = Instant::now();
        if eight_only {
            for class in enumerate_cycle_types(n) {
                let (value, argmax) = eight_max(n, &class)?;
                emitter.emit(json!({
                    "record": "eight-survey",
                    "n": n,
                    "class": class.to_string(),
                    "eight_max": rat(&value),
                    "argmax": argmax.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }));
            }
            eprintln!("# scan n={n} (eight-only) done in {:?}", started.elapsed());
            continue;
        }
        let table = make_table(n, cache);
        let report = eight_scan_in(&table, ScanOptions { prune, prune_eps })?;
        for v in &report.violations {
            emitter.emit(json!({
                "record": "scan-violation",
                "n": n,
                "class": v.class.to_string(),
                "lambda": rat(&v.lambda),
                "eight_max": rat(&v.eight),
                "ruling": v.ruling.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }));
        }
        emitter.emit(json!({
            "record": "scan-summary",
            "n": n,
            "classes": report.classes_checked,
            "violations": report.violations.len(),
            "pruned": report.pruned,
        }));
        failures += report.violations.len();
        eprintln!(
            "# scan n={n}: {} classes, {} violations in {:?}",
            report.classes_checked,
            report.violations.len(),
            started.elapsed()
        );
    }
    Ok(failures)
}

pub fn cmd_audit_dims(
    emitter: &Emitter,
    n: u32,
    outside: u32,
    exponent: &str,
) -> anyhow::Result<usize> {
    let (num, den) = parse_exponent(exponent)?;
    let report = dims_audit(n, outside, num, den)?;
    for shape in &report.failures {
        emitter.emit(json!({
            "record": "dims-failure",
            "n": n,
            "shape": shape.to_string(),
        }));
    }
    emitter.emit(json!({
        "record": "dims-audit",
        "n": n,
        "outside": outside,
        "exponent": format!("{num}/{den}"),
        "checked": report.checked,
        "failures": report.failures.len(),
        "min_dimension": report.min_dimension.as_ref().map(|d| d.to_string()),
        "min_dimension_shape": report.min_dimension_shape.as_ref().map(|p| p.to_string()),
    }));
    Ok(report.failures.len())
}

fn parse_exponent(text: &str) -> anyhow::Result<(u32, u32)> {
    let (a, b) = text
        .split_once('/')
        .with_context(|| format!("exponent {text:?} is not of the form p/q"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

pub fn cmd_family_check(emitter: &Emitter, n_max: u32) -> anyhow::Result<usize> {
    let report = family_cross_check(n_max)?;
    for m in &report.mismatches {
        emitter.emit(json!({
            "record": "family-mismatch",
            "n": m.n,
            "family_index": m.family.index,
            "transposed": m.family.transposed,
            "class": m.class.to_string(),
        }));
    }
    emitter.emit(json!({
        "record": "family-check",
        "n_max": n_max,
        "comparisons": report.comparisons,
        "mismatches": report.mismatches.len(),
    }));
    Ok(report.mismatches.len())
}

pub fn cmd_tables_check(emitter: &Emitter, n: u32, c1_max: u32) -> anyhow::Result<usize> {
    let report = check_ruling_tables(n, c1_max)?;
    for m in &report.mismatches {
        emitter.emit(json!({
            "record": "tables-mismatch",
            "n": n,
            "class": m.class.to_string(),
            "predictions": m.predictions.iter().map(|p| p.irrep.to_string()).collect::<Vec<_>>(),
            "conditions": m.predictions.iter().map(|p| p.condition).collect::<Vec<_>>(),
            "eight_max": rat(&m.eight),
            "attained": m.attained.iter().map(|(p, v)| format!("{p}={}", rat(v))).collect::<Vec<_>>(),
        }));
    }
    emitter.emit(json!({
        "record": "tables-check",
        "n": n,
        "c1_max": c1_max,
        "classes": report.classes_checked,
        "mismatches": report.mismatches.len(),
    }));
    Ok(report.mismatches.len())
}

pub fn cmd_gap_check(
    emitter: &Emitter,
    cache: &Option<Arc<CharCache>>,
    n_from: u32,
    n_to: u32,
    random: u32,
    seed: u64,
) -> anyhow::Result<usize> {
    let mut failures = 0usize;
    for n in n_from..=n_to {
        let started = Instant::now();
        let table = make_table(n, cache);
        let report = pointwise_std_gap_check_in(&table)?;
        for v in &report.violations {
            emitter.emit(json!({
                "record": "gap-violation",
                "n": n,
                "class": v.class.to_string(),
                "shape": v.shape.to_string(),
                "lhs": rat(&v.lhs),
                "rhs": rat(&v.rhs),
            }));
        }
        failures += report.violations.len();
        emitter.emit(json!({
            "record": "gap-pointwise",
            "n": n,
            "classes": report.classes_checked,
            "pairs": report.pairs_checked,
            "delta": rat(&report.delta),
            "violations": report.violations.len(),
        }));

        let mut rng = StdRng::seed_from_u64(seed ^ u64::from(n));
        let mut random_failures = 0usize;
        for index in 0..random {
            let element = random_normal_element(n, &mut rng)?;
            let check = std_gap_check_in(&table, &element)?;
            if !check.holds {
                random_failures += 1;
                emitter.emit(json!({
                    "record": "gap-random-violation",
                    "n": n,
                    "index": index,
                    "support": element
                        .coeffs()
                        .iter()
                        .map(|(c, a)| format!("{c}:{}", rat(a)))
                        .collect::<Vec<_>>(),
                    "gap": rat(&check.gap),
                    "required": rat(&check.required),
                }));
            }
        }
        if random > 0 {
            emitter.emit(json!({
                "record": "gap-random",
                "n": n,
                "elements": random,
                "seed": seed,
                "violations": random_failures,
            }));
            failures += random_failures;
        }
        eprintln!("# gap-check n={n} done in {:?}", started.elapsed());
    }
    Ok(failures)
}

/// Random non-negative normal element on up to four classes with small
/// rational coefficients; deterministic in the seed.
pub fn random_normal_element(n: u32, rng: &mut StdRng) -> anyhow::Result<NormalElement> {
    let classes = enumerate_cycle_types(n);
    let support = rng.gen_range(1..=4usize.min(classes.len()));
    let mut coeffs = std::collections::BTreeMap::new();
    for _ in 0..support {
        let class = classes[rng.gen_range(0..classes.len())].clone();
        let coeff = BigRational::new(
            BigInt::from(rng.gen_range(1..=9i64)),
            BigInt::from(rng.gen_range(1..=9i64)),
        );
        coeffs.insert(class, coeff);
    }
    Ok(NormalElement::new(n, coeffs)?)
}

pub fn cmd_floor_check(emitter: &Emitter, n_from: u32, n_to: u32) -> anyhow::Result<usize> {
    let mut failures = 0usize;
    for n in n_from..=n_to {
        let started = Instant::now();
        let report = symgap_core::spectra::eight::eight_floor_check(n)?;
        for (class, value) in &report.violations {
            emitter.emit(json!({
                "record": "floor-violation",
                "n": n,
                "class": class.to_string(),
                "eight_max": rat(value),
                "floor": rat(&report.floor),
            }));
        }
        emitter.emit(json!({
            "record": "floor-check",
            "n": n,
            "classes": report.classes_checked,
            "floor": rat(&report.floor),
            "violations": report.violations.len(),
        }));
        failures += report.violations.len();
        eprintln!("# floor-check n={n} done in {:?}", started.elapsed());
    }
    Ok(failures)
}

pub fn cmd_construct(
    emitter: &Emitter,
    n: u32,
    k: u32,
    m: Option<u32>,
) -> anyhow::Result<usize> {
    let m = m.unwrap_or(2 * k);
    let (element, spec) = build_annihilator(n, k, m)?;
    for row in &spec.rows {
        emitter.emit(json!({
            "record": "annihilator-row",
            "n": n,
            "prefix": row.prefix,
            "probability": rat(&row.probability),
            "class": row.class.to_string(),
            "alpha": rat(&row.alpha),
        }));
    }
    let verification = verify_annihilation(&element, k)?;
    for (shape, value) in &verification.values {
        emitter.emit(json!({
            "record": "annihilation",
            "irrep": shape.to_string(),
            "value": rat(value),
            "zero": value == &BigRational::from(BigInt::from(0)),
        }));
    }
    let beating = find_beating_irreps(&element, k)?;
    for (shape, value) in &beating {
        emitter.emit(json!({
            "record": "beating-irrep",
            "irrep": shape.to_string(),
            "value": rat(value),
        }));
    }
    emitter.emit(json!({
        "record": "construct-summary",
        "n": n,
        "k": k,
        "m": m,
        "total_weight": rat(&element.total_weight()),
        "all_zero": verification.all_zero,
        "beating": beating.len(),
    }));
    let mut failures = 0;
    if !verification.all_zero {
        failures += 1;
    }
    if beating.is_empty() {
        failures += 1;
    }
    Ok(failures)
}

pub fn cmd_schreier(
    emitter: &Emitter,
    n: u32,
    example: &str,
    match_tol: f64,
    export_dir: Option<&std::path::Path>,
) -> anyhow::Result<usize> {
    if example != "cycle-transposition" {
        bail!("unknown example {example:?}; available: cycle-transposition");
    }
    let gens = WeightedGenSet::cycle_and_transposition(n)?;
    if let Some(dir) = export_dir {
        std::fs::create_dir_all(dir)?;
        for (name, action) in [
            ("points", TupleAction::Points),
            ("unordered-pairs", TupleAction::UnorderedPairs),
            ("ordered-pairs", TupleAction::OrderedPairs),
        ] {
            let m = action_matrix(&gens, action)?;
            let mut coo = std::fs::File::create(dir.join(format!("{name}.coo")))?;
            symgap_core::schreier::write_matrix_coordinate(&m, &mut coo)?;
            let mut csv = std::fs::File::create(dir.join(format!("{name}-spectrum.csv")))?;
            symgap_core::schreier::write_spectrum_csv(&spectrum(&m)?, &mut csv)?;
        }
    }
    let attr = attribute_blocks(&gens, match_tol)?;
    emitter.emit(json!({
        "record": "schreier-summary",
        "n": n,
        "example": example,
        "total_weight": f17(attr.total_weight),
        "residual": f17(attr.residual),
    }));
    for (name, block) in [
        ("(n-1,1)", &attr.std_block),
        ("(n-2,2)", &attr.two_row_block),
        ("(n-2,1,1)", &attr.hook_block),
    ] {
        emitter.emit(json!({
            "record": "block-top",
            "block": name,
            "size": block.len(),
            "value": f17(block[0]),
        }));
    }
    emitter.emit(json!({
        "record": "block-leaders",
        "blocks": attr.leaders(1e-9),
    }));

    let points = spectrum(&action_matrix(&gens, TupleAction::Points)?)?;
    let ordered = spectrum(&action_matrix(&gens, TupleAction::OrderedPairs)?)?;
    let points_gap = 1.0 - points[1];
    let ordered_gap = 1.0 - ordered[1];
    emitter.emit(json!({
        "record": "schreier-gaps",
        "points_gap": f17(points_gap),
        "points_gap_scaled": f17(points_gap * (n as f64).powi(2)),
        "ordered_gap": f17(ordered_gap),
        "ordered_gap_scaled": f17(ordered_gap * (n as f64).powi(3)),
    }));

    let (quotient, reference) = rayleigh_witness(n)?;
    emitter.emit(json!({
        "record": "rayleigh-witness",
        "quotient": f17(quotient),
        "reference": f17(reference),
        "ratio": f17(quotient / reference),
    }));

    emitter.emit(json!({
        "record": "diameter-diagnostic",
        "log_group_order": f17(log_factorial(n)),
        "gap": f17(ordered_gap),
        "bound": f17(diameter_bound(log_factorial(n), ordered_gap)),
    }));
    Ok(0)
}

pub fn cmd_oracle(
    emitter: &Emitter,
    n: u32,
    class_text: Option<&str>,
    random: u32,
    seed: u64,
    tol: f64,
) -> anyhow::Result<usize> {
    let mut elements: Vec<(String, NormalElement)> = Vec::new();
    if let Some(text) = class_text {
        let class = CycleType::from_str(text)?;
        if class.n() != n {
            bail!("cycle type {class} sums to {} but n = {n}", class.n());
        }
        elements.push((class.to_string(), NormalElement::class_indicator(class)));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..random {
        let e = random_normal_element(n, &mut rng)?;
        let label = e
            .coeffs()
            .iter()
            .map(|(c, a)| format!("{c}:{}", rat(a)))
            .collect::<Vec<_>>()
            .join(" + ");
        elements.push((label, e));
    }
    if elements.is_empty() {
        bail!("nothing to check: pass --class or --random");
    }

    let mut failures = 0usize;
    for (label, element) in &elements {
        let gens = WeightedGenSet::from_normal_element(element)?;
        let oracle = cayley_oracle(&gens)?;
        let predicted = predicted_cayley_spectrum(element)?;
        if oracle.len() != predicted.len() {
            bail!("spectrum sizes differ: {} vs {}", oracle.len(), predicted.len());
        }
        let deviation = oracle
            .iter()
            .zip(&predicted)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        let ok = deviation <= tol;
        if !ok {
            failures += 1;
        }
        emitter.emit(json!({
            "record": "oracle",
            "n": n,
            "element": label,
            "size": oracle.len(),
            "max_deviation": f17(deviation),
            "ok": ok,
        }));
    }
    Ok(failures)
}
