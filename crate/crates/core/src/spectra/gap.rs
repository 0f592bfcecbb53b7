//! Spectral-gap comparison against the standard representation, and exact
//! dimension floor audits over whole degrees.

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_cycle_types, enumerate_partitions, CycleType, Partition};
use crate::spectra::{IrrepTable, NormalElement};

/// The decay factor `δ_n = 2(n−2)/(n(n−3))`; the spectral gap of any
/// non-negative normal element is at least the std gap times `1 − δ_n`.
pub fn gap_decay_factor(n: u32) -> Result<BigRational> {
    if n < 4 {
        return Err(Error::Domain(format!("decay factor needs n ≥ 4, got {n}")));
    }
    let n = BigInt::from(n);
    Ok(BigRational::new(
        BigInt::from(2) * (&n - BigInt::from(2)),
        (&n) * (&n - BigInt::from(3)),
    ))
}

/// Result of checking one normal element against the std-gap bound.
#[derive(Clone, Debug)]
pub struct StdGapReport {
    pub n: u32,
    pub total_weight: BigRational,
    pub lambda: BigRational,
    pub std_eigenvalue: BigRational,
    /// `|Σ| − λ(S_n, Σ)`.
    pub gap: BigRational,
    /// `(|Σ| − λ_std)·(1 − δ_n)`.
    pub required: BigRational,
    pub delta: BigRational,
    pub holds: bool,
}

/// Exact check of `|Σ| − λ(S_n,Σ) ≥ (|Σ| − λ_std(Σ))·(1 − δ_n)`.
pub fn std_gap_check(element: &NormalElement) -> Result<StdGapReport> {
    let table = IrrepTable::new(element.n());
    std_gap_check_in(&table, element)
}

/// [`std_gap_check`] against a caller-provided (possibly cached) table.
pub fn std_gap_check_in(table: &IrrepTable, element: &NormalElement) -> Result<StdGapReport> {
    let n = element.n();
    if n < 17 {
        return Err(Error::Domain(format!(
            "std-gap bound is asserted for n ≥ 17 only, got {n}"
        )));
    }
    let delta = gap_decay_factor(n)?;
    let report = crate::spectra::lambda_nontrivial_in(table, element)?;
    let std_shape = Partition::new(vec![n - 1, 1])?;
    let std_eigenvalue = report
        .eigenvalues
        .iter()
        .find(|(p, _)| *p == std_shape)
        .map(|(_, v)| v.clone())
        .expect("std present");
    let std_gap = &report.total_weight - &std_eigenvalue;
    let required = std_gap * (BigRational::one() - &delta);
    let holds = report.gap >= required;
    Ok(StdGapReport {
        n,
        total_weight: report.total_weight,
        lambda: report.lambda,
        std_eigenvalue,
        gap: report.gap,
        required,
        delta,
        holds,
    })
}

/// A `(class, irrep)` pair violating the pointwise inequality
/// `1 − χ̃_ρ ≥ (1 − χ̃_std)·(1 − δ_n)`.
#[derive(Clone, Debug)]
pub struct PointwiseViolation {
    pub class: CycleType,
    pub shape: Partition,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Clone, Debug)]
pub struct PointwiseGapReport {
    pub n: u32,
    pub classes_checked: usize,
    pub pairs_checked: u64,
    pub delta: BigRational,
    pub violations: Vec<PointwiseViolation>,
}

/// Checks the pointwise inequality for every class and every non-trivial
/// irrep of `S_n`. Summing it over a support gives the std-gap bound for
/// arbitrary non-negative normal elements, so this is the sharper check.
pub fn pointwise_std_gap_check(n: u32) -> Result<PointwiseGapReport> {
    let table = IrrepTable::new(n);
    pointwise_std_gap_check_in(&table)
}

/// [`pointwise_std_gap_check`] against a caller-provided table.
pub fn pointwise_std_gap_check_in(table: &IrrepTable) -> Result<PointwiseGapReport> {
    let n = table.n();
    if n < 17 {
        return Err(Error::Domain(format!(
            "std-gap bound is asserted for n ≥ 17 only, got {n}"
        )));
    }
    let delta = gap_decay_factor(n)?;
    let factor = BigRational::one() - &delta;
    let std_shape = Partition::new(vec![n - 1, 1])?;
    let std_idx = table
        .shapes()
        .iter()
        .position(|p| *p == std_shape)
        .expect("std present");
    let (triv, sgn) = table.trivial_indices();
    let classes = enumerate_cycle_types(n);

    let per_class: Vec<(u64, Vec<PointwiseViolation>)> = classes
        .par_iter()
        .map(|class| {
            let col = table.column(class)?;
            let std_norm = BigRational::new(
                col[std_idx].clone(),
                BigInt::from(table.dims()[std_idx].clone()),
            );
            let rhs = (BigRational::one() - std_norm) * &factor;
            let mut violations = Vec::new();
            let mut pairs = 0u64;
            for (i, chi) in col.iter().enumerate() {
                if i == triv || i == sgn {
                    continue;
                }
                pairs += 1;
                let norm = BigRational::new(
                    chi.clone(),
                    BigInt::from(table.dims()[i].clone()),
                );
                let lhs = BigRational::one() - norm;
                if lhs < rhs {
                    violations.push(PointwiseViolation {
                        class: class.clone(),
                        shape: table.shapes()[i].clone(),
                        lhs,
                        rhs: rhs.clone(),
                    });
                }
            }
            Ok((pairs, violations))
        })
        .collect::<Result<_>>()?;

    let pairs_checked = per_class.iter().map(|(p, _)| p).sum();
    let violations = per_class.into_iter().flat_map(|(_, v)| v).collect();
    Ok(PointwiseGapReport {
        n,
        classes_checked: classes.len(),
        pairs_checked,
        delta,
        violations,
    })
}

/// Exact audit of the dimension floor `dim ρ ≥ n^(num/den)` over all
/// irreps with at least `min_outside` cells outside both the first row
/// and the first column.
#[derive(Clone, Debug)]
pub struct DimsAuditReport {
    pub n: u32,
    pub min_outside: u32,
    pub exponent_num: u32,
    pub exponent_den: u32,
    pub checked: usize,
    pub failures: Vec<Partition>,
    pub min_dimension: Option<BigUint>,
    pub min_dimension_shape: Option<Partition>,
}

/// Checks `dim^den ≥ n^num` in exact integers for each qualifying irrep.
pub fn dims_audit(n: u32, min_outside: u32, exponent_num: u32, exponent_den: u32) -> Result<DimsAuditReport> {
    if exponent_den == 0 {
        return Err(Error::Domain("zero denominator exponent".into()));
    }
    let qualifying: Vec<Partition> = enumerate_partitions(n)
        .into_iter()
        .filter(|p| {
            p.blocks_outside_first_row() >= min_outside
                && p.blocks_outside_first_column() >= min_outside
        })
        .collect();
    let threshold = BigUint::from(n).pow(exponent_num);
    let results: Vec<(Option<Partition>, BigUint)> = qualifying
        .par_iter()
        .map(|p| {
            let dim = p.dimension();
            let ok = dim.pow(exponent_den) >= threshold;
            (if ok { None } else { Some(p.clone()) }, dim)
        })
        .collect();
    let failures: Vec<Partition> = results.iter().filter_map(|(f, _)| f.clone()).collect();
    let (min_dimension, min_dimension_shape) = results
        .iter()
        .zip(&qualifying)
        .min_by(|a, b| a.0 .1.cmp(&b.0 .1))
        .map(|((_, d), p)| (Some(d.clone()), Some(p.clone())))
        .unwrap_or((None, None));
    Ok(DimsAuditReport {
        n,
        min_outside,
        exponent_num,
        exponent_den,
        checked: qualifying.len(),
        failures,
        min_dimension,
        min_dimension_shape,
    })
}
