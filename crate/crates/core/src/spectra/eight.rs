//! The eight low-depth irreps that govern single-class spectral gaps, and
//! the exhaustive per-degree scan verifying that claim.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;

use rayon::prelude::*;

use crate::characters::families::{family_normalized, FamilyId};
use crate::characters::larsen_shalev_bound;
use crate::characters::mn::MnEvaluator;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_cycle_types, CycleType, Partition};
use crate::spectra::IrrepTable;

/// The eight distinguished families: `(n−1,1)`, `(n−2,2)`, `(n−3,3)`,
/// `(n−3,2,1)`, `(n−4,4)` and the transposes of `(n−1,1)`, `(n−2,2)`,
/// `(n−2,1,1)`.
pub const EIGHT_FAMILIES: [FamilyId; 8] = [
    FamilyId { index: 1, transposed: false },
    FamilyId { index: 2, transposed: false },
    FamilyId { index: 4, transposed: false },
    FamilyId { index: 5, transposed: false },
    FamilyId { index: 7, transposed: false },
    FamilyId { index: 1, transposed: true },
    FamilyId { index: 2, transposed: true },
    FamilyId { index: 3, transposed: true },
];

/// The eight distinguished irreps instantiated at a given degree.
#[derive(Clone, Debug)]
pub struct EightSet {
    pub n: u32,
    /// Distinct members, in the order the families are listed.
    pub members: Vec<Partition>,
    /// Members that coincided and were removed (possible only at tiny n).
    pub duplicates: Vec<Partition>,
}

/// Instantiates the eight families at `n ≥ 8`, deduplicating coinciding
/// diagrams.
pub fn eight_set(n: u32) -> Result<EightSet> {
    if n < 8 {
        return Err(Error::Domain(format!("the eight-irrep set needs n ≥ 8, got {n}")));
    }
    let mut members: Vec<Partition> = Vec::with_capacity(8);
    let mut duplicates = Vec::new();
    for id in EIGHT_FAMILIES {
        let p = id.instantiate(n)?;
        if members.contains(&p) {
            duplicates.push(p);
        } else {
            members.push(p);
        }
    }
    Ok(EightSet { n, members, duplicates })
}

/// `max_{ρ ∈ EIGHT} χ̃_ρ(class)` with its argmax, evaluated from the
/// closed-form family polynomials only.
pub fn eight_max(n: u32, class: &CycleType) -> Result<(BigRational, Vec<Partition>)> {
    if class.n() != n {
        return Err(Error::SizeMismatch { partition_n: n, class_n: class.n() });
    }
    if n < 8 {
        return Err(Error::Domain(format!("the eight-irrep set needs n ≥ 8, got {n}")));
    }
    let mut best: Option<BigRational> = None;
    let mut arg: Vec<Partition> = Vec::new();
    for id in EIGHT_FAMILIES {
        let value = family_normalized(id, class)?;
        match &best {
            Some(b) if value < *b => {}
            Some(b) if value == *b => {
                let p = id.instantiate(n)?;
                if !arg.contains(&p) {
                    arg.push(p);
                }
            }
            _ => {
                best = Some(value);
                arg = vec![id.instantiate(n)?];
            }
        }
    }
    Ok((best.expect("eight families evaluated"), arg))
}

/// Scan configuration. The default is the exhaustive exact scan; pruning
/// skips irreps whose dimension-based character bound (a float heuristic
/// with caller-chosen ε) cannot beat the incumbent.
#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub prune: bool,
    pub prune_eps: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { prune: false, prune_eps: 0.1 }
    }
}

/// A class where the global maximum strictly exceeds the eight-irrep
/// maximum.
#[derive(Clone, Debug)]
pub struct ClassViolation {
    pub class: CycleType,
    /// Global maximal normalized character (over evaluated irreps).
    pub lambda: BigRational,
    /// Maximum over the eight families.
    pub eight: BigRational,
    /// Irreps attaining the global maximum.
    pub ruling: Vec<Partition>,
}

#[derive(Clone, Debug)]
pub struct EightScanReport {
    pub n: u32,
    pub classes_checked: usize,
    /// Character evaluations skipped by the heuristic bound (0 when the
    /// scan is exhaustive).
    pub pruned: u64,
    pub violations: Vec<ClassViolation>,
}

/// Verifies, for every conjugacy class of `S_n`, that the largest
/// non-trivial normalized character is attained within the eight families.
/// Returns the violating classes (empty list = the property holds at `n`).
pub fn eight_scan(n: u32, opts: ScanOptions) -> Result<EightScanReport> {
    let table = IrrepTable::new(n);
    eight_scan_in(&table, opts)
}

/// [`eight_scan`] against a caller-provided (possibly cached) table.
pub fn eight_scan_in(table: &IrrepTable, opts: ScanOptions) -> Result<EightScanReport> {
    let n = table.n();
    if n < 8 {
        return Err(Error::Domain(format!("scan needs n ≥ 8, got {n}")));
    }
    let classes = enumerate_cycle_types(n);
    let results: Vec<(Option<ClassViolation>, u64)> = classes
        .par_iter()
        .map(|class| scan_class(table, class, opts))
        .collect::<Result<_>>()?;
    let pruned = results.iter().map(|(_, p)| p).sum();
    let violations = results.into_iter().filter_map(|(v, _)| v).collect();
    Ok(EightScanReport { n, classes_checked: classes.len(), pruned, violations })
}

fn scan_class(
    table: &IrrepTable,
    class: &CycleType,
    opts: ScanOptions,
) -> Result<(Option<ClassViolation>, u64)> {
    if opts.prune {
        return scan_class_pruned(table, class, opts.prune_eps);
    }
    let (eight, _) = eight_max(table.n(), class)?;
    let (triv, sgn) = table.trivial_indices();
    let col = table.column(class)?;

    let mut best = eight.clone();
    let mut ruling: Vec<Partition> = Vec::new();
    for (i, chi) in col.into_iter().enumerate() {
        if i == triv || i == sgn {
            continue;
        }
        let value = BigRational::new(chi, BigInt::from(table.dims()[i].clone()));
        if value > best {
            best = value;
            ruling = vec![table.shapes()[i].clone()];
        } else if !ruling.is_empty() && value == best {
            ruling.push(table.shapes()[i].clone());
        }
    }
    let violation = (best > eight).then(|| ClassViolation {
        class: class.clone(),
        lambda: best,
        eight,
        ruling,
    });
    Ok((violation, 0))
}

/// Heuristic variant: skips irreps whose dimension-based bound cannot
/// beat the incumbent. On a violation the tie set covers evaluated
/// irreps only.
fn scan_class_pruned(
    table: &IrrepTable,
    class: &CycleType,
    eps: f64,
) -> Result<(Option<ClassViolation>, u64)> {
    let n = table.n();
    let (eight, _) = eight_max(n, class)?;
    let (triv, sgn) = table.trivial_indices();
    let sign = class.sign();
    let c1 = class.count(1);

    let mut ev = MnEvaluator::new(class);
    let mut best = eight.clone();
    let mut ruling: Vec<Partition> = Vec::new();
    let mut pruned = 0u64;
    let mut chi_cache: std::collections::HashMap<usize, BigInt> = std::collections::HashMap::new();

    for (i, shape) in table.shapes().iter().enumerate() {
        if i == triv || i == sgn {
            continue;
        }
        let chi = if let Some(v) = chi_cache.remove(&i) {
            v
        } else {
            let bound = larsen_shalev_bound(n, c1, &table.dims()[i], eps);
            if bound < best.to_f64().unwrap_or(-1.0) {
                pruned += 1;
                continue;
            }
            let v = ev.chi(shape)?;
            // transposes share one evaluation
            let ti = table.transpose_index(i);
            if ti > i {
                chi_cache.insert(ti, if sign < 0 { -&v } else { v.clone() });
            }
            v
        };
        let value = BigRational::new(chi, BigInt::from(table.dims()[i].clone()));
        if value > best {
            best = value;
            ruling = vec![shape.clone()];
        } else if !ruling.is_empty() && value == best {
            ruling.push(shape.clone());
        }
    }
    let violation = (best > eight).then(|| ClassViolation {
        class: class.clone(),
        lambda: best,
        eight,
        ruling,
    });
    Ok((violation, pruned))
}

/// The exact rational floor `3 / (n(n−2)(n−4))`.
pub fn eight_floor(n: u32) -> BigRational {
    let n = BigInt::from(n);
    BigRational::new(
        BigInt::from(3),
        (&n) * ((&n) - BigInt::from(2)) * ((&n) - BigInt::from(4)),
    )
}

#[derive(Clone, Debug)]
pub struct EightFloorReport {
    pub n: u32,
    pub classes_checked: usize,
    pub floor: BigRational,
    /// Classes whose eight-family maximum falls below the floor.
    pub violations: Vec<(CycleType, BigRational)>,
}

/// Checks `eight_max(n, μ) ≥ 3/(n(n−2)(n−4))` for every class of `S_n`,
/// using family polynomials only.
pub fn eight_floor_check(n: u32) -> Result<EightFloorReport> {
    if n < 8 {
        return Err(Error::Domain(format!("floor check needs n ≥ 8, got {n}")));
    }
    let floor = eight_floor(n);
    let classes = enumerate_cycle_types(n);
    let violations: Vec<(CycleType, BigRational)> = classes
        .par_iter()
        .map(|class| {
            let (value, _) = eight_max(n, class)?;
            Ok(if value < floor {
                Some((class.clone(), value))
            } else {
                None
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(EightFloorReport { n, classes_checked: classes.len(), floor, violations })
}
