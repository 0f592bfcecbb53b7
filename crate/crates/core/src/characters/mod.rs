//! Exact irreducible characters of the symmetric group.
//!
//! Two independent evaluation routes are provided: the general
//! Murnaghan–Nakayama recursion ([`mn`]) and closed-form polynomials for
//! shallow families ([`families`]). They are cross-checked against each
//! other exhaustively in tests; scans use whichever is cheaper.

pub mod cache;
pub mod families;
pub mod mn;

pub use cache::CharCache;
pub use families::{family_character, family_dimension, family_normalized, Family, FamilyId, FAMILIES};
pub use mn::{mn_character, normalize, normalized_character, MnEvaluator};

use num::bigint::BigUint;
use num::traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::Result;
use crate::partitions::{enumerate_cycle_types, CycleType, Partition};

/// Branching restriction to `S_{n−1}`: all diagrams obtained by deleting
/// one removable corner, in row order.
pub fn branching_restrict(shape: &Partition) -> Vec<Partition> {
    shape.restrictions()
}

/// A disagreement between a family polynomial and the recursion.
#[derive(Clone, Debug)]
pub struct FamilyMismatch {
    pub family: FamilyId,
    pub n: u32,
    pub class: CycleType,
}

#[derive(Clone, Debug)]
pub struct FamilyCrossCheck {
    pub n_max: u32,
    pub comparisons: u64,
    pub mismatches: Vec<FamilyMismatch>,
}

/// Compares every family polynomial (and its transpose) against the
/// Murnaghan–Nakayama recursion on every class of every degree with
/// `2·depth ≤ n ≤ n_max`. The two routes are fully independent, so an
/// empty mismatch list validates both.
pub fn family_cross_check(n_max: u32) -> Result<FamilyCrossCheck> {
    let degrees: Vec<u32> = (1..=n_max).collect();
    let per_degree: Vec<(u64, Vec<FamilyMismatch>)> = degrees
        .par_iter()
        .map(|&n| {
            let mut comparisons = 0u64;
            let mut mismatches = Vec::new();
            for class in enumerate_cycle_types(n) {
                let mut ev = mn::MnEvaluator::new(&class);
                for (index, family) in FAMILIES.iter().enumerate() {
                    if n < 2 * family.depth() {
                        continue;
                    }
                    for transposed in [false, true] {
                        let id = FamilyId { index, transposed };
                        let shape = id.instantiate(n)?;
                        let direct = ev.chi(&shape)?;
                        let poly = families::family_character_on_class(id, &class)?;
                        comparisons += 1;
                        if direct != poly {
                            mismatches.push(FamilyMismatch { family: id, n, class: class.clone() });
                        }
                    }
                }
            }
            Ok((comparisons, mismatches))
        })
        .collect::<Result<_>>()?;
    Ok(FamilyCrossCheck {
        n_max,
        comparisons: per_degree.iter().map(|(c, _)| c).sum(),
        mismatches: per_degree.into_iter().flat_map(|(_, m)| m).collect(),
    })
}

/// Dimension-based upper bound on a positive normalized character:
/// `dim^( −log(n/f)/(2·log n) + ε )` with `f = max(c_1, 1)`.
///
/// A floating-point diagnostic only — the `ε` term is asymptotic and is
/// supplied by the caller, so this must never gate an exact comparison.
pub fn larsen_shalev_bound(n: u32, fixed_points: u32, dim: &BigUint, eps: f64) -> f64 {
    let f = fixed_points.max(1) as f64;
    let n = n as f64;
    let exponent = -((n / f).ln()) / (2.0 * n.ln()) + eps;
    let log_dim = ln_big(dim);
    (exponent * log_dim).exp()
}

/// Natural log of a big integer via the top bits; exact enough for
/// diagnostics at any scale that arises here.
fn ln_big(x: &BigUint) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() && v > 0.0 {
            return v.ln();
        }
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().unwrap_or(1.0);
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}
