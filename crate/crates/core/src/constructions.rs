//! Normal elements that annihilate every irrep family of bounded depth.
//!
//! The recipe: match the joint distribution of short cycle counts
//! `(c_1,…,c_k)` under the uniform distribution on a small symmetric
//! group, using only odd conjugacy classes with many `(k+1)`-cycles. Every
//! character polynomial of depth ≤ k then averages to zero, while some
//! depth-`k+1` irrep keeps a strictly positive eigenvalue.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_cycle_types, enumerate_partitions, CycleType, Partition};
use crate::spectra::NormalElement;

/// Joint distribution of `(c_1,…,c_k)` under uniform `S_m`, rows in
/// decreasing lexicographic order of the count vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCountDistribution {
    pub k: u32,
    pub m: u32,
    pub rows: Vec<(Vec<u32>, BigRational)>,
}

impl CycleCountDistribution {
    pub fn total(&self) -> BigRational {
        self.rows
            .iter()
            .map(|(_, p)| p.clone())
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

/// Exact distribution of the first `k` cycle counts of a uniform element
/// of `S_m`, aggregated from class sizes.
pub fn joint_cycle_distribution(k: u32, m: u32) -> Result<CycleCountDistribution> {
    if k < 1 || m < k {
        return Err(Error::Domain(format!(
            "need m ≥ k ≥ 1, got k={k}, m={m}"
        )));
    }
    let order = BigRational::from(BigInt::from(crate::partitions::factorial(m)));
    let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for class in enumerate_cycle_types(m) {
        let prefix: Vec<u32> = (1..=k).map(|l| class.count(l)).collect();
        let p = BigRational::from(BigInt::from(class.class_size())) / &order;
        *acc.entry(prefix).or_insert_with(BigRational::zero) += p;
    }
    let mut rows: Vec<(Vec<u32>, BigRational)> = acc.into_iter().collect();
    rows.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(CycleCountDistribution { k, m, rows })
}

/// One realized row of an annihilator: the chosen class of `S_n` carrying
/// the row's probability mass.
#[derive(Clone, Debug)]
pub struct AnnihilatorRow {
    pub prefix: Vec<u32>,
    pub probability: BigRational,
    pub class: CycleType,
    /// Per-element coefficient, `probability / |class|`.
    pub alpha: BigRational,
}

/// A reproducible description of a constructed annihilator.
#[derive(Clone, Debug)]
pub struct AnnihilatorSpec {
    pub n: u32,
    pub k: u32,
    pub m: u32,
    pub rows: Vec<AnnihilatorRow>,
}

/// Builds a non-negative normal element of `ℝ[S_n]` whose induced
/// distribution of `(c_1,…,c_k)` equals [`joint_cycle_distribution`]`(k,m)`,
/// supported on odd classes with many `(k+1)`-cycles.
///
/// The canonical class for a row places the prescribed short cycles, fills
/// the rest with `(k+1)`-cycles, and absorbs the remainder into one tail
/// cycle whose length is chosen to force odd total sign.
pub fn build_annihilator(n: u32, k: u32, m: u32) -> Result<(NormalElement, AnnihilatorSpec)> {
    let dist = joint_cycle_distribution(k, m)?;
    let mut rows = Vec::with_capacity(dist.rows.len());
    let mut coeffs = BTreeMap::new();
    for (prefix, probability) in &dist.rows {
        let class = realize_row(n, k, prefix)?;
        let size = BigRational::from(BigInt::from(class.class_size()));
        let alpha = probability / size;
        rows.push(AnnihilatorRow {
            prefix: prefix.clone(),
            probability: probability.clone(),
            class: class.clone(),
            alpha: alpha.clone(),
        });
        coeffs.insert(class, alpha);
    }
    let element = NormalElement::new(n, coeffs)?;
    let spec = AnnihilatorSpec { n, k, m, rows };
    Ok((element, spec))
}

/// Realizes a count prefix `(c_1,…,c_k)` as an odd class of `S_n` whose
/// remaining points are `(k+1)`-cycles plus one tail cycle.
fn realize_row(n: u32, k: u32, prefix: &[u32]) -> Result<CycleType> {
    let fill = k + 1;
    let used: u32 = prefix
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as u32 + 1) * c)
        .sum();
    if used > n {
        return Err(Error::Infeasible(format!(
            "row ({}) needs {used} points but n = {n}",
            join_counts(prefix)
        )));
    }
    let rest = n - used;

    let mut base: Vec<u32> = Vec::new();
    for (i, &c) in prefix.iter().enumerate() {
        base.extend(std::iter::repeat_n(i as u32 + 1, c as usize));
    }

    // candidate tails: none, or any length > k, consuming rest ≡ tail (mod fill)
    let candidates = std::iter::once(0u32).chain(k + 1..=rest);
    for tail in candidates {
        if !(rest - tail).is_multiple_of(fill) {
            continue;
        }
        let mut cycles = base.clone();
        cycles.extend(std::iter::repeat_n(fill, ((rest - tail) / fill) as usize));
        if tail > 0 {
            cycles.push(tail);
        }
        let class = CycleType::from_cycles(&cycles)?;
        if !class.is_odd() {
            continue;
        }
        // the prescribed prefix must survive the fill
        for (i, &c) in prefix.iter().enumerate() {
            debug_assert_eq!(class.count(i as u32 + 1), c);
        }
        // many (k+1)-cycles: the whole point of the construction
        let floor = (rest as i64 - (k as i64 + 2)).div_euclid(fill as i64) - 1;
        if (class.count(fill) as i64) < floor {
            return Err(Error::Infeasible(format!(
                "row ({}) at n = {n}: tail {tail} leaves too few {fill}-cycles",
                join_counts(prefix)
            )));
        }
        return Ok(class);
    }
    Err(Error::Infeasible(format!(
        "row ({}) admits no odd class at n = {n}",
        join_counts(prefix)
    )))
}

fn join_counts(prefix: &[u32]) -> String {
    prefix
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Exact eigenvalues of `element` at every irrep with at most `k` cells
/// outside the first row or outside the first column (trivial and sign
/// excluded). All should vanish for a freshly built annihilator.
#[derive(Clone, Debug)]
pub struct AnnihilationReport {
    pub k: u32,
    pub values: Vec<(Partition, BigRational)>,
    pub all_zero: bool,
}

pub fn verify_annihilation(element: &NormalElement, k: u32) -> Result<AnnihilationReport> {
    let n = element.n();
    let mut values = Vec::new();
    let mut all_zero = true;
    for shape in shallow_irreps(n, 1, k)? {
        let value = element.eigenvalue(&shape)?;
        all_zero &= value.is_zero();
        values.push((shape, value));
    }
    Ok(AnnihilationReport { k, values, all_zero })
}

/// Irreps with strictly positive eigenvalue among those with exactly
/// `k+1` cells outside the first row or first column.
pub fn find_beating_irreps(
    element: &NormalElement,
    k: u32,
) -> Result<Vec<(Partition, BigRational)>> {
    let n = element.n();
    let mut out = Vec::new();
    for shape in shallow_irreps(n, k + 1, k + 1)? {
        let value = element.eigenvalue(&shape)?;
        if value.is_positive() {
            out.push((shape, value));
        }
    }
    Ok(out)
}

/// All irreps of `S_n` whose depth (cells outside the first row, or
/// outside the first column) lies in `lo..=hi`, in canonical order.
/// Trivial (depth 0 row) and sign (depth 0 column) never qualify.
fn shallow_irreps(n: u32, lo: u32, hi: u32) -> Result<Vec<Partition>> {
    if lo < 1 {
        return Err(Error::Domain("depth range must start at 1".into()));
    }
    if n < 2 * hi + 2 {
        return Err(Error::Domain(format!(
            "need n ≥ {} to separate depth-{hi} row and column families, got {n}",
            2 * hi + 2
        )));
    }
    let mut out = Vec::new();
    for depth in lo..=hi {
        for tail in enumerate_partitions(depth) {
            if tail.part(0) > n - depth {
                continue;
            }
            let mut parts = vec![n - depth];
            parts.extend_from_slice(tail.parts());
            let shape = Partition::new(parts)?;
            out.push(shape.transpose());
            out.push(shape);
        }
    }
    out.sort();
    out.reverse();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;
    use std::str::FromStr;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn distribution_k2_m4() {
        let d = joint_cycle_distribution(2, 4).unwrap();
        let expect = vec![
            (vec![4, 0], rat(1, 24)),
            (vec![2, 1], rat(1, 4)),
            (vec![1, 0], rat(1, 3)),
            (vec![0, 2], rat(1, 8)),
            (vec![0, 0], rat(1, 4)),
        ];
        assert_eq!(d.rows, expect);
        assert_eq!(d.total(), BigRational::one());
    }

    #[test]
    fn distribution_k2_m2() {
        let d = joint_cycle_distribution(2, 2).unwrap();
        let expect = vec![(vec![2, 0], rat(1, 2)), (vec![0, 1], rat(1, 2))];
        assert_eq!(d.rows, expect);
    }

    #[test]
    fn distributions_are_probability_measures() {
        for k in 1..=4 {
            for m in k..=9 {
                let d = joint_cycle_distribution(k, m).unwrap();
                assert_eq!(d.total(), BigRational::one(), "k={k} m={m}");
                for (prefix, p) in &d.rows {
                    assert!(p.is_positive());
                    let used: u32 = prefix
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| (i as u32 + 1) * c)
                        .sum();
                    assert!(used <= m);
                }
            }
        }
    }

    #[test]
    fn realizes_reference_classes_at_100() {
        // the five classes for k=2, m=4 at n=100
        let d = joint_cycle_distribution(2, 4).unwrap();
        let got: Vec<String> = d
            .rows
            .iter()
            .map(|(prefix, _)| realize_row(100, 2, prefix).unwrap().to_string())
            .collect();
        assert_eq!(
            got,
            vec![
                "6^1 3^30 1^4",
                "3^32 2^1 1^2",
                "6^1 3^31 1^1",
                "6^1 3^30 2^2",
                "4^1 3^32",
            ]
        );
    }

    #[test]
    fn annihilator_weights_match_distribution() {
        let (element, spec) = build_annihilator(40, 2, 4).unwrap();
        assert_eq!(element.total_weight(), BigRational::one());
        for row in &spec.rows {
            // α_C·|C| = row probability
            let size = BigRational::from(BigInt::from(row.class.class_size()));
            assert_eq!(&row.alpha * size, row.probability);
            assert!(row.class.is_odd());
            assert!(row.alpha.is_positive());
        }
    }

    #[test]
    fn annihilates_and_beats_at_40() {
        let (element, _) = build_annihilator(40, 2, 4).unwrap();
        let report = verify_annihilation(&element, 2).unwrap();
        assert!(report.all_zero, "nonzero: {:?}", report.values);
        assert_eq!(report.values.len(), 6);
        let beating = find_beating_irreps(&element, 2).unwrap();
        assert!(!beating.is_empty());
    }

    #[test]
    fn small_group_variant_annihilates() {
        // distribution induced from S_k itself rather than S_2k; always
        // re-verified, never assumed
        let (element, _) = build_annihilator(30, 2, 2).unwrap();
        let report = verify_annihilation(&element, 2).unwrap();
        assert!(report.all_zero, "nonzero: {:?}", report.values);
    }

    #[test]
    fn infeasible_rows_error() {
        // n too small to realize four fixed points plus fills
        let err = build_annihilator(5, 2, 4).unwrap_err();
        assert!(matches!(err, Error::Infeasible(_)));
    }

    #[test]
    fn depth_one_construction() {
        let (element, spec) = build_annihilator(31, 1, 2).unwrap();
        assert_eq!(spec.rows.len(), 2);
        let report = verify_annihilation(&element, 1).unwrap();
        assert!(report.all_zero, "nonzero: {:?}", report.values);
        assert!(!find_beating_irreps(&element, 1).unwrap().is_empty());
    }

    #[test]
    fn identity_weighted_element_beats_everywhere() {
        let sigma = NormalElement::class_indicator(CycleType::from_str("1^20").unwrap());
        let beating = find_beating_irreps(&sigma, 2).unwrap();
        // every depth-3 irrep has χ̃(id) = 1 > 0
        assert_eq!(beating.len(), 6);
    }
}
