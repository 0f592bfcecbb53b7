//! Numeric laboratory for arbitrary symmetric weightings: permutation
//! actions on points and pairs, dense spectra, block attribution by
//! permutation-module subtraction, and the brute-force Cayley oracle.
//!
//! This is the only module where floating point lives. Default tolerances:
//! eigensolver 1e−9, multiset matching 1e−8 (both configurable at the call
//! sites that take a tolerance).

use std::collections::HashMap;

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};

use num::rational::BigRational;
use num::traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::partitions::CycleType;
use crate::spectra::NormalElement;

/// Largest point count accepted by the dense ordered-pair machinery.
pub const MAX_PAIR_POINTS: u32 = 100;

/// Largest `n` for which the full `n!×n!` Cayley matrix is built.
pub const MAX_ORACLE_POINTS: u32 = 6;

/// A permutation of `{0, …, n−1}` by its image table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation { images: (0..n as usize).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Domain(format!("not a bijection: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a b)` (0-based points).
    pub fn transposition(n: u32, a: usize, b: usize) -> Result<Self> {
        if a >= n as usize || b >= n as usize || a == b {
            return Err(Error::Domain(format!("bad transposition ({a} {b}) on {n} points")));
        }
        let mut images: Vec<usize> = (0..n as usize).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// The full cycle `(1 2 … n)` sending point `i` to `i+1 (mod n)`.
    pub fn full_cycle(n: u32) -> Self {
        let n = n as usize;
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.images.len(), other.images.len());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        CycleType::from_cycles(&lengths).expect("valid cycle lengths")
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl std::fmt::Display for Permutation {
    /// Cycle notation on 1-based points; fixed points omitted.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let n = self.images.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A symmetric, non-negatively weighted generating multiset.
///
/// Duplicate permutations are merged by summing weights; construction
/// fails unless every generator's inverse carries the same total weight.
#[derive(Clone, Debug)]
pub struct WeightedGenSet {
    n: u32,
    pairs: Vec<(Permutation, f64)>,
}

impl WeightedGenSet {
    pub fn new(n: u32, raw: Vec<(Permutation, f64)>) -> Result<Self> {
        let mut merged: HashMap<Permutation, f64> = HashMap::new();
        for (g, w) in raw {
            if g.n() != n {
                return Err(Error::Domain(format!(
                    "generator on {} points in a set on {n}",
                    g.n()
                )));
            }
            if w < 0.0 || !w.is_finite() {
                return Err(Error::Domain(format!("bad weight {w}")));
            }
            *merged.entry(g).or_insert(0.0) += w;
        }
        for (g, &w) in &merged {
            let wi = merged.get(&g.inverse()).copied().unwrap_or(0.0);
            if w != wi {
                return Err(Error::NotSymmetric(format!(
                    "generator {g} has weight {w} but its inverse has {wi}"
                )));
            }
        }
        let mut pairs: Vec<(Permutation, f64)> = merged.into_iter().collect();
        pairs.sort_by(|a, b| a.0.images.cmp(&b.0.images));
        Ok(WeightedGenSet { n, pairs })
    }

    /// Expands a normal element into explicit class members with weight
    /// `α_C` each. Only viable at oracle scale.
    pub fn from_normal_element(element: &NormalElement) -> Result<Self> {
        let n = element.n();
        if n > MAX_ORACLE_POINTS {
            return Err(Error::TooLarge(format!(
                "class expansion needs n ≤ {MAX_ORACLE_POINTS}, got {n}"
            )));
        }
        let mut pairs = Vec::new();
        for (class, alpha) in element.coeffs() {
            let w = alpha
                .to_f64()
                .ok_or_else(|| Error::Domain(format!("coefficient {alpha} not representable")))?;
            for g in class_members(class) {
                pairs.push((g, w));
            }
        }
        WeightedGenSet::new(n, pairs)
    }

    /// The four-element set `¼·[id + (1 2) + (1 2 … n) + (1 2 … n)⁻¹]`.
    pub fn cycle_and_transposition(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("needs n ≥ 3, got {n}")));
        }
        let c = Permutation::full_cycle(n);
        WeightedGenSet::new(
            n,
            vec![
                (Permutation::identity(n), 0.25),
                (Permutation::transposition(n, 0, 1)?, 0.25),
                (c.inverse(), 0.25),
                (c, 0.25),
            ],
        )
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pairs(&self) -> &[(Permutation, f64)] {
        &self.pairs
    }

    pub fn total_weight(&self) -> f64 {
        self.pairs.iter().map(|(_, w)| w).sum()
    }
}

/// All permutations with the given cycle type.
pub fn class_members(class: &CycleType) -> Vec<Permutation> {
    let n = class.n() as usize;
    (0..n)
        .permutations(n)
        .map(|images| Permutation { images })
        .filter(|g| g.cycle_type() == *class)
        .collect()
}

/// Which tuple action to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleAction {
    Points,
    UnorderedPairs,
    OrderedPairs,
}

impl TupleAction {
    pub fn domain_size(self, n: u32) -> usize {
        let n = n as usize;
        match self {
            TupleAction::Points => n,
            TupleAction::UnorderedPairs => n * (n - 1) / 2,
            TupleAction::OrderedPairs => n * (n - 1),
        }
    }
}

/// Ordered pairs `(x,y)`, `x ≠ y`, in lexicographic order.
fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * (n - 1));
    for x in 0..n {
        for y in 0..n {
            if x != y {
                v.push((x, y));
            }
        }
    }
    v
}

/// Unordered pairs `{x,y}`, `x < y`, in lexicographic order.
fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            v.push((x, y));
        }
    }
    v
}

/// Weighted adjacency operator of the action on points or pairs of
/// distinct points. Symmetric because the generating set is symmetric.
pub fn action_matrix(gens: &WeightedGenSet, action: TupleAction) -> Result<DMatrix<f64>> {
    let n = gens.n() as usize;
    if action != TupleAction::Points && gens.n() > MAX_PAIR_POINTS {
        return Err(Error::TooLarge(format!(
            "pair actions need n ≤ {MAX_PAIR_POINTS}, got {n}"
        )));
    }
    match action {
        TupleAction::Points => {
            let mut m = DMatrix::zeros(n, n);
            for (g, w) in gens.pairs() {
                for x in 0..n {
                    m[(x, g.apply(x))] += w;
                }
            }
            Ok(m)
        }
        TupleAction::OrderedPairs => {
            let dom = ordered_pairs(n);
            let index: HashMap<(usize, usize), usize> =
                dom.iter().copied().enumerate().map(|(i, p)| (p, i)).collect();
            let mut m = DMatrix::zeros(dom.len(), dom.len());
            for (g, w) in gens.pairs() {
                for (i, &(x, y)) in dom.iter().enumerate() {
                    let j = index[&(g.apply(x), g.apply(y))];
                    m[(i, j)] += w;
                }
            }
            Ok(m)
        }
        TupleAction::UnorderedPairs => {
            let dom = unordered_pairs(n);
            let index: HashMap<(usize, usize), usize> =
                dom.iter().copied().enumerate().map(|(i, p)| (p, i)).collect();
            let mut m = DMatrix::zeros(dom.len(), dom.len());
            for (g, w) in gens.pairs() {
                for (i, &(x, y)) in dom.iter().enumerate() {
                    let (a, b) = (g.apply(x), g.apply(y));
                    let j = index[&(a.min(b), a.max(b))];
                    m[(i, j)] += w;
                }
            }
            Ok(m)
        }
    }
}

/// Full spectrum of a symmetric matrix, descending.
pub fn spectrum(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    let asym = (m - m.transpose()).abs().max();
    if asym > 1e-12 {
        return Err(Error::Domain(format!("matrix not symmetric (deviation {asym:.3e})")));
    }
    let eig = m.clone().symmetric_eigen();
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.partial_cmp(a).expect("real eigenvalues"));
    Ok(values)
}

/// Removes each value of `b` from `a` by greedy nearest match.
/// Fails if some value has no partner within `tol`; returns the remaining
/// multiset and the largest matched deviation.
pub fn multiset_subtract(a: &[f64], b: &[f64], tol: f64) -> Result<(Vec<f64>, f64)> {
    let mut rest: Vec<f64> = a.to_vec();
    let mut residual = 0.0f64;
    for &x in b {
        let (idx, diff) = rest
            .iter()
            .enumerate()
            .map(|(i, &y)| (i, (y - x).abs()))
            .min_by(|p, q| p.1.partial_cmp(&q.1).expect("finite"))
            .ok_or_else(|| Error::Attribution(format!("nothing left to match {x}")))?;
        if diff > tol {
            return Err(Error::Attribution(format!(
                "no partner for eigenvalue {x} within {tol:.1e} (best {diff:.3e})"
            )));
        }
        residual = residual.max(diff);
        rest.swap_remove(idx);
    }
    rest.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Ok((rest, residual))
}

/// Eigenvalues of the points / pairs actions, split into irrep blocks.
#[derive(Clone, Debug)]
pub struct SpectrumAttribution {
    pub n: u32,
    pub total_weight: f64,
    /// The single trivial eigenvalue, `|Σ|`.
    pub trivial: f64,
    /// Block of `(n−1,1)`, size `n−1`.
    pub std_block: Vec<f64>,
    /// Block of `(n−2,2)`, size `n(n−3)/2`.
    pub two_row_block: Vec<f64>,
    /// Block of `(n−2,1,1)`, size `(n−1)(n−2)/2`.
    pub hook_block: Vec<f64>,
    /// Largest deviation among matched eigenvalue pairs.
    pub residual: f64,
}

impl SpectrumAttribution {
    /// The block attaining the largest non-trivial eigenvalue, with ties.
    pub fn leaders(&self, tol: f64) -> Vec<&'static str> {
        let tops = [
            ("(n-1,1)", self.std_block.first().copied()),
            ("(n-2,2)", self.two_row_block.first().copied()),
            ("(n-2,1,1)", self.hook_block.first().copied()),
        ];
        let best = tops
            .iter()
            .filter_map(|(_, v)| *v)
            .fold(f64::NEG_INFINITY, f64::max);
        tops.iter()
            .filter(|(_, v)| v.is_some_and(|x| (x - best).abs() <= tol))
            .map(|(name, _)| *name)
            .collect()
    }
}

/// Splits the ordered-pair action spectrum into irrep blocks by
/// subtracting the smaller permutation modules:
/// std = points − {|Σ|}; (n−2,2) = unordered − points;
/// (n−2,1,1) = ordered − unordered − std.
pub fn attribute_blocks(gens: &WeightedGenSet, match_tol: f64) -> Result<SpectrumAttribution> {
    let n = gens.n();
    if n < 4 {
        return Err(Error::Domain(format!("block attribution needs n ≥ 4, got {n}")));
    }
    let total = gens.total_weight();
    let points = spectrum(&action_matrix(gens, TupleAction::Points)?)?;
    let unordered = spectrum(&action_matrix(gens, TupleAction::UnorderedPairs)?)?;
    let ordered = spectrum(&action_matrix(gens, TupleAction::OrderedPairs)?)?;

    let (std_block, r1) = multiset_subtract(&points, &[total], match_tol)?;
    let (two_row_block, r2) = multiset_subtract(&unordered, &points, match_tol)?;
    let (after_unordered, r3) = multiset_subtract(&ordered, &unordered, match_tol)?;
    let (hook_block, r4) = multiset_subtract(&after_unordered, &std_block, match_tol)?;

    let expect_sizes = (
        (n - 1) as usize,
        (n * (n - 3) / 2) as usize,
        ((n - 1) * (n - 2) / 2) as usize,
    );
    if std_block.len() != expect_sizes.0
        || two_row_block.len() != expect_sizes.1
        || hook_block.len() != expect_sizes.2
    {
        return Err(Error::Attribution(format!(
            "block sizes {} / {} / {} do not match {expect_sizes:?}",
            std_block.len(),
            two_row_block.len(),
            hook_block.len()
        )));
    }
    Ok(SpectrumAttribution {
        n,
        total_weight: total,
        trivial: total,
        std_block,
        two_row_block,
        hook_block,
        residual: r1.max(r2).max(r3).max(r4),
    })
}

/// Rayleigh-quotient witness for the ordered-pair action of the
/// cycle-and-transposition set: the test function `f((x,y)) = ((x−y) mod n)
/// − n/2` certifies a spectral gap of order `1/n³`. Returns the quotient
/// `⟨(I−A)f, f⟩ / ⟨f, f⟩` alongside the reference value `6/n³`.
pub fn rayleigh_witness(n: u32) -> Result<(f64, f64)> {
    if n < 5 {
        return Err(Error::Domain(format!("witness needs n ≥ 5, got {n}")));
    }
    let gens = WeightedGenSet::cycle_and_transposition(n)?;
    let a = action_matrix(&gens, TupleAction::OrderedPairs)?;
    let dom = ordered_pairs(n as usize);
    let f = DVector::from_iterator(
        dom.len(),
        dom.iter().map(|&(x, y)| {
            let d = (x as i64 - y as i64).rem_euclid(n as i64) as f64;
            d - n as f64 / 2.0
        }),
    );
    let ff = f.dot(&f);
    let af = &a * &f;
    let quotient = (ff - f.dot(&af)) / ff;
    Ok((quotient, 6.0 / (n as f64).powi(3)))
}

/// Full spectrum of the weighted Cayley graph on all of `S_n`, descending.
/// Ground truth for everything else; `n ≤ 6` only.
pub fn cayley_oracle(gens: &WeightedGenSet) -> Result<Vec<f64>> {
    let n = gens.n();
    if n > MAX_ORACLE_POINTS {
        return Err(Error::TooLarge(format!(
            "Cayley oracle needs n ≤ {MAX_ORACLE_POINTS}, got {n}"
        )));
    }
    let elements: Vec<Permutation> = (0..n as usize)
        .permutations(n as usize)
        .map(|images| Permutation { images })
        .collect();
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let size = elements.len();
    let mut m = DMatrix::zeros(size, size);
    for (g, w) in gens.pairs() {
        for (i, h) in elements.iter().enumerate() {
            let j = index[&h.compose(g)];
            m[(i, j)] += w;
        }
    }
    spectrum(&m)
}

/// `λ(S_n, Σ)` from an oracle spectrum: drops one copy of the trivial
/// eigenvalue and one copy of the sign eigenvalue, then takes the maximum.
pub fn oracle_lambda(gens: &WeightedGenSet, full_spectrum: &[f64], tol: f64) -> Result<f64> {
    let total = gens.total_weight();
    let sgn: f64 = gens
        .pairs()
        .iter()
        .map(|(g, w)| w * g.cycle_type().sign() as f64)
        .sum();
    let (rest, _) = multiset_subtract(full_spectrum, &[total, sgn], tol)?;
    rest.first()
        .copied()
        .ok_or_else(|| Error::Attribution("spectrum exhausted".into()))
}

/// Largest eigenvalue of the standard block: the points spectrum with one
/// copy of the trivial eigenvalue removed.
pub fn std_block_max(gens: &WeightedGenSet, tol: f64) -> Result<f64> {
    let points = spectrum(&action_matrix(gens, TupleAction::Points)?)?;
    let (rest, _) = multiset_subtract(&points, &[gens.total_weight()], tol)?;
    rest.first()
        .copied()
        .ok_or_else(|| Error::Attribution("points spectrum exhausted".into()))
}

/// The character-predicted Cayley spectrum of a normal element: each
/// irrep's scalar with multiplicity `dim²`, descending.
pub fn predicted_cayley_spectrum(element: &NormalElement) -> Result<Vec<f64>> {
    let table = crate::spectra::IrrepTable::new(element.n());
    let values = element.eigenvalues_all(&table)?;
    let mut out = Vec::new();
    for (i, v) in values.iter().enumerate() {
        let v = rational_to_f64(v)?;
        let dim = table.dims()[i]
            .to_usize()
            .ok_or_else(|| Error::TooLarge("dimension overflow".into()))?;
        out.extend(std::iter::repeat_n(v, dim * dim));
    }
    out.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Ok(out)
}

fn rational_to_f64(v: &BigRational) -> Result<f64> {
    v.to_f64()
        .ok_or_else(|| Error::Domain(format!("value {v} not representable as f64")))
}

/// Diameter diagnostic from a spectral gap: `3·log|G| / sqrt(gap)`.
pub fn diameter_bound(log_group_order: f64, gap: f64) -> f64 {
    if gap <= 0.0 {
        return f64::INFINITY;
    }
    3.0 * log_group_order / gap.sqrt()
}

/// Writes a matrix in coordinate text format: a `rows cols nnz` header
/// line, then one `row col value` line per non-zero (0-based indices,
/// full-precision values).
pub fn write_matrix_coordinate<W: std::io::Write>(m: &DMatrix<f64>, out: &mut W) -> Result<()> {
    let nnz = m.iter().filter(|&&v| v != 0.0).count();
    writeln!(out, "{} {} {}", m.nrows(), m.ncols(), nnz)?;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let v = m[(i, j)];
            if v != 0.0 {
                writeln!(out, "{i} {j} {v:.17e}")?;
            }
        }
    }
    Ok(())
}

/// Writes a spectrum as CSV, one eigenvalue per line, descending,
/// full-precision decimal.
pub fn write_spectrum_csv<W: std::io::Write>(values: &[f64], out: &mut W) -> Result<()> {
    writeln!(out, "eigenvalue")?;
    for v in values {
        writeln!(out, "{v:.17e}")?;
    }
    Ok(())
}

/// `ln(n!)`.
pub fn log_factorial(n: u32) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use num::bigint::BigInt;
    use std::collections::BTreeMap;
    use std::str::FromStr;

    #[test]
    fn permutation_basics() {
        let c = Permutation::full_cycle(5);
        assert_eq!(c.to_string(), "(1 2 3 4 5)");
        assert_eq!(c.cycle_type(), CycleType::from_str("5^1").unwrap());
        assert!(c.compose(&c.inverse()).is_identity());

        let t = Permutation::transposition(5, 0, 1).unwrap();
        assert_eq!(t.cycle_type(), CycleType::from_str("2^1 1^3").unwrap());

        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn gen_set_symmetry_enforced() {
        let c = Permutation::full_cycle(4);
        assert!(WeightedGenSet::new(4, vec![(c.clone(), 1.0)]).is_err());
        let ok = WeightedGenSet::new(4, vec![(c.clone(), 1.0), (c.inverse(), 1.0)]).unwrap();
        assert_eq!(ok.total_weight(), 2.0);

        // self-inverse generators need no partner
        let t = Permutation::transposition(4, 1, 2).unwrap();
        assert!(WeightedGenSet::new(4, vec![(t, 0.5)]).is_ok());
    }

    #[test]
    fn identity_only_action_is_scaled_identity() {
        let gens =
            WeightedGenSet::new(4, vec![(Permutation::identity(4), 0.7)]).unwrap();
        let m = action_matrix(&gens, TupleAction::Points).unwrap();
        assert_eq!(m, DMatrix::from_diagonal_element(4, 4, 0.7));
        let empty = WeightedGenSet::new(4, vec![]).unwrap();
        let spec = cayley_oracle(&empty).unwrap();
        assert!(spec.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn row_sums_equal_total_weight() {
        let gens = WeightedGenSet::cycle_and_transposition(7).unwrap();
        for action in [
            TupleAction::Points,
            TupleAction::UnorderedPairs,
            TupleAction::OrderedPairs,
        ] {
            let m = action_matrix(&gens, action).unwrap();
            assert_eq!(m.nrows(), action.domain_size(7));
            for i in 0..m.nrows() {
                let s: f64 = m.row(i).iter().sum();
                assert!((s - 1.0).abs() < 1e-12, "row {i} of {action:?}");
            }
        }
    }

    #[test]
    fn points_spectrum_of_example_set() {
        let gens = WeightedGenSet::cycle_and_transposition(8).unwrap();
        let m = action_matrix(&gens, TupleAction::Points).unwrap();
        let spec = spectrum(&m).unwrap();
        assert!((spec[0] - 1.0).abs() < 1e-12);
        assert!(spec[1] < 1.0);
    }

    #[test]
    fn cayley_oracle_matches_character_scalars() {
        // transposition class of S_4: std block tops out at exactly 2
        let sigma = NormalElement::class_indicator(CycleType::transpositions(4).unwrap());
        let gens = WeightedGenSet::from_normal_element(&sigma).unwrap();
        let spec = cayley_oracle(&gens).unwrap();
        assert_eq!(spec.len(), 24);
        let predicted = predicted_cayley_spectrum(&sigma).unwrap();
        assert_eq!(predicted.len(), 24);
        for (a, b) in spec.iter().zip(&predicted) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
        let lambda = oracle_lambda(&gens, &spec, 1e-8).unwrap();
        assert!((lambda - 2.0).abs() < 1e-8);
        let std_max = std_block_max(&gens, 1e-8).unwrap();
        assert!((lambda - std_max).abs() < 1e-8);
    }

    #[test]
    fn attribution_blocks_constant_for_normal_elements() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(
            CycleType::transpositions(5).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        );
        coeffs.insert(
            CycleType::from_str("5^1").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(3)),
        );
        let sigma = NormalElement::new(5, coeffs).unwrap();
        let gens = WeightedGenSet::from_normal_element(&sigma).unwrap();
        let attr = attribute_blocks(&gens, 1e-8).unwrap();

        for (shape, block) in [
            (Partition::new(vec![4, 1]).unwrap(), &attr.std_block),
            (Partition::new(vec![3, 2]).unwrap(), &attr.two_row_block),
            (Partition::new(vec![3, 1, 1]).unwrap(), &attr.hook_block),
        ] {
            let scalar = rational_to_f64(&sigma.eigenvalue(&shape).unwrap()).unwrap();
            for v in block.iter() {
                assert!((v - scalar).abs() < 1e-8, "{shape}: {v} vs {scalar}");
            }
        }
        assert!(attr.residual < 1e-8);
    }

    #[test]
    fn multiset_subtract_reports_residual() {
        let a = [3.0, 2.000000001, 1.0];
        let (rest, residual) = multiset_subtract(&a, &[2.0], 1e-6).unwrap();
        assert_eq!(rest, vec![3.0, 1.0]);
        assert!(residual > 0.0 && residual < 1e-8);
        assert!(multiset_subtract(&a, &[5.0], 1e-6).is_err());
    }

    #[test]
    fn attribution_bookkeeping_identity() {
        // the deepest block is ordered − unordered − points + {triv}, so
        // its size plus the two subtrahends balances |ordered| + 1
        let n = 9u32;
        let gens = WeightedGenSet::cycle_and_transposition(n).unwrap();
        let attr = attribute_blocks(&gens, 1e-8).unwrap();
        let points = TupleAction::Points.domain_size(n);
        let unordered = TupleAction::UnorderedPairs.domain_size(n);
        assert_eq!(
            attr.hook_block.len() + unordered + points,
            (n * (n - 1) + 1) as usize
        );
        // and the ordered-pair module itself: triv + 2·std + both pair blocks
        let module_total =
            1 + 2 * attr.std_block.len() + attr.two_row_block.len() + attr.hook_block.len();
        assert_eq!(module_total, TupleAction::OrderedPairs.domain_size(n));
    }

    #[test]
    fn points_gap_cheeger_floor() {
        // 1 − λ₂(points) ≥ 1/(32n²) for the cycle-plus-transposition set
        for n in [8u32, 16, 30] {
            let gens = WeightedGenSet::cycle_and_transposition(n).unwrap();
            let points = spectrum(&action_matrix(&gens, TupleAction::Points).unwrap()).unwrap();
            let gap = 1.0 - points[1];
            assert!(gap >= 1.0 / (32.0 * (n as f64).powi(2)), "n={n} gap={gap}");
        }
    }

    #[test]
    fn export_formats_round_trip_textually() {
        let gens = WeightedGenSet::cycle_and_transposition(5).unwrap();
        let m = action_matrix(&gens, TupleAction::Points).unwrap();
        let mut coo = Vec::new();
        write_matrix_coordinate(&m, &mut coo).unwrap();
        let text = String::from_utf8(coo).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(header, "5 5 15");
        assert_eq!(text.lines().count(), 16);

        let mut csv = Vec::new();
        write_spectrum_csv(&spectrum(&m).unwrap(), &mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("eigenvalue"));
        let top: f64 = lines.next().unwrap().parse().unwrap();
        assert!((top - 1.0).abs() < 1e-12);
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn rayleigh_witness_bounds_the_gap() {
        // the quotient of a mean-zero test function upper-bounds the
        // spectral gap of the ordered-pair action
        let n = 24u32;
        let (q, reference) = rayleigh_witness(n).unwrap();
        assert!(q > 0.0);
        assert!(reference > 0.0);
        let gens = WeightedGenSet::cycle_and_transposition(n).unwrap();
        let ordered = spectrum(&action_matrix(&gens, TupleAction::OrderedPairs).unwrap()).unwrap();
        let gap = 1.0 - ordered[1];
        assert!(q >= gap - 1e-12, "q={q} gap={gap}");

        // exact value at n=24: the swap of the two tracked points between
        // positions 1 and 2 dominates the Dirichlet form, giving
        // (4(n−2) + 2(n−2)²)/8 over n·Σ_d (d − n/2)² = 132/24288
        assert!((q - 132.0 / 24288.0).abs() < 1e-12);
    }
}
