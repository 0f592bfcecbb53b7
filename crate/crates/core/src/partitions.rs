//! Integer partitions, Young diagrams, cycle types and conjugacy-class sizes.
//!
//! A [`Partition`] doubles as an irrep label of the symmetric group; a
//! [`CycleType`] labels a conjugacy class. Both carry a bit-exact text
//! notation: partitions as comma-separated parts (`"11,5"`), cycle types as
//! space-separated `len^count` factors in decreasing length (`"5^3 1^1"`).
//! All counting is done in arbitrary precision.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative count (dimensions, class sizes, n!).
pub type BigCount = BigUint;

/// n! as an exact integer.
pub fn factorial(n: u32) -> BigCount {
    let mut acc = BigCount::one();
    for k in 2..=n {
        acc *= BigCount::from(k);
    }
    acc
}

/// A partition of `n`: weakly decreasing positive parts summing to `n`.
///
/// The empty partition (of `n = 0`) is allowed. Partitions are ordered by
/// their parts vector, so sorting a list of partitions of the same `n` in
/// descending order yields the canonical decreasing-lexicographic order
/// produced by [`enumerate_partitions`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Internal constructor for parts already known to be valid.
    pub(crate) fn from_valid(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// Single-row partition `(n)`, the trivial irrep label.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    /// Single-column partition `(1^n)`, the sign irrep label.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize], n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Part at `row` (0-based), or 0 past the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Conjugate diagram (reflection across the main diagonal).
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Self::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols as u32 {
            // column j has one cell per row with part > j
            let len = self.parts.iter().take_while(|&&p| p > j).count() as u32;
            parts.push(len);
        }
        Partition::from_valid(parts)
    }

    /// `n − λ⁽¹⁾`: number of cells outside the first row.
    pub fn blocks_outside_first_row(&self) -> u32 {
        self.n - self.part(0)
    }

    /// `n − (number of parts)`: number of cells outside the first column.
    pub fn blocks_outside_first_column(&self) -> u32 {
        self.n - self.parts.len() as u32
    }

    /// Row indices of removable corners (cells whose removal leaves a diagram).
    pub fn corners(&self) -> Vec<usize> {
        let r = self.parts.len();
        (0..r)
            .filter(|&i| i + 1 == r || self.parts[i] > self.parts[i + 1])
            .collect()
    }

    /// Partitions of `n−1` obtained by deleting one removable corner,
    /// in canonical (decreasing lexicographic) order.
    pub fn restrictions(&self) -> Vec<Partition> {
        self.corners()
            .into_iter()
            .map(|i| {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                Partition::from_valid(parts)
            })
            .collect()
    }

    /// Product of all hook lengths of the diagram.
    pub fn hook_product(&self) -> BigCount {
        let t = self.transpose();
        let mut acc = BigCount::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p as usize {
                let hook = (p as u64 - j as u64) + (t.parts[j] as u64 - i as u64) - 1;
                acc *= BigCount::from(hook);
            }
        }
        acc
    }

    /// Dimension of the associated irrep: `n! / ∏ hooks`. Equals χ_λ(1).
    pub fn dimension(&self) -> BigCount {
        factorial(self.n) / self.hook_product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// `"11,5"` → partition (11,5). The empty string parses to the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("partition part {t:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` exactly once, in decreasing lexicographic order:
/// `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(remaining: u32, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_valid(stack.clone()));
            return;
        }
        let first = remaining.min(cap);
        for p in (1..=first).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    rec(n, n, &mut stack, &mut out);
    out
}

/// Number of partitions of `n` (computed by enumeration at desk scale).
pub fn partition_count(n: u32) -> usize {
    // Euler's recurrence would be cheaper but enumeration is what the
    // scans do anyway; counts at n ≤ 48 are instantaneous.
    enumerate_partitions(n).len()
}

/// Cycle type of a permutation of `n` points, stored as counts `ℓ → c_ℓ`.
///
/// Zero counts are never stored. The sum `Σ ℓ·c_ℓ` equals `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    counts: BTreeMap<u32, u32>,
    n: u32,
}

impl CycleType {
    pub fn new(counts: BTreeMap<u32, u32>) -> Result<Self> {
        if counts.keys().any(|&l| l == 0) {
            return Err(Error::InvalidCycleType("cycle length zero".into()));
        }
        let counts: BTreeMap<u32, u32> =
            counts.into_iter().filter(|&(_, c)| c > 0).collect();
        let n = counts.iter().map(|(&l, &c)| l * c).sum();
        Ok(CycleType { counts, n })
    }

    /// Cycle type with the given cycle lengths (in any order).
    pub fn from_cycles(lengths: &[u32]) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for &l in lengths {
            if l == 0 {
                return Err(Error::InvalidCycleType("cycle length zero".into()));
            }
            *counts.entry(l).or_insert(0) += 1;
        }
        Ok(CycleType { n: lengths.iter().sum(), counts })
    }

    /// The identity class of `S_n` (all fixed points).
    pub fn identity(n: u32) -> Self {
        let mut counts = BTreeMap::new();
        if n > 0 {
            counts.insert(1, n);
        }
        CycleType { counts, n }
    }

    /// The class of all transpositions in `S_n` (`n ≥ 2`).
    pub fn transpositions(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("no transpositions in S_{n}")));
        }
        let mut counts = BTreeMap::new();
        counts.insert(2, 1);
        if n > 2 {
            counts.insert(1, n - 2);
        }
        Ok(CycleType { counts, n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `c_ℓ`: the number of `ℓ`-cycles.
    pub fn count(&self, len: u32) -> u32 {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    /// `(c_1, …, c_k)` as a fixed-size prefix of counts.
    pub fn count_prefix<const K: usize>(&self) -> [u32; K] {
        std::array::from_fn(|i| self.count(i as u32 + 1))
    }

    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    pub fn num_cycles(&self) -> u32 {
        self.counts.values().sum()
    }

    /// `|supp(σ)| = n − c_1`.
    pub fn support_size(&self) -> u32 {
        self.n - self.count(1)
    }

    /// `(−1)^(n − number of cycles)`.
    pub fn sign(&self) -> i8 {
        if (self.n - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_odd(&self) -> bool {
        self.sign() == -1
    }

    /// Exact conjugacy-class cardinality `n! / ∏_ℓ ℓ^{c_ℓ}·c_ℓ!`.
    pub fn class_size(&self) -> BigCount {
        let mut denom = BigCount::one();
        for (&l, &c) in &self.counts {
            denom *= BigCount::from(l).pow(c);
            denom *= factorial(c);
        }
        factorial(self.n) / denom
    }

    /// Cycle lengths expanded with multiplicity, in decreasing order.
    pub fn cycles_desc(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.num_cycles() as usize);
        for (&l, &c) in self.counts.iter().rev() {
            v.extend(std::iter::repeat_n(l, c as usize));
        }
        v
    }

    /// The partition of `n` formed by the cycle lengths.
    pub fn to_partition(&self) -> Partition {
        Partition::from_valid(self.cycles_desc())
    }

    pub fn from_partition(p: &Partition) -> Self {
        CycleType::from_cycles(p.parts()).expect("valid partition parts")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&l, &c)) in self.counts.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}^{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `"5^3 1^1"` → the class with three 5-cycles and one fixed point.
/// A bare factor `"5"` is shorthand for `"5^1"`.
impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(CycleType::identity(0));
        }
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for factor in s.split_whitespace() {
            let (len_s, count_s) = match factor.split_once('^') {
                Some((a, b)) => (a, b),
                None => (factor, "1"),
            };
            let len: u32 = len_s
                .parse()
                .map_err(|e| Error::Parse(format!("cycle length {len_s:?}: {e}")))?;
            let count: u32 = count_s
                .parse()
                .map_err(|e| Error::Parse(format!("cycle count {count_s:?}: {e}")))?;
            if len == 0 {
                return Err(Error::Parse("cycle length zero".into()));
            }
            if counts.insert(len, count).is_some() {
                return Err(Error::Parse(format!("duplicate cycle length {len}")));
            }
        }
        CycleType::new(counts)
    }
}

/// All cycle types of `S_n`, one per conjugacy class, in the canonical order
/// induced by [`enumerate_partitions`].
pub fn enumerate_cycle_types(n: u32) -> Vec<CycleType> {
    enumerate_partitions(n)
        .iter()
        .map(CycleType::from_partition)
        .collect()
}

/// Sum of `class_size` over all classes of `S_n`; must equal `n!`.
pub fn class_size_total(n: u32) -> BigCount {
    enumerate_cycle_types(n)
        .iter()
        .map(|t| t.class_size())
        .fold(BigCount::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        let p4: Vec<String> = enumerate_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn enumerate_13_and_qualifying_count() {
        let all = enumerate_partitions(13);
        assert_eq!(all.len(), 101);
        let qualifying = all
            .iter()
            .filter(|p| {
                p.blocks_outside_first_row() >= 3 && p.blocks_outside_first_column() >= 3
            })
            .count();
        assert_eq!(qualifying, 93);
    }

    #[test]
    fn transpose_examples() {
        let p = Partition::new(vec![15, 1]).unwrap();
        let mut expect = vec![2];
        expect.extend(vec![1; 14]);
        assert_eq!(p.transpose().parts(), expect.as_slice());

        let square = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(square.transpose(), square);

        let row = Partition::new(vec![4]).unwrap();
        assert_eq!(row.transpose().parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn transpose_involution() {
        for n in 0..=12 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.transpose().transpose(), p);
                assert_eq!(
                    p.blocks_outside_first_row(),
                    p.transpose().blocks_outside_first_column()
                );
            }
        }
    }

    #[test]
    fn dimensions() {
        // (n−1,1) has dimension n−1
        let std10 = Partition::new(vec![9, 1]).unwrap();
        assert_eq!(std10.dimension(), BigCount::from(9u32));
        // (14,2): n(n−3)/2 at n=16
        let p = Partition::new(vec![14, 2]).unwrap();
        assert_eq!(p.dimension(), BigCount::from(104u32));
        // (2,2): hook product 3·2·2·1 = 12, 24/12 = 2
        let p = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(p.hook_product(), BigCount::from(12u32));
        assert_eq!(p.dimension(), BigCount::from(2u32));
    }

    #[test]
    fn dimension_squares_sum_to_factorial() {
        for n in 1..=14 {
            let total: BigCount = enumerate_partitions(n)
                .iter()
                .map(|p| {
                    let d = p.dimension();
                    &d * &d
                })
                .fold(BigCount::zero(), |a, b| a + b);
            assert_eq!(total, factorial(n), "n={n}");
        }
    }

    #[test]
    fn class_sizes() {
        let transp4 = CycleType::transpositions(4).unwrap();
        assert_eq!(transp4.class_size(), BigCount::from(6u32));
        assert_eq!(CycleType::identity(9).class_size(), BigCount::from(1u32));
        let five_cycles = CycleType::from_cycles(&[5]).unwrap();
        assert_eq!(five_cycles.class_size(), BigCount::from(24u32));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=14 {
            assert_eq!(class_size_total(n), factorial(n), "n={n}");
        }
    }

    #[test]
    fn sign_and_support() {
        let t = CycleType::from_str("5^3 1^1").unwrap();
        assert_eq!(t.n(), 16);
        assert_eq!(t.sign(), 1);
        assert_eq!(t.support_size(), 15);

        let transp = CycleType::transpositions(10).unwrap();
        assert_eq!(transp.sign(), -1);
    }

    #[test]
    fn blocks_outside() {
        let p = Partition::new(vec![13, 3]).unwrap();
        assert_eq!(p.blocks_outside_first_row(), 3);

        let mut col = vec![2];
        col.extend(vec![1; 14]);
        let p = Partition::new(col).unwrap();
        assert_eq!(p.blocks_outside_first_column(), 1);

        let p = Partition::new(vec![11, 5]).unwrap();
        assert_eq!(p.blocks_outside_first_row(), 5);
        assert_eq!(p.blocks_outside_first_column(), 14);
    }

    #[test]
    fn notation_round_trip() {
        let p: Partition = "11,5".parse().unwrap();
        assert_eq!(p.to_string(), "11,5");
        let t: CycleType = "5^3 1^1".parse().unwrap();
        assert_eq!(t.to_string(), "5^3 1^1");
        assert_eq!(Partition::from_str("").unwrap(), Partition::empty());
        assert!(Partition::from_str("3,4").is_err());
        assert!(CycleType::from_str("0^2").is_err());
        assert!(CycleType::from_str("3^1 3^2").is_err());
    }

    #[test]
    fn restrictions_and_corners() {
        let p = Partition::new(vec![9, 1]).unwrap();
        let r: Vec<String> = p.restrictions().iter().map(|q| q.to_string()).collect();
        assert_eq!(r, vec!["8,1", "9"]);

        let rect = Partition::new(vec![3, 3]).unwrap();
        let r: Vec<String> = rect.restrictions().iter().map(|q| q.to_string()).collect();
        assert_eq!(r, vec!["3,2"]);
    }
}
