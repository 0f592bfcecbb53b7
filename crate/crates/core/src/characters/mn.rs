//! Murnaghan–Nakayama evaluation of irreducible characters of `S_n`.
//!
//! Characters are computed by recursive border-strip removal. Cycles are
//! consumed in decreasing length order, so the memo key `(shape, depth)`
//! identifies the remaining subproblem uniquely and the result is
//! independent of evaluation order. Once only fixed points remain, the
//! value is the dimension of the remaining shape (hook length formula),
//! which short-circuits the deepest part of the recursion.

use std::collections::HashMap;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{CycleType, Partition};

/// Character evaluator for one fixed conjugacy class.
///
/// Reuse across many shapes of the same `n` shares the memo table; scans
/// over classes give each worker its own evaluator, so no synchronization
/// is needed and results are bit-identical regardless of scheduling.
pub struct MnEvaluator {
    n: u32,
    cycles: Vec<u32>,
    memo: HashMap<(Partition, usize), BigInt>,
}

impl MnEvaluator {
    pub fn new(class: &CycleType) -> Self {
        MnEvaluator {
            n: class.n(),
            cycles: class.cycles_desc(),
            memo: HashMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Exact `χ_λ(μ)` for the evaluator's class `μ`.
    pub fn chi(&mut self, shape: &Partition) -> Result<BigInt> {
        if shape.n() != self.n {
            return Err(Error::SizeMismatch {
                partition_n: shape.n(),
                class_n: self.n,
            });
        }
        Ok(self.eval(shape.clone(), 0))
    }

    fn eval(&mut self, shape: Partition, depth: usize) -> BigInt {
        if depth == self.cycles.len() {
            debug_assert_eq!(shape.n(), 0);
            return BigInt::one();
        }
        // Cycles are sorted decreasing: from the first 1-cycle on, only
        // fixed points remain and χ equals the dimension of the shape.
        if self.cycles[depth] == 1 {
            return BigInt::from(shape.dimension());
        }
        if let Some(v) = self.memo.get(&(shape.clone(), depth)) {
            return v.clone();
        }
        let strip = self.cycles[depth];
        let mut total = BigInt::zero();
        for (smaller, height) in remove_border_strips(&shape, strip) {
            let term = self.eval(smaller, depth + 1);
            if height % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        self.memo.insert((shape, depth), total.clone());
        total
    }
}

/// All ways to remove a border strip of `strip` cells from `shape`,
/// together with the strip height (rows spanned minus one).
///
/// Uses the beta-set encoding: with `β_i = λ_i + r − 1 − i` (strictly
/// decreasing first-column hook lengths), removable strips correspond to
/// indices where `β_i − strip ≥ 0` avoids the existing beta values, and
/// the height is the number of beta values jumped over.
fn remove_border_strips(shape: &Partition, strip: u32) -> Vec<(Partition, u32)> {
    let parts = shape.parts();
    let r = parts.len();
    let beta: Vec<i64> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (r - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for i in 0..r {
        let b = beta[i] - strip as i64;
        if b < 0 {
            continue;
        }
        // beta is strictly decreasing; landing on an occupied value means
        // the strip is not removable at this row.
        let crossed = beta[i + 1..].iter().take_while(|&&x| x > b).count();
        if beta.get(i + 1 + crossed).copied() == Some(b) {
            continue;
        }
        let mut new_beta = beta.clone();
        new_beta.remove(i);
        new_beta.insert(i + crossed, b);
        let mut parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (r - 1 - j) as i64) as u32)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push((Partition::from_valid(parts), crossed as u32));
    }
    out
}

/// Exact `χ_λ(μ)` with a fresh memo table.
pub fn mn_character(shape: &Partition, class: &CycleType) -> Result<BigInt> {
    MnEvaluator::new(class).chi(shape)
}

/// `χ̃_λ(μ) = χ_λ(μ) / χ_λ(1)` as an exact rational in lowest terms.
pub fn normalized_character(shape: &Partition, class: &CycleType) -> Result<BigRational> {
    let chi = mn_character(shape, class)?;
    Ok(BigRational::new(chi, BigInt::from(shape.dimension())))
}

/// `χ̃` from a pre-computed character value and dimension.
pub fn normalize(chi: BigInt, dim: &BigUint) -> BigRational {
    BigRational::new(chi, BigInt::from(dim.clone()))
}
