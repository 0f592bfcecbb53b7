//! Exact spectra of normal (conjugation-invariant) elements of `ℝ[S_n]`.
//!
//! A normal element acts as a scalar in every irrep, so its Cayley
//! spectrum is the multiset of per-irrep scalars, each with multiplicity
//! `dim²`. Everything here is exact rational arithmetic: ties between
//! irreps are genuine ties, never float artifacts.

pub mod eight;
pub mod gap;
pub mod ruling_tables;

pub use eight::{eight_floor_check, eight_max, eight_scan, eight_scan_in, eight_set, EightScanReport, EightSet, ScanOptions};
pub use gap::{dims_audit, gap_decay_factor, pointwise_std_gap_check, pointwise_std_gap_check_in, std_gap_check, std_gap_check_in};
pub use ruling_tables::{check_ruling_tables, predicted_rulers};

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::characters::mn::MnEvaluator;
use crate::characters::CharCache;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, CycleType, Partition};

/// All irrep labels of one degree, with cached dimensions and a transpose
/// index so that a character column only evaluates one member of each
/// transpose pair. Optionally backed by a persistent character cache.
pub struct IrrepTable {
    n: u32,
    shapes: Vec<Partition>,
    dims: Vec<BigUint>,
    transpose_of: Vec<usize>,
    cache: Option<Arc<CharCache>>,
}

impl IrrepTable {
    pub fn new(n: u32) -> Self {
        let shapes = enumerate_partitions(n);
        let index: HashMap<&Partition, usize> =
            shapes.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let transpose_of = shapes.iter().map(|p| index[&p.transpose()]).collect();
        let dims = shapes.iter().map(|p| p.dimension()).collect();
        IrrepTable { n, shapes, dims, transpose_of, cache: None }
    }

    /// Same table, but character values are first looked up in `cache` and
    /// newly computed values are written back to it.
    pub fn with_cache(n: u32, cache: Arc<CharCache>) -> Self {
        let mut table = Self::new(n);
        table.cache = Some(cache);
        table
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn dims(&self) -> &[BigUint] {
        &self.dims
    }

    /// Full character column at `class`, aligned with [`Self::shapes`].
    pub fn column(&self, class: &CycleType) -> Result<Vec<BigInt>> {
        if class.n() != self.n {
            return Err(Error::SizeMismatch { partition_n: self.n, class_n: class.n() });
        }
        let sign = class.sign();
        let mut ev = MnEvaluator::new(class);
        let mut col: Vec<Option<BigInt>> = vec![None; self.shapes.len()];
        for i in 0..self.shapes.len() {
            if col[i].is_some() {
                continue;
            }
            let chi = match self.cache.as_ref().and_then(|c| c.get(&self.shapes[i], class)) {
                Some(v) => v,
                None => {
                    let v = ev.chi(&self.shapes[i])?;
                    if let Some(c) = &self.cache {
                        c.insert(self.shapes[i].clone(), class.clone(), v.clone());
                    }
                    v
                }
            };
            let t = self.transpose_of[i];
            if t != i {
                let flipped = if sign < 0 { -&chi } else { chi.clone() };
                col[t] = Some(flipped);
            }
            col[i] = Some(chi);
        }
        Ok(col.into_iter().map(|v| v.expect("column filled")).collect())
    }

    /// Indices of the trivial irrep `(n)` and the sign irrep `(1^n)`.
    pub fn trivial_indices(&self) -> (usize, usize) {
        (0, self.shapes.len() - 1)
    }

    /// Index of the transpose of `shapes()[i]`.
    pub fn transpose_index(&self, i: usize) -> usize {
        self.transpose_of[i]
    }
}

/// A non-negative normal element of `ℝ[S_n]`: one exact coefficient per
/// conjugacy class, applied to every element of the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalElement {
    n: u32,
    coeffs: BTreeMap<CycleType, BigRational>,
}

impl NormalElement {
    /// Zero coefficients are dropped; negative coefficients are rejected.
    pub fn new(n: u32, coeffs: BTreeMap<CycleType, BigRational>) -> Result<Self> {
        for (class, alpha) in &coeffs {
            if class.n() != n {
                return Err(Error::SizeMismatch { partition_n: n, class_n: class.n() });
            }
            if alpha.is_negative() {
                return Err(Error::Domain(format!(
                    "negative coefficient {alpha} on class {class}"
                )));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        Ok(NormalElement { n, coeffs })
    }

    /// The indicator of a single conjugacy class (`α_C = 1`).
    pub fn class_indicator(class: CycleType) -> Self {
        let n = class.n();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(class, BigRational::one());
        NormalElement { n, coeffs }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<CycleType, BigRational> {
        &self.coeffs
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// `|Σ| = Σ_C α_C·|C|`, the trivial eigenvalue.
    pub fn total_weight(&self) -> BigRational {
        self.coeffs
            .iter()
            .map(|(class, alpha)| alpha * BigRational::from(BigInt::from(class.class_size())))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Scalar multiple `c·Σ` (`c ≥ 0`).
    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        if c.is_negative() {
            return Err(Error::Domain(format!("negative scale {c}")));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(class, alpha)| (class.clone(), alpha * c))
            .collect();
        NormalElement::new(self.n, coeffs)
    }

    /// The exact scalar by which `Σ` acts in the irrep labelled `shape`:
    /// `Σ_C α_C·|C|·χ̃_shape(C)`.
    pub fn eigenvalue(&self, shape: &Partition) -> Result<BigRational> {
        if shape.n() != self.n {
            return Err(Error::SizeMismatch { partition_n: shape.n(), class_n: self.n });
        }
        let dim = BigInt::from(shape.dimension());
        let mut acc = BigRational::zero();
        for (class, alpha) in &self.coeffs {
            let chi = MnEvaluator::new(class).chi(shape)?;
            let size = BigInt::from(class.class_size());
            acc += alpha * BigRational::new(chi * size, dim.clone());
        }
        Ok(acc)
    }

    /// Eigenvalues in every irrep at once, sharing one character column per
    /// support class. Result is aligned with `table.shapes()`.
    pub fn eigenvalues_all(&self, table: &IrrepTable) -> Result<Vec<BigRational>> {
        if table.n() != self.n {
            return Err(Error::SizeMismatch { partition_n: table.n(), class_n: self.n });
        }
        let mut acc = vec![BigRational::zero(); table.shapes().len()];
        for (class, alpha) in &self.coeffs {
            let col = table.column(class)?;
            let weight = alpha * BigRational::from(BigInt::from(class.class_size()));
            for (i, chi) in col.into_iter().enumerate() {
                if chi.is_zero() {
                    continue;
                }
                let dim = BigInt::from(table.dims()[i].clone());
                acc[i] += &weight * BigRational::new(chi, dim);
            }
        }
        Ok(acc)
    }
}

/// The largest non-trivial eigenvalue of a normal element, with the full
/// argmax set (ties preserved) and the spectral gap.
#[derive(Clone, Debug)]
pub struct EigenvalueReport {
    pub n: u32,
    /// Per-irrep scalars in canonical order.
    pub eigenvalues: Vec<(Partition, BigRational)>,
    /// `λ(S_n, Σ)`: maximum excluding the trivial and sign irreps.
    pub lambda: BigRational,
    /// All irreps attaining `lambda`.
    pub argmax: Vec<Partition>,
    /// `|Σ|`.
    pub total_weight: BigRational,
    /// `|Σ| − λ`.
    pub gap: BigRational,
}

/// Computes `λ(S_n, Σ)` over all irreps except `(n)` and `(1^n)`.
pub fn lambda_nontrivial(element: &NormalElement) -> Result<EigenvalueReport> {
    let table = IrrepTable::new(element.n());
    lambda_nontrivial_in(&table, element)
}

/// [`lambda_nontrivial`] against a caller-provided (possibly cached) table.
pub fn lambda_nontrivial_in(
    table: &IrrepTable,
    element: &NormalElement,
) -> Result<EigenvalueReport> {
    let n = element.n();
    if n < 2 {
        return Err(Error::Domain(format!("λ(S_n, Σ) needs n ≥ 2, got {n}")));
    }
    if n == 2 {
        return Err(Error::Domain("S_2 has no non-trivial irreps".into()));
    }
    let values = element.eigenvalues_all(table)?;
    let (triv, sgn) = table.trivial_indices();
    let mut lambda: Option<BigRational> = None;
    for (i, v) in values.iter().enumerate() {
        if i == triv || i == sgn {
            continue;
        }
        if lambda.as_ref().is_none_or(|best| v > best) {
            lambda = Some(v.clone());
        }
    }
    let lambda = lambda.expect("non-empty irrep set");
    let argmax: Vec<Partition> = values
        .iter()
        .enumerate()
        .filter(|&(i, v)| i != triv && i != sgn && *v == lambda)
        .map(|(i, _)| table.shapes()[i].clone())
        .collect();
    let total_weight = element.total_weight();
    let gap = &total_weight - &lambda;
    let eigenvalues = table.shapes().iter().cloned().zip(values).collect();
    Ok(EigenvalueReport {
        n,
        eigenvalues,
        lambda,
        argmax,
        total_weight,
        gap,
    })
}

/// The irreps attaining the maximal normalized character at `class`,
/// over all irreps except trivial and sign, with the attained value.
pub fn ruling_set(n: u32, class: &CycleType) -> Result<(BigRational, Vec<Partition>)> {
    let table = IrrepTable::new(n);
    ruling_set_in(&table, class)
}

/// [`ruling_set`] against a caller-provided (possibly cached) table.
pub fn ruling_set_in(
    table: &IrrepTable,
    class: &CycleType,
) -> Result<(BigRational, Vec<Partition>)> {
    let n = table.n();
    if class.n() != n {
        return Err(Error::SizeMismatch { partition_n: n, class_n: class.n() });
    }
    if n < 3 {
        return Err(Error::Domain(format!("ruling set needs n ≥ 3, got {n}")));
    }
    let col = table.column(class)?;
    let (triv, sgn) = table.trivial_indices();
    let mut best: Option<BigRational> = None;
    let mut arg: Vec<Partition> = Vec::new();
    for (i, chi) in col.into_iter().enumerate() {
        if i == triv || i == sgn {
            continue;
        }
        let value = BigRational::new(chi, BigInt::from(table.dims()[i].clone()));
        match &best {
            Some(b) if value < *b => {}
            Some(b) if value == *b => arg.push(table.shapes()[i].clone()),
            _ => {
                best = Some(value);
                arg = vec![table.shapes()[i].clone()];
            }
        }
    }
    Ok((best.expect("non-empty irrep set"), arg))
}
