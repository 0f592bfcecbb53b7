//! Built-in prediction tables: which of the eight families rules at a
//! class, read off the cycle counts `c_1..c_4` alone.
//!
//! The predicates hold for large enough degrees; the checker treats them
//! as data to be validated, never as ground truth. Overlapping rows are
//! possible (genuine ties) and all matching rows are reported.

use num::rational::BigRational;
use rayon::prelude::*;

use crate::characters::families::{family_normalized, FamilyId};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_cycle_types, CycleType, Partition};
use crate::spectra::eight::eight_max;

/// One predicate row: if the class parity and counts match, the given
/// family (or its transpose partner, for even classes) is predicted to
/// attain the eight-family maximum.
pub struct PredictRow {
    pub odd: bool,
    /// The member of the family pair that belongs to the eight set.
    pub family: FamilyId,
    pub condition: &'static str,
    pub matches: fn(n: u32, c: [u32; 4]) -> bool,
}

const STD: FamilyId = FamilyId { index: 1, transposed: false };
const STD_T: FamilyId = FamilyId { index: 1, transposed: true };
const TWO: FamilyId = FamilyId { index: 2, transposed: false };
const TWO_T: FamilyId = FamilyId { index: 2, transposed: true };
const HOOK2_T: FamilyId = FamilyId { index: 3, transposed: true };
const THREE: FamilyId = FamilyId { index: 4, transposed: false };
const THREE21: FamilyId = FamilyId { index: 5, transposed: false };
const FOUR: FamilyId = FamilyId { index: 7, transposed: false };

/// Rows for even classes. For an even class a family and its transpose
/// have equal normalized characters, so the eight-set member stands for
/// the pair.
pub static EVEN_ROWS: [PredictRow; 13] = [
    PredictRow { odd: false, family: STD, condition: "c1 >= 2", matches: |_, c| c[0] >= 2 },
    PredictRow {
        odd: false,
        family: TWO,
        condition: "c1 = 1, c2 >= 2",
        matches: |_, c| c[0] == 1 && c[1] >= 2,
    },
    PredictRow {
        odd: false,
        family: TWO,
        condition: "c1 = 0, c2 >= 1",
        matches: |_, c| c[0] == 0 && c[1] >= 1,
    },
    PredictRow {
        odd: false,
        family: HOOK2_T,
        condition: "c1 = 0, c2 = 0, 3·c3 <= n−4",
        matches: |n, c| c[0] == 0 && c[1] == 0 && 3 * c[2] + 4 <= n,
    },
    PredictRow {
        odd: false,
        family: THREE,
        condition: "c1 = 1, c2 = 1, c3 >= 1",
        matches: |_, c| c[0] == 1 && c[1] == 1 && c[2] >= 1,
    },
    PredictRow {
        odd: false,
        family: THREE,
        condition: "c1 = 1, c2 = 0, c3 >= 2",
        matches: |_, c| c[0] == 1 && c[1] == 0 && c[2] >= 2,
    },
    PredictRow {
        odd: false,
        family: THREE,
        condition: "c1 = 1, c2 = 0, c3 = 1, 4·c4 <= n−5",
        matches: |n, c| c[0] == 1 && c[1] == 0 && c[2] == 1 && 4 * c[3] + 5 <= n,
    },
    PredictRow {
        odd: false,
        family: THREE,
        condition: "c1 = 0, c2 = 0, 3·c3 = n",
        matches: |n, c| c[0] == 0 && c[1] == 0 && 3 * c[2] == n,
    },
    PredictRow {
        odd: false,
        family: THREE21,
        condition: "c1 = 1, c2 = 1, c3 = 0, 8·c4 <= n+3",
        matches: |n, c| c[0] == 1 && c[1] == 1 && c[2] == 0 && 8 * c[3] <= n + 3,
    },
    PredictRow {
        odd: false,
        family: THREE21,
        condition: "c1 = 1, c2 = 0, c3 = 0, 8·c4 <= n−5",
        matches: |n, c| c[0] == 1 && c[1] == 0 && c[2] == 0 && 8 * c[3] + 5 <= n,
    },
    PredictRow {
        odd: false,
        family: FOUR,
        condition: "c1 = 1, c2 = 1, c3 = 0, 8·c4 >= n+4",
        matches: |n, c| c[0] == 1 && c[1] == 1 && c[2] == 0 && 8 * c[3] >= n + 4,
    },
    PredictRow {
        odd: false,
        family: FOUR,
        condition: "c1 = 1, c2 = 0, c3 = 1, 4·c4 = n−4",
        matches: |n, c| c[0] == 1 && c[1] == 0 && c[2] == 1 && 4 * c[3] + 4 == n,
    },
    PredictRow {
        odd: false,
        family: FOUR,
        condition: "c1 = 1, c2 = 0, c3 = 0, 8·c4 >= n−4",
        matches: |n, c| c[0] == 1 && c[1] == 0 && c[2] == 0 && 8 * c[3] + 4 >= n,
    },
];

/// Rows for odd classes.
pub static ODD_ROWS: [PredictRow; 8] = [
    PredictRow { odd: true, family: STD, condition: "c1 >= 2", matches: |_, c| c[0] >= 2 },
    PredictRow {
        odd: true,
        family: STD_T,
        condition: "c1 = 0, 2·c2 <= n−3",
        matches: |n, c| c[0] == 0 && 2 * c[1] + 3 <= n,
    },
    PredictRow {
        odd: true,
        family: TWO,
        condition: "c1 = 0, 2·c2 = n",
        matches: |n, c| c[0] == 0 && 2 * c[1] == n,
    },
    PredictRow {
        odd: true,
        family: TWO_T,
        condition: "c1 = 1, c2 = 0",
        matches: |_, c| c[0] == 1 && c[1] == 0,
    },
    PredictRow {
        odd: true,
        family: HOOK2_T,
        condition: "c1 = 2, 2·c2 = n−2",
        matches: |n, c| c[0] == 2 && 2 * c[1] + 2 == n,
    },
    PredictRow {
        odd: true,
        family: HOOK2_T,
        condition: "c1 = 1, c2 >= 2",
        matches: |_, c| c[0] == 1 && c[1] >= 2,
    },
    PredictRow {
        odd: true,
        family: HOOK2_T,
        condition: "c1 = 1, c2 = 1, 3·c3 <= n−4",
        matches: |n, c| c[0] == 1 && c[1] == 1 && 3 * c[2] + 4 <= n,
    },
    PredictRow {
        odd: true,
        family: THREE,
        condition: "c1 = 1, c2 = 1, 3·c3 = n−3",
        matches: |n, c| c[0] == 1 && c[1] == 1 && 3 * c[2] + 3 == n,
    },
];

/// A matching prediction for one class.
#[derive(Clone, Debug)]
pub struct Prediction {
    pub irrep: Partition,
    pub condition: &'static str,
}

/// All table rows matching the class; empty means "no rule listed".
pub fn predicted_rulers(n: u32, class: &CycleType) -> Result<Vec<Prediction>> {
    if class.n() != n {
        return Err(Error::SizeMismatch { partition_n: n, class_n: class.n() });
    }
    let rows: &[PredictRow] = if class.is_odd() { &ODD_ROWS } else { &EVEN_ROWS };
    let c = class.count_prefix::<4>();
    let mut out = Vec::new();
    for row in rows {
        if (row.matches)(n, c) {
            out.push(Prediction {
                irrep: row.family.instantiate(n)?,
                condition: row.condition,
            });
        }
    }
    Ok(out)
}

/// Outcome of checking one class against the prediction tables.
#[derive(Clone, Debug)]
pub struct PredictionMismatch {
    pub class: CycleType,
    /// Empty when no row matched at all.
    pub predictions: Vec<Prediction>,
    pub eight: BigRational,
    /// Normalized character of each predicted irrep that failed to attain
    /// the maximum.
    pub attained: Vec<(Partition, BigRational)>,
}

#[derive(Clone, Debug)]
pub struct RulingTableReport {
    pub n: u32,
    pub c1_max: u32,
    pub classes_checked: usize,
    pub mismatches: Vec<PredictionMismatch>,
}

/// Checks, for every class with `c_1 ≤ c1_max`, that every predicted irrep
/// attains the eight-family maximum. Classes with no matching row are
/// reported as mismatches with an empty prediction list.
pub fn check_ruling_tables(n: u32, c1_max: u32) -> Result<RulingTableReport> {
    if n < 8 {
        return Err(Error::Domain(format!("table check needs n ≥ 8, got {n}")));
    }
    let classes: Vec<CycleType> = enumerate_cycle_types(n)
        .into_iter()
        .filter(|c| c.count(1) <= c1_max)
        .collect();
    let mismatches: Vec<PredictionMismatch> = classes
        .par_iter()
        .map(|class| {
            let predictions = predicted_rulers(n, class)?;
            let (emax, _) = eight_max(n, class)?;
            if predictions.is_empty() {
                return Ok(Some(PredictionMismatch {
                    class: class.clone(),
                    predictions,
                    eight: emax,
                    attained: Vec::new(),
                }));
            }
            let mut failed = Vec::new();
            for p in &predictions {
                let value = normalized_of(&p.irrep, class)?;
                if value != emax {
                    failed.push((p.irrep.clone(), value));
                }
            }
            Ok(if failed.is_empty() {
                None
            } else {
                Some(PredictionMismatch {
                    class: class.clone(),
                    predictions,
                    eight: emax,
                    attained: failed,
                })
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(RulingTableReport { n, c1_max, classes_checked: classes.len(), mismatches })
}

fn normalized_of(shape: &Partition, class: &CycleType) -> Result<BigRational> {
    // predicted irreps are always family members; evaluate via the
    // polynomial route to keep this check independent of the recursion
    for index in 0..crate::characters::FAMILIES.len() {
        for transposed in [false, true] {
            let id = FamilyId { index, transposed };
            if id.instantiate(class.n()).ok().as_ref() == Some(shape) {
                return family_normalized(id, class);
            }
        }
    }
    crate::characters::mn::normalized_character(shape, class)
}
