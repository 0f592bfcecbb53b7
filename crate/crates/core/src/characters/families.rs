//! Closed-form characters for families of irreps with at most four cells
//! outside the first row (or, via transposition, the first column).
//!
//! For a family whose shape below the first row is a fixed partition of
//! `k`, the character at `σ` is a polynomial in the cycle counts
//! `c_1(σ),…,c_k(σ)` valid for all `n ≥ 2k`; the transpose family picks up
//! a factor `sgn(σ)`. The polynomials are stored here as explicit monomial
//! lists and are cross-checked exhaustively against Murnaghan–Nakayama in
//! the test suite.

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::partitions::{CycleType, Partition};

/// One monomial `coeff · c1^a1 c2^a2 c3^a3 c4^a4` with `coeff = num/den`.
#[derive(Clone, Copy, Debug)]
pub struct Monomial {
    pub num: i64,
    pub den: i64,
    pub exps: [u8; 4],
}

const fn m(num: i64, den: i64, exps: [u8; 4]) -> Monomial {
    Monomial { num, den, exps }
}

/// A family of irreps with constant shape outside the first row.
#[derive(Debug)]
pub struct Family {
    /// Rows below the first row of the instantiated diagram.
    pub shape: &'static [u32],
    /// Character polynomial in `c_1..c_4`.
    pub monomials: &'static [Monomial],
}

impl Family {
    /// Number of cells outside the first row.
    pub fn depth(&self) -> u32 {
        self.shape.iter().sum()
    }
}

/// All families with at most four cells outside the first row, ordered by
/// depth and then by shape (decreasing lexicographic).
pub static FAMILIES: [Family; 12] = [
    // (n)
    Family { shape: &[], monomials: &[m(1, 1, [0, 0, 0, 0])] },
    // (n−1,1): c1 − 1
    Family {
        shape: &[1],
        monomials: &[m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 0, 0, 0])],
    },
    // (n−2,2): c1(c1−3)/2 + c2
    Family {
        shape: &[2],
        monomials: &[
            m(1, 2, [2, 0, 0, 0]),
            m(-3, 2, [1, 0, 0, 0]),
            m(1, 1, [0, 1, 0, 0]),
        ],
    },
    // (n−2,1,1): (c1−1)(c1−2)/2 − c2
    Family {
        shape: &[1, 1],
        monomials: &[
            m(1, 2, [2, 0, 0, 0]),
            m(-3, 2, [1, 0, 0, 0]),
            m(1, 1, [0, 0, 0, 0]),
            m(-1, 1, [0, 1, 0, 0]),
        ],
    },
    // (n−3,3): c1(c1−1)(c1−5)/6 + (c1−1)c2 + c3
    Family {
        shape: &[3],
        monomials: &[
            m(1, 6, [3, 0, 0, 0]),
            m(-1, 1, [2, 0, 0, 0]),
            m(5, 6, [1, 0, 0, 0]),
            m(1, 1, [1, 1, 0, 0]),
            m(-1, 1, [0, 1, 0, 0]),
            m(1, 1, [0, 0, 1, 0]),
        ],
    },
    // (n−3,2,1): c1(c1−2)(c1−4)/3 − c3
    Family {
        shape: &[2, 1],
        monomials: &[
            m(1, 3, [3, 0, 0, 0]),
            m(-2, 1, [2, 0, 0, 0]),
            m(8, 3, [1, 0, 0, 0]),
            m(-1, 1, [0, 0, 1, 0]),
        ],
    },
    // (n−3,1,1,1): (c1−1)(c1−2)(c1−3)/6 − (c1−1)c2 + c3
    Family {
        shape: &[1, 1, 1],
        monomials: &[
            m(1, 6, [3, 0, 0, 0]),
            m(-1, 1, [2, 0, 0, 0]),
            m(11, 6, [1, 0, 0, 0]),
            m(-1, 1, [0, 0, 0, 0]),
            m(-1, 1, [1, 1, 0, 0]),
            m(1, 1, [0, 1, 0, 0]),
            m(1, 1, [0, 0, 1, 0]),
        ],
    },
    // (n−4,4): c1(c1−1)(c1−2)(c1−7)/24 + (c1²−3c1−1)c2/2 + c2²/2 + (c1−1)c3 + c4
    Family {
        shape: &[4],
        monomials: &[
            m(1, 24, [4, 0, 0, 0]),
            m(-5, 12, [3, 0, 0, 0]),
            m(23, 24, [2, 0, 0, 0]),
            m(-7, 12, [1, 0, 0, 0]),
            m(1, 2, [2, 1, 0, 0]),
            m(-3, 2, [1, 1, 0, 0]),
            m(-1, 2, [0, 1, 0, 0]),
            m(1, 2, [0, 2, 0, 0]),
            m(1, 1, [1, 0, 1, 0]),
            m(-1, 1, [0, 0, 1, 0]),
            m(1, 1, [0, 0, 0, 1]),
        ],
    },
    // (n−4,3,1): c1(c1−1)(c1−3)(c1−6)/8 + (c1²−3c1+3)c2/2 − c2²/2 − c4
    Family {
        shape: &[3, 1],
        monomials: &[
            m(1, 8, [4, 0, 0, 0]),
            m(-5, 4, [3, 0, 0, 0]),
            m(27, 8, [2, 0, 0, 0]),
            m(-9, 4, [1, 0, 0, 0]),
            m(1, 2, [2, 1, 0, 0]),
            m(-3, 2, [1, 1, 0, 0]),
            m(3, 2, [0, 1, 0, 0]),
            m(-1, 2, [0, 2, 0, 0]),
            m(-1, 1, [0, 0, 0, 1]),
        ],
    },
    // (n−4,2,2): c1(c1−1)(c1−4)(c1−5)/12 + (c2−2)c2 − (c1−1)c3
    Family {
        shape: &[2, 2],
        monomials: &[
            m(1, 12, [4, 0, 0, 0]),
            m(-5, 6, [3, 0, 0, 0]),
            m(29, 12, [2, 0, 0, 0]),
            m(-5, 3, [1, 0, 0, 0]),
            m(1, 1, [0, 2, 0, 0]),
            m(-2, 1, [0, 1, 0, 0]),
            m(-1, 1, [1, 0, 1, 0]),
            m(1, 1, [0, 0, 1, 0]),
        ],
    },
    // (n−4,2,1,1): c1(c1−2)(c1−3)(c1−5)/8 − (c1²−3c1−1)c2/2 − c2²/2 + c4
    Family {
        shape: &[2, 1, 1],
        monomials: &[
            m(1, 8, [4, 0, 0, 0]),
            m(-5, 4, [3, 0, 0, 0]),
            m(31, 8, [2, 0, 0, 0]),
            m(-15, 4, [1, 0, 0, 0]),
            m(-1, 2, [2, 1, 0, 0]),
            m(3, 2, [1, 1, 0, 0]),
            m(1, 2, [0, 1, 0, 0]),
            m(-1, 2, [0, 2, 0, 0]),
            m(1, 1, [0, 0, 0, 1]),
        ],
    },
    // (n−4,1,1,1,1): (c1−1)(c1−2)(c1−3)(c1−4)/24 − (c1²−3c1+3)c2/2 + c2²/2
    //                + (c1−1)c3 − c4
    Family {
        shape: &[1, 1, 1, 1],
        monomials: &[
            m(1, 24, [4, 0, 0, 0]),
            m(-5, 12, [3, 0, 0, 0]),
            m(35, 24, [2, 0, 0, 0]),
            m(-25, 12, [1, 0, 0, 0]),
            m(1, 1, [0, 0, 0, 0]),
            m(-1, 2, [2, 1, 0, 0]),
            m(3, 2, [1, 1, 0, 0]),
            m(-3, 2, [0, 1, 0, 0]),
            m(1, 2, [0, 2, 0, 0]),
            m(1, 1, [1, 0, 1, 0]),
            m(-1, 1, [0, 0, 1, 0]),
            m(-1, 1, [0, 0, 0, 1]),
        ],
    },
];

/// Identifies a family row plus an optional transposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyId {
    /// Index into [`FAMILIES`].
    pub index: usize,
    pub transposed: bool,
}

impl FamilyId {
    pub fn new(index: usize, transposed: bool) -> Self {
        assert!(index < FAMILIES.len());
        FamilyId { index, transposed }
    }

    pub fn family(&self) -> &'static Family {
        &FAMILIES[self.index]
    }

    /// The concrete irrep label at a given `n`. Requires `n ≥ 2·depth` so
    /// that the polynomial identity is guaranteed.
    pub fn instantiate(&self, n: u32) -> Result<Partition> {
        let fam = self.family();
        let k = fam.depth();
        if n < 2 * k {
            return Err(Error::Domain(format!(
                "family of depth {k} requires n ≥ {}, got {n}",
                2 * k
            )));
        }
        let mut parts = vec![n - k];
        parts.extend_from_slice(fam.shape);
        let p = Partition::new(parts)?;
        Ok(if self.transposed { p.transpose() } else { p })
    }
}

/// Evaluates the polynomial at integer counts, scaled by 24 to stay in
/// integer arithmetic; every stored denominator divides 24.
fn eval_poly_24(monomials: &[Monomial], counts: [i64; 4]) -> i128 {
    let mut total: i128 = 0;
    for m in monomials {
        let mut term: i128 = (m.num as i128) * (24 / m.den) as i128;
        for (c, &e) in counts.iter().zip(&m.exps) {
            for _ in 0..e {
                term *= *c as i128;
            }
        }
        total += term;
    }
    total
}

/// Exact character value of a family member from cycle counts alone.
///
/// `parity` is the sign of the class (`+1`/`−1`); it matters only for
/// transposed families. Counts that are negative are rejected: the
/// polynomial is defined there but the result would not be a character.
pub fn family_character(
    id: FamilyId,
    n: u32,
    counts: [i64; 4],
    parity: i8,
) -> Result<BigInt> {
    let fam = id.family();
    let k = fam.depth();
    if n < 2 * k {
        return Err(Error::Domain(format!(
            "character polynomial of depth {k} not valid below n = {}, got {n}",
            2 * k
        )));
    }
    if counts.iter().any(|&c| c < 0) {
        return Err(Error::Domain(format!("negative cycle counts {counts:?}")));
    }
    let scaled = eval_poly_24(fam.monomials, counts);
    assert_eq!(scaled % 24, 0, "non-integral character value");
    let mut value = BigInt::from(scaled / 24);
    if id.transposed && parity < 0 {
        value = -value;
    }
    Ok(value)
}

/// Character of the family member on a whole conjugacy class.
pub fn family_character_on_class(id: FamilyId, class: &CycleType) -> Result<BigInt> {
    let c = class.count_prefix::<4>();
    family_character(
        id,
        class.n(),
        [c[0] as i64, c[1] as i64, c[2] as i64, c[3] as i64],
        class.sign(),
    )
}

/// Dimension of the family member at `n`, i.e. the polynomial at
/// `(n, 0, 0, 0)`. Transposition preserves dimension.
pub fn family_dimension(id: FamilyId, n: u32) -> Result<BigUint> {
    let value = family_character(
        FamilyId::new(id.index, false),
        n,
        [n as i64, 0, 0, 0],
        1,
    )?;
    value
        .try_into()
        .map_err(|_| Error::Domain(format!("negative dimension at n = {n}")))
}

/// Normalized character `χ̃` of a family member on a class.
pub fn family_normalized(id: FamilyId, class: &CycleType) -> Result<BigRational> {
    let chi = family_character_on_class(id, class)?;
    let dim = family_dimension(id, class.n())?;
    Ok(BigRational::new(chi, BigInt::from(dim)))
}
