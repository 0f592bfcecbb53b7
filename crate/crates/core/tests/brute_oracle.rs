//! Independent brute-force oracles for the exact combinatorics: group
//! enumeration for class sizes, the pentagonal recurrence for partition
//! counts, tableau backtracking for dimensions. These never touch the
//! code paths they validate.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::bigint::BigUint;
use num::rational::BigRational;
use num::bigint::BigInt;

use symgap_core::constructions::joint_cycle_distribution;
use symgap_core::partitions::{
    enumerate_cycle_types, enumerate_partitions, factorial, CycleType, Partition,
};

/// Cycle type of a permutation given as an image table.
fn cycle_type_of(images: &[usize]) -> CycleType {
    let n = images.len();
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
            x = images[x];
            len += 1;
        }
        lengths.push(len);
    }
    CycleType::from_cycles(&lengths).unwrap()
}

#[test]
fn class_sizes_match_group_enumeration() {
    for n in 1..=6u32 {
        let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
        for images in (0..n as usize).permutations(n as usize) {
            *counts.entry(cycle_type_of(&images)).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), enumerate_cycle_types(n).len(), "n={n}");
        for class in enumerate_cycle_types(n) {
            assert_eq!(
                BigUint::from(counts[&class]),
                class.class_size(),
                "n={n} class={class}"
            );
        }
    }
}

/// p(n) by the pentagonal-number recurrence.
fn partition_count_pentagonal(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > m && g2 > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 <= m {
                total += sign * p[m - g1];
            }
            if g2 <= m {
                total += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = total;
    }
    p[n] as u64
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    for n in 0..=40u32 {
        assert_eq!(
            enumerate_partitions(n).len() as u64,
            partition_count_pentagonal(n as usize),
            "n={n}"
        );
    }
    // the two degrees the dimension audits rely on
    assert_eq!(enumerate_partitions(13).len(), 101);
    assert_eq!(enumerate_partitions(14).len(), 135);
}

/// Number of standard Young tableaux by backtracking: fill 1..n, each
/// number extending some row whose length stays below the row above.
fn count_tableaux(shape: &[u32], filled: &mut Vec<u32>) -> u64 {
    let total: u32 = shape.iter().sum();
    let placed: u32 = filled.iter().sum();
    if placed == total {
        return 1;
    }
    let mut count = 0;
    for row in 0..shape.len() {
        let above = if row == 0 { u32::MAX } else { filled[row - 1] };
        if filled[row] < shape[row] && filled[row] < above {
            filled[row] += 1;
            count += count_tableaux(shape, filled);
            filled[row] -= 1;
        }
    }
    count
}

#[test]
fn dimensions_match_tableau_backtracking() {
    for n in 1..=8u32 {
        for p in enumerate_partitions(n) {
            let mut filled = vec![0u32; p.num_parts()];
            let tableaux = count_tableaux(p.parts(), &mut filled);
            assert_eq!(BigUint::from(tableaux), p.dimension(), "shape {p}");
        }
    }
}

#[test]
fn joint_distribution_matches_group_enumeration() {
    // (c1, c2) frequencies over all of S_4, exact
    let d = joint_cycle_distribution(2, 4).unwrap();
    let mut freq: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for images in (0..4usize).permutations(4) {
        let t = cycle_type_of(&images);
        *freq.entry(vec![t.count(1), t.count(2)]).or_insert(0) += 1;
    }
    assert_eq!(freq.len(), d.rows.len());
    let order = BigRational::from(BigInt::from(factorial(4)));
    for (prefix, probability) in &d.rows {
        let expect = BigRational::from(BigInt::from(freq[prefix])) / &order;
        assert_eq!(probability, &expect, "prefix {prefix:?}");
    }
}

#[test]
fn hook_products_divide_factorial_exactly() {
    for n in 1..=20u32 {
        for p in enumerate_partitions(n) {
            let hooks = p.hook_product();
            assert_eq!(
                &p.dimension() * &hooks,
                factorial(n),
                "shape {}",
                Partition::new(p.parts().to_vec()).unwrap()
            );
        }
    }
}
