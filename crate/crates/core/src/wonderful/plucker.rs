use std::collections::BTreeMap;

use crate::exactnum::{Matrix, Scalar};

/// Column subsets of size `k` out of `m`, as bitmasks in increasing order.
pub fn subset_masks(m: usize, k: usize) -> Vec<u32> {
    assert!(m <= 31);
    (0u32..1 << m).filter(|s| s.count_ones() as usize == k).collect()
}

/// All maximal minors of a `k × m` matrix (`k ≤ m`), indexed like
/// [`subset_masks`]`(m, k)`: entry `S` is the determinant of the columns in `S`.
///
/// Computed as the coefficients of `r_1 ∧ … ∧ r_k`, one row at a time, so no
/// division is needed and every scalar ring works.
pub fn plucker_coordinates<S: Scalar>(rows: &Matrix<S>) -> Vec<S> {
    let (k, m) = (rows.rows(), rows.cols());
    assert!(k <= m && m <= 31);
    let mut level: BTreeMap<u32, S> = BTreeMap::new();
    level.insert(0, S::one());
    for r in 0..k {
        let mut next: BTreeMap<u32, S> = BTreeMap::new();
        for (mask, w) in &level {
            for j in 0..m {
                let entry = &rows[(r, j)];
                if entry.is_zero() || mask & (1 << j) != 0 {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let term = w.clone() * entry;
                let slot = next.entry(mask | (1 << j)).or_insert_with(S::zero);
                *slot = if above % 2 == 0 { slot.clone() + term } else { slot.clone() - term };
            }
        }
        next.retain(|_, v| !v.is_zero());
        level = next;
    }
    subset_masks(m, k).into_iter().map(|s| level.remove(&s).unwrap_or_else(S::zero)).collect()
}

/// Columns of a mask in increasing order.
pub fn mask_columns(mask: u32) -> Vec<usize> {
    (0..32).filter(|j| mask & (1 << j) != 0).collect()
}
