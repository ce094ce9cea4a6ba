//! Counting and enumerating r-dimensional subspaces of GF(q)^k.
//!
//! Subspaces are represented canonically by the unique r x k matrix in
//! reduced row echelon form whose row space they are.

use std::sync::Arc;

use crate::field::Field;

/// Number of r-dimensional subspaces of GF(q)^k, exactly, or None once the
/// value leaves u128 range. Every intermediate division is exact because
/// each partial product is itself a Gaussian binomial.
pub fn gaussian_binomial(k: usize, r: usize, q: u64) -> Option<u128> {
    if r > k {
        return Some(0);
    }
    let q = q as u128;
    let mut g: u128 = 1;
    for i in 1..=r {
        let num = q.checked_pow((k - r + i) as u32)?.checked_sub(1)?;
        let den = q.pow(i as u32) - 1;
        g = g.checked_mul(num)?;
        debug_assert_eq!(g % den, 0);
        g /= den;
    }
    Some(g)
}

/// Visit every r-subset of {0, ..., k-1} in lexicographic order.
pub fn for_each_combination(k: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > k {
        return;
    }
    let mut c: Vec<usize> = (0..r).collect();
    loop {
        f(&c);
        // Rightmost index that can still advance.
        let Some(i) = (0..r).rev().find(|&i| c[i] < k - r + i) else {
            return;
        };
        c[i] += 1;
        for j in i + 1..r {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Visit the RREF representative of every r-dimensional subspace of
/// GF(q)^k. Plain odometer over the free cells; meant for oracles and
/// small cross-checks, not for the large sweeps.
pub fn for_each_rref(field: &Arc<Field>, k: usize, r: usize, mut f: impl FnMut(&[Vec<u8>])) {
    let q = field.q();
    for_each_combination(k, r, |pivots| {
        let mut mat = vec![vec![0u8; k]; r];
        for (i, &p) in pivots.iter().enumerate() {
            mat[i][p] = 1;
        }
        // Cells free to vary: right of the row's pivot, not a pivot column.
        let mut free = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..k {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        loop {
            f(&mat);
            let mut advanced = false;
            for &(i, j) in &free {
                if mat[i][j] + 1 < q {
                    mat[i][j] += 1;
                    advanced = true;
                    break;
                }
                mat[i][j] = 0;
            }
            if !advanced {
                return;
            }
        }
    });
}
