//! Row reduction over GF(q).

use std::sync::Arc;

use crate::field::Field;

/// Reduce `rows` in place to reduced row echelon form, drop zero rows, and
/// return the pivot columns in increasing order.
pub fn rref(field: &Field, rows: &mut Vec<Vec<u8>>) -> Vec<usize> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == width));
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(src) = (r..height).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, src);
        let inv = field.inv(rows[r][col]);
        for x in rows[r].iter_mut().skip(col) {
            *x = field.mul(inv, *x);
        }
        let lead = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let c = row[col];
            if i == r || c == 0 {
                continue;
            }
            for (x, &p) in row.iter_mut().zip(&lead).skip(col) {
                *x = field.sub(*x, field.mul(c, p));
            }
        }
        pivots.push(col);
        r += 1;
        if r == height {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(field: &Field, rows: &[Vec<u8>]) -> usize {
    let mut work = rows.to_vec();
    rref(field, &mut work).len()
}

/// Incremental row-space builder. Rows are kept reduced, ordered by pivot
/// column, so the stored basis is the RREF of everything inserted.
pub struct Eliminator {
    field: Arc<Field>,
    width: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Eliminator {
    pub fn new(field: Arc<Field>, width: usize) -> Eliminator {
        Eliminator {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, row: &[u8]) -> bool {
        assert_eq!(row.len(), self.width);
        let f = &self.field;
        let mut work = row.to_vec();
        for (basis, &p) in self.rows.iter().zip(&self.pivots) {
            let c = work[p];
            if c == 0 {
                continue;
            }
            for j in p..self.width {
                let t = f.mul(c, basis[j]);
                work[j] = f.sub(work[j], t);
            }
        }
        let Some(pivot) = work.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(work[pivot]);
        for c in work.iter_mut().skip(pivot) {
            *c = f.mul(inv, *c);
        }
        for (basis, &p) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert_ne!(p, pivot);
            let c = basis[pivot];
            if c == 0 {
                continue;
            }
            for j in pivot..self.width {
                let t = f.mul(c, work[j]);
                basis[j] = f.sub(basis[j], t);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, work);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// True when the row already lies in the accumulated span.
    pub fn contains(&self, row: &[u8]) -> bool {
        assert_eq!(row.len(), self.width);
        let f = &self.field;
        let mut work = row.to_vec();
        for (basis, &p) in self.rows.iter().zip(&self.pivots) {
            let c = work[p];
            if c == 0 {
                continue;
            }
            for j in p..self.width {
                let t = f.mul(c, basis[j]);
                work[j] = f.sub(work[j], t);
            }
        }
        work.iter().all(|&c| c == 0)
    }
}
