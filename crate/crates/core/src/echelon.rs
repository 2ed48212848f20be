//! Incremental row echelon forms over GF(p) with sparse rows.
//!
//! Columns are ordered so that a row's leading entry is its smallest column
//! index. Stored rows are monic and reduced against every pivot that existed
//! when they were inserted.

use std::collections::BTreeMap;

use crate::field::PrimeField;

/// Sparse vector: `(column, nonzero value)` pairs sorted by column.
pub type SparseRow = Vec<(u32, u32)>;

const NO_PIVOT: u32 = u32::MAX;
/// Rows over at most this many columns are reduced with a dense scratch buffer.
const DENSE_LIMIT: usize = 4096;

#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    pivot_row: Vec<u32>,
    rows: Vec<SparseRow>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Self { field, ncols, pivot_row: vec![NO_PIVOT; ncols], rows: Vec::new() }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    #[inline]
    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0 as usize)
    }

    /// Reduces `row` against all pivots; the result has no entries in pivot
    /// columns.
    pub fn reduce(&self, row: &[(u32, u32)]) -> SparseRow {
        if row.is_empty() || self.rows.is_empty() {
            return row.iter().copied().filter(|(_, v)| *v != 0).collect();
        }
        if self.ncols <= DENSE_LIMIT {
            self.reduce_dense(row)
        } else {
            self.reduce_sparse(row)
        }
    }

    fn reduce_dense(&self, row: &[(u32, u32)]) -> SparseRow {
        let f = &self.field;
        let p = u64::from(f.modulus());
        let mut scratch = vec![0u64; self.ncols];
        let start = row[0].0 as usize;
        for &(c, v) in row {
            scratch[c as usize] = u64::from(v);
        }
        let mut out = Vec::new();
        for c in start..self.ncols {
            let v = scratch[c] % p;
            if v == 0 {
                continue;
            }
            let pr = self.pivot_row[c];
            if pr == NO_PIVOT {
                out.push((c as u32, v as u32));
                continue;
            }
            let factor = p - v;
            for &(cc, pv) in &self.rows[pr as usize][1..] {
                let slot = &mut scratch[cc as usize];
                *slot = (*slot + factor * u64::from(pv)) % p;
            }
        }
        out
    }

    fn reduce_sparse(&self, row: &[(u32, u32)]) -> SparseRow {
        let f = &self.field;
        let mut acc: BTreeMap<u32, u32> = row.iter().copied().filter(|(_, v)| *v != 0).collect();
        let mut out = Vec::new();
        while let Some((c, v)) = acc.pop_first() {
            let pr = self.pivot_row[c as usize];
            if pr == NO_PIVOT {
                out.push((c, v));
                continue;
            }
            let factor = f.neg(v);
            for &(cc, pv) in &self.rows[pr as usize][1..] {
                let e = acc.entry(cc).or_insert(0);
                *e = f.add(*e, f.mul(factor, pv));
                if *e == 0 {
                    acc.remove(&cc);
                }
            }
        }
        out
    }

    /// Inserts a row; returns `true` when the rank grew.
    pub fn insert(&mut self, row: &[(u32, u32)]) -> bool {
        let reduced = self.reduce(row);
        self.push_reduced(reduced)
    }

    /// Inserts a row that is already reduced against the current pivots.
    pub fn push_reduced(&mut self, mut reduced: SparseRow) -> bool {
        let Some(&(lead, lead_val)) = reduced.first() else {
            return false;
        };
        if lead_val != 1 {
            let inv = self.field.inv(lead_val);
            for e in reduced.iter_mut() {
                e.1 = self.field.mul(e.1, inv);
            }
        }
        self.pivot_row[lead as usize] = self.rows.len() as u32;
        self.rows.push(reduced);
        true
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: &[(u32, u32)]) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of a list of sparse vectors over `ncols` columns.
pub fn rank_of(field: PrimeField, ncols: usize, rows: &[SparseRow]) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// Basis of the kernel of the linear map sending the `i`-th standard basis
/// vector to `images[i]` (vectors over `ncols` columns). Kernel vectors are
/// returned as sparse rows indexed by source position.
pub fn kernel(field: PrimeField, ncols: usize, images: &[SparseRow]) -> Vec<SparseRow> {
    let total = ncols + images.len();
    let mut e = Echelon::new(field, total);
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut row = img.clone();
        row.push(((ncols + i) as u32, 1));
        let reduced = e.reduce(&row);
        if let Some(&(lead, _)) = reduced.first() {
            if lead as usize >= ncols {
                out.push(
                    reduced.iter().map(|&(c, v)| (c - ncols as u32, v)).collect::<SparseRow>(),
                );
            }
        }
        e.push_reduced(reduced);
    }
    out
}

/// Converts a sparse row to a dense vector.
pub fn to_dense(row: &[(u32, u32)], len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for &(c, v) in row {
        out[c as usize] = v;
    }
    out
}
