//! Seeded generic invertible row and column operations.
//!
//! Only rows (columns) with identical degree rows (columns) are mixed, so
//! every minor keeps its degree and t-homogeneity is preserved.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::PolyMatrix;

const MAX_ATTEMPTS: usize = 16;

/// Child seed `index` of `master` (splitmix64 finalizer).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Rows,
    Columns,
}

/// A sampled invertible transform. For `Axis::Rows` the new matrix is
/// `transform * M`; for `Axis::Columns` it is `M * transform`. Indices refer
/// to the stored orientation of the matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RowOpRecord<F: Field> {
    pub seed: u64,
    pub axis: Axis,
    pub transform: Vec<Vec<F::Elem>>,
    pub block_structure: Vec<Vec<usize>>,
}

fn classes(keys: Vec<Vec<Option<u32>>>) -> Vec<Vec<usize>> {
    let mut by_key: BTreeMap<Vec<Option<u32>>, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        by_key.entry(k).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = by_key.into_values().collect();
    out.sort();
    out
}

/// Partition of the stored rows by degree row.
pub fn row_degree_classes<F: Field>(m: &PolyMatrix<F>) -> Vec<Vec<usize>> {
    classes(m.degree_layout())
}

/// Partition of the stored columns by degree column.
pub fn column_degree_classes<F: Field>(m: &PolyMatrix<F>) -> Vec<Vec<usize>> {
    let layout = m.degree_layout();
    classes(
        (0..m.cols())
            .map(|j| layout.iter().map(|row| row[j]).collect())
            .collect(),
    )
}

fn sample_block_transform<F: Field>(
    field: &F,
    size: usize,
    blocks: &[Vec<usize>],
    seed: u64,
) -> Result<Vec<Vec<F::Elem>>> {
    if !field.has_room_for_sampling() {
        return Err(Error::Sampling(format!(
            "field {} is too small for generic sampling (need p >= 101)",
            field.spec()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut t = vec![vec![field.zero(); size]; size];
        for block in blocks {
            for &i in block {
                for &j in block {
                    t[i][j] = field.sample(&mut rng);
                }
            }
        }
        if inverse(field, &t).is_some() {
            return Ok(t);
        }
    }
    Err(Error::Sampling(format!(
        "no invertible transform after {MAX_ATTEMPTS} attempts (seed {seed})"
    )))
}

/// `(T * M, record)` with `T` block-diagonal on the row degree classes.
pub fn generalized_row_ops<F: Field>(
    m: &PolyMatrix<F>,
    seed: u64,
) -> Result<(PolyMatrix<F>, RowOpRecord<F>)> {
    let blocks = row_degree_classes(m);
    let t = sample_block_transform(m.field(), m.rows(), &blocks, seed)?;
    let out = m.left_multiply(&t, &format!("generic row operations seed {seed}"))?;
    Ok((
        out,
        RowOpRecord {
            seed,
            axis: Axis::Rows,
            transform: t,
            block_structure: blocks,
        },
    ))
}

/// `(M * S, record)` with `S` block-diagonal on the column degree classes.
pub fn generalized_column_ops<F: Field>(
    m: &PolyMatrix<F>,
    seed: u64,
) -> Result<(PolyMatrix<F>, RowOpRecord<F>)> {
    let blocks = column_degree_classes(m);
    let s = sample_block_transform(m.field(), m.cols(), &blocks, seed)?;
    let out = m.right_multiply(&s, &format!("generic column operations seed {seed}"))?;
    Ok((
        out,
        RowOpRecord {
            seed,
            axis: Axis::Columns,
            transform: s,
            block_structure: blocks,
        },
    ))
}

/// Undoes a recorded operation.
pub fn apply_inverse<F: Field>(m: &PolyMatrix<F>, record: &RowOpRecord<F>) -> Result<PolyMatrix<F>> {
    let inv = inverse(m.field(), &record.transform)
        .ok_or_else(|| Error::Precondition("recorded transform is singular".into()))?;
    let note = format!("inverse of operations seed {}", record.seed);
    match record.axis {
        Axis::Rows => m.left_multiply(&inv, &note),
        Axis::Columns => m.right_multiply(&inv, &note),
    }
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse<F: Field>(field: &F, t: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = t.len();
    let mut a: Vec<Vec<F::Elem>> = t.to_vec();
    let mut inv: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !field.is_zero(&a[r][col]))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = field.inv(&a[col][col])?;
        for j in 0..n {
            a[col][j] = field.mul(&a[col][j], &p);
            inv[col][j] = field.mul(&inv[col][j], &p);
        }
        for r in 0..n {
            if r == col || field.is_zero(&a[r][col]) {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let x = field.mul(&f, &a[col][j]);
                a[r][j] = field.sub(&a[r][j], &x);
                let y = field.mul(&f, &inv[col][j]);
                inv[r][j] = field.sub(&inv[r][j], &y);
            }
        }
    }
    Some(inv)
}
