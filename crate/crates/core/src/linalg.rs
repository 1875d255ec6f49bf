//! Exact linear algebra: fraction-free integer elimination for the oracle kernels
//! and a sparse echelon form over Gaussian rationals for span comparisons.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn make_primitive(row: &mut [BigInt]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Result of fraction-free Gauss-Jordan elimination on an integer matrix.
#[derive(Debug, Clone)]
pub struct IntegerEchelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl IntegerEchelon {
    /// Pivoting is deterministic: the first column with a nonzero entry among the
    /// remaining rows, and the smallest such row index.
    pub fn new(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            if r == rows.len() {
                break;
            }
            let Some(i) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
            rows.swap(r, i);
            make_primitive(&mut rows[r]);
            if rows[r][col].is_negative() {
                rows[r].iter_mut().for_each(|x| *x = -&*x);
            }
            let (head, tail) = rows.split_at_mut(r);
            let (prow, tail) = tail.split_first_mut().expect("pivot row exists");
            let p = prow[col].clone();
            for other in head.iter_mut().chain(tail.iter_mut()) {
                let a = other[col].clone();
                if a.is_zero() {
                    continue;
                }
                for (x, y) in other.iter_mut().zip(prow.iter()) {
                    if y.is_zero() {
                        *x = &*x * &p;
                    } else {
                        *x = &*x * &p - &a * y;
                    }
                }
                make_primitive(other);
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        IntegerEchelon { rows, pivots, ncols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Integer basis of the right kernel, one primitive vector per free column
    /// (free columns ascending).
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut l = BigInt::one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    l = l.lcm(&row[pc]);
                }
            }
            let mut v = vec![BigInt::zero(); self.ncols];
            v[free] = l.clone();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    v[pc] = -(&l * &row[free]) / &row[pc];
                }
            }
            make_primitive(&mut v);
            out.push(v);
        }
        out
    }
}

pub fn integer_rank(rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    IntegerEchelon::new(rows, ncols).rank()
}

/// Sparse vector over Gaussian rationals keyed by an ordered coordinate type.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Incremental row echelon form. Each stored row has its smallest key as pivot with
/// coefficient 1 and vanishes on the pivots of earlier rows.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
    pivot_of: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivot_of: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after elimination against the stored rows; zero iff `v` is
    /// in their span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.pivot_of.contains_key(*k)).cloned(),
                Some(c) => v
                    .range((Bound::Excluded(c.clone()), Bound::Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.pivot_of.contains_key(*k))
                    .cloned(),
            };
            let Some(key) = next else { break };
            // stored rows only touch keys at or above their pivot
            let c = v[&key].clone();
            for (k, x) in &self.rows[self.pivot_of[&key]] {
                let entry = v.entry(k.clone()).or_insert_with(Scalar::zero);
                *entry = &*entry - &(&c * x);
                if entry.is_zero() {
                    v.remove(k);
                }
            }
            cursor = Some(key);
        }
        v
    }

    /// Insert `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        for x in r.values_mut() {
            *x = &*x * &inv;
        }
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Solve `A x = b` for square invertible `A` over Gaussian rationals.
pub fn solve_dense(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = a.len();
    let mut aug: Vec<Vec<Scalar>> =
        a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, p);
        let inv = aug[col][col].inv()?;
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = aug[col].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Inverse of a square matrix over Gaussian rationals.
pub fn invert_dense(a: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Scalar> = (0..n).map(|i| if i == j { Scalar::int(1) } else { Scalar::zero() }).collect();
        cols.push(solve_dense(a, &e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}
