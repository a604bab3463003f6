//! Exact linear algebra over any [`FieldSpec`].
//!
//! Matrices are stored sparsely as a coordinate map holding only nonzero
//! entries. Kernels and solutions come from Gauss–Jordan elimination on
//! sparse rows with deterministic pivoting (first nonzero row, columns in
//! order); rank is computed independently by fraction-free Bareiss
//! elimination on a dense copy.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{FieldSpec, Scalar};

type SparseRow = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field: field.clone(),
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries.insert((i, i), field.one());
        }
        m
    }

    /// Build from dense rows. All rows must have equal length.
    pub fn from_rows(field: &FieldSpec, rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Build from dense columns, each of length `rows`.
    pub fn from_columns(field: &FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Set an entry; zeros are removed from storage.
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.len() == self.rows
            && self.entries.iter().all(|(&(i, j), v)| i == j && v.is_one())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            t.entries.insert((j, i), v.clone());
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut m = Self::zeros(&self.field, self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            m.set(i, j, v * c);
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (&(i, j), v) in &other.entries {
            let s = m.get(i, j) + v;
            m.set(i, j, s);
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&self.field.from_int(-1)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut by_row: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); other.rows];
        for (&(k, j), v) in &other.entries {
            by_row[k].push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                let p = a * b;
                match acc.get_mut(&(i, j)) {
                    Some(s) => *s = &*s + &p,
                    None => {
                        acc.insert((i, j), p);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Matrix {
            rows: self.rows,
            cols: other.cols,
            field: self.field.clone(),
            entries: acc,
        }
    }

    /// `M v` for a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !v[j].is_zero() {
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        out
    }

    /// Integer power of a square matrix; negative powers need an inverse.
    pub fn pow(&self, e: i64) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(&self.field, self.rows);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let identity: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { self.field.one() } else { self.field.zero() })
                    .collect()
            })
            .collect();
        // n solutions of M x = eⱼ make M surjective, hence invertible.
        let cols = self.solve_many(&identity).into_iter().collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(&self.field, n, &cols))
    }

    fn sparse_rows(&self) -> Vec<SparseRow> {
        let mut rows = vec![SparseRow::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            rows[i].insert(j, v.clone());
        }
        rows
    }

    /// Basis of the kernel. Each vector is scaled so that its first nonzero
    /// coordinate is 1; vectors are ordered by their free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let reduced = rref(self.sparse_rows(), self.cols);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in reduced.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| pivot_set[c].is_none()) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &pc) in reduced.pivots.iter().enumerate() {
                if let Some(x) = reduced.rows[r].get(&free) {
                    v[pc] = -x;
                }
            }
            basis.push(normalize_leading(v));
        }
        basis
    }

    /// Some `x` with `M x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.solve_many(std::slice::from_ref(&b.to_vec()))
            .pop()
            .flatten()
    }

    /// Solve against several right-hand sides with a single elimination.
    pub fn solve_many(&self, rhs: &[Vec<Scalar>]) -> Vec<Option<Vec<Scalar>>> {
        let mut rows = self.sparse_rows();
        for (k, b) in rhs.iter().enumerate() {
            assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
            for (i, v) in b.iter().enumerate() {
                if !v.is_zero() {
                    rows[i].insert(self.cols + k, v.clone());
                }
            }
        }
        let reduced = rref(rows, self.cols);
        let rank = reduced.pivots.len();
        (0..rhs.len())
            .map(|k| {
                let col = self.cols + k;
                if reduced.rows[rank..].iter().any(|r| r.contains_key(&col)) {
                    return None;
                }
                let mut x = vec![self.field.zero(); self.cols];
                for (r, &pc) in reduced.pivots.iter().enumerate() {
                    if let Some(v) = reduced.rows[r].get(&col) {
                        x[pc] = v.clone();
                    }
                }
                Some(x)
            })
            .collect()
    }

    /// Rank. Fraction-free (Bareiss) elimination over ℚ and 𝔽ₚ, where the
    /// exact divisions are cheap; Gauss–Jordan over ℚ(ζₙ) and ℚ(q), where
    /// every division is a polynomial inversion.
    pub fn rank(&self) -> usize {
        if matches!(self.field, FieldSpec::Cyclotomic(_) | FieldSpec::RationalFunctions) {
            return rref(self.sparse_rows(), self.cols).pivots.len();
        }
        let mut m: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut prev = self.field.one();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let pivot = m[r][c].clone();
            for i in r + 1..self.rows {
                let factor = m[i][c].clone();
                for j in c + 1..self.cols {
                    let v = &(&pivot * &m[i][j]) - &(&factor * &m[r][j]);
                    m[i][j] = &v / &prev;
                }
                m[i][c] = self.field.zero();
            }
            prev = pivot;
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

struct Reduced {
    rows: Vec<SparseRow>,
    /// `pivots[r]` is the pivot column of row `r`; rows past the end are zero
    /// in every pivotable column.
    pivots: Vec<usize>,
}

/// Gauss–Jordan reduction; pivots are searched only in columns `< pivot_limit`.
fn rref(mut rows: Vec<SparseRow>, pivot_limit: usize) -> Reduced {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_limit {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].contains_key(&col)) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][&col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for v in rows[r].values_mut() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let Some(factor) = row.get(&col).cloned() else {
                continue;
            };
            for (&c, v) in &pivot_row {
                let delta = &factor * v;
                let updated = match row.get(&c) {
                    Some(old) => old - &delta,
                    None => -delta,
                };
                if updated.is_zero() {
                    row.remove(&c);
                } else {
                    row.insert(c, updated);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Reduced { rows, pivots }
}

/// Scale so the first nonzero coordinate is 1.
pub fn normalize_leading(v: Vec<Scalar>) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v,
        Some(lead) if lead.is_one() => v,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
    }
}
