//! Dense matrices over the Gaussian rationals and the exact elimination
//! routines everything else is built on.

use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::gaussian::GaussianRational;
use super::ScalarError;

pub type Vector = Vec<GaussianRational>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl GMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self, ScalarError> {
        if entries.len() != rows * cols {
            return Err(ScalarError::Shape {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn diagonal(d: &[GaussianRational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (k, x) in d.iter().enumerate() {
            m.set(k, k, x.clone());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, ScalarError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(ScalarError::Shape {
                expected: m,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: n,
            cols: m,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix literal, mostly for tests and catalog data.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self {
            rows: rows.len(),
            cols: C,
            entries: rows
                .iter()
                .flat_map(|r| r.iter().map(|&x| GaussianRational::from_int(x)))
                .collect(),
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows, "column length");
            for (r, x) in v.iter().enumerate() {
                m.set(r, c, x.clone());
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut GaussianRational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: GaussianRational) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(GaussianRational::conj).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_real)
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        *out.get_mut(r, c) += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vector {
        assert_eq!(self.cols, v.len(), "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * other.get(r2, c2));
                    }
                }
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut out = Self::zeros(a.rows + c.rows, a.cols + b.cols);
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for r in 0..blk.rows {
                for cc in 0..blk.cols {
                    out.set(r0 + r, c0 + cc, blk.get(r, cc).clone());
                }
            }
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = RowEchelon::new(self.cols);
        for r in 0..self.rows {
            ech.insert(self.row(r));
        }
        ech.rank()
    }

    /// Determinant by fraction-exact elimination, pivoting on the first
    /// nonzero entry of each column.
    pub fn determinant(&self) -> Result<GaussianRational, ScalarError> {
        if !self.is_square() {
            return Err(ScalarError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = GaussianRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(GaussianRational::zero());
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            let pivot = a[k][k].clone();
            det *= &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in (k + 1)..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] * &inv;
                for c in k..n {
                    if !a[k][c].is_zero() {
                        let t = &f * &a[k][c];
                        a[r][c] -= &t;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Self::identity(n).to_rows();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(p, k);
            inv.swap(p, k);
            let s = a[k][k].inv().expect("nonzero pivot");
            for c in 0..n {
                a[k][c] *= &s;
                inv[k][c] *= &s;
            }
            for r in 0..n {
                if r == k || a[r][k].is_zero() {
                    continue;
                }
                let f = a[r][k].clone();
                for c in 0..n {
                    if !a[k][c].is_zero() {
                        let t = &f * &a[k][c];
                        a[r][c] -= &t;
                    }
                    if !inv[k][c].is_zero() {
                        let t = &f * &inv[k][c];
                        inv[r][c] -= &t;
                    }
                }
            }
        }
        Self::from_rows(inv).ok()
    }

    /// Solves `self · x = b` for one particular solution, if any exists.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let mut ech = RowEchelon::new(self.cols + 1);
        for r in 0..aug.rows {
            ech.insert(aug.row(r));
        }
        let rref = ech.into_rref();
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (p, row) in &rref {
            if *p == self.cols {
                return None;
            }
            x[*p] = row
                .iter()
                .find(|(c, _)| *c == self.cols)
                .map_or_else(GaussianRational::zero, |(_, v)| v.clone());
        }
        Some(x)
    }
}

impl fmt::Display for GMatrix {
    /// `[[a,b],[c,d]]` with canonical scalar rendering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GMatrix{}x{}{}", self.rows, self.cols, self)
    }
}

/// Renders a vector as `[a,b,...]`.
pub fn fmt_vector(v: &[GaussianRational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

type SparseRow = Vec<(usize, GaussianRational)>;

/// Incrementally built row echelon form.
///
/// Rows are reduced against the stored rows in insertion order; each stored
/// row has its pivot (its first nonzero entry) scaled to 1 and vanishes at
/// the pivots of every earlier row. Pivot choice is deterministic.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<(usize, SparseRow)>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Normal form of `v` modulo the span of the stored rows. The result
    /// vanishes at every pivot column.
    pub fn reduce(&self, v: &[GaussianRational]) -> Vector {
        assert_eq!(v.len(), self.cols, "row length");
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (c, x) in row {
                let t = &f * x;
                v[*c] -= &t;
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[GaussianRational]) -> bool {
        if v.iter().all(GaussianRational::is_zero) {
            return false;
        }
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        let row: SparseRow = r
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, &x * &inv))
            .collect();
        self.rows.push((p, row));
        true
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.reduce(v).iter().all(GaussianRational::is_zero)
    }

    /// Fully reduced rows sorted by pivot: every pivot column is zero in
    /// all other rows.
    pub fn into_rref(self) -> Vec<(usize, SparseRow)> {
        let cols = self.cols;
        let mut dense: Vec<(usize, Vector)> = self
            .rows
            .into_iter()
            .map(|(p, row)| {
                let mut d = vec![GaussianRational::zero(); cols];
                for (c, x) in row {
                    d[c] = x;
                }
                (p, d)
            })
            .collect();
        dense.sort_by_key(|(p, _)| *p);
        for k in (0..dense.len()).rev() {
            let (pk, rk) = dense[k].clone();
            for (_, other) in dense.iter_mut().take(k) {
                if other[pk].is_zero() {
                    continue;
                }
                let f = other[pk].clone();
                for (c, x) in rk.iter().enumerate() {
                    if !x.is_zero() {
                        let t = &f * x;
                        other[c] -= &t;
                    }
                }
            }
            // rows after k already vanish at pk
        }
        dense
            .into_iter()
            .map(|(p, d)| {
                let row = d.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                (p, row)
            })
            .collect()
    }
}

/// Result of diagonalizing a Hermitian form by congruence:
/// `basis^† · g · basis = diag(diagonal)`.
#[derive(Clone, Debug)]
pub struct Congruence {
    pub diagonal: Vec<BigRational>,
    pub basis: GMatrix,
}

impl Congruence {
    pub fn signature(&self) -> (usize, usize, usize) {
        let pos = self.diagonal.iter().filter(|d| d.is_positive()).count();
        let neg = self.diagonal.iter().filter(|d| d.is_negative()).count();
        (pos, neg, self.diagonal.len() - pos - neg)
    }

    /// First basis vector whose diagonal value is not positive.
    pub fn non_positive_vector(&self) -> Option<Vector> {
        self.diagonal
            .iter()
            .position(|d| !d.is_positive())
            .map(|k| self.basis.col(k))
    }
}

/// Congruence diagonalization of a Hermitian matrix (symmetric Gaussian
/// elimination; a zero diagonal with a nonzero off-diagonal entry is fixed by
/// the substitution `e_k ← e_k + conj(g_kj)·e_j`).
pub fn congruence_diagonalize(g: &GMatrix) -> Result<Congruence, ScalarError> {
    if !g.is_hermitian() {
        return Err(ScalarError::NotHermitian);
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut t = GMatrix::identity(n);
    for k in 0..n {
        if a.get(k, k).is_zero() {
            if let Some(j) = ((k + 1)..n).find(|&j| !a.get(j, j).is_zero()) {
                swap_congruent(&mut a, &mut t, k, j);
            } else if let Some(j) = ((k + 1)..n).find(|&j| !a.get(k, j).is_zero()) {
                let s = a.get(k, j).conj();
                add_congruent(&mut a, &mut t, k, j, &s);
            } else {
                continue;
            }
        }
        let pivot_inv = a.get(k, k).inv().expect("nonzero pivot");
        for i in (k + 1)..n {
            if a.get(k, i).is_zero() {
                continue;
            }
            let f = -(a.get(k, i) * &pivot_inv);
            add_congruent(&mut a, &mut t, i, k, &f);
        }
    }
    let diagonal = (0..n)
        .map(|k| {
            debug_assert!(a.get(k, k).is_real());
            a.get(k, k).re.clone()
        })
        .collect();
    Ok(Congruence { diagonal, basis: t })
}

fn swap_congruent(a: &mut GMatrix, t: &mut GMatrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let x = a.get(i, c).clone();
        a.set(i, c, a.get(j, c).clone());
        a.set(j, c, x);
    }
    for r in 0..n {
        let x = a.get(r, i).clone();
        a.set(r, i, a.get(r, j).clone());
        a.set(r, j, x);
        let y = t.get(r, i).clone();
        t.set(r, i, t.get(r, j).clone());
        t.set(r, j, y);
    }
}

/// Basis change `e_k ← e_k + s·e_j`.
fn add_congruent(a: &mut GMatrix, t: &mut GMatrix, k: usize, j: usize, s: &GaussianRational) {
    let n = a.rows();
    for r in 0..n {
        let x = a.get(r, j) * s;
        *a.get_mut(r, k) += &x;
        let y = t.get(r, j) * s;
        *t.get_mut(r, k) += &y;
    }
    let sc = s.conj();
    for c in 0..n {
        let x = a.get(j, c) * &sc;
        *a.get_mut(k, c) += &x;
    }
}

/// `v^† · g · w`.
pub fn sesquilinear(g: &GMatrix, v: &[GaussianRational], w: &[GaussianRational]) -> GaussianRational {
    let gw = g.mul_vec(w);
    v.iter().zip(&gw).map(|(a, b)| &a.conj() * b).sum()
}
