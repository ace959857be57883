//! Finite-dimensional superalgebras over ℚ(i) given by structure constants.
//!
//! An algebra has a homogeneous basis `e_0, …, e_{n-1}` with parities in
//! `{0, 1}` and products `e_i·e_j = Σ_k c[i][j][k] e_k`. The product table is
//! stored sparsely per basis pair because the algebras of interest (Clifford,
//! matrix and group algebras) have one or two terms per product.
//!
//! Center and cocenter are taken in the underlying ungraded algebra: the
//! center is `{z : z·e_j = e_j·z}` and the cocenter is `A / span{e_i e_j − e_j e_i}`.

mod catalog;
mod star;

pub use catalog::{
    clifford, clifford_star, conjugate_transpose_star, coordinate_star, cyclic_group_algebra,
    cyclic_group_star, dual_numbers, matrix_algebra, quadratic, split,
};
pub use star::{validate_star, StarFlavor, StarStructure};

use std::sync::OnceLock;

use thiserror::Error;

use crate::report::{Report, Rule};
use crate::scalars::{kernel_from_echelon, GMatrix, GaussianRational, RowEchelon, Vector};

/// Sparse coefficient vector: sorted indices, no zero coefficients.
pub type SparseVec = Vec<(usize, GaussianRational)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{field}: expected {expected} entries, found {found}")]
    Shape {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("parity of basis element {0} is {1}, expected 0 or 1")]
    BadParity(usize, u8),
    #[error("product index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(Report),
    #[error("algebra is not purely even")]
    NotEven,
}

#[derive(Debug, Clone)]
pub struct SuperAlgebra {
    dim: usize,
    parity: Vec<u8>,
    table: Vec<SparseVec>,
    unit: Vector,
    validity: OnceLock<Report>,
}

impl PartialEq for SuperAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.parity == other.parity
            && self.table == other.table
            && self.unit == other.unit
    }
}

impl Eq for SuperAlgebra {}

/// Sorts, merges and drops zero terms.
pub fn normalize_sparse(mut terms: Vec<(usize, GaussianRational)>) -> SparseVec {
    terms.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (k, x) in terms {
        match out.last_mut() {
            Some((last, acc)) if *last == k => *acc += &x,
            _ => out.push((k, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

pub fn sparse_to_dense(v: &[(usize, GaussianRational)], dim: usize) -> Vector {
    let mut d = vec![GaussianRational::zero(); dim];
    for (k, x) in v {
        d[*k] += x;
    }
    d
}

pub fn dense_to_sparse(v: &[GaussianRational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

impl SuperAlgebra {
    /// Builds an algebra from a product rule on basis pairs.
    ///
    /// Only shapes are checked here; the axioms are checked by
    /// [`validate_algebra`].
    pub fn from_products(
        parity: Vec<u8>,
        unit: Vector,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, GaussianRational)>,
    ) -> Result<Self, AlgebraError> {
        let dim = parity.len();
        if let Some((i, &p)) = parity.iter().enumerate().find(|(_, &p)| p > 1) {
            return Err(AlgebraError::BadParity(i, p));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape {
                field: "unit",
                expected: dim,
                found: unit.len(),
            });
        }
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let terms = product(i, j);
                if let Some((k, _)) = terms.iter().find(|(k, _)| *k >= dim) {
                    return Err(AlgebraError::IndexOutOfRange(*k));
                }
                table.push(normalize_sparse(terms));
            }
        }
        Ok(Self {
            dim,
            parity,
            table,
            unit,
            validity: OnceLock::new(),
        })
    }

    /// Builds an algebra from the dense tensor `structure[i][j][k] = c[i][j][k]`.
    pub fn from_dense(
        parity: Vec<u8>,
        structure: &[Vec<Vector>],
        unit: Vector,
    ) -> Result<Self, AlgebraError> {
        let dim = parity.len();
        let shape = |found: usize| AlgebraError::Shape {
            field: "structure",
            expected: dim,
            found,
        };
        if structure.len() != dim {
            return Err(shape(structure.len()));
        }
        for row in structure {
            if row.len() != dim {
                return Err(shape(row.len()));
            }
            if let Some(v) = row.iter().find(|v| v.len() != dim) {
                return Err(shape(v.len()));
            }
        }
        Self::from_products(parity, unit, |i, j| dense_to_sparse(&structure[i][j]))
    }

    /// The zero algebra (dimension 0).
    pub fn zero() -> Self {
        Self::from_products(Vec::new(), Vec::new(), |_, _| Vec::new()).expect("empty shapes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }

    pub fn unit(&self) -> &[GaussianRational] {
        &self.unit
    }

    /// `e_i·e_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> GaussianRational {
        self.product(i, j)
            .iter()
            .find(|(m, _)| *m == k)
            .map(|(_, x)| x.clone())
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Dense structure tensor `c[i][j][k]`.
    pub fn structure(&self) -> Vec<Vec<Vector>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| sparse_to_dense(self.product(i, j), self.dim))
                    .collect()
            })
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![GaussianRational::zero(); self.dim];
        v[i] = GaussianRational::one();
        v
    }

    pub fn mul(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Vector {
        let mut out = vec![GaussianRational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi * yj;
                for (k, c) in self.product(i, j) {
                    out[*k] += &(&s * c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul_matrix(&self, x: &[GaussianRational]) -> GMatrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        GMatrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul_matrix(&self, x: &[GaussianRational]) -> GMatrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        GMatrix::from_columns(self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Parity of `x` if it is homogeneous and nonzero.
    pub fn parity_of(&self, x: &[GaussianRational]) -> Option<u8> {
        let mut found = None;
        for (k, v) in x.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.parity[k]),
                Some(p) if p != self.parity[k] => return None,
                _ => {}
            }
        }
        found
    }

    /// Cached result of [`validate_algebra`].
    pub fn validation(&self) -> &Report {
        self.validity.get_or_init(|| check_axioms(self))
    }

    pub fn ensure_valid(&self) -> Result<(), AlgebraError> {
        let r = self.validation();
        if r.is_valid() {
            Ok(())
        } else {
            Err(AlgebraError::InvalidAlgebra(r.clone()))
        }
    }
}

/// Reports every violated associativity, unit or grading axiom.
pub fn validate_algebra(a: &SuperAlgebra) -> Report {
    a.validation().clone()
}

fn check_axioms(a: &SuperAlgebra) -> Report {
    let n = a.dim;
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            for (k, _) in a.product(i, j) {
                if a.parity[*k] != (a.parity[i] + a.parity[j]) % 2 {
                    report.push(
                        Rule::Grading,
                        vec![i, j, *k],
                        format!("e{i}·e{j} has a component along e{k} of the wrong parity"),
                    );
                }
            }
        }
    }
    if let Some(k) = (0..n).find(|&k| a.parity[k] == 1 && !a.unit[k].is_zero()) {
        report.push(Rule::OddUnit, vec![k], "unit has an odd component");
    }
    let unit = dense_to_sparse(&a.unit);
    for j in 0..n {
        let expected: SparseVec = vec![(j, GaussianRational::one())];
        let left = normalize_sparse(
            unit.iter()
                .flat_map(|(i, u)| a.product(*i, j).iter().map(move |(k, c)| (*k, u * c)))
                .collect(),
        );
        if left != expected {
            report.push(Rule::LeftUnit, vec![j], format!("unit·e{j} ≠ e{j}"));
        }
        let right = normalize_sparse(
            unit.iter()
                .flat_map(|(i, u)| a.product(j, *i).iter().map(move |(k, c)| (*k, u * c)))
                .collect(),
        );
        if right != expected {
            report.push(Rule::RightUnit, vec![j], format!("e{j}·unit ≠ e{j}"));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = a.product(i, j);
            for k in 0..n {
                let lhs = normalize_sparse(
                    ij.iter()
                        .flat_map(|(m, x)| a.product(*m, k).iter().map(move |(l, y)| (*l, x * y)))
                        .collect(),
                );
                let rhs = normalize_sparse(
                    a.product(j, k)
                        .iter()
                        .flat_map(|(m, x)| a.product(i, *m).iter().map(move |(l, y)| (*l, x * y)))
                        .collect(),
                );
                if lhs != rhs {
                    report.push(
                        Rule::Associativity,
                        vec![i, j, k],
                        format!("(e{i}e{j})e{k} ≠ e{i}(e{j}e{k})"),
                    );
                }
            }
        }
    }
    report
}

/// `tr(L_{e_m})` for every basis element.
fn regular_traces(a: &SuperAlgebra) -> Vector {
    (0..a.dim)
        .map(|m| {
            (0..a.dim)
                .map(|k| a.coeff(m, k, k))
                .fold(GaussianRational::zero(), |acc, x| acc + x)
        })
        .collect()
}

/// Gram matrix of `(x, y) ↦ tr(L_x L_y) = tr(L_{xy})` on the underlying algebra.
pub fn regular_trace_form(a: &SuperAlgebra) -> GMatrix {
    let t = regular_traces(a);
    let mut g = GMatrix::zeros(a.dim, a.dim);
    for i in 0..a.dim {
        for j in 0..a.dim {
            let v = a
                .product(i, j)
                .iter()
                .fold(GaussianRational::zero(), |acc, (m, c)| acc + c * &t[*m]);
            g.set(i, j, v);
        }
    }
    g
}

/// Semisimplicity of the underlying ungraded algebra, decided by
/// nondegeneracy of the regular trace form (valid in characteristic 0).
pub fn is_semisimple(a: &SuperAlgebra) -> Result<bool, AlgebraError> {
    a.ensure_valid()?;
    Ok(regular_trace_form(a).rank() == a.dim)
}

/// Echelon-normalized basis of the ungraded center.
pub fn center(a: &SuperAlgebra) -> Result<Vec<Vector>, AlgebraError> {
    a.ensure_valid()?;
    let n = a.dim;
    let mut ech = RowEchelon::new(n);
    for j in 0..n {
        if ech.rank() == n {
            break;
        }
        // rows[k][i] = c[i][j][k] − c[j][i][k]
        let mut rows = vec![vec![GaussianRational::zero(); n]; n];
        for i in 0..n {
            for (k, c) in a.product(i, j) {
                rows[*k][i] += c;
            }
            for (k, c) in a.product(j, i) {
                rows[*k][i] -= c;
            }
        }
        for row in &rows {
            ech.insert(row);
        }
    }
    Ok(kernel_from_echelon(ech))
}

/// The cocenter `A / [A, A]` of the underlying algebra.
///
/// The quotient basis is the classes of the basis elements `e_r` for the
/// non-pivot columns `r` of the commutator span's echelon form.
#[derive(Debug, Clone)]
pub struct Cocenter {
    commutators: RowEchelon,
    representatives: Vec<usize>,
}

impl Cocenter {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.commutators.cols()
    }

    /// Basis indices whose classes form the quotient basis.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn commutator_rank(&self) -> usize {
        self.commutators.rank()
    }

    /// Coordinates of the class of `x` in the quotient basis.
    pub fn project(&self, x: &[GaussianRational]) -> Vector {
        let r = self.commutators.reduce(x);
        self.representatives.iter().map(|&c| r[c].clone()).collect()
    }

    /// Whether `x` lies in the commutator span.
    pub fn is_commutator(&self, x: &[GaussianRational]) -> bool {
        self.commutators.contains(x)
    }

    /// Matrix of the projection (quotient dim × ambient dim).
    pub fn projection_matrix(&self) -> GMatrix {
        let n = self.ambient_dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| {
                let mut e = vec![GaussianRational::zero(); n];
                e[j] = GaussianRational::one();
                self.project(&e)
            })
            .collect();
        GMatrix::from_columns(self.dim(), &cols)
    }
}

pub fn cocenter(a: &SuperAlgebra) -> Result<Cocenter, AlgebraError> {
    a.ensure_valid()?;
    let n = a.dim;
    let mut ech = RowEchelon::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if a.product(i, j) == a.product(j, i) {
                continue;
            }
            let mut v = sparse_to_dense(a.product(i, j), n);
            for (k, c) in a.product(j, i) {
                v[*k] -= c;
            }
            ech.insert(&v);
        }
    }
    let pivots = ech.pivots();
    let representatives = (0..n).filter(|c| !pivots.contains(c)).collect();
    Ok(Cocenter {
        commutators: ech,
        representatives,
    })
}

/// Forgets the grading: same structure constants, all parities 0.
pub fn underlying_algebra(a: &SuperAlgebra) -> SuperAlgebra {
    SuperAlgebra {
        dim: a.dim,
        parity: vec![0; a.dim],
        table: a.table.clone(),
        unit: a.unit.clone(),
        validity: OnceLock::new(),
    }
}

/// Graded opposite: `c_op[i][j][k] = (−1)^{|i||j|} c[j][i][k]`.
pub fn opposite(a: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    a.ensure_valid()?;
    SuperAlgebra::from_products(a.parity.clone(), a.unit.clone(), |i, j| {
        let s = GaussianRational::sign((a.parity[i] * a.parity[j]) as usize);
        a.product(j, i).iter().map(|(k, c)| (*k, c * &s)).collect()
    })
}

/// `a ⊕ b` with the basis of `a` followed by the basis of `b`.
pub fn direct_sum(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    a.ensure_valid()?;
    b.ensure_valid()?;
    let n = a.dim;
    let parity = a.parity.iter().chain(&b.parity).copied().collect();
    let unit = a.unit.iter().chain(&b.unit).cloned().collect();
    SuperAlgebra::from_products(parity, unit, |i, j| match (i < n, j < n) {
        (true, true) => a.product(i, j).clone(),
        (false, false) => b
            .product(i - n, j - n)
            .iter()
            .map(|(k, c)| (k + n, c.clone()))
            .collect(),
        _ => Vec::new(),
    })
}

/// `A ⋊ ℤ/2 = A ⊕ Aε` with `ε` even, `ε² = 1` and `εa = (−1)^{|a|} aε`.
///
/// Basis: `e_i` at index `i`, `e_i ε` at index `dim + i`, with the parity of
/// `e_i`.
pub fn parity_semidirect(a: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    a.ensure_valid()?;
    let n = a.dim;
    let parity = a.parity.iter().chain(&a.parity).copied().collect();
    let unit = a
        .unit
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(GaussianRational::zero(), n))
        .collect();
    SuperAlgebra::from_products(parity, unit, |i, j| {
        let (ai, ei) = (i % n, i >= n);
        let (bj, ej) = (j % n, j >= n);
        let sign = if ei {
            GaussianRational::sign(a.parity[bj] as usize)
        } else {
            GaussianRational::one()
        };
        let offset = if ei != ej { n } else { 0 };
        a.product(ai, bj)
            .iter()
            .map(|(k, c)| (k + offset, c * &sign))
            .collect()
    })
}

/// A linear functional on an algebra, given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFunctional {
    covector: Vector,
}

impl TraceFunctional {
    pub fn new(covector: Vector) -> Self {
        Self { covector }
    }

    pub fn covector(&self) -> &[GaussianRational] {
        &self.covector
    }

    pub fn len(&self) -> usize {
        self.covector.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covector.is_empty()
    }

    pub fn eval(&self, x: &[GaussianRational]) -> GaussianRational {
        self.covector
            .iter()
            .zip(x)
            .filter(|(t, v)| !t.is_zero() && !v.is_zero())
            .fold(GaussianRational::zero(), |acc, (t, v)| acc + t * v)
    }

    pub fn eval_sparse(&self, x: &[(usize, GaussianRational)]) -> GaussianRational {
        x.iter()
            .fold(GaussianRational::zero(), |acc, (k, v)| acc + &self.covector[*k] * v)
    }
}

#[cfg(test)]
mod tests;
