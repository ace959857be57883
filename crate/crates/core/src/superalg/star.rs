//! Antilinear star structures on superalgebras.
//!
//! A star is stored as a matrix `M` acting on conjugated coordinates:
//! `x* = M·conj(x)`, so column `j` of `M` is `e_j*`. Composing two such maps
//! gives the linear map `M·conj(N)`; in particular the star is involutive
//! iff `M·conj(M) = I`.

use std::fmt;

use super::{dense_to_sparse, normalize_sparse, SuperAlgebra};
use crate::report::{Report, Rule};
use crate::scalars::{GMatrix, GaussianRational, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarFlavor {
    /// `(xy)* = (−1)^{|x||y|} y* x*`.
    Ordinary,
    /// `(xy)* = y* x*`.
    Twisted,
}

impl fmt::Display for StarFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarFlavor::Ordinary => "ordinary",
            StarFlavor::Twisted => "twisted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarStructure {
    matrix: GMatrix,
    flavor: StarFlavor,
}

impl StarStructure {
    pub fn new(matrix: GMatrix, flavor: StarFlavor) -> Self {
        Self { matrix, flavor }
    }

    pub fn matrix(&self) -> &GMatrix {
        &self.matrix
    }

    pub fn flavor(&self) -> StarFlavor {
        self.flavor
    }

    pub fn apply(&self, x: &[GaussianRational]) -> Vector {
        let conj: Vector = x.iter().map(GaussianRational::conj).collect();
        self.matrix.mul_vec(&conj)
    }

    /// `e_j*`.
    pub fn basis_image(&self, j: usize) -> Vector {
        self.matrix.col(j)
    }

    /// The ungraded star on the underlying algebra of `a`.
    ///
    /// A twisted star already reverses products without signs. An ordinary
    /// star becomes one by `x ↦ i^{|x|} x*` on homogeneous elements, which
    /// absorbs the Koszul sign on odd pairs: `(i·y*)(i·x*) = −y*x*`.
    pub fn to_ungraded(&self, a: &SuperAlgebra) -> StarStructure {
        let matrix = match self.flavor {
            StarFlavor::Twisted => self.matrix.clone(),
            StarFlavor::Ordinary => {
                let n = self.matrix.cols();
                let mut m = self.matrix.clone();
                for j in (0..n).filter(|&j| a.parity(j) == 1) {
                    for r in 0..self.matrix.rows() {
                        let v = self.matrix.get(r, j) * &GaussianRational::i();
                        m.set(r, j, v);
                    }
                }
                m
            }
        };
        StarStructure::new(matrix, StarFlavor::Ordinary)
    }
}

/// Checks shape, involutivity, parity preservation and the sign rule of the
/// star's flavor on every pair of basis elements.
pub fn validate_star(a: &SuperAlgebra, s: &StarStructure) -> Report {
    let n = a.dim();
    let mut report = Report::new();
    let m = s.matrix();
    if m.rows() != n || m.cols() != n {
        report.push(
            Rule::Shape,
            vec![m.rows(), m.cols()],
            format!("star matrix must be {n}x{n}"),
        );
        return report;
    }
    let square = m.mul(&m.conj());
    let id = GMatrix::identity(n);
    for j in 0..n {
        if (0..n).any(|r| square.get(r, j) != id.get(r, j)) {
            report.push(Rule::StarInvolution, vec![j], format!("(e{j}*)* ≠ e{j}"));
        }
    }
    for j in 0..n {
        for r in 0..n {
            if !m.get(r, j).is_zero() && a.parity(r) != a.parity(j) {
                report.push(
                    Rule::StarParity,
                    vec![j, r],
                    format!("e{j}* has a component along e{r} of the other parity"),
                );
            }
        }
    }
    let images: Vec<Vector> = (0..n).map(|j| s.basis_image(j)).collect();
    let sparse_images: Vec<_> = images.iter().map(|v| dense_to_sparse(v)).collect();
    for i in 0..n {
        for j in 0..n {
            // (e_i e_j)* = Σ_k conj(c_ijk) e_k*
            let lhs = normalize_sparse(
                a.product(i, j)
                    .iter()
                    .flat_map(|(k, c)| {
                        let cc = c.conj();
                        sparse_images[*k].iter().map(move |(r, x)| (*r, &cc * x))
                    })
                    .collect(),
            );
            let sign = match s.flavor() {
                StarFlavor::Ordinary => {
                    GaussianRational::sign((a.parity(i) * a.parity(j)) as usize)
                }
                StarFlavor::Twisted => GaussianRational::one(),
            };
            let mut terms = Vec::new();
            for (p, x) in &sparse_images[j] {
                for (q, y) in &sparse_images[i] {
                    let f = &(x * y) * &sign;
                    terms.extend(a.product(*p, *q).iter().map(|(k, c)| (*k, &f * c)));
                }
            }
            let rhs = normalize_sparse(terms);
            if lhs != rhs {
                report.push(
                    Rule::StarSignRule,
                    vec![i, j],
                    format!("(e{i}e{j})* ≠ {}e{j}*e{i}*", if sign.is_one() { "" } else { "−" }),
                );
            }
        }
    }
    report
}
