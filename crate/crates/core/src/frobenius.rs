//! Frobenius structures: a trace on a superalgebra whose pairing
//! `tr(e_i e_j)` is nondegenerate, with a declared symmetry flavor.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::report::{Report, Rule};
use crate::scalars::{GMatrix, GaussianRational, Vector};
use crate::superalg::{SuperAlgebra, TraceFunctional};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `tr(ab) = (−1)^{|a||b|} tr(ba)`.
    SymmetricSuper,
    /// `tr(ab) = tr(ba)`.
    TwistedSymmetric,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::SymmetricSuper => "symmetric-super",
            Symmetry::TwistedSymmetric => "twisted-symmetric",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("trace has {found} entries, algebra has dimension {expected}")]
    Shape { expected: usize, found: usize },
    #[error("invalid Frobenius structure: {0}")]
    InvalidFrobenius(Report),
    #[error("algebra is not purely even")]
    NotEven,
}

#[derive(Debug, Clone)]
pub struct FrobeniusAlgebra {
    algebra: SuperAlgebra,
    trace: TraceFunctional,
    symmetry: Symmetry,
    gram_inverse: OnceLock<Option<GMatrix>>,
}

impl PartialEq for FrobeniusAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.trace == other.trace && self.symmetry == other.symmetry
    }
}

impl Eq for FrobeniusAlgebra {}

impl FrobeniusAlgebra {
    /// Pairs an algebra with a trace; only the trace length is checked here.
    pub fn new(
        algebra: SuperAlgebra,
        trace: TraceFunctional,
        symmetry: Symmetry,
    ) -> Result<Self, FrobeniusError> {
        if trace.len() != algebra.dim() {
            return Err(FrobeniusError::Shape {
                expected: algebra.dim(),
                found: trace.len(),
            });
        }
        Ok(Self {
            algebra,
            trace,
            symmetry,
            gram_inverse: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn trace(&self) -> &TraceFunctional {
        &self.trace
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    /// `G[i][j] = tr(e_i e_j)`.
    pub fn gram(&self) -> GMatrix {
        let n = self.algebra.dim();
        let mut g = GMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, self.trace.eval_sparse(self.algebra.product(i, j)));
            }
        }
        g
    }

    fn gram_inverse(&self) -> Option<&GMatrix> {
        self.gram_inverse.get_or_init(|| self.gram().inverse()).as_ref()
    }

    /// The basis `e^i` with `tr(e_j e^i) = δ_ij`, or `None` if the pairing
    /// is degenerate.
    pub fn dual_basis(&self) -> Option<Vec<Vector>> {
        let d = self.gram_inverse()?;
        Some((0..self.algebra.dim()).map(|i| d.col(i)).collect())
    }
}

/// Checks the algebra axioms, nondegeneracy, evenness of the trace and the
/// declared symmetry on all pairs of basis elements.
pub fn validate_frobenius(f: &FrobeniusAlgebra) -> Report {
    let a = f.algebra();
    let mut report = a.validation().clone();
    let n = a.dim();
    if f.trace().len() != n {
        report.push(Rule::Shape, vec![f.trace().len()], "trace length");
        return report;
    }
    if f.gram_inverse().is_none() {
        report.push(Rule::Degenerate, Vec::new(), "Gram matrix tr(e_i e_j) is singular");
    }
    for (k, t) in f.trace().covector().iter().enumerate() {
        if a.parity(k) == 1 && !t.is_zero() {
            report.push(Rule::OddTrace, vec![k], format!("tr(e{k}) = {t} on an odd element"));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let ij = f.trace().eval_sparse(a.product(i, j));
            let ji = f.trace().eval_sparse(a.product(j, i));
            let sign = match f.symmetry() {
                Symmetry::SymmetricSuper => GaussianRational::sign((a.parity(i) * a.parity(j)) as usize),
                Symmetry::TwistedSymmetric => GaussianRational::one(),
            };
            if ij != &sign * &ji {
                report.push(
                    Rule::TraceSymmetry,
                    vec![i, j],
                    format!("tr(e{i}e{j}) = {ij}, tr(e{j}e{i}) = {ji}"),
                );
            }
        }
    }
    report
}

/// `h = Σ_i e_i·e^i` for a valid Frobenius structure on a purely even algebra.
pub fn handle_element(f: &FrobeniusAlgebra) -> Result<Vector, FrobeniusError> {
    if !f.algebra().is_even() {
        return Err(FrobeniusError::NotEven);
    }
    let report = validate_frobenius(f);
    if !report.is_valid() {
        return Err(FrobeniusError::InvalidFrobenius(report));
    }
    let a = f.algebra();
    let dual = f.dual_basis().expect("validated nondegenerate");
    let mut h = vec![GaussianRational::zero(); a.dim()];
    for (i, d) in dual.iter().enumerate() {
        for (k, x) in a.mul(&a.basis_vector(i), d).into_iter().enumerate() {
            h[k] += &x;
        }
    }
    Ok(h)
}
