//! Exact scalars over ℚ(i) and the linear algebra the rest of the crate
//! needs: kernels, ranks, definiteness, and realification of forms.

mod gaussian;
mod matrix;

pub use gaussian::{GaussianRational, ScalarFormatError};
pub use matrix::{congruence_diagonalize, fmt_vector, sesquilinear, Congruence, GMatrix, RowEchelon, Vector};

use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix does not have the symmetry required for a {0} form")]
    KindMismatch(FormKind),
}

/// Symmetry type of a Gram matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// `⟨u,v⟩ = u^†·G·v`, `G = G^†`.
    Hermitian,
    /// `⟨u,v⟩ = u^T·G·v`, `G = G^T`.
    ComplexSymmetric,
}

impl std::fmt::Display for FormKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormKind::Hermitian => "hermitian",
            FormKind::ComplexSymmetric => "complex-symmetric",
        })
    }
}

/// Basis of the right null space of `m`.
///
/// One vector per free column of the reduced row echelon form, in increasing
/// column order, each scaled so its first nonzero entry is 1.
pub fn kernel_basis(m: &GMatrix) -> Vec<Vector> {
    let mut ech = RowEchelon::new(m.cols());
    for r in 0..m.rows() {
        ech.insert(m.row(r));
    }
    kernel_from_echelon(ech)
}

pub(crate) fn kernel_from_echelon(ech: RowEchelon) -> Vec<Vector> {
    let cols = ech.cols();
    let rref = ech.into_rref();
    let pivots: Vec<usize> = rref.iter().map(|(p, _)| *p).collect();
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![GaussianRational::zero(); cols];
            v[free] = GaussianRational::one();
            for (p, row) in &rref {
                if let Some((_, x)) = row.iter().find(|(c, _)| *c == free) {
                    v[*p] = -x;
                }
            }
            normalize_leading(v)
        })
        .collect()
}

/// Scales `v` so its first nonzero entry is 1 (zero vectors are unchanged).
pub fn normalize_leading(v: Vector) -> Vector {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
        None => v,
    }
}

/// Sylvester's criterion over ℚ(i): every leading principal minor of a
/// Hermitian matrix is real, and the form is positive-definite iff all of
/// them are positive. Singular forms are simply not positive-definite.
pub fn is_positive_definite_hermitian(g: &GMatrix) -> Result<bool, ScalarError> {
    if !g.is_hermitian() {
        return Err(ScalarError::NotHermitian);
    }
    for k in 1..=g.rows() {
        let minor = g.submatrix(0..k, 0..k).determinant()?;
        debug_assert!(minor.is_real(), "Hermitian minors are real");
        if !minor.re.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gram matrix of `2·Re(form)` on the underlying real space, in the real
/// basis `(e_1, …, e_n, i·e_1, …, i·e_n)`.
pub fn realify_form(g: &GMatrix, kind: FormKind) -> Result<GMatrix, ScalarError> {
    let ok = match kind {
        FormKind::Hermitian => g.is_hermitian(),
        FormKind::ComplexSymmetric => g.is_symmetric(),
    };
    if !ok {
        return Err(ScalarError::KindMismatch(kind));
    }
    let n = g.rows();
    let i = GaussianRational::i();
    // (scalar multiplier, index) for each real basis vector
    let basis: Vec<(GaussianRational, usize)> = (0..n)
        .map(|k| (GaussianRational::one(), k))
        .chain((0..n).map(|k| (i.clone(), k)))
        .collect();
    let two = GaussianRational::from_int(2);
    let mut out = GMatrix::zeros(2 * n, 2 * n);
    for (a, (sa, ka)) in basis.iter().enumerate() {
        for (b, (sb, kb)) in basis.iter().enumerate() {
            let left = match kind {
                FormKind::Hermitian => sa.conj(),
                FormKind::ComplexSymmetric => sa.clone(),
            };
            let val = &(&left * sb) * g.get(*ka, *kb);
            out.set(a, b, GaussianRational::from(val.re * two.re.clone()));
        }
    }
    Ok(out)
}
