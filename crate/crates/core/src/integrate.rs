//! Integration over spaces of structures: groupoid cardinality sums, the
//! passage from spin and spin-statistics data to oriented Frobenius algebras,
//! and the integrations over orientations and over `Spec ℂ` /
//! `Spec SuperVect_ℂ` at the level of circle pairings.
//!
//! Conventions fixed here:
//!
//! * `spins_to_or` builds `B = A ⊕ A*` (basis `e_i` then `e^p`) with
//!   `tr(a ⊕ α) = α(1)`. For Hermitian data the star is
//!   `(a ⊕ α)* = a* ⊕ λ·α*` with `λ = 1` for real `φ` and `λ = i` for
//!   imaginary `φ`; in the imaginary case the trace is scaled by `1 − i` so
//!   that it stays real under the star.
//! * `spinstats_to_or` builds `Forget(A ⋊ ℤ/2)` (basis `e_i` then `e_i ε`)
//!   with trace `2·tr_A` on the `A` component and zero on the `Aε` component.
//! * `integrate_supervect` builds the same algebra for a symmetric Frobenius
//!   superalgebra but places the trace `2·tr_A` on the `Aε` component.
//! * In both cases the star on `Forget(A ⋊ ℤ/2)` is `a ↦ a‡`,
//!   `aε ↦ ε·a‡`, where `‡` is the ungraded form of the star on `A`
//!   (see [`StarStructure::to_ungraded`]).

use thiserror::Error;

use crate::eval::{HilbertData, RealityTag};
use crate::frobenius::{validate_frobenius, FrobeniusAlgebra, Symmetry};
use crate::report::Report;
use crate::scalars::{realify_form, FormKind, GMatrix, GaussianRational, ScalarError, Vector};
use crate::superalg::{
    direct_sum, opposite, parity_semidirect, underlying_algebra, AlgebraError, StarFlavor, StarStructure,
    SuperAlgebra, TraceFunctional,
};
use crate::theories::{
    dual_left, dual_right, dual_star_matrix, validate_spin, validate_spinstat, Reality, SpinStatTrivialization,
    SpinTrivialization,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegrateError {
    #[error("invalid trivialization: {0}")]
    InvalidTrivialization(Report),
    #[error("invalid Frobenius structure: {0}")]
    InvalidFrobenius(Report),
    #[error("pairing tagged {0} has no reality structure for this integration")]
    UntaggedReality(RealityTag),
    #[error("pairing tagged {0} is not accepted here")]
    KindMismatch(RealityTag),
    #[error("automorphism group order must be at least 1")]
    ZeroOrder,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidObject {
    pub label: String,
    pub order: u64,
    pub weight: GaussianRational,
}

/// A finite groupoid given by its isomorphism classes, the order of each
/// automorphism group, and a scalar function on objects.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<GroupoidObject>,
}

impl FiniteGroupoid {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, label: impl Into<String>, order: u64, weight: GaussianRational) -> Result<(), IntegrateError> {
        if order == 0 {
            return Err(IntegrateError::ZeroOrder);
        }
        self.objects.push(GroupoidObject {
            label: label.into(),
            order,
            weight,
        });
        Ok(())
    }

    pub fn objects(&self) -> &[GroupoidObject] {
        &self.objects
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut objects = self.objects.clone();
        objects.extend(other.objects.iter().cloned());
        Self { objects }
    }

    /// Spin structures on the circle: two classes, each with automorphism
    /// group `ℤ/2`, weighted by 1.
    pub fn spin_circle() -> Self {
        let mut g = Self::new();
        for label in ["trivial", "nontrivial"] {
            g.push(label, 2, GaussianRational::one()).expect("order 2");
        }
        g
    }
}

/// `Σ_x weight(x) / |Aut(x)|`.
pub fn groupoid_integral(g: &FiniteGroupoid) -> GaussianRational {
    g.objects
        .iter()
        .map(|o| {
            let inv = GaussianRational::from_ratio(1, o.order as i64);
            &o.weight * &inv
        })
        .sum()
}

/// `B = A ⊕ A*` from an ambient table of `φ(e^p⊗e^q)` values, without
/// checking `φ`. The trace is `scale·α(1)`.
pub fn spins_to_or_unchecked(
    a: &SuperAlgebra,
    phi_ambient: &[Vector],
    scale: &GaussianRational,
) -> Result<FrobeniusAlgebra, AlgebraError> {
    let n = a.dim();
    if phi_ambient.len() != n * n {
        return Err(AlgebraError::Shape {
            field: "phi",
            expected: n * n,
            found: phi_ambient.len(),
        });
    }
    let basis = |k: usize| {
        let mut v = vec![GaussianRational::zero(); n];
        v[k] = GaussianRational::one();
        v
    };
    let shift = |v: Vector, offset: usize| -> Vec<(usize, GaussianRational)> {
        v.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k + offset, x))
            .collect()
    };
    let parity = a.parities().iter().chain(a.parities()).copied().collect();
    let unit = a
        .unit()
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(GaussianRational::zero(), n))
        .collect();
    let b = SuperAlgebra::from_products(parity, unit, |i, j| match (i < n, j < n) {
        (true, true) => a.product(i, j).clone(),
        (true, false) => shift(dual_left(a, i, &basis(j - n)), n),
        (false, true) => shift(dual_right(a, j, &basis(i - n)), n),
        (false, false) => shift(phi_ambient[(i - n) * n + (j - n)].clone(), 0),
    })?;
    let trace: Vector = std::iter::repeat_n(GaussianRational::zero(), n)
        .chain(a.unit().iter().map(|u| u * scale))
        .collect();
    Ok(FrobeniusAlgebra::new(b, TraceFunctional::new(trace), Symmetry::SymmetricSuper).expect("trace length"))
}

/// `∫_{Spins/Or}` of a spin theory: `B = A ⊕ A*`, `tr(a ⊕ α) = α(1)`.
pub fn spins_to_or(t: &SpinTrivialization) -> Result<FrobeniusAlgebra, IntegrateError> {
    let report = validate_spin(t, None, Reality::None);
    if !report.is_valid() {
        return Err(IntegrateError::InvalidTrivialization(report));
    }
    Ok(spins_to_or_unchecked(t.algebra(), &t.ambient_values(), &GaussianRational::one())?)
}

/// Hermitian version of [`spins_to_or`]: also returns the star on `B`.
pub fn spins_to_or_hermitian(
    t: &SpinTrivialization,
    star: &StarStructure,
    reality: Reality,
) -> Result<(FrobeniusAlgebra, StarStructure), IntegrateError> {
    let report = validate_spin(t, Some(star), reality);
    if !report.is_valid() {
        return Err(IntegrateError::InvalidTrivialization(report));
    }
    let (lambda, scale) = match reality {
        Reality::Imaginary => (GaussianRational::i(), GaussianRational::from_parts((1, 1), (-1, 1))),
        _ => (GaussianRational::one(), GaussianRational::one()),
    };
    let a = t.algebra();
    let b = spins_to_or_unchecked(a, &t.ambient_values(), &scale)?;
    let n = a.dim();
    let dual = dual_star_matrix(a, star).scale(&lambda);
    let zero = GMatrix::zeros(n, n);
    let m = GMatrix::block2(star.matrix(), &zero, &zero, &dual);
    Ok((b, StarStructure::new(m, StarFlavor::Ordinary)))
}

/// Star on `Forget(A ⋊ ℤ/2)`: `a ↦ a‡`, `aε ↦ ε·a‡ = (−1)^{|a|} a‡ ε`.
fn semidirect_star(a: &SuperAlgebra, star: &StarStructure) -> StarStructure {
    let u = star.to_ungraded(a);
    let n = a.dim();
    let signs: Vec<GaussianRational> = (0..n).map(|k| GaussianRational::sign(a.parity(k) as usize)).collect();
    let twisted = GMatrix::diagonal(&signs).mul(u.matrix());
    let zero = GMatrix::zeros(n, n);
    StarStructure::new(GMatrix::block2(u.matrix(), &zero, &zero, &twisted), StarFlavor::Ordinary)
}

/// `Forget(A ⋊ ℤ/2)` with `trace` placed on the `A` block (`on_epsilon =
/// false`) or the `Aε` block.
fn semidirect_frobenius(a: &SuperAlgebra, trace: &[GaussianRational], on_epsilon: bool) -> Result<FrobeniusAlgebra, AlgebraError> {
    let b = underlying_algebra(&parity_semidirect(a)?);
    let two = GaussianRational::from_int(2);
    let doubled = trace.iter().map(|t| t * &two);
    let zeros = std::iter::repeat_n(GaussianRational::zero(), a.dim());
    let covector: Vector = if on_epsilon {
        zeros.chain(doubled).collect()
    } else {
        doubled.chain(zeros).collect()
    };
    Ok(FrobeniusAlgebra::new(b, TraceFunctional::new(covector), Symmetry::SymmetricSuper).expect("trace length"))
}

/// `∫_{Spins/Or}` of a spin-statistics theory: `Forget(A ⋊ ℤ/2)` with trace
/// `2·tr_A` on the `A` block.
pub fn spinstats_to_or(t: &SpinStatTrivialization) -> Result<FrobeniusAlgebra, IntegrateError> {
    let report = validate_spinstat(t, None, Reality::None);
    if !report.is_valid() {
        return Err(IntegrateError::InvalidTrivialization(report));
    }
    let trace = t.induced_trace().expect("validated invertible");
    Ok(semidirect_frobenius(t.algebra(), &trace, false)?)
}

/// Hermitian version of [`spinstats_to_or`]: also returns the star on the
/// integrated algebra.
pub fn spinstats_to_or_hermitian(
    t: &SpinStatTrivialization,
    star: &StarStructure,
    reality: Reality,
) -> Result<(FrobeniusAlgebra, StarStructure), IntegrateError> {
    let report = validate_spinstat(t, Some(star), reality);
    if !report.is_valid() {
        return Err(IntegrateError::InvalidTrivialization(report));
    }
    let trace = t.induced_trace().expect("validated invertible");
    let f = semidirect_frobenius(t.algebra(), &trace, false)?;
    Ok((f, semidirect_star(t.algebra(), star)))
}

/// Integration of a symmetric Frobenius superalgebra over `Spec SuperVect_ℂ`:
/// `Forget(A ⋊ ℤ/2)` with trace `2·tr_A` on the `Aε` block, plus the
/// induced star when one is given.
pub fn integrate_supervect(
    f: &FrobeniusAlgebra,
    star: Option<&StarStructure>,
) -> Result<(FrobeniusAlgebra, Option<StarStructure>), IntegrateError> {
    let report = validate_frobenius(f);
    if !report.is_valid() {
        return Err(IntegrateError::InvalidFrobenius(report));
    }
    let b = semidirect_frobenius(f.algebra(), f.trace().covector(), true)?;
    Ok((b, star.map(|s| semidirect_star(f.algebra(), s))))
}

/// `∫_Or` on circle pairings: an oriented space `V` becomes `V ⊕ V*` with the
/// hyperbolic pairing `[[0, I], [I, 0]]`; a Hermitian space becomes its
/// underlying real space with `2·Re` of the pairing.
pub fn integrate_or(h: &HilbertData) -> Result<HilbertData, IntegrateError> {
    match h.tag() {
        RealityTag::Oriented => {
            let d = h.dim();
            let id = GMatrix::identity(d);
            let zero = GMatrix::zeros(d, d);
            let g = GMatrix::block2(&zero, &id, &id, &zero);
            Ok(HilbertData::new(g, RealityTag::RealSymmetric).expect("hyperbolic form is real symmetric"))
        }
        RealityTag::Hermitian => {
            let g = realify_form(h.gram(), FormKind::Hermitian)?;
            Ok(HilbertData::new(g, RealityTag::RealSymmetric).expect("realified form is real symmetric"))
        }
        tag => Err(IntegrateError::UntaggedReality(tag)),
    }
}

/// `∫_Or` at the algebra level: `B ⊕ B^op`.
pub fn integrate_or_algebra(b: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
    direct_sum(b, &opposite(b)?)
}

/// `∫_{Spec ℂ}` on circle pairings: `2·Re` of a complex-symmetric pairing,
/// or of a Hermitian pairing coming from a super theory.
pub fn integrate_complex(h: &HilbertData) -> Result<HilbertData, IntegrateError> {
    let kind = match h.tag() {
        RealityTag::ComplexSymmetric | RealityTag::RealSymmetric => FormKind::ComplexSymmetric,
        RealityTag::Hermitian => FormKind::Hermitian,
        tag => return Err(IntegrateError::KindMismatch(tag)),
    };
    let g = realify_form(h.gram(), kind)?;
    Ok(HilbertData::new(g, RealityTag::RealSymmetric).expect("realified form is real symmetric"))
}

/// `∫_{Spec ℂ} c = 2·Re(c)` for a closed-manifold value.
pub fn integrate_complex_scalar(c: &GaussianRational) -> GaussianRational {
    GaussianRational::from(c.re.clone() * num_rational::BigRational::from_integer(2.into()))
}

#[cfg(test)]
mod tests;
