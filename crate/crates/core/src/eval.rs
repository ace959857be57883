//! Circle state spaces, closed-surface values and the reflection-positivity
//! verdict.
//!
//! The circle state space of a symmetric Frobenius algebra `B` is its
//! cocenter `B/[B,B]`, coordinatized by the echelon basis `z_p` of the center
//! (which maps isomorphically onto the cocenter for the semisimple inputs
//! theories carry). The pairing is `⟨z_p, z_q⟩ = tr(z_p z_q)`, or
//! `tr(z_p* z_q)` when a star is supplied.
//!
//! Reflection positivity is decided on the circle alone: every closed
//! 1-manifold is a disjoint union of circles and the Kronecker product of
//! positive-definite forms is positive-definite.

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::frobenius::{handle_element, validate_frobenius, FrobeniusAlgebra, FrobeniusError, Symmetry};
use crate::integrate::{
    integrate_complex, integrate_or, integrate_supervect, spins_to_or, spins_to_or_hermitian, spinstats_to_or,
    spinstats_to_or_hermitian, IntegrateError,
};
use crate::report::Report;
use crate::scalars::{
    congruence_diagonalize, is_positive_definite_hermitian, GMatrix, GaussianRational, ScalarError, Vector,
};
use crate::superalg::{center, cocenter, AlgebraError, StarStructure, SuperAlgebra, TraceFunctional};
use crate::theories::{Kind, Payload, TheorySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealityTag {
    /// A real symmetric pairing.
    RealSymmetric,
    /// A Hermitian sesquilinear pairing `v^†·G·w`.
    Hermitian,
    /// A complex-bilinear symmetric pairing.
    ComplexSymmetric,
    /// A complex space with no reality structure, paired with its dual.
    Oriented,
}

impl fmt::Display for RealityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealityTag::RealSymmetric => "real-symmetric",
            RealityTag::Hermitian => "hermitian",
            RealityTag::ComplexSymmetric => "complex-symmetric",
            RealityTag::Oriented => "oriented-pair",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("invalid Frobenius structure: {0}")]
    InvalidFrobenius(Report),
    #[error("algebra is not purely even")]
    NotEven,
    #[error("pairing is not well defined on the cocenter: {0}")]
    IllDefinedOnCocenter(String),
    #[error("Gram matrix does not match tag {0}")]
    KindMismatch(RealityTag),
    #[error("route {route} is not available for {kind} theories")]
    RouteUnavailable { kind: Kind, route: RouteChoice },
    #[error(transparent)]
    Integrate(#[from] IntegrateError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl From<FrobeniusError> for EvalError {
    fn from(e: FrobeniusError) -> Self {
        match e {
            FrobeniusError::NotEven => EvalError::NotEven,
            FrobeniusError::InvalidFrobenius(r) => EvalError::InvalidFrobenius(r),
            FrobeniusError::Shape { expected, found } => {
                let mut r = Report::new();
                r.push(crate::report::Rule::Shape, vec![expected, found], "trace length");
                EvalError::InvalidFrobenius(r)
            }
        }
    }
}

/// A state space with its pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    gram: GMatrix,
    tag: RealityTag,
    parity: Option<Vec<u8>>,
}

impl HilbertData {
    pub fn new(gram: GMatrix, tag: RealityTag) -> Result<Self, EvalError> {
        let ok = gram.is_square()
            && match tag {
                RealityTag::RealSymmetric => gram.is_real() && gram.is_symmetric(),
                RealityTag::Hermitian => gram.is_hermitian(),
                RealityTag::ComplexSymmetric => gram.is_symmetric(),
                RealityTag::Oriented => true,
            };
        if !ok {
            return Err(EvalError::KindMismatch(tag));
        }
        Ok(Self { gram, tag, parity: None })
    }

    pub fn with_parity(mut self, parity: Vec<u8>) -> Self {
        self.parity = Some(parity);
        self
    }

    /// The same space with a different tag (shape checks reapplied).
    pub fn retag(&self, tag: RealityTag) -> Result<Self, EvalError> {
        let mut h = Self::new(self.gram.clone(), tag)?;
        h.parity = self.parity.clone();
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &GMatrix {
        &self.gram
    }

    pub fn tag(&self) -> RealityTag {
        self.tag
    }

    pub fn parity(&self) -> Option<&[u8]> {
        self.parity.as_deref()
    }
}

/// Coordinates of `x` in the linearly independent family `basis`.
fn coordinates(basis: &[Vector], x: &[GaussianRational]) -> Option<Vector> {
    if basis.is_empty() {
        return x.iter().all(GaussianRational::is_zero).then(Vec::new);
    }
    GMatrix::from_columns(x.len(), basis).solve(x)
}

fn checked_even(f: &FrobeniusAlgebra) -> Result<(), EvalError> {
    let report = validate_frobenius(f);
    if !report.is_valid() {
        return Err(EvalError::InvalidFrobenius(report));
    }
    if !f.algebra().is_even() {
        return Err(EvalError::NotEven);
    }
    Ok(())
}

/// The circle state space of an even Frobenius algebra, with the pairing
/// `tr(z_p z_q)` (tagged real-symmetric when real, complex-symmetric
/// otherwise) or `tr(z_p* z_q)` (tagged Hermitian) when a star is supplied.
pub fn circle_state_space(f: &FrobeniusAlgebra, star: Option<&StarStructure>) -> Result<HilbertData, EvalError> {
    checked_even(f)?;
    let a = f.algebra();
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            let ij = f.trace().eval_sparse(a.product(i, j));
            let ji = f.trace().eval_sparse(a.product(j, i));
            if ij != ji {
                return Err(EvalError::IllDefinedOnCocenter(format!(
                    "tr(e{i}e{j}) = {ij} but tr(e{j}e{i}) = {ji}"
                )));
            }
        }
    }
    let z = center(a)?;
    let q = cocenter(a)?;
    let images: Vec<Vector> = z.iter().map(|v| q.project(v)).collect();
    if z.len() != q.dim() || GMatrix::from_columns(q.dim(), &images).rank() != z.len() {
        return Err(EvalError::IllDefinedOnCocenter(format!(
            "center (dim {}) does not map isomorphically onto the cocenter (dim {})",
            z.len(),
            q.dim()
        )));
    }
    let k = z.len();
    let mut g = GMatrix::zeros(k, k);
    let left: Vec<Vector> = match star {
        Some(s) => z.iter().map(|v| s.apply(v)).collect(),
        None => z.clone(),
    };
    for p in 0..k {
        for r in 0..k {
            g.set(p, r, f.trace().eval(&a.mul(&left[p], &z[r])));
        }
    }
    let tag = match star {
        Some(_) => RealityTag::Hermitian,
        None if g.is_real() => RealityTag::RealSymmetric,
        None => RealityTag::ComplexSymmetric,
    };
    HilbertData::new(g, tag)
}

/// Closed genus-`g` surface value with a flag telling whether the input was
/// replaced by its center first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusValue {
    pub value: GaussianRational,
    pub restricted_to_center: bool,
}

/// The center of `f` as a commutative Frobenius algebra with the restricted
/// trace, in the echelon center basis.
pub fn center_frobenius(f: &FrobeniusAlgebra) -> Result<FrobeniusAlgebra, EvalError> {
    let a = f.algebra();
    let z = center(a)?;
    let k = z.len();
    let mut table = Vec::with_capacity(k * k);
    for p in 0..k {
        for r in 0..k {
            let prod = a.mul(&z[p], &z[r]);
            let c = coordinates(&z, &prod).ok_or_else(|| {
                EvalError::IllDefinedOnCocenter("product of central elements left the center".into())
            })?;
            table.push(c);
        }
    }
    let unit = coordinates(&z, a.unit()).expect("unit is central");
    let algebra = SuperAlgebra::from_products(vec![0; k], unit, |p, r| {
        table[p * k + r].iter().cloned().enumerate().collect()
    })?;
    let trace = TraceFunctional::new(z.iter().map(|v| f.trace().eval(v)).collect());
    Ok(FrobeniusAlgebra::new(algebra, trace, Symmetry::SymmetricSuper)?)
}

/// `ε(h^g)` with `h` the handle element; noncommutative inputs are first
/// replaced by their center with the restricted trace.
pub fn partition_genus_detailed(f: &FrobeniusAlgebra, genus: u32) -> Result<GenusValue, EvalError> {
    checked_even(f)?;
    let (target, restricted) = if f.algebra().is_commutative() {
        (f.clone(), false)
    } else {
        (center_frobenius(f)?, true)
    };
    let h = handle_element(&target)?;
    let a = target.algebra();
    let mut power = a.unit().to_vec();
    for _ in 0..genus {
        power = a.mul(&power, &h);
    }
    Ok(GenusValue {
        value: target.trace().eval(&power),
        restricted_to_center: restricted,
    })
}

pub fn partition_genus(f: &FrobeniusAlgebra, genus: u32) -> Result<GaussianRational, EvalError> {
    Ok(partition_genus_detailed(f, genus)?.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Positive,
    NotPositive,
    VacuousZero,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Positive => "positive",
            Verdict::NotPositive => "not-positive",
            Verdict::VacuousZero => "vacuous-zero",
        })
    }
}

/// Route selection for the reflection-positivity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RouteChoice {
    /// The route determined by the theory's kind.
    #[default]
    Auto,
    /// Forget any star and integrate over orientations.
    Oriented,
    /// Use the star and the Hermitian pairing.
    Hermitian,
}

impl fmt::Display for RouteChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RouteChoice::Auto => "auto",
            RouteChoice::Oriented => "oriented",
            RouteChoice::Hermitian => "hermitian",
        })
    }
}

/// Outcome of a reflection-positivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpReport {
    pub kind: Kind,
    /// Name of the route taken, e.g. `spins-hermitian`.
    pub route: String,
    /// Dimension of the oriented Frobenius algebra reached before the circle
    /// is evaluated.
    pub integrated_dim: usize,
    /// Circle pairing before the final passage to a real form.
    pub circle: HilbertData,
    /// Signature `(positive, negative, zero)` of the circle pairing when it
    /// is Hermitian or real symmetric.
    pub circle_signature: Option<(usize, usize, usize)>,
    /// The real symmetric pairing whose definiteness decides the verdict.
    pub real_gram: GMatrix,
    pub signature: (usize, usize, usize),
    pub verdict: Verdict,
    /// A vector with non-positive norm in the real space when the verdict is
    /// not positive.
    pub witness: Option<Vector>,
}

enum Final {
    /// Apply `∫_Or` to the circle pairing.
    Or(RealityTag),
    /// Apply `∫_{Spec ℂ}`.
    Complex,
    /// The pairing is already real.
    Real,
}

pub fn is_reflection_positive(t: &TheorySpec) -> Result<RpReport, EvalError> {
    is_reflection_positive_with(t, RouteChoice::Auto)
}

/// The oriented Frobenius algebra a theory integrates to, with the star it
/// carries when the Hermitian route is taken.
#[derive(Debug, Clone)]
pub struct Integrated {
    /// `spins`, `spinstats`, `supervect`, or empty for Frobenius kinds
    /// evaluated directly.
    pub stage: &'static str,
    pub frobenius: FrobeniusAlgebra,
    pub star: Option<StarStructure>,
    pub hermitian: bool,
}

/// Runs the integration stage of the route chosen for `t`.
pub fn integrate_theory(t: &TheorySpec, choice: RouteChoice) -> Result<Integrated, EvalError> {
    let kind = t.kind();
    let hermitian = match choice {
        RouteChoice::Auto => t.star().is_some(),
        RouteChoice::Oriented => false,
        RouteChoice::Hermitian => {
            if t.star().is_none() {
                return Err(EvalError::RouteUnavailable { kind, route: choice });
            }
            true
        }
    };
    let (stage, frobenius, star) = match t.payload() {
        Payload::Frobenius { frobenius, star } => match kind {
            Kind::HermitianSuper | Kind::TwistedHermitianSuper => {
                let (b, s) = integrate_supervect(frobenius, star.as_ref().filter(|_| hermitian))?;
                ("supervect", b, s)
            }
            _ => ("", frobenius.clone(), star.clone().filter(|_| hermitian)),
        },
        Payload::Spin {
            trivialization,
            star,
            reality,
        } => match star.as_ref().filter(|_| hermitian) {
            Some(s) => {
                let (b, bs) = spins_to_or_hermitian(trivialization, s, *reality)?;
                ("spins", b, Some(bs))
            }
            None => ("spins", spins_to_or(trivialization)?, None),
        },
        Payload::SpinStat {
            trivialization,
            star,
            reality,
        } => match star.as_ref().filter(|_| hermitian) {
            Some(s) => {
                let (b, bs) = spinstats_to_or_hermitian(trivialization, s, *reality)?;
                ("spinstats", b, Some(bs))
            }
            None => ("spinstats", spinstats_to_or(trivialization)?, None),
        },
    };
    Ok(Integrated {
        stage,
        frobenius,
        star,
        hermitian,
    })
}

pub fn is_reflection_positive_with(t: &TheorySpec, choice: RouteChoice) -> Result<RpReport, EvalError> {
    let kind = t.kind();
    let Integrated {
        stage: prefix,
        frobenius: frob,
        star,
        hermitian,
    } = integrate_theory(t, choice)?;
    let circle = circle_state_space(&frob, star.as_ref())?;
    let (last, finish) = match (kind, hermitian, choice) {
        (Kind::Complex, _, RouteChoice::Auto) => ("complex", Final::Complex),
        (Kind::Unoriented, _, RouteChoice::Auto) => ("real", Final::Real),
        (Kind::HermitianSuper | Kind::TwistedHermitianSuper, true, _) => ("hermitian", Final::Complex),
        (_, true, _) => ("hermitian", Final::Or(RealityTag::Hermitian)),
        (_, false, _) => ("oriented", Final::Or(RealityTag::Oriented)),
    };
    let route = if prefix.is_empty() {
        last.to_string()
    } else {
        format!("{prefix}-{last}")
    };
    let real = match finish {
        Final::Or(tag) => integrate_or(&circle.retag(tag)?)?,
        Final::Complex => integrate_complex(&circle)?,
        Final::Real => circle.retag(RealityTag::RealSymmetric)?,
    };
    let circle_signature = match circle.tag() {
        RealityTag::Hermitian | RealityTag::RealSymmetric => Some(congruence_diagonalize(circle.gram())?.signature()),
        _ => None,
    };
    let real_gram = real.gram().clone();
    let congruence = congruence_diagonalize(&real_gram)?;
    let signature = congruence.signature();
    let (verdict, witness) = if t.is_zero() {
        (Verdict::VacuousZero, None)
    } else if is_positive_definite_hermitian(&real_gram)? {
        (Verdict::Positive, None)
    } else {
        (Verdict::NotPositive, congruence.non_positive_vector())
    };
    Ok(RpReport {
        kind,
        route,
        integrated_dim: frob.algebra().dim(),
        circle,
        circle_signature,
        real_gram,
        signature,
        verdict,
        witness,
    })
}

/// `v^T·G·v` for a real Gram matrix and real vector, as a rational.
pub fn real_norm(g: &GMatrix, v: &[GaussianRational]) -> BigRational {
    crate::scalars::sesquilinear(g, v, v).re
}
