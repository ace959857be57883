//! Theory descriptors and the trivialization data that classify spin and
//! spin-statistics theories.
//!
//! Conventions on the dual `A*` (basis `e^p` dual to `e_p`):
//!
//! * right action `(α·b)(y) = α(b·y)`;
//! * left action `(a·α)(y) = (−1)^{|a|} α(y·a)` for homogeneous `a` (the
//!   Koszul sign of moving `a` past `α·y`; trivial on even algebras);
//! * dual star `α*(y) = σ_y·conj(α(y*))` with `σ_y = (−1)^{|y|}` for an
//!   ordinary star and `σ_y = 1` for a twisted one. With this choice a
//!   spin-statistics trivialization is real exactly when its induced trace is.
//!
//! `A*⊗_A A*` is modelled as the quotient of `A*⊗A*` (basis `e^p⊗e^q` at index
//! `p·dim + q`) by the span of `(α·a)⊗β − α⊗(a·β)`. Associativity of a spin
//! trivialization `φ` is the identity `φ(α⊗β)·γ = α·φ(β⊗γ)` in `A*`, checked
//! on all ambient basis triples; this is equivalent to checking it on the
//! triple quotient because both sides are balanced in each slot.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::frobenius::{validate_frobenius, FrobeniusAlgebra, Symmetry};
use crate::report::{Report, Rule};
use crate::scalars::{GMatrix, GaussianRational, RowEchelon, Vector};
use crate::superalg::{
    is_semisimple, validate_star, AlgebraError, StarFlavor, StarStructure, SuperAlgebra,
    TraceFunctional,
};

/// `e_i·α` in the coordinates of `A*`.
pub fn dual_left(a: &SuperAlgebra, i: usize, alpha: &[GaussianRational]) -> Vector {
    let sign = GaussianRational::sign(a.parity(i) as usize);
    let mut out = vec![GaussianRational::zero(); a.dim()];
    for (m, slot) in out.iter_mut().enumerate() {
        for (q, c) in a.product(m, i) {
            if !alpha[*q].is_zero() {
                *slot += &(&(c * &alpha[*q]) * &sign);
            }
        }
    }
    out
}

/// `α·e_j` in the coordinates of `A*`.
pub fn dual_right(a: &SuperAlgebra, j: usize, alpha: &[GaussianRational]) -> Vector {
    let mut out = vec![GaussianRational::zero(); a.dim()];
    for (m, slot) in out.iter_mut().enumerate() {
        for (q, c) in a.product(j, m) {
            if !alpha[*q].is_zero() {
                *slot += &(c * &alpha[*q]);
            }
        }
    }
    out
}

/// `x·α` for an arbitrary element `x` of `A`.
fn dual_left_elem(a: &SuperAlgebra, x: &[GaussianRational], alpha: &[GaussianRational]) -> Vector {
    let mut out = vec![GaussianRational::zero(); a.dim()];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (k, v) in dual_left(a, i, alpha).into_iter().enumerate() {
            out[k] += &(xi * &v);
        }
    }
    out
}

/// `α·y` for an arbitrary element `y` of `A`.
fn dual_right_elem(a: &SuperAlgebra, alpha: &[GaussianRational], y: &[GaussianRational]) -> Vector {
    let mut out = vec![GaussianRational::zero(); a.dim()];
    for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (k, v) in dual_right(a, j, alpha).into_iter().enumerate() {
            out[k] += &(yj * &v);
        }
    }
    out
}

/// Matrix `N` of the dual star, `α* = N·conj(α)`.
pub fn dual_star_matrix(a: &SuperAlgebra, star: &StarStructure) -> GMatrix {
    let m = star.matrix();
    let n = a.dim();
    let mut out = GMatrix::zeros(n, n);
    for r in 0..n {
        for p in 0..n {
            let mut v = m.get(p, r).conj();
            if star.flavor() == StarFlavor::Ordinary && a.parity(r) == 1 {
                v = -v;
            }
            out.set(r, p, v);
        }
    }
    out
}

fn antilinear(m: &GMatrix, x: &[GaussianRational]) -> Vector {
    let c: Vector = x.iter().map(GaussianRational::conj).collect();
    m.mul_vec(&c)
}

fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = vec![GaussianRational::zero(); n];
    v[k] = GaussianRational::one();
    v
}

/// Whether the declared reality of a trivialization is real, imaginary or
/// unconstrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reality {
    Real,
    Imaginary,
    None,
}

impl fmt::Display for Reality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reality::Real => "real",
            Reality::Imaginary => "imaginary",
            Reality::None => "none",
        })
    }
}

impl FromStr for Reality {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "real" => Ok(Reality::Real),
            "imaginary" => Ok(Reality::Imaginary),
            "none" => Ok(Reality::None),
            other => Err(format!("unknown reality {other:?}")),
        }
    }
}

/// The quotient `A*⊗_A A*` of the ambient space `A*⊗A*`.
#[derive(Debug, Clone)]
pub struct BimoduleQuotient {
    algebra: SuperAlgebra,
    relations: RowEchelon,
    representatives: Vec<usize>,
}

pub fn build_bimodule_quotient(a: &SuperAlgebra) -> Result<BimoduleQuotient, AlgebraError> {
    a.ensure_valid()?;
    let n = a.dim();
    let mut ech = RowEchelon::new(n * n);
    for p in 0..n {
        for b in 0..n {
            let left = dual_right(a, b, &unit_vector(n, p));
            for q in 0..n {
                let right = dual_left(a, b, &unit_vector(n, q));
                let mut rel = vec![GaussianRational::zero(); n * n];
                for (m, c) in left.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    rel[m * n + q] += c;
                }
                for (m, c) in right.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    rel[p * n + m] -= c;
                }
                ech.insert(&rel);
            }
        }
    }
    let pivots = ech.pivots();
    let representatives = (0..n * n).filter(|c| !pivots.contains(c)).collect();
    Ok(BimoduleQuotient {
        algebra: a.clone(),
        relations: ech,
        representatives,
    })
}

impl BimoduleQuotient {
    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.cols()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    /// Quotient basis as pairs `(p, q)`: the class of `e^p⊗e^q`.
    pub fn representatives(&self) -> Vec<(usize, usize)> {
        let n = self.algebra.dim();
        self.representatives.iter().map(|&r| (r / n, r % n)).collect()
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[GaussianRational]) -> Vector {
        let r = self.relations.reduce(v);
        self.representatives.iter().map(|&c| r[c].clone()).collect()
    }

    /// Quotient coordinates of `α⊗β`.
    pub fn project_tensor(&self, alpha: &[GaussianRational], beta: &[GaussianRational]) -> Vector {
        let n = self.algebra.dim();
        let mut v = vec![GaussianRational::zero(); n * n];
        for (p, x) in alpha.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (q, y) in beta.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                v[p * n + q] = x * y;
            }
        }
        self.project(&v)
    }

    /// Matrix of the projection, quotient dim × ambient dim.
    pub fn projection_matrix(&self) -> GMatrix {
        let n = self.ambient_dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.project(&unit_vector(n, j))).collect();
        GMatrix::from_columns(self.dim(), &cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("kind {kind} expects {expected}")]
    KindPayloadMismatch { kind: Kind, expected: &'static str },
    #[error("{field}: expected {expected}, found {found}")]
    Shape {
        field: &'static str,
        expected: String,
        found: String,
    },
    #[error("validation failed: {0}")]
    ValidationFailed(Report),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A spin trivialization `φ : A*⊗_A A* → A`, stored as a matrix from
/// quotient coordinates to `A`.
#[derive(Debug, Clone)]
pub struct SpinTrivialization {
    quotient: BimoduleQuotient,
    phi: GMatrix,
}

impl SpinTrivialization {
    pub fn new(quotient: BimoduleQuotient, phi: GMatrix) -> Result<Self, TheoryError> {
        let n = quotient.algebra().dim();
        if phi.rows() != n || phi.cols() != quotient.dim() {
            return Err(TheoryError::Shape {
                field: "phi",
                expected: format!("{n}x{}", quotient.dim()),
                found: format!("{}x{}", phi.rows(), phi.cols()),
            });
        }
        Ok(Self { quotient, phi })
    }

    /// `φ(α⊗β) = s·ι(α)·ι(β)`, where `ι : A* → A` is inverse to
    /// `x ↦ τ(x·−)` for a nondegenerate symmetric trace `τ`.
    pub fn from_trace(
        a: &SuperAlgebra,
        trace: &[GaussianRational],
        s: &GaussianRational,
    ) -> Result<Self, TheoryError> {
        let f = FrobeniusAlgebra::new(a.clone(), TraceFunctional::new(trace.to_vec()), Symmetry::SymmetricSuper)
            .map_err(|e| TheoryError::Shape {
                field: "trace",
                expected: a.dim().to_string(),
                found: e.to_string(),
            })?;
        let iota = f
            .gram()
            .transpose()
            .inverse()
            .ok_or_else(|| {
                let mut r = Report::new();
                r.push(Rule::Degenerate, Vec::new(), "trace pairing is singular");
                TheoryError::ValidationFailed(r)
            })?;
        let quotient = build_bimodule_quotient(a)?;
        let cols: Vec<Vector> = quotient
            .representatives()
            .into_iter()
            .map(|(p, q)| {
                a.mul(&iota.col(p), &iota.col(q))
                    .into_iter()
                    .map(|x| &x * s)
                    .collect()
            })
            .collect();
        let phi = GMatrix::from_columns(a.dim(), &cols);
        Self::new(quotient, phi)
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        self.quotient.algebra()
    }

    pub fn quotient(&self) -> &BimoduleQuotient {
        &self.quotient
    }

    pub fn phi(&self) -> &GMatrix {
        &self.phi
    }

    /// `φ(e^p⊗e^q)` for every ambient index `p·dim + q`.
    pub fn ambient_values(&self) -> Vec<Vector> {
        let n = self.algebra().dim();
        (0..n * n)
            .map(|r| self.phi.mul_vec(&self.quotient.project(&unit_vector(n * n, r))))
            .collect()
    }
}

/// Checks invertibility, the bimodule property, associativity and, when a
/// star is supplied, the declared reality of `φ`.
pub fn validate_spin(t: &SpinTrivialization, star: Option<&StarStructure>, reality: Reality) -> Report {
    let a = t.algebra();
    let mut report = a.validation().clone();
    if !report.is_valid() {
        return report;
    }
    let n = a.dim();
    let q = t.quotient();
    if !a.is_even() {
        report.push(Rule::NotEven, Vec::new(), "spin data requires a purely even algebra");
        return report;
    }
    if q.dim() != n || t.phi().rank() != n {
        report.push(
            Rule::NotInvertible,
            Vec::new(),
            format!("φ has rank {} from a {}-dimensional quotient to a {n}-dimensional algebra", t.phi().rank(), q.dim()),
        );
    }
    let reps = q.representatives();
    for (r, &(p, qq)) in reps.iter().enumerate() {
        let value = t.phi().col(r);
        for b in 0..n {
            let eb = a.basis_vector(b);
            let left_in = q.project_tensor(&dual_left(a, b, &unit_vector(n, p)), &unit_vector(n, qq));
            if t.phi().mul_vec(&left_in) != a.mul(&eb, &value) {
                report.push(Rule::Bimodule, vec![b, p, qq], format!("φ(e{b}·[e^{p}⊗e^{qq}]) ≠ e{b}·φ(…)"));
            }
            let right_in = q.project_tensor(&unit_vector(n, p), &dual_right(a, b, &unit_vector(n, qq)));
            if t.phi().mul_vec(&right_in) != a.mul(&value, &eb) {
                report.push(Rule::Bimodule, vec![p, qq, b], format!("φ([e^{p}⊗e^{qq}]·e{b}) ≠ φ(…)·e{b}"));
            }
        }
    }
    let values = t.ambient_values();
    for p in 0..n {
        for qq in 0..n {
            for r in 0..n {
                let lhs = dual_left_elem(a, &values[p * n + qq], &unit_vector(n, r));
                let rhs = dual_right_elem(a, &unit_vector(n, p), &values[qq * n + r]);
                if lhs != rhs {
                    report.push(
                        Rule::PhiAssociativity,
                        vec![p, qq, r],
                        format!("φ(e^{p}⊗e^{qq})·e^{r} ≠ e^{p}·φ(e^{qq}⊗e^{r})"),
                    );
                }
            }
        }
    }
    if let Some(s) = star {
        report.merge(validate_star(a, s));
        if reality != Reality::None && validate_star(a, s).is_valid() {
            let dual = dual_star_matrix(a, s);
            for p in 0..n {
                for qq in 0..n {
                    // (e^p⊗e^q)* = (e^q)*⊗(e^p)*
                    let flipped = q.project_tensor(
                        &antilinear(&dual, &unit_vector(n, qq)),
                        &antilinear(&dual, &unit_vector(n, p)),
                    );
                    let lhs = t.phi().mul_vec(&flipped);
                    let mut rhs = s.apply(&values[p * n + qq]);
                    if reality == Reality::Imaginary {
                        rhs = rhs.into_iter().map(|x| -x).collect();
                    }
                    if lhs != rhs {
                        report.push(Rule::Reality, vec![p, qq], format!("φ is not {reality} at e^{p}⊗e^{qq}"));
                    }
                }
            }
        }
    } else if reality != Reality::None {
        report.push(Rule::MissingStar, Vec::new(), format!("reality {reality} needs a star structure"));
    }
    report
}

/// A spin-statistics trivialization `Φ : A* → A` (matrix in the bases `e^p`
/// and `e_k`), twisted so that `Φ(α·b) = (−1)^{|b|} Φ(α)·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinStatTrivialization {
    algebra: SuperAlgebra,
    phi: GMatrix,
}

impl SpinStatTrivialization {
    pub fn new(algebra: SuperAlgebra, phi: GMatrix) -> Result<Self, TheoryError> {
        let n = algebra.dim();
        if phi.rows() != n || phi.cols() != n {
            return Err(TheoryError::Shape {
                field: "Phi",
                expected: format!("{n}x{n}"),
                found: format!("{}x{}", phi.rows(), phi.cols()),
            });
        }
        Ok(Self { algebra, phi })
    }

    /// The trivialization whose induced trace is `trace`:
    /// `Φ^{-1}(x) = (−1)^{|x|} tr(x·−)`, i.e. `Φ = P·(G^T)^{-1}` with `P` the
    /// parity signs and `G` the trace Gram matrix.
    pub fn from_trace(a: &SuperAlgebra, trace: &[GaussianRational]) -> Result<Self, TheoryError> {
        let f = FrobeniusAlgebra::new(a.clone(), TraceFunctional::new(trace.to_vec()), Symmetry::TwistedSymmetric)
            .map_err(|e| TheoryError::Shape {
                field: "trace",
                expected: a.dim().to_string(),
                found: e.to_string(),
            })?;
        let inv = f.gram().transpose().inverse().ok_or_else(|| {
            let mut r = Report::new();
            r.push(Rule::Degenerate, Vec::new(), "trace pairing is singular");
            TheoryError::ValidationFailed(r)
        })?;
        let signs: Vec<GaussianRational> =
            (0..a.dim()).map(|k| GaussianRational::sign(a.parity(k) as usize)).collect();
        Self::new(a.clone(), GMatrix::diagonal(&signs).mul(&inv))
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn phi(&self) -> &GMatrix {
        &self.phi
    }

    /// `tr(a) = ⟨Φ^{-1}(1), a⟩`, if `Φ` is invertible.
    pub fn induced_trace(&self) -> Option<Vector> {
        self.phi.solve(self.algebra.unit())
    }
}

pub fn validate_spinstat(t: &SpinStatTrivialization, star: Option<&StarStructure>, reality: Reality) -> Report {
    let a = t.algebra();
    let mut report = a.validation().clone();
    if !report.is_valid() {
        return report;
    }
    let n = a.dim();
    let phi = t.phi();
    let invertible = phi.rank() == n;
    if !invertible {
        report.push(Rule::NotInvertible, Vec::new(), format!("Φ has rank {}", phi.rank()));
    }
    for p in 0..n {
        for k in 0..n {
            if !phi.get(k, p).is_zero() && a.parity(k) != a.parity(p) {
                report.push(Rule::Parity, vec![p, k], format!("Φ(e^{p}) has a component along e{k}"));
            }
        }
    }
    let images: Vec<Vector> = (0..n).map(|p| phi.col(p)).collect();
    for b in 0..n {
        let eb = a.basis_vector(b);
        let sign = GaussianRational::sign(a.parity(b) as usize);
        for p in 0..n {
            let ep = unit_vector(n, p);
            if phi.mul_vec(&dual_left(a, b, &ep)) != a.mul(&eb, &images[p]) {
                report.push(Rule::Bimodule, vec![b, p], format!("Φ(e{b}·e^{p}) ≠ e{b}·Φ(e^{p})"));
            }
            let twisted: Vector = a.mul(&images[p], &eb).into_iter().map(|x| &x * &sign).collect();
            if phi.mul_vec(&dual_right(a, b, &ep)) != twisted {
                report.push(
                    Rule::Bimodule,
                    vec![p, b],
                    format!("Φ(e^{p}·e{b}) ≠ (−1)^|e{b}| Φ(e^{p})·e{b}"),
                );
            }
        }
    }
    if invertible {
        let trace = t.induced_trace().expect("invertible");
        let f = FrobeniusAlgebra::new(a.clone(), TraceFunctional::new(trace), Symmetry::TwistedSymmetric)
            .expect("trace length matches");
        let fr = validate_frobenius(&f);
        report.merge(fr);
    }
    if let Some(s) = star {
        let sr = validate_star(a, s);
        let star_ok = sr.is_valid();
        report.merge(sr);
        if reality != Reality::None && star_ok {
            let dual = dual_star_matrix(a, s);
            for (p, image) in images.iter().enumerate() {
                let lhs = phi.mul_vec(&antilinear(&dual, &unit_vector(n, p)));
                let mut rhs = s.apply(image);
                if reality == Reality::Imaginary {
                    rhs = rhs.into_iter().map(|x| -x).collect();
                }
                if lhs != rhs {
                    report.push(Rule::Reality, vec![p], format!("Φ is not {reality} at e^{p}"));
                }
            }
        }
    } else if reality != Reality::None {
        report.push(Rule::MissingStar, Vec::new(), format!("reality {reality} needs a star structure"));
    }
    report
}

/// The structure classes a theory can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Unoriented,
    Oriented,
    Complex,
    Hermitian,
    OrientedSpin,
    HermitianSpin,
    TwistedHermitianSpin,
    HermitianSuper,
    TwistedHermitianSuper,
    RealSpinStatistics,
    HermitianSpinStatistics,
    TwistedHermitianSpinStatistics,
}

impl Kind {
    pub const ALL: [Kind; 12] = [
        Kind::Unoriented,
        Kind::Oriented,
        Kind::Complex,
        Kind::Hermitian,
        Kind::OrientedSpin,
        Kind::HermitianSpin,
        Kind::TwistedHermitianSpin,
        Kind::HermitianSuper,
        Kind::TwistedHermitianSuper,
        Kind::RealSpinStatistics,
        Kind::HermitianSpinStatistics,
        Kind::TwistedHermitianSpinStatistics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Unoriented => "unoriented",
            Kind::Oriented => "oriented",
            Kind::Complex => "complex",
            Kind::Hermitian => "hermitian",
            Kind::OrientedSpin => "oriented-spin",
            Kind::HermitianSpin => "hermitian-spin",
            Kind::TwistedHermitianSpin => "twisted-hermitian-spin",
            Kind::HermitianSuper => "hermitian-super",
            Kind::TwistedHermitianSuper => "twisted-hermitian-super",
            Kind::RealSpinStatistics => "real-spin-statistics",
            Kind::HermitianSpinStatistics => "hermitian-spin-statistics",
            Kind::TwistedHermitianSpinStatistics => "twisted-hermitian-spin-statistics",
        }
    }

    /// Whether the kind is one of the étale-locally-spin classes.
    pub fn is_etale_spin(self) -> bool {
        !matches!(self, Kind::Unoriented | Kind::Oriented | Kind::Complex | Kind::Hermitian)
    }

    fn payload_name(self) -> &'static str {
        match self {
            Kind::OrientedSpin | Kind::HermitianSpin | Kind::TwistedHermitianSpin => "a spin trivialization phi",
            Kind::RealSpinStatistics | Kind::HermitianSpinStatistics | Kind::TwistedHermitianSpinStatistics => {
                "a spin-statistics trivialization Phi"
            }
            _ => "a Frobenius trace",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind {s:?}"))
    }
}

#[derive(Debug, Clone)]
pub enum Payload {
    Frobenius {
        frobenius: FrobeniusAlgebra,
        star: Option<StarStructure>,
    },
    Spin {
        trivialization: SpinTrivialization,
        star: Option<StarStructure>,
        reality: Reality,
    },
    SpinStat {
        trivialization: SpinStatTrivialization,
        star: Option<StarStructure>,
        reality: Reality,
    },
}

impl Payload {
    pub fn algebra(&self) -> &SuperAlgebra {
        match self {
            Payload::Frobenius { frobenius, .. } => frobenius.algebra(),
            Payload::Spin { trivialization, .. } => trivialization.algebra(),
            Payload::SpinStat { trivialization, .. } => trivialization.algebra(),
        }
    }

    pub fn star(&self) -> Option<&StarStructure> {
        match self {
            Payload::Frobenius { star, .. } | Payload::Spin { star, .. } | Payload::SpinStat { star, .. } => {
                star.as_ref()
            }
        }
    }
}

/// A validated theory descriptor.
#[derive(Debug, Clone)]
pub struct TheorySpec {
    kind: Kind,
    payload: Payload,
}

impl TheorySpec {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        self.payload.algebra()
    }

    pub fn star(&self) -> Option<&StarStructure> {
        self.payload.star()
    }

    pub fn is_zero(&self) -> bool {
        self.algebra().dim() == 0
    }
}

/// Star requirement of a kind: `None` forbids a star, `Some(None)` requires
/// one of either flavor, `Some(Some(f))` requires flavor `f`.
fn star_requirement(kind: Kind) -> Option<Option<StarFlavor>> {
    match kind {
        Kind::Unoriented | Kind::Oriented | Kind::Complex | Kind::OrientedSpin | Kind::RealSpinStatistics => None,
        Kind::HermitianSuper => Some(Some(StarFlavor::Ordinary)),
        Kind::TwistedHermitianSuper | Kind::TwistedHermitianSpinStatistics => Some(Some(StarFlavor::Twisted)),
        Kind::Hermitian | Kind::HermitianSpin | Kind::TwistedHermitianSpin | Kind::HermitianSpinStatistics => {
            Some(None)
        }
    }
}

fn required_reality(kind: Kind) -> Reality {
    match kind {
        Kind::HermitianSpin | Kind::HermitianSpinStatistics | Kind::TwistedHermitianSpinStatistics => Reality::Real,
        Kind::TwistedHermitianSpin => Reality::Imaginary,
        _ => Reality::None,
    }
}

/// Checks `tr(x*) = conj(tr(x))` on every basis element.
fn check_trace_reality(f: &FrobeniusAlgebra, star: &StarStructure, report: &mut Report) {
    let a = f.algebra();
    for j in 0..a.dim() {
        let lhs = f.trace().eval(&star.basis_image(j));
        let rhs = f.trace().covector()[j].conj();
        if lhs != rhs {
            report.push(Rule::Reality, vec![j], format!("tr(e{j}*) = {lhs} but conj(tr(e{j})) = {rhs}"));
        }
    }
}

/// Checks that the payload matches the kind and that all its data are valid.
///
/// The zero algebra is accepted for every kind as the zero theory.
pub fn build_theory(kind: Kind, payload: Payload) -> Result<TheorySpec, TheoryError> {
    let mismatch = || TheoryError::KindPayloadMismatch {
        kind,
        expected: kind.payload_name(),
    };
    let shape_ok = match (&payload, kind) {
        (Payload::Spin { .. }, Kind::OrientedSpin | Kind::HermitianSpin | Kind::TwistedHermitianSpin) => true,
        (
            Payload::SpinStat { .. },
            Kind::RealSpinStatistics | Kind::HermitianSpinStatistics | Kind::TwistedHermitianSpinStatistics,
        ) => true,
        (Payload::Frobenius { .. }, k) => matches!(
            k,
            Kind::Unoriented
                | Kind::Oriented
                | Kind::Complex
                | Kind::Hermitian
                | Kind::HermitianSuper
                | Kind::TwistedHermitianSuper
        ),
        _ => false,
    };
    if !shape_ok {
        return Err(mismatch());
    }
    let mut report = Report::new();
    match (star_requirement(kind), payload.star()) {
        (None, Some(_)) => report.push(Rule::StarFlavor, Vec::new(), format!("{kind} theories carry no star")),
        (Some(_), None) => report.push(Rule::MissingStar, Vec::new(), format!("{kind} theories need a star")),
        (Some(Some(flavor)), Some(s)) if s.flavor() != flavor => report.push(
            Rule::StarFlavor,
            Vec::new(),
            format!("{kind} theories need a {flavor} star, found {}", s.flavor()),
        ),
        _ => {}
    }
    let a = payload.algebra();
    report.merge(a.validation().clone());
    if !report.is_valid() {
        return Err(TheoryError::ValidationFailed(report));
    }
    match &payload {
        Payload::Frobenius { frobenius, star } => {
            let needs_even = matches!(kind, Kind::Unoriented | Kind::Oriented | Kind::Complex | Kind::Hermitian);
            if needs_even && !a.is_even() {
                report.push(Rule::NotEven, Vec::new(), format!("{kind} theories need a purely even algebra"));
            }
            if frobenius.symmetry() != Symmetry::SymmetricSuper {
                report.push(
                    Rule::TraceSymmetry,
                    Vec::new(),
                    format!("{kind} theories need a symmetric-super trace"),
                );
            }
            report.merge(validate_frobenius(frobenius));
            if let Some(s) = star {
                let sr = validate_star(a, s);
                let ok = sr.is_valid();
                report.merge(sr);
                if ok {
                    check_trace_reality(frobenius, s, &mut report);
                }
            }
            if kind == Kind::Unoriented && !frobenius.gram().is_real() {
                report.push(Rule::Reality, Vec::new(), "unoriented theories need a real trace pairing");
            }
        }
        Payload::Spin { trivialization, star, reality } => {
            let want = required_reality(kind);
            if *reality != want {
                report.push(Rule::Reality, Vec::new(), format!("{kind} theories need reality {want}, found {reality}"));
            }
            report.merge(validate_spin(trivialization, star.as_ref(), *reality));
        }
        Payload::SpinStat { trivialization, star, reality } => {
            let want = required_reality(kind);
            if *reality != want {
                report.push(Rule::Reality, Vec::new(), format!("{kind} theories need reality {want}, found {reality}"));
            }
            report.merge(validate_spinstat(trivialization, star.as_ref(), *reality));
        }
    }
    if report.is_valid() && !is_semisimple(a)? {
        report.push(Rule::NotSemisimple, Vec::new(), "the algebra is not semisimple");
    }
    if report.is_valid() {
        Ok(TheorySpec { kind, payload })
    } else {
        Err(TheoryError::ValidationFailed(report))
    }
}
