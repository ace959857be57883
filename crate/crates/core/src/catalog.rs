//! Named example theories used by the CLI, the test suites and the
//! acceptance sweep.

use crate::frobenius::{FrobeniusAlgebra, Symmetry};
use crate::scalars::{GMatrix, GaussianRational};
use crate::superalg::{
    clifford, clifford_star, conjugate_transpose_star, coordinate_star, cyclic_group_algebra, cyclic_group_star,
    matrix_algebra, quadratic, split, StarFlavor, StarStructure, SuperAlgebra, TraceFunctional,
};
use crate::theories::{
    build_bimodule_quotient, build_theory, Kind, Payload, Reality, SpinStatTrivialization, SpinTrivialization,
    TheorySpec,
};

/// A catalog entry: a stable name, the kind and a one-line description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: Kind,
    pub description: &'static str,
}

macro_rules! entries {
    ($(($name:literal, $kind:ident, $desc:literal)),* $(,)?) => {
        &[$(CatalogEntry { name: $name, kind: Kind::$kind, description: $desc }),*]
    };
}

pub const ENTRIES: &[CatalogEntry] = entries![
    ("unoriented-cplx", Unoriented, "Q(i) with tr(1) = 1"),
    ("oriented-cplx", Oriented, "Q(i) with tr(1) = 1"),
    ("oriented-x2", Oriented, "Q(i)[x]/(x^2 = 1) with tr(a + bx) = b"),
    ("oriented-split2", Oriented, "Q(i)^2 with tr = (1, 2)"),
    ("oriented-mat2", Oriented, "Mat_2 with the matrix trace"),
    ("oriented-z3", Oriented, "group algebra of Z/3 with tr(g) = 3 delta(g, 1)"),
    ("complex-cplx", Complex, "Q(i) with tr(1) = 1"),
    ("complex-x2", Complex, "Q(i)[x]/(x^2 = 1) with tr(a + bx) = b"),
    ("complex-mat2", Complex, "Mat_2 with the matrix trace"),
    ("complex-z3", Complex, "group algebra of Z/3 with tr(g) = 3 delta(g, 1)"),
    ("hermitian-cplx", Hermitian, "Q(i) with tr(1) = 1 and complex conjugation"),
    ("hermitian-mat2", Hermitian, "Mat_2 with the matrix trace and conjugate transpose"),
    ("hermitian-z3", Hermitian, "group algebra of Z/3 with g* = g^-1"),
    ("oriented-spin-cplx", OrientedSpin, "Q(i) with phi = 1"),
    ("spin-phi-plus-one", HermitianSpin, "Q(i) with phi = 1"),
    ("spin-phi-minus-one", HermitianSpin, "Q(i) with phi = -1"),
    ("spin-split2", HermitianSpin, "Q(i)^2 with phi from tr = (1, 2)"),
    ("spin-split3", HermitianSpin, "Q(i)^3 with phi from tr = (1, 1, 3)"),
    ("spin-mat2", HermitianSpin, "Mat_2 with phi from the matrix trace"),
    ("spin-zero", HermitianSpin, "the zero theory"),
    ("twisted-spin-phi-i", TwistedHermitianSpin, "Q(i) with phi = i"),
    ("twisted-spin-split2", TwistedHermitianSpin, "Q(i)^2 with phi = i times the trace pairing"),
    ("twisted-spin-mat2", TwistedHermitianSpin, "Mat_2 with phi = i times the trace pairing"),
    ("real-spinstats-cliff1", RealSpinStatistics, "Cliff(1) with its even-part trace"),
    ("cliff1-spinstats", HermitianSpinStatistics, "Cliff(1), x* = ix"),
    ("cliff2-spinstats", HermitianSpinStatistics, "Cliff(2), x* = ix"),
    ("cliff3-spinstats", HermitianSpinStatistics, "Cliff(3), x* = ix"),
    ("cliff4-spinstats", HermitianSpinStatistics, "Cliff(4), x* = ix"),
    ("cliff5-spinstats", HermitianSpinStatistics, "Cliff(5), x* = ix"),
    ("cliff1-twisted-spinstats", TwistedHermitianSpinStatistics, "Cliff(1), x* = x under the twisted rule"),
    ("cliff3-twisted-spinstats", TwistedHermitianSpinStatistics, "Cliff(3), x* = x under the twisted rule"),
    ("cliff2-super", HermitianSuper, "Cliff(2), tr(xy) = i, x* = ix"),
    ("twisted-super-cliff2", TwistedHermitianSuper, "Cliff(2), tr(xy) = i, x* = x under the twisted rule"),
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

fn gi(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn matrix_trace(k: usize) -> Vec<GaussianRational> {
    (0..k * k).map(|x| if x / k == x % k { gi(1) } else { gi(0) }).collect()
}

fn group_trace(n: usize) -> Vec<GaussianRational> {
    (0..n).map(|g| if g == 0 { gi(n as i64) } else { gi(0) }).collect()
}

/// `tr(1) = 2^{⌊n/2⌋}`, zero on every other Clifford monomial.
pub fn clifford_trace(n: usize) -> Vec<GaussianRational> {
    let mut t = vec![gi(0); 1 << n];
    t[0] = gi(1 << (n / 2));
    t
}

fn frobenius(kind: Kind, a: SuperAlgebra, trace: Vec<GaussianRational>, star: Option<StarStructure>) -> TheorySpec {
    let f = FrobeniusAlgebra::new(a, TraceFunctional::new(trace), Symmetry::SymmetricSuper).expect("trace length");
    build_theory(kind, Payload::Frobenius { frobenius: f, star }).expect("catalog theory is valid")
}

fn scalar_spin(kind: Kind, phi: GaussianRational, star: Option<StarStructure>, reality: Reality) -> TheorySpec {
    let q = build_bimodule_quotient(&split(1)).expect("valid algebra");
    let t = SpinTrivialization::new(q, GMatrix::from_rows(vec![vec![phi]]).expect("1x1")).expect("shape");
    build_theory(kind, Payload::Spin { trivialization: t, star, reality }).expect("catalog theory is valid")
}

fn traced_spin(
    kind: Kind,
    a: SuperAlgebra,
    trace: Vec<GaussianRational>,
    s: GaussianRational,
    star: StarStructure,
    reality: Reality,
) -> TheorySpec {
    let t = SpinTrivialization::from_trace(&a, &trace, &s).expect("nondegenerate trace");
    build_theory(
        kind,
        Payload::Spin {
            trivialization: t,
            star: Some(star),
            reality,
        },
    )
    .expect("catalog theory is valid")
}

fn clifford_spinstat(kind: Kind, n: usize, star: Option<StarStructure>, reality: Reality) -> TheorySpec {
    let t = SpinStatTrivialization::from_trace(&clifford(n), &clifford_trace(n)).expect("Clifford trace");
    build_theory(
        kind,
        Payload::SpinStat {
            trivialization: t,
            star,
            reality,
        },
    )
    .expect("catalog theory is valid")
}

fn zero_spin() -> TheorySpec {
    let zero = SuperAlgebra::zero();
    let q = build_bimodule_quotient(&zero).expect("valid algebra");
    let t = SpinTrivialization::new(q, GMatrix::zeros(0, 0)).expect("shape");
    build_theory(
        Kind::HermitianSpin,
        Payload::Spin {
            trivialization: t,
            star: Some(coordinate_star(0)),
            reality: Reality::Real,
        },
    )
    .expect("zero theory")
}

/// Builds the named catalog theory.
pub fn theory(name: &str) -> Option<TheorySpec> {
    let e = entry(name)?;
    let k = e.kind;
    let i = GaussianRational::i;
    let x2 = || quadratic(gi(1));
    let x2_trace = || vec![gi(0), gi(1)];
    let spec = match name {
        "unoriented-cplx" | "oriented-cplx" | "complex-cplx" => frobenius(k, split(1), vec![gi(1)], None),
        "oriented-x2" | "complex-x2" => frobenius(k, x2(), x2_trace(), None),
        "oriented-split2" => frobenius(k, split(2), vec![gi(1), gi(2)], None),
        "oriented-mat2" | "complex-mat2" => frobenius(k, matrix_algebra(2), matrix_trace(2), None),
        "oriented-z3" | "complex-z3" => frobenius(k, cyclic_group_algebra(3), group_trace(3), None),
        "hermitian-cplx" => frobenius(k, split(1), vec![gi(1)], Some(coordinate_star(1))),
        "hermitian-mat2" => frobenius(k, matrix_algebra(2), matrix_trace(2), Some(conjugate_transpose_star(2))),
        "hermitian-z3" => frobenius(k, cyclic_group_algebra(3), group_trace(3), Some(cyclic_group_star(3))),
        "oriented-spin-cplx" => scalar_spin(k, gi(1), None, Reality::None),
        "spin-phi-plus-one" => scalar_spin(k, gi(1), Some(coordinate_star(1)), Reality::Real),
        "spin-phi-minus-one" => scalar_spin(k, gi(-1), Some(coordinate_star(1)), Reality::Real),
        "spin-split2" => traced_spin(k, split(2), vec![gi(1), gi(2)], gi(1), coordinate_star(2), Reality::Real),
        "spin-split3" => traced_spin(
            k,
            split(3),
            vec![gi(1), gi(1), gi(3)],
            gi(1),
            coordinate_star(3),
            Reality::Real,
        ),
        "spin-mat2" => traced_spin(
            k,
            matrix_algebra(2),
            matrix_trace(2),
            gi(1),
            conjugate_transpose_star(2),
            Reality::Real,
        ),
        "spin-zero" => zero_spin(),
        "twisted-spin-phi-i" => scalar_spin(k, i(), Some(coordinate_star(1)), Reality::Imaginary),
        "twisted-spin-split2" => traced_spin(
            k,
            split(2),
            vec![gi(1), gi(1)],
            i(),
            coordinate_star(2),
            Reality::Imaginary,
        ),
        "twisted-spin-mat2" => traced_spin(
            k,
            matrix_algebra(2),
            matrix_trace(2),
            i(),
            conjugate_transpose_star(2),
            Reality::Imaginary,
        ),
        "real-spinstats-cliff1" => clifford_spinstat(k, 1, None, Reality::None),
        "cliff1-spinstats" | "cliff2-spinstats" | "cliff3-spinstats" | "cliff4-spinstats" | "cliff5-spinstats" => {
            let n = (name.as_bytes()[5] - b'0') as usize;
            clifford_spinstat(k, n, Some(clifford_star(n, &i(), StarFlavor::Ordinary)), Reality::Real)
        }
        "cliff1-twisted-spinstats" | "cliff3-twisted-spinstats" => {
            let n = (name.as_bytes()[5] - b'0') as usize;
            clifford_spinstat(k, n, Some(clifford_star(n, &gi(1), StarFlavor::Twisted)), Reality::Real)
        }
        "cliff2-super" => {
            let star = clifford_star(2, &i(), StarFlavor::Ordinary);
            frobenius(k, clifford(2), vec![gi(0), gi(0), gi(0), i()], Some(star))
        }
        "twisted-super-cliff2" => {
            let star = clifford_star(2, &gi(1), StarFlavor::Twisted);
            frobenius(k, clifford(2), vec![gi(0), gi(0), gi(0), i()], Some(star))
        }
        _ => return None,
    };
    Some(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_with_its_kind() {
        for e in ENTRIES {
            let t = theory(e.name).unwrap_or_else(|| panic!("{} missing", e.name));
            assert_eq!(t.kind(), e.kind, "{}", e.name);
        }
        assert!(theory("no-such-theory").is_none());
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = ENTRIES.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), ENTRIES.len());
    }
}
