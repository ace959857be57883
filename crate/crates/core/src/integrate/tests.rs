use super::*;
use crate::eval::center_frobenius;
use crate::report::Rule;
use crate::superalg::{center, clifford, clifford_star, coordinate_star, matrix_algebra, split, validate_star};
use crate::theories::build_bimodule_quotient;

fn gi(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn scalar_phi(s: GaussianRational) -> SpinTrivialization {
    let q = build_bimodule_quotient(&split(1)).unwrap();
    SpinTrivialization::new(q, GMatrix::from_rows(vec![vec![s]]).unwrap()).unwrap()
}

fn cliff_trace(n: usize) -> Vec<GaussianRational> {
    let mut t = vec![gi(0); 1 << n];
    t[0] = gi(1 << (n / 2));
    t
}

#[test]
fn groupoid_integral_of_spin_circle_is_one() {
    assert_eq!(groupoid_integral(&FiniteGroupoid::spin_circle()), gi(1));
    assert_eq!(groupoid_integral(&FiniteGroupoid::new()), gi(0));
}

#[test]
fn groupoid_integral_is_additive() {
    let mut g = FiniteGroupoid::new();
    g.push("a", 3, gi(2)).unwrap();
    g.push("b", 1, GaussianRational::i()).unwrap();
    let h = FiniteGroupoid::spin_circle();
    let total = groupoid_integral(&g.disjoint_union(&h));
    assert_eq!(total, &groupoid_integral(&g) + &groupoid_integral(&h));
    assert_eq!(total, GaussianRational::from_parts((5, 3), (1, 1)));
    assert_eq!(g.push("c", 0, gi(1)), Err(IntegrateError::ZeroOrder));
}

#[test]
fn scalar_spin_theory_gives_quadratic_extension() {
    for s in [gi(1), gi(-1)] {
        let b = spins_to_or(&scalar_phi(s.clone())).unwrap();
        assert!(validate_frobenius(&b).is_valid());
        let a = b.algebra();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        assert_eq!(a.unit(), &vec![gi(1), gi(0)]);
        // x = e^0 squares to φ·1
        assert_eq!(a.mul(&a.basis_vector(1), &a.basis_vector(1)), vec![s.clone(), gi(0)]);
        assert_eq!(b.gram(), GMatrix::from_ints(&[[0, 1], [1, 0]]));
    }
}

#[test]
fn split_spin_theory_doubles_each_idempotent() {
    let a = split(2);
    let t = SpinTrivialization::from_trace(&a, &[gi(1), gi(3)], &gi(1)).unwrap();
    let b = spins_to_or(&t).unwrap();
    assert!(validate_frobenius(&b).is_valid());
    assert_eq!(b.algebra().dim(), 4);
    assert!(b.algebra().is_commutative());
    assert_eq!(center(b.algebra()).unwrap().len(), 4);
}

#[test]
fn spin_integration_of_mat2_is_symmetric_frobenius() {
    let a = matrix_algebra(2);
    let tr: Vec<_> = (0..4).map(|k| if k % 3 == 0 { gi(1) } else { gi(0) }).collect();
    for s in [gi(1), gi(-1)] {
        let t = SpinTrivialization::from_trace(&a, &tr, &s).unwrap();
        let b = spins_to_or(&t).unwrap();
        let report = validate_frobenius(&b);
        assert!(report.is_valid(), "{report}");
        assert_eq!(b.algebra().dim(), 8);
        assert_eq!(center(b.algebra()).unwrap().len(), 2);
    }
}

#[test]
fn corrupted_phi_breaks_associativity() {
    let a = split(2);
    let t = SpinTrivialization::from_trace(&a, &[gi(1), gi(1)], &gi(1)).unwrap();
    let mut values = t.ambient_values();
    // send φ(e^0⊗e^0) to the other idempotent
    values[0] = vec![gi(0), gi(1)];
    let b = spins_to_or_unchecked(&a, &values, &gi(1)).unwrap();
    assert!(b.algebra().validation().has(Rule::Associativity));
    let short = spins_to_or_unchecked(&a, &values[..3], &gi(1));
    assert!(matches!(short, Err(AlgebraError::Shape { .. })));
}

#[test]
fn hermitian_spin_integration_is_star_compatible() {
    let star = coordinate_star(1);
    for (s, reality) in [
        (gi(1), Reality::Real),
        (gi(-1), Reality::Real),
        (GaussianRational::i(), Reality::Imaginary),
    ] {
        let (b, bs) = spins_to_or_hermitian(&scalar_phi(s), &star, reality).unwrap();
        assert!(validate_frobenius(&b).is_valid());
        assert!(validate_star(b.algebra(), &bs).is_valid(), "{}", validate_star(b.algebra(), &bs));
        for j in 0..b.algebra().dim() {
            assert_eq!(b.trace().eval(&bs.basis_image(j)), b.trace().covector()[j].conj());
        }
    }
    let err = spins_to_or_hermitian(&scalar_phi(GaussianRational::i()), &star, Reality::Real);
    assert!(matches!(err, Err(IntegrateError::InvalidTrivialization(_))));
}

#[test]
fn cliff1_spinstat_integrates_to_mat2() {
    let a = clifford(1);
    let t = SpinStatTrivialization::from_trace(&a, &cliff_trace(1)).unwrap();
    let b = spinstats_to_or(&t).unwrap();
    assert!(validate_frobenius(&b).is_valid());
    assert_eq!(b.algebra().dim(), 4);
    assert!(b.algebra().is_even());
    let z = center_frobenius(&b).unwrap();
    assert_eq!(z.algebra().dim(), 1);
    assert_eq!(b.trace().eval(b.algebra().unit()), gi(2));
}

#[test]
fn odd_clifford_spinstat_unit_traces() {
    for (n, expected) in [(1, 2), (3, 4), (5, 8)] {
        let a = clifford(n);
        let t = SpinStatTrivialization::from_trace(&a, &cliff_trace(n)).unwrap();
        let b = spinstats_to_or(&t).unwrap();
        assert_eq!(b.algebra().dim(), 2 << n);
        assert_eq!(center(b.algebra()).unwrap().len(), 1);
        assert_eq!(b.trace().eval(b.algebra().unit()), gi(expected));
    }
}

#[test]
fn spinstat_hermitian_star_is_valid() {
    for n in 1..=4 {
        let a = clifford(n);
        let t = SpinStatTrivialization::from_trace(&a, &cliff_trace(n)).unwrap();
        for (lambda, flavor) in [
            (GaussianRational::i(), StarFlavor::Ordinary),
            (gi(1), StarFlavor::Twisted),
        ] {
            let star = clifford_star(n, &lambda, flavor);
            let (b, bs) = spinstats_to_or_hermitian(&t, &star, Reality::Real).unwrap();
            let r = validate_star(b.algebra(), &bs);
            assert!(r.is_valid(), "n={n} {flavor}: {r}");
        }
    }
}

#[test]
fn even_algebra_semidirect_has_twice_the_center() {
    let a = split(2);
    let f = FrobeniusAlgebra::new(a, TraceFunctional::new(vec![gi(1), gi(2)]), Symmetry::SymmetricSuper).unwrap();
    let (b, s) = integrate_supervect(&f, None).unwrap();
    assert!(s.is_none());
    assert_eq!(b.algebra().dim(), 4);
    assert_eq!(center(b.algebra()).unwrap().len(), 4);
}

#[test]
fn supervect_integration_of_cliff2() {
    let a = clifford(2);
    let tr = vec![gi(0), gi(0), gi(0), GaussianRational::i()];
    let f = FrobeniusAlgebra::new(a, TraceFunctional::new(tr), Symmetry::SymmetricSuper).unwrap();
    let star = clifford_star(2, &GaussianRational::i(), StarFlavor::Ordinary);
    let (b, bs) = integrate_supervect(&f, Some(&star)).unwrap();
    let bs = bs.unwrap();
    assert!(validate_frobenius(&b).is_valid());
    assert!(validate_star(b.algebra(), &bs).is_valid());
    assert_eq!(center(b.algebra()).unwrap().len(), 2);
}

#[test]
fn integrate_or_on_pairings() {
    let h = HilbertData::new(GMatrix::from_ints(&[[3]]), RealityTag::Oriented).unwrap();
    let r = integrate_or(&h).unwrap();
    assert_eq!(r.gram(), &GMatrix::from_ints(&[[0, 1], [1, 0]]));
    let h = HilbertData::new(GMatrix::from_ints(&[[2]]), RealityTag::Hermitian).unwrap();
    let r = integrate_or(&h).unwrap();
    assert_eq!(r.dim(), 2);
    assert!(crate::scalars::is_positive_definite_hermitian(r.gram()).unwrap());
    let h = HilbertData::new(GMatrix::from_ints(&[[2]]), RealityTag::ComplexSymmetric).unwrap();
    assert_eq!(integrate_or(&h), Err(IntegrateError::UntaggedReality(RealityTag::ComplexSymmetric)));
}

#[test]
fn integrate_complex_on_pairings() {
    let h = HilbertData::new(GMatrix::from_ints(&[[1]]), RealityTag::ComplexSymmetric).unwrap();
    let r = integrate_complex(&h).unwrap();
    assert_eq!(r.dim(), 2);
    assert_eq!(congruence(r.gram()), (1, 1, 0));
    let h = HilbertData::new(GMatrix::from_ints(&[[1]]), RealityTag::Oriented).unwrap();
    assert_eq!(integrate_complex(&h), Err(IntegrateError::KindMismatch(RealityTag::Oriented)));
    assert_eq!(integrate_complex_scalar(&GaussianRational::from_parts((3, 2), (7, 1))), gi(3));
}

fn congruence(g: &GMatrix) -> (usize, usize, usize) {
    crate::scalars::congruence_diagonalize(g).unwrap().signature()
}

#[test]
fn or_algebra_integration_doubles_dimension() {
    let b = integrate_or_algebra(&matrix_algebra(2)).unwrap();
    assert_eq!(b.dim(), 8);
    assert_eq!(center(&b).unwrap().len(), 2);
}
