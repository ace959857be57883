use super::*;
use crate::scalars::kernel_basis;

fn gi(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn small_catalog() -> Vec<(String, SuperAlgebra)> {
    let mut v: Vec<(String, SuperAlgebra)> = Vec::new();
    for n in 0..=4 {
        v.push((format!("cliff{n}"), clifford(n)));
    }
    for k in 1..=3 {
        v.push((format!("mat{k}"), matrix_algebra(k)));
    }
    for n in 1..=6 {
        v.push((format!("z{n}"), cyclic_group_algebra(n)));
    }
    v.push(("x2=1".into(), quadratic(gi(1))));
    v.push(("x2=-1".into(), quadratic(gi(-1))));
    v.push(("dual".into(), dual_numbers()));
    for n in 0..=3 {
        v.push((format!("split{n}"), split(n)));
    }
    v
}

/// Oracle: Dickson's criterion on the right regular representation, and when
/// it reports a radical, certify the radical is a nilpotent two-sided ideal.
fn semisimple_oracle(a: &SuperAlgebra) -> bool {
    let n = a.dim();
    let rtr: Vec<GaussianRational> = (0..n)
        .map(|m| {
            let r = a.right_mul_matrix(&a.basis_vector(m));
            (0..n).fold(GaussianRational::zero(), |acc, k| acc + r.get(k, k).clone())
        })
        .collect();
    let mut g = GMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let xy = a.mul(&a.basis_vector(i), &a.basis_vector(j));
            let v = xy.iter().zip(&rtr).fold(GaussianRational::zero(), |acc, (x, t)| acc + x * t);
            g.set(i, j, v);
        }
    }
    let rad = kernel_basis(&g);
    if rad.is_empty() {
        return true;
    }
    // nilpotency: products of n elements of the radical vanish
    let mut power = rad.clone();
    for _ in 0..n {
        let mut next = RowEchelon::new(n);
        for x in &power {
            for r in &rad {
                next.insert(&a.mul(x, r));
            }
        }
        power = kernel_from_echelon_span(next, n);
        if power.is_empty() {
            return false;
        }
    }
    panic!("trace-form radical is not nilpotent");
}

fn kernel_from_echelon_span(ech: RowEchelon, n: usize) -> Vec<Vector> {
    ech.into_rref()
        .into_iter()
        .map(|(_, row)| sparse_to_dense(&row, n))
        .collect()
}

#[test]
fn catalog_algebras_are_valid() {
    for (name, a) in small_catalog() {
        assert!(validate_algebra(&a).is_valid(), "{name}: {}", validate_algebra(&a));
        let ops = [
            underlying_algebra(&a),
            opposite(&a).unwrap(),
            parity_semidirect(&a).unwrap(),
            direct_sum(&a, &clifford(1)).unwrap(),
        ];
        for b in ops {
            assert!(validate_algebra(&b).is_valid(), "{name}: {}", validate_algebra(&b));
        }
    }
}

#[test]
fn cliff1_is_valid_and_grading_violation_detected() {
    let c = clifford(1);
    assert_eq!(c.parities(), &[0, 1]);
    assert_eq!(c.product(1, 1), &vec![(0, gi(1))]);
    let broken = SuperAlgebra::from_products(vec![0, 1], vec![gi(1), gi(0)], |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, gi(1))],
        _ => vec![(1, gi(1))],
    })
    .unwrap();
    let r = validate_algebra(&broken);
    assert!(r.has(Rule::Grading), "{r}");
    assert!(validate_algebra(&split(1)).is_valid());
}

#[test]
fn unit_and_associativity_violations_reported() {
    let no_unit = SuperAlgebra::from_products(vec![0], vec![gi(2)], |_, _| vec![(0, gi(1))]).unwrap();
    let r = validate_algebra(&no_unit);
    assert!(r.has(Rule::LeftUnit) && r.has(Rule::RightUnit));
    // e1·e1 = e2, e2·e1 = e1, other products with e1, e2 zero: (e1e1)e1 = e1 but e1(e1e1) = 0
    let nonassoc = SuperAlgebra::from_products(vec![0, 0, 0], vec![gi(1), gi(0), gi(0)], |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, gi(1))],
        (1, 1) => vec![(2, gi(1))],
        (2, 1) => vec![(1, gi(1))],
        _ => Vec::new(),
    })
    .unwrap();
    let r = validate_algebra(&nonassoc);
    assert!(r.has(Rule::Associativity));
    assert!(r.violations().iter().any(|v| v.witness == vec![1, 1, 1]));
    let odd_unit = SuperAlgebra::from_products(vec![1], vec![gi(1)], |_, _| vec![(0, gi(1))]).unwrap();
    assert!(validate_algebra(&odd_unit).has(Rule::OddUnit));
}

#[test]
fn shape_errors() {
    assert!(matches!(
        SuperAlgebra::from_products(vec![0, 2], vec![gi(1), gi(0)], |_, _| Vec::new()),
        Err(AlgebraError::BadParity(1, 2))
    ));
    assert!(matches!(
        SuperAlgebra::from_products(vec![0], vec![], |_, _| Vec::new()),
        Err(AlgebraError::Shape { field: "unit", .. })
    ));
    assert!(matches!(
        SuperAlgebra::from_dense(vec![0], &[vec![vec![gi(1), gi(0)]]], vec![gi(1)]),
        Err(AlgebraError::Shape { field: "structure", .. })
    ));
}

#[test]
fn semisimplicity_examples() {
    assert!(is_semisimple(&matrix_algebra(2)).unwrap());
    assert!(!is_semisimple(&dual_numbers()).unwrap());
    assert!(is_semisimple(&clifford(2)).unwrap());
    assert!(is_semisimple(&SuperAlgebra::zero()).unwrap());
}

#[test]
fn semisimplicity_matches_radical_oracle() {
    let mut algebras = small_catalog();
    algebras.push(("cliff1xZ2".into(), parity_semidirect(&clifford(1)).unwrap()));
    algebras.push(("cliff3xZ2".into(), parity_semidirect(&clifford(3)).unwrap()));
    algebras.push(("dual+dual".into(), direct_sum(&dual_numbers(), &split(1)).unwrap()));
    algebras.push(("dualxZ2".into(), parity_semidirect(&dual_numbers()).unwrap()));
    for (name, a) in algebras {
        if a.dim() > 16 {
            continue;
        }
        assert_eq!(is_semisimple(&a).unwrap(), semisimple_oracle(&a), "{name}");
    }
}

#[test]
fn center_examples() {
    let z = center(&matrix_algebra(2)).unwrap();
    assert_eq!(z.len(), 1);
    assert_eq!(z[0], vec![gi(1), gi(0), gi(0), gi(1)]);
    assert_eq!(center(&quadratic(gi(1))).unwrap().len(), 2);
    assert_eq!(center(&clifford(2)).unwrap().len(), 1);
    assert_eq!(center(&clifford(1)).unwrap().len(), 2);
    for v in center(&clifford(3)).unwrap() {
        for j in 0..8 {
            let e = clifford(3).basis_vector(j);
            assert_eq!(clifford(3).mul(&v, &e), clifford(3).mul(&e, &v));
        }
    }
}

#[test]
fn cocenter_examples() {
    let m = matrix_algebra(2);
    let q = cocenter(&m).unwrap();
    assert_eq!(q.dim(), 1);
    // oracle: span of the explicit commutators of matrix units is the traceless part
    let mut span = RowEchelon::new(4);
    for i in 0..4 {
        for j in 0..4 {
            let (x, y) = (m.basis_vector(i), m.basis_vector(j));
            let c: Vector = m.mul(&x, &y).iter().zip(m.mul(&y, &x)).map(|(a, b)| a - &b).collect();
            span.insert(&c);
        }
    }
    assert_eq!(span.rank(), 3);
    // E_00 and E_11 have the same class
    assert_eq!(q.project(&m.basis_vector(0)), q.project(&m.basis_vector(3)));
    assert!(q.is_commutator(&m.basis_vector(1)));
    assert_eq!(q.projection_matrix().rows(), 1);
}

#[test]
fn cocenter_dimension_consistency() {
    for (name, a) in small_catalog() {
        let q = cocenter(&a).unwrap();
        assert_eq!(q.dim() + q.commutator_rank(), a.dim(), "{name}");
        if is_semisimple(&a).unwrap() {
            assert_eq!(q.dim(), center(&a).unwrap().len(), "{name}");
        }
    }
}

#[test]
fn underlying_examples() {
    let f = underlying_algebra(&clifford(1));
    assert!(f.is_even());
    assert_eq!(f, quadratic(gi(1)));
    assert_eq!(underlying_algebra(&matrix_algebra(2)), matrix_algebra(2));
    let f2 = underlying_algebra(&clifford(2));
    assert_eq!(f2.dim(), 4);
    // xy = e_3, yx = −e_3
    assert_eq!(f2.product(1, 2), &vec![(3, gi(1))]);
    assert_eq!(f2.product(2, 1), &vec![(3, gi(-1))]);
}

#[test]
fn opposite_and_direct_sum_examples() {
    let q = quadratic(gi(1));
    assert_eq!(opposite(&q).unwrap(), q);
    let s = direct_sum(&split(1), &split(1)).unwrap();
    assert_eq!(s, split(2));
    assert_eq!(s.unit(), &[gi(1), gi(1)]);
    let m = matrix_algebra(2);
    let mo = opposite(&m).unwrap();
    assert_ne!(mo, m);
    assert_eq!(mo.dim(), 4);
    assert!(is_semisimple(&mo).unwrap());
    assert_eq!(center(&mo).unwrap().len(), 1);
    // graded opposite of Cliff(1): x·x = −1
    assert_eq!(opposite(&clifford(1)).unwrap().product(1, 1), &vec![(0, gi(-1))]);
}

#[test]
fn parity_semidirect_examples() {
    let b = parity_semidirect(&clifford(1)).unwrap();
    assert_eq!(b.dim(), 4);
    let f = underlying_algebra(&b);
    assert!(is_semisimple(&f).unwrap());
    assert_eq!(center(&f).unwrap().len(), 1);
    let b3 = parity_semidirect(&clifford(3)).unwrap();
    assert_eq!(b3.dim(), 16);
    let f3 = underlying_algebra(&b3);
    assert!(is_semisimple(&f3).unwrap());
    assert_eq!(center(&f3).unwrap().len(), 1);
    // even input: ε central, invariants of a ⊕ a
    let e = parity_semidirect(&matrix_algebra(2)).unwrap();
    let mm = direct_sum(&matrix_algebra(2), &matrix_algebra(2)).unwrap();
    assert_eq!(e.dim(), mm.dim());
    assert_eq!(center(&e).unwrap().len(), center(&mm).unwrap().len());
    assert_eq!(cocenter(&e).unwrap().dim(), cocenter(&mm).unwrap().dim());
    assert!(is_semisimple(&e).unwrap());
}

#[test]
fn parity_semidirect_relations() {
    let a = clifford(2);
    let b = parity_semidirect(&a).unwrap();
    let eps = b.basis_vector(4);
    for j in 0..4 {
        let x = b.basis_vector(j);
        let lhs = b.mul(&eps, &x);
        let rhs: Vector = b
            .mul(&x, &eps)
            .into_iter()
            .map(|c| c * GaussianRational::sign(a.parity(j) as usize))
            .collect();
        assert_eq!(lhs, rhs);
    }
    assert_eq!(b.mul(&eps, &eps), b.basis_vector(0));
}

#[test]
fn odd_clifford_semidirect_is_simple() {
    for n in [1usize, 3, 5] {
        let f = underlying_algebra(&parity_semidirect(&clifford(n)).unwrap());
        assert!(is_semisimple(&f).unwrap());
        assert_eq!(center(&f).unwrap().len(), 1, "n = {n}");
    }
}

#[test]
fn star_examples() {
    let i = GaussianRational::i();
    let s = clifford_star(2, &i, StarFlavor::Ordinary);
    assert!(validate_star(&clifford(2), &s).is_valid(), "{}", validate_star(&clifford(2), &s));
    for n in 0..=4 {
        let t = clifford_star(n, &gi(1), StarFlavor::Twisted);
        assert!(validate_star(&clifford(n), &t).is_valid(), "n = {n}");
    }
    let bad = clifford_star(1, &gi(1), StarFlavor::Ordinary);
    let r = validate_star(&clifford(1), &bad);
    assert!(r.has(Rule::StarSignRule));
    assert!(r.violations().iter().any(|v| v.witness == vec![1, 1]));
}

#[test]
fn other_star_failures() {
    let c = clifford(1);
    let wrong_shape = StarStructure::new(GMatrix::identity(3), StarFlavor::Twisted);
    assert!(validate_star(&c, &wrong_shape).has(Rule::Shape));
    let not_involutive = StarStructure::new(GMatrix::diagonal(&[gi(1), gi(2)]), StarFlavor::Twisted);
    assert!(validate_star(&c, &not_involutive).has(Rule::StarInvolution));
    let mixing = StarStructure::new(GMatrix::from_ints(&[[0, 1], [1, 0]]), StarFlavor::Twisted);
    assert!(validate_star(&c, &mixing).has(Rule::StarParity));
}

#[test]
fn standard_stars_are_valid() {
    let i = GaussianRational::i();
    assert!(validate_star(&matrix_algebra(3), &conjugate_transpose_star(3)).is_valid());
    assert!(validate_star(&cyclic_group_algebra(5), &cyclic_group_star(5)).is_valid());
    assert!(validate_star(&split(3), &coordinate_star(3)).is_valid());
    assert!(validate_star(&quadratic(gi(-1)), &coordinate_star(2)).is_valid());
    for n in 0..=4 {
        assert!(validate_star(&clifford(n), &clifford_star(n, &i, StarFlavor::Ordinary)).is_valid());
    }
}

#[test]
fn ungraded_star_is_valid_on_underlying_algebra() {
    let i = GaussianRational::i();
    for n in 1..=3 {
        let a = clifford(n);
        for s in [
            clifford_star(n, &i, StarFlavor::Ordinary),
            clifford_star(n, &gi(1), StarFlavor::Twisted),
        ] {
            let u = s.to_ungraded(&a);
            let f = underlying_algebra(&a);
            assert!(validate_star(&f, &u).is_valid(), "n = {n}, {}", s.flavor());
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn any_catalog() -> impl Strategy<Value = SuperAlgebra> {
        prop_oneof![
            (0usize..=3).prop_map(clifford),
            (1usize..=3).prop_map(matrix_algebra),
            (1usize..=6).prop_map(cyclic_group_algebra),
            (0usize..=3).prop_map(split),
            (-1i64..=1).prop_map(|s| quadratic(GaussianRational::from_int(s))),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn constructors_preserve_validity(a in any_catalog(), b in any_catalog()) {
            let ab = direct_sum(&a, &b).unwrap();
            prop_assert!(validate_algebra(&ab).is_valid());
            prop_assert_eq!(ab.dim(), a.dim() + b.dim());
            let p = parity_semidirect(&a).unwrap();
            prop_assert!(validate_algebra(&p).is_valid());
            prop_assert_eq!(p.dim(), 2 * a.dim());
            let o = opposite(&a).unwrap();
            prop_assert!(validate_algebra(&o).is_valid());
            prop_assert_eq!(opposite(&o).unwrap(), a);
        }

        #[test]
        fn mul_is_bilinear(a in any_catalog(), s in -3i64..3, seed in 0usize..64) {
            let n = a.dim();
            prop_assume!(n > 0);
            let x = a.basis_vector(seed % n);
            let y = a.basis_vector((seed / 2) % n);
            let sx: Vector = x.iter().map(|c| c * &GaussianRational::from_int(s)).collect();
            let lhs = a.mul(&sx, &y);
            let rhs: Vector = a.mul(&x, &y).iter().map(|c| c * &GaussianRational::from_int(s)).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
