//! Constructors for the standard algebras and their star structures.

use super::{StarFlavor, StarStructure, SuperAlgebra};
use crate::scalars::{GMatrix, GaussianRational, Vector};

fn one() -> GaussianRational {
    GaussianRational::one()
}

fn unit_at(dim: usize, k: usize) -> Vector {
    let mut u = vec![GaussianRational::zero(); dim];
    if dim > 0 {
        u[k] = one();
    }
    u
}

/// `Cliff(n) = ℚ(i)⟨x_1, …, x_n⟩ / (x_j x_k + x_k x_j = 2δ_jk)` with odd
/// generators.
///
/// Basis element `e_S` for a bitmask `S` is the ordered product of the
/// generators in `S` (increasing index); `e_S e_T = (−1)^{#{s∈S, t∈T : s>t}} e_{S⊕T}`.
pub fn clifford(n: usize) -> SuperAlgebra {
    assert!(n <= 10, "Cliff({n}) is too large");
    let dim = 1usize << n;
    let parity = (0..dim).map(|s: usize| (s.count_ones() % 2) as u8).collect();
    SuperAlgebra::from_products(parity, unit_at(dim, 0), |s, t| {
        let swaps: u32 = (0..n)
            .filter(|b| s & (1 << b) != 0)
            .map(|b| (t & ((1 << b) - 1)).count_ones())
            .sum();
        vec![(s ^ t, GaussianRational::sign(swaps as usize))]
    })
    .expect("well-formed Clifford table")
}

/// `Mat_k(ℚ(i))` with matrix units `E_ab` at index `a·k + b`.
pub fn matrix_algebra(k: usize) -> SuperAlgebra {
    let dim = k * k;
    let mut unit = vec![GaussianRational::zero(); dim];
    for a in 0..k {
        unit[a * k + a] = one();
    }
    SuperAlgebra::from_products(vec![0; dim], unit, |i, j| {
        let (a, b) = (i / k, i % k);
        let (c, d) = (j / k, j % k);
        if b == c {
            vec![(a * k + d, one())]
        } else {
            Vec::new()
        }
    })
    .expect("well-formed matrix table")
}

/// Group algebra of `ℤ/n`, basis `g^0, …, g^{n-1}`.
pub fn cyclic_group_algebra(n: usize) -> SuperAlgebra {
    assert!(n >= 1, "ℤ/0 is not finite");
    SuperAlgebra::from_products(vec![0; n], unit_at(n, 0), |a, b| vec![((a + b) % n, one())])
        .expect("well-formed group table")
}

/// `ℚ(i)[x]/(x² = s)`, purely even, basis `{1, x}`.
pub fn quadratic(s: GaussianRational) -> SuperAlgebra {
    SuperAlgebra::from_products(vec![0, 0], unit_at(2, 0), |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, one())],
        _ => vec![(0, s.clone())],
    })
    .expect("well-formed quadratic table")
}

/// `ℚ(i)[x]/(x²)`.
pub fn dual_numbers() -> SuperAlgebra {
    quadratic(GaussianRational::zero())
}

/// `ℚ(i)^n` with coordinatewise product.
pub fn split(n: usize) -> SuperAlgebra {
    SuperAlgebra::from_products(vec![0; n], vec![one(); n], |i, j| {
        if i == j {
            vec![(i, one())]
        } else {
            Vec::new()
        }
    })
    .expect("well-formed split table")
}

/// The star on `Cliff(n)` with `x_j* = λ·x_j`, extended by the sign rule of
/// `flavor`. Valid for `λ = ±i` (ordinary) or `λ = ±1` (twisted).
pub fn clifford_star(n: usize, lambda: &GaussianRational, flavor: StarFlavor) -> StarStructure {
    let a = clifford(n);
    let dim = a.dim();
    let mut images: Vec<Vector> = vec![Vec::new(); dim];
    images[0] = unit_at(dim, 0);
    for s in 1..dim {
        let low = s.trailing_zeros() as usize;
        let rest = s & !(1 << low);
        // e_S = x_low · e_rest, hence e_S* = ± e_rest* · x_low*
        let x_star: Vector = a.basis_vector(1 << low).iter().map(|c| c * lambda).collect();
        let mut img = a.mul(&images[rest], &x_star);
        if flavor == StarFlavor::Ordinary && rest.count_ones() % 2 == 1 {
            img = img.into_iter().map(|c| -c).collect();
        }
        images[s] = img;
    }
    StarStructure::new(GMatrix::from_columns(dim, &images), flavor)
}

/// Conjugate transpose on `Mat_k`: `E_ab* = E_ba`.
pub fn conjugate_transpose_star(k: usize) -> StarStructure {
    let dim = k * k;
    let mut m = GMatrix::zeros(dim, dim);
    for a in 0..k {
        for b in 0..k {
            m.set(b * k + a, a * k + b, one());
        }
    }
    StarStructure::new(m, StarFlavor::Ordinary)
}

/// `g* = g^{-1}` on the group algebra of `ℤ/n`.
pub fn cyclic_group_star(n: usize) -> StarStructure {
    let mut m = GMatrix::zeros(n, n);
    for a in 0..n {
        m.set((n - a) % n, a, one());
    }
    StarStructure::new(m, StarFlavor::Ordinary)
}

/// Coordinatewise conjugation `x* = conj(x)`; a star on commutative algebras
/// with real structure constants.
pub fn coordinate_star(dim: usize) -> StarStructure {
    StarStructure::new(GMatrix::identity(dim), StarFlavor::Ordinary)
}
