//! Finite abelian groups, cohomology of cyclic groups with trivial
//! coefficients, and the count of torsor classes for split Picard 2-groups
//! over `ℝ`, specialized to the eight étale-locally-spin structures.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::theories::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorsorError {
    #[error("degree {degree} or modulus {modulus} is outside the supported range")]
    OutOfRange { degree: u32, modulus: u64 },
    #[error("only split 2-groups with trivial k-invariant are supported")]
    UnsupportedTwoGroup,
    #[error("group of order {0} is too large to enumerate")]
    TooLarge(u64),
}

/// Largest group order handled by element enumeration.
const MAX_ORDER: u64 = 1 << 12;

/// A finite abelian group in invariant-factor form `ℤ/d_1 × … × ℤ/d_r` with
/// `1 < d_1 | d_2 | … | d_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

fn prime_powers(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// `e` with `p^e = m`.
fn log_exact(mut m: u64, p: u64) -> u32 {
    let mut e = 0;
    while m > 1 {
        debug_assert_eq!(m % p, 0);
        m /= p;
        e += 1;
    }
    e
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_factors(&[n])
    }

    /// `ℤ/m_1 × … × ℤ/m_r` for arbitrary positive `m_i`, normalized.
    pub fn from_factors(ms: &[u64]) -> Self {
        let mut elementary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &m in ms {
            assert!(m > 0, "cyclic factor of order 0");
            for (p, e) in prime_powers(m) {
                elementary.entry(p).or_default().push(e);
            }
        }
        Self::from_elementary(elementary)
    }

    fn from_elementary(mut elementary: BTreeMap<u64, Vec<u32>>) -> Self {
        for exps in elementary.values_mut() {
            exps.sort_unstable();
        }
        let mut factors = Vec::new();
        loop {
            let mut d = 1u64;
            for (p, exps) in elementary.iter_mut() {
                if let Some(e) = exps.pop() {
                    d *= p.pow(e);
                }
            }
            if d == 1 {
                break;
            }
            factors.push(d);
        }
        factors.reverse();
        Self { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self, other: &Self) -> Self {
        let all: Vec<u64> = self.factors.iter().chain(&other.factors).copied().collect();
        Self::from_factors(&all)
    }

    fn check_size(&self) -> Result<(), TorsorError> {
        match self.order() {
            n if n > MAX_ORDER => Err(TorsorError::TooLarge(n)),
            _ => Ok(()),
        }
    }

    /// All elements as coordinate tuples.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.factors.iter().zip(x.iter().zip(y)).map(|(d, (a, b))| (a + b) % d).collect()
    }

    pub fn neg(&self, x: &[u64]) -> Vec<u64> {
        self.factors.iter().zip(x).map(|(d, a)| (d - a) % d).collect()
    }

    pub fn scale(&self, k: u64, x: &[u64]) -> Vec<u64> {
        self.factors.iter().zip(x).map(|(d, a)| (a * (k % d)) % d).collect()
    }

    /// The subquotient `kernel / image` of two subsets closed under addition,
    /// identified from its counts of `p^j`-torsion elements.
    fn subquotient(&self, kernel: &[Vec<u64>], image: &HashSet<Vec<u64>>) -> AbelianGroup {
        let order = (kernel.len() / image.len().max(1)) as u64;
        let mut elementary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (p, emax) in prime_powers(order) {
            // r_j = log_p #{x ∈ Q : p^j x = 0}
            let mut prev = 0u32;
            let mut counts = Vec::new();
            for j in 1..=emax {
                let pj = p.pow(j);
                let torsion = kernel.iter().filter(|x| image.contains(&self.scale(pj, x))).count() / image.len();
                let r = log_exact(torsion as u64, p);
                counts.push(r - prev);
                prev = r;
            }
            // counts[j-1] = number of cyclic factors of order ≥ p^j
            let mut exps = Vec::new();
            for j in 0..counts.len() {
                let at_least = counts[j];
                let more = counts.get(j + 1).copied().unwrap_or(0);
                for _ in 0..(at_least - more) {
                    exps.push(j as u32 + 1);
                }
            }
            elementary.insert(p, exps);
        }
        Self::from_elementary(elementary)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// `H^k(B(ℤ/n); A)` with trivial action, from the periodic resolution
/// `A --0--> A --n--> A --0--> A --n--> …`.
pub fn cohomology_cyclic(k: u32, n: u64, coeffs: &AbelianGroup) -> Result<AbelianGroup, TorsorError> {
    if k > 4 || n == 0 || n > 12 {
        return Err(TorsorError::OutOfRange { degree: k, modulus: n });
    }
    coeffs.check_size()?;
    // d^j: C^j → C^{j+1} is 0 for even j and multiplication by n for odd j
    let differential = |j: u32, x: &[u64]| if j.is_multiple_of(2) { coeffs.scale(0, x) } else { coeffs.scale(n, x) };
    let elements = coeffs.elements();
    let zero = vec![0; coeffs.factors().len()];
    let kernel: Vec<Vec<u64>> = elements.iter().filter(|x| differential(k, x) == zero).cloned().collect();
    let image: HashSet<Vec<u64>> = if k == 0 {
        HashSet::from([zero])
    } else {
        elements.iter().map(|x| differential(k - 1, x)).collect()
    };
    Ok(coeffs.subquotient(&kernel, &image))
}

/// `H^k(B²(ℤ/2); A)` for `k ≤ 2`: `A`, `0`, `A[2]`.
pub fn cohomology_b2_z2(k: u32, coeffs: &AbelianGroup) -> Result<AbelianGroup, TorsorError> {
    match k {
        0 => Ok(coeffs.clone()),
        1 => Ok(AbelianGroup::trivial()),
        2 => Ok(AbelianGroup::from_factors(
            &coeffs.factors().iter().map(|d| d.gcd(&2)).collect::<Vec<_>>(),
        )),
        _ => Err(TorsorError::OutOfRange { degree: k, modulus: 2 }),
    }
}

/// A Picard 2-group with `π_0`, `π_1` and a flag for the trivial
/// k-invariant and action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardTwoGroup {
    pub pi0: AbelianGroup,
    pub pi1: AbelianGroup,
    pub split: bool,
}

impl PicardTwoGroup {
    pub fn split(pi0: AbelianGroup, pi1: AbelianGroup) -> Self {
        Self { pi0, pi1, split: true }
    }

    /// `ℤ/2 × B(ℤ/2)`.
    pub fn galois_of_reals() -> Self {
        Self::split(AbelianGroup::cyclic(2), AbelianGroup::cyclic(2))
    }
}

/// Number of isomorphism classes of torsors over `ℝ`:
/// `|Hom(ℤ/2, π_0)|·|H²(B(ℤ/2); π_1)|·|H²(B²(ℤ/2); π_1)|`.
pub fn count_torsor_classes(g: &PicardTwoGroup) -> Result<u64, TorsorError> {
    if !g.split {
        return Err(TorsorError::UnsupportedTwoGroup);
    }
    let homs = cohomology_cyclic(1, 2, &g.pi0)?.order();
    let h2 = cohomology_cyclic(2, 2, &g.pi1)?.order();
    let h2b2 = cohomology_b2_z2(2, &g.pi1)?.order();
    Ok(homs * h2 * h2b2)
}

/// One of the eight étale-locally-spin structures, as a point of `(ℤ/2)³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EtaleSpinClass {
    /// Complex conjugation is identified with orientation reversal.
    pub a: u8,
    /// `(−1)^f` is identified with the twist.
    pub b: u8,
    /// The mixing class.
    pub c: u8,
    pub kind: Kind,
}

impl EtaleSpinClass {
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// The class singled out by the spin-statistics relation with Hermitian
    /// structure and no mixing.
    pub fn is_distinguished(&self) -> bool {
        (self.a, self.b, self.c) == (1, 1, 0)
    }
}

fn kind_of(a: u8, b: u8, c: u8) -> Kind {
    match (a, b, c) {
        (0, 0, 0) => Kind::OrientedSpin,
        (1, 0, 0) => Kind::HermitianSpin,
        (1, 0, 1) => Kind::TwistedHermitianSpin,
        (0, 1, 0) => Kind::RealSpinStatistics,
        (1, 1, 0) => Kind::HermitianSpinStatistics,
        (1, 1, 1) => Kind::TwistedHermitianSpinStatistics,
        (0, 0, 1) => Kind::HermitianSuper,
        (0, 1, 1) => Kind::TwistedHermitianSuper,
        _ => unreachable!("coordinates are bits"),
    }
}

/// The eight classes in lexicographic order of `(a, b, c)`.
pub fn enumerate_etale_spin_classes() -> Vec<EtaleSpinClass> {
    let mut out = Vec::with_capacity(8);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                out.push(EtaleSpinClass { a, b, c, kind: kind_of(a, b, c) });
            }
        }
    }
    out
}
