//! Root systems of the simple Lie algebras and the Weyl character formula
//! restricted to the Weyl line.
//!
//! Simple roots are given in orthogonal coordinates with Bourbaki numbering,
//! so Dynkin labels match the usual tables. The invariant form is the
//! Euclidean dot product times a per-family factor chosen so that long roots
//! have square length 2.
//!
//! Positive roots are generated from the simple roots by root strings, which
//! keeps the construction uniform across families; the test suite checks the
//! result against the explicit orthogonal-coordinate descriptions.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, frac, int, Rational};
use crate::series::{sinh_ratio_series, PowerSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A vector in the ambient orthogonal coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    fn from_ints(v: &[i64]) -> Self {
        Vector(v.iter().map(|&x| int(x)).collect())
    }

    fn halves(v: &[i64]) -> Self {
        Vector(v.iter().map(|&x| frac(x, 2)).collect())
    }

    fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    /// Invariant form is `form_scale · dot`.
    form_scale: Rational,
    simple_roots: Vec<Vector>,
    positive_roots: Vec<Vector>,
    fundamental_weights: Vec<Vector>,
    rho: Vector,
    theta: Vector,
    sigma: Option<Vector>,
}

impl RootSystem {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub fn ambient_dim(&self) -> usize {
        self.rho.dim()
    }

    /// Invariant scalar product, normalized so that long roots have square 2.
    pub fn inner(&self, u: &Vector, v: &Vector) -> Rational {
        &self.form_scale * u.dot(v)
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    pub fn fundamental_weights(&self) -> &[Vector] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    pub fn theta(&self) -> &Vector {
        &self.theta
    }

    /// Highest root of the subsystem orthogonal to θ, when that subsystem is
    /// nonempty.
    pub fn sigma(&self) -> Option<&Vector> {
        self.sigma.as_ref()
    }

    /// `⟨v, μ^∨⟩ = 2(v, μ)/(μ, μ)`.
    pub fn coroot_pairing(&self, v: &Vector, root: &Vector) -> Rational {
        int(2) * self.inner(v, root) / self.inner(root, root)
    }

    /// Positive roots orthogonal to θ.
    pub fn theta_orthogonal_roots(&self) -> Vec<&Vector> {
        self.positive_roots.iter().filter(|mu| self.inner(&self.theta, mu).is_zero()).collect()
    }

    /// Whether the θ-orthogonal subsystem is a single simple component.
    ///
    /// Its simple roots are the orthogonal positive roots that are not a sum
    /// of two others; the subsystem is simple iff their Dynkin graph is
    /// connected.
    pub fn centralizer_is_simple(&self) -> bool {
        let roots = self.theta_orthogonal_roots();
        if roots.is_empty() {
            return false;
        }
        let set: HashSet<&Vector> = roots.iter().copied().collect();
        let simple: Vec<&Vector> = roots
            .iter()
            .copied()
            .filter(|mu| !roots.iter().any(|nu| *nu != *mu && set.contains(&mu.sub(nu))))
            .collect();
        let mut seen = vec![false; simple.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..simple.len() {
                if !seen[j] && !self.inner(simple[i], simple[j]).is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Simple roots in Bourbaki order, the ambient dimension, and the scale of
/// the Euclidean form.
fn simple_root_data(family: Family, rank: usize) -> (Vec<Vector>, Rational) {
    let n = rank;
    let diff = |dim: usize, i: usize| Vector::unit(dim, i).sub(&Vector::unit(dim, i + 1));
    match family {
        Family::A => ((0..n).map(|i| diff(n + 1, i)).collect(), Rational::one()),
        Family::B => {
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(n, i)).collect();
            roots.push(Vector::unit(n, n - 1));
            (roots, Rational::one())
        }
        Family::C => {
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(n, i)).collect();
            roots.push(Vector::unit(n, n - 1).scaled(&int(2)));
            (roots, frac(1, 2))
        }
        Family::D => {
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(n, i)).collect();
            roots.push(Vector::unit(n, n - 2).add(&Vector::unit(n, n - 1)));
            (roots, Rational::one())
        }
        Family::E => {
            // E8 simple roots; E7 and E6 are the first 7 and 6.
            let mut roots = vec![
                Vector::halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                Vector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
            ];
            for i in 0..6 {
                roots.push(Vector::unit(8, i + 1).sub(&Vector::unit(8, i)));
            }
            roots.truncate(n);
            (roots, Rational::one())
        }
        Family::F => (
            vec![
                Vector::from_ints(&[0, 1, -1, 0]),
                Vector::from_ints(&[0, 0, 1, -1]),
                Vector::from_ints(&[0, 0, 0, 1]),
                Vector::halves(&[1, -1, -1, -1]),
            ],
            Rational::one(),
        ),
        Family::G => (
            vec![Vector::from_ints(&[1, -1, 0]), Vector::from_ints(&[-2, 1, 1])],
            frac(1, 3),
        ),
    }
}

/// Positive roots as nonnegative integer combinations of simple roots.
///
/// Grows roots by height: `β + α_i` is a root iff `p > 0` in the `α_i`-string
/// `β - qα_i, …, β + pα_i`, with `p = q - ⟨β, α_i^∨⟩`.
fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..rank {
                let mut q = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                // ⟨β, α_i^∨⟩ = Σ_j β_j ⟨α_j, α_i^∨⟩
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
fn invert(matrix: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).expect("Cartan matrix is invertible");
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (entry, p) in aug[r].iter_mut().zip(&pivot_row) {
                    *entry -= &factor * p;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Builds the root system of the given family and rank.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    if !family.valid_rank(rank) {
        return Err(Error::InvalidRank { family: family.letter(), rank });
    }
    let (simple_roots, form_scale) = simple_root_data(family, rank);
    let dim = simple_roots[0].dim();
    let inner = |u: &Vector, v: &Vector| &form_scale * u.dot(v);

    // cartan[j][i] = ⟨α_j, α_i^∨⟩
    let cartan_q: Vec<Vec<Rational>> = simple_roots
        .iter()
        .map(|aj| simple_roots.iter().map(|ai| int(2) * inner(aj, ai) / inner(ai, ai)).collect())
        .collect();
    let cartan: Vec<Vec<i64>> = cartan_q
        .iter()
        .map(|row| row.iter().map(|c| c.to_integer().try_into().expect("small Cartan entry")).collect())
        .collect();

    let positive_roots: Vec<Vector> = positive_root_coefficients(&cartan)
        .into_iter()
        .map(|coeffs| {
            coeffs
                .iter()
                .zip(&simple_roots)
                .fold(Vector::zero(dim), |acc, (&c, alpha)| acc.add(&alpha.scaled(&int(c))))
        })
        .collect();

    let rho = positive_roots.iter().fold(Vector::zero(dim), |acc, mu| acc.add(mu)).scaled(&frac(1, 2));
    let theta = positive_roots
        .iter()
        .max_by(|a, b| inner(&rho, a).cmp(&inner(&rho, b)))
        .expect("nonempty root system")
        .clone();

    // ω_i = Σ_k M_ik α_k with Σ_k M_ik ⟨α_k, α_j^∨⟩ = δ_ij, i.e. M = C^{-1}.
    let m = invert(&cartan_q);
    let fundamental_weights = m
        .iter()
        .map(|row| {
            row.iter().zip(&simple_roots).fold(Vector::zero(dim), |acc, (c, alpha)| acc.add(&alpha.scaled(c)))
        })
        .collect();

    let mut rs = RootSystem {
        family,
        rank,
        form_scale,
        simple_roots,
        positive_roots,
        fundamental_weights,
        rho,
        theta,
        sigma: None,
    };
    rs.sigma = compute_sigma(&rs).ok();
    Ok(rs)
}

/// The positive root orthogonal to θ with the largest `(ρ, μ)`.
///
/// When the orthogonal subsystem is simple this is its highest root; otherwise
/// it is the highest root of the component reaching furthest along ρ, see
/// [`RootSystem::centralizer_is_simple`].
pub fn compute_sigma(rs: &RootSystem) -> Result<Vector> {
    rs.theta_orthogonal_roots()
        .into_iter()
        .max_by(|a, b| rs.inner(rs.rho(), a).cmp(&rs.inner(rs.rho(), b)))
        .cloned()
        .ok_or(Error::EmptyOrthogonalSubsystem)
}

/// A dominant integral weight of a particular root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    vector: Vector,
}

impl Weight {
    pub fn new(rs: &RootSystem, vector: Vector) -> Result<Self> {
        for (index, alpha) in rs.simple_roots().iter().enumerate() {
            let pairing = rs.coroot_pairing(&vector, alpha);
            if !pairing.is_integer() || pairing.is_negative() {
                return Err(Error::NotDominant { index: index + 1, pairing: rational::format(&pairing) });
            }
        }
        Ok(Self { vector })
    }

    pub fn zero(rs: &RootSystem) -> Self {
        Self { vector: Vector::zero(rs.ambient_dim()) }
    }

    /// `n·θ`.
    pub fn theta_multiple(rs: &RootSystem, n: u32) -> Self {
        Self { vector: rs.theta().scaled(&int(n as i64)) }
    }

    pub fn vector(&self) -> &Vector {
        &self.vector
    }

    pub fn dynkin_labels(&self, rs: &RootSystem) -> Vec<Rational> {
        rs.simple_roots().iter().map(|a| rs.coroot_pairing(&self.vector, a)).collect()
    }
}

/// `λ = Σ labels_i ω_i`.
pub fn weight_from_dynkin(rs: &RootSystem, labels: &[u32]) -> Result<Weight> {
    if labels.len() != rs.rank() {
        return Err(Error::LengthMismatch { expected: rs.rank(), found: labels.len() });
    }
    let vector = labels
        .iter()
        .zip(rs.fundamental_weights())
        .fold(Vector::zero(rs.ambient_dim()), |acc, (&l, w)| acc.add(&w.scaled(&int(l as i64))));
    Ok(Weight { vector })
}

/// Parses a label string such as `"11011"`, one digit per node.
pub fn parse_dynkin(labels: &str) -> Option<Vec<u32>> {
    labels.chars().map(|c| c.to_digit(10)).collect()
}

/// `χ_λ(xρ) = Π_{μ>0} sinh((x/2)(μ, λ+ρ)) / sinh((x/2)(μ, ρ))` as an exact
/// series. Roots orthogonal to λ contribute 1 and are skipped.
pub fn weyl_qdim(rs: &RootSystem, lambda: &Weight, order: usize) -> PowerSeries {
    let shifted = lambda.vector().add(rs.rho());
    let mut out = PowerSeries::one(order);
    for mu in rs.positive_roots() {
        if rs.inner(mu, lambda.vector()).is_zero() {
            continue;
        }
        // sinh((x/2)c) = sinh((2c)·x/4)
        let num = int(2) * rs.inner(mu, &shifted);
        let den = int(2) * rs.inner(mu, rs.rho());
        let factor = sinh_ratio_series(&num, &den, order).expect("(μ, ρ) > 0 for positive roots");
        out = &out * &factor;
    }
    out
}

/// Weyl dimension `Π (μ, λ+ρ)/(μ, ρ)`, the `x → 0` limit of [`weyl_qdim`].
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Rational {
    let shifted = lambda.vector().add(rs.rho());
    rs.positive_roots()
        .iter()
        .map(|mu| rs.inner(mu, &shifted) / rs.inner(mu, rs.rho()))
        .fold(Rational::one(), |acc, r| acc * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: Family, rank: usize) -> RootSystem {
        build_root_system(family, rank).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Family::A, 1, 1),
            (Family::A, 5, 15),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 6, 30),
            (Family::G, 2, 6),
            (Family::F, 4, 24),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
        ];
        for (family, rank, count) in cases {
            assert_eq!(rs(family, rank).positive_roots().len(), count, "{family:?}{rank}");
        }
    }

    #[test]
    fn invalid_ranks() {
        assert!(matches!(build_root_system(Family::E, 9), Err(Error::InvalidRank { .. })));
        assert!(build_root_system(Family::D, 2).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
        assert!(build_root_system(Family::A, 0).is_err());
    }

    #[test]
    fn g2_highest_root_is_3a1_plus_2a2() {
        let g2 = rs(Family::G, 2);
        let a = g2.simple_roots();
        let expected = a[0].scaled(&int(3)).add(&a[1].scaled(&int(2)));
        assert_eq!(g2.theta(), &expected);
        assert_eq!(g2.inner(&a[0], &a[0]), frac(2, 3));
        assert_eq!(g2.inner(&a[1], &a[1]), int(2));
        assert_eq!(g2.inner(&a[0], &a[1]), int(-1));
    }

    #[test]
    fn sl2_rho_is_half_theta() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.rho(), &a1.theta().scaled(&frac(1, 2)));
        assert_eq!(compute_sigma(&a1), Err(Error::EmptyOrthogonalSubsystem));
        assert!(a1.sigma().is_none());
    }

    #[test]
    fn sigma_is_orthogonal_positive_root() {
        for (family, rank) in [(Family::E, 7), (Family::G, 2), (Family::F, 4), (Family::D, 6)] {
            let r = rs(family, rank);
            let sigma = r.sigma().unwrap();
            assert!(r.inner(r.theta(), sigma).is_zero());
            assert!(r.positive_roots().contains(sigma));
        }
        let e7 = rs(Family::E, 7);
        assert_eq!(e7.inner(e7.sigma().unwrap(), e7.sigma().unwrap()), int(2));
        // G2: the only positive root orthogonal to θ is the short simple root
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.sigma().unwrap(), &g2.simple_roots()[0]);
    }

    #[test]
    fn centralizer_simplicity() {
        assert!(rs(Family::E, 7).centralizer_is_simple());
        assert!(rs(Family::F, 4).centralizer_is_simple());
        assert!(!rs(Family::D, 6).centralizer_is_simple());
        assert!(!rs(Family::A, 1).centralizer_is_simple());
    }

    #[test]
    fn weyl_qdim_examples() {
        let a1 = rs(Family::A, 1);
        let adj = Weight::theta_multiple(&a1, 1);
        let q = weyl_qdim(&a1, &adj, 8);
        assert_eq!(q, sinh_ratio_series(&int(6), &int(2), 8).unwrap());
        assert_eq!(q.constant_term(), &int(3));

        let e6 = rs(Family::E, 6);
        assert_eq!(weyl_qdim(&e6, &Weight::zero(&e6), 10), PowerSeries::one(10));
    }

    #[test]
    fn weyl_dim_examples() {
        let e7 = rs(Family::E, 7);
        assert_eq!(weyl_dim(&e7, &Weight::theta_multiple(&e7, 1)), int(133));
        let a5 = rs(Family::A, 5);
        assert_eq!(weyl_dim(&a5, &weight_from_dynkin(&a5, &[1, 1, 0, 1, 1]).unwrap()), int(3675));
        let f4 = rs(Family::F, 4);
        assert_eq!(weyl_dim(&f4, &weight_from_dynkin(&f4, &[1, 0, 0, 2]).unwrap()), int(10829));
    }

    #[test]
    fn dynkin_conversion() {
        let a5 = rs(Family::A, 5);
        assert_eq!(weight_from_dynkin(&a5, &[0; 5]).unwrap(), Weight::zero(&a5));
        let adj = weight_from_dynkin(&a5, &[1, 0, 0, 0, 1]).unwrap();
        assert_eq!(adj.vector(), a5.theta());
        assert_eq!(weyl_dim(&a5, &adj), int(35));

        let d6 = rs(Family::D, 6);
        let w = weight_from_dynkin(&d6, &[0, 3, 0, 0, 0, 0]).unwrap();
        assert_eq!(w.vector(), &d6.theta().scaled(&int(3)));
        assert_eq!(weyl_dim(&d6, &w), int(23100));

        assert_eq!(weight_from_dynkin(&d6, &[1, 0]), Err(Error::LengthMismatch { expected: 6, found: 2 }));
    }

    #[test]
    fn dominance_is_checked() {
        let a2 = rs(Family::A, 2);
        let alpha = a2.simple_roots()[0].clone();
        assert!(matches!(Weight::new(&a2, alpha), Err(Error::NotDominant { .. })));
        assert!(Weight::new(&a2, a2.theta().clone()).is_ok());
        let half = a2.fundamental_weights()[0].scaled(&frac(1, 2));
        assert!(Weight::new(&a2, half).is_err());
    }
}
