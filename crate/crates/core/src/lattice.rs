//! The weight and root lattices of type `A_n`.
//!
//! Weights are stored in fundamental-weight coordinates: `coords[i - 1]` is the
//! coefficient of `ω_i`. The bilinear form is normalized by `(ω_i, α_j) = δ_ij`,
//! so weight–weight pairings are entries of the inverse Cartan matrix
//! `min(i, j) (n + 1 - max(i, j)) / (n + 1)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{max, min};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::schur::Partition;

/// Exact rational used for pairings and root coordinates.
pub type Rational = Ratio<i64>;

/// The root system of `sl_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystem {
    n: usize,
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

/// An element of `Q ⊗ Q` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVector {
    coords: Vec<Rational>,
}

/// `λ = 2 λ0 + λ1` with `λ0` dominant and `λ1 ∈ P^+(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub lambda0: Weight,
    pub lambda1: Weight,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(RootSystem { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `2` on the diagonal, `-1` on the off-diagonals.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    }

    pub fn zero(&self) -> Weight {
        Weight { coords: vec![0; self.n] }
    }

    /// `ω_i`; `ω_0` and `ω_{n+1}` (and anything further out) are zero.
    pub fn omega(&self, i: usize) -> Weight {
        let mut w = self.zero();
        if (1..=self.n).contains(&i) {
            w.coords[i - 1] = 1;
        }
        w
    }

    /// Simple root `α_i` expressed in fundamental weights.
    pub fn alpha(&self, i: usize) -> Weight {
        self.alpha_range(i, i)
    }

    /// `α_{i,j} = α_i + ⋯ + α_j = ω_i + ω_j - ω_{i-1} - ω_{j+1}`; zero when `i > j`.
    pub fn alpha_range(&self, i: usize, j: usize) -> Weight {
        assert!(i >= 1 && j <= self.n, "root index out of range");
        if i > j {
            return self.zero();
        }
        let mut w = self.zero();
        w.bump(i, 1);
        w.bump(j, 1);
        if i > 1 {
            w.bump(i - 1, -1);
        }
        w.bump(j + 1, -1);
        w
    }

    /// `ρ = Σ ω_i`.
    pub fn rho(&self) -> Weight {
        Weight { coords: vec![1; self.n] }
    }

    pub fn weight(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.n {
            return Err(Error::Arity { expected: self.n, found: coords.len() });
        }
        Ok(Weight { coords: coords.to_vec() })
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch { expected: self.n, found: w.rank() });
        }
        Ok(())
    }

    /// `(x, y)` scaled by `n + 1`, which is always an integer.
    pub(crate) fn pairing_scaled(&self, x: &Weight, y: &Weight) -> i64 {
        debug_assert_eq!(x.rank(), self.n);
        debug_assert_eq!(y.rank(), self.n);
        let big_n = self.n as i64 + 1;
        let mut total = 0i64;
        for (i, &xi) in x.coords.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coords.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let (a, b) = (min(i, j) as i64 + 1, max(i, j) as i64 + 1);
                total += xi * yj * a * (big_n - b);
            }
        }
        total
    }

    /// The symmetric form with `(ω_i, α_j) = δ_ij`.
    pub fn pairing(&self, x: &Weight, y: &Weight) -> Result<Rational> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.pair(x, y))
    }

    pub(crate) fn pair(&self, x: &Weight, y: &Weight) -> Rational {
        Ratio::new(self.pairing_scaled(x, y), self.n as i64 + 1)
    }

    /// Pairing of two root vectors or a root vector with a weight, through the
    /// simple-root expansion of the first argument.
    pub fn pairing_roots(&self, x: &RootVector, y: &Weight) -> Result<Rational> {
        self.check(y)?;
        if x.coords.len() != self.n {
            return Err(Error::RankMismatch { expected: self.n, found: x.coords.len() });
        }
        Ok(x.coords.iter().zip(&y.coords).map(|(c, &yi)| c * Ratio::from_integer(yi)).sum())
    }

    /// Simple-root coordinates scaled by `n + 1` (always integral).
    fn root_coords_scaled(&self, mu: &Weight) -> Vec<i64> {
        let big_n = self.n as i64 + 1;
        (0..self.n)
            .map(|i| {
                mu.coords
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| c * (min(i, j) as i64 + 1) * (big_n - (max(i, j) as i64 + 1)))
                    .sum()
            })
            .collect()
    }

    pub fn to_root_coords(&self, mu: &Weight) -> RootVector {
        let big_n = self.n as i64 + 1;
        RootVector {
            coords: self.root_coords_scaled(mu).into_iter().map(|c| Ratio::new(c, big_n)).collect(),
        }
    }

    /// Simple-root coordinates of `mu` if `mu ∈ Q`.
    pub fn root_coords_integral(&self, mu: &Weight) -> Option<Vec<i64>> {
        let big_n = self.n as i64 + 1;
        let scaled = self.root_coords_scaled(mu);
        if scaled.iter().all(|c| c % big_n == 0) {
            Some(scaled.into_iter().map(|c| c / big_n).collect())
        } else {
            None
        }
    }

    /// Simple-root coordinates of `mu` if `mu ∈ Q^+`.
    pub fn q_plus_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        self.root_coords_integral(mu).filter(|c| c.iter().all(|&x| x >= 0))
    }

    pub fn in_q_plus(&self, mu: &Weight) -> bool {
        self.q_plus_coords(mu).is_some()
    }

    /// `μ ≤ λ` iff `λ - μ ∈ Q^+`.
    pub fn leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.in_q_plus(&(lambda - mu))
    }

    /// The weight `Σ c_i α_i`.
    pub fn from_root_coords(&self, coords: &[i64]) -> Weight {
        assert_eq!(coords.len(), self.n);
        let mut w = self.zero();
        for (i, &c) in coords.iter().enumerate() {
            w.coords[i] += 2 * c;
            if i > 0 {
                w.coords[i - 1] -= c;
            }
            if i + 1 < self.n {
                w.coords[i + 1] -= c;
            }
        }
        w
    }

    /// `η^∨ = Σ s_i ω_i` for `η = Σ s_i α_i ∈ Q`.
    pub fn vee(&self, eta: &Weight) -> Weight {
        let coords = self.root_coords_integral(eta).expect("vee of a non-root-lattice element");
        Weight { coords }
    }

    /// `ht_r η = Σ s_i` for `η = Σ s_i α_i ∈ Q`.
    pub fn ht_r(&self, eta: &Weight) -> i64 {
        self.root_coords_integral(eta).expect("ht_r of a non-root-lattice element").iter().sum()
    }

    pub fn decompose(&self, lambda: &Weight) -> Result<Decomposition> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant);
        }
        Ok(lambda.split())
    }

    /// Admissibility of the pair `(ν, λ)`.
    pub fn is_admissible(&self, nu: &Weight, lambda: &Weight) -> bool {
        if !nu.is_dominant() || !lambda.is_dominant() {
            return false;
        }
        let l = lambda.split();
        if l.lambda1.is_zero() {
            return true;
        }
        let v = nu.split();
        let (min_l1, _) = l.lambda1.support_bounds();
        let (_, max_v1) = v.lambda1.support_bounds();
        if max_v1 >= min_l1 {
            return false;
        }
        if v.lambda0.is_zero() {
            return true;
        }
        match v.lambda0.fundamental_index() {
            Some(i) => i + 1 < min_l1 && v.lambda1.get(i) == 0 && v.lambda1.get(i + 1) == 0,
            None => false,
        }
    }

    /// All dominant `μ ≤ λ`, each once, ordered by increasing `ht_r(λ - μ)` with
    /// ties broken by decreasing ω-coordinates. Every `μ' > μ` precedes `μ`.
    pub fn interval(&self, lambda: &Weight) -> Vec<Weight> {
        assert!(lambda.is_dominant(), "interval of a non-dominant weight");
        let big_n = self.n as i64 + 1;
        // Dominant weights have nonnegative root coordinates, which bounds the search box.
        let bounds: Vec<i64> =
            self.root_coords_scaled(lambda).into_iter().map(|c| c.div_euclid(big_n)).collect();
        let mut found: Vec<(i64, Weight)> = Vec::new();
        let mut steps = vec![0i64; self.n];
        loop {
            let drop = self.from_root_coords(&steps);
            let mu = lambda - &drop;
            if mu.is_dominant() {
                found.push((steps.iter().sum(), mu));
            }
            // odometer over the box
            let mut k = 0;
            loop {
                if k == self.n {
                    found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
                    return found.into_iter().map(|(_, w)| w).collect();
                }
                if steps[k] < bounds[k] {
                    steps[k] += 1;
                    break;
                }
                steps[k] = 0;
                k += 1;
            }
        }
    }

    /// Dominant weights of height exactly `ht`, lexicographically decreasing.
    pub fn dominant_of_height(&self, ht: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.n];
        compositions(ht, 0, &mut cur, &mut out);
        out.into_iter().map(|coords| Weight { coords }).collect()
    }

    /// Dominant weights of height at most `ht_max`, by increasing height.
    pub fn dominant_up_to(&self, ht_max: i64) -> Vec<Weight> {
        (0..=ht_max).flat_map(|h| self.dominant_of_height(h)).collect()
    }

    /// All of `P^+(1)`.
    pub fn p_plus_one(&self) -> Vec<Weight> {
        (0u64..(1u64 << self.n))
            .map(|bits| Weight { coords: (0..self.n).map(|i| ((bits >> i) & 1) as i64).collect() })
            .collect()
    }

    /// The unique `r ∈ [0, n]` with `μ - ω_r ∈ Q`.
    pub fn residue(&self, mu: &Weight) -> usize {
        let big_n = self.n + 1;
        let s: i64 = mu.coords.iter().enumerate().map(|(i, &c)| (i as i64 + 1) * c).sum();
        s.rem_euclid(big_n as i64) as usize
    }

    /// `to_partition(μ)_j = Σ_{i ≥ j} μ(h_i)`, with `n + 1` parts (last one zero).
    pub fn to_partition(&self, mu: &Weight) -> Result<Partition> {
        self.check(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant);
        }
        let mut parts = vec![0usize; self.n + 1];
        let mut acc = 0usize;
        for i in (0..self.n).rev() {
            acc += mu.coords[i] as usize;
            parts[i] = acc;
        }
        Ok(Partition::from_parts_unchecked(parts))
    }

    /// Left inverse of [`to_partition`](Self::to_partition); strips full columns.
    pub fn from_partition(&self, p: &Partition) -> Result<Weight> {
        let parts = p.parts();
        if parts.iter().filter(|&&x| x > 0).count() > self.n + 1 {
            return Err(Error::TooManyParts { max: self.n + 1, found: parts.len() });
        }
        let at = |i: usize| parts.get(i).copied().unwrap_or(0) as i64;
        Ok(Weight { coords: (0..self.n).map(|i| at(i) - at(i + 1)).collect() })
    }
}

fn compositions(rest: i64, idx: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if idx + 1 == cur.len() {
        cur[idx] = rest;
        out.push(cur.clone());
        return;
    }
    for v in (0..=rest).rev() {
        cur[idx] = v;
        compositions(rest - v, idx + 1, cur, out);
    }
}

impl Weight {
    pub fn from_coords(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// `λ(h_i)` for `i ∈ [1, n]`; any other index reads as zero.
    pub fn get(&self, i: usize) -> i64 {
        if i >= 1 && i <= self.coords.len() {
            self.coords[i - 1]
        } else {
            0
        }
    }

    fn bump(&mut self, i: usize, by: i64) {
        if i >= 1 && i <= self.coords.len() {
            self.coords[i - 1] += by;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn in_p_plus_one(&self) -> bool {
        self.coords.iter().all(|&c| c == 0 || c == 1)
    }

    /// `Ht λ`: the sum of the ω-coordinates.
    pub fn ht(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Per-coordinate quotient and remainder by two.
    pub(crate) fn split(&self) -> Decomposition {
        Decomposition {
            lambda0: Weight { coords: self.coords.iter().map(|c| c.div_euclid(2)).collect() },
            lambda1: Weight { coords: self.coords.iter().map(|c| c.rem_euclid(2)).collect() },
        }
    }

    /// `(min supp μ, max supp μ)`, 1-based; `(0, 0)` for the zero weight.
    pub fn support_bounds(&self) -> (usize, usize) {
        let first = self.coords.iter().position(|&c| c > 0);
        let last = self.coords.iter().rposition(|&c| c > 0);
        match (first, last) {
            (Some(a), Some(b)) => (a + 1, b + 1),
            _ => (0, 0),
        }
    }

    pub fn min_support(&self) -> usize {
        self.support_bounds().0
    }

    pub fn max_support(&self) -> usize {
        self.support_bounds().1
    }

    /// `Some(i)` if this weight is `ω_i` (`Some(0)` for zero).
    pub fn fundamental_index(&self) -> Option<usize> {
        if self.is_zero() {
            return Some(0);
        }
        let (a, b) = self.support_bounds();
        (a == b && self.get(a) == 1).then_some(a)
    }
}

/// `λ = 0` or `m < min supp λ`.
pub fn lt_min(m: usize, lambda: &Weight) -> bool {
    lambda.is_zero() || m < lambda.min_support()
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "w{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl RootVector {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn in_q_plus(&self) -> bool {
        self.is_integral() && self.coords.iter().all(|c| *c.numer() >= 0)
    }

    /// Sum of the simple-root coordinates.
    pub fn ht_r(&self) -> Rational {
        self.coords.iter().sum()
    }
}

macro_rules! weight_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Weight> for &Weight {
            type Output = Weight;
            fn $method(self, rhs: &Weight) -> Weight {
                assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
                Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a $op b).collect() }
            }
        }
        impl $trait<Weight> for Weight {
            type Output = Weight;
            fn $method(self, rhs: Weight) -> Weight {
                &self $op &rhs
            }
        }
        impl $trait<&Weight> for Weight {
            type Output = Weight;
            fn $method(self, rhs: &Weight) -> Weight {
                &self $op rhs
            }
        }
        impl $trait<Weight> for &Weight {
            type Output = Weight;
            fn $method(self, rhs: Weight) -> Weight {
                self $op &rhs
            }
        }
    };
}

weight_binop!(Add, add, +);
weight_binop!(Sub, sub, -);

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight { coords: rhs.coords.iter().map(|c| self * c).collect() }
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::new(2).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::from_coords(c.to_vec())
    }

    #[test]
    fn rank_zero_rejected() {
        assert_eq!(RootSystem::new(0), Err(Error::InvalidRank(0)));
    }

    #[test]
    fn cartan_is_tridiagonal() {
        let rs = RootSystem::new(3).unwrap();
        assert_eq!(rs.cartan_matrix(), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
    }

    #[test]
    fn pairing_normalization() {
        let rs = a2();
        assert_eq!(rs.pairing(&rs.omega(1), &rs.alpha(1)).unwrap(), Ratio::from_integer(1));
        assert_eq!(rs.pairing(&rs.omega(1), &rs.alpha(2)).unwrap(), Ratio::from_integer(0));
        assert_eq!(rs.pairing(&rs.omega(1), &rs.omega(1)).unwrap(), Ratio::new(2, 3));
        assert_eq!(rs.pairing(&rs.alpha(1), &rs.alpha(1)).unwrap(), Ratio::from_integer(2));
        assert_eq!(rs.pairing(&rs.alpha(1), &rs.alpha(2)).unwrap(), Ratio::from_integer(-1));
    }

    #[test]
    fn pairing_rank_mismatch() {
        let rs = a2();
        assert!(matches!(
            rs.pairing(&w(&[1, 0, 0]), &rs.omega(1)),
            Err(Error::RankMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn root_coordinates() {
        let rs = a2();
        let r = rs.to_root_coords(&rs.omega(1));
        assert_eq!(r.coords(), &[Ratio::new(2, 3), Ratio::new(1, 3)]);
        assert!(!r.is_integral());
        let r = rs.to_root_coords(&w(&[1, 1]));
        assert_eq!(r.coords(), &[Ratio::from_integer(1), Ratio::from_integer(1)]);
        assert!(r.in_q_plus());
        assert_eq!(rs.to_root_coords(&rs.zero()).coords(), &[Ratio::from_integer(0); 2]);
        // (ω_1, α_1 + α_2) through the root-vector route
        assert_eq!(rs.pairing_roots(&r, &rs.omega(1)).unwrap(), Ratio::new(1, 1));
    }

    #[test]
    fn alpha_range_endpoints() {
        let rs = RootSystem::new(3).unwrap();
        assert_eq!(rs.alpha_range(1, 3), w(&[1, 0, 1]));
        assert_eq!(rs.alpha_range(2, 2), w(&[-1, 2, -1]));
        assert_eq!(&rs.alpha(1) + &rs.alpha(2), rs.alpha_range(1, 2));
    }

    #[test]
    fn order_examples() {
        let rs = a2();
        assert!(rs.leq(&w(&[1, 1]), &w(&[2, 2])));
        assert!(!rs.leq(&rs.zero(), &rs.omega(1)));
        assert!(rs.leq(&w(&[2, 3]), &w(&[2, 3])));
    }

    #[test]
    fn decomposition_examples() {
        let rs = a2();
        let d = rs.decompose(&w(&[2, 3])).unwrap();
        assert_eq!((d.lambda0, d.lambda1), (w(&[1, 1]), w(&[0, 1])));
        let d = rs.decompose(&rs.zero()).unwrap();
        assert_eq!((d.lambda0, d.lambda1), (rs.zero(), rs.zero()));
        let d = rs.decompose(&w(&[1, 1])).unwrap();
        assert_eq!((d.lambda0, d.lambda1), (rs.zero(), w(&[1, 1])));
        assert_eq!(rs.decompose(&w(&[-1, 2])), Err(Error::NotDominant));
    }

    #[test]
    fn heights_and_support() {
        let rs = a2();
        assert_eq!(w(&[2, 3]).ht(), 5);
        assert_eq!(rs.zero().ht(), 0);
        assert_eq!(rs.ht_r(&w(&[1, 1])), 2);
        assert_eq!(rs.omega(2).support_bounds(), (2, 2));
        assert_eq!(w(&[1, 0, 1]).support_bounds(), (1, 3));
        assert_eq!(rs.zero().support_bounds(), (0, 0));
        assert!(lt_min(5, &rs.zero()));
        assert!(lt_min(1, &rs.omega(2)));
        assert!(!lt_min(2, &rs.omega(2)));
    }

    #[test]
    fn boundary_fundamentals_are_zero() {
        let rs = a2();
        assert!(rs.omega(0).is_zero());
        assert!(rs.omega(3).is_zero());
        assert_eq!(rs.omega(2).get(3), 0);
        assert_eq!(rs.omega(2).get(0), 0);
    }

    #[test]
    fn admissibility_examples() {
        let rs = a2();
        for nu in rs.dominant_up_to(4) {
            assert!(rs.is_admissible(&nu, &rs.zero()));
            assert!(rs.is_admissible(&rs.zero(), &nu));
        }
        assert!(!rs.is_admissible(&w(&[2, 0]), &w(&[1, 1])));
        assert!(rs.is_admissible(&w(&[1, 1]), &w(&[0, 2])));
        let rs = RootSystem::new(4).unwrap();
        // ν0 = ω_1 needs 1 < min λ1 - 1 and ν1 clear of indices 1, 2
        assert!(rs.is_admissible(&w(&[2, 0, 0, 0]), &w(&[0, 0, 1, 0])));
        assert!(!rs.is_admissible(&w(&[2, 0, 0, 0]), &w(&[0, 1, 0, 0])));
        assert!(!rs.is_admissible(&w(&[2, 1, 0, 0]), &w(&[0, 0, 0, 1])));
        assert!(rs.is_admissible(&w(&[1, 0, 0, 0]), &w(&[0, 1, 0, 0])));
        assert!(!rs.is_admissible(&w(&[1, 0, 0, 0]), &w(&[1, 0, 0, 1])));
    }

    #[test]
    fn interval_examples() {
        let rs = a2();
        assert_eq!(rs.interval(&w(&[1, 1])), vec![w(&[1, 1]), w(&[0, 0])]);
        assert_eq!(rs.interval(&rs.omega(1)), vec![rs.omega(1)]);
        assert_eq!(rs.interval(&rs.zero()), vec![rs.zero()]);
        let iv = rs.interval(&w(&[2, 2]));
        assert_eq!(iv.len(), 5);
        assert!(iv.contains(&w(&[3, 0])) && iv.contains(&w(&[0, 3])));
    }

    #[test]
    fn interval_is_downward_closed_and_ordered() {
        let rs = RootSystem::new(3).unwrap();
        for lambda in rs.dominant_up_to(5) {
            let iv = rs.interval(&lambda);
            assert_eq!(iv[0], lambda);
            for (i, mu) in iv.iter().enumerate() {
                for kappa in rs.interval(mu) {
                    assert!(iv.contains(&kappa));
                    let pos = iv.iter().position(|x| *x == kappa).unwrap();
                    assert!(kappa == *mu || pos > i);
                }
            }
            // brute force over a generous box of dominant weights of the same class
            for mu in rs.dominant_up_to(lambda.ht()) {
                assert_eq!(rs.leq(&mu, &lambda), iv.contains(&mu));
            }
        }
    }

    #[test]
    fn partitions_roundtrip() {
        let rs = a2();
        assert_eq!(rs.to_partition(&rs.omega(1)).unwrap().parts(), &[1, 0, 0]);
        assert_eq!(rs.to_partition(&w(&[2, 3])).unwrap().parts(), &[5, 3, 0]);
        assert_eq!(rs.from_partition(&Partition::new(vec![2, 1, 1])).unwrap(), rs.omega(1));
        assert!(matches!(
            rs.from_partition(&Partition::new(vec![1, 1, 1, 1])),
            Err(Error::TooManyParts { .. })
        ));
    }

    #[test]
    fn decomposition_bijection_sweep() {
        for n in 1..=4 {
            let rs = RootSystem::new(n).unwrap();
            let all = rs.dominant_up_to(6);
            let mut seen = alloc::collections::BTreeSet::new();
            for lambda in &all {
                let d = rs.decompose(lambda).unwrap();
                assert!(d.lambda0.is_dominant() && d.lambda1.in_p_plus_one());
                assert_eq!(&(2 * &d.lambda0) + &d.lambda1, *lambda);
                assert!(seen.insert((d.lambda0, d.lambda1)));
            }
        }
    }

    #[test]
    fn exponent_of_p_is_even() {
        for n in 1..=3 {
            let rs = RootSystem::new(n).unwrap();
            for lambda in rs.dominant_up_to(5) {
                for mu in rs.interval(&lambda) {
                    let mu1 = mu.split().lambda1;
                    let v = rs.pair(&(&lambda + &mu1), &(&lambda - &mu));
                    assert!(v.is_integer() && v.to_integer() % 2 == 0 && v.to_integer() >= 0);
                }
            }
        }
    }

    #[test]
    fn residue_matches_root_lattice() {
        let rs = RootSystem::new(3).unwrap();
        for mu in rs.dominant_up_to(4) {
            let r = rs.residue(&mu);
            assert!(rs.root_coords_integral(&(&mu - &rs.omega(r))).is_some());
        }
    }
}
