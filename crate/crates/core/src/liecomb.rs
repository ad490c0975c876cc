//! Root-system combinatorics of `Sp(2n)` relative to the compact Cartan subalgebra.
//!
//! Weights are integer vectors in the basis `e_1, ..., e_n`. The positive system
//! is `2e_j`, `e_j + e_k` (non-compact) and `e_j - e_k` (compact), `j < k`.
//! The Weyl group is the hyperoctahedral group of signed permutations and the
//! compact Weyl group is the symmetric group inside it.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("weight {0} is not dominant (need weakly decreasing, last entry >= 0)")]
    NotDominant(WeightVec),
    #[error("weight {weight} is singular: orthogonal to the root {root}")]
    Singular { weight: WeightVec, root: WeightVec },
    #[error("expected a weight of length {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error("minimal K-type {0:?} is not integral")]
    NonIntegral(Vec<Rational64>),
    #[error("rank must be at least 1")]
    ZeroRank,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[j] = 1;
        WeightVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &WeightVec) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Weakly decreasing, i.e. dominant for the compact positive roots.
    pub fn is_k_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Dominant for the full positive system.
    pub fn is_dominant(&self) -> bool {
        self.is_k_dominant() && self.0.last().is_none_or(|&x| x >= 0)
    }

    /// Negate and reverse: the effect of complex conjugation on `K`-weights.
    pub fn conjugate(&self) -> Self {
        WeightVec(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn to_rational(&self) -> Vec<Rational64> {
        self.0.iter().map(|&x| Rational64::from_integer(x)).collect()
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec(self.0.iter().map(|a| -a).collect())
    }
}

/// Shape of a root, with zero-based indices and `j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    /// `±2e_j`
    Long(usize),
    /// `±(e_j + e_k)`
    Sum(usize, usize),
    /// `±(e_j - e_k)`, compact
    Diff(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub weight: WeightVec,
    pub kind: RootKind,
    pub compact: bool,
    pub positive: bool,
}

impl Root {
    pub fn new(n: usize, kind: RootKind, positive: bool) -> Self {
        let mut w = vec![0i64; n];
        let compact = match kind {
            RootKind::Long(j) => {
                w[j] = 2;
                false
            }
            RootKind::Sum(j, k) => {
                w[j] = 1;
                w[k] = 1;
                false
            }
            RootKind::Diff(j, k) => {
                w[j] = 1;
                w[k] = -1;
                true
            }
        };
        let weight = WeightVec(w);
        let weight = if positive { weight } else { -&weight };
        Root {
            weight,
            kind,
            compact,
            positive,
        }
    }

    /// Recovers the root with the given weight, if it is one.
    pub fn from_weight(w: &WeightVec) -> Option<Root> {
        let n = w.len();
        let support: Vec<usize> = (0..n).filter(|&i| w.0[i] != 0).collect();
        match *support.as_slice() {
            [j] if w.0[j].abs() == 2 => Some(Root::new(n, RootKind::Long(j), w.0[j] > 0)),
            [j, k] if w.0[j].abs() == 1 && w.0[k].abs() == 1 => {
                if w.0[j] == w.0[k] {
                    Some(Root::new(n, RootKind::Sum(j, k), w.0[j] > 0))
                } else {
                    Some(Root::new(n, RootKind::Diff(j, k), w.0[j] > 0))
                }
            }
            _ => None,
        }
    }

    pub fn negate(&self) -> Root {
        Root::new(self.weight.len(), self.kind, !self.positive)
    }
}

/// Positive non-compact roots in the canonical order
/// `2e_1, ..., 2e_n, e_1+e_2, e_1+e_3, ..., e_{n-1}+e_n`.
pub fn positive_noncompact(n: usize) -> Vec<Root> {
    let mut out: Vec<Root> = (0..n).map(|j| Root::new(n, RootKind::Long(j), true)).collect();
    for j in 0..n {
        for k in j + 1..n {
            out.push(Root::new(n, RootKind::Sum(j, k), true));
        }
    }
    out
}

pub fn positive_compact(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            out.push(Root::new(n, RootKind::Diff(j, k), true));
        }
    }
    out
}

/// All `2n^2` roots: the positive system followed by its negatives.
pub fn roots(n: usize) -> Vec<Root> {
    let mut pos = positive_noncompact(n);
    pos.extend(positive_compact(n));
    let neg: Vec<Root> = pos.iter().map(Root::negate).collect();
    pos.extend(neg);
    pos
}

/// Half-sum of the positive roots, `(n, n-1, ..., 1)`.
pub fn rho(n: usize) -> WeightVec {
    WeightVec((1..=n as i64).rev().collect())
}

/// Element of `{±1}^n ⋊ S_n` acting by `(w v)_i = signs[i] * v[perm[i]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, v: &WeightVec) -> WeightVec {
        WeightVec(
            self.perm
                .iter()
                .zip(&self.signs)
                .map(|(&p, &s)| s as i64 * v.0[p])
                .collect(),
        )
    }

    /// `self ∘ other`, so that `(a.compose(b)).apply(v) == a.apply(&b.apply(v))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * other.signs[p])
            .collect();
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }

    /// Whether the element lies in the compact Weyl group `S_n`.
    pub fn is_compact(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn flip_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }
}

fn check_rank(n: usize, lambda: &WeightVec) -> Result<(), LieError> {
    if n == 0 {
        return Err(LieError::ZeroRank);
    }
    if lambda.len() != n {
        return Err(LieError::Length {
            expected: n,
            got: lambda.len(),
        });
    }
    Ok(())
}

/// One representative per coset of `W_G / W_K`, chosen so that `w(λ + ρ)` is
/// `K`-dominant. Representatives are ordered by the number of sign flips, then by
/// the flipped positions read from the right (flipping later coordinates first).
pub fn coset_reps(
    n: usize,
    lambda: &WeightVec,
) -> Result<Vec<(SignedPermutation, WeightVec)>, LieError> {
    check_rank(n, lambda)?;
    if !lambda.is_dominant() {
        return Err(LieError::NotDominant(lambda.clone()));
    }
    let shifted = lambda + &rho(n);
    let mut patterns: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).rev().filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    // Each pattern lists flipped positions in descending order.
    patterns.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));

    Ok(patterns
        .into_iter()
        .map(|flips| {
            let flip = SignedPermutation {
                perm: (0..n).collect(),
                signs: (0..n)
                    .map(|i| if flips.contains(&i) { -1 } else { 1 })
                    .collect(),
            };
            let v = flip.apply(&shifted);
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| v.0[b].cmp(&v.0[a]));
            let sort = SignedPermutation {
                perm: order,
                signs: vec![1; n],
            };
            let w = sort.compose(&flip);
            let image = w.apply(&shifted);
            debug_assert!(image.is_strictly_decreasing());
            (w, image)
        })
        .collect())
}

/// Half-sums `δ_G` and `δ_K` of the roots (resp. compact roots) positive on `Λ`.
pub fn delta_sums(lambda: &WeightVec) -> Result<(Vec<Rational64>, Vec<Rational64>), LieError> {
    let n = lambda.len();
    if n == 0 {
        return Err(LieError::ZeroRank);
    }
    let mut two_g = vec![0i64; n];
    let mut two_k = vec![0i64; n];
    for root in roots(n) {
        let pairing = root.weight.dot(lambda);
        if pairing == 0 {
            return Err(LieError::Singular {
                weight: lambda.clone(),
                root: root.weight,
            });
        }
        if pairing > 0 {
            for i in 0..n {
                two_g[i] += root.weight.0[i];
                if root.compact {
                    two_k[i] += root.weight.0[i];
                }
            }
        }
    }
    let half = |v: Vec<i64>| v.into_iter().map(|x| Rational64::new(x, 2)).collect();
    Ok((half(two_g), half(two_k)))
}

/// Hodge type `(p, q)`: positive non-compact roots pairing positively (resp.
/// negatively) with `Λ`.
pub fn hodge_type(lambda: &WeightVec) -> (usize, usize) {
    let mut p = 0;
    let mut q = 0;
    for root in positive_noncompact(lambda.len()) {
        match root.weight.dot(lambda).signum() {
            1 => p += 1,
            -1 => q += 1,
            _ => {}
        }
    }
    (p, q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteSeriesDatum {
    pub rep: SignedPermutation,
    /// Harish-Chandra parameter `Λ = w(λ + ρ)`.
    pub hc_param: WeightVec,
    /// Highest weight `Λ + δ_G - 2δ_K` of the minimal `K`-type.
    pub min_k_type: WeightVec,
    pub hodge: (usize, usize),
}

/// The `2^n` members of the discrete-series packet with infinitesimal character `λ + ρ`.
pub fn discrete_series_packet(
    n: usize,
    lambda: &WeightVec,
) -> Result<Vec<DiscreteSeriesDatum>, LieError> {
    coset_reps(n, lambda)?
        .into_iter()
        .map(|(rep, hc)| {
            let (dg, dk) = delta_sums(&hc)?;
            let exact: Vec<Rational64> = hc
                .to_rational()
                .into_iter()
                .zip(dg.iter().zip(&dk))
                .map(|(l, (g, k))| l + g - k * 2)
                .collect();
            if exact.iter().any(|x| !x.is_integer()) {
                return Err(LieError::NonIntegral(exact));
            }
            let min_k_type = WeightVec(exact.iter().map(|x| x.to_integer()).collect());
            Ok(DiscreteSeriesDatum {
                hodge: hodge_type(&hc),
                rep,
                hc_param: hc,
                min_k_type,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec(v.to_vec())
    }

    fn r(v: &[i64]) -> Vec<Rational64> {
        v.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn root_counts() {
        let rs = roots(3);
        assert_eq!(rs.len(), 18);
        assert_eq!(rs.iter().filter(|r| r.compact).count(), 6);
        assert_eq!(rs.iter().filter(|r| r.positive && !r.compact).count(), 6);

        let rs = roots(1);
        assert_eq!(rs.len(), 2);
        assert!(rs.iter().all(|r| !r.compact));
        assert_eq!(rs[0].weight, w(&[2]));

        let pos: Vec<WeightVec> = roots(2)
            .into_iter()
            .filter(|r| r.positive)
            .map(|r| r.weight)
            .collect();
        assert_eq!(pos, vec![w(&[2, 0]), w(&[0, 2]), w(&[1, 1]), w(&[1, -1])]);
        assert_eq!(roots(2).len(), 8);
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(3), w(&[3, 2, 1]));
        assert_eq!(rho(1), w(&[1]));
        assert_eq!(rho(4), w(&[4, 3, 2, 1]));
        // rho is the half-sum of the positive roots
        let sum = roots(4)
            .into_iter()
            .filter(|r| r.positive)
            .fold(WeightVec::zero(4), |acc, r| &acc + &r.weight);
        assert_eq!(sum, &rho(4) + &rho(4));
    }

    #[test]
    fn root_from_weight_round_trip() {
        for root in roots(4) {
            assert_eq!(Root::from_weight(&root.weight), Some(root.clone()));
        }
        assert_eq!(Root::from_weight(&w(&[1, 0, 0])), None);
    }

    #[test]
    fn coset_images() {
        let images: Vec<WeightVec> = coset_reps(3, &WeightVec::zero(3))
            .unwrap()
            .into_iter()
            .map(|(_, im)| im)
            .collect();
        let expected = [
            [3, 2, 1],
            [3, 2, -1],
            [3, 1, -2],
            [2, 1, -3],
            [3, -1, -2],
            [2, -1, -3],
            [1, -2, -3],
            [-1, -2, -3],
        ];
        assert_eq!(images, expected.iter().map(|v| w(v)).collect::<Vec<_>>());

        let images: Vec<WeightVec> = coset_reps(1, &w(&[0])).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(images, vec![w(&[1]), w(&[-1])]);

        let images: Vec<WeightVec> = coset_reps(2, &w(&[0, 0])).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(images, vec![w(&[2, 1]), w(&[2, -1]), w(&[1, -2]), w(&[-1, -2])]);
    }

    #[test]
    fn coset_reps_rejects_non_dominant() {
        assert!(matches!(coset_reps(2, &w(&[0, 1])), Err(LieError::NotDominant(_))));
        assert!(matches!(coset_reps(2, &w(&[1, -1])), Err(LieError::NotDominant(_))));
        assert!(matches!(coset_reps(3, &w(&[0, 0])), Err(LieError::Length { .. })));
    }

    #[test]
    fn coset_reps_are_distinct_cosets() {
        let reps = coset_reps(4, &w(&[3, 1, 1, 0])).unwrap();
        assert_eq!(reps.len(), 16);
        for (i, (a, _)) in reps.iter().enumerate() {
            for (b, _) in &reps[i + 1..] {
                // representatives of W_K \\ W_G: b a^{-1} must not lie in W_K
                assert!(!b.compose(&a.inverse()).is_compact());
            }
        }
    }

    #[test]
    fn delta_examples() {
        let (g, k) = delta_sums(&w(&[3, 2, 1])).unwrap();
        assert_eq!(g, r(&[3, 2, 1]));
        assert_eq!(k, r(&[1, 0, -1]));
        let (g, _) = delta_sums(&w(&[2, 1, -3])).unwrap();
        assert_eq!(g, r(&[2, 1, -3]));
        let (g, k) = delta_sums(&w(&[1])).unwrap();
        assert_eq!(g, r(&[1]));
        assert_eq!(k, r(&[0]));
        assert!(matches!(delta_sums(&w(&[2, 2, 1])), Err(LieError::Singular { .. })));
        assert!(matches!(delta_sums(&w(&[2, 0])), Err(LieError::Singular { .. })));
    }

    #[test]
    fn delta_g_is_chamber_image_of_rho() {
        for n in 1..=4 {
            for (rep, hc) in coset_reps(n, &WeightVec::zero(n)).unwrap() {
                let (g, _) = delta_sums(&hc).unwrap();
                assert_eq!(g, rep.apply(&rho(n)).to_rational());
            }
        }
    }

    #[test]
    fn packet_n3() {
        let packet = discrete_series_packet(3, &WeightVec::zero(3)).unwrap();
        let kt: Vec<WeightVec> = packet.iter().map(|d| d.min_k_type.clone()).collect();
        let expected = [
            [4, 4, 4],
            [4, 4, 0],
            [4, 2, -2],
            [2, 2, -4],
            [4, -2, -2],
            [2, -2, -4],
            [0, -4, -4],
            [-4, -4, -4],
        ];
        assert_eq!(kt, expected.iter().map(|v| w(v)).collect::<Vec<_>>());

        let mid: Vec<_> = packet.iter().filter(|d| d.hodge == (3, 3)).collect();
        assert_eq!(mid.len(), 2);
        assert_eq!(mid[0].hc_param, w(&[2, 1, -3]));
        assert_eq!(mid[0].min_k_type, w(&[2, 2, -4]));
        assert_eq!(mid[1].hc_param, w(&[3, -1, -2]));
        assert_eq!(mid[1].min_k_type, w(&[4, -2, -2]));

        let gen: Vec<_> = packet
            .iter()
            .filter(|d| d.hodge == (4, 2) || d.hodge == (2, 4))
            .map(|d| d.hc_param.clone())
            .collect();
        assert_eq!(gen, vec![w(&[3, 1, -2]), w(&[2, -1, -3])]);
    }

    #[test]
    fn packet_n1() {
        let packet = discrete_series_packet(1, &w(&[0])).unwrap();
        let kt: Vec<WeightVec> = packet.iter().map(|d| d.min_k_type.clone()).collect();
        assert_eq!(kt, vec![w(&[2]), w(&[-2])]);
        assert_eq!(packet[0].hodge, (1, 0));
        assert_eq!(packet[1].hodge, (0, 1));
    }

    #[test]
    fn packet_properties() {
        let lambdas = [vec![0, 0, 0], vec![2, 1, 0], vec![5, 5, 2], vec![1, 0, 0, 0], vec![3, 2, 2, 1]];
        for l in lambdas {
            let n = l.len();
            let packet = discrete_series_packet(n, &WeightVec(l)).unwrap();
            assert_eq!(packet.len(), 1 << n);
            for d in &packet {
                assert!(d.hc_param.is_strictly_decreasing());
                assert!(d.min_k_type.is_k_dominant());
                assert_eq!(d.hodge.0 + d.hodge.1, n * (n + 1) / 2);
                // conjugation maps the packet to itself and swaps the Hodge type
                let conj = d.hc_param.conjugate();
                let partner = packet.iter().find(|e| e.hc_param == conj).unwrap();
                assert_eq!(partner.hodge, (d.hodge.1, d.hodge.0));
                assert_eq!(partner.min_k_type, d.min_k_type.conjugate());
            }
        }
    }

    #[test]
    fn signed_permutation_group_law() {
        let a = SignedPermutation { perm: vec![2, 0, 1], signs: vec![-1, 1, -1] };
        let b = SignedPermutation { perm: vec![1, 2, 0], signs: vec![1, -1, -1] };
        let c = SignedPermutation { perm: vec![0, 2, 1], signs: vec![-1, -1, 1] };
        let v = w(&[5, -3, 7]);
        assert_eq!(a.compose(&b).apply(&v), a.apply(&b.apply(&v)));
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        assert_eq!(a.compose(&a.inverse()), SignedPermutation::identity(3));
        assert_eq!(a.inverse().compose(&a), SignedPermutation::identity(3));
    }
}
