//! Hodge numbers of `M(π_f)`, pole orders of archimedean Γ-factors, and the
//! degree-8 Spin Euler factors with truncated partial `L`-functions.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{Float, One, Zero};
use thiserror::Error;

use crate::embed::epsilon;
use crate::liecomb::WeightVec;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LfuncError {
    #[error("λ = {0} is not dominant")]
    NotDominant(WeightVec),
    #[error("expected λ of length {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },
    #[error("weight {0} is even and the split h^(w/2,±) has not been supplied")]
    MissingDiagSplit(i64),
    #[error("diagonal split ({plus}, {minus}) does not sum to h^({p},{p}) = {total}")]
    BadDiagSplit { p: i64, plus: u64, minus: u64, total: u64 },
    #[error("weight {0} is odd; there is no diagonal Hodge number")]
    NoDiagonal(i64),
    #[error("(p, q) = ({p}, {q}) does not have p + q = {w}")]
    WrongWeight { p: i64, q: i64, w: i64 },
    #[error("weight {w} has the wrong parity for n = {n} (n mod 4 = {})", n % 4)]
    ParityMismatch { n: usize, w: i64 },
    #[error("pole order {special} from the special branch disagrees with the general count {general}")]
    Inconsistent { special: u64, general: u64 },
    #[error("m = {m} exceeds w/2 = {w}/2")]
    AboveCentre { m: i64, w: i64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Satake value for prime {0} is zero")]
    ZeroSatake(u64),
    #[error("prime {0} appears twice")]
    DuplicatePrime(u64),
    #[error("Re(s) = {sigma} is not in the region of absolute convergence Re(s) > {bound}")]
    NotConvergent { sigma: f64, bound: f64 },
    #[error("s is a zero of the inverse Euler factor at {0}")]
    ZeroOfFactor(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeTable {
    w: i64,
    /// Values of `p` over all subsets `B`, sorted; each contributes to `h^{p, w-p}`.
    p_multiset: Vec<i64>,
    entries: BTreeMap<(i64, i64), u64>,
    diag_split: Option<(u64, u64)>,
}

impl HodgeTable {
    pub fn weight(&self) -> i64 {
        self.w
    }

    pub fn p_multiset(&self) -> &[i64] {
        &self.p_multiset
    }

    pub fn h(&self, p: i64, q: i64) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), u64> {
        &self.entries
    }

    pub fn diag_split(&self) -> Option<(u64, u64)> {
        self.diag_split
    }

    /// Overwrite `h^{p,q}` and `h^{q,p}`.
    pub fn set_h(&mut self, p: i64, q: i64, value: u64) -> Result<(), LfuncError> {
        if p + q != self.w {
            return Err(LfuncError::WrongWeight { p, q, w: self.w });
        }
        for key in [(p, q), (q, p)] {
            if value == 0 {
                self.entries.remove(&key);
            } else {
                self.entries.insert(key, value);
            }
        }
        if p == q {
            self.diag_split = None;
        }
        Ok(())
    }

    /// Supply `(h^{w/2,+}, h^{w/2,-})`.
    pub fn set_diag_split(&mut self, plus: u64, minus: u64) -> Result<(), LfuncError> {
        if self.w % 2 != 0 {
            return Err(LfuncError::NoDiagonal(self.w));
        }
        let p = self.w / 2;
        let total = self.h(p, p);
        if plus + minus != total {
            return Err(LfuncError::BadDiagSplit { p, plus, minus, total });
        }
        self.diag_split = Some((plus, minus));
        Ok(())
    }

    /// `h^{w/2, ±}` with `sign = +1` or `-1`.
    pub fn h_diag(&self, sign: i64) -> Result<u64, LfuncError> {
        let (plus, minus) = self.diag_split.ok_or(LfuncError::MissingDiagSplit(self.w))?;
        Ok(if sign > 0 { plus } else { minus })
    }
}

/// Hodge numbers initialised by counting the subsets `B ⊆ {1..n}` with
/// `p = Σ_{i∉B} (n - i + 1) - Σ_{i∈B} λ_i`.
pub fn hodge_weights(n: usize, lambda: &WeightVec) -> Result<HodgeTable, LfuncError> {
    if n == 0 {
        return Err(LfuncError::RankTooSmall { min: 1, got: 0 });
    }
    if lambda.len() != n {
        return Err(LfuncError::Length {
            expected: n,
            got: lambda.len(),
        });
    }
    if !lambda.is_dominant() {
        return Err(LfuncError::NotDominant(lambda.clone()));
    }
    let nn = n as i64;
    let w = nn * (nn + 1) / 2 - lambda.0.iter().sum::<i64>();
    let mut p_multiset: Vec<i64> = (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        -lambda.0[i]
                    } else {
                        nn - i as i64
                    }
                })
                .sum()
        })
        .collect();
    p_multiset.sort_unstable();
    let mut entries = BTreeMap::new();
    for &p in &p_multiset {
        *entries.entry((p, w - p)).or_insert(0) += 1;
    }
    Ok(HodgeTable {
        w,
        p_multiset,
        entries,
        diag_split: None,
    })
}

/// Order of the pole at `s = m` of the archimedean factor:
/// `Σ_{m ≤ p < q} h^{p,q}` plus `h^{w/2, (-1)^{m - w/2}}` when `w` is even and `m ≤ w/2`.
pub fn gamma_pole_order(t: &HodgeTable, m: i64) -> Result<u64, LfuncError> {
    let off: u64 = t
        .entries
        .iter()
        .filter(|(&(p, q), _)| m <= p && p < q)
        .map(|(_, &h)| h)
        .sum();
    let diag = if t.w % 2 == 0 && m <= t.w / 2 {
        let sign = if (m - t.w / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        t.h_diag(sign)?
    } else {
        0
    };
    Ok(off + diag)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleBranch {
    /// `n ≡ 0, 3 mod 4`: `m_0 = w/2`, order `h^{w/2,+}`.
    Diagonal,
    /// `n ≡ 1, 2 mod 4`: `m_0 = (w-1)/2`, order `h^{(w-1)/2,(w+1)/2}`.
    OffDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialPole {
    pub m0: i64,
    pub order: u64,
    pub branch: PoleBranch,
}

/// The pole at the near-central point singled out by the parity of `n`.
pub fn orderpole_special(t: &HodgeTable, n: usize) -> Result<SpecialPole, LfuncError> {
    if n < 2 {
        return Err(LfuncError::RankTooSmall { min: 2, got: n });
    }
    let w = t.w;
    let (m0, order, branch) = if epsilon(n as u64) == 1 {
        if w % 2 != 0 {
            return Err(LfuncError::ParityMismatch { n, w });
        }
        (w / 2, t.h_diag(1)?, PoleBranch::Diagonal)
    } else {
        if w % 2 == 0 {
            return Err(LfuncError::ParityMismatch { n, w });
        }
        let m0 = (w - 1) / 2;
        (m0, t.h(m0, m0 + 1), PoleBranch::OffDiagonal)
    };
    let general = gamma_pole_order(t, m0)?;
    if general != order {
        return Err(LfuncError::Inconsistent {
            special: order,
            general,
        });
    }
    Ok(SpecialPole { m0, order, branch })
}

/// Expected order of vanishing of `L(M(π_f), s)` at `s = m` in terms of pole orders
/// of the archimedean factor at `m` and `m + 1`.
pub fn deligne_dim(ord_m: i64, ord_m_plus_1: i64, m: i64, w: i64) -> Result<i64, LfuncError> {
    match (2 * m).cmp(&w) {
        std::cmp::Ordering::Less => Ok(ord_m),
        std::cmp::Ordering::Equal => Ok(ord_m - ord_m_plus_1),
        std::cmp::Ordering::Greater => Err(LfuncError::AboveCentre { m, w }),
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes `≤ n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SatakeValue<T> {
    Unramified(Complex<T>),
    Ramified,
}

impl<T: Float> SatakeValue<T> {
    pub fn value(&self) -> Option<Complex<T>> {
        match self {
            SatakeValue::Unramified(c) => Some(*c),
            SatakeValue::Ramified => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SatakeDatum<T> {
    ell: u64,
    c: [SatakeValue<T>; 4],
}

impl<T: Float> SatakeDatum<T> {
    pub fn new(ell: u64, c: [SatakeValue<T>; 4]) -> Result<Self, LfuncError> {
        if !is_prime(ell) {
            return Err(LfuncError::NotPrime(ell));
        }
        if c.iter().any(|v| v.value().is_some_and(|z| z.is_zero())) {
            return Err(LfuncError::ZeroSatake(ell));
        }
        Ok(SatakeDatum { ell, c })
    }

    pub fn trivial(ell: u64) -> Result<Self, LfuncError> {
        Self::new(ell, [SatakeValue::Unramified(Complex::one()); 4])
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn values(&self) -> &[SatakeValue<T>; 4] {
        &self.c
    }

    /// The roots `χ_0 ∏_{i∈S} χ_i(ℓ)` of the inverse Euler factor (in `X`), one per
    /// subset `S ⊆ {1,2,3}` none of whose characters is ramified, listed by bitmask.
    pub fn spin_roots(&self) -> Vec<Complex<T>> {
        let Some(c0) = self.c[0].value() else {
            return Vec::new();
        };
        (0u8..8)
            .filter_map(|mask| {
                (1..4).try_fold(c0, |acc, i| {
                    if mask & (1 << (i - 1)) == 0 {
                        Some(acc)
                    } else {
                        self.c[i].value().map(|ci| acc * ci)
                    }
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EulerFactor<T> {
    pub ell: u64,
    /// Coefficients of the inverse factor in `X = ℓ^{-s}`, constant term first.
    pub inverse_poly: Vec<Complex<T>>,
}

impl<T: Float> EulerFactor<T> {
    pub fn degree(&self) -> usize {
        self.inverse_poly.len() - 1
    }

    /// The inverse factor evaluated at `X = ℓ^{-s}`.
    pub fn inverse_at(&self, s: Complex<T>) -> Complex<T> {
        let ell = T::from(self.ell).unwrap();
        let x = (-s * ell.ln()).exp();
        self.inverse_poly
            .iter()
            .rev()
            .fold(Complex::zero(), |acc, c| acc * x + c)
    }
}

/// `∏_S (1 - χ_0 ∏_{i∈S} χ_i(ℓ) X)` over the unramified subsets.
pub fn spin_factor<T: Float>(d: &SatakeDatum<T>) -> EulerFactor<T> {
    let mut poly = vec![Complex::<T>::one()];
    for root in d.spin_roots() {
        let mut next = vec![Complex::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] = next[k] + c;
            next[k + 1] = next[k + 1] - c * root;
        }
        poly = next;
    }
    EulerFactor {
        ell: d.ell,
        inverse_poly: poly,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartialL<T> {
    pub value: Complex<T>,
    /// Bound on `|L^Σ(s) - value|`, assuming the Satake roots at primes above
    /// `p_max` obey the same bound `|root| ≤ ℓ^θ` as the supplied ones.
    pub tail_bound: T,
    pub theta: T,
    pub factors_used: usize,
}

/// `∏_{ℓ ≤ p_max} L_ℓ(s)` over the supplied data, multiplied in ascending `ℓ`.
/// Primes without a datum are treated as part of the excluded set `Σ`.
pub fn partial_l<T: Float>(
    data: &[SatakeDatum<T>],
    s: Complex<T>,
    p_max: u64,
) -> Result<PartialL<T>, LfuncError> {
    let mut used: Vec<&SatakeDatum<T>> = data.iter().filter(|d| d.ell <= p_max).collect();
    used.sort_by_key(|d| d.ell);
    if let Some(w) = used.windows(2).find(|w| w[0].ell == w[1].ell) {
        return Err(LfuncError::DuplicatePrime(w[0].ell));
    }
    let theta = used
        .iter()
        .flat_map(|d| {
            let log_ell = T::from(d.ell).unwrap().ln();
            d.spin_roots().into_iter().map(move |r| r.norm().ln() / log_ell)
        })
        .fold(T::zero(), T::max);
    let one = T::one();
    let sigma = s.re;
    if !(sigma > one + theta) {
        return Err(LfuncError::NotConvergent {
            sigma: sigma.to_f64().unwrap_or(f64::NAN),
            bound: (one + theta).to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut value = Complex::<T>::one();
    for d in &used {
        let inv = spin_factor(d).inverse_at(s);
        if inv.is_zero() {
            return Err(LfuncError::ZeroOfFactor(d.ell));
        }
        value = value / inv;
    }
    // |log of the tail| ≤ Σ_{ℓ > P} 8 ℓ^{θ-σ} / (1 - ℓ^{θ-σ})
    //                  ≤ 8 P^{1+θ-σ} / ((σ - θ - 1)(1 - P^{θ-σ})).
    let p = T::from(p_max.max(1)).unwrap();
    let eight = T::from(8.0).unwrap();
    let gap = sigma - theta - one;
    let log_tail = eight * p.powf(one + theta - sigma)
        / (gap * (one - p.powf(theta - sigma)));
    let rounding = T::from(16 * (used.len() + 1)).unwrap() * T::epsilon() * value.norm();
    Ok(PartialL {
        value,
        tail_bound: value.norm() * log_tail.exp_m1() + rounding,
        theta,
        factors_used: used.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type C = Complex<f64>;

    fn table_n3() -> HodgeTable {
        let mut t = hodge_weights(3, &WeightVec(vec![0, 0, 0])).unwrap();
        t.set_diag_split(2, 0).unwrap();
        t
    }

    #[test]
    fn hodge_examples() {
        let t = hodge_weights(3, &WeightVec(vec![0, 0, 0])).unwrap();
        assert_eq!(t.weight(), 6);
        assert_eq!(t.p_multiset(), &[0, 1, 2, 3, 3, 4, 5, 6]);
        assert_eq!(t.h(3, 3), 2);
        let t = hodge_weights(1, &WeightVec(vec![0])).unwrap();
        assert_eq!(t.weight(), 1);
        assert_eq!(t.h(0, 1), 1);
        assert_eq!(t.h(1, 0), 1);
    }

    #[test]
    fn hodge_with_lambda_matches_enumeration() {
        // 8 subsets of {1,2,3} with λ = (2,1,0): complement contributes (3,2,1).
        let lambda = [2i64, 1, 0];
        let mut expect = Vec::new();
        for b1 in [false, true] {
            for b2 in [false, true] {
                for b3 in [false, true] {
                    let mut p = 0;
                    for (i, inb) in [b1, b2, b3].into_iter().enumerate() {
                        p += if inb { -lambda[i] } else { 3 - i as i64 };
                    }
                    expect.push(p);
                }
            }
        }
        expect.sort();
        let t = hodge_weights(3, &WeightVec(lambda.to_vec())).unwrap();
        assert_eq!(t.p_multiset(), expect.as_slice());
        assert_eq!(t.p_multiset()[0], -3);
        assert_eq!(t.weight(), 3);
    }

    #[test]
    fn gamma_pole_examples() {
        let t = table_n3();
        assert_eq!(gamma_pole_order(&t, 3).unwrap(), 2);
        assert_eq!(gamma_pole_order(&t, 7).unwrap(), 0);
        assert_eq!(gamma_pole_order(&t, 2).unwrap(), 1);
        let bare = hodge_weights(3, &WeightVec(vec![0, 0, 0])).unwrap();
        assert_eq!(gamma_pole_order(&bare, 3), Err(LfuncError::MissingDiagSplit(6)));
    }

    #[test]
    fn orderpole_examples() {
        let t = table_n3();
        let sp = orderpole_special(&t, 3).unwrap();
        assert_eq!((sp.m0, sp.order, sp.branch), (3, 2, PoleBranch::Diagonal));
        let t2 = hodge_weights(2, &WeightVec(vec![0, 0])).unwrap();
        let sp = orderpole_special(&t2, 2).unwrap();
        assert_eq!((sp.m0, sp.order, sp.branch), (1, 1, PoleBranch::OffDiagonal));
        let mut t0 = hodge_weights(3, &WeightVec(vec![0, 0, 0])).unwrap();
        t0.set_diag_split(0, 2).unwrap();
        assert_eq!(orderpole_special(&t0, 3).unwrap().order, 0);
        let odd = hodge_weights(3, &WeightVec(vec![1, 0, 0])).unwrap();
        assert!(matches!(orderpole_special(&odd, 3), Err(LfuncError::ParityMismatch { .. })));
    }

    #[test]
    fn deligne_examples() {
        assert_eq!(deligne_dim(1, 0, 2, 6), Ok(1));
        assert_eq!(deligne_dim(2, 1, 3, 6), Ok(1));
        assert_eq!(deligne_dim(0, 0, 0, 6), Ok(0));
        assert!(deligne_dim(0, 0, 4, 6).is_err());
    }

    #[test]
    fn diag_split_validation() {
        let mut t = hodge_weights(3, &WeightVec(vec![0, 0, 0])).unwrap();
        assert!(t.set_diag_split(1, 2).is_err());
        let mut odd = hodge_weights(2, &WeightVec(vec![0, 0])).unwrap();
        assert!(odd.set_diag_split(0, 0).is_err());
        t.set_h(2, 4, 5).unwrap();
        assert_eq!(t.h(4, 2), 5);
        assert!(t.set_h(2, 3, 1).is_err());
    }

    /// Coefficients of `∏_r (1 - r X)` from elementary symmetric functions.
    fn oracle(roots: &[C]) -> Vec<C> {
        let k = roots.len();
        let mut coeffs = vec![C::new(0.0, 0.0); k + 1];
        for mask in 0u32..1 << k {
            let mut prod = C::new(1.0, 0.0);
            for (i, r) in roots.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    prod *= -r;
                }
            }
            coeffs[mask.count_ones() as usize] += prod;
        }
        coeffs
    }

    #[test]
    fn spin_factor_matches_subset_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let c: [SatakeValue<f64>; 4] = std::array::from_fn(|_| {
                SatakeValue::Unramified(C::from_polar(rng.gen_range(0.5..1.5), rng.gen_range(0.0..6.3)))
            });
            let d = SatakeDatum::new(7, c).unwrap();
            let mut roots = Vec::new();
            for s in 0..8u32 {
                let mut r = c[0].value().unwrap();
                for i in 1..4 {
                    if s & (1 << (i - 1)) != 0 {
                        r *= c[i].value().unwrap();
                    }
                }
                roots.push(r);
            }
            let f = spin_factor(&d);
            assert_eq!(f.degree(), 8);
            for (a, b) in f.inverse_poly.iter().zip(oracle(&roots)) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn spin_factor_trivial_and_ramified() {
        let f = spin_factor(&SatakeDatum::<f64>::trivial(2).unwrap());
        let binom = [1.0, -8.0, 28.0, -56.0, 70.0, -56.0, 28.0, -8.0, 1.0];
        for (a, b) in f.inverse_poly.iter().zip(binom) {
            assert_eq!(*a, C::new(b, 0.0));
        }
        let one = SatakeValue::Unramified(C::new(1.0, 0.0));
        let r = SatakeDatum::new(5, [SatakeValue::Ramified, one, one, one]).unwrap();
        assert_eq!(spin_factor(&r).inverse_poly, vec![C::new(1.0, 0.0)]);
        let r = SatakeDatum::new(5, [one, SatakeValue::Ramified, one, one]).unwrap();
        assert_eq!(spin_factor(&r).degree(), 4);
    }

    #[test]
    fn satake_validation() {
        assert_eq!(SatakeDatum::<f64>::trivial(9), Err(LfuncError::NotPrime(9)));
        let z = SatakeValue::Unramified(C::new(0.0, 0.0));
        let one = SatakeValue::Unramified(C::new(1.0, 0.0));
        assert_eq!(SatakeDatum::new(3, [one, z, one, one]), Err(LfuncError::ZeroSatake(3)));
    }

    #[test]
    fn partial_l_small_cases() {
        let s = C::new(2.0, 0.0);
        let empty = partial_l::<f64>(&[], s, 100).unwrap();
        assert_eq!(empty.value, C::new(1.0, 0.0));
        let one = partial_l(&[SatakeDatum::trivial(2).unwrap()], s, 2).unwrap();
        let expect = (1.0f64 - 0.25).powi(-8);
        assert!((one.value.re - expect).abs() < 1e-12);
        assert_eq!(one.factors_used, 1);
        assert!(matches!(
            partial_l(&[SatakeDatum::trivial(2).unwrap()], C::new(0.9, 0.0), 2),
            Err(LfuncError::NotConvergent { .. })
        ));
        let dup = [SatakeDatum::trivial(2).unwrap(), SatakeDatum::trivial(2).unwrap()];
        assert_eq!(partial_l(&dup, s, 10), Err(LfuncError::DuplicatePrime(2)));
    }

    #[test]
    fn partial_l_zeta_squared_eighth() {
        let data: Vec<_> = primes_up_to(100_000)
            .into_iter()
            .map(|p| SatakeDatum::trivial(p).unwrap())
            .collect();
        let r = partial_l(&data, C::new(2.0, 0.0), 100_000).unwrap();
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        let err = (r.value - C::new(zeta2.powi(8), 0.0)).norm();
        assert!(err <= r.tail_bound, "err {err} bound {}", r.tail_bound);
        assert!(r.tail_bound < 1e-2);
    }

    #[test]
    fn partial_l_incremental() {
        let primes = primes_up_to(200);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let data: Vec<_> = primes
            .iter()
            .map(|&p| {
                let c = std::array::from_fn(|_| SatakeValue::Unramified(C::from_polar(1.0, rng.gen_range(0.0..6.3))));
                SatakeDatum::new(p, c).unwrap()
            })
            .collect();
        let s = C::new(2.5, 1.0);
        for k in 1..data.len() {
            let a = partial_l(&data[..k], s, 1000).unwrap();
            let b = partial_l(&data[..k + 1], s, 1000).unwrap();
            let f = spin_factor(&data[k]).inverse_at(s);
            assert_eq!(b.value, a.value / f);
        }
    }

    #[test]
    fn primes_sieve() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(100_000).len(), 9592);
        assert!(primes_up_to(1000).into_iter().all(is_prime));
    }
}
