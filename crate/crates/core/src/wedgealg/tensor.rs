//! Elements of `⋀^p p^+ ⊗ ⋀^q p^-` in the root-vector basis.
//!
//! A slot is an index into [`positive_noncompact`]; on the `p^-` side index `i`
//! stands for the negative of that root. Both sides are stored strictly
//! increasing, so the basis order is `2e_1 < ... < 2e_n < e_1+e_2 < ...` on both.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use num_traits::Zero;
use thiserror::Error;

use super::matrix::{bracket, noncompact_coords, root_vector, Field, LieMatrix};
use crate::liecomb::{positive_noncompact, Root, WeightVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WedgeError {
    #[error("bracket with a basis vector leaves p^{sign}")]
    LeavesNoncompact { sign: char },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("{0} is not a noncompact root")]
    NotNoncompact(WeightVec),
    #[error("{0} is not a compact root")]
    NotCompact(WeightVec),
    #[error("the element X_0 is only defined for n = 3, got n = {0}")]
    OnlyRankThree(usize),
    #[error("result is not a scalar multiple of the expected vector")]
    NotScalarMultiple,
    #[error("scalar {0} is not a rational number")]
    NotRational(String),
}

pub type Slots = (Vec<usize>, Vec<usize>);

#[derive(Clone, PartialEq)]
pub struct WedgeTensor<T> {
    n: usize,
    p: usize,
    q: usize,
    terms: BTreeMap<Slots, Complex<T>>,
}

/// Sort `slots`, returning the parity of the sorting permutation, or `None`
/// if a slot repeats.
fn sort_with_sign(slots: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..slots.len() {
        let mut j = i;
        while j > 0 && slots[j - 1] > slots[j] {
            slots.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    slots.windows(2).all(|w| w[0] < w[1]).then_some(odd)
}

impl<T: Field> WedgeTensor<T> {
    pub fn zero(n: usize, p: usize, q: usize) -> Self {
        WedgeTensor {
            n,
            p,
            q,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `X_{a_1} ∧ ... ∧ X_{a_p} ⊗ X_{b_1} ∧ ... ∧ X_{b_q}`
    /// given as root weights in any order (positive roots then negative roots).
    pub fn from_roots(plus: &[WeightVec], minus: &[WeightVec]) -> Result<Self, WedgeError> {
        let n = plus.iter().chain(minus).map(WeightVec::len).next().unwrap_or(0);
        let basis = positive_noncompact(n);
        let index = |w: &WeightVec, positive: bool| {
            basis
                .iter()
                .position(|r| if positive { r.weight == *w } else { r.weight == -w })
                .ok_or_else(|| WedgeError::NotNoncompact(w.clone()))
        };
        let p_slots = plus.iter().map(|w| index(w, true)).collect::<Result<Vec<_>, _>>()?;
        let q_slots = minus.iter().map(|w| index(w, false)).collect::<Result<Vec<_>, _>>()?;
        let mut t = Self::zero(n, p_slots.len(), q_slots.len());
        t.add_term(p_slots, q_slots, Complex::new(T::one(), T::zero()));
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Slots, &Complex<T>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p_slots: &[usize], q_slots: &[usize]) -> Complex<T> {
        self.terms
            .get(&(p_slots.to_vec(), q_slots.to_vec()))
            .cloned()
            .unwrap_or_else(Complex::zero)
    }

    /// Add `c` times the (unsorted) basis element; antisymmetry handled here.
    pub fn add_term(&mut self, mut p_slots: Vec<usize>, mut q_slots: Vec<usize>, c: Complex<T>) {
        debug_assert_eq!((p_slots.len(), q_slots.len()), (self.p, self.q));
        let (Some(odd_p), Some(odd_q)) = (sort_with_sign(&mut p_slots), sort_with_sign(&mut q_slots))
        else {
            return;
        };
        let c = if odd_p != odd_q { -c } else { c };
        let key = (p_slots, q_slots);
        let sum = self.terms.get(&key).cloned().unwrap_or_else(Complex::zero) + c;
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.bidegree(), other.bidegree());
        let mut out = self.clone();
        for ((ps, qs), c) in &other.terms {
            out.add_term(ps.clone(), qs.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Complex<T>) -> Self {
        let mut out = Self::zero(self.n, self.p, self.q);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v.clone() * c.clone());
            }
        }
        out
    }

    /// `(P_1 ⊗ Q_1) ∧ (P_2 ⊗ Q_2) = ±(P_1 ∧ P_2) ⊗ (Q_1 ∧ Q_2)`, with the Koszul
    /// sign from moving `Q_1` past `P_2`.
    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n.max(other.n), self.p + other.p, self.q + other.q);
        let koszul_odd = self.q * other.p % 2 == 1;
        for ((p1, q1), a) in &self.terms {
            for ((p2, q2), b) in &other.terms {
                let c = a.clone() * b.clone();
                let c = if koszul_odd { -c } else { c };
                out.add_term([p1.clone(), p2.clone()].concat(), [q1.clone(), q2.clone()].concat(), c);
            }
        }
        out
    }

    /// The common `h`-weight of all terms, if homogeneous and nonzero.
    pub fn weight(&self) -> Option<WeightVec> {
        let basis = positive_noncompact(self.n);
        let mut weights = self.terms.keys().map(|(ps, qs)| {
            let mut w = WeightVec::zero(self.n);
            for &i in ps {
                w = &w + &basis[i].weight;
            }
            for &i in qs {
                w = &w - &basis[i].weight;
            }
            w
        });
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// `c` with `self = c · other`, if one exists.
    pub fn ratio_to(&self, other: &Self) -> Option<Complex<T>> {
        if other.is_zero() {
            return self.is_zero().then(Complex::zero);
        }
        let (k, v) = other.terms.iter().next()?;
        let c = self.terms.get(k).cloned().unwrap_or_else(Complex::zero) / v.clone();
        (other.scale(&c) == *self).then_some(c)
    }
}

impl<T: Field + fmt::Display + PartialOrd> fmt::Display for WedgeTensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let basis = positive_noncompact(self.n);
        for (i, ((ps, qs), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            let names: Vec<String> = ps.iter().map(|&k| basis[k].weight.to_string()).collect();
            write!(f, " [{}]", names.join("^"))?;
            let names: Vec<String> = qs.iter().map(|&k| (-&basis[k].weight).to_string()).collect();
            write!(f, "⊗[{}]", names.join("^"))?;
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for WedgeTensor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WedgeTensor")
            .field("n", &self.n)
            .field("bidegree", &(self.p, self.q))
            .field("terms", &self.terms)
            .finish()
    }
}

/// Precomputed action of a compact element `x` on the bases of `p^+` and `p^-`.
pub struct AdAction<T> {
    n: usize,
    plus: Vec<Vec<(usize, Complex<T>)>>,
    minus: Vec<Vec<(usize, Complex<T>)>>,
}

impl<T: Field> AdAction<T> {
    pub fn new(x: &LieMatrix<T>) -> Result<Self, WedgeError> {
        let n = x.n();
        let basis = positive_noncompact(n);
        let images = |positive: bool| -> Result<Vec<Vec<(usize, Complex<T>)>>, WedgeError> {
            basis
                .iter()
                .map(|root| {
                    let r = if positive { root.clone() } else { root.negate() };
                    let b = bracket(x, &root_vector::<T>(&r));
                    let coords = noncompact_coords(&b, positive).ok_or(WedgeError::LeavesNoncompact {
                        sign: if positive { '+' } else { '-' },
                    })?;
                    Ok(coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect())
                })
                .collect()
        };
        Ok(AdAction {
            n,
            plus: images(true)?,
            minus: images(false)?,
        })
    }

    /// Derivation action on a wedge tensor.
    pub fn apply(&self, t: &WedgeTensor<T>) -> Result<WedgeTensor<T>, WedgeError> {
        if t.n != self.n {
            return Err(WedgeError::RankMismatch(t.n, self.n));
        }
        let mut out = WedgeTensor::zero(t.n, t.p, t.q);
        for ((ps, qs), c) in &t.terms {
            for (slot, &i) in ps.iter().enumerate() {
                for (j, a) in &self.plus[i] {
                    let mut new = ps.clone();
                    new[slot] = *j;
                    out.add_term(new, qs.clone(), c.clone() * a.clone());
                }
            }
            for (slot, &i) in qs.iter().enumerate() {
                for (j, a) in &self.minus[i] {
                    let mut new = qs.clone();
                    new[slot] = *j;
                    out.add_term(ps.clone(), new, c.clone() * a.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn apply_pow(&self, t: &WedgeTensor<T>, k: usize) -> Result<WedgeTensor<T>, WedgeError> {
        let mut out = t.clone();
        for _ in 0..k {
            out = self.apply(&out)?;
        }
        Ok(out)
    }
}

/// `ad(x)` acting on `t` as a derivation.
pub fn ad_wedge<T: Field>(x: &LieMatrix<T>, t: &WedgeTensor<T>) -> Result<WedgeTensor<T>, WedgeError> {
    AdAction::new(x)?.apply(t)
}

/// `ad(X_β)^k` for the compact root `β`.
pub fn ad_root_pow<T: Field>(
    beta: &WeightVec,
    k: usize,
    t: &WedgeTensor<T>,
) -> Result<WedgeTensor<T>, WedgeError> {
    let root = Root::from_weight(beta)
        .filter(|r| r.compact)
        .ok_or_else(|| WedgeError::NotCompact(beta.clone()))?;
    AdAction::new(&root_vector::<T>(&root))?.apply_pow(t, k)
}

/// Annihilated by `ad(X_{e_j - e_k})` for all `j < k`.
pub fn is_highest_weight<T: Field>(t: &WedgeTensor<T>) -> Result<bool, WedgeError> {
    for root in crate::liecomb::positive_compact(t.n) {
        if !ad_wedge(&root_vector::<T>(&root), t)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
