//! Finite-dimensional representations of `U(n)` (equivalently `GL_n`) by highest weight.
//!
//! Characters are generated from semistandard Young tableaux after twisting the
//! highest weight by a power of the determinant so that it becomes a partition.
//! All multiplicities are exact integers.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::liecomb::{positive_noncompact, WeightVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("{0} is not weakly decreasing")]
    NotDominant(WeightVec),
    #[error("weights of different lengths: {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("not a character: weight {weight} would get multiplicity {mult}")]
    NotACharacter { weight: WeightVec, mult: i64 },
    #[error("exterior power {k} out of range for a space of dimension {dim}")]
    DegreeOutOfRange { k: usize, dim: usize },
    #[error("exterior powers need a multiplicity-free weight set; {0} occurs more than once")]
    NotMultiplicityFree(WeightVec),
}

/// Highest weight `(k_1 >= ... >= k_n)` of an irreducible `U(n)`-representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KTypeWeight(WeightVec);

impl KTypeWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self, RepError> {
        let w = WeightVec(coords);
        if !w.is_k_dominant() {
            return Err(RepError::NotDominant(w));
        }
        Ok(KTypeWeight(w))
    }

    pub fn trivial(n: usize) -> Self {
        KTypeWeight(WeightVec::zero(n))
    }

    pub fn weight(&self) -> &WeightVec {
        &self.0
    }

    pub fn coords(&self) -> &[i64] {
        &self.0 .0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for KTypeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Weights of a representation with their multiplicities.
///
/// Multiplicities are signed so that virtual characters can pass through the
/// peeling loop; a genuine character never carries a non-positive entry.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset(BTreeMap<WeightVec, i64>);

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: WeightVec, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.0.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(mult);
            }
        }
    }

    pub fn get(&self, w: &WeightVec) -> i64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    /// Total number of weights counted with multiplicity.
    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&WeightVec, i64)> {
        self.0.iter().map(|(w, &m)| (w, m))
    }

    /// Weights of the tensor product: all pairwise sums.
    pub fn product(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (a, ma) in self.iter() {
            for (b, mb) in other.iter() {
                out.add(a + b, ma * mb);
            }
        }
        out
    }

    pub fn negated(&self) -> WeightMultiset {
        WeightMultiset(self.0.iter().map(|(w, &m)| (-w, m)).collect())
    }
}

impl FromIterator<WeightVec> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = WeightVec>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for w in iter {
            out.add(w, 1);
        }
        out
    }
}

/// Multiset of irreducible constituents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IrrepDecomposition(BTreeMap<KTypeWeight, u64>);

impl IrrepDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, hw: KTypeWeight, mult: u64) {
        if mult > 0 {
            *self.0.entry(hw).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, hw: &KTypeWeight) -> u64 {
        self.0.get(hw).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&KTypeWeight, u64)> {
        self.0.iter().map(|(k, &m)| (k, m))
    }

    /// Constituents sorted by decreasing highest weight.
    pub fn sorted_desc(&self) -> Vec<(KTypeWeight, u64)> {
        self.0.iter().rev().map(|(k, &m)| (k.clone(), m)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum mult * dim`.
    pub fn dimension(&self) -> u64 {
        self.iter().map(|(k, m)| m * dim(k)).sum()
    }
}

/// Weyl dimension formula `prod_{i<j} (k_i - k_j + j - i) / (j - i)`.
pub fn dim(hw: &KTypeWeight) -> u64 {
    let k = hw.coords();
    let n = k.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= k[i] - k[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    (num / den).to_u64().expect("dimension fits in u64")
}

/// Weights of `p^+`: `2e_j` and `e_j + e_k`, each once.
pub fn p_plus_weights(n: usize) -> WeightMultiset {
    positive_noncompact(n).into_iter().map(|r| r.weight).collect()
}

/// Weights of `p^-`, the negatives of those of `p^+`.
pub fn p_minus_weights(n: usize) -> WeightMultiset {
    p_plus_weights(n).negated()
}

/// Contents of all semistandard tableaux of shape `shape` in the alphabet `1..=n`.
fn tableau_contents(shape: &[usize], n: usize) -> HashMap<Vec<i64>, i64> {
    let rows = shape.len();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut content = vec![0i64; n];
    let mut out = HashMap::new();

    fn fill(
        r: usize,
        c: usize,
        shape: &[usize],
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<i64>,
        out: &mut HashMap<Vec<i64>, i64>,
    ) {
        if r == shape.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        if c == shape[r] {
            fill(r + 1, 0, shape, n, grid, content, out);
            return;
        }
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        let lo = lo_row.max(lo_col);
        // Leave room for the strictly increasing entries below in this column.
        let below = shape[r + 1..].iter().filter(|&&len| len > c).count();
        let hi = n - 1 - below;
        for v in lo..=hi {
            grid[r][c] = v;
            content[v] += 1;
            fill(r, c + 1, shape, n, grid, content, out);
            content[v] -= 1;
        }
    }

    if rows <= n {
        fill(0, 0, shape, n, &mut grid, &mut content, &mut out);
    }
    out
}

fn compute_char(hw: &KTypeWeight) -> WeightMultiset {
    let k = hw.coords();
    let n = k.len();
    if n == 0 {
        let mut out = WeightMultiset::new();
        out.add(WeightVec(vec![]), 1);
        return out;
    }
    let shift = k[n - 1];
    let shape: Vec<usize> = k
        .iter()
        .map(|&x| (x - shift) as usize)
        .filter(|&x| x > 0)
        .collect();
    let mut out = WeightMultiset::new();
    for (c, m) in tableau_contents(&shape, n) {
        out.add(WeightVec(c.into_iter().map(|x| x + shift).collect()), m);
    }
    out
}

type CharCache = RwLock<HashMap<KTypeWeight, Arc<WeightMultiset>>>;

fn cache() -> &'static CharCache {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Full weight multiset of the irreducible representation with highest weight `hw`.
pub fn char_weights(hw: &KTypeWeight) -> Arc<WeightMultiset> {
    if let Some(hit) = cache().read().expect("character cache poisoned").get(hw) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(compute_char(hw));
    cache()
        .write()
        .expect("character cache poisoned")
        .entry(hw.clone())
        .or_insert(computed)
        .clone()
}

/// Inverse of the character map by greedy peeling of lexicographically maximal weights.
pub fn decompose(ms: &WeightMultiset) -> Result<IrrepDecomposition, RepError> {
    let mut rest = ms.0.clone();
    let mut out = IrrepDecomposition::new();
    while let Some((top, &mult)) = rest.iter().next_back() {
        if mult <= 0 || !top.is_k_dominant() {
            return Err(RepError::NotACharacter {
                weight: top.clone(),
                mult,
            });
        }
        let hw = KTypeWeight(top.clone());
        for (w, m) in char_weights(&hw).iter() {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= m * mult;
            if *e < 0 {
                return Err(RepError::NotACharacter {
                    weight: w.clone(),
                    mult: *e,
                });
            }
            if *e == 0 {
                rest.remove(w);
            }
        }
        out.add(hw, mult as u64);
    }
    Ok(out)
}

/// Tensor product decomposition by the Brauer–Klimyk rule: every weight `μ` of `b`
/// contributes `±` the irreducible obtained by straightening `a + μ + ρ`.
pub fn tensor(a: &KTypeWeight, b: &KTypeWeight) -> Result<IrrepDecomposition, RepError> {
    let n = a.rank();
    if b.rank() != n {
        return Err(RepError::RankMismatch(n, b.rank()));
    }
    let rho: Vec<i64> = (0..n as i64).rev().collect();
    let mut signed: BTreeMap<KTypeWeight, i64> = BTreeMap::new();
    for (mu, m) in char_weights(b).iter() {
        let mut v: Vec<i64> = (0..n).map(|i| a.coords()[i] + mu.0[i] + rho[i]).collect();
        // Insertion sort to decreasing order, tracking the parity of the swaps.
        let mut sign = 1i64;
        for i in 1..n {
            let mut j = i;
            while j > 0 && v[j - 1] < v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let hw = KTypeWeight(WeightVec((0..n).map(|i| v[i] - rho[i]).collect()));
        *signed.entry(hw).or_insert(0) += sign * m;
    }
    let mut out = IrrepDecomposition::new();
    for (hw, m) in signed {
        if m < 0 {
            return Err(RepError::NotACharacter {
                weight: hw.0,
                mult: m,
            });
        }
        out.add(hw, m as u64);
    }
    Ok(out)
}

/// Weights of the `k`-th exterior power of a multiplicity-free weight set.
pub fn exterior_power_weights(ms: &WeightMultiset, k: usize) -> Result<WeightMultiset, RepError> {
    let basis: Vec<&WeightVec> = ms.iter().map(|(w, _)| w).collect();
    if let Some((w, _)) = ms.iter().find(|&(_, m)| m != 1) {
        return Err(RepError::NotMultiplicityFree(w.clone()));
    }
    if k > basis.len() {
        return Err(RepError::DegreeOutOfRange {
            k,
            dim: basis.len(),
        });
    }
    let n = basis.first().map_or(0, |w| w.len());
    let mut out = WeightMultiset::new();

    fn go(
        basis: &[&WeightVec],
        start: usize,
        left: usize,
        acc: &mut WeightVec,
        out: &mut WeightMultiset,
    ) {
        if left == 0 {
            out.add(acc.clone(), 1);
            return;
        }
        for i in start..=basis.len() - left {
            for (a, b) in acc.0.iter_mut().zip(&basis[i].0) {
                *a += b;
            }
            go(basis, i + 1, left - 1, acc, out);
            for (a, b) in acc.0.iter_mut().zip(&basis[i].0) {
                *a -= b;
            }
        }
    }

    go(&basis, 0, k, &mut WeightVec::zero(n), &mut out);
    Ok(out)
}

pub fn exterior_power(ms: &WeightMultiset, k: usize) -> Result<IrrepDecomposition, RepError> {
    decompose(&exterior_power_weights(ms, k)?)
}

/// `⋀^p p^+ ⊗ ⋀^q p^-` as a representation of `K = U(n)`.
pub fn wedge_pq(n: usize, p: usize, q: usize) -> Result<IrrepDecomposition, RepError> {
    let plus = exterior_power_weights(&p_plus_weights(n), p)?;
    let minus = exterior_power_weights(&p_minus_weights(n), q)?;
    decompose(&plus.product(&minus))
}
