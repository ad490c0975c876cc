//! Special partitions of `n` and the block embeddings they induce.
//!
//! A special partition is an ascending partition `n_1 <= ... <= n_k` of `n`
//! whose first `epsilon(n)` parts equal one and whose binomial sum
//! `sum C(n_i + 1, 2)` is exactly half of `C(n + 1, 2)` (rounded up when
//! `n = 1, 2 mod 4`). Such a partition cuts out a product of smaller
//! symplectic Shimura varieties of half the ambient dimension.

use std::collections::HashSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("n must be at least 2, got {0}")]
    TooSmall(u64),
    #[error("parts {parts:?} do not sum to {n}")]
    WrongSum { n: u64, parts: Vec<u64> },
    #[error("parts must be positive and ascending: {0:?}")]
    NotAscending(Vec<u64>),
    #[error("the first {epsilon} part(s) must equal 1: {parts:?}")]
    LeadingParts { epsilon: u64, parts: Vec<u64> },
    #[error("binomial sum {got} misses the target {target}")]
    BinomialSum { got: u64, target: u64 },
}

/// `C(m + 1, 2)`, the dimension of the Siegel space of genus `m`.
pub fn binom2(m: u64) -> u64 {
    m * (m + 1) / 2
}

/// 1 when `n = 0, 3 mod 4`, otherwise 2.
pub fn epsilon(n: u64) -> u64 {
    match n % 4 {
        0 | 3 => 1,
        _ => 2,
    }
}

/// Target value of `sum C(n_i + 1, 2)` for a special partition of `n`.
pub fn binomial_target(n: u64) -> u64 {
    (binom2(n) + epsilon(n) - 1) / 2
}

/// Dimension `n(n+1)/2` of the Siegel modular variety of genus `n`.
pub fn ambient_dimension(n: u64) -> u64 {
    binom2(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecialPartition {
    n: u64,
    parts: Vec<u64>,
}

impl SpecialPartition {
    /// Validates `parts` against every special-partition invariant.
    pub fn new(n: u64, parts: Vec<u64>) -> Result<Self, EmbedError> {
        if n < 2 {
            return Err(EmbedError::TooSmall(n));
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(EmbedError::NotAscending(parts));
        }
        if parts.iter().sum::<u64>() != n {
            return Err(EmbedError::WrongSum { n, parts });
        }
        let eps = epsilon(n);
        if parts.len() < eps as usize || parts[..eps as usize].iter().any(|&p| p != 1) {
            return Err(EmbedError::LeadingParts { epsilon: eps, parts });
        }
        let got: u64 = parts.iter().map(|&p| binom2(p)).sum();
        let target = binomial_target(n);
        if got != target {
            return Err(EmbedError::BinomialSum { got, target });
        }
        Ok(Self { n, parts })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn epsilon(&self) -> u64 {
        epsilon(self.n)
    }

    /// Number of parts, `k(n)`.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.parts.iter().map(|p| p * p).sum()
    }
}

/// One block `GSp*_{2m, F}` of the subgroup, recorded by `m` and `[F : Q]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub m: u64,
    pub delta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingDatum {
    pub partition: SpecialPartition,
    pub groups: Vec<Block>,
    /// Dimension of the ambient Shimura variety.
    pub d: u64,
    /// Dimension of the sub-Shimura variety, `sum C(n_i + 1, 2)`.
    pub dim_h: u64,
    /// Codimension of the embedding.
    pub c: u64,
    /// Tate twist of the pushed-forward class, `epsilon + c`.
    pub t: u64,
    /// Exponent `1 - k(n)` of the power of two in the group-volume factor.
    pub hv_exponent: i64,
}

/// Builds the block structure and numerical invariants of a special partition.
///
/// The first block is `X_1`: a single `GSp_2` for `epsilon = 1`, two of them for
/// `epsilon = 2`. The remaining parts are grouped by value, each group of `delta`
/// equal parts `m` becoming one restriction-of-scalars block of degree `delta`.
pub fn embedding_datum(p: &SpecialPartition) -> Result<EmbeddingDatum, EmbedError> {
    // Re-validate: the fields are private, but a datum must never be built from
    // an inconsistent partition.
    let p = SpecialPartition::new(p.n, p.parts.clone())?;
    let eps = p.epsilon() as usize;
    let mut groups = vec![Block { m: 1, delta: 1 }; eps];
    for &part in &p.parts[eps..] {
        let extend = groups.len() > eps && groups.last().is_some_and(|g| g.m == part);
        match groups.last_mut() {
            Some(last) if extend => last.delta += 1,
            _ => groups.push(Block { m: part, delta: 1 }),
        }
    }
    let d = ambient_dimension(p.n);
    let dim_h: u64 = p.parts.iter().map(|&x| binom2(x)).sum();
    let c = d - dim_h;
    debug_assert_eq!(2 * c, d + 1 - p.epsilon());
    Ok(EmbeddingDatum {
        t: p.epsilon() + c,
        hv_exponent: 1 - p.k() as i64,
        partition: p,
        groups,
        d,
        dim_h,
        c,
    })
}

/// Depth-first search over ascending tails `parts[eps..]` with binomial-sum pruning.
///
/// Parts at least `min` summing to `rest` have binomial sum between
/// `rest * (min + 1) / 2` (all parts equal to `min`, relaxed) and
/// `C(rest + 1, 2)` (a single part). States proven infeasible are memoized.
struct Search {
    dead: HashSet<(u64, u64, u64)>,
    stop_at_first: bool,
    found: Vec<Vec<u64>>,
}

impl Search {
    fn run(&mut self, prefix: &mut Vec<u64>, rest: u64, target: u64, min: u64) -> bool {
        if rest == 0 {
            if target == 0 {
                self.found.push(prefix.clone());
                return true;
            }
            return false;
        }
        if min > rest
            || 2 * target < rest * (min + 1)
            || target > binom2(rest)
            || self.dead.contains(&(rest, target, min))
        {
            return false;
        }
        let mut any = false;
        for part in min..=rest {
            let cost = binom2(part);
            if cost > target {
                break;
            }
            prefix.push(part);
            let hit = self.run(prefix, rest - part, target - cost, part);
            prefix.pop();
            if hit {
                any = true;
                if self.stop_at_first {
                    return true;
                }
            }
        }
        if !any {
            self.dead.insert((rest, target, min));
        }
        any
    }
}

fn search(n: u64, stop_at_first: bool) -> Vec<Vec<u64>> {
    let eps = epsilon(n);
    let mut prefix = vec![1; eps as usize];
    let mut s = Search {
        dead: HashSet::new(),
        stop_at_first,
        found: Vec::new(),
    };
    s.run(&mut prefix, n - eps, binomial_target(n) - eps, 1);
    s.found
}

/// All special partitions of `n` in lexicographic order (possibly none).
pub fn find_special_partitions(n: u64) -> Result<Vec<SpecialPartition>, EmbedError> {
    if n < 2 {
        return Err(EmbedError::TooSmall(n));
    }
    Ok(search(n, false)
        .into_iter()
        .map(|parts| SpecialPartition { n, parts })
        .collect())
}

/// The lexicographically smallest special partition, used as the canonical choice.
pub fn canonical_partition(n: u64) -> Result<Option<SpecialPartition>, EmbedError> {
    if n < 2 {
        return Err(EmbedError::TooSmall(n));
    }
    Ok(search(n, true)
        .into_iter()
        .next()
        .map(|parts| SpecialPartition { n, parts }))
}

/// Every `n` in `[2, n_max]` admitting no special partition.
pub fn scan_exceptions(n_max: u64) -> Result<Vec<u64>, EmbedError> {
    if n_max < 2 {
        return Err(EmbedError::TooSmall(n_max));
    }
    let mut out = Vec::new();
    for n in 2..=n_max {
        if canonical_partition(n)?.is_none() {
            out.push(n);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Enumerates every ascending partition of `n`, independent of the pruned search.
    fn all_partitions(n: u64) -> Vec<Vec<u64>> {
        fn go(rest: u64, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for p in min..=rest {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, 1, &mut Vec::new(), &mut out);
        out
    }

    fn brute_force(n: u64) -> Vec<Vec<u64>> {
        all_partitions(n)
            .into_iter()
            .filter(|p| SpecialPartition::new(n, p.clone()).is_ok())
            .collect()
    }

    #[test]
    fn epsilon_by_residue() {
        assert_eq!(epsilon(3), 1);
        assert_eq!(epsilon(4), 1);
        assert_eq!(epsilon(5), 2);
        assert_eq!(epsilon(6), 2);
    }

    #[test]
    fn small_cases() {
        let parts = |n| -> Vec<Vec<u64>> {
            find_special_partitions(n)
                .unwrap()
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect()
        };
        assert_eq!(parts(3), vec![vec![1, 1, 1]]);
        assert!(parts(4).contains(&vec![1, 1, 2]));
        assert!(parts(6).is_empty());
        assert!(parts(7).contains(&vec![1, 2, 4]));
        assert_eq!(parts(2), vec![vec![1, 1]]);
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for n in 2..=24 {
            let fast: Vec<Vec<u64>> = find_special_partitions(n)
                .unwrap()
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect();
            assert_eq!(fast, brute_force(n), "n = {n}");
        }
    }

    #[test]
    fn exceptions() {
        assert_eq!(scan_exceptions(40).unwrap(), vec![6, 9, 10, 13, 16, 17, 26, 33]);
        assert!(scan_exceptions(5).unwrap().is_empty());
        assert!(scan_exceptions(2).unwrap().is_empty());
    }

    #[test]
    fn rejects_n_one() {
        assert_eq!(find_special_partitions(1), Err(EmbedError::TooSmall(1)));
        assert!(SpecialPartition::new(1, vec![1]).is_err());
    }

    #[test]
    fn embedding_examples() {
        let d = embedding_datum(&SpecialPartition::new(3, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(d.groups, vec![Block { m: 1, delta: 1 }, Block { m: 1, delta: 2 }]);
        assert_eq!((d.d, d.c, d.t), (6, 3, 4));

        let d = embedding_datum(&SpecialPartition::new(2, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(d.groups, vec![Block { m: 1, delta: 1 }; 2]);
        assert_eq!((d.d, d.c, d.t), (3, 1, 3));

        let d = embedding_datum(&SpecialPartition::new(7, vec![1, 2, 4]).unwrap()).unwrap();
        assert_eq!(
            d.groups,
            vec![
                Block { m: 1, delta: 1 },
                Block { m: 2, delta: 1 },
                Block { m: 4, delta: 1 }
            ]
        );
        assert_eq!((d.d, d.c, d.t), (28, 14, 15));
        assert_eq!(d.hv_exponent, -2);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(matches!(
            SpecialPartition::new(3, vec![1, 2]),
            Err(EmbedError::BinomialSum { .. })
        ));
        assert!(matches!(
            SpecialPartition::new(5, vec![1, 4]),
            Err(EmbedError::LeadingParts { .. })
        ));
        assert!(matches!(
            SpecialPartition::new(4, vec![2, 1, 1]),
            Err(EmbedError::NotAscending(_))
        ));
        assert!(matches!(
            SpecialPartition::new(4, vec![1, 1]),
            Err(EmbedError::WrongSum { .. })
        ));
    }

    #[test]
    fn invariants_hold_up_to_forty() {
        for n in 2..=40 {
            for p in find_special_partitions(n).unwrap() {
                let eps = p.epsilon();
                let squares = p.sum_of_squares() as i64;
                // Sum of squares over the parts after the leading ones.
                let tail = squares - eps as i64;
                let m = (n - eps) as i64;
                let closed = if eps == 1 {
                    (m * m + m - 2) / 2
                } else {
                    (m * m + 3 * m) / 2
                };
                assert_eq!(tail, closed, "n = {n}, parts {:?}", p.parts());

                let d = embedding_datum(&p).unwrap();
                assert_eq!(d.c, d.d - d.dim_h);
                assert_eq!(2 * d.c, d.d + 1 - eps);
                assert_eq!(d.t, eps + d.c);
                assert_eq!(d.groups.iter().map(|g| g.m * g.delta).sum::<u64>(), n);
                assert!(d.groups[..eps as usize].iter().all(|g| *g == Block { m: 1, delta: 1 }));
            }
        }
    }
}
