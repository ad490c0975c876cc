//! `2n x 2n` matrices over `Complex<T>` and the root vectors of `sp(2n, C)`.

use std::fmt;
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Num, One, Zero};

use crate::liecomb::{positive_noncompact, Root, RootKind, WeightVec};

/// Scalar fields usable for exact or floating Lie-algebra arithmetic.
pub trait Field: Clone + Num + Neg<Output = Self> + fmt::Debug {}
impl<T: Clone + Num + Neg<Output = T> + fmt::Debug> Field for T {}

#[derive(Clone, PartialEq)]
pub struct LieMatrix<T> {
    n: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Field> LieMatrix<T> {
    pub fn zero(n: usize) -> Self {
        LieMatrix {
            n,
            entries: vec![Complex::zero(); 4 * n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..2 * n {
            m.set(i, i, Complex::one());
        }
        m
    }

    /// Assemble `[[a, b], [c, d]]` from four `n x n` blocks given row-major.
    pub fn from_blocks(n: usize, blocks: [&[Complex<T>]; 4]) -> Self {
        let mut m = Self::zero(n);
        for (b, block) in blocks.iter().enumerate() {
            assert_eq!(block.len(), n * n, "block size");
            let (r0, c0) = ((b / 2) * n, (b % 2) * n);
            for i in 0..n {
                for j in 0..n {
                    m.set(r0 + i, c0 + j, block[i * n + j].clone());
                }
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex<T> {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        let d = self.dim();
        self.entries[i * d + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        LieMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        LieMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &Complex<T>) -> Self {
        LieMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let d = self.dim();
        let mut out = Self::zero(self.n);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim();
        let mut out = Self::zero(self.n);
        for i in 0..d {
            for j in 0..d {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// The standard symplectic form `J = [[0, 1], [-1, 0]]`.
    pub fn symplectic_form(n: usize) -> Self {
        let mut j = Self::zero(n);
        for i in 0..n {
            j.set(i, n + i, Complex::one());
            j.set(n + i, i, -Complex::<T>::one());
        }
        j
    }

    /// `X^t J + J X = 0`.
    pub fn is_symplectic_lie(&self) -> bool {
        let j = Self::symplectic_form(self.n);
        self.transpose().mul(&j).add(&j.mul(self)).is_zero()
    }

    /// Lies in `k_C`, i.e. has the shape `[[A, B], [-B, A]]`.
    pub fn is_compact(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                *self.get(i, j) == *self.get(n + i, n + j)
                    && *self.get(i, n + j) == -self.get(n + i, j).clone()
            })
        })
    }
}

impl<T: fmt::Debug> fmt::Debug for LieMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = 2 * self.n;
        writeln!(f, "LieMatrix(n = {})", self.n)?;
        for i in 0..d {
            writeln!(f, "  {:?}", &self.entries[i * d..(i + 1) * d])?;
        }
        Ok(())
    }
}

/// `ab - ba`.
pub fn bracket<T: Field>(a: &LieMatrix<T>, b: &LieMatrix<T>) -> LieMatrix<T> {
    a.mul(b).sub(&b.mul(a))
}

fn re<T: Field>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

fn im<T: Field>(x: T) -> Complex<T> {
    Complex::new(T::zero(), x)
}

/// `T_j = -i [[0, D_j], [-D_j, 0]]`, zero-based `j`.
pub fn torus<T: Field>(n: usize, j: usize) -> LieMatrix<T> {
    let mut m = LieMatrix::zero(n);
    m.set(j, n + j, im(-T::one()));
    m.set(n + j, j, im(T::one()));
    m
}

/// The root vector `X_α`.
pub fn root_vector<T: Field>(alpha: &Root) -> LieMatrix<T> {
    let n = alpha.weight.len();
    let s = if alpha.positive { T::one() } else { -T::one() };
    let mut m = LieMatrix::zero(n);
    // Entries of the noncompact block pattern [[A, ±iA], [±iA, -A]] for A = unit at (a, b).
    let mut noncompact = |a: usize, b: usize| {
        m.set(a, b, re(T::one()));
        m.set(a, n + b, im(s.clone()));
        m.set(n + a, b, im(s.clone()));
        m.set(n + a, n + b, re(-T::one()));
    };
    match alpha.kind {
        RootKind::Long(j) => noncompact(j, j),
        RootKind::Sum(j, k) => {
            noncompact(j, k);
            noncompact(k, j);
        }
        RootKind::Diff(j, k) => {
            // [[±F, -iE], [iE, ±F]]
            for (a, b, f) in [(j, k, s.clone()), (k, j, -s.clone())] {
                m.set(a, b, re(f.clone()));
                m.set(n + a, n + b, re(f));
                m.set(a, n + b, im(-T::one()));
                m.set(n + a, b, im(T::one()));
            }
        }
    }
    m
}

/// Coordinates of an element of `p^+` (`sign = 1`) or `p^-` (`sign = -1`) in the
/// root-vector basis, indexed like [`positive_noncompact`]. `None` if `m` does
/// not lie in that subspace.
pub fn noncompact_coords<T: Field>(m: &LieMatrix<T>, positive: bool) -> Option<Vec<Complex<T>>> {
    let n = m.n();
    let basis = positive_noncompact(n);
    let coords: Vec<Complex<T>> = basis
        .iter()
        .map(|root| match root.kind {
            RootKind::Long(j) => m.get(j, j).clone(),
            RootKind::Sum(j, k) => m.get(j, k).clone(),
            RootKind::Diff(..) => unreachable!(),
        })
        .collect();
    let mut rebuilt = LieMatrix::zero(n);
    for (root, c) in basis.iter().zip(&coords) {
        if c.is_zero() {
            continue;
        }
        let r = if positive { root.clone() } else { root.negate() };
        rebuilt = rebuilt.add(&root_vector::<T>(&r).scale(c));
    }
    (rebuilt == *m).then_some(coords)
}

/// Eigenvalue of `ad(T_j)` on `m`, if `m` is a simultaneous eigenvector.
pub fn torus_weight<T: Field>(m: &LieMatrix<T>) -> Option<Vec<Complex<T>>> {
    let n = m.n();
    let (i0, j0) = (0..2 * n)
        .flat_map(|i| (0..2 * n).map(move |j| (i, j)))
        .find(|&(i, j)| !m.get(i, j).is_zero())?;
    (0..n)
        .map(|j| {
            let b = bracket(&torus::<T>(n, j), m);
            let c = b.get(i0, j0).clone() / m.get(i0, j0).clone();
            (b == m.scale(&c)).then_some(c)
        })
        .collect()
}

/// Root vector of the root with the given weight.
pub fn root_vector_of<T: Field>(w: &WeightVec) -> Option<LieMatrix<T>> {
    Root::from_weight(w).map(|r| root_vector(&r))
}
