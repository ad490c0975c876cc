//! Kernels for special embeddings of `GSp(2n)`, discrete-series `K`-types,
//! exact wedge-algebra projections, Spin Euler factors and the Kronecker limit
//! formula.
//!
//! The algebraic modules are generic over the scalar field and are used with
//! exact rationals; the numerical modules are generic over [`num_traits::Float`].
//! The aliases below fix the scalar types used by the command-line tool.

pub mod eisen;
pub mod embed;
pub mod lfunc;
pub mod liecomb;
pub mod reptheory;
pub mod wedgealg;

use num_complex::Complex;
use num_rational::BigRational;

/// Complex number with exact rational parts.
pub type GaussianRational = Complex<BigRational>;
pub type LieMatrixQ = wedgealg::LieMatrix<BigRational>;
pub type WedgeTensorQ = wedgealg::WedgeTensor<BigRational>;
