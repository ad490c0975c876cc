//! Exact arithmetic in `sp(2n, C)` and in `⋀^p p^+ ⊗ ⋀^q p^-`, and the projection
//! of `X_0` onto the `K`-types `τ_(2,2,-4)` and `τ_(4,-2,-2)` for `n = 3`.

mod matrix;
mod tensor;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

pub use matrix::{
    bracket, noncompact_coords, root_vector, root_vector_of, torus, torus_weight, Field, LieMatrix,
};
pub use tensor::{ad_root_pow, ad_wedge, is_highest_weight, AdAction, Slots, WedgeError, WedgeTensor};

use crate::liecomb::WeightVec;

fn w(v: [i64; 3]) -> WeightVec {
    WeightVec(v.to_vec())
}

/// `(X_{2e_1} ∧ X_{2e_2} ∧ X_{2e_3}) ⊗ (X_{-2e_1} ∧ X_{-2e_2} ∧ X_{-2e_3})`.
pub fn x0<T: Field>(n: usize) -> Result<WedgeTensor<T>, WedgeError> {
    if n != 3 {
        return Err(WedgeError::OnlyRankThree(n));
    }
    WedgeTensor::from_roots(
        &[w([2, 0, 0]), w([0, 2, 0]), w([0, 0, 2])],
        &[w([-2, 0, 0]), w([0, -2, 0]), w([0, 0, -2])],
    )
}

/// `(X_{2e_1} ∧ X_{2e_2} ∧ X_{e_1+e_2}) ⊗ (X_{-e_1-e_3} ∧ X_{-e_2-e_3} ∧ X_{-2e_3})`.
pub fn x_2_2_m4<T: Field>() -> WedgeTensor<T> {
    WedgeTensor::from_roots(
        &[w([2, 0, 0]), w([0, 2, 0]), w([1, 1, 0])],
        &[w([-1, 0, -1]), w([0, -1, -1]), w([0, 0, -2])],
    )
    .expect("noncompact roots")
}

/// `(X_{2e_1} ∧ X_{e_1+e_2} ∧ X_{e_1+e_3}) ⊗ (X_{-e_2-e_3} ∧ X_{-2e_2} ∧ X_{-2e_3})`.
pub fn x_4_m2_m2<T: Field>() -> WedgeTensor<T> {
    WedgeTensor::from_roots(
        &[w([2, 0, 0]), w([1, 1, 0]), w([1, 0, 1])],
        &[w([0, -1, -1]), w([0, -2, 0]), w([0, 0, -2])],
    )
    .expect("noncompact roots")
}

/// Apply `Ad^2_{X_{β_1}} ∘ ... ∘ Ad^2_{X_{β_k}}`; the last root acts first.
pub fn compose_ad2<T: Field>(
    roots: &[WeightVec],
    t: &WedgeTensor<T>,
) -> Result<WedgeTensor<T>, WedgeError> {
    roots
        .iter()
        .rev()
        .try_fold(t.clone(), |acc, beta| ad_root_pow(beta, 2, &acc))
}

fn rational_ratio(a: &WedgeTensor<BigRational>, b: &WedgeTensor<BigRational>) -> Result<BigRational, WedgeError> {
    let c = a.ratio_to(b).ok_or(WedgeError::NotScalarMultiple)?;
    if b.is_zero() {
        return Err(WedgeError::NotScalarMultiple);
    }
    if !c.im.is_zero() {
        return Err(WedgeError::NotRational(format!("{c}")));
    }
    Ok(c.re)
}

/// One projection: raising operator `R`, lowering operator `L`, highest-weight
/// vector `X`, with `R(X_0) = a·X` and `R(L(X)) = b·X`, so that the projection
/// of `X_0` is `(a/b)·L(X)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionData {
    pub target: WeightVec,
    pub raising: Vec<WeightVec>,
    pub lowering: Vec<WeightVec>,
    pub numerator: BigRational,
    pub denominator: BigRational,
    pub alpha: BigRational,
    pub highest_weight: bool,
}

fn project_onto(
    target: WeightVec,
    hw: &WedgeTensor<BigRational>,
    raising: Vec<WeightVec>,
    lowering: Vec<WeightVec>,
) -> Result<ProjectionData, WedgeError> {
    let x0 = x0::<BigRational>(3)?;
    let numerator = rational_ratio(&compose_ad2(&raising, &x0)?, hw)?;
    let lowered = compose_ad2(&lowering, hw)?;
    let denominator = rational_ratio(&compose_ad2(&raising, &lowered)?, hw)?;
    if denominator.is_zero() {
        return Err(WedgeError::NotScalarMultiple);
    }
    Ok(ProjectionData {
        target,
        alpha: &numerator / &denominator,
        numerator,
        denominator,
        highest_weight: is_highest_weight(hw)?,
        raising,
        lowering,
    })
}

/// Projection of `X_0` onto `τ_(2,2,-4)` via
/// `R = Ad²_{e1-e3} ∘ Ad²_{e2-e3}` and `A = Ad²_{e3-e2} ∘ Ad²_{e3-e1}`.
pub fn projection_2_2_m4() -> Result<ProjectionData, WedgeError> {
    project_onto(
        w([2, 2, -4]),
        &x_2_2_m4(),
        vec![w([1, 0, -1]), w([0, 1, -1])],
        vec![w([0, -1, 1]), w([-1, 0, 1])],
    )
}

/// Projection of `X_0` onto `τ_(4,-2,-2)` via
/// `R' = Ad²_{e1-e3} ∘ Ad²_{e1-e2}` and `A' = Ad²_{e2-e1} ∘ Ad²_{e3-e1}`.
pub fn projection_4_m2_m2() -> Result<ProjectionData, WedgeError> {
    project_onto(
        w([4, -2, -2]),
        &x_4_m2_m2(),
        vec![w([1, 0, -1]), w([1, -1, 0])],
        vec![w([-1, 1, 0]), w([-1, 0, 1])],
    )
}

/// The coefficient `α` of the projection of `X_0` onto `τ_(2,2,-4)`.
pub fn projection_coefficient() -> Result<BigRational, WedgeError> {
    projection_2_2_m4().map(|d| d.alpha)
}

pub fn gaussian(re: i64, im: i64) -> Complex<BigRational> {
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}
