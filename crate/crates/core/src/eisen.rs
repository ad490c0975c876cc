//! Siegel units, the real-analytic Eisenstein series of level `N` at the point
//! `g_z`, and the two identities linking them at `s = 0`.
//!
//! For `Φ = e^{-π(x²+y²)} ⊗ char((0,1) + N Ẑ²)` the adelic series unfolds to
//!
//! ```text
//! E(g_z, Φ, s) = 1/φ(N) Σ_{v ∈ L*} ∫_0^∞ Φ_∞(t v g_z) t^{2s} dt/t,
//! L* = {(c, d) ∈ Z² : c ≡ 0, d ∈ (Z/N)^× mod N},
//! ```
//!
//! with `g_z = [[√y, x/√y], [0, 1/√y]]`. Splitting the `t`-integral at 1 and applying
//! Poisson summation to the part `t < 1` gives, for a homogeneous harmonic
//! polynomial `P` of degree `j` in front of the Gaussian,
//!
//! ```text
//! φ(N) E = Σ_{v ∈ L*}   P(v g) ½ (π|vg|²)^{-(s+j/2)} Γ(s + j/2, π|vg|²)
//!        + N^{-2} Σ_{k ≠ 0} c_N(k_2) P̂(ξ_k) ½ (π|ξ_k|²)^{-(1-s+j/2)} Γ(1 - s + j/2, π|ξ_k|²)
//!        + [j = 0] φ(N) / (N² (2s - 2)),
//! ```
//!
//! where `ξ_k = g^{-1} k / N`, `c_N` is the Ramanujan sum and `P̂ = (-i)^j P`.
//! Both sums converge for every `s ≠ 1`.

use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EisenError {
    #[error("point must lie in the upper half plane, got y = {0}")]
    NotInUpperHalfPlane(f64),
    #[error("level must be at least {min}, got {got}")]
    LevelTooSmall { min: u64, got: u64 },
    #[error("{d} is not a unit modulo {n}")]
    NotAUnit { d: i64, n: u64 },
    #[error("(a, b) = (0, 0) does not define a Siegel unit")]
    ZeroIndex,
    #[error("index {0} is outside [0, 1)")]
    IndexOutOfRange(f64),
    #[error("truncation bound {bound:e} exceeds the target {target:e}; increase q_terms or y")]
    PrecisionShortfall { bound: f64, target: f64 },
    #[error("s = {0} is at the pole of the continuation")]
    AtPole(f64),
}

fn cst<T: Float>(x: f64) -> T {
    T::from(x).expect("float constant")
}

fn to_f64<T: Float>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint<T> {
    x: T,
    y: T,
}

impl<T: Float> UpperHalfPoint<T> {
    pub fn new(x: T, y: T) -> Result<Self, EisenError> {
        if !(y > T::zero()) || !x.is_finite() || !y.is_finite() {
            return Err(EisenError::NotInUpperHalfPlane(to_f64(y)));
        }
        Ok(UpperHalfPoint { x, y })
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn y(&self) -> T {
        self.y
    }

    pub fn z(&self) -> Complex<T> {
        Complex::new(self.x, self.y)
    }

    /// Image under `[[a, b], [c, d]]`.
    pub fn mobius(&self, a: i64, b: i64, c: i64, d: i64) -> Result<Self, EisenError> {
        let (a, b, c, d): (T, T, T, T) = (cst(a as f64), cst(b as f64), cst(c as f64), cst(d as f64));
        let z = self.z();
        let w: Complex<T> = (z * a + b) / (z * c + d);
        Self::new(w.re, w.im)
    }
}

/// `Φ_f = char((a, b) + N Ẑ²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchwartzDatum {
    n: u64,
    a: u64,
    b: u64,
}

impl SchwartzDatum {
    pub fn new(n: u64, a: i64, b: i64) -> Result<Self, EisenError> {
        if n < 3 {
            return Err(EisenError::LevelTooSmall { min: 3, got: n });
        }
        let a = a.rem_euclid(n as i64) as u64;
        let b = b.rem_euclid(n as i64) as u64;
        if a == 0 && b == 0 {
            return Err(EisenError::ZeroIndex);
        }
        Ok(SchwartzDatum { n, a, b })
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn residues(&self) -> (u64, u64) {
        (self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionSpec {
    /// Number of factors kept in each infinite product.
    pub q_terms: usize,
    /// Lattice terms with `π|w|²` above this are dropped.
    pub lattice_bound: u32,
    pub target_abs_error: f64,
}

impl Default for PrecisionSpec {
    fn default() -> Self {
        PrecisionSpec {
            q_terms: 40,
            lattice_bound: 45,
            target_abs_error: 1e-10,
        }
    }
}

/// A value together with a bound on its truncation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T, V = T> {
    pub value: V,
    pub bound: T,
}

pub fn units(n: u64) -> Vec<u64> {
    (1..n).filter(|r| r.gcd(&n) == 1).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    units(n).len() as u64
}

/// `d^{-1} mod n`.
pub fn inverse_mod(d: i64, n: u64) -> Result<u64, EisenError> {
    let r = d.rem_euclid(n as i64) as u64;
    (1..n)
        .find(|&x| (x * r) % n == 1)
        .ok_or(EisenError::NotAUnit { d, n })
}

/// Ramanujan sum `Σ_{r ∈ (Z/N)^×} e^{2πi r k / N}`.
pub fn ramanujan_sum<T: Float + FloatConst>(n: u64, k: i64) -> T {
    let k = k.rem_euclid(n as i64) as u64;
    units(n)
        .into_iter()
        .map(|r| (T::TAU() * cst((r * k % n) as f64) / cst(n as f64)).cos())
        .fold(T::zero(), |a, b| a + b)
}

pub fn bernoulli2<T: Float>(x: T) -> T {
    x * x - x + cst(1.0 / 6.0)
}

/// Upper incomplete gamma `Γ(a, x) = ∫_x^∞ t^{a-1} e^{-t} dt` for real `a` and `x > 0`.
pub fn upper_gamma<T: Float>(a: T, x: T) -> T {
    assert!(x > T::zero(), "upper_gamma needs x > 0");
    let one = T::one();
    if x >= one {
        return upper_gamma_cf(a, x);
    }
    // Γ(a, x) = Γ(a, 1) + Σ_k (-1)^k / k! ∫_x^1 t^{a+k-1} dt
    let lx = x.ln();
    let mut sum = upper_gamma_cf(a, one);
    let mut fact = one;
    for k in 0..200 {
        if k > 0 {
            fact = fact * cst(k as f64);
        }
        let b = a + cst(k as f64);
        let integral = if b.abs() < cst(1e-300) {
            -lx
        } else {
            -(b * lx).exp_m1() / b
        };
        let term = integral / fact;
        sum = if k % 2 == 0 { sum + term } else { sum - term };
        if k > 2 && term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
    }
    sum
}

/// Modified Lentz evaluation of the continued fraction for `Γ(a, x)`, `x ≥ 1`.
fn upper_gamma_cf<T: Float>(a: T, x: T) -> T {
    let tiny = T::min_positive_value() / T::epsilon();
    let one = T::one();
    let two = cst::<T>(2.0);
    let mut b = x + one - a;
    let mut c = one / tiny;
    let mut d = if b.abs() < tiny { one / tiny } else { one / b };
    let mut h = d;
    for i in 1..10_000 {
        let fi = cst::<T>(i as f64);
        let an = -fi * (fi - a);
        b = b + two;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = one / d;
        let del = d * c;
        h = h * del;
        if (del - one).abs() <= T::epsilon() {
            break;
        }
    }
    (a * x.ln() - x).exp() * h
}

fn check_index<T: Float>(v: T) -> Result<(), EisenError> {
    if v < T::zero() || v >= T::one() {
        return Err(EisenError::IndexOutOfRange(to_f64(v)));
    }
    Ok(())
}

/// Bound on the tail of the two products in `g_{a,b}` after `m` factors each.
fn siegel_tail<T: Float + FloatConst>(a: T, y: T, m: usize) -> T {
    let one = T::one();
    let rq = (-T::TAU() * y).exp();
    let mm = cst::<T>(m as f64);
    let lead = rq.powf(mm + a) + rq.powf(mm - a);
    let worst = rq.powf(mm - a);
    if worst >= one {
        return T::infinity();
    }
    // |log|1 - u|| ≤ |u| / (1 - |u|)
    lead / ((one - rq) * (one - worst))
}

/// The factors `u_n = q^{n+a} e^{2πib}` (`n ≥ 0`) and `v_n = q^{n-a} e^{-2πib}` (`n ≥ 1`).
fn siegel_factors<T: Float + FloatConst>(a: T, b: T, z: &UpperHalfPoint<T>, m: usize) -> Vec<(T, Complex<T>)> {
    let tau = T::TAU();
    let mut out = Vec::with_capacity(2 * m);
    for n in 0..m {
        let nf = cst::<T>(n as f64);
        let e = nf + a;
        out.push((e, Complex::from_polar((-tau * z.y * e).exp(), tau * (e * z.x + b))));
        if n >= 1 {
            let e = nf - a;
            out.push((e, Complex::from_polar((-tau * z.y * e).exp(), tau * (e * z.x - b))));
        }
    }
    out
}

/// `log |g_{a,b}(z)|` with `g_{a,b} = q^{B_2(a)/2} ∏_{n≥0} (1 - q^{n+a} e^{2πib}) ∏_{n≥1} (1 - q^{n-a} e^{-2πib})`.
pub fn siegel_unit_log_abs<T: Float + FloatConst>(
    a: T,
    b: T,
    z: &UpperHalfPoint<T>,
    prec: &PrecisionSpec,
) -> Result<Estimate<T>, EisenError> {
    check_index(a)?;
    check_index(b)?;
    if a == T::zero() && b == T::zero() {
        return Err(EisenError::ZeroIndex);
    }
    let bound = siegel_tail(a, z.y, prec.q_terms);
    if !(to_f64(bound) <= prec.target_abs_error) {
        return Err(EisenError::PrecisionShortfall {
            bound: to_f64(bound),
            target: prec.target_abs_error,
        });
    }
    let one = Complex::new(T::one(), T::zero());
    let lead = bernoulli2(a) / cst(2.0) * (-T::TAU() * z.y);
    let value = siegel_factors(a, b, z, prec.q_terms)
        .into_iter()
        .fold(lead, |acc, (_, u)| acc + (one - u).norm().ln());
    Ok(Estimate { value, bound })
}

/// `d/dz log g_{a,b}(z)`, differentiating the product term by term.
pub fn siegel_unit_dlog<T: Float + FloatConst>(
    a: T,
    b: T,
    z: &UpperHalfPoint<T>,
    prec: &PrecisionSpec,
) -> Result<Estimate<T, Complex<T>>, EisenError> {
    check_index(a)?;
    check_index(b)?;
    let rq = (-T::TAU() * z.y).exp();
    let m = prec.q_terms;
    // Σ_{n ≥ m} (n ± a) |u| / (1 - |u|), with (n + 1) |q|^n summed in closed form.
    let worst = rq.powf(cst::<T>(m as f64) - a);
    let mf = cst::<T>(m as f64);
    let tail = T::TAU() * cst(2.0) * worst * (mf + T::one()) / ((T::one() - rq).powi(2) * (T::one() - worst));
    if !(to_f64(tail) <= prec.target_abs_error) {
        return Err(EisenError::PrecisionShortfall {
            bound: to_f64(tail),
            target: prec.target_abs_error,
        });
    }
    let one = Complex::new(T::one(), T::zero());
    let i_tau = Complex::new(T::zero(), T::TAU());
    let mut s = Complex::new(bernoulli2(a) / cst(2.0), T::zero());
    for (e, u) in siegel_factors(a, b, z, m) {
        s = s - u * e / (one - u);
    }
    Ok(Estimate {
        value: i_tau * s,
        bound: tail,
    })
}

fn check_level(n: u64, min: u64) -> Result<(), EisenError> {
    if n < min {
        return Err(EisenError::LevelTooSmall { min, got: n });
    }
    Ok(())
}

/// `log |u(Φ_f)(g_z)|` for `u = ∏_{b ∈ (Z/N)^×} g_{0, b r_d / N}^{φ(N)}`, `r_d = d^{-1} mod N`.
pub fn u_log<T: Float + FloatConst>(
    n: u64,
    z: &UpperHalfPoint<T>,
    d: i64,
    prec: &PrecisionSpec,
) -> Result<Estimate<T>, EisenError> {
    check_level(n, 4)?;
    let phi = cst::<T>(euler_phi(n) as f64);
    let s = unit_log_sum(n, z, d, prec)?;
    Ok(Estimate {
        value: s.value * phi,
        bound: s.bound * phi,
    })
}

/// `log |u'(g_z)|` for `u' = ∏_{b ∈ (Z/N)^×} g_{0, b r_d / N}^{-1/φ(N)}`, the
/// normalisation under which `E(g_z, Φ, 0) = log |u'|`.
pub fn u_log_klf<T: Float + FloatConst>(
    n: u64,
    z: &UpperHalfPoint<T>,
    d: i64,
    prec: &PrecisionSpec,
) -> Result<Estimate<T>, EisenError> {
    check_level(n, 3)?;
    let phi = cst::<T>(euler_phi(n) as f64);
    let s = unit_log_sum(n, z, d, prec)?;
    Ok(Estimate {
        value: -s.value / phi,
        bound: s.bound / phi,
    })
}

fn unit_log_sum<T: Float + FloatConst>(
    n: u64,
    z: &UpperHalfPoint<T>,
    d: i64,
    prec: &PrecisionSpec,
) -> Result<Estimate<T>, EisenError> {
    let rd = inverse_mod(d, n)?;
    let nf = cst::<T>(n as f64);
    units(n).into_iter().try_fold(
        Estimate {
            value: T::zero(),
            bound: T::zero(),
        },
        |acc, b| {
            let e = siegel_unit_log_abs(T::zero(), cst::<T>((b * rd % n) as f64) / nf, z, prec)?;
            Ok(Estimate {
                value: acc.value + e.value,
                bound: acc.bound + e.bound,
            })
        },
    )
}

/// Archimedean component: the Gaussian, or `-4π(x² - y²)` times the Gaussian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArchimedeanSection {
    Gaussian,
    Harmonic,
}

impl ArchimedeanSection {
    fn degree(self) -> i32 {
        match self {
            ArchimedeanSection::Gaussian => 0,
            ArchimedeanSection::Harmonic => 2,
        }
    }

    fn poly<T: Float + FloatConst>(self, u: T, v: T) -> T {
        match self {
            ArchimedeanSection::Gaussian => T::one(),
            ArchimedeanSection::Harmonic => -cst::<T>(4.0) * T::PI() * (u * u - v * v),
        }
    }

    /// `P̂ / P`: the Fourier transform of `P · G` is `(-i)^j P · G`.
    fn fourier_sign<T: Float>(self) -> T {
        match self {
            ArchimedeanSection::Gaussian => T::one(),
            ArchimedeanSection::Harmonic => -T::one(),
        }
    }
}

/// `E(g_z, Φ_∞ ⊗ char((0,1) + N Ẑ²), s)` by the continuation described in the module docs.
pub fn eisenstein_value<T: Float + FloatConst>(
    n: u64,
    z: &UpperHalfPoint<T>,
    s: T,
    section: ArchimedeanSection,
    prec: &PrecisionSpec,
) -> Result<Estimate<T>, EisenError> {
    check_level(n, 3)?;
    let one = T::one();
    let half = cst::<T>(0.5);
    let pi = T::PI();
    if section == ArchimedeanSection::Gaussian && (s - one).abs() < cst(1e-8) {
        return Err(EisenError::AtPole(to_f64(s)));
    }
    let j = cst::<T>(section.degree() as f64) * half;
    let cutoff = cst::<T>(prec.lattice_bound as f64);
    let nf = cst::<T>(n as f64);
    let sy = z.y.sqrt();
    let radius = (cutoff / pi).sqrt();
    let phi = euler_phi(n);
    let is_unit: Vec<bool> = (0..n).map(|r| r.gcd(&n) == 1).collect();

    let term = |u: T, v: T, a: T| -> T {
        let t = pi * (u * u + v * v);
        section.poly(u, v) * half * t.powf(-a) * upper_gamma(a, t)
    };

    // Σ over v = (c, d) ∈ L*, v g = (c √y, (c x + d)/√y).
    let mut sum_a = T::zero();
    let mmax = (radius / (nf * sy)).ceil().to_i64().unwrap_or(0) + 1;
    for m in -mmax..=mmax {
        let c = cst::<T>((m * n as i64) as f64);
        let lo = (-c * z.x - radius * sy).floor().to_i64().unwrap_or(0) - 1;
        let hi = (-c * z.x + radius * sy).ceil().to_i64().unwrap_or(0) + 1;
        for d in lo..=hi {
            if !is_unit[d.rem_euclid(n as i64) as usize] {
                continue;
            }
            let (u, v) = (c * sy, (c * z.x + cst(d as f64)) / sy);
            if pi * (u * u + v * v) <= cutoff {
                sum_a = sum_a + term(u, v, s + j);
            }
        }
    }

    // Σ over k ≠ 0, ξ_k = ((k_1 - x k_2)/√y, √y k_2) / N.
    let mut sum_b = T::zero();
    let ramanujan: Vec<T> = (0..n).map(|k| ramanujan_sum(n, k as i64)).collect();
    let kmax = (radius * nf / sy).ceil().to_i64().unwrap_or(0) + 1;
    for k2 in -kmax..=kmax {
        let cn = ramanujan[k2.rem_euclid(n as i64) as usize];
        if cn == T::zero() {
            continue;
        }
        let k2f = cst::<T>(k2 as f64);
        let lo = (z.x * k2f - radius * nf * sy).floor().to_i64().unwrap_or(0) - 1;
        let hi = (z.x * k2f + radius * nf * sy).ceil().to_i64().unwrap_or(0) + 1;
        for k1 in lo..=hi {
            if k1 == 0 && k2 == 0 {
                continue;
            }
            let (u, v) = ((cst::<T>(k1 as f64) - z.x * k2f) / sy / nf, sy * k2f / nf);
            if pi * (u * u + v * v) <= cutoff {
                sum_b = sum_b + cn * section.fourier_sign() * term(u, v, one - s + j);
            }
        }
    }

    let phif = cst::<T>(phi as f64);
    let constant = match section {
        ArchimedeanSection::Gaussian => phif / (nf * nf * (cst::<T>(2.0) * s - cst(2.0))),
        ArchimedeanSection::Harmonic => T::zero(),
    };
    let value = (sum_a + sum_b / (nf * nf) + constant) / phif;

    // Omitted terms: lattice density times ∫_L^∞ (1 + 4t) t^{|a|} e^{-t} dt, crudely.
    let amax = (s + j).abs().max((one - s + j).abs()) + one;
    let tail = (one + cst::<T>(4.0) * cutoff) * cutoff.powf(amax) * (-cutoff).exp();
    let density = phif / (nf * nf) + one;
    let bound = density * tail + cst::<T>(64.0) * T::epsilon() * value.abs().max(one);
    Ok(Estimate { value, bound })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KlfComparison<T> {
    /// `E(g_z, Φ, 0)`.
    pub eis: Estimate<T>,
    /// `log |u(Φ_f)|` with exponent `φ(N)`.
    pub ulog: Estimate<T>,
    /// `log |u'|` with exponent `-1/φ(N)`.
    pub ulog_klf: Estimate<T>,
    /// `|eis - ulog_klf|`.
    pub residual: T,
    /// `eis / ulog`, which equals `-1/φ(N)²`.
    pub ratio: T,
}

pub fn klf_compare<T: Float + FloatConst>(
    n: u64,
    z: &UpperHalfPoint<T>,
    prec: &PrecisionSpec,
) -> Result<KlfComparison<T>, EisenError> {
    check_level(n, 4)?;
    let eis = eisenstein_value(n, z, T::zero(), ArchimedeanSection::Gaussian, prec)?;
    let ulog = u_log(n, z, 1, prec)?;
    let ulog_klf = u_log_klf(n, z, 1, prec)?;
    Ok(KlfComparison {
        residual: (eis.value - ulog_klf.value).abs(),
        ratio: eis.value / ulog.value,
        eis,
        ulog,
        ulog_klf,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorodlogCheck<T> {
    /// `2 Re(d log u'(v⁺))` with `d log u'(v⁺) = 2iy ∂_z log u'`.
    pub dlog: Estimate<T>,
    /// `E(g_z, Φ', 0)`.
    pub eis: Estimate<T>,
    pub residual: T,
}

/// Compares the holomorphic logarithmic derivative of `u'` with `E(g_z, Φ', 0)`.
pub fn corodlog_check<T: Float + FloatConst>(
    n: u64,
    z: &UpperHalfPoint<T>,
    prec: &PrecisionSpec,
) -> Result<CorodlogCheck<T>, EisenError> {
    check_level(n, 3)?;
    let nf = cst::<T>(n as f64);
    let phi = cst::<T>(euler_phi(n) as f64);
    let mut dsum = Complex::new(T::zero(), T::zero());
    let mut dbound = T::zero();
    for r in units(n) {
        let e = siegel_unit_dlog(T::zero(), cst::<T>(r as f64) / nf, z, prec)?;
        dsum = dsum + e.value;
        dbound = dbound + e.bound;
    }
    // ∂_z log u' = -(1/φ) Σ ∂_z log g; R_{v⁺} = 2iy ∂_z; pairing takes twice the real part.
    let two = cst::<T>(2.0);
    let raised = Complex::new(T::zero(), two * z.y) * (-dsum / phi);
    let dlog = Estimate {
        value: two * raised.re,
        bound: cst::<T>(4.0) * z.y * dbound / phi,
    };
    let eis = eisenstein_value(n, z, T::zero(), ArchimedeanSection::Harmonic, prec)?;
    Ok(CorodlogCheck {
        residual: (dlog.value - eis.value).abs(),
        dlog,
        eis,
    })
}
