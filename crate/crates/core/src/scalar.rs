//! Coefficient scalars for grid vectors: double-precision complex numbers
//! for numeric runs and Gaussian rationals for exact-arithmetic runs.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Operations the vector and operator layers need from a coefficient type.
///
/// Implemented by [`Complex64`] (numeric mode) and [`ExactComplex`]
/// (exact-rational mode). Methods take references because exact values own
/// heap allocations.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; must not be called on zero.
    fn recip(&self) -> Self;
    /// Modulus as `f64` (may underflow to 0 for extreme exact values).
    fn abs_f64(&self) -> f64;
    /// Exact modulus, when one exists in the rationals (pure real or pure
    /// imaginary values). `None` otherwise or in numeric mode.
    fn try_abs_rational(&self) -> Option<BigRational>;
    fn is_real(&self) -> bool;
    /// True for real scalars strictly greater than one (weight validation).
    fn is_real_gt_one(&self) -> bool;
    /// Text form of the real and imaginary parts, for vector dumps.
    fn text_parts(&self) -> (String, String);
}

/// `base^exp` by repeated squaring, for any scalar.
pub fn scalar_powu<S: Scalar>(base: &S, exp: u64) -> S {
    let mut acc = S::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&sq);
        }
        e >>= 1;
        if e > 0 {
            sq = sq.mul(&sq);
        }
    }
    acc
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        1.0 / self
    }
    fn abs_f64(&self) -> f64 {
        self.norm()
    }
    fn try_abs_rational(&self) -> Option<BigRational> {
        None
    }
    fn is_real(&self) -> bool {
        self.im == 0.0
    }
    fn is_real_gt_one(&self) -> bool {
        self.im == 0.0 && self.re > 1.0
    }
    fn text_parts(&self) -> (String, String) {
        (format!("{}", self.re), format!("{}", self.im))
    }
}

/// A Gaussian rational: complex number with exact rational real and
/// imaginary parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactComplex {
    re: BigRational,
    im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    /// Real rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// Pure imaginary rational `(num/den)·i`.
    pub fn from_imag_ratio(num: i64, den: i64) -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::new(BigInt::from(num), BigInt::from(den)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    /// Squared modulus, always exact.
    pub fn abs_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

impl Scalar for ExactComplex {
    fn zero() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn one() -> Self {
        Self {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    fn from_i64(n: i64) -> Self {
        Self {
            re: BigRational::from(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn recip(&self) -> Self {
        let d = self.abs_sq();
        assert!(!d.is_zero(), "reciprocal of zero");
        Self {
            re: &self.re / &d,
            im: -(&self.im / &d),
        }
    }
    fn abs_f64(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(0.0);
        let im = self.im.to_f64().unwrap_or(0.0);
        re.hypot(im)
    }
    fn try_abs_rational(&self) -> Option<BigRational> {
        if self.im.is_zero() {
            Some(self.re.abs())
        } else if self.re.is_zero() {
            Some(self.im.abs())
        } else {
            None
        }
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    fn is_real_gt_one(&self) -> bool {
        self.im.is_zero() && self.re > BigRational::one()
    }
    fn text_parts(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }
}
