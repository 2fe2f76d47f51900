//! Polynomials with nonnegative dyadic-rational exponents.
//!
//! These are closed under substituting `z ↦ z²` (exponent doubling) and
//! `z ↦ z^(1/2^n)` (exponent halving), which makes both composition
//! operators of the analytic scenario exact, structure-level maps.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_complex::Complex64;

use super::SpacesError;

/// A nonnegative dyadic rational `num / 2^scale` in canonical form:
/// `num` is odd or zero, and zero is stored as `(0, 0)`.
///
/// Negative `scale` means multiplication by `2^|scale|`, so integer powers
/// of two are always `(1, -k)` and stay small.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DyadicExponent {
    num: u64,
    scale: i32,
}

impl DyadicExponent {
    /// Canonicalizes `num / 2^scale`.
    pub fn new(mut num: u64, mut scale: i32) -> Self {
        if num == 0 {
            return Self { num: 0, scale: 0 };
        }
        while num & 1 == 0 {
            num >>= 1;
            scale -= 1;
        }
        Self { num, scale }
    }

    pub fn zero() -> Self {
        Self { num: 0, scale: 0 }
    }

    pub fn from_integer(n: u64) -> Self {
        Self::new(n, 0)
    }

    /// `2^k` for any sign of `k`.
    pub fn pow2(k: i32) -> Self {
        Self { num: 1, scale: -k }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn scale(&self) -> i32 {
        self.scale
    }

    /// `2q`; exact, never overflows (only the scale moves).
    pub fn double(&self) -> Self {
        if self.num == 0 {
            *self
        } else {
            Self {
                num: self.num,
                scale: self.scale - 1,
            }
        }
    }

    /// `q / 2^n`; exact.
    pub fn halve(&self, n: u32) -> Self {
        if self.num == 0 {
            *self
        } else {
            Self {
                num: self.num,
                scale: self.scale + n as i32,
            }
        }
    }

    /// `q1 + q2` over a common power-of-two denominator. Errors when the
    /// common-denominator numerator leaves `u64`.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self, SpacesError> {
        if self.num == 0 {
            return Ok(*rhs);
        }
        if rhs.num == 0 {
            return Ok(*self);
        }
        let scale = self.scale.max(rhs.scale);
        let sh_a = (scale - self.scale) as u32;
        let sh_b = (scale - rhs.scale) as u32;
        let a = (self.num as u128)
            .checked_shl(sh_a.min(127))
            .filter(|_| sh_a < 128)
            .ok_or(SpacesError::ExponentOverflow)?;
        let b = (rhs.num as u128)
            .checked_shl(sh_b.min(127))
            .filter(|_| sh_b < 128)
            .ok_or(SpacesError::ExponentOverflow)?;
        let sum = a.checked_add(b).ok_or(SpacesError::ExponentOverflow)?;
        let mut s = sum;
        let mut sc = scale;
        while s & 1 == 0 {
            s >>= 1;
            sc -= 1;
        }
        let num = u64::try_from(s).map_err(|_| SpacesError::ExponentOverflow)?;
        Ok(Self { num, scale: sc })
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 * (-(self.scale as f64)).exp2()
    }
}

impl Ord for DyadicExponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self.scale == other.scale {
            return self.num.cmp(&other.num);
        }
        if self.num == 0 || other.num == 0 {
            return self.num.cmp(&other.num);
        }
        // Compare num1·2^(s_max - s1) against num2·2^(s_max - s2).
        let smax = self.scale.max(other.scale);
        let sh_a = (smax - self.scale) as u64;
        let sh_b = (smax - other.scale) as u64;
        if sh_a < 64 && sh_b < 64 {
            let a = (self.num as u128) << sh_a;
            let b = (other.num as u128) << sh_b;
            a.cmp(&b)
        } else {
            let a = BigUint::from(self.num) << sh_a;
            let b = BigUint::from(other.num) << sh_b;
            a.cmp(&b)
        }
    }
}

impl PartialOrd for DyadicExponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scale.cmp(&0) {
            std::cmp::Ordering::Equal => write!(f, "{}", self.num),
            std::cmp::Ordering::Less => write!(f, "{}*2^{}", self.num, -self.scale),
            std::cmp::Ordering::Greater => write!(f, "{}/2^{}", self.num, self.scale),
        }
    }
}

/// Finite sum of terms `c·z^q` with dyadic-rational exponents `q ≥ 0` and
/// complex coefficients. Zero coefficients are never stored.
///
/// Evaluation uses the principal branch: `z^q := exp(q·Log z)` on
/// `ℂ ∖ (-∞, 0)`, with `0^q := 0` for `q > 0` and `0^0 := 1`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct DyadicPolynomial {
    terms: BTreeMap<DyadicExponent, Complex64>,
}

impl DyadicPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::term(c, DyadicExponent::zero())
    }

    /// The monomial `c·z^q`.
    pub fn term(c: Complex64, q: DyadicExponent) -> Self {
        let mut terms = BTreeMap::new();
        if c.re != 0.0 || c.im != 0.0 {
            terms.insert(q, c);
        }
        Self { terms }
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Self::term(Complex64::new(1.0, 0.0), DyadicExponent::from_integer(1))
    }

    pub fn from_terms<I: IntoIterator<Item = (DyadicExponent, Complex64)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (q, c) in iter {
            p.accumulate(q, c);
        }
        p
    }

    fn accumulate(&mut self, q: DyadicExponent, c: Complex64) {
        use std::collections::btree_map::Entry;
        if c.re == 0.0 && c.im == 0.0 {
            return;
        }
        match self.terms.entry(q) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = *e.get() + c;
                if s.re == 0.0 && s.im == 0.0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DyadicExponent, &Complex64)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (q, c) in &rhs.terms {
            out.accumulate(*q, *c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (q, c) in &rhs.terms {
            out.accumulate(*q, -c);
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(q, v)| (*q, v * c)))
    }

    /// Product polynomial; errors if an exponent sum overflows.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SpacesError> {
        let mut out = Self::zero();
        for (qa, ca) in &self.terms {
            for (qb, cb) in &rhs.terms {
                out.accumulate(qa.checked_add(qb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Rewrites every exponent through `map`; coefficients are untouched.
    pub fn map_exponents<F: Fn(&DyadicExponent) -> DyadicExponent>(&self, map: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(q, c)| (map(q), *c)))
    }

    /// Sum of coefficient moduli; an a-priori bound for `sup |f|` on the
    /// closed unit disk.
    pub fn coefficient_mass(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    /// Deterministic line-oriented dump: one `num scale re im` line per term.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (q, c) in &self.terms {
            s.push_str(&format!("{} {} {} {}\n", q.num, q.scale, c.re, c.im));
        }
        s
    }
}

/// Evaluates `f` at `z` with the principal branch, `Σ c_q · exp(q·Log z)`.
///
/// `z = 0` is allowed (`0^q = 0` for `q > 0`, `0^0 = 1`); points on the
/// open ray `(-∞, 0)` are a domain error.
pub fn eval_dyadic_poly(f: &DyadicPolynomial, z: Complex64) -> Result<Complex64, SpacesError> {
    if z.im == 0.0 && z.re < 0.0 {
        return Err(SpacesError::ExcludedRay { re: z.re });
    }
    if z.re == 0.0 && z.im == 0.0 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (q, c) in &f.terms {
            if q.is_zero() {
                acc += c;
            }
        }
        return Ok(acc);
    }
    // Hoist Log z: every term is exp(q·log), and sup-norm grids call this
    // millions of times.
    let log = z.ln();
    let mut acc = Complex64::new(0.0, 0.0);
    for (q, c) in &f.terms {
        acc += c * (log * q.to_f64()).exp();
    }
    Ok(acc)
}
