//! The composition-operator pair acting on dyadic polynomials: exponent
//! doubling for `f ↦ f(z²)` and exponent halving for the right inverses
//! `f ↦ f(z^(1/2^n))`.

use crate::spaces::DyadicPolynomial;

/// `f ↦ f ∘ (z ↦ z²)`: every exponent `q` becomes `2q`, coefficients are
/// untouched. Exact.
pub fn compose_square(f: &DyadicPolynomial) -> DyadicPolynomial {
    f.map_exponents(|q| q.double())
}

/// `n`-fold iterate of [`compose_square`], i.e. `f ↦ f(z^(2^n))`.
pub fn compose_square_iter(f: &DyadicPolynomial, n: u64) -> DyadicPolynomial {
    let shift = u32::try_from(n).expect("iteration count fits u32");
    f.map_exponents(|q| {
        let mut out = *q;
        for _ in 0..shift {
            out = out.double();
        }
        out
    })
}

/// `f ↦ f ∘ (z ↦ z^(1/2^n))`: every exponent `q` becomes `q/2^n`. Exact in
/// dyadic-exponent arithmetic.
pub fn compose_gamma(f: &DyadicPolynomial, n: u32) -> DyadicPolynomial {
    f.map_exponents(|q| q.halve(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{eval_dyadic_poly, DyadicExponent, DyadicPolynomial};
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// z(1-z)·p with p a plain integer-coefficient polynomial in z.
    fn cutoff_times(p: &DyadicPolynomial) -> DyadicPolynomial {
        let z = DyadicPolynomial::z();
        let one_minus_z = DyadicPolynomial::constant(c(1.0)).sub(&z);
        z.mul(&one_minus_z).unwrap().mul(p).unwrap()
    }

    #[test]
    fn square_root_monomial_doubles_to_z() {
        let f = DyadicPolynomial::term(c(1.0), DyadicExponent::new(1, 1));
        assert_eq!(compose_square(&f), DyadicPolynomial::z());
    }

    #[test]
    fn termwise_doubling() {
        // z(1-z) = z - z² maps to z² - z⁴.
        let f = cutoff_times(&DyadicPolynomial::constant(c(1.0)));
        let expected = DyadicPolynomial::from_terms([
            (DyadicExponent::from_integer(2), c(1.0)),
            (DyadicExponent::from_integer(4), c(-1.0)),
        ]);
        assert_eq!(compose_square(&f), expected);
    }

    #[test]
    fn iterated_doubling_gives_power_of_two_exponents() {
        // n iterations on z - z² produce exponents {2^n, 2^(n+1)}.
        let f = cutoff_times(&DyadicPolynomial::constant(c(1.0)));
        for n in [1u64, 5, 17] {
            let g = compose_square_iter(&f, n);
            let exps: Vec<_> = g.terms().map(|(q, _)| *q).collect();
            assert_eq!(
                exps,
                vec![
                    DyadicExponent::pow2(n as i32),
                    DyadicExponent::pow2(n as i32 + 1)
                ]
            );
        }
    }

    #[test]
    fn gamma_halves_exponents() {
        assert_eq!(
            compose_gamma(&DyadicPolynomial::z(), 1),
            DyadicPolynomial::term(c(1.0), DyadicExponent::new(1, 1))
        );
    }

    #[test]
    fn square_after_gamma_is_identity() {
        // T^k S_k f = f, structurally, for every f.
        let p = DyadicPolynomial::from_terms([
            (DyadicExponent::zero(), c(0.5)),
            (DyadicExponent::from_integer(3), c(-2.0)),
        ]);
        let f = cutoff_times(&p);
        for k in [1u32, 4, 30] {
            let back = compose_square_iter(&compose_gamma(&f, k), k as u64);
            assert_eq!(back, f);
        }
    }

    #[test]
    fn gamma_transport_approaches_limit_value() {
        // For x_1 = z(1-z), the transported polynomial at z equals
        // x_1(z^(1/2^n)) and tends to x_1(1) = 0; at finite n it matches a
        // direct evaluation through the principal branch.
        let f = cutoff_times(&DyadicPolynomial::constant(c(1.0)));
        let z = c(0.81);
        let g = compose_gamma(&f, 3);
        let via_poly = eval_dyadic_poly(&g, z).unwrap();
        let w = c(0.81f64.powf(1.0 / 8.0));
        let direct = eval_dyadic_poly(&f, w).unwrap();
        assert!((via_poly - direct).norm() < 1e-12);
        // Monotone approach to zero as n grows.
        let v3 = via_poly.norm();
        let v8 = eval_dyadic_poly(&compose_gamma(&f, 8), z).unwrap().norm();
        assert!(v8 < v3);
        assert!(v8 < 1e-2);
    }
}
