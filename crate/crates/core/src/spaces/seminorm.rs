//! Sequence-space norms (`ℓ^p`, `c₀`, and the rapidly-decreasing-sequence
//! family `‖x‖_k = Σ |x_n| n^k`) evaluated on embedded grid vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::vector::GridVector;
use super::SpacesError;
use crate::scalar::{ExactComplex, Scalar};

/// Which sequence norm a summand copy carries.
#[derive(Clone, Copy, PartialEq, Debug, serde::Serialize)]
pub enum SequenceNorm {
    /// `ℓ^p` for `p ≥ 1`.
    EllP { p: f64 },
    /// Supremum of moduli.
    C0,
    /// `‖x‖_k = Σ |x_n| n^k` with weight power `k ≥ 0`.
    S { weight_power: u32 },
}

impl SequenceNorm {
    pub fn ell_p(p: f64) -> Result<Self, SpacesError> {
        if !(p >= 1.0) {
            return Err(SpacesError::InvalidNormParameter { p });
        }
        Ok(SequenceNorm::EllP { p })
    }

    pub fn ell_1() -> Self {
        SequenceNorm::EllP { p: 1.0 }
    }
}

fn embedded_coords<S: Scalar>(
    v: &GridVector<S>,
) -> Result<impl Iterator<Item = (u32, &S)>, SpacesError> {
    // A norm makes sense only on a single summand copy; multi-row support
    // is the "not in embedded Y" signal the containment checkers key on.
    if v.single_row().is_none() {
        return Err(SpacesError::NotEmbedded {
            rows: v.rows().len(),
        });
    }
    Ok(v.iter().map(|(p, c)| (p.col, c)))
}

/// Norm of the row coordinates of `v` under `kind`. The vector must be
/// supported in a single summand row (the zero vector always qualifies).
pub fn sequence_norm<S: Scalar>(v: &GridVector<S>, kind: SequenceNorm) -> Result<f64, SpacesError> {
    let coords = embedded_coords(v)?;
    Ok(match kind {
        SequenceNorm::EllP { p } => {
            if p == 1.0 {
                coords.map(|(_, c)| c.abs_f64()).sum()
            } else {
                let s: f64 = coords.map(|(_, c)| c.abs_f64().powf(p)).sum();
                s.powf(1.0 / p)
            }
        }
        SequenceNorm::C0 => coords.map(|(_, c)| c.abs_f64()).fold(0.0, f64::max),
        SequenceNorm::S { weight_power } => coords
            .map(|(j, c)| c.abs_f64() * (j as f64).powi(weight_power as i32))
            .sum(),
    })
}

/// Exact-rational norm value. Supported for `ℓ¹`, `c₀` and the `s` family,
/// and only when every coefficient has an exact rational modulus.
pub fn sequence_norm_exact(
    v: &GridVector<ExactComplex>,
    kind: SequenceNorm,
) -> Result<BigRational, SpacesError> {
    let coords: Vec<(u32, BigRational)> = embedded_coords(v)?
        .map(|(j, c)| {
            c.try_abs_rational()
                .map(|m| (j, m))
                .ok_or(SpacesError::NoExactModulus)
        })
        .collect::<Result<_, _>>()?;
    match kind {
        SequenceNorm::EllP { p } if p == 1.0 => {
            Ok(coords.into_iter().map(|(_, m)| m).fold(BigRational::zero(), |a, b| a + b))
        }
        SequenceNorm::EllP { p } => Err(SpacesError::ExactNormUnsupported { p }),
        SequenceNorm::C0 => Ok(coords
            .into_iter()
            .map(|(_, m)| m)
            .max()
            .unwrap_or_else(BigRational::zero)),
        SequenceNorm::S { weight_power } => Ok(coords
            .into_iter()
            .map(|(j, m)| {
                m * BigRational::from(BigInt::from(j).pow(weight_power))
            })
            .fold(BigRational::zero(), |a, b| a + b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::vector::Pos;
    use num_complex::Complex64;

    fn e(row: u32, col: u32) -> GridVector<Complex64> {
        GridVector::basis(Pos::new(row, col))
    }

    #[test]
    fn s_norm_single_term() {
        // e_{1,3} under the s-norm with k = 2 is 1·3² = 9.
        let v = e(1, 3);
        let n = sequence_norm(&v, SequenceNorm::S { weight_power: 2 }).unwrap();
        assert_eq!(n, 9.0);
    }

    #[test]
    fn ell1_two_terms() {
        let v = e(1, 1).add(&e(1, 2));
        assert_eq!(sequence_norm(&v, SequenceNorm::ell_1()).unwrap(), 2.0);
    }

    #[test]
    fn s_norm_weighted_sum() {
        // Σ_{j=1..4} (1/2)·e_{1,j} under s with k = 1: (1/2)(1+2+3+4) = 5.
        let half = Complex64::new(0.5, 0.0);
        let v = GridVector::from_entries((1..=4).map(|j| (Pos::new(1, j), half)));
        assert_eq!(
            sequence_norm(&v, SequenceNorm::S { weight_power: 1 }).unwrap(),
            5.0
        );
    }

    #[test]
    fn multi_row_is_not_embedded() {
        let v = e(1, 1).add(&e(2, 1));
        assert!(matches!(
            sequence_norm(&v, SequenceNorm::ell_1()),
            Err(SpacesError::NotEmbedded { rows: 2 })
        ));
    }

    #[test]
    fn c0_is_sup_of_moduli() {
        let v = GridVector::from_entries([
            (Pos::new(1, 2), Complex64::new(0.0, -3.0)),
            (Pos::new(1, 9), Complex64::new(1.0, 0.0)),
        ]);
        assert_eq!(sequence_norm(&v, SequenceNorm::C0).unwrap(), 3.0);
    }

    #[test]
    fn exact_norms_match_hand_values() {
        use crate::scalar::ExactComplex;
        let v: GridVector<ExactComplex> = GridVector::from_entries([
            (Pos::new(1, 1), ExactComplex::from_ratio(1, 3)),
            (Pos::new(1, 4), ExactComplex::from_imag_ratio(-1, 6)),
        ]);
        // ℓ¹: 1/3 + 1/6 = 1/2; s(k=1): 1/3·1 + 1/6·4 = 1.
        let one_half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            sequence_norm_exact(&v, SequenceNorm::ell_1()).unwrap(),
            one_half
        );
        assert_eq!(
            sequence_norm_exact(&v, SequenceNorm::S { weight_power: 1 }).unwrap(),
            BigRational::from(BigInt::from(1))
        );
    }

    #[test]
    fn exact_norm_requires_axis_coefficients() {
        use crate::scalar::ExactComplex;
        let mixed = ExactComplex::from_ratio(1, 1).add(&ExactComplex::from_imag_ratio(1, 1));
        let v: GridVector<ExactComplex> = GridVector::from_entries([(Pos::new(1, 1), mixed)]);
        assert!(matches!(
            sequence_norm_exact(&v, SequenceNorm::ell_1()),
            Err(SpacesError::NoExactModulus)
        ));
    }
}
