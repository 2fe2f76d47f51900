//! Discretized compact disks and the sup-norm seminorms they induce.

use num_complex::Complex64;

use super::dyadic::{eval_dyadic_poly, DyadicPolynomial};
use super::SpacesError;

/// Sample points of a closed disk: the center, and `mesh_density`
/// concentric rings each carrying `8·mesh_density` equispaced points.
///
/// Ring radii are `radius·i/mesh_density`, so doubling the density yields a
/// strict superset of the sample points; sup-norms are monotone along the
/// doubling chain.
#[derive(Clone, Debug)]
pub struct CompactDiskGrid {
    center: Complex64,
    radius: f64,
    mesh_density: u32,
    points: Vec<Complex64>,
}

impl CompactDiskGrid {
    pub fn disk(center: Complex64, radius: f64, mesh_density: u32) -> Self {
        assert!(radius > 0.0, "disk radius must be positive");
        assert!(mesh_density >= 1, "mesh density must be at least 1");
        let per_ring = 8 * mesh_density as usize;
        let mut points = Vec::with_capacity(1 + mesh_density as usize * per_ring);
        points.push(center);
        for ring in 1..=mesh_density {
            let r = radius * ring as f64 / mesh_density as f64;
            for t in 0..per_ring {
                let theta = 2.0 * std::f64::consts::PI * t as f64 / per_ring as f64;
                points.push(center + Complex64::from_polar(r, theta));
            }
        }
        Self {
            center,
            radius,
            mesh_density,
            points,
        }
    }

    /// Doubled-density grid over the same disk; its points contain this
    /// grid's points.
    pub fn refined(&self) -> Self {
        Self::disk(self.center, self.radius, self.mesh_density * 2)
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn mesh_density(&self) -> u32 {
        self.mesh_density
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    /// Largest modulus among the sample points.
    pub fn max_modulus(&self) -> f64 {
        self.points.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Discretized sup-norm `max_{z ∈ grid} |f(z)|`.
pub fn sup_on_grid(f: &DyadicPolynomial, grid: &CompactDiskGrid) -> Result<f64, SpacesError> {
    if f.is_zero() {
        return Ok(0.0);
    }
    let mut best = 0.0f64;
    for &z in grid.points() {
        let v = eval_dyadic_poly(f, z)?;
        let m = v.norm();
        if m > best {
            best = m;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::dyadic::DyadicExponent;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn boundary_ring_sampling_count() {
        let g = CompactDiskGrid::disk(c(0.5), 0.25, 3);
        assert_eq!(g.points().len(), 1 + 3 * 24);
        let r = g.radius();
        for p in g.points() {
            assert!((p - g.center()).norm() <= r + 1e-12);
        }
    }

    #[test]
    fn sup_of_zero_and_constant() {
        let g = CompactDiskGrid::disk(c(0.5), 0.3, 4);
        assert_eq!(sup_on_grid(&DyadicPolynomial::zero(), &g).unwrap(), 0.0);
        let three = DyadicPolynomial::constant(c(3.0));
        assert_eq!(sup_on_grid(&three, &g).unwrap(), 3.0);
    }

    #[test]
    fn monomial_sup_respects_max_modulus_bound() {
        // f = z^(2^n) on the disk centered 1/2, radius 0.4: max modulus is
        // 0.9, so the sup is at most 0.9^(2^n).
        let g = CompactDiskGrid::disk(c(0.5), 0.4, 8);
        assert!((g.max_modulus() - 0.9).abs() < 1e-12);
        for n in [1u32, 3, 5] {
            let f = DyadicPolynomial::term(c(1.0), DyadicExponent::pow2(n as i32));
            let sup = sup_on_grid(&f, &g).unwrap();
            let bound = 0.9f64.powi(1 << n);
            assert!(sup <= bound + 1e-15, "n={n}: {sup} > {bound}");
            // Brute force over a finer boundary sample agrees the sup is
            // attained near the rightmost boundary point.
            let brute = (0..4096)
                .map(|t| {
                    let th = 2.0 * std::f64::consts::PI * t as f64 / 4096.0;
                    let z = c(0.5) + Complex64::from_polar(0.4, th);
                    z.norm().powi(1 << n)
                })
                .fold(0.0f64, f64::max);
            assert!(sup <= brute + 1e-15);
        }
    }

    #[test]
    fn refinement_contains_previous_points() {
        let g = CompactDiskGrid::disk(c(0.5), 0.25, 2);
        let fine = g.refined();
        for p in g.points() {
            assert!(
                fine.points().iter().any(|q| (p - q).norm() < 1e-12),
                "coarse point {p} missing after refinement"
            );
        }
    }
}
