//! Countable increasing seminorm families, the F-norm they induce, and the
//! neighborhood balls every membership condition reduces to.

use std::sync::Arc;

use super::SpacesError;

/// A single seminorm evaluation; multi-row inputs may signal
/// [`SpacesError::NotEmbedded`].
pub type Seminorm<V> = Arc<dyn Fn(&V) -> Result<f64, SpacesError> + Send + Sync>;

/// A finite horizon of an increasing seminorm family `p_1 ≤ p_2 ≤ …`.
///
/// The induced F-norm is `Σ_{n=1}^{horizon} 2^{-n}·min(1, p_n(v))`, and the
/// neighborhood balls are `V_n = { v : fnorm(v) ≤ 2^{-n} }`. Subadditivity
/// of the F-norm gives `V_n + V_n ⊆ V_{n-1}` and balancedness for free.
///
/// Monotonicity of the family is the constructor's contract; it cannot be
/// checked on function values here and is property-tested per scenario.
#[derive(Clone)]
pub struct GradedSpace<V> {
    seminorms: Vec<Seminorm<V>>,
}

impl<V> GradedSpace<V> {
    pub fn new(seminorms: Vec<Seminorm<V>>) -> Self {
        assert!(
            !seminorms.is_empty(),
            "a graded space needs at least one seminorm"
        );
        Self { seminorms }
    }

    /// Number of materialized seminorms.
    pub fn horizon(&self) -> usize {
        self.seminorms.len()
    }

    /// All materialized seminorm values of `v`, in family order.
    pub fn seminorm_values(&self, v: &V) -> Result<Vec<f64>, SpacesError> {
        self.seminorms.iter().map(|p| p(v)).collect()
    }

    /// `Σ_{n=1}^{horizon} 2^{-n}·min(1, p_n(v))`.
    pub fn fnorm(&self, v: &V) -> Result<f64, SpacesError> {
        let mut acc = 0.0;
        for (i, p) in self.seminorms.iter().enumerate() {
            acc += (-(i as f64 + 1.0)).exp2() * p(v)?.min(1.0);
        }
        Ok(acc)
    }

    /// Whether `v ∈ V_n`, i.e. `fnorm(v) ≤ 2^{-n}`.
    ///
    /// `n ≤ 0` denotes the whole unit budget (always true, since the F-norm
    /// is capped below 1). Vectors with F-norm exactly 0 belong to every
    /// ball; otherwise `n` beyond the horizon is an error, because the
    /// truncated F-norm cannot resolve radii below `2^{-horizon}`.
    pub fn ball_membership(&self, v: &V, n: i64) -> Result<bool, SpacesError> {
        let value = self.fnorm(v)?;
        if n <= 0 || value == 0.0 {
            return Ok(true);
        }
        if n as usize > self.horizon() {
            return Err(SpacesError::HorizonExceeded {
                n: n as usize,
                horizon: self.horizon(),
            });
        }
        Ok(value <= (-(n as f64)).exp2())
    }
}

impl<V> std::fmt::Debug for GradedSpace<V> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedSpace")
            .field("horizon", &self.horizon())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // A toy space over plain pairs: p_1 = |a|, p_2 = |a| + |b|.
    fn toy() -> GradedSpace<(f64, f64)> {
        GradedSpace::new(vec![
            Arc::new(|v: &(f64, f64)| Ok(v.0.abs())),
            Arc::new(|v: &(f64, f64)| Ok(v.0.abs() + v.1.abs())),
        ])
    }

    #[test]
    fn fnorm_of_zero_is_zero_and_in_every_ball() {
        let sp = toy();
        assert_eq!(sp.fnorm(&(0.0, 0.0)).unwrap(), 0.0);
        for n in [0, 1, 2, 50] {
            assert!(sp.ball_membership(&(0.0, 0.0), n).unwrap());
        }
    }

    #[test]
    fn fnorm_single_saturated_seminorm() {
        // One seminorm with p_1(v) = 1 gives 2^{-1}·min(1,1) = 0.5.
        let sp: GradedSpace<f64> = GradedSpace::new(vec![Arc::new(|v: &f64| Ok(v.abs()))]);
        assert_eq!(sp.fnorm(&1.0).unwrap(), 0.5);
    }

    #[test]
    fn fnorm_two_level_example() {
        // p_1 = 0.1, p_2 = 0.3: 0.5·0.1 + 0.25·0.3 = 0.125.
        let sp: GradedSpace<(f64, f64)> = GradedSpace::new(vec![
            Arc::new(|v: &(f64, f64)| Ok(v.0)),
            Arc::new(|v: &(f64, f64)| Ok(v.1)),
        ]);
        assert_eq!(sp.fnorm(&(0.1, 0.3)).unwrap(), 0.125);
    }

    #[test]
    fn ball_membership_thresholds() {
        // fnorm = 0.2 is inside V_2 (0.25) but not V_3 (0.125).
        let sp: GradedSpace<f64> = GradedSpace::new(vec![Arc::new(|v: &f64| Ok(*v))]);
        let v = 0.4; // fnorm = 0.5·0.4 = 0.2
        assert_eq!(sp.fnorm(&v).unwrap(), 0.2);
        assert!(sp.ball_membership(&v, 2).unwrap());
        assert!(!sp.ball_membership(&v, 3).unwrap());
        assert!(sp.ball_membership(&v, 0).unwrap());
        assert!(sp.ball_membership(&v, -1).unwrap());
    }

    #[test]
    fn horizon_guard() {
        let sp: GradedSpace<f64> = GradedSpace::new(vec![Arc::new(|v: &f64| Ok(*v))]);
        assert!(matches!(
            sp.ball_membership(&0.5, 2),
            Err(SpacesError::HorizonExceeded { n: 2, horizon: 1 })
        ));
        // Zero vectors are exempt: they sit in every ball.
        assert!(sp.ball_membership(&0.0, 99).unwrap());
    }

    #[test]
    fn sum_of_ball_members_lands_one_level_up() {
        let sp = toy();
        let v = (0.05, 0.1);
        let w = (0.08, 0.02);
        assert!(sp.ball_membership(&v, 3).unwrap());
        assert!(sp.ball_membership(&w, 3).unwrap());
        let s = (v.0 + w.0, v.1 + w.1);
        assert!(sp.ball_membership(&s, 2).unwrap());
    }
}
