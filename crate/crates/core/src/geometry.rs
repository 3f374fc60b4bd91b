//! Balls in ℝⁿ and radially simple functions with exact integrals over concentric balls.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{positive_param, Error, Result};
use crate::grid;
use crate::young::YoungFunction;

/// Volume of the unit ball, `π^{n/2} / Γ(n/2 + 1)`, by the two-step recursion
/// `v_n = v_{n-2} · 2π / n`.
pub fn unit_ball_volume(n: usize) -> f64 {
    let mut v = if n.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut k = if n.is_multiple_of(2) { 2 } else { 3 };
    while k <= n {
        v *= 2.0 * PI / k as f64;
        k += 2;
    }
    v
}

/// `|B(a, r)| = v_n r^n`.
pub fn ball_volume(n: usize, r: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    Ok(unit_ball_volume(n) * r.powi(n as i32))
}

/// `|B(a, r) ∩ B(a, r0)|` for two balls sharing a center.
pub fn concentric_intersection(n: usize, r: f64, r0: f64) -> Result<f64> {
    ball_volume(n, r)?;
    ball_volume(n, r0)?;
    ball_volume(n, r.min(r0))
}

/// Open ball `B(center, radius)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    center: Vec<f64>,
    radius: f64,
}

impl Ball {
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        if center.is_empty() {
            return Err(Error::Domain(
                "ball center needs at least one coordinate".into(),
            ));
        }
        if center.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("ball center must be finite".into()));
        }
        positive_param("radius", radius)?;
        Ok(Ball { center, radius })
    }

    pub fn centered_at_origin(n: usize, radius: f64) -> Result<Self> {
        Ball::new(vec![0.0; n], radius)
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dimension(&self) -> usize {
        self.center.len()
    }

    pub fn measure(&self) -> f64 {
        unit_ball_volume(self.dimension()) * self.radius.powi(self.dimension() as i32)
    }
}

/// Nonnegative function equal to `values[j]` on the annulus
/// `breakpoints[j-1] ≤ |x - center| < breakpoints[j]` (with `breakpoints[-1] = 0`) and
/// zero beyond the last breakpoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSimple", into = "RawSimple")]
pub struct SimpleRadialFunction {
    center: Vec<f64>,
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSimple {
    center: Vec<f64>,
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl TryFrom<RawSimple> for SimpleRadialFunction {
    type Error = Error;

    fn try_from(raw: RawSimple) -> Result<Self> {
        SimpleRadialFunction::new(raw.center, raw.breakpoints, raw.values)
    }
}

impl From<SimpleRadialFunction> for RawSimple {
    fn from(f: SimpleRadialFunction) -> Self {
        RawSimple {
            center: f.center,
            breakpoints: f.breakpoints,
            values: f.values,
        }
    }
}

impl SimpleRadialFunction {
    pub fn new(center: Vec<f64>, breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if center.is_empty() || center.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain(
                "center must be a finite point of R^n, n >= 1".into(),
            ));
        }
        if breakpoints.is_empty() || breakpoints.len() != values.len() {
            return Err(Error::Domain(format!(
                "need matching nonempty breakpoints and values, got {} and {}",
                breakpoints.len(),
                values.len()
            )));
        }
        if breakpoints[0] <= 0.0
            || !grid::is_strictly_increasing(&breakpoints)
            || breakpoints.iter().any(|b| !b.is_finite())
        {
            return Err(Error::Domain(
                "breakpoints must be finite, positive and strictly increasing".into(),
            ));
        }
        if values.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::Domain(
                "values must be finite and nonnegative".into(),
            ));
        }
        Ok(SimpleRadialFunction {
            center,
            breakpoints,
            values,
        })
    }

    /// `χ_{B(center, r0)}`
    pub fn characteristic(center: Vec<f64>, r0: f64) -> Result<Self> {
        positive_param("r0", r0)?;
        SimpleRadialFunction::new(center, vec![r0], vec![1.0])
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn dimension(&self) -> usize {
        self.center.len()
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `c · f`, `c ≥ 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::Domain(format!(
                "scale must be finite and >= 0, got {c}"
            )));
        }
        SimpleRadialFunction::new(
            self.center.clone(),
            self.breakpoints.clone(),
            self.values.iter().map(|v| c * v).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    /// `Some((c, r0))` when `f = c · χ_{B(center, r0)}` with `c > 0`.
    pub fn as_scaled_indicator(&self) -> Option<(f64, f64)> {
        let c = self.values[0];
        if c <= 0.0 {
            return None;
        }
        let run = self.values.iter().take_while(|&&v| v == c).count();
        if self.values[run..].iter().all(|&v| v == 0.0) {
            Some((c, self.breakpoints[run - 1]))
        } else {
            None
        }
    }

    /// Value at a point; annuli are half-open `[ρ_{j-1}, ρ_j)`.
    pub fn value_at(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(Error::Domain("point dimension does not match".into()));
        }
        let dist = x
            .iter()
            .zip(&self.center)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        Ok(self
            .breakpoints
            .iter()
            .position(|&rho| dist < rho)
            .map_or(0.0, |j| self.values[j]))
    }

    /// Distinct positive values in increasing order.
    pub fn distinct_levels(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.values.iter().copied().filter(|&x| x > 0.0).collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }

    /// Pointwise `self ≤ other`, decided on the common refinement of both annulus
    /// structures. Both functions must share center and dimension.
    pub fn dominated_by(&self, other: &SimpleRadialFunction) -> Result<bool> {
        if self.center != other.center {
            return Err(Error::UnsupportedGeometry(
                "pointwise comparison needs a common center".into(),
            ));
        }
        let cuts = grid::merge_sorted(&self.breakpoints, &other.breakpoints);
        let radial_value = |f: &SimpleRadialFunction, r: f64| {
            f.breakpoints
                .iter()
                .position(|&rho| r < rho)
                .map_or(0.0, |j| f.values[j])
        };
        let mut inner = 0.0;
        for &outer in &cuts {
            // any radius inside the piece [inner, outer) identifies it
            let probe = inner + 0.5 * (outer - inner);
            if radial_value(self, probe) > radial_value(other, probe) {
                return Ok(false);
            }
            inner = outer;
        }
        Ok(true)
    }

    fn check_aligned(&self, ball: &Ball) -> Result<()> {
        if self.center != ball.center() {
            return Err(Error::UnsupportedGeometry(format!(
                "ball center {:?} differs from function center {:?}; only concentric \
                 configurations are computed",
                ball.center(),
                self.center
            )));
        }
        Ok(())
    }

    /// `|A_j ∩ B|` for every annulus `A_j`, exact for concentric `B`.
    pub fn shell_masses(&self, ball: &Ball) -> Result<Vec<f64>> {
        self.check_aligned(ball)?;
        let n = self.dimension() as i32;
        let v = unit_ball_volume(self.dimension());
        let r = ball.radius();
        let mut prev = 0.0f64;
        Ok(self
            .breakpoints
            .iter()
            .map(|&rho| {
                let inner = prev.min(r).powi(n);
                let outer = rho.min(r).powi(n);
                prev = rho;
                v * (outer - inner)
            })
            .collect())
    }
}

/// `(1/|B|) ∫_B Φ(f/b) dx`, exact for balls concentric with `f`.
pub fn mean_integral(
    f: &SimpleRadialFunction,
    phi: &YoungFunction,
    b: f64,
    ball: &Ball,
) -> Result<f64> {
    positive_param("b", b)?;
    let masses = f.shell_masses(ball)?;
    let total = f
        .values()
        .iter()
        .zip(&masses)
        .filter(|(&c, &m)| c > 0.0 && m > 0.0)
        .fold(0.0, |acc, (&c, &m)| acc + phi.value(c / b) * m);
    Ok(total / ball.measure())
}

/// `|{x ∈ B : f(x) > s}|`, exact for balls concentric with `f`.
pub fn distribution(f: &SimpleRadialFunction, ball: &Ball, s: f64) -> Result<f64> {
    if !(s.is_finite() && s >= 0.0) {
        return Err(Error::Domain(format!(
            "level must be finite and >= 0, got {s}"
        )));
    }
    let masses = f.shell_masses(ball)?;
    Ok(f.values()
        .iter()
        .zip(&masses)
        .filter(|(&c, _)| c > s)
        .fold(0.0, |acc, (_, &m)| acc + m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn origin_ball(n: usize, r: f64) -> Ball {
        Ball::centered_at_origin(n, r).unwrap()
    }

    #[test]
    fn volumes() {
        assert_eq!(ball_volume(1, 1.0).unwrap(), 2.0);
        assert!((ball_volume(2, 1.0).unwrap() - PI).abs() < 1e-15);
        assert!((ball_volume(3, 2.0).unwrap() - 32.0 * PI / 3.0).abs() < 1e-13);
        // v_4 = π²/2, v_5 = 8π²/15
        assert!((unit_ball_volume(4) - PI * PI / 2.0).abs() < 1e-14);
        assert!((unit_ball_volume(5) - 8.0 * PI * PI / 15.0).abs() < 1e-14);
        assert!(ball_volume(0, 1.0).is_err());
        assert!(ball_volume(2, 0.0).is_err());
    }

    #[test]
    fn intersections() {
        assert_eq!(concentric_intersection(1, 2.0, 1.0).unwrap(), 2.0);
        assert!((concentric_intersection(2, 1.0, 3.0).unwrap() - PI).abs() < 1e-15);
        assert_eq!(concentric_intersection(1, 0.5, 0.5).unwrap(), 1.0);
    }

    #[test]
    fn mean_integral_examples() {
        let chi = SimpleRadialFunction::characteristic(vec![0.0], 1.0).unwrap();
        let y2 = YoungFunction::power(2.0).unwrap();
        assert_eq!(
            mean_integral(&chi, &y2, 1.0, &origin_ball(1, 1.0)).unwrap(),
            1.0
        );
        assert_eq!(
            mean_integral(&chi, &y2, 2.0, &origin_ball(1, 2.0)).unwrap(),
            0.125
        );
        let zero = SimpleRadialFunction::new(vec![0.0], vec![1.0], vec![0.0]).unwrap();
        let e = YoungFunction::exp_minus_one();
        assert_eq!(
            mean_integral(&zero, &e, 0.3, &origin_ball(1, 5.0)).unwrap(),
            0.0
        );
    }

    #[test]
    fn distribution_examples() {
        let f = SimpleRadialFunction::new(vec![0.0], vec![0.5], vec![2.0]).unwrap();
        let b = origin_ball(1, 0.5);
        assert_eq!(distribution(&f, &b, 1.0).unwrap(), 1.0);
        assert_eq!(distribution(&f, &b, 2.0).unwrap(), 0.0);
        let g = SimpleRadialFunction::new(vec![0.0], vec![1.0, 2.0], vec![3.0, 1.0]).unwrap();
        assert_eq!(distribution(&g, &origin_ball(1, 2.0), 1.0).unwrap(), 2.0);
    }

    #[test]
    fn misaligned_ball_is_rejected() {
        let chi = SimpleRadialFunction::characteristic(vec![0.0, 0.0], 1.0).unwrap();
        let off = Ball::new(vec![0.5, 0.0], 1.0).unwrap();
        let y = YoungFunction::power(1.0).unwrap();
        assert!(matches!(
            mean_integral(&chi, &y, 1.0, &off),
            Err(Error::UnsupportedGeometry(_))
        ));
        assert!(matches!(
            distribution(&chi, &off, 0.0),
            Err(Error::UnsupportedGeometry(_))
        ));
    }

    #[test]
    fn construction_rules() {
        assert!(SimpleRadialFunction::new(vec![0.0], vec![1.0, 1.0], vec![1.0, 2.0]).is_err());
        assert!(SimpleRadialFunction::new(vec![0.0], vec![0.0], vec![1.0]).is_err());
        assert!(SimpleRadialFunction::new(vec![0.0], vec![1.0], vec![-1.0]).is_err());
        assert!(SimpleRadialFunction::new(vec![], vec![1.0], vec![1.0]).is_err());
        assert!(SimpleRadialFunction::new(vec![0.0], vec![1.0], vec![]).is_err());
    }

    #[test]
    fn point_values_use_half_open_annuli() {
        let g = SimpleRadialFunction::new(vec![0.0, 0.0], vec![1.0, 2.0], vec![3.0, 1.0]).unwrap();
        assert_eq!(g.value_at(&[0.0, 0.0]).unwrap(), 3.0);
        assert_eq!(g.value_at(&[1.0, 0.0]).unwrap(), 1.0);
        assert_eq!(g.value_at(&[0.0, 2.0]).unwrap(), 0.0);
    }

    #[test]
    fn indicator_detection() {
        let f =
            SimpleRadialFunction::new(vec![0.0], vec![1.0, 2.0, 3.0], vec![4.0, 4.0, 0.0]).unwrap();
        assert_eq!(f.as_scaled_indicator(), Some((4.0, 2.0)));
        let g = SimpleRadialFunction::new(vec![0.0], vec![1.0, 2.0], vec![0.0, 4.0]).unwrap();
        assert_eq!(g.as_scaled_indicator(), None);
    }

    #[test]
    fn domination_on_refinement() {
        let f = SimpleRadialFunction::new(vec![0.0], vec![1.0, 2.0], vec![2.0, 1.0]).unwrap();
        let g = SimpleRadialFunction::new(vec![0.0], vec![1.5, 3.0], vec![2.0, 1.0]).unwrap();
        assert!(f.dominated_by(&g).unwrap());
        assert!(!g.dominated_by(&f).unwrap());
    }
}
