//! Local and global norms of the four Orlicz-Morrey variants and the Guliyev variant.
//!
//! Every per-ball quantity is a gauge `inf{b > 0 : F(b) ≤ 1}` with `F` nonincreasing in
//! `b`. Balls are concentric with the test function; the global supremum is taken over
//! a caller-supplied radius grid, so a grid value is a lower bound of the true norm.
//! For characteristic functions of balls the closed forms below are exact and are
//! returned once the grid sweep reproduces them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bisect;
use crate::error::{Error, Result};
use crate::geometry::{unit_ball_volume, Ball, SimpleRadialFunction};
use crate::grid;
use crate::growth::{
    validate_g1, validate_g2, validate_gtheta, ClassMembershipReport, GrowthClass, GrowthFunction,
};
use crate::young::YoungFunction;

/// Relative agreement required between a grid sweep and a closed form before the
/// closed form is reported as exact.
pub const CLOSED_FORM_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `L_{φ,Φ}`: weight `φ(|B|)/|B|` inside the modular.
    Nakai,
    /// `M_{ψ,Ψ}`: `ψ(|B|)` times the mean Luxemburg norm.
    Sst,
    WeakNakai,
    WeakSst,
    /// `M_{θ,Θ}`: `Θ⁻¹(1/|B|)/θ(|B|^{1/n})` times the un-normalized Luxemburg norm.
    Guliyev,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Nakai,
        Variant::Sst,
        Variant::WeakNakai,
        Variant::WeakSst,
        Variant::Guliyev,
    ];

    pub fn growth_class(self) -> GrowthClass {
        match self {
            Variant::Nakai | Variant::WeakNakai => GrowthClass::G1,
            Variant::Sst | Variant::WeakSst => GrowthClass::G2,
            Variant::Guliyev => GrowthClass::GTheta,
        }
    }

    pub fn is_weak(self) -> bool {
        matches!(self, Variant::WeakNakai | Variant::WeakSst)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Nakai => "nakai",
            Variant::Sst => "sst",
            Variant::WeakNakai => "weak-nakai",
            Variant::WeakSst => "weak-sst",
            Variant::Guliyev => "guliyev",
        }
    }

    pub fn parse(name: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Class check of `growth` against the class its variant requires, on default grids.
pub fn validate_for(
    variant: Variant,
    young: &YoungFunction,
    growth: &GrowthFunction,
    dimension: usize,
) -> Result<ClassMembershipReport> {
    let t = grid::default_t_grid();
    match variant.growth_class() {
        GrowthClass::G1 => validate_g1(growth, &t),
        GrowthClass::G2 => validate_g2(growth, young, dimension, &t, &grid::default_s_grid()),
        GrowthClass::GTheta => validate_gtheta(growth, young, dimension, &t, 1.0),
    }
}

/// A space: variant, Young function, growth function and dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpaceSpec {
    variant: Variant,
    young: YoungFunction,
    growth: GrowthFunction,
    dimension: usize,
    membership: ClassMembershipReport,
    overridden: bool,
}

impl SpaceSpec {
    /// Builds the space after checking that the growth function lies in its class.
    pub fn new(
        variant: Variant,
        young: YoungFunction,
        growth: GrowthFunction,
        dimension: usize,
    ) -> Result<Self> {
        let space = SpaceSpec::with_override(variant, young, growth, dimension)?;
        if !space.membership.member {
            return Err(Error::ClassMembership {
                class: space.membership.class_id.to_string(),
                detail: format!(
                    "{} with {} in dimension {}{}",
                    space.growth,
                    space.young,
                    dimension,
                    space
                        .membership
                        .violation
                        .map(|v| format!(": {v}"))
                        .unwrap_or_default()
                ),
            });
        }
        Ok(SpaceSpec {
            overridden: false,
            ..space
        })
    }

    /// Builds the space without enforcing class membership; the report is kept.
    pub fn with_override(
        variant: Variant,
        young: YoungFunction,
        growth: GrowthFunction,
        dimension: usize,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        let membership = validate_for(variant, &young, &growth, dimension)?;
        Ok(SpaceSpec {
            variant,
            young,
            growth,
            dimension,
            membership,
            overridden: true,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn young(&self) -> &YoungFunction {
        &self.young
    }

    pub fn growth(&self) -> &GrowthFunction {
        &self.growth
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn membership(&self) -> &ClassMembershipReport {
        &self.membership
    }

    /// True when built through [`SpaceSpec::with_override`].
    pub fn is_overridden(&self) -> bool {
        self.overridden
    }

    /// Same space with a different variant (class membership rechecked).
    pub fn as_variant(&self, variant: Variant) -> Result<SpaceSpec> {
        let build = if self.overridden {
            SpaceSpec::with_override
        } else {
            SpaceSpec::new
        };
        build(
            variant,
            self.young.clone(),
            self.growth.clone(),
            self.dimension,
        )
    }
}

/// How a per-ball gauge is solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Closed forms per level where they exist, bisection otherwise.
    #[default]
    Analytic,
    /// Bracketed bisection on `b` for every gauge.
    Bisection,
}

/// Nonzero levels of `f` inside a ball, with their masses.
struct Levels {
    values: Vec<f64>,
    masses: Vec<f64>,
}

impl Levels {
    fn new(f: &SimpleRadialFunction, ball: &Ball) -> Result<Self> {
        let masses = f.shell_masses(ball)?;
        let (values, masses) = f
            .values()
            .iter()
            .zip(masses)
            .filter(|(&c, m)| c > 0.0 && *m > 0.0)
            .map(|(&c, m)| (c, m))
            .unzip();
        Ok(Levels { values, masses })
    }

    fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    fn single_level(&self) -> Option<(f64, f64)> {
        let c = *self.values.first()?;
        self.values
            .iter()
            .all(|&v| v == c)
            .then(|| (c, self.masses.iter().sum()))
    }

    /// Distinct values `v_j` with tail masses `|{f ≥ v_j} ∩ B|`.
    fn tails(&self) -> Vec<(f64, f64)> {
        let mut levels: Vec<f64> = self.values.clone();
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        levels
            .into_iter()
            .map(|v| {
                let mu = self
                    .values
                    .iter()
                    .zip(&self.masses)
                    .filter(|(&c, _)| c >= v)
                    .map(|(_, &m)| m)
                    .sum();
                (v, mu)
            })
            .collect()
    }
}

/// `inf{b : w Σ_j Φ(c_j/b) m_j ≤ 1}`.
fn strong_gauge(
    young: &YoungFunction,
    weight: f64,
    levels: &Levels,
    method: Method,
) -> Result<f64> {
    if levels.is_empty() {
        return Ok(0.0);
    }
    if method == Method::Analytic {
        if let Some((c, mass)) = levels.single_level() {
            return Ok(c / young.inverse(1.0 / (weight * mass))?);
        }
    }
    let modular = |b: f64| {
        weight
            * levels
                .values
                .iter()
                .zip(&levels.masses)
                .map(|(&c, &m)| young.value(c / b) * m)
                .sum::<f64>()
    };
    bisect::threshold(|b| modular(b) <= 1.0, levels.max_value())
}

/// `inf{b : sup_t w Φ(t) |{f/b > t} ∩ B| ≤ 1}`.
///
/// On `[v_{j-1}/b, v_j/b)` the level set has the constant measure `μ_j`, and `Φ` is
/// continuous, so the supremum over `t` is `max_j w Φ(v_j/b) μ_j`. Each term is below 1
/// exactly when `b ≥ v_j / Φ⁻¹(1/(w μ_j))`.
fn weak_gauge(young: &YoungFunction, weight: f64, levels: &Levels, method: Method) -> Result<f64> {
    if levels.is_empty() {
        return Ok(0.0);
    }
    let tails = levels.tails();
    match method {
        Method::Analytic => tails.iter().try_fold(0.0f64, |acc, &(v, mu)| {
            Ok(acc.max(v / young.inverse(1.0 / (weight * mu))?))
        }),
        Method::Bisection => {
            let level_sup = |b: f64| {
                tails
                    .iter()
                    .map(|&(v, mu)| weight * young.value(v / b) * mu)
                    .fold(0.0, f64::max)
            };
            bisect::threshold(|b| level_sup(b) <= 1.0, levels.max_value())
        }
    }
}

/// `‖f‖_{(Ψ,B)} = inf{b : (1/|B|) ∫_B Ψ(f/b) ≤ 1}`.
pub fn luxemburg_local(f: &SimpleRadialFunction, psi: &YoungFunction, ball: &Ball) -> Result<f64> {
    luxemburg_local_with(f, psi, ball, Method::Analytic)
}

pub fn luxemburg_local_with(
    f: &SimpleRadialFunction,
    psi: &YoungFunction,
    ball: &Ball,
    method: Method,
) -> Result<f64> {
    strong_gauge(psi, 1.0 / ball.measure(), &Levels::new(f, ball)?, method)
}

/// `‖f‖_{(φ,Φ,B)} = inf{b : (φ(|B|)/|B|) ∫_B Φ(f/b) ≤ 1}`.
pub fn nakai_local(
    f: &SimpleRadialFunction,
    phi: &GrowthFunction,
    young: &YoungFunction,
    ball: &Ball,
) -> Result<f64> {
    nakai_local_with(f, phi, young, ball, Method::Analytic)
}

pub fn nakai_local_with(
    f: &SimpleRadialFunction,
    phi: &GrowthFunction,
    young: &YoungFunction,
    ball: &Ball,
    method: Method,
) -> Result<f64> {
    let measure = ball.measure();
    let weight = phi.eval(measure)? / measure;
    strong_gauge(young, weight, &Levels::new(f, ball)?, method)
}

/// `‖f‖_{L_Θ(B)} = inf{b : ∫_B Θ(f/b) ≤ 1}` (no averaging).
pub fn orlicz_ball_norm(
    f: &SimpleRadialFunction,
    theta: &YoungFunction,
    ball: &Ball,
) -> Result<f64> {
    orlicz_ball_norm_with(f, theta, ball, Method::Analytic)
}

pub fn orlicz_ball_norm_with(
    f: &SimpleRadialFunction,
    theta: &YoungFunction,
    ball: &Ball,
    method: Method,
) -> Result<f64> {
    strong_gauge(theta, 1.0, &Levels::new(f, ball)?, method)
}

/// Weak local gauge. Nakai-type spaces weight the level-set functional by
/// `φ(|B|)/|B|`; SST-type spaces by `1/|B|`, leaving the `ψ(|B|)` factor to the
/// global assembly.
pub fn weak_local(f: &SimpleRadialFunction, space: &SpaceSpec, ball: &Ball) -> Result<f64> {
    weak_local_with(f, space, ball, Method::Analytic)
}

pub fn weak_local_with(
    f: &SimpleRadialFunction,
    space: &SpaceSpec,
    ball: &Ball,
    method: Method,
) -> Result<f64> {
    let measure = ball.measure();
    let weight = match space.variant {
        Variant::Nakai | Variant::WeakNakai => space.growth.eval(measure)? / measure,
        Variant::Sst | Variant::WeakSst => 1.0 / measure,
        Variant::Guliyev => {
            return Err(Error::Precondition(
                "the Guliyev variant has no weak counterpart".into(),
            ))
        }
    };
    weak_gauge(&space.young, weight, &Levels::new(f, ball)?, method)
}

/// `Θ⁻¹(1/|B|) / θ(|B|^{1/n}) · ‖f‖_{L_Θ(B)}`.
pub fn guliyev_local(
    f: &SimpleRadialFunction,
    theta: &GrowthFunction,
    young: &YoungFunction,
    ball: &Ball,
    method: Method,
) -> Result<f64> {
    let measure = ball.measure();
    let n = ball.dimension() as f64;
    let factor = young.inverse(1.0 / measure)? / theta.eval(measure.powf(n.recip()))?;
    let norm = orlicz_ball_norm_with(f, young, ball, method)?;
    Ok(if norm == 0.0 { 0.0 } else { factor * norm })
}

/// The quantity whose supremum over balls is the global norm of `space`.
pub fn ball_quantity(
    f: &SimpleRadialFunction,
    space: &SpaceSpec,
    ball: &Ball,
    method: Method,
) -> Result<f64> {
    let growth_at = |b: &Ball| space.growth.eval(b.measure());
    Ok(match space.variant {
        Variant::Nakai => nakai_local_with(f, &space.growth, &space.young, ball, method)?,
        Variant::Sst => growth_at(ball)? * luxemburg_local_with(f, &space.young, ball, method)?,
        Variant::WeakNakai => weak_local_with(f, space, ball, method)?,
        Variant::WeakSst => growth_at(ball)? * weak_local_with(f, space, ball, method)?,
        Variant::Guliyev => guliyev_local(f, &space.growth, &space.young, ball, method)?,
    })
}

/// Result of a global sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormResult {
    /// Reported norm: the closed form when `exact`, else the grid maximum.
    pub value: f64,
    /// True when a characteristic-function closed form applies and the grid agrees.
    pub exact: bool,
    /// Maximum of the per-ball quantity over the radius grid.
    pub grid_value: f64,
    /// Radii of the balls `B(center, r)` that were swept.
    pub radii: Vec<f64>,
    /// Per-ball quantity at each radius.
    pub local_values: Vec<f64>,
    pub attained_at: Option<f64>,
}

/// Default sweep for `f`: radii `2^k`, `k = -6..=6`, plus the breakpoints of `f`.
pub fn radius_grid_for(f: &SimpleRadialFunction) -> Vec<f64> {
    grid::merge_sorted(&grid::default_radii(), f.breakpoints())
}

fn check_radii(radii: &[f64]) -> Result<()> {
    if radii.is_empty() {
        return Err(Error::Domain("radius grid is empty".into()));
    }
    if radii[0] <= 0.0
        || !grid::is_strictly_increasing(radii)
        || radii.iter().any(|r| !r.is_finite())
    {
        return Err(Error::Domain(
            "radius grid must be positive, finite and strictly increasing".into(),
        ));
    }
    Ok(())
}

fn sweep(
    f: &SimpleRadialFunction,
    radii: &[f64],
    mut quantity: impl FnMut(&Ball) -> Result<f64>,
) -> Result<NormResult> {
    check_radii(radii)?;
    let mut local_values = Vec::with_capacity(radii.len());
    let mut best: Option<(f64, f64)> = None;
    for &r in radii {
        let ball = Ball::new(f.center().to_vec(), r)?;
        let q = quantity(&ball)?;
        // strict comparison keeps the first radius on ties
        if best.is_none_or(|(b, _)| q > b) {
            best = Some((q, r));
        }
        local_values.push(q);
    }
    let (grid_value, attained) = best.expect("radius grid is nonempty");
    Ok(NormResult {
        value: grid_value,
        exact: false,
        grid_value,
        radii: radii.to_vec(),
        local_values,
        attained_at: Some(attained),
    })
}

fn promote_closed_form(result: &mut NormResult, closed: f64) {
    let tol = CLOSED_FORM_RTOL * closed.abs();
    if (result.grid_value - closed).abs() <= tol {
        result.value = closed;
        result.exact = true;
    }
}

/// Global norm over balls concentric with `f`, with radii from `radii`.
pub fn global_norm(
    f: &SimpleRadialFunction,
    space: &SpaceSpec,
    radii: &[f64],
) -> Result<NormResult> {
    global_norm_with(f, space, radii, Method::Analytic)
}

pub fn global_norm_with(
    f: &SimpleRadialFunction,
    space: &SpaceSpec,
    radii: &[f64],
    method: Method,
) -> Result<NormResult> {
    if f.dimension() != space.dimension {
        return Err(Error::Domain(format!(
            "function lives in R^{} but the space in R^{}",
            f.dimension(),
            space.dimension
        )));
    }
    let mut result = sweep(f, radii, |ball| ball_quantity(f, space, ball, method))?;
    if let Some((c, r0)) = f.as_scaled_indicator() {
        promote_closed_form(&mut result, c * char_norm_closed(space, r0)?);
    }
    Ok(result)
}

/// Sweep of the Guliyev quantity for explicit `θ`, `Θ`.
pub fn guliyev_global(
    f: &SimpleRadialFunction,
    theta: &GrowthFunction,
    young: &YoungFunction,
    radii: &[f64],
) -> Result<NormResult> {
    let mut result = sweep(f, radii, |ball| {
        guliyev_local(f, theta, young, ball, Method::Analytic)
    })?;
    if let Some((c, r0)) = f.as_scaled_indicator() {
        let measure = unit_ball_volume(f.dimension()) * r0.powi(f.dimension() as i32);
        let closed = c / theta.eval(measure.powf((f.dimension() as f64).recip()))?;
        promote_closed_form(&mut result, closed);
    }
    Ok(result)
}

/// Closed-form global norm of `χ_{B(a, r0)}`.
///
/// * Nakai, weak Nakai: `1 / Φ⁻¹(1 / φ(|B₀|))`
/// * SST, weak SST: `ψ(|B₀|) / Ψ⁻¹(1)`
/// * Guliyev: `1 / θ(|B₀|^{1/n})`
pub fn char_norm_closed(space: &SpaceSpec, r0: f64) -> Result<f64> {
    let n = space.dimension;
    let measure = crate::geometry::ball_volume(n, r0)?;
    match space.variant {
        Variant::Nakai | Variant::WeakNakai => {
            Ok(1.0 / space.young.inverse(1.0 / space.growth.eval(measure)?)?)
        }
        Variant::Sst | Variant::WeakSst => {
            Ok(space.growth.eval(measure)? / space.young.inverse(1.0)?)
        }
        Variant::Guliyev => Ok(1.0 / space.growth.eval(measure.powf((n as f64).recip()))?),
    }
}

/// Closed-form per-ball value for `χ_{B(a, r0)}` on the concentric ball `B(a, r)`.
///
/// * Nakai, weak Nakai: `1 / Φ⁻¹(|B| / (|B ∩ B₀| φ(|B|)))`
/// * SST, weak SST (without the `ψ` factor): `1 / Ψ⁻¹(|B| / |B ∩ B₀|)`
/// * Guliyev (un-normalized Luxemburg norm only): `1 / Θ⁻¹(1 / |B ∩ B₀|)`
pub fn char_local_closed(space: &SpaceSpec, r: f64, r0: f64) -> Result<f64> {
    let n = space.dimension;
    let measure = crate::geometry::ball_volume(n, r)?;
    let overlap = crate::geometry::concentric_intersection(n, r, r0)?;
    let arg = match space.variant {
        Variant::Nakai | Variant::WeakNakai => measure / (overlap * space.growth.eval(measure)?),
        Variant::Sst | Variant::WeakSst => measure / overlap,
        Variant::Guliyev => 1.0 / overlap,
    };
    Ok(1.0 / space.young.inverse(arg)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn y(p: f64) -> YoungFunction {
        YoungFunction::power(p).unwrap()
    }

    fn g(a: f64) -> GrowthFunction {
        GrowthFunction::power(a).unwrap()
    }

    fn ball(r: f64) -> Ball {
        Ball::centered_at_origin(1, r).unwrap()
    }

    fn chi(r0: f64) -> SimpleRadialFunction {
        SimpleRadialFunction::characteristic(vec![0.0], r0).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn luxemburg_examples() {
        let f = chi(1.0).scaled(3.0).unwrap();
        for m in [Method::Analytic, Method::Bisection] {
            assert!(close(
                luxemburg_local_with(&f, &y(2.0), &ball(1.0), m).unwrap(),
                3.0
            ));
            let v = luxemburg_local_with(&chi(1.0), &y(2.0), &ball(2.0), m).unwrap();
            assert!(close(v, 1.0 / SQRT_2));
        }
        let zero = chi(1.0).scaled(0.0).unwrap();
        assert_eq!(luxemburg_local(&zero, &y(2.0), &ball(1.0)).unwrap(), 0.0);
    }

    #[test]
    fn nakai_examples() {
        // (φ(|B|)/|B|) ∫ (χ/b)^2 = 2/b^2 on both balls, so the gauge is √2
        for r in [1.0, 2.0] {
            for m in [Method::Analytic, Method::Bisection] {
                let v = nakai_local_with(&chi(1.0), &g(1.0), &y(2.0), &ball(r), m).unwrap();
                assert!(close(v, SQRT_2), "r={r}: {v}");
            }
        }
        let f = SimpleRadialFunction::new(vec![0.0], vec![0.2, 0.4], vec![3.0, 1.0]).unwrap();
        let unit = ball(0.5);
        assert!(close(
            nakai_local(&f, &g(1.0), &y(2.0), &unit).unwrap(),
            luxemburg_local(&f, &y(2.0), &unit).unwrap()
        ));
    }

    #[test]
    fn weak_examples() {
        let wn = SpaceSpec::new(Variant::WeakNakai, y(2.0), g(1.0), 1).unwrap();
        let f = chi(0.5).scaled(2.0).unwrap();
        for m in [Method::Analytic, Method::Bisection] {
            assert!(close(weak_local_with(&f, &wn, &ball(0.5), m).unwrap(), 2.0));
        }
        let ws = SpaceSpec::new(Variant::WeakSst, y(2.0), g(0.5), 1).unwrap();
        for (r, r0) in [(0.5, 2.0), (2.0, 0.5), (1.0, 1.0)] {
            let f = chi(r0);
            let b = ball(r);
            assert!(close(
                weak_local(&f, &wn, &b).unwrap(),
                char_local_closed(&wn, r, r0).unwrap()
            ));
            assert!(close(
                weak_local(&f, &ws, &b).unwrap(),
                char_local_closed(&ws, r, r0).unwrap()
            ));
        }
    }

    #[test]
    fn global_closed_forms() {
        let sst = SpaceSpec::new(Variant::Sst, y(2.0), g(0.5), 1).unwrap();
        let f = chi(0.5);
        let res = global_norm(&f, &sst, &radius_grid_for(&f)).unwrap();
        assert!(res.exact);
        assert_eq!(res.value, 1.0);
        assert_eq!(res.attained_at, Some(0.5));

        let wn = SpaceSpec::new(Variant::WeakNakai, y(2.0), g(1.0), 1).unwrap();
        let f = chi(1.0);
        let res = global_norm(&f, &wn, &radius_grid_for(&f)).unwrap();
        assert!(res.exact);
        assert!(close(res.value, SQRT_2));
        assert!(close(char_norm_closed(&wn, 1.0).unwrap(), SQRT_2));
        let nk = wn.as_variant(Variant::Nakai).unwrap();
        assert_eq!(
            char_norm_closed(&nk, 1.0).unwrap(),
            char_norm_closed(&wn, 1.0).unwrap()
        );
    }

    #[test]
    fn guliyev_examples() {
        let theta = GrowthFunction::inv_power(0.5).unwrap();
        let f = chi(1.0);
        let res = guliyev_global(&f, &theta, &y(2.0), &radius_grid_for(&f)).unwrap();
        assert!(close(res.grid_value, SQRT_2));
        assert!(res.exact);
        let zero = chi(1.0).scaled(0.0).unwrap();
        let res = guliyev_global(&zero, &theta, &y(2.0), &[0.5, 1.0]).unwrap();
        assert_eq!(res.value, 0.0);
        let one = GrowthFunction::constant(1.0).unwrap();
        let res = guliyev_global(&f, &one, &y(2.0), &[1.0]).unwrap();
        assert!(close(res.value, 1.0));
        let space = SpaceSpec::new(Variant::Guliyev, y(2.0), theta, 1).unwrap();
        assert!(close(char_norm_closed(&space, 1.0).unwrap(), SQRT_2));
    }

    #[test]
    fn class_enforced_unless_overridden() {
        let err = SpaceSpec::new(Variant::Nakai, y(2.0), g(2.0), 1).unwrap_err();
        assert!(matches!(err, Error::ClassMembership { .. }));
        let s = SpaceSpec::with_override(Variant::Nakai, y(2.0), g(2.0), 1).unwrap();
        assert!(!s.membership().member);
        assert!(s.is_overridden());
    }

    #[test]
    fn empty_grid_is_rejected() {
        let sst = SpaceSpec::new(Variant::Sst, y(2.0), g(0.5), 1).unwrap();
        assert!(matches!(
            global_norm(&chi(1.0), &sst, &[]),
            Err(Error::Domain(_))
        ));
        assert!(global_norm(&chi(1.0), &sst, &[2.0, 1.0]).is_err());
    }

    #[test]
    fn guliyev_has_no_weak_form() {
        let s = SpaceSpec::new(
            Variant::Guliyev,
            y(2.0),
            GrowthFunction::inv_power(0.5).unwrap(),
            1,
        )
        .unwrap();
        assert!(weak_local(&chi(1.0), &s, &ball(1.0)).is_err());
    }
}
