//! Growth functions `φ`, `ψ`, `θ`, their admissibility classes G₁, G₂, G_Θ and the
//! `⪯` / `≈` orders.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{positive_param, Error, Result};
use crate::grid;
use crate::relation::{certify, RelationReport};
use crate::young::YoungFunction;

/// Relative slack used by every monotonicity test in this module.
pub const MONOTONE_RTOL: f64 = 1e-12;

/// Declarative form of a growth function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GrowthSpec {
    /// `t^a`
    Power { a: f64 },
    /// `min(t^a, 1)`
    PowerCapped { a: f64 },
    /// `t^a (1 + ln(1 + t))`
    PowerLog { a: f64 },
    /// `c`
    Constant { c: f64 },
    /// `t^(-a)`, the decreasing member used for G_Θ.
    InvPower { a: f64 },
    /// `k · inner(t)`
    Scale { k: f64, inner: Box<GrowthSpec> },
}

impl GrowthSpec {
    fn validate(&self) -> Result<()> {
        match self {
            GrowthSpec::Power { a }
            | GrowthSpec::PowerCapped { a }
            | GrowthSpec::PowerLog { a }
            | GrowthSpec::InvPower { a } => positive_param("a", *a).map(drop),
            GrowthSpec::Constant { c } => positive_param("c", *c).map(drop),
            GrowthSpec::Scale { k, inner } => {
                positive_param("k", *k)?;
                inner.validate()
            }
        }
    }
}

/// A validated, strictly positive growth function on `(0, ∞)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GrowthSpec", into = "GrowthSpec")]
pub struct GrowthFunction {
    spec: GrowthSpec,
}

impl TryFrom<GrowthSpec> for GrowthFunction {
    type Error = Error;

    fn try_from(spec: GrowthSpec) -> Result<Self> {
        spec.validate()?;
        Ok(GrowthFunction { spec })
    }
}

impl From<GrowthFunction> for GrowthSpec {
    fn from(g: GrowthFunction) -> Self {
        g.spec
    }
}

impl GrowthFunction {
    pub fn power(a: f64) -> Result<Self> {
        GrowthSpec::Power { a }.try_into()
    }

    pub fn power_capped(a: f64) -> Result<Self> {
        GrowthSpec::PowerCapped { a }.try_into()
    }

    pub fn power_log(a: f64) -> Result<Self> {
        GrowthSpec::PowerLog { a }.try_into()
    }

    pub fn constant(c: f64) -> Result<Self> {
        GrowthSpec::Constant { c }.try_into()
    }

    pub fn inv_power(a: f64) -> Result<Self> {
        GrowthSpec::InvPower { a }.try_into()
    }

    pub fn scale(k: f64, inner: GrowthFunction) -> Result<Self> {
        positive_param("k", k)?;
        Ok(GrowthFunction {
            spec: GrowthSpec::Scale {
                k,
                inner: Box::new(inner.spec),
            },
        })
    }

    pub fn spec(&self) -> &GrowthSpec {
        &self.spec
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::Domain(format!(
                "growth functions are evaluated on (0, ∞), got {t}"
            )));
        }
        Ok(self.value(t))
    }

    pub(crate) fn value(&self, t: f64) -> f64 {
        value_of(&self.spec, t)
    }
}

fn value_of(spec: &GrowthSpec, t: f64) -> f64 {
    match spec {
        GrowthSpec::Power { a } => t.powf(*a),
        GrowthSpec::PowerCapped { a } => t.powf(*a).min(1.0),
        GrowthSpec::PowerLog { a } => t.powf(*a) * (1.0 + t.ln_1p()),
        GrowthSpec::Constant { c } => *c,
        GrowthSpec::InvPower { a } => t.powf(-a),
        GrowthSpec::Scale { k, inner } => k * value_of(inner, t),
    }
}

impl fmt::Display for GrowthFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_spec(&self.spec, f)
    }
}

fn fmt_spec(spec: &GrowthSpec, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match spec {
        GrowthSpec::Power { a } => write!(f, "power(a={a})"),
        GrowthSpec::PowerCapped { a } => write!(f, "power-capped(a={a})"),
        GrowthSpec::PowerLog { a } => write!(f, "power-log(a={a})"),
        GrowthSpec::Constant { c } => write!(f, "constant(c={c})"),
        GrowthSpec::InvPower { a } => write!(f, "inv-power(a={a})"),
        GrowthSpec::Scale { k, inner } => {
            write!(f, "scale(k={k}, ")?;
            fmt_spec(inner, f)?;
            write!(f, ")")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GrowthClass {
    G1,
    G2,
    GTheta,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthClass::G1 => "G1",
            GrowthClass::G2 => "G2",
            GrowthClass::GTheta => "GTheta",
        })
    }
}

/// The monotonicity requirement that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassQuantity {
    /// `g(r1) ≤ g(r2)`
    Nondecreasing,
    /// `g(r2)/r2 ≤ g(r1)/r1`
    RatioNonincreasing,
    /// `ψ((r2+s)^n)/Ψ⁻¹(((r2+s)/s)^n) ≤ ψ((r1+s)^n)/Ψ⁻¹(((r1+s)/s)^n)`
    InverseRatioNonincreasing,
    /// `θ(r2) ≤ θ(r1)`
    Decreasing,
    /// `Θ⁻¹(r2^-n)/θ(r2) ≤ K Θ⁻¹(r1^-n)/θ(r1)`
    AlmostDecreasing,
}

/// A failed requirement `lhs ≤ rhs` observed at the grid pair `r1 < r2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassViolation {
    pub quantity: ClassQuantity,
    pub r1: f64,
    pub r2: f64,
    /// The `s` parameter of the G₂ ratio.
    pub s: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

impl fmt::Display for ClassViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} fails at r1={:e}, r2={:e}",
            self.quantity, self.r1, self.r2
        )?;
        if let Some(s) = self.s {
            write!(f, ", s={s:e}")?;
        }
        write!(f, " ({:e} > {:e})", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassMembershipReport {
    pub class_id: GrowthClass,
    pub member: bool,
    pub violation: Option<ClassViolation>,
    pub partner_young: Option<YoungFunction>,
    pub dimension: Option<usize>,
    pub almost_const: Option<f64>,
}

impl ClassMembershipReport {
    fn pass(class_id: GrowthClass) -> Self {
        ClassMembershipReport {
            class_id,
            member: true,
            violation: None,
            partner_young: None,
            dimension: None,
            almost_const: None,
        }
    }

    fn with_violation(mut self, v: Option<ClassViolation>) -> Self {
        self.member = v.is_none();
        self.violation = v;
        self
    }

    /// Recomputes the two sides of the recorded violation from scratch.
    pub fn recompute_violation(&self, growth: &GrowthFunction) -> Option<Result<(f64, f64)>> {
        let v = self.violation?;
        Some(recompute(self, &v, growth))
    }
}

fn recompute(
    report: &ClassMembershipReport,
    v: &ClassViolation,
    g: &GrowthFunction,
) -> Result<(f64, f64)> {
    let n = report.dimension.unwrap_or(1);
    let young = || {
        report
            .partner_young
            .as_ref()
            .ok_or_else(|| Error::Precondition("report carries no Young function".into()))
    };
    Ok(match v.quantity {
        ClassQuantity::Nondecreasing => (g.eval(v.r1)?, g.eval(v.r2)?),
        ClassQuantity::RatioNonincreasing => (g.eval(v.r2)? / v.r2, g.eval(v.r1)? / v.r1),
        ClassQuantity::InverseRatioNonincreasing => {
            let s = v.s.unwrap_or(1.0);
            let y = young()?;
            (g2_ratio(g, y, n, v.r2, s)?, g2_ratio(g, y, n, v.r1, s)?)
        }
        ClassQuantity::Decreasing => (g.eval(v.r2)?, g.eval(v.r1)?),
        ClassQuantity::AlmostDecreasing => {
            let y = young()?;
            let k = report.almost_const.unwrap_or(1.0);
            (
                gtheta_ratio(g, y, n, v.r2)?,
                k * gtheta_ratio(g, y, n, v.r1)?,
            )
        }
    })
}

fn exceeds(lhs: f64, rhs: f64) -> bool {
    lhs > rhs + MONOTONE_RTOL * rhs.abs()
}

fn check_grid(grid: &[f64], min_len: usize) -> Result<()> {
    if grid.len() < min_len || !grid::is_strictly_increasing(grid) || grid[0] <= 0.0 {
        return Err(Error::Domain(format!(
            "grid must hold at least {min_len} positive, strictly increasing points"
        )));
    }
    Ok(())
}

fn nondecreasing_violation(g: &GrowthFunction, grid: &[f64]) -> Option<ClassViolation> {
    grid.windows(2).find_map(|w| {
        let (a, b) = (g.value(w[0]), g.value(w[1]));
        exceeds(a, b).then_some(ClassViolation {
            quantity: ClassQuantity::Nondecreasing,
            r1: w[0],
            r2: w[1],
            s: None,
            lhs: a,
            rhs: b,
        })
    })
}

/// G₁: `φ` nondecreasing and `φ(r)/r` nonincreasing, on consecutive grid pairs.
pub fn validate_g1(phi: &GrowthFunction, grid: &[f64]) -> Result<ClassMembershipReport> {
    check_grid(grid, 2)?;
    let violation = nondecreasing_violation(phi, grid).or_else(|| {
        grid.windows(2).find_map(|w| {
            let (a, b) = (phi.value(w[0]) / w[0], phi.value(w[1]) / w[1]);
            exceeds(b, a).then_some(ClassViolation {
                quantity: ClassQuantity::RatioNonincreasing,
                r1: w[0],
                r2: w[1],
                s: None,
                lhs: b,
                rhs: a,
            })
        })
    });
    Ok(ClassMembershipReport::pass(GrowthClass::G1).with_violation(violation))
}

/// `ψ((r+s)^n) / Ψ⁻¹(((r+s)/s)^n)`
pub fn g2_ratio(
    psi: &GrowthFunction,
    young: &YoungFunction,
    n: usize,
    r: f64,
    s: f64,
) -> Result<f64> {
    let n = n as i32;
    let num = psi.eval((r + s).powi(n))?;
    let den = young.inverse(((r + s) / s).powi(n))?;
    Ok(num / den)
}

/// G₂ relative to `Ψ` in dimension `n`: `ψ` nondecreasing on `r_grid`, and for every
/// `s` in `s_grid` the ratio [`g2_ratio`] nonincreasing in `r` on consecutive pairs.
pub fn validate_g2(
    psi: &GrowthFunction,
    young: &YoungFunction,
    n: usize,
    r_grid: &[f64],
    s_grid: &[f64],
) -> Result<ClassMembershipReport> {
    check_grid(r_grid, 2)?;
    if n == 0 || s_grid.is_empty() || s_grid.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
        return Err(Error::Domain(
            "G2 check needs n >= 1 and a nonempty positive s grid".into(),
        ));
    }
    let mut violation = nondecreasing_violation(psi, r_grid);
    'outer: for &s in s_grid {
        if violation.is_some() {
            break;
        }
        let mut prev = g2_ratio(psi, young, n, r_grid[0], s)?;
        for w in r_grid.windows(2) {
            let next = g2_ratio(psi, young, n, w[1], s)?;
            if exceeds(next, prev) {
                violation = Some(ClassViolation {
                    quantity: ClassQuantity::InverseRatioNonincreasing,
                    r1: w[0],
                    r2: w[1],
                    s: Some(s),
                    lhs: next,
                    rhs: prev,
                });
                break 'outer;
            }
            prev = next;
        }
    }
    let mut report = ClassMembershipReport::pass(GrowthClass::G2).with_violation(violation);
    report.partner_young = Some(young.clone());
    report.dimension = Some(n);
    Ok(report)
}

/// `Θ⁻¹(t^-n) / θ(t)`
pub fn gtheta_ratio(
    theta: &GrowthFunction,
    young: &YoungFunction,
    n: usize,
    t: f64,
) -> Result<f64> {
    Ok(young.inverse(t.powi(-(n as i32)))? / theta.eval(t)?)
}

/// G_Θ relative to `Θ`: `θ` nonincreasing on the grid, and `Θ⁻¹(t^-n)/θ(t)` almost
/// decreasing, meaning its value at `t₂` is at most `almost_const` times its value at
/// any grid `t₁ < t₂`.
pub fn validate_gtheta(
    theta: &GrowthFunction,
    young: &YoungFunction,
    n: usize,
    grid: &[f64],
    almost_const: f64,
) -> Result<ClassMembershipReport> {
    check_grid(grid, 1)?;
    if n == 0 || !(almost_const >= 1.0 && almost_const.is_finite()) {
        return Err(Error::Domain(
            "G_Theta check needs n >= 1 and a finite almost-decrease constant >= 1".into(),
        ));
    }
    let mut violation = grid.windows(2).find_map(|w| {
        let (a, b) = (theta.value(w[0]), theta.value(w[1]));
        exceeds(b, a).then_some(ClassViolation {
            quantity: ClassQuantity::Decreasing,
            r1: w[0],
            r2: w[1],
            s: None,
            lhs: b,
            rhs: a,
        })
    });
    if violation.is_none() {
        // Running minimum: q(t2) <= K q(t1) for all t1 < t2 iff q(t2) <= K min q(t1).
        let mut min_at = (grid[0], gtheta_ratio(theta, young, n, grid[0])?);
        for &t in &grid[1..] {
            let q = gtheta_ratio(theta, young, n, t)?;
            let bound = almost_const * min_at.1;
            if exceeds(q, bound) {
                violation = Some(ClassViolation {
                    quantity: ClassQuantity::AlmostDecreasing,
                    r1: min_at.0,
                    r2: t,
                    s: None,
                    lhs: q,
                    rhs: bound,
                });
                break;
            }
            if q < min_at.1 {
                min_at = (t, q);
            }
        }
    }
    let mut report = ClassMembershipReport::pass(GrowthClass::GTheta).with_violation(violation);
    report.partner_young = Some(young.clone());
    report.dimension = Some(n);
    report.almost_const = Some(almost_const);
    Ok(report)
}

/// Grid check of `φ₁ ⪯ φ₂`: the smallest `C` in `c_grid` with `φ₁(t) ≤ C φ₂(t)` on `t_grid`.
pub fn check_preceq(
    phi1: &GrowthFunction,
    phi2: &GrowthFunction,
    t_grid: &[f64],
    c_grid: &[f64],
) -> RelationReport {
    certify(t_grid, c_grid, |c, t| phi1.value(t) <= c * phi2.value(t))
}

pub fn check_preceq_default(phi1: &GrowthFunction, phi2: &GrowthFunction) -> RelationReport {
    check_preceq(phi1, phi2, &grid::default_t_grid(), &grid::default_c_grid())
}

/// Both directions of `φ₁ ≈ φ₂`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApproxReport {
    pub holds: bool,
    pub forward: RelationReport,
    pub backward: RelationReport,
}

pub fn check_approx(
    phi1: &GrowthFunction,
    phi2: &GrowthFunction,
    t_grid: &[f64],
    c_grid: &[f64],
) -> ApproxReport {
    let forward = check_preceq(phi1, phi2, t_grid, c_grid);
    let backward = check_preceq(phi2, phi1, t_grid, c_grid);
    ApproxReport {
        holds: forward.holds && backward.holds,
        forward,
        backward,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(a: f64) -> GrowthFunction {
        GrowthFunction::power(a).unwrap()
    }

    fn y2() -> YoungFunction {
        YoungFunction::power(2.0).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(pw(1.0).eval(3.0).unwrap(), 3.0);
        assert_eq!(
            GrowthFunction::power_capped(0.5)
                .unwrap()
                .eval(4.0)
                .unwrap(),
            1.0
        );
        assert_eq!(
            GrowthFunction::constant(2.0).unwrap().eval(10.0).unwrap(),
            2.0
        );
        assert!(pw(1.0).eval(0.0).is_err());
        assert!(pw(1.0).eval(-2.0).is_err());
    }

    #[test]
    fn g1_examples() {
        let g = grid::default_t_grid();
        assert!(validate_g1(&pw(0.5), &g).unwrap().member);
        let r = validate_g1(&pw(2.0), &g).unwrap();
        assert!(!r.member);
        assert_eq!(
            r.violation.unwrap().quantity,
            ClassQuantity::RatioNonincreasing
        );
        assert!(validate_g1(&pw(1.0), &g).unwrap().member);
        assert!(validate_g1(&pw(1.0), &[1.0]).is_err());
    }

    #[test]
    fn g2_examples() {
        let (r, s) = (grid::default_t_grid(), grid::default_s_grid());
        assert!(validate_g2(&pw(0.5), &y2(), 1, &r, &s).unwrap().member);
        let bad = validate_g2(&pw(0.9), &y2(), 1, &r, &s).unwrap();
        assert!(!bad.member);
        let capped = GrowthFunction::power_capped(0.5).unwrap();
        assert!(validate_g2(&capped, &y2(), 1, &r, &s).unwrap().member);
    }

    #[test]
    fn gtheta_examples() {
        let g = grid::default_t_grid();
        let inv = GrowthFunction::inv_power(0.5).unwrap();
        assert!(validate_gtheta(&inv, &y2(), 1, &g, 1.0).unwrap().member);
        let one = GrowthFunction::constant(1.0).unwrap();
        assert!(validate_gtheta(&one, &y2(), 1, &g, 1.0).unwrap().member);
        let steep = GrowthFunction::inv_power(2.0).unwrap();
        let r = validate_gtheta(&steep, &y2(), 1, &g, 1.0).unwrap();
        assert!(!r.member);
        assert_eq!(
            r.violation.unwrap().quantity,
            ClassQuantity::AlmostDecreasing
        );
        // increasing θ fails the decreasing requirement first
        let r = validate_gtheta(&pw(1.0), &y2(), 1, &g, 1.0).unwrap();
        assert_eq!(r.violation.unwrap().quantity, ClassQuantity::Decreasing);
        assert!(validate_gtheta(&one, &y2(), 1, &g, 0.5).is_err());
    }

    #[test]
    fn violations_recompute() {
        let g = grid::default_t_grid();
        let r = validate_g2(&pw(0.9), &y2(), 1, &g, &grid::default_s_grid()).unwrap();
        let (lhs, rhs) = r.recompute_violation(&pw(0.9)).unwrap().unwrap();
        assert!(lhs > rhs);
    }

    #[test]
    fn sqrt_is_not_in_g2_for_quadratic_plus_quartic() {
        let big = YoungFunction::sum(
            YoungFunction::power(2.0).unwrap(),
            YoungFunction::power(4.0).unwrap(),
        );
        let g = grid::default_t_grid();
        let r = validate_g2(&pw(0.5), &big, 1, &g, &grid::default_s_grid()).unwrap();
        assert!(!r.member);
        let r = validate_g2(
            &pw(0.5),
            &YoungFunction::sum(
                YoungFunction::power(1.0).unwrap(),
                YoungFunction::power(2.0).unwrap(),
            ),
            1,
            &g,
            &grid::default_s_grid(),
        )
        .unwrap();
        assert!(r.member);
    }

    #[test]
    fn preceq_examples() {
        let capped = GrowthFunction::power_capped(0.5).unwrap();
        let r = check_preceq_default(&capped, &pw(0.5));
        assert_eq!(r.witness_c, Some(1.0));

        // the ratio t^{-1/4} must outgrow the largest C on the grid
        let wide = grid::log_grid(1e-24, 1e6, 301);
        let r = check_preceq(&pw(0.25), &pw(0.5), &wide, &grid::default_c_grid());
        assert!(!r.holds);
        assert!(r.counterexample_t.unwrap() < 1.0);

        let a = check_approx(
            &pw(1.0),
            &pw(1.0),
            &grid::default_t_grid(),
            &grid::default_c_grid(),
        );
        assert!(a.holds);
        assert_eq!(a.forward.witness_c, Some(1.0));
        assert_eq!(a.backward.witness_c, Some(1.0));
    }
}
