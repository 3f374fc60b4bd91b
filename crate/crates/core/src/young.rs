//! Young functions: a closed family of finite convex functions, their generalized
//! inverse, grid validation of the Young axioms and the `≺` order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bisect;
use crate::error::{positive_param, Error, Result};
use crate::grid;
pub use crate::relation::{CandidateViolation, RelationReport};

/// Declarative form of a Young function, as read from JSON documents.
///
/// ```json
/// {"kind": "sum", "lhs": {"kind": "power", "p": 2}, "rhs": {"kind": "ramp", "t0": 1}}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum YoungSpec {
    /// `t^p`, `p ≥ 1`.
    Power { p: f64 },
    /// `t^p · ln(e + t)`, `p ≥ 1`.
    PowerLog { p: f64 },
    /// `e^t − 1`.
    ExpMinusOne,
    /// `max(0, t − t0)`, `t0 > 0`.
    Ramp { t0: f64 },
    /// `Φ_a(t) + Φ_b(t)`.
    Sum {
        lhs: Box<YoungSpec>,
        rhs: Box<YoungSpec>,
    },
    /// `Φ(c t)`, `c > 0`.
    ArgScale { c: f64, inner: Box<YoungSpec> },
}

impl YoungSpec {
    fn validate(&self) -> Result<()> {
        match self {
            YoungSpec::Power { p } | YoungSpec::PowerLog { p } => {
                if p.is_finite() && *p >= 1.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter {
                        name: "p",
                        reason: format!("exponent must be finite and at least 1, got {p}"),
                    })
                }
            }
            YoungSpec::ExpMinusOne => Ok(()),
            YoungSpec::Ramp { t0 } => positive_param("t0", *t0).map(drop),
            YoungSpec::Sum { lhs, rhs } => {
                lhs.validate()?;
                rhs.validate()
            }
            YoungSpec::ArgScale { c, inner } => {
                positive_param("c", *c)?;
                inner.validate()
            }
        }
    }
}

/// A validated Young function.
///
/// Every member is finite, continuous and convex on `[0, ∞)` with `Φ(0) = 0` and
/// `Φ(t) → ∞`. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "YoungSpec", into = "YoungSpec")]
pub struct YoungFunction {
    spec: YoungSpec,
}

impl TryFrom<YoungSpec> for YoungFunction {
    type Error = Error;

    fn try_from(spec: YoungSpec) -> Result<Self> {
        spec.validate()?;
        Ok(YoungFunction { spec })
    }
}

impl From<YoungFunction> for YoungSpec {
    fn from(f: YoungFunction) -> Self {
        f.spec
    }
}

impl YoungFunction {
    pub fn power(p: f64) -> Result<Self> {
        YoungSpec::Power { p }.try_into()
    }

    pub fn power_log(p: f64) -> Result<Self> {
        YoungSpec::PowerLog { p }.try_into()
    }

    pub fn exp_minus_one() -> Self {
        YoungFunction {
            spec: YoungSpec::ExpMinusOne,
        }
    }

    pub fn ramp(t0: f64) -> Result<Self> {
        YoungSpec::Ramp { t0 }.try_into()
    }

    pub fn sum(a: YoungFunction, b: YoungFunction) -> Self {
        YoungFunction {
            spec: YoungSpec::Sum {
                lhs: Box::new(a.spec),
                rhs: Box::new(b.spec),
            },
        }
    }

    pub fn arg_scale(c: f64, inner: YoungFunction) -> Result<Self> {
        positive_param("c", c)?;
        Ok(YoungFunction {
            spec: YoungSpec::ArgScale {
                c,
                inner: Box::new(inner.spec),
            },
        })
    }

    pub fn spec(&self) -> &YoungSpec {
        &self.spec
    }

    /// `Φ(t)`. Large arguments of the exponential family overflow to `+∞`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!(
                "Young functions are evaluated on [0, ∞), got {t}"
            )));
        }
        Ok(self.value(t))
    }

    /// Unchecked evaluation for arguments already known to be in `[0, ∞)`.
    pub(crate) fn value(&self, t: f64) -> f64 {
        value_of(&self.spec, t)
    }

    /// Generalized inverse `Φ⁻¹(s) = inf{r ≥ 0 : Φ(r) > s}`.
    ///
    /// Power, ramp, exponential and argument-scaled members are inverted in closed
    /// form; sums and power-log members by bracketed bisection.
    pub fn inverse(&self, s: f64) -> Result<f64> {
        if !s.is_finite() || s < 0.0 {
            return Err(Error::Domain(format!(
                "generalized inverse is defined on [0, ∞), got {s}"
            )));
        }
        inverse_of(&self.spec, s)
    }

    /// True when `Φ(t) > 0` for every `t > 0`, the case where `Φ⁻¹(0) = 0`.
    pub fn is_strictly_positive(&self) -> bool {
        zero_edge(&self.spec) == 0.0
    }
}

impl fmt::Display for YoungFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_spec(&self.spec, f)
    }
}

fn fmt_spec(spec: &YoungSpec, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match spec {
        YoungSpec::Power { p } => write!(f, "power(p={p})"),
        YoungSpec::PowerLog { p } => write!(f, "power-log(p={p})"),
        YoungSpec::ExpMinusOne => write!(f, "exp-minus-one"),
        YoungSpec::Ramp { t0 } => write!(f, "ramp(t0={t0})"),
        YoungSpec::Sum { lhs, rhs } => {
            write!(f, "sum(")?;
            fmt_spec(lhs, f)?;
            write!(f, ", ")?;
            fmt_spec(rhs, f)?;
            write!(f, ")")
        }
        YoungSpec::ArgScale { c, inner } => {
            write!(f, "arg-scale(c={c}, ")?;
            fmt_spec(inner, f)?;
            write!(f, ")")
        }
    }
}

fn value_of(spec: &YoungSpec, t: f64) -> f64 {
    match spec {
        YoungSpec::Power { p } => t.powf(*p),
        YoungSpec::PowerLog { p } => {
            if t == 0.0 {
                0.0
            } else {
                t.powf(*p) * (std::f64::consts::E + t).ln()
            }
        }
        YoungSpec::ExpMinusOne => t.exp_m1(),
        YoungSpec::Ramp { t0 } => (t - t0).max(0.0),
        YoungSpec::Sum { lhs, rhs } => value_of(lhs, t) + value_of(rhs, t),
        YoungSpec::ArgScale { c, inner } => value_of(inner, c * t),
    }
}

/// `inf{r ≥ 0 : Φ(r) > 0}`, the right end of the zero plateau.
fn zero_edge(spec: &YoungSpec) -> f64 {
    match spec {
        YoungSpec::Power { .. } | YoungSpec::PowerLog { .. } | YoungSpec::ExpMinusOne => 0.0,
        YoungSpec::Ramp { t0 } => *t0,
        YoungSpec::Sum { lhs, rhs } => zero_edge(lhs).min(zero_edge(rhs)),
        YoungSpec::ArgScale { c, inner } => zero_edge(inner) / c,
    }
}

fn inverse_of(spec: &YoungSpec, s: f64) -> Result<f64> {
    if s == 0.0 {
        return Ok(zero_edge(spec));
    }
    match spec {
        YoungSpec::Power { p } => Ok(s.powf(p.recip())),
        YoungSpec::ExpMinusOne => Ok(s.ln_1p()),
        YoungSpec::Ramp { t0 } => Ok(t0 + s),
        YoungSpec::ArgScale { c, inner } => Ok(inverse_of(inner, s)? / c),
        YoungSpec::PowerLog { .. } | YoungSpec::Sum { .. } => {
            bisect::threshold(|r| value_of(spec, r) > s, 1.0)
        }
    }
}

/// First violated Young axiom found on a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum YoungViolation {
    NonzeroAtOrigin { value: f64 },
    NotMonotone { t1: f64, t2: f64 },
    NotConvex { s: f64, t: f64 },
    NoGrowth,
}

/// Result of [`validate_young`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YoungValidation {
    pub passed: bool,
    pub violation: Option<YoungViolation>,
}

/// Relative slack of the midpoint-convexity test.
pub const CONVEXITY_RTOL: f64 = 1e-12;

/// Checks `Φ(0) = 0`, monotonicity on consecutive points, midpoint convexity on
/// every pair of grid points, and `Φ(t_max) > Φ(t_min)`.
pub fn validate_young(phi: &YoungFunction, grid: &[f64]) -> Result<YoungValidation> {
    if grid.is_empty() || !grid::is_strictly_increasing(grid) || grid[0] <= 0.0 {
        return Err(Error::Domain(
            "validation grid must be nonempty, positive and strictly increasing".into(),
        ));
    }
    let fail = |v| {
        Ok(YoungValidation {
            passed: false,
            violation: Some(v),
        })
    };
    let at_zero = phi.value(0.0);
    if at_zero != 0.0 {
        return fail(YoungViolation::NonzeroAtOrigin { value: at_zero });
    }
    let values: Vec<f64> = grid.iter().map(|&t| phi.value(t)).collect();
    for (w, v) in grid.windows(2).zip(values.windows(2)) {
        if v[1] < v[0] {
            return fail(YoungViolation::NotMonotone { t1: w[0], t2: w[1] });
        }
    }
    for i in 0..grid.len() {
        for j in i + 1..grid.len() {
            let chord = 0.5 * (values[i] + values[j]);
            let mid = phi.value(0.5 * (grid[i] + grid[j]));
            if mid > chord + CONVEXITY_RTOL * chord.abs() {
                return fail(YoungViolation::NotConvex {
                    s: grid[i],
                    t: grid[j],
                });
            }
        }
    }
    if values[values.len() - 1] <= values[0] {
        return fail(YoungViolation::NoGrowth);
    }
    Ok(YoungValidation {
        passed: true,
        violation: None,
    })
}

/// Grid check of `Φ₁ ≺ Φ₂`: the smallest `C` in `c_grid` with `Φ₁(t) ≤ Φ₂(Ct)` at every
/// `t` in `t_grid`.
pub fn check_prec(
    phi1: &YoungFunction,
    phi2: &YoungFunction,
    t_grid: &[f64],
    c_grid: &[f64],
) -> RelationReport {
    crate::relation::certify(t_grid, c_grid, |c, t| phi1.value(t) <= phi2.value(c * t))
}

/// [`check_prec`] on the default grids.
pub fn check_prec_default(phi1: &YoungFunction, phi2: &YoungFunction) -> RelationReport {
    check_prec(phi1, phi2, &grid::default_t_grid(), &grid::default_c_grid())
}

/// Grid check of `Φ₁⁻¹ ≺ Φ₂⁻¹`, i.e. `Φ₁⁻¹(s) ≤ Φ₂⁻¹(Cs)`.
pub fn check_inverse_prec(
    phi1: &YoungFunction,
    phi2: &YoungFunction,
    s_grid: &[f64],
    c_grid: &[f64],
) -> Result<RelationReport> {
    // Inverses are tabulated once per argument so the scan stays cheap.
    let lhs: Vec<f64> = s_grid
        .iter()
        .map(|&s| phi1.inverse(s))
        .collect::<Result<_>>()?;
    let mut failure = None;
    let report = crate::relation::certify(s_grid, c_grid, |c, s| {
        let idx = s_grid.iter().position(|&x| x == s).unwrap_or(0);
        match phi2.inverse(c * s) {
            Ok(rhs) => lhs[idx] <= rhs,
            Err(e) => {
                failure.get_or_insert(e);
                false
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// One evaluated point of the inverse-domination implication.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DominationPoint {
    pub s: f64,
    pub t: f64,
    /// `Φ₁(t / C₁)`
    pub lhs: f64,
    /// `C₂ Φ₂(t)`
    pub rhs: f64,
    pub holds: bool,
}

/// Outcome of [`check_inverse_domination`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InverseDomination {
    /// `Φ₂⁻¹(s) ≤ C₁ Φ₁⁻¹(C₂ s)` held at every grid `s`.
    pub premise_holds: bool,
    /// `Φ₁(t/C₁) ≤ C₂ Φ₂(t)` held at every `t = Φ₂⁻¹(s)`, within `rtol`.
    pub conclusion_holds: bool,
    pub points: Vec<DominationPoint>,
}

/// Turns the inverse bound `Φ₂⁻¹(s) ≤ C₁ Φ₁⁻¹(C₂ s)` into the pointwise bound
/// `Φ₁(t/C₁) ≤ C₂ Φ₂(t)` at `t = Φ₂⁻¹(s)` and checks both on a grid of `s`.
pub fn check_inverse_domination(
    phi1: &YoungFunction,
    phi2: &YoungFunction,
    c1: f64,
    c2: f64,
    s_grid: &[f64],
    rtol: f64,
) -> Result<InverseDomination> {
    positive_param("c1", c1)?;
    positive_param("c2", c2)?;
    let mut premise_holds = true;
    let mut conclusion_holds = true;
    let mut points = Vec::with_capacity(s_grid.len());
    for &s in s_grid {
        let t = phi2.inverse(s)?;
        if t > c1 * phi1.inverse(c2 * s)? * (1.0 + rtol) {
            premise_holds = false;
        }
        let lhs = phi1.value(t / c1);
        let rhs = c2 * phi2.value(t);
        let holds = lhs <= rhs * (1.0 + rtol);
        conclusion_holds &= holds;
        points.push(DominationPoint {
            s,
            t,
            lhs,
            rhs,
            holds,
        });
    }
    Ok(InverseDomination {
        premise_holds,
        conclusion_holds,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64) -> YoungFunction {
        YoungFunction::power(x).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(2.0).eval(2.0).unwrap(), 4.0);
        assert_eq!(YoungFunction::exp_minus_one().eval(0.0).unwrap(), 0.0);
        assert_eq!(YoungFunction::ramp(1.0).unwrap().eval(0.5).unwrap(), 0.0);
    }

    #[test]
    fn eval_rejects_bad_arguments() {
        assert!(matches!(p(2.0).eval(-1.0), Err(Error::Domain(_))));
        assert!(matches!(p(2.0).eval(f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(p(2.0).eval(f64::INFINITY), Err(Error::Domain(_))));
    }

    #[test]
    fn constructor_parameters_are_checked() {
        assert!(YoungFunction::power(0.5).is_err());
        assert!(YoungFunction::power_log(f64::NAN).is_err());
        assert!(YoungFunction::ramp(0.0).is_err());
        assert!(YoungFunction::arg_scale(-1.0, p(1.0)).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(2.0).inverse(4.0).unwrap(), 2.0);
        assert_eq!(p(2.0).inverse(0.0).unwrap(), 0.0);
        let ramp = YoungFunction::ramp(1.0).unwrap();
        assert_eq!(ramp.inverse(0.0).unwrap(), 1.0);
        assert_eq!(ramp.inverse(3.0).unwrap(), 4.0);
        assert!(p(2.0).inverse(f64::INFINITY).is_err());
    }

    #[test]
    fn inverse_of_sum_with_plateau() {
        let f = YoungFunction::sum(
            YoungFunction::ramp(1.0).unwrap(),
            YoungFunction::ramp(2.0).unwrap(),
        );
        assert_eq!(f.inverse(0.0).unwrap(), 1.0);
        // r - 1 = 0.5 on [1, 2]
        assert!((f.inverse(0.5).unwrap() - 1.5).abs() < 1e-12);
        // 2r - 3 = 3 beyond 2
        assert!((f.inverse(3.0).unwrap() - 3.0).abs() < 1e-12);
        assert!(!f.is_strictly_positive());
    }

    #[test]
    fn power_log_inverse_round_trips() {
        let f = YoungFunction::power_log(1.0).unwrap();
        for s in [1e-6, 0.3, 1.0, 17.0, 1e6] {
            let r = f.inverse(s).unwrap();
            assert!(f.value(r) >= s && f.value(r) <= s * (1.0 + 1e-12));
        }
    }

    #[test]
    fn arg_scale_inverse_divides() {
        let f = YoungFunction::arg_scale(0.5, YoungFunction::exp_minus_one()).unwrap();
        assert!((f.inverse(1.0).unwrap() - 2.0 * 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn validate_examples() {
        let g = grid::log_grid(1e-3, 1e2, 60);
        assert!(validate_young(&p(1.0), &g).unwrap().passed);
        let s = YoungFunction::sum(p(2.0), YoungFunction::ramp(1.0).unwrap());
        assert!(validate_young(&s, &g).unwrap().passed);
        let a = YoungFunction::arg_scale(0.5, YoungFunction::exp_minus_one()).unwrap();
        assert!(validate_young(&a, &g).unwrap().passed);
        assert!(validate_young(&p(2.0), &[]).is_err());
    }

    #[test]
    fn prec_examples() {
        let r = check_prec_default(&p(1.0), &YoungFunction::exp_minus_one());
        assert!(r.holds);
        assert_eq!(r.witness_c, Some(1.0));

        let r = check_prec_default(&p(2.0), &p(1.0));
        assert!(!r.holds);
        let t = r.counterexample_t.unwrap();
        let c = r.searched_c_range.1;
        assert!(t > c && t * t > c * t);

        let r = check_prec_default(&p(2.0), &p(2.0));
        assert_eq!(r.witness_c, Some(1.0));
    }

    #[test]
    fn display_is_readable() {
        let s = YoungFunction::sum(p(2.0), YoungFunction::ramp(1.0).unwrap());
        assert_eq!(s.to_string(), "sum(power(p=2), ramp(t0=1))");
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f: YoungFunction =
            serde_json::from_str(r#"{"kind":"arg-scale","c":2,"inner":{"kind":"exp-minus-one"}}"#)
                .unwrap();
        assert_eq!(f.eval(1.0).unwrap(), 2f64.exp_m1());
        let back = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<YoungFunction>(&back).unwrap(), f);
        assert!(serde_json::from_str::<YoungFunction>(r#"{"kind":"power","p":0.5}"#).is_err());
    }
}
