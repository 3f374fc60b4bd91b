//! Inclusion theorems between Orlicz-Morrey spaces as executable checks.
//!
//! A [`TheoremFixture`] pairs two spaces with the relation reports its hypotheses
//! need. [`verify_sufficiency`] compares global norms on a sample corpus against the
//! constant assembled from the hypothesis witnesses; [`verify_necessity`] runs the
//! converse argument on characteristic functions and checks the recovered relation
//! between the growth (or Young) functions on the radius grid.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{ball_volume, Ball, SimpleRadialFunction};
use crate::grid;
use crate::growth::{check_preceq_default, GrowthFunction};
use crate::norms::{global_norm, SpaceSpec, Variant};
use crate::relation::RelationReport;
use crate::young::{check_inverse_prec, check_prec_default, YoungFunction, YoungSpec};

/// Relative slack granted to every `lhs ≤ bound · rhs` comparison.
pub const VERIFY_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Nakai,
    Sst,
    SstSameYoung,
    WeakNakai,
    WeakSst,
    Guliyev,
    MorreyPower,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Nakai,
        TheoremId::Sst,
        TheoremId::SstSameYoung,
        TheoremId::WeakNakai,
        TheoremId::WeakSst,
        TheoremId::Guliyev,
        TheoremId::MorreyPower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Nakai => "nakai",
            TheoremId::Sst => "sst",
            TheoremId::SstSameYoung => "sst-same-young",
            TheoremId::WeakNakai => "weak-nakai",
            TheoremId::WeakSst => "weak-sst",
            TheoremId::Guliyev => "guliyev",
            TheoremId::MorreyPower => "morrey-power",
        }
    }

    pub fn parse(name: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.name() == name)
    }

    /// Variant shared by both spaces of the theorem.
    pub fn variant(self) -> Variant {
        match self {
            TheoremId::Nakai => Variant::Nakai,
            TheoremId::Sst | TheoremId::SstSameYoung | TheoremId::MorreyPower => Variant::Sst,
            TheoremId::WeakNakai => Variant::WeakNakai,
            TheoremId::WeakSst => Variant::WeakSst,
            TheoremId::Guliyev => Variant::Guliyev,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Sufficiency,
    Necessity,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Sufficiency => "sufficiency",
            Direction::Necessity => "necessity",
        }
    }

    pub fn parse(name: &str) -> Option<Direction> {
        match name {
            "sufficiency" => Some(Direction::Sufficiency),
            "necessity" => Some(Direction::Necessity),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which hypothesis a relation report certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisKind {
    /// `Φ₁ ≺ Φ₂`
    YoungPrec,
    /// `Θ₁⁻¹ ≺ Θ₂⁻¹`
    InversePrec,
    /// `φ₁ ⪯ φ₂`
    GrowthPreceq,
    /// `φ₂ ⪯ φ₁`
    GrowthPreceqReverse,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypothesis {
    pub kind: HypothesisKind,
    pub report: RelationReport,
}

/// A named sample function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub id: String,
    pub function: SimpleRadialFunction,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremFixture {
    theorem: TheoremId,
    space1: SpaceSpec,
    space2: SpaceSpec,
    hypotheses: Vec<Hypothesis>,
    samples: Vec<Sample>,
    radii: Vec<f64>,
    overridden: bool,
}

/// Young and growth function of one side of a fixture.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceParts {
    pub young: YoungFunction,
    pub growth: GrowthFunction,
}

impl TheoremFixture {
    /// Builds a fixture and evaluates its hypotheses on the default grids.
    ///
    /// Without `override_hypotheses`, class membership of both growth functions and
    /// every hypothesis must hold. With it, failures are recorded and a missing
    /// witness counts as 1 when constants are assembled.
    pub fn new(
        theorem: TheoremId,
        side1: SpaceParts,
        side2: SpaceParts,
        dimension: usize,
        radii: Vec<f64>,
        samples: Vec<Sample>,
        override_hypotheses: bool,
    ) -> Result<Self> {
        if radii.is_empty() || radii[0] <= 0.0 || !grid::is_strictly_increasing(&radii) {
            return Err(Error::Domain(
                "fixture radii must be positive and strictly increasing".into(),
            ));
        }
        if let Some(s) = samples.iter().find(|s| s.function.dimension() != dimension) {
            return Err(Error::Domain(format!(
                "sample {} lives in R^{}, fixture in R^{dimension}",
                s.id,
                s.function.dimension()
            )));
        }
        match theorem {
            TheoremId::SstSameYoung if side1.young != side2.young => {
                return Err(Error::Precondition(format!(
                    "{theorem} needs one Young function on both sides, got {} and {}",
                    side1.young, side2.young
                )));
            }
            TheoremId::MorreyPower => {
                let (p1, p2) = (power_exponent(&side1.young)?, power_exponent(&side2.young)?);
                if p1 > p2 {
                    return Err(Error::Precondition(format!(
                        "{theorem} needs p1 <= p2, got {p1} > {p2}"
                    )));
                }
            }
            _ => {}
        }
        let variant = theorem.variant();
        let build = if override_hypotheses {
            SpaceSpec::with_override
        } else {
            SpaceSpec::new
        };
        let space1 = build(variant, side1.young, side1.growth, dimension)?;
        let space2 = build(variant, side2.young, side2.growth, dimension)?;
        let hypotheses = hypotheses_for(theorem, &space1, &space2)?;
        if !override_hypotheses {
            if let Some(h) = hypotheses.iter().find(|h| !h.report.holds) {
                return Err(Error::Precondition(format!(
                    "{theorem}: hypothesis {:?} fails on the default grids",
                    h.kind
                )));
            }
        }
        Ok(TheoremFixture {
            theorem,
            space1,
            space2,
            hypotheses,
            samples,
            radii,
            overridden: override_hypotheses,
        })
    }

    pub fn theorem(&self) -> TheoremId {
        self.theorem
    }

    pub fn space1(&self) -> &SpaceSpec {
        &self.space1
    }

    pub fn space2(&self) -> &SpaceSpec {
        &self.space2
    }

    pub fn hypotheses(&self) -> &[Hypothesis] {
        &self.hypotheses
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn is_overridden(&self) -> bool {
        self.overridden
    }

    fn witness(&self, kind: HypothesisKind) -> f64 {
        self.hypotheses
            .iter()
            .find(|h| h.kind == kind)
            .and_then(|h| h.report.witness())
            .unwrap_or(1.0)
    }

    /// Constant `C` of `‖f‖₁ ≤ C ‖f‖₂` assembled from the hypothesis witnesses.
    ///
    /// * Nakai, weak Nakai: `C₁ · max(C₂, 1)` with `C₁` from `Φ₁ ≺ Φ₂` and `C₂` from
    ///   `φ₁ ⪯ φ₂`; dividing by `max(C₂, 1) ≥ 1` uses convexity.
    /// * SST, weak SST: `C₁ · C₂` with `C₂` from `ψ₁ ⪯ ψ₂`.
    /// * SST with one Young function, power Morrey: `C₂` (Jensen for the latter).
    /// * Guliyev: `C₁ · C_θ · max(C_inv, 1)` with `C_θ` from `θ₂ ⪯ θ₁` and `C_inv`
    ///   from `Θ₁⁻¹ ≺ Θ₂⁻¹`; the inverse is concave, so `Θ⁻¹(Cs) ≤ max(C, 1) Θ⁻¹(s)`.
    pub fn proof_constant(&self) -> f64 {
        use HypothesisKind::*;
        match self.theorem {
            TheoremId::Nakai | TheoremId::WeakNakai => {
                self.witness(YoungPrec) * self.witness(GrowthPreceq).max(1.0)
            }
            TheoremId::Sst | TheoremId::WeakSst => {
                self.witness(YoungPrec) * self.witness(GrowthPreceq)
            }
            TheoremId::SstSameYoung | TheoremId::MorreyPower => self.witness(GrowthPreceq),
            TheoremId::Guliyev => {
                self.witness(YoungPrec)
                    * self.witness(GrowthPreceqReverse)
                    * self.witness(InversePrec).max(1.0)
            }
        }
    }
}

fn power_exponent(young: &YoungFunction) -> Result<f64> {
    match young.spec() {
        YoungSpec::Power { p } => Ok(*p),
        _ => Err(Error::Precondition(format!(
            "power Morrey spaces need Young functions power(p), got {young}"
        ))),
    }
}

fn hypotheses_for(
    theorem: TheoremId,
    space1: &SpaceSpec,
    space2: &SpaceSpec,
) -> Result<Vec<Hypothesis>> {
    let young = || Hypothesis {
        kind: HypothesisKind::YoungPrec,
        report: check_prec_default(space1.young(), space2.young()),
    };
    let forward = || Hypothesis {
        kind: HypothesisKind::GrowthPreceq,
        report: check_preceq_default(space1.growth(), space2.growth()),
    };
    let backward = || Hypothesis {
        kind: HypothesisKind::GrowthPreceqReverse,
        report: check_preceq_default(space2.growth(), space1.growth()),
    };
    Ok(match theorem {
        TheoremId::Nakai | TheoremId::WeakNakai => vec![young(), forward(), backward()],
        TheoremId::Sst | TheoremId::WeakSst => vec![young(), forward()],
        TheoremId::SstSameYoung | TheoremId::MorreyPower => vec![forward()],
        TheoremId::Guliyev => vec![
            young(),
            Hypothesis {
                kind: HypothesisKind::InversePrec,
                report: check_inverse_prec(
                    space1.young(),
                    space2.young(),
                    &grid::default_t_grid(),
                    &grid::default_c_grid(),
                )?,
            },
            backward(),
        ],
    })
}

/// One compared pair `lhs ≤ bound · rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRow {
    pub sample_id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub bound: f64,
    pub pass: bool,
    /// False when an independent cross-check of the row disagreed.
    #[serde(skip)]
    consistent: bool,
}

impl VerificationRow {
    fn new(sample_id: String, lhs: f64, rhs: f64, bound: f64) -> Self {
        let ratio = if lhs == 0.0 { 0.0 } else { lhs / rhs };
        VerificationRow {
            sample_id,
            lhs,
            rhs,
            ratio,
            bound,
            pass: lhs <= bound * rhs * (1.0 + VERIFY_RTOL),
            consistent: true,
        }
    }

    fn regrade(&mut self, rtol: f64) {
        self.pass = self.consistent && self.lhs <= self.bound * self.rhs * (1.0 + rtol);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub direction: Direction,
    pub passed: bool,
    /// Largest observed `lhs / rhs`.
    pub measured_constant: f64,
    /// Bound every row was checked against.
    pub proof_constant: f64,
    pub rows: Vec<VerificationRow>,
    pub overridden: bool,
    pub note: Option<String>,
}

impl VerificationReport {
    fn from_rows(
        fixture: &TheoremFixture,
        direction: Direction,
        proof_constant: f64,
        rows: Vec<VerificationRow>,
        note: Option<String>,
    ) -> Self {
        let measured_constant = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
        VerificationReport {
            theorem: fixture.theorem,
            direction,
            passed: note.is_none() && rows.iter().all(|r| r.pass),
            measured_constant,
            proof_constant,
            rows,
            overridden: fixture.overridden,
            note,
        }
    }

    /// Same report with every row regraded at relative tolerance `rtol`.
    pub fn with_tolerance(mut self, rtol: f64) -> Self {
        self.rows.iter_mut().for_each(|r| r.regrade(rtol));
        self.passed = self.note.is_none() && self.rows.iter().all(|r| r.pass);
        self
    }
}

fn sample_radii(fixture: &TheoremFixture, f: &SimpleRadialFunction) -> Vec<f64> {
    grid::merge_sorted(&fixture.radii, f.breakpoints())
}

/// Checks `‖f‖₁ ≤ C ‖f‖₂` on every sample with the assembled proof constant.
pub fn verify_sufficiency(fixture: &TheoremFixture) -> Result<VerificationReport> {
    if fixture.theorem == TheoremId::MorreyPower {
        return morrey_power_rows(fixture);
    }
    let bound = fixture.proof_constant();
    let rows = fixture
        .samples
        .iter()
        .map(|s| {
            let radii = sample_radii(fixture, &s.function);
            let lhs = global_norm(&s.function, &fixture.space1, &radii)?.value;
            let rhs = global_norm(&s.function, &fixture.space2, &radii)?.value;
            Ok(VerificationRow::new(s.id.clone(), lhs, rhs, bound))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::from_rows(
        fixture,
        Direction::Sufficiency,
        bound,
        rows,
        None,
    ))
}

fn radius_id(r: f64) -> String {
    format!("chi-r{r}")
}

/// Runs the converse argument on characteristic functions, assuming
/// `‖f‖₁ ≤ assumed_c ‖f‖₂`.
///
/// * SST-type: `ψ₁(|B|) ≤ C₁ ψ₂(|B|)` with `C₁ = assumed_c · Ψ₁⁻¹(1) / Ψ₂⁻¹(1)`.
/// * Nakai-type: at `t = Φ₂⁻¹(1/φ₂(|B|))`, `Φ₁(t / C₃) ≤ Φ₂(t)` with
///   `C₃ = assumed_c · max(K, 1)` and `K` the witness of `φ₂ ⪯ φ₁`.
/// * Guliyev: `θ₂(|B|^{1/n}) ≤ assumed_c · θ₁(|B|^{1/n})`.
pub fn verify_necessity(fixture: &TheoremFixture, assumed_c: f64) -> Result<VerificationReport> {
    crate::error::positive_param("assumed_c", assumed_c)?;
    let n = fixture.space1.dimension();
    let (y1, y2) = (fixture.space1.young(), fixture.space2.young());
    let (g1, g2) = (fixture.space1.growth(), fixture.space2.growth());
    let mut note = None;
    let (bound, rows) = match fixture.theorem.variant() {
        Variant::Sst | Variant::WeakSst => {
            let c1 = assumed_c * y1.inverse(1.0)? / y2.inverse(1.0)?;
            let rows = fixture
                .radii
                .iter()
                .map(|&r| {
                    let v = ball_volume(n, r)?;
                    Ok(VerificationRow::new(
                        radius_id(r),
                        g1.eval(v)?,
                        g2.eval(v)?,
                        c1,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            (c1, rows)
        }
        Variant::Nakai | Variant::WeakNakai => {
            let reverse = check_preceq_default(g2, g1);
            let k = match reverse.witness() {
                Some(k) => k,
                None => {
                    note = Some(
                        "growth functions are not comparable: φ₂ ⋠ φ₁ on the default grids".into(),
                    );
                    1.0
                }
            };
            let c3 = assumed_c * k.max(1.0);
            let rows = fixture
                .radii
                .iter()
                .map(|&r| {
                    let v = ball_volume(n, r)?;
                    let t = y2.inverse(1.0 / g2.eval(v)?)?;
                    Ok(VerificationRow::new(
                        radius_id(r),
                        y1.eval(t / c3)?,
                        y2.eval(t)?,
                        1.0,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            (c3, rows)
        }
        Variant::Guliyev => {
            let rows = fixture
                .radii
                .iter()
                .map(|&r| {
                    let side = ball_volume(n, r)?.powf((n as f64).recip());
                    Ok(VerificationRow::new(
                        radius_id(r),
                        g2.eval(side)?,
                        g1.eval(side)?,
                        assumed_c,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            (assumed_c, rows)
        }
    };
    Ok(VerificationReport::from_rows(
        fixture,
        Direction::Necessity,
        bound,
        rows,
        note,
    ))
}

/// `sup_r ψ(|B(a,r)|) · ((1/|B|) ∫_B f^p)^{1/p}` from shell masses, bypassing the
/// Luxemburg solver.
pub fn morrey_power_norm(
    f: &SimpleRadialFunction,
    p: f64,
    psi: &GrowthFunction,
    radii: &[f64],
) -> Result<f64> {
    crate::error::positive_param("p", p)?;
    radii.iter().try_fold(0.0f64, |acc, &r| {
        let ball = Ball::new(f.center().to_vec(), r)?;
        let masses = f.shell_masses(&ball)?;
        let integral: f64 = f
            .values()
            .iter()
            .zip(&masses)
            .filter(|(&c, &m)| c > 0.0 && m > 0.0)
            .map(|(&c, &m)| c.powf(p) * m)
            .sum();
        let mean = (integral / ball.measure()).powf(p.recip());
        Ok(acc.max(psi.eval(ball.measure())? * mean))
    })
}

fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn morrey_power_rows(fixture: &TheoremFixture) -> Result<VerificationReport> {
    let p1 = power_exponent(fixture.space1.young())?;
    let p2 = power_exponent(fixture.space2.young())?;
    let bound = fixture.proof_constant();
    let mut disagreements = Vec::new();
    let mut rows = Vec::with_capacity(fixture.samples.len());
    for s in &fixture.samples {
        let radii = sample_radii(fixture, &s.function);
        let lhs = global_norm(&s.function, &fixture.space1, &radii)?;
        let rhs = global_norm(&s.function, &fixture.space2, &radii)?;
        let lhs_exact = morrey_power_norm(&s.function, p1, fixture.space1.growth(), &radii)?;
        let rhs_exact = morrey_power_norm(&s.function, p2, fixture.space2.growth(), &radii)?;
        let mut row = VerificationRow::new(s.id.clone(), lhs.value, rhs.value, bound);
        if relative_gap(lhs.grid_value, lhs_exact) > VERIFY_RTOL
            || relative_gap(rhs.grid_value, rhs_exact) > VERIFY_RTOL
        {
            row.pass = false;
            row.consistent = false;
            disagreements.push(s.id.clone());
        }
        rows.push(row);
    }
    let note = (!disagreements.is_empty()).then(|| {
        format!(
            "Luxemburg and exact power-integral norms disagree on {}",
            disagreements.join(", ")
        )
    });
    Ok(VerificationReport::from_rows(
        fixture,
        Direction::Sufficiency,
        bound,
        rows,
        note,
    ))
}

/// Generalized Morrey inclusion `M^{p₁}_{ψ₁} ⊇ M^{p₂}_{ψ₂}` on samples, with both
/// norms also computed from exact power integrals.
pub fn morrey_power_crosscheck(
    p1: f64,
    p2: f64,
    psi1: &GrowthFunction,
    psi2: &GrowthFunction,
    samples: Vec<Sample>,
    radii: Vec<f64>,
) -> Result<VerificationReport> {
    let dimension = samples.first().map_or(1, |s| s.function.dimension());
    let fixture = TheoremFixture::new(
        TheoremId::MorreyPower,
        SpaceParts {
            young: YoungFunction::power(p1)?,
            growth: psi1.clone(),
        },
        SpaceParts {
            young: YoungFunction::power(p2)?,
            growth: psi2.clone(),
        },
        dimension,
        radii,
        samples,
        false,
    )?;
    verify_sufficiency(&fixture)
}

/// Seeded random simple functions centred at the origin of `R^dimension`:
/// 1 to 8 annuli, breakpoints log-uniform in `[2⁻⁴, 2⁴]`, values uniform in `[0, 10]`.
pub fn random_samples(seed: u64, count: usize, dimension: usize) -> Result<Vec<Sample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let k = rng.gen_range(1..=8usize);
            let mut breakpoints: Vec<f64> = (0..k)
                .map(|_| rng.gen_range(-4.0f64..=4.0).exp2())
                .collect();
            breakpoints.sort_by(f64::total_cmp);
            breakpoints.dedup();
            let values = (0..breakpoints.len())
                .map(|_| rng.gen_range(0.0..=10.0))
                .collect();
            Ok(Sample {
                id: format!("rand-{i:03}"),
                function: SimpleRadialFunction::new(vec![0.0; dimension], breakpoints, values)?,
            })
        })
        .collect()
}

/// `χ_{B(0, r)}` for every `r` in `radii`.
pub fn characteristic_samples(radii: &[f64], dimension: usize) -> Result<Vec<Sample>> {
    radii
        .iter()
        .map(|&r| {
            Ok(Sample {
                id: radius_id(r),
                function: SimpleRadialFunction::characteristic(vec![0.0; dimension], r)?,
            })
        })
        .collect()
}

/// Random samples followed by the characteristic functions of the radius grid.
pub fn sample_corpus(
    seed: u64,
    count: usize,
    dimension: usize,
    radii: &[f64],
) -> Result<Vec<Sample>> {
    let mut samples = random_samples(seed, count, dimension)?;
    samples.extend(characteristic_samples(radii, dimension)?);
    Ok(samples)
}

/// Random samples per builtin fixture.
pub const BUILTIN_SAMPLES: usize = 20;

fn parts(young: YoungFunction, growth: GrowthFunction) -> SpaceParts {
    SpaceParts { young, growth }
}

/// Young and growth functions of the builtin fixture for `theorem`, in `R^1`.
pub fn builtin_parts(theorem: TheoremId) -> Result<(SpaceParts, SpaceParts)> {
    let power = YoungFunction::power;
    let sqrt = || GrowthFunction::power(0.5);
    let capped = || GrowthFunction::power_capped(0.5);
    let sum12 = || Ok::<_, Error>(YoungFunction::sum(power(1.0)?, power(2.0)?));
    Ok(match theorem {
        TheoremId::Sst | TheoremId::WeakSst => {
            (parts(power(2.0)?, capped()?), parts(sum12()?, sqrt()?))
        }
        TheoremId::SstSameYoung => (parts(power(2.0)?, capped()?), parts(power(2.0)?, sqrt()?)),
        TheoremId::Nakai => (parts(power(1.0)?, sqrt()?), parts(sum12()?, sqrt()?)),
        TheoremId::WeakNakai => (
            parts(power(1.0)?, sqrt()?),
            parts(YoungFunction::exp_minus_one(), sqrt()?),
        ),
        TheoremId::Guliyev => {
            let theta = GrowthFunction::inv_power(0.5)?;
            let half = GrowthFunction::scale(0.5, theta.clone())?;
            (parts(power(2.0)?, theta), parts(power(2.0)?, half))
        }
        TheoremId::MorreyPower => (parts(power(1.0)?, capped()?), parts(power(2.0)?, sqrt()?)),
    })
}

/// Builtin fixture for `theorem` on the default radii with the seeded corpus.
pub fn builtin_fixture(theorem: TheoremId, seed: u64) -> Result<TheoremFixture> {
    builtin_fixture_on(theorem, seed, grid::default_radii())
}

pub fn builtin_fixture_on(
    theorem: TheoremId,
    seed: u64,
    radii: Vec<f64>,
) -> Result<TheoremFixture> {
    let (side1, side2) = builtin_parts(theorem)?;
    let samples = sample_corpus(seed, BUILTIN_SAMPLES, 1, &radii)?;
    TheoremFixture::new(theorem, side1, side2, 1, radii, samples, false)
}

/// Weak SST pair with `ψ₁ = power(0.5)`, `ψ₂ = power(0.25)`, which violates `ψ₁ ⪯ ψ₂`
/// for large balls. Hypotheses are overridden.
pub fn contrapositive_fixture(seed: u64) -> Result<TheoremFixture> {
    contrapositive_fixture_on(seed, grid::default_radii())
}

pub fn contrapositive_fixture_on(seed: u64, radii: Vec<f64>) -> Result<TheoremFixture> {
    let y = YoungFunction::power(2.0)?;
    let samples = sample_corpus(seed, BUILTIN_SAMPLES, 1, &radii)?;
    TheoremFixture::new(
        TheoremId::WeakSst,
        parts(y.clone(), GrowthFunction::power(0.5)?),
        parts(y, GrowthFunction::power(0.25)?),
        1,
        radii,
        samples,
        true,
    )
}

/// One report of the builtin suite with the outcome it is expected to have.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteEntry {
    pub label: String,
    pub expected_pass: bool,
    pub report: VerificationReport,
}

impl SuiteEntry {
    pub fn as_expected(&self) -> bool {
        self.report.passed == self.expected_pass
    }
}

/// Sufficiency and the necessity round trip for every builtin fixture, then the
/// contrapositive necessity check with `assumed_c = 1`.
pub fn builtin_suite(seed: u64) -> Result<Vec<SuiteEntry>> {
    builtin_suite_on(seed, grid::default_radii())
}

pub fn builtin_suite_on(seed: u64, radii: Vec<f64>) -> Result<Vec<SuiteEntry>> {
    let mut entries = Vec::new();
    for theorem in TheoremId::ALL {
        let fixture = builtin_fixture_on(theorem, seed, radii.clone())?;
        let sufficiency = verify_sufficiency(&fixture)?;
        let assumed = sufficiency.measured_constant;
        entries.push(SuiteEntry {
            label: theorem.name().to_string(),
            expected_pass: true,
            report: sufficiency,
        });
        if assumed > 0.0 {
            entries.push(SuiteEntry {
                label: theorem.name().to_string(),
                expected_pass: true,
                report: verify_necessity(&fixture, assumed)?,
            });
        }
    }
    let contra = contrapositive_fixture_on(seed, radii)?;
    entries.push(SuiteEntry {
        label: "contrapositive".to_string(),
        expected_pass: false,
        report: verify_necessity(&contra, 1.0)?,
    });
    Ok(entries)
}
