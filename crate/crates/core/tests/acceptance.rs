//! Acceptance criteria. Runs without the libtest harness so every criterion prints
//! exactly one PASS/FAIL line; the process exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use omlab::geometry::{unit_ball_volume, Ball, SimpleRadialFunction};
use omlab::grid::{self, log_grid};
use omlab::growth::GrowthFunction;
use omlab::inclusion::{
    self, builtin_fixture, contrapositive_fixture, random_samples, verify_necessity,
    verify_sufficiency, TheoremId,
};
use omlab::norms::{
    char_local_closed, char_norm_closed, global_norm, global_norm_with, luxemburg_local_with,
    nakai_local_with, weak_local_with, Method, SpaceSpec, Variant,
};
use omlab::young::YoungFunction;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

/// stdout, report.csv and summary.json of one run
type RunBytes = (Vec<u8>, Vec<u8>, Vec<u8>);

fn rel_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn within(label: &str, elapsed: Duration, budget_s: u64) -> Result<(), String> {
    if elapsed > Duration::from_secs(budget_s) {
        Err(format!("{label} took {elapsed:?}, budget {budget_s}s"))
    } else {
        Ok(())
    }
}

fn y_power(p: f64) -> YoungFunction {
    YoungFunction::power(p).unwrap()
}

fn g_power(a: f64) -> GrowthFunction {
    GrowthFunction::power(a).unwrap()
}

/// (Young, growth) pairs whose growth lies in G₁ and in G₂ for n = 1, 2, 3.
fn space_pairs() -> Vec<(YoungFunction, GrowthFunction)> {
    vec![
        (y_power(2.0), g_power(0.5)),
        (YoungFunction::sum(y_power(1.0), y_power(2.0)), g_power(0.5)),
        (YoungFunction::power_log(1.0).unwrap(), g_power(0.5)),
        (
            YoungFunction::exp_minus_one(),
            GrowthFunction::constant(1.0).unwrap(),
        ),
    ]
}

fn inverse_suite() -> Check {
    let start = Instant::now();
    let fixtures = vec![
        y_power(2.5),
        YoungFunction::power_log(2.0).unwrap(),
        YoungFunction::exp_minus_one(),
        YoungFunction::sum(y_power(2.0), YoungFunction::ramp(1.0).unwrap()),
        YoungFunction::arg_scale(0.5, YoungFunction::exp_minus_one()).unwrap(),
        YoungFunction::ramp(1.0).unwrap(),
    ];
    let s_grid = log_grid(1e-6, 1e6, 120);
    let mut checks = 0usize;
    let mut overflowed = 0usize;
    for phi in &fixtures {
        let mut prev = 0.0;
        for &s in &s_grid {
            let inv = phi.inverse(s).map_err(|e| e.to_string())?;
            if inv < prev {
                return Err(format!("{phi}: inverse decreases at s={s}"));
            }
            prev = inv;
            if phi.eval(inv).unwrap() > s * (1.0 + 1e-9) {
                return Err(format!("{phi}: Φ(Φ⁻¹(s)) > s at s={s}"));
            }
            checks += 2;
            let value = phi.eval(s).unwrap();
            if !value.is_finite() {
                overflowed += 1;
                continue;
            }
            let back = phi.inverse(value).unwrap();
            if s > back * (1.0 + 1e-9) {
                return Err(format!("{phi}: t > Φ⁻¹(Φ(t)) at t={s}"));
            }
            checks += 1;
        }
        if phi.is_strictly_positive() {
            if phi.inverse(0.0).unwrap() != 0.0 {
                return Err(format!("{phi}: Φ⁻¹(0) ≠ 0"));
            }
            checks += 1;
        }
    }
    within("inverse suite", start.elapsed(), 5)?;
    Ok(format!(
        "{} fixtures x {} s, {checks} checks ({overflowed} points with Φ(s) = inf skipped) in {:?}",
        fixtures.len(),
        s_grid.len(),
        start.elapsed()
    ))
}

fn characteristic_oracles() -> Check {
    let start = Instant::now();
    let levels: Vec<f64> = (-3..=3).map(|k| 2f64.powi(k)).collect();
    let mut comparisons = 0usize;
    let mut worst = 0.0f64;
    let mut compare = |what: &str, got: f64, want: f64| -> Result<(), String> {
        let gap = rel_gap(got, want);
        worst = worst.max(gap);
        comparisons += 1;
        if gap > 1e-8 {
            Err(format!("{what}: engine {got} vs closed form {want}"))
        } else {
            Ok(())
        }
    };
    for n in 1..=3 {
        for (young, growth) in space_pairs() {
            let space = |v| SpaceSpec::new(v, young.clone(), growth.clone(), n);
            let nakai = space(Variant::Nakai).map_err(|e| e.to_string())?;
            let sst = space(Variant::Sst).map_err(|e| e.to_string())?;
            let weak_nakai = space(Variant::WeakNakai).map_err(|e| e.to_string())?;
            let weak_sst = space(Variant::WeakSst).map_err(|e| e.to_string())?;
            for &r0 in &levels {
                let chi = SimpleRadialFunction::characteristic(vec![0.0; n], r0).unwrap();
                let tag = |v: &str| format!("{v} n={n} {young}/{growth} r0={r0}");
                for &r in &levels {
                    let ball = Ball::centered_at_origin(n, r).unwrap();
                    let at = |v: &str| format!("{} r={r}", tag(v));
                    for method in [Method::Bisection, Method::Analytic] {
                        compare(
                            &at("nakai"),
                            nakai_local_with(&chi, &growth, &young, &ball, method).unwrap(),
                            char_local_closed(&nakai, r, r0).unwrap(),
                        )?;
                        compare(
                            &at("sst"),
                            luxemburg_local_with(&chi, &young, &ball, method).unwrap(),
                            char_local_closed(&sst, r, r0).unwrap(),
                        )?;
                        compare(
                            &at("weak-nakai"),
                            weak_local_with(&chi, &weak_nakai, &ball, method).unwrap(),
                            char_local_closed(&weak_nakai, r, r0).unwrap(),
                        )?;
                        compare(
                            &at("weak-sst"),
                            weak_local_with(&chi, &weak_sst, &ball, method).unwrap(),
                            char_local_closed(&weak_sst, r, r0).unwrap(),
                        )?;
                    }
                }
                let radii = grid::merge_sorted(&levels, &grid::default_radii());
                for s in [&nakai, &sst, &weak_nakai, &weak_sst] {
                    let res = global_norm_with(&chi, s, &radii, Method::Bisection).unwrap();
                    compare(
                        &tag(s.variant().name()),
                        res.grid_value,
                        char_norm_closed(s, r0).unwrap(),
                    )?;
                }
            }
        }
    }
    if comparisons < 1000 {
        return Err(format!("only {comparisons} comparisons"));
    }
    within("characteristic oracles", start.elapsed(), 30)?;
    Ok(format!(
        "{comparisons} comparisons, worst relative gap {worst:.2e}, {:?}",
        start.elapsed()
    ))
}

fn weak_below_strong() -> Check {
    let start = Instant::now();
    let samples = random_samples(11, 200, 1).unwrap();
    let mut count = 0;
    for (young, growth) in space_pairs() {
        for (strong, weak) in [
            (Variant::Nakai, Variant::WeakNakai),
            (Variant::Sst, Variant::WeakSst),
        ] {
            let s = SpaceSpec::new(strong, young.clone(), growth.clone(), 1).unwrap();
            let w = SpaceSpec::new(weak, young.clone(), growth.clone(), 1).unwrap();
            for sample in &samples {
                let f = &sample.function;
                let radii = omlab::norms::radius_grid_for(f);
                let strong_norm = global_norm(f, &s, &radii).unwrap().value;
                let weak_norm = global_norm(f, &w, &radii).unwrap().value;
                if weak_norm > strong_norm + 1e-12 {
                    return Err(format!(
                        "{} {young}/{growth}: weak {weak_norm} > strong {strong_norm}",
                        sample.id
                    ));
                }
                count += 1;
            }
        }
    }
    within("weak <= strong", start.elapsed(), 30)?;
    Ok(format!(
        "{count} pairs of global norms, {:?}",
        start.elapsed()
    ))
}

fn sufficiency() -> Check {
    let start = Instant::now();
    let mut lines = Vec::new();
    for theorem in [TheoremId::Sst, TheoremId::WeakNakai, TheoremId::Nakai] {
        let fixture = builtin_fixture(theorem, 0).map_err(|e| e.to_string())?;
        let report = verify_sufficiency(&fixture).map_err(|e| e.to_string())?;
        let random = report
            .rows
            .iter()
            .filter(|r| r.sample_id.starts_with("rand-"))
            .count();
        if random != 20 {
            return Err(format!("{theorem}: {random} random samples"));
        }
        if !report.passed || report.measured_constant > report.proof_constant {
            return Err(format!(
                "{theorem}: passed={} measured {} vs proof {}",
                report.passed, report.measured_constant, report.proof_constant
            ));
        }
        lines.push(format!(
            "{theorem} {:.4}<={:.4}",
            report.measured_constant, report.proof_constant
        ));
    }
    within("sufficiency", start.elapsed(), 60)?;
    Ok(lines.join(", "))
}

fn necessity_round_trip() -> Check {
    let mut passed = Vec::new();
    for theorem in TheoremId::ALL {
        let fixture = builtin_fixture(theorem, 0).map_err(|e| e.to_string())?;
        let suff = verify_sufficiency(&fixture).map_err(|e| e.to_string())?;
        if !suff.passed {
            continue;
        }
        let c = suff.measured_constant;
        let nec = verify_necessity(&fixture, c).map_err(|e| e.to_string())?;
        if !nec.passed {
            return Err(format!("{theorem}: necessity fails with assumed C = {c}"));
        }
        if theorem.variant() == Variant::Sst || theorem.variant() == Variant::WeakSst {
            let (y1, y2) = (fixture.space1().young(), fixture.space2().young());
            let c1 = c * y1.inverse(1.0).unwrap() / y2.inverse(1.0).unwrap();
            if nec.proof_constant != c1 {
                return Err(format!("{theorem}: C1 {} vs {c1}", nec.proof_constant));
            }
        }
        passed.push(theorem.name());
    }
    let contra = contrapositive_fixture(0).map_err(|e| e.to_string())?;
    let (lo, hi) = (contra.radii()[0], *contra.radii().last().unwrap());
    if lo > 2f64.powi(-6) || hi < 2f64.powi(6) {
        return Err(format!("contrapositive grid [{lo}, {hi}] too narrow"));
    }
    let report = verify_necessity(&contra, 1.0).map_err(|e| e.to_string())?;
    if report.passed {
        return Err("contrapositive fixture passed necessity".into());
    }
    let first_fail = report.rows.iter().find(|r| !r.pass).unwrap();
    Ok(format!(
        "round trip ok for {}; contrapositive fails first at {}",
        passed.join(", "),
        first_fail.sample_id
    ))
}

/// Masses of the annuli of `f` over all of `R^n`, from the unit-ball recursion
/// `v_n = 2π v_{n-2} / n`.
fn full_masses(f: &SimpleRadialFunction) -> Vec<f64> {
    let n = f.dimension();
    let mut v = [1.0, 2.0];
    for k in 2..=n {
        v[k % 2] *= 2.0 * std::f64::consts::PI / k as f64;
    }
    let vn = v[n % 2];
    assert!(rel_gap(vn, unit_ball_volume(n)) < 1e-14);
    let mut prev = 0.0f64;
    f.breakpoints()
        .iter()
        .map(|&rho| {
            let m = vn * (rho.powi(n as i32) - prev.powi(n as i32));
            prev = rho;
            m
        })
        .collect()
}

/// `inf{b : Σ Φ(c_j/b) m_j ≤ 1}` by plain bisection in log scale.
fn orlicz_norm(f: &SimpleRadialFunction, phi: &YoungFunction) -> f64 {
    let masses = full_masses(f);
    let modular = |b: f64| -> f64 {
        f.values()
            .iter()
            .zip(&masses)
            .map(|(&c, &m)| {
                if c == 0.0 {
                    0.0
                } else {
                    phi.eval(c / b).unwrap() * m
                }
            })
            .sum()
    };
    if f.is_zero() {
        return 0.0;
    }
    let (mut lo, mut hi) = (1e-12f64, 1e12f64);
    for _ in 0..400 {
        let mid = (lo * hi).sqrt();
        if modular(mid) <= 1.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn power_reductions() -> Check {
    let mut worst = 0.0f64;
    let mut count = 0;
    let phi = g_power(1.0);
    for n in 1..=3 {
        let samples = random_samples(5 + n as u64, 30, n).unwrap();
        for young in [
            y_power(2.0),
            YoungFunction::sum(y_power(1.0), y_power(2.0)),
            YoungFunction::exp_minus_one(),
        ] {
            let space = SpaceSpec::new(Variant::Nakai, young.clone(), phi.clone(), n).unwrap();
            for s in &samples {
                let f = &s.function;
                let got = global_norm(f, &space, &omlab::norms::radius_grid_for(f))
                    .unwrap()
                    .value;
                let want = orlicz_norm(f, &young);
                let gap = rel_gap(got, want);
                worst = worst.max(gap);
                count += 1;
                if gap > 1e-9 {
                    return Err(format!("nakai n={n} {young} {}: {got} vs {want}", s.id));
                }
            }
        }
        for p in [1.0, 2.0, 3.0] {
            let psi = g_power(1.0 / p);
            let space = SpaceSpec::new(Variant::Sst, y_power(p), psi.clone(), n).unwrap();
            for s in &samples {
                let f = &s.function;
                let radii = omlab::norms::radius_grid_for(f);
                let got = global_norm(f, &space, &radii).unwrap().grid_value;
                let want = inclusion::morrey_power_norm(f, p, &psi, &radii).unwrap();
                let gap = rel_gap(got, want);
                worst = worst.max(gap);
                count += 1;
                if gap > 1e-9 {
                    return Err(format!("sst n={n} p={p} {}: {got} vs {want}", s.id));
                }
            }
        }
    }
    Ok(format!("{count} norms, worst relative gap {worst:.2e}"))
}

fn weak_cross_validation() -> Check {
    let samples = random_samples(23, 200, 1).unwrap();
    let mut worst = 0.0f64;
    let mut count = 0;
    for (young, growth) in space_pairs() {
        for v in [Variant::WeakNakai, Variant::WeakSst] {
            let space = SpaceSpec::new(v, young.clone(), growth.clone(), 1).unwrap();
            for s in &samples {
                for r in omlab::norms::radius_grid_for(&s.function) {
                    let ball = Ball::centered_at_origin(1, r).unwrap();
                    let a = weak_local_with(&s.function, &space, &ball, Method::Analytic).unwrap();
                    let b = weak_local_with(&s.function, &space, &ball, Method::Bisection).unwrap();
                    let gap = rel_gap(a, b);
                    worst = worst.max(gap);
                    count += 1;
                    if gap > 1e-9 {
                        return Err(format!("{v} {young} {} r={r}: {a} vs {b}", s.id));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{count} local weak norms, worst relative gap {worst:.2e}"
    ))
}

fn determinism() -> Check {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |tag: &str| -> Result<RunBytes, String> {
        let out = dir.path().join(tag);
        let output = Command::new(env!("CARGO_BIN_EXE_omlab"))
            .args(["verify", "--theorem", "all", "--seed", "0", "--out"])
            .arg(&out)
            .env_remove("OMLAB_DEFAULT_GRID")
            .output()
            .map_err(|e| e.to_string())?;
        if output.status.code() != Some(0) {
            return Err(format!(
                "exit {:?}: {}",
                output.status.code(),
                String::from_utf8_lossy(&output.stderr)
            ));
        }
        let read = |f: &str| std::fs::read(out.join(f)).map_err(|e| e.to_string());
        Ok((output.stdout, read("report.csv")?, read("summary.json")?))
    };
    let first = run("a")?;
    let second = run("b")?;
    if first != second {
        return Err("reports differ between runs".into());
    }
    within("determinism", start.elapsed(), 180)?;
    Ok(format!(
        "{} CSV bytes and {} JSON bytes identical across two runs, {:?}",
        first.1.len(),
        first.2.len(),
        start.elapsed()
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("1 generalized inverse", inverse_suite),
        ("2 characteristic-norm oracles", characteristic_oracles),
        ("3 weak <= strong", weak_below_strong),
        ("4 sufficiency with proof constants", sufficiency),
        ("5 necessity round trip", necessity_round_trip),
        ("6 power reductions", power_reductions),
        ("7 weak solver cross-validation", weak_cross_validation),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
