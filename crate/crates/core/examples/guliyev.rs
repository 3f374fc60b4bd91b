//! The Guliyev variant with a decreasing weight.

use omlab::geometry::SimpleRadialFunction;
use omlab::inclusion::{builtin_fixture, verify_sufficiency, TheoremId};
use omlab::norms::{char_norm_closed, guliyev_global};
use omlab::{grid, GrowthFunction, SpaceSpec, Variant, YoungFunction};

fn main() -> omlab::Result<()> {
    let theta = GrowthFunction::inv_power(0.5)?;
    let young = YoungFunction::power(2.0)?;
    let space = SpaceSpec::new(Variant::Guliyev, young.clone(), theta.clone(), 1)?;
    let radii = grid::default_radii();

    for r0 in [0.5, 1.0, 2.0] {
        let chi = SimpleRadialFunction::characteristic(vec![0.0], r0)?;
        let swept = guliyev_global(&chi, &theta, &young, &radii)?;
        println!(
            "r0={r0}: sweep={:.12} closed={:.12}",
            swept.value,
            char_norm_closed(&space, r0)?
        );
    }

    let report = verify_sufficiency(&builtin_fixture(TheoremId::Guliyev, 0)?)?;
    println!(
        "inclusion: passed={} measured={:.6} proof constant={:.6}",
        report.passed, report.measured_constant, report.proof_constant
    );
    Ok(())
}
