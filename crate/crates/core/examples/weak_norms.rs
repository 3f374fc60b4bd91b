//! Weak norms of a step function: per-level formula, bisection, and the strong norm.

use omlab::geometry::{distribution, Ball, SimpleRadialFunction};
use omlab::norms::{ball_quantity, weak_local_with, Method};
use omlab::{GrowthFunction, SpaceSpec, Variant, YoungFunction};

fn main() -> omlab::Result<()> {
    let f = SimpleRadialFunction::new(vec![0.0], vec![0.5, 1.0, 2.0], vec![4.0, 2.0, 1.0])?;
    let young = YoungFunction::power_log(1.5)?;
    let growth = GrowthFunction::power(0.5)?;
    let weak = SpaceSpec::new(Variant::WeakNakai, young.clone(), growth.clone(), 1)?;
    let strong = SpaceSpec::new(Variant::Nakai, young, growth, 1)?;

    for r in [0.5, 1.0, 2.0, 4.0] {
        let ball = Ball::centered_at_origin(1, r)?;
        let levels = weak_local_with(&f, &weak, &ball, Method::Analytic)?;
        let bisected = weak_local_with(&f, &weak, &ball, Method::Bisection)?;
        let s = ball_quantity(&f, &strong, &ball, Method::Analytic)?;
        println!("r={r}: weak={levels:.12} (bisection {bisected:.12}) strong={s:.12}");
    }

    let ball = Ball::centered_at_origin(1, 2.0)?;
    for s in [0.0, 1.0, 2.0, 4.0] {
        println!("|{{f > {s}}} ∩ B(0,2)| = {}", distribution(&f, &ball, s)?);
    }
    Ok(())
}
