//! Norms of characteristic functions: the ball sweep against the closed forms.

use omlab::geometry::SimpleRadialFunction;
use omlab::norms::{char_norm_closed, global_norm, radius_grid_for};
use omlab::{GrowthFunction, SpaceSpec, Variant, YoungFunction};

fn main() -> omlab::Result<()> {
    let young = YoungFunction::power(2.0)?;
    let growth = GrowthFunction::power(0.5)?;
    for variant in [
        Variant::Nakai,
        Variant::Sst,
        Variant::WeakNakai,
        Variant::WeakSst,
    ] {
        let space = SpaceSpec::new(variant, young.clone(), growth.clone(), 2)?;
        for r0 in [0.25, 1.0, 4.0] {
            let chi = SimpleRadialFunction::characteristic(vec![0.0, 0.0], r0)?;
            let swept = global_norm(&chi, &space, &radius_grid_for(&chi))?;
            let closed = char_norm_closed(&space, r0)?;
            println!(
                "{:>10} r0={r0:<5} sweep={:.12} closed={:.12} exact={}",
                variant.name(),
                swept.value,
                closed,
                swept.exact
            );
        }
    }
    Ok(())
}
