//! Growth functions against the G₁, G₂ and G_Θ classes.

use omlab::growth::{check_preceq_default, validate_g1, validate_g2, validate_gtheta};
use omlab::{grid, GrowthFunction, YoungFunction};

fn main() -> omlab::Result<()> {
    let t = grid::default_t_grid();
    let s = grid::default_s_grid();
    let quad = YoungFunction::power(2.0)?;

    for a in [0.25, 0.5, 0.75, 1.5] {
        let g = GrowthFunction::power(a)?;
        let g1 = validate_g1(&g, &t)?;
        let g2 = validate_g2(&g, &quad, 1, &t, &s)?;
        println!("power({a}): G1={} G2 with t^2={}", g1.member, g2.member);
        if let Some(v) = g2.violation {
            println!("  {v}");
        }
    }

    let theta = GrowthFunction::inv_power(0.5)?;
    let r = validate_gtheta(&theta, &quad, 1, &t, 1.0)?;
    println!("inv-power(0.5) in GTheta: {}", r.member);

    let capped = GrowthFunction::power_capped(0.5)?;
    let r = check_preceq_default(&capped, &GrowthFunction::power(0.5)?);
    println!(
        "min(t^0.5, 1) ⪯ t^0.5: holds={} C={:?}",
        r.holds, r.witness_c
    );
    Ok(())
}
