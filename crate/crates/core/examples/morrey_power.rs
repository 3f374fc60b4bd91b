//! Power Young functions: SST norms against direct Lᵖ integrals.

use omlab::inclusion::{morrey_power_crosscheck, morrey_power_norm, random_samples};
use omlab::norms::global_norm;
use omlab::{grid, GrowthFunction, SpaceSpec, Variant, YoungFunction};

fn main() -> omlab::Result<()> {
    let psi = GrowthFunction::power(0.25)?;
    let space = SpaceSpec::new(Variant::Sst, YoungFunction::power(2.0)?, psi.clone(), 1)?;
    let radii = grid::default_radii();
    let samples = random_samples(7, 4, 1)?;

    for s in &samples {
        let lux = global_norm(&s.function, &space, &radii)?.value;
        let direct = morrey_power_norm(&s.function, 2.0, &psi, &radii)?;
        println!("{}: luxemburg={lux:.12} integral={direct:.12}", s.id);
    }

    let report = morrey_power_crosscheck(1.5, 2.0, &psi, &psi, samples, radii)?;
    println!(
        "p=1.5 side bounded by p=2 side: passed={} measured={:.6}",
        report.passed, report.measured_constant
    );
    Ok(())
}
