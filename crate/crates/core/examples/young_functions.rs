//! Young functions, their generalized inverses and the `≺` order.

use omlab::grid;
use omlab::young::{check_inverse_prec, check_prec_default, validate_young};
use omlab::YoungFunction;

fn main() -> omlab::Result<()> {
    let quad = YoungFunction::power(2.0)?;
    let ramp = YoungFunction::ramp(1.0)?;
    let mixed = YoungFunction::sum(YoungFunction::power(1.0)?, quad.clone());

    for phi in [&quad, &ramp, &mixed] {
        let ok = validate_young(phi, &grid::default_t_grid())?.passed;
        println!("{phi}: valid={ok}");
        for s in [0.0, 0.5, 4.0] {
            println!("  inverse({s}) = {}", phi.inverse(s)?);
        }
    }

    let exp = YoungFunction::exp_minus_one();
    let lin = YoungFunction::power(1.0)?;
    let r = check_prec_default(&lin, &exp);
    println!("t ≺ e^t - 1: holds={} C={:?}", r.holds, r.witness_c);
    let r = check_prec_default(&exp, &lin);
    println!(
        "e^t - 1 ≺ t: holds={} counterexample t={:?}",
        r.holds, r.counterexample_t
    );

    let r = check_inverse_prec(&exp, &lin, &grid::default_s_grid(), &grid::default_c_grid())?;
    println!("inverse order of e^t - 1 below t: holds={}", r.holds);
    Ok(())
}
