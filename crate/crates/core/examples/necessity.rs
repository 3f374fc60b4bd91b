//! Necessity checks from characteristic functions, passing and failing.

use omlab::inclusion::{
    builtin_fixture, contrapositive_fixture, verify_necessity, verify_sufficiency, TheoremId,
};

fn main() -> omlab::Result<()> {
    for theorem in [TheoremId::Sst, TheoremId::WeakNakai, TheoremId::Nakai] {
        let fixture = builtin_fixture(theorem, 0)?;
        let c = verify_sufficiency(&fixture)?.measured_constant;
        let back = verify_necessity(&fixture, c)?;
        println!(
            "{}: assumed C={c:.6} necessity passed={}",
            theorem.name(),
            back.passed
        );
    }

    let fixture = contrapositive_fixture(0)?;
    let report = verify_necessity(&fixture, 1.0)?;
    println!("contrapositive: passed={}", report.passed);
    if let Some(row) = report.rows.iter().find(|r| !r.pass) {
        println!(
            "  first failure at {}: {:.6} > {:.6}",
            row.sample_id,
            row.lhs,
            row.bound * row.rhs
        );
    }
    Ok(())
}
