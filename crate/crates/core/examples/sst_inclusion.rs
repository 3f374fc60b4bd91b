//! Inclusion between two SST spaces, checked on a seeded sample corpus.

use omlab::inclusion::{builtin_fixture, verify_sufficiency, TheoremId};

fn main() -> omlab::Result<()> {
    let fixture = builtin_fixture(TheoremId::Sst, 0)?;
    println!(
        "space 1: {} / {}",
        fixture.space1().young(),
        fixture.space1().growth()
    );
    println!(
        "space 2: {} / {}",
        fixture.space2().young(),
        fixture.space2().growth()
    );
    for h in fixture.hypotheses() {
        println!(
            "hypothesis {:?}: holds={} C={:?}",
            h.kind, h.report.holds, h.report.witness_c
        );
    }

    let report = verify_sufficiency(&fixture)?;
    println!(
        "passed={} measured={:.6} proof constant={:.6} over {} samples",
        report.passed,
        report.measured_constant,
        report.proof_constant,
        report.rows.len()
    );
    for row in report.rows.iter().take(5) {
        println!(
            "  {:<12} {:.6} <= {:.6} * {:.6}",
            row.sample_id, row.lhs, row.bound, row.rhs
        );
    }
    Ok(())
}
