//! Hyperdeterminant test and the Li et al. GHZ-class conditions.
//!
//! Run with `cargo run --example classify`.

use fourqubit::families::{
    g_ag, ghz4, li_check_gag, li_check_ghz4, li_check_phi2, phi2, slocc_report, SLOCC_TOL,
};

fn main() -> fourqubit::Result<()> {
    let r = slocc_report(&ghz4(0.6)?.state, SLOCC_TOL);
    println!("GHZ(0.6): |Delta| = {:.1e}, |H| = {:.3}, li = {}", r.delta_abs, r.h_abs, li_check_ghz4(0.6));

    for (j, js) in [(2.0, 2.0), (2.0, 1e8), (1e-8, 2.0)] {
        let r = slocc_report(&phi2(j, js)?, SLOCC_TOL);
        println!(
            "phi2({j:e}, {js:e}): delta_nonzero = {}, h_nonzero = {}, li = {}",
            r.delta_nonzero,
            r.h_nonzero,
            li_check_phi2(j, js)?
        );
    }

    // Delta vanishes at 1/sqrt(24), 1/sqrt(8) and 1/sqrt(6); only 1/sqrt(8)
    // satisfies the GHZ-class equations
    for (label, g) in [
        ("0.2", 0.2),
        ("1/sqrt(24)", 1.0 / 24f64.sqrt()),
        ("1/sqrt(8)", 1.0 / 8f64.sqrt()),
        ("1/sqrt(6)", 1.0 / 6f64.sqrt()),
    ] {
        let r = slocc_report(&g_ag(g)?, SLOCC_TOL);
        println!(
            "G_ag({label:<10}): |Delta| = {:.3e}, delta_nonzero = {:<5}, li = {}",
            r.delta_abs,
            r.delta_nonzero,
            li_check_gag(g)
        );
    }
    Ok(())
}
