//! Pairwise concurrences, global entanglement and their residual.
//!
//! Run with `cargo run --example concurrence`.

use fourqubit::entanglement::{concurrence_from_density, concurrence_panel};
use fourqubit::families::{g_ag, gag_gamma_max, ghz4};
use fourqubit::qcore::reduced_density;

fn main() -> fourqubit::Result<()> {
    let p = concurrence_panel(&ghz4(0.6)?.state)?;
    println!("GHZ(0.6): C = {:?}, Q = {:.4}", p.pairs, p.q_global);

    // G_ag has six equal concurrences; the formula switches branch at 1/sqrt(8)
    println!("{:>8} {:>10} {:>10} {:>10}", "gamma", "C12", "sumC2", "Q-sumC2");
    for k in 0..=10 {
        let g = gag_gamma_max() * k as f64 / 10.0;
        let p = concurrence_panel(&g_ag(g)?)?;
        println!(
            "{g:>8.4} {:>10.6} {:>10.6} {:>10.6}",
            p.pairs[0],
            p.sum_sq,
            p.residual_entanglement()
        );
    }

    // the density-matrix route works for any two-qubit state
    let rho = reduced_density(&g_ag(0.2)?, (1, 2))?;
    println!("C12 of G_ag(0.2) from rho: {:.9}", concurrence_from_density(&rho)?);
    Ok(())
}
