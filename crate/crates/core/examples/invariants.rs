//! Polynomial invariants of the three families.
//!
//! Run with `cargo run --example invariants`.

use fourqubit::families::{g_ag, ghz4, phi2};
use fourqubit::invariants::{all_invariants, pencil_quartic, quartic_st};
use fourqubit::PureState4;

fn show(label: &str, state: &PureState4) {
    let inv = all_invariants(state);
    println!("{label}");
    for (name, v, degree) in inv.entries() {
        println!("  {name:<6} (deg {degree:>2}) {:>+.12e}", v.re + 0.0);
    }
    println!("  L+M+N  {:+.1e}", (inv.l + inv.m + inv.n).norm());
}

fn main() -> fourqubit::Result<()> {
    show("GHZ(gamma=0.6): H = gamma*sqrt(1-gamma^2) = 0.48", &ghz4(0.6)?.state);
    show("phi2(J=2, Js=2): Dxt = -1/108, S = T = 0", &phi2(2.0, 2.0)?);
    show("G_ag(gamma=0.25): H = 1/2, Dxt = 1/256", &g_ag(0.25)?);

    // S and T are the apolar invariants of the binary quartic obtained from a
    // pencil of 2x2x2 slices
    let q = pencil_quartic(&g_ag(0.1)?);
    let (s, t) = quartic_st(&q);
    println!("pencil quartic of G_ag(0.1): {:?}", q.0.map(|c| format!("{:.6}", c.re)));
    println!("S^3 - 27 T^2 = {:+.6e}", (s * s * s - t * t * 27.0).re);
    Ok(())
}
