//! Mermin-Klyshko operators and the optimized `<F4>^2 + <F4'>^2`.
//!
//! Run with `cargo run --release --example bell`.

use fourqubit::bellopt::{
    bell_objective, classify_bell, mk_operators, optimize_bell, random_search_oracle, BellSettings, DEFAULT_TOL,
};
use fourqubit::families::{g_ag, ghz4, phi2};

fn main() -> fourqubit::Result<()> {
    let z = BellSettings::uniform([0.0, 0.0, 1.0])?;
    let (f, _) = mk_operators(&z)?;
    println!("all-z settings: F4 = 2 ZZZZ, F4[0][0] = {}", f.get(0, 0).re);

    let ghz = ghz4(0.5f64.sqrt())?.state;
    println!("all-z objective on GHZ: {}", bell_objective(&ghz, &z)?);

    let r = optimize_bell(&ghz, 32, 7, DEFAULT_TOL)?;
    println!(
        "GHZ optimum {:.9} (restart {} of {}, {} sweeps in total)",
        r.value, r.best_restart, r.restarts_used, r.iterations
    );
    for (k, pair) in r.settings.dirs().iter().enumerate() {
        println!("  qubit {}: a = {:+.4?}  a' = {:+.4?}", k + 1, pair[0], pair[1]);
    }
    println!("random search, 1e5 samples: {:.6}", random_search_oracle(&ghz, 100_000, 1)?);

    for (label, state) in [
        ("phi2(2,2)", phi2(2.0, 2.0)?),
        ("phi2(2,1e4)", phi2(2.0, 1e4)?),
        ("G_ag(0.1)", g_ag(0.1)?),
    ] {
        let v = optimize_bell(&state, 32, 7, DEFAULT_TOL)?.value;
        let flags = classify_bell(v);
        println!("{label:<12} {v:>10.6}  >8: {:<5}  >16: {}", flags.exceeds_8, flags.exceeds_16);
    }
    Ok(())
}
