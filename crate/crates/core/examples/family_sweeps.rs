//! CSV sweeps for three families: GHZ against gamma^2, phi2 against
//! J and Js, G_ag against gamma.
//!
//! Run with `cargo run --release --example family_sweeps [out_dir]`.

use std::fs::File;
use std::path::PathBuf;

use fourqubit::families::gag_gamma_max;
use fourqubit::sweep::{run_sweep, write_csv, Family, SweepSpec};

fn main() -> fourqubit::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("fourqubit_sweeps"));
    std::fs::create_dir_all(&dir).map_err(|source| fourqubit::Error::Io {
        path: dir.clone(),
        source,
    })?;

    let sweeps = [
        ("ghz_gamma2.csv", SweepSpec::new(Family::Ghz4, "gamma2", 0.02, 0.98, 49)),
        ("phi2_J.csv", SweepSpec::new(Family::Phi2, "J", 0.0, 8.0, 80).with_fixed("Js", 2.0)),
        ("phi2_Js.csv", SweepSpec::new(Family::Phi2, "Js", 0.0, 8.0, 81).with_fixed("J", 2.0)),
        ("gag_gamma.csv", SweepSpec::new(Family::Gag, "gamma", 0.0, gag_gamma_max(), 100)),
    ];
    for (name, mut spec) in sweeps {
        spec.normalize_s = true;
        spec.edge_boost = spec.family == Family::Ghz4;
        spec.seed = 1;
        let rows = run_sweep(&spec)?;
        let path = dir.join(name);
        let file = File::create(&path).map_err(|source| fourqubit::Error::Io {
            path: path.clone(),
            source,
        })?;
        write_csv(&rows, file)?;
        let best = rows.iter().map(|r| r.bell).fold(f64::NEG_INFINITY, f64::max);
        let above16 = rows.iter().filter(|r| r.exceeds_16).count();
        println!(
            "{name:<15} {} rows, max Bell {best:.4}, {above16} rows above 16 -> {}",
            rows.len(),
            path.display()
        );
    }
    Ok(())
}
