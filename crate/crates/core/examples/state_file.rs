//! JSON state files: write, read back and analyze.
//!
//! Run with `cargo run --example state_file [path]`.

use fourqubit::entanglement::concurrence_panel;
use fourqubit::families::phi2;
use fourqubit::invariants::all_invariants;
use fourqubit::qcore::{read_state_file, write_state_file, StateFile};

fn main() -> fourqubit::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("phi2_state.json"));

    write_state_file(&path, &phi2(1.0, 3.0)?)?;
    println!("wrote {}", path.display());

    let state = read_state_file(&path)?;
    println!("H = {:.9}", all_invariants(&state).h.re);
    println!("sum C^2 = {:.9}", concurrence_panel(&state)?.sum_sq);

    // unnormalized amplitudes are accepted when flagged as such
    let raw = StateFile {
        amplitudes: (0..16).map(|i| [if i == 0 || i == 15 { 2.0 } else { 0.0 }, 0.0]).collect(),
        normalized: false,
    };
    let ghz = raw.into_state()?;
    println!("renormalized |0000>+|1111>: a0 = {:.6}", ghz.amp(0).re);
    Ok(())
}
