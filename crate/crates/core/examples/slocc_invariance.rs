//! Invariants under random SL(2,C) operators on every qubit.
//!
//! Run with `cargo run --example slocc_invariance`.

use fourqubit::invariants::all_invariants;
use fourqubit::qcore::{apply_local, LocalOp};
use fourqubit::{Complex64, PureState4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sl2(rng: &mut ChaCha8Rng) -> LocalOp {
    let mut z = || Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let op = LocalOp::new(z(), z(), z(), z());
    op.scale(op.det().sqrt().inv())
}

fn main() -> fourqubit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let amps: Vec<Complex64> = (0..16)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let psi = PureState4::from_amplitudes(&amps, true)?;
    let ops: [LocalOp; 4] = std::array::from_fn(|_| random_sl2(&mut rng));
    assert!(ops.iter().all(LocalOp::is_special));
    let moved = apply_local(&psi, &ops);
    println!("norm after SLOCC: {:.4} (not preserved)", moved.norm_sqr().sqrt());

    let before = all_invariants(&psi);
    let after = all_invariants(&moved);
    for ((name, a, _), (_, b, _)) in before.entries().iter().zip(after.entries()) {
        println!("{name:<6} {:>+.6e}{:>+.6e}i   rel. change {:.1e}", a.re, a.im, (b - a).norm() / a.norm());
    }
    Ok(())
}
