//! Amplitude layout, local operators and reduced density matrices.
//!
//! Run with `cargo run --example statevector`.

use fourqubit::qcore::{
    apply_local, basis_index, eig_complex_4, expectation, reduced_density, reduced_density_single, LocalOp,
};
use fourqubit::{Complex64, PureState4};

fn main() -> fourqubit::Result<()> {
    // |0110⟩ sits at index 8·0 + 4·1 + 2·1 + 0 = 6
    assert_eq!(basis_index([0, 1, 1, 0]), 6);

    let mut v = [0.0; 16];
    v[basis_index([0, 0, 0, 0])] = 1.0;
    v[basis_index([1, 1, 1, 1])] = 1.0;
    let ghz = PureState4::from_real(&v, true)?;

    // X on qubit 1 only
    let id = LocalOp::IDENTITY;
    let flipped = apply_local(&ghz, &[LocalOp::PAULI_X, id, id, id]);
    println!("X1 GHZ has weight on |1000>: {:.3}", flipped.amp(8).norm_sqr());

    let z = LocalOp::PAULI_Z.to_matrix();
    let zzzz = z.kron(&z).kron(&z).kron(&z);
    println!("<ZZZZ> on GHZ = {}", expectation(&ghz, &zzzz)?);

    let rho1 = reduced_density_single(&ghz, 1)?;
    println!("rho_1 diagonal = {:.3} {:.3}", rho1.get(0, 0).re, rho1.get(1, 1).re);

    let rho12 = reduced_density(&ghz, (1, 2))?;
    let spectrum = eig_complex_4(&rho12.to_array4()?)?;
    let shown: Vec<String> = spectrum.iter().map(|l: &Complex64| format!("{:.3}", l.re)).collect();
    println!("spectrum of rho_12 = [{}]", shown.join(", "));
    Ok(())
}
