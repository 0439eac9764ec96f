use num_complex::Complex64;

use super::matrix::{HermMatrix, LocalOp};
use super::state::{qubit_bit, PureState4, DIM};
use crate::error::{Error, Result};

/// Imaginary parts of expectation values above this are reported as errors.
pub const IMAG_TOL: f64 = 1e-10;

/// Applies `ops[0] ⊗ ops[1] ⊗ ops[2] ⊗ ops[3]` to the state. The result is not
/// renormalized.
pub fn apply_local(state: &PureState4, ops: &[LocalOp; 4]) -> PureState4 {
    let mut amps = *state.amplitudes();
    for (q, op) in ops.iter().enumerate() {
        let stride = 1 << (3 - q);
        let m = &op.0;
        for i in 0..DIM {
            if i & stride != 0 {
                continue;
            }
            let (a0, a1) = (amps[i], amps[i | stride]);
            amps[i] = m[0][0] * a0 + m[0][1] * a1;
            amps[i | stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
    PureState4::from_array(amps)
}

fn check_qubit(q: usize) -> Result<()> {
    if (1..=4).contains(&q) {
        Ok(())
    } else {
        Err(Error::InvalidQubit(q))
    }
}

/// The 4×4 matrix `M[(q_i q_j), (q_k q_l)]` of amplitudes with the pair on rows
/// and the complementary pair (in increasing qubit order) on columns.
pub(crate) fn pair_matrix(state: &PureState4, i: usize, j: usize) -> [[Complex64; 4]; 4] {
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    let rest: Vec<usize> = (1..=4).filter(|&q| q != i && q != j).collect();
    for (idx, &a) in state.amplitudes().iter().enumerate() {
        let r = 2 * qubit_bit(idx, i) + qubit_bit(idx, j);
        let c = 2 * qubit_bit(idx, rest[0]) + qubit_bit(idx, rest[1]);
        m[r][c] = a;
    }
    m
}

/// Reduced density matrix of qubits `(i, j)`, `1 ≤ i < j ≤ 4`. Row index is
/// `2·q_i + q_j`.
pub fn reduced_density(state: &PureState4, pair: (usize, usize)) -> Result<HermMatrix> {
    let (i, j) = pair;
    if !(1..=4).contains(&i) || !(1..=4).contains(&j) || i >= j {
        return Err(Error::InvalidPair(i, j));
    }
    let m = pair_matrix(state, i, j);
    let mut data = vec![Complex64::new(0.0, 0.0); 16];
    for r in 0..4 {
        for s in 0..4 {
            data[r * 4 + s] = (0..4).map(|c| m[r][c] * m[s][c].conj()).sum();
        }
    }
    Ok(HermMatrix::from_data(4, data))
}

/// Single-qubit reduced density matrix.
pub fn reduced_density_single(state: &PureState4, qubit: usize) -> Result<HermMatrix> {
    check_qubit(qubit)?;
    let stride = 1 << (4 - qubit);
    let a = state.amplitudes();
    let (mut r00, mut r01, mut r11) = (0.0, Complex64::new(0.0, 0.0), 0.0);
    for i in (0..DIM).filter(|i| i & stride == 0) {
        let (x, y) = (a[i], a[i | stride]);
        r00 += x.norm_sqr();
        r11 += y.norm_sqr();
        r01 += x * y.conj();
    }
    Ok(HermMatrix::from_data(
        2,
        vec![Complex64::new(r00, 0.0), r01, r01.conj(), Complex64::new(r11, 0.0)],
    ))
}

/// Traces the second qubit out of a two-qubit density matrix.
pub fn partial_trace_second(rho: &HermMatrix) -> HermMatrix {
    assert_eq!(rho.dim(), 4);
    let data = (0..2)
        .flat_map(|a| (0..2).map(move |b| (a, b)))
        .map(|(a, b)| rho.get(2 * a, 2 * b) + rho.get(2 * a + 1, 2 * b + 1))
        .collect();
    HermMatrix::from_data(2, data)
}

/// Traces the first qubit out of a two-qubit density matrix.
pub fn partial_trace_first(rho: &HermMatrix) -> HermMatrix {
    assert_eq!(rho.dim(), 4);
    let data = (0..2)
        .flat_map(|a| (0..2).map(move |b| (a, b)))
        .map(|(a, b)| rho.get(a, b) + rho.get(2 + a, 2 + b))
        .collect();
    HermMatrix::from_data(2, data)
}

/// `⟨ψ|op|ψ⟩` for a Hermitian 16×16 operator.
pub fn expectation(state: &PureState4, op: &HermMatrix) -> Result<f64> {
    if op.dim() != DIM {
        return Err(Error::DimensionMismatch {
            expected: DIM,
            got: op.dim(),
        });
    }
    if !op.is_hermitian() {
        return Err(Error::NotHermitian(op.hermitian_defect()));
    }
    let a = state.amplitudes();
    let data = op.data();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..DIM {
        let row = &data[i * DIM..(i + 1) * DIM];
        let s: Complex64 = row.iter().zip(a.iter()).map(|(m, x)| m * x).sum();
        acc += a[i].conj() * s;
    }
    if acc.im.abs() > IMAG_TOL {
        return Err(Error::ImaginaryResidue(acc.im.abs()));
    }
    Ok(acc.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn ghz(g: f64) -> PureState4 {
        let mut v = [0.0; 16];
        v[0] = g;
        v[15] = (1.0 - g * g).sqrt();
        PureState4::from_real(&v, false).unwrap()
    }

    fn pauli4(p: LocalOp) -> HermMatrix {
        let m = p.to_matrix();
        m.kron(&m).kron(&m).kron(&m)
    }

    /// Partial trace by summing over every index combination of the traced qubits.
    fn brute_pair(state: &PureState4, i: usize, j: usize) -> HermMatrix {
        let mut data = vec![Complex64::new(0.0, 0.0); 16];
        for x in 0..16 {
            for y in 0..16 {
                let same_rest = (1..=4)
                    .filter(|&q| q != i && q != j)
                    .all(|q| qubit_bit(x, q) == qubit_bit(y, q));
                if same_rest {
                    let r = 2 * qubit_bit(x, i) + qubit_bit(x, j);
                    let c = 2 * qubit_bit(y, i) + qubit_bit(y, j);
                    data[r * 4 + c] += state.amp(x) * state.amp(y).conj();
                }
            }
        }
        HermMatrix::from_data(4, data)
    }

    #[test]
    fn identity_ops_are_exact() {
        let s = ghz(0.6);
        let out = apply_local(&s, &[LocalOp::IDENTITY; 4]);
        assert_eq!(out, s);
    }

    #[test]
    fn bit_flip_on_first_qubit() {
        let ops = [LocalOp::PAULI_X, LocalOp::IDENTITY, LocalOp::IDENTITY, LocalOp::IDENTITY];
        let out = apply_local(&PureState4::basis(0), &ops);
        assert_eq!(out, PureState4::basis(8));
    }

    #[test]
    fn pair_reductions() {
        let r = reduced_density(&PureState4::basis(0), (1, 2)).unwrap();
        assert_eq!(r, HermMatrix::diag(&[1.0, 0.0, 0.0, 0.0]));
        let r = reduced_density(&ghz(FRAC_1_SQRT_2), (1, 2)).unwrap();
        assert!(r.max_abs_diff(&HermMatrix::diag(&[0.5, 0.0, 0.0, 0.5])) < 1e-15);
        assert!(matches!(reduced_density(&ghz(0.5), (2, 2)), Err(Error::InvalidPair(2, 2))));
        assert!(matches!(reduced_density(&ghz(0.5), (3, 1)), Err(Error::InvalidPair(3, 1))));
        assert!(matches!(reduced_density(&ghz(0.5), (0, 5)), Err(Error::InvalidPair(0, 5))));
    }

    #[test]
    fn pair_reduction_matches_brute_force() {
        // Heisenberg-chain eigenstate at J = Js = 2: β₁ = 1/√12, β₂ = 1/√3.
        let (b1, b2) = (1.0 / 12f64.sqrt(), 1.0 / 3f64.sqrt());
        let mut v = [0.0; 16];
        v[3] = -b1;
        v[5] = -b2;
        v[6] = b1;
        v[9] = -b1;
        v[10] = b2;
        v[12] = b1;
        let s = PureState4::from_real(&v, false).unwrap();
        for (i, j) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            let r = reduced_density(&s, (i, j)).unwrap();
            assert!(r.max_abs_diff(&brute_pair(&s, i, j)) < 1e-15);
            assert!((r.trace().re - 1.0).abs() < 1e-12);
            assert!(r.is_hermitian());
        }
    }

    #[test]
    fn single_reductions() {
        let r = reduced_density_single(&PureState4::basis(0), 1).unwrap();
        assert_eq!(r, HermMatrix::diag(&[1.0, 0.0]));
        let r = reduced_density_single(&ghz(0.6), 1).unwrap();
        assert!(r.max_abs_diff(&HermMatrix::diag(&[0.36, 0.64])) < 1e-15);
        assert!(matches!(reduced_density_single(&ghz(0.6), 5), Err(Error::InvalidQubit(5))));
    }

    #[test]
    fn expectations() {
        let s = ghz(0.6);
        assert!((expectation(&s, &HermMatrix::identity(16)).unwrap() - 1.0).abs() < 1e-15);
        assert!((expectation(&s, &pauli4(LocalOp::PAULI_Z)).unwrap() - 1.0).abs() < 1e-15);
        let e = expectation(&ghz(FRAC_1_SQRT_2), &pauli4(LocalOp::PAULI_X)).unwrap();
        assert!((e - 1.0).abs() < 1e-15);

        let mut bad = vec![Complex64::new(0.0, 0.0); 256];
        bad[1] = Complex64::new(1.0, 0.0);
        let bad = HermMatrix::from_data(16, bad);
        assert!(matches!(expectation(&s, &bad), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn partial_traces_agree_with_single() {
        let mut v = [0.0; 16];
        for (i, x) in v.iter_mut().enumerate() {
            *x = (i as f64 * 0.37).sin();
        }
        let s = PureState4::from_real(&v, true).unwrap();
        for (i, j) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            let r = reduced_density(&s, (i, j)).unwrap();
            let ri = reduced_density_single(&s, i).unwrap();
            let rj = reduced_density_single(&s, j).unwrap();
            assert!(partial_trace_second(&r).max_abs_diff(&ri) < 1e-12);
            assert!(partial_trace_first(&r).max_abs_diff(&rj) < 1e-12);
        }
    }
}
