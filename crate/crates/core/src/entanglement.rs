//! Pairwise concurrences and global entanglement.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::{
    eig_complex_4, pair_matrix, reduced_density_single, singular_values_4, HermMatrix, PureState4,
};

/// Qubit pairs in panel order.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Spectrum values down to this are treated as rounding noise and clamped to 0.
pub const CLAMP_TOL: f64 = 1e-10;

/// Largest imaginary part tolerated in the spectrum of `ρρ̃`.
pub const SPECTRUM_IMAG_TOL: f64 = 1e-10;

/// Six pairwise concurrences with their squared sum and the global `Q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConcurrencePanel {
    pub pairs: [f64; 6],
    pub sum_sq: f64,
    pub q_global: f64,
}

impl ConcurrencePanel {
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        PAIRS.iter().position(|&p| p == (i, j)).map(|k| self.pairs[k])
    }

    /// `Q − Σ C_ij²`.
    pub fn residual_entanglement(&self) -> f64 {
        self.q_global - self.sum_sq
    }
}

/// σ_y ⊗ σ_y is real: anti-diagonal (−1, 1, 1, −1).
fn yy(k: usize) -> (usize, f64) {
    (3 - k, if k == 0 || k == 3 { -1.0 } else { 1.0 })
}

fn check_pair(i: usize, j: usize) -> Result<()> {
    if (1..=4).contains(&i) && (1..=4).contains(&j) && i < j {
        Ok(())
    } else {
        Err(Error::InvalidPair(i, j))
    }
}

/// Wootters concurrence of the two-qubit reduction to qubits `(i, j)`.
///
/// Writing the state as `Σ_c |v_c⟩|c⟩` over the complementary pair, the square
/// roots of the eigenvalues of `ρ(σy⊗σy)ρ*(σy⊗σy)` are the singular values of
/// `τ_cd = v_cᵀ(σy⊗σy)v_d`. Taking them from an SVD avoids square-rooting
/// eigenvalues that are zero up to rounding.
pub fn concurrence_pair(state: &PureState4, i: usize, j: usize) -> Result<f64> {
    check_pair(i, j)?;
    state.require_normalized()?;
    let m = pair_matrix(state, i, j);
    // (σy⊗σy)·M
    let ym: [[Complex64; 4]; 4] = std::array::from_fn(|r| {
        let (src, sign) = yy(r);
        m[src].map(|z| z * sign)
    });
    let tau: [[Complex64; 4]; 4] =
        std::array::from_fn(|c| std::array::from_fn(|d| (0..4).map(|r| m[r][c] * ym[r][d]).sum()));
    let sv = singular_values_4(&tau);
    Ok((sv[0] - sv[1] - sv[2] - sv[3]).max(0.0))
}

/// Concurrence of an arbitrary two-qubit density matrix from the spectrum of
/// `ρρ̃` via the general eigen-solver.
pub fn concurrence_from_density(rho: &HermMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    let rho_conj = rho.conj();
    let tilde = HermMatrix::from_data(
        4,
        (0..16)
            .map(|idx| {
                let (r, c) = (idx / 4, idx % 4);
                let (rs, s1) = yy(r);
                let (cs, s2) = yy(c);
                rho_conj.get(rs, cs) * (s1 * s2)
            })
            .collect(),
    );
    let product = rho.matmul(&tilde);
    let ev = eig_complex_4(&product.to_array4()?)?;
    let mut roots = [0.0; 4];
    for (k, lambda) in ev.iter().enumerate() {
        if lambda.im.abs() > SPECTRUM_IMAG_TOL {
            return Err(Error::ImaginaryResidue(lambda.im.abs()));
        }
        if lambda.re < -CLAMP_TOL {
            return Err(Error::Degenerate("negative eigenvalue in spin-flipped product"));
        }
        roots[k] = lambda.re.max(0.0).sqrt();
    }
    Ok((roots[0] - roots[1] - roots[2] - roots[3]).max(0.0))
}

/// Meyer-Wallach global entanglement `Q = 2(1 − ¼ Σ_k Tr ρ_k²)`.
pub fn global_q(state: &PureState4) -> Result<f64> {
    state.require_normalized()?;
    let mut purity = 0.0;
    for k in 1..=4 {
        let r = reduced_density_single(state, k)?;
        purity += r.data().iter().map(|z| z.norm_sqr()).sum::<f64>();
    }
    Ok((2.0 * (1.0 - purity / 4.0)).clamp(0.0, 1.0))
}

pub fn concurrence_panel(state: &PureState4) -> Result<ConcurrencePanel> {
    let mut pairs = [0.0; 6];
    for (slot, &(i, j)) in pairs.iter_mut().zip(PAIRS.iter()) {
        *slot = concurrence_pair(state, i, j)?.min(1.0);
    }
    Ok(ConcurrencePanel {
        pairs,
        sum_sq: pairs.iter().map(|c| c * c).sum(),
        q_global: global_q(state)?,
    })
}
