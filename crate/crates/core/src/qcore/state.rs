use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `Σ|a_i|² = 1` for states flagged as normalized.
pub const NORM_TOL: f64 = 1e-12;

/// Number of amplitudes of a 4-qubit state.
pub const DIM: usize = 16;

/// Index of the basis ket `|q1 q2 q3 q4⟩`. Qubit 1 is the most significant bit,
/// so `a₃ ↔ |0011⟩` and `a₈ ↔ |1000⟩`.
#[inline]
pub fn basis_index(bits: [usize; 4]) -> usize {
    8 * bits[0] + 4 * bits[1] + 2 * bits[2] + bits[3]
}

/// Bit of qubit `q` (1-based) in basis index `i`.
#[inline]
pub fn qubit_bit(i: usize, q: usize) -> usize {
    (i >> (4 - q)) & 1
}

/// A pure 4-qubit state stored as 16 complex amplitudes in the computational basis.
///
/// The amplitudes are not required to be normalized: polynomial invariants are
/// evaluated on raw amplitudes, and [`apply_local`](crate::qcore::apply_local)
/// deliberately leaves the norm alone. Measures that need a density matrix
/// check normalization themselves.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState4 {
    amps: [Complex64; DIM],
}

impl PureState4 {
    /// Builds a state from exactly 16 amplitudes, optionally rescaling to unit norm.
    pub fn from_amplitudes(amps: &[Complex64], renormalize: bool) -> Result<Self> {
        if amps.len() != DIM {
            return Err(Error::WrongLength(amps.len()));
        }
        if let Some(index) = amps.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        let mut state = PureState4 {
            amps: std::array::from_fn(|i| amps[i]),
        };
        if renormalize {
            state.normalize_in_place()?;
        }
        Ok(state)
    }

    pub fn from_real(amps: &[f64], renormalize: bool) -> Result<Self> {
        let c: Vec<Complex64> = amps.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_amplitudes(&c, renormalize)
    }

    /// Computational basis ket `|i⟩`.
    pub fn basis(index: usize) -> Self {
        assert!(index < DIM, "basis index out of range");
        let mut amps = [Complex64::new(0.0, 0.0); DIM];
        amps[index] = Complex64::new(1.0, 0.0);
        PureState4 { amps }
    }

    /// The all-zero vector. Not a physical state, but a valid input for the
    /// polynomial invariants.
    pub fn zero() -> Self {
        PureState4 {
            amps: [Complex64::new(0.0, 0.0); DIM],
        }
    }

    pub fn amplitudes(&self) -> &[Complex64; DIM] {
        &self.amps
    }

    #[inline]
    pub fn amp(&self, i: usize) -> Complex64 {
        self.amps[i]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORM_TOL
    }

    /// Errors with [`Error::NotNormalized`] unless the norm is 1 within [`NORM_TOL`].
    pub fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.norm_sqr()))
        }
    }

    /// Multiplies every amplitude by `t`.
    pub fn scaled(&self, t: Complex64) -> Self {
        PureState4 {
            amps: self.amps.map(|a| a * t),
        }
    }

    pub fn normalized(&self) -> Result<Self> {
        let mut s = self.clone();
        s.normalize_in_place()?;
        Ok(s)
    }

    fn normalize_in_place(&mut self) -> Result<()> {
        let n = self.norm_sqr().sqrt();
        if n == 0.0 {
            return Err(Error::ZeroNorm);
        }
        for a in self.amps.iter_mut() {
            *a /= n;
        }
        Ok(())
    }

    pub(crate) fn from_array(amps: [Complex64; DIM]) -> Self {
        PureState4 { amps }
    }
}

/// Free-function form of [`PureState4::from_amplitudes`].
pub fn state_from_amplitudes(amps: &[Complex64], renormalize: bool) -> Result<PureState4> {
    PureState4::from_amplitudes(amps, renormalize)
}

/// On-disk representation: `{"amplitudes": [[re, im], ...16], "normalized": bool}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub amplitudes: Vec<[f64; 2]>,
    pub normalized: bool,
}

impl StateFile {
    pub fn from_state(state: &PureState4) -> Self {
        StateFile {
            amplitudes: state.amps.iter().map(|a| [a.re, a.im]).collect(),
            normalized: state.is_normalized(),
        }
    }

    /// Validates the schema. A file claiming `"normalized": true` must have unit
    /// norm within [`NORM_TOL`]; otherwise the amplitudes are rescaled, and a
    /// zero vector is rejected.
    pub fn into_state(self) -> Result<PureState4> {
        if self.amplitudes.len() != DIM {
            return Err(Error::Schema(format!(
                "expected 16 amplitudes, got {}",
                self.amplitudes.len()
            )));
        }
        let amps: Vec<Complex64> = self
            .amplitudes
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        let state = PureState4::from_amplitudes(&amps, false)
            .map_err(|e| Error::Schema(e.to_string()))?;
        if state.norm_sqr() == 0.0 {
            return Err(Error::Schema("amplitude vector has zero norm".into()));
        }
        if self.normalized {
            if !state.is_normalized() {
                return Err(Error::Schema(format!(
                    "flagged normalized but norm² = {}",
                    state.norm_sqr()
                )));
            }
            Ok(state)
        } else {
            state.normalized().map_err(|e| Error::Schema(e.to_string()))
        }
    }
}

pub fn read_state_file(path: impl AsRef<Path>) -> Result<PureState4> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: StateFile =
        serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?;
    file.into_state()
}

pub fn write_state_file(path: impl AsRef<Path>, state: &PureState4) -> Result<()> {
    let path = path.as_ref();
    let text = serde_json::to_string_pretty(&StateFile::from_state(state))
        .expect("state file serialization is infallible");
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
