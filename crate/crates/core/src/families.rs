//! State families and their SLOCC class checks.
//!
//! * `GHZ(γ) = γ|0000⟩ + √(1−γ²)|1111⟩`
//! * `φ₂(J, J_s) = β₁(−|0011⟩ + |0110⟩ − |1001⟩ + |1100⟩) + β₂(−|0101⟩ + |1010⟩)`,
//!   an eigenstate of a 4-site Heisenberg ring with couplings `J`, `J_s`
//! * `G_αβγδ = α(|0000⟩+|1111⟩) + β(|0011⟩+|1100⟩) + γ(|0101⟩+|1010⟩) + δ(|0110⟩+|1001⟩)`
//! * `G_αγ`: `G_αβγδ` with `β = δ = γ` and `2α² + 6γ² = 1`

use std::fmt;

use crate::error::{Error, Result};
use crate::invariants::all_invariants;
use crate::qcore::PureState4;

/// Tolerance for exact-zero Li conditions.
pub const LI_TOL: f64 = 1e-12;
/// Looser tolerance for conditions that only hold in a parameter limit.
pub const LIMIT_TOL: f64 = 1e-4;
/// Default magnitude threshold for [`slocc_report`].
pub const SLOCC_TOL: f64 = 1e-12;
/// `φ₂` amplitudes must satisfy `4β₁² + 2β₂² = 1` to this before renormalizing.
pub const PHI2_NORM_TOL: f64 = 1e-9;
/// `G_αβγδ` parameters within this of `2Σx² = 1` are accepted as normalized.
pub const GABGD_NORM_TOL: f64 = 1e-9;

/// Upper end of the `G_αγ` parameter range, `1/√6`.
pub fn gag_gamma_max() -> f64 {
    1.0 / 6f64.sqrt()
}

/// Non-fatal conditions raised by the generators.
#[derive(Clone, Debug, PartialEq)]
pub enum Warning {
    /// Parameter at a range end where the state is a product state.
    ProductBoundary { name: &'static str, value: f64 },
    /// Parameters did not satisfy the normalization constraint; the state was rescaled.
    Renormalized { norm_sqr: f64 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::ProductBoundary { name, value } => {
                write!(f, "{name}={value} gives a product state")
            }
            Warning::Renormalized { norm_sqr } => {
                write!(f, "parameters had squared norm {norm_sqr}; state renormalized")
            }
        }
    }
}

/// A generated state with an optional warning.
#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub state: PureState4,
    pub warning: Option<Warning>,
}

impl Generated {
    fn clean(state: PureState4) -> Self {
        Generated { state, warning: None }
    }
}

/// Family and parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilyParams {
    Ghz4 { gamma: f64 },
    Phi2 { j: f64, js: f64 },
    Gag { gamma: f64 },
    Gabgd { a: f64, b: f64, c: f64, d: f64 },
}

impl FamilyParams {
    pub fn generate(&self) -> Result<Generated> {
        match *self {
            FamilyParams::Ghz4 { gamma } => ghz4(gamma),
            FamilyParams::Phi2 { j, js } => phi2(j, js).map(Generated::clean),
            FamilyParams::Gag { gamma } => g_ag(gamma).map(Generated::clean),
            FamilyParams::Gabgd { a, b, c, d } => g_abgd(a, b, c, d),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilyParams::Ghz4 { .. } => "ghz4",
            FamilyParams::Phi2 { .. } => "phi2",
            FamilyParams::Gag { .. } => "gag",
            FamilyParams::Gabgd { .. } => "gabgd",
        }
    }

    /// The Li et al. criteria for this family, if any are known.
    pub fn li_criterion(&self) -> Result<Option<(&'static str, bool)>> {
        Ok(match *self {
            FamilyParams::Ghz4 { gamma } => Some(("li_ghz4", li_check_ghz4(gamma))),
            FamilyParams::Phi2 { j, js } => Some(("li_phi2", li_check_phi2(j, js)?)),
            FamilyParams::Gag { gamma } => Some(("li_gag", li_check_gag(gamma))),
            FamilyParams::Gabgd { .. } => None,
        })
    }
}

/// `γ|0000⟩ + √(1−γ²)|1111⟩`. The ends `γ = 0, 1` are product states and
/// come with a warning.
pub fn ghz4(gamma: f64) -> Result<Generated> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            domain: "[0, 1]",
        });
    }
    let mut v = [0.0; 16];
    v[0] = gamma;
    v[15] = (1.0 - gamma * gamma).sqrt();
    let state = PureState4::from_real(&v, true)?;
    let warning = (gamma == 0.0 || gamma == 1.0).then_some(Warning::ProductBoundary {
        name: "gamma",
        value: gamma,
    });
    Ok(Generated { state, warning })
}

/// `(β₁, β₂)` of `φ₂` as given by the closed form, before any renormalization.
pub fn phi2_betas(j: f64, js: f64) -> Result<(f64, f64)> {
    if !(j > 0.0) || !j.is_finite() {
        return Err(Error::ParamOutOfRange {
            name: "J",
            value: j,
            domain: "(0, inf)",
        });
    }
    if !js.is_finite() {
        return Err(Error::ParamOutOfRange {
            name: "Js",
            value: js,
            domain: "[0, inf)",
        });
    }
    let delta = (9.0 * j * j - 4.0 * j * js + 4.0 * js * js).sqrt();
    if delta == 0.0 {
        return Err(Error::Degenerate("delta(J, Js) vanishes"));
    }
    let w = -j + 2.0 * js + delta;
    let base = 4.0 + w * w / (2.0 * j * j);
    Ok((1.0 / base.sqrt(), base.sqrt() * j / (2.0 * delta)))
}

/// Heisenberg-ring eigenstate `φ₂(J, J_s)`.
pub fn phi2(j: f64, js: f64) -> Result<PureState4> {
    let (b1, b2) = phi2_betas(j, js)?;
    let norm_sqr = 4.0 * b1 * b1 + 2.0 * b2 * b2;
    if (norm_sqr - 1.0).abs() > PHI2_NORM_TOL {
        return Err(Error::NotNormalized(norm_sqr));
    }
    let mut v = [0.0; 16];
    for (i, x) in [(3, -b1), (5, -b2), (6, b1), (9, -b1), (10, b2), (12, b1)] {
        v[i] = x;
    }
    PureState4::from_real(&v, true)
}

/// `G_αγ` for `γ ∈ [0, 1/√6]`.
pub fn g_ag(gamma: f64) -> Result<PureState4> {
    let max = gag_gamma_max();
    // one ulp of slack so that the computed 1/√6 itself is accepted
    if !(0.0..=max * (1.0 + f64::EPSILON)).contains(&gamma) {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            domain: "[0, 1/sqrt(6)]",
        });
    }
    let alpha = ((1.0 - 6.0 * gamma * gamma) / 2.0).max(0.0).sqrt();
    let mut v = [0.0; 16];
    v[0] = alpha;
    v[15] = alpha;
    for i in [3, 5, 6, 9, 10, 12] {
        v[i] = gamma;
    }
    PureState4::from_real(&v, true)
}

/// `G_αβγδ`. Parameters off the constraint `2(α²+β²+γ²+δ²) = 1` are
/// renormalized with a warning.
pub fn g_abgd(a: f64, b: f64, c: f64, d: f64) -> Result<Generated> {
    let mut v = [0.0; 16];
    for (i, x) in [(0, a), (15, a), (3, b), (12, b), (5, c), (10, c), (6, d), (9, d)] {
        v[i] = x;
    }
    let norm_sqr = 2.0 * (a * a + b * b + c * c + d * d);
    if norm_sqr == 0.0 {
        return Err(Error::ZeroNorm);
    }
    let state = PureState4::from_real(&v, true)?;
    let warning = ((norm_sqr - 1.0).abs() > GABGD_NORM_TOL).then_some(Warning::Renormalized { norm_sqr });
    Ok(Generated { state, warning })
}

/// Outcome of the invariant-based class tests.
#[derive(Clone, Debug, PartialEq)]
pub struct SloccReport {
    /// `|Δ| > tol`: the state lies in the generic (outermost) class.
    pub delta_nonzero: bool,
    pub delta_abs: f64,
    /// `|H| > tol`. This is only the inequality part of the GHZ-class
    /// conditions; `φ₂` has `H ≠ 0` without being GHZ-class.
    pub h_nonzero: bool,
    pub h_abs: f64,
    pub tol: f64,
    /// Family-specific criteria, e.g. `("li_gag", true)`.
    pub family_criteria: Vec<(&'static str, bool)>,
}

pub fn slocc_report(state: &PureState4, tol: f64) -> SloccReport {
    let inv = all_invariants(state);
    let delta_abs = inv.delta.norm();
    let h_abs = inv.h.norm();
    SloccReport {
        delta_nonzero: delta_abs > tol,
        delta_abs,
        h_nonzero: h_abs > tol,
        h_abs,
        tol,
        family_criteria: Vec::new(),
    }
}

/// GHZ-class condition `−γ√(1−γ²) ≠ 0`.
pub fn li_check_ghz4(gamma: f64) -> bool {
    (gamma * (1.0 - gamma * gamma).max(0.0).sqrt()).abs() > LI_TOL
}

/// `2β₁² + β₂² ≠ 0 ∧ −β₁⁴ = 0 ∧ β₁²β₂² = 0`.
pub fn li_check_phi2(j: f64, js: f64) -> Result<bool> {
    let (b1, b2) = phi2_betas(j, js)?;
    let (s1, s2) = (b1 * b1, b2 * b2);
    Ok((2.0 * s1 + s2).abs() > LI_TOL && (s1 * s1).abs() <= LI_TOL && (s1 * s2).abs() <= LI_TOL)
}

/// `−α² − 3γ² ≠ 0 ∧ α²γ² − γ⁴ = 0` with `α² = (1 − 6γ²)/2`.
pub fn li_check_gag(gamma: f64) -> bool {
    let a2 = (1.0 - 6.0 * gamma * gamma) / 2.0;
    let g2 = gamma * gamma;
    (-a2 - 3.0 * g2).abs() > LI_TOL && (a2 * g2 - g2 * g2).abs() <= LI_TOL
}
