//! Entanglement measures for pure 4-qubit states.
//!
//! * [`invariants`]: the polynomial SLOCC invariants `H, L, M, N, D_xt, S, T`
//!   and the hyperdeterminant `Δ = S³ − 27T²`.
//! * [`entanglement`]: pairwise Wootters concurrences and the Meyer-Wallach
//!   global entanglement `Q`.
//! * [`bellopt`]: Mermin-Klyshko operators `F₄, F′₄` and a seeded
//!   block-coordinate maximizer of `⟨F₄⟩² + ⟨F′₄⟩²`.
//! * [`families`]: parameterized GHZ, Heisenberg-chain eigenstate and
//!   `G_αβγδ` states with their SLOCC class checks.
//! * [`sweep`]: parameter sweeps emitting one CSV row per grid point.
//!
//! Amplitudes are indexed `i = 8·q1 + 4·q2 + 2·q3 + q4`, i.e. qubit 1 is the
//! most significant bit of the ket label.

#![allow(clippy::needless_range_loop)]

pub mod bellopt;
pub mod cli;
pub mod entanglement;
pub mod error;
pub mod families;
pub mod invariants;
pub mod qcore;
pub mod sweep;

pub use error::{Error, Result};
pub use qcore::{Complex64, PureState4};
