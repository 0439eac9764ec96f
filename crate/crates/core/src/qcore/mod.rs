//! Pure 4-qubit states, local operations, reductions and the small dense
//! kernels shared by the rest of the crate.

mod eigen;
mod matrix;
mod ops;
mod sphere;
mod state;

pub use eigen::{eig_complex_4, singular_values_4, sym_eigen3, QR_ITERS_PER_DIM};
pub use matrix::{HermMatrix, LocalOp, HERM_TOL};
pub use ops::{
    apply_local, expectation, partial_trace_first, partial_trace_second, reduced_density,
    reduced_density_single, IMAG_TOL,
};
pub(crate) use ops::pair_matrix;
pub use sphere::sphere_quadratic_max;
pub use state::{
    basis_index, qubit_bit, read_state_file, state_from_amplitudes, write_state_file, PureState4,
    StateFile, DIM, NORM_TOL,
};

pub use num_complex::Complex64;
