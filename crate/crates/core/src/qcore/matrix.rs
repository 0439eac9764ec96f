use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hermiticity tolerance on `max|M − M†|`.
pub const HERM_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// A single-qubit operator, row-major `[[m00, m01], [m10, m11]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalOp(pub [[Complex64; 2]; 2]);

impl LocalOp {
    pub const IDENTITY: LocalOp = LocalOp([[ONE, ZERO], [ZERO, ONE]]);
    pub const PAULI_X: LocalOp = LocalOp([[ZERO, ONE], [ONE, ZERO]]);
    pub const PAULI_Y: LocalOp = LocalOp([[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]]);
    pub const PAULI_Z: LocalOp = LocalOp([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]]);

    pub fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        LocalOp([[m00, m01], [m10, m11]])
    }

    /// `n · σ` for a real 3-vector `n`.
    pub fn spin(n: [f64; 3]) -> Self {
        LocalOp([
            [Complex64::new(n[2], 0.0), Complex64::new(n[0], -n[1])],
            [Complex64::new(n[0], n[1]), Complex64::new(-n[2], 0.0)],
        ])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// True when `|det − 1| ≤ 1e-12`.
    pub fn is_special(&self) -> bool {
        (self.det() - ONE).norm() <= 1e-12
    }

    pub fn scale(&self, s: Complex64) -> Self {
        LocalOp(self.0.map(|r| r.map(|x| x * s)))
    }

    pub fn dagger(&self) -> Self {
        let m = &self.0;
        LocalOp([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn to_matrix(&self) -> HermMatrix {
        HermMatrix::from_data(2, self.0.iter().flatten().copied().collect())
    }
}

impl Mul for LocalOp {
    type Output = LocalOp;

    fn mul(self, rhs: LocalOp) -> LocalOp {
        let (a, b) = (&self.0, &rhs.0);
        LocalOp(std::array::from_fn(|i| {
            std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j])
        }))
    }
}

/// Dense square complex matrix carrying a Hermiticity flag.
///
/// The flag is computed at construction: it is set iff `max|M − M†| ≤ 1e-12`.
/// Houses reduced density matrices and the 16×16 Bell operators.
#[derive(Clone, Debug, PartialEq)]
pub struct HermMatrix {
    dim: usize,
    data: Vec<Complex64>,
    hermitian: bool,
}

impl HermMatrix {
    pub fn from_data(dim: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), dim * dim, "matrix data length mismatch");
        let mut m = HermMatrix {
            dim,
            data,
            hermitian: false,
        };
        m.hermitian = m.hermitian_defect() <= HERM_TOL;
        m
    }

    pub fn zeros(dim: usize) -> Self {
        HermMatrix {
            dim,
            data: vec![ZERO; dim * dim],
            hermitian: true,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * values.len() + i] = Complex64::new(v, 0.0);
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        HermMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
            hermitian: self.hermitian,
        }
    }

    /// `self ⊗ other`, with `self` on the more significant index.
    pub fn kron(&self, other: &HermMatrix) -> Self {
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let mut data = vec![ZERO; d * d];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a == ZERO {
                    continue;
                }
                for k in 0..m {
                    let row = (i * m + k) * d + j * m;
                    for l in 0..m {
                        data[row + l] = a * other.get(k, l);
                    }
                }
            }
        }
        HermMatrix {
            dim: d,
            data,
            hermitian: self.hermitian && other.hermitian,
        }
    }

    pub fn matmul(&self, other: &HermMatrix) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut data = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        HermMatrix::from_data(n, data)
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        HermMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x.conj()).collect(),
            hermitian: self.hermitian,
        }
    }

    pub fn max_abs_diff(&self, other: &HermMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Copies a 4×4 matrix into a fixed array for [`eig_complex_4`](super::eig_complex_4).
    pub fn to_array4(&self) -> Result<[[Complex64; 4]; 4]> {
        if self.dim != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: self.dim,
            });
        }
        Ok(std::array::from_fn(|i| std::array::from_fn(|j| self.get(i, j))))
    }

    fn zip_with(&self, other: &HermMatrix, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim, other.dim);
        HermMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
            hermitian: self.hermitian && other.hermitian,
        }
    }
}

impl Add for &HermMatrix {
    type Output = HermMatrix;

    fn add(self, rhs: &HermMatrix) -> HermMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &HermMatrix {
    type Output = HermMatrix;

    fn sub(self, rhs: &HermMatrix) -> HermMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}
