//! Polynomial SLOCC invariants of a 4-qubit state.
//!
//! All invariants are polynomials in the raw amplitudes `a₀ … a₁₅` and are
//! evaluated without normalizing. Degrees: `H` 2, `L, M, N` 4, `D_xt` 6,
//! `S` 8, `T` 12, `Δ` 24.
//!
//! Conventions:
//!
//! * `H = a₀a₁₅ − a₁a₁₄ − a₂a₁₃ + a₃a₁₂ − a₄a₁₁ + a₅a₁₀ + a₆a₉ − a₇a₈`.
//! * `L`, `M`, `N` are determinants of the amplitude array reshaped as a 4×4
//!   matrix across the bipartitions (1,2|3,4), (1,3|2,4) and (1,4|2,3). The
//!   first pair labels rows (`2·q_i + q_j`), the complementary pair labels
//!   columns in increasing qubit order. `M` takes the opposite orientation
//!   (a negated determinant) so that `L + M + N = 0` holds identically.
//! * `S` and `T` are the apolar invariants of the binary quartic
//!   `q(x, y) = Det₃(x·A₀ + y·A₁)`, where `A_b` is the 2×2×2 slice of the
//!   amplitude tensor with qubit 1 fixed to `b` and `Det₃` is Cayley's
//!   hyperdeterminant. `T` carries the opposite sign of the classical `J`.
//! * `Δ = S³ − 27T²`.

use num_complex::Complex64;

use crate::qcore::{pair_matrix, PureState4};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Values of all invariants for one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantSet {
    pub h: Complex64,
    pub l: Complex64,
    pub m: Complex64,
    pub n: Complex64,
    pub dxt: Complex64,
    pub s: Complex64,
    pub t: Complex64,
    pub delta: Complex64,
}

impl InvariantSet {
    /// `(name, value, degree)` in the order H, L, M, N, Dxt, S, T, Delta.
    pub fn entries(&self) -> [(&'static str, Complex64, i32); 8] {
        [
            ("H", self.h, 2),
            ("L", self.l, 4),
            ("M", self.m, 4),
            ("N", self.n, 4),
            ("Dxt", self.dxt, 6),
            ("S", self.s, 8),
            ("T", self.t, 12),
            ("Delta", self.delta, 24),
        ]
    }
}

/// Coefficients of `q(x, y) = c₀x⁴ + c₁x³y + c₂x²y² + c₃xy³ + c₄y⁴`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuarticCoeffs(pub [Complex64; 5]);

impl QuarticCoeffs {
    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        let c = &self.0;
        let (x2, y2) = (x * x, y * y);
        c[0] * x2 * x2 + c[1] * x2 * x * y + c[2] * x2 * y2 + c[3] * x * y2 * y + c[4] * y2 * y2
    }
}

/// Degree-2 invariant.
pub fn inv_h(state: &PureState4) -> Complex64 {
    let a = state.amplitudes();
    a[0] * a[15] - a[1] * a[14] - a[2] * a[13] + a[3] * a[12] - a[4] * a[11] + a[5] * a[10]
        + a[6] * a[9]
        - a[7] * a[8]
}

fn det4(m: &[[Complex64; 4]; 4]) -> Complex64 {
    // Expansion by 2×2 minors of the top two rows against the bottom two.
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    minor(0, 1, 0, 1) * minor(2, 3, 2, 3) - minor(0, 1, 0, 2) * minor(2, 3, 1, 3)
        + minor(0, 1, 0, 3) * minor(2, 3, 1, 2)
        + minor(0, 1, 1, 2) * minor(2, 3, 0, 3)
        - minor(0, 1, 1, 3) * minor(2, 3, 0, 2)
        + minor(0, 1, 2, 3) * minor(2, 3, 0, 1)
}

/// The three degree-4 invariants `(L, M, N)`.
pub fn inv_lmn(state: &PureState4) -> (Complex64, Complex64, Complex64) {
    (
        det4(&pair_matrix(state, 1, 2)),
        -det4(&pair_matrix(state, 1, 3)),
        det4(&pair_matrix(state, 1, 4)),
    )
}

/// Degree-6 invariant `D_xt`, transcribed term by term.
#[rustfmt::skip]
pub fn inv_dxt(state: &PureState4) -> Complex64 {
    let [a0, a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14, a15] = *state.amplitudes();
    let p = a3 * a4 + a2 * a5 - a1 * a6 - a0 * a7;
    let w = -a1 * a14 - a0 * a15 + a13 * a2 + a12 * a3 + a11 * a4 + a10 * a5 - a7 * a8 - a6 * a9;
    (-a11 * a13 + a15 * a9)
        * (-p * (-a0 * a14 + a12 * a2 + a10 * a4 - a6 * a8)
            + (a2 * a4 - a0 * a6) * w)
        + (-a10 * a12 + a14 * a8)
            * (-(a3 * a5 - a1 * a7) * w
                + p * (-a1 * a15 + a13 * a3 + a11 * a5 - a7 * a9))
        - (-a11 * a12 - a10 * a13 + a15 * a8 + a14 * a9)
            * ((a3 * a5 - a1 * a7) * (a0 * a14 - a12 * a2 - a10 * a4 + a6 * a8)
                + (-a2 * a4 + a0 * a6) * (a1 * a15 - a13 * a3 - a11 * a5 + a7 * a9))
}

/// Cayley's hyperdeterminant of a 2×2×2 array `t[i][j][k]`.
#[rustfmt::skip]
pub fn cayley_det3(t: &[[[Complex64; 2]; 2]; 2]) -> Complex64 {
    let (t000, t001, t010, t011) = (t[0][0][0], t[0][0][1], t[0][1][0], t[0][1][1]);
    let (t100, t101, t110, t111) = (t[1][0][0], t[1][0][1], t[1][1][0], t[1][1][1]);
    let sq = |z: Complex64| z * z;
    sq(t000 * t111) + sq(t001 * t110) + sq(t010 * t101) + sq(t100 * t011)
        - (t000 * t001 * t110 * t111
            + t000 * t010 * t101 * t111
            + t000 * t100 * t011 * t111
            + t001 * t010 * t101 * t110
            + t001 * t100 * t011 * t110
            + t010 * t100 * t011 * t101) * 2.0
        + (t000 * t011 * t101 * t110 + t001 * t010 * t100 * t111) * 4.0
}

/// The slice pencil `x·A₀ + y·A₁` along qubit 1, as a 2×2×2 array over qubits 2, 3, 4.
fn pencil(state: &PureState4, x: Complex64, y: Complex64) -> [[[Complex64; 2]; 2]; 2] {
    let a = state.amplitudes();
    std::array::from_fn(|j| {
        std::array::from_fn(|k| std::array::from_fn(|l| a[4 * j + 2 * k + l] * x + a[8 + 4 * j + 2 * k + l] * y))
    })
}

/// Coefficients of `q(x, y) = Det₃(x·A₀ + y·A₁)`.
///
/// `q(1, t)` is sampled at the five fifth roots of unity; the Vandermonde
/// system on those nodes is inverted exactly by the inverse DFT, so the
/// extraction is perfectly conditioned.
pub fn pencil_quartic(state: &PureState4) -> QuarticCoeffs {
    let one = Complex64::new(1.0, 0.0);
    let nodes: [Complex64; 5] =
        std::array::from_fn(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 5.0));
    let samples = nodes.map(|t| cayley_det3(&pencil(state, one, t)));
    QuarticCoeffs(std::array::from_fn(|j| {
        let mut acc = ZERO;
        for (k, &v) in samples.iter().enumerate() {
            acc += v * nodes[(j * k) % 5].conj();
        }
        acc / 5.0
    }))
}

/// Apolar invariants `(S, T)` of a binary quartic.
pub fn quartic_st(q: &QuarticCoeffs) -> (Complex64, Complex64) {
    let [c0, c1, c2, c3, c4] = q.0;
    let s = c0 * c4 - c1 * c3 / 4.0 + c2 * c2 / 12.0;
    let j = c0 * c2 * c4 / 6.0 - c0 * c3 * c3 / 16.0 - c4 * c1 * c1 / 16.0 + c1 * c2 * c3 / 48.0
        - c2 * c2 * c2 / 216.0;
    (s, -j)
}

pub fn inv_delta(s: Complex64, t: Complex64) -> Complex64 {
    s * s * s - t * t * 27.0
}

pub fn all_invariants(state: &PureState4) -> InvariantSet {
    let (l, m, n) = inv_lmn(state);
    let (s, t) = quartic_st(&pencil_quartic(state));
    InvariantSet {
        h: inv_h(state),
        l,
        m,
        n,
        dxt: inv_dxt(state),
        s,
        t,
        delta: inv_delta(s, t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn real_state(pairs: &[(usize, f64)]) -> PureState4 {
        let mut v = [0.0; 16];
        for &(i, x) in pairs {
            v[i] = x;
        }
        PureState4::from_real(&v, false).unwrap()
    }

    fn ghz(g: f64) -> PureState4 {
        real_state(&[(0, g), (15, (1.0 - g * g).sqrt())])
    }

    fn phi2_22() -> PureState4 {
        let (b1, b2) = (1.0 / 12f64.sqrt(), 1.0 / 3f64.sqrt());
        real_state(&[(3, -b1), (5, -b2), (6, b1), (9, -b1), (10, b2), (12, b1)])
    }

    fn gag(g: f64) -> PureState4 {
        let a = ((1.0 - 6.0 * g * g) / 2.0).sqrt();
        real_state(&[(0, a), (15, a), (3, g), (5, g), (6, g), (9, g), (10, g), (12, g)])
    }

    fn close(z: Complex64, want: f64, tol: f64) -> bool {
        (z - c(want)).norm() <= tol
    }

    #[test]
    fn h_values() {
        assert!(close(inv_h(&ghz(0.6)), 0.48, 1e-15));
        assert!(close(inv_h(&gag(0.2)), 0.5, 1e-15));
        assert!(close(inv_h(&phi2_22()), -0.5, 1e-15));
    }

    #[test]
    fn lmn_values() {
        let (l, m, n) = inv_lmn(&ghz(0.3));
        assert!(close(l, 0.0, 1e-15) && close(m, 0.0, 1e-15) && close(n, 0.0, 1e-15));
        let (l, m, n) = inv_lmn(&phi2_22());
        assert!(close(l, -1.0 / 48.0, 1e-15));
        assert!(close(m, 0.0, 1e-15));
        assert!(close(n, 1.0 / 48.0, 1e-15));
        assert_eq!(inv_lmn(&PureState4::zero()), (ZERO, ZERO, ZERO));
    }

    #[test]
    fn dxt_values() {
        assert!(close(inv_dxt(&ghz(0.6)), 0.0, 1e-15));
        assert!(close(inv_dxt(&phi2_22()), -1.0 / 108.0, 1e-15));
        assert!(close(inv_dxt(&gag(0.25)), 1.0 / 256.0, 1e-15));
    }

    /// `Det₃ = d₁² − 4d₀d₂` with `det(A₀ + tA₁) = d₀ + d₁t + d₂t²`.
    fn cayley_by_discriminant(t: &[[[Complex64; 2]; 2]; 2]) -> Complex64 {
        let det2 = |m: [[Complex64; 2]; 2]| m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let a0 = t[0];
        let a1 = t[1];
        let d0 = det2(a0);
        let d2 = det2(a1);
        let d1 = a0[0][0] * a1[1][1] + a1[0][0] * a0[1][1] - a0[0][1] * a1[1][0] - a1[0][1] * a0[1][0];
        d1 * d1 - d0 * d2 * 4.0
    }

    #[test]
    fn cayley_basic_and_oracle() {
        let mut t = [[[ZERO; 2]; 2]; 2];
        assert_eq!(cayley_det3(&t), ZERO);
        t[0][0][0] = c(1.0);
        t[1][1][1] = c(1.0);
        assert_eq!(cayley_det3(&t), c(1.0));

        // Integer tensors: both routes are exact in f64.
        let mut seed = 17u64;
        for _ in 0..200 {
            let t: [[[Complex64; 2]; 2]; 2] = std::array::from_fn(|_| {
                std::array::from_fn(|_| {
                    std::array::from_fn(|_| {
                        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        c(((seed >> 33) % 11) as f64 - 5.0)
                    })
                })
            });
            assert_eq!(cayley_det3(&t), cayley_by_discriminant(&t));
        }
    }

    #[test]
    fn cayley_frozen_symbolic_value() {
        // t = [[[1,2],[3,4]],[[5,6],[7,-8]]]; expanded symbolically: -256.
        let v = [[[1.0, 2.0], [3.0, 4.0]], [[5.0, 6.0], [7.0, -8.0]]];
        let t = v.map(|p| p.map(|r| r.map(c)));
        assert_eq!(cayley_det3(&t), c(-256.0));
    }

    #[test]
    fn ghz_pencil_is_pure_x2y2() {
        for g in [0.2, 0.6, FRAC_1_SQRT_2] {
            let q = pencil_quartic(&ghz(g));
            let want = [0.0, 0.0, g * g * (1.0 - g * g), 0.0, 0.0];
            for (got, w) in q.0.iter().zip(want) {
                assert!(close(*got, w, 1e-15), "{got} vs {w}");
            }
        }
        assert!(pencil_quartic(&PureState4::zero()).0.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn pencil_reproduces_samples() {
        let s = real_state(&[(0, 0.3), (3, -0.2), (5, 0.7), (9, 0.1), (10, -0.4), (14, 0.25), (15, 0.2)]);
        let q = pencil_quartic(&s);
        for (x, y) in [(1.0, 0.0), (0.0, 1.0), (1.0, 2.0), (-0.5, 1.5), (3.0, -1.0)] {
            let direct = cayley_det3(&pencil(&s, c(x), c(y)));
            let via = q.eval(c(x), c(y));
            assert!((direct - via).norm() <= 1e-10 * direct.norm().max(1e-3));
        }
    }

    #[test]
    fn st_values() {
        let (s, t) = quartic_st(&pencil_quartic(&ghz(FRAC_1_SQRT_2)));
        assert!(close(s, 1.0 / 192.0, 1e-16));
        assert!(close(t, 1.0 / 13824.0, 1e-17));
        assert_eq!(quartic_st(&QuarticCoeffs([ZERO; 5])), (ZERO, ZERO));
        let (s, _) = quartic_st(&pencil_quartic(&phi2_22()));
        assert!(close(s, 0.0, 1e-16));
        let g: f64 = 0.2;
        let (s, _) = quartic_st(&pencil_quartic(&gag(g)));
        let want = 1.0 / 192.0 - g * g * (1.0 - 8.0 * g * g).powi(2) / 4.0;
        assert!(close(s, want, 1e-15));
    }

    #[test]
    fn delta_values() {
        let i = all_invariants(&ghz(0.37));
        assert!(close(i.delta, 0.0, 1e-20));
        let i = all_invariants(&gag(1.0 / 8f64.sqrt()));
        assert!(i.delta.norm() < 1e-20);
        let i = all_invariants(&gag(0.1));
        let g: f64 = 0.1;
        let closed = -1.0 / 512.0
            * (6.0 * g * g - 1.0)
            * (24.0 * g * g - 1.0).powi(2)
            * (8.0 * g.powi(3) - g).powi(6);
        assert!((closed - 6.430e-10).abs() < 1e-12);
        assert!(close(i.delta, closed, 1e-20));
        assert_eq!(inv_delta(c(2.0), c(1.0)), c(8.0 - 27.0));
    }

    #[test]
    fn aggregate_values() {
        let i = all_invariants(&ghz(0.6));
        assert!(close(i.h, 0.48, 1e-15));
        assert!(close(i.s, 0.6f64.powi(4) * 0.64f64.powi(2) / 12.0, 1e-16));
        assert!(close(i.dxt, 0.0, 1e-16) && close(i.delta, 0.0, 1e-18));

        let i = all_invariants(&phi2_22());
        assert!(close(i.h, -0.5, 1e-15));
        assert!(close(i.dxt, -1.0 / 108.0, 1e-15));
        assert!(close(i.s, 0.0, 1e-16) && close(i.t, 0.0, 1e-16) && close(i.delta, 0.0, 1e-20));

        let i = all_invariants(&PureState4::basis(0));
        assert!(i.entries().iter().all(|(_, v, _)| v.norm() == 0.0));
    }

    /// Exact values for an integer-amplitude state, frozen from a symbolic
    /// expansion of every invariant.
    #[test]
    fn frozen_integer_state() {
        let amps = [1.0, -2.0, 0.0, 3.0, 1.0, 1.0, -1.0, 2.0, 0.0, 1.0, 2.0, -3.0, 1.0, 0.0, -1.0, 2.0];
        let s = PureState4::from_real(&amps, false).unwrap();
        let i = all_invariants(&s);
        let q = pencil_quartic(&s);
        let frozen = include!("../tests/data/frozen_invariants.in");
        let (h, l, m, n, dxt, s_, t, delta, coeffs) = frozen;
        for (k, want) in coeffs.iter().enumerate() {
            assert!(close(q.0[k], *want, 1e-9), "c{k}: {} vs {want}", q.0[k]);
        }
        assert!(close(i.h, h, 0.0));
        assert!(close(i.l, l, 1e-12) && close(i.m, m, 1e-12) && close(i.n, n, 1e-12));
        assert!(close(i.dxt, dxt, 1e-9));
        assert!(close(i.s, s_, 1e-6 * s_.abs().max(1.0)));
        assert!(close(i.t, t, 1e-9 * t.abs().max(1.0)));
        assert!(close(i.delta, delta, 1e-9 * delta.abs().max(1.0)));
        assert!(close(i.l + i.m + i.n, 0.0, 1e-12));
    }
}
