//! Small dense eigen- and singular-value kernels.
//!
//! Everything here works on fixed tiny sizes (3×3 real, 4×4 complex), so the
//! algorithms are the textbook ones without blocking or balancing.

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Iteration cap per matrix dimension for the shifted QR sweep.
pub const QR_ITERS_PER_DIM: usize = 200;

/// Eigenvalues of a general complex 4×4 matrix, sorted by descending real part
/// (ties by descending imaginary part).
pub fn eig_complex_4(m: &[[Complex64; 4]; 4]) -> Result<[Complex64; 4]> {
    let mut h: Vec<Vec<Complex64>> = m.iter().map(|r| r.to_vec()).collect();
    if let Some(bad) = h.iter().flatten().find(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Degenerate(if bad.re.is_nan() {
            "NaN entry in eigenvalue input"
        } else {
            "infinite entry in eigenvalue input"
        }));
    }
    let vals = hessenberg_qr(&mut h)?;
    let mut out: [Complex64; 4] = std::array::from_fn(|i| vals[i]);
    out.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    Ok(out)
}

fn hessenberg_reduce(a: &mut [Vec<Complex64>]) {
    let n = a.len();
    for k in 0..n.saturating_sub(2) {
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| a[i][k]).collect();
        let xnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let phase = if v[0].norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            v[0] / v[0].norm()
        };
        v[0] += phase * xnorm;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // A ← (I − 2vv†) A
        for j in 0..n {
            let dot: Complex64 = (0..v.len()).map(|t| v[t].conj() * a[k + 1 + t][j]).sum();
            for t in 0..v.len() {
                a[k + 1 + t][j] -= v[t] * dot * 2.0;
            }
        }
        // A ← A (I − 2vv†)
        for row in a.iter_mut() {
            let dot: Complex64 = (0..v.len()).map(|t| row[k + 1 + t] * v[t]).sum();
            for t in 0..v.len() {
                row[k + 1 + t] -= dot * v[t].conj() * 2.0;
            }
        }
        for row in a.iter_mut().skip(k + 2) {
            row[k] = ZERO;
        }
    }
}

/// Givens pair `(c, s)` with real `c` such that `[[c, s], [-s̄, c]]·[a; b] = [r; 0]`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
    if r == 0.0 {
        return (1.0, ZERO);
    }
    if a.norm() == 0.0 {
        return (0.0, Complex64::new(1.0, 0.0));
    }
    let c = a.norm() / r;
    let s = (a / a.norm()) * b.conj() / r;
    (c, s)
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mean = (a + d) * 0.5;
    let (l1, l2) = (mean + disc, mean - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Single-shift complex QR iteration on the Hessenberg form. Deflation uses the
/// standard `|h[k][k-1]| ≤ ε(|h[k-1][k-1]| + |h[k][k]|)` test.
fn hessenberg_qr(h: &mut [Vec<Complex64>]) -> Result<Vec<Complex64>> {
    let n = h.len();
    hessenberg_reduce(h);
    let scale = h.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    let mut eig = vec![ZERO; n];
    if n == 0 {
        return Ok(eig);
    }
    let cap = QR_ITERS_PER_DIM * n;
    let mut iters = 0;
    let mut since_deflation = 0;
    let mut hi = n - 1;
    while hi > 0 {
        let mut l = hi;
        while l > 0 {
            let mut s = h[l - 1][l - 1].norm() + h[l][l].norm();
            if s == 0.0 {
                s = scale;
            }
            if h[l][l - 1].norm() <= f64::EPSILON * s {
                h[l][l - 1] = ZERO;
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig[hi] = h[hi][hi];
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        iters += 1;
        since_deflation += 1;
        if iters > cap {
            return Err(Error::NoConvergence(cap));
        }
        let mu = if since_deflation % 10 == 0 {
            // exceptional shift to break cycles
            h[hi][hi] + Complex64::new(0.75 * h[hi][hi - 1].norm(), 0.0)
        } else {
            wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        for k in l..=hi {
            h[k][k] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - l);
        for k in l..hi {
            let (c, s) = givens(h[k][k], h[k + 1][k]);
            for j in k..=hi {
                let (x, y) = (h[k][j], h[k + 1][j]);
                h[k][j] = x * c + s * y;
                h[k + 1][j] = -s.conj() * x + y * c;
            }
            rots.push((c, s));
        }
        for (offset, &(c, s)) in rots.iter().enumerate() {
            let k = l + offset;
            for row in h.iter_mut().take((k + 2).min(hi) + 1).skip(l) {
                let (x, y) = (row[k], row[k + 1]);
                row[k] = x * c + s.conj() * y;
                row[k + 1] = -s * x + y * c;
            }
        }
        for k in l..=hi {
            h[k][k] += mu;
        }
    }
    eig[0] = h[0][0];
    Ok(eig)
}

/// Singular values of a complex 4×4 matrix, descending, by one-sided (Hestenes)
/// Jacobi. Absolute accuracy is of order `ε‖A‖`, including for zero singular
/// values, which is what makes it preferable to square-rooting eigenvalues.
pub fn singular_values_4(m: &[[Complex64; 4]; 4]) -> [f64; 4] {
    // columns of m
    let mut cols: [[Complex64; 4]; 4] = std::array::from_fn(|j| std::array::from_fn(|i| m[i][j]));
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..3 {
            for q in p + 1..4 {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: Complex64 = (0..4).map(|i| cols[p][i].conj() * cols[q][i]).sum();
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..4 {
                    let x = cols[p][i];
                    let y = cols[q][i] * phase.conj();
                    cols[p][i] = x * c - y * s;
                    cols[q][i] = x * s + y * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: [f64; 4] =
        std::array::from_fn(|j| cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt());
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Eigen-decomposition of a real symmetric 3×3 matrix by cyclic Jacobi.
///
/// Returns eigenvalues in descending order and the matching eigenvectors as
/// columns (`vecs[i][k]` is component `i` of eigenvector `k`). Equal eigenvalues
/// keep their original coordinate order; each eigenvector is signed so its
/// first non-negligible component is positive.
pub fn sym_eigen3(q: &[[f64; 3]; 3]) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut a = *q;
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    for _sweep in 0..50 {
        let off = a[0][1].powi(2) + a[0][2].powi(2) + a[1][2].powi(2);
        let diag = a[0][0].powi(2) + a[1][1].powi(2) + a[2][2].powi(2);
        if off <= 1e-34 * diag.max(f64::MIN_POSITIVE) || off == 0.0 {
            break;
        }
        for (p, r) in [(0, 1), (0, 2), (1, 2)] {
            if a[p][r] == 0.0 {
                continue;
            }
            let theta = (a[r][r] - a[p][p]) / (2.0 * a[p][r]);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let t = if theta == 0.0 { 1.0 } else { t };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            for k in 0..3 {
                let (akp, akr) = (a[k][p], a[k][r]);
                a[k][p] = c * akp - s * akr;
                a[k][r] = s * akp + c * akr;
            }
            for k in 0..3 {
                let (apk, ark) = (a[p][k], a[r][k]);
                a[p][k] = c * apk - s * ark;
                a[r][k] = s * apk + c * ark;
            }
            for row in v.iter_mut() {
                let (vp, vr) = (row[p], row[r]);
                row[p] = c * vp - s * vr;
                row[r] = s * vp + c * vr;
            }
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let vals = order.map(|k| a[k][k]);
    let mut vecs = [[0.0; 3]; 3];
    for (col, &k) in order.iter().enumerate() {
        let mut e = [v[0][k], v[1][k], v[2][k]];
        if let Some(first) = e.iter().copied().find(|x| x.abs() > 1e-14) {
            if first < 0.0 {
                e = e.map(|x| -x);
            }
        }
        for i in 0..3 {
            vecs[i][col] = e[i];
        }
    }
    (vals, vecs)
}
