use super::eigen::sym_eigen3;

fn objective(q: &[[f64; 3]; 3], b: &[f64; 3], a: &[f64; 3]) -> f64 {
    let mut v = 0.0;
    for i in 0..3 {
        v += 2.0 * b[i] * a[i];
        for j in 0..3 {
            v += a[i] * q[i][j] * a[j];
        }
    }
    v
}

fn normalized(a: [f64; 3]) -> [f64; 3] {
    let n = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    a.map(|x| x / n)
}

/// Global maximizer of `aᵀQa + 2bᵀa` over the unit sphere in R³.
///
/// With `b = 0` the answer is the top eigenvector of `Q`. Otherwise the
/// stationarity condition `(λI − Q)a = b` with `λ ≥ λ_max(Q)` is solved for the
/// multiplier by safeguarded Newton on `1/‖a(λ)‖ − 1`. When `b` has no
/// component along the top eigenspace and `‖a(λ_max)‖ < 1`, the remainder is
/// filled in along the top eigenvector.
pub fn sphere_quadratic_max(q: &[[f64; 3]; 3], b: &[f64; 3]) -> ([f64; 3], f64) {
    let (w, e) = sym_eigen3(q);
    let bnorm = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
    let top = [e[0][0], e[1][0], e[2][0]];
    if bnorm == 0.0 {
        return (top, objective(q, b, &top));
    }
    let bt: [f64; 3] = std::array::from_fn(|k| (0..3).map(|i| e[i][k] * b[i]).sum());
    let gaps = w.map(|wi| w[0] - wi);
    let scale = w.iter().fold(bnorm, |m, x| m.max(x.abs()));
    let in_top = gaps.map(|g| g <= 1e-13 * scale);

    let from_coords = |coords: [f64; 3]| -> [f64; 3] {
        std::array::from_fn(|i| (0..3).map(|k| e[i][k] * coords[k]).sum())
    };

    // Hard case: b orthogonal to the top eigenspace.
    let top_weight: f64 = (0..3).filter(|&k| in_top[k]).map(|k| bt[k] * bt[k]).sum();
    if top_weight.sqrt() <= 1e-14 * bnorm {
        let mut coords = [0.0; 3];
        let mut rest = 0.0;
        for k in (0..3).filter(|&k| !in_top[k]) {
            coords[k] = bt[k] / gaps[k];
            rest += coords[k] * coords[k];
        }
        if rest <= 1.0 {
            coords[0] = (1.0 - rest).sqrt();
            let a = normalized(from_coords(coords));
            return (a, objective(q, b, &a));
        }
    }

    // ‖a(μ)‖ with μ = λ − λ_max > 0; decreasing in μ, ≤ 1 at μ = ‖b‖.
    let norm_at = |mu: f64| -> (f64, f64) {
        let mut n2 = 0.0;
        let mut dn2 = 0.0;
        for k in 0..3 {
            let d = mu + gaps[k];
            let t = bt[k] * bt[k] / (d * d);
            n2 += t;
            dn2 += -2.0 * t / d;
        }
        (n2.sqrt(), dn2)
    };
    let (mut lo, mut hi) = (0.0f64, bnorm);
    let mut mu = 0.5 * bnorm;
    for _ in 0..200 {
        let (n, dn2) = norm_at(mu);
        if (n - 1.0).abs() <= 1e-15 {
            break;
        }
        if n > 1.0 {
            lo = mu;
        } else {
            hi = mu;
        }
        // φ(μ) = 1/n − 1, φ'(μ) = −(dn²/dμ) / (2n³)
        let phi = 1.0 / n - 1.0;
        let dphi = -dn2 / (2.0 * n * n * n);
        let mut next = mu - phi / dphi;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - mu).abs() <= f64::EPSILON * mu.max(f64::MIN_POSITIVE) {
            mu = next;
            break;
        }
        mu = next;
    }
    let coords: [f64; 3] = std::array::from_fn(|k| bt[k] / (mu + gaps[k]));
    let a = normalized(from_coords(coords));
    (a, objective(q, b, &a))
}
