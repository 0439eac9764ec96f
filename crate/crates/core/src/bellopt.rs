//! Mermin-Klyshko Bell operators for four qubits and maximization of
//! `⟨F₄⟩² + ⟨F′₄⟩²` over measurement settings.
//!
//! The operators follow the recursion
//!
//! ```text
//! F₂  = (A′B + AB′) + (AB − A′B′)
//! F′₂ = (A′B + AB′) − (AB − A′B′)
//! F_N  = ½(D + D′)F_{N−1}  + ½(D − D′)F′_{N−1}
//! F′_N = ½(D + D′)F′_{N−1} + ½(D′ − D)F_{N−1}
//! ```
//!
//! with `A = a·σ`, `A′ = a′·σ` on qubit 1 and likewise for qubits 2, 3, 4.
//!
//! Every monomial of `F₄` contains exactly one observable per qubit, so both
//! expectations are affine in any single measurement direction. Fixing seven
//! directions turns the objective into a quadratic on the sphere for the
//! eighth, which [`sphere_quadratic_max`] solves exactly. The optimizer cycles
//! through the eight directions from seeded random starts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qcore::{apply_local, expectation, sphere_quadratic_max, HermMatrix, LocalOp, PureState4};

/// Unit-norm tolerance for measurement directions.
pub const UNIT_TOL: f64 = 1e-12;
/// `⟨F₄⟩² + ⟨F′₄⟩²` threshold above which 3-qubit entanglement is certified.
pub const THRESHOLD_3QUBIT: f64 = 8.0;
/// Threshold above which genuine 4-qubit entanglement is certified.
pub const THRESHOLD_4QUBIT: f64 = 16.0;
/// Upper bound of the objective over all states and settings.
pub const OBJECTIVE_MAX: f64 = 32.0;

pub const DEFAULT_RESTARTS: usize = 32;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 500;
/// Restarts whose values differ by at most this are considered tied.
pub const TIE_TOL: f64 = 1e-12;

/// Measurement directions: `dirs[k][0]` is `a_k`, `dirs[k][1]` is `a′_k` for
/// qubit `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BellSettings {
    dirs: [[[f64; 3]; 2]; 4],
}

/// One of the eight measurement directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    /// Qubit, 1-based.
    pub qubit: usize,
    pub primed: bool,
}

impl Slot {
    pub fn all() -> [Slot; 8] {
        std::array::from_fn(|i| Slot {
            qubit: i / 2 + 1,
            primed: i % 2 == 1,
        })
    }
}

fn norm3(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn random_unit(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| StandardNormal.sample(rng));
        let n = norm3(&v);
        if n > 1e-12 {
            return v.map(|x| x / n);
        }
    }
}

impl BellSettings {
    pub fn new(dirs: [[[f64; 3]; 2]; 4]) -> Result<Self> {
        for v in dirs.iter().flatten() {
            let n = norm3(v);
            if (n - 1.0).abs() > UNIT_TOL || !n.is_finite() {
                return Err(Error::NotUnitVector(n));
            }
        }
        Ok(BellSettings { dirs })
    }

    /// Same direction for every slot.
    pub fn uniform(dir: [f64; 3]) -> Result<Self> {
        Self::new([[dir; 2]; 4])
    }

    /// Directions in the x-y plane at the given azimuths, `angles[k] = (φ_k, φ′_k)`.
    pub fn planar(angles: [(f64, f64); 4]) -> Self {
        let dir = |phi: f64| [phi.cos(), phi.sin(), 0.0];
        BellSettings {
            dirs: angles.map(|(p, q)| [dir(p), dir(q)]),
        }
    }

    pub fn random(rng: &mut ChaCha8Rng) -> Self {
        BellSettings {
            dirs: std::array::from_fn(|_| std::array::from_fn(|_| random_unit(rng))),
        }
    }

    pub fn dirs(&self) -> &[[[f64; 3]; 2]; 4] {
        &self.dirs
    }

    pub fn get(&self, slot: Slot) -> [f64; 3] {
        self.dirs[slot.qubit - 1][slot.primed as usize]
    }

    fn set(&mut self, slot: Slot, v: [f64; 3]) {
        self.dirs[slot.qubit - 1][slot.primed as usize] = v;
    }
}

/// Result of [`optimize_bell`].
#[derive(Clone, Debug, PartialEq)]
pub struct BellResult {
    pub value: f64,
    pub settings: BellSettings,
    pub restarts_used: usize,
    /// Full sweeps summed over all restarts.
    pub iterations: usize,
    /// Index of the restart that produced `value`.
    pub best_restart: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BellFlags {
    pub exceeds_8: bool,
    pub exceeds_16: bool,
}

/// Strict threshold comparisons `value > 8`, `value > 16`.
pub fn classify_bell(value: f64) -> BellFlags {
    BellFlags {
        exceeds_8: value > THRESHOLD_3QUBIT,
        exceeds_16: value > THRESHOLD_4QUBIT,
    }
}

/// Dense 16×16 operators `(F₄, F′₄)`, qubit 1 on the most significant index.
pub fn mk_operators(settings: &BellSettings) -> Result<(HermMatrix, HermMatrix)> {
    let settings = BellSettings::new(settings.dirs)?;
    let obs = |k: usize, p: usize| LocalOp::spin(settings.dirs[k][p]).to_matrix();
    let (a, ap) = (obs(0, 0), obs(0, 1));
    let (b, bp) = (obs(1, 0), obs(1, 1));
    let mixed = &ap.kron(&b) + &a.kron(&bp);
    let same = &a.kron(&b) - &ap.kron(&bp);
    let mut f = &mixed + &same;
    let mut fp = &mixed - &same;
    for k in 2..4 {
        let (d, dp) = (obs(k, 0), obs(k, 1));
        let plus = (&d + &dp).scale(0.5);
        let minus = (&d - &dp).scale(0.5);
        let next_f = &f.kron(&plus) + &fp.kron(&minus);
        let next_fp = &fp.kron(&plus) - &f.kron(&minus);
        f = next_f;
        fp = next_fp;
    }
    Ok((f, fp))
}

/// `⟨F₄⟩² + ⟨F′₄⟩²` evaluated with the dense operators.
pub fn bell_objective(state: &PureState4, settings: &BellSettings) -> Result<f64> {
    state.require_normalized()?;
    let (f, fp) = mk_operators(settings)?;
    let e = expectation(state, &f)?;
    let ep = expectation(state, &fp)?;
    Ok(e * e + ep * ep)
}

/// Expansion of `F₄` and `F′₄` over the 16 primed/unprimed choices.
///
/// Index `s = 8s₁ + 4s₂ + 2s₃ + s₄` with `s_k = 1` selecting `a′_k`. The
/// coefficient of `⊗_k (a_k^{(s_k)}·σ)` is `coeff[s]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MkExpansion {
    pub f: [f64; 16],
    pub f_prime: [f64; 16],
}

impl MkExpansion {
    /// Runs the recursion on coefficient tables instead of matrices.
    pub fn new() -> Self {
        // two-qubit tables indexed 2s₁ + s₂
        let mut f = vec![1.0, 1.0, 1.0, -1.0]; // AB, AB′, A′B, −A′B′
        let mut fp = vec![-1.0, 1.0, 1.0, 1.0];
        for _ in 2..4 {
            let n = f.len();
            let mut nf = vec![0.0; 2 * n];
            let mut nfp = vec![0.0; 2 * n];
            for s in 0..n {
                // D term (new bit 0), D′ term (new bit 1)
                nf[2 * s] += 0.5 * f[s] + 0.5 * fp[s];
                nf[2 * s + 1] += 0.5 * f[s] - 0.5 * fp[s];
                nfp[2 * s] += 0.5 * fp[s] - 0.5 * f[s];
                nfp[2 * s + 1] += 0.5 * fp[s] + 0.5 * f[s];
            }
            f = nf;
            fp = nfp;
        }
        MkExpansion {
            f: std::array::from_fn(|i| f[i]),
            f_prime: std::array::from_fn(|i| fp[i]),
        }
    }
}

impl Default for MkExpansion {
    fn default() -> Self {
        Self::new()
    }
}

/// The objective restricted to one state: the Pauli correlation tensor
/// `T_{ijkl} = ⟨σ_i ⊗ σ_j ⊗ σ_k ⊗ σ_l⟩` plus the operator expansion.
#[derive(Clone, Debug)]
pub struct BellLandscape {
    corr: [f64; 81],
    mk: MkExpansion,
}

const PAULIS: [LocalOp; 3] = [LocalOp::PAULI_X, LocalOp::PAULI_Y, LocalOp::PAULI_Z];

impl BellLandscape {
    pub fn new(state: &PureState4) -> Result<Self> {
        state.require_normalized()?;
        let mut corr = [0.0; 81];
        for (idx, slot) in corr.iter_mut().enumerate() {
            let ops = [idx / 27, (idx / 9) % 3, (idx / 3) % 3, idx % 3].map(|p| PAULIS[p]);
            let moved = apply_local(state, &ops);
            let v: num_complex::Complex64 = state
                .amplitudes()
                .iter()
                .zip(moved.amplitudes())
                .map(|(a, b)| a.conj() * b)
                .sum();
            if v.im.abs() > crate::qcore::IMAG_TOL {
                return Err(Error::ImaginaryResidue(v.im.abs()));
            }
            *slot = v.re;
        }
        Ok(BellLandscape {
            corr,
            mk: MkExpansion::new(),
        })
    }

    /// Contracts the tensor with `vecs` on every qubit except `free`, giving a
    /// 3-vector over the free index.
    fn contract_except(&self, vecs: [&[f64; 3]; 4], free: usize) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (idx, &t) in self.corr.iter().enumerate() {
            let ix = [idx / 27, (idx / 9) % 3, (idx / 3) % 3, idx % 3];
            let mut w = t;
            for q in 0..4 {
                if q != free {
                    w *= vecs[q][ix[q]];
                }
            }
            out[ix[free]] += w;
        }
        out
    }

    /// `(⟨F₄⟩, ⟨F′₄⟩)`.
    pub fn expectations(&self, settings: &BellSettings) -> (f64, f64) {
        let d = &settings.dirs;
        let (mut e, mut ep) = (0.0, 0.0);
        for s in 0..16 {
            let vecs = [
                &d[0][(s >> 3) & 1],
                &d[1][(s >> 2) & 1],
                &d[2][(s >> 1) & 1],
                &d[3][s & 1],
            ];
            let w = self.contract_except(vecs, 3);
            let val = w[0] * vecs[3][0] + w[1] * vecs[3][1] + w[2] * vecs[3][2];
            e += self.mk.f[s] * val;
            ep += self.mk.f_prime[s] * val;
        }
        (e, ep)
    }

    pub fn objective(&self, settings: &BellSettings) -> f64 {
        let (e, ep) = self.expectations(settings);
        e * e + ep * ep
    }

    /// Writes `⟨F⟩ = c + u·x` and `⟨F′⟩ = c′ + u′·x` as functions of the
    /// direction `x` in `slot`.
    pub fn affine_in(&self, settings: &BellSettings, slot: Slot) -> ((f64, [f64; 3]), (f64, [f64; 3])) {
        let k = slot.qubit - 1;
        let p = slot.primed as usize;
        let d = &settings.dirs;
        let other = d[k][1 - p];
        let (mut c, mut u, mut cp, mut up) = (0.0, [0.0; 3], 0.0, [0.0; 3]);
        // the 8 prime choices on the other three qubits
        for rest in 0..8usize {
            let mut bits = [0usize; 4];
            let mut r = rest;
            for q in (0..4).rev().filter(|&q| q != k) {
                bits[q] = r & 1;
                r >>= 1;
            }
            let vecs: [&[f64; 3]; 4] = std::array::from_fn(|q| &d[q][bits[q]]);
            let w = self.contract_except(vecs, k);
            let mut s_here = 0;
            let mut s_other = 0;
            for q in 0..4 {
                let bit_here = if q == k { p } else { bits[q] };
                let bit_other = if q == k { 1 - p } else { bits[q] };
                s_here |= bit_here << (3 - q);
                s_other |= bit_other << (3 - q);
            }
            let wo = w[0] * other[0] + w[1] * other[1] + w[2] * other[2];
            c += self.mk.f[s_other] * wo;
            cp += self.mk.f_prime[s_other] * wo;
            for i in 0..3 {
                u[i] += self.mk.f[s_here] * w[i];
                up[i] += self.mk.f_prime[s_here] * w[i];
            }
        }
        ((c, u), (cp, up))
    }

    /// Replaces the direction in `slot` with the exact maximizer of the
    /// objective over that direction. Returns the new settings and value; the
    /// old direction is kept if the solve does not improve on it.
    pub fn update(&self, settings: &BellSettings, slot: Slot) -> (BellSettings, f64) {
        let ((c, u), (cp, up)) = self.affine_in(settings, slot);
        let q: [[f64; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| u[i] * u[j] + up[i] * up[j]));
        let b: [f64; 3] = std::array::from_fn(|i| c * u[i] + cp * up[i]);
        let (x, _) = sphere_quadratic_max(&q, &b);
        let current = self.objective(settings);
        let mut next = *settings;
        next.set(slot, x);
        let value = self.objective(&next);
        if value >= current {
            (next, value)
        } else {
            (*settings, current)
        }
    }

    /// One cyclic pass over all eight directions.
    pub fn sweep(&self, settings: &BellSettings) -> (BellSettings, f64) {
        let mut s = *settings;
        let mut v = self.objective(&s);
        for slot in Slot::all() {
            (s, v) = self.update(&s, slot);
        }
        (s, v)
    }

    /// Coordinate ascent from `start` until a sweep gains less than `tol` or
    /// `max_sweeps` is reached. Returns the settings, the value and the number
    /// of sweeps.
    pub fn ascend(&self, start: &BellSettings, tol: f64, max_sweeps: usize) -> (BellSettings, f64, usize) {
        let mut s = *start;
        let mut v = self.objective(&s);
        let mut sweeps = 0;
        while sweeps < max_sweeps {
            let (ns, nv) = self.sweep(&s);
            sweeps += 1;
            let gain = nv - v;
            s = ns;
            v = nv;
            if gain < tol {
                break;
            }
        }
        (s, v, sweeps)
    }
}

/// Exact block update of a single direction; see [`BellLandscape::update`].
pub fn coordinate_update(state: &PureState4, settings: &BellSettings, slot: Slot) -> Result<BellSettings> {
    if !(1..=4).contains(&slot.qubit) {
        return Err(Error::InvalidQubit(slot.qubit));
    }
    let land = BellLandscape::new(state)?;
    Ok(land.update(settings, slot).0)
}

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

/// Multi-start cyclic coordinate ascent. Restarts run in parallel; each draws
/// its starting settings from its own ChaCha stream, so the result depends
/// only on `(state, restarts, seed, tol)`.
pub fn optimize_bell(state: &PureState4, restarts: usize, seed: u64, tol: f64) -> Result<BellResult> {
    if restarts == 0 {
        return Err(Error::Degenerate("at least one restart is required"));
    }
    let land = BellLandscape::new(state)?;
    let runs: Vec<(BellSettings, f64, usize)> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = restart_rng(seed, r);
            let start = BellSettings::random(&mut rng);
            land.ascend(&start, tol, MAX_SWEEPS)
        })
        .collect();
    let iterations = runs.iter().map(|r| r.2).sum();
    let mut best = 0;
    for (r, run) in runs.iter().enumerate().skip(1) {
        if run.1 > runs[best].1 + TIE_TOL {
            best = r;
        }
    }
    Ok(BellResult {
        value: runs[best].1,
        settings: runs[best].0,
        restarts_used: restarts,
        iterations,
        best_restart: best,
        seed,
    })
}

/// Number of independent search chains used by [`random_search_oracle`].
pub const ORACLE_CHAINS: usize = 8;

/// Seeded random search over settings, evaluated with the dense operators.
///
/// The budget is split over [`ORACLE_CHAINS`] chains. Each chain starts from a
/// uniformly random setting and proposes either a fresh uniform setting (one
/// draw in ten) or a Gaussian perturbation of its incumbent on every
/// direction, with a step size that grows on success and shrinks on failure.
/// Every evaluated point is feasible, so the returned value is a lower bound
/// on the true maximum.
pub fn random_search_oracle(state: &PureState4, samples: usize, seed: u64) -> Result<f64> {
    state.require_normalized()?;
    if samples == 0 {
        return Ok(0.0);
    }
    let chains = ORACLE_CHAINS.min(samples);
    let per_chain: Vec<usize> = (0..chains)
        .map(|c| samples / chains + usize::from(c < samples % chains))
        .collect();
    let best: Vec<Result<f64>> = per_chain
        .into_par_iter()
        .enumerate()
        .map(|(chain, budget)| {
            let mut rng = restart_rng(seed ^ 0x6f72_6163_6c65, chain);
            let mut cur = BellSettings::random(&mut rng);
            let mut cur_val = bell_objective(state, &cur)?;
            let mut best = cur_val;
            let mut step: f64 = 0.5;
            for _ in 1..budget {
                let cand = if rng.random_bool(0.1) {
                    BellSettings::random(&mut rng)
                } else {
                    let mut d = cur.dirs;
                    for v in d.iter_mut().flatten() {
                        let moved: [f64; 3] =
                            std::array::from_fn(|i| v[i] + step * Distribution::<f64>::sample(&StandardNormal, &mut rng));
                        let n = norm3(&moved);
                        if n > 1e-12 {
                            *v = moved.map(|x| x / n);
                        }
                    }
                    BellSettings { dirs: d }
                };
                let val = bell_objective(state, &cand)?;
                if val > cur_val {
                    cur = cand;
                    cur_val = val;
                    step = (step * 1.3).min(1.0);
                } else {
                    step = (step * 0.97).max(1e-4);
                }
                best = best.max(val);
            }
            Ok(best)
        })
        .collect();
    let mut out = f64::NEG_INFINITY;
    for b in best {
        out = out.max(b?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    const Z: [f64; 3] = [0.0, 0.0, 1.0];

    fn ghz(g: f64) -> PureState4 {
        let mut v = [0.0; 16];
        v[0] = g;
        v[15] = (1.0 - g * g).sqrt();
        PureState4::from_real(&v, true).unwrap()
    }

    fn phi2_22() -> PureState4 {
        let (b1, b2) = (1.0 / 12f64.sqrt(), 1.0 / 3f64.sqrt());
        let mut v = [0.0; 16];
        for (i, x) in [(3, -b1), (5, -b2), (6, b1), (9, -b1), (10, b2), (12, b1)] {
            v[i] = x;
        }
        PureState4::from_real(&v, true).unwrap()
    }

    #[test]
    fn all_z_collapses_to_parity() {
        let s = BellSettings::uniform(Z).unwrap();
        let (f, fp) = mk_operators(&s).unwrap();
        let z = LocalOp::PAULI_Z.to_matrix();
        let zzzz = z.kron(&z).kron(&z).kron(&z).scale(2.0);
        assert!(f.max_abs_diff(&zzzz) < 1e-15);
        assert!(fp.max_abs_diff(&zzzz) < 1e-15);
        assert!((bell_objective(&ghz(0.3), &s).unwrap() - 8.0).abs() < 1e-12);
        assert!((bell_objective(&PureState4::basis(0), &s).unwrap() - 8.0).abs() < 1e-12);
        assert!((bell_objective(&ghz(FRAC_1_SQRT_2), &s).unwrap() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn operators_are_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let (f, fp) = mk_operators(&BellSettings::random(&mut rng)).unwrap();
            assert!(f.hermitian_defect() <= 1e-12 && fp.hermitian_defect() <= 1e-12);
        }
    }

    #[test]
    fn non_unit_directions_are_rejected() {
        assert!(matches!(
            BellSettings::uniform([0.0, 0.0, 1.1]),
            Err(Error::NotUnitVector(_))
        ));
    }

    #[test]
    fn landscape_matches_dense_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for state in [ghz(0.6), phi2_22(), PureState4::basis(5)] {
            let land = BellLandscape::new(&state).unwrap();
            for _ in 0..20 {
                let s = BellSettings::random(&mut rng);
                let dense = bell_objective(&state, &s).unwrap();
                assert!((land.objective(&s) - dense).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn expansion_matches_dense_operators() {
        // Evaluate both operators on product settings where each slot is a
        // different Pauli axis; the dense matrices must equal the expansion.
        let mk = MkExpansion::new();
        let s = BellSettings::planar([(0.1, 1.2), (0.7, -0.4), (2.0, 0.3), (-1.1, 0.9)]);
        let (f, _) = mk_operators(&s).unwrap();
        let mut acc = HermMatrix::zeros(16);
        for idx in 0..16usize {
            let mut term = HermMatrix::identity(1);
            for q in 0..4 {
                let bit = (idx >> (3 - q)) & 1;
                term = term.kron(&LocalOp::spin(s.dirs()[q][bit]).to_matrix());
            }
            acc = &acc + &term.scale(mk.f[idx]);
        }
        assert!(acc.max_abs_diff(&f) < 1e-14);
    }

    #[test]
    fn affine_decomposition_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let land = BellLandscape::new(&phi2_22()).unwrap();
        let s = BellSettings::random(&mut rng);
        for slot in Slot::all() {
            let ((c, u), (cp, up)) = land.affine_in(&s, slot);
            let x = random_unit(&mut rng);
            let mut t = s;
            t.set(slot, x);
            let (e, ep) = land.expectations(&t);
            assert!((e - (c + u[0] * x[0] + u[1] * x[1] + u[2] * x[2])).abs() < 1e-12);
            assert!((ep - (cp + up[0] * x[0] + up[1] * x[1] + up[2] * x[2])).abs() < 1e-12);
        }
    }

    #[test]
    fn update_never_decreases() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for state in [ghz(0.8), phi2_22()] {
            let land = BellLandscape::new(&state).unwrap();
            let mut s = BellSettings::random(&mut rng);
            let mut v = land.objective(&s);
            for _ in 0..10 {
                for slot in Slot::all() {
                    let (ns, nv) = land.update(&s, slot);
                    assert!(nv >= v - 1e-12);
                    s = ns;
                    v = nv;
                }
            }
            // a slot that was just solved is already optimal
            let slot = Slot::all()[3];
            let (solved, before) = land.update(&s, slot);
            let (_, again) = land.update(&solved, slot);
            assert!((again - before).abs() < 1e-12);
        }
    }

    #[test]
    fn public_coordinate_update() {
        let state = ghz(FRAC_1_SQRT_2);
        let s = BellSettings::planar([(0.0, 1.0); 4]);
        let before = bell_objective(&state, &s).unwrap();
        let slot = Slot { qubit: 2, primed: true };
        let after = coordinate_update(&state, &s, slot).unwrap();
        assert!(bell_objective(&state, &after).unwrap() >= before - 1e-12);
        assert!(coordinate_update(&state, &s, Slot { qubit: 5, primed: false }).is_err());
    }

    #[test]
    fn threshold_flags() {
        assert_eq!(classify_bell(8.0), BellFlags { exceeds_8: false, exceeds_16: false });
        assert_eq!(classify_bell(17.3), BellFlags { exceeds_8: true, exceeds_16: true });
        assert_eq!(classify_bell(12.0), BellFlags { exceeds_8: true, exceeds_16: false });
    }

    #[test]
    fn optimizer_basic_values() {
        let r = optimize_bell(&ghz(FRAC_1_SQRT_2), 8, 7, DEFAULT_TOL).unwrap();
        assert!((r.value - 32.0).abs() < 1e-6, "{}", r.value);
        let r = optimize_bell(&PureState4::basis(0), 8, 7, DEFAULT_TOL).unwrap();
        assert!((r.value - 8.0).abs() < 1e-6);
        assert!(optimize_bell(&ghz(0.5), 0, 1, DEFAULT_TOL).is_err());
    }

    #[test]
    fn ghz_starts_mostly_converge() {
        let land = BellLandscape::new(&ghz(0.5f64.sqrt())).unwrap();
        let converged = (0..100)
            .filter(|&r| {
                let start = BellSettings::random(&mut restart_rng(2024, r));
                let (_, v, sweeps) = land.ascend(&start, DEFAULT_TOL, 200);
                (v - 32.0).abs() < 1e-6 && sweeps <= 200
            })
            .count();
        assert!(converged >= 90, "{converged}/100");
    }

    #[test]
    fn optimizer_is_deterministic() {
        let a = optimize_bell(&phi2_22(), 6, 99, DEFAULT_TOL).unwrap();
        let b = optimize_bell(&phi2_22(), 6, 99, DEFAULT_TOL).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn oracle_bounds() {
        let v = random_search_oracle(&PureState4::basis(0), 100_000, 3).unwrap();
        assert!(v <= 8.0 + 1e-9);
        let opt = optimize_bell(&phi2_22(), 16, 1, DEFAULT_TOL).unwrap();
        let v = random_search_oracle(&phi2_22(), 10_000, 5).unwrap();
        assert!(v <= opt.value + 1e-6);
    }
}
