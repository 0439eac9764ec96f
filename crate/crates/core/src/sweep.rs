//! One-parameter sweeps over a state family, one CSV row per grid point.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;

use crate::bellopt::{classify_bell, optimize_bell, DEFAULT_RESTARTS, DEFAULT_TOL};
use crate::entanglement::concurrence_panel;
use crate::error::{Error, Result};
use crate::families::{gag_gamma_max, FamilyParams};
use crate::invariants::{all_invariants, InvariantSet};

/// Column names, in order. `S_norm` is appended when S normalization is on.
pub const HEADER: [&str; 23] = [
    "param", "Q", "sumC2", "oneMinusSumC2", "H_re", "H_im", "L_re", "L_im", "M_re", "M_im", "N_re", "N_im",
    "Dxt_re", "Dxt_im", "S_re", "S_im", "T_re", "T_im", "Delta_re", "Delta_im", "bell", "gt8", "gt16",
];
pub const S_NORM_COLUMN: &str = "S_norm";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ghz4,
    Phi2,
    Gag,
    Gabgd,
}

impl Family {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "ghz4" => Ok(Family::Ghz4),
            "phi2" => Ok(Family::Phi2),
            "gag" => Ok(Family::Gag),
            "gabgd" => Ok(Family::Gabgd),
            other => Err(Error::Spec(format!("unknown family '{other}'"))),
        }
    }

    /// Accepted parameter names. `gamma2` on `ghz4` sweeps `γ²`.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Ghz4 => &["gamma", "gamma2"],
            Family::Phi2 => &["J", "Js"],
            Family::Gag => &["gamma"],
            Family::Gabgd => &["a", "b", "c", "d"],
        }
    }

    /// `(lo, hi, lo_open)` for a parameter.
    fn domain(self, param: &str) -> (f64, f64, bool) {
        match (self, param) {
            (Family::Ghz4, _) => (0.0, 1.0, false),
            (Family::Phi2, "J") => (0.0, f64::INFINITY, true),
            (Family::Phi2, _) => (0.0, f64::INFINITY, false),
            (Family::Gag, _) => (0.0, gag_gamma_max(), false),
            (Family::Gabgd, _) => (f64::NEG_INFINITY, f64::INFINITY, false),
        }
    }

    /// Builds the family parameters from a complete name → value map.
    pub fn params_from(self, values: &BTreeMap<String, f64>) -> Result<FamilyParams> {
        for key in values.keys() {
            if !self.params().contains(&key.as_str()) {
                return Err(Error::Spec(format!("unknown parameter '{key}'")));
            }
        }
        let get = |k: &str| {
            values
                .get(k)
                .copied()
                .ok_or_else(|| Error::Spec(format!("missing parameter '{k}'")))
        };
        Ok(match self {
            Family::Ghz4 => match (values.get("gamma"), values.get("gamma2")) {
                (Some(&g), None) => FamilyParams::Ghz4 { gamma: g },
                (None, Some(&g2)) if g2 >= 0.0 => FamilyParams::Ghz4 { gamma: g2.sqrt() },
                (None, Some(&g2)) => {
                    return Err(Error::ParamOutOfRange {
                        name: "gamma2",
                        value: g2,
                        domain: "[0, 1]",
                    })
                }
                _ => return Err(Error::Spec("ghz4 takes exactly one of gamma, gamma2".into())),
            },
            Family::Phi2 => FamilyParams::Phi2 {
                j: get("J")?,
                js: get("Js")?,
            },
            Family::Gag => FamilyParams::Gag { gamma: get("gamma")? },
            Family::Gabgd => FamilyParams::Gabgd {
                a: get("a")?,
                b: get("b")?,
                c: get("c")?,
                d: get("d")?,
            },
        })
    }
}

/// A sweep of `param` over `[lo, hi]`. With an open lower domain end (`J` of
/// `φ₂`) a `lo` on that end is excluded and the points are
/// `lo + (hi − lo)·k/points`, `k = 1..=points`; otherwise both ends are
/// included.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub family: Family,
    pub param: String,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub fixed: BTreeMap<String, f64>,
    pub restarts: usize,
    pub seed: u64,
    pub tol: f64,
    pub normalize_s: bool,
    /// Doubles the restart budget on the outer tenth of the grid at each end.
    pub edge_boost: bool,
}

impl SweepSpec {
    pub fn new(family: Family, param: &str, lo: f64, hi: f64, points: usize) -> Self {
        SweepSpec {
            family,
            param: param.to_string(),
            lo,
            hi,
            points,
            fixed: BTreeMap::new(),
            restarts: DEFAULT_RESTARTS,
            seed: 0,
            tol: DEFAULT_TOL,
            normalize_s: false,
            edge_boost: false,
        }
    }

    pub fn with_fixed(mut self, name: &str, value: f64) -> Self {
        self.fixed.insert(name.to_string(), value);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.family.params().contains(&self.param.as_str()) {
            return Err(Error::Sweep(format!("'{}' is not a parameter of this family", self.param)));
        }
        if self.fixed.contains_key(&self.param) {
            return Err(Error::Sweep(format!("'{}' is both swept and fixed", self.param)));
        }
        if self.points < 2 {
            return Err(Error::Sweep("a sweep needs at least 2 points".into()));
        }
        if !(self.lo < self.hi) || !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(Error::Sweep(format!("invalid range [{}, {}]", self.lo, self.hi)));
        }
        let (dlo, dhi, _) = self.family.domain(&self.param);
        if self.lo < dlo || self.hi > dhi {
            return Err(Error::Sweep(format!(
                "range [{}, {}] leaves the domain of '{}'",
                self.lo, self.hi, self.param
            )));
        }
        if self.restarts == 0 {
            return Err(Error::Sweep("restarts must be at least 1".into()));
        }
        // surface missing or unknown fixed parameters before any work
        self.params_at(self.grid()[0]).map(|_| ())
    }

    pub fn grid(&self) -> Vec<f64> {
        let (dlo, _, open) = self.family.domain(&self.param);
        let span = self.hi - self.lo;
        if open && self.lo == dlo {
            (1..=self.points)
                .map(|k| self.lo + span * k as f64 / self.points as f64)
                .collect()
        } else {
            let last = (self.points - 1) as f64;
            (0..self.points)
                .map(|k| if k + 1 == self.points { self.hi } else { self.lo + span * k as f64 / last })
                .collect()
        }
    }

    pub fn params_at(&self, x: f64) -> Result<FamilyParams> {
        let mut values = self.fixed.clone();
        values.insert(self.param.clone(), x);
        self.family.params_from(&values)
    }

    fn restarts_at(&self, k: usize) -> usize {
        let edge = (self.points / 10).max(1);
        if self.edge_boost && (k < edge || k >= self.points - edge) {
            2 * self.restarts
        } else {
            self.restarts
        }
    }
}

/// One grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub q: f64,
    pub sum_c_sq: f64,
    pub one_minus_sum_c_sq: f64,
    pub invariants: InvariantSet,
    pub bell: f64,
    pub exceeds_8: bool,
    pub exceeds_16: bool,
    pub s_normalized: Option<f64>,
}

fn evaluate(spec: &SweepSpec, k: usize, x: f64) -> Result<SweepRow> {
    let state = spec.params_at(x)?.generate()?.state;
    let invariants = all_invariants(&state);
    let panel = concurrence_panel(&state)?;
    let bell = optimize_bell(&state, spec.restarts_at(k), spec.seed, spec.tol)?;
    let flags = classify_bell(bell.value);
    Ok(SweepRow {
        param: x,
        q: panel.q_global,
        sum_c_sq: panel.sum_sq,
        one_minus_sum_c_sq: 1.0 - panel.sum_sq,
        invariants,
        bell: bell.value,
        exceeds_8: flags.exceeds_8,
        exceeds_16: flags.exceeds_16,
        s_normalized: None,
    })
}

/// Evaluates every grid point. Points run in parallel; rows come back in grid
/// order and every point uses the same Bell seed.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.grid();
    let mut rows = grid
        .par_iter()
        .enumerate()
        .map(|(k, &x)| evaluate(spec, k, x))
        .collect::<Result<Vec<_>>>()?;
    if spec.normalize_s {
        let max = rows.iter().map(|r| r.invariants.s.norm()).fold(0.0, f64::max);
        for r in &mut rows {
            r.s_normalized = Some(if max > 0.0 { r.invariants.s.re / max } else { 0.0 });
        }
    }
    Ok(rows)
}

/// Renders a float with 17 significant digits.
pub fn fmt_num(x: f64) -> String {
    // adding 0.0 maps -0.0 to 0.0
    format!("{:.16e}", x + 0.0)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let with_norm = rows.first().is_some_and(|r| r.s_normalized.is_some());
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = HEADER.to_vec();
    if with_norm {
        header.push(S_NORM_COLUMN);
    }
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            fmt_num(r.param),
            fmt_num(r.q),
            fmt_num(r.sum_c_sq),
            fmt_num(r.one_minus_sum_c_sq),
        ];
        for (_, v, _) in r.invariants.entries() {
            rec.push(fmt_num(v.re));
            rec.push(fmt_num(v.im));
        }
        rec.push(fmt_num(r.bell));
        rec.push(r.exceeds_8.to_string());
        rec.push(r.exceeds_16.to_string());
        if let Some(s) = r.s_normalized.filter(|_| with_norm) {
            rec.push(fmt_num(s));
        }
        w.write_record(&rec)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
