use std::path::Path;
use std::process::{Command, Output};

fn fourqubit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fourqubit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// First number after `key` on the line starting with it.
fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| {
            let mut parts = l.split_whitespace();
            (parts.next() == Some(key)).then(|| parts.next().unwrap().to_string())
        })
        .unwrap_or_else(|| panic!("no '{key}' in\n{text}"))
}

fn num(text: &str, key: &str) -> f64 {
    field(text, key).parse().unwrap()
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn column(header: &[String], rows: &[Vec<String>], name: &str) -> Vec<f64> {
    let k = header.iter().position(|h| h == name).unwrap();
    rows.iter().map(|r| r[k].parse().unwrap()).collect()
}

#[test]
fn invariants_of_ghz() {
    let text = stdout(&fourqubit(&["invariants", "ghz4:gamma=0.6"]));
    assert!((num(&text, "H") - 0.48).abs() < 1e-15);
    assert!(num(&text, "Delta").abs() < 1e-20);
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn invariants_of_phi2() {
    let text = stdout(&fourqubit(&["invariants", "phi2:J=2,Js=2"]));
    assert!((num(&text, "Dxt") + 1.0 / 108.0).abs() < 1e-15);
}

#[test]
fn state_files() {
    let dir = tempfile::tempdir().unwrap();
    let zero = dir.path().join("zero.json");
    let amps = vec![[0.0, 0.0]; 16];
    std::fs::write(&zero, serde_json::json!({"amplitudes": amps, "normalized": false}).to_string()).unwrap();
    let out = fourqubit(&["invariants", &format!("file:{}", zero.display())]);
    assert_eq!(out.status.code(), Some(3));

    let mut amps = vec![[0.0, 0.0]; 16];
    amps[0] = [3.0, 0.0];
    amps[15] = [4.0, 0.0];
    let ghz = dir.path().join("ghz.json");
    std::fs::write(&ghz, serde_json::json!({"amplitudes": amps, "normalized": false}).to_string()).unwrap();
    let text = stdout(&fourqubit(&["invariants", &format!("file:{}", ghz.display())]));
    assert!((num(&text, "H") - 0.48).abs() < 1e-15);

    let short = dir.path().join("short.json");
    std::fs::write(&short, r#"{"amplitudes": [[1.0, 0.0]], "normalized": true}"#).unwrap();
    let out = fourqubit(&["classify", &format!("file:{}", short.display())]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn concurrence_output() {
    let text = stdout(&fourqubit(&["concurrence", "gag:gamma=0.20412414523193150"]));
    for key in ["C12", "C13", "C14", "C23", "C24", "C34"] {
        assert!((num(&text, key) - 1.0 / 3.0).abs() < 1e-12, "{key}");
    }
    assert!((num(&text, "Q") - 1.0).abs() < 1e-12);
}

#[test]
fn bell_on_ghz_is_deterministic() {
    let args = ["bell", "ghz4:gamma=0.70710678", "--restarts", "32", "--seed", "7"];
    let a = fourqubit(&args);
    let b = fourqubit(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!((num(&text, "value") - 32.0).abs() < 1e-6);
    assert_eq!(field(&text, "exceeds_16"), "true");
    assert_eq!(field(&text, "seed"), "7");
    assert_eq!(text.lines().filter(|l| l.starts_with('a')).count(), 8);
}

#[test]
fn bell_dip_on_phi2() {
    let text = stdout(&fourqubit(&["bell", "phi2:J=2,Js=2"]));
    assert!(num(&text, "value") <= 16.0);
    assert_eq!(field(&text, "exceeds_16"), "false");
}

#[test]
fn classify_examples() {
    let text = stdout(&fourqubit(&["classify", "gag:gamma=0.2"]));
    assert_eq!(field(&text, "delta_nonzero"), "true");
    assert_eq!(field(&text, "li_gag"), "false");

    let text = stdout(&fourqubit(&["classify", "gag:gamma=0.3535533905932738"]));
    assert_eq!(field(&text, "delta_nonzero"), "false");
    assert_eq!(field(&text, "li_gag"), "true");

    // eight digits of 1/√8: Δ is still zero to the tolerance, but
    // α²γ² − γ⁴ ≈ 2e-10 is not
    let text = stdout(&fourqubit(&["classify", "gag:gamma=0.35355339"]));
    assert_eq!(field(&text, "delta_nonzero"), "false");
    assert_eq!(field(&text, "li_gag"), "false");

    let text = stdout(&fourqubit(&["classify", "ghz4:gamma=0.6"]));
    assert_eq!(field(&text, "delta_nonzero"), "false");
    assert_eq!(field(&text, "h_nonzero"), "true");
    assert_eq!(field(&text, "li_ghz4"), "true");
}

#[test]
fn ghz_sweep_q_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ghz.csv");
    let p = path.to_str().unwrap();
    stdout(&fourqubit(&["sweep", "ghz4:gamma2=0.02..0.98", "--points", "49", "--restarts", "4", "--out", p]));
    let (header, rows) = read_csv(&path);
    assert_eq!(header.len(), 23);
    assert_eq!(rows.len(), 49);
    let g2 = column(&header, &rows, "param");
    let q = column(&header, &rows, "Q");
    for (x, q) in g2.iter().zip(&q) {
        assert!((q - 4.0 * x * (1.0 - x)).abs() < 1e-12, "{x}: {q}");
    }
    for name in ["H_im", "S_im", "T_im", "Delta_im"] {
        assert!(column(&header, &rows, name).iter().all(|v| v.abs() <= 1e-12), "{name}");
    }
}

#[test]
fn gag_sweep_delta_structure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gag.csv");
    let p = path.to_str().unwrap();
    stdout(&fourqubit(&[
        "sweep",
        "gag:gamma=0..0.4082482904638630",
        "--points",
        "100",
        "--restarts",
        "2",
        "--out",
        p,
    ]));
    let (header, rows) = read_csv(&path);
    let g = column(&header, &rows, "param");
    let d = column(&header, &rows, "Delta_re");
    // Δ = −γ⁶(6γ²−1)(8γ²−1)⁶(24γ²−1)²/512 is non-negative on the whole range:
    // 1/√24 and 1/√8 are even roots, 1/√6 is the range end
    assert!(d.iter().all(|&x| x >= -1e-20));
    let near = |r: f64| {
        (0..g.len())
            .min_by(|&a, &b| (g[a] - r).abs().total_cmp(&(g[b] - r).abs()))
            .unwrap()
    };
    let k8 = near(1.0 / 8f64.sqrt());
    assert!(d[k8] < 1e-12);
    assert!(d[k8 - 10] > 1e-12 && d[k8 + 8] > 1e-12);
    let k24 = near(1.0 / 24f64.sqrt());
    assert!(d[k24] < d[k24 - 5] && d[k24] < d[k24 + 5]);
    assert!(d[g.len() - 1].abs() < 1e-12);
}

#[test]
fn phi2_sweep_s_minimum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi2.csv");
    let p = path.to_str().unwrap();
    stdout(&fourqubit(&[
        "sweep",
        "phi2:J=0..8,Js=2",
        "--points",
        "100",
        "--restarts",
        "2",
        "--normalize-s",
        "--out",
        p,
    ]));
    let (header, rows) = read_csv(&path);
    assert_eq!(header.last().unwrap(), "S_norm");
    let j = column(&header, &rows, "param");
    let s = column(&header, &rows, "S_norm");
    assert!(j[0] > 0.0);
    let kmin = (0..s.len()).min_by(|&a, &b| s[a].total_cmp(&s[b])).unwrap();
    assert_eq!(j[kmin], 2.0);
    assert!(s.iter().cloned().fold(f64::NEG_INFINITY, f64::max) <= 1.0);
}

#[test]
fn exit_codes() {
    assert_eq!(fourqubit(&["invariants", "ghz4:gamma"]).status.code(), Some(2));
    assert_eq!(fourqubit(&["invariants", "w4:gamma=0.1"]).status.code(), Some(2));
    assert_eq!(fourqubit(&["bell"]).status.code(), Some(2));
    assert_eq!(fourqubit(&["sweep", "gag:gamma=0..1"]).status.code(), Some(2));
    assert_eq!(fourqubit(&["sweep", "gag:gamma=0.3..0.1"]).status.code(), Some(2));
    assert_eq!(
        fourqubit(&["sweep", "gag:gamma=0..0.4", "--points", "3", "--out", "/nonexistent/dir/x.csv"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(fourqubit(&["--help"]).status.code(), Some(0));
}
