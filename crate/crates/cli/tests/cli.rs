use std::process::{Command, Output};

fn dirac1d(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirac1d"))
        .args(args)
        .env_remove("DIRAC1D_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<String> {
    let mut lines = csv.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().to_string()).collect()
}

#[test]
fn spectrum_first_levels() {
    let out = dirac1d(&["spectrum", "--q", "1", "--v0", "1", "--levels", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("case,q,V0,n,E_plus,E_minus,E_eff,s_plus,s_minus,B,kappa,lambda_c_eff\n"));
    let e: Vec<f64> = column(&text, "E_plus").iter().map(|v| v.parse().unwrap()).collect();
    assert_eq!(e.len(), 2);
    assert!((e[0] - 1.3228757).abs() < 1e-7);
    assert!((e[1] - 1.3743686).abs() < 1e-7);
}

#[test]
fn spectrum_unbound_is_empty_success() {
    for (q, v0, reason) in [("1", "0", "ZeroBackground"), ("0.3", "1", "SubcriticalCoupling"), ("1", "-1", "SignMismatch")] {
        let out = dirac1d(&["spectrum", "--q", q, "--v0", v0]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert_eq!(text.lines().next().unwrap(), format!("# reason={reason}"));
        assert!(column(&text, "E_plus").is_empty());
    }
}

#[test]
fn spectrum_json_and_negative_values() {
    let out = dirac1d(&["spectrum", "--q", "-1", "--v0", "-1", "--levels", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["case"], "B");
    assert_eq!(v["rows"][0]["n"], 0);
    assert!((v["rows"][0]["E_plus"].as_f64().unwrap() - 1.75f64.sqrt()).abs() < 1e-12);
}

#[test]
fn wavefunction_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi.csv");
    let out = dirac1d(&["wavefunction", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,re_psi_plus,im_psi_plus,re_psi_minus,im_psi_minus,density\n"));
    let xs: Vec<f64> = column(&text, "x").iter().map(|v| v.parse().unwrap()).collect();
    let rho: Vec<f64> = column(&text, "density").iter().map(|v| v.parse().unwrap()).collect();
    assert!(xs.iter().all(|x| *x != 0.0));
    let total: f64 = (1..xs.len()).map(|i| 0.5 * (rho[i] + rho[i - 1]) * (xs[i] - xs[i - 1])).sum();
    assert!((0.9999..=1.0001).contains(&total), "{total}");
}

#[test]
fn wavefunction_bad_index_exits_3() {
    let out = dirac1d(&["wavefunction", "--n", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["spectrum", "--q", "abc"][..],
        &["spectrum", "--bogus"][..],
        &["frobnicate"][..],
        &["sweep", "--v0-range", "1:2"][..],
        &["spectrum", "--levels", "0"][..],
        &["spectrum", "--c", "-1"][..],
        &["spectrum", "--config", "/nonexistent/config.json"][..],
    ] {
        let out = dirac1d(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn degenerate_massless_is_domain_error() {
    let out = dirac1d(&["verify", "--mass", "0", "--v0", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_default_battery_passes() {
    let out = dirac1d(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "analytic_levels",
        "fd_levels_per_channel",
        "match_report",
        "dirac_residual_max",
        "wronskian_limit",
        "orthogonality_max",
        "norm_errors",
        "nr_limit_check",
        "pass",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["pass"], true);
    assert!(v["match_report"]["max_rel_err"].as_f64().unwrap() <= 1e-3);
}

#[test]
fn verify_injected_error_exits_1() {
    let out = dirac1d(&["verify", "--inject-energy-error", "1e-3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["checks"]["dirac_residual"], false);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    std::fs::write(&path, r#"{"q": 2.5, "v0": 0.7, "levels": 4, "format": "json"}"#).unwrap();
    let out = dirac1d(&["spectrum", "--config", path.to_str().unwrap(), "--levels", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    assert_eq!(v["rows"][0]["q"], 2.5);
}

#[test]
fn sweep_is_thread_independent() {
    let args = ["sweep", "--q-range", "-2:2:9", "--v0-range", "-3:3:7"];
    let one = dirac1d(&[&args[..], &["--threads", "1"]].concat());
    let eight = dirac1d(&[&args[..], &["--threads", "8"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, eight.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_dirac1d"))
        .args(args)
        .env("DIRAC1D_THREADS", "5")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
    let text = stdout(&one);
    assert_eq!(text.lines().count(), 1 + 9 * 7);
    assert!(text.starts_with("q,V0,case,E_plus,gap_to_meff,delta_x,lambda_c_eff\n"));
}

#[test]
fn sweep_delta_x_decreases() {
    let out = dirac1d(&["sweep", "--q", "1", "--v0-range", "0.5:8:16", "--level", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let dx: Vec<f64> = column(&stdout(&out), "delta_x").iter().map(|v| v.parse().unwrap()).collect();
    assert_eq!(dx.len(), 16);
    assert!(dx.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn sweep_unbound_rows_have_empty_fields() {
    let out = dirac1d(&["sweep", "--q-range", "-1:1:3", "--v0", "1"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], "-1.0,1.0,Unbound,,,,");
    assert_eq!(rows[1], "0.0,1.0,Unbound,,,,");
    assert!(rows[2].starts_with("1.0,1.0,A,"));
}
