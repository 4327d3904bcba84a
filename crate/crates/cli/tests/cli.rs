use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use densecap_cli::output::CSV_HEADER;

fn densecap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_densecap"))
        .args(args)
        .output()
        .expect("spawn densecap")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn read_rows(path: &Path) -> Vec<csv::StringRecord> {
    let mut r = csv::Reader::from_path(path).unwrap();
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>().join(","), CSV_HEADER);
    r.records().map(|x| x.unwrap()).collect()
}

fn field(headers: &str, row: &csv::StringRecord, name: &str) -> String {
    let i = headers.split(',').position(|h| h == name).unwrap();
    row[i].to_string()
}

fn value(row: &csv::StringRecord, name: &str) -> f64 {
    field(CSV_HEADER, row, name).parse().unwrap()
}

fn out_path(dir: &tempfile::TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

#[test]
fn simulate_agrees_with_analytic() {
    let dir = tempfile::tempdir().unwrap();
    let sim = out_path(&dir, "sim.csv");
    let ana = out_path(&dir, "ana.csv");
    let s = sim.to_str().unwrap();
    let o = densecap(&["simulate", "--set", "n_rx=2", "--realizations", "40000", "--seed", "11", "--out", s]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = densecap(&["analytic", "--set", "n_rx=2", "--expr", "mrc_exact", "--out", ana.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));

    let mc = read_rows(&sim);
    let ex = read_rows(&ana);
    assert_eq!((mc.len(), ex.len()), (1, 1));
    assert_eq!(field(CSV_HEADER, &mc[0], "method"), "mc");
    assert_eq!(field(CSV_HEADER, &mc[0], "seed"), "11");
    assert_eq!(field(CSV_HEADER, &ex[0], "seed"), "");
    let z = (value(&mc[0], "value") - value(&ex[0], "value")).abs() / value(&mc[0], "stderr");
    assert!(z < 3.0, "z = {z}");
    assert!(sim.with_extension("manifest.json").exists());
}

#[test]
fn reruns_are_identical_and_manifest_replays() {
    let dir = tempfile::tempdir().unwrap();
    let a = out_path(&dir, "a.csv");
    let b = out_path(&dir, "b.csv");
    let c = out_path(&dir, "c.csv");
    for (p, threads) in [(&a, "1"), (&b, "3")] {
        let o = densecap(&["--threads", threads, "simulate", "--realizations", "5000", "--seed", "4", "--out", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());

    let manifest = a.with_extension("manifest.json");
    let o = densecap(&["--from-manifest", manifest.to_str().unwrap(), "--out", c.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(bytes, std::fs::read(&c).unwrap());
    let m = densecap_cli::output::RunManifest::read(&manifest).unwrap();
    assert_eq!(m.command, "simulate");
    assert_eq!(m.seed, Some(4));
}

#[test]
fn sweep_bounds_bracket_exact() {
    let dir = tempfile::tempdir().unwrap();
    let p = out_path(&dir, "sweep.csv");
    let o = densecap(&[
        "sweep", "--beta", "2", "--c", "1e6", "--grid", "1e-5:1e-4:4", "--receiver", "mrc",
        "--methods", "exact,lower,upper", "--out", p.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rows = read_rows(&p);
    assert_eq!(rows.len(), 12);
    for chunk in rows.chunks(3) {
        let get = |m: &str| {
            chunk
                .iter()
                .find(|r| field(CSV_HEADER, r, "method") == m)
                .map(|r| value(r, "value"))
                .unwrap()
        };
        let (lo, ex, hi) = (get("lower"), get("exact"), get("upper"));
        assert!(lo <= ex && ex <= hi, "{lo} {ex} {hi}");
        let n: f64 = value(&chunk[0], "n_rx");
        let lambda = value(&chunk[0], "lambda");
        assert_eq!(n, (1e6 * lambda * lambda).ceil());
    }
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = out_path(&dir, "x.csv");
    let p = p.to_str().unwrap();
    for args in [
        vec!["simulate", "--realizations", "0", "--out", p],
        vec!["sweep", "--beta", "1", "--c", "4", "--grid", "1e-4:1e-3", "--out", p],
        vec!["sweep", "--beta", "1", "--c", "4", "--grid", "1e-3:1e-4:3", "--out", p],
        vec!["simulate", "--set", "bogus=1", "--out", p],
        vec!["simulate", "--set", "alpha=2", "--out", p],
        vec!["simulate", "--receiver", "zfsic:1", "--corr", "exp:0.5", "--out", p],
        vec!["analytic", "--expr", "itlinq", "--out", p],
        vec!["--from-manifest", p, "simulate", "--out", p],
    ] {
        let o = densecap(&args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = out_path(&dir, "net.conf");
    std::fs::write(&cfg, "# dense case\ndensity = 1e-3\nn_rx = 8\nsigma2_dbm = -inf\n").unwrap();
    let p = out_path(&dir, "a.csv");
    let o = densecap(&[
        "analytic", "--config", cfg.to_str().unwrap(), "--set", "n_rx=6", "--expr", "sic_exact",
        "--out", p.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rows = read_rows(&p);
    assert_eq!(value(&rows[0], "lambda"), 1e-3);
    assert_eq!(value(&rows[0], "n_rx"), 6.0);
    assert_eq!(value(&rows[0], "L"), 5.0);
    let v = value(&rows[0], "value");
    let per = value(&rows[0], "per_link");
    assert!((v - 1e-3 * per).abs() <= 1e-12 * v);
}

#[test]
fn validate_default_config_passes() {
    let o = densecap(&["validate", "--realizations", "20000"]);
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert_eq!(code(&o), 0, "{stdout}");
    assert!(stdout.contains("mrc_mc_vs_exact [PASS]"));
    assert!(!stdout.contains("[FAIL]"));
}

#[test]
fn validate_bounded_pathloss() {
    let o = densecap(&["validate", "--set", "pathloss=bounded", "--realizations", "20000"]);
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert_eq!(code(&o), 0, "{stdout}");
    assert!(stdout.contains("mean_interference [PASS]"));
}
