//! End-to-end tests of the command-line interface.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn latred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latred"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_basis_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn bounds_reproduces_published_table() {
    let out = latred(&["bounds", "--n", "4..10,15,20,30", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let published: [(usize, f64, f64); 10] = [
        (4, 3.281, 1.0),
        (5, 6.563, 1.25),
        (6, 14.766, 1.641),
        (7, 36.914, 2.344),
        (8, 101.514, 3.809),
        (9, 304.541, 6.427),
        (10, 989.758, 11.523),
        (15, 993779.193, 577.568),
        (20, 3.919e9, 88919.111),
        (30, 1.255e18, 2.786e10),
    ];
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    for (row, (n, f_h, f_s)) in rows.iter().zip(published) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0], n.to_string());
        let got_h: f64 = fields[1].parse().unwrap();
        let got_s: f64 = fields[2].parse().unwrap();
        assert!((got_h - f_h).abs() <= 5e-4 * f_h, "f_H({n}): {got_h} vs {f_h}");
        assert!((got_s - f_s).abs() <= 5e-4 * f_s, "f_S({n}): {got_s} vs {f_s}");
    }
    // Aligned-table rendering carries the same digits for entries whose
    // third decimal is unambiguous.
    let table = latred(&["bounds", "--n", "4..10,15,20,30"]);
    let table_text = stdout(&table);
    for needle in [
        "3.281", "14.766", "36.914", "101.514", "304.541", "989.758", "3.919e9",
        "1.255e18", "1.250", "1.641", "2.344", "3.809", "6.427", "11.523",
        "577.568", "88919.111", "2.786e10",
    ] {
        assert!(table_text.contains(needle), "missing {needle} in table:\n{table_text}");
    }
}

#[test]
fn bounds_csv_has_schema_and_rows() {
    let out = latred(&["bounds", "--n", "4,30", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,f_H,f_S,k_star,beta_n,gamma_upper,theorem2_bound"
    );
    let row4 = lines.next().unwrap();
    assert!(row4.starts_with("4,3.281,1.000,0,"));
    let row30 = lines.next().unwrap();
    assert!(row30.starts_with("30,1.255e18,2.786e10,"));
}

#[test]
fn bounds_rejects_bad_expression() {
    let out = latred(&["bounds", "--n", "7..3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_then_check_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_basis_file(dir.path(), "b.txt", "ambient 2\nrank 2\nrows\n1 0\n1 1\n");

    // The raw basis fails the coset-minimality property.
    let check = latred(&["check", "--in", &input]);
    assert_eq!(check.status.code(), Some(1));
    assert!(stdout(&check).contains("property2_ok false"));

    let reduced_path = dir.path().join("r.txt");
    let report_path = dir.path().join("rep.txt");
    let reduce = latred(&[
        "reduce",
        "--in",
        &input,
        "--method",
        "strong",
        "--out",
        reduced_path.to_str().unwrap(),
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert!(reduce.status.success(), "{}", String::from_utf8_lossy(&reduce.stderr));
    let report = fs::read_to_string(&report_path).unwrap();
    assert!(report.contains("property1_ok true"));
    assert!(report.contains("property2_ok true"));
    assert!(report.contains("theorem1_ok true"));

    // The written basis is strongly reduced and round-trips bit-exactly.
    let check2 = latred(&["check", "--in", reduced_path.to_str().unwrap()]);
    assert_eq!(check2.status.code(), Some(0));
    let bytes = fs::read_to_string(&reduced_path).unwrap();
    let parsed = latred::io::parse_basis(&bytes).unwrap();
    assert_eq!(latred::io::render_basis(&parsed), bytes);
}

#[test]
fn minima_with_oracle_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_basis_file(dir.path(), "b.txt", "ambient 2\nrank 2\nrows\n2 1\n1 2\n");
    let out = latred(&["minima", "--in", &input, "--oracle"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lambda_sq 2 5"));
    assert!(text.contains("oracle agreement: yes"));
}

#[test]
fn experiment_is_deterministic_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv1 = dir.path().join("a.csv");
    let csv2 = dir.path().join("b.csv");
    let args = |csv: &Path| {
        vec![
            "experiment".to_string(),
            "--kind".into(),
            "uniform".into(),
            "--dim".into(),
            "3".into(),
            "--bound".into(),
            "8".into(),
            "--trials".into(),
            "5".into(),
            "--seed".into(),
            "42".into(),
            "--methods".into(),
            "strong,hkz".into(),
            "--csv".into(),
            csv.to_string_lossy().into_owned(),
        ]
    };
    let run1 = Command::new(env!("CARGO_BIN_EXE_latred"))
        .args(args(&csv1))
        .output()
        .unwrap();
    let run2 = Command::new(env!("CARGO_BIN_EXE_latred"))
        .args(args(&csv2))
        .output()
        .unwrap();
    assert!(run1.status.success(), "{}", String::from_utf8_lossy(&run1.stderr));
    assert_eq!(run1.stdout, run2.stdout);
    assert_eq!(fs::read(&csv1).unwrap(), fs::read(&csv2).unwrap());
    let csv = fs::read_to_string(&csv1).unwrap();
    assert!(csv.starts_with("trial,seed,method,dim,status,"));
    // 5 trials x 2 methods + header
    assert_eq!(csv.lines().count(), 11);
    let text = stdout(&run1);
    assert!(text.contains("violating seeds: none"));
}

#[test]
fn experiment_refuses_oversized_rank_without_force() {
    let out = latred(&["experiment", "--dim", "13", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--force"));
}

#[test]
fn usage_errors_exit_2() {
    let out = latred(&["reduce", "--in", "/nonexistent/basis.txt", "--method", "strong"]);
    assert_eq!(out.status.code(), Some(2));
    let out = latred(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let input = write_basis_file(dir.path(), "b.txt", "ambient 2\nrank 2\nrows\n1 0\n0 1\n");
    let out = latred(&["reduce", "--in", &input, "--method", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
