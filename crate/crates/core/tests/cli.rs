use std::path::Path;
use std::process::Command;

use smallgon::cli::{run, EXIT_CONSTRUCTION, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use smallgon::constructions::Family;
use smallgon::export::PolygonDocument;
use tempfile::TempDir;

fn smallgon(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("smallgon").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn construct_to(dir: &Path, family: &str, n: usize, format: &str) -> std::path::PathBuf {
    let path = dir.join(format!("{family}-{n}.{format}"));
    let n = n.to_string();
    let (code, _, err) = smallgon(&[
        "--quiet",
        "construct",
        "--family",
        family,
        "--n",
        &n,
        "--format",
        format,
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{family} n={n}: {err}");
    path
}

fn verify(path: &Path) -> (i32, String) {
    let (code, out, _) = smallgon(&["--quiet", "verify", "--file", path.to_str().unwrap()]);
    (code, out)
}

#[test]
fn construct_then_verify_every_family() {
    let dir = TempDir::new().unwrap();
    for family in Family::ALL {
        for n in (family.min_n().max(6)..=100).step_by(2) {
            let path = construct_to(dir.path(), family.name(), n, "json");
            let (code, out) = verify(&path);
            assert_eq!(code, EXIT_OK, "{family} n={n}:\n{out}");
        }
    }
}

#[test]
fn b6_document_area() {
    let (code, out, _) = smallgon(&["construct", "--family", "bn", "--n", "6", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc = PolygonDocument::from_json(&out).unwrap();
    assert!((doc.area - 0.6749814429).abs() < 5e-11);
    assert_eq!(doc.checks.len(), 4);
}

#[test]
fn square_document_area() {
    let (code, out, _) = smallgon(&["construct", "--family", "regular", "--n", "4", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc = PolygonDocument::from_json(&out).unwrap();
    assert!((doc.area - 0.5).abs() < 1e-12);
}

#[test]
fn csv_and_json_agree_digit_for_digit() {
    for (family, n) in [("bn", 12), ("mossinghoff", 14), ("regular-plus", 8), ("mossinghoff-prime", 10)] {
        let n_arg = n.to_string();
        let (_, json, _) = smallgon(&["construct", "--family", family, "--n", &n_arg, "--format", "json"]);
        let (_, csv, _) = smallgon(&["construct", "--family", family, "--n", &n_arg, "--format", "csv"]);
        let doc = PolygonDocument::from_json(&json).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "family,n,index,x,y,area,diameter,alpha,beta,gamma"
        );
        let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
        assert_eq!(rows.len(), n);
        let parse = |s: &str| s.parse::<f64>().unwrap();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row[0], family);
            assert_eq!(row[2], i.to_string());
            assert_eq!(parse(row[3]), doc.vertices[i][0]);
            assert_eq!(parse(row[4]), doc.vertices[i][1]);
            assert_eq!(parse(row[5]), doc.area);
            assert_eq!(parse(row[6]), doc.diameter);
            for (field, value) in row[7..].iter().zip([doc.alpha, doc.beta, doc.gamma]) {
                assert_eq!(field.is_empty(), value.is_none());
                if let Some(v) = value {
                    assert_eq!(parse(field), v);
                }
            }
        }
    }
}

#[test]
fn figure_segment_counts() {
    for (family, n, diameters) in [("bn", 10, 10), ("regular", 8, 4), ("mossinghoff", 12, 12)] {
        let n_arg = n.to_string();
        let (code, tikz, _) = smallgon(&["construct", "--family", family, "--n", &n_arg, "--format", "tikz"]);
        assert_eq!(code, EXIT_OK);
        let dashed = tikz.lines().find(|l| l.contains("[dashed]")).unwrap();
        assert_eq!(dashed.matches("--").count(), n);
        assert_eq!(tikz.lines().filter(|l| l.contains("\\draw (")).count(), diameters);
        assert!(!tikz.contains("documentclass"));

        let (code, svg, _) = smallgon(&["construct", "--family", family, "--n", &n_arg, "--format", "svg"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(svg.matches("class=\"boundary\"").count(), n);
        assert_eq!(svg.matches("class=\"diameter\"").count(), diameters);
    }
}

#[test]
fn b10_tikz_vertex() {
    let (_, tikz, _) = smallgon(&["construct", "--family", "bn", "--n", "10", "--format", "tikz"]);
    assert!(tikz.contains("(0.3351,0.1395)"));
    assert!(tikz.contains("scale=4"));
}

#[test]
fn moved_vertex_fails_smallness() {
    let dir = TempDir::new().unwrap();
    let path = construct_to(dir.path(), "bn", 8, "json");
    let mut doc = PolygonDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc.vertices[3][0] += 0.1;
    std::fs::write(&path, doc.to_json()).unwrap();
    let (code, out) = verify(&path);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(out.contains("small: fail"), "{out}");
}

#[test]
fn regular_hexagon_lacks_optimal_structure() {
    let dir = TempDir::new().unwrap();
    let path = construct_to(dir.path(), "regular", 6, "json");
    let (code, out) = verify(&path);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("diameter_graph_optimal: fail (not required)"), "{out}");

    // the same vertices claimed as a B_n polygon do not pass
    let mut doc = PolygonDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc.family = "bn".into();
    std::fs::write(&path, doc.to_json()).unwrap();
    let (code, out) = verify(&path);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(out.contains("diameter_graph_optimal: fail\n"), "{out}");
}

#[test]
fn malformed_documents_are_io_errors() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(verify(&path).0, EXIT_IO);
    assert_eq!(verify(&dir.path().join("missing.json")).0, EXIT_IO);
}

#[test]
fn table_row_counts() {
    for (n_max, rows) in [(6, 1), (24, 10), (48, 22)] {
        let n_arg = n_max.to_string();
        let (code, out, _) = smallgon(&["table", "--n-max", &n_arg, "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), rows + 1);
    }
    let (_, out, _) = smallgon(&["table", "--n-max", "24", "--format", "csv"]);
    let row16 = out.lines().find(|l| l.starts_with("16,")).unwrap();
    assert_eq!(
        row16,
        "16,0.1316139556,0.7653668647,0.7716285345,0.7718386481,0.7718489998,0.7718535572,0.7724408116"
    );
    let (_, md, _) = smallgon(&["table", "--n-max", "8"]);
    assert_eq!(md.lines().count(), 4);
    assert!(md.starts_with("| n | alpha_hat |"));
}

fn field(line: &str, key: &str) -> f64 {
    let start = line.find(&format!("{key}=")).unwrap() + key.len() + 1;
    line[start..].split_whitespace().next().unwrap().parse().unwrap()
}

#[test]
fn asymptotic_series() {
    let (code, out, _) = smallgon(&["asymptotics", "--n", "512", "--series", "ub-gap"]);
    assert_eq!(code, EXIT_OK);
    assert!((field(&out, "ratio") - 1.0).abs() < 0.01);

    let (_, out, _) = smallgon(&["asymptotics", "--n", "100", "--series", "mn-gap"]);
    assert!((field(&out, "limit") - 0.1180393778).abs() < 1e-10);
    assert!((field(&out, "ratio") - 1.0).abs() < 0.10);

    let (_, out, _) = smallgon(&["asymptotics", "--n", "24", "--series", "alpha"]);
    assert!(field(&out, "difference").abs() < 6e-6);

    let (_, out, _) = smallgon(&["asymptotics", "--n", "200", "--series", "penalty"]);
    assert!((field(&out, "ratio") - 1.0).abs() < 0.15);
}

#[test]
fn usage_and_construction_errors() {
    let cases: [&[&str]; 6] = [
        &["construct", "--family", "bn", "--n", "7"],
        &["construct", "--family", "hexagon", "--n", "8"],
        &["construct", "--family", "mossinghoff-prime", "--n", "6"],
        &["table", "--n-max", "4"],
        &["asymptotics", "--n", "9"],
        &["asymptotics", "--n", "10", "--series", "nope"],
    ];
    for args in cases {
        assert_eq!(smallgon(args).0, EXIT_USAGE, "{args:?}");
    }
    assert_ne!(EXIT_CONSTRUCTION, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_smallgon");
    let ok = Command::new(bin).args(["table", "--n-max", "6"]).output().unwrap();
    assert!(ok.status.success());
    let bad = Command::new(bin).args(["construct", "--family", "bn", "--n", "5"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
