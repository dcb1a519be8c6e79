use std::path::PathBuf;
use std::process::Command;

use zirkel::FigureId;
use zirkel_cli::{run, Outcome};

fn zirkel(args: &[&str]) -> Outcome {
    run(std::iter::once("zirkel").chain(args.iter().copied()))
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus")
}

#[test]
fn trisect_hundred() {
    let out = zirkel(&["trisect", "100"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("theta_out: 33° 19' 15.72302\""), "{}", out.stdout);
    assert!(out.stdout.contains("theta/3:   33° 20' 0\""));
    assert!(out.stdout.contains("error:     44.27697813\""));
}

#[test]
fn trisect_out_of_range_is_a_domain_error() {
    assert_eq!(zirkel(&["trisect", "180"]).code, 1);
    assert_eq!(zirkel(&["trisect", "abc"]).code, 1);
}

#[test]
fn constructible() {
    let out = zirkel(&["constructible", "7"]);
    assert_eq!(out.stdout, "7: NOT constructible (7 is not a Fermat prime)\n");
    assert_eq!(zirkel(&["constructible", "17"]).stdout, "17: constructible (2^0 · 17)\n");
    assert_eq!(zirkel(&["constructible", "2"]).code, 1);
    let json: serde_json::Value = serde_json::from_str(&zirkel(&["constructible", "9", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["constructible"], false);
    assert_eq!(json["obstruction"]["kind"], "repeated_factor");
    assert_eq!(json["obstruction"]["factor"], 3);
}

#[test]
fn build_hexagon_json() {
    let out = zirkel(&["build", "hexagon-9", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let v = json["vertices"].as_array().unwrap();
    assert_eq!(v.len(), 6);
    assert_eq!(v[0]["x"], "0");
    assert_eq!(v[0]["y"], "1");
}

#[test]
fn build_prints_25_digits() {
    let out = zirkel(&["build", "eleven-19", "--format", "csv"]);
    let second: Vec<&str> = out.stdout.lines().nth(2).unwrap().split(',').collect();
    // counterclockwise from the top, so the printed table's last vertex comes second
    assert_eq!(second[1], "-0.5397944249806905656719474");
    assert_eq!(second[2], "0.841796875");
}

#[test]
fn build_variants() {
    let half = zirkel(&["build", "thirteen-19", "--thirteen", "half"]);
    assert_eq!(half.code, 0);
    assert_ne!(half.stdout, zirkel(&["build", "thirteen-19"]).stdout);
    assert_eq!(zirkel(&["build", "hexagon-9", "--thirteen", "half"]).code, 1);
    assert_eq!(zirkel(&["build", "thirteen-19", "--thirteen", "third"]).code, 2);
}

#[test]
fn bad_inputs() {
    let unknown = zirkel(&["build", "dodecagon"]);
    assert_eq!(unknown.code, 1);
    assert!(unknown.stderr.contains("unknown figure"));
    assert_eq!(zirkel(&["run", "/nonexistent/x.geo"]).code, 1);
    assert_eq!(zirkel(&["analyze", "/nonexistent/x.geo"]).code, 1);
    let usage = zirkel(&["build", "hexagon-9", "--frobnicate"]);
    assert_eq!(usage.code, 2);
    assert!(usage.stderr.contains("Usage"));
    assert_eq!(zirkel(&[]).code, 2);
    assert_eq!(zirkel(&["--digits", "10", "list"]).code, 2);
}

#[test]
fn parse_diagnostics_are_forwarded() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.geo");
    std::fs::write(&path, "given a = (0, 0)\npoint c = intersect(a, zz)\n").unwrap();
    let out = zirkel(&["run", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2, column"), "{}", out.stderr);
}

#[test]
fn every_corpus_script_runs() {
    let mut count = 0;
    for entry in std::fs::read_dir(corpus()).unwrap() {
        let path = entry.unwrap().path();
        let out = zirkel(&["run", path.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}: {}", path.display(), out.stderr);
        count += 1;
    }
    assert!(count >= 15);
}

#[test]
fn analyze_file_and_figure_agree() {
    let path = corpus().join("eleven-19.geo");
    let from_file = zirkel(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    let from_fig = zirkel(&["analyze", "eleven-19", "--format", "json"]);
    let a: serde_json::Value = serde_json::from_str(&from_file.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_str(&from_fig.stdout).unwrap();
    for key in ["n", "equilateral", "equiangular", "concyclic"] {
        assert_eq!(a[key], b[key], "{key}");
    }
    for key in ["n", "sides", "central_angles_dms", "interior_angles_dms", "max_side_dev", "max_angle_dev_arcsec"] {
        assert!(b.get(key).is_some(), "{key}");
    }
}

#[test]
fn render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nine.svg");
    let out = zirkel(&["render", "nine-18", "--circle", "-o", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.contains("viewBox=\"-1.2 -1.2 2.4 2.4\""));
    assert_eq!(svg.matches("<circle").count(), 1);
    assert_eq!(svg.matches(" L ").count(), 8);
}

#[test]
fn list_table() {
    let out = zirkel(&["list", "--format", "csv"]);
    assert_eq!(out.stdout.lines().count(), 16);
    assert!(out.stdout.contains("heptagon-11,11,7,N"));
    assert!(out.stdout.contains("pentagon-exact-15,15,5,Y"));
    assert!(out.stdout.contains("fifteen-17,17,15,N"));
}

#[test]
fn deterministic_commands() {
    for fig in FigureId::ALL {
        for args in [
            vec!["build", fig.name()],
            vec!["analyze", fig.name(), "--format", "json"],
            vec!["render", fig.name(), "--circle", "--construction"],
        ] {
            assert_eq!(zirkel(&args), zirkel(&args), "{args:?}");
        }
    }
}

#[test]
fn binary_reads_digits_from_env() {
    let bin = env!("CARGO_BIN_EXE_zirkel");
    let via_env = Command::new(bin).args(["trisect", "60"]).env("ZIRKEL_DIGITS", "30").output().unwrap();
    let via_flag = Command::new(bin).args(["trisect", "60", "--digits", "30"]).env_remove("ZIRKEL_DIGITS").output().unwrap();
    assert!(via_env.status.success());
    assert_eq!(via_env.stdout, via_flag.stdout);
    let bad = Command::new(bin).args(["list", "--nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
