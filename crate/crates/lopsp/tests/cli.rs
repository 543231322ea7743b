use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use lopsp::io::{parse_planar_code, parse_rot_stream, write_op, write_planar_code, write_rot};
use lopsp_core::ops::non_c3;
use lopsp_core::{solids, EmbeddedGraph, Operation};

fn lopsp(args: &[&str]) -> Output {
    run_with(args, None, &[])
}

fn run_with(args: &[&str], stdin: Option<&[u8]>, env: &[(&str, &Path)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lopsp"));
    cmd.args(args).env_remove("LOPSP_CATALOG_DIR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(input) = stdin {
        use std::io::Write;
        child.stdin.take().unwrap().write_all(input).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr_json(o: &Output) -> serde_json::Value {
    let text = String::from_utf8(o.stderr.clone()).unwrap();
    serde_json::from_str(text.lines().next().expect("diagnostic line")).expect("JSON on stderr")
}

struct Files {
    dir: tempfile::TempDir,
}

impl Files {
    fn new() -> Self {
        Files { dir: tempfile::tempdir().unwrap() }
    }

    fn put(&self, name: &str, contents: impl AsRef<[u8]>) -> String {
        let p: PathBuf = self.dir.path().join(name);
        std::fs::write(&p, contents).unwrap();
        p.display().to_string()
    }

    fn graph(&self, name: &str, g: &EmbeddedGraph) -> String {
        self.put(name, write_rot(g))
    }
}

/// Truncated cube built by hand: every corner `(v, a)` of the cube becomes
/// a vertex joined to `(a, v)` and to the corners of `v` before and after it.
fn truncated_cube() -> EmbeddedGraph {
    let g = solids::cube();
    let corner = |d: usize| d;
    let neighbors: Vec<Vec<usize>> = (0..g.dart_count())
        .map(|d| vec![corner(g.inv(d)), corner(g.sigma(d)), corner(g.sigma_inv(d))])
        .collect();
    EmbeddedGraph::from_neighbor_rotations(&neighbors).unwrap()
}

#[test]
fn apply_then_canon_matches_independent_truncated_cube() {
    let f = Files::new();
    let cube = f.graph("cube.rot", &solids::cube());
    let tc = truncated_cube();
    assert_eq!(tc.f_vector(), (24, 36, 14));
    let tc_path = f.graph("truncated-cube.rot", &tc);
    let applied = lopsp(&["apply", "truncation", &cube]);
    assert!(applied.status.success());
    let piped = run_with(&["canon", "-"], Some(&applied.stdout), &[]);
    let direct = lopsp(&["canon", &tc_path]);
    assert!(piped.status.success() && direct.status.success());
    assert_eq!(stdout(&piped), stdout(&direct));
}

#[test]
fn classify_and_curvature_of_catalog_entries() {
    let o = lopsp(&["classify", "gyro"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
    let o = lopsp(&["curvature", "snub"]);
    assert_eq!(stdout(&o), "0\n");
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/catalog/snub.lopsp");
    assert_eq!(stdout(&lopsp(&["curvature", file])), "0\n");
    assert_eq!(stdout(&lopsp(&["classify", file, "--witness", "cube"])), "3\n");
}

#[test]
fn classify_reports_a_witness_below_three() {
    let f = Files::new();
    let p = f.put("pendant.lsp", write_op(&Operation::Lsp(non_c3("pendant").unwrap())));
    let o = lopsp(&["classify", &p]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("1"));
    assert!(lines.next().unwrap().starts_with("witness: 2-cycle"));
    assert_eq!(out.lines().last(), Some("localized: yes"));
}

#[test]
fn validate_accepts_and_rejects() {
    let o = lopsp(&["validate", "join"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "valid\n".to_string()));
    let f = Files::new();
    let bad = f.put("bad.lopsp", "lopsp 3 3\ntypes: 0 0 2\nspecial: 0 1 2\n0: +1 -3\n1: -1 +2\n2: -2 +3\n");
    let o = lopsp(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let j = stderr_json(&o);
    assert_eq!(j["error"], "invalid_operation");
    assert!(!j["diagnostics"].as_array().unwrap().is_empty());
    assert!(j["diagnostics"][0]["clause"].is_string());
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let f = Files::new();
    let broken = f.put("broken.rot", "rot 2 1\n0: +1\n1: -q\n");
    let o = lopsp(&["facewidth", &broken]);
    assert_eq!(o.status.code(), Some(2));
    let j = stderr_json(&o);
    assert_eq!((j["error"].as_str(), j["line"].as_u64(), j["column"].as_u64()), (Some("syntax"), Some(3), Some(4)));
    let o = lopsp(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr_json(&o)["error"], "usage");
    let o = lopsp(&["ckcheck", &broken, "-k", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = lopsp(&["apply", "no-such-op", &broken]);
    assert_eq!((o.status.code(), stderr_json(&o)["error"].as_str()), (Some(2), Some("io")));
}

#[test]
fn facewidth_and_ckcheck() {
    let f = Files::new();
    let stream = f.put(
        "mixed.rot",
        [solids::cube(), solids::k7_torus(), solids::cycle(4)].iter().map(write_rot).collect::<String>(),
    );
    assert_eq!(stdout(&lopsp(&["facewidth", &stream])), "inf\n3\ninf\n");
    for method in ["direct", "cycles"] {
        let o = lopsp(&["ckcheck", &stream, "-k", "3", "--method", method]);
        assert_eq!(o.status.code(), Some(1));
        assert_eq!(stdout(&o), "yes\nyes\nno\n");
        assert_eq!(stderr_json(&o)["error"], "check_failed");
        let o = lopsp(&["ckcheck", &stream, "-k", "2", "--method", method]);
        assert_eq!((o.status.code(), stdout(&o)), (Some(0), "yes\nyes\nyes\n".to_string()));
    }
}

#[test]
fn iso_across_formats() {
    let f = Files::new();
    let cube = f.graph("cube.rot", &solids::cube());
    let pc = f.put("cube.pc", write_planar_code(&[solids::cube()]).unwrap());
    let octa = f.graph("octa.rot", &solids::octahedron());
    assert_eq!(stdout(&lopsp(&["iso", &cube, &pc])), "yes\n");
    let o = lopsp(&["iso", &cube, &octa]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "no\n".to_string()));
    // the snub cube is chiral
    let snub = lopsp(&["apply", "snub", &cube]);
    let a = f.put("snub.rot", &snub.stdout);
    let mirror = f.graph("mirror.rot", &parse_rot_stream(&stdout(&snub)).unwrap()[0].mirror());
    assert_eq!(lopsp(&["iso", &a, &mirror]).status.code(), Some(1));
    assert_eq!(lopsp(&["iso", &a, &mirror, "--reflect"]).status.code(), Some(0));
    let c1 = lopsp(&["canon", &a, "--reflect"]);
    let c2 = lopsp(&["canon", &mirror, "--reflect"]);
    assert_eq!(c1.stdout, c2.stdout);
}

#[test]
fn apply_is_deterministic_and_path_independent() {
    let f = Files::new();
    let k7 = f.graph("k7.rot", &solids::k7_torus());
    let minimal = lopsp(&["apply", "gyro", &k7]);
    let r1 = lopsp(&["apply", "gyro", &k7, "--cut-path", "random", "--seed", "5"]);
    let r2 = lopsp(&["apply", "gyro", &k7, "--cut-path", "random", "--seed", "5"]);
    assert!(minimal.status.success());
    assert_eq!(r1.stdout, r2.stdout);
    assert_eq!(r1.stdout, minimal.stdout);
}

#[test]
fn apply_streams_keep_input_order_and_write_files() {
    let f = Files::new();
    let inputs = [solids::tetrahedron(), solids::cube(), solids::dodecahedron(), solids::k7_torus()];
    let stream = f.put("in.rot", inputs.iter().map(write_rot).collect::<String>());
    let out = f.dir.path().join("out.rot");
    let o = lopsp(&["apply", "dual", &stream, "-o", out.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let gs = parse_rot_stream(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let fv: Vec<_> = gs.iter().map(EmbeddedGraph::f_vector).collect();
    assert_eq!(fv, vec![(4, 6, 4), (6, 12, 8), (12, 30, 20), (14, 21, 7)]);
    // planar code input works the same
    let pc = f.put("in.pc", write_planar_code(&inputs[..3]).unwrap());
    let o = lopsp(&["apply", "dual", &pc]);
    assert_eq!(parse_rot_stream(&stdout(&o)).unwrap().len(), 3);
}

#[test]
fn convert_gives_an_equivalent_lopsp() {
    let f = Files::new();
    let cube = f.graph("cube.rot", &solids::cube());
    let o = lopsp(&["convert", "ambo"]);
    assert!(stdout(&o).starts_with("lopsp "));
    let converted = f.put("ambo2.lopsp", &o.stdout);
    assert_eq!(stdout(&lopsp(&["validate", &converted])), "valid\n");
    assert_eq!(lopsp(&["apply", &converted, &cube]).stdout, lopsp(&["apply", "ambo", &cube]).stdout);
}

#[test]
fn catalog_listing_and_override() {
    let o = lopsp(&["catalog"]);
    let names: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    assert_eq!(names, ["identity", "dual", "truncation", "ambo", "join", "gyro", "snub"]);
    assert!(stdout(&o).contains("gyro\tlopsp\t5\n"));
    let shipped = include_str!("../catalog/gyro.lopsp");
    assert_eq!(stdout(&lopsp(&["catalog", "gyro"])), shipped);

    let f = Files::new();
    f.put("gyro.lopsp", include_str!("../catalog/dual.lopsp"));
    f.put("twice.lopsp", include_str!("../catalog/identity.lopsp"));
    let env = [("LOPSP_CATALOG_DIR", f.dir.path())];
    let cube = f.graph("cube.rot", &solids::cube());
    let o = run_with(&["catalog"], None, &env);
    assert!(stdout(&o).ends_with("twice\tlopsp\t1\n"));
    let overridden = run_with(&["apply", "gyro", &cube], None, &env);
    assert_eq!(overridden.stdout, lopsp(&["apply", "dual", &cube]).stdout);
}

#[test]
fn ddsymbol_and_planar_code_output() {
    let o = lopsp(&["ddsymbol", "identity"]);
    let text = stdout(&o);
    assert!(text.starts_with("dd 2\n"));
    assert!(text.contains("m01: 6 6\n") && text.contains("m02: 2 2\n") && text.contains("m12: 3 3\n"));
    let f = Files::new();
    let cube = f.graph("cube.rot", &solids::cube());
    let o = lopsp(&["canon", &cube, "--planar-code"]);
    let gs = parse_planar_code(&o.stdout).unwrap();
    assert!(gs[0].is_isomorphic(&solids::cube(), false));
}
