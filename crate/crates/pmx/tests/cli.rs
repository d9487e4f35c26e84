//! End-to-end tests of the `pmx` binary: exit codes, determinism, and the
//! documented command surface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn pmx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmx"))
        .args(args)
        .output()
        .expect("pmx runs")
}

fn path_str(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn get(dir: &Path, name: &str, extra: &[&str], file: &str) -> String {
    let out = path_str(dir, file);
    let mut args = vec!["catalog", "get", name];
    args.extend_from_slice(extra);
    args.extend_from_slice(&["--out", &out]);
    let result = pmx(&args);
    assert!(
        result.status.success(),
        "catalog get {} failed: {}",
        name,
        String::from_utf8_lossy(&result.stderr)
    );
    out
}

#[test]
fn catalog_list_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let list = pmx(&["catalog", "list"]);
    assert!(list.status.success());
    let text = String::from_utf8(list.stdout).unwrap();
    assert!(text.contains("medial") && text.contains("cube"));

    let cube = get(dir.path(), "cube", &[], "cube.pmx");
    let out = pmx(&["validate", &cube]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("ok"));
}

#[test]
fn medial_pipeline_matches_golden_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let cube = get(dir.path(), "cube", &[], "cube.pmx");
    let oracle = get(dir.path(), "cuboctahedron", &[], "cuboctahedron.pmx");
    let out = path_str(dir.path(), "medial_cube.pmx");
    assert!(
        pmx(&["apply", "--op", "medial", "--in", &cube, "--out", &out])
            .status
            .success()
    );
    let iso = pmx(&["iso", &out, &oracle]);
    assert!(
        iso.status.success(),
        "{}",
        String::from_utf8_lossy(&iso.stderr)
    );
    assert!(String::from_utf8_lossy(&iso.stdout).contains("isomorphic"));

    let triangle = get(dir.path(), "polygon", &["--rank", "3"], "triangle.pmx");
    let not_iso = pmx(&["iso", &cube, &triangle]);
    assert_eq!(not_iso.status.code(), Some(1));
}

#[test]
fn deterministic_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let a = get(dir.path(), "cube", &[], "a.pmx");
    let b = get(dir.path(), "cube", &[], "b.pmx");
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn compose_equals_catalog_composite() {
    let dir = tempfile::tempdir().unwrap();
    let composed = path_str(dir.path(), "mm.pmx");
    assert!(
        pmx(&["compose", "--first", "medial", "--second", "medial", "--out", &composed])
            .status
            .success()
    );
    let stock = get(dir.path(), "wythoff_02", &[], "w02.pmx");
    assert_eq!(
        std::fs::read(composed).unwrap(),
        std::fs::read(stock).unwrap()
    );
}

#[test]
fn mix_components_and_root() {
    let dir = tempfile::tempdir().unwrap();
    let cube = get(dir.path(), "cube", &[], "cube.pmx");
    let two = get(dir.path(), "two_orbit", &["--rank", "3"], "two.pmx");
    let mixed = path_str(dir.path(), "mixed.pmx");
    assert!(pmx(&["mix", &cube, &two, "--out", &mixed]).status.success());
    let out = pmx(&["components", &mixed]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("components: 2"), "{}", text);
    assert!(text.contains("48 48"), "{}", text);

    // rooted self-mix: the component of the diagonal root is the cube again
    let rooted = path_str(dir.path(), "rooted.pmx");
    assert!(
        pmx(&["apply", "--op", "mix", "--in", &cube, "--out", &rooted, "--root", "0,0"])
            .status
            .success()
    );
    let iso = pmx(&["iso", &rooted, &cube]);
    assert!(
        iso.status.success(),
        "{}",
        String::from_utf8_lossy(&iso.stderr)
    );
}

#[test]
fn aut_stg_and_quotient() {
    let dir = tempfile::tempdir().unwrap();
    let cube = get(dir.path(), "cube", &[], "cube.pmx");
    let out = pmx(&["aut", &cube]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("order: 48"), "{}", text);
    assert!(text.contains("orbits: 1"), "{}", text);

    // medial of the cube has a two-vertex symmetry type graph
    let med = path_str(dir.path(), "med.pmx");
    assert!(
        pmx(&["apply", "--op", "medial", "--in", &cube, "--out", &med])
            .status
            .success()
    );
    let stg = pmx(&["stg", &med]);
    assert!(stg.status.success());
    let text = String::from_utf8(stg.stdout).unwrap();
    assert!(text.contains("\"vertex_count\": 2"), "{}", text);

    // quotient by no generators is the identity
    let q = path_str(dir.path(), "q.pmx");
    assert!(pmx(&["quotient", &cube, "--gens", "[]", "--out", &q])
        .status
        .success());
    let iso = pmx(&["iso", &cube, &q]);
    assert!(iso.status.success());

    // stg with an explicit trivial subgroup returns the graph itself
    let stg = pmx(&["stg", &cube, "--gens", "[]"]);
    assert!(stg.status.success());
    assert!(String::from_utf8_lossy(&stg.stdout).contains("\"vertex_count\": 48"));

    // generators can come from a file
    let gens_file = dir.path().join("gens.json");
    std::fs::write(&gens_file, "[]").unwrap();
    let stg = pmx(&["stg", &cube, "--gens", gens_file.to_str().unwrap()]);
    assert!(stg.status.success());
}

#[test]
fn derived_from_file() {
    let dir = tempfile::tempdir().unwrap();
    // pyramid over the triangle, via its finite-voltage form
    let triangle = pmx_lib_triangle();
    let gens = pmx::symmetry::distinguished_generators(&triangle, 0).unwrap();
    let op = pmx::catalog::pyramid_operator(2).unwrap();
    let vp = pmx::voltage::substitute_generators(&op, &gens).unwrap();
    let file = dir.path().join("pyramid_voltages.pmx");
    std::fs::write(
        &file,
        pmx::pmxfile::write_pmx(&pmx::pmxfile::PmxObject::VoltagePremaniplex(vp)),
    )
    .unwrap();
    let out = path_str(dir.path(), "derived.pmx");
    assert!(pmx(&["derived", file.to_str().unwrap(), "--out", &out])
        .status
        .success());
    let derived = match pmx::pmxfile::parse_pmx(&std::fs::read_to_string(&out).unwrap()).unwrap() {
        pmx::pmxfile::PmxObject::Premaniplex(x) => x,
        _ => panic!("expected premaniplex"),
    };
    assert_eq!(derived.vertex_count(), 24);
    let direct = op.apply(&triangle).unwrap();
    assert!(derived.find_isomorphism(&direct, None).is_some());
}

fn pmx_lib_triangle() -> pmx::Premaniplex {
    pmx::catalog::sample("polygon", &[3]).unwrap()
}

#[test]
fn export_dot_writes_labels() {
    let dir = tempfile::tempdir().unwrap();
    let med = get(dir.path(), "medial", &[], "medial.pmx");
    let out: PathBuf = dir.path().join("medial.dot");
    assert!(pmx(&["export-dot", &med, "--out", out.to_str().unwrap()])
        .status
        .success());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("graph pmx {"));
    assert!(text.contains("label=\"r1\""));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // 2: usage errors
    let out = pmx(&[
        "catalog",
        "get",
        "no_such_thing",
        "--out",
        &path_str(dir.path(), "x.pmx"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = pmx(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    // 1: validation failures
    let bad = dir.path().join("bad.pmx");
    std::fs::write(
        &bad,
        r#"{"format_version":1,"kind":"premaniplex","rank":3,"vertex_count":2,"adjacency":[[1,1],[0,1],[1,0]]}"#,
    )
    .unwrap();
    let out = pmx(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = pmx(&["validate", &path_str(dir.path(), "missing.pmx")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parametric_catalog_operators() {
    let dir = tempfile::tempdir().unwrap();
    let pyramid = get(dir.path(), "pyramid", &["--rank", "2"], "pyr2.pmx");
    let square = get(dir.path(), "polygon", &["--rank", "4"], "square.pmx");
    let out = path_str(dir.path(), "sp.pmx");
    assert!(
        pmx(&["apply", "--op", &pyramid, "--in", &square, "--out", &out])
            .status
            .success()
    );
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"vertex_count\": 32"));

    // k_bubble takes its parameter from --param; section takes k,l
    let _ = get(
        dir.path(),
        "k_bubble",
        &["--rank", "3", "--param", "0"],
        "kb.pmx",
    );
    let _ = get(
        dir.path(),
        "section",
        &["--rank", "3", "--param", "-1,2"],
        "sec.pmx",
    );
    // hat2 needs --in
    let hat = path_str(dir.path(), "hat.pmx");
    let out = pmx(&["catalog", "get", "hat2", "--in", &square, "--out", &hat]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
