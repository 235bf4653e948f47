use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn g2c(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2c")).args(args).output().expect("spawn g2c")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn tmp(dir: &tempfile::TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

#[test]
fn solve_qsym_reports_unit_radius() {
    let o = g2c(&["solve", &fixture("sq4_qsym.json")]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rec: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((rec["radius"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert_eq!(rec["assignment"].as_array().unwrap().len(), 4);
    assert_eq!(rec["centers"].as_array().unwrap().len(), 2);
    assert!(rec["branch_stats"].is_object());
}

#[test]
fn self_intersecting_polygon_exits_one() {
    assert_eq!(code(&g2c(&["solve", &fixture("bowtie.json")])), 1);
}

#[test]
fn point_outside_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = tmp(&dir, "outside.json");
    std::fs::write(&p, r#"{"polygon":[[0,0],[1,0],[0,1]],"points":[[2,2]]}"#).unwrap();
    assert_eq!(code(&g2c(&["solve", p.to_str().unwrap()])), 2);
}

#[test]
fn bad_epsilon_exits_one() {
    assert_eq!(code(&g2c(&["solve", "--epsilon", "0.5", &fixture("sq4_qsym.json")])), 1);
    assert_eq!(code(&g2c(&["solve", "--epsilon", "0", &fixture("sq4_qsym.json")])), 1);
}

#[test]
fn unknown_flag_exits_one() {
    assert_eq!(code(&g2c(&["solve", "--bogus", &fixture("sq4_qsym.json")])), 1);
}

#[test]
fn oracle_agrees_on_random_fixture() {
    let o = g2c(&["solve", "--oracle", &fixture("rnd_seed7.json")]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn gen_respects_sizes() {
    let o = g2c(&["gen", "--family", "convex", "--n", "8", "--m", "5", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    let inst: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(inst["polygon"].as_array().unwrap().len(), 8);
    assert_eq!(inst["points"].as_array().unwrap().len(), 5);
}

#[test]
fn gen_is_deterministic() {
    for family in ["convex", "star", "comb", "random"] {
        let a = g2c(&["gen", "--seed", "1", "--family", family]);
        let b = g2c(&["gen", "--seed", "1", "--family", family]);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{family}");
    }
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&g2c(&["gen", "--n", "2"])), 1);
    assert_eq!(code(&g2c(&["gen", "--m", "0"])), 1);
    assert_eq!(code(&g2c(&["gen", "--family", "spiral"])), 1);
}

#[test]
fn generated_instances_solve() {
    let dir = tempfile::tempdir().unwrap();
    for (seed, family) in [("3", "star"), ("4", "comb"), ("5", "random")] {
        let p = tmp(&dir, &format!("{family}.json"));
        let o =
            g2c(&["gen", "--seed", seed, "--family", family, "--n", "10", "--m", "6", "--out", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let o = g2c(&["solve", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{family}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct Inst {
    polygon: Vec<[f64; 2]>,
    points: Vec<[f64; 2]>,
}

#[test]
fn instance_round_trips_exactly() {
    let o = g2c(&["gen", "--seed", "11", "--n", "9", "--m", "4"]);
    let inst: Inst = serde_json::from_slice(&o.stdout).unwrap();
    let again = serde_json::to_string_pretty(&inst).unwrap() + "\n";
    assert_eq!(again, String::from_utf8(o.stdout).unwrap());
}

#[test]
fn render_with_and_without_solution() {
    let dir = tempfile::tempdir().unwrap();
    let sol = tmp(&dir, "sol.json");
    let with = tmp(&dir, "with.svg");
    let without = tmp(&dir, "without.svg");
    let inst = fixture("sq4_qsym.json");
    assert_eq!(code(&g2c(&["solve", &inst, "--out", sol.to_str().unwrap()])), 0);

    assert_eq!(code(&g2c(&["render", &inst, sol.to_str().unwrap(), "--out", with.to_str().unwrap()])), 0);
    let svg = std::fs::read_to_string(&with).unwrap();
    assert!(svg.contains(r#"version="1.1""#));
    assert_eq!(svg.matches(r#"class="center "#).count(), 2);
    assert_eq!(svg.matches(r#"class="disk "#).count(), 2);
    assert_eq!(svg.matches(r#"class="point""#).count(), 4);
    assert_eq!(svg.matches(r#"class="hull""#).count(), 1);
    assert!(svg.contains(r#"viewBox="-0.200000 -0.200000 4.400000 4.400000""#));

    assert_eq!(code(&g2c(&["render", &inst, "--out", without.to_str().unwrap()])), 0);
    let svg = std::fs::read_to_string(&without).unwrap();
    assert!(!svg.contains("class=\"disk"));
    assert!(!svg.contains("class=\"center"));
}

#[test]
fn render_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = tmp(&dir, "bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = tmp(&dir, "x.svg");
    assert_eq!(code(&g2c(&["render", bad.to_str().unwrap(), "--out", out.to_str().unwrap()])), 1);
    assert_eq!(code(&g2c(&["render", "/nonexistent.json", "--out", out.to_str().unwrap()])), 1);
}

#[test]
fn render_rejects_a_solution_that_does_not_cover() {
    let dir = tempfile::tempdir().unwrap();
    let sol = tmp(&dir, "sol.json");
    std::fs::write(
        &sol,
        r#"{"radius":0.5,"centers":[[2,1],[2,3]],"pair":[0,2],"assignment":[1,2,2,1],"branch_stats":{}}"#,
    )
    .unwrap();
    let out = tmp(&dir, "x.svg");
    assert_eq!(
        code(&g2c(&["render", &fixture("sq4_qsym.json"), sol.to_str().unwrap(), "--out", out.to_str().unwrap()])),
        1
    );
}

#[test]
fn oracle_command_matches_solver() {
    let a: Value = serde_json::from_slice(&g2c(&["oracle", &fixture("l6_arms.json")]).stdout).unwrap();
    let b: Value = serde_json::from_slice(&g2c(&["solve", &fixture("l6_arms.json")]).stdout).unwrap();
    let (ra, rb) = (a["radius"].as_f64().unwrap(), b["radius"].as_f64().unwrap());
    assert!((ra - rb).abs() <= 1e-4 * rb.max(1.0), "{ra} vs {rb}");
}
