use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use splitthick::{fixtures, io, verify_certificate};
use splitthick_cli::draw::count_crossings;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_splitthick"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Generates a family into a temp file.
fn gen(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    write(dir, name, &stdout(&o))
}

fn edge_lines(text: &str) -> usize {
    text.lines().filter(|l| !l.starts_with('#') && !l.starts_with('n')).count()
}

#[test]
fn gen_families() {
    assert_eq!(edge_lines(&stdout(&run(&["gen", "complete", "5"]))), 10);
    assert_eq!(edge_lines(&stdout(&run(&["gen", "bipartite", "7", "8"]))), 56);
    assert_eq!(edge_lines(&stdout(&run(&["gen", "double-k12"]))), 132);
    let a = run(&["gen", "random", "20", "40", "--seed", "9"]);
    assert_eq!(stdout(&a), stdout(&run(&["gen", "random", "20", "40", "--seed", "9"])));
    assert_eq!(edge_lines(&stdout(&a)), 40);
    assert_eq!(code(&run(&["gen", "random", "4", "7"])), 3);
    assert_eq!(code(&run(&["gen", "complete", "0"])), 3);
}

#[test]
fn gen_sat_is_parseable_and_seeded() {
    let a = stdout(&run(&["gen", "sat", "5", "4", "--seed", "3"]));
    assert_eq!(a, stdout(&run(&["gen", "sat", "5", "4", "--seed", "3"])));
    let inst = io::parse_sat(&a).unwrap();
    assert_eq!((inst.num_vars, inst.clauses.len()), (5, 4));
}

#[test]
fn reduction_from_sat_file() {
    let dir = TempDir::new().unwrap();
    let sat = write(&dir, "f.cnf", fixtures::EXAMPLE_CNF);
    let o = run(&["gen", "reduction", "--sat", path(&sat), "--kblock", "k78"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let g = io::parse_edge_list(&stdout(&o)).unwrap();
    let expected = splitthick::hardness::reduce(&fixtures::example_formula(), splitthick::hardness::KBlock::K78).unwrap();
    assert_eq!(g, expected.graph);
    assert!(g.max_degree() <= 15);
}

#[test]
fn bounds_reports() {
    let dir = TempDir::new().unwrap();
    let k12 = gen(&dir, "k12", &["complete", "12"]);
    assert_eq!(stdout(&run(&["bounds", path(&k12)])).trim(), "lower 2 (euler,nonplanar,complete) upper 2 (complete)");
    let k79 = gen(&dir, "k79", &["bipartite", "7", "9"]);
    assert!(stdout(&run(&["bounds", path(&k79)])).starts_with("lower 3 "));
    let pet = gen(&dir, "pet", &["petersen"]);
    let line = stdout(&run(&["bounds", path(&pet)]));
    assert!(line.starts_with("lower 2 (nonplanar) upper 2 ("), "{line}");
    assert!(line.contains("degree"));
}

#[test]
fn parse_errors_are_located_and_exit_3() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad", "n 3\n0 1\n1 x\n");
    let o = run(&["bounds", path(&bad)]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    assert_eq!(code(&run(&["bounds", "/nonexistent/file"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 3);
}

#[test]
fn degree_split_then_verify() {
    let dir = TempDir::new().unwrap();
    let k5 = gen(&dir, "k5", &["complete", "5"]);
    let o = run(&["split", path(&k5), "--method", "degree"]);
    assert_eq!(code(&o), 0);
    let cert = io::parse_certificate(&stdout(&o)).unwrap();
    assert_eq!(cert.max_copies(), 2);
    let file = write(&dir, "c.json", &stdout(&o));
    let v = run(&["verify", path(&file), "-k", "2"]);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).starts_with("ACCEPT"));
    // a ceiling below what the method needs is a rejection
    let k7 = gen(&dir, "k7", &["complete", "7"]);
    assert_eq!(code(&run(&["split", path(&k7), "--method", "degree", "-k", "2"])), 1);
}

#[test]
fn exact_exit_codes() {
    let dir = TempDir::new().unwrap();
    let k6 = gen(&dir, "k6", &["complete", "6"]);
    let k5 = gen(&dir, "k5", &["complete", "5"]);
    let found = run(&["split", path(&k6), "--method", "exact", "-k", "2"]);
    assert_eq!(code(&found), 0);
    assert!(stderr(&found).starts_with("FOUND"));
    assert!(verify_certificate(&io::parse_certificate(&stdout(&found)).unwrap(), 2).accepted());
    let unsat = run(&["split", path(&k5), "--method", "exact", "-k", "1"]);
    assert_eq!(code(&unsat), 1);
    assert!(stderr(&unsat).starts_with("UNSAT"));
    let exhausted = run(&["split", path(&k6), "--method", "exact", "-k", "2", "--budget-nodes", "1"]);
    assert_eq!(code(&exhausted), 2);
    assert!(stdout(&exhausted).is_empty());
    // without -k the search finds the smallest k
    let auto = run(&["split", path(&k5), "--method", "exact"]);
    assert_eq!(code(&auto), 0);
    assert!(stderr(&auto).contains("thickness 2"));
}

#[test]
fn columns_and_method_mismatch() {
    let dir = TempDir::new().unwrap();
    let b = gen(&dir, "b", &["bipartite", "6", "9"]);
    let o = run(&["split", path(&b), "--method", "columns"]);
    assert_eq!(code(&o), 0);
    assert_eq!(io::parse_certificate(&stdout(&o)).unwrap().max_copies(), 3);
    let k5 = gen(&dir, "k5", &["complete", "5"]);
    assert_eq!(code(&run(&["split", path(&k5), "--method", "columns"])), 3);
    assert_eq!(code(&run(&["split", path(&k5), "--method", "torus"])), 3);
}

#[test]
fn surface_splits_from_fixtures() {
    let dir = TempDir::new().unwrap();
    for (name, method) in [("k7-torus", "torus"), ("k5-torus", "torus"), ("k6-signed", "projective"), ("k5-signed", "projective")] {
        let f = gen(&dir, name, &["fixture", name]);
        let o = run(&["split", path(&f), "--method", method]);
        assert_eq!(code(&o), 0, "{name}: {}", stderr(&o));
        assert!(verify_certificate(&io::parse_certificate(&stdout(&o)).unwrap(), 2).accepted());
    }
}

#[test]
fn verify_fixtures_and_mutants() {
    let dir = TempDir::new().unwrap();
    let k12 = gen(&dir, "k12.json", &["fixture", "k12-empire"]);
    let o = run(&["verify", path(&k12), "-k", "2", "--empire"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("44 faces"));
    let k78 = gen(&dir, "k78.json", &["fixture", "k78-quad"]);
    let o = run(&["verify", path(&k78), "-k", "2", "--quad"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("lengths 4..=4"));
    // the triangulation is not a quadrangulation
    assert_eq!(code(&run(&["verify", path(&k12), "-k", "2", "--quad"])), 1);
    assert_eq!(code(&run(&["verify", path(&k12), "-k", "1"])), 1);

    let mut cert = fixtures::k12_empire();
    cert.edges.remove(0);
    let broken = write(&dir, "broken.json", &io::emit_certificate(&cert));
    let o = run(&["verify", path(&broken), "-k", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("REJECT"));
    assert!(stderr(&o).contains("uncovered-edge"), "{}", stderr(&o));
}

fn circles(svg: &str) -> usize {
    svg.matches("<circle").count()
}

fn fills(svg: &str) -> std::collections::BTreeSet<String> {
    svg.split("fill=\"hsl(").skip(1).map(|s| s.split('"').next().unwrap().to_string()).collect()
}

fn coords(svg: &str, attrs: [&str; 2]) -> Vec<(f64, f64)> {
    let value = |s: &str, key: &str| -> f64 {
        let start = s.find(&format!("{key}=\"")).unwrap() + key.len() + 2;
        s[start..].split('"').next().unwrap().parse().unwrap()
    };
    svg.lines().filter(|l| l.starts_with("<circle")).map(|l| (value(l, attrs[0]), value(l, attrs[1]))).collect()
}

#[test]
fn draw_k4_without_crossings() {
    let dir = TempDir::new().unwrap();
    let k4 = gen(&dir, "k4", &["complete", "4"]);
    let svg = stdout(&run(&["draw", path(&k4)]));
    assert_eq!(circles(&svg), 4);
    assert_eq!(svg.matches("<line").count(), 6);
    let pos = coords(&svg, ["cx", "cy"]);
    let g = io::parse_edge_list(&std::fs::read_to_string(&k4).unwrap()).unwrap();
    assert_eq!(count_crossings(g.edges(), &pos), 0);
}

#[test]
fn draw_certificates_color_copies_alike() {
    let dir = TempDir::new().unwrap();
    let k5 = gen(&dir, "k5", &["complete", "5"]);
    let cert_text = stdout(&run(&["split", path(&k5), "--method", "exact", "-k", "2"]));
    let cert = io::parse_certificate(&cert_text).unwrap();
    let file = write(&dir, "c.json", &cert_text);
    let svg = stdout(&run(&["draw", path(&file)]));
    assert_eq!(circles(&svg), cert.total_copies());
    assert_eq!(fills(&svg).len(), 5);

    let torus = gen(&dir, "t", &["fixture", "k7-torus"]);
    let cert_text = stdout(&run(&["split", path(&torus), "--method", "torus"]));
    let cert = io::parse_certificate(&cert_text).unwrap();
    let file = write(&dir, "t.json", &cert_text);
    let svg = stdout(&run(&["draw", path(&file)]));
    assert_eq!(circles(&svg), cert.total_copies());
    assert_eq!(fills(&svg).len(), 7);
}

#[test]
fn draw_refuses_nonplanar_input() {
    let dir = TempDir::new().unwrap();
    let k5 = gen(&dir, "k5", &["complete", "5"]);
    let o = run(&["draw", path(&k5)]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("not planar"));
}

#[test]
fn commands_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "g", &["planar", "40", "--keep", "0.7", "--seed", "4"]);
    for args in [vec!["draw", path(&g)], vec!["split", path(&g), "--method", "pseudoforest"], vec!["bounds", path(&g)]] {
        assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    }
}
