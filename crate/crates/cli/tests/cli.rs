use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-lcd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn machine(args: &[&str]) -> (i32, Vec<String>) {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    let out = run(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    (out.status.code().unwrap(), text.lines().map(str::to_string).collect())
}

fn has(lines: &[String], line: &str) -> bool {
    lines.iter().any(|l| l == line)
}

#[test]
fn hamming_is_not_euclidean_lcd() {
    let (code, lines) = machine(&["lcd", "check", "--code", &data("ham74.code"), "--sigma", "id"]);
    assert_eq!(code, 1);
    assert!(has(&lines, "verdict=false"));
    assert!(has(&lines, "result.hull_dim=3"));
    assert!(has(&lines, "verification=agree"));
}

#[test]
fn sigma_from_file() {
    let (code, lines) = machine(&["lcd", "check", "--code", &data("rep3.code"), "--sigma", &data("swap.sigma")]);
    assert_eq!(code, 0);
    assert!(has(&lines, "verdict=true"));
}

#[test]
fn make_extends_binary_codes() {
    let (code, lines) = machine(&["lcd", "make", "--code", &data("ham74.code")]);
    assert_eq!(code, 0);
    assert!(has(&lines, "result.n=8"));
    assert!(has(&lines, "result.permutation_only=true"));
}

#[test]
fn cosets_of_seven() {
    let (code, lines) = machine(&["gqc", "cosets", "2", "7"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "result.count=3"));
    assert!(has(&lines, "result.coset.3=3 6 5"));
}

#[test]
fn ternary_lcp() {
    let (code, lines) = machine(&["lcp", "build", "--c1", &data("ternary_a.code"), "--c2", &data("ternary_b.code")]);
    assert_eq!(code, 0);
    assert!(has(&lines, "result.n=3"));
    assert!(has(&lines, "result.intersection_dim=0"));
}

#[test]
fn qr_pair_onegen_and_check() {
    let (code, lines) = machine(&["gqc", "onegen", &data("qr7.gqc"), "--a", "-1"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "result.lcd=true"));
    assert!(has(&lines, "result.lcd_gcd_form=true"));
    let (code, lines) = machine(&["gqc", "check", &data("qr7.gqc"), "--a", "-1", "--test", "lcd"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "verification=agree"));
    let (code, _) = machine(&["gqc", "constituents", &data("qr7.gqc")]);
    assert_eq!(code, 0);
}

#[test]
fn product_spec() {
    let (code, lines) = machine(&["gqc", "product", &data("product.spec")]);
    assert_eq!(code, 0);
    assert!(has(&lines, "result.dimension=6"));
    assert!(has(&lines, "result.n=8"));
}

#[test]
fn abelian_commands() {
    let (code, lines) = machine(&["abelian", "idempotent", "--group", "3", "--code", &data("z3_ideal.code")]);
    assert_eq!(code, 0);
    assert!(has(&lines, "result.idempotent=0 1 1"));
    let (code, _) = machine(&["abelian", "check", "--group", "3", "--code", &data("z3_ideal.code")]);
    assert_eq!(code, 0);
    let (code, _) = machine(&["abelian", "check", "--group", "3", "--code", &data("ham74.code")]);
    assert_eq!(code, 2);
}

#[test]
fn oracle_commands() {
    let (code, lines) = machine(&["oracle", "mindist", &data("ham74.code"), "--jobs", "2"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "result.min_distance=3"));
    let (_, lines) = machine(&["oracle", "intersect", &data("ham74.code"), &data("ham74.code")]);
    assert!(has(&lines, "result.intersection_dim=4"));
    let (code, lines) = machine(&["oracle", "search-sigma", &data("gf5_line.code")]);
    assert_eq!(code, 0);
    assert!(has(&lines, "verdict=true"));
}

#[test]
fn repro_golay() {
    let (code, lines) = machine(&["repro", "golay23", "--jobs", "4"]);
    assert_eq!(code, 0);
    for l in ["result.n=23", "result.k=12", "result.d=7", "result.euclidean_hull_dim=11", "verification=agree"] {
        assert!(has(&lines, l), "missing {l}");
    }
}

#[test]
fn repro_other_suites() {
    for s in ["qr-idempotent-7", "theorem1-binary", "maximal-qc-count"] {
        let (code, lines) = machine(&["repro", s]);
        assert_eq!(code, 0, "{s}: {lines:?}");
    }
    let (_, lines) = machine(&["repro", "maximal-qc-count"]);
    assert!(has(&lines, "result.count=8"));
}

#[test]
fn machine_output_is_stable() {
    let args = ["gqc", "gamma", "2", "7"];
    let strip = |v: Vec<String>| -> Vec<String> { v.into_iter().filter(|l| !l.starts_with("elapsed")).collect() };
    assert_eq!(strip(machine(&args).1), strip(machine(&args).1));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["lcd", "check", "--code", "/nonexistent"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["gqc", "cosets", "2", "6"]).status.code(), Some(2));
    assert_eq!(run(&["repro", "nope"]).status.code(), Some(2));
}

#[test]
fn human_format_mentions_verdict() {
    let out = run(&["lcd", "hull", "--code", &data("ham74.code")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("lcd hull\n"));
    assert!(text.contains("hull_dim"));
}
