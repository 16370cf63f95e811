use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn polyvenn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyvenn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

const N2: &str = "pvn 1\nn 2\nrows 3\ncols 1\norigin 0 -1\n1\n3\n2\n";

#[test]
fn gen_prints_pvn() {
    let o = polyvenn(&["gen", "--n", "2", "--method", "scd-aigner"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), N2);
    let o = polyvenn(&["gen", "--n", "3", "--method", "scd-christmas"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("pvn 1\nn 3\nrows 5\ncols 3\n"));
}

#[test]
fn gen_writes_out_file() {
    let path = scratch("gen-out.pvn", "");
    let o = polyvenn(&["gen", "--n", "4", "--method", "naive", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(polyvenn::parse_pvn(&text).unwrap().area(), 20);
}

#[test]
fn gen_rejects_bad_arguments() {
    let o = polyvenn(&["gen", "--n", "2", "--method", "naive"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(polyvenn(&["gen", "--n", "21", "--method", "scd-aigner"]).status.code(), Some(2));
    assert_eq!(polyvenn(&["gen", "--n", "3", "--method", "bogus"]).status.code(), Some(2));
}

#[test]
fn validate_exit_codes() {
    let good = scratch("good.pvn", N2);
    let o = polyvenn(&["validate", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text.ends_with("overall: valid\n"));

    // regions A and B swapped into a row where A is split
    let bad = scratch("bad.pvn", "pvn 1\nn 2\nrows 1\ncols 3\norigin 0 0\n1 2 1\n");
    let o = polyvenn(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL curves_connected"));
    assert!(stdout(&o).ends_with("overall: invalid\n"));

    let garbage = scratch("garbage.pvn", "pvn 2\n");
    assert_eq!(polyvenn(&["validate", garbage.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(polyvenn(&["validate", "/nonexistent/x.pvn"]).status.code(), Some(2));
}

#[test]
fn render_ascii_and_svg() {
    let file = scratch("render.pvn", N2);
    let o = polyvenn(&["render", file.to_str().unwrap(), "--format", "ascii"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n3\n2\n");

    let a = polyvenn(&["render", file.to_str().unwrap(), "--format", "svg"]);
    let b = polyvenn(&["render", file.to_str().unwrap(), "--format", "svg"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path").count(), 2);

    let bad = scratch("render-bad.pvn", "pvn 1\nn 2\nrows 1\ncols 3\norigin 0 0\n1 2 1\n");
    let o = polyvenn(&["render", bad.to_str().unwrap(), "--format", "svg"]);
    assert_eq!(o.status.code(), Some(2));
    // ASCII does not require validity
    assert!(polyvenn(&["render", bad.to_str().unwrap(), "--format", "ascii"]).status.success());
}

#[test]
fn scd_lists_chains() {
    let o = polyvenn(&["scd", "--n", "3", "--method", "aigner"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{},A,AB,ABC\nB,BC\nC,AC\n");
    let o = polyvenn(&["scd", "--n", "4", "--method", "christmas"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn count_classes() {
    let run = |args: &[&str]| stdout(&polyvenn(args)).trim().to_string();
    assert_eq!(run(&["count", "--polyominoes", "5", "--class", "fixed"]), "63");
    assert_eq!(run(&["count", "--polyominoes", "5", "--class", "free"]), "12");
    assert_eq!(run(&["count", "--polyominoes", "6", "--class", "column-convex"]), "196");
    assert_eq!(
        run(&["count", "--polyominoes", "6", "--class", "column-convex", "--oracle"]),
        "196"
    );
    let o = polyvenn(&["count", "--polyominoes", "9", "--class", "fixed"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_exit_codes() {
    let o = polyvenn(&["search", "--n", "2", "--target", "min-area"]);
    assert_eq!(o.status.code(), Some(0));
    let d = polyvenn::parse_pvn(&stdout(&o)).unwrap();
    assert!(polyvenn::validate_venn(&d).overall());
    assert_eq!(d.area(), 3);

    let o = polyvenn(&["search", "--n", "3", "--target", "min-area", "--nodes", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("budget hit after"));

    let o = polyvenn(&["search", "--n", "3", "--target", "fill-box", "--box", "7x1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("exhausted after"));

    let o = polyvenn(&["search", "--n", "3", "--target", "fill-box", "--box", "2x4"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(polyvenn(&["search", "--n", "3", "--target", "fill-box"]).status.code(), Some(2));
    assert_eq!(
        polyvenn(&["search", "--n", "3", "--target", "fill-box", "--box", "seven"]).status.code(),
        Some(2)
    );
    assert_eq!(polyvenn(&["search", "--n", "5", "--target", "min-area"]).status.code(), Some(2));
}
