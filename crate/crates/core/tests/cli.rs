use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mgraph(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mgraph"))
        .args(args)
        .env_remove("MGRAPH_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn built(family: &str, r: &str) -> String {
    let o = mgraph(&["build", "--family", family, "--r", r], None);
    assert_eq!(code(&o), 0);
    stdout(&o)
}

#[test]
fn build_checks_parameters() {
    assert_eq!(
        code(&mgraph(&["build", "--family", "F", "--r", "4"], None)),
        2
    );
    assert_eq!(
        code(&mgraph(&["build", "--family", "B", "--r", "1"], None)),
        2
    );
    assert_eq!(code(&mgraph(&["build", "--family", "G"], None)), 2);
    assert!(built("G", "3").starts_with("mgf 24\n"));
}

#[test]
fn build_to_file_then_info() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f5.mgf");
    let p = path.to_str().unwrap();
    let o = mgraph(&["build", "--family", "F", "--r", "5", "--out", p], None);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "family=F r=5 n=18 m=90 regular=10 def=2\n");

    let info = stdout(&mgraph(&["info", p], None));
    assert!(info.starts_with("n=18 "), "{info}");
    assert!(
        info.contains(" regular=10 ") && info.contains(" def=2 "),
        "{info}"
    );

    let b2 = stdout(&mgraph(&["info", "-"], Some(&built("B", "2"))));
    assert!(b2.contains(" biregular=(4,3) def=2 "), "{b2}");
    assert!(stdout(&mgraph(&["info"], Some("mgf 2\n0 1 1\n"))).contains(" def=0 "));
}

#[test]
fn parse_errors_exit_2() {
    for bad in [
        "",
        "mgf x\n",
        "mgf 2\n0 2 1\n",
        "mgf 2\n0 1 0\n",
        "mgf 3\n0 1 1\n1 0 1\n",
    ] {
        for cmd in ["info", "verify", "enumerate", "export-dot"] {
            let o = mgraph(&[cmd], Some(bad));
            assert_eq!(code(&o), 2, "{cmd} on {bad:?}");
            assert!(o.stdout.is_empty());
        }
    }
}

#[test]
fn verify_pipelines() {
    let b2 = built("B", "2");
    assert_eq!(
        code(&mgraph(&["verify", "--mode", "all-pairs"], Some(&b2))),
        1
    );
    let g3 = built("G", "3");
    assert_eq!(
        code(&mgraph(&["verify", "--mode", "some-pair"], Some(&g3))),
        1
    );

    let petersen = "mgf 10\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n0 4 1\n0 5 1\n1 6 1\n2 7 1\n3 8 1\n4 9 1\n5 7 1\n7 9 1\n6 9 1\n6 8 1\n5 8 1\n";
    let o = mgraph(&["verify", "--mode", "conjecture"], Some(petersen));
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict=holds\n"));

    // file mode gives the same bytes as the pipe
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b2.mgf");
    std::fs::write(&path, &b2).unwrap();
    let from_file = mgraph(
        &["verify", "--mode", "all-pairs", path.to_str().unwrap()],
        None,
    );
    let from_pipe = mgraph(&["verify", "--mode", "all-pairs"], Some(&b2));
    assert_eq!(from_file.stdout, from_pipe.stdout);
    assert_eq!(code(&from_file), code(&from_pipe));
}

#[test]
fn verify_cap_is_inconclusive() {
    let two_stars = "mgf 8\n0 1 1\n0 2 1\n0 3 1\n4 5 1\n4 6 1\n4 7 1\n";
    let o = mgraph(
        &["verify", "--mode", "some-pair", "--cap", "1"],
        Some(two_stars),
    );
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("verdict=inconclusive\n"));
}

#[test]
fn enumerate_listing() {
    let o = mgraph(&["enumerate"], Some("mgf 3\n0 1 1\n1 2 1\n"));
    assert_eq!(stdout(&o), "0-1\n1-2\ncount=2 exhaustive=true\n");
    let c4 = stdout(&mgraph(
        &["enumerate"],
        Some("mgf 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n"),
    ));
    assert!(c4.ends_with("count=2 exhaustive=true\n"));

    let b2 = built("B", "2");
    let listing = stdout(&mgraph(&["enumerate"], Some(&b2)));
    let g = mgraph::multigraph::parse_mgf(&b2).unwrap();
    let oracle = mgraph::matching::oracle::brute_force_all_maximum_matchings(&g).unwrap();
    assert!(listing.ends_with(&format!("count={} exhaustive=true\n", oracle.len())));

    let capped = stdout(&mgraph(&["enumerate", "--cap", "5"], Some(&b2)));
    assert_eq!(capped.lines().count(), 6);
    assert!(capped.ends_with("count=5 exhaustive=false\n"));
}

#[test]
fn hunt_exit_codes_and_determinism() {
    let cubic = mgraph(
        &[
            "hunt", "--degree", "3", "--min-n", "8", "--max-n", "12", "--count", "50", "--seed",
            "1",
        ],
        None,
    );
    assert_eq!(code(&cubic), 0);
    assert!(stdout(&cubic).contains("counterexamples=0 "));

    assert_eq!(
        code(&mgraph(&["hunt", "--degree", "4", "--count", "0"], None)),
        2
    );
    assert_eq!(
        code(&mgraph(
            &["hunt", "--degree", "3", "--min-n", "5", "--max-n", "5"],
            None
        )),
        2
    );

    let args = [
        "hunt", "--degree", "4", "--min-n", "10", "--max-n", "14", "--count", "100", "--seed", "7",
    ];
    let one = mgraph(&[&args[..], &["--workers", "1"]].concat(), None);
    let four = mgraph(&[&args[..], &["--workers", "4"]].concat(), None);
    let default = mgraph(&args, None);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, default.stdout);
    assert_eq!(code(&one), code(&four));
}

#[test]
fn export_dot_output() {
    let o = mgraph(&["export-dot", "--exposed"], Some("mgf 3\n0 1 2\n1 2 1\n"));
    assert_eq!(code(&o), 0);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph G {\n") && dot.ends_with("}\n"));
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert_eq!(dot.matches("fillcolor").count(), 1);
    let plain = stdout(&mgraph(&["export-dot"], Some("mgf 3\n0 1 2\n1 2 1\n")));
    assert_eq!(plain.matches("fillcolor").count(), 0);
}

#[test]
fn unknown_subcommand_exit_2() {
    assert_eq!(code(&mgraph(&["frobnicate"], None)), 2);
    assert_eq!(code(&mgraph(&[], None)), 2);
}
