//! End-to-end tests for the `caps` binary: every subcommand is driven the
//! way a shell user would drive it, and exit codes are part of the contract
//! (0 success, 1 failed check, 2 usage or infrastructure error).

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn caps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_caps"))
        .args(args)
        .output()
        .expect("spawning the caps binary")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process exited normally")
}

/// Lines that carry point coordinates: not comments, not the header.
fn data_rows(stdout: &str) -> Vec<&str> {
    stdout
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("PG") && !l.trim().is_empty())
        .collect()
}

fn write_temp(contents: &str) -> NamedTempFile {
    let mut file = NamedTempFile::new().expect("temp file");
    file.write_all(contents.as_bytes()).expect("writing temp file");
    file
}

#[test]
fn construct_elliptic_quadric_q3_prints_ten_points() {
    let out = caps(&["construct", "elliptic-quadric", "--q", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("10 points in PG(3,3); cap: true"), "{text}");
    assert!(text.lines().any(|l| l == "PG 3 3"), "missing header: {text}");
    assert_eq!(data_rows(&text).len(), 10, "{text}");
}

#[test]
fn construct_list_covers_every_construction() {
    let out = caps(&["construct", "--list"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    for name in [
        "elliptic-quadric",
        "hyperbolic-quadric",
        "tits-ovoid",
        "hyperoval-pg24",
        "hyperplane-complement",
        "cap11-pg43",
        "direct-sum",
        "pure-tensor",
        "subgeometry",
        "extraspecial-orbits",
        "psu42-triple",
    ] {
        assert!(text.contains(name), "missing {name} in list output");
    }
}

#[test]
fn construct_without_required_flag_is_a_usage_error() {
    let out = caps(&["construct", "elliptic-quadric"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("--q"), "{}", stderr_of(&out));
}

#[test]
fn construct_unknown_name_is_a_usage_error() {
    let out = caps(&["construct", "no-such-thing"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("unknown construction"), "{}", stderr_of(&out));
}

#[test]
fn check_round_trips_a_constructed_cap() {
    let built = caps(&["construct", "hyperoval-pg24"]);
    assert_eq!(exit_code(&built), 0);
    let file = write_temp(&stdout_of(&built));
    let out = caps(&["check", "--points", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out).trim(), "cap: 6 points in PG(2,4); complete: true");
}

#[test]
fn check_rejects_a_collinear_triple_with_a_witness() {
    let file = write_temp("PG 2 2\n0,0,1\n0,1,0\n0,1,1\n");
    let out = caps(&["check", "--points", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout_of(&out);
    assert!(text.starts_with("not a cap:"), "{text}");
    assert!(text.contains("(0,0,1)") && text.contains("(0,1,1)"), "{text}");
}

#[test]
fn check_reads_points_from_stdin() {
    let built = caps(&["construct", "cap11-pg43"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_caps"))
        .args(["check", "--points", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawning the caps binary");
    child
        .stdin
        .take()
        .expect("child stdin")
        .write_all(&built.stdout)
        .expect("writing to child stdin");
    let out = child.wait_with_output().expect("child exit");
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("cap: 11 points in PG(4,3)"), "{}", stdout_of(&out));
}

#[test]
fn check_missing_file_is_an_infrastructure_error() {
    let out = caps(&["check", "--points", "/no/such/file"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("error:"), "{}", stderr_of(&out));
}

#[test]
fn chord_reports_the_constant_profile_of_an_ovoid() {
    let built = caps(&["construct", "elliptic-quadric", "--q", "3"]);
    let file = write_temp(&stdout_of(&built));
    let out = caps(&["chord", "--points", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("cap size k = 10, external points m = 30, q = 3"), "{text}");
    assert!(text.contains("chord numbers: constant 3"), "{text}");
    assert!(text.contains("sum over external points: 90 (pair count times q - 1: 90)"), "{text}");
    assert!(text.contains("= 3 (integer: true)"), "{text}");
}

#[test]
fn chord_flags_an_uneven_profile() {
    // Four points of a conic in PG(2,3) minus one: still a cap, but the
    // chord numbers are no longer constant once the symmetry is broken.
    let file = write_temp("PG 2 3\n0,0,1\n0,1,0\n1,1,1\n");
    let out = caps(&["chord", "--points", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("chord numbers: min 0, max"), "{text}");
}

#[test]
fn singer_partitions_pg43_into_eleven_caps() {
    let out = caps(&["singer", "--r", "4", "--q", "3", "--n", "11"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("cyclic group of order 121 acting on the 121 points of PG(4,3)"));
    assert!(text.contains("11 orbits of size 11; caps: 11 of 11"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("orbit ")).count(), 11);
}

#[test]
fn singer_rejects_a_non_divisor() {
    let out = caps(&["singer", "--r", "2", "--q", "2", "--n", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("does not divide"), "{}", stderr_of(&out));
}

#[test]
fn search_recovers_the_known_maximum_and_pipes_into_check() {
    let out = caps(&["search", "--r", "2", "--q", "4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("maximum cap size 6 (bound 6, exact)"), "{text}");
    assert_eq!(data_rows(&text).len(), 6, "{text}");

    let file = write_temp(&text);
    let checked = caps(&["check", "--points", file.path().to_str().unwrap()]);
    assert_eq!(exit_code(&checked), 0);
    assert!(stdout_of(&checked).contains("cap: 6 points"), "{}", stdout_of(&checked));
}

#[test]
fn verify_rejects_conflicting_output_flags() {
    let out = caps(&["verify", "--json", "--text"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_aborts_when_the_group_limit_is_too_low() {
    // A limit below the smallest gated-in collineation group makes the run
    // undecidable, which is an infrastructure failure, not a check failure.
    let out = caps(&["verify", "--limit", "1000", "--union-budget", "1000"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("over the enumeration limit"), "{}", stderr_of(&out));
}
