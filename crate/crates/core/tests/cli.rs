use graphpos::cli::{run_with, EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VERIFY};

fn run(args: &[&str]) -> (i32, String, String) {
    run_stdin(args, "")
}

fn run_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("graphpos").chain(args.iter().copied());
    let code = run_with(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn pos_on_c5() {
    let (code, out, _) = run(&["pos", "Dhc"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("mp=2 gp=3"), "{out}");
    let (_, out, _) = run(&["pos", "Dhc", "--kind", "gp"]);
    assert!(out.starts_with("gp=3"), "{out}");
}

#[test]
fn pos_reads_stdin() {
    let (code, out, _) = run_stdin(&["pos", "-"], ">>graph6<<\nDhc\nC~\n");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("C~ mp=4 gp=4"), "{out}");
    let (code, _, err) = run_stdin(&["pos", "-"], "Dhc\n!!\n");
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn family_claims_line() {
    let (code, out, _) = run(&["family", "pagoda", "4", "--claims"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap().len(), 14);
    assert_eq!(lines.next().unwrap(), "order=13 (ok) mp=2 (ok) gp=8 (ok)");
    let (code, _, _) = run(&["family", "srt-adjusted", "4", "1", "-1", "--claims"]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = run(&["family", "g-of-h", "Dhc", "--claims"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn check_certificates_re_verify() {
    let (code, out, _) = run(&["check", "Dhc", "--set", "0,2", "--kind", "mp"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("ok:"), "{out}");

    let (code, out, _) = run(&["check", "Dhc", "--set", "0,1,2", "--kind", "gp"]);
    assert_eq!(code, EXIT_VERIFY);
    // the violating path's members are themselves a violating set
    let hits = out.split('{').nth(1).unwrap().trim_end().trim_end_matches('}');
    let (code, again, _) = run(&["check", "Dhc", "--set", hits, "--kind", "gp"]);
    assert_eq!(code, EXIT_VERIFY);
    assert_eq!(again, out);
}

#[test]
fn enum_and_shards() {
    let (code, out, _) = run(&["enum", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 21);
    let (_, out, _) = run(&["enum", "5", "--all"]);
    assert_eq!(out.lines().count(), 34);
    let total: usize = (0..3)
        .map(|i| run(&["enum", "6", "--shard", &format!("{i}/3")]).1.lines().count())
        .sum();
    assert_eq!(total, 112);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["family", "pagoda", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["enum", "5", "--shard", "3/3"]).0, EXIT_USAGE);
    assert_eq!(run(&["pos", "Dh!"]).0, EXIT_PARSE);
    assert_eq!(run(&["pos", "C`"]).0, EXIT_USAGE, "disconnected input");
    assert_eq!(run(&["--help"]).0, EXIT_OK);
    assert_eq!(run(&["report", "/nonexistent/dir"]).0, EXIT_PARSE);
}

#[test]
fn search_then_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    let (code, out, err) = run(&["search", "mu", "--cap", "8", "--shards", "2", "--out", out_dir]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("appended 28 record(s)"), "{out}");
    let (code, _, _) = run(&["search", "mex", "7", "2", "--out", out_dir]);
    assert_eq!(code, EXIT_OK);

    let (code, md, _) = run(&["report", out_dir, "--format", "md"]);
    assert_eq!(code, EXIT_OK);
    assert!(md.contains("| 2 | 2 (1) | 5 (1) | 7 (1) |"), "{md}");
    assert!(md.contains("| 3 | - | 3 (1) | 6 (12) | 7 (7) | 8 (2) |"), "{md}");
    assert!(md.contains("| 5 | - | - | - | 5 (1) | 8 (104) |"), "{md}");
    assert!(md.contains("| a=2 n=7 | 9 | 1 |"), "{md}");

    let (code, csv, _) = run(&["report", out_dir, "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let parsed = graphpos::report::parse_csv(&csv).unwrap();
    assert_eq!(parsed, graphpos::search::load_dir(dir.path()).unwrap());

    let (code, out, _) = run(&["verify", "--records", out_dir]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("29 record(s) re-verified"), "{out}");

    std::fs::write(dir.path().join("junk.jsonl"), "{\n").unwrap();
    assert_eq!(run(&["verify", "--records", out_dir]).0, EXIT_PARSE);
}

#[test]
fn results_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(graphpos::cli::RESULTS_ENV, dir.path());
    let (code, _, _) = run(&["search", "circulant", "13"]);
    std::env::remove_var(graphpos::cli::RESULTS_ENV);
    assert_eq!(code, EXIT_OK);
    assert!(dir.path().join("circulant.jsonl").exists());
}

#[test]
fn verify_runs_suites_and_catches_faults() {
    let (code, out, _) = run(&["verify", "--suite", "pagoda,join"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("PASS pagoda"));
    let (code, out, _) = run(&["verify", "--suite", "pagoda", "--inject-fault", "pagoda-edge"]);
    assert_eq!(code, EXIT_VERIFY);
    assert!(out.contains("FAIL pagoda") && out.contains("counterexample"), "{out}");
    assert_eq!(run(&["verify", "--suite", "nonesuch"]).0, EXIT_USAGE);
}
