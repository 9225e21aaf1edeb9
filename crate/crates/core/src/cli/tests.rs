use super::*;

fn spec_path(name: &str) -> String {
    format!("{}/specs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Outcome {
    run_command(std::iter::once("skewpbw").chain(args.iter().copied()))
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["nf", "x1"]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    let z4 = spec_path("z4.json");
    assert_eq!(run(&["armendariz", "--spec", &z4, "--variant", "pi"]).code, EXIT_USAGE);
    assert_eq!(run(&["armendariz", "--spec", &z4, "--support", "deg"]).code, EXIT_USAGE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
}

#[test]
fn json_report_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["rigid", "--spec", &spec_path("z4.json"), "--json", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_FAILS);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["body"]["command"], "rigid");
    assert_eq!(v["body"]["exit_code"], 1);
    assert_eq!(v["body"]["results"][0]["witness"]["a"], 2);
    assert!(v["timing"]["elapsed_ms"].is_number());
}

#[test]
fn support_lists() {
    let spec = parse_spec(spec_path("z4n2.json")).unwrap();
    let b = parse_support("x2, 1, x1*x2", &spec.ext, 0).unwrap();
    let shown: Vec<String> = b.support().iter().map(|m| m.render(spec.ext.names())).collect();
    assert_eq!(shown, ["1", "x2", "x1*x2"]);
    assert!(parse_support("2*x1", &spec.ext, 0).is_err());
    assert_eq!(parse_support("deg2", &spec.ext, 0).unwrap().support().len(), 6);
}

#[test]
fn max_pairs_gives_exit_3() {
    let out = run(&["armendariz", "--spec", &spec_path("z4.json"), "--max-pairs", "5"]);
    assert_eq!(out.code, EXIT_UNDECIDED);
}

#[test]
fn deg2_prints_an_estimate_first() {
    let out = run(&["armendariz", "--spec", &spec_path("z4.json"), "--support", "deg2"]);
    assert_eq!(out.code, EXIT_OK);
    let second = out.stdout.lines().nth(1).unwrap();
    assert!(second.starts_with("work estimate: 4096 polynomial pairs"), "{second}");
}
