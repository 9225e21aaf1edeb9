//! Load a JSON spec and drive the command layer, the same code the
//! `skewpbw` binary runs.
//!
//! ```text
//! cargo run --example spec_reports
//! ```

use skewpbw::cli::{parse_spec_str, run_command};

const SPEC: &str = r#"{
  "format": 1,
  "ring": {"product": [{"modular": 2}, {"modular": 2}]},
  "variables": 1,
  "sigma": [{"builder": "swap"}]
}"#;

fn main() {
    let loaded = parse_spec_str(SPEC).unwrap();
    println!("{} (digest {})", loaded.label, &loaded.digest[..12]);

    let dir = std::env::temp_dir().join("skewpbw-example");
    std::fs::create_dir_all(&dir).unwrap();
    let spec = dir.join("swap.json");
    std::fs::write(&spec, SPEC).unwrap();
    let report = dir.join("compat.json");

    let spec = spec.to_str().unwrap();
    for args in [
        vec!["validate", "--spec", spec],
        vec!["mul", "--spec", spec, "x1", "(1,0)"],
        vec!["compat", "--spec", spec, "--json", report.to_str().unwrap()],
        vec!["armendariz", "--spec", spec, "--variant", "skew-pi"],
    ] {
        let out = run_command(std::iter::once("skewpbw").chain(args.iter().copied()));
        println!("$ skewpbw {}\n{}[exit {}]", args.join(" "), out.stdout, out.code);
    }
    println!("\n{}", std::fs::read_to_string(&report).unwrap());
}
