use std::path::PathBuf;

use antiprelie::algebra::AntiPreLieAlgebra;
use antiprelie::cli::run;
use antiprelie::corpus;
use antiprelie::io::{parse, print, to_document, Document};
use antiprelie::representation::Representation;
use antiprelie::scalar::{Fp, Rational};
use serde_json::Value;

type Q = Rational;

struct Dir(PathBuf);

impl Dir {
    fn new(tag: &str) -> Self {
        let p = std::env::temp_dir().join(format!("antiprelie-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).unwrap();
        Dir(p)
    }

    fn write<D: Document>(&self, name: &str, d: &D) -> String {
        self.raw(name, &print(&to_document(d)))
    }

    fn raw(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Dir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["antiprelie"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_exit_codes() {
    let d = Dir::new("check");
    let good = d.write("a2.json", corpus::a2::<Q>().table());
    let bad = d.write("a2bar.json", &corpus::a2_bar::<Q>());
    assert_eq!(cli(&["check", &good]).0, 0);
    let (code, _, err) = cli(&["check", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("x(yz) - y(xz) = [y,x]z"));
    let junk = d.raw("junk.json", "{");
    assert_eq!(cli(&["check", &junk]).0, 2);
    assert_eq!(cli(&["check", "/nonexistent/file.json"]).0, 2);
    assert_eq!(cli(&["no-such-command"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn cohomology_of_the_zero_algebra() {
    let d = Dir::new("cohomology");
    let a = d.write("a.json", &AntiPreLieAlgebra::<Q>::zero(2));
    let r = d.write("r.json", &Representation::<Q>::zero(2, 1));
    let (code, out, _) = cli(&["cohomology", &a, &r]);
    assert_eq!(code, 0);
    let v: Value = parse(&out).unwrap();
    assert_eq!((v["Z2"].as_u64(), v["B2"].as_u64(), v["H2"].as_u64()), (Some(4), Some(0), Some(4)));
    let (code, out, _) = cli(&["classify", &a, &r]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out).unwrap()["classes"].as_array().unwrap().len(), 4);
}

#[test]
fn representation_commands() {
    let d = Dir::new("rep");
    let alg = corpus::a2::<Q>();
    let a = d.write("a.json", &alg);
    let r = d.write("r.json", &antiprelie::representation::regular_representation(&alg));
    assert_eq!(cli(&["rep-check", &a, &r]).0, 0);
    assert_eq!(cli(&["semidirect", &a, &r]).0, 0);
    assert_eq!(cli(&["dual", &r]).0, 0);
    assert_eq!(cli(&["lie", &a]).0, 0);
    // all three special conditions fail together
    let (code, out, err) = cli(&["special", &a, &r]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(parse(&out).unwrap()["conditions"], serde_json::json!([false, false, false]));
}

#[test]
fn mixed_fields_are_rejected() {
    let d = Dir::new("fields");
    let a = d.write("a.json", &corpus::a2::<Q>());
    let r = d.write("r.json", &Representation::<Fp<5>>::zero(2, 1));
    assert_eq!(cli(&["rep-check", &a, &r]).0, 2);
}

#[test]
fn search_over_f2() {
    let (code, out, _) = cli(&["search", "--target", "algebra", "--dim", "1", "--field", "2"]);
    assert_eq!(code, 0);
    assert!(parse(&out).is_ok());
    assert_eq!(cli(&["search", "--target", "algebra", "--dim", "3", "--field", "2"]).0, 2);
}

#[test]
fn rigidity_of_the_idempotent_line() {
    let d = Dir::new("rigid");
    let a = d.write("a.json", &corpus::idempotent_line::<Q>());
    let (code, out, err) = cli(&["rigidity", &a, "--order", "3", "--samples", "3"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(parse(&out).unwrap()["H2"].as_u64(), Some(0));
}
