use std::path::PathBuf;
use std::process::{Command, Output};

use hb_fiber::{parse_ideal_file, AnyIdeal};
use proptest::prelude::*;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples_data")
        .join(format!("{name}.ideal"))
        .display()
        .to_string()
}

fn hb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hb-fiber")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = hb(&all);
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

fn temp_ideal(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::Builder::new().suffix(".ideal").tempfile().unwrap();
    std::fs::write(f.path(), text).unwrap();
    f
}

#[test]
fn mult_on_cremona() {
    let (v, code) = json(&["mult", &data("cremona")]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "hb-fiber/1");
    assert_eq!(v["hypotheses"]["mu"], serde_json::json!([1, 1]));
    assert_eq!(v["results"]["e_r"]["value"], 1);
    assert_eq!(v["results"]["e_r"]["provenance"], "formula");
    assert_eq!(v["results"]["j"]["value"], 2);
    assert_eq!(v["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn verify_on_square() {
    let (v, code) = json(&["verify", &data("square"), "--n-max", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["agree"], true);
    let checks = v["results"]["checks"].as_array().unwrap();
    let fiber = checks.iter().find(|c| c["name"] == "saturated-fiber").unwrap();
    assert_eq!(fiber["expected"]["value"], 2);
    assert_eq!(fiber["observed"]["value"], 2);
    assert_eq!(fiber["observed"]["provenance"], "oracle");
    let random = checks.iter().find(|c| c["name"] == "random-fiber").unwrap();
    assert_eq!(random["observed"]["provenance"], "heuristic");
    assert_eq!(random["decisive"], false);
}

#[test]
fn short_sweep_is_rejected() {
    let (v, code) = json(&["verify", &data("cremona"), "--n-max", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "InvalidParameters");
}

#[test]
fn identities_grid() {
    let (v, code) = json(&["identities", "--r-max", "3", "--s-max", "5", "--mu-max", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["all_hold"], true);
    assert!(v["input"].is_null());
}

#[test]
fn mapdeg_reports() {
    let (v, code) = json(&["mapdeg", &data("cubic")]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["deg_y"]["value"], 3);
    assert_eq!(v["results"]["deg_f"]["value"], 1);
    assert_eq!(v["results"]["birational"]["value"], true);
    assert_eq!(v["results"]["generic_fiber"]["provenance"], "heuristic");
    let (v, code) = json(&["mapdeg", &data("g_fail")]);
    assert_eq!(code, 5);
    assert_eq!(v["error"]["code"], "DimensionAnomaly");
    assert_eq!(v["hypotheses"]["g_condition"]["pass"], false);
}

#[test]
fn jmult_with_oracle() {
    let (v, code) = json(&["jmult", &data("cubic"), "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["j"]["value"], 9);
    assert_eq!(v["results"]["j_oracle"]["value"], 9);
    assert_eq!(v["results"]["agree"], true);
}

#[test]
fn rational_field() {
    let (v, code) = json(&["mapdeg", &data("cremona_rational")]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["birational"]["value"], true);
    assert!(v["warnings"][0].as_str().unwrap().contains("prime field"));
}

#[test]
fn exit_code_contract() {
    assert_eq!(hb(&["resolve", &data("height_one")]).status.code(), Some(3));
    assert_eq!(hb(&["gcheck", &data("g_fail")]).status.code(), Some(3));
    assert_eq!(hb(&["gcheck", &data("quartic")]).status.code(), Some(0));
    assert_eq!(hb(&["mult", "/nonexistent/file.ideal"]).status.code(), Some(1));
    assert_eq!(hb(&["mult"]).status.code(), Some(2));
    assert_eq!(hb(&["identities", &data("cremona")]).status.code(), Some(2));
    assert_eq!(hb(&["frobnicate", &data("cremona")]).status.code(), Some(2));
}

#[test]
fn parse_errors_are_located() {
    let f = temp_ideal("field 32003\nring x0 x1\ngens\nx0*x1\nx0 + * x1\n");
    let (v, code) = json(&["mult", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "SyntaxError");
    assert!(v["error"]["message"].as_str().unwrap().starts_with("5:6:"));

    let f = temp_ideal("field 32003\nring x0 x1\ngens\nx0*x2\n");
    let (v, code) = json(&["mult", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "UnknownVariable");

    let f = temp_ideal("field 32003\nring x0 y0\ngens\nx0\n");
    let (v, _) = json(&["mult", f.path().to_str().unwrap()]);
    assert_eq!(v["error"]["code"], "InvalidName");

    let f = temp_ideal("field 32003\nring x0 x1\ngens\nx0\nx1^2\n");
    let (v, code) = json(&["mult", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "NotEquigenerated");
}

#[test]
fn reports_are_deterministic() {
    let a = hb(&["verify", &data("quartic"), "--json", "--seed", "7"]);
    let b = hb(&["verify", &data("quartic"), "--json", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn output_modes() {
    let both = hb(&["mult", &data("cremona")]);
    serde_json::from_slice::<Value>(&both.stdout).unwrap();
    assert!(String::from_utf8_lossy(&both.stderr).contains("status: ok (exit 0)"));
    let text = hb(&["mult", &data("cremona"), "--text"]);
    let shown = String::from_utf8(text.stdout).unwrap();
    assert!(shown.contains("e_2(mu) = 1  [formula]"));
    assert!(text.stderr.is_empty());
}

fn term() -> impl Strategy<Value = String> {
    (-40i64..40, 0u32..=4, 0u32..=4)
        .prop_filter("degree four", |(_, a, b)| a + b <= 4)
        .prop_map(|(c, a, b)| format!("({c})*x^{a}*y^{b}*z^{}", 4 - a - b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_reparses(terms in proptest::collection::vec(term(), 1..6), rational in any::<bool>()) {
        let field = if rational { "rational" } else { "101" };
        let src = format!("field {field}\nring x y z\ngens\n{}\n", terms.join(" + "));
        // cancellation can leave the zero polynomial, which the parser rejects
        let Ok(parsed) = parse_ideal_file(&src) else { return Ok(()) };
        let Some(shown) = parsed.ideal_over_any_degree() else { return Ok(()) };
        let again = format!("field {field}\nring x y z\ngens\n{}\n", shown[0]);
        let reparsed = parse_ideal_file(&again).unwrap();
        prop_assert_eq!(reparsed.ideal_over_any_degree(), Some(shown));
    }
}

trait AnyDegree {
    fn ideal_over_any_degree(&self) -> Option<Vec<String>>;
}

impl AnyDegree for hb_fiber::IdealFile {
    fn ideal_over_any_degree(&self) -> Option<Vec<String>> {
        match self.ideal().ok()? {
            AnyIdeal::Prime(i) => Some(i.gens().iter().map(|p| p.to_string()).collect()),
            AnyIdeal::Rational(i) => Some(i.gens().iter().map(|p| p.to_string()).collect()),
        }
    }
}

#[test]
fn small_characteristic_is_flagged() {
    let f = temp_ideal("field 7\nring a b c\ngens\na*b\na*c\nb*c\n");
    let (v, code) = json(&["mult", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(v["warnings"][0].as_str().unwrap().starts_with("characteristic 7"));
    let (v, _) = json(&["mult", &data("cremona")]);
    assert_eq!(v["warnings"], serde_json::json!([]));
}
