use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use num_complex::Complex64;
use qent_core::corep::{fundamental_corep, product_corep, trivial_corep};
use qent_core::fourier::{self, DensityOp};
use qent_core::{hopf, io, AlgebraParams, Element, Gen, Monomial, MultiElement};
use serde_json::Value;
use tempfile::TempDir;

fn qent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qent"))
        .args(args)
        .env_remove("QENT_DEFAULT_Q")
        .output()
        .expect("run qent")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn write_json<T: serde::Serialize>(dir: &TempDir, name: &str, value: &T) -> PathBuf {
    write(dir, name, &io::to_json(value).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn params(q: f64) -> AlgebraParams {
    AlgebraParams::with_q(q).unwrap()
}

#[test]
fn transform_singlet_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let input = write_json(&dir, "rho.json", &DensityOp::singlet());
    let output = dir.path().join("x.json");
    let out = qent(&["transform", "--input", s(&input), "--output", s(&output)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let line = text
        .lines()
        .find(|l| l.starts_with("normalization:"))
        .unwrap();
    let v: Vec<f64> =
        serde_json::from_str(line.trim_start_matches("normalization:").trim()).unwrap();
    assert!((v[0] - 1.0).abs() < 1e-12 && v[1].abs() < 1e-12);

    let x: MultiElement = io::from_json(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(x.len(), 4);
    assert!(x
        .terms()
        .all(|(_, c)| (c - Complex64::new(0.5, 0.0)).norm() < 1e-12));

    let u = fundamental_corep(params(0.5)).unwrap();
    let back = fourier::reconstruct(&x, &product_corep(&u, &u).unwrap()).unwrap();
    assert!(qent_core::linalg::max_abs(&(back - DensityOp::singlet().matrix())) < 1e-8);
}

#[test]
fn transform_mixed_and_zero() {
    let dir = TempDir::new().unwrap();
    let input = write_json(&dir, "mixed.json", &DensityOp::maximally_mixed((2, 2)));
    let out = qent(&["transform", "--input", s(&input)]);
    assert_eq!(code(&out), 0);
    let x: MultiElement = io::from_json(&stdout(&out)).unwrap();
    let p = params(0.5);
    let chi = &Element::generator(Gen::A, p) + &Element::generator(Gen::AStar, p);
    let expect = MultiElement::tensor(&chi, &chi)
        .unwrap()
        .scale(Complex64::new(0.25, 0.0));
    assert!(x.equal(&expect));

    let input = write_json(
        &dir,
        "zero.json",
        &DensityOp::maximally_mixed((2, 2)).scale(0.0),
    );
    let out = qent(&["transform", "--input", s(&input)]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\"dims\":[2,2],\"entries\":[[1,0]]}");
    assert_eq!(code(&qent(&["transform", "--input", s(&bad)])), 2);
    let junk = write(&dir, "junk.json", "not json");
    assert_eq!(code(&qent(&["check-pd", "--input", s(&junk)])), 2);
    assert_eq!(code(&qent(&["haar", "--input", s(&junk)])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&qent(&["transform", "--input", s(&missing)])), 2);
    let three = write_json(&dir, "three.json", &DensityOp::maximally_mixed((3, 2)));
    assert_eq!(code(&qent(&["ppt", "--input", s(&three)])), 2);
    assert_eq!(code(&qent(&["--q", "1.5", "demo-singlet"])), 2);
    assert_eq!(
        code(&qent(&[
            "--catalog",
            "fund:spin3",
            "check-pd",
            "--input",
            s(&three)
        ])),
        2
    );
}

#[test]
fn check_pd_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = params(0.5);
    let u = fundamental_corep(p).unwrap();
    let x = fourier::forward(&DensityOp::singlet(), &product_corep(&u, &u).unwrap()).unwrap();

    let pd = write_json(&dir, "x.json", &x);
    let report = dir.path().join("report.json");
    let out = qent(&["check-pd", "--input", s(&pd), "--output", s(&report)]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["verdict"], "POSITIVE_DEFINITE");
    assert!(v["witness"].is_null());

    let npt = write_json(&dir, "theta.json", &hopf::partial_theta(&x).unwrap());
    let out = qent(&["check-pd", "--input", s(&npt), "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "NOT_POSITIVE_DEFINITE");
    let fund = v["per_block"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["label"] == "fund:fund")
        .unwrap();
    assert!(fund["min_eigenvalue"].as_f64().unwrap() < 0.0);
    assert!(v["witness"]["terms"].as_array().is_some());

    let unit = write_json(&dir, "unit.json", &MultiElement::unit(2, p));
    assert_eq!(
        code(&qent(&[
            "check-pd",
            "--catalog",
            "triv:triv",
            "--input",
            s(&unit)
        ])),
        0
    );

    let extra = x.add(&MultiElement::unit(2, p)).unwrap();
    let und = write_json(&dir, "und.json", &extra);
    assert_eq!(
        code(&qent(&[
            "check-pd",
            "--catalog",
            "fund:fund",
            "--input",
            s(&und)
        ])),
        3
    );

    let other_q = write_json(&dir, "q7.json", &MultiElement::unit(2, params(0.7)));
    assert_eq!(code(&qent(&["check-pd", "--input", s(&other_q)])), 2);
}

#[test]
fn ppt_both_sides() {
    let dir = TempDir::new().unwrap();
    let singlet = write_json(&dir, "singlet.json", &DensityOp::singlet());
    let out = qent(&["ppt", "--input", s(&singlet), "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["agreement"], true);
    assert_eq!(v["matrix"]["ppt"], false);
    assert_eq!(v["algebra"]["verdict"], "NOT_POSITIVE_DEFINITE");

    for rho in [
        DensityOp::werner(0.2),
        DensityOp::product_basis((2, 2), 0, 1).unwrap(),
    ] {
        let f = write_json(&dir, "rho.json", &rho);
        let out = qent(&["ppt", "--input", s(&f), "--format", "json"]);
        assert_eq!(code(&out), 0);
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["agreement"], true);
        assert_eq!(v["matrix"]["ppt"], true);
    }

    let unit = write_json(&dir, "unit.json", &MultiElement::unit(2, params(0.5)));
    assert_eq!(code(&qent(&["ppt", "--input", s(&unit)])), 0);
}

#[test]
fn haar_values() {
    let dir = TempDir::new().unwrap();
    let p = params(0.5);
    let cc = write_json(
        &dir,
        "cc.json",
        &Element::monomial(Monomial::plain(0, 1, 1), p),
    );
    let out = qent(&["haar", "--input", s(&cc), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["haar"][0].as_f64().unwrap() - 0.4).abs() < 1e-12);

    let one = write_json(&dir, "one.json", &Element::one(p));
    assert_eq!(
        stdout(&qent(&["haar", "--input", s(&one)])).trim(),
        "[1, 0]"
    );

    let aa = MultiElement::tensor(
        &Element::generator(Gen::A, p),
        &Element::generator(Gen::AStar, p),
    )
    .unwrap();
    let aa = write_json(&dir, "aa.json", &aa);
    assert_eq!(stdout(&qent(&["haar", "--input", s(&aa)])).trim(), "[0, 0]");
}

#[test]
fn verify_suites() {
    let out = qent(&["--q", "0.7", "verify", "hopf", "--samples", "20"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("all checks passed"));

    let out = qent(&["--q", "1", "verify", "corep", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = v[0]["checks"].as_array().unwrap();
    let f = checks
        .iter()
        .find(|c| c["name"] == "F = diag(1/q, q)")
        .unwrap();
    assert!(f["detail"]
        .as_str()
        .unwrap()
        .contains("diag(1.000000, 1.000000)"));

    assert_eq!(code(&qent(&["verify", "nonsense"])), 2);
}

#[test]
fn env_default_q() {
    let out = Command::new(env!("CARGO_BIN_EXE_qent"))
        .args(["verify", "corep", "--format", "json"])
        .env("QENT_DEFAULT_Q", "0.3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["q"].as_f64().unwrap(), 0.3);
}

#[test]
fn demo_singlet_report() {
    let out = qent(&["demo-singlet"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("counit of the 1/2 form: 1"));
    assert!(text.contains("counit of the 1/4 form: 0.5"));
    assert!(text.contains("verdict: ENTANGLED"));

    let out = qent(&["--q", "1", "demo-singlet"]);
    assert!(stdout(&out).contains("classical SU(2)"));

    let out = qent(&["--q", "0.9", "demo-singlet", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["reconstruction_residual"].as_f64().unwrap() < 1e-8);
    assert!(v["distance_to_half_form"].as_f64().unwrap() < 1e-12);
    assert_eq!(v["quarter_form_normalized"], false);
    assert_eq!(v["separability"], "ENTANGLED");
}

#[test]
fn trivial_factor_transform() {
    let dir = TempDir::new().unwrap();
    let rho = DensityOp::maximally_mixed((1, 2));
    let f = write_json(&dir, "r.json", &rho);
    let out = qent(&["transform", "--input", s(&f)]);
    assert_eq!(code(&out), 0);
    let x: MultiElement = io::from_json(&stdout(&out)).unwrap();
    let p = params(0.5);
    let t = trivial_corep(p);
    let u = fundamental_corep(p).unwrap();
    assert!(x.equal(&fourier::forward(&rho, &product_corep(&t, &u).unwrap()).unwrap()));
}
