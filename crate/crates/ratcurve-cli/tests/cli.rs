use assert_cmd::Command;
use predicates::prelude::*;

fn ratcurve() -> Command {
    Command::cargo_bin("ratcurve").unwrap()
}

#[test]
fn circle_dichotomy_and_exit_zero() {
    ratcurve()
        .args(["circle", "--g", "(2*z^3+(t+1)*z)/(z^2-t)", "--field", "eisenstein"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"verdict\": \"not-circle\""));
    ratcurve()
        .args(["circle", "--g", "(z-t)/(z+t)", "--field", "gaussian"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"verdict\": \"circle\""));
}

#[test]
fn undecided_maps_to_exit_two() {
    ratcurve()
        .args(["weak-injective", "--g", "z^2", "--field", "rationals"])
        .assert()
        .code(2)
        .stdout(predicate::str::contains("no-witness-found"));
    ratcurve()
        .args(["weak-injective", "--g", "z^3", "--field", "rationals"])
        .assert()
        .success()
        .stdout(predicate::str::contains("weakly-injective"));
}

#[test]
fn errors_map_to_exit_one_with_error_object() {
    ratcurve()
        .args(["construct", "--curve", "nope"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("\"error\""));
    // missing required input
    ratcurve()
        .args(["circle", "--field", "rationals"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("missing required input"));
}

#[test]
fn job_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let job = dir.path().join("job.toml");
    std::fs::write(
        &job,
        "command = \"circle\"\ng = \"z^2\"\nfield = \"rationals\"\n",
    )
    .unwrap();
    // file alone: z² is real, hence a circle (the real line)
    ratcurve()
        .args(["--job", job.to_str().unwrap()])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"verdict\": \"circle\""));
    // flag overrides g from the file
    ratcurve()
        .args([
            "--job",
            job.to_str().unwrap(),
            "circle",
            "--g",
            "(2*z^3+(t+1)*z)/(z^2-t)",
            "--field",
            "eisenstein",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("not-circle"));
}

#[test]
fn family_and_group_commands() {
    ratcurve()
        .args(["family", "--family", "pakovich:n=4,zeta_order=4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"identity_holds\": true"));
    ratcurve()
        .args(["family", "--family", "avanzi-zannier:n=2,k=1,zeta_order=2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"composition_real\": true"));
    ratcurve()
        .args(["group-search", "--group", "frobenius:21:7"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"ok\": true"));
}

#[test]
fn plot_outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |svg: &std::path::Path| {
        let out = dir.path().join("report.json");
        ratcurve()
            .args([
                "plot",
                "--g",
                "(z^2-1)/(z^2+1)",
                "--field",
                "rationals",
                "--samples",
                "64",
                "--plot-out",
                svg.to_str().unwrap(),
                "--out",
                out.to_str().unwrap(),
            ])
            .assert()
            .success();
        let mut report: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        report.as_object_mut().unwrap().remove("timing_ms");
        // mask run-specific paths; everything else must match byte for byte
        report["command"]["plot_out"] = serde_json::Value::Null;
        report["results"]["svg"] = serde_json::Value::Null;
        report["results"]["csv"] = serde_json::Value::Null;
        let report = report.to_string();
        (
            std::fs::read(svg).unwrap(),
            std::fs::read(svg.with_extension("csv")).unwrap(),
            report,
        )
    };
    let a = run(&dir.path().join("a.svg"));
    let b = run(&dir.path().join("b.svg"));
    assert_eq!(a, b);
}

#[test]
fn precision_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("p.svg");
    ratcurve()
        .env("RATCURVE_PRECISION_BITS", "64")
        .args([
            "plot",
            "--g",
            "z",
            "--field",
            "rationals",
            "--samples",
            "8",
            "--plot-out",
            svg.to_str().unwrap(),
        ])
        .assert()
        .success();
    assert!(svg.exists() && svg.with_extension("csv").exists());
}
