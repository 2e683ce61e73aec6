//! End-to-end tests of the charkit binary: the exit-code contract, JSON
//! round-tripping, run-to-run determinism, cache export/import, and
//! generator-file input.

use std::path::PathBuf;
use std::process::{Command, Output};

fn charkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charkit"))
        .args(args)
        .output()
        .expect("run the charkit binary")
}

fn stdout_of(args: &[&str]) -> String {
    let out = charkit(args);
    assert!(
        out.status.success(),
        "charkit {args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout is UTF-8")
}

fn exit_code(args: &[&str]) -> i32 {
    charkit(args).status.code().expect("process exit code")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("charkit-test-{}-{name}", std::process::id()))
}

#[test]
fn input_errors_exit_1() {
    // Unknown catalog name, malformed parameter, missing file, cap refusal,
    // invalid prime override, unknown class label, identity in the
    // connection set: all user errors, all exit 1.
    for args in [
        &["classes", "frobnicate:5"][..],
        &["classes", "cyclic:zero"],
        &["classes", "dihedral:7"],
        &["classes", "@/no/such/file.gens"],
        &["classes", "sym:4", "--max-order", "10"],
        &["chartab", "sym:3", "--prime", "11"],
        &["spectrum", "sym:3", "--class", "9z"],
        &["spectrum", "sym:3", "--class", "1a"],
        &["oracle", "sym:4", "--oracle-cap", "10"],
    ] {
        let out = charkit(args);
        assert_eq!(out.status.code(), Some(1), "charkit {args:?}");
        assert!(
            !out.stderr.is_empty(),
            "charkit {args:?} should explain itself on stderr"
        );
    }
}

#[test]
fn verify_exits_zero_when_theorem_holds() {
    assert_eq!(exit_code(&["verify", "sym:3"]), 0);
    assert_eq!(exit_code(&["verify", "quaternion:8"]), 0);
}

#[test]
fn verify_m11_reports_contrapositive() {
    let out = stdout_of(&["verify", "mathieu:11"]);
    assert!(out.contains("theorem holds: yes"), "{out}");
    assert!(out.contains("5a"), "contrapositive should name 5a: {out}");
    assert!(out.contains("11881/1980"), "{out}");
}

#[test]
fn weight_golden_line() {
    assert_eq!(stdout_of(&["weight", "sym:3"]), "8/3 ≈ 2.6666666667\n");
    assert_eq!(
        stdout_of(&["weight", "sym:3", "--precision", "3"]),
        "8/3 ≈ 2.667\n"
    );
}

#[test]
fn spectrum_union_and_energy() {
    // 2a ∪ 3a is all of Sym(3) minus the identity: the complete graph K6.
    let out = stdout_of(&["spectrum", "sym:3", "--class", "2a,3a"]);
    assert!(out.contains("degree 5"), "{out}");
    assert!(out.contains("energy 10 (exact)"), "{out}");
    assert!(out.contains("singular no"), "{out}");
}

#[test]
fn spectrum_irrational_energy_is_approximate() {
    // The 5-cycle class of alt:5 has eigenvalues involving √5.
    let out = stdout_of(&["spectrum", "alt:5", "--class", "5a"]);
    assert!(
        out.contains("±"),
        "approximate energy shows an error bound: {out}"
    );
}

#[test]
fn json_outputs_round_trip() {
    for args in [
        &["classes", "sym:4", "--format", "json"][..],
        &["chartab", "quaternion:8", "--format", "json"],
        &["weight", "sym:4", "--format", "json"],
        &["spectrum", "sym:3", "--class", "3a", "--format", "json"],
        &["classify", "cyclic:12", "--format", "json"],
        &["verify", "sym:3", "--format", "json"],
        &["oracle", "sym:3", "--format", "json"],
    ] {
        let text = stdout_of(args);
        let value: serde_json::Value =
            serde_json::from_str(&text).unwrap_or_else(|e| panic!("charkit {args:?}: {e}"));
        let rendered = serde_json::to_string_pretty(&value).expect("re-render") + "\n";
        assert_eq!(
            text, rendered,
            "charkit {args:?} JSON must round-trip byte-identically"
        );
    }
}

#[test]
fn catalog_runs_are_deterministic() {
    for args in [
        &["chartab", "sym:4", "--format", "json"][..],
        &["verify", "dihedral:12"],
        &["classes", "alt:4", "--format", "json"],
    ] {
        let first = charkit(args);
        let second = charkit(args);
        assert_eq!(first.stdout, second.stdout, "charkit {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn exported_table_reimports_identically() {
    let path = temp_path("sym4.table");
    let path_str = path.to_str().expect("temp path is UTF-8");

    let direct = stdout_of(&["chartab", "sym:4", "--format", "json", "--export", path_str]);
    let imported = stdout_of(&["chartab", "sym:4", "--format", "json", "--import", path_str]);
    assert_eq!(
        direct, imported,
        "imported table must match the computed one"
    );

    // A tampered cache must be rejected as inconsistent (exit 3).
    let cache = std::fs::read_to_string(&path).expect("read exported table");
    let tampered = cache.replacen("char 1 ", "char 2 ", 1);
    assert_ne!(cache, tampered, "tampering should change the file");
    std::fs::write(&path, tampered).expect("write tampered table");
    let out = charkit(&["chartab", "sym:4", "--import", path_str]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "tampered cache: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    // --prime conflicts with --import.
    let code = exit_code(&["chartab", "sym:4", "--import", path_str, "--prime", "13"]);
    assert_eq!(code, 1);

    std::fs::remove_file(&path).ok();
}

#[test]
fn generator_file_groups_work() {
    let path = temp_path("s3.gens");
    let path_str = path.to_str().expect("temp path is UTF-8");
    std::fs::write(
        &path,
        "# Sym(3) as a permutation group\ndegree: 3\n(1 2)\n(1 2 3)\n",
    )
    .expect("write generator file");

    let spec = format!("@{path_str}");
    let out = stdout_of(&["classes", &spec]);
    assert!(out.contains("order 6"), "{out}");
    assert_eq!(stdout_of(&["weight", &spec]), "8/3 ≈ 2.6666666667\n");

    std::fs::remove_file(&path).ok();
}

#[test]
fn prime_override_changes_prime_not_values() {
    let default = stdout_of(&["chartab", "sym:3", "--format", "json"]);
    let overridden = stdout_of(&["chartab", "sym:3", "--prime", "13", "--format", "json"]);
    let d: serde_json::Value = serde_json::from_str(&default).unwrap();
    let o: serde_json::Value = serde_json::from_str(&overridden).unwrap();
    assert_eq!(d["prime"], "7");
    assert_eq!(o["prime"], "13");
    assert_eq!(
        d["values"], o["values"],
        "character values are prime-independent"
    );
    assert_eq!(d["degrees"], o["degrees"]);
}

#[test]
fn help_screens_work() {
    let out = charkit(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("charkit"));
    assert!(text.contains("verify"));
    assert_eq!(exit_code(&["chartab", "--help"]), 0);
}
