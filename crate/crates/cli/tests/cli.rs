//! End-to-end tests of the `eqp` binary: exit codes, output shape, and
//! byte-identical reruns.

use std::path::PathBuf;
use std::process::{Command, Output};

fn eqp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_tmp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("eqp-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn criterion_output_matches_contract() {
    let k6 = write_tmp("k6.poset", "poset K6\npoint a weak\npoint b weak\n");
    let out = eqp(&["poset", "criterion", k6.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("OneParameter"), "{text}");
    assert!(text.contains("K6"));
}

#[test]
fn tits_eval_example() {
    let a25 = write_tmp(
        "a25.poset",
        "poset A25\npoint a weak\npoint b weak\npoint eta strong\nrel b < eta strong\n",
    );
    let out = eqp(&["tits", "eval", a25.to_str().unwrap(), "--d", "1; a=1, eta=1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}

#[test]
fn malformed_input_exits_2_with_line_number() {
    let bad = write_tmp("bad.poset", "poset X\npoint a sideways\n");
    let out = eqp(&["poset", "check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_tables_passes_and_exits_0() {
    let out = eqp(&["verify", "tables"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pass"), "{text}");
}

#[test]
fn verify_reports_are_byte_identical_across_runs() {
    let dir = std::env::temp_dir().join("eqp-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let out1 = dir.join("run1.tsv");
    let out2 = dir.join("run2.tsv");
    for (path, _) in [(&out1, 0), (&out2, 1)] {
        let out = eqp(&[
            "verify",
            "theorem-d",
            "--poset",
            "K6",
            "--box",
            "1; a=1, b=1",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("suite\tcase\texpected\tcomputed\tstatus\n"));
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn catalog_emit_roundtrips_through_corep_dim() {
    let dir = std::env::temp_dir().join("eqp-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f15g.corep");
    let out = eqp(&[
        "catalog",
        "emit",
        "F15",
        "--type",
        "G",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = eqp(&["corep", "dim", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("reduced: true"), "{text}");
    assert!(text.contains("sincere: true"), "{text}");
}

#[test]
fn corep_iso_detects_row_permutation() {
    let a = write_tmp(
        "m1.corep",
        "corep K6 field gf2\nstripes: a=2 b=2\n1 0 | x 0\n0 1 | 0 1+x\n",
    );
    let b = write_tmp(
        "m2.corep",
        "corep K6 field gf2\nstripes: a=2 b=2\n0 1 | 0 1+x\n1 0 | x 0\n",
    );
    let out = eqp(&["corep", "iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "isomorphic");
}

#[test]
fn qsqrt2_field_flag_and_scaling_iso() {
    let a = write_tmp("q1.corep", "corep K6 field qsqrt2\nstripes: a=1 b=1\n1 | x\n");
    let b = write_tmp("q2.corep", "corep K6 field qsqrt2\nstripes: a=1 b=1\n2 | 2*x\n");
    let out = eqp(&[
        "--field",
        "qsqrt2",
        "corep",
        "iso",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "isomorphic");
}

#[test]
fn custom_poset_file_for_coreps() {
    let poset = write_tmp(
        "chain.poset",
        "poset chain2\npoint a weak\npoint b weak\nrel a < b weak\n",
    );
    let corep = write_tmp("chain.corep", "corep chain2 field gf2\nstripes: a=1 b=1\n1 | x\n");
    let out = eqp(&[
        "corep",
        "dim",
        corep.to_str().unwrap(),
        "--poset",
        poset.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sincere: true"));
}
