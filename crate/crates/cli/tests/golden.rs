//! Golden-file tests of every subcommand. Set `UPDATE_GOLDEN=1` to rewrite
//! the files after an intended output change.

use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_uqsl2")).args(args).output().expect("binary runs");
    let mut text = String::from_utf8(out.stdout).expect("utf-8");
    text.push_str(&String::from_utf8(out.stderr).expect("utf-8"));
    (text, out.status.code().unwrap_or(-1))
}

fn golden(name: &str, args: &[&str], code: i32) {
    let (text, got) = run(args);
    assert_eq!(got, code, "{name}: exit code\n{text}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(text, want, "{name}: output differs from {}", path.display());
}

#[test]
fn decompose() {
    golden("decompose_formula", &["decompose", "--p", "5", "X+(2)", "X+(3)"], 0);
    golden("decompose_unit", &["decompose", "--p", "3", "X+(1)", "P+(1)"], 0);
    golden("decompose_matrix_json", &["decompose", "--p", "3", "M+(1,2)", "W+(1,2)", "--method", "matrix", "--format", "json"], 0);
    golden("decompose_both", &["decompose", "--p", "3", "E+(1,1,[1:1])", "X+(2)", "--method", "both"], 0);
    golden("decompose_both_json", &["decompose", "--p", "3", "E+(1,1,[1:1])", "X+(2)", "--method", "both", "--format", "json"], 0);
    golden(
        "decompose_disagreement",
        &["decompose", "--p", "3", "W+(1,2)", "M+(1,3)", "--method", "both", "--wm-reading", "literal"],
        2,
    );
    golden(
        "decompose_disagreement_json",
        &["decompose", "--p", "3", "W+(1,2)", "M+(1,3)", "--method", "both", "--wm-reading", "literal", "--format", "json"],
        2,
    );
}

#[test]
fn table() {
    golden("table_p5", &["table", "--p", "5", "--sets", "IJ"], 0);
    golden("table_p3_j_json", &["table", "--p", "3", "--sets", "J", "--format", "json"], 0);
}

#[test]
fn braiding_witness() {
    golden("braiding_witness_p3", &["braiding-witness", "--p", "3"], 0);
    golden("braiding_witness_p3_json", &["braiding-witness", "--p", "3", "--format", "json"], 0);
    golden("braiding_witness_p2", &["braiding-witness", "--p", "2"], 0);
}

#[test]
fn ext_dual_lift() {
    golden("ext", &["ext", "--p", "3", "X+(1)", "E+(1,2,[1:1])"], 0);
    golden("ext_json", &["ext", "--p", "3", "E+(1,2,[1:1])", "X-(2)", "--format", "json"], 0);
    golden("dual_formula", &["dual", "--p", "3", "E+(1,2,[1:2])"], 0);
    golden("dual_both_left", &["dual", "--p", "3", "M+(1,2)", "--side", "left", "--method", "both"], 0);
    golden("dual_matrix_json", &["dual", "--p", "3", "W-(2,2)", "--method", "matrix", "--format", "json"], 0);
    golden("lift_liftable", &["lift", "--p", "3", "M+(1,2)"], 0);
    golden("lift_not_liftable_json", &["lift", "--p", "3", "E+(1,1,[1:1])", "--format", "json"], 0);
    golden("lift_e_n2", &["lift", "--p", "3", "E-(2,2,[1:-1])"], 0);
    golden("lift_json", &["lift", "--p", "2", "E+(1,1,[0:1])", "--format", "json"], 0);
}

#[test]
fn usage_errors() {
    golden("bad_label", &["decompose", "--p", "3", "Q(1)", "X+(1)"], 1);
    golden("bad_range", &["decompose", "--p", "3", "X+(4)", "X+(1)"], 1);
    golden("bad_sets", &["table", "--p", "3", "--sets", "K"], 1);
    golden("bad_p", &["table", "--p", "1"], 1);
    golden("missing_arg", &["ext", "--p", "3", "X+(1)"], 1);
}

#[test]
fn json_is_deterministic() {
    let args = ["decompose", "--p", "3", "E+(1,1,[1:1])", "E-(2,1,[1:2])", "--method", "both", "--format", "json", "--seed", "7"];
    assert_eq!(run(&args), run(&args));
}
