#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use weakhopf::document::{emit_functor, WbaDocument};
use weakhopf::fixtures::{enumerate_automorphisms, preset};
use weakhopf::tannaka::{check_map, WeakBialgebraMap};
use weakhopf::{FieldSpec, FiniteAlgebra, FunctorData, Matrix};

/// `(golden name, arguments, expected exit code)`; paths are relative to the inputs directory.
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("check_k", &["check", "k.json"], 0),
    ("check_c2", &["check", "c2.json"], 0),
    ("check_gpd2", &["check", "gpd2.json"], 0),
    ("check_sum", &["check", "sum.json"], 0),
    ("check_z3_gf2", &["check", "z3_gf2.json"], 0),
    ("check_gpd2_structured", &["check", "gpd2.json", "--format", "structured"], 0),
    ("check_gpd2_bad", &["check", "gpd2_bad.json"], 1),
    ("check_gpd2_bad_structured", &["check", "gpd2_bad.json", "--format", "structured"], 1),
    ("check_gpd2_truncated", &["check", "gpd2_truncated.json"], 2),
    ("check_missing", &["check", "missing.json"], 2),
    ("counital_k", &["counital", "k.json"], 0),
    ("counital_c2", &["counital", "c2.json"], 0),
    ("counital_gpd2", &["counital", "gpd2.json"], 0),
    ("counital_sum", &["counital", "sum.json"], 0),
    ("counital_z3_gf2", &["counital", "z3_gf2.json"], 0),
    ("counital_gpd2_structured", &["counital", "gpd2.json", "--format", "structured"], 0),
    ("counital_gpd2_bad", &["counital", "gpd2_bad.json"], 1),
    ("lemmas_k", &["lemmas", "k.json"], 0),
    ("lemmas_c2", &["lemmas", "c2.json"], 0),
    ("lemmas_gpd2", &["lemmas", "gpd2.json"], 0),
    ("lemmas_sum", &["lemmas", "sum.json"], 0),
    ("lemmas_z3_gf2", &["lemmas", "z3_gf2.json"], 0),
    ("decompose_k", &["decompose", "k.json"], 0),
    ("decompose_c2", &["decompose", "c2.json"], 0),
    ("decompose_gpd2", &["decompose", "gpd2.json"], 0),
    ("decompose_sum", &["decompose", "sum.json"], 0),
    ("decompose_z3_gf2", &["decompose", "z3_gf2.json"], 0),
    ("decompose_sum_structured", &["decompose", "sum.json", "--format", "structured"], 0),
    ("decompose_truncated", &["decompose", "gpd2_truncated.json"], 2),
    ("reconstruct_gpd2_swap", &["reconstruct", "gpd2.json", "gpd2.json", "gpd2_swap.functor.json"], 0),
    ("reconstruct_c2_identity", &["reconstruct", "c2.json", "c2.json", "c2_identity.functor.json"], 0),
    ("reconstruct_gpd2_corrupted", &["reconstruct", "gpd2.json", "gpd2.json", "gpd2_corrupted.functor.json"], 1),
    ("reconstruct_gpd2_corrupted_structured", &["reconstruct", "gpd2.json", "gpd2.json", "gpd2_corrupted.functor.json", "--format", "structured"], 1),
    ("reconstruct_truncated", &["reconstruct", "gpd2.json", "gpd2.json", "gpd2_truncated.json"], 2),
    ("dsum_c2_gpd2", &["dsum", "c2.json", "gpd2.json"], 0),
    ("dsum_bad", &["dsum", "c2.json", "gpd2_bad.json"], 1),
    ("dualize_gpd2", &["dualize", "gpd2.json"], 0),
    ("dualize_sum", &["dualize", "sum.json"], 0),
    ("fixture_k", &["fixture", "k"], 0),
    ("fixture_c2", &["fixture", "c2"], 0),
    ("fixture_gpd2", &["fixture", "gpd2"], 0),
    ("fixture_sum", &["fixture", "sum"], 0),
    ("fixture_z3_gf2", &["fixture", "z3@gf2"], 0),
    ("fixture_gpd2_gf3", &["fixture", "gpd2", "--field", "GF(3)"], 0),
    ("fixture_unknown", &["fixture", "nope"], 2),
    ("fixture_bad_field", &["fixture", "k", "--field", "GF(4)"], 2),
    ("field_on_check", &["check", "k.json", "--field", "GF(3)"], 2),
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some()
}

/// Regenerates the input documents from the library.
pub fn write_inputs() {
    let dir = golden_dir().join("inputs");
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| std::fs::write(dir.join(name), text).unwrap();
    for (name, file) in [("k", "k"), ("c2", "c2"), ("gpd2", "gpd2"), ("sum", "sum"), ("z3@gf2", "z3_gf2")] {
        write(&format!("{file}.json"), &WbaDocument::from_bialgebra(&preset(name, None).unwrap()).emit());
    }
    let q = FieldSpec::Rationals;
    let g = preset("gpd2", None).unwrap();
    let text = WbaDocument::from_bialgebra(&g).emit();
    write("gpd2_truncated.json", &text[..text.len() / 2]);

    // f·g = e1 instead of e2
    let mut bad = WbaDocument::from_bialgebra(&g);
    let mut mult = g.algebra().mult_tensor().to_vec();
    mult[(2 * 4 + 3) * 4] = q.one();
    mult[(2 * 4 + 3) * 4 + 1] = q.zero();
    bad.algebra = FiniteAlgebra::new(q, g.labels().to_vec(), mult, g.unit().to_vec()).unwrap();
    write("gpd2_bad.json", &bad.emit());

    let g = Arc::new(g);
    let autos = enumerate_automorphisms(&g, 8).unwrap();
    let comodules = FunctorData::standard_comodules(&g).unwrap();
    let swap = FunctorData::induced_by(&autos[1], &comodules).unwrap();
    write("gpd2_swap.functor.json", &emit_functor(&swap));
    let mut corrupted = swap.clone();
    let identity = FunctorData::induced_by(&autos[0], &comodules).unwrap();
    corrupted.assignments[0].coaction = identity.assignments[0].coaction.clone();
    write("gpd2_corrupted.functor.json", &emit_functor(&corrupted));

    let c = Arc::new(preset("c2", None).unwrap());
    let id: WeakBialgebraMap = check_map(&Matrix::identity(q, 2), &c, &c).unwrap();
    let fd = FunctorData::induced_by(&id, &FunctorData::standard_comodules(&c).unwrap()).unwrap();
    write("c2_identity.functor.json", &emit_functor(&fd));
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn wba(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_wba"))
        .args(args)
        .current_dir(golden_dir().join("inputs"))
        .output()
        .expect("run wba");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs every golden case; returns the mismatches. With `UPDATE_GOLDEN`
/// set, rewrites the expected files instead.
pub fn run_golden_cases() -> Vec<String> {
    let mut failures = Vec::new();
    let expected_dir = golden_dir().join("expected");
    for (name, args, code) in CASES {
        let r = wba(args);
        if r.code != *code {
            failures.push(format!("{name}: exit {} (expected {code}); stderr: {}", r.code, r.stderr));
        }
        let path = expected_dir.join(format!("{name}.txt"));
        if updating() {
            std::fs::write(&path, &r.stdout).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == r.stdout => {}
            Ok(_) => failures.push(format!("{name}: output differs from {}", path.display())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    failures
}
