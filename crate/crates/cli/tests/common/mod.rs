//! Golden cases shared by the golden and acceptance targets.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const CASES: &[(&str, &[&str])] = &[
    ("demo_chromatic", &["demo", "chromatic", "--depth", "8"]),
    ("dense_chain", &["-i", "tests/fixtures/basic.space", "dense", "--space", "S", "--subset", "0,1"]),
    ("dual_diamond", &["-i", "tests/fixtures/basic.space", "dual", "--space", "D"]),
    ("thomason_v", &["-i", "tests/fixtures/basic.space", "thomason", "--space", "V"]),
    ("closure_ev", &["-i", "tests/fixtures/basic.space", "closure-ev", "--lattice", "L"]),
    ("realize_diamond", &["-i", "tests/fixtures/basic.space", "realize", "--space", "D", "--subset", "a,d"]),
    (
        "distinguish_sierpinski",
        &["-i", "tests/fixtures/basic.space", "distinguish", "--support", "sg", "--family", "0"],
    ),
    (
        "classify_sierpinski",
        &["-i", "tests/fixtures/basic.space", "classify", "--support", "sg", "--subset", "1"],
    ),
    ("classify_tower", &["-i", "tests/fixtures/tower.space", "classify", "--support", "st"]),
    (
        "pro_dense_tower",
        &["-i", "tests/fixtures/tower.space", "pro-dense", "--space", "Tower", "--family", "a,b"],
    ),
    (
        "reconstruct_chromatic",
        &[
            "-i", "data/chromatic.space", "--depth", "8", "reconstruct", "--support", "chrom", "--dense",
            "finite-points",
        ],
    ),
    (
        "visible_porcelain",
        &["-i", "data/chromatic.space", "visible", "--space", "chromatic", "--point", "C3", "--porcelain"],
    ),
];

pub fn root() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    root().join("tests/golden").join(format!("{name}.txt"))
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_patchtop"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("binary runs")
}
