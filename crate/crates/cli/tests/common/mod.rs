//! Example invocations pinned by golden files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const CASES: &[(&str, &[&str])] = &[
    ("order_i3", &["order", "I:3"]),
    ("order_sgl_ordperm3", &["order", "SGL:ordperm:3"]),
    ("order_s1", &["order", "S:1"]),
    ("order_sgl_partitions4", &["order", "SGL:partitions:4"]),
    ("eggbox_i3_all", &["eggbox", "I:3", "--all"]),
    ("eggbox_t3_constants", &["eggbox", "T:3", "--jclass", "constants"]),
    ("eggbox_s3", &["eggbox", "S:3"]),
    ("eggbox_i3_graph", &["eggbox", "I:3", "--jclass", "J2", "--format", "graph"]),
    ("irreps_i3_check", &["irreps", "I:3", "--check"]),
    ("irreps_sgl_ordperm3_check", &["irreps", "SGL:ordperm:3", "--check"]),
    ("irreps_i1", &["irreps", "I:1"]),
    ("rep_t3_mapping", &["rep", "T:3", "--build", "mapping"]),
    ("rep_s4_specht_211", &["rep", "S:4", "--build", "specht:(2,1,1)"]),
    ("rep_i3_induce_j1", &["rep", "I:3", "--build", "induce:J1:(1)"]),
    ("rep_i3_reduce_j2", &["rep", "I:3", "--build", "reduce:J2"]),
];

pub fn regmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regmon"))
        .args(args)
        .output()
        .expect("regmon runs")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}
