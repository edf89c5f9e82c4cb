//! Command lines shared by the golden-file tests and the acceptance suite.

#![allow(dead_code)]

use std::path::PathBuf;

pub struct Case {
    pub name: &'static str,
    /// `@file` names a file under `tests/data`.
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "latin4_check",
        args: &["latin", "@latin4.txt"],
        exit: 0,
    },
    Case {
        name: "latin4_solve",
        args: &["latin", "@latin4.txt", "--solve", "--seed", "7"],
        exit: 0,
    },
    Case {
        name: "latin4_exhaustive",
        args: &["latin", "@latin4.txt", "--exhaustive"],
        exit: 0,
    },
    Case {
        name: "latin12_k2_solve",
        args: &["latin", "@latin12_k2.txt", "--solve", "--seed", "3"],
        exit: 0,
    },
    Case {
        name: "latin12_k2_random_selection",
        args: &[
            "latin",
            "@latin12_k2.txt",
            "--solve",
            "--seed",
            "3",
            "--random-selection",
        ],
        exit: 0,
    },
    Case {
        name: "pack_path_cycle",
        args: &["pack", "@path3.txt", "@cycle8.txt", "8", "--solve"],
        exit: 0,
    },
    Case {
        name: "k6_matching",
        args: &[
            "perfect-packing",
            "@edge.txt",
            "@k6.txt",
            "--solve",
            "--float",
        ],
        exit: 0,
    },
    Case {
        name: "ndg_conflict",
        args: &["verify-ndg", "@events_conflict.txt"],
        exit: 0,
    },
    Case {
        name: "ndg_violation",
        args: &["verify-ndg", "@events_violation.txt"],
        exit: 3,
    },
    Case {
        name: "lll_search",
        args: &["lll-check", "@lll_path.txt"],
        exit: 0,
    },
    Case {
        name: "lll_weights",
        args: &["lll-check", "@lll_path.txt", "--weights", "1/4,1/4,1/4"],
        exit: 0,
    },
    Case {
        name: "lll_weights_fail",
        args: &[
            "lll-check",
            "@lll_path.txt",
            "--weights",
            "1/100,1/100,1/100",
        ],
        exit: 3,
    },
];

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

pub fn resolve(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(file) => data_dir().join(file).display().to_string(),
            None => a.to_string(),
        })
        .collect()
}
