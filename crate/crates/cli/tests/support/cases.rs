// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

// Shared by the golden-file tests and the acceptance suite.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

/// `{tmp}` in an argument is replaced by a per-run scratch directory.
pub const CASES: &[Case] = &[
    case(
        "generate_petersen",
        &[
            "generate",
            "petersen",
            "--n",
            "5",
            "--k",
            "2",
            "-o",
            "{tmp}/p.json",
        ],
        0,
    ),
    case(
        "generate_binomial",
        &[
            "generate",
            "binomial-tree",
            "--order",
            "3",
            "-o",
            "{tmp}/b.json",
        ],
        0,
    ),
    case(
        "generate_hexagonal",
        &[
            "generate",
            "hexagonal-lattice",
            "--rows",
            "2",
            "--cols",
            "2",
            "-o",
            "{tmp}/h.json",
        ],
        0,
    ),
    case(
        "generate_bad_petersen",
        &["generate", "petersen", "--n", "2", "--k", "1"],
        2,
    ),
    case(
        "generate_missing_param",
        &["generate", "grid", "--rows", "2"],
        2,
    ),
    case(
        "generate_grid_stdout",
        &["generate", "grid", "--rows", "1", "--cols", "2"],
        0,
    ),
    case("info_holes", &["info", "holes.json"], 0),
    case("info_edge_list", &["info", "square.edges"], 0),
    case("info_bad_edge_list", &["info", "bad.edges"], 2),
    case("info_missing_file", &["info", "no_such_file.json"], 2),
    case("info_dangling", &["info", "dangling.json"], 2),
    case(
        "shortest_path_triangle",
        &[
            "shortest-path",
            "triangle.json",
            "--source",
            "0",
            "--target",
            "2",
            "--weight-key",
            "weight",
        ],
        0,
    ),
    case(
        "shortest_path_petersen",
        &["shortest-path", "petersen.json", "--source", "0"],
        0,
    ),
    case(
        "shortest_path_missing_key",
        &[
            "shortest-path",
            "triangle.json",
            "--source",
            "0",
            "--weight-key",
            "cost",
        ],
        2,
    ),
    case(
        "shortest_path_default_weight",
        &[
            "shortest-path",
            "triangle.json",
            "--source",
            "0",
            "--weight-key",
            "cost",
            "--default-weight",
            "2",
        ],
        0,
    ),
    case(
        "shortest_path_unreachable",
        &[
            "shortest-path",
            "split.json",
            "--source",
            "0",
            "--target",
            "3",
        ],
        1,
    ),
    case(
        "shortest_path_edge_list",
        &[
            "shortest-path",
            "square.edges",
            "--source",
            "0",
            "--target",
            "2",
            "--weight-key",
            "weight",
        ],
        0,
    ),
    case(
        "shortest_path_bad_source",
        &["shortest-path", "petersen.json", "--source", "42"],
        2,
    ),
    case("topo_diamond", &["topo", "diamond.json"], 0),
    case("topo_cycle", &["topo", "cycle3.json"], 1),
    case("topo_undirected", &["topo", "petersen.json"], 2),
    case(
        "isomorphic_petersen",
        &["isomorphic", "petersen.json", "petersen_shuffled.json"],
        0,
    ),
    case(
        "isomorphic_prism",
        &["isomorphic", "petersen.json", "prism.json"],
        1,
    ),
    case(
        "subisomorphic_k4_c4_mono",
        &["subisomorphic", "k4.json", "c4.json", "--induced", "false"],
        0,
    ),
    case(
        "subisomorphic_k4_c4_induced",
        &["subisomorphic", "k4.json", "c4.json", "--induced", "true"],
        1,
    ),
    case(
        "subisomorphic_empty_pattern",
        &["subisomorphic", "k4.json", "empty.json"],
        0,
    ),
    case(
        "subisomorphic_mismatch",
        &["subisomorphic", "k4.json", "diamond.json"],
        2,
    ),
    case(
        "subisomorphic_c4_p3",
        &[
            "subisomorphic",
            "c4.json",
            "path3.json",
            "--induced",
            "false",
            "--mappings",
            "3",
        ],
        0,
    ),
    case(
        "subisomorphic_petersen_c4",
        &[
            "subisomorphic",
            "petersen.json",
            "c4.json",
            "--induced",
            "false",
        ],
        1,
    ),
    case(
        "layout_star_path",
        &["layout", "star5.json", "path3.json"],
        0,
    ),
    case("layout_no_fit", &["layout", "path3.json", "star5.json"], 1),
    case(
        "layout_directed",
        &["layout", "diamond.json", "directed_path.json"],
        2,
    ),
    case("matching_petersen", &["matching", "petersen.json"], 0),
    case(
        "matching_petersen_exact",
        &["matching", "petersen.json", "--exact"],
        0,
    ),
    case("matching_directed", &["matching", "diamond.json"], 2),
    case(
        "dot_triangle_labels",
        &["dot", "triangle.json", "--label-key", "label"],
        0,
    ),
    case("dot_diamond", &["dot", "diamond.json"], 0),
    case("unknown_subcommand", &["bogus"], 2),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixtures() -> PathBuf {
    crate_dir().join("tests/fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir()
        .join("tests/golden")
        .join(format!("{name}.stdout"))
}

pub fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgraph-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

pub fn sgraph(args: &[&str], tmp: &Path) -> Output {
    let tmp = tmp.to_str().unwrap();
    let args: Vec<String> = args.iter().map(|a| a.replace("{tmp}", tmp)).collect();
    Command::new(env!("CARGO_BIN_EXE_sgraph"))
        .args(&args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs")
}

/// Runs one case and describes every deviation from its golden file.
pub fn check(case: &Case, tmp: &Path) -> Result<(), String> {
    let out = sgraph(case.args, tmp);
    let mut problems = Vec::new();
    let code = out.status.code().unwrap_or(-1);
    if code != case.exit {
        problems.push(format!("exit {code}, expected {}", case.exit));
    }
    if code != 0 && out.stderr.is_empty() {
        problems.push("no diagnostic on stderr".to_string());
    }
    let path = golden_path(case.name);
    if std::env::var_os("SGRAPH_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    match std::fs::read(&path) {
        Ok(expected) if expected == out.stdout => {}
        Ok(_) => problems.push(format!(
            "stdout differs from {}:\n{}",
            path.display(),
            String::from_utf8_lossy(&out.stdout)
        )),
        Err(e) => problems.push(format!("cannot read {}: {e}", path.display())),
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(format!("{}: {}", case.name, problems.join("; ")))
    }
}
