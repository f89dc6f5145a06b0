//! Regenerates the checked-in input fixtures and demo golden files.
//!
//! ```text
//! cargo test -p beliefkit-cli --test regen -- --ignored
//! ```

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use beliefkit::doc::Document;
use beliefkit::scenarios;

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

#[test]
#[ignore = "writes into the source tree"]
fn regenerate_fixtures() {
    let dir = manifest_path("tests/fixtures");
    fs::create_dir_all(&dir).unwrap();

    let tp = scenarios::three_prisoners();
    fs::write(
        dir.join("three_prisoners.json"),
        Document::from_mass(tp.belief.mass()).to_json(),
    )
    .unwrap();

    fs::write(
        dir.join("not_a_belief.json"),
        Document::from_belief_table(&scenarios::non_belief_envelope()).to_json(),
    )
    .unwrap();

    let (frame, constraints) = scenarios::lost_info_constraints();
    fs::write(
        dir.join("lost_info.json"),
        Document::from_constraints(&frame, &constraints).to_json(),
    )
    .unwrap();

    fs::write(
        dir.join("three_prisoners_partition.json"),
        Document::from_partition(&scenarios::three_prisoners_partition()).to_json(),
    )
    .unwrap();
}

#[test]
#[ignore = "writes into the source tree"]
fn regenerate_golden_demo_outputs() {
    let dir = manifest_path("tests/golden");
    fs::create_dir_all(&dir).unwrap();
    for name in ["three-prisoners", "noncommute", "sure-thing", "beehive", "lost-info"] {
        let output = Command::new(env!("CARGO_BIN_EXE_beliefkit"))
            .args(["demo", name])
            .output()
            .unwrap();
        assert!(output.status.success(), "demo {name} failed");
        fs::write(dir.join(format!("{name}.txt")), &output.stdout).unwrap();
    }
}
