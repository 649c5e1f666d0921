//! The frozen fixture files match their builders. Run with
//! `COXRANK_BLESS=1` to rewrite them after an audited change.

use std::path::PathBuf;

use coxrank::decomposition::io::DecompositionFile;
use coxrank::fixtures;
use coxrank::graph::io::graph_to_json;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn compare(file: &str, frozen: &str, built: &str) {
    if std::env::var_os("COXRANK_BLESS").is_some() {
        std::fs::write(dir().join(file), built).unwrap();
    } else {
        assert_eq!(frozen, built, "{file} is out of date");
    }
}

#[test]
fn fixture_files_match_builders() {
    for name in fixtures::NAMES {
        let built = fixtures::build(name).unwrap().to_json();
        compare(&format!("{name}.json"), fixtures::json(name).unwrap(), &built);
    }
}

#[test]
fn theta_of_theta_cycle_is_frozen() {
    let file = fixtures::build("theta_cycle").unwrap();
    let d = file.load(None).unwrap().decomposition;
    let built = graph_to_json(&d.theta.graph, Some(d.theta.basepoint));
    compare("theta_cycle.theta.json", fixtures::THETA_CYCLE_THETA, &built);
}

#[test]
fn fixture_files_round_trip() {
    for name in fixtures::NAMES {
        let text = fixtures::json(name).unwrap();
        let file = DecompositionFile::from_json(text).unwrap();
        assert_eq!(file.to_json(), text);
    }
}
