#![allow(dead_code)]

use std::path::PathBuf;

use altring::algebra::StructureConstants;
use altring::cli::file;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every algebra file in the corpus, sorted by file name.
pub fn corpus() -> Vec<(String, StructureConstants)> {
    let mut paths: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let a = file::load(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (name, a)
        })
        .collect()
}

pub fn load(name: &str) -> StructureConstants {
    let p = corpus_dir().join(format!("{name}.json"));
    file::load(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}
