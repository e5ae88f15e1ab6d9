mod common;

use std::path::PathBuf;

use leglab::corpus::{corpus_check, load_dir, shipped, CorpusError};
use leglab::skein::SkeinConfig;
use leglab::Error;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("leglab-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn directory_matches_embedded_corpus() {
    assert_eq!(load_dir(&corpus_dir()).unwrap(), shipped());
}

#[test]
fn shipped_corpus_passes() {
    let report = corpus_check(&shipped(), &SkeinConfig::default());
    assert!(report.ok, "{:?}", report.first_failure());
    assert_eq!(report.entries.len(), 11);
    assert!(report.to_table().ends_with("all entries pass\n"));
}

#[test]
fn reports_are_deterministic() {
    let cfg = SkeinConfig::default();
    let a = serde_json::to_string(&corpus_check(&shipped(), &cfg)).unwrap();
    let b = serde_json::to_string(&corpus_check(&shipped(), &cfg)).unwrap();
    assert_eq!(a, b);
    let mut reversed = shipped();
    reversed.reverse();
    assert_eq!(a, serde_json::to_string(&corpus_check(&reversed, &cfg)).unwrap());
}

#[test]
fn corrupted_tb_names_the_field() {
    let mut entries = shipped();
    let e = entries.iter_mut().find(|e| e.name() == "k10_139").unwrap();
    e.expected.as_mut().unwrap().tb = Some(7);
    let report = corpus_check(&entries, &SkeinConfig::default());
    assert!(!report.ok);
    match report.first_failure().unwrap() {
        CorpusError::Mismatch { entry, field, expected, actual } => {
            assert_eq!(
                (entry.as_str(), field.as_str(), expected.as_str(), actual.as_str()),
                ("k10_139", "tb", "7", "6")
            );
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn wrong_certificate_fails() {
    let mut entries = shipped();
    let e = entries.iter_mut().find(|e| e.name() == "right_trefoil").unwrap();
    e.unknotting_certificate = Some(vec![]);
    let report = corpus_check(&entries, &SkeinConfig::default());
    assert_eq!(
        report.first_failure().unwrap().to_string(),
        "right_trefoil: unknotting_certificate expected pass or inconclusive, got fail"
    );
}

#[test]
fn empty_directory_has_no_entries() {
    let d = scratch_dir("empty");
    let err = load_dir(&d).unwrap_err();
    assert!(matches!(err, Error::Corpus(CorpusError::NoEntries(_))));
    assert!(err.to_string().contains("no entries"));
    assert_eq!(err.code(), "corpus_empty");
}

#[test]
fn malformed_file_is_a_parse_error() {
    let d = scratch_dir("bad");
    std::fs::write(d.join("x.json"), "{\"front\": 3}").unwrap();
    assert_eq!(load_dir(&d).unwrap_err().code(), "corpus_parse");
}

#[test]
fn missing_directory_is_io() {
    assert_eq!(load_dir(&corpus_dir().join("nope")).unwrap_err().code(), "io");
}
