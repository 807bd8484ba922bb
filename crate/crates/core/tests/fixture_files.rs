//! Guards the committed fixture files: each must parse, agree with its
//! built-in constructor, and already be in canonical form byte for byte.

use std::path::PathBuf;
use std::sync::Arc;

use precy_core::io::{to_canonical_json, AlgebraFile, BracketFile};
use precy_core::{fixtures, io};

fn fixture_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("fixtures")
        .join(rel)
}

#[test]
fn algebra_fixtures_match_constructors_and_are_canonical() {
    let pairs = [
        ("algebras/scalars.json", fixtures::scalars()),
        ("algebras/dual_numbers.json", fixtures::dual_numbers()),
        ("algebras/k_times_k.json", fixtures::k_times_k()),
        (
            "algebras/upper_triangular2.json",
            fixtures::upper_triangular2(),
        ),
    ];
    for (rel, expected) in pairs {
        let path = fixture_path(rel);
        let loaded = io::load_algebra(&path).unwrap_or_else(|e| panic!("{rel}: {e}"));
        assert_eq!(loaded, expected, "{rel}");
        let bytes = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            bytes,
            to_canonical_json(&AlgebraFile::from_algebra(&loaded)),
            "{rel} is not canonical"
        );
    }
}

#[test]
fn bracket_fixtures_are_canonical_and_verified() {
    let zero_files = [
        "brackets/scalars_zero.json",
        "brackets/dual_numbers_zero.json",
        "brackets/k_times_k_zero.json",
        "brackets/upper_triangular2_zero.json",
    ];
    for rel in zero_files {
        let path = fixture_path(rel);
        let d = io::load_bracket(&path).unwrap();
        assert!(d.is_zero(), "{rel}");
        let bytes = std::fs::read_to_string(&path).unwrap();
        assert_eq!(bytes, to_canonical_json(&BracketFile::from_bracket(&d)));
    }

    let path = fixture_path("brackets/dual_numbers_nontrivial.json");
    let d = io::load_bracket(&path).unwrap();
    let alg = Arc::new(fixtures::dual_numbers());
    assert_eq!(d.entries(), fixtures::dual_numbers_bracket(&alg).entries());
    for report in d.axiom_suite() {
        assert!(report.pass, "{}", report.name);
    }
    let bytes = std::fs::read_to_string(&path).unwrap();
    assert_eq!(bytes, to_canonical_json(&BracketFile::from_bracket(&d)));
}

#[test]
fn seed_fixtures_validate() {
    let alg = fixtures::dual_numbers();
    let seeds = io::load_seeds(&fixture_path("seeds/dual_numbers_seeds.json"), &alg).unwrap();
    assert_eq!(seeds.len(), 2);
    for seed in &seeds {
        assert!(precy_core::rep::validate_rep_point(&alg, seed).pass);
    }
}
