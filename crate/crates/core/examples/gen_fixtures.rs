//! Regenerate the bundled JSON fixtures from the built-in constructors.
//!
//! ```bash
//! cargo run -p precy-core --example gen_fixtures
//! ```

use std::path::PathBuf;
use std::sync::Arc;

use precy_core::io::{self, SeedsFile};
use precy_core::linalg;
use precy_core::rep::RepPoint;
use precy_core::scalar::Scalar;
use precy_core::{fixtures, AssocAlgebra};

fn main() -> std::io::Result<()> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("fixtures");
    std::fs::create_dir_all(root.join("algebras"))?;
    std::fs::create_dir_all(root.join("brackets"))?;
    std::fs::create_dir_all(root.join("seeds"))?;

    let write = |path: PathBuf, text: String| -> std::io::Result<()> {
        println!("writing {}", path.display());
        std::fs::write(path, text)
    };

    let algebras: Vec<(&str, AssocAlgebra)> = vec![
        ("scalars", fixtures::scalars()),
        ("dual_numbers", fixtures::dual_numbers()),
        ("k_times_k", fixtures::k_times_k()),
        ("upper_triangular2", fixtures::upper_triangular2()),
    ];
    for (stem, alg) in &algebras {
        write(
            root.join("algebras").join(format!("{stem}.json")),
            io::to_canonical_json(&io::AlgebraFile::from_algebra(alg)),
        )?;
    }

    for (stem, alg) in &algebras {
        let arc = Arc::new(alg.clone());
        let zero = fixtures::zero_bracket(&arc);
        write(
            root.join("brackets").join(format!("{stem}_zero.json")),
            io::to_canonical_json(&io::BracketFile::from_bracket(&zero)),
        )?;
    }
    let dual = Arc::new(fixtures::dual_numbers());
    write(
        root.join("brackets").join("dual_numbers_nontrivial.json"),
        io::to_canonical_json(&io::BracketFile::from_bracket(
            &fixtures::dual_numbers_bracket(&dual),
        )),
    )?;

    // representation seeds for the dual numbers: the one-dimensional zero
    // point and the 2×2 nilpotent point
    let mut shift = linalg::zeros(2, 2);
    shift[0][1] = Scalar::one();
    let seeds = vec![
        RepPoint::new(1, vec![linalg::identity(1), linalg::zeros(1, 1)]).unwrap(),
        RepPoint::new(2, vec![linalg::identity(2), shift]).unwrap(),
    ];
    write(
        root.join("seeds").join("dual_numbers_seeds.json"),
        io::to_canonical_json(&SeedsFile::from_points(&dual, &seeds)),
    )?;

    Ok(())
}
