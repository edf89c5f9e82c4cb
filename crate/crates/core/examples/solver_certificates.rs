//! Exhaustive and randomized avoidance search, and their certificates.
//!
//! `cargo run --example solver_certificates`

use locallemma::solver::{
    solve_exhaustive, solve_randomized, verify_avoidance, RandomizedConfig, Selection,
};
use locallemma::{AvoidanceProblem, Matching};

fn main() -> locallemma::Result<()> {
    // Permutations of [4] that fix no point: derangements.
    let forbidden = (0..4)
        .map(|i| Matching::from_pairs(&[(i, i)]))
        .collect::<Result<Vec<_>, _>>()?;
    let problem = AvoidanceProblem::new(4, 4, forbidden)?;

    if let Some(cert) = solve_exhaustive(&problem, 1_000)? {
        println!(
            "first derangement {:?} after {} nodes",
            cert.witness, cert.stats.nodes
        );
    }

    let config = RandomizedConfig {
        selection: Selection::Random,
        ..RandomizedConfig::default()
    };
    for seed in 0..3 {
        let out = solve_randomized(&problem, seed, &config);
        let cert = out.certificate.expect("derangements exist");
        println!(
            "seed {seed}: {:?}, checked {}, independent check {}",
            cert.witness,
            cert.checked,
            verify_avoidance(&problem, &cert.witness)
        );
    }
    Ok(())
}
