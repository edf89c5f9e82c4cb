//! Packing a path into the complement of a cycle.
//!
//! `cargo run --example hypergraph_packing`

use locallemma::hypergraph::{build_packing_instance, packing_condition, verify_packing};
use locallemma::solver::{solve_randomized, RandomizedConfig};
use locallemma::{AvoidanceProblem, EInterval, Hypergraph};

fn main() -> locallemma::Result<()> {
    let path = Hypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2]])?;
    let cycle = Hypergraph::new(8, 2, (0..8).map(|i| vec![i, (i + 1) % 8]).collect())?;
    let n = 8;

    let cond = packing_condition(&path, &cycle, n, &EInterval::default())?;
    println!("{} < C({n},2)/e : {}", cond.lhs, cond.verdict);

    let inst = build_packing_instance(&path, &cycle, n, 10_000)?;
    println!(
        "{} bad events, degree bound {}",
        inst.event_matchings.len(),
        inst.degree_bound()
    );

    let problem = AvoidanceProblem::new(3, n, inst.event_matchings)?;
    let out = solve_randomized(&problem, 1, &RandomizedConfig::default());
    if let Some(cert) = out.certificate {
        println!(
            "embedding {:?}, valid: {}",
            cert.witness,
            verify_packing(&path, &cycle, n, &cert.witness)?
        );
    }
    Ok(())
}
