//! Perfect matchings via the packing reduction.
//!
//! `cargo run --example perfect_matching`

use locallemma::hypergraph::{
    build_packing_instance, perfect_matching_criteria, perfect_packing_reduction,
    validate_perfect_packing,
};
use locallemma::solver::{solve_randomized, RandomizedConfig};
use locallemma::{AvoidanceProblem, EInterval, Hypergraph};

fn main() -> locallemma::Result<()> {
    let e = EInterval::default();
    let edge = Hypergraph::complete(2, 2)?;

    // K_10 minus a perfect matching: minimum degree 8.
    let host_edges: Vec<Vec<usize>> = locallemma::hypergraph::r_subsets(10, 2)
        .into_iter()
        .filter(|p| !(p[0] % 2 == 0 && p[1] == p[0] + 1))
        .collect();
    let host = Hypergraph::new(10, 2, host_edges)?;

    let criteria = perfect_matching_criteria(&host, &e);
    println!("graph criterion: {}", criteria.graph_matching.render());

    let red = perfect_packing_reduction(&edge, &host)?;
    let inst = build_packing_instance(&red.h1, &red.h2, red.n, 100_000)?;
    let problem = AvoidanceProblem::new(red.n, red.n, inst.event_matchings)?;
    let out = solve_randomized(&problem, 0, &RandomizedConfig::default());
    let cert = out.certificate.expect("a perfect matching exists");
    let parts = red.partition(&cert.witness);
    println!("matching {parts:?}");
    println!("valid: {}", validate_perfect_packing(&edge, &host, &parts)?);
    Ok(())
}
