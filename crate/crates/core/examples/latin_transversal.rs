//! Latin transversals of a 12 x 12 matrix in which every value occurs twice.
//!
//! `cargo run --example latin_transversal`

use locallemma::latin::{build_latin_events, is_latin_transversal, transversal_condition};
use locallemma::solver::{solve_randomized, RandomizedConfig};
use locallemma::{AvoidanceProblem, EInterval, IntMatrix};

fn main() -> locallemma::Result<()> {
    let n = 12;
    let a = IntMatrix::from_fn(n, |i, j| (n * (i / 2) + (j + i % 2) % n) as i64);
    let k = a.max_multiplicity();
    println!(
        "k = {k}, condition: {}",
        transversal_condition(n, k, &EInterval::default())
    );

    let family = build_latin_events(&a);
    println!(
        "{} bad events, degree bound {}",
        family.len(),
        family.degree_bound()
    );

    let problem = AvoidanceProblem::new(n, n, family.matchings)?;
    let out = solve_randomized(&problem, 42, &RandomizedConfig::default());
    let pi = out.certificate.expect("transversal found").witness;
    println!("transversal {pi:?}: {}", is_latin_transversal(&a, &pi)?);
    println!("{:?}", out.stats);
    Ok(())
}
