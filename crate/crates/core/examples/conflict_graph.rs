//! Canonical events, their conflict graph, and an exhaustive check that the
//! conflict graph is a negative dependency graph.
//!
//! `cargo run --example conflict_graph`

use locallemma::injection::{canonical_event, conflict_graph};
use locallemma::lll::{verify_lll_conclusion, verify_negative_dependency_graph};
use locallemma::rational::{ratio, render};
use locallemma::{Limits, Matching, SampleSpace, WeightVector};

fn main() -> locallemma::Result<()> {
    let matchings = vec![
        Matching::from_pairs(&[(0, 0), (1, 1)])?,
        Matching::from_pairs(&[(0, 1), (2, 0)])?,
        Matching::from_pairs(&[(1, 2), (2, 3)])?,
        Matching::from_pairs(&[(0, 0), (2, 2)])?,
    ];
    let space = SampleSpace::enumerate(3, 4)?;
    let events: Vec<_> = matchings
        .iter()
        .map(|m| canonical_event(&space, m).map(|c| c.into_event()))
        .collect::<locallemma::Result<_>>()?;
    let g = conflict_graph(&matchings);
    for (a, b) in g.edges() {
        println!("{} conflicts with {}", matchings[a], matchings[b]);
    }

    let limits = Limits::default();
    println!(
        "{:?}",
        verify_negative_dependency_graph(&space, &events, &g, &limits)?
    );

    let x = WeightVector::uniform(events.len(), ratio(1, 8))?;
    let c = verify_lll_conclusion(&space, &events, &g, &x, &limits)?;
    println!(
        "P(no event) = {} >= {} : {}",
        render(&c.avoidance),
        render(&c.bound),
        c.holds()
    );
    Ok(())
}
