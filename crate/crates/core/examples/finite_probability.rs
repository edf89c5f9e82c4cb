//! Exact probabilities on the uniform space of injections.
//!
//! `cargo run --example finite_probability`

use locallemma::rational::render;
use locallemma::{Limits, SampleSpace};

fn main() -> locallemma::Result<()> {
    let space = SampleSpace::enumerate(2, 4)?;
    println!("|I(2,4)| = {}", space.len());

    let a = space.event_where(|s| s[0] == 0);
    let b = space.event_where(|s| s[1] == 1);
    let ab = a.intersection(&b)?;
    println!("P(A) = {}", render(&space.probability(&a)?));
    println!("P(B) = {}", render(&space.probability(&b)?));
    println!("P(A and B) = {}", render(&space.probability(&ab)?));
    println!("P(A | B) = {}", render(&space.conditional(&a, &b)?));

    let independent = space.is_mutually_independent(&[a, b], &Limits::default())?;
    println!("A and B independent: {independent}");
    Ok(())
}
