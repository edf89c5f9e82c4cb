//! The local lemma condition, its symmetric form and the weight search.
//!
//! `cargo run --example lll_conditions`

use locallemma::lll::{
    check_lll_condition, check_symmetric_condition, find_weights, LllCondition,
    FIND_WEIGHTS_MAX_ITER,
};
use locallemma::rational::{ratio, render};
use locallemma::{EInterval, Graph, WeightVector};

fn main() -> locallemma::Result<()> {
    // A path of three events, each of probability 1/8.
    let g = Graph::from_edges(3, [(0, 1), (1, 2)])?;
    let p = vec![ratio(1, 8); 3];

    let e = EInterval::default();
    println!(
        "symmetric form, d = 2: {}",
        check_symmetric_condition(&p[0], g.max_degree(), &e)
    );

    let x = WeightVector::uniform(3, ratio(1, 4))?;
    match check_lll_condition(&p, &g, &x)? {
        LllCondition::Holds { bound } => {
            println!("with x = 1/4: holds, avoidance at least {}", render(&bound))
        }
        LllCondition::Violated { index } => println!("with x = 1/4: fails at event {}", index + 1),
    }

    if let Some(found) = find_weights(&p, &g, FIND_WEIGHTS_MAX_ITER) {
        let shown: Vec<String> = found.as_slice().iter().map(render).collect();
        println!("found weights: {}", shown.join(", "));
        println!("avoidance at least {}", render(&found.avoidance_bound()));
    }
    Ok(())
}
