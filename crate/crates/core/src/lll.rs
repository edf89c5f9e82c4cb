//! The local lemma itself: dependency graphs, the weighted condition
//! `P(A_i) <= x_i ∏_{j ∈ J_i} (1 - x_j)`, the symmetric condition
//! `e p (d+1) <= 1`, and exhaustive verification of both the graph
//! hypotheses and the conclusion `P(∩ A_i^c) >= ∏ (1 - x_i)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::prob::{Event, Limits, SampleSpace};
use crate::rational::{self, Rational};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n)
                .map(|i| (0..n).filter(|&j| j != i).collect())
                .collect(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds `{a, b}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.n();
        if a >= n || b >= n {
            return Err(Error::domain(format!(
                "edge {{{a}, {b}}} out of range for {n} vertices"
            )));
        }
        if a == b {
            return Err(Error::domain(format!("self-loop at vertex {a}")));
        }
        if let Err(pos) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(pos, b);
            let pos = self.adj[b].binary_search(&a).unwrap_err();
            self.adj[b].insert(pos, a);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if let Some(list) = self.adj.get_mut(a) {
            list.retain(|&x| x != b);
        }
        if let Some(list) = self.adj.get_mut(b) {
            list.retain(|&x| x != a);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj
            .get(a)
            .is_some_and(|list| list.binary_search(&b).is_ok())
    }

    /// The neighbourhood `J_i`, sorted.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Vertices other than `i` that are not adjacent to it, sorted.
    pub fn non_neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&j| j != i && !self.has_edge(i, j))
            .collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(a, b)` with `a < b` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Three-valued verdict for inequalities that involve `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Holds,
    Fails,
    Indeterminate,
}

impl TriState {
    pub fn as_str(self) -> &'static str {
        match self {
            TriState::Holds => "holds",
            TriState::Fails => "fails",
            TriState::Indeterminate => "indeterminate",
        }
    }

    pub fn holds(self) -> bool {
        self == TriState::Holds
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rational enclosure `lower < e < upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EInterval {
    lower: Rational,
    upper: Rational,
}

impl Default for EInterval {
    fn default() -> Self {
        let scale = BigInt::from(10u64.pow(15));
        EInterval {
            lower: Rational::new(BigInt::from(2_718_281_828_459_045u64), scale.clone()),
            upper: Rational::new(BigInt::from(2_718_281_828_459_046u64), scale),
        }
    }
}

impl EInterval {
    /// Accepts an enclosure only if it is at most `10^-12` wide and contains
    /// the bracket `[S_N, S_N + 1/(N! N)]` from the series for `e`.
    pub fn new(lower: Rational, upper: Rational) -> Result<Self> {
        if lower >= upper {
            return Err(Error::domain("enclosure of e must have lower < upper"));
        }
        if &upper - &lower > rational::ratio(1, 1_000_000_000_000) {
            return Err(Error::domain("enclosure of e is wider than 1e-12"));
        }
        let (lo, hi) = series_bracket(30);
        if lower > lo || upper < hi {
            return Err(Error::domain("interval does not enclose e"));
        }
        Ok(EInterval { lower, upper })
    }

    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn upper(&self) -> &Rational {
        &self.upper
    }

    /// Decides `coeff * e <= bound`.
    pub fn decide_le(&self, coeff: &Rational, bound: &Rational) -> TriState {
        let (min, max) = self.scaled(coeff);
        if max <= *bound {
            TriState::Holds
        } else if min > *bound {
            TriState::Fails
        } else {
            TriState::Indeterminate
        }
    }

    /// Decides `coeff * e < bound`.
    pub fn decide_lt(&self, coeff: &Rational, bound: &Rational) -> TriState {
        let (min, max) = self.scaled(coeff);
        if max < *bound {
            TriState::Holds
        } else if min >= *bound {
            TriState::Fails
        } else {
            TriState::Indeterminate
        }
    }

    fn scaled(&self, coeff: &Rational) -> (Rational, Rational) {
        let a = coeff * &self.lower;
        let b = coeff * &self.upper;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// `(S_N, S_N + 1/(N! N))` with `S_N = Σ_{k<=N} 1/k!`; `e` lies strictly inside.
fn series_bracket(terms: u64) -> (Rational, Rational) {
    let mut sum = Rational::zero();
    let mut fact = BigInt::one();
    for k in 0..=terms {
        if k > 0 {
            fact *= BigInt::from(k);
        }
        sum += Rational::new(BigInt::one(), fact.clone());
    }
    let tail = Rational::new(BigInt::one(), fact * BigInt::from(terms));
    let upper = &sum + tail;
    (sum, upper)
}

/// Weights `x_i ∈ [0, 1)`, one per event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(x: Vec<Rational>) -> Result<Self> {
        for (i, xi) in x.iter().enumerate() {
            if xi.is_negative() || *xi >= Rational::one() {
                return Err(Error::domain(format!(
                    "weight x[{i}] = {} is outside [0, 1)",
                    rational::render(xi)
                )));
            }
        }
        Ok(WeightVector(x))
    }

    pub fn uniform(n: usize, value: Rational) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `∏ (1 - x_i)`.
    pub fn avoidance_bound(&self) -> Rational {
        self.0
            .iter()
            .fold(Rational::one(), |acc, x| acc * (Rational::one() - x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LllCondition {
    /// Every event satisfies the condition; `bound = ∏ (1 - x_i)`.
    Holds { bound: Rational },
    /// First event whose probability exceeds its allowance.
    Violated { index: usize },
}

impl LllCondition {
    pub fn holds(&self) -> bool {
        matches!(self, LllCondition::Holds { .. })
    }
}

fn check_probabilities(p: &[Rational]) -> Result<()> {
    for (i, pi) in p.iter().enumerate() {
        if !rational::is_probability(pi) {
            return Err(Error::domain(format!(
                "p[{i}] = {} is not a probability",
                rational::render(pi)
            )));
        }
    }
    Ok(())
}

/// The allowance `x_i ∏_{j ∈ J_i} (1 - x_j)` for one event.
pub fn allowance(g: &Graph, x: &WeightVector, i: usize) -> Rational {
    let xs = x.as_slice();
    g.neighbors(i)
        .iter()
        .fold(xs[i].clone(), |acc, &j| acc * (Rational::one() - &xs[j]))
}

pub fn check_lll_condition(p: &[Rational], g: &Graph, x: &WeightVector) -> Result<LllCondition> {
    if p.len() != g.n() || x.len() != g.n() {
        return Err(Error::domain(format!(
            "length mismatch: {} probabilities, {} weights, {} vertices",
            p.len(),
            x.len(),
            g.n()
        )));
    }
    check_probabilities(p)?;
    for (i, pi) in p.iter().enumerate() {
        if *pi > allowance(g, x, i) {
            return Ok(LllCondition::Violated { index: i });
        }
    }
    Ok(LllCondition::Holds {
        bound: x.avoidance_bound(),
    })
}

/// Decides `e p (d + 1) <= 1` soundly against the enclosure.
pub fn check_symmetric_condition(p: &Rational, d: usize, e: &EInterval) -> TriState {
    let coeff = p * Rational::from_integer(BigInt::from(d + 1));
    e.decide_le(&coeff, &Rational::one())
}

pub const FIND_WEIGHTS_MAX_ITER: usize = 10_000;

const WEIGHT_BITS: u32 = 48;

/// Searches for weights passing [`check_lll_condition`].
///
/// Runs the monotone iteration `x_i <- p_i / ∏_{j ∈ J_i} (1 - x_j)` from
/// `x = p` in exact arithmetic, with each coordinate rounded up to a multiple
/// of `2^-48` and `p` inflated by a factor `1 + 2^-20` so that the limit
/// satisfies the condition strictly. Stops once successive rounds differ by
/// less than `10^-9` and the condition verifies.
pub fn find_weights(p: &[Rational], g: &Graph, max_iter: usize) -> Option<WeightVector> {
    if p.len() != g.n() || check_probabilities(p).is_err() {
        return None;
    }
    if p.iter().any(|pi| *pi >= Rational::one()) {
        return None;
    }
    let inflate = Rational::one() + Rational::new(BigInt::one(), BigInt::one() << 20);
    let target: Vec<Rational> = p.iter().map(|pi| pi * &inflate).collect();
    let tolerance = rational::ratio(1, 1_000_000_000);

    let mut x: Vec<Rational> = p
        .iter()
        .map(|pi| rational::ceil_dyadic(pi, WEIGHT_BITS))
        .collect();
    if x.iter().any(|xi| *xi >= Rational::one()) {
        return None;
    }
    for _ in 0..max_iter {
        let next: Vec<Rational> = (0..g.n())
            .map(|i| {
                let denom = g
                    .neighbors(i)
                    .iter()
                    .fold(Rational::one(), |acc, &j| acc * (Rational::one() - &x[j]));
                rational::ceil_dyadic(&(&target[i] / denom), WEIGHT_BITS)
            })
            .collect();
        if next.iter().any(|xi| *xi >= Rational::one()) {
            return None;
        }
        let converged = next.iter().zip(&x).all(|(a, b)| (a - b).abs() < tolerance);
        x = next;
        if converged {
            let weights = WeightVector(x.clone());
            if matches!(check_lll_condition(p, g, &weights), Ok(c) if c.holds()) {
                return Some(weights);
            }
        }
    }
    None
}

fn check_family(space: &SampleSpace, events: &[Event], g: &Graph, limits: &Limits) -> Result<()> {
    if events.len() != g.n() {
        return Err(Error::domain(format!(
            "{} events but the graph has {} vertices",
            events.len(),
            g.n()
        )));
    }
    if g.n() > limits.graph_cap {
        return Err(Error::SizeLimit {
            what: "exhaustive dependency graph verification",
            required: format!("{} events", g.n()),
            cap: limits.graph_cap as u64,
        });
    }
    for e in events {
        space.check_owns(e)?;
    }
    Ok(())
}

/// First `(i, S)` for which conditioning on `∩_{j∈S} A_j^c` raises `P(A_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdgViolation {
    pub event: usize,
    pub conditioned_on: Vec<usize>,
    /// `P(A_i | ∩_{j∈S} A_j^c)`.
    pub conditional: Rational,
    /// `P(A_i)`.
    pub unconditional: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NdgVerdict {
    Holds,
    Violated(NdgViolation),
}

impl NdgVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, NdgVerdict::Holds)
    }
}

/// Checks that `g` is a negative dependency graph: for every `i` and every
/// `S` of non-neighbours of `i` with `P(∩_{j∈S} A_j^c) > 0`,
/// `P(A_i | ∩_{j∈S} A_j^c) <= P(A_i)`.
///
/// Subsets are visited in lexicographic order of their sorted index lists,
/// so the reported witness is the first one in `(i, S)` order.
pub fn verify_negative_dependency_graph(
    space: &SampleSpace,
    events: &[Event],
    g: &Graph,
    limits: &Limits,
) -> Result<NdgVerdict> {
    check_family(space, events, g, limits)?;
    let total = space.len() as u128;
    let complements: Vec<Event> = events.iter().map(Event::complement).collect();

    let witness = (0..g.n()).into_par_iter().find_map_first(|i| {
        let candidates = g.non_neighbors(i);
        let a = &events[i];
        let a_count = a.count() as u128;
        let mut chosen = Vec::new();
        ndg_search(
            a,
            a_count,
            total,
            &complements,
            &candidates,
            0,
            &space.full(),
            &mut chosen,
        )
        .map(|(s, hit, cond)| NdgViolation {
            event: i,
            conditioned_on: s,
            conditional: rational::from_counts(hit, cond),
            unconditional: rational::from_counts(a_count, total),
        })
    });
    Ok(witness.map_or(NdgVerdict::Holds, NdgVerdict::Violated))
}

#[allow(clippy::too_many_arguments)]
fn ndg_search(
    a: &Event,
    a_count: u128,
    total: u128,
    complements: &[Event],
    candidates: &[usize],
    start: usize,
    acc: &Event,
    chosen: &mut Vec<usize>,
) -> Option<(Vec<usize>, u128, u128)> {
    for (pos, &j) in candidates.iter().enumerate().skip(start) {
        let mut next = acc.clone();
        next.intersect_with(&complements[j]);
        let cond = next.count() as u128;
        if cond == 0 {
            // Every superset also has probability zero.
            continue;
        }
        chosen.push(j);
        let hit = a.intersection_count(&next) as u128;
        if hit * total > a_count * cond {
            return Some((chosen.clone(), hit, cond));
        }
        if let Some(found) = ndg_search(
            a,
            a_count,
            total,
            complements,
            candidates,
            pos + 1,
            &next,
            chosen,
        ) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// First `(i, S)` where `A_i` fails to be independent of `∩_{j∈S} A_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyViolation {
    pub event: usize,
    pub subset: Vec<usize>,
    /// `P(A_i ∩ ∩_{j∈S} A_j)`.
    pub joint: Rational,
    /// `P(A_i) P(∩_{j∈S} A_j)`.
    pub product: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DependencyVerdict {
    Holds,
    Violated(DependencyViolation),
}

impl DependencyVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, DependencyVerdict::Holds)
    }
}

/// Checks that `g` is a dependency graph: each `A_i` is independent of the
/// algebra generated by its non-neighbours.
///
/// Intersections of non-neighbour events form a π-system generating that
/// algebra, so it suffices to test `P(A_i ∩ B_S) = P(A_i) P(B_S)` for
/// `B_S = ∩_{j∈S} A_j` over every subset `S` of non-neighbours.
pub fn verify_dependency_graph(
    space: &SampleSpace,
    events: &[Event],
    g: &Graph,
    limits: &Limits,
) -> Result<DependencyVerdict> {
    check_family(space, events, g, limits)?;
    let total = space.len() as u128;

    let witness = (0..g.n()).into_par_iter().find_map_first(|i| {
        let candidates = g.non_neighbors(i);
        let a = &events[i];
        let a_count = a.count() as u128;
        let mut chosen = Vec::new();
        dep_search(
            a,
            a_count,
            total,
            events,
            &candidates,
            0,
            &space.full(),
            &mut chosen,
        )
        .map(|(s, hit, b)| DependencyViolation {
            event: i,
            subset: s,
            joint: rational::from_counts(hit, total),
            product: rational::from_counts(a_count * b, total * total),
        })
    });
    Ok(witness.map_or(DependencyVerdict::Holds, DependencyVerdict::Violated))
}

#[allow(clippy::too_many_arguments)]
fn dep_search(
    a: &Event,
    a_count: u128,
    total: u128,
    events: &[Event],
    candidates: &[usize],
    start: usize,
    acc: &Event,
    chosen: &mut Vec<usize>,
) -> Option<(Vec<usize>, u128, u128)> {
    for (pos, &j) in candidates.iter().enumerate().skip(start) {
        let mut next = acc.clone();
        next.intersect_with(&events[j]);
        let b = next.count() as u128;
        chosen.push(j);
        let hit = a.intersection_count(&next) as u128;
        if hit * total != a_count * b {
            return Some((chosen.clone(), hit, b));
        }
        // An empty intersection stays empty, and 0 = P(A_i) * 0.
        if b > 0 {
            if let Some(found) = dep_search(
                a,
                a_count,
                total,
                events,
                candidates,
                pos + 1,
                &next,
                chosen,
            ) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

/// Exact avoidance probability against the lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LllConclusion {
    /// `P(∩ A_i^c)`.
    pub avoidance: Rational,
    /// `∏ (1 - x_i)`.
    pub bound: Rational,
}

impl LllConclusion {
    pub fn holds(&self) -> bool {
        self.avoidance >= self.bound
    }
}

/// End-to-end check of the lemma on one system: both hypotheses are verified
/// first, then `P(∩ A_i^c)` is computed by enumeration.
pub fn verify_lll_conclusion(
    space: &SampleSpace,
    events: &[Event],
    g: &Graph,
    x: &WeightVector,
    limits: &Limits,
) -> Result<LllConclusion> {
    if let NdgVerdict::Violated(v) = verify_negative_dependency_graph(space, events, g, limits)? {
        return Err(Error::Hypothesis(format!(
            "not a negative dependency graph: event {} conditioned on {:?} has {} > {}",
            v.event,
            v.conditioned_on,
            rational::render(&v.conditional),
            rational::render(&v.unconditional)
        )));
    }
    let p = events
        .iter()
        .map(|e| space.probability(e))
        .collect::<Result<Vec<_>>>()?;
    let bound = match check_lll_condition(&p, g, x)? {
        LllCondition::Holds { bound } => bound,
        LllCondition::Violated { index } => {
            return Err(Error::Hypothesis(format!(
                "local lemma condition fails at event {index}"
            )))
        }
    };
    let avoid = events.iter().fold(space.full(), |mut acc, e| {
        acc.intersect_with(&e.complement());
        acc
    });
    Ok(LllConclusion {
        avoidance: space.probability(&avoid)?,
        bound,
    })
}
