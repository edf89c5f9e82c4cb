//! r-uniform hypergraphs and packing problems.
//!
//! Packing `H1` and `H2` into `K_n^(r)` is phrased as avoiding canonical
//! events in `I(V(H1), [n])`: with `H2` fixed on `[n]`, an injection fails
//! exactly when it maps some edge `F1` of `H1` onto some edge `F2` of `H2`,
//! i.e. when it extends one of the `r!` bijections `F1 -> F2`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::injection::{canonical_event, Matching};
use crate::lll::{EInterval, TriState};
use crate::prob::{Event, SampleSpace};
use crate::rational::{self, Rational};

pub const DEFAULT_MAX_PACKING_EVENTS: usize = 1_000_000;

/// Largest piece size accepted by the brute-force isomorphism check.
pub const MAX_PIECE_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertex_count: usize,
    r: usize,
    // Each edge sorted ascending; edge order is the input order.
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r == 0 {
            return Err(Error::domain("edge size r must be at least 1"));
        }
        let mut seen = BTreeSet::new();
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut e = edge;
            e.sort_unstable();
            if e.len() != r {
                return Err(Error::domain(format!(
                    "edge {e:?} has {} vertices, expected {r}",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::domain(format!("edge {e:?} repeats a vertex")));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::domain(format!(
                    "vertex {v} out of range for {vertex_count} vertices"
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::domain(format!("duplicate edge {e:?}")));
            }
            sorted_edges.push(e);
        }
        Ok(Hypergraph {
            vertex_count,
            r,
            edges: sorted_edges,
        })
    }

    pub fn empty(vertex_count: usize, r: usize) -> Result<Self> {
        Self::new(vertex_count, r, Vec::new())
    }

    /// `K_n^(r)`, edges in lexicographic order.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, r_subsets(n, r))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.contains(&e)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    /// Number of other edges sharing a vertex with edge `index`.
    pub fn edge_intersection_degree(&self, index: usize) -> usize {
        let f = &self.edges[index];
        self.edges
            .iter()
            .enumerate()
            .filter(|&(j, e)| j != index && e.iter().any(|v| f.contains(v)))
            .count()
    }

    /// Maximum edge intersection degree; 0 for an edgeless hypergraph.
    pub fn max_intersection_degree(&self) -> usize {
        (0..self.edges.len())
            .map(|i| self.edge_intersection_degree(i))
            .max()
            .unwrap_or(0)
    }

    /// All r-subsets of the vertex set that are not edges.
    pub fn complement(&self) -> Hypergraph {
        let present: BTreeSet<&Vec<usize>> = self.edges.iter().collect();
        let edges = r_subsets(self.vertex_count, self.r)
            .into_iter()
            .filter(|e| !present.contains(e))
            .collect();
        Hypergraph {
            vertex_count: self.vertex_count,
            r: self.r,
            edges,
        }
    }

    /// `k` vertex-disjoint copies; copy `c` uses vertices `c*s .. (c+1)*s`.
    pub fn disjoint_copies(&self, k: usize) -> Hypergraph {
        let s = self.vertex_count;
        let edges = (0..k)
            .flat_map(|c| {
                self.edges
                    .iter()
                    .map(move |e| e.iter().map(|v| v + c * s).collect())
            })
            .collect();
        Hypergraph {
            vertex_count: k * s,
            r: self.r,
            edges,
        }
    }
}

/// All r-subsets of `0..n` in lexicographic order.
pub fn r_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            go(n, r, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        go(n, r, 0, &mut Vec::with_capacity(r), &mut out);
    }
    out
}

/// Permutations of `0..r` in lexicographic order.
pub(crate) fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in 0..r {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(r, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(r, &mut vec![false; r], &mut Vec::with_capacity(r), &mut out);
    out
}

fn check_packing_shapes(h1: &Hypergraph, h2: &Hypergraph, n: usize) -> Result<()> {
    if h1.r != h2.r {
        return Err(Error::domain(format!(
            "uniformity mismatch: H1 is {}-uniform, H2 is {}-uniform",
            h1.r, h2.r
        )));
    }
    if h1.vertex_count > n {
        return Err(Error::domain(format!(
            "H1 has {} vertices, more than n = {n}",
            h1.vertex_count
        )));
    }
    if h2.vertex_count > n {
        return Err(Error::domain(format!(
            "H2 has {} vertices, more than n = {n}",
            h2.vertex_count
        )));
    }
    Ok(())
}

/// Packing parameters of two hypergraphs and the verdict on
/// `(d1+1) m2 + (d2+1) m1 < C(n,r) / e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingConditionReport {
    pub m1: usize,
    pub m2: usize,
    pub d1: usize,
    pub d2: usize,
    pub lhs: BigUint,
    pub binom: BigUint,
    pub verdict: TriState,
}

pub fn packing_condition(
    h1: &Hypergraph,
    h2: &Hypergraph,
    n: usize,
    e: &EInterval,
) -> Result<PackingConditionReport> {
    check_packing_shapes(h1, h2, n)?;
    let (m1, m2) = (h1.edge_count(), h2.edge_count());
    let (d1, d2) = (h1.max_intersection_degree(), h2.max_intersection_degree());
    let lhs = BigUint::from((d1 + 1) * m2 + (d2 + 1) * m1);
    let binom = rational::binomial(n as u64, h1.r as u64);
    let verdict = e.decide_lt(&rational::big(lhs.clone()), &rational::big(binom.clone()));
    Ok(PackingConditionReport {
        m1,
        m2,
        d1,
        d2,
        lhs,
        binom,
        verdict,
    })
}

/// The event family for packing `H1` and `H2` into `K_n^(r)`.
#[derive(Debug, Clone)]
pub struct PackingInstance {
    pub h1: Hypergraph,
    pub h2: Hypergraph,
    pub n: usize,
    pub m1: usize,
    pub m2: usize,
    pub d1: usize,
    pub d2: usize,
    /// One matching per `(F1, F2, φ)`, ordered by `F1`, then `F2`, then `φ`
    /// in lexicographic order.
    pub event_matchings: Vec<Matching>,
}

impl PackingInstance {
    pub fn r(&self) -> usize {
        self.h1.r
    }

    /// Size of the ambient space `I(V(H1), [n])`.
    pub fn domain_size(&self) -> usize {
        self.h1.vertex_count
    }

    /// `1 / (r! C(n, r))`, the probability of every event in the family.
    pub fn event_probability(&self) -> Rational {
        let r = self.r() as u64;
        let denom = rational::factorial(r) * rational::binomial(self.n as u64, r);
        Rational::new(BigInt::one(), BigInt::from(denom))
    }

    /// `r! [(d1+1) m2 + (d2+1) m1] - 1`, the bound on the conflict degree.
    pub fn degree_bound(&self) -> BigInt {
        let inner = (self.d1 + 1) * self.m2 + (self.d2 + 1) * self.m1;
        BigInt::from(rational::factorial(self.r() as u64)) * BigInt::from(inner) - 1
    }

    /// The enumerated space `I(V(H1), [n])`, when it fits under `cap`.
    pub fn sample_space(&self, cap: u64) -> Result<SampleSpace> {
        SampleSpace::enumerate_with_cap(self.domain_size(), self.n, cap)
    }

    pub fn canonical_events(&self, space: &SampleSpace) -> Result<Vec<Event>> {
        self.event_matchings
            .iter()
            .map(|m| canonical_event(space, m).map(|c| c.into_event()))
            .collect()
    }
}

pub fn build_packing_instance(
    h1: &Hypergraph,
    h2: &Hypergraph,
    n: usize,
    max_events: usize,
) -> Result<PackingInstance> {
    check_packing_shapes(h1, h2, n)?;
    let r = h1.r;
    let count = rational::factorial(r as u64)
        * BigUint::from(h1.edge_count())
        * BigUint::from(h2.edge_count());
    if count.to_usize().is_none_or(|c| c > max_events) {
        return Err(Error::SizeLimit {
            what: "building the packing event family",
            required: format!("{count} events"),
            cap: max_events as u64,
        });
    }
    let perms = permutations(r);
    let mut event_matchings = Vec::new();
    for f1 in &h1.edges {
        for f2 in &h2.edges {
            for perm in &perms {
                let pairs: Vec<(usize, usize)> =
                    f1.iter().zip(perm).map(|(&u, &k)| (u, f2[k])).collect();
                event_matchings.push(Matching::from_pairs(&pairs)?);
            }
        }
    }
    Ok(PackingInstance {
        h1: h1.clone(),
        h2: h2.clone(),
        n,
        m1: h1.edge_count(),
        m2: h2.edge_count(),
        d1: h1.max_intersection_degree(),
        d2: h2.max_intersection_degree(),
        event_matchings,
    })
}

/// True iff `sigma` is an injection `V(H1) -> [n]` under which no edge of `H1`
/// lands on an edge of `H2`.
pub fn verify_packing(h1: &Hypergraph, h2: &Hypergraph, n: usize, sigma: &[usize]) -> Result<bool> {
    if sigma.len() != h1.vertex_count {
        return Err(Error::domain(format!(
            "embedding has {} entries for {} vertices",
            sigma.len(),
            h1.vertex_count
        )));
    }
    let mut seen = vec![false; n];
    for &v in sigma {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::domain("embedding is not an injection into [n]"));
        }
    }
    let targets: BTreeSet<&Vec<usize>> = h2.edges.iter().collect();
    Ok(h1.edges.iter().all(|e| {
        let mut image: Vec<usize> = e.iter().map(|&v| sigma[v]).collect();
        image.sort_unstable();
        !targets.contains(&image)
    }))
}

/// `H1 = (n/s)` disjoint copies of `G`, `H2` = complement of `H`, both on `[n]`.
#[derive(Debug, Clone)]
pub struct PerfectPackingReduction {
    pub h1: Hypergraph,
    pub h2: Hypergraph,
    pub n: usize,
    pub copies: usize,
    pub piece_size: usize,
}

impl PerfectPackingReduction {
    /// Vertex sets of the copies of `G` under a packing embedding, each sorted.
    pub fn partition(&self, sigma: &[usize]) -> Vec<Vec<usize>> {
        let s = self.piece_size;
        (0..self.copies)
            .map(|c| {
                let mut part: Vec<usize> = sigma[c * s..(c + 1) * s].to_vec();
                part.sort_unstable();
                part
            })
            .collect()
    }
}

pub fn perfect_packing_reduction(
    g: &Hypergraph,
    h: &Hypergraph,
) -> Result<PerfectPackingReduction> {
    if g.r != h.r {
        return Err(Error::domain(format!(
            "uniformity mismatch: G is {}-uniform, H is {}-uniform",
            g.r, h.r
        )));
    }
    let (s, n) = (g.vertex_count, h.vertex_count);
    if s == 0 || n % s != 0 {
        return Err(Error::domain(format!(
            "|V(G)| = {s} does not divide |V(H)| = {n}"
        )));
    }
    let copies = n / s;
    Ok(PerfectPackingReduction {
        h1: g.disjoint_copies(copies),
        h2: h.complement(),
        n,
        copies,
        piece_size: s,
    })
}

/// Parameters and verdict for `x < 1 / (e (d + 1 + r² m / s))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectPackingReport {
    pub s: usize,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub r: usize,
    pub min_degree: usize,
    pub x: Rational,
    /// `d + 1 + r² m / s`.
    pub factor: Rational,
    /// `1 / (e.upper * factor)`, a lower bound on the threshold.
    pub threshold_lower: Rational,
    /// `1 / (e.lower * factor)`, an upper bound on the threshold.
    pub threshold_upper: Rational,
    pub verdict: TriState,
}

/// Smallest `x` allowed by the degree hypothesis:
/// `1 - minDegree(H) / C(n-1, r-1)`, clamped at 0.
pub fn minimal_x(h: &Hypergraph) -> Result<Rational> {
    let (n, r) = (h.vertex_count, h.r);
    if r > n {
        return Err(Error::domain(format!("r = {r} exceeds |V(H)| = {n}")));
    }
    let full = rational::big(rational::binomial(n as u64 - 1, r as u64 - 1));
    let deg = rational::integer(h.min_degree());
    let x = Rational::one() - deg / full;
    Ok(if x < Rational::zero() {
        Rational::zero()
    } else {
        x
    })
}

/// Evaluates the perfect-packing condition with the tightest `x`, or with an
/// explicit `x` no smaller than it.
pub fn perfect_packing_condition(
    g: &Hypergraph,
    h: &Hypergraph,
    x: Option<Rational>,
    e: &EInterval,
) -> Result<PerfectPackingReport> {
    let reduction = perfect_packing_reduction(g, h)?;
    let tight = minimal_x(h)?;
    let x = match x {
        None => tight,
        Some(x) if x >= tight => x,
        Some(x) => {
            return Err(Error::domain(format!(
                "x = {} is below the minimum {} permitted by the degrees of H",
                rational::render(&x),
                rational::render(&tight)
            )))
        }
    };
    let (s, m, d, r) = (
        reduction.piece_size,
        g.edge_count(),
        g.max_intersection_degree(),
        g.r,
    );
    let factor = rational::integer(d + 1) + Rational::new(BigInt::from(r * r * m), BigInt::from(s));
    let verdict = e.decide_lt(&(&x * &factor), &Rational::one());
    let threshold_lower = Rational::one() / (e.upper() * &factor);
    let threshold_upper = Rational::one() / (e.lower() * &factor);
    Ok(PerfectPackingReport {
        s,
        n: reduction.n,
        m,
        d,
        r,
        min_degree: h.min_degree(),
        x,
        factor,
        threshold_lower,
        threshold_upper,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Criterion {
    Evaluated(TriState),
    NotApplicable(String),
}

impl Criterion {
    pub fn render(&self) -> String {
        match self {
            Criterion::Evaluated(t) => t.to_string(),
            Criterion::NotApplicable(_) => "not-applicable".to_string(),
        }
    }
}

/// Minimum-degree criteria for perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCriteria {
    /// `minDeg >= (1 - 1/(e(1+r))) C(n-1, r-1)`, requires `r | n`.
    pub hypergraph_matching: Criterion,
    /// `minDeg >= (3e-1)(n-1)/(3e)`, requires `r = 2` and `n` even.
    pub graph_matching: Criterion,
}

pub fn perfect_matching_criteria(h: &Hypergraph, e: &EInterval) -> MatchingCriteria {
    let (n, r) = (h.vertex_count, h.r);
    let delta = h.min_degree();

    let hypergraph_matching = if n == 0 || r > n || n % r != 0 {
        Criterion::NotApplicable(format!("r = {r} does not divide n = {n}"))
    } else {
        // (C - δ)(1 + r) e <= C
        let full = rational::big(rational::binomial(n as u64 - 1, r as u64 - 1));
        let coeff = (&full - rational::integer(delta)) * rational::integer(1 + r);
        Criterion::Evaluated(e.decide_le(&coeff, &full))
    };

    let graph_matching = if r != 2 {
        Criterion::NotApplicable(format!("H is {r}-uniform, not a graph"))
    } else if n == 0 || n % 2 != 0 {
        Criterion::NotApplicable(format!("n = {n} is odd"))
    } else {
        // (n - 1 - δ) 3e <= n - 1
        let bound = rational::integer(n - 1);
        let coeff = (&bound - rational::integer(delta)) * rational::integer(3);
        Criterion::Evaluated(e.decide_le(&coeff, &bound))
    };

    MatchingCriteria {
        hypergraph_matching,
        graph_matching,
    }
}

/// Searches for a bijection `V(G) -> piece` sending every edge of `G` to an
/// edge of `host`. Pieces larger than [`MAX_PIECE_VERTICES`] are refused.
pub fn find_piece_isomorphism(
    g: &Hypergraph,
    host: &Hypergraph,
    piece: &[usize],
) -> Result<Option<Vec<usize>>> {
    if piece.len() != g.vertex_count {
        return Ok(None);
    }
    if piece.len() > MAX_PIECE_VERTICES {
        return Err(Error::SizeLimit {
            what: "brute-force isomorphism search",
            required: format!("{} vertices", piece.len()),
            cap: MAX_PIECE_VERTICES as u64,
        });
    }
    let host_edges: BTreeSet<&Vec<usize>> = host.edges.iter().collect();
    for perm in permutations(piece.len()) {
        let phi: Vec<usize> = perm.iter().map(|&k| piece[k]).collect();
        let ok = g.edges.iter().all(|e| {
            let mut image: Vec<usize> = e.iter().map(|&v| phi[v]).collect();
            image.sort_unstable();
            host_edges.contains(&image)
        });
        if ok {
            return Ok(Some(phi));
        }
    }
    Ok(None)
}

/// True iff `parts` partition `V(host)` into vertex sets each carrying a copy
/// of `g` made of host edges.
pub fn validate_perfect_packing(
    g: &Hypergraph,
    host: &Hypergraph,
    parts: &[Vec<usize>],
) -> Result<bool> {
    let mut covered = vec![false; host.vertex_count];
    for part in parts {
        for &v in part {
            if v >= host.vertex_count || std::mem::replace(&mut covered[v], true) {
                return Ok(false);
            }
        }
    }
    if covered.iter().any(|c| !c) {
        return Ok(false);
    }
    for part in parts {
        if find_piece_isomorphism(g, host, part)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn hg(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(Hypergraph::new(3, 2, vec![vec![0, 1, 2]]).is_err());
        assert!(Hypergraph::new(3, 2, vec![vec![0, 0]]).is_err());
        assert!(Hypergraph::new(3, 2, vec![vec![0, 3]]).is_err());
        assert!(Hypergraph::new(3, 2, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::new(3, 0, vec![]).is_err());
    }

    #[test]
    fn degrees() {
        let h = hg(5, 2, &[&[0, 1], &[1, 2], &[3, 4]]);
        assert_eq!(h.degree(1), 2);
        assert_eq!(h.min_degree(), 1);
        assert_eq!(h.edge_intersection_degree(0), 1);
        assert_eq!(h.edge_intersection_degree(2), 0);
        assert_eq!(h.max_intersection_degree(), 1);
        assert_eq!(Hypergraph::complete(5, 3).unwrap().edge_count(), 10);
    }

    #[test]
    fn packing_condition_examples() {
        let e = EInterval::default();
        let single = hg(2, 2, &[&[0, 1]]);
        let rep = packing_condition(&single, &single, 8, &e).unwrap();
        assert_eq!((rep.m1, rep.m2, rep.d1, rep.d2), (1, 1, 0, 0));
        assert_eq!(rep.lhs, BigUint::from(2u32));
        assert_eq!(rep.verdict, TriState::Holds);
        assert_eq!(
            packing_condition(&single, &single, 3, &e).unwrap().verdict,
            TriState::Fails
        );
        let empty = Hypergraph::empty(2, 2).unwrap();
        assert_eq!(
            packing_condition(&empty, &empty, 2, &e).unwrap().verdict,
            TriState::Holds
        );
        let triple = hg(3, 3, &[&[0, 1, 2]]);
        assert!(packing_condition(&single, &triple, 8, &e).is_err());
    }

    #[test]
    fn instance_sizes() {
        let single = hg(2, 2, &[&[0, 1]]);
        let inst = build_packing_instance(&single, &single, 8, DEFAULT_MAX_PACKING_EVENTS).unwrap();
        assert_eq!(
            inst.event_matchings,
            vec![
                Matching::from_pairs(&[(0, 0), (1, 1)]).unwrap(),
                Matching::from_pairs(&[(0, 1), (1, 0)]).unwrap(),
            ]
        );
        let h1 = hg(4, 2, &[&[0, 1], &[2, 3]]);
        let h2 = hg(5, 2, &[&[0, 1], &[1, 2], &[3, 4]]);
        let inst = build_packing_instance(&h1, &h2, 6, DEFAULT_MAX_PACKING_EVENTS).unwrap();
        assert_eq!(inst.event_matchings.len(), 12);
        assert_eq!(inst.event_probability(), ratio(1, 30));
        assert!(matches!(
            build_packing_instance(&h1, &h2, 6, 11),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn reduction_examples() {
        let edge = hg(2, 2, &[&[0, 1]]);
        let k4_minus = hg(4, 2, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3]]);
        let red = perfect_packing_reduction(&edge, &k4_minus).unwrap();
        assert_eq!(red.h2.edges(), &[vec![2, 3]]);
        assert_eq!(red.h1.edges(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(red.h1.edge_count(), red.copies * edge.edge_count());

        let k5 = Hypergraph::complete(5, 3).unwrap();
        let red = perfect_packing_reduction(&hg(5, 3, &[&[0, 1, 2]]), &k5).unwrap();
        assert_eq!(red.h2.edge_count(), 0);

        let k5_2 = Hypergraph::complete(5, 2).unwrap();
        assert!(perfect_packing_reduction(&edge, &k5_2).is_err());
    }

    #[test]
    fn perfect_packing_condition_examples() {
        let e = EInterval::default();
        let edge = hg(2, 2, &[&[0, 1]]);
        let k6 = Hypergraph::complete(6, 2).unwrap();
        let rep = perfect_packing_condition(&edge, &k6, None, &e).unwrap();
        assert_eq!(rep.x, ratio(0, 1));
        assert_eq!(rep.verdict, TriState::Holds);

        // Isolated vertex: x = 1.
        let h = hg(4, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        let rep = perfect_packing_condition(&edge, &h, None, &e).unwrap();
        assert_eq!(rep.x, ratio(1, 1));
        assert_eq!(rep.verdict, TriState::Fails);

        // K_n minus a perfect matching has minimum degree n - 2, so x = 1/(n-1)
        // and the condition reads 3e < n - 1.
        for n in [8usize, 10, 12] {
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if !(a % 2 == 0 && b == a + 1) {
                        edges.push(vec![a, b]);
                    }
                }
            }
            let h = Hypergraph::new(n, 2, edges).unwrap();
            let rep = perfect_packing_condition(&edge, &h, None, &e).unwrap();
            assert_eq!(rep.x, ratio(1, n as i64 - 1));
            assert_eq!(rep.factor, ratio(3, 1));
            let expected = if n >= 10 {
                TriState::Holds
            } else {
                TriState::Fails
            };
            assert_eq!(rep.verdict, expected, "n = {n}");
        }
        assert!(perfect_packing_condition(&edge, &k6, Some(ratio(-1, 2)), &e).is_err());
    }

    #[test]
    fn matching_criteria_examples() {
        let e = EInterval::default();
        let k6 = Hypergraph::complete(6, 2).unwrap();
        let rep = perfect_matching_criteria(&k6, &e);
        assert_eq!(rep.graph_matching, Criterion::Evaluated(TriState::Holds));
        assert_eq!(
            rep.hypergraph_matching,
            Criterion::Evaluated(TriState::Holds)
        );

        let c6 = hg(
            6,
            2,
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]],
        );
        let rep = perfect_matching_criteria(&c6, &e);
        assert_eq!(rep.graph_matching, Criterion::Evaluated(TriState::Fails));

        let k6_3 = Hypergraph::complete(6, 3).unwrap();
        let rep = perfect_matching_criteria(&k6_3, &e);
        assert_eq!(
            rep.hypergraph_matching,
            Criterion::Evaluated(TriState::Holds)
        );
        assert!(matches!(rep.graph_matching, Criterion::NotApplicable(_)));

        let k3 = Hypergraph::complete(3, 2).unwrap();
        let rep = perfect_matching_criteria(&k3, &e);
        assert!(matches!(rep.graph_matching, Criterion::NotApplicable(_)));
        assert!(matches!(
            rep.hypergraph_matching,
            Criterion::NotApplicable(_)
        ));
    }

    #[test]
    fn verify_packing_examples() {
        let h1 = hg(2, 2, &[&[0, 1]]);
        let empty = Hypergraph::empty(4, 2).unwrap();
        assert!(verify_packing(&h1, &empty, 4, &[2, 3]).unwrap());
        let h2 = hg(4, 2, &[&[2, 3]]);
        assert!(!verify_packing(&h1, &h2, 4, &[3, 2]).unwrap());
        assert!(verify_packing(&h1, &h2, 4, &[1, 2]).unwrap());
        assert!(verify_packing(&h1, &h2, 4, &[1, 1]).is_err());
        assert!(verify_packing(&h1, &h2, 4, &[1, 4]).is_err());
    }

    #[test]
    fn piece_validation() {
        let edge = hg(2, 2, &[&[0, 1]]);
        let k4 = Hypergraph::complete(4, 2).unwrap();
        assert!(validate_perfect_packing(&edge, &k4, &[vec![0, 1], vec![2, 3]]).unwrap());
        assert!(!validate_perfect_packing(&edge, &k4, &[vec![0, 1], vec![1, 3]]).unwrap());
        assert!(!validate_perfect_packing(&edge, &k4, &[vec![0, 1]]).unwrap());
        let path = hg(4, 2, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert!(!validate_perfect_packing(&edge, &path, &[vec![0, 2], vec![1, 3]]).unwrap());
        assert!(validate_perfect_packing(&edge, &path, &[vec![0, 1], vec![2, 3]]).unwrap());
    }

    #[test]
    fn r_subsets_and_permutations() {
        assert_eq!(r_subsets(4, 2).len(), 6);
        assert_eq!(r_subsets(2, 3).len(), 0);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }
}
