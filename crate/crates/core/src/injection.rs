//! Matchings `(S, T, f)` between parts of `[m]` and `[n]`, the canonical events
//! they generate in `I([m], [n])`, and the conflict graph on a family of them.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, MatchingError, Result};
use crate::lll::Graph;
use crate::prob::{self, Event, SampleSpace};
use crate::rational::{self, Rational};

/// A bijection `f: S -> T` between a subset of the domain and a subset of
/// the codomain, stored sorted by domain point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates the triple `(S, T, f)`.
    pub fn new(
        domain: &[usize],
        codomain: &[usize],
        f: &[(usize, usize)],
    ) -> Result<Self, MatchingError> {
        if domain.len() != codomain.len() {
            return Err(MatchingError::SizeMismatch {
                domain: domain.len(),
                codomain: codomain.len(),
            });
        }
        let mut s = BTreeSet::new();
        for &u in domain {
            if !s.insert(u) {
                return Err(MatchingError::DuplicateDomainPoint(u));
            }
        }
        let mut t = BTreeSet::new();
        for &v in codomain {
            if !t.insert(v) {
                return Err(MatchingError::DuplicateCodomainPoint(v));
            }
        }
        let mut seen = BTreeSet::new();
        for &(u, _) in f {
            if !s.contains(&u) {
                return Err(MatchingError::OutsideDomain(u));
            }
            if !seen.insert(u) {
                return Err(MatchingError::DuplicateDomainPoint(u));
            }
        }
        if let Some(&u) = s.difference(&seen).next() {
            return Err(MatchingError::NotTotal(u));
        }
        let mut image = BTreeSet::new();
        for &(_, v) in f {
            if !image.insert(v) {
                return Err(MatchingError::NotInjective(v));
            }
        }
        if let Some(&v) = image.symmetric_difference(&t).next() {
            return Err(MatchingError::ImageMismatch(v));
        }
        let mut pairs = f.to_vec();
        pairs.sort_unstable();
        Ok(Matching { pairs })
    }

    /// Builds a matching from its graph, with `S` and `T` read off the pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, MatchingError> {
        let domain: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let mut codomain: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        codomain.sort_unstable();
        if let Some(w) = codomain.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatchingError::NotInjective(w[0]));
        }
        Matching::new(&domain, &codomain, pairs)
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    /// `|S|`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs `(u, f(u))` sorted by `u`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn image(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.1)
    }

    pub fn get(&self, u: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&u, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    /// True when `S ⊆ [m]` and `T ⊆ [n]`.
    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.pairs.iter().all(|&(u, v)| u < m && v < n)
    }

    pub(crate) fn max_domain_point(&self) -> Option<usize> {
        self.pairs.last().map(|p| p.0)
    }

    /// True when the injection `sigma` extends `f`.
    pub fn is_extended_by(&self, sigma: &[usize]) -> bool {
        self.pairs.iter().all(|&(u, v)| sigma.get(u) == Some(&v))
    }

    /// Two matchings conflict when they disagree on a shared domain point or
    /// on the preimage of a shared codomain point.
    pub fn conflicts(&self, other: &Matching) -> bool {
        merge_disagrees(&self.pairs, &other.pairs) || {
            let a = self.by_image();
            let b = other.by_image();
            merge_disagrees(&a, &b)
        }
    }

    fn by_image(&self) -> Vec<(usize, usize)> {
        let mut inv: Vec<(usize, usize)> = self.pairs.iter().map(|&(u, v)| (v, u)).collect();
        inv.sort_unstable();
        inv
    }

    /// The action `π_ρ(S, T, f) = (S, ρ(T), ρ ∘ f)` of a codomain permutation.
    pub fn apply_permutation(&self, rho: &[usize]) -> Result<Matching> {
        check_permutation(rho)?;
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for &(u, v) in &self.pairs {
            let w = *rho.get(v).ok_or_else(|| {
                Error::domain(format!(
                    "codomain point {v} outside the permutation's range {}",
                    rho.len()
                ))
            })?;
            pairs.push((u, w));
        }
        Ok(Matching { pairs })
    }
}

/// Walks two lists sorted by key and reports whether some shared key carries
/// different values.
fn merge_disagrees(a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a[i].1 != b[j].1 {
                    return true;
                }
                i += 1;
                j += 1;
            }
        }
    }
    false
}

pub(crate) fn check_permutation(rho: &[usize]) -> Result<()> {
    let mut seen = vec![false; rho.len()];
    for &v in rho {
        if v >= rho.len() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::domain("not a permutation"));
        }
    }
    Ok(())
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (u, v)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        f.write_str("}")
    }
}

/// The event `A_{S,T,f} = {σ : σ(u) = f(u) for all u ∈ S}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalEvent {
    matching: Matching,
    realized: Event,
}

impl CanonicalEvent {
    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn event(&self) -> &Event {
        &self.realized
    }

    pub fn into_event(self) -> Event {
        self.realized
    }
}

pub fn canonical_event(space: &SampleSpace, matching: &Matching) -> Result<CanonicalEvent> {
    let (m, n) = (space.domain_size(), space.codomain_size());
    if !matching.fits(m, n) {
        return Err(Error::domain(format!(
            "matching {matching} does not fit I([{m}], [{n}])"
        )));
    }
    let realized =
        space.event_where(|sigma| matching.pairs.iter().all(|&(u, v)| sigma[u] as usize == v));
    debug_assert_eq!(
        num_bigint::BigUint::from(realized.count()),
        prob::injection_count(m - matching.len(), n - matching.len())
    );
    Ok(CanonicalEvent {
        matching: matching.clone(),
        realized,
    })
}

/// Conflict graph: vertices are the matchings, edges join conflicting pairs.
pub fn conflict_graph(matchings: &[Matching]) -> Graph {
    let edges: Vec<(usize, usize)> = (0..matchings.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            ((i + 1)..matchings.len())
                .filter(move |&j| matchings[i].conflicts(&matchings[j]))
                .map(move |j| (i, j))
        })
        .collect();
    Graph::from_edges(matchings.len(), edges).expect("edges are in range and loop-free")
}

/// `P(A_{S,T,f})` for `|S| = r` in `I([m], [n])`:
/// `C(n-r, m-r) (m-r)! / (C(n,m) m!) = 1 / (n (n-1) ... (n-r+1))`.
pub fn canonical_event_probability(m: usize, n: usize, r: usize) -> Result<Rational> {
    if r > m {
        return Err(Error::domain(format!("r = {r} exceeds m = {m}")));
    }
    if m > n {
        return Err(Error::domain(format!("m = {m} exceeds n = {n}")));
    }
    let (m, n, r) = (m as u64, n as u64, r as u64);
    let favourable = rational::binomial(n - r, m - r) * rational::factorial(m - r);
    let total = rational::binomial(n, m) * rational::factorial(m);
    Ok(Rational::new(BigInt::from(favourable), BigInt::from(total)))
}
