//! Uniform probability over the enumerated space of injections `[m] -> [n]`.
//!
//! Every outcome carries mass `1 / |outcomes|`, so probabilities are ratios of
//! counts and all arithmetic stays exact. Events are dense bitsets over outcome
//! indices, tagged with the id of the space they belong to.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

static NEXT_SPACE_ID: AtomicU64 = AtomicU64::new(1);

pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;
pub const DEFAULT_SUBSET_CAP: usize = 20;
pub const DEFAULT_GRAPH_CAP: usize = 15;

/// Runtime size limits for the exponential parts of the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest sample space that may be enumerated.
    pub enumeration_cap: u64,
    /// Largest event list accepted by the mutual independence test.
    pub subset_cap: usize,
    /// Largest event family accepted by the dependency graph verifiers.
    pub graph_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            subset_cap: DEFAULT_SUBSET_CAP,
            graph_cap: DEFAULT_GRAPH_CAP,
        }
    }
}

/// Number of injections from an `m`-set into an `n`-set, `C(n,m) m!`.
pub fn injection_count(m: usize, n: usize) -> BigUint {
    rational::falling_factorial(n as u64, m as u64)
}

/// Fails with a size-limit error when `I(m, n)` has more than `cap` outcomes.
pub fn check_enumeration_cap(m: usize, n: usize, cap: u64) -> Result<u64> {
    let count = injection_count(m, n);
    match count.to_u64() {
        Some(c) if c <= cap => Ok(c),
        _ => Err(Error::SizeLimit {
            what: "enumerating the injection space",
            required: format!("{count} outcomes"),
            cap,
        }),
    }
}

/// The finite uniform space of all injections `[m] -> [n]`, in lexicographic
/// order of their image arrays.
#[derive(Debug)]
pub struct SampleSpace {
    id: u64,
    m: usize,
    n: usize,
    // Flat `len * m` array of images.
    images: Vec<u16>,
}

impl SampleSpace {
    pub fn enumerate(m: usize, n: usize) -> Result<Self> {
        Self::enumerate_with_cap(m, n, DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_with_cap(m: usize, n: usize, cap: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("domain size must be at least 1"));
        }
        if m > n {
            return Err(Error::domain(format!(
                "no injections from a {m}-set into a {n}-set"
            )));
        }
        if n > u16::MAX as usize + 1 {
            return Err(Error::domain(format!("codomain size {n} is too large")));
        }
        let count = check_enumeration_cap(m, n, cap)? as usize;

        let mut images = Vec::with_capacity(count * m);
        let mut current = Vec::with_capacity(m);
        let mut used = vec![false; n];
        fill(&mut images, &mut current, &mut used, m, n);
        debug_assert_eq!(images.len(), count * m);

        Ok(SampleSpace {
            id: NEXT_SPACE_ID.fetch_add(1, Ordering::Relaxed),
            m,
            n,
            images,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn domain_size(&self) -> usize {
        self.m
    }

    pub fn codomain_size(&self) -> usize {
        self.n
    }

    /// Number of outcomes.
    pub fn len(&self) -> usize {
        self.images.len() / self.m
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn outcome(&self, index: usize) -> &[u16] {
        &self.images[index * self.m..(index + 1) * self.m]
    }

    pub fn outcomes(&self) -> impl ExactSizeIterator<Item = &[u16]> + '_ {
        self.images.chunks_exact(self.m)
    }

    /// Position of an injection in the enumeration order.
    pub fn index_of(&self, sigma: &[usize]) -> Option<usize> {
        if sigma.len() != self.m {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            let ord = self
                .outcome(mid)
                .iter()
                .map(|&v| v as usize)
                .cmp(sigma.iter().copied());
            match ord {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn full(&self) -> Event {
        let mut e = self.empty();
        for i in 0..self.len() {
            e.insert(i);
        }
        e
    }

    pub fn empty(&self) -> Event {
        Event::empty(self.id, self.len())
    }

    /// The event of all outcomes satisfying `pred`.
    pub fn event_where(&self, mut pred: impl FnMut(&[u16]) -> bool) -> Event {
        let mut e = self.empty();
        for (i, sigma) in self.outcomes().enumerate() {
            if pred(sigma) {
                e.insert(i);
            }
        }
        e
    }

    /// The event built from explicit outcome indices.
    pub fn event_from_indices(&self, indices: impl IntoIterator<Item = usize>) -> Result<Event> {
        let mut e = self.empty();
        for i in indices {
            if i >= self.len() {
                return Err(Error::domain(format!(
                    "outcome index {i} out of range for a space of {} outcomes",
                    self.len()
                )));
            }
            e.insert(i);
        }
        Ok(e)
    }

    pub(crate) fn check_owns(&self, event: &Event) -> Result<()> {
        if event.space != self.id {
            return Err(Error::domain("event belongs to a different sample space"));
        }
        Ok(())
    }

    pub fn probability(&self, event: &Event) -> Result<Rational> {
        self.check_owns(event)?;
        Ok(rational::from_counts(
            event.count() as u128,
            self.len() as u128,
        ))
    }

    /// `P(a | b) = P(a ∩ b) / P(b)`.
    pub fn conditional(&self, a: &Event, b: &Event) -> Result<Rational> {
        self.check_owns(a)?;
        self.check_owns(b)?;
        let nb = b.count();
        if nb == 0 {
            return Err(Error::NullConditioning);
        }
        Ok(rational::from_counts(
            a.intersection_count(b) as u128,
            nb as u128,
        ))
    }

    /// True iff every nonempty sub-collection factorises:
    /// `P(∩_{j∈S} A_j) = ∏_{j∈S} P(A_j)`.
    pub fn is_mutually_independent(&self, events: &[Event], limits: &Limits) -> Result<bool> {
        if events.len() > limits.subset_cap {
            return Err(Error::SizeLimit {
                what: "testing mutual independence",
                required: format!("{} events", events.len()),
                cap: limits.subset_cap as u64,
            });
        }
        for e in events {
            self.check_owns(e)?;
        }
        let total = BigUint::from(self.len());
        let counts: Vec<BigUint> = events.iter().map(|e| BigUint::from(e.count())).collect();
        // |∩ A_j| * |Ω|^{|S|-1} = ∏ |A_j|, checked by depth-first search over
        // subsets with the running intersection carried down.
        fn dfs(
            events: &[Event],
            counts: &[BigUint],
            total: &BigUint,
            start: usize,
            acc: &Event,
            depth: u32,
            product: &BigUint,
        ) -> bool {
            for j in start..events.len() {
                let inter = acc.intersection_unchecked(&events[j]);
                let prod = product * &counts[j];
                let lhs = BigUint::from(inter.count()) * total.pow(depth);
                if lhs != prod {
                    return false;
                }
                if !dfs(events, counts, total, j + 1, &inter, depth + 1, &prod) {
                    return false;
                }
            }
            true
        }
        let full = self.full();
        Ok(dfs(
            events,
            &counts,
            &total,
            0,
            &full,
            0,
            &BigUint::from(1u32),
        ))
    }
}

fn fill(out: &mut Vec<u16>, current: &mut Vec<u16>, used: &mut [bool], m: usize, n: usize) {
    if current.len() == m {
        out.extend_from_slice(current);
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            current.push(v as u16);
            fill(out, current, used, m, n);
            current.pop();
            used[v] = false;
        }
    }
}

/// A set of outcome indices of one [`SampleSpace`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Event {
    space: u64,
    len: usize,
    words: Vec<u64>,
}

impl Event {
    fn empty(space: u64, len: usize) -> Self {
        Event {
            space,
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn space_id(&self) -> u64 {
        self.space
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    fn same_space(&self, other: &Event) -> Result<()> {
        if self.space != other.space {
            return Err(Error::domain("events belong to different sample spaces"));
        }
        Ok(())
    }

    pub fn union(&self, other: &Event) -> Result<Event> {
        self.same_space(other)?;
        Ok(self.zip(other, |a, b| a | b))
    }

    pub fn intersection(&self, other: &Event) -> Result<Event> {
        self.same_space(other)?;
        Ok(self.intersection_unchecked(other))
    }

    pub fn difference(&self, other: &Event) -> Result<Event> {
        self.same_space(other)?;
        Ok(self.zip(other, |a, b| a & !b))
    }

    pub fn complement(&self) -> Event {
        let mut out = Event {
            space: self.space,
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.mask_tail();
        out
    }

    pub fn is_disjoint(&self, other: &Event) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.intersection_count(other) == 0)
    }

    pub(crate) fn intersection_unchecked(&self, other: &Event) -> Event {
        self.zip(other, |a, b| a & b)
    }

    pub(crate) fn intersect_with(&mut self, other: &Event) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub(crate) fn intersection_count(&self, other: &Event) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn zip(&self, other: &Event, op: impl Fn(u64, u64) -> u64) -> Event {
        Event {
            space: self.space,
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    fn mask_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}
