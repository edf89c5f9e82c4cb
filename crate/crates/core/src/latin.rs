//! Latin transversals of square integer matrices.
//!
//! A permutation `π` is a Latin transversal of `A` when the entries
//! `a[i][π(i)]` are pairwise distinct. It fails exactly when it sends two rows
//! `i < i'` to columns `j != j'` with `a[i][j] = a[i'][j']`, so transversals
//! are the permutations avoiding one canonical event per such cell pair.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::injection::{self, Matching};
use crate::lll::{EInterval, TriState};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::domain(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        IntMatrix {
            n,
            entries: (0..n * n).map(|k| f(k / n, k % n)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.entries.chunks(self.n.max(1))
    }

    /// Largest number of cells sharing one symbol.
    pub fn max_multiplicity(&self) -> usize {
        let mut counts: HashMap<i64, usize> = HashMap::new();
        for &s in &self.entries {
            *counts.entry(s).or_default() += 1;
        }
        counts.into_values().max().unwrap_or(0)
    }
}

/// Decides `k <= (n - 1) / (4e)`, i.e. `4 k e <= n - 1`.
pub fn transversal_condition(n: usize, k: usize, e: &EInterval) -> TriState {
    let coeff = rational::integer(4 * k);
    let bound = rational::integer(BigInt::from(n) - 1);
    e.decide_le(&coeff, &bound)
}

/// One bad event per pair of equal-valued cells in distinct rows and columns.
#[derive(Debug, Clone)]
pub struct LatinEventFamily {
    pub matrix: IntMatrix,
    /// `((i, i'), (j, j'))` with `i < i'`, `j != j'`, `a[i][j] = a[i'][j']`,
    /// in lexicographic order.
    pub pairs: Vec<((usize, usize), (usize, usize))>,
    /// `i -> j, i' -> j'` for each pair.
    pub matchings: Vec<Matching>,
}

impl LatinEventFamily {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `1 / (n (n - 1))`, the probability of each event under a uniform
    /// random permutation.
    pub fn event_probability(&self) -> Result<Rational> {
        let n = self.matrix.n;
        injection::canonical_event_probability(n, n, 2.min(n))
    }

    /// `4 n k - 1`.
    pub fn degree_bound(&self) -> i64 {
        4 * self.matrix.n as i64 * self.matrix.max_multiplicity() as i64 - 1
    }
}

pub fn build_latin_events(a: &IntMatrix) -> LatinEventFamily {
    let n = a.n;
    let mut pairs = Vec::new();
    let mut matchings = Vec::new();
    for i in 0..n {
        for i2 in i + 1..n {
            for j in 0..n {
                for j2 in 0..n {
                    if j != j2 && a.get(i, j) == a.get(i2, j2) {
                        pairs.push(((i, i2), (j, j2)));
                        matchings.push(
                            Matching::from_pairs(&[(i, j), (i2, j2)])
                                .expect("distinct rows and columns"),
                        );
                    }
                }
            }
        }
    }
    LatinEventFamily {
        matrix: a.clone(),
        pairs,
        matchings,
    }
}

/// True iff the entries `a[i][pi(i)]` are pairwise distinct.
pub fn is_latin_transversal(a: &IntMatrix, pi: &[usize]) -> Result<bool> {
    if pi.len() != a.n {
        return Err(Error::domain(format!(
            "permutation has {} entries for a {}x{} matrix",
            pi.len(),
            a.n,
            a.n
        )));
    }
    injection::check_permutation(pi)?;
    let mut seen = std::collections::HashSet::with_capacity(a.n);
    Ok(pi
        .iter()
        .enumerate()
        .all(|(i, &j)| seen.insert(a.get(i, j))))
}
