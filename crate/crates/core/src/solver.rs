//! Search for an injection `[m] -> [n]` that extends none of a list of
//! forbidden matchings.
//!
//! Two strategies are provided. [`solve_exhaustive`] walks injections in
//! lexicographic order and returns the first avoiding one; it is exact and
//! serves as the oracle. [`solve_randomized`] starts from a uniformly random
//! injection and repeatedly resamples the positions of a violated matching,
//! restarting after a step budget. Neither reports anything it has not
//! re-checked through [`verify_avoidance`].
//!
//! # Randomness
//!
//! All randomness comes from SplitMix64 (Steele, Lea and Flood, 2014) as
//! implemented by `rand_xoshiro`. Restart `k` of a run with seed `s` uses the
//! generator seeded with the first SplitMix64 output for the seed
//! `s ^ (k * 0xD1B54A32D192ED03)`, so restarts are independent of each other
//! and of the order in which they execute.

use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::injection::Matching;
use crate::prob;

pub const DEFAULT_MAX_RESTARTS: u64 = 100;
pub const DEFAULT_MAX_STEPS: u64 = 100_000;

/// Find an injection `[m] -> [n]` avoiding every forbidden matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceProblem {
    m: usize,
    n: usize,
    forbidden: Vec<Matching>,
}

impl AvoidanceProblem {
    pub fn new(m: usize, n: usize, forbidden: Vec<Matching>) -> Result<Self> {
        if m > n {
            return Err(Error::domain(format!(
                "no injections from a {m}-set into a {n}-set"
            )));
        }
        if let Some(bad) = forbidden.iter().find(|f| !f.fits(m, n)) {
            return Err(Error::domain(format!(
                "forbidden matching {bad} does not fit I([{m}], [{n}])"
            )));
        }
        Ok(AvoidanceProblem { m, n, forbidden })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forbidden(&self) -> &[Matching] {
        &self.forbidden
    }

    fn is_permutation_space(&self) -> bool {
        self.m == self.n
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Restarts begun, including the successful one.
    pub restarts: u64,
    /// Resampling steps summed over those restarts.
    pub steps: u64,
    /// Search-tree nodes visited by the exhaustive search.
    pub nodes: u64,
}

/// A witness injection together with the result of re-checking it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub witness: Vec<usize>,
    pub checked: bool,
    pub stats: SearchStats,
}

/// Independent check that `witness` is an injection `[m] -> [n]` extending
/// none of `forbidden`. It reads the witness through its inverse map rather
/// than the forward lookups the searches use.
pub fn verify_avoidance(problem: &AvoidanceProblem, witness: &[usize]) -> bool {
    if witness.len() != problem.m {
        return false;
    }
    let mut preimage = vec![usize::MAX; problem.n];
    for (u, &v) in witness.iter().enumerate() {
        if v >= problem.n || preimage[v] != usize::MAX {
            return false;
        }
        preimage[v] = u;
    }
    !problem
        .forbidden
        .iter()
        .any(|f| f.pairs().iter().all(|&(u, v)| preimage[v] == u))
}

fn certify(problem: &AvoidanceProblem, witness: Vec<usize>, stats: SearchStats) -> Certificate {
    let checked = verify_avoidance(problem, &witness);
    Certificate {
        witness,
        checked,
        stats,
    }
}

/// Lexicographically first avoiding injection, or `None` if there is none.
///
/// Refuses problems whose space exceeds `cap`; `u64::MAX` lifts the limit.
/// Branches are cut as soon as the assigned prefix completes a forbidden
/// matching, which never skips an avoiding injection, so the answer is the
/// same as a full scan.
pub fn solve_exhaustive(problem: &AvoidanceProblem, cap: u64) -> Result<Option<Certificate>> {
    let (m, n) = (problem.m, problem.n);
    if m > 0 && cap != u64::MAX {
        prob::check_enumeration_cap(m, n, cap)?;
    }
    // The empty matching is extended by every injection.
    if problem.forbidden.iter().any(Matching::is_empty) {
        return Ok(None);
    }
    let mut closing: Vec<Vec<&Matching>> = vec![Vec::new(); m];
    for f in &problem.forbidden {
        if let Some(last) = f.max_domain_point() {
            closing[last].push(f);
        }
    }

    struct Walk<'a> {
        closing: Vec<Vec<&'a Matching>>,
        n: usize,
        sigma: Vec<usize>,
        used: Vec<bool>,
        nodes: u64,
    }

    impl Walk<'_> {
        fn go(&mut self, u: usize) -> bool {
            if u == self.sigma.len() {
                return true;
            }
            for v in 0..self.n {
                if self.used[v] {
                    continue;
                }
                self.nodes += 1;
                self.sigma[u] = v;
                if self.closing[u]
                    .iter()
                    .any(|f| f.is_extended_by(&self.sigma))
                {
                    continue;
                }
                self.used[v] = true;
                if self.go(u + 1) {
                    return true;
                }
                self.used[v] = false;
            }
            false
        }
    }

    let mut walk = Walk {
        closing,
        n,
        sigma: vec![0; m],
        used: vec![false; n],
        nodes: 0,
    };
    let found = walk.go(0);
    let stats = SearchStats {
        restarts: 0,
        steps: 0,
        nodes: walk.nodes,
    };
    Ok(found.then(|| certify(problem, walk.sigma, stats)))
}

/// How the randomized search picks which violated matching to resample.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Selection {
    /// The first violated matching in the problem's order.
    #[default]
    First,
    /// A uniformly random violated matching.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomizedConfig {
    pub max_restarts: u64,
    pub max_steps: u64,
    pub selection: Selection,
    /// Restarts attempted concurrently. Results do not depend on it.
    pub parallel_restarts: usize,
}

impl Default for RandomizedConfig {
    fn default() -> Self {
        RandomizedConfig {
            max_restarts: DEFAULT_MAX_RESTARTS,
            max_steps: DEFAULT_MAX_STEPS,
            selection: Selection::First,
            parallel_restarts: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomizedOutcome {
    /// `None` means the budget ran out, not that no solution exists.
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
}

pub fn restart_seed(seed: u64, restart: u64) -> u64 {
    SplitMix64::seed_from_u64(seed ^ restart.wrapping_mul(0xD1B5_4A32_D192_ED03)).next_u64()
}

/// Restart-and-resample search. Deterministic in `(problem, seed, config)`.
pub fn solve_randomized(
    problem: &AvoidanceProblem,
    seed: u64,
    config: &RandomizedConfig,
) -> RandomizedOutcome {
    let batch = config.parallel_restarts.max(1) as u64;
    let mut stats = SearchStats::default();
    let mut next = 0;
    while next < config.max_restarts {
        let end = (next + batch).min(config.max_restarts);
        let runs: Vec<(Option<Vec<usize>>, u64)> = (next..end)
            .into_par_iter()
            .map(|k| run_once(problem, restart_seed(seed, k), config))
            .collect();
        for (witness, steps) in runs {
            stats.restarts += 1;
            stats.steps += steps;
            if let Some(witness) = witness {
                let cert = certify(problem, witness, stats);
                return RandomizedOutcome {
                    certificate: cert.checked.then_some(cert),
                    stats,
                };
            }
        }
        next = end;
    }
    RandomizedOutcome {
        certificate: None,
        stats,
    }
}

fn first_violated(problem: &AvoidanceProblem, sigma: &[usize]) -> Option<usize> {
    problem
        .forbidden
        .iter()
        .position(|f| f.is_extended_by(sigma))
}

fn run_once(
    problem: &AvoidanceProblem,
    seed: u64,
    config: &RandomizedConfig,
) -> (Option<Vec<usize>>, u64) {
    let (m, n) = (problem.m, problem.n);
    let mut rng = SplitMix64::seed_from_u64(seed);

    // Partial Fisher-Yates: the first m entries form a uniform injection.
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..m {
        let j = rng.gen_range(i..n);
        pool.swap(i, j);
    }
    let mut sigma = pool[..m].to_vec();
    let mut used = vec![false; n];
    for &v in &sigma {
        used[v] = true;
    }

    let mut steps = 0;
    loop {
        let violated = match config.selection {
            Selection::First => first_violated(problem, &sigma),
            Selection::Random => {
                let all: Vec<usize> = problem
                    .forbidden
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.is_extended_by(&sigma))
                    .map(|(k, _)| k)
                    .collect();
                (!all.is_empty()).then(|| all[rng.gen_range(0..all.len())])
            }
        };
        let Some(k) = violated else {
            return (Some(sigma), steps);
        };
        if steps == config.max_steps {
            return (None, steps);
        }
        steps += 1;
        for u in problem.forbidden[k].domain() {
            if problem.is_permutation_space() {
                if n < 2 {
                    continue;
                }
                let mut w = rng.gen_range(0..n - 1);
                if w >= u {
                    w += 1;
                }
                sigma.swap(u, w);
            } else {
                let pick = rng.gen_range(0..n - m);
                let v = (0..n)
                    .filter(|&v| !used[v])
                    .nth(pick)
                    .expect("n - m unused values");
                used[sigma[u]] = false;
                used[v] = true;
                sigma[u] = v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(u: usize, v: usize) -> Matching {
        Matching::from_pairs(&[(u, v)]).unwrap()
    }

    #[test]
    fn exhaustive_basics() {
        let p = AvoidanceProblem::new(3, 4, vec![]).unwrap();
        let cert = solve_exhaustive(&p, u64::MAX).unwrap().unwrap();
        assert_eq!(cert.witness, vec![0, 1, 2]);
        assert!(cert.checked);

        let both = vec![
            Matching::from_pairs(&[(0, 0), (1, 1)]).unwrap(),
            Matching::from_pairs(&[(0, 1), (1, 0)]).unwrap(),
        ];
        let p = AvoidanceProblem::new(2, 2, both).unwrap();
        assert_eq!(solve_exhaustive(&p, u64::MAX).unwrap(), None);

        let p = AvoidanceProblem::new(2, 3, vec![Matching::empty()]).unwrap();
        assert_eq!(solve_exhaustive(&p, u64::MAX).unwrap(), None);

        let p = AvoidanceProblem::new(2, 3, vec![single(0, 0)]).unwrap();
        assert_eq!(
            solve_exhaustive(&p, u64::MAX).unwrap().unwrap().witness,
            vec![1, 0]
        );
    }

    #[test]
    fn exhaustive_respects_cap() {
        let p = AvoidanceProblem::new(4, 4, vec![]).unwrap();
        assert!(matches!(
            solve_exhaustive(&p, 23),
            Err(Error::SizeLimit { .. })
        ));
        assert!(solve_exhaustive(&p, 24).is_ok());
    }

    #[test]
    fn problem_validation() {
        assert!(AvoidanceProblem::new(3, 2, vec![]).is_err());
        assert!(AvoidanceProblem::new(2, 3, vec![single(2, 0)]).is_err());
        assert!(AvoidanceProblem::new(2, 3, vec![single(0, 3)]).is_err());
    }

    #[test]
    fn randomized_trivial_and_deterministic() {
        let p = AvoidanceProblem::new(4, 6, vec![]).unwrap();
        let out = solve_randomized(&p, 7, &RandomizedConfig::default());
        let cert = out.certificate.unwrap();
        assert!(cert.checked);
        assert_eq!(cert.stats.steps, 0);
        assert_eq!(cert.stats.restarts, 1);

        let forbidden = (0..5).map(|u| single(u, u)).collect();
        let p = AvoidanceProblem::new(5, 5, forbidden).unwrap();
        let config = RandomizedConfig::default();
        let a = solve_randomized(&p, 42, &config);
        let b = solve_randomized(&p, 42, &config);
        assert_eq!(a, b);
        let parallel = RandomizedConfig {
            parallel_restarts: 4,
            ..config
        };
        assert_eq!(solve_randomized(&p, 42, &parallel), a);
        let cert = a.certificate.unwrap();
        assert!(verify_avoidance(&p, &cert.witness));
        assert!(cert.witness.iter().enumerate().all(|(u, &v)| u != v));
    }

    #[test]
    fn randomized_injection_case() {
        let forbidden = vec![single(0, 0), single(0, 1), single(1, 2), single(2, 2)];
        let p = AvoidanceProblem::new(3, 4, forbidden).unwrap();
        let config = RandomizedConfig {
            selection: Selection::Random,
            ..RandomizedConfig::default()
        };
        for seed in 0..20 {
            let cert = solve_randomized(&p, seed, &config).certificate.unwrap();
            assert!(verify_avoidance(&p, &cert.witness));
        }
    }

    #[test]
    fn randomized_reports_exhaustion() {
        let both = vec![
            Matching::from_pairs(&[(0, 0), (1, 1)]).unwrap(),
            Matching::from_pairs(&[(0, 1), (1, 0)]).unwrap(),
        ];
        let p = AvoidanceProblem::new(2, 2, both).unwrap();
        let config = RandomizedConfig {
            max_restarts: 3,
            max_steps: 10,
            ..RandomizedConfig::default()
        };
        let out = solve_randomized(&p, 1, &config);
        assert_eq!(out.certificate, None);
        assert_eq!(out.stats.restarts, 3);
        assert_eq!(out.stats.steps, 30);
    }

    #[test]
    fn verifier_rejects_bad_witnesses() {
        let p = AvoidanceProblem::new(2, 3, vec![Matching::from_pairs(&[(0, 1), (1, 2)]).unwrap()])
            .unwrap();
        assert!(verify_avoidance(&p, &[0, 2]));
        assert!(!verify_avoidance(&p, &[1, 2]));
        assert!(!verify_avoidance(&p, &[1, 1]));
        assert!(!verify_avoidance(&p, &[0, 3]));
        assert!(!verify_avoidance(&p, &[0]));
    }
}
