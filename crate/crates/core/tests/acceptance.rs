//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test --test acceptance` (add `--release` for timings that
//! reflect an optimised build).

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::Parser;
use num_traits::One;
use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};

use locallemma::cli::{self, Cli};
use locallemma::hypergraph::{self, Criterion};
use locallemma::injection::{canonical_event, canonical_event_probability, conflict_graph};
use locallemma::latin::{self, IntMatrix};
use locallemma::lll::{self, EInterval, TriState, WeightVector};
use locallemma::rational::{self, ratio, Rational};
use locallemma::solver::{self, AvoidanceProblem, RandomizedConfig};
use locallemma::{Hypergraph, Limits, Matching, SampleSpace};

// ---------------------------------------------------------------------------
// Independent oracles. These never call into the library's probability code.

/// Calls `visit` on every injection `[m] -> [n]` in lexicographic order.
fn for_each_injection(m: usize, n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(sigma: &mut Vec<usize>, used: &mut [bool], m: usize, visit: &mut dyn FnMut(&[usize])) {
        if sigma.len() == m {
            visit(sigma);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                sigma.push(v);
                go(sigma, used, m, visit);
                sigma.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(m), &mut vec![false; n], m, visit);
}

fn extends(sigma: &[usize], f: &Matching) -> bool {
    f.pairs().iter().all(|&(u, v)| sigma[u] == v)
}

/// `(number of injections, number avoiding every matching in fs)`.
fn avoiding_count(m: usize, n: usize, fs: &[Matching]) -> (u64, u64) {
    let (mut total, mut good) = (0u64, 0u64);
    for_each_injection(m, n, &mut |s| {
        total += 1;
        if !fs.iter().any(|f| extends(s, f)) {
            good += 1;
        }
    });
    (total, good)
}

fn is_injection_into(sigma: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    sigma
        .iter()
        .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

fn random_matching(rng: &mut StdRng, m: usize, n: usize, r: usize) -> Matching {
    let dom = sample(rng, m, r).into_vec();
    let img = sample(rng, n, r).into_vec();
    let pairs: Vec<(usize, usize)> = dom.into_iter().zip(img).collect();
    Matching::from_pairs(&pairs).unwrap()
}

/// All partial injections from `[m]` into `[n]`, including the empty one.
fn all_matchings(m: usize, n: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    // Each domain point maps to a value or to nothing (encoded as n).
    fn go(
        u: usize,
        m: usize,
        n: usize,
        cur: &mut Vec<(usize, usize)>,
        used: &mut [bool],
        out: &mut Vec<Matching>,
    ) {
        if u == m {
            out.push(Matching::from_pairs(cur).unwrap());
            return;
        }
        go(u + 1, m, n, cur, used, out);
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push((u, v));
                go(u + 1, m, n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(0, m, n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn falling(n: u64, k: u64) -> u64 {
    (0..k).map(|i| n - i).product()
}

// ---------------------------------------------------------------------------
// Random canonical-event families over spaces of at most 5040 outcomes.

struct Family {
    m: usize,
    n: usize,
    matchings: Vec<Matching>,
}

fn small_shapes() -> Vec<(usize, usize)> {
    let mut shapes = Vec::new();
    for n in 1..=9 {
        for m in 1..=n {
            if falling(n as u64, m as u64) <= 5040 {
                shapes.push((m, n));
            }
        }
    }
    shapes
}

fn random_family(rng: &mut StdRng, shapes: &[(usize, usize)], min_r: usize) -> Family {
    let candidates: Vec<_> = shapes.iter().filter(|&&(m, _)| m >= min_r).collect();
    let &(m, n) = candidates[rng.gen_range(0..candidates.len())];
    let count = rng.gen_range(1..=10);
    let matchings = (0..count)
        .map(|_| {
            let r = rng.gen_range(min_r..=m.min(3));
            random_matching(rng, m, n, r)
        })
        .collect();
    Family { m, n, matchings }
}

/// The families used by criteria 2, 3 and 4.
fn ndg_families() -> Vec<Family> {
    let shapes = small_shapes();
    let mut rng = StdRng::seed_from_u64(0x5EED_0002);
    (0..220)
        .map(|_| random_family(&mut rng, &shapes, 1))
        .collect()
}

fn lemma_families() -> Vec<Family> {
    let shapes = small_shapes();
    let mut rng = StdRng::seed_from_u64(0x5EED_0003);
    (0..600)
        .map(|k| random_family(&mut rng, &shapes, if k % 3 == 0 { 1 } else { 2 }))
        .collect()
}

fn family_probabilities(f: &Family) -> Vec<Rational> {
    f.matchings
        .iter()
        .map(|mt| canonical_event_probability(f.m, f.n, mt.len()).unwrap())
        .collect()
}

// ---------------------------------------------------------------------------
// Criteria. Each returns a one-line summary or panics.

fn within(start: Instant, limit: Duration, what: &str) {
    let took = start.elapsed();
    assert!(took < limit, "{what} took {took:?}, limit {limit:?}");
}

fn closed_form_vs_enumeration() -> String {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5EED_0001);
    let mut checked = 0;
    for n in 0..=7usize {
        // m = 0: the space holds only the empty injection.
        assert_eq!(
            canonical_event_probability(0, n, 0).unwrap(),
            Rational::one()
        );
        for m in 1..=n {
            let space = SampleSpace::enumerate(m, n).unwrap();
            assert_eq!(space.len() as u64, falling(n as u64, m as u64));
            for r in 0..=m {
                let closed = canonical_event_probability(m, n, r).unwrap();
                // The packing specialization 1/(r! C(n,r)).
                let packing = Rational::one()
                    / rational::big(
                        rational::factorial(r as u64) * rational::binomial(n as u64, r as u64),
                    );
                assert_eq!(closed, packing, "m={m} n={n} r={r}");
                if r == 2 && m == n {
                    assert_eq!(closed, ratio(1, (n * (n - 1)) as i64));
                }
                let mut samples: Vec<Matching> =
                    (0..4).map(|_| random_matching(&mut rng, m, n, r)).collect();
                let first: Vec<(usize, usize)> = (0..r).map(|i| (i, i)).collect();
                let last: Vec<(usize, usize)> = (0..r).map(|i| (m - r + i, n - 1 - i)).collect();
                samples.push(Matching::from_pairs(&first).unwrap());
                samples.push(Matching::from_pairs(&last).unwrap());
                for mt in &samples {
                    let event = canonical_event(&space, mt).unwrap();
                    let measured = space.probability(event.event()).unwrap();
                    assert_eq!(measured, closed, "m={m} n={n} matching {mt}");
                    let (total, good) = avoiding_count(m, n, std::slice::from_ref(mt));
                    let oracle =
                        Rational::new(((total - good) as i64).into(), (total as i64).into());
                    assert_eq!(oracle, closed, "oracle m={m} n={n} matching {mt}");
                    checked += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(10), "criterion 1");
    format!("{checked} matchings over all 0 <= r <= m <= n <= 7")
}

fn conflict_graph_is_negative_dependency_graph() -> String {
    let start = Instant::now();
    let limits = Limits::default();
    let families = ndg_families();
    let mut events_total = 0;
    for f in &families {
        let space = SampleSpace::enumerate(f.m, f.n).unwrap();
        assert!(space.len() <= 5040);
        let events: Vec<_> = f
            .matchings
            .iter()
            .map(|mt| canonical_event(&space, mt).unwrap().into_event())
            .collect();
        let g = conflict_graph(&f.matchings);
        let verdict = lll::verify_negative_dependency_graph(&space, &events, &g, &limits).unwrap();
        assert!(
            verdict.holds(),
            "I({},{}) {:?}: {verdict:?}",
            f.m,
            f.n,
            f.matchings
        );
        events_total += events.len();
    }
    within(start, Duration::from_secs(60), "criterion 2");
    format!(
        "{} families, {events_total} events, zero violations",
        families.len()
    )
}

fn lemma_end_to_end() -> String {
    let start = Instant::now();
    let limits = Limits::default();
    let mut passed = 0;
    let mut tightest: Option<Rational> = None;
    for f in lemma_families() {
        if passed >= 200 {
            break;
        }
        let p = family_probabilities(&f);
        let g = conflict_graph(&f.matchings);
        let Some(x) = lll::find_weights(&p, &g, lll::FIND_WEIGHTS_MAX_ITER) else {
            continue;
        };
        let space = SampleSpace::enumerate(f.m, f.n).unwrap();
        let events: Vec<_> = f
            .matchings
            .iter()
            .map(|mt| canonical_event(&space, mt).unwrap().into_event())
            .collect();
        let conclusion = lll::verify_lll_conclusion(&space, &events, &g, &x, &limits).unwrap();
        assert!(conclusion.holds(), "{:?}: {conclusion:?}", f.matchings);

        let (total, good) = avoiding_count(f.m, f.n, &f.matchings);
        let oracle = Rational::new((good as i64).into(), (total as i64).into());
        assert_eq!(conclusion.avoidance, oracle);
        assert!(oracle >= x.avoidance_bound());
        let slack = &conclusion.avoidance - &conclusion.bound;
        if tightest.as_ref().is_none_or(|t| slack < *t) {
            tightest = Some(slack);
        }
        passed += 1;
    }
    assert!(
        passed >= 200,
        "only {passed} triples passed both hypotheses"
    );
    within(start, Duration::from_secs(60), "criterion 3");
    format!(
        "{passed} triples, zero violations, smallest slack {}",
        rational::render(&tightest.unwrap())
    )
}

fn symmetric_chain() -> String {
    let e = EInterval::default();
    let (mut instances, mut applied, mut isolated) = (0, 0, 0);
    for f in ndg_families().into_iter().chain(lemma_families()) {
        let p = family_probabilities(&f);
        let g = conflict_graph(&f.matchings);
        let d = g.max_degree();
        let p_max = p.iter().max().unwrap().clone();
        instances += 1;
        if lll::check_symmetric_condition(&p_max, d, &e) != TriState::Holds {
            continue;
        }
        // 1/(d+1) = 1 is not an admissible weight when d = 0; there every
        // event is isolated and x = p_max <= 1/e already works.
        let w = if d == 0 {
            isolated += 1;
            p_max
        } else {
            applied += 1;
            ratio(1, d as i64 + 1)
        };
        let x = WeightVector::uniform(p.len(), w).unwrap();
        let verdict = lll::check_lll_condition(&p, &g, &x).unwrap();
        assert!(verdict.holds(), "{:?} with d={d}", f.matchings);
    }
    assert!(applied > 0, "symmetric condition never held with d >= 1");
    format!(
        "{} of {instances} instances met the symmetric condition; {applied} with d >= 1 passed \
         with x = 1/(d+1), {isolated} with d = 0 passed with x = p_max",
        applied + isolated
    )
}

fn conflict_iff_disjoint() -> String {
    let mut pairs = 0u64;
    for n in 2..=5 {
        for m in 1..n.min(4) {
            let space = SampleSpace::enumerate(m, n).unwrap();
            let ms = all_matchings(m, n);
            let events: Vec<_> = ms
                .iter()
                .map(|mt| canonical_event(&space, mt).unwrap().into_event())
                .collect();
            for a in 0..ms.len() {
                for b in 0..ms.len() {
                    let disjoint = events[a].is_disjoint(&events[b]).unwrap();
                    assert_eq!(
                        ms[a].conflicts(&ms[b]),
                        disjoint,
                        "{} vs {} in I({m},{n})",
                        ms[a],
                        ms[b]
                    );
                    pairs += 1;
                }
            }
        }
    }
    format!("{pairs} ordered pairs, zero discrepancies")
}

fn random_hypergraph(rng: &mut StdRng, v: usize, r: usize, max_edges: usize) -> Hypergraph {
    let all = hypergraph::r_subsets(v, r);
    let k = rng.gen_range(1..=max_edges.min(all.len()));
    let edges = sample(rng, all.len(), k)
        .into_iter()
        .map(|i| all[i].clone())
        .collect();
    Hypergraph::new(v, r, edges).unwrap()
}

fn packing_degree_bound() -> String {
    let mut rng = StdRng::seed_from_u64(0x5EED_0006);
    let mut worst = (0usize, 1i64);
    let mut cross_checked = 0;
    let instances = 80;
    for _ in 0..instances {
        let r = rng.gen_range(2..=3);
        let n = rng.gen_range(r + 1..=8);
        let v1 = rng.gen_range(r..=n);
        let h1 = random_hypergraph(&mut rng, v1, r, 6);
        let h2 = random_hypergraph(&mut rng, n, r, 8);
        let inst = hypergraph::build_packing_instance(&h1, &h2, n, 100_000).unwrap();
        let fact: usize = (1..=r).product();
        assert_eq!(
            inst.event_matchings.len(),
            fact * h1.edge_count() * h2.edge_count()
        );
        let g = conflict_graph(&inst.event_matchings);
        let d = g.max_degree();
        let bound = fact as i64 * ((inst.d1 + 1) * inst.m2 + (inst.d2 + 1) * inst.m1) as i64 - 1;
        assert_eq!(inst.degree_bound(), bound.into());
        assert!(d as i64 <= bound, "degree {d} exceeds {bound}");
        if (d as i64) * worst.1 > worst.0 as i64 * bound {
            worst = (d, bound);
        }
        // Conflicts agree with event disjointness when the space is small.
        if falling(n as u64, v1 as u64) <= 5040 && inst.event_matchings.len() <= 60 {
            let space = inst.sample_space(5040).unwrap();
            let events = inst.canonical_events(&space).unwrap();
            for (a, b) in g.edges() {
                assert!(events[a].is_disjoint(&events[b]).unwrap());
            }
            cross_checked += 1;
        }
    }
    format!(
        "{instances} instances, zero violations, tightest ratio {}/{}, {cross_checked} cross-checked by enumeration",
        worst.0, worst.1
    )
}

fn random_matrix(rng: &mut StdRng, n: usize) -> IntMatrix {
    let values = rng.gen_range(1..=n * n) as i64;
    let cells: Vec<i64> = (0..n * n).map(|_| rng.gen_range(1..=values)).collect();
    IntMatrix::from_fn(n, |i, j| cells[i * n + j])
}

fn latin_degree_bound() -> String {
    let mut rng = StdRng::seed_from_u64(0x5EED_0007);
    let instances = 80;
    let mut worst = (0usize, 1i64);
    for _ in 0..instances {
        let n = rng.gen_range(2..=7);
        let a = random_matrix(&mut rng, n);
        let fam = latin::build_latin_events(&a);
        // Independent count of equal-valued cell pairs in distinct rows and columns.
        let mut pairs = 0;
        for i in 0..n {
            for i2 in i + 1..n {
                for j in 0..n {
                    for j2 in 0..n {
                        if j != j2 && a.get(i, j) == a.get(i2, j2) {
                            pairs += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(fam.len(), pairs);
        let d = conflict_graph(&fam.matchings).max_degree();
        let bound = fam.degree_bound();
        assert_eq!(bound, 4 * n as i64 * a.max_multiplicity() as i64 - 1);
        assert!(d as i64 <= bound, "degree {d} exceeds {bound}");
        if (d as i64) * worst.1 > worst.0 as i64 * bound {
            worst = (d, bound);
        }
    }
    format!(
        "{instances} matrices, zero violations, tightest ratio {}/{}",
        worst.0, worst.1
    )
}

/// Each value appears exactly twice, in distinct rows and columns; an odd
/// last row holds fresh distinct values.
fn stressed_k2(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, |i, j| {
        if i + 1 == n && n % 2 == 1 {
            (n * n + j) as i64
        } else {
            let t = i / 2;
            (n * t + (j + i % 2) % n) as i64
        }
    })
}

fn distinct(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, |i, j| (n * i + j) as i64)
}

fn solve_latin_exhaustive(a: &IntMatrix, cap: u64) -> Vec<usize> {
    let fam = latin::build_latin_events(a);
    let problem = AvoidanceProblem::new(a.n(), a.n(), fam.matchings).unwrap();
    let cert = solver::solve_exhaustive(&problem, cap)
        .unwrap()
        .expect("a transversal exists");
    assert!(cert.checked);
    assert!(latin::is_latin_transversal(a, &cert.witness).unwrap());
    cert.witness
}

fn transversals_constructively() -> String {
    let e = EInterval::default();
    let mut rng = StdRng::seed_from_u64(0x5EED_0008);

    // Every matrix within the default cap on which the condition holds.
    let mut holds_small = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let a = if rng.gen_bool(0.2) {
            distinct(n)
        } else {
            random_matrix(&mut rng, n)
        };
        if latin::transversal_condition(n, a.max_multiplicity(), &e) == TriState::Holds {
            solve_latin_exhaustive(&a, solver_cap());
            holds_small += 1;
        }
    }
    for n in 1..=7 {
        assert_eq!(latin::transversal_condition(n, 1, &e), TriState::Fails);
        solve_latin_exhaustive(&distinct(n), solver_cap());
    }

    // Beyond the default cap: the smallest sizes where the condition holds.
    let big = [(distinct(12), 1), (stressed_k2(23), 2)];
    for (a, k) in &big {
        assert_eq!(a.max_multiplicity(), *k);
        assert_eq!(latin::transversal_condition(a.n(), *k, &e), TriState::Holds);
        solve_latin_exhaustive(a, u64::MAX);
    }

    // Randomized search within default budgets.
    let config = RandomizedConfig::default();
    let mut max_steps = 0;
    for a in [distinct(12), stressed_k2(12)] {
        let fam = latin::build_latin_events(&a);
        let problem = AvoidanceProblem::new(12, 12, fam.matchings).unwrap();
        for seed in 0..10 {
            let out = solver::solve_randomized(&problem, seed, &config);
            let cert = out
                .certificate
                .unwrap_or_else(|| panic!("seed {seed} found nothing"));
            assert!(cert.checked);
            assert!(latin::is_latin_transversal(&a, &cert.witness).unwrap());
            max_steps = max_steps.max(out.stats.steps);
        }
    }
    format!(
        "{holds_small} small matrices met the condition (none can for n <= 7); exhaustive search \
         found transversals at n = 12 (k = 1) and n = 23 (k = 2); randomized search succeeded on \
         20 of 20 runs, at most {max_steps} steps"
    )
}

fn solver_cap() -> u64 {
    locallemma::prob::DEFAULT_ENUMERATION_CAP
}

fn run_case(args: &[String]) -> (String, i32) {
    let cli =
        Cli::try_parse_from(std::iter::once("locallemma".to_string()).chain(args.iter().cloned()))
            .unwrap();
    let out = cli::run(&cli);
    (
        out.report.map(|r| r.to_json()).unwrap_or_default(),
        out.exit_code,
    )
}

fn soundness_and_determinism() -> String {
    let mut rng = StdRng::seed_from_u64(0x5EED_0009);
    let config = RandomizedConfig {
        max_restarts: 20,
        max_steps: 2_000,
        ..Default::default()
    };
    let (mut found, mut impossible, mut exhausted) = (0, 0, 0);
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(1..=n);
        let count = rng.gen_range(0..=12);
        let forbidden: Vec<Matching> = (0..count)
            .map(|_| {
                let r = rng.gen_range(1..=m.min(3));
                random_matching(&mut rng, m, n, r)
            })
            .collect();
        let (_, good) = avoiding_count(m, n, &forbidden);
        let problem = AvoidanceProblem::new(m, n, forbidden.clone()).unwrap();

        let exhaustive = solver::solve_exhaustive(&problem, solver_cap()).unwrap();
        assert_eq!(exhaustive.is_some(), good > 0);
        let randomized = solver::solve_randomized(&problem, rng.gen(), &config);
        for cert in exhaustive.iter().chain(randomized.certificate.iter()) {
            assert!(cert.checked);
            assert!(is_injection_into(&cert.witness, n));
            assert!(!forbidden.iter().any(|f| extends(&cert.witness, f)));
            found += 1;
        }
        if good == 0 {
            assert!(randomized.certificate.is_none());
            impossible += 1;
        } else if randomized.certificate.is_none() {
            exhausted += 1;
        }
    }

    // Reports are byte-identical across runs and match the golden files.
    let mut goldens = 0;
    for case in common::CASES {
        let args = common::resolve(case.args);
        let (first, code) = run_case(&args);
        let (second, _) = run_case(&args);
        assert_eq!(code, case.exit, "{}", case.name);
        assert_eq!(first, second, "{} is not deterministic", case.name);
        let golden = std::fs::read_to_string(common::golden_path(case.name)).unwrap();
        assert_eq!(first, golden, "{} differs from its golden file", case.name);
        goldens += 1;
    }
    format!(
        "{found} certificates re-verified ({impossible} infeasible problems, {exhausted} budget \
         exhaustions); {goldens} golden reports reproduced byte for byte"
    )
}

fn k6_perfect_matching() -> String {
    let start = Instant::now();
    let e = EInterval::default();
    let k6 = Hypergraph::complete(6, 2).unwrap();
    let edge = Hypergraph::complete(2, 2).unwrap();

    // 5 >= (3e - 1) * 5 / (3e), decided on the enclosure of e.
    let criteria = hypergraph::perfect_matching_criteria(&k6, &e);
    assert_eq!(
        criteria.graph_matching,
        Criterion::Evaluated(TriState::Holds)
    );
    let three_e = e.upper() * rational::integer(3);
    let threshold_hi = (&three_e - Rational::one()) * rational::integer(5) / &three_e;
    assert!(threshold_hi <= rational::integer(5));
    assert!(threshold_hi > ratio(438, 100) && threshold_hi < ratio(439, 100));

    let reduction = hypergraph::perfect_packing_reduction(&edge, &k6).unwrap();
    let inst = hypergraph::build_packing_instance(&reduction.h1, &reduction.h2, reduction.n, 1000)
        .unwrap();
    let problem = AvoidanceProblem::new(6, 6, inst.event_matchings).unwrap();
    let out = solver::solve_randomized(&problem, 0, &RandomizedConfig::default());
    let cert = out.certificate.expect("K6 has a perfect matching");
    assert!(cert.checked);
    assert!(hypergraph::verify_packing(&reduction.h1, &reduction.h2, 6, &cert.witness).unwrap());
    let parts = reduction.partition(&cert.witness);
    assert_eq!(parts.len(), 3);
    assert!(hypergraph::validate_perfect_packing(&edge, &k6, &parts).unwrap());
    let mut covered: Vec<usize> = parts.concat();
    covered.sort_unstable();
    assert_eq!(covered, (0..6).collect::<Vec<_>>());
    within(start, Duration::from_secs(1), "criterion 10");
    let shown: Vec<String> = parts
        .iter()
        .map(|p| format!("{{{},{}}}", p[0] + 1, p[1] + 1))
        .collect();
    format!("perfect matching {}", shown.join(" "))
}

type Check = (&'static str, fn() -> String);

fn main() {
    let criteria: [Check; 10] = [
        ("closed form vs enumeration", closed_form_vs_enumeration),
        (
            "conflict graph is a negative dependency graph",
            conflict_graph_is_negative_dependency_graph,
        ),
        ("local lemma end to end", lemma_end_to_end),
        (
            "symmetric condition implies uniform weights",
            symmetric_chain,
        ),
        ("conflict iff disjoint", conflict_iff_disjoint),
        ("packing degree bound", packing_degree_bound),
        ("Latin degree bound", latin_degree_bound),
        (
            "transversals found constructively",
            transversals_constructively,
        ),
        (
            "solver soundness and determinism",
            soundness_and_determinism,
        ),
        ("K6 perfect matching", k6_perfect_matching),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check));
        let took = start.elapsed().as_secs_f64();
        match result {
            Ok(summary) => println!(
                "criterion {:>2} PASS  {name} ({took:.2}s): {summary}",
                k + 1
            ),
            Err(err) => {
                failures += 1;
                let msg = err
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| err.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name} ({took:.2}s): {msg}", k + 1);
            }
        }
    }
    let _ = panic::take_hook();
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
