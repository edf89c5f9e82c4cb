//! Command-line front end. Each subcommand reads text inputs, runs the
//! library checks and optionally a search, and produces a [`Report`].
//!
//! Exit codes: 0 when a verdict or witness is delivered, 2 for input errors,
//! 3 for a negative outcome (no witness, or a violated hypothesis), 4 when a
//! size limit is hit.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use crate::error::Error;
use crate::formats;
use crate::hypergraph::{self, Criterion, PackingInstance};
use crate::injection::{self, conflict_graph};
use crate::latin;
use crate::lll::{self, EInterval, Graph, LllCondition, NdgVerdict, WeightVector};
use crate::prob::{Limits, SampleSpace, DEFAULT_ENUMERATION_CAP};
use crate::rational::{self, Rational};
use crate::report::{one_based, Report};
use crate::solver::{
    self, AvoidanceProblem, RandomizedConfig, SearchStats, Selection, DEFAULT_MAX_RESTARTS,
    DEFAULT_MAX_STEPS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "locallemma",
    version,
    about = "Exact local lemma checks and constructive search"
)]
pub struct Cli {
    /// Add approximate decimal renderings next to exact rationals.
    #[arg(long, global = true)]
    pub float: bool,

    /// Worker threads for library-level parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Include wall-clock time in the stats block.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Latin transversals of an n x n integer matrix.
    Latin {
        matrix: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Pack two r-uniform hypergraphs into the complete hypergraph on n vertices.
    Pack {
        h1: PathBuf,
        h2: PathBuf,
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Perfect G-packings of a host hypergraph H.
    PerfectPacking {
        g: PathBuf,
        h: PathBuf,
        /// Use this x instead of the smallest one the degrees of H allow.
        #[arg(long, value_parser = parse_rational_arg)]
        x: Option<Rational>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exhaustively verify a negative dependency graph for canonical events.
    VerifyNdg {
        events: PathBuf,
        /// Largest sample space to enumerate.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Check the local lemma condition, searching for weights if none are given.
    LllCheck {
        input: PathBuf,
        /// Comma-separated weights overriding any `x` line in the file.
        #[arg(long)]
        weights: Option<String>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Only evaluate the conditions (default).
    #[arg(long, conflicts_with_all = ["solve", "exhaustive"])]
    pub check_only: bool,
    /// Run the randomized search.
    #[arg(long, conflicts_with = "exhaustive")]
    pub solve: bool,
    /// Run the exhaustive search.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_RESTARTS)]
    pub max_restarts: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    pub max_steps: u64,
    /// Resample a uniformly random violated event instead of the first one.
    #[arg(long)]
    pub random_selection: bool,
    /// Largest sample space the exhaustive search may walk.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
}

impl SearchArgs {
    fn mode(&self) -> &'static str {
        if self.solve {
            "solve"
        } else if self.exhaustive {
            "exhaustive"
        } else {
            "check-only"
        }
    }

    fn echo(&self, report: &mut Report) {
        report.input("mode", self.mode());
        if self.solve {
            report
                .input("seed", self.seed)
                .input("max_restarts", self.max_restarts)
                .input("max_steps", self.max_steps)
                .input(
                    "selection",
                    if self.random_selection {
                        "random"
                    } else {
                        "first"
                    },
                );
        }
        if self.exhaustive {
            report.input("cap", self.cap);
        }
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    rational::parse(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

/// Result of running one command.
#[derive(Debug)]
pub struct Outcome {
    pub report: Option<Report>,
    pub exit_code: i32,
    pub error: Option<String>,
}

impl Outcome {
    fn done(report: Report, exit_code: i32) -> Self {
        Outcome {
            report: Some(report),
            exit_code,
            error: None,
        }
    }

    fn failed(context: &str, err: Error) -> Self {
        let exit_code = match err {
            Error::SizeLimit { .. } => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
        Outcome {
            report: None,
            exit_code,
            error: Some(if context.is_empty() {
                err.to_string()
            } else {
                format!("{context}: {err}")
            }),
        }
    }
}

struct Context {
    decimals: bool,
    timing: bool,
    parallel: usize,
    e: EInterval,
    started: Instant,
}

pub fn run(cli: &Cli) -> Outcome {
    let ctx = Context {
        decimals: cli.float,
        timing: cli.timing,
        parallel: cli.threads.unwrap_or(1).max(1),
        e: EInterval::default(),
        started: Instant::now(),
    };
    let result = match &cli.command {
        Command::Latin { matrix, search } => cmd_latin(&ctx, matrix, search),
        Command::Pack { h1, h2, n, search } => cmd_pack(&ctx, h1, h2, *n, search),
        Command::PerfectPacking { g, h, x, search } => {
            cmd_perfect_packing(&ctx, g, h, x.clone(), search)
        }
        Command::VerifyNdg { events, cap } => cmd_verify_ndg(&ctx, events, *cap),
        Command::LllCheck { input, weights } => cmd_lll_check(&ctx, input, weights.as_deref()),
    };
    match result {
        Ok((mut report, code)) => {
            if ctx.timing {
                report.stat("elapsed_ms", ctx.started.elapsed().as_millis() as u64);
            }
            Outcome::done(report, code)
        }
        Err((context, err)) => Outcome::failed(&context, err),
    }
}

type CmdResult = Result<(Report, i32), (String, Error)>;

fn read(path: &Path) -> Result<String, (String, Error)> {
    std::fs::read_to_string(path).map_err(|e| {
        (
            path.display().to_string(),
            Error::Domain(format!("cannot read file: {e}")),
        )
    })
}

fn at(path: &Path) -> impl Fn(Error) -> (String, Error) + '_ {
    move |e| (path.display().to_string(), e)
}

fn plain(e: Error) -> (String, Error) {
    (String::new(), e)
}

fn record_stats(report: &mut Report, stats: &SearchStats) {
    report
        .stat("restarts", stats.restarts)
        .stat("steps", stats.steps)
        .stat("nodes", stats.nodes);
}

/// Runs the requested search. Returns the witness, or the reason for its
/// absence when the search came back empty.
fn search(
    ctx: &Context,
    report: &mut Report,
    problem: &AvoidanceProblem,
    args: &SearchArgs,
) -> Result<Option<Vec<usize>>, (String, Error)> {
    if args.exhaustive {
        let found = solver::solve_exhaustive(problem, args.cap).map_err(plain)?;
        match found {
            Some(cert) => {
                report.verdict("certificate_checked", cert.checked);
                record_stats(report, &cert.stats);
                Ok(Some(cert.witness))
            }
            None => {
                report.verdict("search_result", "none-exists");
                Ok(None)
            }
        }
    } else {
        let config = RandomizedConfig {
            max_restarts: args.max_restarts,
            max_steps: args.max_steps,
            selection: if args.random_selection {
                Selection::Random
            } else {
                Selection::First
            },
            parallel_restarts: ctx.parallel,
        };
        let out = solver::solve_randomized(problem, args.seed, &config);
        record_stats(report, &out.stats);
        match out.certificate {
            Some(cert) => {
                report.verdict("certificate_checked", cert.checked);
                Ok(Some(cert.witness))
            }
            None => {
                report.verdict("search_result", "budget-exhausted");
                Ok(None)
            }
        }
    }
}

fn measured_degree(matchings: &[injection::Matching]) -> usize {
    conflict_graph(matchings).max_degree()
}

fn cmd_latin(ctx: &Context, path: &Path, args: &SearchArgs) -> CmdResult {
    let a = formats::parse_matrix(&read(path)?).map_err(at(path))?;
    let n = a.n();
    let k = a.max_multiplicity();
    let mut report = Report::new("latin", ctx.decimals);
    report.input("n", n);
    args.echo(&mut report);

    let family = latin::build_latin_events(&a);
    report
        .verdict("k", k)
        .tri(
            "transversal_condition",
            latin::transversal_condition(n, k, &ctx.e),
        )
        .verdict("events", family.len());
    if n >= 1 {
        let p = family.event_probability().map_err(plain)?;
        report.rational("event_probability", &p);
        let d = measured_degree(&family.matchings);
        report
            .verdict("conflict_degree", d)
            .verdict("conflict_degree_bound", family.degree_bound())
            .tri(
                "symmetric_condition",
                lll::check_symmetric_condition(&p, d, &ctx.e),
            );
    }

    if !(args.solve || args.exhaustive) {
        return Ok((report, EXIT_OK));
    }
    let problem = AvoidanceProblem::new(n, n, family.matchings).map_err(plain)?;
    match search(ctx, &mut report, &problem, args)? {
        Some(pi) => {
            let ok = latin::is_latin_transversal(&a, &pi).map_err(plain)?;
            report.verdict("transversal_verified", ok).certificate(&pi);
            Ok((report, EXIT_OK))
        }
        None => Ok((report, EXIT_NEGATIVE)),
    }
}

fn packing_summary(ctx: &Context, report: &mut Report, inst: &PackingInstance) {
    let p = inst.event_probability();
    report
        .verdict("events", inst.event_matchings.len())
        .rational("event_probability", &p);
    if !inst.event_matchings.is_empty() {
        let d = measured_degree(&inst.event_matchings);
        report
            .verdict("conflict_degree", d)
            .verdict("conflict_degree_bound", inst.degree_bound().to_string())
            .tri(
                "symmetric_condition",
                lll::check_symmetric_condition(&p, d, &ctx.e),
            );
    }
}

fn cmd_pack(
    ctx: &Context,
    h1_path: &Path,
    h2_path: &Path,
    n: usize,
    args: &SearchArgs,
) -> CmdResult {
    let h1 = formats::parse_hypergraph(&read(h1_path)?).map_err(at(h1_path))?;
    let h2 = formats::parse_hypergraph(&read(h2_path)?).map_err(at(h2_path))?;
    let mut report = Report::new("pack", ctx.decimals);
    report
        .input("n", n)
        .input("r", h1.r())
        .input("h1_vertices", h1.vertex_count())
        .input("h2_vertices", h2.vertex_count());
    args.echo(&mut report);

    let cond = hypergraph::packing_condition(&h1, &h2, n, &ctx.e).map_err(plain)?;
    report
        .verdict("m1", cond.m1)
        .verdict("m2", cond.m2)
        .verdict("d1", cond.d1)
        .verdict("d2", cond.d2)
        .verdict("lhs", cond.lhs.to_string())
        .verdict("binomial", cond.binom.to_string())
        .tri("packing_condition", cond.verdict);

    let inst =
        hypergraph::build_packing_instance(&h1, &h2, n, hypergraph::DEFAULT_MAX_PACKING_EVENTS)
            .map_err(plain)?;
    packing_summary(ctx, &mut report, &inst);

    if !(args.solve || args.exhaustive) {
        return Ok((report, EXIT_OK));
    }
    let problem =
        AvoidanceProblem::new(h1.vertex_count(), n, inst.event_matchings).map_err(plain)?;
    match search(ctx, &mut report, &problem, args)? {
        Some(sigma) => {
            let ok = hypergraph::verify_packing(&h1, &h2, n, &sigma).map_err(plain)?;
            report.verdict("packing_verified", ok).certificate(&sigma);
            Ok((report, EXIT_OK))
        }
        None => Ok((report, EXIT_NEGATIVE)),
    }
}

fn cmd_perfect_packing(
    ctx: &Context,
    g_path: &Path,
    h_path: &Path,
    x: Option<Rational>,
    args: &SearchArgs,
) -> CmdResult {
    let g = formats::parse_hypergraph(&read(g_path)?).map_err(at(g_path))?;
    let h = formats::parse_hypergraph(&read(h_path)?).map_err(at(h_path))?;
    let mut report = Report::new("perfect-packing", ctx.decimals);
    report
        .input("r", h.r())
        .input("s", g.vertex_count())
        .input("n", h.vertex_count());
    if let Some(x) = &x {
        report.input("x", rational::render(x));
    }
    args.echo(&mut report);

    let reduction = hypergraph::perfect_packing_reduction(&g, &h).map_err(plain)?;
    let cond = hypergraph::perfect_packing_condition(&g, &h, x, &ctx.e).map_err(plain)?;
    report
        .verdict("m", cond.m)
        .verdict("d", cond.d)
        .verdict("min_degree", cond.min_degree)
        .rational("x", &cond.x)
        .rational("factor", &cond.factor)
        .rational("threshold_lower", &cond.threshold_lower)
        .rational("threshold_upper", &cond.threshold_upper)
        .tri("perfect_packing_condition", cond.verdict);
    let criteria = hypergraph::perfect_matching_criteria(&h, &ctx.e);
    for (name, c) in [
        (
            "hypergraph_matching_criterion",
            &criteria.hypergraph_matching,
        ),
        ("graph_matching_criterion", &criteria.graph_matching),
    ] {
        report.verdict(name, c.render());
        if let Criterion::NotApplicable(reason) = c {
            report.verdict(&format!("{name}_note"), reason.as_str());
        }
    }
    report
        .verdict("h1_edges", reduction.h1.edge_count())
        .verdict("h2_edges", reduction.h2.edge_count());

    if !(args.solve || args.exhaustive) {
        return Ok((report, EXIT_OK));
    }
    let inst = hypergraph::build_packing_instance(
        &reduction.h1,
        &reduction.h2,
        reduction.n,
        hypergraph::DEFAULT_MAX_PACKING_EVENTS,
    )
    .map_err(plain)?;
    packing_summary(ctx, &mut report, &inst);
    let problem =
        AvoidanceProblem::new(reduction.n, reduction.n, inst.event_matchings).map_err(plain)?;
    match search(ctx, &mut report, &problem, args)? {
        Some(sigma) => {
            let packed =
                hypergraph::verify_packing(&reduction.h1, &reduction.h2, reduction.n, &sigma)
                    .map_err(plain)?;
            let parts = reduction.partition(&sigma);
            let valid = hypergraph::validate_perfect_packing(&g, &h, &parts).map_err(plain)?;
            let rendered: Vec<Vec<usize>> = parts.iter().map(|p| one_based(p)).collect();
            report
                .verdict("packing_verified", packed)
                .verdict(
                    "partition",
                    serde_json::to_value(rendered).expect("plain data"),
                )
                .verdict("partition_verified", valid)
                .certificate(&sigma);
            Ok((report, EXIT_OK))
        }
        None => Ok((report, EXIT_NEGATIVE)),
    }
}

fn cmd_verify_ndg(ctx: &Context, path: &Path, cap: u64) -> CmdResult {
    let spec = formats::parse_events(&read(path)?).map_err(at(path))?;
    let mut report = Report::new("verify-ndg", ctx.decimals);
    report
        .input("m", spec.m)
        .input("n", spec.n)
        .input("events", spec.matchings.len())
        .input(
            "graph",
            if spec.graph.is_some() {
                "explicit"
            } else {
                "conflict"
            },
        );

    let limits = Limits {
        enumeration_cap: cap,
        ..Limits::default()
    };
    if spec.matchings.len() > limits.graph_cap {
        return Err(plain(Error::SizeLimit {
            what: "exhaustive dependency graph verification",
            required: format!("{} events", spec.matchings.len()),
            cap: limits.graph_cap as u64,
        }));
    }
    let space = SampleSpace::enumerate_with_cap(spec.m, spec.n, cap).map_err(plain)?;
    let events = spec
        .matchings
        .iter()
        .map(|m| injection::canonical_event(&space, m).map(|c| c.into_event()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(plain)?;
    let g = match &spec.graph {
        Some(edges) => {
            Graph::from_edges(spec.matchings.len(), edges.iter().copied()).map_err(at(path))?
        }
        None => conflict_graph(&spec.matchings),
    };
    report
        .verdict("space_size", space.len())
        .verdict("graph_edges", g.edge_count())
        .verdict("graph_degree", g.max_degree());

    let verdict =
        lll::verify_negative_dependency_graph(&space, &events, &g, &limits).map_err(plain)?;
    match verdict {
        NdgVerdict::Holds => {
            report.verdict("negative_dependency_graph", "holds");
            Ok((report, EXIT_OK))
        }
        NdgVerdict::Violated(v) => {
            report
                .verdict("negative_dependency_graph", "violated")
                .verdict("violating_event", v.event + 1)
                .verdict("conditioned_on", one_based(&v.conditioned_on))
                .rational("conditional_probability", &v.conditional)
                .rational("probability", &v.unconditional);
            Ok((report, EXIT_NEGATIVE))
        }
    }
}

fn cmd_lll_check(ctx: &Context, path: &Path, weights: Option<&str>) -> CmdResult {
    let input = formats::parse_lll_input(&read(path)?).map_err(at(path))?;
    let n = input.p.len();
    let mut report = Report::new("lll-check", ctx.decimals);
    report.input("events", n).input("edges", input.edges.len());

    let x = match weights {
        Some(list) => Some(
            list.split(',')
                .map(|s| {
                    rational::parse(s).ok_or_else(|| {
                        plain(Error::Domain(format!("`{s}` is not a rational weight")))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => input.x.clone(),
    };
    report.input("weights", if x.is_some() { "given" } else { "search" });

    let g = Graph::from_edges(n, input.edges.iter().copied()).map_err(at(path))?;
    for (i, p) in input.p.iter().enumerate() {
        if !rational::is_probability(p) {
            return Err(at(path)(Error::Domain(format!(
                "p[{}] = {} is not a probability",
                i + 1,
                rational::render(p)
            ))));
        }
    }
    let d = g.max_degree();
    let p_max = input.p.iter().max().cloned().unwrap_or_else(Rational::zero);
    report
        .verdict("max_degree", d)
        .rational("p_max", &p_max)
        .tri(
            "symmetric_condition",
            lll::check_symmetric_condition(&p_max, d, &ctx.e),
        );

    let x = match x {
        Some(x) => WeightVector::new(x).map_err(plain)?,
        None => match lll::find_weights(&input.p, &g, lll::FIND_WEIGHTS_MAX_ITER) {
            Some(x) => {
                report.verdict("weights_found", true);
                x
            }
            None => {
                report.verdict("weights_found", false);
                return Ok((report, EXIT_NEGATIVE));
            }
        },
    };
    report.rationals("weights", x.as_slice());
    match lll::check_lll_condition(&input.p, &g, &x).map_err(plain)? {
        LllCondition::Holds { bound } => {
            report
                .verdict("lll_condition", "holds")
                .rational("avoidance_bound", &bound);
            Ok((report, EXIT_OK))
        }
        LllCondition::Violated { index } => {
            report
                .verdict("lll_condition", "violated")
                .verdict("violating_event", index + 1);
            Ok((report, EXIT_NEGATIVE))
        }
    }
}
