//! Line-oriented text formats. `#` starts a comment; blank lines are ignored.
//! All indices in files are 1-based.
//!
//! Matrix:
//! ```text
//! n
//! a11 a12 ... a1n
//! ...
//! ```
//!
//! Hypergraph:
//! ```text
//! n r
//! v1 v2 ... vr      # one edge per line
//! ```
//!
//! Events:
//! ```text
//! m n
//! r i1 j1 ... ir jr # one matching per line: i_k -> j_k
//! GRAPH             # optional; edges between matchings follow
//! a b
//! ```
//!
//! Local lemma input:
//! ```text
//! p 1/8 1/8         # event probabilities (p/q, integers or decimals)
//! x 1/4 1/4         # optional weights
//! edge 1 2          # repeatable
//! ```

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::injection::Matching;
use crate::latin::IntMatrix;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn parse<T: FromStr>(&self, what: &str) -> Result<T> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected {what}, found `{}`", self.text)))
    }

    /// A 1-based index in `1..=bound`, returned 0-based.
    fn index(&self, bound: usize, what: &str) -> Result<usize> {
        let v: usize = self.parse(what)?;
        if v == 0 || v > bound {
            return Err(self.error(format!("{what} {v} is outside 1..={bound}")));
        }
        Ok(v - 1)
    }

    fn rational(&self) -> Result<Rational> {
        rational::parse(self.text)
            .ok_or_else(|| self.error(format!("expected a rational, found `{}`", self.text)))
    }
}

/// Non-empty lines split into tokens, comments removed.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .filter_map(|(no, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut toks = Vec::new();
            let mut start = None;
            for (pos, ch) in content
                .char_indices()
                .chain(std::iter::once((content.len(), ' ')))
            {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        toks.push(Token {
                            line: no + 1,
                            column: content[..s].chars().count() + 1,
                            text: &content[s..pos],
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!toks.is_empty()).then_some(toks)
        })
        .collect()
}

fn end_of_input(text: &str, message: &str) -> Error {
    Error::Parse {
        line: text.lines().count() + 1,
        column: 1,
        message: message.to_string(),
    }
}

fn expect_len(toks: &[Token<'_>], len: usize, what: &str) -> Result<()> {
    if toks.len() != len {
        let at = toks.get(len).unwrap_or(&toks[toks.len() - 1]);
        return Err(at.error(format!(
            "expected {len} values for {what}, found {}",
            toks.len()
        )));
    }
    Ok(())
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let all = lines(text);
    let mut it = all.iter();
    let header = it
        .next()
        .ok_or_else(|| end_of_input(text, "missing size line"))?;
    expect_len(header, 1, "the size line")?;
    let n: usize = header[0].parse("a matrix size")?;
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let toks = it
            .next()
            .ok_or_else(|| end_of_input(text, &format!("expected {n} rows, found {k}")))?;
        expect_len(toks, n, "a matrix row")?;
        rows.push(
            toks.iter()
                .map(|t| t.parse::<i64>("an integer entry"))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if let Some(extra) = it.next() {
        return Err(extra[0].error("unexpected content after the last row"));
    }
    IntMatrix::new(rows)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let all = lines(text);
    let mut it = all.iter();
    let header = it
        .next()
        .ok_or_else(|| end_of_input(text, "missing `n r` line"))?;
    expect_len(header, 2, "the `n r` line")?;
    let n: usize = header[0].parse("a vertex count")?;
    let r: usize = header[1].parse("an edge size")?;
    if r == 0 {
        return Err(header[1].error("edge size must be at least 1"));
    }
    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for toks in it {
        expect_len(toks, r, "an edge")?;
        let mut edge = toks
            .iter()
            .map(|t| t.index(n, "vertex"))
            .collect::<Result<Vec<_>>>()?;
        edge.sort_unstable();
        if edge.windows(2).any(|w| w[0] == w[1]) {
            return Err(toks[0].error("edge repeats a vertex"));
        }
        if !seen.insert(edge.clone()) {
            return Err(toks[0].error("duplicate edge"));
        }
        edges.push(edge);
    }
    Hypergraph::new(n, r, edges)
}

/// Matchings over `I([m], [n])` and an optional explicit graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventsSpec {
    pub m: usize,
    pub n: usize,
    pub matchings: Vec<Matching>,
    pub graph: Option<Vec<(usize, usize)>>,
}

pub fn parse_events(text: &str) -> Result<EventsSpec> {
    let all = lines(text);
    let mut it = all.iter();
    let header = it
        .next()
        .ok_or_else(|| end_of_input(text, "missing `m n` line"))?;
    expect_len(header, 2, "the `m n` line")?;
    let m: usize = header[0].parse("a domain size")?;
    let n: usize = header[1].parse("a codomain size")?;
    if m > n {
        return Err(header[0].error(format!("m = {m} exceeds n = {n}")));
    }
    let mut matchings = Vec::new();
    let mut graph: Option<Vec<(usize, usize)>> = None;
    for toks in it {
        if toks[0].text.eq_ignore_ascii_case("GRAPH") {
            if graph.is_some() {
                return Err(toks[0].error("second GRAPH section"));
            }
            expect_len(toks, 1, "the GRAPH marker")?;
            graph = Some(Vec::new());
            continue;
        }
        if let Some(edges) = graph.as_mut() {
            expect_len(toks, 2, "a graph edge")?;
            let a = toks[0].index(usize::MAX, "event")?;
            let b = toks[1].index(usize::MAX, "event")?;
            edges.push((a, b));
            continue;
        }
        let r: usize = toks[0].parse("a matching size")?;
        expect_len(toks, 1 + 2 * r, "a matching")?;
        let pairs = toks[1..]
            .chunks(2)
            .map(|c| {
                Ok((
                    c[0].index(m, "domain point")?,
                    c[1].index(n, "codomain point")?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let matching = Matching::from_pairs(&pairs)
            .map_err(|e| toks[0].error(format!("invalid matching: {e}")))?;
        matchings.push(matching);
    }
    if let Some(edges) = &graph {
        if let Some(&(a, b)) = edges
            .iter()
            .find(|&&(a, b)| a >= matchings.len() || b >= matchings.len())
        {
            return Err(Error::domain(format!(
                "graph edge {{{}, {}}} refers to a missing event",
                a + 1,
                b + 1
            )));
        }
    }
    Ok(EventsSpec {
        m,
        n,
        matchings,
        graph,
    })
}

/// Probabilities, optional weights and a graph for the local lemma check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LllInput {
    pub p: Vec<Rational>,
    pub x: Option<Vec<Rational>>,
    pub edges: Vec<(usize, usize)>,
}

pub fn parse_lll_input(text: &str) -> Result<LllInput> {
    let mut p: Option<Vec<Rational>> = None;
    let mut x = None;
    let mut raw_edges = Vec::new();
    for toks in lines(text) {
        let key = toks[0].text.to_ascii_lowercase();
        match key.as_str() {
            "p" | "x" => {
                let values = toks[1..]
                    .iter()
                    .map(Token::rational)
                    .collect::<Result<Vec<_>>>()?;
                let slot = if key == "p" { &mut p } else { &mut x };
                if slot.is_some() {
                    return Err(toks[0].error(format!("second `{key}` line")));
                }
                *slot = Some(values);
            }
            "edge" => {
                expect_len(&toks, 3, "an edge")?;
                raw_edges.push((toks[1], toks[2]));
            }
            _ => return Err(toks[0].error(format!("unknown key `{}`", toks[0].text))),
        }
    }
    let p = p.ok_or_else(|| end_of_input(text, "missing `p` line"))?;
    let edges = raw_edges
        .iter()
        .map(|(a, b)| Ok((a.index(p.len(), "event")?, b.index(p.len(), "event")?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LllInput { p, x, edges })
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.r());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn write_matrix(a: &IntMatrix) -> String {
    let mut out = format!("{}\n", a.n());
    for row in a.rows().take(a.n()) {
        let line: Vec<String> = row.iter().map(i64::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
