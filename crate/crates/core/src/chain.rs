//! Brute-force chain machinery for checking state values against the
//! chains that carry them.
//!
//! Transmitting a value `v` along a chain of length `l` multiplies it by
//! `-d` once per edge, so the chain contributes `v * (-d)^l` to the value
//! at its last vertex. Summing contributions over the right chain sets
//! reproduces the entries computed by the sweeps.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebraic::{gauss_seidel_step, jacobi_step, MaskSet, StateVector, TraversalConfig};
use crate::error::OracleError;
use crate::fixtures;
use crate::graph::{Graph, VertexId};

/// Enumeration refuses graphs larger than this.
pub const MAX_ENUMERATION_VERTICES: usize = 16;

/// A chain `i_0, ..., i_l` of adjacent vertices. Simple unless built with
/// [`Chain::walk`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    vertices: Vec<VertexId>,
    walk: bool,
}

/// Direction of a chain's first step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// `i_0 < i_1`: the first step reads a value updated in this sweep.
    Ascending,
    /// `i_0 > i_1`: the first step reads the previous iterate.
    Descending,
}

impl Chain {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        assert!(!vertices.is_empty(), "a chain has at least one vertex");
        Chain {
            vertices,
            walk: false,
        }
    }

    /// A walk: vertices and edges may repeat.
    pub fn walk(vertices: Vec<VertexId>) -> Self {
        Chain {
            walk: true,
            ..Chain::new(vertices)
        }
    }

    pub fn from_labels(labels: &[u32]) -> Self {
        Chain::new(labels.iter().map(|&l| VertexId::new(l)).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_walk(&self) -> bool {
        self.walk
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    /// Labels strictly ascend along the chain.
    pub fn is_correct(&self) -> bool {
        self.vertices.windows(2).all(|w| w[0] < w[1])
    }

    pub fn kind(&self) -> Option<ChainKind> {
        match self.vertices.get(1) {
            None => None,
            Some(&next) if self.vertices[0] < next => Some(ChainKind::Ascending),
            Some(_) => Some(ChainKind::Descending),
        }
    }

    /// Consecutive vertices are adjacent in `g`, and no vertex repeats
    /// unless this is a walk.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if !self.vertices.iter().all(|&v| g.contains(v)) {
            return false;
        }
        if !self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        if !self.walk {
            let mut sorted = self.vertices.clone();
            sorted.sort_unstable();
            sorted.dedup();
            return sorted.len() == self.vertices.len();
        }
        true
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        f.write_str(&labels.join("-"))
    }
}

/// All chains found between two vertices, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSet {
    pub chains: Vec<Chain>,
}

impl ChainSet {
    /// Length of the longest chain, if any.
    pub fn max_length(&self) -> Option<usize> {
        self.chains.iter().map(Chain::len).max()
    }
}

/// Every simple chain from `from` to `to` with at most `max_len` edges;
/// with `correct_only`, only label-ascending chains.
pub fn enumerate_simple_chains(
    g: &Graph,
    from: VertexId,
    to: VertexId,
    correct_only: bool,
    max_len: Option<usize>,
) -> Result<ChainSet, OracleError> {
    let n = g.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    for v in [from, to] {
        if !g.contains(v) {
            return Err(OracleError::UnknownVertex(v.label()));
        }
    }
    let limit = max_len.unwrap_or(n);
    let mut chains = Vec::new();
    let mut path = vec![from];
    let mut on_path = vec![false; n];
    on_path[from.index()] = true;
    extend(g, to, correct_only, limit, &mut path, &mut on_path, &mut chains);
    chains.sort();
    Ok(ChainSet { chains })
}

fn extend(
    g: &Graph,
    to: VertexId,
    correct_only: bool,
    limit: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Chain>,
) {
    let tail = *path.last().expect("path is never empty");
    if tail == to {
        out.push(Chain::new(path.clone()));
        return;
    }
    if path.len() > limit {
        return;
    }
    for next in g.neighbors(tail) {
        if on_path[next.index()] || (correct_only && next < tail) {
            continue;
        }
        on_path[next.index()] = true;
        path.push(next);
        extend(g, to, correct_only, limit, path, on_path, out);
        path.pop();
        on_path[next.index()] = false;
    }
}

/// Transmits `v` along `c`, multiplying by `-d` at each edge.
pub fn chain_traverse(c: &Chain, v: &BigInt, d: u64) -> BigInt {
    let step = -BigInt::from(d);
    let mut value = v.clone();
    for _ in 0..c.len() {
        value *= &step;
    }
    value
}

/// A chain together with the value it transmits and what it delivers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainContribution {
    pub chain: Chain,
    pub transmitted: BigInt,
    pub contribution: BigInt,
    pub kind: Option<ChainKind>,
}

impl ChainContribution {
    pub fn new(chain: Chain, transmitted: BigInt, d: u64) -> Self {
        let contribution = chain_traverse(&chain, &transmitted, d);
        ChainContribution {
            kind: chain.kind(),
            chain,
            transmitted,
            contribution,
        }
    }
}

/// Contributions grouped by the chain's source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContributionSum {
    pub per_source: Vec<(VertexId, BigInt)>,
    pub total: BigInt,
}

pub fn contribution_sum(contributions: &[ChainContribution]) -> ContributionSum {
    let mut per_source: Vec<(VertexId, BigInt)> = Vec::new();
    for c in contributions {
        let src = c.chain.first();
        match per_source.iter_mut().find(|(s, _)| *s == src) {
            Some((_, sum)) => *sum += &c.contribution,
            None => per_source.push((src, c.contribution.clone())),
        }
    }
    per_source.sort_by_key(|(s, _)| *s);
    let total = per_source.iter().map(|(_, x)| x).sum();
    ContributionSum { per_source, total }
}

/// One named expected/actual comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn check<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        self.checks.push(Check {
            name: name.into(),
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {}: expected={} actual={}",
                c.name, c.expected, c.actual
            )?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn initial(g: &Graph, s: VertexId, d: u64) -> StateVector {
    let mut x = vec![0i64; g.vertex_count()];
    x[s.index()] = d as i64;
    StateVector::from_i64(&x, 0, s)
}

fn pow(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// Shortest-path distances and counts from `s` by a layered sweep.
fn shortest_path_counts(g: &Graph, s: VertexId) -> (Vec<Option<usize>>, Vec<BigInt>) {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    let mut count = vec![BigInt::zero(); n];
    dist[s.index()] = Some(0);
    count[s.index()] = BigInt::one();
    let mut layer = vec![s];
    let mut depth = 0;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &u in &layer {
            for w in g.neighbors(u) {
                if dist[w.index()].is_none() {
                    dist[w.index()] = Some(depth + 1);
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        for &w in &next {
            let total: BigInt = g
                .neighbors(w)
                .filter(|u| dist[u.index()] == Some(depth))
                .map(|u| count[u.index()].clone())
                .sum();
            count[w.index()] = total;
        }
        layer = next;
        depth += 1;
    }
    (dist, count)
}

/// Checks, for every vertex reached by exact Jacobi iterations from `s`,
/// that it first turns nonzero at iteration `r` equal to its distance from
/// `s`, with value `P * (-1)^r * d^(r+1)` where `P` counts shortest paths.
pub fn verify_first_arrivals(g: &Graph, s: VertexId, d: u64) -> VerificationReport {
    let mut report = VerificationReport::new(format!("first-arrival values from vertex {s}, d={d}"));
    let n = g.vertex_count();
    let cfg = TraversalConfig::jacobi().with_d(d);
    let mask = MaskSet::empty(n);
    let (dist, count) = shortest_path_counts(g, s);
    let mut first: Vec<Option<(usize, BigInt)>> = vec![None; n];
    first[s.index()] = Some((0, BigInt::from(d)));
    let mut x = initial(g, s, d);
    for _ in 0..n {
        let next = jacobi_step(g, &x, &cfg, &mask).expect("exact Jacobi step cannot fail");
        let values = next.exact().expect("exact mode");
        for (i, value) in values.iter().enumerate() {
            if first[i].is_none() && !value.is_zero() {
                first[i] = Some((next.iteration, value.clone()));
            }
        }
        x = next;
    }
    for v in g.vertices() {
        if v == s {
            continue;
        }
        let i = v.index();
        match (dist[i], &first[i]) {
            (Some(r), Some((k, value))) => {
                report.check(format!("vertex {v} first iteration"), r, *k);
                let sign = if r % 2 == 0 { 1 } else { -1 };
                let expected = &count[i] * pow(sign, 1) * pow(d as i64, r + 1);
                report.check(format!("vertex {v} first value"), expected, value.clone());
            }
            (None, None) => {}
            (r, k) => report.check(
                format!("vertex {v} reachability"),
                r.is_some(),
                k.is_some(),
            ),
        }
    }
    report
}

/// Worked one-sweep decompositions on two small fixtures:
///
/// * path `1-2-3` started at 2, where the walk `2-1-2-3` and the chain
///   `2-3` give `x_3 = -d^2 - d^4`;
/// * the graph with correct chains `1-2-5` and `1-3-4-5`, started at 1,
///   where `x_5 = d^3 - d^4`.
pub fn verify_walk_decompositions(d: u64) -> VerificationReport {
    let mut report = VerificationReport::new(format!("one-sweep chain decompositions, d={d}"));
    let cfg = TraversalConfig::gauss_seidel().with_d(d);
    let dd = BigInt::from(d);

    let g = fixtures::walk_fixture(d);
    let s = VertexId::new(2);
    let x1 = gauss_seidel_step(&g, &initial(&g, s, d), &cfg, &MaskSet::empty(3))
        .expect("exact sweep cannot fail");
    let x1 = x1.exact().expect("exact mode");
    let closed_x3 = -(pow(d as i64, 2) + pow(d as i64, 4));
    report.check("walk fixture x_3 = -d^2 - d^4", closed_x3.clone(), x1[2].clone());
    report.check(
        "walk fixture x_2 = d + d^3",
        &dd + pow(d as i64, 3),
        x1[1].clone(),
    );
    let loop_walk = ChainContribution::new(Chain::walk(vertices(&[2, 1, 2])), dd.clone(), d);
    report.check("loop 2-1-2 contributes d^3", pow(d as i64, 3), loop_walk.contribution.clone());
    let parts = [
        ChainContribution::new(Chain::walk(vertices(&[2, 1, 2, 3])), dd.clone(), d),
        ChainContribution::new(Chain::from_labels(&[2, 3]), dd.clone(), d),
    ];
    report.check(
        "walk fixture contributions sum to x_3",
        x1[2].clone(),
        contribution_sum(&parts).total,
    );

    let g = fixtures::two_chain_fixture(d);
    let s = VertexId::new(1);
    let x1 = gauss_seidel_step(&g, &initial(&g, s, d), &cfg, &MaskSet::empty(5))
        .expect("exact sweep cannot fail");
    let x1 = x1.exact().expect("exact mode");
    let closed_x5 = pow(d as i64, 3) - pow(d as i64, 4);
    report.check("two-chain fixture x_5 = d^3 - d^4", closed_x5, x1[4].clone());
    let chains = enumerate_simple_chains(&g, s, VertexId::new(5), true, None)
        .expect("fixture is small");
    let listed: Vec<String> = chains.chains.iter().map(Chain::to_string).collect();
    report.check(
        "two-chain fixture correct chains",
        "1-2-5, 1-3-4-5".to_string(),
        listed.join(", "),
    );
    let parts: Vec<ChainContribution> = chains
        .chains
        .into_iter()
        .map(|c| ChainContribution::new(c, dd.clone(), d))
        .collect();
    report.check(
        "two-chain fixture contributions sum to x_5",
        x1[4].clone(),
        contribution_sum(&parts).total,
    );
    report
}

/// From a start vertex below all of its neighbors, one Gauss-Seidel sweep
/// can only move along ascending chains, so each entry equals the sum of
/// `d * (-d)^l` over the correct chains reaching it.
pub fn verify_first_sweep_chain_sums(g: &Graph, s: VertexId, d: u64) -> Result<VerificationReport, OracleError> {
    let mut report = VerificationReport::new(format!("first-sweep chain sums from vertex {s}, d={d}"));
    report.check(
        "start is a local label minimum",
        true,
        g.neighbors(s).all(|w| w > s),
    );
    let cfg = TraversalConfig::gauss_seidel().with_d(d);
    let x1 = gauss_seidel_step(g, &initial(g, s, d), &cfg, &MaskSet::empty(g.vertex_count()))
        .expect("exact sweep cannot fail");
    let x1 = x1.exact().expect("exact mode");
    let dd = BigInt::from(d);
    for v in g.vertices() {
        if v == s {
            continue;
        }
        let expected = if v < s {
            BigInt::zero()
        } else {
            let chains = enumerate_simple_chains(g, s, v, true, None)?;
            let parts: Vec<ChainContribution> = chains
                .chains
                .into_iter()
                .map(|c| ChainContribution::new(c, dd.clone(), d))
                .collect();
            contribution_sum(&parts).total
        };
        report.check(format!("vertex {v}"), expected, x1[v.index()].clone());
    }
    Ok(report)
}

fn vertices(labels: &[u32]) -> Vec<VertexId> {
    labels.iter().map(|&l| VertexId::new(l)).collect()
}
