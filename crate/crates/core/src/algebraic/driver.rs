//! Component drivers: iterate a sweep until no new vertex turns nonzero.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::arith::{Arith, Exact, Float, Saturating};
use super::kernel::{self, Marks, SweepContext};
use super::{ArithmeticMode, MaskSet, StateVector, TraversalConfig, Variant};
use crate::combinatorial;
use crate::error::TraversalError;
use crate::graph::{ComponentPartition, Graph, VertexId};
use crate::trace::TraversalTrace;

/// Order in which `find_all_components` picks start vertices among the
/// vertices not yet assigned to a component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SeedRule {
    #[default]
    LowestLabel,
    HighestLabel,
    /// Seeded uniform shuffle of the labels.
    Shuffled(u64),
}

impl SeedRule {
    fn order(self, n: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..n).collect();
        match self {
            SeedRule::LowestLabel => {}
            SeedRule::HighestLabel => order.reverse(),
            SeedRule::Shuffled(seed) => order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed)),
        }
        order
    }
}

/// Traverses from `s` until the frontier is empty. Returns the component of
/// `s`, ascending, and the trace of every frontier-producing iteration.
pub fn find_connected_component(
    g: &Graph,
    s: VertexId,
    cfg: &TraversalConfig,
) -> Result<(Vec<VertexId>, TraversalTrace), TraversalError> {
    check_start(g, s)?;
    cfg.validate()?;
    let d = cfg.diagonal(g);
    let trace = match cfg.mode {
        ArithmeticMode::Exact => Engine::new(g, cfg, Exact::new(d)).run(s.index())?,
        ArithmeticMode::Saturate { cap } => {
            Engine::new(g, cfg, Saturating::new(d, cap)).run(s.index())?
        }
        ArithmeticMode::Float => Engine::new(g, cfg, Float::new(d)).run(s.index())?,
    };
    Ok((trace.visited(), trace))
}

/// Partitions `g` into connected components, traversing from a fresh seed
/// until every vertex is assigned. Components are numbered in discovery
/// order. With masking on, completed components stay masked.
pub fn find_all_components(
    g: &Graph,
    cfg: &TraversalConfig,
    seed_rule: SeedRule,
) -> Result<ComponentPartition, TraversalError> {
    cfg.validate()?;
    let d = cfg.diagonal(g);
    match cfg.mode {
        ArithmeticMode::Exact => Engine::new(g, cfg, Exact::new(d)).run_all(seed_rule),
        ArithmeticMode::Saturate { cap } => {
            Engine::new(g, cfg, Saturating::new(d, cap)).run_all(seed_rule)
        }
        ArithmeticMode::Float => Engine::new(g, cfg, Float::new(d)).run_all(seed_rule),
    }
}

/// Mask for the iteration following the last one in `trace`: every visited
/// vertex except the newest frontier, i.e. `C^(k-1)`. Empty when masking is
/// off or at `k = 0`.
pub fn update_mask(trace: &TraversalTrace, cfg: &TraversalConfig) -> MaskSet {
    let k = trace.iteration_count();
    if !cfg.masking || k == 0 {
        return MaskSet::empty(trace.vertex_count());
    }
    MaskSet::from_vertices(trace.vertex_count(), trace.visited_through(k - 1))
}

fn check_start(g: &Graph, s: VertexId) -> Result<(), TraversalError> {
    if g.contains(s) {
        Ok(())
    } else {
        Err(TraversalError::StartOutOfRange {
            start: s.label(),
            n: g.vertex_count(),
        })
    }
}

struct Engine<'a, A: Arith> {
    graph: &'a Graph,
    cfg: &'a TraversalConfig,
    arith: A,
    values: Vec<A::Value>,
    visited: Vec<bool>,
    masked: Vec<bool>,
    marks: Marks,
}

impl<'a, A: Arith> Engine<'a, A> {
    fn new(graph: &'a Graph, cfg: &'a TraversalConfig, arith: A) -> Self {
        let n = graph.vertex_count();
        Engine {
            graph,
            cfg,
            values: vec![arith.zero(); n],
            arith,
            visited: vec![false; n],
            masked: vec![false; n],
            marks: Marks::new(n),
        }
    }

    fn run_all(mut self, seed_rule: SeedRule) -> Result<ComponentPartition, TraversalError> {
        let n = self.graph.vertex_count();
        let mut members = Vec::new();
        for s in seed_rule.order(n) {
            if self.visited[s] {
                continue;
            }
            let trace = self.run(s)?;
            let component = trace.visited();
            if self.cfg.masking {
                for v in &component {
                    self.masked[v.index()] = true;
                }
            }
            members.push(component);
        }
        Ok(ComponentPartition::from_members(n, members))
    }

    fn snapshot(&self, k: usize, s: usize) -> Option<StateVector> {
        self.cfg.snapshot.then(|| {
            StateVector::new(A::wrap(self.values.clone()), k, VertexId::from_index(s))
        })
    }

    fn run(&mut self, s: usize) -> Result<TraversalTrace, TraversalError> {
        let n = self.graph.vertex_count();
        let signed = self.cfg.variant.is_signed();
        self.values[s] = self.arith.diagonal();
        self.visited[s] = true;
        let mut component = vec![s as u32];
        let mut trace = TraversalTrace::new(n, VertexId::from_index(s), self.snapshot(0, s));
        let mut live = vec![s as u32];
        let mut frontier = vec![s as u32];
        let mut previous: Vec<u32> = Vec::new();
        let mut k = 0usize;
        loop {
            if self.cfg.masking {
                for &i in &previous {
                    self.masked[i as usize] = true;
                }
                live.retain(|&i| !self.masked[i as usize]);
            }
            let ctx = SweepContext {
                graph: self.graph,
                start: s,
                masked: &self.masked,
                signed,
            };
            let processed = if self.cfg.variant.is_ordered() {
                kernel::ordered(&self.arith, &ctx, &mut self.values, Some(&live), &mut self.marks)
            } else {
                kernel::jacobi(&self.arith, &ctx, &mut self.values, Some(&live), &mut self.marks)
            };
            k += 1;
            let mut next = Vec::new();
            live.clear();
            for &i in &processed {
                let value = &self.values[i as usize];
                if !self.arith.is_valid(value, signed) {
                    return Err(TraversalError::NonFinite {
                        vertex: i + 1,
                        iteration: k,
                    });
                }
                if !self.arith.is_zero(value) {
                    live.push(i);
                    if !self.visited[i as usize] {
                        next.push(i);
                    }
                }
            }
            if let Some(period) = self.cfg.regularize_every {
                if matches!(self.cfg.mode, ArithmeticMode::Float) && k.is_multiple_of(period as usize) {
                    for &i in &live {
                        self.arith.rescale(&mut self.values[i as usize], period);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            for &i in &next {
                self.visited[i as usize] = true;
            }
            component.extend_from_slice(&next);
            trace.push(
                next.iter().map(|&i| VertexId::from_index(i as usize)).collect(),
                self.snapshot(k, s),
            );
            previous = std::mem::replace(&mut frontier, next);
        }
        for &i in &component {
            self.values[i as usize] = self.arith.zero();
        }
        if self.cfg.cross_check && signed {
            self.cross_check(&trace)?;
        }
        Ok(trace)
    }

    fn cross_check(&self, trace: &TraversalTrace) -> Result<(), TraversalError> {
        let reference = match self.cfg.variant {
            Variant::Jacobi => combinatorial::combinatorial_bfs(self.graph, trace.start()),
            _ => combinatorial::combinatorial_ccs(self.graph, trace.start()),
        };
        let ours = trace.frontiers();
        let theirs = reference.frontiers();
        let labels = |f: Option<&Vec<VertexId>>| -> Vec<u32> {
            f.map(|f| f.iter().map(|v| v.label()).collect())
                .unwrap_or_default()
        };
        for k in 0..ours.len().max(theirs.len()) {
            if ours.get(k) != theirs.get(k) {
                return Err(TraversalError::ReferenceMismatch {
                    iteration: k,
                    algebraic: labels(ours.get(k)),
                    reference: labels(theirs.get(k)),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::vertex_set;
    use crate::union_find::components_union_find;

    fn v(label: u32) -> VertexId {
        VertexId::new(label)
    }

    #[test]
    fn example_bfs_takes_four_iterations() {
        let g = fixtures::example_graph();
        let (c, trace) = find_connected_component(&g, v(1), &TraversalConfig::jacobi()).unwrap();
        assert_eq!(c, vertex_set(1..=8));
        assert_eq!(trace.iteration_count(), 4);
        assert_eq!(
            trace.frontiers(),
            vec![
                vertex_set([1]),
                vertex_set([2]),
                vertex_set([3, 6]),
                vertex_set([4, 5, 7]),
                vertex_set([8])
            ]
        );
    }

    #[test]
    fn example_ccs_takes_two_iterations() {
        let g = fixtures::example_graph();
        let cfg = TraversalConfig::gauss_seidel().with_snapshots(true);
        let (c, trace) = find_connected_component(&g, v(1), &cfg).unwrap();
        assert_eq!(c, vertex_set(1..=8));
        assert_eq!(trace.iteration_count(), 2);
        let x2 = trace.records()[2].state.as_ref().unwrap();
        assert_eq!(
            x2.exact_i64().unwrap(),
            vec![10, -52, 200, -400, -16, 200, -928, 1856]
        );
    }

    #[test]
    fn single_vertex_has_no_iterations() {
        let g = Graph::from_edges(1, &[], 2).unwrap();
        for cfg in [TraversalConfig::jacobi(), TraversalConfig::detection()] {
            let (c, trace) = find_connected_component(&g, v(1), &cfg).unwrap();
            assert_eq!(c, vertex_set([1]));
            assert_eq!(trace.iteration_count(), 0);
        }
    }

    #[test]
    fn start_out_of_range() {
        let g = fixtures::path5();
        assert_eq!(
            find_connected_component(&g, v(6), &TraversalConfig::jacobi()).unwrap_err(),
            TraversalError::StartOutOfRange { start: 6, n: 5 }
        );
    }

    #[test]
    fn all_components_small_cases() {
        let g = Graph::from_edges(3, &[(1, 2)], 2).unwrap();
        let p = find_all_components(&g, &TraversalConfig::detection(), SeedRule::LowestLabel).unwrap();
        assert_eq!(p.count(), 2);
        assert!(p.same_partition(&components_union_find(&g)));
        let p = find_all_components(&fixtures::example_graph(), &TraversalConfig::gauss_seidel(), SeedRule::HighestLabel)
            .unwrap();
        assert_eq!(p.count(), 1);
    }

    #[test]
    fn seed_rule_sets_discovery_order() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)], 2).unwrap();
        let low = find_all_components(&g, &TraversalConfig::detection(), SeedRule::LowestLabel).unwrap();
        assert_eq!(low.members()[0], vertex_set([1, 2]));
        let high = find_all_components(&g, &TraversalConfig::detection(), SeedRule::HighestLabel).unwrap();
        assert_eq!(high.members()[0], vertex_set([3, 4]));
        assert!(low.same_partition(&high));
    }

    #[test]
    fn mask_after_first_ccs_iteration() {
        let cfg = TraversalConfig::gauss_seidel().with_masking(true);
        let mut trace = TraversalTrace::new(8, v(1), None);
        assert!(update_mask(&trace, &cfg).is_empty());
        trace.push(vertex_set([2, 3, 4, 6, 7, 8]), None);
        assert_eq!(update_mask(&trace, &cfg).vertices(), vertex_set([1]));
        assert!(update_mask(&trace, &TraversalConfig::gauss_seidel()).is_empty());
        trace.push(vertex_set([5]), None);
        assert_eq!(
            update_mask(&trace, &cfg).vertices(),
            vertex_set([1, 2, 3, 4, 6, 7, 8])
        );
    }

    #[test]
    fn cancellation_is_caught_by_cross_check() {
        // Two length-2 chains and one length-3 chain into vertex 6 cancel at d = 2.
        let g = Graph::from_edges(6, &[(1, 2), (2, 6), (1, 3), (3, 6), (1, 4), (4, 5), (5, 6)], 2)
            .unwrap();
        let raw = TraversalConfig::gauss_seidel().with_cross_check(false);
        let (_, trace) = find_connected_component(&g, v(1), &raw).unwrap();
        assert_eq!(trace.frontier(1), vertex_set([2, 3, 4, 5]).as_slice());
        let checked = raw.clone().with_cross_check(true);
        assert!(matches!(
            find_connected_component(&g, v(1), &checked),
            Err(TraversalError::ReferenceMismatch { iteration: 1, .. })
        ));
        let (_, unsigned) = find_connected_component(&g, v(1), &TraversalConfig::detection()).unwrap();
        assert_eq!(unsigned.frontier(1), vertex_set([2, 3, 4, 5, 6]).as_slice());
        let (_, d3) = find_connected_component(&g, v(1), &checked.with_d(3)).unwrap();
        assert_eq!(d3.iteration_count(), 1);
    }
}
