use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;

/// Number of skipped candidates before the next success in a run of
/// Bernoulli(q) trials.
fn geometric_skip(rng: &mut ChaCha8Rng, q: f64) -> u64 {
    if q >= 1.0 {
        return 0;
    }
    if q <= 0.0 {
        return u64::MAX;
    }
    let u: f64 = 1.0 - rng.random::<f64>();
    let skip = (u.ln() / (1.0 - q).ln()).floor();
    if skip >= u64::MAX as f64 {
        u64::MAX
    } else {
        skip as u64
    }
}

/// Adds each pair of `group` independently with probability `q`.
fn sample_pairs(rng: &mut ChaCha8Rng, group: &[u32], q: f64, out: &mut Vec<(u32, u32)>) {
    let s = group.len() as u64;
    let mut next = geometric_skip(rng, q);
    let mut offset = 0u64;
    for i in 0..s {
        let row = s - 1 - i;
        while next < offset + row {
            let j = i + 1 + (next - offset);
            out.push((group[i as usize], group[j as usize]));
            next = next.saturating_add(1).saturating_add(geometric_skip(rng, q));
        }
        offset += row;
    }
}

/// Seeded random simple graph on labels `1..=n`.
///
/// `edge_density` is the expected fraction of all `n(n-1)/2` pairs present.
/// With `component_count = Some(k)` the vertices are split into `k` random
/// nonempty groups, each joined by a random spanning tree, and extra
/// in-group edges are drawn to approach the requested density; the result
/// has exactly `k` components. Without it, pairs are drawn independently.
/// Edges come back sorted with `u < v`.
pub fn generate_random_graph(
    n: usize,
    edge_density: f64,
    component_count: Option<usize>,
    seed: u64,
) -> Result<Vec<(u32, u32)>, GenerateError> {
    if n == 0 || n > u32::MAX as usize {
        return Err(GenerateError::Infeasible(format!("vertex count {n}")));
    }
    if !(0.0..=1.0).contains(&edge_density) {
        return Err(GenerateError::Infeasible(format!(
            "edge density {edge_density} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let pairs = |s: usize| s as f64 * (s as f64 - 1.0) / 2.0;

    match component_count {
        None => {
            let all: Vec<u32> = (1..=n as u32).collect();
            sample_pairs(&mut rng, &all, edge_density, &mut edges);
        }
        Some(k) => {
            if k == 0 || k > n {
                return Err(GenerateError::Infeasible(format!(
                    "{k} components on {n} vertices"
                )));
            }
            let mut order: Vec<u32> = (1..=n as u32).collect();
            order.shuffle(&mut rng);
            let mut cuts: Vec<usize> = rand::seq::index::sample(&mut rng, n - 1, k - 1)
                .into_iter()
                .map(|c| c + 1)
                .collect();
            cuts.sort_unstable();
            cuts.push(n);
            let mut groups = Vec::with_capacity(k);
            let mut lo = 0;
            for hi in cuts {
                groups.push(&order[lo..hi]);
                lo = hi;
            }
            for g in &groups {
                for i in 1..g.len() {
                    let parent = g[rng.random_range(0..i)];
                    edges.push((parent, g[i]));
                }
            }
            let within: f64 = groups.iter().map(|g| pairs(g.len())).sum();
            let target = edge_density * pairs(n);
            let extra = target - (n - k) as f64;
            if within > 0.0 && extra > 0.0 {
                let q = (extra / within).min(1.0);
                for g in &groups {
                    sample_pairs(&mut rng, g, q, &mut edges);
                }
            }
        }
    }
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::union_find::components_union_find;

    #[test]
    fn deterministic() {
        let a = generate_random_graph(10, 0.3, Some(1), 7).unwrap();
        let b = generate_random_graph(10, 0.3, Some(1), 7).unwrap();
        assert_eq!(a, b);
        let g = Graph::from_edges(10, &a, 2).unwrap();
        assert_eq!(components_union_find(&g).count(), 1);
        assert_ne!(a, generate_random_graph(10, 0.3, Some(1), 8).unwrap());
    }

    #[test]
    fn exact_component_count() {
        for k in [1, 2, 5, 10, 100] {
            let e = generate_random_graph(100, 0.05, Some(k), 42).unwrap();
            let g = Graph::from_edges(100, &e, 2).unwrap();
            assert_eq!(components_union_find(&g).count(), k);
        }
    }

    #[test]
    fn zero_density_is_edgeless() {
        assert!(generate_random_graph(20, 0.0, None, 1).unwrap().is_empty());
    }

    #[test]
    fn full_density_is_complete() {
        assert_eq!(generate_random_graph(12, 1.0, None, 3).unwrap().len(), 66);
    }

    #[test]
    fn approximate_density() {
        let e = generate_random_graph(400, 0.1, None, 5).unwrap();
        let expected = 0.1 * 400.0 * 399.0 / 2.0;
        assert!((e.len() as f64 - expected).abs() < 0.1 * expected);
    }

    #[test]
    fn infeasible() {
        assert!(generate_random_graph(0, 0.1, None, 1).is_err());
        assert!(generate_random_graph(5, 1.5, None, 1).is_err());
        assert!(generate_random_graph(5, 0.1, Some(6), 1).is_err());
        assert!(generate_random_graph(5, 0.1, Some(0), 1).is_err());
    }
}
