use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LopspOperation;
use crate::surface_map::{EmbeddedGraph, NONE};

/// A path from `v1` through `v0` to `v2`; `darts[..split]` runs from `v1` to
/// `v0`, `darts[split..]` from `v0` to `v2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPath {
    pub darts: Vec<usize>,
    pub split: usize,
}

impl CutPath {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self, g: &EmbeddedGraph) -> Vec<usize> {
        let mut v: Vec<usize> = self.darts.iter().map(|&d| g.tail(d)).collect();
        if let Some(&last) = self.darts.last() {
            v.push(g.head(last));
        }
        v
    }

    /// Checks that this is a cut-path of `op`: both halves are simple paths
    /// meeting only in `v0`.
    pub fn is_valid_for(&self, op: &LopspOperation) -> bool {
        let g = op.graph();
        let [v0, v1, v2] = op.specials();
        if self.split == 0 || self.split >= self.darts.len() {
            return false;
        }
        let chained = self.darts.windows(2).all(|w| g.head(w[0]) == g.tail(w[1]));
        let vs = self.vertices(g);
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        chained && sorted.len() == vs.len() && vs[0] == v1 && vs[self.split] == v0 && *vs.last().unwrap() == v2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutPathStrategy {
    /// Minimum total length.
    Minimal,
    /// Minimum total weight for edge weights drawn uniformly from `1..=6`
    /// with the given seed.
    Random(u64),
}

struct Arc {
    to: usize,
    cap: i32,
    cost: i64,
    dart: usize,
}

/// Two vertex-disjoint paths `v0 -> v1` and `v0 -> v2` of minimum total
/// weight, found by two shortest augmenting paths on the vertex-split graph.
pub fn find_cut_path(op: &LopspOperation, strategy: CutPathStrategy) -> CutPath {
    let g = op.graph();
    let [v0, v1, v2] = op.specials();
    let weight: Vec<i64> = match strategy {
        CutPathStrategy::Minimal => vec![1; g.dart_count()],
        CutPathStrategy::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut w = vec![0; g.dart_count()];
            for d in 0..g.dart_count() {
                if d < g.inv(d) {
                    w[d] = rng.gen_range(1..=6);
                    w[g.inv(d)] = w[d];
                }
            }
            w
        }
    };

    // node 2v is v_in, 2v+1 is v_out, the last node is the sink
    let nv = g.vertex_count();
    let sink = 2 * nv;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * nv + 1];
    let add = |arcs: &mut Vec<Arc>, adj: &mut Vec<Vec<usize>>, a: usize, b: usize, cost: i64, dart: usize| {
        adj[a].push(arcs.len());
        arcs.push(Arc { to: b, cap: 1, cost, dart });
        adj[b].push(arcs.len());
        arcs.push(Arc { to: a, cap: 0, cost: -cost, dart });
    };
    for v in 0..nv {
        if v != v0 {
            add(&mut arcs, &mut adj, 2 * v, 2 * v + 1, 0, NONE);
        }
    }
    for d in 0..g.dart_count() {
        add(&mut arcs, &mut adj, 2 * g.tail(d) + 1, 2 * g.head(d), weight[d], d);
    }
    add(&mut arcs, &mut adj, 2 * v1 + 1, sink, 0, NONE);
    add(&mut arcs, &mut adj, 2 * v2 + 1, sink, 0, NONE);

    let source = 2 * v0 + 1;
    for _ in 0..2 {
        // Bellman-Ford on the residual graph
        let mut dist = vec![i64::MAX; sink + 1];
        let mut via = vec![NONE; sink + 1];
        dist[source] = 0;
        for _ in 0..=sink {
            let mut changed = false;
            for u in 0..=sink {
                if dist[u] == i64::MAX {
                    continue;
                }
                for &a in &adj[u] {
                    let arc = &arcs[a];
                    if arc.cap > 0 && dist[u] + arc.cost < dist[arc.to] {
                        dist[arc.to] = dist[u] + arc.cost;
                        via[arc.to] = a;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        assert!(dist[sink] != i64::MAX, "2-connected operations have cut-paths");
        let mut x = sink;
        while x != source {
            let a = via[x];
            arcs[a].cap -= 1;
            arcs[a ^ 1].cap += 1;
            x = arcs[a ^ 1].to;
        }
    }

    // follow the flow from v0 to each end
    let mut halves: Vec<Vec<usize>> = Vec::new();
    for &first in &adj[source] {
        if first % 2 == 1 || arcs[first].cap != 0 {
            continue;
        }
        let mut path = vec![arcs[first].dart];
        let mut node = arcs[first].to;
        loop {
            let v = node / 2;
            if v == v1 || v == v2 {
                break;
            }
            let out = 2 * v + 1;
            let next = adj[out].iter().copied().find(|&a| a % 2 == 0 && arcs[a].cap == 0 && arcs[a].to != sink && arcs[a].dart != NONE).expect("flow continues");
            path.push(arcs[next].dart);
            node = arcs[next].to;
        }
        halves.push(path);
    }
    assert_eq!(halves.len(), 2);
    if g.head(*halves[0].last().unwrap()) != v1 {
        halves.swap(0, 1);
    }
    let mut darts: Vec<usize> = halves[0].iter().rev().map(|&d| g.inv(d)).collect();
    let split = darts.len();
    darts.extend_from_slice(&halves[1]);
    CutPath { darts, split }
}
