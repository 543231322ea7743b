//! Bridges and internal components of embedded subgraphs, contractible
//! cycles, face-width and `ck`-embeddedness.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chambers::barycentric;
use crate::surface_map::{EmbeddedGraph, FaceMap, NONE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BridgeKind {
    Chord,
    Component,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bridge {
    pub kind: BridgeKind,
    /// Vertices of the subgraph the bridge attaches to.
    pub attachments: Vec<usize>,
    /// Both darts of every bridge edge.
    pub darts: Vec<usize>,
    /// Vertices of the bridge outside the subgraph.
    pub interior: Vec<usize>,
    /// Faces of the subgraph the bridge lies in.
    pub faces: Vec<usize>,
}

/// Faces of an embedded subgraph together with its bridges.
#[derive(Debug, Clone)]
pub struct BridgeAnalysis {
    /// Facial walks of the subgraph, as darts of `G`.
    pub faces: Vec<Vec<usize>>,
    /// Face index of every kept dart, `NONE` for other darts.
    pub face_of: Vec<usize>,
    pub bridges: Vec<Bridge>,
    /// Bridges lying in each face.
    pub face_bridges: Vec<Vec<usize>>,
    pub simple: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyError {
    FaceIsBridged { face: usize },
    NotClosedUnderInv { dart: usize },
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::FaceIsBridged { face } => write!(f, "face {face} of the subgraph is bridged"),
            TopologyError::NotClosedUnderInv { dart } => write!(f, "dart {dart} is kept but its reverse is not"),
        }
    }
}

/// Marks both darts of every dart in `darts`.
pub fn edge_mask(g: &EmbeddedGraph, darts: &[usize]) -> Vec<bool> {
    let mut keep = vec![false; g.dart_count()];
    for &d in darts {
        keep[d] = true;
        keep[g.inv(d)] = true;
    }
    keep
}

pub fn bridges(g: &EmbeddedGraph, keep: &[bool]) -> Result<BridgeAnalysis, TopologyError> {
    let n = g.dart_count();
    if let Some(d) = (0..n).find(|&d| keep[d] && !keep[g.inv(d)]) {
        return Err(TopologyError::NotClosedUnderInv { dart: d });
    }
    let mut in_s = vec![false; g.vertex_count()];
    for d in 0..n {
        if keep[d] {
            in_s[g.tail(d)] = true;
        }
    }

    let mut face_of = vec![NONE; n];
    let mut faces = Vec::new();
    for start in 0..n {
        if !keep[start] || face_of[start] != NONE {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = faces.len();
            walk.push(d);
            d = g.next_kept(g.inv(d), keep);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }

    let mut bridges = Vec::new();
    let mut comp = vec![NONE; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if in_s[v] || comp[v] != NONE {
            continue;
        }
        let id = bridges.len();
        let mut interior = vec![v];
        comp[v] = id;
        let mut i = 0;
        while i < interior.len() {
            let u = interior[i];
            for d in g.rotation_iter(u) {
                let w = g.head(d);
                if !in_s[w] && comp[w] == NONE {
                    comp[w] = id;
                    interior.push(w);
                }
            }
            i += 1;
        }
        let mut darts = Vec::new();
        for &u in &interior {
            for d in g.rotation_iter(u) {
                darts.push(d);
                if in_s[g.head(d)] {
                    darts.push(g.inv(d));
                }
            }
        }
        bridges.push(Bridge { kind: BridgeKind::Component, attachments: Vec::new(), darts, interior, faces: Vec::new() });
    }
    for d in 0..n {
        if !keep[d] && d < g.inv(d) && in_s[g.tail(d)] && in_s[g.head(d)] {
            bridges.push(Bridge {
                kind: BridgeKind::Chord,
                attachments: Vec::new(),
                darts: vec![d, g.inv(d)],
                interior: Vec::new(),
                faces: Vec::new(),
            });
        }
    }

    let mut face_bridges = vec![Vec::new(); faces.len()];
    for (id, b) in bridges.iter_mut().enumerate() {
        for &d in &b.darts {
            let u = g.tail(d);
            if in_s[u] {
                if !b.attachments.contains(&u) {
                    b.attachments.push(u);
                }
                let f = face_of[g.next_kept(d, keep)];
                if !b.faces.contains(&f) {
                    b.faces.push(f);
                    face_bridges[f].push(id);
                }
            }
        }
        b.attachments.sort_unstable();
        b.faces.sort_unstable();
    }
    let simple = face_bridges.iter().map(|bs| bs.iter().all(|&b| bridges[b].faces.len() == 1)).collect();
    Ok(BridgeAnalysis { faces, face_of, bridges, face_bridges, simple })
}

#[derive(Debug, Clone)]
pub struct InternalComponent {
    pub graph: EmbeddedGraph,
    /// Vertex of `G` for every vertex; vertices `0..walk.len()` are the
    /// occurrences along the facial walk.
    pub copy_of: Vec<usize>,
    /// Dart of `G` for every dart. Darts `0..m` copy the walk, darts `m..2m`
    /// are their reverses (the outer face), the rest are bridge darts.
    pub dart_origin: Vec<usize>,
    pub walk: Vec<usize>,
}

impl InternalComponent {
    pub fn boundary_len(&self) -> usize {
        self.walk.len()
    }
}

pub fn internal_component(g: &EmbeddedGraph, analysis: &BridgeAnalysis, face: usize) -> Result<InternalComponent, TopologyError> {
    if !analysis.simple[face] {
        return Err(TopologyError::FaceIsBridged { face });
    }
    let walk = analysis.faces[face].clone();
    let m = walk.len();
    let mut id = vec![NONE; g.dart_count()];
    let mut dart_origin: Vec<usize> = walk.iter().copied().chain(walk.iter().map(|&w| g.inv(w))).collect();
    let mut interior = Vec::new();
    for &b in &analysis.face_bridges[face] {
        let bridge = &analysis.bridges[b];
        for &d in &bridge.darts {
            id[d] = dart_origin.len();
            dart_origin.push(d);
        }
        interior.extend_from_slice(&bridge.interior);
    }
    let mut pairing = vec![0; dart_origin.len()];
    for i in 0..m {
        pairing[i] = m + i;
        pairing[m + i] = i;
    }
    for k in 2 * m..dart_origin.len() {
        pairing[k] = id[g.inv(dart_origin[k])];
    }

    let mut rotations = Vec::with_capacity(m + interior.len());
    let mut copy_of = Vec::with_capacity(m + interior.len());
    for i in 0..m {
        let prev = (i + m - 1) % m;
        let mut rot = vec![m + prev];
        let mut d = g.sigma(g.inv(walk[prev]));
        while d != walk[i] {
            rot.push(id[d]);
            d = g.sigma(d);
        }
        rot.push(i);
        rotations.push(rot);
        copy_of.push(g.tail(walk[i]));
    }
    for &v in &interior {
        rotations.push(g.rotation_iter(v).map(|d| id[d]).collect());
        copy_of.push(v);
    }
    let labels = g.labels().map(|l| copy_of.iter().map(|&v| l[v]).collect());
    let graph = EmbeddedGraph::from_rotations(&rotations, &pairing, labels).expect("internal component is a valid embedded graph");
    Ok(InternalComponent { graph, copy_of, dart_origin, walk })
}

/// One side of a cycle: the faces of `G` reachable without crossing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    pub faces: Vec<usize>,
    pub interior_vertices: Vec<usize>,
    pub interior_edges: usize,
    /// Genus of the side closed off by one disk along the cycle.
    pub genus: usize,
}

/// Splits the surface along the closed walk `cycle` (darts of `G`). A simple
/// cycle yields two sides when it separates and one otherwise.
pub fn cycle_sides(g: &EmbeddedGraph, fm: &FaceMap, cycle: &[usize]) -> Vec<Side> {
    let on_cycle = edge_mask(g, cycle);
    let mut region = vec![NONE; fm.faces.len()];
    let mut sides = Vec::new();
    for start in 0..fm.faces.len() {
        if region[start] != NONE {
            continue;
        }
        let r = sides.len();
        region[start] = r;
        let mut stack = vec![start];
        let mut faces = Vec::new();
        while let Some(f) = stack.pop() {
            faces.push(f);
            for &d in &fm.faces[f].darts {
                if on_cycle[d] {
                    continue;
                }
                let h = fm.face_of[g.inv(d)];
                if region[h] == NONE {
                    region[h] = r;
                    stack.push(h);
                }
            }
        }
        faces.sort_unstable();
        sides.push(Side { faces, interior_vertices: Vec::new(), interior_edges: 0, genus: 0 });
    }
    let mut on_vertex = vec![false; g.vertex_count()];
    for &d in cycle {
        on_vertex[g.tail(d)] = true;
    }
    for v in 0..g.vertex_count() {
        if !on_vertex[v] {
            sides[region[fm.face_of[g.vertex_dart(v)]]].interior_vertices.push(v);
        }
    }
    for d in 0..g.dart_count() {
        if !on_cycle[d] && d < g.inv(d) {
            sides[region[fm.face_of[d]]].interior_edges += 1;
        }
    }
    for s in &mut sides {
        let chi = s.interior_vertices.len() as i64 - s.interior_edges as i64 + s.faces.len() as i64 + 1;
        s.genus = ((2 - chi) / 2).max(0) as usize;
    }
    sides
}

/// A simple cycle is contractible when it has a simple face whose internal
/// component is plane.
pub fn is_contractible(g: &EmbeddedGraph, fm: &FaceMap, cycle: &[usize]) -> bool {
    let sides = cycle_sides(g, fm, cycle);
    sides.len() == 2 && sides.iter().any(|s| s.genus == 0)
}

/// Vertex sequence of a closed walk; `None` unless every vertex is visited once.
pub fn as_simple_cycle(g: &EmbeddedGraph, walk: &[usize]) -> Option<Vec<usize>> {
    let vs: Vec<usize> = walk.iter().map(|&d| g.tail(d)).collect();
    let closes = walk.iter().enumerate().all(|(i, &d)| g.head(d) == g.tail(walk[(i + 1) % walk.len()]));
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    (closes && !walk.is_empty() && sorted.len() == vs.len()).then_some(vs)
}

/// Splits a closed walk into simple cycles at repeated vertices. Immediate
/// backtracks (`d` followed by `inv(d)`) cancel and produce no cycle.
pub fn split_closed_walk(g: &EmbeddedGraph, walk: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut at = vec![NONE; g.vertex_count()];
    let Some(&first) = walk.first() else { return out };
    at[g.tail(first)] = 0;
    for &d in walk {
        if stack.last().is_some_and(|&p| p == g.inv(d)) {
            stack.pop();
            at[g.head(g.inv(d))] = NONE;
            continue;
        }
        stack.push(d);
        let h = g.head(d);
        if at[h] != NONE {
            let cycle = stack.split_off(at[h]);
            for &x in &cycle[1..] {
                at[g.tail(x)] = NONE;
            }
            out.push(cycle);
        } else {
            at[h] = stack.len();
        }
    }
    out
}

/// Whether some cycle of the closed walk `walk` is non-contractible.
pub fn walk_has_noncontractible_cycle(g: &EmbeddedGraph, fm: &FaceMap, walk: &[usize]) -> bool {
    split_closed_walk(g, walk).iter().any(|c| !is_contractible(g, fm, c))
}

/// Shortest non-contractible simple cycle, searched among fundamental cycles
/// of breadth-first trees rooted at every vertex.
pub fn shortest_noncontractible_cycle(g: &EmbeddedGraph) -> Option<Vec<usize>> {
    if g.genus() == 0 {
        return None;
    }
    let fm = g.face_map();
    let nv = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![NONE; nv];
    let mut parent = vec![NONE; nv];
    let mut branch = vec![NONE; nv];
    for root in 0..nv {
        dist.iter_mut().for_each(|x| *x = NONE);
        parent.iter_mut().for_each(|x| *x = NONE);
        dist[root] = 0;
        branch[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for d in g.rotation_iter(u) {
                let w = g.head(d);
                if dist[w] == NONE {
                    dist[w] = dist[u] + 1;
                    parent[w] = d;
                    branch[w] = if u == root { w } else { branch[u] };
                    queue.push_back(w);
                }
            }
        }
        let bound = best.as_ref().map_or(usize::MAX, |b| b.len());
        let mut candidates: Vec<(usize, usize)> = (0..g.dart_count())
            .filter(|&d| d <= g.inv(d) && parent[g.head(d)] != d && parent[g.tail(d)] != g.inv(d))
            .filter(|&d| {
                let (u, w) = (g.tail(d), g.head(d));
                u == root || w == root || branch[u] != branch[w]
            })
            .map(|d| (dist[g.tail(d)] + dist[g.head(d)] + 1, d))
            .filter(|&(len, _)| len < bound)
            .collect();
        candidates.sort_unstable();
        for (_, d) in candidates {
            let mut cycle = Vec::new();
            let mut u = g.tail(d);
            while u != root {
                cycle.push(parent[u]);
                u = g.tail(parent[u]);
            }
            cycle.reverse();
            cycle.push(d);
            let mut w = g.head(d);
            while w != root {
                cycle.push(g.inv(parent[w]));
                w = g.tail(parent[w]);
            }
            if as_simple_cycle(g, &cycle).is_some() && !is_contractible(g, &fm, &cycle) {
                best = Some(cycle);
                break;
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceWidth {
    Infinite,
    /// Half the length of `cycle`, a shortest non-contractible cycle in `B_G`
    /// given as darts of the barycentric subdivision.
    Finite { value: usize, cycle: Vec<usize> },
}

impl FaceWidth {
    pub fn value(&self) -> Option<usize> {
        match self {
            FaceWidth::Infinite => None,
            FaceWidth::Finite { value, .. } => Some(*value),
        }
    }

    pub fn at_least(&self, k: usize) -> bool {
        self.value().is_none_or(|v| v >= k)
    }
}

impl fmt::Display for FaceWidth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceWidth::Infinite => write!(f, "inf"),
            FaceWidth::Finite { value, .. } => write!(f, "{value}"),
        }
    }
}

pub fn face_width(g: &EmbeddedGraph) -> FaceWidth {
    if g.genus() == 0 {
        return FaceWidth::Infinite;
    }
    let b = barycentric(g).graph;
    let cycle = shortest_noncontractible_cycle(&b).expect("a surface of positive genus has non-contractible cycles");
    FaceWidth::Finite { value: cycle.len().div_ceil(2), cycle }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CkWitness {
    Cut(Vec<usize>),
    LowDegree { vertex: usize, degree: usize },
    SmallFace { darts: Vec<usize> },
    /// Darts of `B_G`.
    NoncontractibleCycle(Vec<usize>),
    /// Darts of `B_G`.
    TwoCycle(Vec<usize>),
    /// Darts of `B_G`.
    NontrivialFourCycle(Vec<usize>),
}

impl fmt::Display for CkWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CkWitness::Cut(vs) => write!(f, "cut {vs:?}"),
            CkWitness::LowDegree { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            CkWitness::SmallFace { darts } => write!(f, "face of size {} at dart {}", darts.len(), darts[0]),
            CkWitness::NoncontractibleCycle(c) => write!(f, "non-contractible cycle of length {} in B_G", c.len()),
            CkWitness::TwoCycle(c) => write!(f, "2-cycle {c:?} in B_G"),
            CkWitness::NontrivialFourCycle(c) => write!(f, "nontrivial 4-cycle {c:?} in B_G"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CkReport {
    /// Largest `k <= 3` for which the graph is `ck`-embedded.
    pub k_max: u8,
    pub face_width: FaceWidth,
    pub min_degree: usize,
    pub min_face_size: usize,
    /// A smallest cut with at most two vertices, if one exists.
    pub smallest_cut: Option<Vec<usize>>,
    /// Why the graph is not `(k_max + 1)`-embedded.
    pub witness: Option<CkWitness>,
}

impl CkReport {
    pub fn is_ck(&self, k: u8) -> bool {
        self.k_max >= k
    }
}

fn connected_without(g: &EmbeddedGraph, removed: &[usize]) -> bool {
    let nv = g.vertex_count();
    let Some(start) = (0..nv).find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen = vec![false; nv];
    for &r in removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut count = removed.len() + 1;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for d in g.rotation_iter(u) {
            let w = g.head(d);
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == nv
}

/// Exhaustive search for a cut of at most two vertices.
pub fn smallest_cut(g: &EmbeddedGraph) -> Option<Vec<usize>> {
    let nv = g.vertex_count();
    for v in 0..nv {
        if !connected_without(g, &[v]) {
            return Some(vec![v]);
        }
    }
    for v in 0..nv {
        for w in v + 1..nv {
            if !connected_without(g, &[v, w]) {
                return Some(vec![v, w]);
            }
        }
    }
    None
}

/// Checks the definition directly: cuts, face-width, face sizes and degrees.
pub fn is_ck_embedded(g: &EmbeddedGraph) -> CkReport {
    let fw = face_width(g);
    let faces = g.faces();
    let (min_degree, low_vertex) = (0..g.vertex_count()).map(|v| (g.degree(v), v)).min().unwrap_or((0, 0));
    let small_face = faces.iter().min_by_key(|f| f.len()).expect("graph has faces");
    let min_face_size = small_face.len();
    let cut = smallest_cut(g);
    let bounds = [
        min_degree,
        min_face_size,
        fw.value().unwrap_or(usize::MAX),
        cut.as_ref().map_or(usize::MAX, |c| c.len()),
    ];
    let k_max = bounds.iter().copied().min().unwrap().min(3);
    let witness = if k_max >= 3 {
        None
    } else if cut.as_ref().is_some_and(|c| c.len() == k_max) {
        Some(CkWitness::Cut(cut.clone().unwrap()))
    } else if min_degree == k_max {
        Some(CkWitness::LowDegree { vertex: low_vertex, degree: min_degree })
    } else if min_face_size == k_max {
        Some(CkWitness::SmallFace { darts: small_face.darts.clone() })
    } else if let FaceWidth::Finite { cycle, .. } = &fw {
        Some(CkWitness::NoncontractibleCycle(cycle.clone()))
    } else {
        None
    };
    CkReport { k_max: k_max as u8, face_width: fw, min_degree, min_face_size, smallest_cut: cut, witness }
}

/// Result of the cycle characterisation on `B_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub k_max: u8,
    pub witness: Option<CkWitness>,
}

impl CycleReport {
    pub fn is_ck(&self, k: u8) -> bool {
        self.k_max >= k
    }
}

/// First pair of parallel edges in `t`, as a 2-cycle.
pub fn find_two_cycle(t: &EmbeddedGraph) -> Option<Vec<usize>> {
    for v in 0..t.vertex_count() {
        let rot = t.rotation(v);
        for (i, &a) in rot.iter().enumerate() {
            for &b in &rot[i + 1..] {
                if t.head(a) == t.head(b) && t.edge_of(a) != t.edge_of(b) {
                    return Some(vec![a, t.inv(b)]);
                }
            }
        }
    }
    None
}

/// A 4-cycle is trivial when one of its sides is plane and contains no
/// vertex or exactly one type-1 vertex.
pub fn is_trivial_four_cycle(t: &EmbeddedGraph, fm: &FaceMap, cycle: &[usize]) -> bool {
    let sides = cycle_sides(t, fm, cycle);
    sides.len() == 2
        && sides.iter().any(|s| {
            s.genus == 0
                && match s.interior_vertices.as_slice() {
                    [] => true,
                    [v] => t.label(*v) == Some(1),
                    _ => false,
                }
        })
}

/// Every 4-cycle of a simple graph once, as darts.
pub fn four_cycles(t: &EmbeddedGraph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..t.vertex_count() {
        for ab in t.rotation_iter(a) {
            let b = t.head(ab);
            if b <= a {
                continue;
            }
            for bc in t.rotation_iter(b) {
                let c = t.head(bc);
                if c <= a {
                    continue;
                }
                for cd in t.rotation_iter(c) {
                    let d = t.head(cd);
                    if d <= b || d == c {
                        continue;
                    }
                    for da in t.rotation_iter(d) {
                        if t.head(da) == a {
                            out.push([ab, bc, cd, da]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `ck`-embeddedness read off `B_G`: `c2` iff `B_G` has no 2-cycle, `c3` iff
/// moreover every 4-cycle of `B_G` is trivial.
pub fn ck_via_cycles(g: &EmbeddedGraph) -> CycleReport {
    let b = barycentric(g).graph;
    if let Some(c) = find_two_cycle(&b) {
        return CycleReport { k_max: 1, witness: Some(CkWitness::TwoCycle(c)) };
    }
    let fm = b.face_map();
    for c in four_cycles(&b) {
        if !is_trivial_four_cycle(&b, &fm, &c) {
            return CycleReport { k_max: 2, witness: Some(CkWitness::NontrivialFourCycle(c.to_vec())) };
        }
    }
    CycleReport { k_max: 3, witness: None }
}
