//! Connected orientable embedded graphs given by a rotation system on darts.
//!
//! A dart is an oriented edge. `inv` pairs the two darts of an edge and
//! `sigma` is the clockwise successor of a dart around its start vertex.
//! Faces are the orbits of `d -> sigma(inv(d))`; every face lies to the left
//! of the darts that traverse it.

mod canon;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use canon::{canonical_numbering, CanonicalCode, CanonicalNumbering};

/// Sentinel for "not yet assigned" in dense index maps.
pub(crate) const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// The pairing maps a dart to itself or is not an involution.
    NotInvolution { dart: usize },
    /// A dart is listed in no rotation or in more than one.
    DartMissingOrDuplicated { dart: usize },
    /// A permutation argument is not a bijection.
    NotPermutation { dart: usize },
    /// Not every dart is reachable from dart 0.
    Disconnected,
    /// A graph needs at least one edge.
    Empty,
    /// Two darts at the same vertex carry different labels.
    LabelMismatch { vertex: usize },
    /// Face or neighbour lists do not describe a unique rotation system.
    Inconsistent { reason: &'static str },
    /// A dart subset is empty or not closed under `inv`.
    EmptySelection,
    NotClosed { dart: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NotInvolution { dart } => write!(f, "pairing is not a fixed-point-free involution at dart {dart}"),
            GraphError::DartMissingOrDuplicated { dart } => write!(f, "dart {dart} is missing from the rotations or listed twice"),
            GraphError::NotPermutation { dart } => write!(f, "successor map is not a permutation (dart {dart})"),
            GraphError::Disconnected => write!(f, "graph is not connected"),
            GraphError::Empty => write!(f, "graph has no edges"),
            GraphError::LabelMismatch { vertex } => write!(f, "inconsistent labels at vertex {vertex}"),
            GraphError::Inconsistent { reason } => write!(f, "inconsistent input: {reason}"),
            GraphError::EmptySelection => write!(f, "empty dart selection"),
            GraphError::NotClosed { dart } => write!(f, "dart selection not closed under reversal (dart {dart})"),
        }
    }
}

/// A face as the cyclic sequence of darts of its facial walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// All faces of a graph plus the face index of every dart.
#[derive(Debug, Clone)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    pub face_of: Vec<usize>,
    /// Position of each dart inside its face.
    pub position: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    inv: Vec<usize>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    vertex_of: Vec<usize>,
    vertex_dart: Vec<usize>,
    labels: Option<Vec<u8>>,
}

impl EmbeddedGraph {
    /// Builds a graph from per-vertex clockwise dart lists and a dart pairing.
    /// Vertex `i` is the `i`-th rotation.
    pub fn from_rotations(
        rotations: &[Vec<usize>],
        pairing: &[usize],
        labels: Option<Vec<u8>>,
    ) -> Result<Self, GraphError> {
        let n = pairing.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        check_involution(pairing)?;
        let mut sigma = vec![NONE; n];
        let mut vertex_of = vec![NONE; n];
        let mut vertex_dart = Vec::with_capacity(rotations.len());
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(GraphError::Inconsistent { reason: "vertex without darts" });
            }
            for (k, &d) in rot.iter().enumerate() {
                if d >= n || vertex_of[d] != NONE {
                    return Err(GraphError::DartMissingOrDuplicated { dart: d });
                }
                vertex_of[d] = v;
                sigma[d] = rot[(k + 1) % rot.len()];
            }
            vertex_dart.push(rot[0]);
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == NONE) {
            return Err(GraphError::DartMissingOrDuplicated { dart: d });
        }
        if let Some(l) = &labels {
            if l.len() != rotations.len() {
                return Err(GraphError::Inconsistent { reason: "label count differs from vertex count" });
            }
        }
        Self::assemble(pairing.to_vec(), sigma, vertex_of, vertex_dart, labels)
    }

    /// Builds a graph from the successor permutation and the pairing; vertices
    /// are the `sigma` orbits numbered by their smallest dart. `dart_labels`,
    /// when given, labels the start vertex of every dart and must be constant
    /// on each vertex.
    pub fn from_permutations(
        sigma: Vec<usize>,
        inv: Vec<usize>,
        dart_labels: Option<&[u8]>,
    ) -> Result<Self, GraphError> {
        let n = inv.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if sigma.len() != n {
            return Err(GraphError::NotPermutation { dart: n.min(sigma.len()) });
        }
        check_involution(&inv)?;
        check_permutation(&sigma)?;
        let mut vertex_of = vec![NONE; n];
        let mut vertex_dart = Vec::new();
        let mut labels = dart_labels.map(|_| Vec::new());
        for start in 0..n {
            if vertex_of[start] != NONE {
                continue;
            }
            let v = vertex_dart.len();
            vertex_dart.push(start);
            let mut d = start;
            loop {
                vertex_of[d] = v;
                if let Some(dl) = dart_labels {
                    if dl[d] != dl[start] {
                        return Err(GraphError::LabelMismatch { vertex: v });
                    }
                }
                d = sigma[d];
                if d == start {
                    break;
                }
            }
            if let (Some(l), Some(dl)) = (labels.as_mut(), dart_labels) {
                l.push(dl[start]);
            }
        }
        Self::assemble(inv, sigma, vertex_of, vertex_dart, labels)
    }

    /// Builds a graph from the face successor `phi` (`phi(d) = sigma(inv(d))`).
    pub fn from_face_permutation(
        phi: &[usize],
        inv: Vec<usize>,
        dart_labels: Option<&[u8]>,
    ) -> Result<Self, GraphError> {
        if phi.len() != inv.len() {
            return Err(GraphError::NotPermutation { dart: 0 });
        }
        check_involution(&inv)?;
        let sigma = (0..inv.len()).map(|d| phi[inv[d]]).collect();
        Self::from_permutations(sigma, inv, dart_labels)
    }

    /// Builds a graph without loops or parallel edges from clockwise neighbour
    /// lists.
    pub fn from_neighbor_rotations(neighbors: &[Vec<usize>]) -> Result<Self, GraphError> {
        let mut offset = Vec::with_capacity(neighbors.len() + 1);
        let mut total = 0;
        for nb in neighbors {
            offset.push(total);
            total += nb.len();
        }
        let mut rotations = Vec::with_capacity(neighbors.len());
        let mut pairing = vec![NONE; total];
        for (v, nb) in neighbors.iter().enumerate() {
            rotations.push((offset[v]..offset[v] + nb.len()).collect::<Vec<_>>());
            for (k, &w) in nb.iter().enumerate() {
                if w >= neighbors.len() || w == v {
                    return Err(GraphError::Inconsistent { reason: "bad neighbour" });
                }
                let mut back = neighbors[w].iter().enumerate().filter(|(_, &x)| x == v);
                let (j, _) = back.next().ok_or(GraphError::Inconsistent { reason: "asymmetric adjacency" })?;
                if back.next().is_some() || nb.iter().filter(|&&x| x == w).count() != 1 {
                    return Err(GraphError::Inconsistent { reason: "parallel edges in neighbour lists" });
                }
                pairing[offset[v] + k] = offset[w] + j;
            }
        }
        Self::from_rotations(&rotations, &pairing, None)
    }

    /// Builds a graph from its faces, each given as the cyclic vertex sequence
    /// of a facial walk with the face on the left. Each directed vertex pair
    /// may occur at most once, so loops and parallel edges are not expressible.
    pub fn from_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self, GraphError> {
        use alloc::collections::BTreeMap;
        let mut key: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut keyed = Vec::with_capacity(faces.len());
        for face in faces {
            let mut f = Vec::with_capacity(face.len());
            for (k, &v) in face.iter().enumerate() {
                let w = face[(k + 1) % face.len()];
                if v == w {
                    return Err(GraphError::Inconsistent { reason: "bad face vertex" });
                }
                let next = key.len();
                f.push((v, *key.entry((v.min(w), v.max(w))).or_insert(next)));
            }
            keyed.push(f);
        }
        Self::from_face_edges(vertex_count, &keyed)
    }

    /// Like [`from_faces`](Self::from_faces), but every corner `(v, e)` also
    /// names the edge `e` leading to the next corner, so loops and parallel
    /// edges can be written down. Every edge key must occur exactly twice.
    pub fn from_face_edges(vertex_count: usize, faces: &[Vec<(usize, usize)>]) -> Result<Self, GraphError> {
        use alloc::collections::BTreeMap;
        let mut uses: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut phi = Vec::new();
        let mut tail = Vec::new();
        let mut head = Vec::new();
        for face in faces {
            let base = tail.len();
            for (k, &(v, e)) in face.iter().enumerate() {
                let w = face[(k + 1) % face.len()].0;
                if v >= vertex_count || w >= vertex_count {
                    return Err(GraphError::Inconsistent { reason: "bad face vertex" });
                }
                uses.entry(e).or_default().push(base + k);
                tail.push(v);
                head.push(w);
                phi.push(base + (k + 1) % face.len());
            }
        }
        let mut inv = vec![NONE; tail.len()];
        for ds in uses.values() {
            let &[a, b] = ds.as_slice() else {
                return Err(GraphError::Inconsistent { reason: "edge key not used exactly twice" });
            };
            if tail[a] != head[b] || tail[b] != head[a] {
                return Err(GraphError::Inconsistent { reason: "edge sides disagree on endpoints" });
            }
            inv[a] = b;
            inv[b] = a;
        }
        let g = Self::from_face_permutation(&phi, inv, None)?;
        if g.vertex_count() != vertex_count {
            return Err(GraphError::Inconsistent { reason: "vertex count mismatch or pinched vertex" });
        }
        // renumber vertices to match the caller's ids
        let mut rotations = vec![Vec::new(); vertex_count];
        for v in 0..g.vertex_count() {
            let d0 = g.vertex_dart(v);
            rotations[tail[d0]] = g.rotation(v);
        }
        Self::from_rotations(&rotations, &g.inv, None)
    }

    /// Builds a graph from clockwise rotations of signed edge ids: edge
    /// `e >= 1` has dart `+e` leaving the vertex listing it and `-e` leaving
    /// the other end. Dart `+e` becomes `2(e-1)`, dart `-e` becomes `2e-1`.
    pub fn from_signed_rotations(rotations: &[Vec<i64>], labels: Option<Vec<u8>>) -> Result<Self, GraphError> {
        let darts: usize = rotations.iter().map(Vec::len).sum();
        if !darts.is_multiple_of(2) {
            return Err(GraphError::Inconsistent { reason: "odd number of edge ends" });
        }
        let mut seen = vec![false; darts];
        let mut rot = Vec::with_capacity(rotations.len());
        for r in rotations {
            let mut ids = Vec::with_capacity(r.len());
            for &s in r {
                let e = s.unsigned_abs() as usize;
                if s == 0 || e > darts / 2 {
                    return Err(GraphError::Inconsistent { reason: "edge id out of range" });
                }
                let d = 2 * (e - 1) + usize::from(s < 0);
                if core::mem::replace(&mut seen[d], true) {
                    return Err(GraphError::Inconsistent { reason: "edge end listed twice" });
                }
                ids.push(d);
            }
            rot.push(ids);
        }
        let pairing: Vec<usize> = (0..darts).map(|d| d ^ 1).collect();
        Self::from_rotations(&rot, &pairing, labels)
    }

    fn assemble(
        inv: Vec<usize>,
        sigma: Vec<usize>,
        vertex_of: Vec<usize>,
        vertex_dart: Vec<usize>,
        labels: Option<Vec<u8>>,
    ) -> Result<Self, GraphError> {
        let n = inv.len();
        let mut sigma_inv = vec![0; n];
        for d in 0..n {
            sigma_inv[sigma[d]] = d;
        }
        let g = EmbeddedGraph { inv, sigma, sigma_inv, vertex_of, vertex_dart, labels };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.sigma[d], self.inv[d]] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }

    pub fn dart_count(&self) -> usize {
        self.inv.len()
    }

    pub fn edge_count(&self) -> usize {
        self.inv.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_dart.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_map().faces.len()
    }

    #[inline]
    pub fn inv(&self, d: usize) -> usize {
        self.inv[d]
    }

    #[inline]
    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    #[inline]
    pub fn sigma_inv(&self, d: usize) -> usize {
        self.sigma_inv[d]
    }

    /// Next dart of the facial walk.
    #[inline]
    pub fn phi(&self, d: usize) -> usize {
        self.sigma[self.inv[d]]
    }

    /// Previous dart of the facial walk.
    #[inline]
    pub fn phi_inv(&self, d: usize) -> usize {
        self.inv[self.sigma_inv[d]]
    }

    #[inline]
    pub fn tail(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    #[inline]
    pub fn head(&self, d: usize) -> usize {
        self.vertex_of[self.inv[d]]
    }

    /// Edge identifier: the smaller dart of the pair.
    #[inline]
    pub fn edge_of(&self, d: usize) -> usize {
        d.min(self.inv[d])
    }

    pub fn is_loop(&self, d: usize) -> bool {
        self.tail(d) == self.head(d)
    }

    pub fn vertex_dart(&self, v: usize) -> usize {
        self.vertex_dart[v]
    }

    pub fn pairing(&self) -> &[usize] {
        &self.inv
    }

    pub fn successors(&self) -> &[usize] {
        &self.sigma
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation_iter(v).count()
    }

    /// Darts at `v` in clockwise order starting at `vertex_dart(v)`.
    pub fn rotation(&self, v: usize) -> Vec<usize> {
        self.rotation_iter(v).collect()
    }

    pub fn rotation_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.vertex_dart[v];
        let mut cur = Some(start);
        core::iter::from_fn(move || {
            let d = cur?;
            let next = self.sigma[d];
            cur = if next == start { None } else { Some(next) };
            Some(d)
        })
    }

    pub fn label(&self, v: usize) -> Option<u8> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn labels(&self) -> Option<&[u8]> {
        self.labels.as_deref()
    }

    /// Label of the start vertex of a dart.
    pub fn dart_label(&self, d: usize) -> Option<u8> {
        self.label(self.tail(d))
    }

    pub fn with_labels(mut self, labels: Option<Vec<u8>>) -> Result<Self, GraphError> {
        if let Some(l) = &labels {
            if l.len() != self.vertex_count() {
                return Err(GraphError::Inconsistent { reason: "label count differs from vertex count" });
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn face_map(&self) -> FaceMap {
        let n = self.dart_count();
        let mut face_of = vec![NONE; n];
        let mut position = vec![0; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of[start] != NONE {
                continue;
            }
            let f = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = f;
                position[d] = darts.len();
                darts.push(d);
                d = self.phi(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts });
        }
        FaceMap { faces, face_of, position }
    }

    pub fn faces(&self) -> Vec<Face> {
        self.face_map().faces
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && chi % 2 == 0);
        ((2 - chi) / 2) as usize
    }

    /// `(V, E, F)`.
    pub fn f_vector(&self) -> (usize, usize, usize) {
        (self.vertex_count(), self.edge_count(), self.face_count())
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The same surface seen from the other side.
    pub fn mirror(&self) -> EmbeddedGraph {
        let rotations: Vec<Vec<usize>> = (0..self.vertex_count())
            .map(|v| {
                let mut r = self.rotation(v);
                r[1..].reverse();
                r
            })
            .collect();
        Self::from_rotations(&rotations, &self.inv, self.labels.clone()).expect("mirror of a valid graph")
    }

    /// The dual map: vertices are the faces of `self`, darts are shared, and
    /// the rotation around a dual vertex runs through its face clockwise.
    pub fn dual(&self) -> EmbeddedGraph {
        let fm = self.face_map();
        let rotations: Vec<Vec<usize>> = fm
            .faces
            .iter()
            .map(|f| {
                let mut r = f.darts.clone();
                r[1..].reverse();
                r
            })
            .collect();
        Self::from_rotations(&rotations, &self.inv, None).expect("dual of a valid graph")
    }

    /// Connected components of the embedded subgraph spanned by `keep`
    /// (a dart mask closed under `inv`), with the induced rotations.
    pub fn embedded_subgraph(&self, keep: &[bool]) -> Result<Vec<Subgraph>, GraphError> {
        let n = self.dart_count();
        if keep.len() != n {
            return Err(GraphError::Inconsistent { reason: "mask length differs from dart count" });
        }
        for d in 0..n {
            if keep[d] && !keep[self.inv[d]] {
                return Err(GraphError::NotClosed { dart: d });
            }
        }
        if !keep.iter().any(|&k| k) {
            return Err(GraphError::EmptySelection);
        }
        let mut comp = vec![NONE; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if !keep[start] || comp[start] != NONE {
                continue;
            }
            let c = components.len();
            let mut darts = Vec::new();
            let mut queue = VecDeque::from([start]);
            comp[start] = c;
            while let Some(d) = queue.pop_front() {
                darts.push(d);
                let nexts = [self.inv[d], self.next_kept(d, keep)];
                for e in nexts {
                    if comp[e] == NONE {
                        comp[e] = c;
                        queue.push_back(e);
                    }
                }
            }
            components.push(darts);
        }
        let mut out = Vec::with_capacity(components.len());
        for mut darts in components {
            darts.sort_unstable();
            let mut local = vec![NONE; n];
            for (i, &d) in darts.iter().enumerate() {
                local[d] = i;
            }
            // keep the relative order of the original vertex ids
            let mut verts: Vec<usize> = darts.iter().map(|&d| self.tail(d)).collect();
            verts.sort_unstable();
            verts.dedup();
            let mut rotations = Vec::with_capacity(verts.len());
            for &v in &verts {
                rotations.push(self.rotation_iter(v).filter(|&d| keep[d]).map(|d| local[d]).collect::<Vec<_>>());
            }
            let pairing: Vec<usize> = darts.iter().map(|&d| local[self.inv[d]]).collect();
            let labels = self.labels.as_ref().map(|l| verts.iter().map(|&v| l[v]).collect());
            let graph = EmbeddedGraph::from_rotations(&rotations, &pairing, labels)?;
            out.push(Subgraph { graph, dart_origin: darts, vertex_origin: verts });
        }
        Ok(out)
    }

    /// First dart after `d` in clockwise order around its vertex that is kept.
    pub(crate) fn next_kept(&self, d: usize, keep: &[bool]) -> usize {
        let mut e = self.sigma[d];
        while !keep[e] {
            e = self.sigma[e];
        }
        e
    }

    pub fn canonical_code(&self, allow_reflection: bool) -> CanonicalCode {
        canonical_numbering(self, allow_reflection).code
    }

    /// Isomorphic copy with darts renumbered in canonical order and vertices
    /// numbered by their first dart. Isomorphic graphs have equal canonical
    /// forms; with `allow_reflection` mirror images do too.
    pub fn canonical_form(&self, allow_reflection: bool) -> EmbeddedGraph {
        let cn = canonical_numbering(self, allow_reflection);
        let base = if cn.mirrored { self.mirror() } else { self.clone() };
        let mut perm = vec![0; self.dart_count()];
        for (i, &d) in cn.order.iter().enumerate() {
            perm[d] = i;
        }
        let mut vperm = vec![NONE; self.vertex_count()];
        let mut next = 0;
        for &d in &cn.order {
            let v = base.tail(d);
            if vperm[v] == NONE {
                vperm[v] = next;
                next += 1;
            }
        }
        base.relabeled(&perm, &vperm)
    }

    /// Isomorphism as embedded graphs (labels included). Orientation-preserving
    /// unless `allow_reflection` is set.
    pub fn is_isomorphic(&self, other: &EmbeddedGraph, allow_reflection: bool) -> bool {
        if self.dart_count() != other.dart_count() || self.vertex_count() != other.vertex_count() {
            return false;
        }
        self.canonical_code(allow_reflection) == other.canonical_code(allow_reflection)
    }

    /// Relabels darts by `perm[d]` (new id of dart `d`) and vertices by
    /// `vperm[v]`. The result is isomorphic to `self`.
    pub fn relabeled(&self, perm: &[usize], vperm: &[usize]) -> EmbeddedGraph {
        let n = self.dart_count();
        let mut pairing = vec![0; n];
        for d in 0..n {
            pairing[perm[d]] = perm[self.inv[d]];
        }
        let mut rotations = vec![Vec::new(); self.vertex_count()];
        let mut labels = self.labels.as_ref().map(|_| vec![0; self.vertex_count()]);
        for v in 0..self.vertex_count() {
            rotations[vperm[v]] = self.rotation_iter(v).map(|d| perm[d]).collect();
            if let (Some(l), Some(old)) = (labels.as_mut(), self.labels.as_ref()) {
                l[vperm[v]] = old[v];
            }
        }
        Self::from_rotations(&rotations, &pairing, labels).expect("relabeling preserves validity")
    }
}

/// One connected component of an embedded subgraph.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: EmbeddedGraph,
    /// Original dart of every subgraph dart.
    pub dart_origin: Vec<usize>,
    /// Original vertex of every subgraph vertex.
    pub vertex_origin: Vec<usize>,
}

fn check_involution(inv: &[usize]) -> Result<(), GraphError> {
    for (d, &e) in inv.iter().enumerate() {
        if e >= inv.len() || e == d || inv[e] != d {
            return Err(GraphError::NotInvolution { dart: d });
        }
    }
    Ok(())
}

fn check_permutation(p: &[usize]) -> Result<(), GraphError> {
    let mut seen = vec![false; p.len()];
    for (d, &e) in p.iter().enumerate() {
        if e >= p.len() || seen[e] {
            return Err(GraphError::NotPermutation { dart: d });
        }
        seen[e] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests;
