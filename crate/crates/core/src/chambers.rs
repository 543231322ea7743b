//! Barycentric subdivisions, chamber systems, double chambers and chamber
//! flips.
//!
//! Vertex types: 0 for vertices, 1 for edges and 2 for faces of the source
//! graph. An edge of type `i` is an edge not incident to a vertex of type `i`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::surface_map::{EmbeddedGraph, FaceMap, NONE};

/// What a vertex of `B_G` stands for in `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaryOrigin {
    Vertex(usize),
    /// An edge, given by its smaller dart.
    Edge(usize),
    Face(usize),
}

#[derive(Debug, Clone)]
pub struct BarycentricSubdivision {
    /// Labelled triangulation; labels are the vertex types.
    pub graph: EmbeddedGraph,
    pub origin: Vec<BaryOrigin>,
    /// Number of vertices, edges and faces of the source graph.
    pub source_counts: (usize, usize, usize),
}

/// `B_G` dart ids are `6 * d + k` for a dart `d` of `G`:
/// `k = 0/1` the type-2 edge between `tail(d)` and the edge of `d`,
/// `k = 2/3` the type-1 edge between `tail(d)` and the face of the angle after `d`,
/// `k = 4/5` the type-0 edge between the edge of `d` and the face of `d`.
pub mod bary_dart {
    pub const VERTEX_TO_EDGE: usize = 0;
    pub const EDGE_TO_VERTEX: usize = 1;
    pub const VERTEX_TO_FACE: usize = 2;
    pub const FACE_TO_VERTEX: usize = 3;
    pub const EDGE_TO_FACE: usize = 4;
    pub const FACE_TO_EDGE: usize = 5;
}

pub fn barycentric(g: &EmbeddedGraph) -> BarycentricSubdivision {
    use bary_dart::*;
    let fm = g.face_map();
    let (nv, ne, nf) = (g.vertex_count(), g.edge_count(), fm.faces.len());
    let n = g.dart_count();
    let b = |d: usize, k: usize| 6 * d + k;

    let mut edge_index = vec![NONE; n];
    let mut edge_darts = Vec::with_capacity(ne);
    for d in 0..n {
        if d < g.inv(d) {
            edge_index[d] = edge_darts.len();
            edge_index[g.inv(d)] = edge_darts.len();
            edge_darts.push(d);
        }
    }

    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(nv + ne + nf);
    let mut labels = Vec::with_capacity(nv + ne + nf);
    let mut origin = Vec::with_capacity(nv + ne + nf);
    for v in 0..nv {
        rotations.push(g.rotation_iter(v).flat_map(|d| [b(d, VERTEX_TO_EDGE), b(d, VERTEX_TO_FACE)]).collect());
        labels.push(0);
        origin.push(BaryOrigin::Vertex(v));
    }
    for &d in &edge_darts {
        let e = g.inv(d);
        rotations.push(vec![b(d, EDGE_TO_VERTEX), b(d, EDGE_TO_FACE), b(e, EDGE_TO_VERTEX), b(e, EDGE_TO_FACE)]);
        labels.push(1);
        origin.push(BaryOrigin::Edge(d));
    }
    for (f, face) in fm.faces.iter().enumerate() {
        let k = face.darts.len();
        // counterclockwise: corner at tail(d_i), then the edge of d_i
        let mut ccw = Vec::with_capacity(2 * k);
        for i in 0..k {
            let prev = face.darts[(i + k - 1) % k];
            ccw.push(b(g.inv(prev), FACE_TO_VERTEX));
            ccw.push(b(face.darts[i], FACE_TO_EDGE));
        }
        ccw.reverse();
        rotations.push(ccw);
        labels.push(2);
        origin.push(BaryOrigin::Face(f));
    }
    let pairing: Vec<usize> = (0..6 * n).map(|x| x ^ 1).collect();
    let graph = EmbeddedGraph::from_rotations(&rotations, &pairing, Some(labels)).expect("barycentric subdivision is valid");
    BarycentricSubdivision { graph, origin, source_counts: (nv, ne, nf) }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChamberError {
    Unlabeled,
    NotTriangle { face: usize },
    SameTypeEdge { dart: usize },
    BadLabel { vertex: usize },
    EdgeVertexDegree { vertex: usize, degree: usize },
    Graph(crate::GraphError),
}

impl fmt::Display for ChamberError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChamberError::Unlabeled => write!(f, "triangulation carries no vertex types"),
            ChamberError::NotTriangle { face } => write!(f, "face {face} is not a triangle"),
            ChamberError::SameTypeEdge { dart } => write!(f, "dart {dart} joins two vertices of the same type"),
            ChamberError::BadLabel { vertex } => write!(f, "vertex {vertex} has a type outside 0..=2"),
            ChamberError::EdgeVertexDegree { vertex, degree } => write!(f, "type-1 vertex {vertex} has degree {degree}, expected 4"),
            ChamberError::Graph(e) => write!(f, "{e}"),
        }
    }
}

/// The graph whose barycentric subdivision is the labelled triangulation `t`.
/// Darts of the result are the darts of `t` from type-0 to type-1 vertices;
/// the second component lists them.
pub fn graph_from_subdivision(t: &EmbeddedGraph) -> Result<(EmbeddedGraph, Vec<usize>), ChamberError> {
    let labels = t.labels().ok_or(ChamberError::Unlabeled)?;
    if let Some(v) = labels.iter().position(|&l| l > 2) {
        return Err(ChamberError::BadLabel { vertex: v });
    }
    for d in 0..t.dart_count() {
        if edge_type(t, d).is_none() {
            return Err(ChamberError::SameTypeEdge { dart: d });
        }
    }
    for (f, face) in t.faces().iter().enumerate() {
        if face.len() != 3 {
            return Err(ChamberError::NotTriangle { face: f });
        }
    }
    for v in 0..t.vertex_count() {
        if labels[v] == 1 && t.degree(v) != 4 {
            return Err(ChamberError::EdgeVertexDegree { vertex: v, degree: t.degree(v) });
        }
    }
    let darts: Vec<usize> = (0..t.dart_count()).filter(|&d| t.dart_label(d) == Some(0) && t.dart_label(t.inv(d)) == Some(1)).collect();
    let mut index = vec![NONE; t.dart_count()];
    for (i, &d) in darts.iter().enumerate() {
        index[d] = i;
    }
    let sigma = darts.iter().map(|&d| index[t.sigma(t.sigma(d))]).collect();
    let inv = darts.iter().map(|&d| index[t.inv(t.sigma(t.sigma(t.inv(d))))]).collect();
    let g = EmbeddedGraph::from_permutations(sigma, inv, None).map_err(ChamberError::Graph)?;
    Ok((g, darts))
}

/// Chambers of a labelled triangulation with the three involutions.
#[derive(Debug, Clone)]
pub struct ChamberSystem {
    /// `s[i][c]` is the chamber across the `i`-edge of chamber `c`.
    pub s: [Vec<usize>; 3],
    /// `corner[c][t]` is the type-`t` vertex of chamber `c`.
    pub corner: Vec<[usize; 3]>,
    /// `edge_dart[c][i]` is the dart of the `i`-edge traversed by chamber `c`.
    pub edge_dart: Vec<[usize; 3]>,
    /// Face of the triangulation for every chamber.
    pub face_of_chamber: Vec<usize>,
    /// Chamber of every face, `None` for the excluded face.
    pub chamber_of_face: Vec<Option<usize>>,
}

/// Type of the edge of dart `d` in a labelled triangulation.
pub fn edge_type(t: &EmbeddedGraph, d: usize) -> Option<u8> {
    let a = t.dart_label(d)?;
    let b = t.dart_label(t.inv(d))?;
    if a == b || a > 2 || b > 2 {
        None
    } else {
        Some(3 - a - b)
    }
}

impl ChamberSystem {
    /// Builds the chamber system of a labelled triangulation. The face
    /// `exclude` (the outer face of an lsp-operation) is not a chamber; chambers
    /// whose `i`-edge borders it are fixed by `s_i`.
    pub fn from_triangulation(t: &EmbeddedGraph, fm: &FaceMap, exclude: Option<usize>) -> Result<Self, ChamberError> {
        let labels = t.labels().ok_or(ChamberError::Unlabeled)?;
        if let Some(v) = labels.iter().position(|&l| l > 2) {
            return Err(ChamberError::BadLabel { vertex: v });
        }
        let mut chamber_of_face = vec![None; fm.faces.len()];
        let mut face_of_chamber = Vec::new();
        for f in 0..fm.faces.len() {
            if Some(f) != exclude {
                chamber_of_face[f] = Some(face_of_chamber.len());
                face_of_chamber.push(f);
            }
        }
        let m = face_of_chamber.len();
        let mut corner = vec![[NONE; 3]; m];
        let mut edge_dart = vec![[NONE; 3]; m];
        for (c, &f) in face_of_chamber.iter().enumerate() {
            let face = &fm.faces[f];
            if face.len() != 3 {
                return Err(ChamberError::NotTriangle { face: f });
            }
            for &d in &face.darts {
                let et = edge_type(t, d).ok_or(ChamberError::SameTypeEdge { dart: d })?;
                let tl = labels[t.tail(d)] as usize;
                if corner[c][tl] != NONE || edge_dart[c][et as usize] != NONE {
                    return Err(ChamberError::NotTriangle { face: f });
                }
                corner[c][tl] = t.tail(d);
                edge_dart[c][et as usize] = d;
            }
        }
        let mut s = [vec![0; m], vec![0; m], vec![0; m]];
        for c in 0..m {
            for i in 0..3 {
                let across = fm.face_of[t.inv(edge_dart[c][i])];
                s[i][c] = chamber_of_face[across].unwrap_or(c);
            }
        }
        Ok(ChamberSystem { s, corner, edge_dart, face_of_chamber, chamber_of_face })
    }

    pub fn len(&self) -> usize {
        self.corner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corner.is_empty()
    }

    /// Whether the group generated by `s0, s1, s2` acts transitively.
    pub fn is_transitive(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for i in 0..3 {
                let n = self.s[i][c];
                if !seen[n] {
                    seen[n] = true;
                    count += 1;
                    stack.push(n);
                }
            }
        }
        count == self.len()
    }

    /// Orbit of `c` under `<s_i, s_j>`, sorted.
    pub fn orbit(&self, c: usize, i: usize, j: usize) -> Vec<usize> {
        let mut seen = Vec::new();
        let mut stack = vec![c];
        while let Some(x) = stack.pop() {
            if seen.contains(&x) {
                continue;
            }
            seen.push(x);
            stack.push(self.s[i][x]);
            stack.push(self.s[j][x]);
        }
        seen.sort_unstable();
        seen
    }
}

/// One quadrilateral face of `D_G`, listed from its type-1 corner:
/// `one -> zero_x -> two -> zero_y -> one`, with the face on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleChamber {
    /// `B_G` darts of the four sides in that order.
    pub sides: [usize; 4],
    pub one: usize,
    pub zero_x: usize,
    pub two: usize,
    pub zero_y: usize,
}

impl DoubleChamber {
    pub fn corners_coincide(&self) -> bool {
        self.zero_x == self.zero_y
    }
}

#[derive(Debug, Clone)]
pub struct DoubleChamberSystem {
    pub bary: BarycentricSubdivision,
    /// `B_G` without its type-0 edges; vertex ids are those of `B_G`.
    pub graph: EmbeddedGraph,
    /// `B_G` dart of every dart of `graph`.
    pub dart_origin: Vec<usize>,
    pub chambers: Vec<DoubleChamber>,
    /// For every `B_G` dart on a double chamber side: `(double chamber, side)`.
    pub side_of: Vec<Option<(usize, usize)>>,
}

impl DoubleChamberSystem {
    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    /// The double chamber across side `side` of `dc`, and the side index
    /// there.
    pub fn across(&self, dc: usize, side: usize) -> (usize, usize) {
        let d = self.chambers[dc].sides[side];
        self.side_of[self.bary.graph.inv(d)].expect("every side borders a double chamber")
    }
}

pub fn double_chambers(g: &EmbeddedGraph) -> DoubleChamberSystem {
    let bary = barycentric(g);
    let b = &bary.graph;
    let keep: Vec<bool> = (0..b.dart_count()).map(|d| edge_type(b, d) != Some(0)).collect();
    let mut comps = b.embedded_subgraph(&keep).expect("double chamber system is non-empty");
    debug_assert_eq!(comps.len(), 1);
    let sub = comps.pop().unwrap();
    debug_assert_eq!(sub.vertex_origin.len(), b.vertex_count());
    let graph = sub.graph;
    let dart_origin = sub.dart_origin;
    let mut chambers = Vec::new();
    let mut side_of = vec![None; b.dart_count()];
    for face in graph.faces() {
        debug_assert_eq!(face.len(), 4);
        let start = face.darts.iter().position(|&d| graph.dart_label(d) == Some(1)).expect("type-1 corner");
        let sides: [usize; 4] = core::array::from_fn(|k| dart_origin[face.darts[(start + k) % 4]]);
        let dc = chambers.len();
        for (k, &d) in sides.iter().enumerate() {
            side_of[d] = Some((dc, k));
        }
        chambers.push(DoubleChamber {
            sides,
            one: b.tail(sides[0]),
            zero_x: b.tail(sides[1]),
            two: b.tail(sides[2]),
            zero_y: b.tail(sides[3]),
        });
    }
    DoubleChamberSystem { bary, graph, dart_origin, chambers, side_of }
}

/// A walk in a triangulation stored as darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipWalk {
    pub darts: Vec<usize>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlipError {
    NotOnChamberBoundary { position: usize, face: usize },
    NotATriangle { face: usize },
}

impl fmt::Display for FlipError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlipError::NotOnChamberBoundary { position, face } => {
                write!(f, "walk position {position} is not on the boundary of face {face}")
            }
            FlipError::NotATriangle { face } => write!(f, "face {face} is not a triangle"),
        }
    }
}

impl FlipWalk {
    pub fn new(darts: Vec<usize>, closed: bool) -> Self {
        FlipWalk { darts, closed }
    }

    /// Vertex sequence; for closed walks the start vertex is not repeated.
    pub fn vertices(&self, t: &EmbeddedGraph) -> Vec<usize> {
        let mut v: Vec<usize> = self.darts.iter().map(|&d| t.tail(d)).collect();
        if !self.closed {
            if let Some(&last) = self.darts.last() {
                v.push(t.head(last));
            }
        }
        v
    }
}

/// Replaces the subpath of `walk` starting at `position` that lies on the
/// boundary of triangle `face` by the complementary boundary path. Two
/// consecutive boundary edges are flipped together; otherwise the single edge
/// at `position` is flipped. When the flipped pair wraps around the end of a
/// closed walk, the result is rotated so that the replacement ends the walk.
pub fn chamber_flip(t: &EmbeddedGraph, fm: &FaceMap, walk: &FlipWalk, position: usize, face: usize) -> Result<FlipWalk, FlipError> {
    let tri = &fm.faces[face].darts;
    if tri.len() != 3 {
        return Err(FlipError::NotATriangle { face });
    }
    let n = walk.darts.len();
    let err = FlipError::NotOnChamberBoundary { position, face };
    if position >= n {
        return Err(err);
    }
    let d = walk.darts[position];
    let next = if position + 1 < n {
        Some(walk.darts[position + 1])
    } else if walk.closed && n > 1 {
        Some(walk.darts[0])
    } else {
        None
    };
    let x = |j: usize| tri[j % 3];
    let on = |e: usize| (0..3).find(|&j| x(j) == e);
    let on_rev = |e: usize| (0..3).find(|&j| t.inv(x(j)) == e);

    let (len, replacement) = if let (Some(j), Some(nx)) = (on(d), next) {
        if nx == x(j + 1) {
            (2, vec![t.inv(x(j + 2))])
        } else {
            (1, vec![t.inv(x(j + 2)), t.inv(x(j + 1))])
        }
    } else if let Some(j) = on(d) {
        (1, vec![t.inv(x(j + 2)), t.inv(x(j + 1))])
    } else if let Some(j) = on_rev(d) {
        match next {
            Some(nx) if nx == t.inv(x(j + 2)) => (2, vec![x(j + 1)]),
            _ => (1, vec![x(j + 1), x(j + 2)]),
        }
    } else {
        return Err(err);
    };

    let mut darts = Vec::with_capacity(n + 1);
    if position + len <= n {
        darts.extend_from_slice(&walk.darts[..position]);
        darts.extend_from_slice(&replacement);
        darts.extend_from_slice(&walk.darts[position + len..]);
    } else {
        // wraps: the segment is darts[n-1], darts[0]
        darts.extend_from_slice(&walk.darts[1..n - 1]);
        darts.extend_from_slice(&replacement);
    }
    Ok(FlipWalk { darts, closed: walk.closed })
}
