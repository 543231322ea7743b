//! lsp- and lopsp-operations: validation, cut-paths, double chamber patches,
//! application to embedded graphs and `ck`-classification.

mod apply;
mod catalog;
mod classify;
mod cut_path;
mod lsp;

pub use apply::{apply, double_chamber_patch, ApplicationResult, DoubleChamberPatch};
pub use catalog::{catalog, lsp_triangle, non_c3, two_chamber_sphere, CATALOG_NAMES, NON_C3_NAMES};
pub use classify::{classify_ck, classify_ck_with, CkClassification};
pub use cut_path::{find_cut_path, CutPath, CutPathStrategy};
pub use lsp::{apply_lsp_direct, lsp_to_lopsp, LspDouble};

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chambers::{edge_type, ChamberError, ChamberSystem};
use crate::surface_map::{EmbeddedGraph, GraphError};
use crate::topology;

/// The definition clause a [`Diagnostic`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// Every vertex carries a type in `0..=2`.
    Types,
    /// The special vertices exist and are distinct.
    Specials,
    Plane,
    Triangles,
    SameTypeEdge,
    /// Non-special type-1 vertices have degree 4 (3 on the boundary of an lsp).
    EdgeVertexDegree,
    /// `v0` and `v2` are not of type 1.
    SpecialTypes,
    /// A type-1 `v1` has degree 2.
    V1Degree,
    TwoConnected,
    /// The special vertices lie on the outer face of an lsp.
    OuterFace,
}

impl Clause {
    pub fn code(self) -> &'static str {
        match self {
            Clause::Types => "types",
            Clause::Specials => "specials",
            Clause::Plane => "plane",
            Clause::Triangles => "triangles",
            Clause::SameTypeEdge => "same-type-edge",
            Clause::EdgeVertexDegree => "type-1-degree",
            Clause::SpecialTypes => "special-types",
            Clause::V1Degree => "v1-degree",
            Clause::TwoConnected => "2-connected",
            Clause::OuterFace => "outer-face",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Vertex(usize),
    Dart(usize),
    Face(usize),
    Nothing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub clause: Clause,
    pub witness: Witness,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.clause {
            Clause::Types => "vertex types missing or outside 0..=2",
            Clause::Specials => "special vertices missing or not distinct",
            Clause::Plane => "graph is not plane",
            Clause::Triangles => "face is not a triangle",
            Clause::SameTypeEdge => "edge joins vertices of the same type",
            Clause::EdgeVertexDegree => "type-1 vertex has the wrong degree",
            Clause::SpecialTypes => "v0 or v2 has type 1",
            Clause::V1Degree => "v1 has type 1 but degree other than 2",
            Clause::TwoConnected => "graph is not 2-connected",
            Clause::OuterFace => "special vertex not on the outer face",
        };
        write!(f, "[{}] {what}", self.clause.code())?;
        match self.witness {
            Witness::Vertex(v) => write!(f, " (vertex {v})"),
            Witness::Dart(d) => write!(f, " (dart {d})"),
            Witness::Face(x) => write!(f, " (face {x})"),
            Witness::Nothing => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpError {
    Invalid(Vec<Diagnostic>),
    Graph(GraphError),
    Chamber(ChamberError),
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpError::Invalid(ds) => {
                write!(f, "invalid operation")?;
                for d in ds {
                    write!(f, "; {d}")?;
                }
                Ok(())
            }
            OpError::Graph(e) => write!(f, "{e}"),
            OpError::Chamber(e) => write!(f, "{e}"),
        }
    }
}

impl From<GraphError> for OpError {
    fn from(e: GraphError) -> Self {
        OpError::Graph(e)
    }
}

impl From<ChamberError> for OpError {
    fn from(e: ChamberError) -> Self {
        OpError::Chamber(e)
    }
}

/// Checks shared by both definitions. `outer` is the excluded face for lsp.
fn common_checks(g: &EmbeddedGraph, specials: [usize; 3], outer: Option<usize>, out: &mut Vec<Diagnostic>) -> bool {
    let nv = g.vertex_count();
    let Some(labels) = g.labels() else {
        out.push(Diagnostic { clause: Clause::Types, witness: Witness::Nothing });
        return false;
    };
    if let Some(v) = labels.iter().position(|&l| l > 2) {
        out.push(Diagnostic { clause: Clause::Types, witness: Witness::Vertex(v) });
        return false;
    }
    let [v0, v1, v2] = specials;
    if v0 >= nv || v1 >= nv || v2 >= nv || v0 == v1 || v1 == v2 || v0 == v2 {
        out.push(Diagnostic { clause: Clause::Specials, witness: Witness::Nothing });
        return false;
    }
    if g.genus() != 0 {
        out.push(Diagnostic { clause: Clause::Plane, witness: Witness::Nothing });
    }
    let fm = g.face_map();
    for (f, face) in fm.faces.iter().enumerate() {
        if Some(f) != outer && face.len() != 3 {
            out.push(Diagnostic { clause: Clause::Triangles, witness: Witness::Face(f) });
        }
    }
    for d in 0..g.dart_count() {
        if d <= g.inv(d) && edge_type(g, d).is_none() {
            out.push(Diagnostic { clause: Clause::SameTypeEdge, witness: Witness::Dart(d) });
        }
    }
    for v in [v0, v2] {
        if labels[v] == 1 {
            out.push(Diagnostic { clause: Clause::SpecialTypes, witness: Witness::Vertex(v) });
        }
    }
    if labels[v1] == 1 && g.degree(v1) != 2 {
        out.push(Diagnostic { clause: Clause::V1Degree, witness: Witness::Vertex(v1) });
    }
    if let Some(c) = topology::smallest_cut(g).filter(|c| c.len() == 1) {
        out.push(Diagnostic { clause: Clause::TwoConnected, witness: Witness::Vertex(c[0]) });
    }
    true
}

pub fn validate_lopsp(g: &EmbeddedGraph, specials: [usize; 3]) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    if common_checks(g, specials, None, &mut out) {
        for v in 0..g.vertex_count() {
            if !specials.contains(&v) && g.label(v) == Some(1) && g.degree(v) != 4 {
                out.push(Diagnostic { clause: Clause::EdgeVertexDegree, witness: Witness::Vertex(v) });
            }
        }
    }
    out
}

pub fn validate_lsp(g: &EmbeddedGraph, specials: [usize; 3], outer: usize) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    if outer >= g.dart_count() {
        out.push(Diagnostic { clause: Clause::OuterFace, witness: Witness::Dart(outer) });
        return out;
    }
    let fm = g.face_map();
    let outer_face = fm.face_of[outer];
    if common_checks(g, specials, Some(outer_face), &mut out) {
        let mut on_boundary = vec![false; g.vertex_count()];
        for &d in &fm.faces[outer_face].darts {
            on_boundary[g.tail(d)] = true;
        }
        for &s in &specials {
            if !on_boundary[s] {
                out.push(Diagnostic { clause: Clause::OuterFace, witness: Witness::Vertex(s) });
            }
        }
        for v in 0..g.vertex_count() {
            let want = if on_boundary[v] { 3 } else { 4 };
            if !specials.contains(&v) && g.label(v) == Some(1) && g.degree(v) != want {
                out.push(Diagnostic { clause: Clause::EdgeVertexDegree, witness: Witness::Vertex(v) });
            }
        }
    }
    out
}

/// A local orientation-preserving symmetry-preserving operation: a typed
/// sphere triangulation with special vertices `v0, v1, v2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LopspOperation {
    graph: EmbeddedGraph,
    specials: [usize; 3],
}

impl LopspOperation {
    pub fn new(graph: EmbeddedGraph, specials: [usize; 3]) -> Result<Self, OpError> {
        let diagnostics = validate_lopsp(&graph, specials);
        if !diagnostics.is_empty() {
            return Err(OpError::Invalid(diagnostics));
        }
        Ok(LopspOperation { graph, specials })
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    /// `[v0, v1, v2]`.
    pub fn specials(&self) -> [usize; 3] {
        self.specials
    }

    pub fn chambers(&self) -> ChamberSystem {
        ChamberSystem::from_triangulation(&self.graph, &self.graph.face_map(), None).expect("validated operation")
    }

    pub fn chamber_count(&self) -> usize {
        self.graph.face_count()
    }

    /// Factor by which the operation multiplies edge counts.
    pub fn inflation_factor(&self) -> usize {
        self.chamber_count() / 2
    }
}

/// A local symmetry-preserving operation: a typed plane graph whose inner
/// faces are chambers, with special vertices on the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LspOperation {
    graph: EmbeddedGraph,
    specials: [usize; 3],
    outer: usize,
}

impl LspOperation {
    /// `outer` is any dart whose face (on its left) is the outer face.
    pub fn new(graph: EmbeddedGraph, specials: [usize; 3], outer: usize) -> Result<Self, OpError> {
        let diagnostics = validate_lsp(&graph, specials, outer);
        if !diagnostics.is_empty() {
            return Err(OpError::Invalid(diagnostics));
        }
        Ok(LspOperation { graph, specials, outer })
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn specials(&self) -> [usize; 3] {
        self.specials
    }

    pub fn outer_dart(&self) -> usize {
        self.outer
    }

    pub fn outer_face(&self) -> usize {
        self.graph.face_map().face_of[self.outer]
    }

    /// Inner faces as a chamber system; chambers on the boundary are fixed by
    /// the generator crossing it.
    pub fn chambers(&self) -> ChamberSystem {
        let fm = self.graph.face_map();
        ChamberSystem::from_triangulation(&self.graph, &fm, Some(fm.face_of[self.outer])).expect("validated operation")
    }

    pub fn chamber_count(&self) -> usize {
        self.graph.face_count() - 1
    }

    pub fn inflation_factor(&self) -> usize {
        self.chamber_count()
    }
}

/// Either kind of operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operation {
    Lsp(LspOperation),
    Lopsp(LopspOperation),
}

impl Operation {
    /// The operation as a lopsp-operation (doubling an lsp).
    pub fn to_lopsp(&self) -> LopspOperation {
        match self {
            Operation::Lsp(o) => lsp_to_lopsp(o).operation,
            Operation::Lopsp(o) => o.clone(),
        }
    }

    pub fn inflation_factor(&self) -> usize {
        match self {
            Operation::Lsp(o) => o.inflation_factor(),
            Operation::Lopsp(o) => o.inflation_factor(),
        }
    }
}

#[cfg(test)]
mod tests;
