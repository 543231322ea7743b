use alloc::vec;
use alloc::vec::Vec;

use super::{find_cut_path, CutPath, CutPathStrategy, LopspOperation, OpError};
use crate::chambers::{double_chambers, graph_from_subdivision, DoubleChamberSystem};
use crate::surface_map::{EmbeddedGraph, NONE};
use crate::topology::{bridges, edge_mask, internal_component, InternalComponent};

/// The operation cut open along a cut-path: a disk whose boundary runs
/// `v1 -> v0L -> v2 -> v0R -> v1` counterclockwise.
#[derive(Debug, Clone)]
pub struct DoubleChamberPatch {
    pub component: InternalComponent,
    pub path: CutPath,
    /// Patch darts along the boundary in the order above, interior on the left.
    pub boundary: Vec<usize>,
    /// Number of darts on the `v1 - v0` sides and on the `v0 - v2` sides.
    pub side_lengths: (usize, usize),
    /// Corner vertices `[v1, v0L, v2, v0R]` of the patch graph.
    pub corners: [usize; 4],
}

impl DoubleChamberPatch {
    pub fn graph(&self) -> &EmbeddedGraph {
        &self.component.graph
    }

    /// Dart of the operation for each patch dart.
    pub fn lift(&self, d: usize) -> usize {
        self.component.dart_origin[d]
    }

    /// Side index (0..4) and offset along that side of a boundary dart.
    fn side_of(&self, position: usize) -> (usize, usize) {
        let (a, b) = self.side_lengths;
        let ends = [a, a + b, a + 2 * b, 2 * a + 2 * b];
        let side = ends.iter().position(|&e| position < e).unwrap();
        let start = if side == 0 { 0 } else { ends[side - 1] };
        (side, position - start)
    }

    fn side_len(&self, side: usize) -> usize {
        if side == 0 || side == 3 {
            self.side_lengths.0
        } else {
            self.side_lengths.1
        }
    }

    /// Position on the boundary of the dart at `offset` along `side`.
    fn position(&self, side: usize, offset: usize) -> usize {
        let (a, b) = self.side_lengths;
        [0, a, a + b, a + 2 * b][side] + offset
    }
}

pub fn double_chamber_patch(op: &LopspOperation, path: &CutPath) -> DoubleChamberPatch {
    let g = op.graph();
    let keep = edge_mask(g, &path.darts);
    let analysis = bridges(g, &keep).expect("edge masks are closed under inv");
    debug_assert_eq!(analysis.faces.len(), 1);
    let component = internal_component(g, &analysis, 0).expect("a path has a single simple face");
    let m = component.walk.len();
    let start = component.walk.iter().position(|&d| d == path.darts[0]).expect("walk contains the path");
    let boundary: Vec<usize> = (0..m).map(|i| (start + i) % m).collect();
    let a = path.split;
    let b = path.darts.len() - path.split;
    debug_assert_eq!(m, 2 * (a + b));
    let cg = &component.graph;
    let corners = [cg.tail(boundary[0]), cg.tail(boundary[a]), cg.tail(boundary[a + b]), cg.tail(boundary[a + 2 * b])];
    DoubleChamberPatch { component, path: path.clone(), boundary, side_lengths: (a, b), corners }
}

/// The result of applying an operation, with the labelled triangulation
/// `O_P(G)` it was read off from.
#[derive(Debug, Clone)]
pub struct ApplicationResult {
    pub result: EmbeddedGraph,
    /// Barycentric subdivision of `result`, glued from patch copies.
    pub subdivision: EmbeddedGraph,
    /// Operation dart of every subdivision dart.
    pub pi: Vec<usize>,
    /// Double chamber (or chamber, for lsp) copy every subdivision dart lies in.
    pub copy: Vec<usize>,
    /// Subdivision dart of every dart of `result`.
    pub result_darts: Vec<usize>,
}

impl ApplicationResult {
    /// Operation vertex of a subdivision vertex.
    pub fn pi_vertex(&self, op: &EmbeddedGraph, v: usize) -> usize {
        op.tail(self.pi[self.subdivision.vertex_dart(v)])
    }
}

/// Applies `op` to `g`, cutting along `path` or along a minimal cut-path.
pub fn apply(op: &LopspOperation, g: &EmbeddedGraph, path: Option<&CutPath>) -> Result<ApplicationResult, OpError> {
    let owned;
    let path = match path {
        Some(p) => p,
        None => {
            owned = find_cut_path(op, CutPathStrategy::Minimal);
            &owned
        }
    };
    let patch = double_chamber_patch(op, path);
    let dcs = double_chambers(g);
    glue(op, &patch, &dcs)
}

fn glue(op: &LopspOperation, patch: &DoubleChamberPatch, dcs: &DoubleChamberSystem) -> Result<ApplicationResult, OpError> {
    let ic = &patch.component;
    let pg = &ic.graph;
    let m = ic.walk.len();
    // inner darts: boundary copies 0..m and bridge darts 2m..
    let inner: Vec<usize> = (0..m).chain(2 * m..pg.dart_count()).collect();
    let mut index = vec![NONE; pg.dart_count()];
    for (i, &x) in inner.iter().enumerate() {
        index[x] = i;
    }
    let mut position = vec![NONE; m];
    for (p, &x) in patch.boundary.iter().enumerate() {
        position[x] = p;
    }
    let k = inner.len();
    let total = dcs.len() * k;
    let mut phi = vec![0; total];
    let mut inv = vec![0; total];
    let mut labels = vec![0; total];
    let mut pi = vec![0; total];
    let mut copy = vec![0; total];
    let op_labels = op.graph().labels().expect("operations are typed");
    for c in 0..dcs.len() {
        for (i, &x) in inner.iter().enumerate() {
            let id = c * k + i;
            phi[id] = c * k + index[pg.phi(x)];
            pi[id] = ic.dart_origin[x];
            labels[id] = op_labels[op.graph().tail(pi[id])];
            copy[id] = c;
            inv[id] = if x < m {
                let (side, offset) = patch.side_of(position[x]);
                let (other, other_side) = dcs.across(c, side);
                debug_assert_eq!(other_side, 3 - side);
                let mate = patch.boundary[patch.position(other_side, patch.side_len(side) - 1 - offset)];
                other * k + index[mate]
            } else {
                c * k + index[pg.inv(x)]
            };
        }
    }
    let subdivision = EmbeddedGraph::from_face_permutation(&phi, inv, Some(&labels))?;
    let (result, result_darts) = graph_from_subdivision(&subdivision)?;
    debug_assert_eq!(result.genus(), dcs.bary.graph.genus());
    Ok(ApplicationResult { result, subdivision, pi, copy, result_darts })
}
