//! Built-in operations. The std crate ships the same operations as data
//! files; these constructors are the fallback and the reference.

use alloc::vec;
use alloc::vec::Vec;

use super::{LopspOperation, LspOperation, OpError, Operation};
use crate::surface_map::EmbeddedGraph;

pub const CATALOG_NAMES: [&str; 7] = ["identity", "dual", "truncation", "ambo", "join", "gyro", "snub"];

pub fn catalog(name: &str) -> Option<Operation> {
    let op = match name {
        "identity" => Operation::Lopsp(two_chamber_sphere([0, 1, 2])),
        "dual" => Operation::Lopsp(two_chamber_sphere([2, 1, 0])),
        "truncation" => Operation::Lsp(truncation()),
        "ambo" => Operation::Lsp(split_chamber([2, 0, 2, 1])),
        "join" => Operation::Lsp(split_chamber([0, 2, 0, 1])),
        "gyro" => Operation::Lopsp(cone_over_tree([0, 1, 0, 0, 2, 1, 1])),
        "snub" => Operation::Lopsp(cone_over_tree([2, 1, 2, 2, 0, 1, 1])),
        _ => return None,
    };
    Some(op)
}

fn typed(g: EmbeddedGraph, labels: Vec<u8>) -> EmbeddedGraph {
    g.with_labels(Some(labels)).expect("label count matches")
}

/// Three vertices `v0, v1, v2`, three edges, two triangles.
pub fn two_chamber_sphere(types: [u8; 3]) -> LopspOperation {
    let g = EmbeddedGraph::from_faces(3, &[vec![0, 1, 2], vec![0, 2, 1]]).expect("valid faces");
    LopspOperation::new(typed(g, types.to_vec()), [0, 1, 2]).expect("valid operation")
}

/// A single chamber as an lsp-operation.
pub fn lsp_triangle(types: [u8; 3]) -> LspOperation {
    let g = EmbeddedGraph::from_faces(3, &[vec![0, 1, 2], vec![2, 1, 0]]).expect("valid faces");
    let outer = outer_dart(&g, &[2, 1, 0]);
    LspOperation::new(typed(g, types.to_vec()), [0, 1, 2], outer).expect("valid operation")
}

/// Some dart running `walk[0] -> walk[1]`.
fn outer_dart(g: &EmbeddedGraph, walk: &[usize]) -> usize {
    (0..g.dart_count()).find(|&d| g.tail(d) == walk[0] && g.head(d) == walk[1]).expect("edge exists")
}

/// The chamber `v0 v1 v2` with a vertex `m = 3` on the `v0 - v2` side joined
/// to `v1`. Ambo and join differ only in types.
fn split_chamber(types: [u8; 4]) -> LspOperation {
    let g = EmbeddedGraph::from_faces(4, &[vec![0, 1, 3], vec![1, 2, 3], vec![3, 2, 1, 0]]).expect("valid faces");
    let outer = outer_dart(&g, &[3, 2]);
    LspOperation::new(typed(g, types.to_vec()), [0, 1, 2], outer).expect("valid operation")
}

/// Vertices `a = 3` on `v0 - v1` and `m = 4` on `v0 - v2`; the new edge runs
/// from `a` through `m` towards the old face centre.
fn truncation() -> LspOperation {
    let g = EmbeddedGraph::from_faces(5, &[vec![0, 3, 4], vec![3, 2, 4], vec![3, 1, 2], vec![4, 2, 1, 3, 0]])
        .expect("valid faces");
    let outer = outer_dart(&g, &[4, 2]);
    LspOperation::new(typed(g, vec![2, 1, 2, 0, 1]), [0, 1, 2], outer).expect("valid operation")
}

/// A vertex `p = 4` joined to every corner of the plane tree
/// `v1 - a - m1 - v0` plus `a - m2 - v2` (`a = 3`, `m1 = 5`, `m2 = 6`). Every
/// triangle contains `p`, and `p` has parallel edges to `a`, `m1` and `m2`.
fn cone_over_tree(types: [u8; 7]) -> LopspOperation {
    let walk = [1, 3, 5, 0, 5, 3, 6, 2, 6, 3];
    let tree_edge = |x: usize, y: usize| -> usize {
        let pairs = [(1, 3), (3, 5), (5, 0), (3, 6), (6, 2)];
        pairs.iter().position(|&(a, b)| (a, b) == (x, y) || (b, a) == (x, y)).expect("tree edge")
    };
    let n = walk.len();
    let faces: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|i| {
            let (w, x) = (walk[i], walk[(i + 1) % n]);
            vec![(w, tree_edge(w, x)), (x, 5 + (i + 1) % n), (4, 5 + i)]
        })
        .collect();
    let g = EmbeddedGraph::from_face_edges(7, &faces).expect("valid faces");
    LopspOperation::new(typed(g, types.to_vec()), [0, 1, 2]).expect("valid operation")
}

/// An lsp-operation from faces and an outer walk given by its first two
/// vertices; used for hand-authored test operations.
pub fn lsp_from_faces(
    vertex_count: usize,
    faces: &[Vec<usize>],
    types: Vec<u8>,
    outer: [usize; 2],
) -> Result<LspOperation, OpError> {
    let g = EmbeddedGraph::from_faces(vertex_count, faces)?;
    let d = outer_dart(&g, &outer);
    LspOperation::new(typed(g, types), [0, 1, 2], d)
}

/// Two deliberately non-polyhedral lsp-operations. `pendant` hangs an edge
/// off every old vertex into each chamber, `subdivide` puts a degree-2
/// vertex on every old edge.
pub const NON_C3_NAMES: [&str; 2] = ["pendant", "subdivide"];

pub fn non_c3(name: &str) -> Option<LspOperation> {
    match name {
        "subdivide" => Some(
            lsp_from_faces(4, &[vec![0, 3, 2], vec![3, 1, 2], vec![2, 1, 3, 0]], vec![0, 0, 2, 1], [2, 1])
                .expect("valid operation"),
        ),
        "pendant" => Some(pendant()),
        _ => None,
    }
}

/// `v0 = 0, v1 = 1, v2 = 2`, slit `v0 - y - x` with `y = 3`, `x = 4`,
/// triangulated as a fan from `v2`.
fn pendant() -> LspOperation {
    let faces = [
        vec![(2, 2), (0, 4), (3, 6)],
        vec![(2, 6), (3, 5), (4, 8)],
        vec![(2, 8), (4, 5), (3, 7)],
        vec![(2, 7), (3, 4), (0, 3)],
        vec![(2, 3), (0, 0), (1, 1)],
        vec![(2, 1), (1, 0), (0, 2)],
    ];
    let g = EmbeddedGraph::from_face_edges(5, &faces).expect("valid faces");
    let outer = outer_dart(&g, &[2, 1]);
    LspOperation::new(typed(g, vec![0, 1, 2, 1, 0]), [0, 1, 2], outer).expect("valid operation")
}
