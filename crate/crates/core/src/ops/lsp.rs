use alloc::vec;
use alloc::vec::Vec;

use super::{ApplicationResult, LopspOperation, LspOperation, OpError};
use crate::chambers::{barycentric, edge_type, graph_from_subdivision, ChamberSystem};
use crate::surface_map::{EmbeddedGraph, NONE};

/// An lsp-operation glued to a mirrored copy of itself along its boundary.
#[derive(Debug, Clone)]
pub struct LspDouble {
    pub operation: LopspOperation,
    /// Vertex of the lsp-operation for every vertex of the double.
    pub vertex_origin: Vec<usize>,
    /// Inner face of the lsp-operation for every face of the double.
    pub face_origin: Vec<usize>,
    /// Whether a face of the double lies in the mirrored copy.
    pub mirrored: Vec<bool>,
}

pub fn lsp_to_lopsp(op: &LspOperation) -> LspDouble {
    let g = op.graph();
    let fm = g.face_map();
    let outer = fm.face_of[op.outer_dart()];
    let n = g.dart_count();
    let on_boundary_edge = |d: usize| fm.face_of[d] == outer || fm.face_of[g.inv(d)] == outer;
    // darts 0..n copy the operation; interior darts get a mirror copy
    let mut mirror_id = vec![NONE; n];
    let mut total = n;
    for d in 0..n {
        if !on_boundary_edge(d) {
            mirror_id[d] = total;
            total += 1;
        }
    }
    let mut pairing = vec![0; total];
    for d in 0..n {
        pairing[d] = g.inv(d);
        if mirror_id[d] != NONE {
            pairing[mirror_id[d]] = mirror_id[g.inv(d)];
        }
    }
    let mut rotations = Vec::new();
    let mut vertex_origin = Vec::new();
    let mut specials = [NONE; 3];
    let labels = g.labels().unwrap();
    let mut out_labels = Vec::new();
    for v in 0..g.vertex_count() {
        let rot = g.rotation(v);
        // the outer angle sits between p and sigma(p)
        let cut = rot.iter().position(|&p| fm.face_of[g.sigma(p)] == outer);
        match cut {
            None => {
                rotations.push(rot.clone());
                rotations.push(rot.iter().rev().map(|&d| mirror_id[d]).collect());
                vertex_origin.extend([v, v]);
                out_labels.extend([labels[v], labels[v]]);
            }
            Some(i) => {
                let k = rot.len();
                // clockwise from q = sigma(p) to p, then the mirrored interior
                let plain: Vec<usize> = (1..=k).map(|j| rot[(i + j) % k]).collect();
                let mut r = plain.clone();
                r.extend(plain[1..k - 1].iter().rev().map(|&d| mirror_id[d]));
                if let Some(s) = op.specials().iter().position(|&s| s == v) {
                    specials[s] = rotations.len();
                }
                rotations.push(r);
                vertex_origin.push(v);
                out_labels.push(labels[v]);
            }
        }
    }
    let doubled = EmbeddedGraph::from_rotations(&rotations, &pairing, Some(out_labels)).expect("doubling is valid");
    let dfm = doubled.face_map();
    let mut face_origin = Vec::with_capacity(dfm.faces.len());
    let mut mirrored = Vec::with_capacity(dfm.faces.len());
    for face in &dfm.faces {
        let x = face.darts[0];
        if x < n && fm.face_of[x] != outer {
            face_origin.push(fm.face_of[x]);
            mirrored.push(false);
        } else {
            let orig = if x < n { x } else { mirror_id.iter().position(|&m| m == x).unwrap() };
            face_origin.push(fm.face_of[g.inv(orig)]);
            mirrored.push(true);
        }
    }
    // renumber inner faces of the lsp to chamber indices
    let cs = op.chambers();
    let face_origin = face_origin.iter().map(|&f| cs.chamber_of_face[f].expect("inner face")).collect();
    let operation = LopspOperation::new(doubled, specials).expect("the double of an lsp-operation is a lopsp-operation");
    LspDouble { operation, vertex_origin, face_origin, mirrored }
}

/// Sign of the cyclic order `(a, b, c)` within a cyclic sequence of three
/// distinct items.
fn cyclic_sign(seq: &[usize], a: usize, b: usize) -> bool {
    let pa = seq.iter().position(|&x| x == a).unwrap();
    seq[(pa + 1) % seq.len()] == b
}

/// Applies an lsp-operation by gluing a plain or mirrored copy into every
/// chamber of `B_G`.
pub fn apply_lsp_direct(op: &LspOperation, g: &EmbeddedGraph) -> Result<ApplicationResult, OpError> {
    let o = op.graph();
    let ofm = o.face_map();
    let outer = ofm.face_of[op.outer_dart()];
    let [v0, v1, v2] = op.specials();
    let olabels = o.labels().unwrap();

    // counterclockwise order of the specials around the inner region
    let inner_walk: Vec<usize> = ofm.faces[outer].darts.iter().rev().map(|&d| o.head(d)).collect();
    let specials_seq: Vec<usize> = inner_walk.iter().copied().filter(|v| [v0, v1, v2].contains(v)).collect();
    let op_positive = cyclic_sign(&specials_seq, v0, v1);

    // boundary edges: type of the B_G edge they subdivide
    let mut path_type = vec![NONE; o.dart_count()];
    {
        let walk = &ofm.faces[outer].darts;
        let start = walk.iter().position(|&d| [v0, v1, v2].contains(&o.tail(d))).unwrap();
        let mut from = o.tail(walk[start]);
        let mut segment = Vec::new();
        for i in 0..walk.len() {
            let d = walk[(start + i) % walk.len()];
            segment.push(d);
            let to = o.head(d);
            if [v0, v1, v2].contains(&to) {
                let missing = [v0, v1, v2].iter().position(|&s| s != from && s != to).unwrap();
                for &x in &segment {
                    path_type[x] = missing;
                    path_type[o.inv(x)] = missing;
                }
                segment.clear();
                from = to;
            }
        }
    }

    let bary = barycentric(g);
    let b = &bary.graph;
    let bfm = b.face_map();
    let cs = ChamberSystem::from_triangulation(b, &bfm, None)?;
    let n = o.dart_count();
    let mut id = vec![NONE; cs.len() * n];
    let mut active = Vec::new();
    let mut plain = vec![false; cs.len()];
    for c in 0..cs.len() {
        let tri = &bfm.faces[cs.face_of_chamber[c]].darts;
        let types: Vec<usize> = tri.iter().map(|&d| b.dart_label(d).unwrap() as usize).collect();
        plain[c] = cyclic_sign(&types, 0, 1) == op_positive;
        for x in 0..n {
            let inner_face = if plain[c] { ofm.face_of[x] } else { ofm.face_of[o.inv(x)] };
            if inner_face != outer {
                id[c * n + x] = active.len();
                active.push((c, x));
            }
        }
    }
    let total = active.len();
    let mut phi = vec![0; total];
    let mut inv = vec![0; total];
    let mut labels = vec![0; total];
    let mut pi = vec![0; total];
    let mut copy = vec![0; total];
    for (t, &(c, x)) in active.iter().enumerate() {
        let next = if plain[c] { o.phi(x) } else { o.sigma_inv(o.inv(x)) };
        phi[t] = id[c * n + next];
        inv[t] = if path_type[x] != NONE {
            id[cs.s[path_type[x]][c] * n + o.inv(x)]
        } else {
            id[c * n + o.inv(x)]
        };
        labels[t] = olabels[o.tail(x)];
        pi[t] = x;
        copy[t] = c;
    }
    debug_assert!(phi.iter().chain(inv.iter()).all(|&x| x != NONE));
    debug_assert!((0..o.dart_count()).all(|d| path_type[d] == NONE || edge_type(o, d).is_some()));
    let subdivision = EmbeddedGraph::from_face_permutation(&phi, inv, Some(&labels))?;
    let (result, result_darts) = graph_from_subdivision(&subdivision)?;
    Ok(ApplicationResult { result, subdivision, pi, copy, result_darts })
}
