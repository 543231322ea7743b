use alloc::vec::Vec;

use super::{apply, ApplicationResult, LopspOperation, OpError};
use crate::solids;
use crate::surface_map::EmbeddedGraph;
use crate::topology::{four_cycles, is_ck_embedded, is_trivial_four_cycle, CkReport, CkWitness};

/// `ck`-class of an operation, read off its result on a `c3`-embedded
/// witness graph.
#[derive(Debug, Clone)]
pub struct CkClassification {
    pub k: u8,
    pub report: CkReport,
    /// A 2-cycle or nontrivial 4-cycle of the glued subdivision when `k < 3`.
    pub cycle: Option<CkWitness>,
    /// Double chambers of the witness graph the cycle touches.
    pub copies: Vec<usize>,
    /// Whether the cycle lies in one patch copy (2-cycle) or in two copies
    /// sharing a side (4-cycle).
    pub localized: bool,
}

/// Copies an edge of the subdivision belongs to.
fn edge_copies(app: &ApplicationResult, d: usize) -> [usize; 2] {
    [app.copy[d], app.copy[app.subdivision.inv(d)]]
}

/// Smallest set of copies touching every edge of `cycle`, at most two.
fn covering_copies(app: &ApplicationResult, cycle: &[usize]) -> Option<Vec<usize>> {
    let sets: Vec<[usize; 2]> = cycle.iter().map(|&d| edge_copies(app, d)).collect();
    for &a in &sets[0] {
        if sets.iter().all(|s| s.contains(&a)) {
            return Some(alloc::vec![a]);
        }
    }
    for &a in &sets[0] {
        for s in &sets {
            for &b in s {
                if sets.iter().all(|t| t.contains(&a) || t.contains(&b)) {
                    let mut v = alloc::vec![a, b];
                    v.sort_unstable();
                    return Some(v);
                }
            }
        }
    }
    None
}

fn all_copies(app: &ApplicationResult, cycle: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = cycle.iter().flat_map(|&d| edge_copies(app, d)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Finds a small cycle witness in the glued subdivision, preferring cycles
/// inside one copy (2-cycles) or two copies (4-cycles).
fn cycle_witness(app: &ApplicationResult, k: u8) -> (Option<CkWitness>, Vec<usize>, bool) {
    let t = &app.subdivision;
    let mut fallback = None;
    if k < 2 {
        for v in 0..t.vertex_count() {
            let rot = t.rotation(v);
            for (i, &a) in rot.iter().enumerate() {
                for &b in &rot[i + 1..] {
                    if t.head(a) == t.head(b) && t.edge_of(a) != t.edge_of(b) {
                        let cycle = alloc::vec![a, t.inv(b)];
                        if let Some(c) = covering_copies(app, &cycle).filter(|c| c.len() == 1) {
                            return (Some(CkWitness::TwoCycle(cycle)), c, true);
                        }
                        fallback.get_or_insert(cycle);
                    }
                }
            }
        }
        return match fallback {
            Some(c) => {
                let copies = all_copies(app, &c);
                (Some(CkWitness::TwoCycle(c)), copies, false)
            }
            None => (None, Vec::new(), false),
        };
    }
    let fm = t.face_map();
    for c in four_cycles(t) {
        if is_trivial_four_cycle(t, &fm, &c) {
            continue;
        }
        if let Some(cover) = covering_copies(app, &c) {
            return (Some(CkWitness::NontrivialFourCycle(c.to_vec())), cover, true);
        }
        fallback.get_or_insert(c.to_vec());
    }
    match fallback {
        Some(c) => {
            let copies = all_copies(app, &c);
            (Some(CkWitness::NontrivialFourCycle(c)), copies, false)
        }
        None => (None, Vec::new(), false),
    }
}

/// Largest `k` such that `op` applied to the tetrahedron is `ck`-embedded.
pub fn classify_ck(op: &LopspOperation) -> Result<CkClassification, OpError> {
    classify_ck_with(op, &solids::tetrahedron())
}

/// Classification with a caller-chosen `c3`-embedded witness graph.
pub fn classify_ck_with(op: &LopspOperation, witness: &EmbeddedGraph) -> Result<CkClassification, OpError> {
    let app = apply(op, witness, None)?;
    let report = is_ck_embedded(&app.result);
    let k = report.k_max;
    let (cycle, copies, localized) = if k < 3 { cycle_witness(&app, k) } else { (None, Vec::new(), false) };
    Ok(CkClassification { k, report, cycle, copies, localized })
}
