use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{EmbeddedGraph, NONE};

/// BFS dart-numbering code; equal codes mean isomorphic embedded graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u32>);

/// The lexicographically smallest numbering found by [`canonical_numbering`].
#[derive(Debug, Clone)]
pub struct CanonicalNumbering {
    pub code: CanonicalCode,
    /// Darts in canonical order.
    pub order: Vec<usize>,
    /// Whether the minimum was attained on the mirrored rotation system.
    pub mirrored: bool,
}

/// Tries every start dart (and, with `allow_reflection`, every start dart of
/// the mirror image) and keeps the smallest code. The code lists, for each
/// dart in BFS order, the numbers of its rotation successor and its reverse
/// and the label of its start vertex.
pub fn canonical_numbering(g: &EmbeddedGraph, allow_reflection: bool) -> CanonicalNumbering {
    let n = g.dart_count();
    let mut best: Option<(Vec<u32>, Vec<usize>, bool)> = None;
    let mut num = vec![NONE; n];
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(3 * n);
    let mirrors: &[bool] = if allow_reflection { &[false, true] } else { &[false] };
    for &mirrored in mirrors {
        for start in 0..n {
            let beaten = bfs_code(g, start, mirrored, best.as_ref().map(|b| b.0.as_slice()), &mut num, &mut order, &mut code);
            if !beaten {
                best = Some((code.clone(), order.clone(), mirrored));
            }
        }
    }
    let (code, order, mirrored) = best.expect("graph has darts");
    CanonicalNumbering { code: CanonicalCode(code), order, mirrored }
}

/// Writes the code for `start` into `code`; returns `true` as soon as the
/// prefix is known to be larger than or equal to `bound`.
fn bfs_code(
    g: &EmbeddedGraph,
    start: usize,
    mirrored: bool,
    bound: Option<&[u32]>,
    num: &mut [usize],
    order: &mut Vec<usize>,
    code: &mut Vec<u32>,
) -> bool {
    for x in num.iter_mut() {
        *x = NONE;
    }
    order.clear();
    code.clear();
    num[start] = 0;
    order.push(start);
    let mut undecided = bound.is_some();
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        let s = if mirrored { g.sigma_inv(d) } else { g.sigma(d) };
        for e in [s, g.inv(d)] {
            if num[e] == NONE {
                num[e] = order.len();
                order.push(e);
            }
        }
        let label = g.dart_label(d).map_or(0, |l| l as u32 + 1);
        code.extend_from_slice(&[num[s] as u32, num[g.inv(d)] as u32, label]);
        if undecided {
            let b = bound.unwrap();
            let k = code.len();
            match code[k - 3..].cmp(&b[k - 3..k]) {
                Ordering::Less => undecided = false,
                Ordering::Greater => return true,
                Ordering::Equal => {}
            }
        }
        i += 1;
    }
    // equal to the bound is not an improvement
    undecided
}
