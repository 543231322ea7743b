use super::*;
use crate::solids;
use proptest::prelude::*;

fn face_sizes(g: &EmbeddedGraph) -> Vec<usize> {
    let mut s: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
    s.sort_unstable();
    s
}

#[test]
fn tetrahedron_from_rotations() {
    // darts 2e, 2e+1 for edges 01 02 03 12 13 23
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let dart = |a: usize, b: usize| {
        edges
            .iter()
            .position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
            .map(|e| if edges[e].0 == a { 2 * e } else { 2 * e + 1 })
            .unwrap()
    };
    let nb = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]];
    let rotations: Vec<Vec<usize>> = (0..4).map(|v| nb[v].iter().map(|&w| dart(v, w)).collect()).collect();
    let pairing: Vec<usize> = (0..12).map(|d| d ^ 1).collect();
    let g = EmbeddedGraph::from_rotations(&rotations, &pairing, None).unwrap();
    assert_eq!(g.f_vector(), (4, 6, 4));
    assert_eq!(g.genus(), 0);
    assert_eq!(face_sizes(&g), vec![3, 3, 3, 3]);
}

#[test]
fn single_loop() {
    let g = solids::loop_graph();
    assert_eq!(g.f_vector(), (1, 1, 2));
    assert_eq!(g.euler_characteristic(), 2);
    assert_eq!(g.genus(), 0);
    assert_eq!(face_sizes(&g), vec![1, 1]);
}

#[test]
fn construction_errors() {
    assert_eq!(
        EmbeddedGraph::from_rotations(&[vec![0, 1]], &[0, 1], None),
        Err(GraphError::NotInvolution { dart: 0 })
    );
    assert_eq!(
        EmbeddedGraph::from_rotations(&[vec![0, 0]], &[1, 0], None),
        Err(GraphError::DartMissingOrDuplicated { dart: 0 })
    );
    assert_eq!(
        EmbeddedGraph::from_rotations(&[vec![0], vec![1], vec![2], vec![3]], &[1, 0, 3, 2], None),
        Err(GraphError::Disconnected)
    );
}

#[test]
fn platonic_face_structure() {
    assert_eq!(face_sizes(&solids::cycle(3)), vec![3, 3]);
    assert_eq!(face_sizes(&solids::tetrahedron()), vec![3; 4]);
    let cube = solids::cube();
    assert_eq!(cube.f_vector(), (8, 12, 6));
    assert_eq!(cube.genus(), 0);
    assert_eq!(solids::octahedron().f_vector(), (6, 12, 8));
    assert_eq!(solids::icosahedron().f_vector(), (12, 30, 20));
    let dodeca = solids::dodecahedron();
    assert_eq!(dodeca.f_vector(), (20, 30, 12));
    assert_eq!(face_sizes(&dodeca), vec![5; 12]);
}

#[test]
fn k7_is_a_torus_triangulation() {
    let k7 = solids::k7_torus();
    assert_eq!(face_sizes(&k7), vec![3; 14]);
    assert_eq!(k7.euler_characteristic(), 0);
    assert_eq!(k7.genus(), 1);
}

#[test]
fn subgraphs() {
    let cube = solids::cube();
    let all = vec![true; cube.dart_count()];
    let comps = cube.embedded_subgraph(&all).unwrap();
    assert_eq!(comps.len(), 1);
    assert!(comps[0].graph.is_isomorphic(&cube, false));
    assert_eq!(comps[0].graph.genus(), cube.genus());

    // one face boundary
    let face = &cube.faces()[0];
    let mut keep = vec![false; cube.dart_count()];
    for &d in &face.darts {
        keep[d] = true;
        keep[cube.inv(d)] = true;
    }
    let c = cube.embedded_subgraph(&keep).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(face_sizes(&c[0].graph), vec![4, 4]);

    // BFS spanning tree: 7 edges, one face walking every edge twice
    let mut keep = vec![false; cube.dart_count()];
    let mut seen = vec![false; 8];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for d in cube.rotation(v) {
            let w = cube.head(d);
            if !seen[w] {
                seen[w] = true;
                keep[d] = true;
                keep[cube.inv(d)] = true;
                queue.push_back(w);
            }
        }
    }
    let t = cube.embedded_subgraph(&keep).unwrap();
    assert_eq!(face_sizes(&t[0].graph), vec![14]);

    assert_eq!(cube.embedded_subgraph(&vec![false; 24]).unwrap_err(), GraphError::EmptySelection);
}

#[test]
fn canonical_codes() {
    let cube = solids::cube();
    assert!(!cube.is_isomorphic(&solids::octahedron(), false));
    assert_ne!(cube.canonical_code(true), solids::octahedron().canonical_code(true));
    let prism4 = solids::prism(4);
    assert!(cube.is_isomorphic(&prism4, false));
    let mirror = cube.mirror();
    assert!(cube.is_isomorphic(&mirror, false));
}

#[test]
fn chiral_map_needs_reflection() {
    // K7 on the torus is chiral
    let k7 = solids::k7_torus();
    let m = k7.mirror();
    assert!(!k7.is_isomorphic(&m, false));
    assert!(k7.is_isomorphic(&m, true));
}

#[test]
fn dual_swaps_vertices_and_faces() {
    let cube = solids::cube();
    let d = cube.dual();
    assert_eq!(d.f_vector(), (6, 12, 8));
    assert!(d.is_isomorphic(&solids::octahedron(), false));
    let k7 = solids::k7_torus();
    assert!(k7.dual().dual().is_isomorphic(&k7, false));
    // face sizes of the dual are the original degrees
    let mut degs: Vec<usize> = (0..k7.vertex_count()).map(|v| k7.degree(v)).collect();
    degs.sort_unstable();
    assert_eq!(face_sizes(&k7.dual()), degs);
}

fn random_perm(n: usize, seed: u64) -> Vec<usize> {
    use rand::{seq::SliceRandom, SeedableRng};
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    p
}

proptest! {
    #[test]
    fn code_is_relabeling_invariant(seed in any::<u64>(), which in 0usize..4) {
        let g = [solids::cube(), solids::k7_torus(), solids::dodecahedron(), solids::loop_graph()][which].clone();
        let perm = random_perm(g.dart_count(), seed);
        let vperm = random_perm(g.vertex_count(), seed.wrapping_add(1));
        let h = g.relabeled(&perm, &vperm);
        prop_assert_eq!(g.canonical_code(false), h.canonical_code(false));
        prop_assert_eq!(g.canonical_code(true), h.canonical_code(true));
    }

    #[test]
    fn face_sizes_sum_to_darts(which in 0usize..6) {
        let g = [solids::tetrahedron(), solids::cube(), solids::octahedron(), solids::icosahedron(), solids::k7_torus(), solids::loop_graph()][which].clone();
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, g.dart_count());
        prop_assert_eq!(total, 2 * g.edge_count());
    }
}

#[test]
fn canonical_forms_agree_on_isomorphic_copies() {
    let g = crate::solids::k7_torus();
    let n = g.dart_count();
    let perm: Vec<usize> = (0..n).map(|d| (d * 5 + 3) % n).collect();
    let vperm: Vec<usize> = (0..g.vertex_count()).rev().collect();
    let h = g.relabeled(&perm, &vperm);
    let (a, b) = (g.canonical_form(false), h.canonical_form(false));
    assert_eq!(a.successors(), b.successors());
    assert_eq!(a.pairing(), b.pairing());
    let m = g.mirror().canonical_form(true);
    assert_eq!(m.successors(), g.canonical_form(true).successors());
}
