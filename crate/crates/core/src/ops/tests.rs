use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::chambers::barycentric;
use crate::solids;

fn corpus() -> Vec<(&'static str, EmbeddedGraph)> {
    vec![
        ("tetrahedron", solids::tetrahedron()),
        ("cube", solids::cube()),
        ("octahedron", solids::octahedron()),
        ("k7", solids::k7_torus()),
        ("bouquet", solids::torus_bouquet()),
        ("loop", solids::loop_graph()),
        ("digon", solids::cycle(2)),
    ]
}

fn lopsp(name: &str) -> LopspOperation {
    catalog(name).unwrap().to_lopsp()
}

fn lsp(name: &str) -> LspOperation {
    match catalog(name).unwrap() {
        Operation::Lsp(o) => o,
        Operation::Lopsp(_) => panic!("{name} is not an lsp-operation"),
    }
}

/// Simple paths from `from` to `to` avoiding `blocked`, by exhaustive search.
fn simple_paths(g: &EmbeddedGraph, from: usize, to: usize, blocked: &[usize]) -> Vec<Vec<usize>> {
    fn go(g: &EmbeddedGraph, v: usize, to: usize, seen: &mut Vec<bool>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == to {
            out.push(path.clone());
            return;
        }
        for d in g.rotation(v) {
            let w = g.head(d);
            if !seen[w] {
                seen[w] = true;
                path.push(d);
                go(g, w, to, seen, path, out);
                path.pop();
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.vertex_count()];
    for &b in blocked {
        seen[b] = true;
    }
    seen[from] = true;
    let mut out = Vec::new();
    go(g, from, to, &mut seen, &mut Vec::new(), &mut out);
    out
}

fn brute_force_cut_path_length(op: &LopspOperation) -> usize {
    let g = op.graph();
    let [v0, v1, v2] = op.specials();
    let mut best = usize::MAX;
    for p in simple_paths(g, v0, v1, &[v2]) {
        let inner: Vec<usize> = p.iter().map(|&d| g.head(d)).collect();
        for q in simple_paths(g, v0, v2, &inner) {
            best = best.min(p.len() + q.len());
        }
    }
    best
}

#[test]
fn catalog_entries_validate() {
    for name in CATALOG_NAMES {
        let op = catalog(name).unwrap();
        let lo = op.to_lopsp();
        assert!(validate_lopsp(lo.graph(), lo.specials()).is_empty(), "{name}");
    }
    for name in NON_C3_NAMES {
        assert!(non_c3(name).is_some());
    }
}

#[test]
fn inflation_factors() {
    let expected = [("identity", 1), ("dual", 1), ("truncation", 3), ("ambo", 2), ("join", 2), ("gyro", 5), ("snub", 5)];
    for (name, k) in expected {
        let op = catalog(name).unwrap();
        assert_eq!(op.inflation_factor(), k, "{name}");
        assert_eq!(op.to_lopsp().inflation_factor(), k, "{name} doubled");
    }
}

#[test]
fn validation_names_clause_and_witness() {
    // identity plus a same-type edge between v0 and a new type-0 vertex
    let g = EmbeddedGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 2, 1]]).unwrap();
    let g = g.with_labels(Some(vec![0, 1, 2, 0])).unwrap();
    let diags = validate_lopsp(&g, [0, 1, 2]);
    assert!(diags.iter().any(|d| d.clause == Clause::SameTypeEdge), "{diags:?}");
    assert!(diags.iter().any(|d| d.clause == Clause::Triangles && d.witness != Witness::Nothing));

    let id = two_chamber_sphere([0, 1, 2]);
    let unlabeled = id.graph().clone().with_labels(None).unwrap();
    assert_eq!(validate_lopsp(&unlabeled, [0, 1, 2])[0].clause, Clause::Types);
    assert_eq!(validate_lopsp(id.graph(), [0, 0, 2])[0].clause, Clause::Specials);
    let wrong_special = id.graph().clone().with_labels(Some(vec![1, 0, 2])).unwrap();
    let diags = validate_lopsp(&wrong_special, [0, 1, 2]);
    assert!(diags.contains(&Diagnostic { clause: Clause::SpecialTypes, witness: Witness::Vertex(0) }));

    let torus = solids::k7_torus();
    assert!(validate_lopsp(&torus, [0, 1, 2]).iter().any(|d| d.clause == Clause::Types));
}

#[test]
fn lsp_validation_checks_outer_face() {
    let t = lsp("truncation");
    let fm = t.graph().face_map();
    let inner = (0..t.graph().dart_count()).find(|&d| fm.face_of[d] != t.outer_face()).unwrap();
    let g = t.graph().clone();
    let diags = validate_lsp(&g, t.specials(), inner);
    assert!(!diags.is_empty());
}

#[test]
fn identity_cut_path_is_unique() {
    let op = lopsp("identity");
    let p = find_cut_path(&op, CutPathStrategy::Minimal);
    assert_eq!((p.len(), p.split), (2, 1));
    assert!(p.is_valid_for(&op));
    let patch = double_chamber_patch(&op, &p);
    assert_eq!(patch.graph().face_count(), 3);
    assert_eq!(patch.side_lengths, (1, 1));
}

#[test]
fn minimal_cut_paths_match_brute_force() {
    let mut ops: Vec<LopspOperation> = CATALOG_NAMES.iter().map(|n| lopsp(n)).collect();
    ops.extend(NON_C3_NAMES.iter().map(|n| lsp_to_lopsp(&non_c3(n).unwrap()).operation));
    for op in &ops {
        let p = find_cut_path(op, CutPathStrategy::Minimal);
        assert!(p.is_valid_for(op));
        assert_eq!(p.len(), brute_force_cut_path_length(op));
        for seed in 0..5 {
            let q = find_cut_path(op, CutPathStrategy::Random(seed));
            assert!(q.is_valid_for(op));
        }
    }
}

#[test]
fn patch_keeps_every_chamber_once() {
    for name in CATALOG_NAMES {
        let op = lopsp(name);
        for strategy in [CutPathStrategy::Minimal, CutPathStrategy::Random(7)] {
            let path = find_cut_path(&op, strategy);
            let patch = double_chamber_patch(&op, &path);
            let pg = patch.graph();
            let pfm = pg.face_map();
            // boundary darts have the interior on their left
            let outer = pfm.face_of[pg.inv(patch.boundary[0])];
            assert!(patch.boundary.iter().all(|&d| pfm.face_of[pg.inv(d)] == outer && pfm.face_of[d] != outer));
            assert_eq!(pfm.faces[outer].len(), patch.boundary.len());
            assert_eq!(pfm.faces.len() - 1, op.chamber_count(), "{name}");
            let ofm = op.graph().face_map();
            let mut hit = vec![0; op.chamber_count()];
            for (f, face) in pfm.faces.iter().enumerate() {
                if f != outer {
                    hit[ofm.face_of[patch.lift(face.darts[0])]] += 1;
                }
            }
            assert!(hit.iter().all(|&h| h == 1), "{name}");
            let [v1, v0l, v2, v0r] = patch.corners;
            let lifts = [v1, v0l, v2, v0r].map(|v| patch.component.copy_of[v]);
            let [s0, s1, s2] = op.specials();
            assert_eq!(lifts, [s1, s0, s2, s0]);
        }
    }
}

/// `(V, E, F)` of `O(G)` from the counts of `G` alone.
fn expected_f_vector(name: &str, (v, e, f): (usize, usize, usize)) -> (usize, usize, usize) {
    match name {
        "identity" => (v, e, f),
        "dual" => (f, e, v),
        "truncation" => (2 * e, 3 * e, f + v),
        "ambo" => (e, 2 * e, f + v),
        "join" => (v + f, 2 * e, e),
        "gyro" => (v + 2 * e + f, 5 * e, 2 * e),
        "snub" => (2 * e, 5 * e, v + 2 * e + f),
        _ => unreachable!(),
    }
}

#[test]
fn f_vectors_follow_inflation_counts() {
    for name in CATALOG_NAMES {
        let op = lopsp(name);
        for (gname, g) in corpus() {
            let r = apply(&op, &g, None).unwrap().result;
            assert_eq!(r.f_vector(), expected_f_vector(name, g.f_vector()), "{name}({gname})");
            assert_eq!(r.genus(), g.genus());
        }
    }
    let r = apply(&lopsp("truncation"), &solids::cube(), None).unwrap().result;
    assert_eq!(r.f_vector(), (24, 36, 14));
    let r = apply(&lopsp("gyro"), &solids::tetrahedron(), None).unwrap().result;
    assert_eq!(r.f_vector(), (20, 30, 12));
}

#[test]
fn identity_and_dual_are_what_they_claim() {
    for (gname, g) in corpus() {
        let id = apply(&lopsp("identity"), &g, None).unwrap().result;
        assert!(id.is_isomorphic(&g, false), "identity({gname})");
        let d = apply(&lopsp("dual"), &g, None).unwrap().result;
        assert!(d.is_isomorphic(&g.dual(), false), "dual({gname})");
        let dd = apply(&lopsp("dual"), &d, None).unwrap().result;
        assert!(dd.is_isomorphic(&g, false), "dual(dual({gname}))");
    }
    let oct = apply(&lopsp("dual"), &solids::cube(), None).unwrap().result;
    assert!(oct.is_isomorphic(&solids::octahedron(), true));
}

#[test]
fn subdivision_is_barycentric_of_result() {
    for name in ["truncation", "gyro", "snub"] {
        for g in [solids::cube(), solids::k7_torus()] {
            let app = apply(&lopsp(name), &g, None).unwrap();
            let b = barycentric(&app.result).graph;
            assert!(b.is_isomorphic(&app.subdivision, false), "{name}");
        }
    }
}

#[test]
fn pi_is_surjective_and_even() {
    let op = lopsp("gyro");
    let g = solids::cube();
    let app = apply(&op, &g, None).unwrap();
    let t = &app.subdivision;
    let ofm = op.graph().face_map();
    let mut hits = vec![0; op.chamber_count()];
    for face in t.face_map().faces {
        hits[ofm.face_of[app.pi[face.darts[0]]]] += 1;
    }
    assert!(hits.iter().all(|&h| h == 2 * g.edge_count()));
    let mut seen = vec![false; op.graph().vertex_count()];
    for v in 0..t.vertex_count() {
        seen[app.pi_vertex(op.graph(), v)] = true;
    }
    assert!(seen.iter().all(|&s| s));
}

#[test]
fn cut_path_choice_does_not_matter() {
    for name in CATALOG_NAMES {
        let op = lopsp(name);
        for g in [solids::tetrahedron(), solids::cube(), solids::k7_torus()] {
            let reference = apply(&op, &g, None).unwrap().result.canonical_code(false);
            for seed in 1..=5 {
                let p = find_cut_path(&op, CutPathStrategy::Random(seed));
                let r = apply(&op, &g, Some(&p)).unwrap().result;
                assert_eq!(r.canonical_code(false), reference, "{name} seed {seed}");
            }
        }
    }
}

#[test]
fn lsp_direct_matches_double() {
    let mut ops: Vec<LspOperation> = ["truncation", "ambo", "join"].iter().map(|n| lsp(n)).collect();
    ops.push(lsp_triangle([0, 1, 2]));
    ops.push(lsp_triangle([2, 1, 0]));
    ops.extend(NON_C3_NAMES.iter().map(|n| non_c3(n).unwrap()));
    for op in &ops {
        let double = lsp_to_lopsp(op);
        assert_eq!(double.operation.chamber_count(), 2 * op.chamber_count());
        for (gname, g) in corpus() {
            let direct = apply_lsp_direct(op, &g).unwrap().result;
            let via = apply(&double.operation, &g, None).unwrap().result;
            assert_eq!(direct.canonical_code(false), via.canonical_code(false), "{gname}");
        }
    }
}

#[test]
fn lsp_double_degrees_on_seam() {
    let op = lsp("truncation");
    let double = lsp_to_lopsp(&op);
    let fm = op.graph().face_map();
    let outer = op.outer_face();
    let dg = double.operation.graph();
    for v in 0..dg.vertex_count() {
        let o = double.vertex_origin[v];
        let on_seam = op.graph().rotation(o).iter().any(|&d| fm.face_of[d] == outer);
        let want = if on_seam { 2 * op.graph().degree(o) - 2 } else { op.graph().degree(o) };
        assert_eq!(dg.degree(v), want);
    }
}

#[test]
fn identity_lsp_on_tetrahedron() {
    let g = solids::tetrahedron();
    let r = apply_lsp_direct(&lsp_triangle([0, 1, 2]), &g).unwrap().result;
    assert!(r.is_isomorphic(&g, false));
    let r = apply_lsp_direct(&lsp_triangle([2, 1, 0]), &solids::cube()).unwrap().result;
    assert_eq!(r.f_vector(), (6, 12, 8));
    assert!(r.is_isomorphic(&solids::octahedron(), true));
}

#[test]
fn snub_cube_is_chiral() {
    let r = apply(&lopsp("snub"), &solids::cube(), None).unwrap().result;
    assert_eq!(r.f_vector(), (24, 60, 38));
    assert!(!r.is_isomorphic(&r.mirror(), false));
    assert!(r.is_isomorphic(&r.mirror(), true));
}

#[test]
fn catalog_is_c3() {
    for name in CATALOG_NAMES {
        let c = classify_ck(&lopsp(name)).unwrap();
        assert_eq!(c.k, 3, "{name}");
        assert!(c.cycle.is_none());
    }
}

#[test]
fn non_c3_fixtures_classify_below_three() {
    let pendant = classify_ck(&lsp_to_lopsp(&non_c3("pendant").unwrap()).operation).unwrap();
    assert_eq!(pendant.k, 1);
    assert!(matches!(pendant.cycle, Some(topology::CkWitness::TwoCycle(_))));
    assert!(pendant.localized && pendant.copies.len() == 1);
    let subdivide = classify_ck(&lsp_to_lopsp(&non_c3("subdivide").unwrap()).operation).unwrap();
    assert_eq!(subdivide.k, 2);
    assert!(matches!(subdivide.cycle, Some(topology::CkWitness::NontrivialFourCycle(_))));
    assert!(subdivide.localized && subdivide.copies.len() <= 2);
}

#[test]
fn genus_is_preserved_on_the_torus() {
    let g = solids::k7_torus();
    for name in CATALOG_NAMES {
        let r = apply(&lopsp(name), &g, None).unwrap().result;
        assert_eq!(r.genus(), 1);
        assert!(topology::is_ck_embedded(&r).is_ck(3), "{name}(K7)");
    }
}
