//! Small reference graphs: the Platonic solids and the seven-vertex torus
//! triangulation.

use alloc::vec;
use alloc::vec::Vec;

use crate::surface_map::EmbeddedGraph;

pub fn tetrahedron() -> EmbeddedGraph {
    EmbeddedGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]).unwrap()
}

pub fn cube() -> EmbeddedGraph {
    EmbeddedGraph::from_faces(
        8,
        &[
            vec![0, 3, 2, 1],
            vec![4, 5, 6, 7],
            vec![0, 1, 5, 4],
            vec![1, 2, 6, 5],
            vec![2, 3, 7, 6],
            vec![3, 0, 4, 7],
        ],
    )
    .unwrap()
}

pub fn octahedron() -> EmbeddedGraph {
    let ring = |i: usize| 1 + (i % 4);
    let mut faces = Vec::new();
    for i in 0..4 {
        faces.push(vec![0, ring(i), ring(i + 1)]);
        faces.push(vec![5, ring(i + 1), ring(i)]);
    }
    EmbeddedGraph::from_faces(6, &faces).unwrap()
}

pub fn icosahedron() -> EmbeddedGraph {
    let up = |i: usize| 1 + (i % 5);
    let low = |i: usize| 6 + (i % 5);
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), low(i), up(i + 1)]);
        faces.push(vec![up(i + 1), low(i), low(i + 1)]);
        faces.push(vec![11, low(i + 1), low(i)]);
    }
    EmbeddedGraph::from_faces(12, &faces).unwrap()
}

pub fn dodecahedron() -> EmbeddedGraph {
    icosahedron().dual()
}

/// `K7` on the torus: vertex `i` sees `i+1, i+3, i+2, i+6, i+4, i+5` (mod 7)
/// in clockwise order. Every face is a triangle.
pub fn k7_torus() -> EmbeddedGraph {
    let rot: Vec<Vec<usize>> = (0..7).map(|i| [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect()).collect();
    EmbeddedGraph::from_neighbor_rotations(&rot).unwrap()
}

/// A single vertex carrying one loop.
pub fn loop_graph() -> EmbeddedGraph {
    EmbeddedGraph::from_rotations(&[vec![0, 1]], &[1, 0], None).unwrap()
}

/// The plane `n`-cycle.
pub fn cycle(n: usize) -> EmbeddedGraph {
    // dart 2i runs from i to i+1
    let rot: Vec<Vec<usize>> = (0..n).map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1]).collect();
    let pairing: Vec<usize> = (0..2 * n).map(|d| d ^ 1).collect();
    EmbeddedGraph::from_rotations(&rot, &pairing, None).unwrap()
}

/// The plane `n`-sided prism.
pub fn prism(n: usize) -> EmbeddedGraph {
    let mut faces = vec![(0..n).rev().collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + j, n + i]);
    }
    EmbeddedGraph::from_faces(2 * n, &faces).unwrap()
}

/// Named solid lookup used by tests and the command line.
pub fn by_name(name: &str) -> Option<EmbeddedGraph> {
    Some(match name {
        "tetrahedron" => tetrahedron(),
        "cube" => cube(),
        "octahedron" => octahedron(),
        "dodecahedron" => dodecahedron(),
        "icosahedron" => icosahedron(),
        "k7-torus" => k7_torus(),
        _ => return None,
    })
}

/// The `p x q` square grid on the torus.
pub fn torus_grid(p: usize, q: usize) -> EmbeddedGraph {
    let v = |i: usize, j: usize| (i % p) * q + (j % q);
    let mut faces = Vec::new();
    for i in 0..p {
        for j in 0..q {
            faces.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    EmbeddedGraph::from_faces(p * q, &faces).unwrap()
}

/// One vertex with two loops forming a single face on the torus.
pub fn torus_bouquet() -> EmbeddedGraph {
    EmbeddedGraph::from_rotations(&[vec![0, 2, 1, 3]], &[1, 0, 3, 2], None).unwrap()
}
