//! Delaney-Dress symbols of operations: extraction, axiom checks, curvature,
//! rotation orders and morphisms.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_rational::Ratio;

use crate::chambers::ChamberSystem;
use crate::ops::{lsp_to_lopsp, LopspOperation, LspOperation};

/// Index pairs `(i, j)` in the order the `m` maps are stored.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// A finite set `0..len` with three involutions `s[i]` and the maps
/// `m[0] = m01`, `m[1] = m02`, `m[2] = m12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelaneySymbol {
    pub s: [Vec<usize>; 3],
    pub m: [Vec<u32>; 3],
}

fn pair_index(i: usize, j: usize) -> usize {
    PAIRS.iter().position(|&p| p == (i.min(j), i.max(j))).expect("i != j")
}

impl DelaneySymbol {
    pub fn len(&self) -> usize {
        self.s[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sigma(&self, i: usize, c: usize) -> usize {
        self.s[i][c]
    }

    pub fn m(&self, i: usize, j: usize, c: usize) -> u32 {
        self.m[pair_index(i, j)][c]
    }

    /// `<s_i, s_j>`-orbit of `c`, sorted.
    pub fn orbit(&self, c: usize, i: usize, j: usize) -> Vec<usize> {
        let mut seen = vec![c];
        let mut k = 0;
        while k < seen.len() {
            for g in [i, j] {
                let n = self.s[g][seen[k]];
                if !seen.contains(&n) {
                    seen.push(n);
                }
            }
            k += 1;
        }
        seen.sort_unstable();
        seen
    }

    /// Smallest `r >= 1` with `c (s_i s_j)^r = c`.
    pub fn r(&self, c: usize, i: usize, j: usize) -> usize {
        let mut x = self.s[j][self.s[i][c]];
        let mut r = 1;
        while x != c {
            x = self.s[j][self.s[i][x]];
            r += 1;
        }
        r
    }

    pub fn has_fixed_points(&self) -> bool {
        (0..3).any(|i| (0..self.len()).any(|c| self.s[i][c] == c))
    }

    /// No product of an odd number of generators fixes an element.
    pub fn is_oriented(&self) -> bool {
        let n = self.len();
        let mut side = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                let here = side[c].unwrap();
                for i in 0..3 {
                    let x = self.s[i][c];
                    match side[x] {
                        None => {
                            side[x] = Some(!here);
                            stack.push(x);
                        }
                        Some(s) if s == here => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Line-based text form: a header `dd <n>`, then rows `s0:`, `s1:`,
    /// `s2:`, `m01:`, `m02:`, `m12:` of `n` integers each.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dd {}", self.len());
        for (i, row) in self.s.iter().enumerate() {
            let _ = write!(out, "s{i}:");
            for x in row {
                let _ = write!(out, " {x}");
            }
            out.push('\n');
        }
        for (k, row) in self.m.iter().enumerate() {
            let (i, j) = PAIRS[k];
            let _ = write!(out, "m{i}{j}:");
            for x in row {
                let _ = write!(out, " {x}");
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines.next().ok_or(ParseError { line: 1, reason: "empty input" })?;
        let n: usize = header
            .strip_prefix("dd ")
            .and_then(|x| x.trim().parse().ok())
            .ok_or(ParseError { line: ln + 1, reason: "expected `dd <n>`" })?;
        let keys = ["s0:", "s1:", "s2:", "m01:", "m02:", "m12:"];
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(6);
        for key in keys {
            let (ln, line) = lines.next().ok_or(ParseError { line: ln + 1, reason: "missing row" })?;
            let rest = line.trim().strip_prefix(key).ok_or(ParseError { line: ln + 1, reason: "unexpected row label" })?;
            let row: Result<Vec<u64>, _> = rest.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| ParseError { line: ln + 1, reason: "not an integer" })?;
            if row.len() != n {
                return Err(ParseError { line: ln + 1, reason: "row length differs from element count" });
            }
            rows.push(row);
        }
        if let Some((ln, _)) = lines.next() {
            return Err(ParseError { line: ln + 1, reason: "trailing content" });
        }
        let to_s = |r: &Vec<u64>| -> Result<Vec<usize>, ParseError> {
            r.iter()
                .map(|&x| usize::try_from(x).ok().filter(|&x| x < n).ok_or(ParseError { line: 0, reason: "element out of range" }))
                .collect()
        };
        let to_m = |r: &Vec<u64>| -> Result<Vec<u32>, ParseError> {
            r.iter().map(|&x| u32::try_from(x).ok().filter(|&x| x > 0).ok_or(ParseError { line: 0, reason: "m value out of range" })).collect()
        };
        Ok(DelaneySymbol {
            s: [to_s(&rows[0])?, to_s(&rows[1])?, to_s(&rows[2])?],
            m: [to_m(&rows[3])?, to_m(&rows[4])?, to_m(&rows[5])?],
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line, 0 when the problem is not tied to one line.
    pub line: usize,
    pub reason: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

/// Which requirement a symbol fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DdViolation {
    /// Rows of unequal length or an empty set.
    Shape,
    NotInvolution { generator: usize, element: usize },
    NotTransitive { reached: usize },
    NotOrbitConstant { pair: (usize, usize), element: usize },
    RelationFails { pair: (usize, usize), element: usize },
    M02NotTwo { element: usize },
    Curvature(Ratio<i64>),
}

impl DdViolation {
    /// Number of the axiom (1 to 4) the violation belongs to; 0 for shape
    /// and typing problems.
    pub fn axiom(&self) -> u8 {
        match self {
            DdViolation::Shape | DdViolation::NotInvolution { .. } | DdViolation::M02NotTwo { .. } => 0,
            DdViolation::NotTransitive { .. } => 2,
            DdViolation::NotOrbitConstant { .. } | DdViolation::RelationFails { .. } => 3,
            DdViolation::Curvature(_) => 4,
        }
    }
}

impl fmt::Display for DdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DdViolation::Shape => write!(f, "rows have different lengths or the symbol is empty"),
            DdViolation::NotInvolution { generator, element } => {
                write!(f, "s{generator} is not an involution at element {element}")
            }
            DdViolation::NotTransitive { reached } => write!(f, "action is not transitive ({reached} elements reached)"),
            DdViolation::NotOrbitConstant { pair: (i, j), element } => {
                write!(f, "m{i}{j} is not constant on the orbit of element {element}")
            }
            DdViolation::RelationFails { pair: (i, j), element } => {
                write!(f, "(s{i} s{j})^m{i}{j} does not fix element {element}")
            }
            DdViolation::M02NotTwo { element } => write!(f, "m02 is not 2 at element {element}"),
            DdViolation::Curvature(c) => write!(f, "curvature is {c}, not 0"),
        }
    }
}

/// Checks the symbol axioms; an empty result means the symbol describes a
/// tiling of the Euclidean plane.
pub fn validate_dd(d: &DelaneySymbol) -> Vec<DdViolation> {
    let n = d.len();
    if n == 0 || d.s.iter().any(|r| r.len() != n) || d.m.iter().any(|r| r.len() != n) {
        return vec![DdViolation::Shape];
    }
    let mut out = Vec::new();
    for i in 0..3 {
        if let Some(c) = (0..n).find(|&c| d.s[i][c] >= n || d.s[i][d.s[i][c]] != c) {
            out.push(DdViolation::NotInvolution { generator: i, element: c });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let reached = d.orbit_all(0);
    if reached != n {
        out.push(DdViolation::NotTransitive { reached });
    }
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        for c in 0..n {
            if d.orbit(c, i, j).iter().any(|&x| d.m[k][x] != d.m[k][c]) {
                out.push(DdViolation::NotOrbitConstant { pair: (i, j), element: c });
                break;
            }
        }
        for c in 0..n {
            if !(d.m[k][c] as usize).is_multiple_of(d.r(c, i, j)) {
                out.push(DdViolation::RelationFails { pair: (i, j), element: c });
                break;
            }
        }
    }
    if let Some(c) = (0..n).find(|&c| d.m[1][c] != 2) {
        out.push(DdViolation::M02NotTwo { element: c });
    }
    let cv = curvature(d);
    if cv.value != Ratio::from_integer(0) {
        out.push(DdViolation::Curvature(cv.value));
    }
    out
}

impl DelaneySymbol {
    fn orbit_all(&self, c: usize) -> usize {
        let mut seen = vec![false; self.len()];
        seen[c] = true;
        let mut stack = vec![c];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for i in 0..3 {
                let y = self.s[i][x];
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Euclidean,
    Hyperbolic,
    /// Positive curvature; the divisibility conditions for a spherical
    /// tiling are not checked.
    PossiblySpherical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Curvature {
    pub value: Ratio<i64>,
}

impl Curvature {
    pub fn geometry(&self) -> Geometry {
        let zero = Ratio::from_integer(0);
        if self.value == zero {
            Geometry::Euclidean
        } else if self.value < zero {
            Geometry::Hyperbolic
        } else {
            Geometry::PossiblySpherical
        }
    }
}

impl fmt::Display for Curvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `sum over C of 1/m01(C) + 1/m12(C) - 1/m02(C)`, exactly.
pub fn curvature(d: &DelaneySymbol) -> Curvature {
    let mut value = Ratio::from_integer(0i64);
    for c in 0..d.len() {
        value += Ratio::new(1, i64::from(d.m[0][c])) + Ratio::new(1, i64::from(d.m[2][c])) - Ratio::new(1, i64::from(d.m[1][c]));
    }
    Curvature { value }
}

/// Rotation data of one `<s_i, s_j>`-orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRotation {
    pub pair: (usize, usize),
    pub elements: Vec<usize>,
    pub r: usize,
    pub m: u32,
    /// Whether some element of the orbit is fixed by `s_i` or `s_j`.
    pub mirror: bool,
    /// `m / r` for rotation centres, `2m / r` where mirror axes meet.
    pub fold: u32,
}

pub fn rotation_orders(d: &DelaneySymbol) -> Vec<OrbitRotation> {
    let mut out = Vec::new();
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        let mut done = vec![false; d.len()];
        for c in 0..d.len() {
            if done[c] {
                continue;
            }
            let elements = d.orbit(c, i, j);
            for &x in &elements {
                done[x] = true;
            }
            let r = d.r(c, i, j);
            let m = d.m[k][c];
            let mirror = elements.iter().any(|&x| d.s[i][x] == x || d.s[j][x] == x);
            let fold = if mirror { 2 * m / r as u32 } else { m / r as u32 };
            out.push(OrbitRotation { pair: (i, j), elements, r, m, mirror, fold });
        }
    }
    out
}

/// Whether `f` commutes with all generators and preserves all `m` maps.
pub fn is_dd_morphism(d1: &DelaneySymbol, d2: &DelaneySymbol, f: &[usize]) -> bool {
    f.len() == d1.len()
        && f.iter().all(|&x| x < d2.len())
        && (0..d1.len()).all(|c| {
            (0..3).all(|i| f[d1.s[i][c]] == d2.s[i][f[c]]) && (0..3).all(|k| d1.m[k][c] == d2.m[k][f[c]])
        })
}

/// Multiplier for an orbit around `v`, in units of half the orbit size.
fn special_factor(specials: [usize; 3], v: usize) -> Option<u32> {
    let [v0, v1, v2] = specials;
    if v == v1 {
        Some(2)
    } else if v == v0 {
        Some(3)
    } else if v == v2 {
        Some(6)
    } else {
        None
    }
}

fn symbol_of(cs: &ChamberSystem, m_of: impl Fn(usize, usize, usize) -> u32) -> DelaneySymbol {
    let n = cs.len();
    let mut m = [vec![0; n], vec![0; n], vec![0; n]];
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        for c in 0..n {
            let size = cs.orbit(c, i, j).len();
            m[k][c] = m_of(c, 3 - i - j, size);
        }
    }
    DelaneySymbol { s: cs.s.clone(), m }
}

/// Symbol of an lsp-operation: one element per inner face, boundary
/// crossings are fixed points.
pub fn dd_from_lsp(op: &LspOperation) -> DelaneySymbol {
    let g = op.graph();
    let fm = g.face_map();
    let outer = fm.face_of[op.outer_dart()];
    let mut on_boundary = vec![false; g.vertex_count()];
    for &d in &fm.faces[outer].darts {
        on_boundary[g.tail(d)] = true;
    }
    let cs = op.chambers();
    symbol_of(&cs, |c, k, size| {
        let v = cs.corner[c][k];
        let size = size as u32;
        match special_factor(op.specials(), v) {
            Some(f) => size * f,
            None if on_boundary[v] => size,
            None => size / 2,
        }
    })
}

/// Symbol of a lopsp-operation: one element per face, no fixed points.
pub fn dd_from_lopsp(op: &LopspOperation) -> DelaneySymbol {
    let cs = op.chambers();
    symbol_of(&cs, |c, k, size| {
        let half = size as u32 / 2;
        half * special_factor(op.specials(), cs.corner[c][k]).unwrap_or(1)
    })
}

/// The symbols of an lsp-operation and of its double, with the map sending
/// each chamber of the double to the lsp chamber it copies.
#[derive(Debug, Clone)]
pub struct DoubledSymbols {
    pub lopsp: DelaneySymbol,
    pub lsp: DelaneySymbol,
    pub map: Vec<usize>,
}

pub fn dd_doubling(op: &LspOperation) -> DoubledSymbols {
    let double = lsp_to_lopsp(op);
    let cs = double.operation.chambers();
    let map = (0..cs.len()).map(|c| double.face_origin[cs.face_of_chamber[c]]).collect();
    DoubledSymbols { lopsp: dd_from_lopsp(&double.operation), lsp: dd_from_lsp(op), map }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{catalog, lsp_triangle, non_c3, two_chamber_sphere, Operation, CATALOG_NAMES, NON_C3_NAMES};
    use proptest::prelude::*;

    fn symbol_of_op(op: &Operation) -> DelaneySymbol {
        match op {
            Operation::Lsp(o) => dd_from_lsp(o),
            Operation::Lopsp(o) => dd_from_lopsp(o),
        }
    }

    #[test]
    fn identity_symbols() {
        let d = dd_from_lopsp(&two_chamber_sphere([0, 1, 2]));
        assert_eq!(d.len(), 2);
        assert_eq!(d.m, [vec![6, 6], vec![2, 2], vec![3, 3]]);
        assert!(validate_dd(&d).is_empty());
        assert_eq!(curvature(&d).value, Ratio::from_integer(0));

        let d = dd_from_lsp(&lsp_triangle([0, 1, 2]));
        assert_eq!(d.len(), 1);
        assert_eq!(d.m, [vec![6], vec![2], vec![3]]);
        assert_eq!(d.s, [vec![0], vec![0], vec![0]]);
    }

    #[test]
    fn truncation_symbol() {
        let Some(Operation::Lsp(t)) = catalog("truncation") else { panic!() };
        let d = dd_from_lsp(&t);
        assert_eq!(d.len(), 3);
        let mut m01 = d.m[0].clone();
        m01.sort_unstable();
        assert_eq!(m01, [3, 12, 12]);
        assert_eq!(d.m[1], [2, 2, 2]);
        assert_eq!(d.m[2], [3, 3, 3]);
        assert!(validate_dd(&d).is_empty());
    }

    #[test]
    fn every_operation_gives_a_euclidean_symbol() {
        let mut ops: Vec<Operation> = CATALOG_NAMES.iter().map(|n| catalog(n).unwrap()).collect();
        ops.extend(NON_C3_NAMES.iter().map(|n| Operation::Lsp(non_c3(n).unwrap())));
        for op in &ops {
            let d = symbol_of_op(op);
            assert!(validate_dd(&d).is_empty(), "{:?}", validate_dd(&d));
            assert_eq!(curvature(&d).geometry(), Geometry::Euclidean);
            let lo = dd_from_lopsp(&op.to_lopsp());
            assert!(!lo.has_fixed_points() && lo.is_oriented());
            assert!(validate_dd(&lo).is_empty());
        }
    }

    #[test]
    fn doubling_is_a_morphism() {
        for name in ["truncation", "ambo", "join"] {
            let Some(Operation::Lsp(o)) = catalog(name) else { panic!() };
            let ds = dd_doubling(&o);
            assert!(is_dd_morphism(&ds.lopsp, &ds.lsp, &ds.map), "{name}");
            let mut broken = ds.map.clone();
            broken.swap(0, 1);
            if ds.map[0] != ds.map[1] {
                assert!(!is_dd_morphism(&ds.lopsp, &ds.lsp, &broken));
            }
        }
    }

    #[test]
    fn violations_are_localized() {
        let one = DelaneySymbol { s: [vec![0], vec![0], vec![0]], m: [vec![3], vec![2], vec![3]] };
        let cv = curvature(&one);
        assert_eq!(cv.value, Ratio::new(1, 6));
        assert_eq!(cv.geometry(), Geometry::PossiblySpherical);
        assert_eq!(validate_dd(&one), [DdViolation::Curvature(Ratio::new(1, 6))]);

        let mut d = dd_from_lopsp(&two_chamber_sphere([0, 1, 2]));
        d.m[0][1] = 12;
        let v = validate_dd(&d);
        assert!(v.iter().any(|x| matches!(x, DdViolation::NotOrbitConstant { pair: (0, 1), .. }) && x.axiom() == 3));

        // s1 s2 swaps the two elements, so m12 must be even
        let mut d = DelaneySymbol { s: [vec![1, 0], vec![1, 0], vec![0, 1]], m: [vec![2, 2], vec![2, 2], vec![4, 4]] };
        assert!(!validate_dd(&d).iter().any(|x| x.axiom() == 3));
        d.m[2] = vec![3, 3];
        assert!(validate_dd(&d).iter().any(|x| matches!(x, DdViolation::RelationFails { pair: (1, 2), .. })));

        let split = DelaneySymbol { s: [vec![0, 1], vec![0, 1], vec![0, 1]], m: [vec![6, 6], vec![2, 2], vec![3, 3]] };
        assert!(validate_dd(&split).iter().any(|x| matches!(x, DdViolation::NotTransitive { reached: 1 })));
    }

    #[test]
    fn rotation_orders_of_identity() {
        let d = dd_from_lopsp(&two_chamber_sphere([0, 1, 2]));
        let rot = rotation_orders(&d);
        assert_eq!(rot.len(), 3);
        for o in &rot {
            assert!(!o.mirror);
            assert_eq!(o.r, 1);
            assert_eq!(o.fold, o.m);
        }
        let d = dd_from_lsp(&lsp_triangle([0, 1, 2]));
        let rot = rotation_orders(&d);
        assert!(rot.iter().all(|o| o.mirror && o.fold == 2 * o.m));
    }

    #[test]
    fn text_form_round_trips() {
        for name in CATALOG_NAMES {
            let d = symbol_of_op(&catalog(name).unwrap());
            let text = d.to_text();
            assert_eq!(DelaneySymbol::from_text(&text).unwrap(), d);
            assert_eq!(DelaneySymbol::from_text(&text).unwrap().to_text(), text);
        }
        assert_eq!(DelaneySymbol::from_text("dd 1\ns0: 0\ns1: 0\n").unwrap_err().reason, "missing row");
    }

    proptest! {
        #[test]
        fn curvature_ignores_element_order(perm in Just((0..10usize).collect::<Vec<_>>()).prop_shuffle()) {
            let Some(Operation::Lopsp(g)) = catalog("gyro") else { panic!() };
            let d = dd_from_lopsp(&g);
            let mut inv = vec![0; d.len()];
            for (a, &b) in perm.iter().enumerate() {
                inv[b] = a;
            }
            let s = [0, 1, 2].map(|i| perm.iter().map(|&c| inv[d.s[i][c]]).collect::<Vec<_>>());
            let m = [0, 1, 2].map(|k| perm.iter().map(|&c| d.m[k][c]).collect::<Vec<_>>());
            let shuffled = DelaneySymbol { s, m };
            prop_assert_eq!(curvature(&shuffled), curvature(&d));
            prop_assert!(validate_dd(&shuffled).is_empty());
            prop_assert!(is_dd_morphism(&shuffled, &d, &perm));
        }
    }
}
