use std::collections::BTreeMap;

use lopsp_core::EmbeddedGraph;

use super::{column_of, content_lines, FormatError};

/// One rotation line per vertex, each starting at the vertex's stored first
/// dart, and the signed edge name of every dart. Edges are numbered in order
/// of first appearance; that end gets the `+` sign. Parsing the lines back
/// and writing again reproduces them.
pub fn rotation_lines(g: &EmbeddedGraph) -> (Vec<String>, Vec<i64>) {
    lines_from(g, false)
}

fn lines_from(g: &EmbeddedGraph, min_start: bool) -> (Vec<String>, Vec<i64>) {
    let mut name = vec![0i64; g.dart_count()];
    let mut next = 1;
    let mut lines = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let rot = g.rotation(v);
        let start = if min_start { (0..rot.len()).min_by_key(|&k| rot[k]).unwrap_or(0) } else { 0 };
        let mut line = format!("{v}:");
        for k in 0..rot.len() {
            let d = rot[(start + k) % rot.len()];
            if name[d] == 0 {
                name[d] = next;
                name[g.inv(d)] = -next;
                next += 1;
            }
            line.push_str(&format!(" {:+}", name[d]));
        }
        lines.push(line);
    }
    (lines, name)
}

/// Writes `g` in canonical numbering, so isomorphic graphs produce
/// identical text.
pub fn write_rot(g: &EmbeddedGraph) -> String {
    write_canonical_rot(g, false)
}

/// Like [`write_rot`]; with `allow_reflection` a graph and its mirror image
/// produce the same text.
pub fn write_canonical_rot(g: &EmbeddedGraph, allow_reflection: bool) -> String {
    let c = g.canonical_form(allow_reflection);
    let (lines, _) = lines_from(&c, true);
    let mut out = format!("rot {} {}\n", c.vertex_count(), c.edge_count());
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

/// Parses the rotation lines `v: s1 s2 ...` that follow a header.
pub(crate) fn parse_rotation_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header_line: usize,
    v: usize,
    e: usize,
) -> Result<Vec<Vec<i64>>, FormatError> {
    let mut rotations: Vec<Option<Vec<i64>>> = vec![None; v];
    let mut seen: BTreeMap<i64, usize> = BTreeMap::new();
    for _ in 0..v {
        let (ln, line) = lines.next().ok_or_else(|| FormatError::at_line(header_line, 1, format!("expected {v} vertex lines")))?;
        let (id, rest) = line.split_once(':').ok_or_else(|| FormatError::at_line(ln, 1, "expected `<vertex>: <signed edges>`"))?;
        let vid: usize = id.trim().parse().map_err(|_| FormatError::at_line(ln, 1, format!("bad vertex id `{}`", id.trim())))?;
        if vid >= v {
            return Err(FormatError::at_line(ln, 1, format!("vertex id {vid} out of range 0..{v}")));
        }
        if rotations[vid].is_some() {
            return Err(FormatError::at_line(ln, 1, format!("vertex {vid} listed twice")));
        }
        let mut rot = Vec::new();
        for tok in rest.split_whitespace() {
            let col = column_of(line, tok);
            let s: i64 = tok.parse().map_err(|_| FormatError::at_line(ln, col, format!("bad signed edge `{tok}`")))?;
            if s == 0 || s.unsigned_abs() as usize > e {
                return Err(FormatError::at_line(ln, col, format!("edge {tok} out of range 1..={e}")));
            }
            if let Some(prev) = seen.insert(s, ln) {
                return Err(FormatError::at_line(ln, col, format!("edge end {tok} already listed on line {prev}")));
            }
            rot.push(s);
        }
        if rot.is_empty() {
            return Err(FormatError::at_line(ln, line.len() + 1, format!("vertex {vid} has no edges")));
        }
        rotations[vid] = Some(rot);
    }
    if seen.len() != 2 * e {
        let missing = (1..=e as i64).flat_map(|x| [x, -x]).find(|s| !seen.contains_key(s)).unwrap_or(0);
        return Err(FormatError::violation(format!("edge end {missing:+} never listed")));
    }
    Ok(rotations.into_iter().map(Option::unwrap).collect())
}

pub(crate) fn parse_header(line: &str, ln: usize, keyword: &str) -> Result<(usize, usize), FormatError> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(FormatError::at_line(ln, 1, format!("expected `{keyword} <V> <E>`")));
    }
    let mut num = || -> Result<usize, FormatError> {
        let tok = parts.next().ok_or_else(|| FormatError::at_line(ln, line.len() + 1, format!("expected `{keyword} <V> <E>`")))?;
        tok.parse().map_err(|_| FormatError::at_line(ln, column_of(line, tok), format!("bad count `{tok}`")))
    };
    let v = num()?;
    let e = num()?;
    if let Some(extra) = parts.next() {
        return Err(FormatError::at_line(ln, column_of(line, extra), "trailing tokens after header"));
    }
    Ok((v, e))
}

/// Parses every graph of a rotation stream (headers `rot V E` back to back).
pub fn parse_rot_stream(text: &str) -> Result<Vec<EmbeddedGraph>, FormatError> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    while let Some((ln, header)) = lines.next() {
        let (v, e) = parse_header(header, ln, "rot")?;
        let rotations = parse_rotation_block(&mut lines, ln, v, e)?;
        let g = EmbeddedGraph::from_signed_rotations(&rotations, None).map_err(|err| FormatError::violation(format!("graph at line {ln}: {err}")))?;
        out.push(g);
    }
    if out.is_empty() {
        return Err(FormatError::at_line(1, 1, "no graph in input"));
    }
    Ok(out)
}

/// Parses a single graph.
pub fn parse_rot(text: &str) -> Result<EmbeddedGraph, FormatError> {
    let mut gs = parse_rot_stream(text)?;
    if gs.len() != 1 {
        return Err(FormatError::violation(format!("expected one graph, found {}", gs.len())));
    }
    Ok(gs.remove(0))
}
