use lopsp_core::ops::{validate_lopsp, validate_lsp, Diagnostic};
use lopsp_core::{EmbeddedGraph, LopspOperation, LspOperation, Operation};

use super::rot::{parse_header, parse_rotation_block, rotation_lines};
use super::{column_of, content_lines, FormatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Lopsp,
    Lsp,
}

impl OpKind {
    pub fn keyword(self) -> &'static str {
        match self {
            OpKind::Lopsp => "lopsp",
            OpKind::Lsp => "lsp",
        }
    }
}

/// A parsed but not yet validated operation file.
#[derive(Debug, Clone)]
pub struct RawOp {
    pub kind: OpKind,
    /// Typed graph; types are the vertex labels.
    pub graph: EmbeddedGraph,
    pub specials: [usize; 3],
    /// A dart of the outer face (lsp only).
    pub outer: Option<usize>,
}

impl RawOp {
    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        match (self.kind, self.outer) {
            (OpKind::Lsp, Some(o)) => validate_lsp(&self.graph, self.specials, o),
            _ => validate_lopsp(&self.graph, self.specials),
        }
    }

    pub fn into_operation(self) -> Result<Operation, lopsp_core::ops::OpError> {
        Ok(match (self.kind, self.outer) {
            (OpKind::Lsp, Some(o)) => Operation::Lsp(LspOperation::new(self.graph, self.specials, o)?),
            _ => Operation::Lopsp(LopspOperation::new(self.graph, self.specials)?),
        })
    }
}

fn numbers<T: std::str::FromStr>(line: &str, rest: &str, ln: usize, what: &str) -> Result<Vec<T>, FormatError> {
    rest.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| FormatError::at_line(ln, column_of(line, tok), format!("bad {what} `{tok}`"))))
        .collect()
}

pub fn parse_op(text: &str) -> Result<RawOp, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::at_line(1, 1, "empty operation file"))?;
    let kind = match header.split_whitespace().next() {
        Some("lsp") => OpKind::Lsp,
        Some("lopsp") => OpKind::Lopsp,
        _ => return Err(FormatError::at_line(hl, 1, "expected `lopsp <V> <E>` or `lsp <V> <E>`")),
    };
    let (v, e) = parse_header(header, hl, kind.keyword())?;
    let mut types: Option<Vec<u8>> = None;
    let mut specials: Option<[usize; 3]> = None;
    let mut outer: Option<(usize, i64)> = None;
    let mut rotation_src = Vec::new();
    for (ln, line) in lines {
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix("types:") {
            let t: Vec<u8> = numbers(line, rest, ln, "type")?;
            if t.len() != v {
                return Err(FormatError::at_line(ln, 1, format!("expected {v} types, found {}", t.len())));
            }
            types = Some(t);
        } else if let Some(rest) = trimmed.strip_prefix("special:") {
            let s: Vec<usize> = numbers(line, rest, ln, "vertex")?;
            let s: [usize; 3] = s.try_into().map_err(|_| FormatError::at_line(ln, 1, "expected `special: v0 v1 v2`"))?;
            specials = Some(s);
        } else if let Some(rest) = trimmed.strip_prefix("outer:") {
            let o: Vec<i64> = numbers(line, rest, ln, "dart")?;
            let [o] = o[..] else {
                return Err(FormatError::at_line(ln, 1, "expected `outer: <signed edge>`"));
            };
            outer = Some((ln, o));
        } else {
            rotation_src.push((ln, line));
        }
    }
    let mut it = rotation_src.into_iter();
    let rotations = parse_rotation_block(&mut it, hl, v, e)?;
    if let Some((ln, line)) = it.next() {
        return Err(FormatError::at_line(ln, 1, format!("unexpected line `{}`", line.trim())));
    }
    let types = types.ok_or_else(|| FormatError::violation("missing `types:` line"))?;
    let specials = specials.ok_or_else(|| FormatError::violation("missing `special:` line"))?;
    let graph = EmbeddedGraph::from_signed_rotations(&rotations, None)
        .and_then(|g| g.with_labels(Some(types)))
        .map_err(|err| FormatError::violation(err.to_string()))?;
    let outer = match (kind, outer) {
        (OpKind::Lsp, Some((ln, o))) => {
            if o == 0 || o.unsigned_abs() as usize > e {
                return Err(FormatError::at_line(ln, 1, format!("outer dart {o} out of range")));
            }
            Some(2 * (o.unsigned_abs() as usize - 1) + usize::from(o < 0))
        }
        (OpKind::Lsp, None) => return Err(FormatError::violation("lsp file needs an `outer:` line")),
        (OpKind::Lopsp, Some((ln, _))) => return Err(FormatError::at_line(ln, 1, "`outer:` only applies to lsp files")),
        (OpKind::Lopsp, None) => None,
    };
    Ok(RawOp { kind, graph, specials, outer })
}

pub fn write_op(op: &Operation) -> String {
    let (kind, g, specials, outer) = match op {
        Operation::Lopsp(o) => (OpKind::Lopsp, o.graph(), o.specials(), None),
        Operation::Lsp(o) => (OpKind::Lsp, o.graph(), o.specials(), Some(o.outer_dart())),
    };
    let (lines, names) = rotation_lines(g);
    let types: Vec<String> = (0..g.vertex_count()).map(|v| g.label(v).unwrap_or(0).to_string()).collect();
    let mut out = format!("{} {} {}\n", kind.keyword(), g.vertex_count(), g.edge_count());
    out.push_str(&format!("types: {}\n", types.join(" ")));
    out.push_str(&format!("special: {} {} {}\n", specials[0], specials[1], specials[2]));
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    if let Some(d) = outer {
        out.push_str(&format!("outer: {:+}\n", names[d]));
    }
    out
}
