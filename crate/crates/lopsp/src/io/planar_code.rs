use lopsp_core::EmbeddedGraph;

use super::FormatError;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";
const HEADER_LE: &[u8] = b">>planar_code le<<";

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn byte(&mut self) -> Result<u8, FormatError> {
        let b = *self.bytes.get(self.pos).ok_or_else(|| FormatError::at_byte(self.pos, "unexpected end of stream"))?;
        self.pos += 1;
        Ok(b)
    }

    fn word(&mut self) -> Result<u16, FormatError> {
        let lo = self.byte()?;
        let hi = self.byte()?;
        Ok(u16::from_le_bytes([lo, hi]))
    }

    fn entry(&mut self, wide: bool) -> Result<usize, FormatError> {
        if wide {
            self.word().map(usize::from)
        } else {
            self.byte().map(usize::from)
        }
    }
}

/// Reads a plantri-style stream. Neighbours are 1-based and listed
/// clockwise; a leading 0 switches the graph to 16-bit little-endian entries.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<EmbeddedGraph>, FormatError> {
    let start = if bytes.starts_with(HEADER_LE) {
        HEADER_LE.len()
    } else if bytes.starts_with(PLANAR_CODE_HEADER) {
        PLANAR_CODE_HEADER.len()
    } else {
        return Err(FormatError::at_byte(0, "missing `>>planar_code<<` header"));
    };
    let mut r = Reader { bytes, pos: start };
    let mut out = Vec::new();
    while r.pos < bytes.len() {
        let graph_start = r.pos;
        let mut n = usize::from(r.byte()?);
        let wide = n == 0;
        if wide {
            n = usize::from(r.word()?);
        }
        if n == 0 {
            return Err(FormatError::at_byte(graph_start, "graph with zero vertices"));
        }
        let mut neighbors = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb = Vec::new();
            loop {
                let at = r.pos;
                let w = r.entry(wide)?;
                if w == 0 {
                    break;
                }
                if w > n {
                    return Err(FormatError::at_byte(at, format!("neighbour {w} of vertex {} exceeds vertex count {n}", v + 1)));
                }
                nb.push(w - 1);
            }
            neighbors.push(nb);
        }
        check_simple(&neighbors).map_err(|m| FormatError::violation(format!("graph {} (byte {graph_start}): {m}", out.len() + 1)))?;
        let g = EmbeddedGraph::from_neighbor_rotations(&neighbors)
            .map_err(|e| FormatError::violation(format!("graph {} (byte {graph_start}): {e}", out.len() + 1)))?;
        out.push(g);
    }
    Ok(out)
}

/// Precise reasons for neighbour lists that do not describe a simple graph.
/// Vertex numbers in messages are 1-based like the format.
fn check_simple(neighbors: &[Vec<usize>]) -> Result<(), String> {
    for (v, nb) in neighbors.iter().enumerate() {
        if nb.is_empty() {
            return Err(format!("vertex {} has no neighbours", v + 1));
        }
        for (k, &w) in nb.iter().enumerate() {
            if w == v {
                return Err(format!("loop at vertex {}", v + 1));
            }
            if nb[..k].contains(&w) {
                return Err(format!("parallel edges between vertices {} and {}", v + 1, w + 1));
            }
            if !neighbors[w].contains(&v) {
                return Err(format!("vertex {} lists {} but not vice versa", v + 1, w + 1));
            }
        }
    }
    Ok(())
}

/// Writes graphs in vertex and rotation order as stored. Fails on loops and
/// parallel edges, which the format cannot express.
pub fn write_planar_code(graphs: &[EmbeddedGraph]) -> Result<Vec<u8>, FormatError> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for (i, g) in graphs.iter().enumerate() {
        let n = g.vertex_count();
        let wide = n > 255;
        if n > usize::from(u16::MAX) {
            return Err(FormatError::violation(format!("graph {}: {n} vertices exceed the format limit", i + 1)));
        }
        let push = |x: usize, out: &mut Vec<u8>| {
            if wide {
                out.extend_from_slice(&(x as u16).to_le_bytes());
            } else {
                out.push(x as u8);
            }
        };
        if wide {
            out.push(0);
        }
        push(n, &mut out);
        for v in 0..n {
            let rot = g.rotation(v);
            for (k, &d) in rot.iter().enumerate() {
                let w = g.head(d);
                if w == v {
                    return Err(FormatError::violation(format!("graph {}: loop at vertex {}", i + 1, v + 1)));
                }
                if rot[..k].iter().any(|&e| g.head(e) == w) {
                    return Err(FormatError::violation(format!(
                        "graph {}: parallel edges between vertices {} and {}",
                        i + 1,
                        v + 1,
                        w + 1
                    )));
                }
                push(w + 1, &mut out);
            }
            push(0, &mut out);
        }
    }
    Ok(out)
}
