//! Text and binary formats for embedded graphs, operations and symbols.

mod op_file;
mod planar_code;
mod rot;

pub use op_file::{parse_op, write_op, OpKind, RawOp};
pub use planar_code::{parse_planar_code, write_planar_code, PLANAR_CODE_HEADER};
pub use rot::{parse_rot, parse_rot_stream, rotation_lines, write_canonical_rot, write_rot};

use std::fmt;

/// Where in the input a syntax error sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// 1-based line and column.
    Line { line: usize, column: usize },
    /// 0-based byte offset into a binary stream.
    Byte(usize),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Line { line, column } => write!(f, "line {line}, column {column}"),
            Position::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: Position, message: String },
    /// Well-formed input that does not describe a valid object.
    #[error("format violation: {0}")]
    Violation(String),
}

impl FormatError {
    pub(crate) fn at_line(line: usize, column: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax { position: Position::Line { line, column }, message: message.into() }
    }

    pub(crate) fn at_byte(offset: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax { position: Position::Byte(offset), message: message.into() }
    }

    pub(crate) fn violation(reason: impl Into<String>) -> Self {
        FormatError::Violation(reason.into())
    }
}

/// Non-empty, non-comment lines with their 1-based numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim_end()))
        .filter(|(_, l)| !l.trim().is_empty())
}

/// Column (1-based) of `part` within `line`, assuming `part` is a subslice.
pub(crate) fn column_of(line: &str, part: &str) -> usize {
    (part.as_ptr() as usize).saturating_sub(line.as_ptr() as usize) + 1
}
