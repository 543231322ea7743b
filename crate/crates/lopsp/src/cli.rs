//! The `lopsp` command line. `main.rs` only forwards to [`main_from_args`].

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use lopsp_core::ops::{classify_ck_with, find_cut_path, CutPathStrategy, Diagnostic, OpError, Witness};
use lopsp_core::topology::ck_via_cycles;
use lopsp_core::{apply, curvature, dd_from_lopsp, dd_from_lsp, face_width, is_ck_embedded, solids, EmbeddedGraph, Operation};

use crate::catalog::{self, CatalogError};
use crate::io::{self, FormatError, Position, RawOp};

#[derive(Parser, Debug)]
#[command(name = "lopsp", version, about = "Symmetry-preserving operations on embedded graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an operation file and report every violated condition.
    Validate { op: String },
    /// Print the largest k for which the operation is a ck-operation, and a
    /// witness cycle when k < 3.
    Classify {
        op: String,
        /// Witness graph: a solid name (tetrahedron, cube, k7-torus, ...) or a file.
        #[arg(long, default_value = "tetrahedron")]
        witness: String,
    },
    /// Apply an operation to every graph of a stream.
    Apply {
        op: String,
        graph: String,
        #[arg(long, value_enum, default_value_t = CutPathArg::Minimal)]
        cut_path: CutPathArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Print the face-width (`inf` for plane graphs).
    Facewidth { graph: String },
    /// Check whether graphs are ck-embedded; exits 1 if any is not.
    Ckcheck {
        graph: String,
        #[arg(short = 'k', value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Print the Delaney-Dress symbol of an operation.
    Ddsymbol { op: String },
    /// Print the exact curvature of an operation's Delaney-Dress symbol.
    Curvature { op: String },
    /// Turn an lsp-operation into the equivalent lopsp-operation.
    Convert {
        op: String,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Write graphs in canonical form.
    Canon {
        graph: String,
        /// Identify mirror images.
        #[arg(long)]
        reflect: bool,
        /// Emit planar code instead of rotation text.
        #[arg(long)]
        planar_code: bool,
    },
    /// Decide whether two graphs are isomorphic; exits 1 if not.
    Iso {
        g1: String,
        g2: String,
        #[arg(long)]
        reflect: bool,
    },
    /// List the catalog, or print one entry.
    Catalog { name: Option<String> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CutPathArg {
    Minimal,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    /// Cuts, face-width, degrees and face sizes.
    Direct,
    /// Short cycles of the barycentric subdivision.
    Cycles,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{source_name}: {error}")]
    Format { source_name: String, error: FormatError },
    #[error("{source_name}: invalid operation")]
    Invalid { source_name: String, diagnostics: Vec<Diagnostic> },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Operation(String),
    /// A check answered negatively.
    #[error("{0}")]
    Negative(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid { .. } | CliError::Operation(_) | CliError::Negative(_) => 1,
            CliError::Catalog(CatalogError::Invalid { .. }) => 1,
            _ => 2,
        }
    }

    /// Machine-readable form written to standard error.
    pub fn to_json(&self) -> Value {
        let message = self.to_string();
        match self {
            CliError::Usage(_) => json!({"error": "usage", "message": message}),
            CliError::Io { path, .. } => json!({"error": "io", "path": path, "message": message}),
            CliError::Format { source_name, error } => format_json(source_name, error, &message),
            CliError::Invalid { source_name, diagnostics } => json!({
                "error": "invalid_operation",
                "source": source_name,
                "message": message,
                "diagnostics": diagnostics.iter().map(diagnostic_json).collect::<Vec<_>>(),
            }),
            CliError::Catalog(CatalogError::Format { path, source, .. }) => format_json(path, source, &message),
            CliError::Catalog(_) => json!({"error": "catalog", "message": message}),
            CliError::Operation(_) => json!({"error": "operation_failed", "message": message}),
            CliError::Negative(_) => json!({"error": "check_failed", "message": message}),
        }
    }
}

fn format_json(source: &str, error: &FormatError, message: &str) -> Value {
    match error {
        FormatError::Syntax { position: Position::Line { line, column }, .. } => {
            json!({"error": "syntax", "source": source, "line": line, "column": column, "message": message})
        }
        FormatError::Syntax { position: Position::Byte(b), .. } => {
            json!({"error": "syntax", "source": source, "byte": b, "message": message})
        }
        FormatError::Violation(reason) => json!({"error": "format_violation", "source": source, "reason": reason, "message": message}),
    }
}

pub fn diagnostic_json(d: &Diagnostic) -> Value {
    let mut v = json!({"clause": d.clause.code(), "message": d.to_string()});
    let (key, value) = match d.witness {
        Witness::Vertex(x) => ("vertex", x),
        Witness::Dart(x) => ("dart", x),
        Witness::Face(x) => ("face", x),
        Witness::Nothing => return v,
    };
    v[key] = json!(value);
    v
}

fn read_bytes(path: &str) -> Result<Vec<u8>, CliError> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn read_text(path: &str) -> Result<String, CliError> {
    String::from_utf8(read_bytes(path)?).map_err(|_| CliError::Format {
        source_name: path.into(),
        error: FormatError::Violation("input is not UTF-8".into()),
    })
}

/// Graphs of a rotation-text or planar-code stream, told apart by header.
pub fn read_graphs(path: &str) -> Result<Vec<EmbeddedGraph>, CliError> {
    let bytes = read_bytes(path)?;
    let fmt_err = |error| CliError::Format { source_name: path.into(), error };
    if bytes.starts_with(b">>planar_code") {
        return io::parse_planar_code(&bytes).map_err(fmt_err);
    }
    let text = String::from_utf8(bytes).map_err(|_| fmt_err(FormatError::Violation("input is not UTF-8".into())))?;
    io::parse_rot_stream(&text).map_err(fmt_err)
}

fn read_one_graph(path: &str) -> Result<EmbeddedGraph, CliError> {
    let mut gs = read_graphs(path)?;
    if gs.len() != 1 {
        return Err(CliError::Usage(format!("{path}: expected one graph, found {}", gs.len())));
    }
    Ok(gs.remove(0))
}

/// Catalog names win over file paths.
pub fn load_raw_op(spec: &str) -> Result<(RawOp, String), CliError> {
    let (text, origin) = match catalog::source(spec)? {
        Some(found) => found,
        None => (read_text(spec)?, spec.to_string()),
    };
    let raw = io::parse_op(&text).map_err(|error| CliError::Format { source_name: origin.clone(), error })?;
    Ok((raw, origin))
}

pub fn load_op(spec: &str) -> Result<Operation, CliError> {
    let (raw, origin) = load_raw_op(spec)?;
    let diagnostics = raw.diagnostics();
    if !diagnostics.is_empty() {
        return Err(CliError::Invalid { source_name: origin, diagnostics });
    }
    raw.into_operation().map_err(|e| op_error(&origin, e))
}

fn op_error(origin: &str, e: OpError) -> CliError {
    match e {
        OpError::Invalid(diagnostics) => CliError::Invalid { source_name: origin.into(), diagnostics },
        other => CliError::Operation(format!("{origin}: {other}")),
    }
}

/// Runs `f` on every graph in parallel and joins the outputs in input order.
fn per_graph<F>(graphs: &[EmbeddedGraph], f: F) -> Result<Vec<u8>, CliError>
where
    F: Fn(&EmbeddedGraph) -> Result<String, CliError> + Sync + Send,
{
    let parts: Vec<Result<String, CliError>> = graphs.par_iter().map(f).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend_from_slice(p?.as_bytes());
    }
    Ok(out)
}

fn emit(output: Option<&PathBuf>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(p, bytes).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => stdout.write_all(bytes).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

/// Executes a parsed command, writing results to `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut out = String::new();
    match cli.command {
        Command::Validate { op } => {
            let (raw, origin) = load_raw_op(&op)?;
            let diagnostics = raw.diagnostics();
            if !diagnostics.is_empty() {
                return Err(CliError::Invalid { source_name: origin, diagnostics });
            }
            out.push_str("valid\n");
        }
        Command::Classify { op, witness } => {
            let op = load_op(&op)?.to_lopsp();
            let w = match solids::by_name(&witness) {
                Some(g) => g,
                None => read_one_graph(&witness)?,
            };
            let c = classify_ck_with(&op, &w).map_err(|e| op_error(&witness, e))?;
            out.push_str(&format!("{}\n", c.k));
            if let Some(cycle) = &c.cycle {
                out.push_str(&format!("witness: {cycle}\n"));
                let copies: Vec<String> = c.copies.iter().map(usize::to_string).collect();
                out.push_str(&format!("copies: {}\n", copies.join(" ")));
                out.push_str(&format!("localized: {}\n", if c.localized { "yes" } else { "no" }));
            } else if let Some(w) = &c.report.witness {
                out.push_str(&format!("witness: {w}\n"));
            }
        }
        Command::Apply { op, graph, cut_path, seed, output } => {
            let op = load_op(&op)?.to_lopsp();
            let strategy = match cut_path {
                CutPathArg::Minimal => CutPathStrategy::Minimal,
                CutPathArg::Random => CutPathStrategy::Random(seed),
            };
            let path = find_cut_path(&op, strategy);
            let graphs = read_graphs(&graph)?;
            let bytes = per_graph(&graphs, |g| {
                let r = apply(&op, g, Some(&path)).map_err(|e| op_error(&graph, e))?;
                Ok(io::write_rot(&r.result))
            })?;
            return emit(output.as_ref(), &bytes, stdout);
        }
        Command::Facewidth { graph } => {
            let bytes = per_graph(&read_graphs(&graph)?, |g| Ok(format!("{}\n", face_width(g))))?;
            return emit(None, &bytes, stdout);
        }
        Command::Ckcheck { graph, k, method } => {
            let graphs = read_graphs(&graph)?;
            let answers: Vec<bool> = graphs
                .par_iter()
                .map(|g| match method {
                    Method::Direct => is_ck_embedded(g).is_ck(k),
                    Method::Cycles => ck_via_cycles(g).is_ck(k),
                })
                .collect();
            for &a in &answers {
                out.push_str(if a { "yes\n" } else { "no\n" });
            }
            emit(None, out.as_bytes(), stdout)?;
            let failed = answers.iter().filter(|&&a| !a).count();
            if failed > 0 {
                return Err(CliError::Negative(format!("{failed} of {} graphs are not c{k}-embedded", answers.len())));
            }
            return Ok(());
        }
        Command::Ddsymbol { op } => {
            let d = match load_op(&op)? {
                Operation::Lsp(o) => dd_from_lsp(&o),
                Operation::Lopsp(o) => dd_from_lopsp(&o),
            };
            out.push_str(&d.to_text());
        }
        Command::Curvature { op } => {
            let d = match load_op(&op)? {
                Operation::Lsp(o) => dd_from_lsp(&o),
                Operation::Lopsp(o) => dd_from_lopsp(&o),
            };
            out.push_str(&format!("{}\n", curvature(&d)));
        }
        Command::Convert { op, output } => {
            let lopsp = load_op(&op)?.to_lopsp();
            return emit(output.as_ref(), io::write_op(&Operation::Lopsp(lopsp)).as_bytes(), stdout);
        }
        Command::Canon { graph, reflect, planar_code } => {
            let graphs = read_graphs(&graph)?;
            if planar_code {
                let canon: Vec<EmbeddedGraph> = graphs.par_iter().map(|g| g.canonical_form(reflect)).collect();
                let bytes = io::write_planar_code(&canon).map_err(|error| CliError::Format { source_name: graph.clone(), error })?;
                return emit(None, &bytes, stdout);
            }
            let bytes = per_graph(&graphs, |g| Ok(io::write_canonical_rot(g, reflect)))?;
            return emit(None, &bytes, stdout);
        }
        Command::Iso { g1, g2, reflect } => {
            let (a, b) = (read_one_graph(&g1)?, read_one_graph(&g2)?);
            if !a.is_isomorphic(&b, reflect) {
                emit(None, b"no\n", stdout)?;
                return Err(CliError::Negative(format!("{g1} and {g2} are not isomorphic")));
            }
            out.push_str("yes\n");
        }
        Command::Catalog { name: None } => {
            for name in catalog::names() {
                let op = catalog::load(&name)?.ok_or_else(|| CliError::Usage(format!("catalog entry `{name}` vanished")))?;
                let kind = match op {
                    Operation::Lsp(_) => "lsp",
                    Operation::Lopsp(_) => "lopsp",
                };
                out.push_str(&format!("{name}\t{kind}\t{}\n", op.inflation_factor()));
            }
        }
        Command::Catalog { name: Some(name) } => {
            let op = catalog::load(&name)?.ok_or_else(|| CliError::Usage(format!("no catalog entry `{name}`")))?;
            out.push_str(&io::write_op(&op));
        }
    }
    emit(None, out.as_bytes(), stdout)
}

/// Parses arguments, runs the command and returns the exit code. Errors go
/// to standard error as one JSON object per line.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            eprintln!("{}", err.to_json());
            return err.exit_code();
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let result = run(cli, &mut lock);
    let _ = lock.flush();
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("{}", err.to_json());
            err.exit_code()
        }
    }
}
