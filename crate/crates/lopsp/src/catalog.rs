//! The named operations. Files are looked up in `$LOPSP_CATALOG_DIR`, then in
//! `catalog/` next to the executable; the shipped copies are compiled in as
//! a fallback.

use std::path::{Path, PathBuf};

use lopsp_core::Operation;

use crate::io::{parse_op, FormatError};

pub const CATALOG_DIR_ENV: &str = "LOPSP_CATALOG_DIR";

/// Name, file name and contents of every shipped catalog file.
pub const SHIPPED: [(&str, &str, &str); 7] = [
    ("identity", "identity.lopsp", include_str!("../catalog/identity.lopsp")),
    ("dual", "dual.lopsp", include_str!("../catalog/dual.lopsp")),
    ("truncation", "truncation.lsp", include_str!("../catalog/truncation.lsp")),
    ("ambo", "ambo.lsp", include_str!("../catalog/ambo.lsp")),
    ("join", "join.lsp", include_str!("../catalog/join.lsp")),
    ("gyro", "gyro.lopsp", include_str!("../catalog/gyro.lopsp")),
    ("snub", "snub.lopsp", include_str!("../catalog/snub.lopsp")),
];

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog entry `{name}` ({path}): {source}")]
    Format { name: String, path: String, source: FormatError },
    #[error("catalog entry `{name}` is not a valid operation: {reason}")]
    Invalid { name: String, reason: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Directories searched before the compiled-in copies, in order.
pub fn search_dirs() -> Vec<PathBuf> {
    let mut dirs = Vec::new();
    if let Some(d) = std::env::var_os(CATALOG_DIR_ENV) {
        dirs.push(PathBuf::from(d));
    }
    if let Some(exe_dir) = std::env::current_exe().ok().as_deref().and_then(Path::parent) {
        dirs.push(exe_dir.join("catalog"));
    }
    dirs
}

fn find_file(name: &str) -> Option<PathBuf> {
    if name.is_empty() || name.contains(['/', '\\', '.']) {
        return None;
    }
    search_dirs()
        .into_iter()
        .flat_map(|d| [d.join(format!("{name}.lopsp")), d.join(format!("{name}.lsp"))])
        .find(|p| p.is_file())
}

/// Source text of a catalog entry and where it came from.
pub fn source(name: &str) -> Result<Option<(String, String)>, CatalogError> {
    if let Some(path) = find_file(name) {
        let text = std::fs::read_to_string(&path).map_err(|source| CatalogError::Io { path: path.display().to_string(), source })?;
        return Ok(Some((text, path.display().to_string())));
    }
    Ok(SHIPPED.iter().find(|(n, _, _)| *n == name).map(|(_, file, text)| (text.to_string(), format!("<builtin>/{file}"))))
}

pub fn load(name: &str) -> Result<Option<Operation>, CatalogError> {
    let Some((text, path)) = source(name)? else {
        return Ok(None);
    };
    let raw = parse_op(&text).map_err(|source| CatalogError::Format { name: name.into(), path, source })?;
    raw.into_operation()
        .map(Some)
        .map_err(|e| CatalogError::Invalid { name: name.into(), reason: e.to_string() })
}

/// Shipped names followed by any extra entries of the override directory.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = SHIPPED.iter().map(|(n, _, _)| n.to_string()).collect();
    if let Some(dir) = std::env::var_os(CATALOG_DIR_ENV) {
        let mut extra: Vec<String> = std::fs::read_dir(dir)
            .into_iter()
            .flatten()
            .flatten()
            .filter_map(|e| {
                let p = e.path();
                let ext = p.extension()?.to_str()?;
                if ext != "lopsp" && ext != "lsp" {
                    return None;
                }
                p.file_stem()?.to_str().map(str::to_string)
            })
            .filter(|n| !out.contains(n))
            .collect();
        extra.sort();
        extra.dedup();
        out.extend(extra);
    }
    out
}
