//! Embedded graphs as rotation systems, barycentric subdivisions and chamber
//! systems, face-width and `ck`-embeddedness, and local (orientation-preserving)
//! symmetry-preserving operations together with their Delaney-Dress symbols.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the operation
//! catalog and the command line live in the `lopsp` companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chambers;
pub mod delaney;
pub mod ops;
pub mod solids;
pub mod surface_map;
pub mod topology;

pub use chambers::{barycentric, double_chambers, BarycentricSubdivision, ChamberSystem};
pub use delaney::{curvature, dd_from_lopsp, dd_from_lsp, is_dd_morphism, rotation_orders, validate_dd, DelaneySymbol};
pub use ops::{apply, apply_lsp_direct, lsp_to_lopsp, ApplicationResult, CutPath, LopspOperation, LspOperation, Operation};
pub use surface_map::{CanonicalCode, EmbeddedGraph, GraphError};
pub use topology::{face_width, is_ck_embedded, CkReport, FaceWidth};

