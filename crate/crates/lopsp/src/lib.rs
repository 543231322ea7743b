//! File formats, the operation catalog and the `lopsp` command line on top
//! of [`lopsp_core`].

pub mod catalog;
pub mod cli;
pub mod io;

pub use lopsp_core as core;
