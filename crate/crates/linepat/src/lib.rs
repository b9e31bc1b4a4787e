//! File formats, seeded generators, verification, SVG output and the
//! command line for `linepat-core`.

pub mod cli;
pub mod pointfile;
pub mod random;
pub mod report;
pub mod svg;
pub mod verify;

pub use verify::{VerificationReport, VerifyConfig};
