//! Space files, enumeration, seeded random spaces and the command line.

pub mod cli;
pub mod document;
pub mod enumerate;
pub mod fuzz;

pub use document::{parse_space, AlgebraSpec, SpaceDocument};
pub use enumerate::{enumerate_events, ENUMERATION_CEILING};
pub use fuzz::{random_space, run_fuzz, FuzzConfig, FuzzTrial};
