//! Steiner triple systems and their 1-overlap cycles.
//!
//! [`design`] holds points, triples and validated triple systems;
//! [`constructions`] builds systems of every admissible order;
//! [`ocycle`] is the cycle model with its splice/cut/reorient algebra;
//! [`builders`] pairs each construction with a verified ocycle;
//! [`verify`] has the automorphism and exhaustive-search oracles;
//! [`format`] reads and writes the text formats.

pub mod builders;
pub mod constructions;
pub mod design;
pub mod error;
pub mod format;
pub mod ocycle;
pub mod verify;

pub use design::{is_admissible, validate_sts, LabelScheme, Origin, Point, StsReport, Triple, TripleSystem};
pub use error::{Error, Result};
pub use ocycle::{
    compress, cut_between, decompress, merge_all, reorient_end, splice_at, validate_ocycle, CompressedCycle,
    OcycleReport, OrientedBlock, OverlapCycle, OverlapPath, PathEnd,
};
