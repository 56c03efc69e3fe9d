use thiserror::Error;

use crate::design::{Point, StsReport};
use crate::ocycle::OcycleReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{order} \u{2262} 1,3 (mod 6): no Steiner triple system of this order exists")]
    InadmissibleOrder { order: u32 },

    #[error("invalid triple system: {0}")]
    InvalidDesign(Box<StsReport>),

    #[error("invalid overlap cycle: {0}")]
    InvalidCycle(Box<OcycleReport>),

    #[error("point {point} is outside [0, {order})")]
    PointOutOfRange { point: Point, order: u32 },

    #[error("block {0:?} does not have three distinct points")]
    DegenerateBlock([u32; 3]),

    #[error("repeated consecutive point {point} at position {position}")]
    RepeatedPoint { point: Point, position: usize },

    #[error("point {point} is not a junction of {which}")]
    NotAJunction { point: Point, which: &'static str },

    #[error("cycles share block {0}")]
    SharedBlock(String),

    #[error("chaining broken at position {position}: tail {tail} != head {head}")]
    BrokenChain { position: usize, tail: Point, head: Point },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("empty cycle or path")]
    Empty,

    #[error("origin {origin} is outside the domain of {scheme}")]
    OriginOutOfScheme { origin: String, scheme: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no base case for order {0}; available: 7, 9, 13, 15, 19, 21, 25, 27, 33")]
    UnsupportedBaseCase(u32),

    #[error("listing parse error: {0}")]
    Listing(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("errata: {0}")]
    Errata(String),

    #[error("{step}: {message}")]
    Step { step: String, message: String },

    #[error("order {order} exceeds the search limit {limit}")]
    SearchLimit { order: u32, limit: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn step(step: impl Into<String>, message: impl std::fmt::Display) -> Self {
        Error::Step {
            step: step.into(),
            message: message.to_string(),
        }
    }
}
