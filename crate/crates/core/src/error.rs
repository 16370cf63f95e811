use thiserror::Error;

use crate::model::{CellCoord, SubsetMask};

/// Errors raised by constructors and operations of this crate.
///
/// Venn-validity failures are not errors: they are reported through
/// [`crate::validation::ValidationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("curve count {n} outside supported range {min}..={max}")]
    CurveCount { n: u32, min: u32, max: u32 },

    #[error("curve index {index} out of range for {n} curves")]
    CurveIndex { index: u32, n: u32 },

    #[error("empty mask is not a bounded region")]
    EmptyMask,

    #[error("mask {mask:#x} uses bits at or above n = {n}")]
    MaskOutOfRange { mask: u32, n: u32 },

    #[error("cell ({}, {}) assigned twice", .0.x, .0.y)]
    DuplicateCell(CellCoord),

    #[error("diagram has no cells")]
    EmptyDiagram,

    #[error("cell set is empty")]
    EmptyCellSet,

    #[error("cell set is not a polyomino: fails {0}")]
    NotPolyomino(&'static str),

    #[error("{what} = {value} outside supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("subsets {0} and {0} are equal")]
    EqualSubsets(SubsetMask),

    #[error("invalid chain decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("diagram is not a valid Venn diagram: fails {0}")]
    InvalidDiagram(&'static str),

    #[error("box {w}x{h} has area {area}, expected 2^{n} - 1 = {expected}")]
    BoxArea {
        w: u32,
        h: u32,
        n: u32,
        area: u64,
        expected: u64,
    },

    #[error("invalid search limits: {0}")]
    Limits(String),

    #[error("bound undecided at the available precision for m = {0}")]
    Undecided(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
