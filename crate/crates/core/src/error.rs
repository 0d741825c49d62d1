use thiserror::Error;

use crate::diagram::Dart;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("dart {0} paired with itself")]
    SelfPaired(Dart),
    #[error("dart {0} referenced twice in edges")]
    DartReused(Dart),
    #[error("dart {0} is not referenced by any edge")]
    DartUnreferenced(Dart),
    #[error("crossing index {crossing} out of range (diagram has {n_crossings} crossings)")]
    CrossingOutOfRange { crossing: usize, n_crossings: usize },
    #[error("slot {slot} out of range (expected 0..=3)")]
    SlotOutOfRange { slot: u8 },
    #[error("expected {expected} over-axes, found {found}")]
    AxisCount { expected: usize, found: usize },
    #[error("over-axis must be 0 or 1, found {0}")]
    AxisValue(u8),
    #[error("closed surface: the thickening is not a handlebody")]
    ClosedSurface,
    #[error("staking requires a diagram without punctures")]
    AlreadyPunctured,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// Rejection reasons for a cut circle that does not describe a simple
/// closed curve on the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cut circle has no points")]
    Empty,
    #[error("cut circle has {points} points but {arcs} arcs")]
    ArcCount { points: usize, arcs: usize },
    #[error("cut point {0} refers to a nonexistent edge or crossing")]
    BadPoint(usize),
    #[error("cut point {0} duplicates another point")]
    DuplicatePoint(usize),
    #[error("arc {0} does not connect consecutive points")]
    NotClosed(usize),
    #[error("arc {0} does not cross the diagram transversely at its start")]
    NotTransverse(usize),
    #[error("arc {arc} lies in region {region} but its endpoints border another region")]
    RegionMismatch { arc: usize, region: usize },
    #[error("arcs in region {0} interleave")]
    SelfIntersecting(usize),
    #[error("puncture routing has {found} entries, diagram has {expected} punctures")]
    RoutingLength { expected: usize, found: usize },
    #[error("complement of the circle has {0} pieces")]
    Disconnected(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("projection admits no alternating over/under assignment")]
    NotAlternating,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
