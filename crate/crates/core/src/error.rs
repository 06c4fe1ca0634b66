use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(VertexId, VertexId, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(VertexId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("path is not a geodesic: {0}")]
    NotGeodesic(crate::graph::GeodesicDefect),
    #[error("not a simple cycle: {0}")]
    NotACycle(&'static str),
    #[error("enumeration guard of {guard} paths exceeded ({found} found so far)")]
    GuardExceeded { guard: usize, found: usize },
    #[error("butterfly dimension must be at least {min}, got {r}")]
    DimensionTooSmall { r: u32, min: u32 },
    #[error("butterfly dimension {0} is too large")]
    DimensionTooLarge(u32),
    #[error("vertex [{level}, {row}] is not a valid butterfly coordinate")]
    BadCoord { level: u32, row: u64 },
    #[error("vertex [{level}, {row}] is an interior vertex and has no color")]
    InteriorVertex { level: u32, row: u64 },
    #[error("{0}")]
    LevelMismatch(&'static str),
    #[error("[{0}, {1}] and [{2}, {3}] have the same color and are not a diametral pair")]
    NotDiametralPair(u32, u64, u32, u64),
    #[error("construction invariant violated: {0}")]
    Construction(String),
    #[error("bound premise violated: candidate {candidate} covers {covers} special targets (limit {limit})")]
    BoundPremise {
        candidate: usize,
        covers: usize,
        limit: usize,
    },
    #[error("invalid instance: {0}")]
    Instance(String),
    #[error("parse error: {0}")]
    Parse(String),
}
