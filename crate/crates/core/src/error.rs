use thiserror::Error;

use crate::geometry::Point2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("point {0:?} lies outside the polygon")]
    PointOutsidePolygon(Point2),
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("region has zero area")]
    DegenerateRegion,
    #[error("intersection boundary has no circular arcs")]
    NoArcs,
    #[error("invalid partition pair ({i}, {j}) for {k} extreme points")]
    InvalidPair { i: usize, j: usize, k: usize },
    #[error("radius interval upper end {hi} is below the restricted optimum")]
    InfeasibleInterval { hi: f64 },
    #[error("geodesic hull has {0} extreme point(s); at least two are required")]
    DegenerateHull(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("solution check failed: centers reach radius {achieved}, claimed {radius}")]
    CertificateFailed { radius: f64, achieved: f64 },
    #[error("oracle is exhaustive and limited to 12 points, got {0}")]
    TooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
