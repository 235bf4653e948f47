//! Geodesic two-center of a point set inside a simple polygon.

pub mod decision;
pub mod disk;
pub mod driver;
pub mod error;
pub mod geodesic;
pub mod geometry;
pub mod hull;
pub mod instances;
pub mod one_center;
pub mod optimizer;
pub mod oracle;
pub mod polygon;
pub mod triangulation;

pub use error::{Error, Result};
pub use geometry::Point2;
pub use polygon::SimplePolygon;
pub use triangulation::TriangulatedPolygon;

/// The guide's snippets, compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polygons.md")]
    mod polygons {}
    #[doc = include_str!("../../../book/src/shortest-paths.md")]
    mod shortest_paths {}
    #[doc = include_str!("../../../book/src/geodesic-hull.md")]
    mod geodesic_hull {}
    #[doc = include_str!("../../../book/src/geodesic-disks.md")]
    mod geodesic_disks {}
    #[doc = include_str!("../../../book/src/one-center.md")]
    mod one_center {}
    #[doc = include_str!("../../../book/src/decision.md")]
    mod decision {}
    #[doc = include_str!("../../../book/src/optimization.md")]
    mod optimization {}
    #[doc = include_str!("../../../book/src/testing.md")]
    mod testing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
