//! A plane-geometry construction kernel paired with a randomized
//! verification harness for a catalog of incidence statements about
//! triangles, circles and conics.
//!
//! The kernel builds configurations (triangle centers, tangent circles,
//! conics, complete quadrilaterals); the harness generates random instances
//! of each cataloged statement, measures dimensionless incidence residuals,
//! and probes each claim for non-vacuity by perturbing one hypothesis input.

pub mod circles;
pub mod conic;
pub mod error;
pub mod geom;
pub mod numeric;
pub mod quad;
pub mod relation;
pub mod report;
pub mod scenario;
pub mod svg;
pub mod triangle;

pub use error::{Error, Result};
pub use geom::{Circle, Line, Point};
pub use numeric::{RandomStream, Tolerance};
pub use relation::{Relation, Status};
pub use scenario::{catalog, run_scenario, Verdict};
