//! Convex-geometry kernel: polytopes in vertex representation, Minkowski
//! sums, rotations, plane cross-sections, convex polygon clipping and
//! vertex-to-halfspace conversion.
//!
//! All lengths are meters, all angles radians. Every operation here is a
//! pure function over immutable values and safe to call concurrently.

mod hrep;
mod hull;
mod polygon;
mod polytope;
mod surface;

pub use hrep::{enumerate_vertices, HRep, HalfSpace};
pub use polygon::{
    convex_hull_2d, perimeter_2d, point_in_convex_polygon, polygon_area, polygon_intersect,
};
pub use polytope::Polytope;
pub use surface::{plane_section, Surface};

use thiserror::Error;

/// Coplanarity / visibility tolerance for hull construction (meters).
pub const HULL_EPS: f64 = 1e-9;

/// Vertices must satisfy every halfspace row of their own H-rep within this.
pub const HREP_TOL: f64 = 1e-7;

/// An intersection patch is kept as a polygon only above this area (m^2).
pub const PATCH_MIN_AREA: f64 = 1e-6;

/// Below [`PATCH_MIN_AREA`], a patch survives as a segment only if its
/// diameter exceeds this length (meters).
pub const PATCH_MIN_EXTENT: f64 = 1e-3;

/// Surface polygon vertices must be coplanar within this (meters).
pub const SURFACE_COPLANAR_TOL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("rotation matrix is not a proper rotation")]
    InvalidRotation,
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
}
