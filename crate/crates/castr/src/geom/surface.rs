//! Planar convex contact surfaces and polytope/plane cross-sections.

use nalgebra::{Rotation3, Vector2, Vector3};

use super::polygon::{convex_hull_2d, polygon_area};
use super::{GeomError, Polytope, SURFACE_COPLANAR_TOL};

/// A planar convex polygon in 3D that a foot may land on.
///
/// Vertices are stored counter-clockwise about the unit normal; `frame` is
/// the rotation taking the world z-axis onto the normal, and `origin` an
/// in-plane anchor, so `frame`/`origin` define a 2D chart of the plane.
#[derive(Debug, Clone)]
pub struct Surface {
    pub id: u32,
    verts: Vec<Vector3<f64>>,
    verts2: Vec<Vector2<f64>>,
    normal: Vector3<f64>,
    frame: Rotation3<f64>,
    origin: Vector3<f64>,
}

impl Surface {
    pub fn new(id: u32, vertices: Vec<Vector3<f64>>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::InvalidGeometry(format!(
                "surface {id} needs at least 3 vertices"
            )));
        }
        if vertices
            .iter()
            .any(|v| !(v.x.is_finite() && v.y.is_finite() && v.z.is_finite()))
        {
            return Err(GeomError::InvalidGeometry(format!(
                "surface {id} has a non-finite vertex"
            )));
        }
        // Newell normal of the ring.
        let mut n = Vector3::zeros();
        for i in 0..vertices.len() {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            n += a.cross(&b);
        }
        if n.norm() < 1e-12 {
            return Err(GeomError::DegenerateGeometry(format!(
                "surface {id} has zero area"
            )));
        }
        let mut verts = vertices;
        let mut normal = n.normalize();
        // Deterministic orientation: prefer upward-facing normals.
        let keyed = (normal.z, normal.y, normal.x);
        if keyed < (0.0, 0.0, 0.0) {
            normal = -normal;
            verts.reverse();
        }
        let origin = verts.iter().sum::<Vector3<f64>>() / verts.len() as f64;
        for v in &verts {
            if (v - origin).dot(&normal).abs() > SURFACE_COPLANAR_TOL {
                return Err(GeomError::InvalidGeometry(format!(
                    "surface {id} vertices are not coplanar"
                )));
            }
        }
        let frame = rotation_z_to(&normal);
        let verts2: Vec<Vector2<f64>> = verts
            .iter()
            .map(|v| {
                let local = frame.inverse() * (v - origin);
                Vector2::new(local.x, local.y)
            })
            .collect();
        // Convexity and strict CCW order in the chart.
        for i in 0..verts2.len() {
            let a = verts2[i];
            let b = verts2[(i + 1) % verts2.len()];
            let c = verts2[(i + 2) % verts2.len()];
            if (b - a).perp(&(c - b)) < -1e-9 {
                return Err(GeomError::InvalidGeometry(format!(
                    "surface {id} polygon is not convex"
                )));
            }
        }
        if polygon_area(&verts2) <= 0.0 {
            return Err(GeomError::DegenerateGeometry(format!(
                "surface {id} ring has non-positive area"
            )));
        }
        Ok(Self {
            id,
            verts,
            verts2,
            normal,
            frame,
            origin,
        })
    }

    pub fn vertices(&self) -> &[Vector3<f64>] {
        &self.verts
    }

    /// Polygon in the surface chart, CCW.
    pub fn vertices_2d(&self) -> &[Vector2<f64>] {
        &self.verts2
    }

    pub fn normal(&self) -> Vector3<f64> {
        self.normal
    }

    /// Rotation taking the world z-axis onto the surface normal.
    pub fn frame(&self) -> Rotation3<f64> {
        self.frame
    }

    pub fn origin(&self) -> Vector3<f64> {
        self.origin
    }

    /// Plane equation offset: points on the plane satisfy `normal . p = d`.
    pub fn plane_offset(&self) -> f64 {
        self.normal.dot(&self.origin)
    }

    /// Signed distance to the surface plane.
    pub fn plane_distance(&self, p: &Vector3<f64>) -> f64 {
        self.normal.dot(p) - self.plane_offset()
    }

    pub fn project(&self, p: &Vector3<f64>) -> Vector2<f64> {
        let local = self.frame.inverse() * (p - self.origin);
        Vector2::new(local.x, local.y)
    }

    pub fn unproject(&self, q: &Vector2<f64>) -> Vector3<f64> {
        self.origin + self.frame * Vector3::new(q.x, q.y, 0.0)
    }

    pub fn centroid(&self) -> Vector3<f64> {
        self.verts.iter().sum::<Vector3<f64>>() / self.verts.len() as f64
    }
}

fn rotation_z_to(normal: &Vector3<f64>) -> Rotation3<f64> {
    Rotation3::rotation_between(&Vector3::z(), normal)
        // Antiparallel: half turn about x.
        .unwrap_or_else(|| Rotation3::from_axis_angle(&Vector3::x_axis(), std::f64::consts::PI))
}

/// Cross-section of a polytope with the plane of `s`, as a CCW convex
/// polygon (about the surface normal), not yet clipped to the surface
/// polygon. `None` when the polytope misses the plane entirely. A section
/// touching in a single point or segment is returned with 1 or 2 vertices.
pub fn plane_section(p: &Polytope, s: &Surface) -> Option<Vec<Vector3<f64>>> {
    const ON_PLANE: f64 = 1e-9;
    let verts = p.vertices();
    let f: Vec<f64> = verts.iter().map(|v| s.plane_distance(v)).collect();

    let mut hits: Vec<Vector3<f64>> = Vec::new();
    for (v, fv) in verts.iter().zip(&f) {
        if fv.abs() <= ON_PLANE {
            hits.push(*v);
        }
    }
    for i in 0..verts.len() {
        for j in (i + 1)..verts.len() {
            let (fi, fj) = (f[i], f[j]);
            if fi.abs() <= ON_PLANE || fj.abs() <= ON_PLANE {
                continue;
            }
            if fi * fj < 0.0 {
                let t = fi / (fi - fj);
                hits.push(verts[i] + (verts[j] - verts[i]) * t);
            }
        }
    }
    if hits.is_empty() {
        return None;
    }
    if hits.len() == 1 {
        return Some(hits);
    }
    // Hull the hit points in the surface chart to obtain the section ring.
    let proj: Vec<Vector2<f64>> = hits.iter().map(|h| s.project(h)).collect();
    let ring = convex_hull_2d(&proj);
    if ring.len() < 2 {
        // All hits coincide.
        return Some(vec![hits[0]]);
    }
    Some(ring.iter().map(|&i| hits[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big_plane(z: f64) -> Surface {
        Surface::new(
            0,
            vec![
                Vector3::new(-10.0, -10.0, z),
                Vector3::new(10.0, -10.0, z),
                Vector3::new(10.0, 10.0, z),
                Vector3::new(-10.0, 10.0, z),
            ],
        )
        .unwrap()
    }

    fn cube() -> Polytope {
        let mut v = Vec::new();
        for &x in &[0.0, 1.0] {
            for &y in &[0.0, 1.0] {
                for &z in &[0.0, 1.0] {
                    v.push(Vector3::new(x, y, z));
                }
            }
        }
        Polytope::from_points(&v).unwrap()
    }

    #[test]
    fn cube_midplane_section_is_unit_square() {
        let s = big_plane(0.5);
        let ring = plane_section(&cube(), &s).unwrap();
        assert_eq!(ring.len(), 4);
        for v in &ring {
            assert!((v.z - 0.5).abs() < 1e-9);
            assert!(v.x > -1e-9 && v.x < 1.0 + 1e-9);
        }
        let ring2: Vec<Vector2<f64>> = ring.iter().map(|v| s.project(v)).collect();
        assert!((polygon_area(&ring2) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn section_misses_when_above() {
        let s = big_plane(-0.5);
        assert!(plane_section(&cube(), &s).is_none());
    }

    #[test]
    fn cw_input_is_reoriented_upward() {
        let s = Surface::new(
            3,
            vec![
                Vector3::new(0.0, 0.0, 0.0),
                Vector3::new(0.0, 1.0, 0.0),
                Vector3::new(1.0, 1.0, 0.0),
                Vector3::new(1.0, 0.0, 0.0),
            ],
        )
        .unwrap();
        assert!((s.normal() - Vector3::z()).norm() < 1e-12);
        assert!(polygon_area(s.vertices_2d()) > 0.0);
    }

    #[test]
    fn nonconvex_surface_is_rejected() {
        let r = Surface::new(
            1,
            vec![
                Vector3::new(0.0, 0.0, 0.0),
                Vector3::new(2.0, 0.0, 0.0),
                Vector3::new(0.2, 0.2, 0.0),
                Vector3::new(0.0, 2.0, 0.0),
            ],
        );
        assert!(r.is_err());
    }

    #[test]
    fn projection_round_trip() {
        let s = Surface::new(
            7,
            vec![
                Vector3::new(0.0, 0.0, 1.0),
                Vector3::new(1.0, 0.0, 1.5),
                Vector3::new(1.0, 1.0, 1.5),
                Vector3::new(0.0, 1.0, 1.0),
            ],
        )
        .unwrap();
        for v in s.vertices() {
            let q = s.project(v);
            assert!((s.unproject(&q) - v).norm() < 1e-9);
        }
        assert!((s.normal().norm() - 1.0).abs() < 1e-12);
        // frame maps z onto the normal
        assert!((s.frame() * Vector3::z() - s.normal()).norm() < 1e-12);
    }
}
