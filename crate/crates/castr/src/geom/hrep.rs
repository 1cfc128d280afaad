//! Halfspace (inequality) representation and the vertex-to-halfspace
//! conversion used by the footstep program.

use nalgebra::{Matrix3, Vector2, Vector3};

use super::hull::hull_3d;
use super::polygon::convex_hull_2d;
use super::{GeomError, Polytope, HREP_TOL, HULL_EPS};

/// One normalised inequality `normal . p <= offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfSpace {
    pub normal: Vector3<f64>,
    pub offset: f64,
}

impl HalfSpace {
    pub fn satisfies(&self, p: &Vector3<f64>, tol: f64) -> bool {
        self.normal.dot(p) <= self.offset + tol
    }

    /// Slack `offset - normal . p`; negative outside, and a true distance
    /// to the boundary plane because normals are unit length.
    pub fn slack(&self, p: &Vector3<f64>) -> f64 {
        self.offset - self.normal.dot(p)
    }
}

/// Intersection of normalised halfspaces equivalent to a source polytope.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HRep {
    pub rows: Vec<HalfSpace>,
}

impl HRep {
    /// Converts extreme points to inequalities. Full-dimensional polytopes
    /// yield one row per facet; planar ones yield the in-plane edge rows
    /// plus two opposing plane rows. Segments and points are rejected.
    pub fn from_polytope(p: &Polytope) -> Result<Self, GeomError> {
        match p.dim() {
            3 => Self::from_full_dimensional(p),
            2 => Self::from_planar(p),
            _ => Err(GeomError::DegenerateGeometry(format!(
                "affine dimension {} has no bounded halfspace form",
                p.dim()
            ))),
        }
    }

    fn from_full_dimensional(p: &Polytope) -> Result<Self, GeomError> {
        let verts = p.vertices();
        let hull = hull_3d(verts).ok_or_else(|| {
            GeomError::DegenerateGeometry("hull collapsed during conversion".into())
        })?;
        let mut rows: Vec<HalfSpace> = Vec::new();
        for [a, b, c] in &hull.faces {
            let n = (verts[*b] - verts[*a]).cross(&(verts[*c] - verts[*a]));
            let norm = n.norm();
            if norm < 1e-18 {
                continue;
            }
            let normal = n / norm;
            let offset = normal.dot(&verts[*a]);
            if !rows
                .iter()
                .any(|r| (r.normal - normal).norm() < 1e-7 && (r.offset - offset).abs() < 1e-7)
            {
                rows.push(HalfSpace { normal, offset });
            }
        }
        let h = Self { rows };
        h.check_vertices(verts)?;
        Ok(h)
    }

    fn from_planar(p: &Polytope) -> Result<Self, GeomError> {
        let verts = p.vertices();
        let origin = verts[0];
        // Rebuild the plane basis from the vertex set.
        let u = (verts
            .iter()
            .max_by(|a, b| {
                (*a - origin)
                    .norm_squared()
                    .partial_cmp(&(*b - origin).norm_squared())
                    .unwrap()
            })
            .unwrap()
            - origin)
            .normalize();
        let w_raw = verts
            .iter()
            .map(|v| {
                let d = v - origin;
                d - u * d.dot(&u)
            })
            .max_by(|a, b| a.norm_squared().partial_cmp(&b.norm_squared()).unwrap())
            .unwrap();
        if w_raw.norm() < HULL_EPS {
            return Err(GeomError::DegenerateGeometry("collinear vertices".into()));
        }
        let w = w_raw.normalize();
        let n = u.cross(&w);
        let d = n.dot(&origin);

        let proj: Vec<Vector2<f64>> = verts
            .iter()
            .map(|v| Vector2::new((v - origin).dot(&u), (v - origin).dot(&w)))
            .collect();
        let ring = convex_hull_2d(&proj);
        let mut rows = vec![
            HalfSpace { normal: n, offset: d },
            HalfSpace { normal: -n, offset: -d },
        ];
        for i in 0..ring.len() {
            let a = verts[ring[i]];
            let b = verts[ring[(i + 1) % ring.len()]];
            let edge = (b - a).normalize();
            let outward = edge.cross(&n);
            rows.push(HalfSpace {
                normal: outward,
                offset: outward.dot(&a),
            });
        }
        let h = Self { rows };
        h.check_vertices(verts)?;
        Ok(h)
    }

    fn check_vertices(&self, verts: &[Vector3<f64>]) -> Result<(), GeomError> {
        for v in verts {
            for r in &self.rows {
                if !r.satisfies(v, HREP_TOL) {
                    return Err(GeomError::InvalidGeometry(format!(
                        "vertex {v:?} violates a derived row by {}",
                        -r.slack(v)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, p: &Vector3<f64>, tol: f64) -> bool {
        self.rows.iter().all(|r| r.satisfies(p, tol))
    }

    /// Smallest row slack; negative when outside.
    pub fn min_slack(&self, p: &Vector3<f64>) -> f64 {
        self.rows
            .iter()
            .map(|r| r.slack(p))
            .fold(f64::INFINITY, f64::min)
    }
}

/// Recovers the vertex set of a bounded, full-dimensional `HRep` by
/// enumerating all row triples. Intended for verification at small sizes.
pub fn enumerate_vertices(h: &HRep) -> Vec<Vector3<f64>> {
    let m = h.rows.len();
    let mut verts: Vec<Vector3<f64>> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                let a = Matrix3::from_rows(&[
                    h.rows[i].normal.transpose(),
                    h.rows[j].normal.transpose(),
                    h.rows[k].normal.transpose(),
                ]);
                if a.determinant().abs() < 1e-9 {
                    continue;
                }
                let b = Vector3::new(h.rows[i].offset, h.rows[j].offset, h.rows[k].offset);
                if let Some(inv) = a.try_inverse() {
                    let p = inv * b;
                    if h.contains(&p, HREP_TOL) && !verts.iter().any(|q| (q - p).norm() < 1e-6) {
                        verts.push(p);
                    }
                }
            }
        }
    }
    verts
}
