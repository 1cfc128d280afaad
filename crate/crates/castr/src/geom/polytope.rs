//! Convex polytopes in vertex representation.

use nalgebra::{Matrix3, Rotation3, Vector2, Vector3};

use super::hull::{hull_3d, lex_cmp};
use super::polygon::convex_hull_2d;
use super::{GeomError, HRep, HULL_EPS};

/// A convex set of 3D points stored by its extreme points only.
///
/// Construction always canonicalizes: duplicates and non-extreme points are
/// removed and the vertex list is sorted lexicographically, so two polytopes
/// describing the same set compare equal vertex-by-vertex. Degenerate sets
/// (points, segments, planar polygons) are first-class values.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    verts: Vec<Vector3<f64>>,
    dim: u8,
}

impl Polytope {
    /// Canonicalizes `points` down to their extreme points.
    pub fn from_points(points: &[Vector3<f64>]) -> Result<Self, GeomError> {
        if points.is_empty() {
            return Err(GeomError::InvalidGeometry("empty point set".into()));
        }
        if let Some(p) = points.iter().find(|p| !(p.x.is_finite() && p.y.is_finite() && p.z.is_finite())) {
            return Err(GeomError::InvalidGeometry(format!("non-finite point {p:?}")));
        }

        let mut pts: Vec<Vector3<f64>> = Vec::with_capacity(points.len());
        for p in points {
            if !pts.iter().any(|q| (q - p).norm() < 1e-12) {
                pts.push(*p);
            }
        }

        let (dim, verts) = reduce_to_extreme(&pts);
        let mut verts = verts;
        verts.sort_by(lex_cmp);
        Ok(Self { verts, dim })
    }

    pub fn singleton(p: Vector3<f64>) -> Self {
        Self { verts: vec![p], dim: 0 }
    }

    pub fn vertices(&self) -> &[Vector3<f64>] {
        &self.verts
    }

    /// Affine dimension of the vertex set (0..=3).
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Arithmetic mean of the extreme points.
    pub fn centroid(&self) -> Vector3<f64> {
        self.verts.iter().sum::<Vector3<f64>>() / self.verts.len() as f64
    }

    pub fn max_vertex_norm(&self) -> f64 {
        self.verts.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        if other.verts.len() == 1 {
            return self.translated(&other.verts[0]);
        }
        if self.verts.len() == 1 {
            return other.translated(&self.verts[0]);
        }
        let mut sums = Vec::with_capacity(self.verts.len() * other.verts.len());
        for u in &self.verts {
            for v in &other.verts {
                sums.push(u + v);
            }
        }
        Self::from_points(&sums).expect("sum of finite points is finite")
    }

    pub fn translated(&self, t: &Vector3<f64>) -> Self {
        let mut verts: Vec<_> = self.verts.iter().map(|v| v + t).collect();
        verts.sort_by(lex_cmp);
        Self { verts, dim: self.dim }
    }

    /// Applies `q` after checking it is a proper rotation (orthonormal,
    /// determinant +1 within 1e-9).
    pub fn rotate(&self, q: &Matrix3<f64>) -> Result<Self, GeomError> {
        let gram = q.transpose() * q;
        if (gram - Matrix3::identity()).norm() > 1e-9 || (q.determinant() - 1.0).abs() > 1e-9 {
            return Err(GeomError::InvalidRotation);
        }
        let mut verts: Vec<_> = self.verts.iter().map(|v| q * v).collect();
        verts.sort_by(lex_cmp);
        Ok(Self { verts, dim: self.dim })
    }

    /// Rotation by an already-validated rotation.
    pub fn rotated(&self, r: &Rotation3<f64>) -> Self {
        let mut verts: Vec<_> = self.verts.iter().map(|v| r * v).collect();
        verts.sort_by(lex_cmp);
        Self { verts, dim: self.dim }
    }

    /// Halfspace form; fails for sets of affine dimension below 2.
    pub fn to_hrep(&self) -> Result<HRep, GeomError> {
        HRep::from_polytope(self)
    }

    /// Membership within `tol`. Full-dimensional and planar sets go through
    /// the halfspace form; segments and points use direct distances. Builds
    /// the H-rep on every call: hot paths should convert once instead.
    pub fn contains(&self, x: &Vector3<f64>, tol: f64) -> bool {
        match self.dim {
            0 => (x - self.verts[0]).norm() <= tol,
            1 => point_segment_distance(x, &self.verts[0], &self.verts[1]) <= tol,
            _ => self
                .to_hrep()
                .map(|h| h.contains(x, tol))
                .unwrap_or(false),
        }
    }
}

fn point_segment_distance(p: &Vector3<f64>, a: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
    let ab = b - a;
    let denom = ab.norm_squared();
    if denom < 1e-30 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / denom).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Extreme-point reduction with explicit handling of every affine dimension.
fn reduce_to_extreme(pts: &[Vector3<f64>]) -> (u8, Vec<Vector3<f64>>) {
    if pts.len() == 1 {
        return (0, pts.to_vec());
    }
    let p0 = pts[0];
    let far = pts
        .iter()
        .max_by(|a, b| {
            (*a - p0)
                .norm_squared()
                .partial_cmp(&(*b - p0).norm_squared())
                .unwrap()
        })
        .copied()
        .unwrap();
    if (far - p0).norm() < 1e-12 {
        return (0, vec![p0]);
    }
    let u = (far - p0).normalize();
    let line_dist = |p: &Vector3<f64>| {
        let v = p - p0;
        (v - u * v.dot(&u)).norm()
    };
    let p2 = pts
        .iter()
        .max_by(|a, b| line_dist(a).partial_cmp(&line_dist(b)).unwrap())
        .copied()
        .unwrap();
    if line_dist(&p2) < HULL_EPS {
        // Collinear: keep extreme projections.
        let lo = pts
            .iter()
            .min_by(|a, b| (*a - p0).dot(&u).partial_cmp(&(*b - p0).dot(&u)).unwrap())
            .copied()
            .unwrap();
        let hi = pts
            .iter()
            .max_by(|a, b| (*a - p0).dot(&u).partial_cmp(&(*b - p0).dot(&u)).unwrap())
            .copied()
            .unwrap();
        return (1, vec![lo, hi]);
    }
    let w = {
        let v = p2 - p0;
        (v - u * v.dot(&u)).normalize()
    };
    let n = u.cross(&w);
    let plane_dist = |p: &Vector3<f64>| (p - p0).dot(&n);
    let max_plane = pts
        .iter()
        .map(|p| plane_dist(p).abs())
        .fold(0.0, f64::max);
    if max_plane < HULL_EPS {
        // Planar: 2D hull in the (u, w) frame.
        let proj: Vec<Vector2<f64>> = pts
            .iter()
            .map(|p| Vector2::new((p - p0).dot(&u), (p - p0).dot(&w)))
            .collect();
        let hull = convex_hull_2d(&proj);
        return (2, hull.iter().map(|&i| pts[i]).collect());
    }
    let hull = hull_3d(pts).expect("full-dimensional by the checks above");
    let mut used: Vec<bool> = vec![false; pts.len()];
    for f in &hull.faces {
        for &i in f {
            used[i] = true;
        }
    }
    (
        3,
        pts.iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(p, _)| *p)
            .collect(),
    )
}
