//! Incremental 3D convex hull over a modest number of points (d <= ~200).

use nalgebra::Vector3;

use super::HULL_EPS;

/// Triangulated hull boundary. Face indices point into the input slice and
/// wind counter-clockwise when seen from outside.
pub(crate) struct Hull3 {
    pub faces: Vec<[usize; 3]>,
}

struct Face {
    idx: [usize; 3],
    normal: Vector3<f64>,
    offset: f64,
    alive: bool,
}

fn face_of(pts: &[Vector3<f64>], a: usize, b: usize, c: usize) -> Face {
    let n = (pts[b] - pts[a]).cross(&(pts[c] - pts[a]));
    let norm = n.norm();
    let normal = if norm > 0.0 { n / norm } else { n };
    Face {
        idx: [a, b, c],
        normal,
        offset: normal.dot(&pts[a]),
        alive: true,
    }
}

/// Builds the hull of a full-dimensional point set. Returns `None` when the
/// points span fewer than three dimensions.
pub(crate) fn hull_3d(pts: &[Vector3<f64>]) -> Option<Hull3> {
    let n = pts.len();
    if n < 4 {
        return None;
    }

    // Seed tetrahedron from extreme points.
    let i0 = (0..n)
        .min_by(|&a, &b| lex_cmp(&pts[a], &pts[b]))
        .expect("non-empty");
    let i1 = (0..n).max_by(|&a, &b| {
        let da = (pts[a] - pts[i0]).norm_squared();
        let db = (pts[b] - pts[i0]).norm_squared();
        da.partial_cmp(&db).unwrap()
    })?;
    if (pts[i1] - pts[i0]).norm() < HULL_EPS {
        return None;
    }
    let dir = (pts[i1] - pts[i0]).normalize();
    let line_dist = |p: &Vector3<f64>| {
        let v = p - pts[i0];
        (v - dir * v.dot(&dir)).norm()
    };
    let i2 = (0..n).max_by(|&a, &b| line_dist(&pts[a]).partial_cmp(&line_dist(&pts[b])).unwrap())?;
    if line_dist(&pts[i2]) < HULL_EPS {
        return None;
    }
    let plane_n = (pts[i1] - pts[i0]).cross(&(pts[i2] - pts[i0])).normalize();
    let plane_dist = |p: &Vector3<f64>| (p - pts[i0]).dot(&plane_n);
    let i3 = (0..n).max_by(|&a, &b| {
        plane_dist(&pts[a])
            .abs()
            .partial_cmp(&plane_dist(&pts[b]).abs())
            .unwrap()
    })?;
    if plane_dist(&pts[i3]).abs() < HULL_EPS {
        return None;
    }

    let mut faces: Vec<Face> = Vec::with_capacity(2 * n);
    // Orient the seed so every face looks away from the opposite vertex.
    let seed = if plane_dist(&pts[i3]) > 0.0 {
        [[i0, i2, i1], [i0, i1, i3], [i1, i2, i3], [i2, i0, i3]]
    } else {
        [[i0, i1, i2], [i1, i0, i3], [i2, i1, i3], [i0, i2, i3]]
    };
    for [a, b, c] in seed {
        faces.push(face_of(pts, a, b, c));
    }

    for p in 0..n {
        if p == i0 || p == i1 || p == i2 || p == i3 {
            continue;
        }
        let visible: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.alive && f.normal.dot(&pts[p]) - f.offset > HULL_EPS)
            .map(|(i, _)| i)
            .collect();
        if visible.is_empty() {
            continue; // interior or on the boundary
        }
        // Horizon: directed edges of visible faces whose reverse stays alive.
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for &fi in &visible {
            let [a, b, c] = faces[fi].idx;
            edges.push((a, b));
            edges.push((b, c));
            edges.push((c, a));
        }
        for &fi in &visible {
            faces[fi].alive = false;
        }
        for &(u, v) in &edges {
            if !edges.contains(&(v, u)) {
                faces.push(face_of(pts, u, v, p));
            }
        }
    }

    let faces: Vec<[usize; 3]> = faces.iter().filter(|f| f.alive).map(|f| f.idx).collect();
    if faces.is_empty() {
        None
    } else {
        Some(Hull3 { faces })
    }
}

pub(crate) fn lex_cmp(a: &Vector3<f64>, b: &Vector3<f64>) -> std::cmp::Ordering {
    a.x.partial_cmp(&b.x)
        .unwrap()
        .then(a.y.partial_cmp(&b.y).unwrap())
        .then(a.z.partial_cmp(&b.z).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Vec<Vector3<f64>> {
        let mut v = Vec::new();
        for &x in &[0.0, 1.0] {
            for &y in &[0.0, 1.0] {
                for &z in &[0.0, 1.0] {
                    v.push(Vector3::new(x, y, z));
                }
            }
        }
        v
    }

    #[test]
    fn cube_hull_has_twelve_faces() {
        let pts = cube();
        let hull = hull_3d(&pts).unwrap();
        assert_eq!(hull.faces.len(), 12);
        // Every face normal is axis-aligned for a cube.
        for [a, b, c] in &hull.faces {
            let n = (pts[*b] - pts[*a]).cross(&(pts[*c] - pts[*a])).normalize();
            let m = n.abs();
            assert!((m.x + m.y + m.z - 1.0).abs() < 1e-9, "normal {n:?}");
        }
    }

    #[test]
    fn interior_points_do_not_appear() {
        let mut pts = cube();
        pts.push(Vector3::new(0.5, 0.5, 0.5));
        pts.push(Vector3::new(0.25, 0.5, 0.5));
        let hull = hull_3d(&pts).unwrap();
        for f in &hull.faces {
            assert!(f.iter().all(|&i| i < 8), "interior vertex on hull");
        }
    }

    #[test]
    fn coplanar_input_is_rejected() {
        let pts = vec![
            Vector3::new(0.0, 0.0, 0.0),
            Vector3::new(1.0, 0.0, 0.0),
            Vector3::new(0.0, 1.0, 0.0),
            Vector3::new(1.0, 1.0, 0.0),
        ];
        assert!(hull_3d(&pts).is_none());
    }
}
