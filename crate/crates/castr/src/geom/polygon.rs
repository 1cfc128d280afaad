//! 2D convex polygon machinery used in surface frames: monotone-chain hull,
//! Sutherland-Hodgman clipping, areas and perimeters.

use nalgebra::Vector2;

use super::{PATCH_MIN_AREA, PATCH_MIN_EXTENT};

const COLLINEAR_EPS: f64 = 1e-12;

fn cross(o: &Vector2<f64>, a: &Vector2<f64>, b: &Vector2<f64>) -> f64 {
    (a - o).perp(&(b - o))
}

/// Monotone-chain hull; returns indices into `pts` in counter-clockwise
/// order. Collinear and duplicate points are dropped.
pub fn convex_hull_2d(pts: &[Vector2<f64>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a]
            .x
            .partial_cmp(&pts[b].x)
            .unwrap()
            .then(pts[a].y.partial_cmp(&pts[b].y).unwrap())
    });
    order.dedup_by(|&mut a, &mut b| (pts[a] - pts[b]).norm() < 1e-12);
    if order.len() <= 2 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(order.len() * 2);
    for pass in 0..2 {
        let start = hull.len();
        let it: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in it {
            while hull.len() >= start + 2 {
                let m = hull.len();
                if cross(&pts[hull[m - 2]], &pts[hull[m - 1]], &pts[i]) <= COLLINEAR_EPS {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Shoelace area of a simple polygon given in order (positive for CCW).
pub fn polygon_area(ring: &[Vector2<f64>]) -> f64 {
    if ring.len() < 3 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..ring.len() {
        let a = &ring[i];
        let b = &ring[(i + 1) % ring.len()];
        s += a.perp(b);
    }
    s / 2.0
}

/// Sum of edge lengths in vertex order (closed ring).
pub fn perimeter_2d(ring: &[Vector2<f64>]) -> f64 {
    if ring.len() < 2 {
        return 0.0;
    }
    (0..ring.len())
        .map(|i| (ring[(i + 1) % ring.len()] - ring[i]).norm())
        .sum()
}

/// True when `p` lies inside or on the boundary of a convex CCW ring,
/// within a perpendicular distance `tol` of each edge.
pub fn point_in_convex_polygon(p: &Vector2<f64>, ring: &[Vector2<f64>], tol: f64) -> bool {
    match ring.len() {
        0 => false,
        1 => (p - ring[0]).norm() <= tol,
        2 => point_segment_distance_2d(p, &ring[0], &ring[1]) <= tol,
        _ => (0..ring.len()).all(|i| {
            let a = &ring[i];
            let b = &ring[(i + 1) % ring.len()];
            let len = (b - a).norm();
            cross(a, b, p) >= -tol * len.max(1e-30)
        }),
    }
}

fn point_segment_distance_2d(p: &Vector2<f64>, a: &Vector2<f64>, b: &Vector2<f64>) -> f64 {
    let ab = b - a;
    let denom = ab.norm_squared();
    if denom < 1e-30 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / denom).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Clip convex CCW polygon `subject` against convex CCW polygon `clip`
/// (Sutherland-Hodgman). The result is re-hulled and classified: polygons
/// below [`PATCH_MIN_AREA`] survive only as segments longer than
/// [`PATCH_MIN_EXTENT`]; anything smaller is reported as empty.
pub fn polygon_intersect(
    subject: &[Vector2<f64>],
    clip: &[Vector2<f64>],
) -> Option<Vec<Vector2<f64>>> {
    if subject.is_empty() || clip.len() < 3 {
        return None;
    }
    let mut poly: Vec<Vector2<f64>> = subject.to_vec();
    for i in 0..clip.len() {
        let a = clip[i];
        let b = clip[(i + 1) % clip.len()];
        poly = clip_halfplane(&poly, &a, &b);
        if poly.is_empty() {
            return None;
        }
    }
    classify_patch(&poly)
}

/// Keep the part of `poly` on the left of the directed edge a->b.
fn clip_halfplane(
    poly: &[Vector2<f64>],
    a: &Vector2<f64>,
    b: &Vector2<f64>,
) -> Vec<Vector2<f64>> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    let side = |p: &Vector2<f64>| cross(a, b, p);
    if poly.len() == 1 {
        if side(&poly[0]) >= 0.0 {
            out.push(poly[0]);
        }
        return out;
    }
    let n = poly.len();
    // A 2-point "ring" is an open segment; do not wrap around.
    let edges = if n == 2 { 1 } else { n };
    if n == 2 {
        // Seed with the first endpoint when inside.
        if side(&poly[0]) >= 0.0 {
            out.push(poly[0]);
        }
    }
    for i in 0..edges {
        let s = poly[i];
        let e = poly[(i + 1) % n];
        let sc = side(&s);
        let ec = side(&e);
        match (sc >= 0.0, ec >= 0.0) {
            (true, true) => out.push(e),
            (true, false) | (false, true) => {
                let denom = sc - ec;
                if denom.abs() > 1e-30 {
                    let t = sc / denom;
                    out.push(s + (e - s) * t);
                }
                if ec >= 0.0 {
                    out.push(e);
                }
            }
            (false, false) => {}
        }
    }
    out
}

/// Re-hull loose clip output and apply the degeneracy thresholds.
pub(crate) fn classify_patch(pts: &[Vector2<f64>]) -> Option<Vec<Vector2<f64>>> {
    if pts.is_empty() {
        return None;
    }
    let hull_idx = convex_hull_2d(pts);
    let ring: Vec<Vector2<f64>> = hull_idx.iter().map(|&i| pts[i]).collect();
    if ring.len() >= 3 && polygon_area(&ring) >= PATCH_MIN_AREA {
        return Some(ring);
    }
    // Degenerate: keep the farthest point pair as a segment if long enough.
    let mut best = (0usize, 0usize, 0.0f64);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = (pts[i] - pts[j]).norm();
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    if best.2 >= PATCH_MIN_EXTENT {
        Some(vec![pts[best.0], pts[best.1]])
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(side: f64) -> Vec<Vector2<f64>> {
        vec![
            Vector2::new(0.0, 0.0),
            Vector2::new(side, 0.0),
            Vector2::new(side, side),
            Vector2::new(0.0, side),
        ]
    }

    #[test]
    fn unit_square_area_and_perimeter() {
        let sq = square(1.0);
        assert!((polygon_area(&sq) - 1.0).abs() < 1e-12);
        assert!((perimeter_2d(&sq) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn intersection_is_idempotent() {
        let sq = square(1.0);
        let out = polygon_intersect(&sq, &sq).unwrap();
        assert!((polygon_area(&out) - 1.0).abs() < 1e-9);
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn disjoint_squares_are_empty() {
        let a = square(1.0);
        let b: Vec<_> = square(1.0).iter().map(|p| p + Vector2::new(3.0, 0.0)).collect();
        assert!(polygon_intersect(&a, &b).is_none());
    }

    #[test]
    fn sliver_collapses_to_segment() {
        let a = square(1.0);
        // Overlap is a 1.0 x 1e-7 strip: below the area threshold but long.
        let b: Vec<_> = square(1.0)
            .iter()
            .map(|p| p + Vector2::new(0.0, 1.0 - 1e-7))
            .collect();
        let out = polygon_intersect(&a, &b).unwrap();
        assert_eq!(out.len(), 2);
        assert!((out[0] - out[1]).norm() > 0.99);
    }

    #[test]
    fn tiny_overlap_is_dropped() {
        let a = square(1.0);
        let b: Vec<_> = square(1.0)
            .iter()
            .map(|p| p + Vector2::new(1.0 - 1e-5, 1.0 - 1e-5))
            .collect();
        assert!(polygon_intersect(&a, &b).is_none());
    }

    #[test]
    fn hull_drops_collinear_and_interior() {
        let pts = vec![
            Vector2::new(0.0, 0.0),
            Vector2::new(2.0, 0.0),
            Vector2::new(1.0, 0.0), // collinear
            Vector2::new(2.0, 2.0),
            Vector2::new(0.5, 0.5), // interior
            Vector2::new(0.0, 2.0),
        ];
        let hull = convex_hull_2d(&pts);
        assert_eq!(hull.len(), 4);
        assert!(!hull.contains(&2) && !hull.contains(&4));
        let ring: Vec<_> = hull.iter().map(|&i| pts[i]).collect();
        assert!(polygon_area(&ring) > 0.0, "hull must be CCW");
    }
}
