//! Exact integer predicates on grid points and vectors.

use std::cmp::Ordering;

use crate::locate::GridVector;

/// Grid points share the vector representation.
pub type Point = GridVector;

pub fn sub(a: Point, b: Point) -> GridVector {
    GridVector::new(a.x - b.x, a.y - b.y)
}

pub fn add(a: Point, v: GridVector) -> Point {
    GridVector::new(a.x + v.x, a.y + v.y)
}

pub fn cross(a: GridVector, b: GridVector) -> i128 {
    a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
}

pub fn dot(a: GridVector, b: GridVector) -> i128 {
    a.x as i128 * b.x as i128 + a.y as i128 * b.y as i128
}

/// Sign of the turn `p -> q -> r`: positive for counter-clockwise.
pub fn orient(p: Point, q: Point, r: Point) -> i128 {
    cross(sub(q, p), sub(r, p))
}

/// 0 for directions in `[0, π)`, 1 for `[π, 2π)`.
fn half(v: GridVector) -> u8 {
    if v.y > 0 || (v.y == 0 && v.x > 0) {
        0
    } else {
        1
    }
}

/// Compares the directions of two non-zero vectors by angle in `[0, 2π)`.
pub fn angle_cmp(a: GridVector, b: GridVector) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// Whether `b` points in the same direction as `a` (both non-zero).
pub fn same_direction(a: GridVector, b: GridVector) -> bool {
    cross(a, b) == 0 && dot(a, b) > 0
}

/// Whether `r` lies on the closed segment `pq` (given collinearity is not
/// assumed).
pub fn on_segment(p: Point, q: Point, r: Point) -> bool {
    orient(p, q, r) == 0
        && r.x >= p.x.min(q.x)
        && r.x <= p.x.max(q.x)
        && r.y >= p.y.min(q.y)
        && r.y <= p.y.max(q.y)
}

/// Whether closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c).signum();
    let o2 = orient(a, b, d).signum();
    let o3 = orient(c, d, a).signum();
    let o4 = orient(c, d, b).signum();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        GridVector::new(x, y)
    }

    #[test]
    fn angle_order() {
        let mut v = vec![p(0, -1), p(-1, 0), p(1, 1), p(1, 0), p(-1, -1), p(0, 1)];
        v.sort_by(|a, b| angle_cmp(*a, *b));
        assert_eq!(
            v,
            vec![p(1, 0), p(1, 1), p(0, 1), p(-1, 0), p(-1, -1), p(0, -1)]
        );
        assert_eq!(angle_cmp(p(2, 2), p(1, 1)), Ordering::Equal);
    }

    #[test]
    fn intersections() {
        assert!(segments_intersect(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
        assert!(segments_intersect(p(0, 0), p(1, 1), p(1, 1), p(2, 0)));
        assert!(!segments_intersect(p(0, 0), p(1, 0), p(2, 0), p(3, 0)));
        assert!(segments_intersect(p(0, 0), p(2, 0), p(1, 0), p(3, 0)));
        assert!(!segments_intersect(p(0, 0), p(1, 1), p(0, 1), p(1, 2)));
    }
}
