//! Independent checks on a finished drawing: monotonicity, planarity, the
//! non-strict slope-disjoint properties, grid-size bounds and child order.
//!
//! Everything except the slope-versus-range comparison of property P1 is
//! decided with exact integer arithmetic.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::angle::AngleAssignment;
use crate::geom::{angle_cmp, cross, dot, same_direction, segments_intersect, sub, Point};
use crate::layout::{Algorithm, Drawing, GridDims};
use crate::locate::{GridVector, SECTOR_MARGIN};
use crate::tree::{root_at, RootedTree, Tree};

/// Whether a set of non-zero vectors fits in an open half-plane, i.e. some
/// direction has strictly positive dot product with all of them.
///
/// Sorts the directions by angle and looks for a circular gap strictly
/// larger than π between consecutive distinct directions.
pub fn fits_open_half_plane(vectors: &[GridVector]) -> bool {
    let mut dirs: Vec<GridVector> = vectors.to_vec();
    dirs.sort_by(|a, b| angle_cmp(*a, *b));
    dirs.dedup_by(|a, b| same_direction(*a, *b));
    if dirs.len() <= 1 {
        return true;
    }
    (0..dirs.len()).any(|i| {
        let a = dirs[i];
        let b = dirs[(i + 1) % dirs.len()];
        // Distinct directions: the ccw gap a -> b is in (0, 2π); it exceeds π
        // exactly when b is clockwise of a.
        cross(a, b) < 0
    })
}

/// Vertices on the tree path from `u` to `v`, in order.
pub fn tree_path(tree: &Tree, u: usize, v: usize) -> Vec<usize> {
    let rt = root_at(tree, u);
    let mut path = rt.path_from_root(v);
    debug_assert_eq!(path.first(), Some(&u));
    path.shrink_to_fit();
    path
}

/// Whether the drawn path between `u` and `v` is monotone: some direction
/// sees the path's vertices in strictly increasing projection order.
pub fn monotone_pair(d: &Drawing, u: usize, v: usize) -> bool {
    let path = tree_path(&d.tree, u, v);
    let steps: Vec<GridVector> = path
        .windows(2)
        .map(|w| sub(d.coords[w[1]], d.coords[w[0]]))
        .collect();
    if steps.iter().any(|s| s.x == 0 && s.y == 0) {
        return false;
    }
    fits_open_half_plane(&steps)
}

/// Smallest angular interval (ccw from `lo` to `hi`, width < π) holding all
/// directions seen so far along a walk.
#[derive(Clone, Copy)]
struct Cone {
    lo: GridVector,
    hi: GridVector,
}

/// Ccw sweep from `a` to `b` is strictly less than π.
fn narrow(a: GridVector, b: GridVector) -> bool {
    let c = cross(a, b);
    c > 0 || (c == 0 && dot(a, b) > 0)
}

impl Cone {
    fn extend(self, w: GridVector) -> Option<Cone> {
        if narrow(self.lo, w) && narrow(w, self.hi) {
            Some(self)
        } else if narrow(self.lo, w) && narrow(self.hi, w) {
            Some(Cone { lo: self.lo, hi: w })
        } else if narrow(w, self.hi) && narrow(w, self.lo) {
            Some(Cone { lo: w, hi: self.hi })
        } else {
            None
        }
    }
}

/// First vertex (in DFS order) whose path from `source` is not monotone.
fn first_non_monotone_from(tree: &Tree, coords: &[Point], source: usize) -> Option<usize> {
    let mut stack: Vec<(usize, usize, Option<Cone>)> = Vec::new();
    for &w in tree.neighbors(source).iter().rev() {
        stack.push((w, source, None));
    }
    while let Some((v, from, cone)) = stack.pop() {
        let step = sub(coords[v], coords[from]);
        if step.x == 0 && step.y == 0 {
            return Some(v);
        }
        let next = match cone {
            None => Cone { lo: step, hi: step },
            Some(c) => match c.extend(step) {
                Some(c) => c,
                None => return Some(v),
            },
        };
        for &w in tree.neighbors(v).iter().rev() {
            if w != from {
                stack.push((w, v, Some(next)));
            }
        }
    }
    None
}

/// Outcome of the all-pairs monotonicity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonotoneCheck {
    pub ok: bool,
    /// First failing pair `(source, target)`.
    pub witness: Option<(usize, usize)>,
}

/// All-pairs monotonicity. One walk per source keeps the minimal cone of
/// edge directions; a path stops being monotone once no cone narrower than
/// π holds them.
pub fn monotone_drawing(d: &Drawing) -> MonotoneCheck {
    let witness = (0..d.len())
        .into_par_iter()
        .find_map_first(|s| first_non_monotone_from(&d.tree, &d.coords, s).map(|v| (s, v)));
    MonotoneCheck {
        ok: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanarityFailure {
    CoincidentVertices(usize, usize),
    /// Two edges meeting somewhere other than a shared endpoint.
    Crossing((usize, usize), (usize, usize)),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarCheck {
    pub ok: bool,
    pub witness: Option<PlanarityFailure>,
}

/// Exact planarity of the straight-line drawing: distinct vertex points, no
/// two edges meeting except at a shared endpoint.
pub fn planar(d: &Drawing, tree: &Tree) -> PlanarCheck {
    let fail = |w| PlanarCheck {
        ok: false,
        witness: Some(w),
    };
    let mut order: Vec<usize> = (0..d.len()).collect();
    order.sort_by_key(|&v| (d.coords[v].x, d.coords[v].y, v));
    for w in order.windows(2) {
        if d.coords[w[0]] == d.coords[w[1]] {
            return fail(PlanarityFailure::CoincidentVertices(
                w[0].min(w[1]),
                w[0].max(w[1]),
            ));
        }
    }
    let edges = tree.edges();
    let c = &d.coords;
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for &(e, f) in &edges[i + 1..] {
            let shared = [e, f].into_iter().find(|&x| x == a || x == b);
            let bad = match shared {
                None => segments_intersect(c[a], c[b], c[e], c[f]),
                Some(s) => {
                    // Touching at `s` is fine; overlapping along a ray is not.
                    let p = if s == a { b } else { a };
                    let q = if s == e { f } else { e };
                    same_direction(sub(c[p], c[s]), sub(c[q], c[s]))
                }
            };
            if bad {
                return fail(PlanarityFailure::Crossing((a, b), (e, f)));
            }
        }
    }
    PlanarCheck {
        ok: true,
        witness: None,
    }
}

/// Properties of a non-strictly slope-disjoint drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NssdProperty {
    /// Edge slopes inside `T_u` (and the edge entering `u`) lie strictly
    /// within `u`'s range.
    P1,
    /// A child's range is nested in its parent's.
    P2,
    /// Sibling ranges have disjoint interiors.
    P3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NssdStatus {
    Pass,
    Fail {
        property: NssdProperty,
        vertex: usize,
    },
    NotApplicable,
}

/// Outcome of a check that only some drawings admit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applicability {
    Pass,
    Fail(usize),
    NotApplicable,
}

impl Applicability {
    pub fn is_fail(self) -> bool {
        matches!(self, Applicability::Fail(_))
    }
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicability::Pass => f.write_str("true"),
            Applicability::Fail(_) => f.write_str("false"),
            Applicability::NotApplicable => f.write_str("n/a"),
        }
    }
}

fn strictly_in(slope: f64, lo: f64, hi: f64) -> bool {
    slope > lo + SECTOR_MARGIN && slope < hi - SECTOR_MARGIN
}

/// Checks the three slope-disjoint properties against `a`, using the
/// drawing's rooted tree. Four-quadrant composites are not applicable.
pub fn check_nssd(d: &Drawing, a: &AngleAssignment) -> NssdStatus {
    let Some(rt) = d
        .rooted
        .as_ref()
        .filter(|_| d.algorithm != Algorithm::FourQuadrants)
    else {
        return NssdStatus::NotApplicable;
    };
    if a.len() != d.len() {
        return NssdStatus::NotApplicable;
    }
    let order = rt.preorder();
    let fail = |property, vertex| NssdStatus::Fail { property, vertex };

    for &c in &order {
        let Some(p) = rt.parent(c) else { continue };
        let slope = sub(d.coords[c], d.coords[p]).slope();
        // The edge p -> c enters c and lies in T_w for every ancestor w of c.
        let mut w = Some(c);
        while let Some(x) = w {
            let r = a.range(x);
            if !strictly_in(slope, r.lo().radians(), r.hi().radians()) {
                return fail(NssdProperty::P1, x);
            }
            w = rt.parent(x);
        }
    }
    for &c in &order {
        if let Some(p) = rt.parent(c) {
            if !a.range(p).contains_range(a.range(c)) {
                return fail(NssdProperty::P2, c);
            }
        }
    }
    for &u in &order {
        let kids = rt.children(u);
        for (i, &x) in kids.iter().enumerate() {
            for &y in &kids[i + 1..] {
                if !a.range(x).interior_disjoint(a.range(y)) {
                    return fail(NssdProperty::P3, y);
                }
            }
        }
    }
    NssdStatus::Pass
}

/// `odd(n)`: 1 for odd `n`, 0 for even.
pub fn odd(n: usize) -> usize {
    n % 2
}

/// Grid size the algorithm is guaranteed to fit in for `n` vertices.
pub fn allowed_dims(algorithm: Algorithm, n: usize) -> GridDims {
    let n = n as i64;
    match algorithm {
        Algorithm::OneQuadrant => GridDims::new(n, n),
        Algorithm::TwoQuadrants => {
            if odd(n as usize) == 1 {
                GridDims::new(n, (n + 1) / 2)
            } else {
                GridDims::new(n + 1, n / 2 + 1)
            }
        }
        Algorithm::FourQuadrants => {
            let side = 3 * (n + 2) / 4;
            GridDims::new(side, side)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsCheck {
    pub ok: bool,
    pub observed: GridDims,
    pub allowed: GridDims,
}

/// Whether the drawing fits the grid size bound of its algorithm.
pub fn check_bounds(d: &Drawing, n: usize) -> BoundsCheck {
    let observed = d.dims();
    let allowed = allowed_dims(d.algorithm, n);
    BoundsCheck {
        ok: observed.fits_in(allowed),
        observed,
        allowed,
    }
}

/// Around every vertex, child edge directions strictly increase (by angle
/// in `[0, 2π)`) in child order. Reports the first offending parent.
pub fn check_embedding(d: &Drawing, rt: &RootedTree) -> Applicability {
    if d.algorithm == Algorithm::FourQuadrants {
        return Applicability::NotApplicable;
    }
    for u in rt.preorder() {
        let dirs: Vec<GridVector> = rt
            .children(u)
            .iter()
            .map(|&c| sub(d.coords[c], d.coords[u]))
            .collect();
        if dirs.iter().any(|v| v.x == 0 && v.y == 0) {
            return Applicability::Fail(u);
        }
        if dirs
            .windows(2)
            .any(|w| angle_cmp(w[0], w[1]) != Ordering::Less)
        {
            return Applicability::Fail(u);
        }
    }
    Applicability::Pass
}

/// Everything the verifier knows about one drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub monotone: MonotoneCheck,
    pub planar: PlanarCheck,
    pub nssd: NssdStatus,
    pub bounds: BoundsCheck,
    pub embedding: Applicability,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.monotone.ok
            && self.planar.ok
            && self.bounds.ok
            && !matches!(self.nssd, NssdStatus::Fail { .. })
            && !self.embedding.is_fail()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "monotone:  {}{}",
            self.monotone.ok,
            match self.monotone.witness {
                Some((u, v)) => format!(" (path {u} -> {v})"),
                None => String::new(),
            }
        )?;
        writeln!(
            f,
            "planar:    {}{}",
            self.planar.ok,
            match self.planar.witness {
                Some(w) => format!(" ({w:?})"),
                None => String::new(),
            }
        )?;
        writeln!(f, "nssd:      {:?}", self.nssd)?;
        writeln!(
            f,
            "bounds:    {} (observed {}, allowed {})",
            self.bounds.ok, self.bounds.observed, self.bounds.allowed
        )?;
        write!(f, "embedding: {:?}", self.embedding)
    }
}

/// Runs every applicable check.
pub fn verify(d: &Drawing) -> VerificationReport {
    let nssd = match &d.angle_assignment {
        Some(a) => check_nssd(d, a),
        None => NssdStatus::NotApplicable,
    };
    let embedding = match &d.rooted {
        Some(rt) => check_embedding(d, rt),
        None => Applicability::NotApplicable,
    };
    VerificationReport {
        monotone: monotone_drawing(d),
        planar: planar(d, &d.tree),
        nssd,
        bounds: check_bounds(d, d.n()),
        embedding,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Precision;
    use crate::generate::{gen_complete_binary, gen_path, gen_star};
    use crate::layout::{
        draw_four_quadrants, draw_one_quadrant, draw_two_quadrants, four_quadrant_parts,
    };

    fn p(x: i64, y: i64) -> Point {
        GridVector::new(x, y)
    }

    fn raw(tree: Tree, coords: Vec<Point>, algorithm: Algorithm) -> Drawing {
        Drawing {
            coords,
            algorithm,
            tree,
            root_used: 0,
            secondary_root: None,
            rooted: None,
            angle_assignment: None,
            spine_children: Vec::new(),
        }
    }

    #[test]
    fn monotone_examples() {
        let d = raw(
            gen_path(3),
            vec![p(0, 0), p(1, 0), p(1, 1)],
            Algorithm::FourQuadrants,
        );
        assert!(monotone_pair(&d, 0, 2));
        assert!(monotone_drawing(&d).ok);

        let d = raw(
            gen_path(3),
            vec![p(0, 0), p(2, 0), p(1, 0)],
            Algorithm::FourQuadrants,
        );
        assert!(!monotone_pair(&d, 0, 2));
        let m = monotone_drawing(&d);
        assert!(!m.ok);
        assert_eq!(m.witness, Some((0, 2)));
    }

    #[test]
    fn half_plane_edge_cases() {
        assert!(fits_open_half_plane(&[p(1, 0)]));
        assert!(fits_open_half_plane(&[p(1, 0), p(2, 0)]));
        assert!(!fits_open_half_plane(&[p(1, 0), p(-1, 0)]));
        assert!(fits_open_half_plane(&[p(1, 0), p(0, 1), p(-1, 1)]));
        assert!(!fits_open_half_plane(&[p(1, 0), p(0, 1), p(-1, 0)]));
        assert!(!fits_open_half_plane(&[p(1, 0), p(-1, 1), p(-1, -1)]));
    }

    #[test]
    fn planar_examples() {
        let t = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let crossing = raw(
            t.clone(),
            vec![p(0, 0), p(2, 2), p(0, 2), p(2, 0)],
            Algorithm::FourQuadrants,
        );
        assert_eq!(
            planar(&crossing, &t).witness,
            Some(PlanarityFailure::Crossing((0, 1), (2, 3)))
        );
        let t3 = gen_path(3);
        let touching = raw(
            t3.clone(),
            vec![p(0, 0), p(1, 1), p(2, 0)],
            Algorithm::FourQuadrants,
        );
        assert!(planar(&touching, &t3).ok);
        let folded = raw(
            t3.clone(),
            vec![p(0, 0), p(2, 0), p(1, 0)],
            Algorithm::FourQuadrants,
        );
        assert!(!planar(&folded, &t3).ok);
        let coincident = raw(
            t3.clone(),
            vec![p(0, 0), p(1, 0), p(0, 0)],
            Algorithm::FourQuadrants,
        );
        assert_eq!(
            planar(&coincident, &t3).witness,
            Some(PlanarityFailure::CoincidentVertices(0, 2))
        );
    }

    #[test]
    fn nssd_pass_and_fail() {
        let d = draw_one_quadrant(&root_at(&gen_complete_binary(4), 0));
        let a = d.angle_assignment.clone().unwrap();
        assert_eq!(check_nssd(&d, &a), NssdStatus::Pass);

        // Vertex 1 has range <0, π/4>; move it (and nothing else) to (1, 3).
        let mut bad = d.clone();
        bad.coords[1] = p(1, 3);
        assert_eq!(
            check_nssd(&bad, &a),
            NssdStatus::Fail {
                property: NssdProperty::P1,
                vertex: 1
            }
        );
    }

    #[test]
    fn nssd_flags_spine_edges() {
        let parts = four_quadrant_parts(&gen_path(15), Precision::Auto).unwrap();
        let d = &parts.t1_drawing;
        let status = check_nssd(d, d.angle_assignment.as_ref().unwrap());
        let first_spine = d.spine_children[0];
        assert_eq!(
            status,
            NssdStatus::Fail {
                property: NssdProperty::P1,
                vertex: first_spine
            }
        );
        assert!(monotone_drawing(d).ok);
        assert!(planar(d, &d.tree).ok);
    }

    #[test]
    fn nssd_not_applicable_for_four_quadrants() {
        let d = draw_four_quadrants(&gen_complete_binary(4));
        let other = draw_two_quadrants(&gen_complete_binary(4));
        assert_eq!(
            check_nssd(&d, other.angle_assignment.as_ref().unwrap()),
            NssdStatus::NotApplicable
        );
        assert_eq!(verify(&d).nssd, NssdStatus::NotApplicable);
        assert_eq!(verify(&d).embedding, Applicability::NotApplicable);
    }

    #[test]
    fn bounds_examples() {
        let d = draw_one_quadrant(&root_at(&gen_path(15), 0));
        let b = check_bounds(&d, 15);
        assert!(b.ok);
        assert_eq!(b.allowed, GridDims::new(15, 15));

        let d = draw_two_quadrants(&gen_path(15));
        assert!(check_bounds(&d, 15).ok);
        assert_eq!(
            allowed_dims(Algorithm::TwoQuadrants, 15),
            GridDims::new(15, 8)
        );
        assert_eq!(
            allowed_dims(Algorithm::TwoQuadrants, 10),
            GridDims::new(11, 6)
        );
        assert_eq!(
            allowed_dims(Algorithm::FourQuadrants, 10),
            GridDims::new(9, 9)
        );
        assert_eq!(
            allowed_dims(Algorithm::FourQuadrants, 31),
            GridDims::new(24, 24)
        );

        let mut over = raw(
            gen_path(10),
            (0..10).map(|i| p(i, 0)).collect(),
            Algorithm::FourQuadrants,
        );
        over.coords[9] = p(20, 0);
        assert!(!check_bounds(&over, 10).ok);
    }

    #[test]
    fn embedding_examples() {
        let rt = root_at(&gen_star(5), 0);
        let d = draw_one_quadrant(&rt);
        assert_eq!(check_embedding(&d, &rt), Applicability::Pass);

        let mut swapped = d.clone();
        swapped.coords.swap(1, 2);
        assert_eq!(check_embedding(&swapped, &rt), Applicability::Fail(0));

        let chain = root_at(&gen_path(6), 0);
        let d = draw_one_quadrant(&chain);
        assert_eq!(check_embedding(&d, &chain), Applicability::Pass);
    }

    #[test]
    fn full_report_on_figures() {
        let t = gen_complete_binary(5);
        for d in [
            draw_one_quadrant(&root_at(&t, 0)),
            draw_two_quadrants(&t),
            draw_four_quadrants(&t),
        ] {
            let r = verify(&d);
            assert!(r.all_ok(), "{}\n{r}", d.algorithm);
        }
    }
}
