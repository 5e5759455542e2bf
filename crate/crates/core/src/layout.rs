//! The three monotone layouts.
//!
//! * One quadrant: the root sits at the origin with range `<0, π/2>`; every
//!   child is placed at its parent plus [`locate_q1`] of the child's range.
//!   Takes a rooted ordered tree and respects its child order.
//! * Two quadrants: rooted at a gravity root with range `<0, π>`, children
//!   placed with [`locate_q12`]. Respects the adjacency order.
//! * Four quadrants: splits the tree at its gravity root `r` into `T1` and
//!   `T2`. `T1` is drawn with the two-quadrant layout from its own gravity
//!   root `r'`, with the path `r' -> r` pushed onto the negative x-axis. `T2`
//!   is drawn with the one-quadrant layout from `r`, mirrored below the
//!   x-axis and attached at `r`. Child order is not preserved.
//!
//! [`locate_q1`]: crate::locate::locate_q1
//! [`locate_q12`]: crate::locate::locate_q12

use std::fmt;
use std::str::FromStr;

use crate::angle::{
    apply_spine_reorder, assign_angles, AngleAssignment, AngleRange, Precision, SpineTree,
};
use crate::geom::{add, Point};
use crate::locate::{locate_q12_unchecked, locate_q1_trusted, GridVector};
use crate::tree::{
    gravity_root, is_gravity_root, partition_at_gravity_root, root_at, RootedTree, Tree,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    OneQuadrant,
    TwoQuadrants,
    FourQuadrants,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [
        Algorithm::OneQuadrant,
        Algorithm::TwoQuadrants,
        Algorithm::FourQuadrants,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::OneQuadrant => "1q",
            Algorithm::TwoQuadrants => "2q",
            Algorithm::FourQuadrants => "4q",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1q" => Ok(Algorithm::OneQuadrant),
            "2q" => Ok(Algorithm::TwoQuadrants),
            "4q" => Ok(Algorithm::FourQuadrants),
            other => Err(format!(
                "unknown algorithm {other:?} (expected 1q, 2q or 4q)"
            )),
        }
    }
}

/// Bounding box size counted in grid points per axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDims {
    pub width_points: i64,
    pub height_points: i64,
}

impl GridDims {
    pub const fn new(width_points: i64, height_points: i64) -> GridDims {
        GridDims {
            width_points,
            height_points,
        }
    }

    pub fn transposed(self) -> GridDims {
        GridDims::new(self.height_points, self.width_points)
    }

    /// Both sides at most those of `other`.
    pub fn fits_in(self, other: GridDims) -> bool {
        self.width_points <= other.width_points && self.height_points <= other.height_points
    }

    pub fn area(self) -> i64 {
        self.width_points * self.height_points
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width_points, self.height_points)
    }
}

/// Grid dimensions of a point set.
///
/// # Panics
///
/// Panics on an empty slice.
pub fn grid_dims(coords: &[Point]) -> GridDims {
    assert!(!coords.is_empty(), "grid_dims of an empty drawing");
    let (mut min_x, mut max_x) = (i64::MAX, i64::MIN);
    let (mut min_y, mut max_y) = (i64::MAX, i64::MIN);
    for p in coords {
        min_x = min_x.min(p.x);
        max_x = max_x.max(p.x);
        min_y = min_y.min(p.y);
        max_y = max_y.max(p.y);
    }
    GridDims::new(max_x - min_x + 1, max_y - min_y + 1)
}

/// A straight-line grid drawing of a tree.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub coords: Vec<Point>,
    pub algorithm: Algorithm,
    pub tree: Tree,
    /// The root the layout was computed from (for four quadrants, the
    /// gravity root `r` of the whole tree).
    pub root_used: usize,
    /// Four quadrants only: the gravity root `r'` of `T1`.
    pub secondary_root: Option<usize>,
    /// The rooted, ordered tree the layout followed (one and two quadrants).
    pub rooted: Option<RootedTree>,
    pub angle_assignment: Option<AngleAssignment>,
    /// Vertices whose entering edge was forced onto the negative x-axis.
    pub spine_children: Vec<usize>,
}

impl Drawing {
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dims(&self) -> GridDims {
        grid_dims(&self.coords)
    }

    pub fn n(&self) -> usize {
        self.tree.len()
    }
}

/// Wraps externally supplied coordinates so they can be verified against the
/// same rooting and angle ranges the algorithm would have used. `root` is
/// required for the one-quadrant layout and ignored otherwise.
pub fn drawing_from_coords(
    tree: &Tree,
    coords: Vec<Point>,
    algorithm: Algorithm,
    root: Option<usize>,
) -> Drawing {
    let (rooted, assignment, root_used) = match algorithm {
        Algorithm::OneQuadrant => {
            let rt = root_at(tree, root.unwrap_or(0));
            let a = assign_angles(
                &rt,
                &root_range(AngleRange::first_quadrant(), Precision::Auto, tree.len()),
            );
            let r = rt.root();
            (Some(rt), Some(a), r)
        }
        Algorithm::TwoQuadrants => {
            let rt = root_at(tree, gravity_root(tree));
            let a = assign_angles(
                &rt,
                &root_range(AngleRange::upper_half(), Precision::Auto, tree.len()),
            );
            let r = rt.root();
            (Some(rt), Some(a), r)
        }
        Algorithm::FourQuadrants => (None, None, gravity_root(tree)),
    };
    Drawing {
        coords,
        algorithm,
        tree: tree.clone(),
        root_used,
        secondary_root: None,
        rooted,
        angle_assignment: assignment,
        spine_children: Vec::new(),
    }
}

fn root_range(base: AngleRange, precision: Precision, n: usize) -> AngleRange {
    match precision.resolve(n) {
        Precision::Float => base.to_float(),
        _ => base,
    }
}

/// Places every vertex at its parent plus `step(child)`; returns coordinates
/// with the root at the origin.
fn place(rt: &RootedTree, mut step: impl FnMut(usize) -> GridVector) -> Vec<Point> {
    let mut coords = vec![GridVector::new(0, 0); rt.len()];
    for u in rt.preorder() {
        for &c in rt.children(u) {
            coords[c] = add(coords[u], step(c));
        }
    }
    coords
}

/// One-quadrant layout of a rooted ordered tree.
pub fn draw_one_quadrant(rt: &RootedTree) -> Drawing {
    draw_one_quadrant_with(rt, Precision::Auto)
}

pub fn draw_one_quadrant_with(rt: &RootedTree, precision: Precision) -> Drawing {
    let range = root_range(AngleRange::first_quadrant(), precision, rt.len());
    let assignment = assign_angles(rt, &range);
    let coords = place(rt, |c| {
        let r = assignment.range(c);
        locate_q1_trusted(r.lo(), r.hi())
    });
    Drawing {
        coords,
        algorithm: Algorithm::OneQuadrant,
        tree: rt.tree().clone(),
        root_used: rt.root(),
        secondary_root: None,
        rooted: Some(rt.clone()),
        angle_assignment: Some(assignment),
        spine_children: Vec::new(),
    }
}

/// Two-quadrant layout of an unrooted ordered tree, rooted at its gravity
/// root.
pub fn draw_two_quadrants(tree: &Tree) -> Drawing {
    draw_two_quadrants_with(tree, Precision::Auto)
}

pub fn draw_two_quadrants_with(tree: &Tree, precision: Precision) -> Drawing {
    let rt = root_at(tree, gravity_root(tree));
    draw_two_quadrants_rooted(&rt, precision)
}

/// Two-quadrant placement from a caller-chosen root.
pub fn draw_two_quadrants_rooted(rt: &RootedTree, precision: Precision) -> Drawing {
    let spine = apply_spine_reorder(rt, rt.root());
    draw_two_quadrants_spine(&spine, precision)
}

/// Two-quadrant placement where spine edges are unit steps `(-1, 0)` and
/// every other edge comes from the locator. The stored assignment is the
/// raw one, so spine edges sit on its upper boundary π.
pub fn draw_two_quadrants_spine(spine: &SpineTree, precision: Precision) -> Drawing {
    let rt = spine.rooted();
    let range = root_range(AngleRange::upper_half(), precision, rt.len());
    let assignment = assign_angles(rt, &range);
    let coords = place(rt, |c| {
        if spine.is_spine_child(c) {
            GridVector::new(-1, 0)
        } else {
            let r = assignment.range(c);
            locate_q12_unchecked(r.lo(), r.hi())
        }
    });
    Drawing {
        coords,
        algorithm: Algorithm::TwoQuadrants,
        tree: rt.tree().clone(),
        root_used: rt.root(),
        secondary_root: None,
        rooted: Some(rt.clone()),
        angle_assignment: Some(assignment),
        spine_children: spine.spine().iter().skip(1).copied().collect(),
    }
}

/// The pieces the four-quadrant layout is assembled from.
#[derive(Debug, Clone)]
pub struct FourQuadrantParts {
    /// Gravity root `r` of the whole tree.
    pub root: usize,
    /// Gravity root `r'` of `T1` (global id).
    pub t1_root: usize,
    /// Global ids of `T1` and `T2`, indexed by local vertex.
    pub t1_vertices: Vec<usize>,
    pub t2_vertices: Vec<usize>,
    /// `T1` with the spine modification, in local ids.
    pub t1_drawing: Drawing,
    /// `T2` in the first quadrant before mirroring, in local ids.
    pub t2_drawing: Drawing,
}

/// Computes the `T1` / `T2` sub-drawings for a tree with `n >= 3`.
pub fn four_quadrant_parts(tree: &Tree, precision: Precision) -> Option<FourQuadrantParts> {
    let partition = partition_at_gravity_root(tree).ok()?;
    let r = partition.shared_root;
    let (t1, map1) = tree
        .induced(&partition.t1_vertices)
        .expect("T1 is a subtree");
    let (t2, map2) = tree
        .induced(&partition.t2_vertices)
        .expect("T2 is a subtree");
    let r_in_t1 = map1.binary_search(&r).expect("r in T1");
    let r_in_t2 = map2.binary_search(&r).expect("r in T2");

    // Prefer r itself when it balances T1; otherwise search from vertex 0.
    let t1_root = if is_gravity_root(&t1, r_in_t1) {
        r_in_t1
    } else {
        gravity_root(&t1)
    };
    let spine = apply_spine_reorder(&root_at(&t1, t1_root), r_in_t1);
    let t1_drawing = draw_two_quadrants_spine(&spine, precision.resolve(tree.len()));
    let t2_drawing = draw_one_quadrant_with(&root_at(&t2, r_in_t2), precision.resolve(tree.len()));
    Some(FourQuadrantParts {
        root: r,
        t1_root: map1[t1_root],
        t1_vertices: map1,
        t2_vertices: map2,
        t1_drawing,
        t2_drawing,
    })
}

/// Four-quadrant layout of an unrooted tree.
pub fn draw_four_quadrants(tree: &Tree) -> Drawing {
    draw_four_quadrants_with(tree, Precision::Auto)
}

pub fn draw_four_quadrants_with(tree: &Tree, precision: Precision) -> Drawing {
    let n = tree.len();
    let Some(parts) = four_quadrant_parts(tree, precision) else {
        // n <= 2: a point, or a single vertical unit edge.
        let mut d = draw_two_quadrants_with(tree, precision);
        d.algorithm = Algorithm::FourQuadrants;
        d.rooted = None;
        d.angle_assignment = None;
        d.secondary_root = Some(d.root_used);
        return d;
    };
    let mut coords = vec![GridVector::new(0, 0); n];
    for (local, &global) in parts.t1_vertices.iter().enumerate() {
        coords[global] = parts.t1_drawing.coords[local];
    }
    let anchor = coords[parts.root];
    for (local, &global) in parts.t2_vertices.iter().enumerate() {
        let p = parts.t2_drawing.coords[local];
        coords[global] = add(anchor, GridVector::new(p.x, -p.y));
    }
    let spine_children = parts
        .t1_drawing
        .spine_children
        .iter()
        .map(|&v| parts.t1_vertices[v])
        .collect();
    Drawing {
        coords,
        algorithm: Algorithm::FourQuadrants,
        tree: tree.clone(),
        root_used: parts.root,
        secondary_root: Some(parts.t1_root),
        rooted: None,
        angle_assignment: None,
        spine_children,
    }
}

/// Dispatches on the algorithm. The one-quadrant layout uses `root`, or the
/// gravity root when none is given.
pub fn draw(tree: &Tree, algorithm: Algorithm, root: Option<usize>) -> Drawing {
    match algorithm {
        Algorithm::OneQuadrant => {
            let r = root.unwrap_or_else(|| gravity_root(tree));
            draw_one_quadrant(&root_at(tree, r))
        }
        Algorithm::TwoQuadrants => draw_two_quadrants(tree),
        Algorithm::FourQuadrants => draw_four_quadrants(tree),
    }
}
