//! Angle ranges and their balanced assignment over a rooted tree.
//!
//! Every range boundary produced by the assignment is a rational multiple of
//! π, so angles carry that multiple exactly (as a big rational) alongside an
//! `f64` radian value. Classification against π/4, π/2 and 3π/4 compares the
//! rationals. A float-only mode drops the rational part for very large trees,
//! where denominators become unwieldy.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::tree::RootedTree;

/// Above this many vertices [`Precision::Auto`] switches to float angles.
pub const EXACT_LIMIT: usize = 10_000;

/// Arithmetic used for angle boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// Exact for trees up to [`EXACT_LIMIT`] vertices, float beyond.
    #[default]
    Auto,
    Exact,
    Float,
}

impl Precision {
    pub fn resolve(self, n: usize) -> Precision {
        match self {
            Precision::Auto if n <= EXACT_LIMIT => Precision::Exact,
            Precision::Auto => Precision::Float,
            p => p,
        }
    }
}

/// An angle in radians, optionally known exactly as `q·π` with rational `q`.
#[derive(Clone, PartialEq)]
pub struct Angle {
    pi_multiple: Option<BigRational>,
    radians: f64,
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.pi_multiple {
            Some(q) if q.is_zero() => f.write_str("0"),
            Some(q) => {
                match q.numer().to_string().as_str() {
                    "1" => f.write_str("π")?,
                    num => write!(f, "{num}π")?,
                }
                match q.denom().to_string().as_str() {
                    "1" => Ok(()),
                    den => write!(f, "/{den}"),
                }
            }
            None => write!(f, "{}rad", self.radians),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Angle {
    /// `num/den · π`, exact.
    pub fn pi_fraction(num: i64, den: i64) -> Angle {
        Angle::from_pi_multiple(ratio(num, den))
    }

    pub fn from_pi_multiple(q: BigRational) -> Angle {
        let radians = q.to_f64().unwrap_or(f64::NAN) * PI;
        Angle {
            pi_multiple: Some(q),
            radians,
        }
    }

    /// A float-only angle.
    pub fn from_radians(radians: f64) -> Angle {
        Angle {
            pi_multiple: None,
            radians,
        }
    }

    pub fn zero() -> Angle {
        Angle::from_pi_multiple(BigRational::zero())
    }

    pub fn pi() -> Angle {
        Angle::from_pi_multiple(BigRational::one())
    }

    pub fn radians(&self) -> f64 {
        self.radians
    }

    pub fn pi_multiple(&self) -> Option<&BigRational> {
        self.pi_multiple.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.pi_multiple.is_some()
    }

    /// Drops the exact part.
    pub fn to_float(&self) -> Angle {
        Angle::from_radians(self.radians)
    }

    /// Compares against `num/den · π`; exact when this angle is.
    pub fn cmp_pi_fraction(&self, num: i64, den: i64) -> Ordering {
        match &self.pi_multiple {
            Some(q) => q.cmp(&ratio(num, den)),
            None => self
                .radians
                .partial_cmp(&(num as f64 / den as f64 * PI))
                .unwrap_or(Ordering::Equal),
        }
    }

    /// `π - self`.
    pub fn supplement(&self) -> Angle {
        match &self.pi_multiple {
            Some(q) => Angle::from_pi_multiple(BigRational::one() - q),
            None => Angle::from_radians(PI - self.radians),
        }
    }

    fn binary(
        &self,
        other: &Angle,
        exact: impl Fn(&BigRational, &BigRational) -> BigRational,
        float: impl Fn(f64, f64) -> f64,
    ) -> Angle {
        match (&self.pi_multiple, &other.pi_multiple) {
            (Some(a), Some(b)) => Angle::from_pi_multiple(exact(a, b)),
            _ => Angle::from_radians(float(self.radians, other.radians)),
        }
    }

    pub fn add(&self, other: &Angle) -> Angle {
        self.binary(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn sub(&self, other: &Angle) -> Angle {
        self.binary(other, |a, b| a - b, |a, b| a - b)
    }

    /// `self · num / den`.
    pub fn scale(&self, num: usize, den: usize) -> Angle {
        match &self.pi_multiple {
            Some(q) => Angle::from_pi_multiple(q * ratio(num as i64, den as i64)),
            None => Angle::from_radians(self.radians * num as f64 / den as f64),
        }
    }

    /// Ordering, exact when both sides are exact.
    pub fn compare(&self, other: &Angle) -> Ordering {
        match (&self.pi_multiple, &other.pi_multiple) {
            (Some(a), Some(b)) => a.cmp(b),
            _ => self
                .radians
                .partial_cmp(&other.radians)
                .unwrap_or(Ordering::Equal),
        }
    }
}

/// A sector `<lo, hi>` with `0 <= lo < hi <= π`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleRange {
    lo: Angle,
    hi: Angle,
}

impl fmt::Display for AngleRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.lo, self.hi)
    }
}

impl AngleRange {
    pub fn new(lo: Angle, hi: Angle) -> Result<AngleRange> {
        if lo.cmp_pi_fraction(0, 1) == Ordering::Less {
            return Err(Error::BadRange(format!("lower bound {lo} is negative")));
        }
        if hi.cmp_pi_fraction(1, 1) == Ordering::Greater {
            return Err(Error::BadRange(format!("upper bound {hi} exceeds π")));
        }
        if lo.compare(&hi) != Ordering::Less {
            return Err(Error::BadRange(format!("empty range <{lo}, {hi}>")));
        }
        Ok(AngleRange { lo, hi })
    }

    /// `<a/b·π, c/d·π>`.
    pub fn pi_fractions(lo: (i64, i64), hi: (i64, i64)) -> Result<AngleRange> {
        AngleRange::new(
            Angle::pi_fraction(lo.0, lo.1),
            Angle::pi_fraction(hi.0, hi.1),
        )
    }

    /// `<0, π/2>`, the root range of the one-quadrant layout.
    pub fn first_quadrant() -> AngleRange {
        AngleRange::pi_fractions((0, 1), (1, 2)).expect("valid")
    }

    /// `<0, π>`, the root range of the two-quadrant layout.
    pub fn upper_half() -> AngleRange {
        AngleRange::pi_fractions((0, 1), (1, 1)).expect("valid")
    }

    pub fn lo(&self) -> &Angle {
        &self.lo
    }

    pub fn hi(&self) -> &Angle {
        &self.hi
    }

    /// Range length `φ = hi - lo`.
    pub fn length(&self) -> Angle {
        self.hi.sub(&self.lo)
    }

    pub fn is_exact(&self) -> bool {
        self.lo.is_exact() && self.hi.is_exact()
    }

    pub fn to_float(&self) -> AngleRange {
        AngleRange {
            lo: self.lo.to_float(),
            hi: self.hi.to_float(),
        }
    }

    /// Non-strict containment: `self.lo <= other.lo < other.hi <= self.hi`.
    pub fn contains_range(&self, other: &AngleRange) -> bool {
        self.lo.compare(&other.lo) != Ordering::Greater
            && other.hi.compare(&self.hi) != Ordering::Greater
    }

    /// Interiors are disjoint (shared boundaries allowed).
    pub fn interior_disjoint(&self, other: &AngleRange) -> bool {
        self.hi.compare(&other.lo) != Ordering::Greater
            || other.hi.compare(&self.lo) != Ordering::Greater
    }
}

/// Splits `parent` among children in proportion to their subtree sizes:
/// child `i` gets length `φ · |T_i| / (|T_u| - 1)`, laid out left to right.
pub fn assign_child_ranges(
    parent: &AngleRange,
    child_sizes: &[usize],
    parent_size: usize,
) -> Result<Vec<AngleRange>> {
    if child_sizes.is_empty() {
        return Ok(Vec::new());
    }
    let sum: usize = child_sizes.iter().sum();
    if child_sizes.contains(&0) || parent_size < 2 || sum != parent_size - 1 {
        return Err(Error::SizeMismatch {
            sum,
            parent: parent_size,
        });
    }
    let phi = parent.length();
    let mut out = Vec::with_capacity(child_sizes.len());
    let mut lo = parent.lo.clone();
    for (i, &size) in child_sizes.iter().enumerate() {
        let hi = if i + 1 == child_sizes.len() && !parent.is_exact() {
            // Float sums drift; pin the last boundary to the parent's.
            parent.hi.clone()
        } else {
            lo.add(&phi.scale(size, parent_size - 1))
        };
        out.push(AngleRange {
            lo: lo.clone(),
            hi: hi.clone(),
        });
        lo = hi;
    }
    Ok(out)
}

/// Per-vertex angle ranges over a rooted tree.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleAssignment {
    ranges: Vec<AngleRange>,
}

impl AngleAssignment {
    pub fn range(&self, v: usize) -> &AngleRange {
        &self.ranges[v]
    }

    pub fn ranges(&self) -> &[AngleRange] {
        &self.ranges
    }

    pub fn len(&self) -> usize {
        self.ranges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.is_empty()
    }
}

/// Gives the root `root_range` and recursively splits every vertex's range
/// among its children with [`assign_child_ranges`].
pub fn assign_angles(rt: &RootedTree, root_range: &AngleRange) -> AngleAssignment {
    let n = rt.len();
    let mut ranges: Vec<Option<AngleRange>> = vec![None; n];
    ranges[rt.root()] = Some(root_range.clone());
    for u in rt.preorder() {
        let kids = rt.children(u);
        if kids.is_empty() {
            continue;
        }
        let sizes: Vec<usize> = kids.iter().map(|&c| rt.subtree_size(c)).collect();
        let parent = ranges[u].clone().expect("preorder visits parents first");
        let split = assign_child_ranges(&parent, &sizes, rt.subtree_size(u))
            .expect("subtree sizes are consistent");
        for (&c, r) in kids.iter().zip(split) {
            ranges[c] = Some(r);
        }
    }
    AngleAssignment {
        ranges: ranges
            .into_iter()
            .map(|r| r.expect("tree is connected"))
            .collect(),
    }
}

/// A rooted tree whose child order has been changed so that the path from
/// the root to `target` always runs through the last child. The edges on that
/// path (the spine) are drawn as unit steps along the negative x-axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpineTree {
    rooted: RootedTree,
    spine: Vec<usize>,
    on_spine: Vec<bool>,
}

impl SpineTree {
    pub fn rooted(&self) -> &RootedTree {
        &self.rooted
    }

    /// Spine vertices from the root to the target.
    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    /// Whether the edge entering `v` is a spine edge.
    pub fn is_spine_child(&self, v: usize) -> bool {
        self.on_spine[v] && v != self.rooted.root()
    }

    pub fn spine_edge_count(&self) -> usize {
        self.spine.len().saturating_sub(1)
    }
}

/// Moves every vertex on the path from the root of `rt` to `target` to the
/// last position among its siblings. Other child orders are untouched.
///
/// # Panics
///
/// Panics if `target` is not a vertex of `rt`.
pub fn apply_spine_reorder(rt: &RootedTree, target: usize) -> SpineTree {
    assert!(target < rt.len(), "target {target} is not a vertex");
    let spine = rt.path_from_root(target);
    let mut children: Vec<Vec<usize>> = (0..rt.len()).map(|v| rt.children(v).to_vec()).collect();
    for w in spine.windows(2) {
        let (parent, child) = (w[0], w[1]);
        let list = &mut children[parent];
        let pos = list
            .iter()
            .position(|&c| c == child)
            .expect("child of parent");
        let moved = list.remove(pos);
        list.push(moved);
    }
    let mut on_spine = vec![false; rt.len()];
    for &v in &spine {
        on_spine[v] = true;
    }
    SpineTree {
        rooted: rt.with_children(children),
        spine,
        on_spine,
    }
}
