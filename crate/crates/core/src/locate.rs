//! Short integer vectors whose direction lies strictly inside a sector.
//!
//! [`locate_q1`] handles sectors inside the first quadrant with a fixed case
//! table: wide sectors get one of `(1,1)`, `(2,1)`, `(1,2)`, narrow ones get
//! `(d, ⌊tan θ1·d + 1⌋)` with `d = ⌈1/(θ2-θ1)⌉` or its mirror image about the
//! diagonal. [`locate_q12`] extends this to the upper half-plane.
//!
//! Case boundaries at multiples of π/4 are decided on the exact rational part
//! of the angles. `arctan(1/2)` is never a rational multiple of π, so those
//! comparisons are safe in floating point. The rounding in `⌊tan θ1·d + 1⌋`
//! is checked after the fact and repaired if it ever lands outside the sector.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::angle::Angle;
use crate::error::{Error, Result};

/// Required clearance (radians) between a located direction and either
/// sector boundary.
pub const SECTOR_MARGIN: f64 = 1e-9;

/// An integer vector, `(x, y) != (0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridVector {
    pub x: i64,
    pub y: i64,
}

impl GridVector {
    pub const fn new(x: i64, y: i64) -> GridVector {
        GridVector { x, y }
    }

    /// Direction angle in `[0, 2π)`.
    pub fn slope(&self) -> f64 {
        let a = (self.y as f64).atan2(self.x as f64);
        if a < 0.0 {
            a + 2.0 * PI
        } else {
            a
        }
    }

    /// `max(|x|, |y|)`.
    pub fn max_norm(&self) -> i64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn mirror_x(self) -> GridVector {
        GridVector::new(-self.x, self.y)
    }
}

fn atan_half() -> f64 {
    0.5f64.atan()
}

/// `⌈1/w⌉`, snapping to an integer `k` when `1/w` is within float noise of
/// it (so that decimal inputs such as `0.6 - 0.5` behave as written).
pub fn ceil_inverse(width: f64) -> i64 {
    let inv = 1.0 / width;
    let k = inv.round();
    if (inv - k).abs() <= 1e-9 * k.max(1.0) {
        k as i64
    } else {
        inv.ceil() as i64
    }
}

/// Whether `v` points strictly inside `(lo, hi)` with [`SECTOR_MARGIN`]
/// clearance on both sides.
pub fn strictly_inside(v: GridVector, lo: f64, hi: f64) -> bool {
    if v.x == 0 && v.y == 0 {
        return false;
    }
    let s = v.slope();
    s > lo + SECTOR_MARGIN && s < hi - SECTOR_MARGIN
}

fn check_order(
    lo: &Angle,
    hi: &Angle,
    max_num: i64,
    max_den: i64,
    what: &'static str,
) -> Result<()> {
    let bad = |reason| Error::BadSector {
        lo: lo.radians(),
        hi: hi.radians(),
        reason,
    };
    if !lo.radians().is_finite() || !hi.radians().is_finite() {
        return Err(bad("angles must be finite"));
    }
    if lo.cmp_pi_fraction(0, 1) == Ordering::Less {
        return Err(bad("lower angle is negative"));
    }
    if lo.compare(hi) != Ordering::Less {
        return Err(bad("lower angle must be below upper angle"));
    }
    if hi.cmp_pi_fraction(max_num, max_den) == Ordering::Greater {
        return Err(bad(what));
    }
    Ok(())
}

/// Repairs a candidate whose rounded coordinate fell outside the sector.
///
/// `free_is_y` names the coordinate that came out of a floor. Tries ±1 on
/// it, then the smallest vector inside the sector within `bound`.
fn guard(p: GridVector, lo: f64, hi: f64, free_is_y: bool, bound: i64) -> GridVector {
    if strictly_inside(p, lo, hi) {
        return p;
    }
    let nudged = if free_is_y {
        [GridVector::new(p.x, p.y + 1), GridVector::new(p.x, p.y - 1)]
    } else {
        [GridVector::new(p.x + 1, p.y), GridVector::new(p.x - 1, p.y)]
    };
    if let Some(q) = nudged.into_iter().find(|&q| strictly_inside(q, lo, hi)) {
        return q;
    }
    for m in 1..=bound.max(1) {
        for a in 0..=m {
            for q in [GridVector::new(m, a), GridVector::new(a, m)] {
                if strictly_inside(q, lo, hi) {
                    return q;
                }
            }
        }
    }
    p
}

fn length_bound(width: f64) -> i64 {
    (FRAC_PI_2 / width).ceil() as i64
}

/// `(d, ⌊tan θ1·d + 1⌋)` with `d = ⌈1/(θ2-θ1)⌉`, for
/// `0 <= θ1 < θ2 <= π/4`.
pub fn small_angle_point(theta1: &Angle, theta2: &Angle) -> Result<GridVector> {
    check_order(theta1, theta2, 1, 4, "upper angle exceeds π/4")?;
    Ok(small_angle_unchecked(theta1, theta2))
}

fn small_angle_unchecked(theta1: &Angle, theta2: &Angle) -> GridVector {
    let (t1, t2) = (theta1.radians(), theta2.radians());
    let width = theta2.sub(theta1).radians();
    let d = ceil_inverse(width);
    let y = (t1.tan() * d as f64 + 1.0).floor() as i64;
    guard(GridVector::new(d, y), t1, t2, true, length_bound(width))
}

/// Mirror of [`small_angle_unchecked`] about the diagonal, for
/// `π/4 <= θ1 < θ2 <= π/2`: `(⌊tan(π/2 - θ2)·d + 1⌋, d)`.
fn steep_angle_unchecked(theta1: &Angle, theta2: &Angle) -> GridVector {
    let (t1, t2) = (theta1.radians(), theta2.radians());
    let width = theta2.sub(theta1).radians();
    let d = ceil_inverse(width);
    let x = ((FRAC_PI_2 - t2).tan() * d as f64 + 1.0).floor() as i64;
    guard(GridVector::new(x, d), t1, t2, false, length_bound(width))
}

/// Grid vector strictly inside `(θ1, θ2)` for `0 <= θ1 < θ2 <= π/2`, with
/// `max(x, y) <= (π/2)/(θ2-θ1)`.
pub fn locate_q1(theta1: &Angle, theta2: &Angle) -> Result<GridVector> {
    check_order(theta1, theta2, 1, 2, "upper angle exceeds π/2")?;
    Ok(locate_q1_unchecked(theta1, theta2))
}

fn locate_q1_unchecked(theta1: &Angle, theta2: &Angle) -> GridVector {
    let width = theta2.sub(theta1);
    if width.cmp_pi_fraction(1, 4) == Ordering::Greater {
        return GridVector::new(1, 1);
    }
    if width.radians() > atan_half() {
        return if theta1.cmp_pi_fraction(1, 4) != Ordering::Less {
            GridVector::new(1, 2)
        } else if theta1.radians() >= atan_half() {
            GridVector::new(1, 1)
        } else {
            GridVector::new(2, 1)
        };
    }
    if theta2.cmp_pi_fraction(1, 4) != Ordering::Greater {
        small_angle_unchecked(theta1, theta2)
    } else if theta1.cmp_pi_fraction(1, 4) == Ordering::Less {
        GridVector::new(1, 1)
    } else {
        steep_angle_unchecked(theta1, theta2)
    }
}

/// Grid vector for a sector of the upper half-plane, `0 <= β1 < β2 <= π`.
///
/// Returns `(0, 1)` when the sector straddles π/2, the one-quadrant answer
/// when `β2 <= π/2`, and the x-mirrored answer for `(π - β2, π - β1)` when
/// `β1 >= π/2`.
pub fn locate_q12(beta1: &Angle, beta2: &Angle) -> Result<GridVector> {
    check_order(beta1, beta2, 1, 1, "upper angle exceeds π")?;
    Ok(locate_q12_unchecked(beta1, beta2))
}

pub(crate) fn locate_q12_unchecked(beta1: &Angle, beta2: &Angle) -> GridVector {
    if beta1.cmp_pi_fraction(1, 2) == Ordering::Less
        && beta2.cmp_pi_fraction(1, 2) == Ordering::Greater
    {
        GridVector::new(0, 1)
    } else if beta2.cmp_pi_fraction(1, 2) != Ordering::Greater {
        locate_q1_unchecked(beta1, beta2)
    } else {
        locate_q1_unchecked(&beta2.supplement(), &beta1.supplement()).mirror_x()
    }
}

pub(crate) fn locate_q1_trusted(theta1: &Angle, theta2: &Angle) -> GridVector {
    locate_q1_unchecked(theta1, theta2)
}
