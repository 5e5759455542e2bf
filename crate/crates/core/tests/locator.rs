mod common;

use std::f64::consts::FRAC_PI_2;

use mtd::angle::Angle;
use mtd::locate::{locate_q1, locate_q12, SECTOR_MARGIN};

#[test]
fn exact_sectors_match_scan() {
    // Every sector <a/q π, b/q π> inside the first quadrant for q up to 24.
    for q in 2..=24i64 {
        for a in 0..q / 2 {
            for b in a + 1..=q / 2 {
                let lo = Angle::pi_fraction(a, q);
                let hi = Angle::pi_fraction(b, q);
                let p = locate_q1(&lo, &hi).unwrap();
                let bound = (FRAC_PI_2 / (hi.radians() - lo.radians())).ceil() as i64;
                let feasible =
                    common::feasible_points(lo.radians(), hi.radians(), bound, SECTOR_MARGIN);
                assert!(feasible.contains(&p), "<{lo}, {hi}> -> {p:?}");
            }
        }
    }
}

#[test]
fn upper_half_sectors_match_scan() {
    for q in 2..=16i64 {
        for a in 0..q {
            for b in a + 1..=q {
                let lo = Angle::pi_fraction(a, q);
                let hi = Angle::pi_fraction(b, q);
                let p = locate_q12(&lo, &hi).unwrap();
                let bound = (FRAC_PI_2 / (hi.radians() - lo.radians())).ceil() as i64;
                let feasible =
                    common::feasible_points(lo.radians(), hi.radians(), bound, SECTOR_MARGIN);
                assert!(feasible.contains(&p), "<{lo}, {hi}> -> {p:?}");
            }
        }
    }
}

#[test]
fn rejects_bad_sectors() {
    let q = |a, b| Angle::pi_fraction(a, b);
    assert!(locate_q1(&q(1, 4), &q(1, 4)).is_err());
    assert!(locate_q1(&q(1, 4), &q(3, 4)).is_err());
    assert!(locate_q12(&q(1, 2), &q(3, 2)).is_err());
    assert!(locate_q1(&Angle::from_radians(-0.1), &q(1, 4)).is_err());
}
