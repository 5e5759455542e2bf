//! Grid points strictly inside angular sectors.
//!
//! cargo run --example locate_points

use mtd::angle::Angle;
use mtd::{locate_q1, locate_q12};

fn main() {
    let sectors = [
        (0, 1, 1, 16),
        (1, 8, 1, 4),
        (0, 1, 1, 2),
        (1, 4, 1, 2),
        (3, 8, 7, 16),
    ];
    for (a, b, c, d) in sectors {
        let lo = Angle::pi_fraction(a, b);
        let hi = Angle::pi_fraction(c, d);
        let p = locate_q1(&lo, &hi).unwrap();
        println!("<{lo}, {hi}> -> ({}, {})", p.x, p.y);
    }
    let p = locate_q12(&Angle::pi_fraction(1, 2), &Angle::pi()).unwrap();
    println!("<π/2, π> -> ({}, {})", p.x, p.y);
    let p = locate_q1(&Angle::from_radians(0.2), &Angle::from_radians(0.45)).unwrap();
    println!("<0.2, 0.45> -> ({}, {})", p.x, p.y);
}
