//! Four-quadrant layout: split at the gravity root, draw one part in the
//! upper half-plane and the other mirrored below it.
//!
//! cargo run --example four_quadrants

use mtd::generate::gen_path;
use mtd::layout::{draw_four_quadrants, four_quadrant_parts};
use mtd::{verify, Precision};

fn main() {
    let tree = gen_path(15);
    let parts = four_quadrant_parts(&tree, Precision::Auto).unwrap();
    println!("r = {}, r' = {}", parts.root, parts.t1_root);
    println!("T1 = {:?}", parts.t1_vertices);
    println!("T2 = {:?}", parts.t2_vertices);

    let d = draw_four_quadrants(&tree);
    println!(
        "edges forced onto the negative x-axis enter {:?}",
        d.spine_children
    );
    println!("grid {}", d.dims());
    let report = verify(&d);
    println!("{report}");
    assert!(report.all_ok());
}
