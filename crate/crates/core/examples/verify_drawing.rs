//! Checking hand-made and damaged drawings.
//!
//! cargo run --example verify_drawing

use mtd::generate::gen_star;
use mtd::layout::{draw_one_quadrant, drawing_from_coords, Algorithm};
use mtd::{root_at, verify, GridVector};

fn main() {
    let tree = gen_star(4);
    let good = draw_one_quadrant(&root_at(&tree, 0));
    println!("as drawn:\n{}\n", verify(&good));

    // Swap two leaves: still monotone and planar, but the child order and
    // the angle ranges are violated.
    let mut coords = good.coords.clone();
    coords.swap(1, 3);
    let swapped = drawing_from_coords(&tree, coords, Algorithm::OneQuadrant, Some(0));
    println!("swapped:\n{}\n", verify(&swapped));

    // Fold a path back on itself.
    let path = mtd::generate::gen_path(3);
    let folded = vec![
        GridVector::new(0, 0),
        GridVector::new(2, 0),
        GridVector::new(1, 0),
    ];
    let folded = drawing_from_coords(&path, folded, Algorithm::FourQuadrants, None);
    println!("folded:\n{}", verify(&folded));
}
