//! Two-quadrant layout of a free tree, rooted at its gravity root.
//!
//! cargo run --example two_quadrants

use mtd::generate::{gen_path, gen_star};
use mtd::layout::draw_two_quadrants;
use mtd::tree::gravity_root_trace;
use mtd::verify;

fn main() {
    let path = gen_path(15);
    println!("gravity root search on a 15-path (vertex, largest component):");
    for (v, lcc) in gravity_root_trace(&path) {
        println!("  {v} -> {lcc}");
    }
    let d = draw_two_quadrants(&path);
    println!("path: root {} grid {}", d.root_used, d.dims());

    let star = draw_two_quadrants(&gen_star(5));
    println!(
        "star: {:?}",
        star.coords.iter().map(|p| (p.x, p.y)).collect::<Vec<_>>()
    );
    assert!(verify(&d).all_ok() && verify(&star).all_ok());
}
