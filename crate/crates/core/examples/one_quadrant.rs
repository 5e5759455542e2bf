//! One-quadrant layout of a rooted ordered tree.
//!
//! cargo run --example one_quadrant

use mtd::generate::gen_complete_binary;
use mtd::layout::draw_one_quadrant;
use mtd::{root_at, verify};

fn main() {
    let tree = gen_complete_binary(4);
    let rooted = root_at(&tree, 0);
    let drawing = draw_one_quadrant(&rooted);

    for (v, p) in drawing.coords.iter().enumerate() {
        let range = drawing.angle_assignment.as_ref().unwrap().range(v);
        println!("vertex {v:2} at ({:2}, {:2})  range {range}", p.x, p.y);
    }
    println!("grid {}", drawing.dims());
    assert!(verify(&drawing).all_ok());
}
