//! Render all three layouts of a 31-vertex binary tree as SVG files.
//!
//! cargo run --example svg_export -- /tmp

use std::path::PathBuf;

use mtd::generate::gen_complete_binary;
use mtd::svg::render_svg;
use mtd::{draw, Algorithm};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let tree = gen_complete_binary(5);
    for algo in Algorithm::ALL {
        let d = draw(&tree, algo, Some(0));
        let path = dir.join(format!("binary31-{algo}.svg"));
        std::fs::write(&path, render_svg(&d)).unwrap();
        println!("{} ({})", path.display(), d.dims());
    }
}
