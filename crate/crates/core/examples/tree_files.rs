//! Generating trees and round-tripping the text formats.
//!
//! cargo run --example tree_files

use mtd::generate::{gen_random, prufer_decode};
use mtd::io::{parse_tree_file, write_coords, write_tree_file};
use mtd::{draw, Algorithm, Tree};

fn main() {
    let tree = gen_random(8, 7);
    let text = write_tree_file(&tree, Some(0));
    print!("{text}");
    let parsed = parse_tree_file(&text).unwrap();
    assert_eq!(parsed.tree, tree);

    let edges = prufer_decode(5, &[3, 3, 3]);
    let star = Tree::from_edges(5, &edges).unwrap();
    print!(
        "{}",
        write_coords(&draw(&star, Algorithm::TwoQuadrants, None).coords)
    );
}
