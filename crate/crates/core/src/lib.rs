//! Monotone grid drawings of trees.
//!
//! Three layouts are provided: a one-quadrant drawing of a rooted tree, a
//! two-quadrant drawing of a free tree and a four-quadrant composite that
//! splits the tree at a gravity root. Every drawing can be checked
//! independently with [`verify::verify`].

pub mod angle;
pub mod campaign;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod geom;
pub mod io;
pub mod layout;
pub mod locate;
pub mod svg;
pub mod tree;
pub mod verify;

pub use angle::{AngleAssignment, AngleRange, Precision};
pub use error::{Error, Result};
pub use geom::Point;
pub use layout::{draw, Algorithm, Drawing, GridDims};
pub use locate::{locate_q1, locate_q12, GridVector};
pub use tree::{gravity_root, root_at, RootedTree, Tree};
pub use verify::{verify, VerificationReport};
