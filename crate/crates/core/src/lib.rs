//! Exact arithmetic for the Stern-Brocot, Calkin-Wilf and Farey trees, their
//! realisation as flip sequences of a once-punctured torus triangulation, and
//! the Christoffel and Cohn word trees that ride on the same flips.
//!
//! Every value is an arbitrary-precision integer or reduced fraction; nothing
//! here touches floating point.

pub mod approx;
pub mod classic_trees;
pub mod cluster;
pub mod dump;
pub mod error;
pub mod oracle;
pub mod rational;
pub mod treewalk;
pub mod verify;
pub mod words;

pub use classic_trees::{cw_locate, cw_node, sb_locate, sb_node, ClassicTree, GradientTriple};
pub use cluster::{IntersectionMatrix, IntersectionVector};
pub use error::{Error, Result};
pub use rational::Ratio;
pub use treewalk::{address_to_flipword, flipword_to_address, FlipWord, Step, TreeAddress};
pub use words::BWord;

pub use num_bigint::BigInt;
