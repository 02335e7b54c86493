//! Binary, plane and rooted trees, the Knuth rotation between plane trees
//! and binary trees, and the Tamari order on both.

mod binary;
mod plane;
mod rooted;
mod tamari;

pub use binary::BinaryTree;
pub use plane::{FlatTree, PlaneTree};
pub use rooted::RootedTree;
pub use tamari::{plane_leq, plane_moebius, TamariLattice};
