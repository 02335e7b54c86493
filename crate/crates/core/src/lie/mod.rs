//! The Lie module: bracket expansions, the PBW basis, the Catalan
//! subalgebra with its `c` and `X` bases, and its preLie structures.

mod bracket;
mod catalan;
mod combination;
mod plane_pbt;
mod prelie;

pub use bracket::{
    admissible_labellings, convolution_bracket, dynkin_basis_element, dynkin_operator, is_lie, pbw_basis, Bracket,
    PbwElement,
};
pub use catalan::{
    brace, c_expansion, c_from_x, express_in_c, express_in_pbw, graftings, prelie_c, prelie_c_basis, prelie_x, prelie_x_basis,
    symmetrized_brace, symmetrized_brace_of, x_from_c,
};
pub use combination::{CatalanElement, PreLieElement, TreeCombination, TreeKey, XElement};
pub use plane_pbt::{add_root, h_moebius, h_to_p, p_product, p_product_trees, p_to_h};
pub use prelie::{dendriform_brace, iota, prelie_rooted, rooted_graftings};
