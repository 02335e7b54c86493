//! Equivalence classes of binary trees under subtree exchanges, their
//! bicolored encodings and products, intersection tables, and small
//! closed flows on plane trees.

mod bicolored;
mod flows;
mod gluing;
mod intersections;
mod kreweras;
mod moves;

pub use bicolored::{branch_partitions, encode_black_rooted, encode_free, encode_white_rooted, Bicolored, Color, FreeBicolored};
pub use flows::{
    d_poly_flows, d_poly_tamari, enumerate_flows, flow_size, flow_tamari_mismatches, flow_vectors, k0, maximal_flow,
    tamari_upper_set, x_coefficient_mismatches, FlowVector,
};
pub use gluing::{
    check_gluing_rules, connes_kreimer_report, group_by_class, lie_lr, lie_lr_direct, prelie_l, prelie_l_direct,
    subgraph_product, white_rooted_forms, BracketComparison, ClassCombination,
};
pub use intersections::{
    combination_in_ambient, intersection_row, intersection_table, lie_in_class_span, lie_intersection_bound,
    solomon_class_coordinates, span_intersection_dim, Ambient, IntersectionRow, SpanCheck,
};
pub use kreweras::{kreweras_by_search, kreweras_check, kreweras_complement, kreweras_encoding, KrewerasEncoding, SetPartition};
pub use moves::{class_index, class_key, class_table, closure, find_class, l_moves, r_moves, tree_classes, ClassKind, TreeClass};
