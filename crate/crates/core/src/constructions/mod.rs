//! Hajós joins, Dirac sums, splittings, the decompositions they invert, and
//! the named families.

mod decompose;
mod generators;
mod join;
mod split;

pub use decompose::{
    decompose_edge_cut, decompose_vertex_pair, decompose_vertex_pair_at, EdgeCutDecomposition, VertexPairDecomposition,
};
pub use generators::{
    c2_tree, complete_graph, cycle, figure1, figure2_g1, figure2_g2, figure2_split, figure3, figure3_tree, hyperwheel,
    kc, odd_wheel, single_edge, toft_graph, TreeSpec,
};
pub use join::{
    dirac_sum, hajos_decompose_mixed, hajos_join, HajosJoinSpec, JoinStep, Joined, MixedDecomposition, Origin,
};
pub use split::{
    check_general_split_precondition, is_universal_vertex_bounded, split, split_vertex_into_set, validate_split_low,
    validate_split_ordinary, OrdinarySplitReport, Split, SplitAssignment, SplitSpec, UniversalVerdict,
    SPLIT_PRECONDITION_GUARD, UNIVERSAL_GUARD,
};
