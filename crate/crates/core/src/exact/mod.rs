//! Exact evaluation of `P(G, L)`, a brute-force colouring oracle, and the
//! exact minimiser for `P_ℓ(K_{2,n}, m)`.

mod brute;
mod budget;
mod compare;
mod eval;
mod layer;
mod search;

pub use brute::{
    brute_force_count, brute_force_count_ordered, count_colorings, count_list_colorings, VertexOrder,
    DEFAULT_BRUTE_BUDGET,
};
pub use budget::{BranchExecutor, BranchOutcome, Interrupt, NoInterrupt, SearchBudget, SerialExecutor};
pub use compare::{compare_with, compare_with_chromatic};
pub use eval::{evaluate_general_l, evaluate_pair_lists, evaluate_pair_product};
pub use layer::{Layer, MAX_SYMMETRY_GROUP};
pub use search::{min_list_count, min_list_count_two, Search};
