//! Core domain types, canonical encodings and closed-form chromatic
//! polynomials.

mod canonical;
mod colors;
mod poly;
mod subsets;
mod verdict;

pub use canonical::{canonicalize, push_into_union, CanonicalAssignment};
pub use colors::{ColorSet, GraphParams, ListAssignment};
pub use poly::{chromatic_poly_k2n, chromatic_poly_reference, GraphFamily};
pub use subsets::{binomial, binomial_big, SubsetTable};
pub use verdict::{Evidence, LayerLog, Relation, Verdict};
