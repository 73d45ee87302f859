use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::CanonicalAssignment;
use crate::count::ExactCount;

/// How `P_ℓ(K_{2,n}, m)` relates to `P(K_{2,n}, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    Less,
    GreaterOrEqualProven,
    Unknown,
}

impl Relation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::Less => "less",
            Relation::GreaterOrEqualProven => "greater-or-equal-proven",
            Relation::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What established a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Evidence {
    /// Every canonical assignment was evaluated.
    ExhaustiveSearch,
    /// An explicit construction beat the chromatic polynomial.
    Construction,
    /// Per-intersection lower bounds, some d settled without enumeration.
    Casework,
    /// The linear upper bound on the threshold covers `m`.
    UpperBoundTheorem,
    /// The search ran out of budget.
    Incomplete,
}

impl Evidence {
    pub fn as_str(&self) -> &'static str {
        match self {
            Evidence::ExhaustiveSearch => "exhaustive-search",
            Evidence::Construction => "construction",
            Evidence::Casework => "casework",
            Evidence::UpperBoundTheorem => "upper-bound-theorem",
            Evidence::Incomplete => "incomplete",
        }
    }
}

/// Outcome of one intersection size `d` during a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerLog {
    pub d: u32,
    /// Number of multiplicity vectors visited (after pruning).
    pub states: u64,
    /// Exact layer minimum when it is at most `P(K_{2,n}, m)`.
    pub min_value: Option<ExactCount>,
    /// `true` if every assignment in the layer exceeds `P(K_{2,n}, m)`.
    pub above_chromatic: bool,
    pub completed: bool,
}

/// Result of comparing `P_ℓ(K_{2,n}, m)` with `P(K_{2,n}, m)`.
///
/// `relation == Less` always comes with a witness whose exact count is
/// below the chromatic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub n: u32,
    pub m: u32,
    pub relation: Relation,
    pub chromatic: ExactCount,
    /// Exact `P_ℓ` when known.
    pub min_value: Option<ExactCount>,
    pub witness: Option<CanonicalAssignment>,
    /// Count of the witness, or best-so-far when the search is incomplete.
    pub witness_value: Option<ExactCount>,
    pub evidence: Evidence,
    pub layers: Vec<LayerLog>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(n: u32, m: u32, relation: Relation, chromatic: ExactCount, evidence: Evidence) -> Self {
        Verdict {
            n,
            m,
            relation,
            chromatic,
            min_value: None,
            witness: None,
            witness_value: None,
            evidence,
            layers: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn total_states(&self) -> u64 {
        self.layers.iter().map(|l| l.states).sum()
    }

    /// Checks the `Less ⟹ witness below P` contract.
    pub fn is_consistent(&self) -> bool {
        match self.relation {
            Relation::Less => matches!(&self.witness_value, Some(v) if *v < self.chromatic) && self.witness.is_some(),
            Relation::Equal => self.min_value.as_ref().map_or(true, |v| *v == self.chromatic),
            _ => true,
        }
    }
}
