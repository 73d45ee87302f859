use alloc::format;

use super::budget::SearchBudget;
use super::search::Search;
use crate::bounds::{corollary_interval, epsilon_solve, tau_upper_bound};
use crate::constructions::{witness_search, Provenance};
use crate::error::Result;
use crate::model::{chromatic_poly_k2n, Evidence, Relation, Verdict};

/// Relation between `P_ℓ(K_{2,n}, m)` and `P(K_{2,n}, m)`.
///
/// In order: the extension construction (a witness gives `Less`); the
/// linear upper bound on the threshold (`m ≥ ⌈(n + 2.05)/1.24⌉` and
/// `n ≥ 3` gives `GreaterOrEqualProven` once the interval is checked
/// numerically); then the exact search.
pub fn compare_with_chromatic(n: u32, m: u32, budget: &SearchBudget) -> Result<Verdict> {
    compare_with(&Search::new(*budget), n, m)
}

/// [`compare_with_chromatic`] with a configured search.
pub fn compare_with(search: &Search<'_>, n: u32, m: u32) -> Result<Verdict> {
    search.budget.validate()?;
    if m >= 3 && n >= 4 {
        // A zero state allowance leaves only the construction step.
        let quick = SearchBudget { max_states: 0, ..search.budget };
        if let Some(w) = witness_search(n, m, &quick)? {
            if let Provenance::Construction(spec) = w.provenance {
                let mut v = Verdict::new(n, m, Relation::Less, w.chromatic, Evidence::Construction);
                v.notes.push(format!("extension construction m = {}, t = {}, c = {}", spec.m, spec.t, spec.c));
                v.witness = Some(w.assignment);
                v.witness_value = Some(w.value);
                return Ok(v);
            }
        }
    }
    if n >= 3 && m >= 4 && m >= tau_upper_bound(n) {
        let eps = epsilon_solve(m, n)?;
        let (lo, hi) = corollary_interval(m, eps)?;
        let x = f64::from(n);
        if lo <= x + 1e-9 && x <= hi {
            let mut v =
                Verdict::new(n, m, Relation::GreaterOrEqualProven, chromatic_poly_k2n(n, m), Evidence::UpperBoundTheorem);
            v.notes.push(format!("eps = {eps:.12}, n in [{lo:.9}, {hi:.9}]"));
            return Ok(v);
        }
    }
    search.min_list_count(n, m)
}
