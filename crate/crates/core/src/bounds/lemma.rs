use alloc::format;

use crate::count::ExactCount;
use crate::error::{invalid, Error, Result};
use crate::exact::{Layer, NoInterrupt, SearchBudget, SerialExecutor};
use crate::model::{chromatic_poly_k2n, CanonicalAssignment, Evidence, LayerLog, Relation, Verdict};

/// Exhaustively checks `P(G, L) ≥ P(K_{2,n}, m)` over every canonical
/// assignment with `d = m − 1`.
///
/// Returns `GreaterOrEqualProven` when the whole layer clears the
/// chromatic polynomial and `Less` with a witness otherwise.
pub fn dm1_inequality_check(m: u32, n: u32, budget: &SearchBudget) -> Result<Verdict> {
    budget.validate()?;
    if m < 3 || n < 3 {
        return Err(invalid!("the d = m - 1 check needs m >= 3 and n >= 3, got m = {m}, n = {n}"));
    }
    let d = m - 1;
    let layer = Layer::canonical(m, d, n)?.with_block_symmetry(m, d);
    let space = layer.space();
    if space > u128::from(budget.max_states) {
        return Err(Error::BudgetExceeded { required: space, limit: u128::from(budget.max_states) });
    }
    let chromatic = chromatic_poly_k2n(n, m);
    let p = chromatic.to_u128().ok_or_else(|| invalid!("P(K_2,{n}, {m}) does not fit in 128 bits"))?;
    let out = layer.search(p, &SerialExecutor, &NoInterrupt);
    let mut log = LayerLog { d, states: out.states, min_value: None, above_chromatic: out.best.is_none(), completed: true };
    let verdict = match out.best {
        None => {
            let mut v = Verdict::new(n, m, Relation::GreaterOrEqualProven, chromatic, Evidence::ExhaustiveSearch);
            v.notes.push(format!("all {space} multiplicity vectors with d = {d} reach P"));
            v
        }
        Some((value, z)) => {
            log.min_value = Some(ExactCount::from(value));
            let mut v = Verdict::new(n, m, Relation::Less, chromatic, Evidence::ExhaustiveSearch);
            v.witness = Some(CanonicalAssignment::new(m, n, d, z)?);
            v.witness_value = Some(ExactCount::from(value));
            v
        }
    };
    let mut verdict = verdict;
    verdict.layers.push(log);
    Ok(verdict)
}

/// `⌊n/4⌋ ≥ (m − 1)² ln(16/7)`, the known sufficient condition for
/// `P_ℓ(K_{2,n}, m) < P(K_{2,n}, m)`.
pub fn threshold_condition(n: u32, m: u32) -> bool {
    let lhs = f64::from(n / 4);
    let k = f64::from(m.saturating_sub(1));
    lhs >= k * k * libm::log(16.0 / 7.0)
}
