use alloc::vec;

use super::amgm::{appendix_expr, dm2_expr, BoundMode};
use super::composition::CompositionVector;
use super::expr::BoundValue;
use crate::error::{Error, Result};
use crate::model::{CanonicalAssignment, ColorSet};

/// Number of type classes behind the bound for `(m, d)`.
pub fn class_arity(m: u32, d: u32) -> Result<usize> {
    match (m, d) {
        (3, 1) => Ok(3),
        _ if m >= 4 && d + 2 == m => Ok(4),
        (3, 0) => Ok(2),
        (4, 1) => Ok(4),
        (4, 0) => Ok(3),
        (5, 2) | (5, 1) => Ok(5),
        (5, 0) => Ok(3),
        _ => Err(Error::UnsupportedCase { m, d }),
    }
}

/// Class of a y-list `k` (in canonical labels) under the partition that
/// the bound for `(m, d)` is stated over.
pub fn classify(m: u32, d: u32, k: &ColorSet) -> Result<usize> {
    let in_d = k.iter().filter(|&c| c <= d).count() as u32;
    let in_b = k.iter().filter(|&c| c > d && c <= m).count() as u32;
    if d + 2 == m {
        // X = {L(x₁), L(x₂)}, Y ⊇ D meeting B once, then by |K ∩ D|.
        return Ok(match in_d {
            x if x == d && in_b != 1 => 0,
            x if x == d => 1,
            x if x + 1 == d => 2,
            _ => 3,
        });
    }
    let class = match (m, d) {
        (3, 0) => match in_b {
            0 | 3 => 0,
            _ => 1,
        },
        (4, 1) => match (in_d, in_b) {
            (1, 0 | 3) => 0,
            (1, _) => 1,
            (0, 1 | 3) => 2,
            _ => 3,
        },
        (4, 0) => match in_b {
            0 | 4 => 0,
            1 | 3 => 1,
            _ => 2,
        },
        (5, 2) => match (in_d, in_b) {
            (2, 0 | 3) => 0,
            (2, _) => 1,
            (1, 1 | 3) => 2,
            (1, _) => 3,
            _ => 4,
        },
        (5, 1) => match (in_d, in_b) {
            (1, 0 | 4) => 0,
            (1, 1 | 3) => 1,
            (1, _) => 2,
            (0, 1 | 4) => 3,
            _ => 4,
        },
        (5, 0) => match in_b {
            0 | 5 => 0,
            1 | 4 => 1,
            _ => 2,
        },
        _ => return Err(Error::UnsupportedCase { m, d }),
    };
    Ok(class)
}

/// Aggregated class counts of a canonical assignment.
pub fn class_counts(a: &CanonicalAssignment) -> Result<CompositionVector> {
    let arity = class_arity(a.m, a.d)?;
    let mut parts = vec![0u32; arity];
    for (set, k) in a.types() {
        parts[classify(a.m, a.d, &set)?] += k;
    }
    CompositionVector::new(parts)
}

/// The bound that applies to `a`: the general `d = m − 2` bound, or the
/// dedicated one for the remaining supported `(m, d)`, evaluated at the
/// class counts of `a`.
pub fn bound_for_assignment(a: &CanonicalAssignment, mode: BoundMode) -> Result<BoundValue> {
    let c = class_counts(a)?;
    let expr = if a.d + 2 == a.m { dm2_expr(a.m, c.parts())? } else { appendix_expr(mode, a.m, a.d, c.parts())? };
    Ok(BoundValue::new(expr))
}
