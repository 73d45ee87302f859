use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::count::{big_pow, ExactCount};
use crate::error::{invalid, Error, Result};
use crate::model::{CanonicalAssignment, ColorSet};

/// `P(K_{2,n}, L)` for a canonical assignment:
/// `Σ_{(i,j) ∈ L(x1)×L(x2)} ∏_A |A − {i,j}|^{z_A}`.
pub fn evaluate_pair_product(a: &CanonicalAssignment) -> ExactCount {
    let types = a.types();
    evaluate_pair_lists(&a.x1(), &a.x2(), &types)
}

/// Same decomposition for arbitrary x-lists and y-list multiplicities.
pub fn evaluate_pair_lists(x1: &ColorSet, x2: &ColorSet, types: &[(ColorSet, u32)]) -> ExactCount {
    if let Some(v) = pair_sum_u128(x1, x2, types) {
        return ExactCount::from(v);
    }
    let mut total = BigUint::from(0u32);
    for i in x1.iter() {
        for j in x2.iter() {
            let mut prod = BigUint::from(1u32);
            for (set, z) in types {
                prod *= big_pow(&BigUint::from(set.count_without(&[i, j]) as u64), u64::from(*z));
            }
            total += prod;
        }
    }
    ExactCount::from(total)
}

fn pair_sum_u128(x1: &ColorSet, x2: &ColorSet, types: &[(ColorSet, u32)]) -> Option<u128> {
    let mut total: u128 = 0;
    for i in x1.iter() {
        for j in x2.iter() {
            let mut prod: u128 = 1;
            for (set, z) in types {
                let base = set.count_without(&[i, j]) as u128;
                prod = prod.checked_mul(checked_pow(base, *z)?)?;
            }
            total = total.checked_add(prod)?;
        }
    }
    Some(total)
}

pub(crate) fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// `Σ_{(c_1..c_l) ∈ L(x_1)×…×L(x_l)} ∏_A |A − {c_1..c_l}|^{z_A}` for
/// `K_{l,n}`. Fails when the tuple space exceeds `max_tuples`.
pub fn evaluate_general_l(
    x_lists: &[ColorSet],
    y_types: &[(ColorSet, u32)],
    max_tuples: u128,
) -> Result<ExactCount> {
    if x_lists.is_empty() {
        return Err(invalid!("need at least one x-vertex"));
    }
    let space = x_lists
        .iter()
        .try_fold(1u128, |acc, l| acc.checked_mul(l.len() as u128))
        .unwrap_or(u128::MAX);
    if space > max_tuples {
        return Err(Error::BudgetExceeded { required: space, limit: max_tuples });
    }
    if space == 0 {
        return Ok(ExactCount::zero());
    }
    let lists: Vec<&[u32]> = x_lists.iter().map(ColorSet::as_slice).collect();
    let mut idx = alloc::vec![0usize; lists.len()];
    let mut tuple: Vec<u32> = lists.iter().map(|l| l[0]).collect();
    let mut total = BigUint::from(0u32);
    loop {
        let mut prod = BigUint::from(1u32);
        for (set, z) in y_types {
            prod *= big_pow(&BigUint::from(set.count_without(&tuple) as u64), u64::from(*z));
        }
        total += prod;
        // Odometer step, last x-vertex fastest.
        let mut k = lists.len();
        loop {
            if k == 0 {
                return Ok(ExactCount::from(total));
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                tuple[k] = lists[k][idx[k]];
                break;
            }
            idx[k] = 0;
            tuple[k] = lists[k][0];
        }
    }
}
