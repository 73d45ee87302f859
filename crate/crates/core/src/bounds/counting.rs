use core::fmt;

use crate::error::{invalid, Result};

/// How many ordered pairs `(i, j)` of a pair set have `|K − {i,j}|` equal
/// to `m − 2`, `m − 1` and `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QDistribution {
    pub m: u64,
    /// Counts for `q = m − 2, m − 1, m`, in that order.
    pub counts: [u64; 3],
}

impl QDistribution {
    pub fn at(&self, q: u64) -> u64 {
        match self.m.checked_sub(q) {
            Some(2) => self.counts[0],
            Some(1) => self.counts[1],
            Some(0) => self.counts[2],
            _ => 0,
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl fmt::Display for QDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m as i64;
        write!(
            f,
            "{{{}: {}, {}: {}, {}: {}}}",
            m - 2,
            self.counts[0],
            m - 1,
            self.counts[1],
            m,
            self.counts[2]
        )
    }
}

/// Parameters of the pair-counting statements: `a_i = |A_i|` and
/// `k_i = |K ∩ A_i|` for `A_1 = L_1 ∩ L_2`, `A_2 = L_1 − L_2`,
/// `A_3 = L_2 − L_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountingParams {
    pub a: [u64; 3],
    pub k: [u64; 3],
    pub m: u64,
}

/// The `q`-distribution over pair set `B_statement`:
/// 1. diagonal pairs `(i, i)`, `i ∈ A_1`;
/// 2. off-diagonal pairs of `A_1 × A_1`;
/// 3. `A_1 × A_3`;
/// 4. `A_1 × A_2`;
/// 5. `A_2 × A_3`.
///
/// Requires `k_i ≤ a_i`, `a_2 = a_3` and `a_1 + a_2 = m`.
pub fn counting_distribution(statement: u8, p: &CountingParams) -> Result<QDistribution> {
    let [a1, a2, a3] = p.a;
    let [k1, k2, k3] = p.k;
    let m = p.m;
    if k1 > a1 || k2 > a2 || k3 > a3 {
        return Err(invalid!("need k_i <= a_i, got a = {:?}, k = {:?}", p.a, p.k));
    }
    if a2 != a3 || a1 + a2 != m {
        return Err(invalid!("need |L1| = |L2| = m: a1 + a2 = a1 + a3 = {m}, got a = {:?}", p.a));
    }
    if m < 2 && statement != 1 {
        return Err(invalid!("m must be at least 2"));
    }
    let cross = |ap: u64, kp: u64, aq: u64, kq: u64| {
        [kp * kq, kp * aq + kq * ap - 2 * kp * kq, (ap - kp) * (aq - kq)]
    };
    let counts = match statement {
        1 => [0, k1, a1 - k1],
        2 => {
            let off = a1 - k1;
            [k1 * k1.saturating_sub(1), 2 * k1 * off, off * off.saturating_sub(1)]
        }
        3 => cross(a1, k1, a3, k3),
        4 => cross(a1, k1, a2, k2),
        5 => cross(a2, k2, a3, k3),
        s => return Err(invalid!("statement must be 1..=5, got {s}")),
    };
    Ok(QDistribution { m, counts })
}

/// `|B_statement|`.
pub fn pair_set_size(statement: u8, a: [u64; 3]) -> u64 {
    let [a1, a2, a3] = a;
    match statement {
        1 => a1,
        2 => a1 * a1.saturating_sub(1),
        3 => a1 * a3,
        4 => a1 * a2,
        5 => a2 * a3,
        _ => 0,
    }
}
