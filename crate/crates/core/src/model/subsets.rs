use alloc::vec::Vec;

use num_bigint::BigUint;

use super::ColorSet;

/// `C(n, k)` in `u128`; saturates at `u128::MAX` on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        let num = u128::from(n - i);
        let Some(prod) = acc.checked_mul(num) else {
            return u128::MAX;
        };
        acc = prod / u128::from(i + 1);
    }
    acc
}

/// `C(n, k)` exactly.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// All `k`-subsets of `[n]` in lexicographic order of their sorted
/// members, stored as bitmasks (bit `c - 1` for colour `c`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTable {
    n: u32,
    k: u32,
    masks: Vec<u64>,
}

impl SubsetTable {
    /// Panics if `n > 64`; callers validate sizes first.
    pub fn new(n: u32, k: u32) -> Self {
        assert!(n <= 64, "colour universe limited to 64");
        let mut masks = Vec::new();
        if k <= n {
            let mut cur: Vec<u32> = (1..=k).collect();
            loop {
                masks.push(cur.iter().fold(0u64, |m, &c| m | 1 << (c - 1)));
                // Advance to the next combination in lex order.
                let mut i = k as usize;
                loop {
                    if i == 0 {
                        return SubsetTable { n, k, masks };
                    }
                    i -= 1;
                    if cur[i] < n - (k - 1 - i as u32) {
                        break;
                    }
                }
                cur[i] += 1;
                for j in i + 1..k as usize {
                    cur[j] = cur[j - 1] + 1;
                }
            }
        }
        SubsetTable { n, k, masks }
    }

    pub fn universe(&self) -> u32 {
        self.n
    }

    pub fn subset_size(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn mask(&self, rank: usize) -> u64 {
        self.masks[rank]
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn set(&self, rank: usize) -> ColorSet {
        ColorSet::from_mask(self.masks[rank])
    }

    /// Lexicographic rank of a `k`-subset of `[n]`.
    pub fn rank(&self, set: &ColorSet) -> Option<usize> {
        if set.len() != self.k as usize || set.iter().any(|c| c == 0 || c > self.n) {
            return None;
        }
        let n = u64::from(self.n);
        let k = u64::from(self.k);
        let mut r: u128 = 0;
        let mut prev = 0u64;
        for (i, c) in set.iter().enumerate() {
            let c = u64::from(c);
            let i = i as u64 + 1;
            for v in prev + 1..c {
                r += binomial(n - v, k - i);
            }
            prev = c;
        }
        usize::try_from(r).ok()
    }

    pub fn rank_of_mask(&self, mask: u64) -> Option<usize> {
        self.rank(&ColorSet::from_mask(mask))
    }
}
