use alloc::vec::Vec;

use crate::error::{invalid, Result};

/// Nonnegative parts `(a_1, …, a_k)` with a fixed sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionVector {
    parts: Vec<u32>,
}

impl CompositionVector {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid!("a composition needs at least one part"));
        }
        Ok(CompositionVector { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl core::ops::Index<usize> for CompositionVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.parts[i]
    }
}

/// All compositions of `n` into `k` nonnegative parts, first part
/// outermost and ascending, as in nested `for x in range(n+1)` loops.
#[derive(Clone, Debug)]
pub struct Compositions {
    n: u32,
    cur: Vec<u32>,
    done: bool,
}

impl Compositions {
    pub fn new(n: u32, k: usize) -> Self {
        let mut cur = alloc::vec![0u32; k];
        if let Some(last) = cur.last_mut() {
            *last = n;
        }
        Compositions { n, cur, done: k == 0 }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let k = self.cur.len();
        // Increment the rightmost free part that still has room, reset the
        // parts after it and put the remainder in the last slot.
        let mut advanced = false;
        for i in (0..k.saturating_sub(1)).rev() {
            let used: u32 = self.cur[..=i].iter().sum();
            if used < self.n {
                self.cur[i] += 1;
                for v in &mut self.cur[i + 1..] {
                    *v = 0;
                }
                let used = used + 1;
                self.cur[k - 1] = self.n - used;
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}
