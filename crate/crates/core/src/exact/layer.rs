use alloc::vec::Vec;

use super::budget::{BranchExecutor, BranchOutcome, Interrupt};
use crate::error::{invalid, Result};
use crate::model::{binomial, ColorSet, SubsetTable};

/// Largest block-stabiliser subgroup used for lex-leader pruning.
pub const MAX_SYMMETRY_GROUP: usize = 2048;

const POLL_MASK: u64 = 0xFFFF;

/// One intersection layer of the search: fixed x-lists, a fixed ordered
/// list of y-list types, and `n` y-vertices to distribute among them.
///
/// All arithmetic is `u128`; construction fails when
/// `|pairs| · (max factor)^n` does not fit.
#[derive(Clone, Debug)]
pub struct Layer {
    x1: ColorSet,
    x2: ColorSet,
    types: Vec<ColorSet>,
    n: u32,
    pairs: usize,
    /// `factor[t * pairs + p] = |types[t] − {i_p, j_p}|`.
    factor: Vec<u8>,
    /// Minimum factor over types `t..`, same layout.
    suffix_min: Vec<u8>,
    /// `pow[v * (n + 1) + e] = v^e`.
    pow: Vec<u128>,
    /// Type-index maps `σ` with `(g·z)_i = z_{σ(i)}`.
    symmetry: Vec<Vec<u32>>,
}

impl Layer {
    /// The canonical layer of intersection size `d`: `L(x1) = [m]`,
    /// `L(x2) = [d] ∪ {m+1..2m−d}`, types are the `m`-subsets of `[2m−d]`
    /// in lexicographic order.
    pub fn canonical(m: u32, d: u32, n: u32) -> Result<Layer> {
        if m == 0 || d > m || 2 * m - d > 64 {
            return Err(invalid!("unsupported layer m = {m}, d = {d}"));
        }
        let x1 = ColorSet::range(m);
        let x2 = ColorSet::new((1..=d).chain(m + 1..=2 * m - d));
        let table = SubsetTable::new(2 * m - d, m);
        let types = (0..table.len()).map(|r| table.set(r)).collect();
        Layer::from_lists(x1, x2, types, n)
    }

    pub fn from_lists(x1: ColorSet, x2: ColorSet, types: Vec<ColorSet>, n: u32) -> Result<Layer> {
        if types.is_empty() {
            return Err(invalid!("a layer needs at least one y-list type"));
        }
        if n == 0 {
            return Err(invalid!("n must be at least 1"));
        }
        let pair_list: Vec<(u32, u32)> = x1.iter().flat_map(|i| x2.iter().map(move |j| (i, j))).collect();
        let pairs = pair_list.len();
        let tcount = types.len();
        let mut factor = Vec::with_capacity(tcount * pairs);
        for set in &types {
            for &(i, j) in &pair_list {
                let f = set.count_without(&[i, j]);
                factor.push(u8::try_from(f).map_err(|_| invalid!("lists too large for the search"))?);
            }
        }
        let mut suffix_min = factor.clone();
        for t in (0..tcount.saturating_sub(1)).rev() {
            for p in 0..pairs {
                suffix_min[t * pairs + p] = suffix_min[t * pairs + p].min(suffix_min[(t + 1) * pairs + p]);
            }
        }
        let max_f = factor.iter().copied().max().unwrap_or(0);
        let fits = u128::from(max_f)
            .checked_pow(n)
            .and_then(|v| v.checked_mul(pairs as u128))
            .is_some();
        if !fits {
            return Err(invalid!("counts for n = {n} exceed the 128-bit search arithmetic"));
        }
        let stride = n as usize + 1;
        let mut pow = alloc::vec![0u128; (max_f as usize + 1) * stride];
        for v in 0..=max_f as usize {
            let mut acc = 1u128;
            for e in 0..stride {
                pow[v * stride + e] = acc;
                acc = acc.saturating_mul(v as u128);
            }
        }
        Ok(Layer { x1, x2, types, n, pairs, factor, suffix_min, pow, symmetry: Vec::new() })
    }

    /// Enables lex-leader pruning over the block stabiliser of a canonical
    /// layer: permutations within `D`, `B`, `C` and the swap `B ↔ C`.
    pub fn with_block_symmetry(mut self, m: u32, d: u32) -> Layer {
        self.symmetry = block_symmetries(m, d, &self.types);
        self
    }

    pub fn symmetry_len(&self) -> usize {
        self.symmetry.len()
    }

    pub fn types(&self) -> &[ColorSet] {
        &self.types
    }

    pub fn x_lists(&self) -> (&ColorSet, &ColorSet) {
        (&self.x1, &self.x2)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of multiplicity vectors, `C(n + T − 1, T − 1)`.
    pub fn space(&self) -> u128 {
        let t = self.types.len() as u64;
        binomial(u64::from(self.n) + t - 1, t - 1)
    }

    fn pw(&self, v: u8, e: u32) -> u128 {
        self.pow[v as usize * (self.n as usize + 1) + e as usize]
    }

    /// Exact count of one multiplicity vector.
    pub fn evaluate(&self, z: &[u32]) -> u128 {
        let mut total = 0u128;
        for p in 0..self.pairs {
            let mut prod = 1u128;
            for (t, &k) in z.iter().enumerate() {
                prod *= self.pw(self.factor[t * self.pairs + p], k);
            }
            total += prod;
        }
        total
    }

    /// Finds the minimum count strictly below `threshold`, returning the
    /// lexicographically smallest minimiser. Branches on the first type's
    /// multiplicity; each branch is searched independently so the result
    /// does not depend on the executor.
    pub fn search(&self, threshold: u128, executor: &dyn BranchExecutor, interrupt: &dyn Interrupt) -> BranchOutcome {
        let tcount = self.types.len();
        if tcount == 1 {
            let z = alloc::vec![self.n];
            let v = self.evaluate(&z);
            return BranchOutcome { best: (v < threshold).then_some((v, z)), states: 1, completed: true };
        }
        let job = |k: usize| self.branch(k as u32, threshold, interrupt);
        let outcomes = executor.run(self.n as usize + 1, &job);
        let mut merged = BranchOutcome { best: None, states: 0, completed: true };
        for o in outcomes {
            merged.states += o.states;
            merged.completed &= o.completed;
            if let Some((v, z)) = o.best {
                if merged.best.as_ref().map_or(true, |(bv, _)| v < *bv) {
                    merged.best = Some((v, z));
                }
            }
        }
        merged
    }

    fn branch(&self, first: u32, threshold: u128, interrupt: &dyn Interrupt) -> BranchOutcome {
        let tcount = self.types.len();
        let mut s = Searcher {
            layer: self,
            prods: alloc::vec![0u128; (tcount + 1) * self.pairs],
            z: alloc::vec![0u32; tcount],
            best_val: threshold,
            best_z: None,
            states: 0,
            aborted: false,
            interrupt,
        };
        for p in 0..self.pairs {
            s.prods[self.pairs + p] = self.pw(self.factor[p], first);
        }
        s.z[0] = first;
        if !s.symmetric_reject(0) {
            s.dfs(1, self.n - first);
        }
        BranchOutcome {
            best: s.best_z.map(|z| (s.best_val, z)),
            states: s.states,
            completed: !s.aborted,
        }
    }
}

struct Searcher<'a> {
    layer: &'a Layer,
    /// `prods[t * pairs + p]`: product over types `< t` for pair `p`.
    prods: Vec<u128>,
    z: Vec<u32>,
    best_val: u128,
    best_z: Option<Vec<u32>>,
    states: u64,
    aborted: bool,
    interrupt: &'a dyn Interrupt,
}

impl Searcher<'_> {
    fn dfs(&mut self, t: usize, rem: u32) {
        if self.aborted {
            return;
        }
        let layer = self.layer;
        let pairs = layer.pairs;
        let last = layer.types.len() - 1;
        let base = t * pairs;
        if t == last || rem == 0 {
            self.states += 1;
            if self.states & POLL_MASK == 0 && self.interrupt.interrupted() {
                self.aborted = true;
                return;
            }
            let mut val = 0u128;
            if rem == 0 {
                for p in 0..pairs {
                    val += self.prods[base + p];
                }
            } else {
                let f = &layer.factor[t * pairs..(t + 1) * pairs];
                for p in 0..pairs {
                    val += self.prods[base + p] * layer.pw(f[p], rem);
                }
            }
            if val < self.best_val {
                let mut z = self.z.clone();
                for v in &mut z[t..] {
                    *v = 0;
                }
                z[t] = rem;
                self.best_val = val;
                self.best_z = Some(z);
            }
            return;
        }
        let smin = &layer.suffix_min[t * pairs..(t + 1) * pairs];
        let mut lb = 0u128;
        for p in 0..pairs {
            lb += self.prods[base + p] * layer.pw(smin[p], rem);
        }
        if lb >= self.best_val {
            return;
        }
        let f = &layer.factor[t * pairs..(t + 1) * pairs];
        for k in 0..=rem {
            self.z[t] = k;
            for p in 0..pairs {
                self.prods[base + pairs + p] = self.prods[base + p] * layer.pw(f[p], k);
            }
            if self.symmetric_reject(t) {
                continue;
            }
            self.dfs(t + 1, rem - k);
            if self.aborted {
                break;
            }
        }
        self.z[t] = 0;
    }

    /// True if some symmetry maps every completion of `z[..=t]` to a
    /// lexicographically smaller vector.
    fn symmetric_reject(&self, t: usize) -> bool {
        let z = &self.z;
        'perm: for sigma in &self.layer.symmetry {
            for i in 0..=t {
                let s = sigma[i] as usize;
                if s > t {
                    continue 'perm;
                }
                match z[s].cmp(&z[i]) {
                    core::cmp::Ordering::Less => return true,
                    core::cmp::Ordering::Greater => continue 'perm,
                    core::cmp::Ordering::Equal => {}
                }
            }
        }
        false
    }
}

/// Type-index maps induced by colour permutations that fix the block
/// structure of a canonical layer, identity excluded, capped at
/// [`MAX_SYMMETRY_GROUP`] elements.
fn block_symmetries(m: u32, d: u32, types: &[ColorSet]) -> Vec<Vec<u32>> {
    let universe = 2 * m - d;
    let table = SubsetTable::new(universe, m);
    if table.len() != types.len() {
        return Vec::new();
    }
    let w = (m - d) as usize;
    let dperms = permutations(d as usize);
    let wperms = permutations(w);
    let mut out = Vec::new();
    for swap in [false, true] {
        for pd in &dperms {
            for pb in &wperms {
                for pc in &wperms {
                    if out.len() >= MAX_SYMMETRY_GROUP {
                        return out;
                    }
                    // colour c ↦ map[c]
                    let mut map = alloc::vec![0u32; universe as usize + 1];
                    for (i, &j) in pd.iter().enumerate() {
                        map[1 + i] = 1 + j as u32;
                    }
                    for k in 0..w {
                        let (b_to, c_to) = if swap {
                            (m + 1 + pb[k] as u32, d + 1 + pc[k] as u32)
                        } else {
                            (d + 1 + pb[k] as u32, m + 1 + pc[k] as u32)
                        };
                        map[d as usize + 1 + k] = b_to;
                        map[m as usize + 1 + k] = c_to;
                    }
                    let pi: Vec<u32> = types
                        .iter()
                        .map(|set| {
                            let image = ColorSet::new(set.iter().map(|c| map[c as usize]));
                            table.rank(&image).unwrap_or(0) as u32
                        })
                        .collect();
                    let mut sigma = alloc::vec![0u32; pi.len()];
                    for (t, &img) in pi.iter().enumerate() {
                        sigma[img as usize] = t as u32;
                    }
                    if sigma.iter().enumerate().any(|(i, &s)| s as usize != i) {
                        out.push(sigma);
                    }
                }
            }
        }
    }
    out
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..k).collect();
    let mut out = alloc::vec![cur.clone()];
    loop {
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap_or(i);
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
