use alloc::vec::Vec;

use super::{binomial, ColorSet, ListAssignment, SubsetTable};
use crate::error::{invalid, Error, Result};

/// A symmetry-reduced `m`-assignment for `K_{2,n}`.
///
/// The x-lists are fixed to `L(x1) = [m]` and `L(x2) = [d] ∪ {m+1..2m−d}`;
/// `z[r]` counts the y-vertices whose list is the `m`-subset of `[2m−d]`
/// of lexicographic rank `r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalAssignment {
    pub m: u32,
    pub n: u32,
    pub d: u32,
    pub z: Vec<u32>,
}

impl CanonicalAssignment {
    /// Largest supported colour universe `2m − d`.
    pub const MAX_UNIVERSE: u32 = 64;

    pub fn new(m: u32, n: u32, d: u32, z: Vec<u32>) -> Result<Self> {
        let a = CanonicalAssignment { m, n, d, z };
        a.validate()?;
        Ok(a)
    }

    /// Every y-vertex gets `[m]`, so the count is `P(K_{2,n}, m)`.
    pub fn uniform(n: u32, m: u32) -> Result<Self> {
        CanonicalAssignment::new(m, n, m, alloc::vec![n])
    }

    /// Builds the multiplicity vector from `(y-list, count)` pairs.
    pub fn from_types(m: u32, d: u32, types: &[(ColorSet, u32)]) -> Result<Self> {
        check_shape(m, d)?;
        let table = SubsetTable::new(2 * m - d, m);
        let mut z = alloc::vec![0u32; table.len()];
        let mut n = 0u32;
        for (set, count) in types {
            let r = table
                .rank(set)
                .ok_or_else(|| invalid!("y-list {set} is not an {m}-subset of [{}]", 2 * m - d))?;
            z[r] += count;
            n += count;
        }
        CanonicalAssignment::new(m, n, d, z)
    }

    pub fn validate(&self) -> Result<()> {
        check_shape(self.m, self.d)?;
        if self.n == 0 {
            return Err(invalid!("n must be at least 1"));
        }
        let expected = binomial(u64::from(self.universe()), u64::from(self.m));
        if self.z.len() as u128 != expected {
            return Err(invalid!(
                "multiplicity vector has {} entries, expected C({}, {}) = {expected}",
                self.z.len(),
                self.universe(),
                self.m
            ));
        }
        let total: u64 = self.z.iter().map(|&v| u64::from(v)).sum();
        if total != u64::from(self.n) {
            return Err(invalid!("multiplicities sum to {total}, expected n = {}", self.n));
        }
        Ok(())
    }

    /// `2m − d`, the size of `L(x1) ∪ L(x2)`.
    pub fn universe(&self) -> u32 {
        2 * self.m - self.d
    }

    pub fn x1(&self) -> ColorSet {
        ColorSet::range(self.m)
    }

    pub fn x2(&self) -> ColorSet {
        ColorSet::new((1..=self.d).chain(self.m + 1..=self.universe()))
    }

    pub fn table(&self) -> SubsetTable {
        SubsetTable::new(self.universe(), self.m)
    }

    /// Nonzero `(y-list, multiplicity)` pairs in rank order.
    pub fn types(&self) -> Vec<(ColorSet, u32)> {
        let table = self.table();
        self.z
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(r, &c)| (table.set(r), c))
            .collect()
    }

    /// The explicit assignment, y-lists in rank order.
    pub fn to_explicit(&self) -> ListAssignment {
        let mut y = Vec::with_capacity(self.n as usize);
        for (set, count) in self.types() {
            for _ in 0..count {
                y.push(set.clone());
            }
        }
        ListAssignment::new(alloc::vec![self.x1(), self.x2()], y)
    }
}

fn check_shape(m: u32, d: u32) -> Result<()> {
    if m == 0 {
        return Err(invalid!("list size m must be at least 1"));
    }
    if d > m {
        return Err(invalid!("intersection size d = {d} exceeds m = {m}"));
    }
    if 2 * m - d > CanonicalAssignment::MAX_UNIVERSE {
        return Err(invalid!("colour universe 2m − d = {} is too large", 2 * m - d));
    }
    Ok(())
}

/// Relabels a union-contained `m`-assignment of `K_{2,n}` into canonical
/// form. Colours are mapped order-preservingly within each block:
/// `D → [d]`, `B → {d+1..m}`, `C → {m+1..2m−d}`.
pub fn canonicalize(la: &ListAssignment) -> Result<CanonicalAssignment> {
    if la.x_lists.len() != 2 {
        return Err(invalid!("canonical form needs exactly two x-vertices, got {}", la.x_lists.len()));
    }
    if la.y_lists.is_empty() {
        return Err(invalid!("need at least one y-vertex"));
    }
    let m = la.x_lists[0].len();
    if m == 0 || la.list_size() != Some(m) {
        return Err(invalid!("all lists must have the same positive size"));
    }
    let (x1, x2) = (&la.x_lists[0], &la.x_lists[1]);
    let q = x1.union(x2);
    for (k, y) in la.y_lists.iter().enumerate() {
        if let Some(c) = y.iter().find(|c| !q.contains(*c)) {
            return Err(Error::NotInUnion { vertex: k + 1, color: c });
        }
    }
    let dset = x1.intersection(x2);
    let bset = x1.difference(x2);
    let cset = x2.difference(x1);
    let m = m as u32;
    let d = dset.len() as u32;
    let map = |c: u32| -> u32 {
        if let Ok(i) = dset.as_slice().binary_search(&c) {
            1 + i as u32
        } else if let Ok(i) = bset.as_slice().binary_search(&c) {
            d + 1 + i as u32
        } else {
            let i = cset.as_slice().binary_search(&c).unwrap_or(0);
            m + 1 + i as u32
        }
    };
    let relabelled = la.relabel(map);
    CanonicalAssignment::from_types(m, d, &relabelled.y_types())
}

/// Moves every y-list inside `Q = ⋃ L(x_i)` by repeated single-colour
/// swaps: the smallest colour outside `Q` is replaced by the smallest
/// colour of `Q − L(y)`. Each swap never increases the number of proper
/// colourings when `m ≥ χ_ℓ`.
pub fn push_into_union(la: &ListAssignment) -> ListAssignment {
    let q = la.x_union();
    let y_lists = la
        .y_lists
        .iter()
        .map(|y| {
            let mut cur = y.clone();
            loop {
                let Some(c) = cur.iter().find(|c| !q.contains(*c)) else {
                    break;
                };
                let Some(fresh) = q.iter().find(|v| !cur.contains(*v)) else {
                    break;
                };
                let next = ColorSet::new(cur.iter().filter(|&v| v != c).chain(core::iter::once(fresh)));
                cur = next;
            }
            cur
        })
        .collect();
    ListAssignment::new(la.x_lists.clone(), y_lists)
}
