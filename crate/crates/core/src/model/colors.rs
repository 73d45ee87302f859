use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};

/// Sizes of the two partite sets of `K_{l,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphParams {
    pub l: u32,
    pub n: u32,
}

impl GraphParams {
    pub fn new(l: u32, n: u32) -> Result<Self> {
        if l == 0 || n == 0 {
            return Err(invalid!("K_{{l,n}} needs l, n >= 1 (got l = {l}, n = {n})"));
        }
        Ok(GraphParams { l, n })
    }

    pub fn edge_count(&self) -> u64 {
        u64::from(self.l) * u64::from(self.n)
    }
}

/// A set of colour labels, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet(Vec<u32>);

impl ColorSet {
    pub fn new<I: IntoIterator<Item = u32>>(colors: I) -> Self {
        let mut v: Vec<u32> = colors.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ColorSet(v)
    }

    /// `{1, ..., k}`.
    pub fn range(k: u32) -> Self {
        ColorSet((1..=k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: u32) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn union(&self, other: &ColorSet) -> ColorSet {
        ColorSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        ColorSet(self.iter().filter(|c| other.contains(*c)).collect())
    }

    pub fn difference(&self, other: &ColorSet) -> ColorSet {
        ColorSet(self.iter().filter(|c| !other.contains(*c)).collect())
    }

    pub fn is_subset(&self, other: &ColorSet) -> bool {
        self.iter().all(|c| other.contains(c))
    }

    /// `|self − removed|` where `removed` is a small slice of colours.
    pub fn count_without(&self, removed: &[u32]) -> usize {
        let mut hits = 0;
        for (i, c) in removed.iter().enumerate() {
            if removed[..i].contains(c) {
                continue;
            }
            if self.contains(*c) {
                hits += 1;
            }
        }
        self.len() - hits
    }

    #[cfg(test)]
    pub(crate) fn to_mask(&self) -> Option<u64> {
        self.iter().try_fold(0u64, |acc, c| {
            if (1..=64).contains(&c) {
                Some(acc | (1u64 << (c - 1)))
            } else {
                None
            }
        })
    }

    pub(crate) fn from_mask(mask: u64) -> ColorSet {
        ColorSet((0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect())
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        ColorSet::new(iter)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// An explicit list assignment for `K_{l,n}`: one list per vertex of the
/// small side `x_1..x_l` and one per vertex of the large side `y_1..y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    pub x_lists: Vec<ColorSet>,
    pub y_lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(x_lists: Vec<ColorSet>, y_lists: Vec<ColorSet>) -> Self {
        ListAssignment { x_lists, y_lists }
    }

    pub fn params(&self) -> Result<GraphParams> {
        GraphParams::new(self.x_lists.len() as u32, self.y_lists.len() as u32)
    }

    /// The common list size, if every list has the same size.
    pub fn list_size(&self) -> Option<usize> {
        let mut sizes = self.x_lists.iter().chain(&self.y_lists).map(ColorSet::len);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn x_union(&self) -> ColorSet {
        ColorSet::new(self.x_lists.iter().flat_map(|l| l.iter()))
    }

    /// Whether every y-list lies inside the union of the x-lists.
    pub fn is_union_contained(&self) -> bool {
        let q = self.x_union();
        self.y_lists.iter().all(|l| l.is_subset(&q))
    }

    /// Distinct y-lists with their multiplicities, in sorted order.
    pub fn y_types(&self) -> Vec<(ColorSet, u32)> {
        let mut sorted = self.y_lists.clone();
        sorted.sort();
        let mut out: Vec<(ColorSet, u32)> = Vec::new();
        for l in sorted {
            match out.last_mut() {
                Some((prev, count)) if *prev == l => *count += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Applies a colour relabelling to every list.
    pub fn relabel<F: Fn(u32) -> u32>(&self, f: F) -> ListAssignment {
        let map = |l: &ColorSet| ColorSet::new(l.iter().map(&f));
        ListAssignment {
            x_lists: self.x_lists.iter().map(map).collect(),
            y_lists: self.y_lists.iter().map(map).collect(),
        }
    }
}
