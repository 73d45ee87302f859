use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::count::ExactCount;
use crate::error::{invalid, Error, Result};
use crate::model::{ColorSet, ListAssignment};

/// Default cap on `∏_v |L(v)|` for the brute-force oracle.
pub const DEFAULT_BRUTE_BUDGET: u128 = 100_000_000;

/// Order in which vertices of `K_{l,n}` are coloured by the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOrder {
    /// `x_1..x_l` then `y_1..y_n`.
    XFirst,
    /// `y_n..y_1` then `x_l..x_1`.
    YFirstReversed,
}

/// Counts proper `L`-colourings of `K_{l,n}` by enumerating colourings
/// vertex by vertex.
pub fn brute_force_count(la: &ListAssignment, budget: u128) -> Result<ExactCount> {
    brute_force_count_ordered(la, budget, VertexOrder::XFirst)
}

pub fn brute_force_count_ordered(la: &ListAssignment, budget: u128, order: VertexOrder) -> Result<ExactCount> {
    let l = la.x_lists.len();
    let n = la.y_lists.len();
    if l == 0 || n == 0 {
        return Err(invalid!("K_{{l,n}} needs l, n >= 1"));
    }
    let mut lists: Vec<&ColorSet> = la.x_lists.iter().chain(&la.y_lists).collect();
    let mut edges = Vec::with_capacity(l * n);
    for i in 0..l {
        for j in 0..n {
            edges.push((i, l + j));
        }
    }
    if order == VertexOrder::YFirstReversed {
        let total = l + n;
        lists.reverse();
        for e in &mut edges {
            *e = (total - 1 - e.0, total - 1 - e.1);
        }
    }
    let lists: Vec<ColorSet> = lists.into_iter().cloned().collect();
    count_list_colorings(&lists, &edges, budget)
}

/// Counts proper colourings of an arbitrary small graph where vertex `v`
/// takes a colour from `lists[v]`.
pub fn count_list_colorings(lists: &[ColorSet], edges: &[(usize, usize)], budget: u128) -> Result<ExactCount> {
    let nv = lists.len();
    let space = lists
        .iter()
        .try_fold(1u128, |acc, l| acc.checked_mul(l.len() as u128))
        .unwrap_or(u128::MAX);
    if space > budget {
        return Err(Error::BudgetExceeded { required: space, limit: budget });
    }
    if edges.iter().any(|&(a, b)| a >= nv || b >= nv || a == b) {
        return Err(invalid!("edge list references a missing vertex or a loop"));
    }
    // Neighbours with smaller index, checked when a vertex is coloured.
    let mut earlier: Vec<Vec<usize>> = alloc::vec![Vec::new(); nv];
    for &(a, b) in edges {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        earlier[hi].push(lo);
    }
    let mut colour = alloc::vec![0u32; nv];
    let mut count: u128 = 0;
    fn go(v: usize, lists: &[ColorSet], earlier: &[Vec<usize>], colour: &mut [u32], count: &mut u128) {
        if v == lists.len() {
            *count += 1;
            return;
        }
        for c in lists[v].iter() {
            if earlier[v].iter().all(|&u| colour[u] != c) {
                colour[v] = c;
                go(v + 1, lists, earlier, colour, count);
            }
        }
    }
    go(0, lists, &earlier, &mut colour, &mut count);
    Ok(ExactCount::from(BigUint::from(count)))
}

/// Proper `m`-colourings of a graph on `nv` vertices.
pub fn count_colorings(nv: usize, edges: &[(usize, usize)], m: u32, budget: u128) -> Result<ExactCount> {
    let lists = alloc::vec![ColorSet::range(m); nv];
    count_list_colorings(&lists, edges, budget)
}
