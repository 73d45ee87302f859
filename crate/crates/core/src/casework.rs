//! Per-`d` certification of `P_ℓ(K_{2,n}, m) = P(K_{2,n}, m)`: every
//! intersection size `d` is cleared by an exhaustive layer search, the
//! `d = m − 1` inequality, or an AM-GM bound that stays above `P` on every
//! class-count composition.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{
    appendix_bound_with, class_arity, dm1_inequality_check, dm2_lower_bound, BoundMode, CompositionVector,
    Compositions, Precision,
};
use crate::error::{Error, Result};
use crate::exact::{Layer, NoInterrupt, SearchBudget, SerialExecutor};
use crate::model::{binomial, chromatic_poly_k2n, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// `d = m`: every y-list equals the common x-list.
    Uniform,
    /// The `d = m − 1` layer searched exhaustively.
    Dm1Exhaustive { states: u64 },
    /// A lower bound held on all `compositions` class-count vectors.
    Bound { compositions: u64, near_ties: u32 },
    /// The layer searched exhaustively.
    Exhaustive { states: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerCertificate {
    pub d: u32,
    /// `None` when the layer could not be cleared.
    pub method: Option<Method>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseworkReport {
    pub n: u32,
    pub m: u32,
    pub layers: Vec<LayerCertificate>,
}

impl CaseworkReport {
    pub fn certified(&self) -> bool {
        self.layers.iter().all(|l| l.method.is_some())
    }
}

/// Tries the bound for `(m, d)` on every composition of `n`. Returns the
/// number of compositions and near ties on success.
fn bound_holds(n: u32, m: u32, d: u32) -> Result<Option<(u64, u32)>> {
    let arity = match class_arity(m, d) {
        Ok(a) => a,
        Err(Error::UnsupportedCase { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let p = chromatic_poly_k2n(n, m);
    let (mut count, mut ties) = (0u64, 0u32);
    for parts in Compositions::new(n, arity) {
        let a = CompositionVector::new(parts)?;
        let mut b = if d + 2 == m {
            dm2_lower_bound(m, &a)?
        } else {
            appendix_bound_with(BoundMode::Corrected, m, d, &a)?
        };
        count += 1;
        let ok = b.holds_against(&p);
        if b.precision == Precision::NearTie {
            ties += 1;
        }
        if !ok {
            return Ok(None);
        }
    }
    Ok(Some((count, ties)))
}

fn layer_space(n: u32, m: u32, d: u32) -> u128 {
    let t = binomial(u64::from(2 * m - d), u64::from(m)) as u64;
    binomial(u64::from(n) + t - 1, t - 1)
}

/// Certifies each `d ∈ {m, …, 0}` separately. Bounds are tried before
/// search for `d ≤ m − 2`; the `(5, 2)` bound is used in its corrected
/// form. A layer is searched only if its raw space fits in
/// `budget.max_states`.
pub fn certify_equality(n: u32, m: u32, budget: &SearchBudget) -> Result<CaseworkReport> {
    budget.validate()?;
    if m < 3 || n < 3 {
        return Err(crate::error::invalid!("casework covers m >= 3 and n >= 3, got m = {m}, n = {n}"));
    }
    let p = chromatic_poly_k2n(n, m).to_u128();
    let limit = u128::from(budget.max_states);
    let mut layers = Vec::new();
    for d in (0..=m).rev() {
        let mut cert = LayerCertificate { d, method: None, note: None };
        if d == m {
            cert.method = Some(Method::Uniform);
        } else if d + 1 == m {
            match dm1_inequality_check(m, n, budget) {
                Ok(v) if v.relation == Relation::GreaterOrEqualProven => {
                    cert.method = Some(Method::Dm1Exhaustive { states: v.total_states() });
                }
                Ok(_) => cert.note = Some(String::from("an assignment with d = m - 1 falls below P")),
                Err(Error::BudgetExceeded { required, .. }) => {
                    cert.note = Some(format!("d = m - 1 layer has {required} vectors, over budget"));
                }
                Err(e) => return Err(e),
            }
        } else if let Some((compositions, near_ties)) = bound_holds(n, m, d)? {
            cert.method = Some(Method::Bound { compositions, near_ties });
        } else if layer_space(n, m, d) <= limit && p.is_some() {
            let layer = Layer::canonical(m, d, n)?.with_block_symmetry(m, d);
            let out = layer.search(p.unwrap_or(0), &SerialExecutor, &NoInterrupt);
            if out.best.is_none() {
                cert.method = Some(Method::Exhaustive { states: out.states });
            } else {
                cert.note = Some(String::from("exhaustive search found a count below P"));
            }
        } else {
            cert.note = Some(String::from("no bound applies and the layer is over budget"));
        }
        layers.push(cert);
    }
    Ok(CaseworkReport { n, m, layers })
}
