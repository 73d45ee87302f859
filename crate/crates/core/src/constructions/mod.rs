//! The extremal list assignments: the `K_{n, nⁿt}` family and its
//! `K_{2,4t+c}` extensions, their closed-form counts, and a witness finder
//! for `P_ℓ(K_{2,n}, m) < P(K_{2,n}, m)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::count::{big_pow, ExactCount};
use crate::error::{invalid, Result};
use crate::exact::{evaluate_pair_product, Layer, NoInterrupt, Search, SearchBudget, SerialExecutor};
use crate::model::{
    binomial, binomial_big, canonicalize, chromatic_poly_k2n, CanonicalAssignment, ColorSet, ListAssignment,
    Relation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionFamily {
    GeneralKnt,
    BalancedExtension,
}

impl ConstructionFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConstructionFamily::GeneralKnt => "general-knt",
            ConstructionFamily::BalancedExtension => "balanced-extension",
        }
    }
}

/// Parameters of one construction. `n` is the small side for the general
/// family (always 2 for extensions); `c` is only used by extensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConstructionSpec {
    pub family: ConstructionFamily,
    /// Number of x-side vertices (`2` for the extension family).
    pub n: u32,
    pub m: u32,
    pub t: u32,
    pub c: u32,
}

impl ConstructionSpec {
    pub fn general(n: u32, m: u32, t: u32) -> Result<Self> {
        let s = ConstructionSpec { family: ConstructionFamily::GeneralKnt, n, m, t, c: 0 };
        s.validate()?;
        Ok(s)
    }

    pub fn extension(m: u32, t: u32, c: u32) -> Result<Self> {
        let s = ConstructionSpec { family: ConstructionFamily::BalancedExtension, n: 2, m, t, c };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            ConstructionFamily::GeneralKnt => {
                if self.n < 2 || self.m < self.n + 1 || self.t < 1 {
                    return Err(invalid!(
                        "general construction needs n >= 2, m >= n + 1, t >= 1, got n = {}, m = {}, t = {}",
                        self.n,
                        self.m,
                        self.t
                    ));
                }
                // Keep nⁿt y-vertices addressable.
                let count = u64::from(self.n).checked_pow(self.n).and_then(|v| v.checked_mul(u64::from(self.t)));
                if count.map_or(true, |v| v > 1 << 24) {
                    return Err(invalid!("n^n t is too large for an explicit construction"));
                }
            }
            ConstructionFamily::BalancedExtension => {
                if self.m < 3 || self.t < 1 || self.c > 3 {
                    return Err(invalid!(
                        "extension needs m >= 3, t >= 1, c in 0..=3, got m = {}, t = {}, c = {}",
                        self.m,
                        self.t,
                        self.c
                    ));
                }
            }
        }
        Ok(())
    }

    /// Number of y-vertices.
    pub fn y_count(&self) -> u64 {
        match self.family {
            ConstructionFamily::GeneralKnt => u64::from(self.n).pow(self.n) * u64::from(self.t),
            ConstructionFamily::BalancedExtension => 4 * u64::from(self.t) + u64::from(self.c),
        }
    }
}

/// The transversals of `S_1 × … × S_n`, lexicographic in `(s_1, …, s_n)`,
/// with `S_k = {m + n(k−2) + ℓ : ℓ ∈ [n]}`.
fn transversals(n: u32, m: u32) -> Vec<Vec<u32>> {
    let total = (n as usize).pow(n);
    let mut out = Vec::with_capacity(total);
    for idx in 0..total {
        let mut digits = alloc::vec![0u32; n as usize];
        let mut r = idx;
        for k in (0..n as usize).rev() {
            digits[k] = (r % n as usize) as u32;
            r /= n as usize;
        }
        out.push(digits.iter().enumerate().map(|(k, &l)| m + n * k as u32 - n + l + 1).collect());
    }
    out
}

/// `L(x_k) = [m − n] ∪ S_k` and `L(y_k) = [m − n] ∪ A_{⌊(k−1)/t⌋}` for
/// `G = K_{n, nⁿt}`.
pub fn build_general(n: u32, m: u32, t: u32) -> Result<ListAssignment> {
    ConstructionSpec::general(n, m, t)?;
    let base = 1..=m - n;
    let x_lists = (1..=n)
        .map(|k| ColorSet::new(base.clone().chain((1..=n).map(move |l| m + n * (k - 1) + l - n))))
        .collect();
    let mut y_lists = Vec::new();
    for a in transversals(n, m) {
        let list = ColorSet::new(base.clone().chain(a.iter().copied()));
        for _ in 0..t {
            y_lists.push(list.clone());
        }
    }
    Ok(ListAssignment::new(x_lists, y_lists))
}

/// Closed form of `P(K_{n,nⁿt}, L)` for [`build_general`]:
///
/// `nⁿ ∏_{i=0}^{n} (m−i)^{t C(n,i)(n−1)^{n−i}}
///  + Σ_{N=1}^{n} Σ_{S=0}^{n−N} nˢ C(n,S) C(m−n,N) σ(N, n−S)
///    ∏_{i=0}^{S} (m−N−i)^{t C(S,i)(n−1)^{S−i} n^{n−S}}`
///
/// where `σ(N, r) = Σ_{i<N} (−1)^i C(N,i)(N−i)^r`.
pub fn general_formula(n: u32, m: u32, t: u32) -> Result<ExactCount> {
    ConstructionSpec::general(n, m, t)?;
    let (n64, m64, t64) = (u64::from(n), u64::from(m), u64::from(t));
    let pow_u = |b: u64, e: u64| big_pow(&BigUint::from(b), e);
    let exp = |c: BigUint| -> Result<u64> {
        u64::try_from(c).map_err(|_| invalid!("exponent does not fit in 64 bits"))
    };
    let mut first = pow_u(n64, n64);
    for i in 0..=n64 {
        let e = BigUint::from(t64) * binomial_big(n64, i) * pow_u(n64 - 1, n64 - i);
        first *= pow_u(m64 - i, exp(e)?);
    }
    let mut total = BigInt::from_biguint(Sign::Plus, first);
    for big_n in 1..=n64 {
        let choose = binomial_big(m64 - n64, big_n);
        if choose.is_zero() {
            continue;
        }
        for s in 0..=(n64 - big_n) {
            let mut sigma = BigInt::zero();
            for i in 0..big_n {
                let term = BigInt::from_biguint(Sign::Plus, binomial_big(big_n, i) * pow_u(big_n - i, n64 - s));
                if i % 2 == 0 {
                    sigma += term;
                } else {
                    sigma -= term;
                }
            }
            let mut prod = BigUint::one();
            for i in 0..=s {
                let e = BigUint::from(t64) * binomial_big(s, i) * pow_u(n64 - 1, s - i) * pow_u(n64, n64 - s);
                prod *= pow_u(m64 - big_n - i, exp(e)?);
            }
            let coeff = pow_u(n64, s) * binomial_big(n64, s) * &choose * prod;
            total += sigma * BigInt::from_biguint(Sign::Plus, coeff);
        }
    }
    let (sign, mag) = total.into_parts();
    if sign == Sign::Minus {
        return Err(invalid!("general formula came out negative"));
    }
    Ok(ExactCount::from(mag))
}

/// The `n = 2` construction on `K_{2,4t}` extended by the first `c` of
/// `[m−2] ∪ {m−1, m+1}`, `[m−2] ∪ {m, m+2}`, `[m−2] ∪ {m−1, m+2}`.
pub fn build_extension(m: u32, t: u32, c: u32) -> Result<ListAssignment> {
    ConstructionSpec::extension(m, t, c)?;
    let mut la = build_general(2, m, t)?;
    let extra = [[m - 1, m + 1], [m, m + 2], [m - 1, m + 2]];
    for pair in extra.iter().take(c as usize) {
        la.y_lists.push(ColorSet::new((1..=m - 2).chain(pair.iter().copied())));
    }
    Ok(la)
}

/// Closed forms for the extension counts, `c = 0, 1, 2, 3`.
pub fn extension_formula(m: u32, t: u32, c: u32) -> Result<ExactCount> {
    ConstructionSpec::extension(m, t, c)?;
    let (m, t) = (u64::from(m), u64::from(t));
    let p = |b: u64, e: u64| big_pow(&BigUint::from(b), e);
    let k = |v: u64| BigUint::from(v);
    let v = match c {
        0 => {
            k(m - 2) * p(m - 1, 4 * t)
                + k(m - 3) * p(m - 2, 4 * t + 1)
                + k(4) * p(m - 2, 2 * t + 1) * p(m - 1, 2 * t)
                + k(4) * p(m - 2, t) * p(m - 1, 2 * t) * p(m, t)
        }
        1 => {
            k(m - 2) * p(m - 1, 4 * t + 1)
                + k(m - 3) * p(m - 2, 4 * t + 2)
                + k(2 * (2 * m - 3)) * p(m - 2, 2 * t + 1) * p(m - 1, 2 * t)
                + k(4) * p(m - 2, t) * p(m - 1, 2 * t + 1) * p(m, t)
        }
        2 => {
            k(m - 2) * p(m - 1, 4 * t + 2)
                + k(m - 3) * p(m - 2, 4 * t + 3)
                + k(4) * p(m - 2, 2 * t + 2) * p(m - 1, 2 * t + 1)
                + k(2 * (2 * m * m - 4 * m + 1)) * p(m - 2, t) * p(m - 1, 2 * t) * p(m, t)
        }
        _ => {
            k(m - 2) * p(m - 1, 4 * t + 3)
                + k(m - 3) * p(m - 2, 4 * t + 4)
                + k(2 * (2 * m - 3)) * p(m - 2, 2 * t + 2) * p(m - 1, 2 * t + 1)
                + k(2 * (2 * m * m - 4 * m + 1)) * p(m - 2, t) * p(m - 1, 2 * t + 1) * p(m, t)
        }
    };
    Ok(ExactCount::from(v))
}

/// Where a witness came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Construction(ConstructionSpec),
    /// Found by exhaustive search of one intersection size.
    Search { d: u32 },
}

/// A canonical assignment whose exact count is below `P(K_{2,n}, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assignment: CanonicalAssignment,
    pub value: ExactCount,
    pub chromatic: ExactCount,
    pub provenance: Provenance,
}

/// The extension candidate for `K_{2,n}`: `n = 4t + c` with `t ≥ 1`.
pub fn extension_candidate(n: u32, m: u32) -> Option<ConstructionSpec> {
    if n < 4 {
        return None;
    }
    ConstructionSpec::extension(m, n / 4, n % 4).ok()
}

/// Canonical form and exact count of an extension construction.
pub fn evaluate_extension(spec: &ConstructionSpec) -> Result<(CanonicalAssignment, ExactCount)> {
    let a = canonicalize(&build_extension(spec.m, spec.t, spec.c)?)?;
    let v = evaluate_pair_product(&a);
    Ok((a, v))
}

/// Looks for an assignment with count below `P(K_{2,n}, m)`: first the
/// extension construction for `n = 4t + c`, then an exhaustive search of
/// each intersection size, smallest layer first, while the layers fit in
/// `budget.max_states`. `None` means nothing was found within budget.
pub fn witness_search(n: u32, m: u32, budget: &SearchBudget) -> Result<Option<Witness>> {
    if n < 2 || m < 2 {
        return Err(invalid!("witness search needs n >= 2 and m >= 2, got n = {n}, m = {m}"));
    }
    let chromatic = chromatic_poly_k2n(n, m);
    if m >= 3 {
        if let Some(spec) = extension_candidate(n, m) {
            let (a, v) = evaluate_extension(&spec)?;
            if v < chromatic {
                return Ok(Some(Witness { assignment: a, value: v, chromatic, provenance: Provenance::Construction(spec) }));
            }
        }
    }
    if m == 2 {
        let verdict = Search::new(*budget).min_list_count_two(n)?;
        if verdict.relation == Relation::Less {
            if let (Some(a), Some(v)) = (verdict.witness, verdict.witness_value) {
                let d = a.d;
                return Ok(Some(Witness { assignment: a, value: v, chromatic, provenance: Provenance::Search { d } }));
            }
        }
        return Ok(None);
    }
    let Some(p) = chromatic.to_u128() else { return Ok(None) };
    let mut used: u128 = 0;
    for d in (0..=m).rev() {
        let tcount = binomial(u64::from(2 * m - d), u64::from(m)) as u64;
        let space = binomial(u64::from(n) + tcount - 1, tcount - 1);
        used = used.saturating_add(space);
        if used > u128::from(budget.max_states) {
            break;
        }
        let Ok(layer) = Layer::canonical(m, d, n) else { break };
        let out = layer.with_block_symmetry(m, d).search(p, &SerialExecutor, &NoInterrupt);
        if let Some((value, z)) = out.best {
            let a = CanonicalAssignment::new(m, n, d, z)?;
            let v = evaluate_pair_product(&a);
            if v != ExactCount::from(value) || v >= chromatic {
                return Err(crate::Error::Postcondition(format!("search witness at d = {d} does not re-evaluate")));
            }
            return Ok(Some(Witness { assignment: a, value: v, chromatic, provenance: Provenance::Search { d } }));
        }
    }
    Ok(None)
}
