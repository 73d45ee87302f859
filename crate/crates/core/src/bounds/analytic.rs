use libm::{exp, log, log1p};

use crate::error::{invalid, Error, Result};

pub const C1: f64 = 1.24;
pub const C2: f64 = 2.05;

const BISECTION_STEPS: u32 = 200;
const EDGE: f64 = 1e-15;
const G_TOLERANCE: f64 = 1e-9;

/// The constants of the upper-bound argument together with `m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticParams {
    pub c1: f64,
    pub c2: f64,
    pub m: u32,
}

impl AnalyticParams {
    pub fn new(m: u32) -> Result<Self> {
        if m < 4 {
            return Err(invalid!("the analytic bounds need m >= 4, got {m}"));
        }
        Ok(AnalyticParams { c1: C1, c2: C2, m })
    }

    fn mf(&self) -> f64 {
        f64::from(self.m)
    }

    /// `x_s = (1 − 1/m) e^{2(−c₁m + c₂)/m²}`.
    pub fn x_s(&self) -> f64 {
        let m = self.mf();
        (1.0 - 1.0 / m) * exp(2.0 * (-self.c1 * m + self.c2) / (m * m))
    }

    /// `x_b = 1 − 1/m`.
    pub fn x_b(&self) -> f64 {
        1.0 - 1.0 / self.mf()
    }

    /// `f(x) = (m + 1/2) ln(m(1 − x))`, the corollary's upper endpoint.
    pub fn f(&self, x: f64) -> f64 {
        let m = self.mf();
        (m + 0.5) * log(m * (1.0 - x))
    }

    /// `g(x) = −(m²/2) ln(mx/(m − 1))`, the corollary's lower endpoint.
    pub fn g(&self, x: f64) -> f64 {
        let m = self.mf();
        -(m * m / 2.0) * log(m * x / (m - 1.0))
    }

    /// `h = f − g` on `(0, 1)`.
    pub fn h(&self, x: f64) -> Result<f64> {
        if !(x > 0.0 && x < 1.0) {
            return Err(invalid!("h is defined on (0, 1), got {x}"));
        }
        Ok(self.f(x) - self.g(x))
    }

    /// `g(x_s) = c₁m − c₂`.
    pub fn g_at_x_s(&self) -> f64 {
        self.c1 * self.mf() - self.c2
    }
}

/// `(f₁(m), f₂(m))` with
/// `f_i(m) = ln(1 − i/m) − (2(m−1)ln(1 − 1/m) + (m−1)² ln(1 − 2/m))/m²`.
pub fn f_functions(m: u32) -> Result<(f64, f64)> {
    if m < 4 {
        return Err(invalid!("f_1, f_2 need m >= 4, got {m}"));
    }
    let m = f64::from(m);
    let tail = (2.0 * (m - 1.0) * log1p(-1.0 / m) + (m - 1.0) * (m - 1.0) * log1p(-2.0 / m)) / (m * m);
    Ok((log1p(-1.0 / m) - tail, log1p(-2.0 / m) - tail))
}

fn check_eps(m: u32, eps: f64) -> Result<()> {
    if m < 4 {
        return Err(invalid!("need m >= 4, got {m}"));
    }
    let top = 1.0 - 1.0 / f64::from(m);
    if !(eps > 0.0 && eps < top) {
        return Err(invalid!("need 0 < eps < 1 - 1/m = {top}, got {eps}"));
    }
    Ok(())
}

/// The single-AM-GM interval for `n`: any integer `n ≥ 3` inside gives
/// `P_ℓ(K_{2,n}, m) = P(K_{2,n}, m)`.
pub fn lemma_interval(m: u32, eps: f64) -> Result<(f64, f64)> {
    check_eps(m, eps)?;
    let (f1, f2) = f_functions(m)?;
    let mf = f64::from(m);
    let lower = (log(eps) + log(mf) - log(mf - 1.0)) / f2;
    let upper = (log1p(-eps) + log(mf)) / f1;
    Ok((lower, upper))
}

/// The simplified interval `−(m²/2) ln(mε/(m−1)) ≤ n ≤ (m + 1/2) ln(m(1−ε))`,
/// nested inside [`lemma_interval`].
pub fn corollary_interval(m: u32, eps: f64) -> Result<(f64, f64)> {
    check_eps(m, eps)?;
    let p = AnalyticParams::new(m)?;
    Ok((p.g(eps), p.f(eps)))
}

/// `p(y) = y − (y−1)e^{2(−c₁y+c₂)/y²} − e^{c₁}e^{−(c₁+2c₂)/(2y+1)}`.
pub fn rolle_p(y: f64) -> f64 {
    y - (y - 1.0) * exp(2.0 * (-C1 * y + C2) / (y * y)) - exp(C1) * exp(-(C1 + 2.0 * C2) / (2.0 * y + 1.0))
}

/// `A₁ … A₇`.
pub fn q_coefficients() -> [f64; 7] {
    let (c1, c2) = (C1, C2);
    let e = exp(c1);
    [
        2.0 * c2 * c2,
        -2.0 * c2 * c2 - 4.0 * c1 * c2,
        4.0 * c1 * c2 + 2.0 * c2 + 2.0 * c1 * c1,
        -2.0 * c2 - 2.0 * c1 * c1 - 2.0 * c1,
        2.0 * c1 + 1.0 - e,
        e * (2.0 * c2 + c1),
        -e * (2.0 * c2 * c2 + 2.0 * c1 * c2 + c1 * c1 / 2.0),
    ]
}

/// The degree-six polynomial `q(y)`, i.e. `y⁴(2y+1)²` times the
/// second-order Taylor lower bound on `p(y)`.
pub fn rolle_q(y: f64) -> f64 {
    let a = q_coefficients();
    let s = (2.0 * y + 1.0) * (2.0 * y + 1.0);
    let y2 = y * y;
    let y4 = y2 * y2;
    a[0] * s + a[1] * y * s + a[2] * y2 * s + a[3] * y2 * y * s + a[4] * y4 * s + a[5] * (2.0 * y + 1.0) * y4 + a[6] * y4
}

/// Solves `g(ε) = n` on `(x_s, x_b)` by bisection and checks `f(ε) > n`.
///
/// Requires `100n ≤ 124m − 205`, i.e. `n ≤ g(x_s)`, checked in integers.
pub fn epsilon_solve(m: u32, n: u32) -> Result<f64> {
    let p = AnalyticParams::new(m)?;
    if n == 0 || 100 * u64::from(n) > 124 * u64::from(m) - 205 {
        return Err(invalid!("need 0 < n <= 1.24 m - 2.05, got m = {m}, n = {n}"));
    }
    let target = f64::from(n);
    let mut lo = p.x_s() * (1.0 + EDGE);
    let mut hi = p.x_b() * (1.0 - EDGE);
    // g is strictly decreasing: g(lo) ≥ n ≥ g(hi) up to the edge nudges.
    let mut eps = 0.5 * (lo + hi);
    let mut converged = false;
    for _ in 0..BISECTION_STEPS {
        eps = 0.5 * (lo + hi);
        let v = p.g(eps);
        if (v - target).abs() <= G_TOLERANCE {
            converged = true;
            break;
        }
        if v > target {
            lo = eps;
        } else {
            hi = eps;
        }
    }
    if !converged {
        // The endpoint itself may already be within tolerance.
        for cand in [lo, hi] {
            if (p.g(cand) - target).abs() <= G_TOLERANCE {
                eps = cand;
                converged = true;
                break;
            }
        }
    }
    if !converged {
        return Err(Error::NonConvergence(alloc::format!("bisection for g(eps) = {n} at m = {m}")));
    }
    if p.f(eps) <= target {
        return Err(Error::Postcondition(alloc::format!("f(eps) = {} is not above n = {n} at m = {m}", p.f(eps))));
    }
    Ok(eps)
}

/// `⌈(n + 2.05)/1.24⌉ = ⌈(100n + 205)/124⌉`, in integers.
pub fn tau_upper_bound(n: u32) -> u32 {
    let num = 100 * u64::from(n) + 205;
    num.div_ceil(124) as u32
}

/// `(|E| − 1)/ln(1 + √2) + 1`.
pub fn wqy_bound(edge_count: u64) -> f64 {
    (edge_count as f64 - 1.0) / log(1.0 + libm::sqrt(2.0)) + 1.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_examples() {
        assert_eq!(tau_upper_bound(2), 4);
        assert_eq!(tau_upper_bound(3), 5);
        assert_eq!(tau_upper_bound(4), 5);
        assert_eq!(tau_upper_bound(5), 6);
        assert_eq!(tau_upper_bound(100), 83);
    }

    #[test]
    fn corollary_example() {
        let (lo, hi) = corollary_interval(5, 0.6293).unwrap();
        assert!((lo - 3.000).abs() < 5e-3, "{lo}");
        assert!((hi - 3.395).abs() < 5e-3, "{hi}");
        let eps = epsilon_solve(5, 3).unwrap();
        assert!((eps - 0.6293).abs() < 1e-4, "{eps}");
    }

    #[test]
    fn h_vanishes_at_x_b() {
        for m in [4, 5, 10, 100] {
            let p = AnalyticParams::new(m).unwrap();
            assert!(p.h(p.x_b()).unwrap().abs() < 1e-12);
            assert!((p.g(p.x_s()) - p.g_at_x_s()).abs() < 1e-9);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(f_functions(3).is_err());
        assert!(lemma_interval(5, 0.0).is_err());
        assert!(lemma_interval(5, 0.8).is_err());
        assert!(epsilon_solve(5, 5).is_err());
        assert!(AnalyticParams::new(5).unwrap().h(1.0).is_err());
    }

    #[test]
    fn wqy_examples() {
        assert_eq!(wqy_bound(1), 1.0);
    }
}
