use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::amgm::{appendix_expr, dm2_expr, BoundMode};
use super::composition::Compositions;
use super::expr::{BoundValue, Precision};
use crate::error::{invalid, Result};
use crate::model::chromatic_poly_k2n;

/// First `n` the scanners look at. Below it the cycle `C₄` (`n = 2`) is
/// handled separately and `n = 1` is a tree.
pub const DEFAULT_N_MIN: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScanStatus {
    Good,
    FirstBad,
}

impl ScanStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScanStatus::Good => "good",
            ScanStatus::FirstBad => "first-bad",
        }
    }
}

/// A composition at which a bound fell below `P(K_{2,n}, m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FailingCase {
    pub d: u32,
    pub parts: Vec<u32>,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanLine {
    pub m: u32,
    pub n: u32,
    pub status: ScanStatus,
    pub failing: Option<FailingCase>,
    /// Comparisons that needed the high-precision recheck.
    pub near_ties: u32,
    /// Bound evaluations performed.
    pub evaluations: u64,
}

impl ScanLine {
    /// The line the loop programs print.
    pub fn text(&self) -> String {
        match self.status {
            ScanStatus::Good => format!("n = {} is good", self.n),
            ScanStatus::FirstBad => format!("n = {} is the first bad n", self.n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub m: u32,
    pub n_min: u32,
    pub n_max: u32,
    pub mode: BoundMode,
}

impl ScanConfig {
    pub fn new(m: u32, n_max: u32) -> Self {
        ScanConfig { m, n_min: DEFAULT_N_MIN, n_max, mode: BoundMode::AsPublished }
    }
}

#[derive(Clone, Copy, Debug)]
enum Family {
    Dm2,
    /// Appendix bound with the given arity.
    Appendix(usize),
}

/// The per-`d` checks run for `m`, in the order the programs run them.
fn checks(m: u32) -> Result<Vec<(u32, Family)>> {
    Ok(match m {
        3 => vec![(1, Family::Dm2), (0, Family::Appendix(1))],
        4 => vec![(2, Family::Dm2), (1, Family::Appendix(2)), (0, Family::Appendix(1))],
        5 => vec![
            (3, Family::Dm2),
            (2, Family::Appendix(5)),
            (1, Family::Appendix(5)),
            (0, Family::Appendix(3)),
        ],
        _ => return Err(invalid!("the scanners cover m in {{3, 4, 5}}, got {m}")),
    })
}

/// Checks every composition of every per-`d` bound for `m` against
/// `P(K_{2,n}, m)`. The `d = m − 2` bound runs over 4-part compositions
/// (3-part when `m = 3`).
pub fn scan_n(m: u32, n: u32, mode: BoundMode) -> Result<ScanLine> {
    let p = chromatic_poly_k2n(n, m);
    let mut line = ScanLine { m, n, status: ScanStatus::Good, failing: None, near_ties: 0, evaluations: 0 };
    for (d, fam) in checks(m)? {
        let arity = match fam {
            Family::Dm2 if m == 3 => 3,
            Family::Dm2 => 4,
            Family::Appendix(k) => k,
        };
        for parts in Compositions::new(n, arity) {
            let expr = match fam {
                Family::Dm2 => dm2_expr(m, &parts)?,
                Family::Appendix(_) => appendix_expr(mode, m, d, &parts)?,
            };
            let mut b = BoundValue::new(expr);
            line.evaluations += 1;
            let ok = b.holds_against(&p);
            if b.precision == Precision::NearTie {
                line.near_ties += 1;
            }
            if !ok {
                line.status = ScanStatus::FirstBad;
                line.failing = Some(FailingCase { d, parts, bound: b.value });
                return Ok(line);
            }
        }
    }
    Ok(line)
}

/// Runs [`scan_n`] for `n = n_min, n_min + 1, …` up to `n_max`, stopping
/// after the first bad `n`.
pub fn scan(cfg: &ScanConfig) -> Result<Vec<ScanLine>> {
    checks(cfg.m)?;
    let mut out = Vec::new();
    for n in cfg.n_min.max(1)..=cfg.n_max {
        let line = scan_n(cfg.m, n, cfg.mode)?;
        let bad = line.status == ScanStatus::FirstBad;
        out.push(line);
        if bad {
            break;
        }
    }
    Ok(out)
}

/// [`scan`] with the published bounds, starting at `n = 3`.
pub fn scan_first_bad_n(m: u32, n_max: u32) -> Result<Vec<ScanLine>> {
    scan(&ScanConfig::new(m, n_max))
}
