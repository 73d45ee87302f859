use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::count::ExactCount;

/// Working precision of the near-tie recheck, in bits (about 154 decimal
/// digits).
pub const RECHECK_BITS: usize = 512;

/// Relative gap below which a float comparison is not trusted.
pub const NEAR_TIE_REL: f64 = 1e-9;

/// `coeff · ∏ base^(num / den)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: u64,
    pub den: u64,
    pub factors: Vec<(u64, i64)>,
}

impl Term {
    pub fn new(coeff: u64, den: u64, factors: Vec<(u64, i64)>) -> Self {
        debug_assert!(den > 0);
        Term { coeff, den, factors }
    }

    fn exponent_ln(&self) -> f64 {
        let mut s = 0.0;
        for &(base, num) in &self.factors {
            if num != 0 && base != 1 {
                s += num as f64 * libm::log(base as f64);
            }
        }
        s / self.den as f64
    }

    pub fn value(&self) -> f64 {
        if self.coeff == 0 {
            return 0.0;
        }
        if self.factors.iter().any(|&(b, e)| b == 0 && e != 0) {
            return 0.0;
        }
        self.coeff as f64 * libm::exp(self.exponent_ln())
    }

    fn value_big(&self, cc: &mut Consts) -> BigFloat {
        let p = RECHECK_BITS;
        let rm = RoundingMode::ToEven;
        if self.coeff == 0 || self.factors.iter().any(|&(b, e)| b == 0 && e != 0) {
            return BigFloat::from_u64(0, p);
        }
        let mut s = BigFloat::from_u64(0, p);
        for &(base, num) in &self.factors {
            if num == 0 || base == 1 {
                continue;
            }
            let l = BigFloat::from_u64(base, p).ln(p, rm, cc);
            s = s.add(&l.mul(&BigFloat::from_i64(num, p), p, rm), p, rm);
        }
        let s = s.div(&BigFloat::from_u64(self.den, p), p, rm);
        s.exp(p, rm, cc).mul(&BigFloat::from_u64(self.coeff, p), p, rm)
    }
}

/// A sum of [`Term`]s.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BoundExpr {
    pub terms: Vec<Term>,
}

impl BoundExpr {
    pub fn new(terms: Vec<Term>) -> Self {
        BoundExpr { terms }
    }

    pub fn value(&self) -> f64 {
        self.terms.iter().map(Term::value).sum()
    }

    /// The exact value, if every exponent is a nonnegative integer.
    pub fn exact_value(&self) -> Option<ExactCount> {
        let mut total = ExactCount::zero();
        for t in &self.terms {
            let mut v = ExactCount::from(t.coeff);
            for &(base, num) in &t.factors {
                if num < 0 || num as u64 % t.den != 0 {
                    return None;
                }
                v = v * ExactCount::pow(base, num as u64 / t.den);
            }
            total += &v;
        }
        Some(total)
    }

    /// Compares against `target` exactly when possible, otherwise at
    /// [`RECHECK_BITS`]. Differences below `2^-450` relative are reported as
    /// ties.
    pub fn compare_precise(&self, target: &ExactCount) -> Ordering {
        if let Some(v) = self.exact_value() {
            return v.cmp(target);
        }
        let p = RECHECK_BITS;
        let rm = RoundingMode::ToEven;
        let mut cc = Consts::new().expect("constant cache");
        let mut sum = BigFloat::from_u64(0, p);
        for t in &self.terms {
            sum = sum.add(&t.value_big(&mut cc), p, rm);
        }
        let rhs = BigFloat::parse(&target.to_decimal(), Radix::Dec, p, rm, &mut cc);
        let diff = sum.sub(&rhs, p, rm);
        let mut band = rhs.abs();
        if band.is_zero() {
            band = BigFloat::from_u64(1, p);
        }
        let scale = BigFloat::from_u64(2, p).powi(450, p, rm);
        let band = band.div(&scale, p, rm);
        match diff.abs().cmp(&band) {
            Some(c) if c <= 0 => Ordering::Equal,
            Some(_) if diff.is_negative() => Ordering::Less,
            Some(_) => Ordering::Greater,
            None => panic!("nan in bound evaluation against {}", target.to_string()),
        }
    }
}

/// Whether a float comparison could be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Precision {
    Confident,
    NearTie,
}

/// A lower bound evaluated in double precision, with enough structure kept
/// to redo the comparison at high precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundValue {
    pub value: f64,
    pub precision: Precision,
    expr: BoundExpr,
}

impl BoundValue {
    pub fn new(expr: BoundExpr) -> Self {
        BoundValue { value: expr.value(), precision: Precision::Confident, expr }
    }

    pub fn expr(&self) -> &BoundExpr {
        &self.expr
    }

    /// Compares the bound with `target`, setting the precision flag. Near
    /// ties are settled by [`BoundExpr::compare_precise`].
    pub fn compare(&mut self, target: &ExactCount) -> Ordering {
        let t = target.to_f64();
        if is_near_tie(self.value, t) {
            self.precision = Precision::NearTie;
            return self.expr.compare_precise(target);
        }
        self.precision = Precision::Confident;
        self.value.partial_cmp(&t).unwrap_or(Ordering::Less)
    }

    /// `bound ≥ target`.
    pub fn holds_against(&mut self, target: &ExactCount) -> bool {
        self.compare(target) != Ordering::Less
    }
}

pub(crate) fn is_near_tie(value: f64, target: f64) -> bool {
    let scale = if target > 1.0 { target } else { 1.0 };
    (value - target).abs() < NEAR_TIE_REL * scale || !value.is_finite() || !target.is_finite()
}
