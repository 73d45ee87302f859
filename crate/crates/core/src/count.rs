use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// An exact, arbitrary-precision nonnegative count.
///
/// Houses `P(G, L)`, `P(G, m)` and `P_ℓ(G, m)`. Nothing in this crate ever
/// rounds one of these.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn zero() -> Self {
        ExactCount(BigUint::zero())
    }

    pub fn one() -> Self {
        ExactCount(BigUint::from(1u32))
    }

    /// `base^exp`, with `0^0 = 1`.
    pub fn pow(base: u64, exp: u64) -> Self {
        ExactCount(big_pow(&BigUint::from(base), exp))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_decimal(&self) -> String {
        self.0.to_str_radix(10)
    }

    /// Saturating subtraction.
    pub fn saturating_sub(&self, other: &ExactCount) -> ExactCount {
        if self.0 > other.0 {
            ExactCount(&self.0 - &other.0)
        } else {
            ExactCount::zero()
        }
    }
}

pub(crate) fn big_pow(base: &BigUint, mut exp: u64) -> BigUint {
    let mut result = BigUint::from(1u32);
    let mut acc = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &acc;
        }
        exp >>= 1;
        if exp > 0 {
            acc = &acc * &acc;
        }
    }
    result
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<u128> for ExactCount {
    fn from(v: u128) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl FromStr for ExactCount {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s)
            .map(ExactCount)
            .map_err(|_| crate::error::invalid!("not a decimal count: {s:?}"))
    }
}

impl PartialEq<u64> for ExactCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactCount> for &'a ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: &ExactCount) -> ExactCount {
        ExactCount(&self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactCount> for ExactCount {
    fn add_assign(&mut self, rhs: &ExactCount) {
        self.0 += &rhs.0;
    }
}

impl Mul for ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a ExactCount> for &'a ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: &ExactCount) -> ExactCount {
        ExactCount(&self.0 * &rhs.0)
    }
}

impl core::iter::Sum for ExactCount {
    fn sum<I: Iterator<Item = ExactCount>>(iter: I) -> Self {
        iter.fold(ExactCount::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
