use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::count::{big_pow, ExactCount};
use crate::error::{invalid, Error, Result};

/// `P(K_{2,n}, m) = m(m−1)^n + m(m−1)(m−2)^n`, with `0^0 = 1`.
pub fn chromatic_poly_k2n(n: u32, m: u32) -> ExactCount {
    let m64 = u64::from(m);
    if m == 0 {
        return ExactCount::zero();
    }
    let first = BigUint::from(m64) * big_pow(&BigUint::from(m64 - 1), u64::from(n));
    if m == 1 {
        return ExactCount::from(first);
    }
    let second = BigUint::from(m64 * (m64 - 1)) * big_pow(&BigUint::from(m64 - 2), u64::from(n));
    ExactCount::from(first + second)
}

/// Graph families with textbook chromatic polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Complete,
    Cycle,
    Tree,
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(GraphFamily::Complete),
            "cycle" => Ok(GraphFamily::Cycle),
            "tree" => Ok(GraphFamily::Tree),
            other => Err(invalid!("unknown graph family {other:?} (expected complete, cycle or tree)")),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFamily::Complete => "complete",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Tree => "tree",
        })
    }
}

/// Chromatic polynomial of `K_n`, `C_n` or any `n`-vertex tree.
pub fn chromatic_poly_reference(family: GraphFamily, n: u32, m: u32) -> Result<ExactCount> {
    if n == 0 {
        return Err(invalid!("n must be at least 1"));
    }
    let m64 = u64::from(m);
    Ok(match family {
        GraphFamily::Complete => {
            if n > m {
                ExactCount::zero()
            } else {
                ExactCount::from((0..u64::from(n)).fold(BigUint::from(1u32), |acc, i| acc * (m64 - i)))
            }
        }
        GraphFamily::Cycle => {
            if n < 3 {
                return Err(invalid!("cycles need n >= 3, got {n}"));
            }
            if m == 0 {
                return Ok(ExactCount::zero());
            }
            // (m−1)^n + (−1)^n (m−1); the odd case never goes negative.
            let p = big_pow(&BigUint::from(m64 - 1), u64::from(n));
            let shift = BigUint::from(m64 - 1);
            ExactCount::from(if n % 2 == 0 { p + shift } else { p - shift })
        }
        GraphFamily::Tree => {
            if m == 0 {
                ExactCount::zero()
            } else {
                ExactCount::from(BigUint::from(m64) * big_pow(&BigUint::from(m64 - 1), u64::from(n - 1)))
            }
        }
    })
}
