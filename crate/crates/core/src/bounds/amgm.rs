use alloc::vec;
use alloc::vec::Vec;

use super::composition::CompositionVector;
use super::expr::{BoundExpr, BoundValue, Term};
use crate::error::{invalid, Error, Result};

/// Which form of the `(m, d) = (5, 2)` bound to use.
///
/// The published form bounds the `F` block (the two off-diagonal pairs
/// inside `D`) by the same expression as the diagonal block. That is not a
/// lower bound: with every y-list equal to `L(x₁)` the exact count is
/// `17·4ⁿ + 8·3ⁿ` while the published bound is `13·4ⁿ + 12·12^{n/2}`,
/// which is larger for `n ≤ 4`. The corrected form uses the exact value
/// of the `F` block, `2·3^{a₁+a₂}4^{a₃+a₄}5^{a₅}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BoundMode {
    #[default]
    AsPublished,
    Corrected,
}

/// The `(m, d)` pairs with a dedicated bound.
pub const APPENDIX_CASES: [(u32, u32); 7] = [(3, 1), (3, 0), (4, 1), (4, 0), (5, 2), (5, 1), (5, 0)];

fn i(v: u64) -> i64 {
    v as i64
}

/// Lower bound on `P(G, L)` for `d = m − 2`, as the four-term sum over the
/// diagonal, off-diagonal, mixed and `B × C` pair blocks.
///
/// `a` has four parts, or three when `m = 3` (the fourth class is empty).
pub fn dm2_lower_bound(m: u32, a: &CompositionVector) -> Result<BoundValue> {
    Ok(BoundValue::new(dm2_expr(m, a.parts())?))
}

pub(crate) fn dm2_expr(m: u32, parts: &[u32]) -> Result<BoundExpr> {
    if m < 3 {
        return Err(invalid!("the d = m - 2 bound needs m >= 3, got {m}"));
    }
    let (a1, a2, a3, a4) = match *parts {
        [a1, a2, a3, a4] => (a1, a2, a3, a4),
        [a1, a2, a3] if m == 3 => (a1, a2, a3, 0),
        _ => return Err(invalid!("the d = m - 2 bound takes 4 parts (3 when m = 3), got {}", parts.len())),
    };
    if m == 3 && a4 > 0 {
        return Err(invalid!("for m = 3 the fourth class is empty, got a4 = {a4}"));
    }
    let (a1, a2, a3, a4) = (i(a1.into()), i(a2.into()), i(a3.into()), i(a4.into()));
    let m = i(m.into());
    let x = a1 + a2;
    let (m0, m1, m2) = (m as u64, (m - 1) as u64, (m - 2) as u64);
    let mut terms = vec![
        Term::new(m2, m2, vec![(m1, (m - 2) * x + (m - 3) * a3 + (m - 4) * a4), (m0, a3 + 2 * a4)]),
        Term::new(
            4 * m2,
            4 * m2,
            vec![
                (m2, 2 * (m - 2) * x + 3 * (m - 3) * a3 + 4 * (m - 4) * a4),
                (m1, 2 * (m - 2) * x + m * a3 + 8 * a4),
                (m0, a3),
            ],
        ),
        Term::new(4, 4, vec![(m2, a2 + 2 * a3 + 4 * a4), (m1, 4 * a1 + 2 * a2 + 2 * a3), (m0, a2)]),
    ];
    if m > 3 {
        let k = ((m - 2) * (m - 3)) as u64;
        terms.push(Term::new(
            k,
            k,
            vec![
                (m2, (m - 2) * (m - 3) * x + (m - 4) * ((m - 3) * a3 + (m - 5) * a4)),
                (m1, 2 * (m - 3) * a3 + 4 * (m - 4) * a4),
                (m0, 2 * a4),
            ],
        ));
    }
    Ok(BoundExpr::new(terms))
}

/// Per-`d` lower bound for `m ∈ {3, 4, 5}`, in the published form.
///
/// Accepted arities: `(3,1)` 3; `(3,0)` 2, or 1 for the collapsed
/// `9·288^{n/9}`; `(4,1)` 4, or 2 for the form in `x = a₁ + a₂` and `n − x`;
/// `(4,0)` 3, or 1 for `16·3^{n/2}4096^{n/16}`; `(5,2)` and `(5,1)` 5;
/// `(5,0)` 3.
pub fn appendix_bound(m: u32, d: u32, a: &CompositionVector) -> Result<BoundValue> {
    appendix_bound_with(BoundMode::AsPublished, m, d, a)
}

pub fn appendix_bound_with(mode: BoundMode, m: u32, d: u32, a: &CompositionVector) -> Result<BoundValue> {
    Ok(BoundValue::new(appendix_expr(mode, m, d, a.parts())?))
}

pub(crate) fn appendix_expr(mode: BoundMode, m: u32, d: u32, parts: &[u32]) -> Result<BoundExpr> {
    let p: Vec<i64> = parts.iter().map(|&v| i64::from(v)).collect();
    let n: i64 = p.iter().sum();
    let arity_err = || -> Error {
        invalid!("unsupported arity {} for the (m, d) = ({m}, {d}) bound", parts.len())
    };
    let t = Term::new;
    let terms = match (m, d) {
        (3, 1) => {
            if parts.len() != 3 {
                return Err(arity_err());
            }
            return dm2_expr(3, parts);
        }
        (3, 0) => match p[..] {
            [a1, a2] => vec![t(9, 9, vec![(2, 9 * a1), (288, a2)])],
            [_] => vec![t(9, 9, vec![(288, n)])],
            _ => return Err(arity_err()),
        },
        (4, 1) => {
            let (x, y) = match p[..] {
                [a1, a2, a3, a4] => {
                    return Ok(BoundExpr::new(vec![
                        t(1, 1, vec![(3, a1 + a2), (4, a3 + a4)]),
                        t(6, 6, vec![(6, 3 * (a1 + a2)), (36, 2 * (a3 + a4))]),
                        t(9, 9, vec![(3, 9 * a1), (15552, a2), (18, 3 * a3), (5184, a4)]),
                    ]))
                }
                [x, y] => (x, y),
                _ => return Err(arity_err()),
            };
            vec![
                t(1, 1, vec![(3, x), (4, y)]),
                t(6, 6, vec![(6, 3 * x), (36, 2 * y)]),
                t(9, 9, vec![(15552, x), (5184, y)]),
            ]
        }
        (4, 0) => match p[..] {
            [a1, a2, a3] => vec![t(16, 16, vec![(3, 8 * n), (6561, a1), (4608, a2), (4096, a3)])],
            [_] => vec![t(16, 16, vec![(3, 8 * n), (4096, n)])],
            _ => return Err(arity_err()),
        },
        (5, 2) => {
            let [a1, a2, a3, a4, a5] = p[..] else { return Err(arity_err()) };
            let diag = vec![(4, 2 * (a1 + a2)), (20, a3 + a4), (5, 2 * a5)];
            let mut v = match mode {
                BoundMode::AsPublished => vec![t(4, 2, diag)],
                BoundMode::Corrected => {
                    vec![t(2, 2, diag), t(2, 1, vec![(3, a1 + a2), (4, a3 + a4), (5, a5)])]
                }
            };
            v.push(t(12, 6, vec![(12, 3 * (a1 + a2)), (2880, a3 + a4), (5120, a5)]));
            v.push(t(9, 9, vec![(4, 9 * a1), (230400, a2), (48, 3 * a3), (103680, a4), (36, 3 * a5)]));
            v
        }
        (5, 1) => {
            let [a1, a2, a3, a4, a5] = p[..] else { return Err(arity_err()) };
            vec![
                t(1, 1, vec![(4, a1 + a2 + a3), (5, a4 + a5)]),
                t(8, 8, vec![(12, 4 * (a1 + a2 + a3)), (128000, a4 + a5)]),
                t(16, 16, vec![(4, 16 * a1), (3538944000, a2), (240, 4 * a3), (192, 4 * a4), (34560, 2 * a5)]),
            ]
        }
        (5, 0) => {
            let [a1, a2, a3] = p[..] else { return Err(arity_err()) };
            vec![t(
                25,
                25,
                vec![(4, 25 * a1), (3, 4 * a2), (4, 17 * a2), (5, 4 * a2), (3, 6 * a3), (4, 13 * a3), (5, 6 * a3)],
            )]
        }
        _ => return Err(Error::UnsupportedCase { m, d }),
    };
    Ok(BoundExpr::new(terms))
}
