//! Block-level primitives: iterated digit application by a tree-valued
//! count, leading-block extraction, and the fused identities that let
//! addition and subtraction consume one aligned block per step.
//!
//! With `o^k(x) = 2^k(x+1) - 1` and `i^k(x) = 2^k(x+2) - 2`:
//!
//! ```text
//! o^k(x) + o^k(y) = i^k(x+y)
//! o^k(x) + i^k(y) = i^k(x+y+1) - 1
//! i^k(x) + i^k(y) = i^k(x+y+2) - 2
//! o^k(x) - o^k(y) = o^k(x-y-1) + 1      x > y
//! o^k(x) - i^k(y) = o^k(x-y-2) + 2      x > y + 1
//! i^k(x) - o^k(y) = o^k(x-y)            x >= y
//! i^k(x) - i^k(y) = o^k(x-y-1) + 1      x > y
//! ```

use std::cmp::Ordering;

use crate::arith::{add, bitsize, cmp, exp2, sub_checked};
use crate::error::{HbnError, Result};
use crate::syntax::describe;
use crate::tree::{pred_pos, succ, Digit, Hbn};

/// A positive number seen as its leading block and what lies beyond it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockView {
    /// Stored count; the block holds `count + 1` digits.
    pub count: Hbn,
    /// Remainder, never led by the block's own digit.
    pub rest: Hbn,
}

/// `o^n(y)`.
pub fn otimes(n: &Hbn, y: &Hbn) -> Hbn {
    times(Digit::O, n, y)
}

/// `i^n(y)`.
pub fn itimes(n: &Hbn, y: &Hbn) -> Hbn {
    times(Digit::I, n, y)
}

/// `n` applications of `digit` to `y`, merging into a leading block of the
/// same kind with a single counter addition.
pub fn times(digit: Digit, n: &Hbn, y: &Hbn) -> Hbn {
    if n.is_zero() {
        return y.clone();
    }
    match y.split() {
        Some((d, count, rest)) if d == digit => Hbn::block(digit, add(n, count), rest.clone()),
        _ => Hbn::block(digit, pred_pos(n), y.clone()),
    }
}

pub fn split_o(x: &Hbn) -> Result<BlockView> {
    split_kind(x, Digit::O, "split_o", "v")
}

pub fn split_i(x: &Hbn) -> Result<BlockView> {
    split_kind(x, Digit::I, "split_i", "w")
}

fn split_kind(x: &Hbn, digit: Digit, op: &'static str, expected: &'static str) -> Result<BlockView> {
    match x.split() {
        Some((d, count, rest)) if d == digit => Ok(BlockView {
            count: count.clone(),
            rest: rest.clone(),
        }),
        _ => Err(HbnError::Kind { op, expected }),
    }
}

/// Digit kinds of the two aligned blocks, left operand first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pair {
    OO,
    OI,
    IO,
    II,
}

impl Pair {
    pub(crate) fn of(a: Digit, b: Digit) -> Pair {
        match (a, b) {
            (Digit::O, Digit::O) => Pair::OO,
            (Digit::O, Digit::I) => Pair::OI,
            (Digit::I, Digit::O) => Pair::IO,
            (Digit::I, Digit::I) => Pair::II,
        }
    }
}

/// Sum of two `k`-blocks given `s`, the sum of the remainders.
pub(crate) fn finish_sum(pair: Pair, k: &Hbn, s: &Hbn) -> Hbn {
    match pair {
        Pair::OO => itimes(k, s),
        Pair::OI | Pair::IO => pred_pos(&itimes(k, &succ(s))),
        Pair::II => pred_pos(&pred_pos(&itimes(k, &succ(&succ(s))))),
    }
}

/// Difference of two `k`-blocks given `d`, the difference of the
/// remainders. `None` when the block difference is negative.
pub(crate) fn finish_difference(pair: Pair, k: &Hbn, d: &Hbn) -> Option<Hbn> {
    match pair {
        Pair::OO | Pair::II => {
            if d.is_zero() {
                Some(Hbn::E)
            } else {
                Some(succ(&otimes(k, &pred_pos(d))))
            }
        }
        Pair::IO => Some(otimes(k, d)),
        Pair::OI => match d {
            Hbn::E => None,
            _ if *d == Hbn::one() => Some(Hbn::one()),
            _ => {
                let d1 = pred_pos(d);
                if d1 == Hbn::one() {
                    Some(succ(&exp2(k)))
                } else {
                    let d2 = pred_pos(&d1);
                    Some(succ(&succ(&otimes(k, &d2))))
                }
            }
        },
    }
}

/// `o^k(x) + o^k(y)`.
pub fn oplus(k: &Hbn, x: &Hbn, y: &Hbn) -> Hbn {
    finish_sum(Pair::OO, k, &add(x, y))
}

/// `o^k(x) + i^k(y)`.
pub fn oiplus(k: &Hbn, x: &Hbn, y: &Hbn) -> Hbn {
    finish_sum(Pair::OI, k, &add(x, y))
}

/// `i^k(x) + i^k(y)`.
pub fn iplus(k: &Hbn, x: &Hbn, y: &Hbn) -> Hbn {
    finish_sum(Pair::II, k, &add(x, y))
}

fn fused_minus(
    op: &'static str,
    pair: Pair,
    k: &Hbn,
    x: &Hbn,
    y: &Hbn,
    min_gap: &Hbn,
) -> Result<Hbn> {
    let floor = add(y, min_gap);
    let underflow = || HbnError::Underflow {
        op,
        detail: format!(
            "left remainder below the allowed minimum; bitsizes {} and {}",
            describe(&bitsize(x)),
            describe(&bitsize(y))
        ),
    };
    if cmp(x, &floor) == Ordering::Less {
        return Err(underflow());
    }
    let d = sub_checked(x, y).ok_or_else(underflow)?;
    finish_difference(pair, k, &d).ok_or_else(underflow)
}

/// `o^k(x) - o^k(y)`, requires `x >= y`.
pub fn ominus(k: &Hbn, x: &Hbn, y: &Hbn) -> Result<Hbn> {
    fused_minus("ominus", Pair::OO, k, x, y, &Hbn::E)
}

/// `i^k(x) - i^k(y)`, requires `x >= y`.
pub fn iminus(k: &Hbn, x: &Hbn, y: &Hbn) -> Result<Hbn> {
    fused_minus("iminus", Pair::II, k, x, y, &Hbn::E)
}

/// `o^k(x) - i^k(y)`, requires `x >= y + 1`.
pub fn oiminus(k: &Hbn, x: &Hbn, y: &Hbn) -> Result<Hbn> {
    fused_minus("oiminus", Pair::OI, k, x, y, &Hbn::one())
}

/// `i^k(x) - o^k(y)`, requires `x >= y`.
pub fn iominus(k: &Hbn, x: &Hbn, y: &Hbn) -> Result<Hbn> {
    fused_minus("iominus", Pair::IO, k, x, y, &Hbn::E)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{from_u64, to_u64};

    fn t(k: u64) -> Hbn {
        from_u64(k)
    }

    #[test]
    fn otimes_clauses() {
        let y = t(37);
        assert_eq!(otimes(&Hbn::E, &y), y);
        assert_eq!(otimes(&t(3), &Hbn::E), Hbn::v(t(2), []));
        assert_eq!(otimes(&t(3), &Hbn::E), t(7));
        assert_eq!(itimes(&t(3), &Hbn::E), t(14));
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            split_o(&t(1)).unwrap(),
            BlockView { count: Hbn::E, rest: Hbn::E }
        );
        assert_eq!(
            split_o(&Hbn::v(Hbn::E, [Hbn::E])).unwrap(),
            BlockView { count: Hbn::E, rest: Hbn::w(Hbn::E, []) }
        );
        let v = split_i(&t(123456)).unwrap();
        assert_eq!(v.count, Hbn::E);
        assert_eq!(v.rest, t((123456 + 2) / 2 - 2));
        assert!(matches!(split_o(&t(4)), Err(HbnError::Kind { .. })));
        assert!(matches!(split_i(&Hbn::E), Err(HbnError::Kind { .. })));
    }

    #[test]
    fn fused_examples() {
        assert_eq!(oplus(&t(1), &Hbn::E, &Hbn::E), t(2));
        assert_eq!(oplus(&t(2), &t(1), &t(2)), t(18));
        assert_eq!(oplus(&t(5), &Hbn::E, &Hbn::E), t(62));
        assert_eq!(iplus(&t(1), &Hbn::E, &Hbn::E), t(4));
        assert_eq!(oiplus(&t(1), &Hbn::E, &Hbn::E), t(3));
        assert_eq!(oiplus(&t(3), &t(2), &t(1)), t(45));
        assert_eq!(ominus(&t(2), &t(5), &t(5)).unwrap(), Hbn::E);
        assert_eq!(oiminus(&t(4), &t(3), &t(1)).unwrap(), t(17));
        assert_eq!(iominus(&t(3), &t(2), &t(2)).unwrap(), t(7));
    }

    #[test]
    fn oiminus_special_cases() {
        // x = y + 1 gives 1, x = y + 2 gives 2^k + 1
        assert_eq!(oiminus(&t(3), &t(5), &t(4)).unwrap(), t(1));
        assert_eq!(to_u64(&oiminus(&t(3), &t(6), &t(4)).unwrap()), Some(9));
        assert!(matches!(
            oiminus(&t(3), &t(4), &t(4)),
            Err(HbnError::Underflow { op: "oiminus", .. })
        ));
    }

    #[test]
    fn violated_side_conditions_underflow() {
        assert!(ominus(&t(2), &t(3), &t(4)).is_err());
        assert!(iminus(&t(2), &t(3), &t(4)).is_err());
        assert!(iominus(&t(2), &t(3), &t(4)).is_err());
    }
}
