//! Addition, subtraction, comparison and the cheap power-of-two operations.
//!
//! `add`, `sub`, `cmp`, `bitsize` and the block primitives form one
//! mutually recursive unit. Recursion only ever descends into counters,
//! which are logarithmically smaller than their numbers; the walk along a
//! number's block chain is a loop with an explicit frame stack, so worst
//! case operands with one block per digit do not grow the call stack.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::blocks::{finish_difference, finish_sum, times, Pair};
use crate::error::{HbnError, Result};
use crate::syntax::describe;
use crate::tree::{apply_o, pred_pos, succ, unapply_o, Digit, Hbn};

/// Splits the longer of two aligned leading blocks so both have the
/// length of the shorter one. Returns the common block length and the two
/// remainders, the longer block's excess pushed back onto its remainder.
fn align(x: &Hbn, y: &Hbn) -> (Pair, Hbn, Hbn, Hbn) {
    let (dx, a, rx) = x.split().expect("positive operand");
    let (dy, b, ry) = y.split().expect("positive operand");
    let pair = Pair::of(dx, dy);
    match cmp(a, b) {
        Ordering::Equal => (pair, succ(a), rx.clone(), ry.clone()),
        Ordering::Greater => {
            let excess = sub_checked(a, b).expect("a > b");
            (pair, succ(b), times(dx, &excess, rx), ry.clone())
        }
        Ordering::Less => {
            let excess = sub_checked(b, a).expect("b > a");
            (pair, succ(a), rx.clone(), times(dy, &excess, ry))
        }
    }
}

pub fn add(x: &Hbn, y: &Hbn) -> Hbn {
    let mut frames: SmallVec<[(Pair, Hbn); 4]> = SmallVec::new();
    let (mut x, mut y) = (x.clone(), y.clone());
    let mut acc = loop {
        if x.is_zero() {
            break y;
        }
        if y.is_zero() {
            break x;
        }
        let (pair, k, rx, ry) = align(&x, &y);
        frames.push((pair, k));
        x = rx;
        y = ry;
    };
    while let Some((pair, k)) = frames.pop() {
        acc = finish_sum(pair, &k, &acc);
    }
    acc
}

/// `x - y`, or `None` when `x < y`.
pub fn sub_checked(x: &Hbn, y: &Hbn) -> Option<Hbn> {
    let mut frames: SmallVec<[(Pair, Hbn); 4]> = SmallVec::new();
    let (mut x, mut y) = (x.clone(), y.clone());
    let mut acc = loop {
        if y.is_zero() {
            break x;
        }
        if x.is_zero() {
            return None;
        }
        let (pair, k, rx, ry) = align(&x, &y);
        frames.push((pair, k));
        x = rx;
        y = ry;
    };
    while let Some((pair, k)) = frames.pop() {
        acc = finish_difference(pair, &k, &acc)?;
    }
    Some(acc)
}

pub fn sub(x: &Hbn, y: &Hbn) -> Result<Hbn> {
    sub_checked(x, y).ok_or_else(|| HbnError::Underflow {
        op: "sub",
        detail: format!(
            "subtrahend exceeds minuend (bitsizes {} and {})",
            describe(&bitsize(x)),
            describe(&bitsize(y))
        ),
    })
}

/// Total order matching the order of the denoted naturals.
///
/// Numbers with different bitsizes are ordered by their bitsizes, compared
/// the same way; equal bitsizes fall through to a most-significant-first
/// block comparison.
pub fn cmp(x: &Hbn, y: &Hbn) -> Ordering {
    let (mut x, mut y) = (x.clone(), y.clone());
    loop {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        if x == y {
            return Ordering::Equal;
        }
        let bx = bitsize(&x);
        let by = bitsize(&y);
        if bx == by {
            return compare_big_first(&reversed_dual(&x), &reversed_dual(&y));
        }
        x = bx;
        y = by;
    }
}

/// Compares two reversed duals of numbers with equal bitsize.
///
/// A longer leading `o` block means a smaller number, a longer leading `i`
/// block a larger one; on a tie the next block decides.
pub fn compare_big_first(x: &Hbn, y: &Hbn) -> Ordering {
    let (mut x, mut y) = (x, y);
    loop {
        match (x.split(), y.split()) {
            (None, None) => return Ordering::Equal,
            (Some((Digit::O, a, rx)), Some((Digit::O, b, ry))) => match cmp(a, b) {
                Ordering::Equal => (x, y) = (rx, ry),
                ord => return ord.reverse(),
            },
            (Some((Digit::I, a, rx)), Some((Digit::I, b, ry))) => match cmp(a, b) {
                Ordering::Equal => (x, y) = (rx, ry),
                ord => return ord,
            },
            (Some((Digit::O, _, _)), Some((Digit::I, _, _))) => return Ordering::Less,
            (Some((Digit::I, _, _)), Some((Digit::O, _, _))) => return Ordering::Greater,
            // unequal bitsizes break the precondition; shorter is smaller
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
        }
    }
}

/// The same blocks in most-significant-first order.
pub fn reversed_dual(x: &Hbn) -> Hbn {
    x.blocks()
        .fold(Hbn::E, |acc, (d, c)| Hbn::block(d, c.clone(), acc))
}

/// Number of blocks of `x`, i.e. the length of its counter list.
pub fn block_count(x: &Hbn) -> Hbn {
    x.blocks().fold(Hbn::E, |n, _| succ(&n))
}

/// Number of bijective base-2 digits.
pub fn bitsize(x: &Hbn) -> Hbn {
    x.counters().fold(Hbn::E, |s, c| succ(&add(&s, c)))
}

/// `floor(log2(x))` for positive `x`.
pub fn ilog2(x: &Hbn) -> Result<Hbn> {
    if x.is_zero() {
        return Err(HbnError::Domain {
            op: "ilog2",
            detail: "logarithm of zero".into(),
        });
    }
    Ok(bitsize(&pred_pos(x)))
}

pub fn double(x: &Hbn) -> Hbn {
    pred_pos(&apply_o(x))
}

pub fn half(x: &Hbn) -> Result<Hbn> {
    match x {
        Hbn::E => Ok(Hbn::E),
        Hbn::W(_) => unapply_o(&succ(x)),
        Hbn::V(_) => Err(HbnError::Parity {
            op: "half",
            expected: "even",
        }),
    }
}

/// `2^x`, built as the successor of `o^x(0)`.
pub fn exp2(x: &Hbn) -> Hbn {
    if x.is_zero() {
        Hbn::one()
    } else {
        succ(&Hbn::odd(pred_pos(x), Hbn::E))
    }
}

/// `k * 2^n`.
pub fn left_shift(n: &Hbn, k: &Hbn) -> Hbn {
    if k.is_zero() {
        Hbn::E
    } else {
        succ(&times(Digit::O, n, &pred_pos(k)))
    }
}

impl PartialOrd for Hbn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hbn {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp(self, other)
    }
}
