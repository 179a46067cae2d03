//! The hereditarily binary tree type and its constant-cost primitives.
//!
//! A positive number is a chain of run-length blocks of bijective base-2
//! digits, least significant block first. `o(x) = 2x + 1` and
//! `i(x) = 2x + 2` are the two digit maps; a block of `c + 1` applications
//! of the same map stores the counter `c`, which is itself an [`Hbn`].
//!
//! Internally the tail of the term `v(X, [Y | Ys])` is stored as
//! the number it denotes, `w(Y, Ys)`. Splitting off the leading block is
//! therefore O(1) and block chains share structure freely.

use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{HbnError, Result};

/// Unbounded conventional natural number, used for conversion and I/O.
pub type Natural = BigUint;

/// Default materialization budget for [`to_natural`], in bits.
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 20;

/// Values below this are built once and shared.
const SMALL: u64 = 256;

fn small_values() -> &'static [Hbn] {
    static TABLE: OnceLock<Vec<Hbn>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: Vec<Hbn> = Vec::with_capacity(SMALL as usize);
        for k in 0..SMALL {
            let m = k + 1;
            let len = 63 - m.leading_zeros() as u64;
            // every count is below k, so already in the table
            let x = from_digit_bits(len, |j| (m >> j) & 1 == 1, |c| table[c as usize].clone());
            table.push(x);
        }
        table
    })
}

/// A bijective base-2 digit: `O` is `x ↦ 2x+1`, `I` is `x ↦ 2x+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Digit {
    O,
    I,
}

impl Digit {
    pub fn flip(self) -> Digit {
        match self {
            Digit::O => Digit::I,
            Digit::I => Digit::O,
        }
    }
}

/// A hereditarily binary number.
///
/// `E` is zero, `V` an odd number whose least significant block is made of
/// `o` digits, `W` an even positive number led by `i` digits. Values are
/// immutable; clones share structure.
#[derive(Clone, Default)]
pub enum Hbn {
    #[default]
    E,
    V(Arc<Block>),
    W(Arc<Block>),
}

/// One run-length block: `count + 1` digits of the node's kind, followed by
/// the rest of the number (zero or a node of the opposite kind).
pub struct Block {
    count: Hbn,
    rest: Hbn,
}

impl Block {
    pub fn count(&self) -> &Hbn {
        &self.count
    }

    pub fn rest(&self) -> &Hbn {
        &self.rest
    }
}

// Long block chains would otherwise be freed recursively.
impl Drop for Block {
    fn drop(&mut self) {
        let mut next = std::mem::take(&mut self.rest);
        loop {
            let arc = match next {
                Hbn::E => break,
                Hbn::V(a) | Hbn::W(a) => a,
            };
            match Arc::try_unwrap(arc) {
                Ok(mut block) => next = std::mem::take(&mut block.rest),
                Err(_) => break,
            }
        }
    }
}

impl Hbn {
    pub fn zero() -> Hbn {
        Hbn::E
    }

    pub fn one() -> Hbn {
        small_values()[1].clone()
    }

    pub fn two() -> Hbn {
        small_values()[2].clone()
    }

    /// Builds a leading block of `count + 1` digits of `digit` on top of
    /// `rest`, which must be zero or led by the opposite digit.
    pub(crate) fn block(digit: Digit, count: Hbn, rest: Hbn) -> Hbn {
        debug_assert!(rest.digit() != Some(digit), "adjacent blocks of one kind");
        let b = Arc::new(Block { count, rest });
        match digit {
            Digit::O => Hbn::V(b),
            Digit::I => Hbn::W(b),
        }
    }

    pub(crate) fn odd(count: Hbn, rest: Hbn) -> Hbn {
        Hbn::block(Digit::O, count, rest)
    }

    pub(crate) fn even(count: Hbn, rest: Hbn) -> Hbn {
        Hbn::block(Digit::I, count, rest)
    }

    /// Term constructor `v(count, [rest...])`.
    pub fn v(count: Hbn, rest: impl IntoIterator<Item = Hbn>) -> Hbn {
        Hbn::from_term(Digit::O, count, rest)
    }

    /// Term constructor `w(count, [rest...])`.
    pub fn w(count: Hbn, rest: impl IntoIterator<Item = Hbn>) -> Hbn {
        Hbn::from_term(Digit::I, count, rest)
    }

    pub(crate) fn from_term(head: Digit, count: Hbn, rest: impl IntoIterator<Item = Hbn>) -> Hbn {
        let rest: Vec<Hbn> = rest.into_iter().collect();
        // element j of the rest list (1-based) carries the head kind when j is even
        let mut acc = Hbn::E;
        for (j, c) in rest.into_iter().enumerate().rev() {
            let digit = if j % 2 == 0 { head.flip() } else { head };
            acc = Hbn::block(digit, c, acc);
        }
        Hbn::block(head, count, acc)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Hbn::E)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, Hbn::V(_))
    }

    pub fn is_even_positive(&self) -> bool {
        matches!(self, Hbn::W(_))
    }

    /// Kind of the least significant block, `None` for zero.
    pub fn digit(&self) -> Option<Digit> {
        match self {
            Hbn::E => None,
            Hbn::V(_) => Some(Digit::O),
            Hbn::W(_) => Some(Digit::I),
        }
    }

    /// Leading block as `(kind, stored count, rest)`.
    pub fn split(&self) -> Option<(Digit, &Hbn, &Hbn)> {
        match self {
            Hbn::E => None,
            Hbn::V(b) => Some((Digit::O, &b.count, &b.rest)),
            Hbn::W(b) => Some((Digit::I, &b.count, &b.rest)),
        }
    }

    /// Blocks from least to most significant, as `(kind, stored count)`.
    pub fn blocks(&self) -> Blocks<'_> {
        Blocks { cur: self }
    }

    /// The counter list `[X | Xs]` of the term form.
    pub fn counters(&self) -> impl Iterator<Item = &Hbn> {
        self.blocks().map(|(_, c)| c)
    }

    pub fn ptr_eq(&self, other: &Hbn) -> bool {
        match (self, other) {
            (Hbn::E, Hbn::E) => true,
            (Hbn::V(a), Hbn::V(b)) | (Hbn::W(a), Hbn::W(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

pub struct Blocks<'a> {
    cur: &'a Hbn,
}

impl<'a> Iterator for Blocks<'a> {
    type Item = (Digit, &'a Hbn);

    fn next(&mut self) -> Option<Self::Item> {
        let (d, count, rest) = self.cur.split()?;
        self.cur = rest;
        Some((d, count))
    }
}

impl PartialEq for Hbn {
    fn eq(&self, other: &Self) -> bool {
        let (mut a, mut b) = (self, other);
        loop {
            match (a, b) {
                (Hbn::E, Hbn::E) => return true,
                (Hbn::V(x), Hbn::V(y)) | (Hbn::W(x), Hbn::W(y)) => {
                    if Arc::ptr_eq(x, y) {
                        return true;
                    }
                    if x.count != y.count {
                        return false;
                    }
                    a = &x.rest;
                    b = &y.rest;
                }
                _ => return false,
            }
        }
    }
}

impl Eq for Hbn {}

impl Hash for Hbn {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (d, c) in self.blocks() {
            d.hash(state);
            c.hash(state);
        }
        state.write_u8(0xff);
    }
}

/// Hook for counting successor/predecessor invocations. The unit type is
/// the no-op counter used by the plain entry points.
pub trait SuccCounter {
    fn succ_call(&mut self) {}
    fn pred_call(&mut self) {}
}

impl SuccCounter for () {}

pub fn succ(x: &Hbn) -> Hbn {
    succ_with(x, &mut ())
}

pub fn pred(x: &Hbn) -> Result<Hbn> {
    if x.is_zero() {
        return Err(HbnError::Underflow {
            op: "pred",
            detail: "predecessor of zero".into(),
        });
    }
    Ok(pred_with(x, &mut ()))
}

/// Predecessor of a value known to be positive.
pub(crate) fn pred_pos(x: &Hbn) -> Hbn {
    pred_with(x, &mut ())
}

pub fn succ_with<C: SuccCounter>(x: &Hbn, c: &mut C) -> Hbn {
    c.succ_call();
    match x {
        Hbn::E => Hbn::one(),
        Hbn::V(b) => {
            if b.count.is_zero() {
                match &b.rest {
                    // 1 -> 2
                    Hbn::E => Hbn::two(),
                    // o(i^(n)(r)) + 1 = i^(n+1)(r)
                    Hbn::W(r) => Hbn::even(succ_with(&r.count, c), r.rest.clone()),
                    Hbn::V(_) => unreachable!("v followed by v"),
                }
            } else {
                // o^(t+1)(r) + 1 = i(o^t(r))
                let p = pred_with(&b.count, c);
                Hbn::even(Hbn::E, Hbn::odd(p, b.rest.clone()))
            }
        }
        Hbn::W(b) => match &b.rest {
            Hbn::E => Hbn::odd(succ_with(&b.count, c), Hbn::E),
            Hbn::V(r) => {
                if r.count.is_zero() {
                    match &r.rest {
                        Hbn::E => Hbn::odd(b.count.clone(), Hbn::two()),
                        Hbn::W(r2) => Hbn::odd(
                            b.count.clone(),
                            Hbn::even(succ_with(&r2.count, c), r2.rest.clone()),
                        ),
                        Hbn::V(_) => unreachable!("v followed by v"),
                    }
                } else {
                    let p = pred_with(&r.count, c);
                    Hbn::odd(
                        b.count.clone(),
                        Hbn::even(Hbn::E, Hbn::odd(p, r.rest.clone())),
                    )
                }
            }
            Hbn::W(_) => unreachable!("w followed by w"),
        },
    }
}

/// Predecessor; `x` must be positive.
pub fn pred_with<C: SuccCounter>(x: &Hbn, c: &mut C) -> Hbn {
    c.pred_call();
    match x {
        Hbn::E => panic!("pred_with: predecessor of zero"),
        Hbn::V(b) => match &b.rest {
            Hbn::E => {
                if b.count.is_zero() {
                    Hbn::E
                } else {
                    Hbn::even(pred_with(&b.count, c), Hbn::E)
                }
            }
            Hbn::W(r) => {
                if r.count.is_zero() {
                    match &r.rest {
                        Hbn::E => Hbn::even(b.count.clone(), Hbn::one()),
                        Hbn::V(q) => Hbn::even(
                            b.count.clone(),
                            Hbn::odd(succ_with(&q.count, c), q.rest.clone()),
                        ),
                        Hbn::W(_) => unreachable!("w followed by w"),
                    }
                } else {
                    let p = pred_with(&r.count, c);
                    Hbn::even(
                        b.count.clone(),
                        Hbn::odd(Hbn::E, Hbn::even(p, r.rest.clone())),
                    )
                }
            }
            Hbn::V(_) => unreachable!("v followed by v"),
        },
        Hbn::W(b) => {
            if b.count.is_zero() {
                match &b.rest {
                    Hbn::E => Hbn::one(),
                    Hbn::V(r) => Hbn::odd(succ_with(&r.count, c), r.rest.clone()),
                    Hbn::W(_) => unreachable!("w followed by w"),
                }
            } else {
                let p = pred_with(&b.count, c);
                Hbn::odd(Hbn::E, Hbn::even(p, b.rest.clone()))
            }
        }
    }
}

/// `2x + 1`.
pub fn apply_o(x: &Hbn) -> Hbn {
    match x {
        Hbn::E => Hbn::one(),
        Hbn::W(_) => Hbn::odd(Hbn::E, x.clone()),
        Hbn::V(b) => Hbn::odd(succ(&b.count), b.rest.clone()),
    }
}

/// `2x + 2`.
pub fn apply_i(x: &Hbn) -> Hbn {
    match x {
        Hbn::E => Hbn::two(),
        Hbn::V(_) => Hbn::even(Hbn::E, x.clone()),
        Hbn::W(b) => Hbn::even(succ(&b.count), b.rest.clone()),
    }
}

/// `(x - 1) / 2` for odd `x`.
pub fn unapply_o(x: &Hbn) -> Result<Hbn> {
    match x {
        Hbn::V(b) if b.count.is_zero() => Ok(b.rest.clone()),
        Hbn::V(b) => Ok(Hbn::odd(pred_pos(&b.count), b.rest.clone())),
        _ => Err(HbnError::Parity {
            op: "unapply_o",
            expected: "odd",
        }),
    }
}

/// `x / 2 - 1` for even positive `x`.
pub fn unapply_i(x: &Hbn) -> Result<Hbn> {
    match x {
        Hbn::W(b) if b.count.is_zero() => Ok(b.rest.clone()),
        Hbn::W(b) => Ok(Hbn::even(pred_pos(&b.count), b.rest.clone())),
        _ => Err(HbnError::Parity {
            op: "unapply_i",
            expected: "even and positive",
        }),
    }
}

/// Builds the tree whose digit string has length `len`, with bit `j` set
/// when digit `j` (least significant first) is an `i`.
fn from_digit_bits(len: u64, bit: impl Fn(u64) -> bool, count: impl Fn(u64) -> Hbn) -> Hbn {
    let mut runs: Vec<(Digit, u64)> = Vec::new();
    for j in 0..len {
        let d = if bit(j) { Digit::I } else { Digit::O };
        match runs.last_mut() {
            Some((last, n)) if *last == d => *n += 1,
            _ => runs.push((d, 1)),
        }
    }
    runs.into_iter()
        .rev()
        .fold(Hbn::E, |acc, (d, n)| Hbn::block(d, count(n - 1), acc))
}

/// The digits of `k` are the bits of `k + 1` below its leading one.
pub fn from_u64(k: u64) -> Hbn {
    if k < SMALL {
        return small_values()[k as usize].clone();
    }
    let m = k as u128 + 1;
    let len = 127 - m.leading_zeros() as u64;
    from_digit_bits(len, |j| (m >> j) & 1 == 1, from_u64)
}

pub fn from_natural(k: &Natural) -> Hbn {
    if let Some(small) = num_traits::ToPrimitive::to_u64(k) {
        return from_u64(small);
    }
    let m = k + 1u32;
    let len = m.bits() - 1;
    from_digit_bits(len, |j| m.bit(j), from_u64)
}

/// Exact value when it fits a `u64`.
pub fn to_u64(x: &Hbn) -> Option<u64> {
    let mut pos: u32 = 0;
    let mut mask: u128 = 0;
    for (d, c) in x.blocks() {
        let len = to_u64(c)?.checked_add(1)?;
        if len > 64 || pos as u64 + len > 64 {
            return None;
        }
        let len = len as u32;
        if d == Digit::I {
            mask |= ((1u128 << len) - 1) << pos;
        }
        pos += len;
    }
    let v = mask + ((1u128 << pos) - 1);
    u64::try_from(v).ok()
}

/// Digit count as a machine integer, `None` past `limit`.
pub(crate) fn bitsize_bounded(x: &Hbn, limit: u64) -> Option<u64> {
    let mut total: u64 = 0;
    for c in x.counters() {
        total = total.checked_add(to_u64(c)?)?.checked_add(1)?;
        if total > limit {
            return None;
        }
    }
    Some(total)
}

pub fn to_natural(x: &Hbn) -> Result<Natural> {
    to_natural_with_budget(x, DEFAULT_BIT_BUDGET)
}

/// Materializes `x`, refusing when its bitsize exceeds `budget` bits.
pub fn to_natural_with_budget(x: &Hbn, budget: u64) -> Result<Natural> {
    let len = bitsize_bounded(x, budget).ok_or_else(|| HbnError::Resource {
        op: "to_natural",
        detail: format!("bitsize {}", crate::syntax::describe(&crate::arith::bitsize(x))),
        budget,
    })?;
    let mut words = vec![0u32; (len as usize).div_ceil(32)];
    let mut pos: u64 = 0;
    for (d, c) in x.blocks() {
        // bounded above, so every count fits
        let n = to_u64(c).expect("count within budget") + 1;
        if d == Digit::I {
            for j in pos..pos + n {
                words[(j / 32) as usize] |= 1 << (j % 32);
            }
        }
        pos += n;
    }
    let mask = BigUint::new(words);
    let ones = (BigUint::one() << len) - BigUint::one();
    Ok(if len == 0 { BigUint::zero() } else { mask + ones })
}
