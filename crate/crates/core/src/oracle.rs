//! Reference arithmetic on conventional naturals and a differential harness
//! that checks every tree operation against it.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::tree::{from_natural, to_natural, Hbn, Natural};
use crate::{arith, mul, tree};

/// `o^n(k) = 2^n (k + 1) - 1`.
pub fn nat_o_iter(n: u64, k: &Natural) -> Natural {
    ((k + 1u32) << n) - 1u32
}

/// `i^n(k) = 2^n (k + 2) - 2`.
pub fn nat_i_iter(n: u64, k: &Natural) -> Natural {
    ((k + 2u32) << n) - 2u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Succ,
    Pred,
    Add,
    Sub,
    Mul,
    Cmp,
    Double,
    Half,
    Exp2,
    LeftShift,
    Bitsize,
    Ilog2,
}

/// Width of the seeded random operands.
const RANDOM_BITS: u64 = 256;

/// Largest exponent the exhaustive `exp2` pass goes up to.
const EXP2_LIMIT: u64 = 64;

impl Op {
    pub const ALL: [Op; 12] = [
        Op::Succ,
        Op::Pred,
        Op::Add,
        Op::Sub,
        Op::Mul,
        Op::Cmp,
        Op::Double,
        Op::Half,
        Op::Exp2,
        Op::LeftShift,
        Op::Bitsize,
        Op::Ilog2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Op::Succ => "succ",
            Op::Pred => "pred",
            Op::Add => "add",
            Op::Sub => "sub",
            Op::Mul => "mul",
            Op::Cmp => "cmp",
            Op::Double => "double",
            Op::Half => "half",
            Op::Exp2 => "exp2",
            Op::LeftShift => "left_shift",
            Op::Bitsize => "bitsize",
            Op::Ilog2 => "ilog2",
        }
    }

    pub fn is_binary(self) -> bool {
        matches!(self, Op::Add | Op::Sub | Op::Mul | Op::Cmp | Op::LeftShift)
    }

    /// Reference result computed on naturals only.
    fn expected(self, a: &Natural, b: &Natural) -> Outcome {
        let num = Outcome::Num;
        match self {
            Op::Succ => num(a + 1u32),
            Op::Pred if a.is_zero() => Outcome::Error,
            Op::Pred => num(a - 1u32),
            Op::Add => num(a + b),
            Op::Sub if a < b => Outcome::Error,
            Op::Sub => num(a - b),
            Op::Mul => num(a * b),
            Op::Cmp => Outcome::Ord(a.cmp(b)),
            Op::Double => num(a * 2u32),
            Op::Half if a.bit(0) => Outcome::Error,
            Op::Half => num(a / 2u32),
            Op::Exp2 => num(BigUint::one() << a.to_u64().expect("small exponent")),
            Op::LeftShift => num(b << a.to_u64().expect("small shift")),
            Op::Bitsize => num(BigUint::from((a + 1u32).bits() - 1)),
            Op::Ilog2 if a.is_zero() => Outcome::Error,
            Op::Ilog2 => num(BigUint::from(a.bits() - 1)),
        }
    }

    fn actual(self, x: &Hbn, y: &Hbn) -> Outcome {
        let num = |r: Result<Hbn>| match r {
            Ok(h) => match to_natural(&h) {
                Ok(n) => Outcome::Num(n),
                Err(_) => Outcome::Error,
            },
            Err(_) => Outcome::Error,
        };
        match self {
            Op::Succ => num(Ok(tree::succ(x))),
            Op::Pred => num(tree::pred(x)),
            Op::Add => num(Ok(arith::add(x, y))),
            Op::Sub => num(arith::sub(x, y)),
            Op::Mul => num(Ok(mul::mul(x, y))),
            Op::Cmp => Outcome::Ord(arith::cmp(x, y)),
            Op::Double => num(Ok(arith::double(x))),
            Op::Half => num(arith::half(x)),
            Op::Exp2 => num(Ok(arith::exp2(x))),
            Op::LeftShift => num(Ok(arith::left_shift(x, y))),
            Op::Bitsize => num(Ok(arith::bitsize(x))),
            Op::Ilog2 => num(arith::ilog2(x)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Num(Natural),
    Ord(Ordering),
    Error,
}

impl Outcome {
    fn render(&self) -> String {
        match self {
            Outcome::Num(n) => n.to_string(),
            Outcome::Ord(Ordering::Less) => "<".into(),
            Outcome::Ord(Ordering::Equal) => "=".into(),
            Outcome::Ord(Ordering::Greater) => ">".into(),
            Outcome::Error => "error".into(),
        }
    }
}

/// One disagreement; inputs are in canonical tree syntax.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mismatch {
    pub op: &'static str,
    pub input1: String,
    pub input2: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub seed: u64,
    pub bound: u64,
    pub random_trials: u64,
    pub checks: u64,
    pub mismatches: Vec<Mismatch>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# differential seed={} bound={} random_trials={} checks={} mismatches={}\n",
            self.seed,
            self.bound,
            self.random_trials,
            self.checks,
            self.mismatches.len()
        );
        for m in &self.mismatches {
            let _ = writeln!(
                out,
                "MISMATCH {} {} {} expected={} got={}",
                m.op, m.input1, m.input2, m.expected, m.got
            );
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["op", "input1", "input2", "expected", "got"])
            .expect("in-memory write");
        for m in &self.mismatches {
            w.write_record([m.op, &m.input1, &m.input2, &m.expected, &m.got])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 records")
    }
}

fn check(op: Op, a: &Natural, b: &Natural, out: &mut Vec<Mismatch>) {
    let x = from_natural(a);
    let y = from_natural(b);
    let expected = op.expected(a, b);
    let got = op.actual(&x, &y);
    if expected != got {
        out.push(Mismatch {
            op: op.name(),
            input1: x.to_string(),
            input2: if op.is_binary() { y.to_string() } else { String::new() },
            expected: expected.render(),
            got: got.render(),
        });
    }
}

/// Exhaustive pass over `0..bound` (pairs for binary operations, exponents
/// capped at 64 for `exp2`) plus `random_trials` seeded 256-bit operands.
pub fn differential_suite(ops: &[Op], bound: u64, random_trials: u64, seed: u64) -> Report {
    let shards: Vec<(Vec<Mismatch>, u64)> = ops
        .par_iter()
        .flat_map_iter(|&op| {
            let limit = if op == Op::Exp2 { bound.min(EXP2_LIMIT + 1) } else { bound };
            (0..limit).map(move |a| (op, a))
        })
        .map(|(op, a)| {
            let mut out = Vec::new();
            let na = BigUint::from(a);
            if op.is_binary() {
                for b in 0..bound {
                    check(op, &na, &BigUint::from(b), &mut out);
                }
                (out, bound)
            } else {
                check(op, &na, &BigUint::zero(), &mut out);
                (out, 1)
            }
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_cases = Vec::new();
    for &op in ops {
        for _ in 0..random_trials {
            let bits = RANDOM_BITS;
            let (a, b) = match op {
                Op::Exp2 => (BigUint::from(rng.gen_range(0..=EXP2_LIMIT)), BigUint::zero()),
                Op::LeftShift => (BigUint::from(rng.gen_range(0..=256u64)), rng.gen_biguint(bits)),
                _ => (rng.gen_biguint(bits), rng.gen_biguint(bits)),
            };
            random_cases.push((op, a, b));
        }
    }
    let random: Vec<Mismatch> = random_cases
        .par_iter()
        .flat_map_iter(|(op, a, b)| {
            let mut out = Vec::new();
            check(*op, a, b, &mut out);
            out
        })
        .collect();

    let mut checks = random_cases.len() as u64;
    let mut mismatches = random;
    for (m, n) in shards {
        checks += n;
        mismatches.extend(m);
    }
    mismatches.sort();
    Report {
        seed,
        bound,
        random_trials,
        checks,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let z = BigUint::zero();
        assert_eq!(nat_o_iter(3, &z), BigUint::from(7u32));
        assert_eq!(nat_i_iter(3, &z), BigUint::from(14u32));
        let k = BigUint::from(12345u32);
        assert_eq!(nat_o_iter(0, &k), k);
        assert_eq!(nat_i_iter(0, &k), k);
    }

    #[test]
    fn closed_forms_match_direct_iteration() {
        for k in 0..50u32 {
            let (mut o, mut i) = (BigUint::from(k), BigUint::from(k));
            for n in 0..=20u64 {
                assert_eq!(nat_o_iter(n, &BigUint::from(k)), o);
                assert_eq!(nat_i_iter(n, &BigUint::from(k)), i);
                o = &o * 2u32 + 1u32;
                i = &i * 2u32 + 2u32;
            }
        }
    }

    #[test]
    fn small_suite_is_clean() {
        let r = differential_suite(&Op::ALL, 64, 0, 7);
        assert!(r.is_clean(), "{}", r.to_text());
        assert!(r.checks > 0);
    }

    #[test]
    fn random_add_is_clean() {
        let r = differential_suite(&[Op::Add], 0, 1000, 42);
        assert_eq!(r.checks, 1000);
        assert!(r.is_clean(), "{}", r.to_text());
    }

    #[test]
    fn report_formats() {
        let r = Report {
            seed: 3,
            bound: 1,
            random_trials: 0,
            checks: 1,
            mismatches: vec![Mismatch {
                op: "add",
                input1: "v(e,[])".into(),
                input2: "w(e,[e])".into(),
                expected: "5".into(),
                got: "4".into(),
            }],
        };
        assert!(r.to_text().starts_with("# differential seed=3"));
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("op,input1,input2,expected,got"));
        assert_eq!(lines.next(), Some("add,\"v(e,[])\",\"w(e,[e])\",5,4"));
    }
}
