//! Structural complexity, best/worst case generators and successor-cost
//! instrumentation.

use crate::arith::add;
use crate::error::{HbnError, Result};
use crate::syntax::describe;
use crate::tree::{apply_i, apply_o, succ, succ_with, to_u64, Hbn, SuccCounter};

/// Default cap on the number of steps [`iterate`] will run.
pub const DEFAULT_ITERATION_BUDGET: u64 = 1 << 26;

/// Cap on the range [`measure_succ_cost`] accepts.
pub const MEASURE_BUDGET: u64 = 1 << 30;

/// Node count of the tree, root excluded: each counter contributes one
/// node plus its own size.
pub fn tsize(x: &Hbn) -> Hbn {
    x.counters()
        .fold(Hbn::E, |s, c| succ(&add(&s, &tsize(c))))
}

pub fn iterate<F>(f: F, k: &Hbn, x: &Hbn) -> Result<Hbn>
where
    F: FnMut(&Hbn) -> Hbn,
{
    iterate_with_budget(f, k, x, DEFAULT_ITERATION_BUDGET)
}

/// Applies `f` to `x` as many times as `k` denotes.
pub fn iterate_with_budget<F>(mut f: F, k: &Hbn, x: &Hbn, budget: u64) -> Result<Hbn>
where
    F: FnMut(&Hbn) -> Hbn,
{
    let steps = to_u64(k).filter(|&n| n <= budget).ok_or_else(|| HbnError::Resource {
        op: "iterate",
        detail: format!("iteration count {}", describe(k)),
        budget,
    })?;
    let mut acc = x.clone();
    for _ in 0..steps {
        acc = f(&acc);
    }
    Ok(acc)
}

/// Tower of `k` twos minus two: `x ↦ w(x, [])` iterated `k` times from zero.
pub fn best_case(k: &Hbn) -> Result<Hbn> {
    iterate(|x| Hbn::even(x.clone(), Hbn::E), k, &Hbn::E)
}

/// `4(4^k - 1)/3`: `k` alternating `o`/`i` digit pairs, one block per digit.
pub fn worst_case(k: &Hbn) -> Result<Hbn> {
    iterate(|x| apply_i(&apply_o(x)), k, &Hbn::E)
}

/// Successor/predecessor invocation counts for one measured run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpStats {
    pub op_label: String,
    /// Top-level operations performed.
    pub operations: u64,
    pub succ_calls: u64,
    pub pred_calls: u64,
}

impl OpStats {
    pub fn new(op_label: impl Into<String>) -> Self {
        OpStats {
            op_label: op_label.into(),
            ..Default::default()
        }
    }

    pub fn total_calls(&self) -> u64 {
        self.succ_calls + self.pred_calls
    }

    /// Calls per top-level operation, the top-level call included.
    pub fn average(&self) -> f64 {
        if self.operations == 0 {
            0.0
        } else {
            self.total_calls() as f64 / self.operations as f64
        }
    }
}

impl SuccCounter for OpStats {
    fn succ_call(&mut self) {
        self.succ_calls += 1;
    }

    fn pred_call(&mut self) {
        self.pred_calls += 1;
    }
}

/// Runs the successor over `0..range_end`, counting every successor and
/// predecessor invocation including the top-level one.
pub fn measure_succ_cost(range_end: u64) -> Result<OpStats> {
    if range_end > MEASURE_BUDGET {
        return Err(HbnError::Resource {
            op: "measure_succ_cost",
            detail: format!("range {range_end}"),
            budget: MEASURE_BUDGET,
        });
    }
    let mut stats = OpStats::new("succ");
    let mut x = Hbn::E;
    for _ in 0..range_end {
        x = succ_with(&x, &mut stats);
        stats.operations += 1;
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bitsize, double};
    use crate::tree::{from_u64, to_natural};
    use num_bigint::BigUint;

    fn t(k: u64) -> Hbn {
        from_u64(k)
    }

    #[test]
    fn tsize_examples() {
        assert_eq!(tsize(&Hbn::E), Hbn::E);
        let x = t(123456);
        assert_eq!(tsize(&x), t(12));
        assert_eq!(tsize(&x), Hbn::w(Hbn::E, [Hbn::E, Hbn::E]));
        assert_eq!(bitsize(&x), Hbn::w(Hbn::E, [Hbn::w(Hbn::E, [])]));
        for k in 1..=6 {
            let w = worst_case(&t(k)).unwrap();
            assert_eq!(tsize(&w), bitsize(&w));
        }
    }

    #[test]
    fn iterate_examples() {
        let x = t(99);
        assert_eq!(iterate(succ, &Hbn::E, &x).unwrap(), x);
        assert_eq!(iterate(succ, &t(5), &Hbn::E).unwrap(), t(5));
        assert_eq!(iterate(double, &t(10), &t(1)).unwrap(), t(1024));
        assert!(matches!(
            iterate_with_budget(succ, &t(11), &Hbn::E, 10),
            Err(HbnError::Resource { .. })
        ));
    }

    #[test]
    fn best_and_worst() {
        assert_eq!(best_case(&Hbn::E).unwrap(), Hbn::E);
        assert_eq!(worst_case(&Hbn::E).unwrap(), Hbn::E);
        let best = best_case(&t(3)).unwrap();
        assert_eq!(best.to_string(), "w(w(w(e,[]),[]),[])");
        assert_eq!(to_natural(&best).unwrap(), BigUint::from(65534u32));
        let worst = worst_case(&t(3)).unwrap();
        assert_eq!(worst.to_string(), "w(e,[e,e,e,e,e])");
        assert_eq!(to_natural(&worst).unwrap(), BigUint::from(84u32));
        assert_eq!(
            to_natural(&worst_case(&t(10)).unwrap()).unwrap(),
            BigUint::from(1398100u32)
        );
    }

    #[test]
    fn best_case_four_bitsize() {
        // 2^65536 - 2 = i^65535(0)
        let b = best_case(&t(4)).unwrap();
        assert_eq!(bitsize(&b), t(65535));
        assert_eq!(tsize(&b), t(4));
    }

    #[test]
    fn succ_cost_small_ranges() {
        let one = measure_succ_cost(1).unwrap();
        assert_eq!(one.total_calls(), 1);
        assert_eq!(one.operations, 1);
        assert!(measure_succ_cost(MEASURE_BUDGET + 1).is_err());
    }
}
