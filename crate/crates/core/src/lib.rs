//! Hereditarily binary numbers.
//!
//! Naturals are written in bijective base 2 (digits `o: x ↦ 2x+1` and
//! `i: x ↦ 2x+2`), the digit string is run-length encoded, and every
//! run length is again such a number, recursively. Arithmetic works one
//! run-length block at a time, so its cost follows the size of the tree
//! rather than the number of digits. Towers of exponents are cheap:
//!
//! ```
//! use hbn::{add, best_case, from_u64, to_u64, tsize};
//!
//! let a = best_case(&from_u64(20)).unwrap();
//! let b = best_case(&from_u64(30)).unwrap();
//! assert_eq!(to_u64(&tsize(&add(&a, &b))), Some(314));
//! ```

pub mod arith;
pub mod blocks;
pub mod complexity;
pub mod error;
pub mod mul;
pub mod oracle;
pub mod syntax;
pub mod tree;

pub use arith::{
    add, bitsize, block_count, cmp, compare_big_first, double, exp2, half, ilog2, left_shift,
    reversed_dual, sub, sub_checked,
};
pub use blocks::{
    iminus, iominus, iplus, itimes, oiminus, oiplus, ominus, oplus, otimes, split_i, split_o,
    BlockView,
};
pub use complexity::{
    best_case, iterate, iterate_with_budget, measure_succ_cost, tsize, worst_case, OpStats,
};
pub use error::{HbnError, Result};
pub use mul::mul;
pub use syntax::{describe, parse_tree, parse_tree_prefix, render_tree};
pub use tree::{
    apply_i, apply_o, from_natural, from_u64, pred, pred_with, succ, succ_with, to_natural,
    to_natural_with_budget, to_u64, unapply_i, unapply_o, Digit, Hbn, Natural, SuccCounter,
    DEFAULT_BIT_BUDGET,
};
