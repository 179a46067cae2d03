//! General multiplication.
//!
//! Two odd operands `o^n(a)` and `o^m(b)` multiply one block pair at a time:
//!
//! ```text
//! o^n(a) * o^m(b) = o^(n+m)(ab + a + b) - o^n(a) - o^m(b)
//! ```
//!
//! Even operands are reduced to odd ones through `i = s . o`:
//! `x * y = x * (y-1) + x`, and for two evens
//! `x * y = (x-1)(y-1) + (x-1) + (y-1) + 1`. These reductions peel a single
//! digit, so mixed-parity chains cost one step per block boundary; the
//! unwinding is kept on an explicit stack whose frames only hold operands
//! that share structure with the inputs.

use crate::arith::{add, sub_checked};
use crate::tree::{pred_pos, succ, Hbn};
use crate::blocks::otimes;

enum Pending {
    /// Odd by odd: `otimes(k, a + b + r) - x - y`, with `a`, `b` the
    /// remainders of `x`, `y`.
    Blocks { k: Hbn, x: Hbn, y: Hbn },
    /// `r + z`.
    Plus(Hbn),
    /// Even by even: `r + a + b + 1`.
    PlusSucc(Hbn, Hbn),
}

pub fn mul(x: &Hbn, y: &Hbn) -> Hbn {
    let mut stack = Vec::new();
    let (mut x, mut y) = (x.clone(), y.clone());
    loop {
        match (&x, &y) {
            (Hbn::E, _) | (_, Hbn::E) => break,
            (Hbn::V(bx), Hbn::V(by)) => {
                let (n, a) = (bx.count(), bx.rest().clone());
                let (m, b) = (by.count(), by.rest().clone());
                let k = add(&succ(n), &succ(m));
                stack.push(Pending::Blocks { k, x: x.clone(), y: y.clone() });
                (x, y) = (a, b);
            }
            (Hbn::V(_), Hbn::W(_)) => {
                stack.push(Pending::Plus(x.clone()));
                y = pred_pos(&y);
            }
            (Hbn::W(_), Hbn::V(_)) => {
                stack.push(Pending::Plus(y.clone()));
                x = pred_pos(&x);
            }
            (Hbn::W(_), Hbn::W(_)) => {
                let px = pred_pos(&x);
                let py = pred_pos(&y);
                stack.push(Pending::PlusSucc(px.clone(), py.clone()));
                (x, y) = (px, py);
            }
        }
    }
    let mut acc = Hbn::E;
    while let Some(p) = stack.pop() {
        acc = match p {
            Pending::Blocks { k, x, y } => {
                let (a, b) = (x.split().expect("odd").2, y.split().expect("odd").2);
                let p2 = otimes(&k, &add(&add(a, b), &acc));
                let r1 = sub_checked(&p2, &x).expect("block product exceeds operand");
                sub_checked(&r1, &y).expect("block product exceeds operand")
            }
            Pending::Plus(z) => add(&z, &acc),
            Pending::PlusSucc(a, b) => succ(&add(&add(&a, &b), &acc)),
        };
    }
    acc
}
