use hbn::*;
use num_bigint::BigUint;
use proptest::prelude::*;

fn t(k: u64) -> Hbn {
    from_u64(k)
}

/// Digit-by-digit construction straight from the parity recursion.
fn t_naive(k: u64) -> Hbn {
    if k == 0 {
        Hbn::zero()
    } else if k % 2 == 1 {
        apply_o(&t_naive((k - 1) / 2))
    } else {
        apply_i(&t_naive(k / 2 - 1))
    }
}

/// Every canonical tree whose node count, root excluded, is exactly `size`.
fn trees_of_size(size: usize, memo: &mut Vec<Vec<Hbn>>) -> Vec<Hbn> {
    if size < memo.len() {
        return memo[size].clone();
    }
    let mut out = Vec::new();
    if size == 0 {
        out.push(Hbn::zero());
    } else {
        // non-empty counter lists with total weight `size`, each element weighing 1 + its size
        for list in lists_of_weight(size, memo) {
            let (head, rest) = list.split_first().unwrap();
            out.push(Hbn::v(head.clone(), rest.to_vec()));
            out.push(Hbn::w(head.clone(), rest.to_vec()));
        }
    }
    memo.push(out.clone());
    out
}

fn lists_of_weight(weight: usize, memo: &mut Vec<Vec<Hbn>>) -> Vec<Vec<Hbn>> {
    let mut out = Vec::new();
    for first in 1..=weight {
        let heads = trees_of_size(first - 1, memo);
        let tails = if first == weight {
            vec![Vec::new()]
        } else {
            lists_of_weight(weight - first, memo)
        };
        for h in &heads {
            for tail in &tails {
                let mut l = vec![h.clone()];
                l.extend(tail.iter().cloned());
                out.push(l);
            }
        }
    }
    out
}

#[test]
fn natural_round_trip_to_2_16() {
    for k in 0..(1u64 << 16) {
        let n = BigUint::from(k);
        assert_eq!(to_natural(&from_natural(&n)).unwrap(), n);
    }
}

#[test]
fn from_natural_matches_parity_recursion() {
    for k in 0..(1u64 << 12) {
        assert_eq!(from_natural(&BigUint::from(k)), t_naive(k), "{k}");
    }
}

#[test]
fn tree_round_trip_up_to_six_nodes() {
    let mut memo = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let budget = t(DEFAULT_BIT_BUDGET);
    let (mut total, mut towers) = (0, 0);
    for size in 0..=6 {
        for x in trees_of_size(size, &mut memo) {
            assert_eq!(tsize(&x), t(size as u64));
            total += 1;
            // a handful of tiny trees denote towers far past any bit budget
            let Ok(n) = to_natural(&x) else {
                assert_eq!(cmp(&bitsize(&x), &budget), std::cmp::Ordering::Greater);
                assert_eq!(pred(&succ(&x)).unwrap(), x);
                towers += 1;
                continue;
            };
            assert_eq!(from_natural(&n), x);
            assert!(seen.insert(n), "two trees denote the same number");
        }
    }
    assert!(total > 100);
    assert!(towers < total);
}

#[test]
fn parity_matches_constructor() {
    for k in 0..(1u64 << 16) {
        let x = t(k);
        assert_eq!(x.is_zero(), k == 0);
        assert_eq!(x.is_odd(), k % 2 == 1);
        assert_eq!(x.is_even_positive(), k > 0 && k % 2 == 0);
    }
}

#[test]
fn successor_and_inverse_laws() {
    for k in 0..(1u64 << 16) {
        let x = t(k);
        let s = succ(&x);
        assert_eq!(to_u64(&s), Some(k + 1));
        assert_eq!(pred(&s).unwrap(), x);
        if k > 0 {
            assert_eq!(succ(&pred(&x).unwrap()), x);
        }
        assert_eq!(unapply_o(&apply_o(&x)).unwrap(), x);
        assert_eq!(unapply_i(&apply_i(&x)).unwrap(), x);
        assert_eq!(apply_i(&x), succ(&apply_o(&x)));
        if x.is_odd() {
            assert_eq!(apply_o(&unapply_o(&x).unwrap()), x);
        } else if x.is_positive() {
            assert_eq!(apply_i(&unapply_i(&x).unwrap()), x);
        }
    }
}

#[test]
fn tsize_bounded_by_bitsize() {
    let mut values: Vec<Hbn> = (0..(1u64 << 14)).map(t).collect();
    for k in 0..12 {
        values.push(best_case(&t(k.min(6))).unwrap());
        values.push(worst_case(&t(k * 50)).unwrap());
        values.push(exp2(&t(1 << k)));
    }
    for x in &values {
        assert_ne!(cmp(&tsize(x), &bitsize(x)), std::cmp::Ordering::Greater, "{x}");
    }
}

#[test]
fn reversed_dual_involution() {
    for k in 0..(1u64 << 14) {
        let x = t(k);
        let r = reversed_dual(&x);
        assert_eq!(reversed_dual(&r), x);
        assert_eq!(bitsize(&r), bitsize(&x));
        assert_eq!(tsize(&r), tsize(&x));
        let blocks = x.blocks().count();
        if blocks > 0 {
            let same_kind = r.digit() == x.digit();
            assert_eq!(same_kind, blocks % 2 == 1);
        }
    }
}

#[test]
fn reference_value_table() {
    let table = ["e", "v(e,[])", "w(e,[])", "v(v(e,[]),[])", "w(e,[e])", "v(e,[e])"];
    for (k, s) in table.iter().enumerate() {
        assert_eq!(render_tree(&t(k as u64)), *s);
        assert_eq!(parse_tree(s).unwrap(), t(k as u64));
    }
}

#[test]
fn wide_values_do_not_exhaust_the_stack() {
    // a million alternating digits: one block per digit
    let worst = worst_case(&t(500_000)).unwrap();
    let n = to_natural(&worst).unwrap();
    assert_eq!(from_natural(&n), worst);
    let text = render_tree(&worst);
    assert_eq!(parse_tree(&text).unwrap(), worst);
    assert_eq!(bitsize(&worst), t(1_000_000));
}

proptest! {
    #[test]
    fn render_parse_round_trip(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let x = from_natural(&BigUint::from_bytes_le(&bytes));
        prop_assert_eq!(parse_tree(&render_tree(&x)).unwrap(), x);
    }

    #[test]
    fn wide_round_trip(bytes in proptest::collection::vec(any::<u8>(), 0..512)) {
        let n = BigUint::from_bytes_le(&bytes);
        let x = from_natural(&n);
        prop_assert_eq!(to_natural(&x).unwrap(), n.clone());
        prop_assert_eq!(to_natural(&succ(&x)).unwrap(), n + 1u32);
    }
}
