use bifc::{LrWord, Side};
use proptest::prelude::*;

fn word(bits: u32, n: usize) -> LrWord {
    LrWord::new((0..n).map(|k| if bits >> k & 1 == 0 { Side::L } else { Side::R }).collect())
}

/// Lefts ascending, then rights descending, computed by hand.
fn naive_perm(w: &LrWord) -> Vec<usize> {
    let n = w.len();
    let mut perm: Vec<usize> = (1..=n).filter(|&p| w.at(p) == Side::L).collect();
    perm.extend((1..=n).rev().filter(|&p| w.at(p) == Side::R));
    perm
}

#[test]
fn standard_order_matches_definition() {
    for n in 0..=8 {
        for bits in 0..1u32 << n {
            let w = word(bits, n);
            assert_eq!(w.standard_order().perm(), naive_perm(&w).as_slice(), "{w}");
        }
    }
}

#[test]
fn interval_is_contiguity_in_perm() {
    for n in 1..=8 {
        for bits in 0..1u32 << n {
            let w = word(bits, n);
            let order = w.standard_order();
            let perm = naive_perm(&w);
            for set_bits in 1..1u32 << n {
                let set: Vec<usize> = (1..=n).filter(|&p| set_bits >> (p - 1) & 1 == 1).collect();
                let slots: Vec<usize> =
                    perm.iter().enumerate().filter(|(_, p)| set.contains(p)).map(|(k, _)| k).collect();
                let contiguous = slots.last().unwrap() - slots[0] + 1 == slots.len();
                assert_eq!(order.is_interval(&set), contiguous, "{w} {set:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn restriction_preserves_order(bits in 0u32..1 << 10, n in 1usize..=10, keep in 1u32..1 << 10) {
        let w = word(bits, n);
        let set: Vec<usize> = (1..=n).filter(|&p| keep >> (p - 1) & 1 == 1).collect();
        prop_assume!(!set.is_empty());
        let restricted = w.restrict(&set).unwrap();
        // Filter the big order to `set`, then rename position set[k] to k + 1.
        let filtered: Vec<usize> = w
            .standard_order()
            .perm()
            .iter()
            .filter(|p| set.contains(p))
            .map(|p| set.iter().position(|q| q == p).unwrap() + 1)
            .collect();
        prop_assert_eq!(restricted.standard_order().perm().to_vec(), filtered);
    }

    #[test]
    fn lt_agrees_with_rank(bits in 0u32..1 << 8, n in 2usize..=8, i in 1usize..=8, j in 1usize..=8) {
        prop_assume!(i <= n && j <= n && i != j);
        let order = word(bits, n).standard_order();
        prop_assert_eq!(order.lt(i, j), order.rank(i) < order.rank(j));
        prop_assert_eq!(order.lt(i, j), !order.lt(j, i));
    }
}
