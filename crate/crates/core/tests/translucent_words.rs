use bifc::{LrWord, Side, TranslucentWord};
use proptest::prelude::*;

fn all_of_length(n: usize) -> Vec<TranslucentWord> {
    let mut out = Vec::new();
    for a in 0..1u32 << n {
        let alpha = LrWord::new((0..n).map(|k| if a >> k & 1 == 0 { Side::L } else { Side::R }).collect());
        for m in 0..1u32 << n {
            out.push(TranslucentWord::new(alpha.clone(), (0..n).map(|k| m >> k & 1 == 1).collect()).unwrap());
        }
    }
    out
}

/// All `x` with `x.alpha() == alpha`.
fn with_alpha(alpha: &LrWord) -> Vec<TranslucentWord> {
    let n = alpha.len();
    (0..1u32 << n)
        .map(|m| TranslucentWord::new(alpha.clone(), (0..n).map(|k| m >> k & 1 == 1).collect()).unwrap())
        .collect()
}

fn arb_word(max: usize) -> impl Strategy<Value = TranslucentWord> {
    (0..=max).prop_flat_map(|n| {
        (proptest::collection::vec(any::<bool>(), n), proptest::collection::vec(any::<bool>(), n)).prop_map(
            |(sides, mask)| {
                let alpha = LrWord::new(sides.into_iter().map(|r| if r { Side::R } else { Side::L }).collect());
                TranslucentWord::new(alpha, mask).unwrap()
            },
        )
    })
}

#[test]
fn composition_is_associative() {
    let mut triples = 0;
    for n in 0..=5 {
        for s in all_of_length(n) {
            for r in with_alpha(&s.target()) {
                let rs = r.compose(&s).unwrap();
                for q in with_alpha(&r.target()) {
                    let left = q.compose(&r).unwrap().compose(&s).unwrap();
                    let right = q.compose(&rs).unwrap();
                    assert_eq!(left, right, "q = {q}, r = {r}, s = {s}");
                    triples += 1;
                }
            }
        }
    }
    assert!(triples > 10_000);
}

#[test]
fn composition_requires_matching_target() {
    let t: TranslucentWord = "LRL,010".parse().unwrap();
    // The target of t is LL.
    assert!("LL,10".parse::<TranslucentWord>().unwrap().compose(&t).is_ok());
    assert!("LR,10".parse::<TranslucentWord>().unwrap().compose(&t).is_err());
    assert!("LLL,101".parse::<TranslucentWord>().unwrap().compose(&t).is_err());
}

#[test]
fn inclusions_are_functorial() {
    // ι_t sends k to the k-th translucent position of t; ι_{s∘t} = ι_t ∘ ι_s.
    for n in 0..=5 {
        for t in all_of_length(n) {
            let iota_t = t.translucent_positions();
            for s in with_alpha(&t.target()) {
                let iota_s = s.translucent_positions();
                let composed: Vec<usize> = iota_s.iter().map(|&k| iota_t[k - 1]).collect();
                assert_eq!(s.compose(&t).unwrap().translucent_positions(), composed, "s = {s}, t = {t}");
            }
        }
    }
}

proptest! {
    #[test]
    fn factorizations_count_and_recompose(t in arb_word(8)) {
        let fs = t.factorizations();
        prop_assert_eq!(fs.len(), 1usize << t.opaque_count());
        for (r, s) in &fs {
            prop_assert_eq!(&r.compose(s).unwrap(), &t);
        }
        let mut sorted = fs.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), fs.len());
    }

    #[test]
    fn identities_are_units(t in arb_word(8)) {
        prop_assert_eq!(TranslucentWord::identity(t.target()).compose(&t).unwrap(), t.clone());
        prop_assert_eq!(t.compose(&TranslucentWord::identity(t.source())).unwrap(), t.clone());
    }

    #[test]
    fn split_covers_all_other_positions(t in arb_word(8)) {
        for i in t.translucent_positions() {
            let (a, b) = t.split(i).unwrap();
            prop_assert_eq!(a.len() + b.len() + 1, t.len());
            prop_assert_eq!(a.opaque_count() + b.opaque_count(), t.opaque_count());
        }
    }

    #[test]
    fn opaque_intervals_partition_the_opaque_positions(t in arb_word(8)) {
        let runs = t.opaque_intervals();
        let order = t.standard_order();
        let mut all: Vec<usize> = runs.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, t.opaque_positions());
        for run in &runs {
            prop_assert!(order.is_interval(run));
        }
        // Consecutive runs are separated by a translucent position.
        for pair in runs.windows(2) {
            let mut joined = pair[0].clone();
            joined.extend(&pair[1]);
            prop_assert!(!order.is_interval(&joined));
        }
    }
}
