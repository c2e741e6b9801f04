use bifc::bipartition::{compose_bipartitions, count, enumerate};
use bifc::{Bipartition, BipartitionClass, Enumeration, LrWord, Side, TranslucentWord};

/// Restricted growth strings of length n: every set partition of {0..n} once.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, n: usize, next: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=next {
            cur.push(b);
            go(cur, n, next.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, 0, &mut out);
    out
}

fn crossing(rgs: &[usize]) -> bool {
    let n = rgs.len();
    (0..n).any(|a| {
        (a + 1..n).any(|b| (b + 1..n).any(|c| (c + 1..n).any(|d| rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b])))
    })
}

fn non_interval(rgs: &[usize]) -> bool {
    let n = rgs.len();
    (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| rgs[a] == rgs[c] && rgs[a] != rgs[b])))
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn all_types(max: usize) -> Vec<TranslucentWord> {
    let mut out = Vec::new();
    for n in 0..=max {
        for a in 0..1u32 << n {
            let alpha = LrWord::new((0..n).map(|k| if a >> k & 1 == 0 { Side::L } else { Side::R }).collect());
            for m in 0..1u32 << n {
                out.push(TranslucentWord::new(alpha.clone(), (0..n).map(|k| m >> k & 1 == 1).collect()).unwrap());
            }
        }
    }
    out
}

fn plain(e: Enumeration) -> Vec<Bipartition> {
    match e {
        Enumeration::Plain(v) => v,
        Enumeration::Labeled(_) => panic!("expected unlabeled bipartitions"),
    }
}

#[test]
fn counts_on_left_words_match_brute_force() {
    for n in 1..=10 {
        let t = TranslucentWord::opaque(LrWord::new(vec![Side::L; n]));
        let parts = set_partitions(n);
        let nc = parts.iter().filter(|p| !crossing(p)).count();
        let interval = parts.iter().filter(|p| !non_interval(p)).count();
        assert_eq!(nc as u64, catalan(n as u64));
        assert_eq!(interval, 1 << (n - 1));
        assert_eq!(count(&t, BipartitionClass::Noncrossing).unwrap(), nc, "n = {n}");
        assert_eq!(count(&t, BipartitionClass::Interval).unwrap(), interval, "n = {n}");
        assert_eq!(count(&t, BipartitionClass::All).unwrap(), parts.len(), "n = {n}");
    }
}

#[test]
fn enumerations_satisfy_their_predicates() {
    for t in all_types(6) {
        for class in [BipartitionClass::All, BipartitionClass::Noncrossing, BipartitionClass::Interval] {
            let list = plain(enumerate(&t, class).unwrap());
            let mut dedup = list.clone();
            dedup.sort_by(|a, b| a.blocks().cmp(b.blocks()));
            dedup.dedup();
            assert_eq!(dedup.len(), list.len(), "{t} {class}");
            for pi in &list {
                match class {
                    BipartitionClass::Noncrossing => assert!(pi.is_noncrossing(), "{pi}"),
                    BipartitionClass::Interval => assert!(pi.is_interval(), "{pi}"),
                    _ => {}
                }
            }
        }
        let all = plain(enumerate(&t, BipartitionClass::All).unwrap());
        let nc = all.iter().filter(|p| p.is_noncrossing()).count();
        let shaded = all.iter().filter(|p| p.is_noncrossing() && p.is_shaded().unwrap()).count();
        assert_eq!(count(&t, BipartitionClass::Noncrossing).unwrap(), nc, "{t}");
        assert_eq!(count(&t, BipartitionClass::ShadedNoncrossing).unwrap(), shaded, "{t}");
        assert_eq!(count(&t, BipartitionClass::Interval).unwrap(), all.iter().filter(|p| p.is_interval()).count());
    }
}

#[test]
fn shaded_equals_noncrossing_on_opaque_types() {
    for t in all_types(7).into_iter().filter(|t| t.opaque_count() == t.len()) {
        assert_eq!(
            count(&t, BipartitionClass::ShadedNoncrossing).unwrap(),
            count(&t, BipartitionClass::Noncrossing).unwrap(),
            "{t}"
        );
    }
}

#[test]
fn shaded_bipartitions_restrict_to_opaque_runs() {
    for t in all_types(6) {
        let runs = t.opaque_intervals();
        let shaded = plain(enumerate(&t, BipartitionClass::ShadedNoncrossing).unwrap());
        for pi in &shaded {
            for block in pi.blocks() {
                assert!(runs.iter().any(|run| block.iter().all(|p| run.contains(p))), "{pi}");
            }
        }
        let product: usize = runs
            .iter()
            .map(|run| count(&t.restrict(run).unwrap(), BipartitionClass::ShadedNoncrossing).unwrap())
            .product();
        assert_eq!(shaded.len(), product, "{t}");
        // The restriction map is injective.
        let mut images: Vec<Vec<Bipartition>> =
            shaded.iter().map(|pi| runs.iter().map(|run| pi.restrict(run).unwrap()).collect()).collect();
        images.sort_by(|a, b| {
            let ka: Vec<_> = a.iter().map(|p| p.blocks().to_vec()).collect();
            let kb: Vec<_> = b.iter().map(|p| p.blocks().to_vec()).collect();
            ka.cmp(&kb)
        });
        images.dedup();
        assert_eq!(images.len(), shaded.len(), "{t}");
    }
}

#[test]
fn noncrossing_is_closed_under_composition() {
    let mut checked = 0;
    for sigma_ty in all_types(5) {
        let sigmas = plain(enumerate(&sigma_ty, BipartitionClass::Noncrossing).unwrap());
        let source = sigma_ty.target();
        let n = source.len();
        for m in 0..1u32 << n {
            let rho_ty = TranslucentWord::new(source.clone(), (0..n).map(|k| m >> k & 1 == 1).collect()).unwrap();
            for rho in plain(enumerate(&rho_ty, BipartitionClass::Noncrossing).unwrap()) {
                for sigma in &sigmas {
                    let c = compose_bipartitions(&rho, sigma).unwrap();
                    assert_eq!(c.ty(), &rho_ty.compose(&sigma_ty).unwrap());
                    assert!(c.is_noncrossing(), "{rho} ∘ {sigma} = {c}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

/// |M(t)| = Σ over ⋖-intervals I of opaque positions of |M(t without I)|:
/// the block with the largest label nests nothing, so it is such an interval.
#[test]
fn monotone_counts_follow_last_block_recursion() {
    for t in all_types(6) {
        let order = t.standard_order();
        let perm = order.perm().to_vec();
        let mut expected = if t.opaque_count() == 0 { 1 } else { 0 };
        for a in 0..perm.len() {
            for b in a..perm.len() {
                let interval: Vec<usize> = perm[a..=b].to_vec();
                if !interval.iter().all(|&p| t.is_opaque(p)) {
                    break;
                }
                let rest: Vec<usize> = (1..=t.len()).filter(|p| !interval.contains(p)).collect();
                expected += count(&t.restrict(&rest).unwrap(), BipartitionClass::Monotone).unwrap();
            }
        }
        assert_eq!(count(&t, BipartitionClass::Monotone).unwrap(), expected, "{t}");
    }
}

#[test]
fn monotone_labelings_are_monotone() {
    for t in all_types(5) {
        match enumerate(&t, BipartitionClass::Monotone).unwrap() {
            Enumeration::Labeled(list) => {
                for l in &list {
                    assert!(l.is_monotone(), "{t}");
                }
            }
            Enumeration::Plain(_) => panic!("monotone enumeration is labeled"),
        }
    }
}

#[test]
fn restriction_keeps_noncrossing() {
    for t in all_types(5) {
        for pi in plain(enumerate(&t, BipartitionClass::Noncrossing).unwrap()) {
            let keep: Vec<usize> = (0..pi.num_blocks()).step_by(2).collect();
            let thin = pi.translucidate_blocks(&keep).unwrap();
            assert_eq!(thin.num_blocks(), keep.len());
            let dropped: Vec<usize> = (0..pi.num_blocks())
                .filter(|k| !keep.contains(k))
                .flat_map(|k| pi.blocks()[k].clone())
                .collect();
            assert_eq!(thin.ty(), &t.translucidate(&dropped).unwrap());
            let firsts: Vec<usize> = (1..=t.len()).filter(|p| p % 2 == 1).collect();
            assert!(pi.restrict(&firsts).unwrap().is_noncrossing());
        }
    }
}
