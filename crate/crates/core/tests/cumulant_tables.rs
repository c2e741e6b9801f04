use std::collections::BTreeMap;

use bifc::cumulants::{check_against_exponentials, cumulants_to_moments, moments_to_cumulants, mixed_cumulant_diagnostic};
use bifc::rational::{int, parse};
use bifc::verify::random_moments;
use bifc::{Alphabet, CumulantFamily, Letter, MomentData, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn alphabet() -> Alphabet {
    Alphabet::with_vars(&["a", "b"], &["c"]).unwrap()
}

#[test]
fn scaling_one_variable_scales_cumulants_by_its_degree() {
    let al = alphabet();
    let a = al.lookup("a").unwrap();
    let lambda = parse("-3/2").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = random_moments(&al, 4, &mut rng);
    let degree = |w: &bifc::IncompleteWord| w.letters().iter().filter(|l| matches!(l, Letter::Var(id, _) if *id == a)).count();
    let pow = |k: usize| (0..k).fold(int(1), |acc: Rational, _| acc * &lambda);
    let scaled: BTreeMap<_, _> = m.moments.iter().map(|(w, v)| (w.clone(), v * pow(degree(w)))).collect();
    let scaled = MomentData::new(al.clone(), scaled).unwrap();
    for family in CumulantFamily::ALL {
        let c = moments_to_cumulants(&m, family, 4).unwrap();
        let cs = moments_to_cumulants(&scaled, family, 4).unwrap();
        for (w, v) in &c.values {
            assert_eq!(cs.get(w).unwrap(), &(v * pow(degree(w))), "{family} `{}`", al.format(w));
        }
    }
}

#[test]
fn round_trip_and_exponentials_on_a_mixed_alphabet() {
    let al = alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let m = random_moments(&al, 4, &mut rng);
    for family in CumulantFamily::ALL {
        let c = moments_to_cumulants(&m, family, 4).unwrap();
        assert_eq!(cumulants_to_moments(&c, 4).unwrap(), m, "{family}");
    }
    let report = check_against_exponentials(&m, 4).unwrap();
    assert!(report.passed(), "{:?}", report.failures().next());
}

/// φ(c a) = φ(a) φ(c) for a left a and a right c is the defining law of a
/// bifree (and biBoolean) pair at order two, so the mixed cumulant vanishes.
#[test]
fn product_moments_have_vanishing_mixed_cumulants_at_order_two() {
    let al = Alphabet::with_vars(&["a"], &["c"]).unwrap();
    let w = |s: &str| al.parse(s).unwrap();
    let moments = BTreeMap::from([
        (w("a"), int(2)),
        (w("c"), int(3)),
        (w("a c"), int(6)),
        (w("c a"), int(6)),
        (w("a a"), int(5)),
        (w("c c"), int(10)),
    ]);
    let m = MomentData::new(al.clone(), moments).unwrap();
    for family in [CumulantFamily::Bifree, CumulantFamily::Biboolean] {
        let c = moments_to_cumulants(&m, family, 2).unwrap();
        assert_eq!(c.get(&w("a c")).unwrap(), &int(0));
        assert_eq!(c.get(&w("c a")).unwrap(), &int(0));
        assert_eq!(c.get(&w("a a")).unwrap(), &int(1));
        let report = mixed_cumulant_diagnostic(&m, family, &["a"], &["c"], 2).unwrap();
        assert!(report.independent());
    }
}
