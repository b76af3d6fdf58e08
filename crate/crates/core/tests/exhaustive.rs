//! Small exhaustive scans of the algebraic invariants.

use num_rational::BigRational;
use num_traits::{One, Zero};

use power_monoid::atoms::{alpha_tables, count_good_sets, verify_closed_forms, AlphaCache};
use power_monoid::divisibility::ladder_divisor_equivalence;
use power_monoid::monoid::{
    is_primal_bounded, primal_witness_interval_identity, Context, Element, NumericalMonoid,
};
use power_monoid::set::is_arithmetic_progression;
use power_monoid::stats::{moments, moments_from_table, unimodality_from_table};
use power_monoid::{divides, sumset, FiniteSet, NormalizedSet};

fn all_normalized(max: usize) -> Vec<NormalizedSet> {
    (0u64..1 << max)
        .map(|x| NormalizedSet::from_mask(x << 1 | 1).unwrap())
        .collect()
}

#[test]
fn unit_cancellative() {
    let sets = all_normalized(7);
    for b in &sets {
        for c in &sets {
            if sumset(b, c).unwrap() == *b.as_set() {
                assert!(c.is_zero(), "{b} + {c} = {b}");
            }
        }
    }
}

#[test]
fn divides_is_reflexive_and_transitive() {
    let sets = all_normalized(8);
    let divisors: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            (0..sets.len())
                .filter(|&t| divides(&sets[t], s).is_some())
                .collect()
        })
        .collect();
    for (r, ds) in divisors.iter().enumerate() {
        assert!(ds.contains(&r), "{} does not divide itself", sets[r]);
        for &s in ds {
            for &t in &divisors[s] {
                assert!(ds.contains(&t), "{} | {} | {}", sets[t], sets[s], sets[r]);
            }
        }
    }
}

#[test]
fn divisors_stay_in_the_submonoid() {
    let n = NumericalMonoid::new(&[2, 3]).unwrap();
    let sets = all_normalized(12);
    let inside = |s: &NormalizedSet| s.iter().all(|x| n.contains(x as u64));
    for s in sets.iter().filter(|s| inside(s)) {
        for t in sets.iter().filter(|t| t.max() <= s.max()) {
            if let Some(w) = divides(t, s) {
                assert!(inside(t) && inside(&w.quotient), "{t} | {s}");
            }
        }
    }
}

#[test]
fn pair_and_ladder_divisors() {
    for s in all_normalized(10) {
        for a in 1..=8 {
            for ell in 1..=4 {
                let c = ladder_divisor_equivalence(a, ell, &s).unwrap();
                assert_eq!(c.pair_divides, c.neighbour_test, "a={a} S={s}");
                assert!(!c.ladder_divides || c.pair_divides, "a={a} l={ell} S={s}");
            }
        }
    }
}

#[test]
fn sumset_size_equality_cases() {
    let sets = all_normalized(8);
    for a in sets.iter().filter(|a| a.len() >= 2) {
        let pa = is_arithmetic_progression(a).unwrap();
        for b in sets.iter().filter(|b| b.len() >= 2) {
            let equal = sumset(a, b).unwrap().len() + 1 == a.len() + b.len();
            let shared = pa.is_some() && pa == is_arithmetic_progression(b).unwrap();
            assert_eq!(equal, shared, "{a} {b}");
        }
    }
}

#[test]
fn closed_forms_up_to_eighteen() {
    for n in 1..=18 {
        assert!(verify_closed_forms(n).unwrap().all_match(), "n = {n}");
    }
}

#[test]
fn frozen_rows() {
    let rows = alpha_tables(18).unwrap();
    let totals: Vec<u64> = rows.iter().map(|t| t.total()).collect();
    assert_eq!(
        totals,
        [2, 3, 6, 11, 20, 39, 78, 155, 323, 646, 1328, 2752, 5654, 11610, 23978, 49307, 101173, 207600]
    );
    assert_eq!(
        &rows[17].counts[..],
        &[0, 1, 18, 144, 744, 2900, 7903, 17500, 29031, 39483, 41715, 34454, 21933, 9167, 2394, 213, 0, 0, 0, 0]
    );
}

#[test]
fn moment_probabilities_sum_to_one() {
    for t in alpha_tables(16).unwrap() {
        let total = BigRational::from_integer(t.total().into());
        let mut sum = BigRational::zero();
        for k in 1..=t.n + 1 {
            sum += BigRational::from_integer(t.get(k).into()) / &total;
        }
        assert!(sum.is_one(), "n = {}", t.n);
        assert_eq!(moments_from_table(&t, 0).ratio, 1.0);
    }
    let m = moments(16, 1).unwrap();
    assert!(m.distance_from_one() < moments(8, 1).unwrap().distance_from_one());
}

#[test]
fn unimodality_does_not_explode() {
    let rows = alpha_tables(16).unwrap();
    let v = |n: usize| unimodality_from_table(&rows[n - 1]).violations.len();
    assert!(v(16) <= v(8) + 2);
}

#[test]
fn good_sets_meet_the_bound_from_k_three() {
    for n in 2..=18 {
        for k in 3..=n + 1 {
            assert!(count_good_sets(n, k).unwrap().meets_lower_bound(), "n={n} k={k}");
        }
        assert_eq!(count_good_sets(n, 2).unwrap().count, 0);
    }
}

#[test]
fn restricted_primal_shadows() {
    let ctx = Context::fin0();
    for p in all_normalized(5).into_iter().skip(1) {
        let v = is_primal_bounded(&p.clone().into(), &ctx, 8).unwrap();
        let w = v.violation().unwrap_or_else(|| panic!("{p} has no violation"));
        assert!(w.verify(&ctx));
    }
}

#[test]
fn unrestricted_singletons_are_primal() {
    // {a} | B + C forces min B + min C >= a, and {i} + {a - i} then splits it
    let ctx = Context::fin();
    for a in 1..=3 {
        let p = Element::Set(FiniteSet::singleton(a).unwrap());
        assert!(!is_primal_bounded(&p, &ctx, 8).unwrap().is_violation(), "{{{a}}}");
    }
    let p = Element::Set("{1,2}".parse().unwrap());
    let v = is_primal_bounded(&p, &ctx, 8).unwrap();
    assert!(v.violation().unwrap().verify(&ctx));
}

#[test]
fn interval_identity_for_max_up_to_ten() {
    for p in all_normalized(10).into_iter().skip(1) {
        assert!(primal_witness_interval_identity(&p).unwrap().holds(), "{p}");
    }
}

#[test]
fn cache_bytes_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let rows = alpha_tables(10).unwrap();
    let a = AlphaCache::new(dir.path().join("a.csv"));
    a.store(&rows).unwrap();
    let b = AlphaCache::new(dir.path().join("b.csv"));
    b.store(&rows[5..]).unwrap();
    b.store(&rows[..5]).unwrap();
    let read = |c: &AlphaCache| std::fs::read(c.path()).unwrap();
    assert_eq!(read(&a), read(&b));
    assert_eq!(a.load().unwrap().into_values().collect::<Vec<_>>(), rows);
}
