use std::collections::BTreeSet;

use corona_orbits::exactla::{PrimeField, Matrix};
use corona_orbits::matchgraph::{
    count_matchings, dual_matching, enumerate_matchings, horizontal_edges, lift_matching, quotient_matching, GraphSpec,
    Matching,
};
use corona_orbits::quiverrep::{apply_phi, direct_sum, hom_dim, indecomposable_rep, Classifier};
use corona_orbits::rootcalc::{matching_to_rootset, rootset_to_matching};
use num_bigint::BigUint;
use num_integer::binomial;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut ChaCha8Rng, field: PrimeField, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..field.q() as u8)).collect();
    Matrix::new(field, rows, cols, data).unwrap()
}

fn random_invertible(rng: &mut ChaCha8Rng, field: PrimeField, d: usize) -> Matrix {
    loop {
        let g = random_matrix(rng, field, d, d);
        if g.is_invertible() {
            return g;
        }
    }
}

#[test]
fn enumeration_matches_count() {
    for p in 0..=8 {
        for spec in [GraphSpec::plain(p), GraphSpec::double(p)] {
            for k in 0..=p {
                let listed: Vec<Matching> = enumerate_matchings(spec, k).collect();
                let distinct: BTreeSet<_> = listed.iter().cloned().collect();
                assert_eq!(distinct.len(), listed.len());
                assert_eq!(BigUint::from(listed.len()), count_matchings(spec, k), "{spec:?} k={k}");
            }
        }
    }
}

#[test]
fn duality_is_an_involution() {
    for p in 0..=7 {
        for k in 0..=p {
            for s in enumerate_matchings(GraphSpec::plain(p), k) {
                let d = dual_matching(&s).unwrap();
                assert_eq!(d.len(), p - k);
                assert_eq!(dual_matching(&d).unwrap(), s);
            }
        }
    }
}

#[test]
fn quotient_is_a_bijection() {
    for r in 1..=5 {
        for m in 0..=r {
            let lifted: Vec<Matching> = enumerate_matchings(GraphSpec::signed_for(2 * r), 2 * m)
                .filter(|s| s.is_minus_invariant() && horizontal_edges(s).is_empty())
                .collect();
            let images: BTreeSet<Matching> = lifted.iter().map(|s| quotient_matching(s).unwrap()).collect();
            let target: BTreeSet<Matching> = enumerate_matchings(GraphSpec::double(r), m).collect();
            assert_eq!(images, target, "r={r} m={m}");
            for q in &target {
                assert_eq!(quotient_matching(&lift_matching(q).unwrap()).unwrap(), *q);
            }
        }
    }
}

#[test]
fn double_counts_respect_binomial_bound() {
    for p in 0..=9 {
        for k in 0..=p {
            assert!(count_matchings(GraphSpec::double(p), k) <= binomial(BigUint::from(p * p), BigUint::from(k)));
        }
    }
}

#[test]
fn roots_round_trip() {
    for total in 0..=7 {
        for m in 0..=total {
            let n = total - m;
            let mut seen = BTreeSet::new();
            for s in enumerate_matchings(GraphSpec::plain(total), m) {
                let set = matching_to_rootset(&s, m, n).unwrap();
                assert_eq!(rootset_to_matching(&set, m, n).unwrap(), s);
                let mut key: Vec<String> = set.iter().map(ToString::to_string).collect();
                key.sort();
                assert!(seen.insert(key), "two matchings share a root set");
            }
        }
    }
}

/// The direct sum of the indecomposables of a matching classifies back to it,
/// and Hom is additive in the first argument.
#[test]
fn krull_schmidt_consistency() {
    for q in [2, 3] {
        let f = PrimeField::new(q).unwrap();
        for total in 1..=5 {
            for m in 0..=total {
                let n = total - m;
                let classifier = Classifier::shared(m, n, f).unwrap();
                for s in enumerate_matchings(GraphSpec::plain(total), m) {
                    let parts: Vec<_> = matching_to_rootset(&s, m, n)
                        .unwrap()
                        .iter()
                        .map(|r| indecomposable_rep(r, m, n, f).unwrap())
                        .collect();
                    let sum = parts[1..].iter().fold(parts[0].clone(), |acc, x| direct_sum(&acc, x).unwrap());
                    assert_eq!(classifier.classify(&sum).unwrap(), s, "q={q} {s}");
                    let probe = &parts[0];
                    let split: usize = parts.iter().map(|x| hom_dim(x, probe).unwrap()).sum();
                    assert_eq!(hom_dim(&sum, probe).unwrap(), split);
                }
            }
        }
    }
}

#[test]
fn phi_is_an_involution() {
    let f = PrimeField::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..200 {
        let d = if trial % 2 == 0 { 4 } else { 6 };
        let g = random_invertible(&mut rng, f, d);
        let once = apply_phi(&g).unwrap();
        assert_eq!(apply_phi(&once).unwrap(), g);
    }
}

#[test]
fn packed_and_dense_elimination_agree() {
    let f = PrimeField::new(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=64);
        let a = random_matrix(&mut rng, f, rows, cols);
        assert_eq!(a.rref(), a.rref_dense());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_invariant_under_invertible_action(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 5]), d in 1usize..6, k in 0usize..6) {
        let f = PrimeField::new(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&mut rng, f, k, d);
        let g = random_invertible(&mut rng, f, d);
        prop_assert_eq!(a.mul(&g).unwrap().rank(), a.rank());
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn dual_reverses_sizes(p in 0usize..8, pick in any::<prop::sample::Index>()) {
        let all: Vec<Matching> = (0..=p).flat_map(|k| enumerate_matchings(GraphSpec::plain(p), k)).collect();
        let s = pick.get(&all);
        let d = dual_matching(s).unwrap();
        prop_assert_eq!(d.len() + s.len(), p);
        prop_assert_eq!(&dual_matching(&d).unwrap(), s);
    }

    #[test]
    fn inverse_round_trips(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 5, 7]), d in 1usize..7) {
        let f = PrimeField::new(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_invertible(&mut rng, f, d);
        prop_assert_eq!(g.mul(&g.inverse().unwrap()).unwrap(), Matrix::identity(f, d));
    }
}

#[test]
fn degenerate_shapes() {
    use corona_orbits::orbitoracle::{census, DEFAULT_BUDGET};
    for q in [2, 3] {
        let f = PrimeField::new(q).unwrap();
        for (m, n) in [(0, 0), (1, 0), (0, 1), (2, 0)] {
            let r = census(m, n, f, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.total_points, 1, "({m},{n})");
            assert!(r.matches(), "({m},{n}) over F_{q}");
            let s = Classifier::shared(m, n, f).unwrap().classify_point(&corona_orbits::VarietyPoint::base(f, m, n)).unwrap();
            assert_eq!(s.len(), m);
        }
    }
}
