mod common;

use ppm::dp::LinearDp;
use ppm::oracle::{bkm_decompositions, bkm_report, brute_force_count, brute_force_enumerate};
use ppm::rng::{planted_instance, random_instance, SplitMix64};
use ppm::selftest::{all_instances, lowerbound_family};
use ppm::solver::{
    count_ppm_parallel, count_ppm_with, decomposition_family, detect_ppm_report, enumerate_guesses,
};
use ppm::{
    bkm_count, canonical_decomposition, count_ppm, count_respecting, detect_ppm, respects,
    validate_decomposition, Count, Permutation, PpmInstance,
};

/// Pascal's triangle, independent of the library's binomial.
fn pascal(max: usize) -> Vec<Vec<u128>> {
    let mut t = vec![vec![0u128; max + 1]; max + 1];
    for n in 0..=max {
        t[n][0] = 1;
        for k in 1..=n {
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
    }
    t
}

#[test]
fn family_size_and_validity_up_to_twenty() {
    let binom = pascal(20);
    for n in 1..=20 {
        for k in 1..=n {
            let guesses: Vec<_> = enumerate_guesses(n, k).unwrap().collect();
            assert_eq!(
                guesses.len() as u128,
                binom[n / 2][k / 2],
                "n = {n}, k = {k}"
            );
            assert!(
                guesses.windows(2).all(|w| w[0] < w[1]),
                "lexicographic order"
            );
            for d in decomposition_family(n, k).unwrap() {
                assert_eq!(validate_decomposition(n, d.segments()), Ok(()));
            }
        }
    }
}

#[test]
fn lowerbound_family_sizes() {
    let binom = pascal(20);
    for n in 1..=20 {
        for k in (1..=n).filter(|k| k / 2 <= (n - 1) / 2) {
            assert_eq!(
                lowerbound_family(n, k).unwrap().len() as u128,
                binom[(n - 1) / 2][k / 2]
            );
        }
    }
}

#[test]
fn every_solution_respects_exactly_its_canonical_member() {
    for inst in all_instances(6) {
        let family: Vec<_> = decomposition_family(inst.n(), inst.k()).unwrap().collect();
        for f in brute_force_enumerate(&inst).unwrap() {
            let hits: Vec<_> = family.iter().filter(|d| respects(&f, d).unwrap()).collect();
            assert_eq!(hits.len(), 1);
            assert_eq!(*hits[0], canonical_decomposition(&f, inst.n()).unwrap());
        }
    }
}

#[test]
fn exhaustive_equivalence_small() {
    for inst in all_instances(6) {
        let brute = brute_force_count(&inst).unwrap();
        assert_eq!(count_ppm(&inst), brute, "{inst:?}");
        assert_eq!(bkm_count(&inst), brute, "{inst:?}");
        assert_eq!(detect_ppm(&inst), !brute.is_zero());
    }
}

#[test]
fn random_equivalence_medium() {
    let mut rng = SplitMix64::new(7);
    for i in 0..2_000 {
        let n = 7 + rng.below(6) as usize;
        let k = 1 + rng.below(n as u64) as usize;
        let seed = rng.next_u64();
        let inst = if i % 2 == 0 {
            planted_instance(n, k, seed)
        } else {
            random_instance(n, k, seed)
        };
        let brute = brute_force_count(&inst).unwrap();
        assert_eq!(count_ppm(&inst), brute, "{inst:?}");
        assert_eq!(bkm_count(&inst), brute, "{inst:?}");
        assert_eq!(detect_ppm(&inst), !brute.is_zero());
    }
}

#[test]
fn bkm_family_covers_each_solution_once() {
    for inst in all_instances(6) {
        let family = bkm_decompositions(inst.n(), inst.k()).unwrap();
        for f in brute_force_enumerate(&inst).unwrap() {
            assert_eq!(
                family.iter().filter(|d| respects(&f, d).unwrap()).count(),
                1
            );
        }
    }
}

#[test]
fn summation_order_does_not_matter() {
    let mut rng = SplitMix64::new(3);
    for _ in 0..50 {
        let n = 10 + rng.below(10) as usize;
        let k = 2 + rng.below(6) as usize;
        let inst = planted_instance(n, k, rng.next_u64());
        let mut parts: Vec<Count> = decomposition_family(n, k)
            .unwrap()
            .map(|d| count_respecting(&inst, &d).unwrap())
            .collect();
        let forward: Count = parts.iter().sum();
        rng.shuffle(&mut parts);
        let shuffled: Count = parts.iter().sum();
        let halves: Count = {
            let (a, b) = parts.split_at(parts.len() / 2);
            b.iter().sum::<Count>() + a.iter().sum::<Count>()
        };
        assert_eq!(forward, count_ppm(&inst));
        assert_eq!(shuffled, forward);
        assert_eq!(halves, forward);
        for threads in [2, 5, 16] {
            assert_eq!(count_ppm_parallel(&inst, threads), forward);
        }
    }
}

#[test]
fn counts_beyond_oracle_reach() {
    // Identity pattern in identity text: binom(n, k) occurrences.
    let inst = PpmInstance::new(Permutation::identity(40), Permutation::identity(6)).unwrap();
    assert_eq!(count_ppm(&inst), 3_838_380);
    assert_eq!(bkm_count(&inst), 3_838_380);

    let reversed = Permutation::new((1..=30).rev().collect()).unwrap();
    let inst = PpmInstance::new(reversed, Permutation::identity(2)).unwrap();
    assert_eq!(count_ppm(&inst), 0);
    assert!(!detect_ppm(&inst));
}

#[test]
fn nine_point_instance_matches_oracle() {
    let sigma = ppm::parse_permutation("8 1 3 9 5 4 2 7 6").unwrap();
    let pattern = ppm::parse_permutation("5 2 3 1 4").unwrap();
    let inst = PpmInstance::new(sigma, pattern).unwrap();
    let brute = brute_force_count(&inst).unwrap();
    assert!(brute >= Count::ONE);
    assert_eq!(count_ppm(&inst), brute);
    assert_eq!(bkm_count(&inst), brute);

    let d =
        ppm::SegmentDecomposition::new(9, vec![(1, 2), (2, 3), (3, 6), (6, 7), (7, 9)]).unwrap();
    let sols = brute_force_enumerate(&inst).unwrap();
    let expect = sols.iter().filter(|f| respects(f, &d).unwrap()).count() as u64;
    assert!(sols.iter().any(|f| f.as_slice() == [1, 3, 5, 7, 9]));
    assert!(expect >= 1);
    assert_eq!(count_respecting(&inst, &d).unwrap(), expect);
}

#[test]
fn detection_stops_early_on_planted_instances() {
    let mut rng = SplitMix64::new(12);
    let mut early = 0;
    for _ in 0..100 {
        let inst = planted_instance(24, 8, rng.next_u64());
        let r = detect_ppm_report(&inst, &mut LinearDp::new());
        assert!(r.found);
        let family = ppm::solver::family_size(24, 8).unwrap();
        assert!(r.decompositions_examined <= family);
        early += (r.decompositions_examined < family) as u32;
    }
    assert!(early > 90);
}

#[test]
fn bkm_reports_surviving_guesses() {
    let inst = planted_instance(10, 5, 1);
    let r = bkm_report(&inst, &mut LinearDp::new());
    assert_eq!(
        r.decompositions,
        bkm_decompositions(10, 5).unwrap().len() as u128
    );
    assert_eq!(r.count, count_ppm_with(&inst, &mut LinearDp::new()));
}
