use lcf_core::bounds::threshold_condition;
use lcf_core::constructions::{
    build_extension, build_general, evaluate_extension, extension_candidate, extension_formula, general_formula,
    witness_search, ConstructionSpec, Provenance,
};
use lcf_core::exact::{brute_force_count, evaluate_general_l, evaluate_pair_product, SearchBudget, DEFAULT_BRUTE_BUDGET};
use lcf_core::model::{canonicalize, chromatic_poly_k2n};

#[test]
fn general_formula_matches_evaluation() {
    for n in 2..=3u32 {
        for m in n + 1..=n + 4 {
            for t in 1..=3 {
                if ConstructionSpec::general(n, m, t).is_err() {
                    continue;
                }
                let la = build_general(n, m, t).unwrap();
                assert_eq!(la.y_lists.len() as u64, u64::from(n).pow(n) * u64::from(t));
                let direct = evaluate_general_l(&la.x_lists, &la.y_types(), 1 << 20).unwrap();
                assert_eq!(general_formula(n, m, t).unwrap(), direct, "n={n} m={m} t={t}");
            }
        }
    }
}

#[test]
fn general_shapes() {
    let la = build_general(2, 3, 1).unwrap();
    assert_eq!(la.y_lists.len(), 4);
    assert!(la.y_lists.iter().all(|l| l.iter().all(|c| c <= 5)));
    let la = build_general(3, 5, 1).unwrap();
    assert_eq!(la.y_lists.len(), 27);
    for y in &la.y_lists {
        assert!(y.contains(1) && y.contains(2));
        assert_eq!(y.len(), 5);
    }
    // n = 2: four types, each t times.
    let la = build_general(2, 6, 3).unwrap();
    let types = la.y_types();
    assert_eq!(types.len(), 4);
    assert!(types.iter().all(|(_, z)| *z == 3));
    assert!(build_general(3, 3, 1).is_err());
    assert!(build_general(1, 3, 1).is_err());
}

#[test]
fn extension_formula_matches_evaluation() {
    for m in 3..=5 {
        for t in 1..=3 {
            for c in 0..=3 {
                let la = build_extension(m, t, c).unwrap();
                let a = canonicalize(&la).unwrap();
                assert_eq!(a.d, m - 2);
                assert_eq!(a.n, 4 * t + c);
                let f = extension_formula(m, t, c).unwrap();
                assert_eq!(evaluate_pair_product(&a), f, "m={m} t={t} c={c}");
                assert_eq!(evaluate_general_l(&la.x_lists, &la.y_types(), 100).unwrap(), f);
            }
        }
    }
}

#[test]
fn extension_at_t1_matches_brute_force() {
    for c in 0..=3 {
        let la = build_extension(3, 1, c).unwrap();
        assert_eq!(brute_force_count(&la, DEFAULT_BRUTE_BUDGET).unwrap(), extension_formula(3, 1, c).unwrap());
    }
}

#[test]
fn specialization() {
    for m in 3..=7 {
        for t in 1..=3 {
            assert_eq!(general_formula(2, m, t).unwrap(), extension_formula(m, t, 0).unwrap());
        }
    }
    for t in 1..=3 {
        assert_eq!(build_extension(5, t, 0).unwrap(), build_general(2, 5, t).unwrap());
    }
}

#[test]
fn known_values() {
    assert_eq!(extension_formula(3, 3, 0).unwrap(), 11264u64);
    assert_eq!(general_formula(2, 3, 3).unwrap(), 11264u64);
    assert_eq!(extension_formula(3, 3, 1).unwrap(), 22400u64);
    assert_eq!(chromatic_poly_k2n(13, 3), 24582u64);
}

/// Ranges where the extension is claimed to beat the chromatic polynomial.
const EXTENSION_RANGES: [(u32, u32, u32); 3] = [(3, 12, 15), (4, 27, 31), (5, 44, 55)];

#[test]
fn extension_witnesses_in_the_claimed_ranges() {
    for (m, lo, hi) in EXTENSION_RANGES {
        for n in lo..=hi {
            let spec = extension_candidate(n, m).unwrap();
            let (a, v) = evaluate_extension(&spec).unwrap();
            let p = chromatic_poly_k2n(n, m);
            assert!(v < p, "m={m} n={n}: {v} vs {p}");
            let la = build_extension(spec.m, spec.t, spec.c).unwrap();
            assert_eq!(evaluate_general_l(&la.x_lists, &la.y_types(), 100).unwrap(), v);
            assert_eq!(evaluate_pair_product(&a), v);
        }
    }
}

#[test]
fn extension_at_the_open_cases() {
    // n = 26, m = 4 falls to the construction; n = 25 and n = 11 do not.
    let below = |n: u32, m: u32| {
        let (_, v) = evaluate_extension(&extension_candidate(n, m).unwrap()).unwrap();
        v < chromatic_poly_k2n(n, m)
    };
    assert!(below(26, 4));
    assert!(!below(25, 4));
    assert!(!below(11, 3));
    assert_eq!(extension_formula(4, 6, 2).unwrap(), 9_925_029_789_650u64);
    assert_eq!(chromatic_poly_k2n(26, 4), 10_168_268_619_684u64);
}

#[test]
fn witness_examples() {
    let b = SearchBudget::default();
    let w = witness_search(12, 3, &b).unwrap().unwrap();
    assert_eq!(w.value, 11264u64);
    let w = witness_search(44, 5, &b).unwrap().unwrap();
    assert_eq!(w.value, extension_formula(5, 11, 0).unwrap());
    assert!(matches!(w.provenance, Provenance::Construction(s) if s.t == 11 && s.c == 0));
    assert!(witness_search(10, 3, &b).unwrap().is_none());
}

#[test]
fn threshold_condition_implies_a_witness() {
    let b = SearchBudget::default();
    let mut hits = 0;
    for m in 3..=5 {
        for n in 2..=60 {
            if !threshold_condition(n, m) {
                continue;
            }
            let w = witness_search(n, m, &b).unwrap().unwrap_or_else(|| panic!("no witness at n={n} m={m}"));
            assert!(w.value < chromatic_poly_k2n(n, m));
            assert_eq!(evaluate_pair_product(&w.assignment), w.value);
            hits += 1;
        }
    }
    assert_eq!(hits, (60 - 16 + 1) + (60 - 32 + 1) + (60 - 56 + 1));
}

#[test]
fn threshold_condition_examples() {
    assert!(threshold_condition(16, 3));
    assert!(!threshold_condition(15, 3));
    assert!(threshold_condition(32, 4));
    assert!(!threshold_condition(31, 4));
    assert!(threshold_condition(56, 5));
    assert!(!threshold_condition(55, 5));
}
