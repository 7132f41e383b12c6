use crsg_core::instances::enumerate_semigroups;
use crsg_core::theorems::Battery;
use crsg_core::{CrSemigroup, Semigroup};

// independent oracle: every labelled table, deduplicated by pairwise isomorphism
fn brute_force_classes(n: usize) -> Vec<Semigroup> {
    let cells = n * n;
    let mut reps: Vec<Semigroup> = Vec::new();
    for code in 0..n.pow(cells as u32) {
        let mut t = vec![0; cells];
        let mut c = code;
        for x in t.iter_mut() {
            *x = c % n;
            c /= n;
        }
        if let Ok(s) = Semigroup::from_flat(n, t, None) {
            if !reps.iter().any(|r| r.is_isomorphic(&s)) {
                reps.push(s);
            }
        }
    }
    reps
}

#[test]
fn census_matches_brute_force_up_to_order_three() {
    for n in 1..=3 {
        let census = enumerate_semigroups(n, None).unwrap();
        let oracle = brute_force_classes(n);
        assert_eq!(census.len(), oracle.len(), "order {n}");
        let cr_census = census.iter().filter(|e| e.flags.completely_regular).count();
        let cr_oracle = oracle.iter().filter(|s| s.is_completely_regular()).count();
        assert_eq!(cr_census, cr_oracle, "order {n}");
        for s in &oracle {
            assert!(census.iter().any(|e| e.semigroup.is_isomorphic(s)));
        }
    }
}

#[test]
fn census_entries_are_canonical_and_distinct() {
    let census = enumerate_semigroups(4, None).unwrap();
    assert_eq!(census.len(), 188);
    for (i, e) in census.iter().enumerate() {
        assert_eq!(e.semigroup.canonical_form().0.flat_table(), e.semigroup.flat_table());
        for f in &census[i + 1..] {
            assert!(!e.semigroup.is_isomorphic(&f.semigroup));
        }
    }
}

#[test]
fn filter_keeps_completely_regular() {
    let only = enumerate_semigroups(3, Some(&|s: &Semigroup| s.is_completely_regular())).unwrap();
    assert_eq!(only.len(), 13);
}

#[test]
fn battery_on_every_small_completely_regular_semigroup() {
    for n in 1..=4 {
        for e in enumerate_semigroups(n, None).unwrap() {
            let Ok(s) = CrSemigroup::new(e.semigroup.clone()) else { continue };
            let b = Battery::new(&s, 8).unwrap();
            for v in b.verify_all() {
                assert!(v.passed(), "{:?}: {} failed: {}", e.semigroup.rows(), v.result_id, v.witness.unwrap());
            }
        }
    }
}
