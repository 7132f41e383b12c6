use crsg_core::instances::catalog;
use crsg_core::kernel_trace::{relative_least, Target};
use crsg_core::network::{min_network, Root, Word};
use crsg_core::special::{classify, named_congruences};
use crsg_core::{all_congruences, CrSemigroup};

#[test]
fn relative_least_matches_lattice_scan() {
    for (name, s) in catalog() {
        let s = CrSemigroup::new(s).unwrap();
        let lattice = all_congruences(&s, 8).unwrap();
        let reports: Vec<_> = lattice.iter().map(|c| classify(&s.quotient(c).semigroup)).collect();
        for rho in &lattice {
            for target in [Target::Cryptogroup, Target::EUnitary, Target::Orthodox] {
                let oracle = lattice
                    .least_where(|i, c| {
                        rho.is_contained_in(c)
                            && match target {
                                Target::Cryptogroup => reports[i].cryptic,
                                Target::EUnitary => reports[i].e_unitary == Some(true),
                                Target::Orthodox => reports[i].orthodox,
                            }
                    })
                    .unwrap();
                assert_eq!(relative_least(&s, rho, target), oracle, "{name} {target:?} {}", rho.partition());
            }
        }
    }
}

#[test]
fn network_aliases_name_the_named_congruences() {
    for (name, s) in catalog() {
        let s = CrSemigroup::new(s).unwrap();
        let named = named_congruences(&s).unwrap();
        let net = min_network(&s, &[Root::Universal, Root::D]).unwrap();
        for (word, key) in [("ω_t", "sigma"), ("ω_k", "beta"), ("ω_kt", "kappa"), ("ω_tk", "pi"), ("D_t", "nu"), ("D_tk", "lambda")] {
            let w = Word::parse(word).unwrap();
            assert_eq!(net.get(&w), named.get(key), "{name} {word}");
        }
        assert!(net.stabilized_depth <= crsg_core::network::MAX_DEPTH);
    }
}
