//! Kernels and traces of congruences and the operators derived from them.
//!
//! For a congruence `ρ` on a completely regular semigroup:
//!
//! * `ρ_t` ([`trace_least`]) and `ρ^T` ([`trace_greatest`]) are the least
//!   and greatest congruences with the same trace as `ρ`;
//! * `ρ_k` ([`kernel_least`]) and `ρ^K` ([`kernel_greatest`]) are the least
//!   and greatest congruences with the same kernel.
//!
//! Several of them come with a second formula (`*_via_*`) so that tests can
//! compare two independent routes.

use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::{
    closure_of_relation, congruence_closure, greatest_contained_congruence, saturation_congruence,
    Congruence,
};
use crate::partition::Partition;
use crate::regular::CrSemigroup;
use crate::relation::BinaryRelation;

/// Kernel and trace of a congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTrace {
    /// `{a : a ρ e for some e ∈ E(S)}`, increasing.
    pub kernel: Vec<usize>,
    /// `ρ` restricted to `E(S)`, as a partition of positions in
    /// [`CrSemigroup::idempotent_list`].
    pub trace: Partition,
}

fn check_host(s: &CrSemigroup, c: &Congruence) {
    assert_eq!(c.host(), s.fingerprint(), "congruence belongs to another semigroup");
}

/// Membership mask of `ker ρ`.
pub fn kernel_mask(s: &CrSemigroup, c: &Congruence) -> Vec<bool> {
    check_host(s, c);
    let mut has_idempotent = vec![false; c.num_classes()];
    for &e in s.idempotent_list() {
        has_idempotent[c.partition().block_of(e)] = true;
    }
    (0..s.order()).map(|a| has_idempotent[c.partition().block_of(a)]).collect()
}

pub fn kernel(s: &CrSemigroup, c: &Congruence) -> Vec<usize> {
    kernel_mask(s, c).iter().enumerate().filter(|(_, &m)| m).map(|(a, _)| a).collect()
}

pub fn trace(s: &CrSemigroup, c: &Congruence) -> Partition {
    check_host(s, c);
    c.partition().restrict(s.idempotent_list())
}

pub fn kernel_trace(s: &CrSemigroup, c: &Congruence) -> KernelTrace {
    KernelTrace { kernel: kernel(s, c), trace: trace(s, c) }
}

/// Right-hand side of the kernel-trace description of `ρ`:
/// `a⁰ tr ρ b⁰` and `ab⁻¹ ∈ ker ρ`.
pub fn reconstruct_test(s: &CrSemigroup, c: &Congruence, a: usize, b: usize) -> bool {
    check_host(s, c);
    let p = c.partition();
    let ab_inv = s.mul(a, s.inv(b));
    let in_kernel = s.idempotent_list().iter().any(|&e| p.same(ab_inv, e));
    p.same(s.zero(a), s.zero(b)) && in_kernel
}

/// `ρ_t = (ρ ∩ Θ)*`.
pub fn trace_least(s: &CrSemigroup, c: &Congruence) -> Congruence {
    check_host(s, c);
    let r = c.to_relation().intersection(&s.theta());
    closure_of_relation(s, &r)
}

/// `ρ_t = (tr ρ)*`, generated by the trace pairs alone.
pub fn trace_least_via_trace(s: &CrSemigroup, c: &Congruence) -> Congruence {
    check_host(s, c);
    let e = s.idempotent_list();
    let pairs = e
        .iter()
        .flat_map(|&x| e.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| c.same(x, y));
    congruence_closure(s, pairs)
}

/// `ρ_k = (ρ ∩ ℋ)*`.
pub fn kernel_least(s: &CrSemigroup, c: &Congruence) -> Congruence {
    check_host(s, c);
    let m = c.partition().meet(s.h());
    congruence_closure(s, m.pairs())
}

/// `ρ^T = (ρ ∨ ℋ)⁰`, with `∨` the join of equivalences.
pub fn trace_greatest(s: &CrSemigroup, c: &Congruence) -> Congruence {
    check_host(s, c);
    greatest_contained_congruence(s, &c.partition().join(s.h()))
}

/// `ρ^T = (ℋ (tr ρ) ℋ)⁰`, with the composite computed as a relation.
pub fn trace_greatest_via_composite(s: &CrSemigroup, c: &Congruence) -> Congruence {
    check_host(s, c);
    let e = s.idempotent_list();
    let tr = BinaryRelation::from_pairs(
        s.order(),
        e.iter().flat_map(|&x| e.iter().map(move |&y| (x, y))).filter(|&(x, y)| c.same(x, y)),
    );
    let h = s.h().to_relation();
    let composite = h.compose(&tr).compose(&h);
    let p = composite.to_partition().expect("ℋ tr ρ ℋ is an equivalence");
    greatest_contained_congruence(s, &p)
}

/// `ρ^K = π_{ker ρ}`.
pub fn kernel_greatest(s: &CrSemigroup, c: &Congruence) -> Congruence {
    saturation_congruence(s, &kernel(s, c))
}

/// Quotient classes for which [`relative_least`] finds the least congruence
/// containing a given one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Cryptogroup,
    EUnitary,
    Orthodox,
}

/// The least congruence containing `rho` whose quotient lies in `target`:
///
/// * cryptogroup: `ρ ∨ κ`;
/// * E-unitary: `((ρ ∨ σ) ∩ ρℋρ)*`;
/// * orthodox: `((ρ ∨ ν) ∩ ρℋρ)*`.
///
/// `ρℋρ` is the relational composite `ρ ∘ ℋ ∘ ρ`.
pub fn relative_least(s: &CrSemigroup, rho: &Congruence, target: Target) -> Congruence {
    check_host(s, rho);
    let omega = Congruence::universal(s);
    match target {
        Target::Cryptogroup => {
            let kappa = trace_least(s, &kernel_least(s, &omega));
            rho.join(&kappa).expect("same host")
        }
        Target::EUnitary | Target::Orthodox => {
            let base = if target == Target::EUnitary {
                trace_least(s, &omega)
            } else {
                trace_least(s, &Congruence::new_unchecked(s, s.d().clone()))
            };
            let joined = rho.join(&base).expect("same host").to_relation();
            let r = rho.to_relation();
            let rhr = r.compose(&s.h().to_relation()).compose(&r);
            closure_of_relation(s, &joined.intersection(&rhr))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{cyclic_group, rectangular_band};
    use crate::lattice::all_congruences;
    use alloc::string::ToString;

    fn cr(s: crate::Semigroup) -> CrSemigroup {
        CrSemigroup::new(s).unwrap()
    }

    #[test]
    fn kernel_and_trace_on_z4() {
        let z4 = cr(cyclic_group(4));
        let c = Congruence::new(&z4, Partition::from_keys(&[0, 1, 0, 1])).unwrap();
        let kt = kernel_trace(&z4, &c);
        assert_eq!(kt.kernel, vec![0, 2]);
        assert_eq!(kt.trace, Partition::discrete(1));
        assert!(reconstruct_test(&z4, &c, 1, 3));
        assert!(!reconstruct_test(&z4, &c, 0, 1));
    }

    #[test]
    fn extremes_of_kernel_and_trace() {
        let s = cr(rectangular_band(2, 2));
        let eps = Congruence::equality(&s);
        let om = Congruence::universal(&s);
        let kt = kernel_trace(&s, &eps);
        assert_eq!(kt.kernel, s.idempotent_list());
        assert!(kt.trace.is_discrete());
        let kt = kernel_trace(&s, &om);
        assert_eq!(kt.kernel.len(), 4);
        assert!(kt.trace.is_universal());
    }

    #[test]
    fn operator_examples() {
        let r22 = cr(rectangular_band(2, 2));
        let om = Congruence::universal(&r22);
        assert!(trace_least(&r22, &om).partition().is_universal());
        assert!(kernel_least(&r22, &om).partition().is_discrete());
        assert!(trace_greatest(&r22, &Congruence::equality(&r22)).partition().is_discrete());
        assert!(kernel_greatest(&r22, &Congruence::equality(&r22)).partition().is_universal());

        let z3 = cr(cyclic_group(3));
        let om = Congruence::universal(&z3);
        assert!(trace_least(&z3, &om).partition().is_discrete());
        assert!(kernel_least(&z3, &om).partition().is_universal());

        let z4 = cr(cyclic_group(4));
        assert!(trace_greatest(&z4, &Congruence::equality(&z4)).partition().is_universal());
        let z2 = cr(cyclic_group(2));
        assert!(kernel_greatest(&z2, &Congruence::equality(&z2)).partition().is_discrete());
    }

    #[test]
    fn both_routes_agree_on_every_congruence_of_z6() {
        let z6 = cr(cyclic_group(6));
        for c in &all_congruences(&z6, 8).unwrap() {
            assert_eq!(trace_least(&z6, c), trace_least_via_trace(&z6, c));
            assert_eq!(trace_greatest(&z6, c), trace_greatest_via_composite(&z6, c));
        }
    }

    #[test]
    fn relative_least_at_the_extremes() {
        let s = cr(rectangular_band(2, 2).direct_product(&cyclic_group(2)));
        let om = Congruence::universal(&s);
        for t in [Target::Cryptogroup, Target::EUnitary, Target::Orthodox] {
            assert!(relative_least(&s, &om, t).partition().is_universal(), "{t:?}");
        }
        let eps = Congruence::equality(&s);
        // a rectangular group is already cryptic, E-unitary and orthodox
        for t in [Target::Cryptogroup, Target::EUnitary, Target::Orthodox] {
            assert_eq!(relative_least(&s, &eps, t).partition().to_string(), Partition::discrete(8).to_string());
        }
    }
}
