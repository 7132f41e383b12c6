//! The named congruences and the classification predicates.

use alloc::vec::Vec;

use crate::congruence::{is_congruence, Congruence};
use crate::kernel_trace::{kernel, kernel_greatest, kernel_least, trace_greatest, trace_least};
use crate::network::{root_congruence, Root};
use crate::regular::CrSemigroup;
use crate::semigroup::Semigroup;
use crate::Result;

/// The named congruences of a completely regular semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCongruenceSet {
    /// least group congruence, `ω_t`
    pub sigma: Congruence,
    /// least band congruence, `ω_k`
    pub beta: Congruence,
    /// least semilattice congruence, `𝒟`
    pub eta: Congruence,
    /// least Clifford congruence, `η_t`
    pub nu: Congruence,
    /// least cryptogroup congruence, `β_t`
    pub kappa: Congruence,
    /// least E-unitary congruence, `σ_k`
    pub pi: Congruence,
    /// least orthodox congruence, `ν_k`
    pub lambda: Congruence,
    /// greatest idempotent separating congruence, `ε^T`
    pub mu: Congruence,
    /// greatest idempotent pure congruence, `ε^K`
    pub tau: Congruence,
    pub pi_t: Congruence,
    pub lambda_t: Congruence,
    pub kappa_k: Congruence,
}

/// Field names in declaration order, as used in serialized output.
pub const NAMED_CONGRUENCES: [&str; 12] =
    ["sigma", "beta", "eta", "nu", "kappa", "pi", "lambda", "mu", "tau", "pi_t", "lambda_t", "kappa_k"];

impl NamedCongruenceSet {
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Congruence)> {
        NAMED_CONGRUENCES.into_iter().zip([
            &self.sigma,
            &self.beta,
            &self.eta,
            &self.nu,
            &self.kappa,
            &self.pi,
            &self.lambda,
            &self.mu,
            &self.tau,
            &self.pi_t,
            &self.lambda_t,
            &self.kappa_k,
        ])
    }

    pub fn get(&self, name: &str) -> Option<&Congruence> {
        self.iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut Congruence> {
        Some(match name {
            "sigma" => &mut self.sigma,
            "beta" => &mut self.beta,
            "eta" => &mut self.eta,
            "nu" => &mut self.nu,
            "kappa" => &mut self.kappa,
            "pi" => &mut self.pi,
            "lambda" => &mut self.lambda,
            "mu" => &mut self.mu,
            "tau" => &mut self.tau,
            "pi_t" => &mut self.pi_t,
            "lambda_t" => &mut self.lambda_t,
            "kappa_k" => &mut self.kappa_k,
            _ => return None,
        })
    }
}

/// All twelve named congruences, through the kernel-trace operators.
pub fn named_congruences(s: &CrSemigroup) -> Result<NamedCongruenceSet> {
    let omega = Congruence::universal(s);
    let eps = Congruence::equality(s);
    let eta = root_congruence(s, Root::D)?;
    let sigma = trace_least(s, &omega);
    let beta = kernel_least(s, &omega);
    let nu = trace_least(s, &eta);
    let kappa = trace_least(s, &beta);
    let pi = kernel_least(s, &sigma);
    let lambda = kernel_least(s, &nu);
    Ok(NamedCongruenceSet {
        mu: trace_greatest(s, &eps),
        tau: kernel_greatest(s, &eps),
        pi_t: trace_least(s, &pi),
        lambda_t: trace_least(s, &lambda),
        kappa_k: kernel_least(s, &kappa),
        sigma,
        beta,
        eta,
        nu,
        kappa,
        pi,
        lambda,
    })
}

/// Structural properties of a semigroup.
///
/// Fields that only make sense for completely regular semigroups are `None`
/// on other input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ClassificationReport {
    pub completely_regular: bool,
    pub band: bool,
    pub semilattice: bool,
    pub rectangular_band: bool,
    pub group: bool,
    pub rectangular_group: bool,
    pub completely_simple: bool,
    pub cryptic: bool,
    pub orthodox: bool,
    pub orthogroup: bool,
    pub clifford: bool,
    pub e_unitary: Option<bool>,
    pub band_of_rectangular_groups: Option<bool>,
    pub ker_sigma_cryptic: Option<bool>,
    pub ker_nu_cryptic: Option<bool>,
    pub kappa_over_rectangular_bands: Option<bool>,
}

/// `a = aba` for all `a, b` in `subset` (which forces idempotence).
pub fn is_rectangular_band_on(s: &Semigroup, subset: &[usize]) -> bool {
    subset.iter().all(|&a| subset.iter().all(|&b| s.mul(s.mul(a, b), a) == a))
}

pub fn is_rectangular_band(s: &Semigroup) -> bool {
    is_rectangular_band_on(s, &(0..s.order()).collect::<Vec<_>>())
}

pub fn is_cryptic(s: &Semigroup) -> bool {
    is_congruence(s, &s.green().h).is_ok()
}

/// Completely regular with `𝒟 = ω`.
pub fn is_completely_simple(s: &Semigroup) -> bool {
    s.is_completely_regular() && s.green().d.is_universal()
}

/// `E(S)` nonempty, closed, a rectangular band, and `S` completely simple.
pub fn is_rectangular_group(s: &Semigroup) -> bool {
    let e = s.idempotents();
    !e.is_empty() && s.closure_failure(&e).is_none() && is_rectangular_band_on(s, &e) && is_completely_simple(s)
}

pub fn idempotents_closed(s: &Semigroup) -> bool {
    s.closure_failure(&s.idempotents()).is_none()
}

pub fn idempotents_central(s: &Semigroup) -> bool {
    s.idempotents().iter().all(|&e| (0..s.order()).all(|a| s.mul(e, a) == s.mul(a, e)))
}

/// The induced subsemigroup on `subset` is cryptic; false if `subset` is not closed.
pub fn is_cryptic_subset(s: &Semigroup, subset: &[usize]) -> bool {
    match s.subsemigroup(subset) {
        Ok(sub) => is_cryptic(&sub.semigroup),
        Err(_) => false,
    }
}

/// Classes of `c` that contain an idempotent, i.e. the subsemigroup classes.
pub fn idempotent_classes(s: &CrSemigroup, c: &Congruence) -> Vec<Vec<usize>> {
    let p = c.partition();
    p.blocks().into_iter().filter(|b| b.iter().any(|&x| s.is_idempotent(x))).collect()
}

/// Every class containing an idempotent contains exactly one.
pub fn over_groups(s: &CrSemigroup, c: &Congruence) -> bool {
    idempotent_classes(s, c)
        .iter()
        .all(|b| b.iter().filter(|&&x| s.is_idempotent(x)).count() == 1)
}

/// Every class containing an idempotent is a rectangular band.
pub fn over_rectangular_bands(s: &CrSemigroup, c: &Congruence) -> bool {
    idempotent_classes(s, c).iter().all(|b| is_rectangular_band_on(s, b))
}

/// `e ρ f ⇒ e = f` for idempotents.
pub fn separates_idempotents(s: &CrSemigroup, c: &Congruence) -> bool {
    let e = s.idempotent_list();
    e.iter().all(|&x| e.iter().all(|&y| x == y || !c.same(x, y)))
}

/// `ρ` saturates `E(S)`: `ker ρ = E(S)`.
pub fn saturates_idempotents(s: &CrSemigroup, c: &Congruence) -> bool {
    kernel(s, c) == s.idempotent_list()
}

pub fn classify(s: &Semigroup) -> ClassificationReport {
    let band = s.idempotents().len() == s.order();
    let cr = CrSemigroup::new(s.clone()).ok();
    let completely_regular = cr.is_some();
    let completely_simple = completely_regular && s.green().d.is_universal();
    let orthodox = s.is_regular() && idempotents_closed(s);
    let mut report = ClassificationReport {
        completely_regular,
        band,
        semilattice: band && s.is_commutative(),
        rectangular_band: is_rectangular_band(s),
        group: completely_regular && s.idempotents().len() == 1,
        rectangular_group: is_rectangular_group(s),
        completely_simple,
        cryptic: is_cryptic(s),
        orthodox,
        orthogroup: orthodox && completely_regular,
        clifford: completely_regular && idempotents_central(s),
        ..ClassificationReport::default()
    };
    if let Some(cr) = cr {
        let named = named_congruences(&cr).expect("𝒟 is a congruence on a completely regular semigroup");
        report.e_unitary = Some(saturates_idempotents(&cr, &named.sigma));
        report.band_of_rectangular_groups = Some(
            named
                .beta
                .partition()
                .blocks()
                .iter()
                .all(|b| s.subsemigroup(b).is_ok_and(|sub| is_rectangular_group(&sub.semigroup))),
        );
        report.ker_sigma_cryptic = Some(is_cryptic_subset(s, &kernel(&cr, &named.sigma)));
        report.ker_nu_cryptic = Some(is_cryptic_subset(s, &kernel(&cr, &named.nu)));
        report.kappa_over_rectangular_bands = Some(over_rectangular_bands(&cr, &named.kappa));
    }
    report
}

/// Properties of one congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruencePredicates {
    /// `ρ ⊆ ℋ`
    pub idempotent_separating: bool,
    /// `ρ ⊆ 𝔉`
    pub idempotent_pure: bool,
    pub over_groups: bool,
    pub over_rectangular_bands: bool,
    /// Classification of `S/ρ`; its fields say whether `ρ` is a group,
    /// band, cryptogroup, … congruence.
    pub quotient: ClassificationReport,
}

pub fn congruence_predicates(s: &CrSemigroup, c: &Congruence) -> CongruencePredicates {
    let rel = c.to_relation();
    CongruencePredicates {
        idempotent_separating: c.partition().refines(s.h()),
        idempotent_pure: rel.is_subset(&s.f_relation()),
        over_groups: over_groups(s, c),
        over_rectangular_bands: over_rectangular_bands(s, c),
        quotient: classify(&s.quotient(c).semigroup),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;

    fn cr(s: Semigroup) -> CrSemigroup {
        CrSemigroup::new(s).unwrap()
    }

    #[test]
    fn named_on_z2() {
        let z2 = cr(cyclic_group(2));
        let n = named_congruences(&z2).unwrap();
        assert!(n.sigma.partition().is_discrete());
        assert!(n.beta.partition().is_universal());
        assert!(n.kappa.partition().is_discrete());
        assert!(n.mu.partition().is_universal());
        assert!(n.tau.partition().is_discrete());
    }

    #[test]
    fn named_on_r22() {
        let r22 = cr(rectangular_band(2, 2));
        let n = named_congruences(&r22).unwrap();
        for c in [&n.sigma, &n.eta, &n.nu, &n.tau] {
            assert!(c.partition().is_universal());
        }
        for c in [&n.beta, &n.kappa, &n.pi, &n.lambda, &n.mu] {
            assert!(c.partition().is_discrete());
        }
    }

    #[test]
    fn classification_examples() {
        let rg = classify(&rectangular_band(2, 2).direct_product(&cyclic_group(2)));
        assert!(rg.rectangular_group && rg.cryptic && rg.orthodox);
        assert_eq!(rg.e_unitary, Some(true));

        let cs = classify(&non_orthodox_completely_simple());
        assert!(cs.completely_simple && cs.cryptic && !cs.orthodox);

        let y2 = classify(&chain_semilattice(2));
        assert!(y2.semilattice && y2.clifford && y2.orthogroup);

        let null = classify(&zero_semigroup(2));
        assert!(!null.completely_regular);
        assert_eq!(null.e_unitary, None);
        assert_eq!(null.kappa_over_rectangular_bands, None);
    }

    #[test]
    fn swap_action_is_not_cryptic() {
        let r = classify(&swap_action_semigroup());
        assert!(r.completely_regular);
        assert!(!r.cryptic);
    }

    #[test]
    fn predicates_at_the_extremes() {
        let z2 = cr(cyclic_group(2));
        let eps = congruence_predicates(&z2, &Congruence::equality(&z2));
        assert!(eps.idempotent_separating && eps.idempotent_pure && eps.over_groups);
        let om = congruence_predicates(&z2, &Congruence::universal(&z2));
        assert!(om.over_groups && !om.idempotent_pure);

        let s = cr(rectangular_band(2, 2).direct_product(&cyclic_group(2)));
        let sigma = named_congruences(&s).unwrap().sigma;
        assert!(congruence_predicates(&s, &sigma).over_rectangular_bands);
    }
}
