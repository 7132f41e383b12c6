use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::verdict::{Outcome, ResultId, Verdict, Witness};
use crate::congruence::{closure_of_relation, is_congruence, Congruence};
use crate::kernel_trace::{
    kernel, kernel_greatest, kernel_least, reconstruct_test, trace, trace_greatest, trace_greatest_via_composite,
    trace_least, trace_least_via_trace,
};
use crate::lattice::{all_congruences, CongruenceLattice};
use crate::network::{min_network, Root, Word};
use crate::partition::Partition;
use crate::regular::CrSemigroup;
use crate::relation::BinaryRelation;
use crate::semigroup::Semigroup;
use crate::special::{
    classify, is_cryptic_subset, is_rectangular_group, named_congruences, over_groups, over_rectangular_bands,
    separates_idempotents, ClassificationReport, NamedCongruenceSet,
};
use crate::Result;

// cached per lattice member
struct Info {
    kernel: Vec<usize>,
    trace: Partition,
    quotient: ClassificationReport,
}

enum Status {
    Holds,
    Vacuous(&'static str),
    Noted(Option<Witness>),
}

type Check = core::result::Result<Status, Witness>;

/// Evaluates [`ResultId`]s on one completely regular semigroup.
pub struct Battery<'a> {
    s: &'a CrSemigroup,
    named: NamedCongruenceSet,
    lattice: CongruenceLattice,
    info: Vec<Info>,
    h: BinaryRelation,
    theta: BinaryRelation,
    f: BinaryRelation,
    y: BinaryRelation,
}

fn equal(left: String, l: &Partition, right: String, r: &Partition) -> core::result::Result<(), Witness> {
    match l.distinguishing_pair(r) {
        None => Ok(()),
        Some(pair) => {
            Err(Witness::Unequal { left, right, left_value: l.clone(), right_value: r.clone(), pair })
        }
    }
}

fn contained(sub: &str, p: &Partition, sup: &str, q: &Partition) -> core::result::Result<(), Witness> {
    match p.pair_outside(q) {
        None => Ok(()),
        Some(pair) => Err(Witness::NotContained {
            sub: String::from(sub),
            sup: String::from(sup),
            sub_value: p.clone(),
            sup_value: q.clone(),
            pair,
        }),
    }
}

fn relations_equal(
    statement: &str,
    rho: Option<&Partition>,
    l: &BinaryRelation,
    r: &BinaryRelation,
) -> core::result::Result<(), Witness> {
    match l.pairs().find(|&(a, b)| !r.contains(a, b)).or_else(|| r.pairs().find(|&(a, b)| !l.contains(a, b))) {
        None => Ok(()),
        Some((a, b)) => Err(Witness::Pair {
            statement: String::from(statement),
            rho: rho.cloned(),
            pair: (a, b),
            expected: l.contains(a, b),
            found: r.contains(a, b),
        }),
    }
}

fn agree(rho: Option<&Partition>, values: Vec<bool>) -> core::result::Result<(), Witness> {
    if values.iter().all(|&v| v == values[0]) {
        Ok(())
    } else {
        Err(Witness::Conditions { rho: rho.cloned(), values })
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn is_identity(r: &BinaryRelation) -> bool {
    r.pairs().all(|(a, b)| a == b)
}

/// `β ∩ Θ` style conditions: the raw relation is an equivalence and compatible.
fn relation_is_congruence(s: &Semigroup, r: &BinaryRelation) -> bool {
    r.to_partition().is_some_and(|p| is_congruence(s, &p).is_ok())
}

impl<'a> Battery<'a> {
    /// Computes the named congruences and the congruence lattice (bounded by
    /// `bound` on the order) of `s`.
    pub fn new(s: &'a CrSemigroup, bound: usize) -> Result<Self> {
        let lattice = all_congruences(s, bound)?;
        let named = named_congruences(s)?;
        let info = lattice
            .iter()
            .map(|c| Info {
                kernel: kernel(s, c),
                trace: trace(s, c),
                quotient: classify(&s.quotient(c).semigroup),
            })
            .collect();
        Ok(Battery {
            s,
            named,
            lattice,
            info,
            h: s.h().to_relation(),
            theta: s.theta(),
            f: s.f_relation(),
            y: s.y_relation(),
        })
    }

    pub fn semigroup(&self) -> &CrSemigroup {
        self.s
    }

    pub fn named(&self) -> &NamedCongruenceSet {
        &self.named
    }

    /// Replaces named congruences for fault injection. Verdicts computed
    /// afterwards reason about the replaced values.
    pub fn named_mut(&mut self) -> &mut NamedCongruenceSet {
        &mut self.named
    }

    pub fn lattice(&self) -> &CongruenceLattice {
        &self.lattice
    }

    pub fn verify_all(&self) -> Vec<Verdict> {
        ResultId::ALL.iter().map(|&id| self.verify(id)).collect()
    }

    pub fn verify(&self, id: ResultId) -> Verdict {
        let check = match id {
            ResultId::LemmaTheta => self.lemma_theta(),
            ResultId::LemmaCon => self.lemma_con(),
            ResultId::LemmaExtreme => self.lemma_extreme(),
            ResultId::NamedOracles => self.named_oracles(),
            ResultId::LemmaKcg => self.lemma_kcg(),
            ResultId::LemmaKcgNonorthodox => self.lemma_kcg_nonorthodox(),
            ResultId::CorollaryMu => self.corollary_mu(),
            ResultId::TheoremSigmacg => self.theorem_cg(false),
            ResultId::PropRho => self.prop_rho(),
            ResultId::PropSigmacgc => self.prop_cgc(false),
            ResultId::CorollaryPit => self.corollary_least(id),
            ResultId::TheoremNucg => self.theorem_cg(true),
            ResultId::PropNucgc => self.prop_cgc(true),
            ResultId::CorollaryLambdat => self.corollary_least(id),
            ResultId::PropBrecg => self.prop_brecg(),
            ResultId::LemmaFtheta => self.lemma_ftheta(),
            ResultId::TheoremKorecb => self.theorem_korecb(),
            ResultId::PropKorecbc => self.prop_korecbc(),
            ResultId::CorollaryKappak => self.corollary_least(id),
            ResultId::PropMeet => self.prop_meet(),
            ResultId::PropUnion => self.prop_union(),
            ResultId::LemmaOt => self.lemma_ot(),
            ResultId::TheoremOrthogroup => self.theorem_orthogroup(),
            ResultId::Figure1Identities => self.figure_identities(),
            ResultId::GreenRestriction => self.green_restriction(),
        };
        match check {
            Ok(Status::Holds) => Verdict::holds(id),
            Ok(Status::Vacuous(h)) => Verdict::vacuous(id, h),
            Ok(Status::Noted(witness)) => Verdict { result_id: id, outcome: Outcome::Noted, witness },
            Err(w) => Verdict::fails(id, w),
        }
    }

    /// The individual truth values of the conditions of an equivalence
    /// theorem about `S` itself, in the order they are stated.
    pub fn conditions(&self, id: ResultId) -> Option<Vec<bool>> {
        match id {
            ResultId::TheoremSigmacg => Some(self.cg_conditions(false)),
            ResultId::TheoremNucg => Some(self.cg_conditions(true)),
            ResultId::TheoremKorecb => Some(self.korecb_conditions()),
            ResultId::TheoremOrthogroup => Some(self.orthogroup_conditions()),
            _ => None,
        }
    }

    // ---- helpers ----

    fn n(&self) -> usize {
        self.s.order()
    }

    fn members(&self) -> impl Iterator<Item = (usize, &Congruence)> {
        self.lattice.iter().enumerate()
    }

    fn least(&self, property: &str, pred: impl Fn(usize) -> bool) -> core::result::Result<Congruence, Witness> {
        self.lattice
            .least_where(|i, _| pred(i))
            .ok_or_else(|| Witness::NoExtremum { property: format!("least {property}") })
    }

    fn greatest(&self, property: &str, pred: impl Fn(usize) -> bool) -> core::result::Result<Congruence, Witness> {
        self.lattice
            .greatest_where(|i, _| pred(i))
            .ok_or_else(|| Witness::NoExtremum { property: format!("greatest {property}") })
    }

    /// Cached data of `c`, which must be a genuine congruence.
    fn info_of(&self, name: &str, c: &Partition) -> core::result::Result<&Info, Witness> {
        if let Some(i) = self.lattice.position(c) {
            return Ok(&self.info[i]);
        }
        Err(match is_congruence(self.s, c) {
            Err(w) => Witness::NotCongruence {
                name: String::from(name),
                partition: c.clone(),
                a: w.a,
                b: w.b,
                c: w.c,
                left: w.left,
            },
            Ok(()) => Witness::NoExtremum { property: format!("{name} missing from the lattice") },
        })
    }

    fn cong(&self, p: Partition) -> Congruence {
        Congruence::new_unchecked(self.s, p)
    }

    fn kernel_of(&self, p: &Partition) -> Vec<usize> {
        kernel(self.s, &self.cong(p.clone()))
    }

    fn trace_of(&self, p: &Partition) -> Partition {
        p.restrict(self.s.idempotent_list())
    }

    /// `((ρ ∨ base) ∩ ρℋρ)*`
    fn relative(&self, rho: &Partition, base: &Partition) -> Partition {
        let r = rho.to_relation();
        let rhr = r.compose(&self.h).compose(&r);
        let joined = rho.join(base).to_relation();
        closure_of_relation(self.s, &joined.intersection(&rhr)).into_partition()
    }

    fn blocks_are_rectangular_groups(&self, p: &Partition) -> bool {
        p.blocks()
            .iter()
            .all(|b| self.s.subsemigroup(b).is_ok_and(|sub| is_rectangular_group(&sub.semigroup)))
    }

    // ---- verifiers ----

    fn lemma_theta(&self) -> Check {
        let m = self.h.intersection(&self.theta);
        let offending = m.pairs().find(|&(a, b)| a != b);
        match offending {
            None => Ok(Status::Holds),
            Some(pair) => Err(Witness::Pair {
                statement: String::from("ℋ ∩ Θ = ε"),
                rho: None,
                pair,
                expected: false,
                found: true,
            }),
        }
    }

    fn lemma_con(&self) -> Check {
        for (_, c) in self.members() {
            for a in 0..self.n() {
                for b in 0..self.n() {
                    let found = reconstruct_test(self.s, c, a, b);
                    if found != c.same(a, b) {
                        return Err(Witness::Pair {
                            statement: String::from("a ρ b ⟺ a⁰ tr ρ b⁰ and ab⁻¹ ∈ ker ρ"),
                            rho: Some(c.partition().clone()),
                            pair: (a, b),
                            expected: c.same(a, b),
                            found,
                        });
                    }
                }
            }
        }
        Ok(Status::Holds)
    }

    fn lemma_extreme(&self) -> Check {
        let s = self.s;
        for (i, c) in self.members() {
            let p = c.partition();
            let same_trace = |j: usize| self.info[j].trace == self.info[i].trace;
            let same_kernel = |j: usize| self.info[j].kernel == self.info[i].kernel;
            let lt = self.least("with the same trace", same_trace)?;
            let lk = self.least("with the same kernel", same_kernel)?;
            let gt = self.greatest("with the same trace", same_trace)?;
            let gk = self.greatest("with the same kernel", same_kernel)?;
            let oracle = |what: &str| format!("{what} over the lattice for ρ={p}");
            let f = |what: &str| format!("{what} for ρ={p}");
            equal(f("(ρ ∩ Θ)*"), trace_least(s, c).partition(), oracle("least same trace"), lt.partition())?;
            equal(f("(tr ρ)*"), trace_least_via_trace(s, c).partition(), oracle("least same trace"), lt.partition())?;
            equal(f("(ρ ∩ ℋ)*"), kernel_least(s, c).partition(), oracle("least same kernel"), lk.partition())?;
            equal(f("(ρ ∨ ℋ)⁰"), trace_greatest(s, c).partition(), oracle("greatest same trace"), gt.partition())?;
            equal(
                f("(ℋ tr ρ ℋ)⁰"),
                trace_greatest_via_composite(s, c).partition(),
                oracle("greatest same trace"),
                gt.partition(),
            )?;
            equal(f("π_{ker ρ}"), kernel_greatest(s, c).partition(), oracle("greatest same kernel"), gk.partition())?;
        }
        Ok(Status::Holds)
    }

    fn named_oracles(&self) -> Check {
        let q = |i: usize| &self.info[i].quotient;
        let idempotents = self.s.idempotent_list();
        let n = &self.named;
        let checks: [(&str, &Congruence, core::result::Result<Congruence, Witness>); 12] = [
            ("σ", &n.sigma, self.least("group congruence", |i| q(i).group)),
            ("β", &n.beta, self.least("band congruence", |i| q(i).band)),
            ("η", &n.eta, self.least("semilattice congruence", |i| q(i).semilattice)),
            ("ν", &n.nu, self.least("Clifford congruence", |i| q(i).clifford)),
            ("κ", &n.kappa, self.least("cryptogroup congruence", |i| q(i).cryptic)),
            ("π", &n.pi, self.least("E-unitary congruence", |i| q(i).e_unitary == Some(true))),
            ("λ", &n.lambda, self.least("orthodox congruence", |i| q(i).orthodox)),
            ("μ", &n.mu, self.greatest("idempotent separating congruence", |i| self.info[i].trace.is_discrete())),
            ("τ", &n.tau, self.greatest("idempotent pure congruence", |i| self.info[i].kernel == idempotents)),
            ("π_t", &n.pi_t, self.least("with ker σ of the quotient cryptic", |i| q(i).ker_sigma_cryptic == Some(true))),
            (
                "λ_t",
                &n.lambda_t,
                self.least("with ker ν of the quotient cryptic", |i| q(i).ker_nu_cryptic == Some(true)),
            ),
            (
                "κ_k",
                &n.kappa_k,
                self.least("with κ of the quotient over rectangular bands", |i| {
                    q(i).kappa_over_rectangular_bands == Some(true)
                }),
            ),
        ];
        for (name, value, oracle) in checks {
            equal(String::from(name), value.partition(), format!("lattice oracle for {name}"), oracle?.partition())?;
        }
        Ok(Status::Holds)
    }

    /// Conditions (1)–(8) on `ρ` from the orthodox-kernel characterization.
    fn kcg_conditions(&self, rho: &Partition) -> Vec<bool> {
        let s = self.s;
        let mu = self.named.mu.partition();
        let ker = self.kernel_of(rho);
        let rk = kernel_least(s, &self.cong(rho.clone()));
        vec![
            is_cryptic_subset(s, &ker),
            is_subset(&ker, &self.kernel_of(mu)),
            rho.meet(s.h()) == rho.meet(mu),
            is_congruence(s, &rho.meet(s.h())).is_ok(),
            rk.partition().refines(mu),
            trace_least(s, &rk).partition().is_discrete(),
            is_identity(&rk.to_relation().intersection(&self.theta)),
            over_groups(s, &rk),
        ]
    }

    fn lemma_kcg(&self) -> Check {
        let mut any = false;
        for (i, c) in self.members() {
            if self.info[i].quotient.orthodox {
                any = true;
                agree(Some(c.partition()), self.kcg_conditions(c.partition()))?;
            }
        }
        Ok(if any { Status::Holds } else { Status::Vacuous("no orthodox congruence") })
    }

    fn lemma_kcg_nonorthodox(&self) -> Check {
        let mut any = false;
        for (i, c) in self.members() {
            if !self.info[i].quotient.orthodox {
                any = true;
                let values = self.kcg_conditions(c.partition())[1..].to_vec();
                if let Err(w) = agree(Some(c.partition()), values) {
                    return Ok(Status::Noted(Some(w)));
                }
            }
        }
        Ok(if any { Status::Holds } else { Status::Vacuous("no non-orthodox congruence") })
    }

    fn corollary_mu(&self) -> Check {
        let mu = self.named.mu.partition();
        let info = self.info_of("μ", mu)?;
        if !info.quotient.orthodox {
            return Ok(Status::Vacuous("μ is not orthodox"));
        }
        agree(Some(mu), vec![true, is_cryptic_subset(self.s, &info.kernel)])?;
        Ok(Status::Holds)
    }

    /// The two nine-condition theorems; `nu` selects `ν, λ, λ_t, orthodox`
    /// over `σ, π, π_t, E-unitary`.
    fn theorem_cg(&self, nu: bool) -> Check {
        agree(None, self.cg_conditions(nu))?;
        Ok(Status::Holds)
    }

    fn cg_conditions(&self, nu: bool) -> Vec<bool> {
        let s = self.s;
        let n = &self.named;
        let (base, lower, lower_t) =
            if nu { (&n.nu, &n.lambda, &n.lambda_t) } else { (&n.sigma, &n.pi, &n.pi_t) };
        let (base, lower) = (base.partition(), lower.partition());
        let mu = n.mu.partition();
        let ker = self.kernel_of(base);
        let exists = self.members().any(|(i, c)| {
            let q = &self.info[i].quotient;
            separates_idempotents(s, c) && if nu { q.orthodox } else { q.e_unitary == Some(true) }
        });
        vec![
            is_cryptic_subset(s, &ker),
            is_subset(&ker, &self.kernel_of(mu)),
            base.meet(s.h()) == base.meet(mu),
            is_congruence(s, &base.meet(s.h())).is_ok(),
            lower.refines(mu),
            lower_t.partition().is_discrete(),
            exists,
            is_identity(&lower.to_relation().intersection(&self.theta)),
            over_groups(s, &self.cong(lower.clone())),
        ]
    }

    fn prop_rho(&self) -> Check {
        let s = self.s;
        let n = &self.named;
        for (_, c) in self.members() {
            let rho = c.partition();
            let contains = |j: usize| rho.refines(self.lattice.get(j).partition());
            let kappa_rho = rho.join(n.kappa.partition());
            let pi_rho = self.relative(rho, n.sigma.partition());
            let lambda_rho = self.relative(rho, n.nu.partition());
            let q = |j: usize| &self.info[j].quotient;
            let ok = self.least("cryptogroup congruence containing ρ", |j| contains(j) && q(j).cryptic)?;
            let oe = self.least("E-unitary congruence containing ρ", |j| contains(j) && q(j).e_unitary == Some(true))?;
            let oo = self.least("orthodox congruence containing ρ", |j| contains(j) && q(j).orthodox)?;
            let f = |what: &str| format!("{what} for ρ={rho}");
            equal(f("ρ ∨ κ"), &kappa_rho, f("least cryptogroup congruence ⊇ ρ"), ok.partition())?;
            equal(f("((ρ ∨ σ) ∩ ρℋρ)*"), &pi_rho, f("least E-unitary congruence ⊇ ρ"), oe.partition())?;
            equal(f("((ρ ∨ ν) ∩ ρℋρ)*"), &lambda_rho, f("least orthodox congruence ⊇ ρ"), oo.partition())?;

            // the same congruences computed inside S/ρ and pulled back
            let quotient = s.quotient(c);
            let qs = CrSemigroup::new(quotient.semigroup).map_err(|_| Witness::NoExtremum {
                property: format!("S/ρ completely regular for ρ={rho}"),
            })?;
            let qn = named_congruences(&qs).map_err(|_| Witness::NoExtremum {
                property: format!("𝒟 a congruence on S/ρ for ρ={rho}"),
            })?;
            let back = |x: &Congruence| x.partition().pullback(&quotient.projection);
            equal(f("κ of S/ρ pulled back"), &back(&qn.kappa), f("ρ ∨ κ"), &kappa_rho)?;
            equal(f("π of S/ρ pulled back"), &back(&qn.pi), f("((ρ ∨ σ) ∩ ρℋρ)*"), &pi_rho)?;
            equal(f("λ of S/ρ pulled back"), &back(&qn.lambda), f("((ρ ∨ ν) ∩ ρℋρ)*"), &lambda_rho)?;
        }
        Ok(Status::Holds)
    }

    fn prop_cgc(&self, nu: bool) -> Check {
        let s = self.s;
        let base = if nu { self.named.nu.partition() } else { self.named.sigma.partition() };
        for (i, c) in self.members() {
            let rho = c.partition();
            let lower = self.relative(rho, base);
            let q = &self.info[i].quotient;
            let cryptic = if nu { q.ker_nu_cryptic } else { q.ker_sigma_cryptic };
            let values = vec![
                cryptic == Some(true),
                lower.refines(trace_greatest(s, c).partition()),
                self.trace_of(&lower) == self.info[i].trace,
            ];
            agree(Some(rho), values)?;
        }
        Ok(Status::Holds)
    }

    /// The three "least congruence" corollaries: the operator word and the
    /// lattice oracle both match the named value.
    fn corollary_least(&self, id: ResultId) -> Check {
        let s = self.s;
        let q = |i: usize| &self.info[i].quotient;
        let omega = Congruence::universal(s);
        let (name, named, word, oracle) = match id {
            ResultId::CorollaryPit => (
                "π_t",
                &self.named.pi_t,
                trace_least(s, &kernel_least(s, &trace_least(s, &omega))),
                self.least("with ker σ of the quotient cryptic", |i| q(i).ker_sigma_cryptic == Some(true))?,
            ),
            ResultId::CorollaryLambdat => {
                let d = self.cong(s.d().clone());
                (
                    "λ_t",
                    &self.named.lambda_t,
                    trace_least(s, &kernel_least(s, &trace_least(s, &d))),
                    self.least("with ker ν of the quotient cryptic", |i| q(i).ker_nu_cryptic == Some(true))?,
                )
            }
            _ => (
                "κ_k",
                &self.named.kappa_k,
                kernel_least(s, &trace_least(s, &kernel_least(s, &omega))),
                self.least("with κ of the quotient over rectangular bands", |i| {
                    q(i).kappa_over_rectangular_bands == Some(true)
                })?,
            ),
        };
        let word_name = match id {
            ResultId::CorollaryPit => "((ω_t)_k)_t",
            ResultId::CorollaryLambdat => "((𝒟_t)_k)_t",
            _ => "((ω_k)_t)_k",
        };
        equal(String::from(name), named.partition(), String::from(word_name), word.partition())?;
        equal(String::from(name), named.partition(), format!("lattice oracle for {name}"), oracle.partition())?;
        Ok(Status::Holds)
    }

    fn prop_brecg(&self) -> Check {
        if !over_rectangular_bands(self.s, &self.named.kappa) {
            return Ok(Status::Vacuous("κ is not over rectangular bands"));
        }
        let beta = self.named.beta.partition();
        for b in beta.blocks() {
            if let Some((x, y)) = self.s.closure_failure(&b) {
                return Err(Witness::NotClosed { subset: b, a: x, b: y });
            }
        }
        agree(Some(beta), vec![true, self.blocks_are_rectangular_groups(beta)])?;
        Ok(Status::Holds)
    }

    fn lemma_ftheta(&self) -> Check {
        let beta = self.named.beta.partition();
        if !self.blocks_are_rectangular_groups(beta) {
            return Ok(Status::Vacuous("not a band of rectangular groups"));
        }
        let b = beta.to_relation();
        relations_equal("β ∩ 𝔉 = β ∩ Θ", Some(beta), &b.intersection(&self.f), &b.intersection(&self.theta))?;
        Ok(Status::Holds)
    }

    fn theorem_korecb(&self) -> Check {
        agree(None, self.korecb_conditions())?;
        Ok(Status::Holds)
    }

    fn korecb_conditions(&self) -> Vec<bool> {
        let s = self.s;
        let n = &self.named;
        let (kappa, beta, tau) = (n.kappa.partition(), n.beta.partition(), n.tau.partition());
        let b = beta.to_relation();
        let (bf, bt, btau) = (b.intersection(&self.f), b.intersection(&self.theta), b.intersection(&tau.to_relation()));
        let idempotents = s.idempotent_list();
        let exists = self
            .members()
            .any(|(i, _)| self.info[i].kernel == idempotents && self.info[i].quotient.cryptic);
        vec![
            over_rectangular_bands(s, &n.kappa),
            bf == bt && bt == btau,
            relation_is_congruence(s, &bt),
            kappa.meet(s.h()).is_discrete(),
            kappa.refines(tau),
            n.kappa_k.partition().is_discrete(),
            exists,
            kappa.to_relation().is_subset(&self.f),
            self.blocks_are_rectangular_groups(beta) && self.trace_of(beta).refines(&self.trace_of(tau)),
            kappa.to_relation().is_subset(&self.y),
        ]
    }

    fn prop_korecbc(&self) -> Check {
        let s = self.s;
        for (i, c) in self.members() {
            let rho = c.partition();
            let upper = kernel_greatest(s, c);
            let upper_info = self.info_of("ρ^K", upper.partition())?;
            let values = vec![
                self.info[i].quotient.kappa_over_rectangular_bands == Some(true),
                upper_info.quotient.cryptic,
                self.kernel_of(&rho.join(self.named.kappa.partition())) == self.info[i].kernel,
            ];
            agree(Some(rho), values)?;
        }
        Ok(Status::Holds)
    }

    fn prop_meet(&self) -> Check {
        let n = &self.named;
        let meet = n.kappa.partition().meet(n.pi.partition());
        let join = n.pi_t.partition().join(n.kappa_k.partition());
        equal(String::from("κ ∩ π"), &meet, String::from("π_t ∨ κ_k"), &join)?;
        let q = |i: usize| &self.info[i].quotient;
        let oracle = self.least("with ker σ cryptic and κ over rectangular bands in the quotient", |i| {
            q(i).ker_sigma_cryptic == Some(true) && q(i).kappa_over_rectangular_bands == Some(true)
        })?;
        equal(String::from("κ ∩ π"), &meet, String::from("lattice oracle"), oracle.partition())?;
        Ok(Status::Holds)
    }

    fn prop_union(&self) -> Check {
        let s = self.s;
        if !over_rectangular_bands(s, &self.named.kappa) {
            return Ok(Status::Vacuous("κ is not over rectangular bands"));
        }
        let n = self.n();
        let mut keys = vec![(0usize, 0usize); n];
        for (bi, block) in self.named.beta.partition().blocks().into_iter().enumerate() {
            let sub = s.subsemigroup(&block).map_err(|_| {
                let (a, b) = s.closure_failure(&block).unwrap_or((block[0], block[0]));
                Witness::NotClosed { subset: block.clone(), a, b }
            })?;
            // least group congruence of the class, by its own lattice
            let lattice = all_congruences(&sub.semigroup, usize::MAX).expect("no bound");
            let sigma_alpha = lattice
                .least_where(|_, c| classify(&sub.semigroup.quotient(c).semigroup).group)
                .ok_or_else(|| Witness::NoExtremum { property: String::from("least group congruence of a β-class") })?;
            for (local, &x) in sub.embedding.iter().enumerate() {
                keys[x] = (bi, sigma_alpha.partition().block_of(local));
            }
        }
        let union = Partition::from_keys(&keys);
        equal(String::from("κ"), self.named.kappa.partition(), String::from("⋃ σ_α"), &union)?;
        Ok(Status::Holds)
    }

    fn lemma_ot(&self) -> Check {
        if !(crate::special::idempotents_closed(self.s)) {
            return Ok(Status::Vacuous("not an orthogroup"));
        }
        for (_, c) in self.members() {
            let rho = c.partition();
            let via_f = closure_of_relation(self.s, &c.to_relation().intersection(&self.f));
            equal(
                format!("ρ_t for ρ={rho}"),
                trace_least(self.s, c).partition(),
                format!("(ρ ∩ 𝔉)* for ρ={rho}"),
                via_f.partition(),
            )?;
        }
        Ok(Status::Holds)
    }

    fn theorem_orthogroup(&self) -> Check {
        agree(None, self.orthogroup_conditions())?;
        Ok(Status::Holds)
    }

    fn orthogroup_conditions(&self) -> Vec<bool> {
        let s = self.s;
        let n = &self.named;
        let (d, nu, tau) = (n.eta.partition(), n.nu.partition(), n.tau.partition());
        let dr = d.to_relation();
        let (df, dt, dtau) = (dr.intersection(&self.f), dr.intersection(&self.theta), dr.intersection(&tau.to_relation()));
        let idempotents = s.idempotent_list();
        let exists = self
            .members()
            .any(|(i, _)| self.info[i].kernel == idempotents && self.info[i].quotient.clifford);
        vec![
            crate::special::idempotents_closed(s),
            self.blocks_are_rectangular_groups(d),
            df == dtau,
            relation_is_congruence(s, &df),
            dt == dtau,
            relation_is_congruence(s, &dt),
            nu.refines(tau),
            nu.meet(s.h()).is_discrete(),
            kernel_least(s, &n.nu).partition().is_discrete(),
            exists,
            nu.to_relation().is_subset(&self.f),
            over_rectangular_bands(s, &n.nu),
            nu.to_relation().is_subset(&self.y),
        ]
    }

    fn figure_identities(&self) -> Check {
        let n = &self.named;
        let p = |c: &Congruence| c.partition().clone();
        let (sigma, beta, eta, nu, kappa, pi, lambda) =
            (p(&n.sigma), p(&n.beta), p(&n.eta), p(&n.nu), p(&n.kappa), p(&n.pi), p(&n.lambda));
        let (pi_t, lambda_t, kappa_k) = (p(&n.pi_t), p(&n.lambda_t), p(&n.kappa_k));

        // labels of the pictures: each name is the word it stands for
        let net = min_network(self.s, &[Root::Universal, Root::D]).map_err(|_| Witness::NoExtremum {
            property: String::from("min-network stabilizes"),
        })?;
        for (word, name, value) in [
            ("ω_t", "σ", &sigma),
            ("ω_k", "β", &beta),
            ("ω_kt", "κ", &kappa),
            ("ω_tk", "π", &pi),
            ("ω_tkt", "π_t", &pi_t),
            ("ω_ktk", "κ_k", &kappa_k),
            ("D", "η", &eta),
            ("D_t", "ν", &nu),
            ("D_tk", "λ", &lambda),
            ("D_tkt", "λ_t", &lambda_t),
        ] {
            let w = Word::parse(word).expect("well-formed word");
            let node = net.get(&w).expect("network carries three-letter words");
            equal(String::from(name), value, String::from(word), node.partition())?;
        }

        equal(String::from("κ ∨ π"), &kappa.join(&pi), String::from("σ ∩ β"), &sigma.meet(&beta))?;
        equal(String::from("ν ∨ π"), &nu.join(&pi), String::from("σ ∩ 𝒟"), &sigma.meet(&eta))?;
        equal(String::from("κ ∨ λ"), &kappa.join(&lambda), String::from("ν ∩ β"), &nu.meet(&beta))?;

        let omega = Partition::universal(self.n());
        let kappa_pi = kappa.meet(&pi);
        for (a, x, b, y) in [
            ("σ", &sigma, "ω", &omega),
            ("β", &beta, "ω", &omega),
            ("η", &eta, "ω", &omega),
            ("ν", &nu, "σ", &sigma),
            ("ν", &nu, "η", &eta),
            ("κ", &kappa, "σ", &sigma),
            ("κ", &kappa, "β", &beta),
            ("π", &pi, "σ", &sigma),
            ("π", &pi, "β", &beta),
            ("λ", &lambda, "ν", &nu),
            ("λ", &lambda, "β", &beta),
            ("λ", &lambda, "π", &pi),
            ("π_t", &pi_t, "π", &pi),
            ("π_t", &pi_t, "κ ∩ π", &kappa_pi),
            ("κ_k", &kappa_k, "κ", &kappa),
            ("κ_k", &kappa_k, "κ ∩ π", &kappa_pi),
            ("λ_t", &lambda_t, "λ", &lambda),
            ("λ_t", &lambda_t, "π_t", &pi_t),
        ] {
            contained(a, x, b, y)?;
        }
        Ok(Status::Holds)
    }

    /// Green's relations of each generated subsemigroup agree with the
    /// restrictions of those of `S`.
    fn check_green_on(&self, subset: Vec<usize>, host: &crate::GreenData) -> core::result::Result<(), Witness> {
        let s = self.s;
        if let Some((a, b)) = s.closure_failure(&subset) {
            return Err(Witness::NotClosed { subset, a, b });
        }
        let sub = s.subsemigroup(&subset).expect("closed and nonempty");
        if !sub.semigroup.is_completely_regular() {
            return Err(Witness::NoExtremum { property: format!("{subset:?} completely regular") });
        }
        let g = sub.semigroup.green();
        let e = &sub.embedding;
        for (rel, local, whole) in [('L', &g.l, &host.l), ('R', &g.r, &host.r), ('H', &g.h, &host.h), ('D', &g.d, &host.d)] {
            for i in 0..e.len() {
                for j in 0..e.len() {
                    if local.same(i, j) != whole.same(e[i], e[j]) {
                        return Err(Witness::GreenMismatch { subset: e.clone(), relation: rel, a: e[i], b: e[j] });
                    }
                }
            }
        }
        Ok(())
    }

    fn green_restriction(&self) -> Check {
        let s = self.s;
        let host = s.green_data();
        let all: Vec<usize> = (0..self.n()).collect();
        let set = |f: &dyn Fn(usize) -> usize| -> Vec<usize> {
            let mut v: Vec<usize> = all.iter().map(|&x| f(x)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        for &e in s.idempotent_list() {
            self.check_green_on(set(&|x| s.mul(e, x)), host)?;
            self.check_green_on(set(&|x| s.mul(x, e)), host)?;
            for &f in s.idempotent_list() {
                self.check_green_on(set(&|x| s.mul(s.mul(e, x), f)), host)?;
            }
        }
        for (i, c) in self.members() {
            for &e in s.idempotent_list() {
                let class: Vec<usize> = all.iter().copied().filter(|&x| c.same(x, e)).collect();
                self.check_green_on(class, host)?;
            }
            let ker = &self.info[i].kernel;
            if s.closure_failure(ker).is_none() {
                self.check_green_on(ker.clone(), host)?;
            }
        }
        Ok(Status::Holds)
    }
}
