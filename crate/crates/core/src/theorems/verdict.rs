use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::Partition;
use crate::semigroup::Semigroup;

/// The statements the battery knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResultId {
    /// `ℋ ∩ Θ = ε`
    LemmaTheta,
    /// `a ρ b ⟺ a⁰ tr ρ b⁰ and ab⁻¹ ∈ ker ρ`
    LemmaCon,
    /// the four operator formulas against lattice-scan extrema
    LemmaExtreme,
    /// each named congruence against its defining lattice-scan oracle
    NamedOracles,
    /// eight conditions on orthodox `ρ`: `ker ρ` cryptic, …, `ρ_k` over groups
    LemmaKcg,
    /// conditions (2)–(8) of the above without orthodoxy; reported only
    LemmaKcgNonorthodox,
    /// `μ` orthodox ⇒ `ker μ` cryptic
    CorollaryMu,
    /// nine conditions equivalent to `ker σ` cryptic
    TheoremSigmacg,
    /// formulas for `κ_ρ`, `π_ρ`, `λ_ρ` and their quotient-side descriptions
    PropRho,
    /// `ker σ_{S/ρ}` cryptic ⟺ `π_ρ ⊆ ρ^T` ⟺ `tr π_ρ = tr ρ`
    PropSigmacgc,
    /// `π_t = ((ω_t)_k)_t` is least with `ker σ` of the quotient cryptic
    CorollaryPit,
    /// nine conditions equivalent to `ker ν` cryptic
    TheoremNucg,
    /// `ker ν_{S/ρ}` cryptic ⟺ `λ_ρ ⊆ ρ^T` ⟺ `tr λ_ρ = tr ρ`
    PropNucgc,
    /// `λ_t = ((𝒟_t)_k)_t` is least with `ker ν` of the quotient cryptic
    CorollaryLambdat,
    /// `κ` over rectangular bands ⇒ band of rectangular groups
    PropBrecg,
    /// band of rectangular groups ⇒ `β ∩ 𝔉 = β ∩ Θ`
    LemmaFtheta,
    /// ten conditions equivalent to `κ` over rectangular bands
    TheoremKorecb,
    /// `κ_{S/ρ}` over rectangular bands ⟺ `ρ^K` cryptogroup ⟺ `ker(ρ∨κ) = ker ρ`
    PropKorecbc,
    /// `κ_k = ((ω_k)_t)_k` is least with `κ` of the quotient over rectangular bands
    CorollaryKappak,
    /// `κ ∩ π = π_t ∨ κ_k`, least with both quotient properties
    PropMeet,
    /// `κ` is the union of the least group congruences of the `β`-classes
    PropUnion,
    /// on orthogroups `ρ_t = (ρ ∩ 𝔉)*`
    LemmaOt,
    /// thirteen conditions equivalent to orthodoxy
    TheoremOrthogroup,
    /// labelled identities and inclusions of the min-network pictures
    Figure1Identities,
    /// Green's relations restrict to regular subsemigroups
    GreenRestriction,
}

impl ResultId {
    pub const ALL: [ResultId; 25] = [
        ResultId::LemmaTheta,
        ResultId::LemmaCon,
        ResultId::LemmaExtreme,
        ResultId::NamedOracles,
        ResultId::LemmaKcg,
        ResultId::LemmaKcgNonorthodox,
        ResultId::CorollaryMu,
        ResultId::TheoremSigmacg,
        ResultId::PropRho,
        ResultId::PropSigmacgc,
        ResultId::CorollaryPit,
        ResultId::TheoremNucg,
        ResultId::PropNucgc,
        ResultId::CorollaryLambdat,
        ResultId::PropBrecg,
        ResultId::LemmaFtheta,
        ResultId::TheoremKorecb,
        ResultId::PropKorecbc,
        ResultId::CorollaryKappak,
        ResultId::PropMeet,
        ResultId::PropUnion,
        ResultId::LemmaOt,
        ResultId::TheoremOrthogroup,
        ResultId::Figure1Identities,
        ResultId::GreenRestriction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ResultId::LemmaTheta => "LEMMA_THETA",
            ResultId::LemmaCon => "LEMMA_CON",
            ResultId::LemmaExtreme => "LEMMA_EXTREME",
            ResultId::NamedOracles => "NAMED_ORACLES",
            ResultId::LemmaKcg => "LEMMA_KCG",
            ResultId::LemmaKcgNonorthodox => "LEMMA_KCG_NONORTHODOX",
            ResultId::CorollaryMu => "COROLLARY_MU",
            ResultId::TheoremSigmacg => "THEOREM_SIGMACG",
            ResultId::PropRho => "PROP_RHO",
            ResultId::PropSigmacgc => "PROP_SIGMACGC",
            ResultId::CorollaryPit => "COROLLARY_PIT",
            ResultId::TheoremNucg => "THEOREM_NUCG",
            ResultId::PropNucgc => "PROP_NUCGC",
            ResultId::CorollaryLambdat => "COROLLARY_LAMBDAT",
            ResultId::PropBrecg => "PROP_BRECG",
            ResultId::LemmaFtheta => "LEMMA_FTHETA",
            ResultId::TheoremKorecb => "THEOREM_KORECB",
            ResultId::PropKorecbc => "PROP_KORECBC",
            ResultId::CorollaryKappak => "COROLLARY_KAPPAK",
            ResultId::PropMeet => "PROP_MEET",
            ResultId::PropUnion => "PROP_UNION",
            ResultId::LemmaOt => "LEMMA_OT",
            ResultId::TheoremOrthogroup => "THEOREM_ORTHOGROUP",
            ResultId::Figure1Identities => "FIGURE1_IDENTITIES",
            ResultId::GreenRestriction => "GREEN_RESTRICTION",
        }
    }

    pub fn parse(name: &str) -> Option<ResultId> {
        ResultId::ALL.into_iter().find(|r| r.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for ResultId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Holds,
    /// A conditional whose hypothesis fails on this semigroup.
    Vacuous,
    Fails,
    /// An observation that is reported but not asserted.
    Noted,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Holds => "holds",
            Outcome::Vacuous => "vacuous",
            Outcome::Fails => "fail",
            Outcome::Noted => "noted",
        }
    }
}

/// A counterexample, or the reason a verdict is vacuous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vacuous { hypothesis: &'static str },
    /// Conditions of an equivalence theorem that disagree, 1-based in `values`.
    Conditions { rho: Option<Partition>, values: Vec<bool> },
    /// Two sides of an identity, and a pair related by exactly one.
    Unequal { left: String, right: String, left_value: Partition, right_value: Partition, pair: (usize, usize) },
    /// A pair in `sub` but not in `sup`.
    NotContained { sub: String, sup: String, sub_value: Partition, sup_value: Partition, pair: (usize, usize) },
    /// A pair on which a pointwise statement fails.
    Pair { statement: String, rho: Option<Partition>, pair: (usize, usize), expected: bool, found: bool },
    /// `partition` relates `a, b` but not their translates by `c`.
    NotCongruence { name: String, partition: Partition, a: usize, b: usize, c: usize, left: bool },
    /// `a·b` leaves `subset`.
    NotClosed { subset: Vec<usize>, a: usize, b: usize },
    /// Green's relation `relation` of the subsemigroup on `subset` disagrees
    /// with the host relation on the host elements `a, b`.
    GreenMismatch { subset: Vec<usize>, relation: char, a: usize, b: usize },
    /// No least (or greatest) congruence with the property exists in the lattice.
    NoExtremum { property: String },
}

impl Witness {
    /// Re-evaluates the counterexample against `s` without the battery.
    pub fn recheck(&self, s: &Semigroup) -> bool {
        match self {
            Witness::Vacuous { .. } | Witness::NoExtremum { .. } => true,
            Witness::Conditions { values, .. } => values.iter().any(|&v| v != values[0]),
            Witness::Unequal { left_value, right_value, pair: (a, b), .. } => {
                left_value.same(*a, *b) != right_value.same(*a, *b)
            }
            Witness::NotContained { sub_value, sup_value, pair: (a, b), .. } => {
                sub_value.same(*a, *b) && !sup_value.same(*a, *b)
            }
            Witness::Pair { expected, found, .. } => expected != found,
            Witness::NotCongruence { partition, a, b, c, left, .. } => {
                let (x, y) = if *left { (s.mul(*c, *a), s.mul(*c, *b)) } else { (s.mul(*a, *c), s.mul(*b, *c)) };
                partition.same(*a, *b) && !partition.same(x, y)
            }
            Witness::NotClosed { subset, a, b } => {
                subset.contains(a) && subset.contains(b) && !subset.contains(&s.mul(*a, *b))
            }
            Witness::GreenMismatch { subset, relation, a, b } => {
                let Ok(sub) = s.subsemigroup(subset) else { return false };
                let local = |x: usize| sub.embedding.iter().position(|&y| y == x);
                let (Some(i), Some(j)) = (local(*a), local(*b)) else { return false };
                let (gs, gh) = (sub.semigroup.green(), s.green());
                let pick = |g: &crate::GreenData| match relation {
                    'L' => g.l.clone(),
                    'R' => g.r.clone(),
                    'H' => g.h.clone(),
                    _ => g.d.clone(),
                };
                pick(&gs).same(i, j) != pick(&gh).same(*a, *b)
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vacuous { hypothesis } => write!(f, "hypothesis fails: {hypothesis}"),
            Witness::Conditions { rho, values } => {
                if let Some(r) = rho {
                    write!(f, "ρ={r}: ")?;
                }
                f.write_str("conditions")?;
                for (i, v) in values.iter().enumerate() {
                    write!(f, " ({})={}", i + 1, if *v { "T" } else { "F" })?;
                }
                Ok(())
            }
            Witness::Unequal { left, right, left_value, right_value, pair } => write!(
                f,
                "{left} = {left_value} but {right} = {right_value}; they differ on {pair:?}"
            ),
            Witness::NotContained { sub, sup, pair, .. } => {
                write!(f, "{sub} ⊄ {sup}: {pair:?} lies in the first only")
            }
            Witness::Pair { statement, rho, pair, expected, found } => {
                if let Some(r) = rho {
                    write!(f, "ρ={r}: ")?;
                }
                write!(f, "{statement} fails at {pair:?} (expected {expected}, found {found})")
            }
            Witness::NotCongruence { name, partition, a, b, c, left } => {
                let side = if *left { "left" } else { "right" };
                write!(f, "{name} = {partition} is not {side} compatible at ({a},{b}) with {c}")
            }
            Witness::NotClosed { subset, a, b } => write!(f, "{subset:?} not closed: {a}·{b}"),
            Witness::GreenMismatch { subset, relation, a, b } => {
                write!(f, "{relation} of subsemigroup {subset:?} differs from host on ({a},{b})")
            }
            Witness::NoExtremum { property } => write!(f, "no extremal congruence: {property}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub result_id: ResultId,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds(id: ResultId) -> Self {
        Verdict { result_id: id, outcome: Outcome::Holds, witness: None }
    }

    pub fn vacuous(id: ResultId, hypothesis: &'static str) -> Self {
        Verdict { result_id: id, outcome: Outcome::Vacuous, witness: Some(Witness::Vacuous { hypothesis }) }
    }

    pub fn fails(id: ResultId, witness: Witness) -> Self {
        Verdict { result_id: id, outcome: Outcome::Fails, witness: Some(witness) }
    }

    /// Holds, vacuous, or merely noted.
    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fails
    }
}
