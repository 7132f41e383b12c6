//! Min-networks: congruences reached from a root by alternately taking the
//! least congruence with the same trace (`_t`) or the same kernel (`_k`).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::congruence::{is_congruence, Congruence};
use crate::kernel_trace::{kernel_least, trace_least};
use crate::regular::CrSemigroup;
use crate::{Error, Result};

/// Branches are cut off at this depth if they have not stabilized.
pub const MAX_DEPTH: usize = 16;

/// Every branch is carried at least this deep, so the three-letter words
/// (`π_t`, `κ_k`, `λ_t`) are always present.
pub const MIN_DEPTH: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    /// `ω`
    Universal,
    /// `𝒟 = η`
    D,
}

impl Root {
    pub fn symbol(self) -> &'static str {
        match self {
            Root::Universal => "ω",
            Root::D => "D",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// lower t
    T,
    /// lower k
    K,
}

impl Step {
    fn other(self) -> Step {
        match self {
            Step::T => Step::K,
            Step::K => Step::T,
        }
    }
}

/// An operator word such as `ω_tk`, meaning `(ω_t)_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub root: Root,
    pub steps: Vec<Step>,
}

impl Word {
    pub fn root(root: Root) -> Self {
        Word { root, steps: Vec::new() }
    }

    pub fn then(&self, step: Step) -> Self {
        let mut steps = self.steps.clone();
        steps.push(step);
        Word { root: self.root, steps }
    }

    /// Parses `ω`, `w`, `omega`, `D`, `η` followed by an optional `_` and letters `t`/`k`.
    pub fn parse(text: &str) -> Option<Word> {
        let (root, rest) = [("omega", Root::Universal), ("ω", Root::Universal), ("w", Root::Universal), ("D", Root::D), ("η", Root::D), ("eta", Root::D)]
            .iter()
            .find_map(|(p, r)| text.strip_prefix(p).map(|rest| (*r, rest)))?;
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let steps = rest
            .chars()
            .map(|c| match c {
                't' => Some(Step::T),
                'k' => Some(Step::K),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Word { root, steps })
    }

    /// The conventional name of the congruence this word denotes, where one exists.
    pub fn alias(&self) -> Option<&'static str> {
        use Step::{K, T};
        Some(match (self.root, self.steps.as_slice()) {
            (Root::Universal, []) => "ω",
            (Root::Universal, [T]) => "σ",
            (Root::Universal, [K]) => "β",
            (Root::Universal, [T, K]) => "π",
            (Root::Universal, [K, T]) => "κ",
            (Root::Universal, [T, K, T]) => "π_t",
            (Root::Universal, [K, T, K]) => "κ_k",
            (Root::D, []) => "η",
            (Root::D, [T]) => "ν",
            (Root::D, [T, K]) => "λ",
            (Root::D, [T, K, T]) => "λ_t",
            _ => return None,
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.root.symbol())?;
        if !self.steps.is_empty() {
            f.write_str("_")?;
            for s in &self.steps {
                f.write_str(match s {
                    Step::T => "t",
                    Step::K => "k",
                })?;
            }
        }
        Ok(())
    }
}

// root first, then shorter words, then t before k
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.root
            .cmp(&other.root)
            .then(self.steps.len().cmp(&other.steps.len()))
            .then_with(|| self.steps.cmp(&other.steps))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The labelled congruences reached from one or both roots.
#[derive(Clone, Debug)]
pub struct MinNetwork {
    pub roots: Vec<Root>,
    pub nodes: BTreeMap<Word, Congruence>,
    /// `(sub, sup)` pairs: each derived word is contained in its parent, and
    /// `𝒟 ⊆ ω` when both roots are present.
    pub edges: Vec<(Word, Word)>,
    /// Longest word length produced.
    pub stabilized_depth: usize,
}

impl MinNetwork {
    pub fn get(&self, w: &Word) -> Option<&Congruence> {
        self.nodes.get(w)
    }

    /// Distinct congruences with every word that reaches each, in word order
    /// of first appearance.
    pub fn distinct(&self) -> Vec<(Vec<Word>, Congruence)> {
        let mut out: Vec<(Vec<Word>, Congruence)> = Vec::new();
        for (w, c) in &self.nodes {
            match out.iter_mut().find(|(_, d)| d == c) {
                Some((words, _)) => words.push(w.clone()),
                None => out.push((vec![w.clone()], c.clone())),
            }
        }
        out
    }
}

/// The root congruence: `ω`, or `𝒟` after checking it is a congruence.
pub fn root_congruence(s: &CrSemigroup, root: Root) -> Result<Congruence> {
    match root {
        Root::Universal => Ok(Congruence::universal(s)),
        Root::D => {
            is_congruence(s, s.d())
                .map_err(|w| Error::NotCongruence { a: w.a, b: w.b, c: w.c, left: w.left })?;
            Ok(Congruence::new_unchecked(s, s.d().clone()))
        }
    }
}

/// Applies one step.
pub fn apply(s: &CrSemigroup, c: &Congruence, step: Step) -> Congruence {
    match step {
        Step::T => trace_least(s, c),
        Step::K => kernel_least(s, c),
    }
}

/// Alternating iterates of `start`, beginning with `first`, until two
/// consecutive congruences coincide (and at least `MIN_DEPTH` steps were
/// taken). Returns the congruence after each step.
pub fn iterate_from(s: &CrSemigroup, start: &Congruence, first: Step) -> Result<Vec<Congruence>> {
    let mut out = Vec::new();
    let mut current = start.clone();
    let mut step = first;
    for depth in 1..=MAX_DEPTH {
        let next = apply(s, &current, step);
        let stable = next == current;
        out.push(next.clone());
        current = next;
        step = step.other();
        if stable && depth >= MIN_DEPTH {
            return Ok(out);
        }
    }
    Err(Error::NotStabilized { depth: MAX_DEPTH })
}

/// The min-network of the given roots, both branches from each.
pub fn min_network(s: &CrSemigroup, roots: &[Root]) -> Result<MinNetwork> {
    let mut nodes = BTreeMap::new();
    let mut edges = Vec::new();
    let mut depth = 0;
    let mut roots: Vec<Root> = roots.to_vec();
    roots.sort();
    roots.dedup();
    for &root in &roots {
        let start = root_congruence(s, root)?;
        let w0 = Word::root(root);
        nodes.insert(w0.clone(), start.clone());
        for first in [Step::T, Step::K] {
            let chain = iterate_from(s, &start, first)?;
            depth = depth.max(chain.len());
            let mut parent = w0.clone();
            let mut step = first;
            for c in chain {
                let w = parent.then(step);
                nodes.insert(w.clone(), c);
                edges.push((w.clone(), parent));
                parent = w;
                step = step.other();
            }
        }
    }
    if roots.len() == 2 {
        edges.push((Word::root(Root::D), Word::root(Root::Universal)));
    }
    edges.sort();
    Ok(MinNetwork { roots, nodes, edges, stabilized_depth: depth })
}

/// `"σ"`-style alias if any, otherwise the word itself.
pub fn display_name(w: &Word) -> String {
    match w.alias() {
        Some(a) => String::from(a),
        None => alloc::format!("{w}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{cyclic_group, rectangular_band, trivial};
    use alloc::string::ToString;

    fn cr(s: crate::Semigroup) -> CrSemigroup {
        CrSemigroup::new(s).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    #[test]
    fn words_parse_and_print() {
        assert_eq!(w("ω_tkt").to_string(), "ω_tkt");
        assert_eq!(w("omega_k").alias(), Some("β"));
        assert_eq!(w("D_tk").alias(), Some("λ"));
        assert_eq!(w("D").to_string(), "D");
        assert!(Word::parse("x_t").is_none());
        assert!(w("ω") < w("ω_t") && w("ω_t") < w("ω_k") && w("ω_kt") < w("D"));
    }

    #[test]
    fn group_network() {
        let z3 = cr(cyclic_group(3));
        let net = min_network(&z3, &[Root::Universal]).unwrap();
        assert!(net.get(&w("ω_t")).unwrap().partition().is_discrete());
        assert!(net.get(&w("ω_k")).unwrap().partition().is_universal());
        assert!(net.get(&w("ω_kt")).unwrap().partition().is_discrete());
    }

    #[test]
    fn band_network() {
        let r22 = cr(rectangular_band(2, 2));
        let net = min_network(&r22, &[Root::Universal]).unwrap();
        assert!(net.get(&w("ω_k")).unwrap().partition().is_discrete());
        assert!(net.get(&w("ω_t")).unwrap().partition().is_universal());
    }

    #[test]
    fn trivial_network_collapses() {
        let t = cr(trivial());
        let net = min_network(&t, &[Root::Universal, Root::D]).unwrap();
        assert_eq!(net.distinct().len(), 1);
        assert!(net.nodes.contains_key(&w("ω_ktk")) && net.nodes.contains_key(&w("D_tkt")));
    }

    #[test]
    fn edges_are_inclusions() {
        let s = cr(rectangular_band(2, 2).direct_product(&cyclic_group(2)));
        let net = min_network(&s, &[Root::Universal, Root::D]).unwrap();
        for (sub, sup) in &net.edges {
            assert!(net.nodes[sub].is_contained_in(&net.nodes[sup]), "{sub} ⊄ {sup}");
        }
    }
}
