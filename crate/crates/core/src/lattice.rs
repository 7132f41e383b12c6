use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::congruence::{congruence_closure, Congruence};
use crate::partition::Partition;
use crate::semigroup::Semigroup;
use crate::{Error, Result};

/// Default largest order for which [`all_congruences`] is attempted.
pub const DEFAULT_LATTICE_BOUND: usize = 8;

/// Every congruence of a semigroup, ordered by decreasing class count and
/// then by block ids (so `ε` comes first and `ω` last).
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    congruences: Vec<Congruence>,
}

/// All congruences: the principal congruences `(a,b)*` closed under joins,
/// plus `ε`.
pub fn all_congruences(s: &Semigroup, bound: usize) -> Result<CongruenceLattice> {
    let n = s.order();
    if n > bound {
        return Err(Error::OrderBoundExceeded { order: n, bound });
    }
    let mut principal: Vec<Congruence> = Vec::new();
    let mut seen: BTreeSet<Partition> = BTreeSet::new();
    seen.insert(Partition::discrete(n));
    for a in 0..n {
        for b in a + 1..n {
            let c = congruence_closure(s, [(a, b)]);
            if seen.insert(c.partition().clone()) {
                principal.push(c);
            }
        }
    }
    // every congruence is a join of principal ones, so closing under
    // "join with a principal congruence" reaches all of them
    let mut found: Vec<Congruence> = principal.clone();
    let mut cursor = 0;
    while cursor < found.len() {
        let current = found[cursor].clone();
        cursor += 1;
        for p in &principal {
            let j = Congruence::new_unchecked(s, current.partition().join(p.partition()));
            if seen.insert(j.partition().clone()) {
                found.push(j);
            }
        }
    }
    found.push(Congruence::equality(s));
    found.sort_by(|x, y| {
        y.num_classes()
            .cmp(&x.num_classes())
            .then_with(|| x.partition().block_ids().cmp(y.partition().block_ids()))
    });
    Ok(CongruenceLattice { congruences: found })
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Congruence> {
        self.congruences.iter()
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.congruences[i]
    }

    pub fn as_slice(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.congruences.iter().position(|c| c.partition() == p)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.position(p).is_some()
    }

    /// The least member satisfying `pred`: the meet of all of them, provided
    /// that meet satisfies `pred` itself.
    pub fn least_where(&self, mut pred: impl FnMut(usize, &Congruence) -> bool) -> Option<Congruence> {
        let chosen: Vec<usize> = (0..self.len()).filter(|&i| pred(i, &self.congruences[i])).collect();
        let first = self.congruences[*chosen.first()?].clone();
        let meet = chosen[1..]
            .iter()
            .fold(first, |acc, &i| acc.meet(&self.congruences[i]).expect("same host"));
        let at = self.position(meet.partition())?;
        chosen.contains(&at).then_some(meet)
    }

    /// The greatest member satisfying `pred`: the join of all of them,
    /// provided that join satisfies `pred` itself.
    pub fn greatest_where(&self, mut pred: impl FnMut(usize, &Congruence) -> bool) -> Option<Congruence> {
        let chosen: Vec<usize> = (0..self.len()).filter(|&i| pred(i, &self.congruences[i])).collect();
        let first = self.congruences[*chosen.first()?].clone();
        let join = chosen[1..]
            .iter()
            .fold(first, |acc, &i| acc.join(&self.congruences[i]).expect("same host"));
        let at = self.position(join.partition())?;
        chosen.contains(&at).then_some(join)
    }

    /// Covering pairs `(lower, upper)` of the inclusion order, i.e. the
    /// transitive reduction of `⊂`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let below: Vec<Vec<bool>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| i != j && self.congruences[i].is_contained_in(&self.congruences[j]))
                    .collect()
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if below[i][j] && !(0..m).any(|k| below[i][k] && below[k][j]) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

impl<'a> IntoIterator for &'a CongruenceLattice {
    type Item = &'a Congruence;
    type IntoIter = core::slice::Iter<'a, Congruence>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::is_congruence;
    use crate::instances::{chain_semilattice, cyclic_group, left_zero};
    use alloc::vec;

    // brute force: every set partition of 0..n that is compatible
    fn brute_force_count(s: &Semigroup) -> usize {
        let n = s.order();
        let mut count = 0;
        let mut rgs = vec![0usize; n];
        loop {
            let p = Partition::from_keys(&rgs);
            if p.block_ids() == rgs.as_slice() && is_congruence(s, &p).is_ok() {
                count += 1;
            }
            // next restricted growth string
            let mut i = n;
            loop {
                if i == 1 {
                    return count;
                }
                i -= 1;
                let max_prev = rgs[..i].iter().copied().max().unwrap_or(0);
                if rgs[i] <= max_prev {
                    rgs[i] += 1;
                    for x in rgs.iter_mut().skip(i + 1) {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn small_lattices() {
        assert_eq!(all_congruences(&cyclic_group(1), 8).unwrap().len(), 1);
        assert_eq!(all_congruences(&cyclic_group(2), 8).unwrap().len(), 2);
        assert_eq!(all_congruences(&chain_semilattice(2), 8).unwrap().len(), 2);
    }

    #[test]
    fn lattice_matches_brute_force() {
        for s in [cyclic_group(4), cyclic_group(6), chain_semilattice(4), left_zero(4)] {
            let lat = all_congruences(&s, 8).unwrap();
            assert_eq!(lat.len(), brute_force_count(&s), "{s:?}");
        }
    }

    #[test]
    fn ordering_puts_equality_first() {
        let lat = all_congruences(&cyclic_group(4), 8).unwrap();
        assert!(lat.get(0).partition().is_discrete());
        assert!(lat.get(lat.len() - 1).partition().is_universal());
        assert_eq!(lat.hasse_edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            all_congruences(&cyclic_group(9), 8).unwrap_err(),
            Error::OrderBoundExceeded { order: 9, bound: 8 }
        );
    }
}
