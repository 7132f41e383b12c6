use alloc::vec;
use alloc::vec::Vec;

use crate::partition::{Partition, UnionFind};
use crate::relation::BinaryRelation;
use crate::semigroup::Semigroup;
use crate::{Error, Result};

/// A partition certified compatible with multiplication, tagged with the
/// fingerprint of its host semigroup.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Congruence {
    partition: Partition,
    host: u64,
}

/// The first failure of compatibility found by [`is_congruence`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// `c·a ≢ c·b` when true, `a·c ≢ b·c` otherwise.
    pub left: bool,
}

/// Checks left and right compatibility of `p` with the multiplication of `s`.
pub fn is_congruence(s: &Semigroup, p: &Partition) -> core::result::Result<(), Compatibility> {
    assert_eq!(p.len(), s.order(), "partition size differs from semigroup order");
    // comparing each element to its block representative suffices
    let reps = p.representatives();
    for a in 0..s.order() {
        let r = reps[p.block_of(a)];
        if r == a {
            continue;
        }
        for c in 0..s.order() {
            if !p.same(s.mul(c, r), s.mul(c, a)) {
                return Err(Compatibility { a: r, b: a, c, left: true });
            }
            if !p.same(s.mul(r, c), s.mul(a, c)) {
                return Err(Compatibility { a: r, b: a, c, left: false });
            }
        }
    }
    Ok(())
}

impl Congruence {
    pub fn new(s: &Semigroup, partition: Partition) -> Result<Self> {
        if partition.len() != s.order() {
            return Err(Error::SizeMismatch { expected: s.order(), found: partition.len() });
        }
        is_congruence(s, &partition)
            .map_err(|w| Error::NotCongruence { a: w.a, b: w.b, c: w.c, left: w.left })?;
        Ok(Congruence { partition, host: s.fingerprint() })
    }

    /// Wraps `partition` without checking compatibility.
    ///
    /// Meant for fault-injection tests that feed deliberately wrong
    /// "congruences" to the theorem battery.
    pub fn new_unchecked(s: &Semigroup, partition: Partition) -> Self {
        assert_eq!(partition.len(), s.order(), "partition size differs from semigroup order");
        Congruence { partition, host: s.fingerprint() }
    }

    /// `ε`.
    pub fn equality(s: &Semigroup) -> Self {
        Congruence { partition: Partition::discrete(s.order()), host: s.fingerprint() }
    }

    /// `ω`.
    pub fn universal(s: &Semigroup) -> Self {
        Congruence { partition: Partition::universal(s.order()), host: s.fingerprint() }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn host(&self) -> u64 {
        self.host
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.partition.same(a, b)
    }

    pub fn num_classes(&self) -> usize {
        self.partition.num_blocks()
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Congruence) -> bool {
        self.partition.refines(&other.partition)
    }

    pub fn to_relation(&self) -> BinaryRelation {
        self.partition.to_relation()
    }

    fn check_host(&self, other: &Congruence) -> Result<()> {
        if self.host == other.host && self.partition.len() == other.partition.len() {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    /// `ρ ∩ θ`.
    pub fn meet(&self, other: &Congruence) -> Result<Congruence> {
        self.check_host(other)?;
        Ok(Congruence { partition: self.partition.meet(&other.partition), host: self.host })
    }

    /// `ρ ∨ θ`: the transitive closure of the union of two congruences is
    /// already a congruence.
    pub fn join(&self, other: &Congruence) -> Result<Congruence> {
        self.check_host(other)?;
        Ok(Congruence { partition: self.partition.join(&other.partition), host: self.host })
    }
}

/// The least congruence containing every pair, by union-find with a worklist
/// of merged pairs closed under `(a,b) ⇒ (ca,cb), (ac,bc)`.
pub fn congruence_closure(s: &Semigroup, pairs: impl IntoIterator<Item = (usize, usize)>) -> Congruence {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = Vec::new();
    for (a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((a, b)) = work.pop() {
        for c in 0..n {
            let (ca, cb) = (s.mul(c, a), s.mul(c, b));
            if uf.union(ca, cb) {
                work.push((ca, cb));
            }
            let (ac, bc) = (s.mul(a, c), s.mul(b, c));
            if uf.union(ac, bc) {
                work.push((ac, bc));
            }
        }
    }
    Congruence { partition: uf.into_partition(), host: s.fingerprint() }
}

/// `r*` for an arbitrary relation.
pub fn closure_of_relation(s: &Semigroup, r: &BinaryRelation) -> Congruence {
    congruence_closure(s, r.pairs())
}

/// `θ⁰`: pairs `(a,b)` with `xay θ xby` for all `x, y ∈ S¹`.
///
/// Elements are grouped by their signature `(x,y) ↦ class of xay`.
pub fn greatest_contained_congruence(s: &Semigroup, e: &Partition) -> Congruence {
    let n = s.order();
    assert_eq!(e.len(), n, "partition size differs from semigroup order");
    let signatures: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            let mut sig = Vec::with_capacity((n + 1) * (n + 1));
            for x in 0..=n {
                let xa = s.mul1(x, a);
                for y in 0..=n {
                    sig.push(e.block_of(s.mul1(xa, y)));
                }
            }
            sig
        })
        .collect();
    Congruence { partition: Partition::from_keys(&signatures), host: s.fingerprint() }
}

/// `π_K`: pairs `(a,b)` with `xay ∈ K ⟺ xby ∈ K` for all `x, y ∈ S¹`; the
/// greatest congruence saturating `K`.
pub fn saturation_congruence(s: &Semigroup, k: &[usize]) -> Congruence {
    let n = s.order();
    let mut member = vec![false; n];
    for &x in k {
        member[x] = true;
    }
    let signatures: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut sig = Vec::with_capacity((n + 1) * (n + 1));
            for x in 0..=n {
                let xa = s.mul1(x, a);
                for y in 0..=n {
                    sig.push(member[s.mul1(xa, y)]);
                }
            }
            sig
        })
        .collect();
    Congruence { partition: Partition::from_keys(&signatures), host: s.fingerprint() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{cyclic_group, rectangular_band};
    use alloc::string::ToString;

    #[test]
    fn closure_basics_on_z4() {
        let z4 = cyclic_group(4);
        assert!(congruence_closure(&z4, []).partition().is_discrete());
        let c = congruence_closure(&z4, [(0, 2)]);
        assert_eq!(c.partition().to_string(), "[[0,2],[1,3]]");
        let all = congruence_closure(&z4, (0..4).flat_map(|a| (0..4).map(move |b| (a, b))));
        assert!(all.partition().is_universal());
    }

    #[test]
    fn subgroup_cosets_are_a_congruence() {
        let z4 = cyclic_group(4);
        let p = Partition::from_keys(&[0, 1, 0, 1]);
        assert!(is_congruence(&z4, &p).is_ok());
        let bad = Partition::from_keys(&[0, 0, 1, 1]);
        let w = is_congruence(&z4, &bad).unwrap_err();
        assert!(bad.same(w.a, w.b));
        let (x, y) = if w.left { (z4.mul(w.c, w.a), z4.mul(w.c, w.b)) } else { (z4.mul(w.a, w.c), z4.mul(w.b, w.c)) };
        assert!(!bad.same(x, y));
    }

    #[test]
    fn green_l_of_rectangular_band_is_a_congruence() {
        let r22 = rectangular_band(2, 2);
        assert!(is_congruence(&r22, &r22.green().l).is_ok());
    }

    #[test]
    fn extremes_of_gcc_and_saturation() {
        let z2 = cyclic_group(2);
        let n = z2.order();
        assert!(greatest_contained_congruence(&z2, &Partition::universal(n)).partition().is_universal());
        assert!(greatest_contained_congruence(&z2, &Partition::discrete(n)).partition().is_discrete());
        assert!(saturation_congruence(&z2, &[0, 1]).partition().is_universal());
        assert!(saturation_congruence(&z2, &[]).partition().is_universal());
        assert!(saturation_congruence(&z2, &[0]).partition().is_discrete());
    }

    #[test]
    fn host_mismatch_is_reported() {
        let z2 = cyclic_group(2);
        let z3 = cyclic_group(3);
        let a = Congruence::equality(&z2);
        let b = Congruence::equality(&z3);
        assert_eq!(a.join(&b), Err(Error::HostMismatch));
        assert_eq!(a.meet(&b), Err(Error::HostMismatch));
    }

    #[test]
    fn lattice_identities_on_z4() {
        let z4 = cyclic_group(4);
        let eps = Congruence::equality(&z4);
        let om = Congruence::universal(&z4);
        let c = congruence_closure(&z4, [(0, 2)]);
        assert_eq!(eps.join(&c).unwrap(), c);
        assert_eq!(om.meet(&c).unwrap(), c);
    }
}
