use alloc::vec;
use alloc::vec::Vec;

use crate::partition::Partition;

/// A binary relation on `0..n` as a dense boolean matrix.
///
/// Nothing beyond the shape is assumed: `≤`, `Θ` and `𝔉` are not
/// equivalences in general and are never promoted to one implicitly.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryRelation {
    n: usize,
    bits: Vec<bool>,
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Self {
        BinaryRelation { n, bits: vec![false; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |a, b| a == b)
    }

    pub fn universal(n: usize) -> Self {
        BinaryRelation { n, bits: vec![true; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                bits.push(f(a, b));
            }
        }
        BinaryRelation { n, bits }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.n + b] = true;
    }

    /// Number of related pairs.
    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&x| x).count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &x)| x)
            .map(move |(i, _)| (i / n, i % n))
    }

    pub fn intersection(&self, other: &BinaryRelation) -> BinaryRelation {
        assert_eq!(self.n, other.n, "relation sizes differ");
        let bits = self.bits.iter().zip(&other.bits).map(|(&x, &y)| x && y).collect();
        BinaryRelation { n: self.n, bits }
    }

    pub fn union(&self, other: &BinaryRelation) -> BinaryRelation {
        assert_eq!(self.n, other.n, "relation sizes differ");
        let bits = self.bits.iter().zip(&other.bits).map(|(&x, &y)| x || y).collect();
        BinaryRelation { n: self.n, bits }
    }

    /// Relational product: `a (r∘s) b` iff `a r c` and `c s b` for some `c`.
    pub fn compose(&self, other: &BinaryRelation) -> BinaryRelation {
        assert_eq!(self.n, other.n, "relation sizes differ");
        let n = self.n;
        let mut out = Self::empty(n);
        for a in 0..n {
            for c in (0..n).filter(|&c| self.contains(a, c)) {
                for b in 0..n {
                    if other.contains(c, b) {
                        out.insert(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn is_subset(&self, other: &BinaryRelation) -> bool {
        assert_eq!(self.n, other.n, "relation sizes differ");
        self.bits.iter().zip(&other.bits).all(|(&x, &y)| !x || y)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for c in (0..n).filter(|&c| self.contains(a, c)) {
                if (0..n).any(|b| self.contains(c, b) && !self.contains(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// The partition this relation describes, if it is an equivalence.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_equivalence() {
            return None;
        }
        let n = self.n;
        let keys: Vec<usize> =
            (0..n).map(|a| (0..n).find(|&b| self.contains(a, b)).unwrap_or(a)).collect();
        Some(Partition::from_keys(&keys))
    }
}

impl From<&Partition> for BinaryRelation {
    fn from(p: &Partition) -> Self {
        p.to_relation()
    }
}
