use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::relation::BinaryRelation;
use crate::{Error, Result};

/// An equivalence relation on `0..n`, stored canonically.
///
/// Block ids are assigned in order of least member, so two partitions of the
/// same set are equal exactly when their id arrays are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block: Vec<usize>,
    count: usize,
}

impl Partition {
    /// The equality relation `ε` (all singletons).
    pub fn discrete(n: usize) -> Self {
        Partition { block: (0..n).collect(), count: n }
    }

    /// The universal relation `ω`.
    pub fn universal(n: usize) -> Self {
        Partition { block: vec![0; n], count: usize::from(n > 0) }
    }

    /// Elements with equal keys share a block.
    pub fn from_keys<K: Ord>(keys: &[K]) -> Self {
        let mut seen: BTreeMap<&K, usize> = BTreeMap::new();
        let mut block = Vec::with_capacity(keys.len());
        for k in keys {
            let next = seen.len();
            block.push(*seen.entry(k).or_insert(next));
        }
        let count = seen.len();
        Partition { block, count }
    }

    /// Builds the partition from explicit blocks, which must cover `0..n` exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut ids = vec![usize::MAX; n];
        for (b, members) in blocks.iter().enumerate() {
            for &x in members {
                if x >= n || ids[x] != usize::MAX {
                    return Err(Error::SizeMismatch { expected: n, found: x });
                }
                ids[x] = b;
            }
        }
        if let Some(missing) = ids.iter().position(|&b| b == usize::MAX) {
            return Err(Error::SizeMismatch { expected: n, found: missing });
        }
        Ok(Self::from_keys(&ids))
    }

    /// Number of elements of the underlying set.
    pub fn len(&self) -> usize {
        self.block.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.count
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.block[a]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn is_discrete(&self) -> bool {
        self.count == self.block.len()
    }

    pub fn is_universal(&self) -> bool {
        self.count <= 1
    }

    /// Blocks as sorted lists, ordered by least member.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (x, &b) in self.block.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// Smallest member of each block, in block order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.count];
        for (x, &b) in self.block.iter().enumerate() {
            if reps[b] == usize::MAX {
                reps[b] = x;
            }
        }
        reps
    }

    /// Intersection of the two equivalences.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len(), "partition sizes differ");
        let keys: Vec<(usize, usize)> =
            self.block.iter().zip(&other.block).map(|(&a, &b)| (a, b)).collect();
        Self::from_keys(&keys)
    }

    /// Least equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len(), "partition sizes differ");
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let reps = p.representatives();
            for (x, &b) in p.block.iter().enumerate() {
                uf.union(x, reps[b]);
            }
        }
        uf.into_partition()
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len(), "partition sizes differ");
        let mut image = vec![usize::MAX; self.count];
        for (x, &b) in self.block.iter().enumerate() {
            let target = other.block[x];
            if image[b] == usize::MAX {
                image[b] = target;
            } else if image[b] != target {
                return false;
            }
        }
        true
    }

    /// A pair related by exactly one of the two partitions, if any.
    pub fn distinguishing_pair(&self, other: &Partition) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.same(a, b) != other.same(a, b))
    }

    /// A pair related here but not in `other`, if any.
    pub fn pair_outside(&self, other: &Partition) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.same(a, b) && !other.same(a, b))
    }

    /// The induced partition on `subset`, re-indexed by position in `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let keys: Vec<usize> = subset.iter().map(|&x| self.block[x]).collect();
        Self::from_keys(&keys)
    }

    /// Pulls a partition of `0..m` back along `map: 0..n → 0..m`.
    pub fn pullback(&self, map: &[usize]) -> Partition {
        let keys: Vec<usize> = map.iter().map(|&x| self.block[x]).collect();
        Self::from_keys(&keys)
    }

    pub fn to_relation(&self) -> BinaryRelation {
        BinaryRelation::from_fn(self.len(), |a, b| self.same(a, b))
    }

    /// All related pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n)
            .flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
            .filter(move |&(a, b)| self.same(a, b))
    }
}

/// Text form `[[0,2],[1,3]]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub(crate) fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_keys(&roots)
    }
}
