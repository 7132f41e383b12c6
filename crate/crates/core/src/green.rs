use alloc::vec;
use alloc::vec::Vec;

use crate::partition::Partition;
use crate::semigroup::Semigroup;

/// Green's relations of a finite semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenData {
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
}

impl GreenData {
    pub(crate) fn compute(s: &Semigroup) -> Self {
        let n = s.order();
        // S¹a and aS¹ as membership masks
        let left: Vec<Vec<bool>> = (0..n)
            .map(|a| {
                let mut m = vec![false; n];
                m[a] = true;
                (0..n).for_each(|x| m[s.mul(x, a)] = true);
                m
            })
            .collect();
        let right: Vec<Vec<bool>> = (0..n)
            .map(|a| {
                let mut m = vec![false; n];
                m[a] = true;
                (0..n).for_each(|x| m[s.mul(a, x)] = true);
                m
            })
            .collect();
        let l = Partition::from_keys(&left);
        let r = Partition::from_keys(&right);
        let h = l.meet(&r);
        let d = l.join(&r);
        GreenData { l, r, h, d }
    }

    /// An element `c` with `a ℒ c ℛ b`, when `a 𝒟 b`.
    ///
    /// In a finite semigroup `𝒟 = ℒ∘ℛ`, so such a `c` exists for every
    /// `𝒟`-related pair.
    pub fn d_chain(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.l.len()).find(|&c| self.l.same(a, c) && self.r.same(c, b))
    }
}
