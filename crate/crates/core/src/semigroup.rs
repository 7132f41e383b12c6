use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::Congruence;
use crate::green::GreenData;
use crate::relation::BinaryRelation;
use crate::{Error, Result};

/// A finite semigroup on `0..n` given by its Cayley table.
///
/// Construction checks that entries are in range and that the table is
/// associative. Complete regularity is a separate, checked property (see
/// [`crate::CrSemigroup`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    n: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    fingerprint: u64,
}

/// A subsemigroup together with its inclusion map.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub semigroup: Semigroup,
    /// `embedding[i]` is the host index of element `i` of the subsemigroup.
    pub embedding: Vec<usize>,
}

/// A quotient semigroup together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub semigroup: Semigroup,
    /// `projection[a]` is the class of host element `a`.
    pub projection: Vec<usize>,
}

fn fnv1a(n: usize, table: &[usize]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for x in core::iter::once(n).chain(table.iter().copied()) {
        for byte in (x as u64).to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

impl Semigroup {
    /// Validates a table given as rows.
    pub fn from_table(rows: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), order: n });
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(n, table, labels)
    }

    /// Validates a row-major table of length `n²`.
    pub fn from_flat(n: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if table.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, found: table.len() });
        }
        if let Some(i) = table.iter().position(|&v| v >= n) {
            return Err(Error::IndexOutOfRange { row: i / n, col: i % n, value: table[i], order: n });
        }
        if let Some(l) = &labels {
            let distinct: BTreeSet<&String> = l.iter().collect();
            if l.len() != n || distinct.len() != n {
                return Err(Error::BadLabels);
            }
        }
        let s = Semigroup { n, fingerprint: fnv1a(n, &table), table, labels };
        if let Some((a, b, c)) = s.associativity_failure() {
            return Err(Error::NotAssociative { a, b, c });
        }
        Ok(s)
    }

    /// Builds the table from a multiplication function.
    pub fn from_fn(n: usize, mut mul: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(mul(a, b));
            }
        }
        Self::from_flat(n, table, None)
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    /// Product in `S¹`, where index `n` stands for the adjoined identity.
    #[inline]
    pub(crate) fn mul1(&self, a: usize, b: usize) -> usize {
        if a == self.n {
            b
        } else if b == self.n {
            a
        } else {
            self.mul(a, b)
        }
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => format!("{a}"),
        }
    }

    /// The same table without labels.
    pub fn unlabeled(&self) -> Semigroup {
        Semigroup { labels: None, ..self.clone() }
    }

    /// A hash of the table, used to tag congruences with their host.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// `E(S)` in increasing order.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `V(a) = {x : axa = a, xax = x}`.
    pub fn inverses_set(&self, a: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.mul(self.mul(a, x), a) == a && self.mul(self.mul(x, a), x) == x)
            .collect()
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).any(|x| self.mul(self.mul(a, x), a) == a))
    }

    /// The commuting inverse of `a` (`axa = a`, `xax = x`, `ax = xa`), if `a` lies in a subgroup.
    pub fn group_inverse(&self, a: usize) -> Option<usize> {
        (0..self.n).find(|&x| {
            let ax = self.mul(a, x);
            ax == self.mul(x, a) && self.mul(ax, a) == a && self.mul(self.mul(x, a), x) == x
        })
    }

    /// On success, the inversion map `a ↦ a⁻¹`; otherwise the first element
    /// lying in no subgroup.
    pub fn complete_regularity(&self) -> core::result::Result<Vec<usize>, usize> {
        (0..self.n).map(|a| self.group_inverse(a).ok_or(a)).collect()
    }

    pub fn is_completely_regular(&self) -> bool {
        self.complete_regularity().is_ok()
    }

    /// The natural partial order: `a ≤ b` iff `a = eb = bf` for some idempotents `e, f`.
    pub fn natural_order(&self) -> BinaryRelation {
        let e = self.idempotents();
        BinaryRelation::from_fn(self.n, |a, b| {
            e.iter().any(|&x| self.mul(x, b) == a) && e.iter().any(|&f| self.mul(b, f) == a)
        })
    }

    /// Green's relations `ℒ, ℛ, ℋ, 𝒟`.
    pub fn green(&self) -> GreenData {
        GreenData::compute(self)
    }

    /// True when `subset` is closed under multiplication.
    pub fn closure_failure(&self, subset: &[usize]) -> Option<(usize, usize)> {
        let mut member = vec![false; self.n];
        for &x in subset {
            member[x] = true;
        }
        for &a in subset {
            for &b in subset {
                if !member[self.mul(a, b)] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// The induced subsemigroup on `subset` (sorted, deduplicated).
    pub fn subsemigroup(&self, subset: &[usize]) -> Result<Embedding> {
        let members: Vec<usize> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyTable);
        }
        if let Some(&x) = members.iter().find(|&&x| x >= self.n) {
            return Err(Error::IndexOutOfRange { row: x, col: 0, value: x, order: self.n });
        }
        if let Some((a, b)) = self.closure_failure(&members) {
            return Err(Error::NotClosed { a, b });
        }
        let mut local = vec![usize::MAX; self.n];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i;
        }
        let m = members.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                table.push(local[self.mul(a, b)]);
            }
        }
        let labels = self.labels.as_ref().map(|l| members.iter().map(|&x| l[x].clone()).collect());
        let semigroup = Semigroup { n: m, fingerprint: fnv1a(m, &table), table, labels };
        Ok(Embedding { semigroup, embedding: members })
    }

    /// `S/ρ`, with classes numbered by canonical block id.
    pub fn quotient(&self, c: &Congruence) -> Quotient {
        assert_eq!(c.host(), self.fingerprint, "congruence belongs to another semigroup");
        let p = c.partition();
        let reps = p.representatives();
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(p.block_of(self.mul(a, b)));
            }
        }
        let semigroup = Semigroup { n: m, fingerprint: fnv1a(m, &table), table, labels: None };
        Quotient { semigroup, projection: p.block_ids().to_vec() }
    }

    /// `S × T` with `(s, t)` at index `s·|T| + t`.
    pub fn direct_product(&self, other: &Semigroup) -> Semigroup {
        let (n, m) = (self.n, other.n);
        let mut table = Vec::with_capacity(n * m * n * m);
        for a in 0..n * m {
            for b in 0..n * m {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                table.push(self.mul(a1, b1) * m + other.mul(a2, b2));
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(l), Some(r)) => Some(
                (0..n * m).map(|a| format!("({},{})", l[a / m], r[a % m])).collect(),
            ),
            _ => None,
        };
        let k = n * m;
        Semigroup { n: k, fingerprint: fnv1a(k, &table), table, labels }
    }

    /// Relabels by `perm`: old element `a` becomes `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Semigroup {
        let n = self.n;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for a in 0..n {
                out[perm[a]] = l[a].clone();
            }
            out
        });
        Semigroup { n, fingerprint: fnv1a(n, &table), table, labels }
    }

    /// The lexicographically least table over all relabelings, and the
    /// relabeling that produces it. Costs `n!` table comparisons.
    pub fn canonical_form(&self) -> (Semigroup, Vec<usize>) {
        let n = self.n;
        let mut best_perm: Vec<usize> = (0..n).collect();
        let mut best = self.permuted(&best_perm).table;
        let mut candidate = vec![0; n * n];
        for_each_permutation(n, |perm| {
            for a in 0..n {
                for b in 0..n {
                    candidate[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
                }
            }
            if candidate < best {
                best.copy_from_slice(&candidate);
                best_perm.copy_from_slice(perm);
            }
        });
        (self.unlabeled().permuted(&best_perm), best_perm)
    }

    /// Isomorphism test by canonical form; only sensible for small orders.
    pub fn is_isomorphic(&self, other: &Semigroup) -> bool {
        self.n == other.n && self.canonical_form().0.table == other.canonical_form().0.table
    }
}

/// Heap's algorithm over permutations of `0..n`.
pub(crate) fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

impl core::fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Semigroup").field("order", &self.n).field("table", &self.rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&[usize]]) -> Result<Semigroup> {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        Semigroup::from_table(&rows, None)
    }

    // brute-force associativity, independent of the validator's loop order
    fn brute_associative(rows: &[&[usize]]) -> bool {
        let n = rows.len();
        let m = |a: usize, b: usize| rows[a][b];
        (0..n * n * n).all(|i| {
            let (a, b, c) = (i / (n * n), (i / n) % n, i % n);
            m(m(a, b), c) == m(a, m(b, c))
        })
    }

    #[test]
    fn trivial_and_left_zero_are_valid() {
        assert_eq!(table(&[&[0]]).unwrap().order(), 1);
        let l2 = table(&[&[0, 0], &[1, 1]]).unwrap();
        assert!(l2.is_completely_regular());
    }

    #[test]
    fn validator_agrees_with_brute_force() {
        let t: &[&[usize]] = &[&[1, 0], &[0, 0]];
        assert_eq!(brute_associative(t), table(t).is_ok());
        assert!(!brute_associative(t));
        match table(t) {
            Err(Error::NotAssociative { a, b, c }) => {
                let m = |x: usize, y: usize| t[x][y];
                assert_ne!(m(m(a, b), c), m(a, m(b, c)));
            }
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn range_and_shape_errors() {
        assert_eq!(
            table(&[&[0, 2], &[0, 0]]).unwrap_err(),
            Error::IndexOutOfRange { row: 0, col: 1, value: 2, order: 2 }
        );
        assert!(matches!(table(&[&[0, 0], &[0]]), Err(Error::NotSquare { .. })));
        assert_eq!(table(&[]).unwrap_err(), Error::EmptyTable);
        let dup = Some(vec![String::from("a"), String::from("a")]);
        assert_eq!(
            Semigroup::from_table(&[vec![0, 0], vec![1, 1]], dup).unwrap_err(),
            Error::BadLabels
        );
    }

    #[test]
    fn null_extension_is_not_completely_regular() {
        let s = table(&[&[0, 0], &[0, 0]]).unwrap();
        // no x with 1·x·1 = 1
        assert!((0..2).all(|x| s.mul(s.mul(1, x), 1) != 1));
        assert_eq!(s.complete_regularity(), Err(1));
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut seen = BTreeSet::new();
        for_each_permutation(4, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        let s = table(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]).unwrap();
        let t = s.permuted(&[2, 0, 1]);
        assert!(s.is_isomorphic(&t));
        assert_eq!(s.canonical_form().0, t.canonical_form().0);
    }

    #[test]
    fn subsemigroup_rejects_unclosed_subsets() {
        let z3 = table(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]).unwrap();
        assert_eq!(z3.subsemigroup(&[0, 1]).unwrap_err(), Error::NotClosed { a: 1, b: 1 });
        assert_eq!(z3.subsemigroup(&[0]).unwrap().semigroup.order(), 1);
    }
}
