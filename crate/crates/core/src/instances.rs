//! Standard semigroups, Rees matrix semigroups and exhaustive enumeration.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::semigroup::Semigroup;
use crate::special::{classify, ClassificationReport};
use crate::{CrSemigroup, Error, Result};

/// Largest order handled by [`enumerate_semigroups`].
pub const EXHAUSTIVE_BOUND: usize = 4;

fn build(n: usize, mul: impl FnMut(usize, usize) -> usize) -> Semigroup {
    Semigroup::from_fn(n, mul).expect("standard construction is associative")
}

/// `Z_n` under addition mod `n`; `cyclic_group(1)` is the trivial semigroup.
pub fn cyclic_group(n: usize) -> Semigroup {
    assert!(n >= 1);
    build(n, |a, b| (a + b) % n)
}

pub fn trivial() -> Semigroup {
    cyclic_group(1)
}

/// `xy = x`.
pub fn left_zero(n: usize) -> Semigroup {
    assert!(n >= 1);
    build(n, |a, _| a)
}

/// `xy = y`.
pub fn right_zero(n: usize) -> Semigroup {
    assert!(n >= 1);
    build(n, |_, b| b)
}

/// The chain `0 < 1 < … < n-1` under `min`.
pub fn chain_semilattice(n: usize) -> Semigroup {
    assert!(n >= 1);
    build(n, core::cmp::min)
}

/// `xy = 0`.
pub fn zero_semigroup(n: usize) -> Semigroup {
    assert!(n >= 1);
    build(n, |_, _| 0)
}

/// `left_zero(m) × right_zero(k)`, the `m × k` rectangular band.
pub fn rectangular_band(m: usize, k: usize) -> Semigroup {
    left_zero(m).direct_product(&right_zero(k))
}

/// Data for the Rees matrix semigroup `M(G; I, Λ; P)`.
#[derive(Clone, Debug)]
pub struct ReesMatrixSpec {
    pub group: Semigroup,
    pub rows: usize,
    pub cols: usize,
    /// `sandwich[λ][i]`, a `Λ × I` array of group elements.
    pub sandwich: Vec<Vec<usize>>,
}

/// `I × G × Λ` with `(i,g,λ)(j,h,μ) = (i, g·p_{λj}·h, μ)`; element
/// `(i,g,λ)` has index `(i·|G| + g)·|Λ| + λ`.
pub fn rees_matrix(spec: &ReesMatrixSpec) -> Result<Semigroup> {
    let g = &spec.group;
    let cr = CrSemigroup::new(g.clone()).map_err(|_| Error::NotAGroup)?;
    if cr.idempotent_list().len() != 1 {
        return Err(Error::NotAGroup);
    }
    let (ni, nl, ng) = (spec.rows, spec.cols, g.order());
    if ni == 0
        || nl == 0
        || spec.sandwich.len() != nl
        || spec.sandwich.iter().any(|row| row.len() != ni || row.iter().any(|&p| p >= ng))
    {
        return Err(Error::InvalidSandwich);
    }
    let index = |i: usize, x: usize, l: usize| (i * ng + x) * nl + l;
    let n = ni * ng * nl;
    Semigroup::from_fn(n, |a, b| {
        let (i, x, l) = (a / (ng * nl), (a / nl) % ng, a % nl);
        let (j, y, m) = (b / (ng * nl), (b / nl) % ng, b % nl);
        index(i, g.mul(g.mul(x, spec.sandwich[l][j]), y), m)
    })
}

/// `M(Z₂; 2, 2; P)` with `P = [[e, e], [e, g]]`: completely simple, cryptic,
/// not orthodox. Order 8.
pub fn non_orthodox_completely_simple() -> Semigroup {
    rees_matrix(&ReesMatrixSpec {
        group: cyclic_group(2),
        rows: 2,
        cols: 2,
        sandwich: vec![vec![0, 0], vec![0, 1]],
    })
    .expect("valid sandwich")
}

/// `Z₂` acting on a two-element left-zero band by swapping it:
/// `{1, g} ∪ {e, f}` with `g·e = f`. Completely regular but `ℋ` is not a
/// congruence (`1 ℋ g` while `1·e = e` and `g·e = f` are not `ℋ`-related).
pub fn swap_action_semigroup() -> Semigroup {
    // 0 = 1, 1 = g, 2 = e, 3 = f
    build(4, |a, b| match (a < 2, b < 2) {
        (true, true) => (a + b) % 2,
        (true, false) => 2 + ((b - 2) ^ a),
        (false, _) => a,
    })
}

/// Named instances used throughout tests and the shipped corpus.
pub fn catalog() -> Vec<(&'static str, Semigroup)> {
    let z2 = cyclic_group(2);
    let z3 = cyclic_group(3);
    vec![
        ("trivial", trivial()),
        ("Z2", z2.clone()),
        ("Z3", z3.clone()),
        ("Z4", cyclic_group(4)),
        ("L2", left_zero(2)),
        ("R2", right_zero(2)),
        ("Y2", chain_semilattice(2)),
        ("Y3", chain_semilattice(3)),
        ("R22", rectangular_band(2, 2)),
        ("CS", non_orthodox_completely_simple()),
        ("R22xZ2", rectangular_band(2, 2).direct_product(&z2)),
        ("Y2xZ2", chain_semilattice(2).direct_product(&z2)),
        ("Y2xZ3", chain_semilattice(2).direct_product(&z3)),
        ("Y3xZ2", chain_semilattice(3).direct_product(&z2)),
        ("Y4xZ2", chain_semilattice(4).direct_product(&z2)),
        ("swap4", swap_action_semigroup()),
    ]
}

/// One semigroup of a census, in canonical form.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub semigroup: Semigroup,
    pub order: usize,
    pub flags: ClassificationReport,
}

/// Every semigroup of order `n` up to isomorphism (not anti-isomorphism),
/// each in canonical form, sorted by canonical table.
///
/// Tables are filled cell by cell in row-major order; a branch is cut as
/// soon as some triple with all products known violates associativity.
pub fn enumerate_semigroups(
    n: usize,
    filter: Option<&dyn Fn(&Semigroup) -> bool>,
) -> Result<Vec<CensusEntry>> {
    if n == 0 || n > EXHAUSTIVE_BOUND {
        return Err(Error::OrderBoundExceeded { order: n, bound: EXHAUSTIVE_BOUND });
    }
    let mut canonical: BTreeSet<Vec<usize>> = BTreeSet::new();
    for_each_associative_table(n, |table| {
        let s = Semigroup::from_flat(n, table.to_vec(), None).expect("search keeps associativity");
        canonical.insert(s.canonical_form().0.flat_table().to_vec());
    });
    Ok(canonical
        .into_iter()
        .map(|t| Semigroup::from_flat(n, t, None).expect("canonical table is associative"))
        .filter(|s| filter.is_none_or(|f| f(s)))
        .map(|s| CensusEntry { order: n, flags: classify(&s), semigroup: s })
        .collect())
}

/// Calls `visit` on every associative `n × n` table (labelled, not reduced).
pub fn for_each_associative_table(n: usize, mut visit: impl FnMut(&[usize])) {
    const UNSET: usize = usize::MAX;
    let mut table = vec![UNSET; n * n];

    fn consistent(n: usize, t: &[usize], a: usize, b: usize) -> bool {
        let get = |x: usize, y: usize| if x == UNSET || y == UNSET { UNSET } else { t[x * n + y] };
        // triples in which cell (a,b) takes part
        for z in 0..n {
            // (a·b)·z vs a·(b·z)
            let l = get(get(a, b), z);
            let r = get(a, get(b, z));
            if l != UNSET && r != UNSET && l != r {
                return false;
            }
            // (z·a)·b vs z·(a·b)
            let l = get(get(z, a), b);
            let r = get(z, get(a, b));
            if l != UNSET && r != UNSET && l != r {
                return false;
            }
        }
        // (x·y)·z = a·z with x·y = a, and x·(y·z) = x·b with y·z = b
        for x in 0..n {
            for y in 0..n {
                let xy = get(x, y);
                if xy == a {
                    for z in 0..n {
                        let l = get(a, z);
                        let r = get(x, get(y, z));
                        if l != UNSET && r != UNSET && l != r {
                            return false;
                        }
                    }
                }
                if xy == b {
                    for w in 0..n {
                        let l = get(get(w, x), y);
                        let r = get(w, b);
                        if l != UNSET && r != UNSET && l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(n: usize, k: usize, t: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if k == n * n {
            visit(t);
            return;
        }
        let (a, b) = (k / n, k % n);
        for v in 0..n {
            t[k] = v;
            if consistent(n, t, a, b) {
                fill(n, k + 1, t, visit);
            }
        }
        t[k] = UNSET;
    }

    fill(n, 0, &mut table, &mut visit);
}

/// Labels `0..n` as strings, for tables that want explicit labels.
pub fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| alloc::format!("{i}")).collect()
}
