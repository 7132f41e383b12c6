use alloc::vec::Vec;
use core::ops::Deref;

use crate::green::GreenData;
use crate::partition::Partition;
use crate::relation::BinaryRelation;
use crate::semigroup::Semigroup;
use crate::{Error, Result};

/// The inversion data of one element of a completely regular semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementView {
    pub index: usize,
    pub is_idempotent: bool,
    /// `a⁻¹`, the inverse of `a` inside its maximal subgroup.
    pub inverse: usize,
    /// `a⁰ = aa⁻¹ = a⁻¹a`.
    pub idempotent_power: usize,
}

impl Semigroup {
    pub fn element_view(&self, a: usize) -> Result<ElementView> {
        let inverse = self.group_inverse(a).ok_or(Error::NotCompletelyRegular { element: a })?;
        Ok(ElementView {
            index: a,
            is_idempotent: self.is_idempotent(a),
            inverse,
            idempotent_power: self.mul(a, inverse),
        })
    }
}

/// A semigroup certified to be completely regular, with its inversion,
/// idempotents and Green's relations precomputed.
///
/// Every kernel-trace operation takes this type, so the precondition is
/// checked once at construction.
#[derive(Clone, Debug)]
pub struct CrSemigroup {
    s: Semigroup,
    inverse: Vec<usize>,
    zero: Vec<usize>,
    idempotents: Vec<usize>,
    green: GreenData,
}

impl CrSemigroup {
    pub fn new(s: Semigroup) -> Result<Self> {
        let inverse = s.complete_regularity().map_err(|element| Error::NotCompletelyRegular { element })?;
        let zero = (0..s.order()).map(|a| s.mul(a, inverse[a])).collect();
        let idempotents = s.idempotents();
        let green = s.green();
        Ok(CrSemigroup { s, inverse, zero, idempotents, green })
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.s
    }

    pub fn into_semigroup(self) -> Semigroup {
        self.s
    }

    /// `a⁻¹`.
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a⁰`.
    pub fn zero(&self, a: usize) -> usize {
        self.zero[a]
    }

    /// The inversion map `a ↦ a⁻¹`.
    pub fn inversion(&self) -> &[usize] {
        &self.inverse
    }

    pub fn idempotent_list(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn green_data(&self) -> &GreenData {
        &self.green
    }

    pub fn h(&self) -> &Partition {
        &self.green.h
    }

    pub fn d(&self) -> &Partition {
        &self.green.d
    }

    pub fn view(&self, a: usize) -> ElementView {
        ElementView {
            index: a,
            is_idempotent: self.s.is_idempotent(a),
            inverse: self.inverse[a],
            idempotent_power: self.zero[a],
        }
    }

    /// `a Θ b` iff `a⁰b = ab⁰`.
    pub fn theta(&self) -> BinaryRelation {
        let s = &self.s;
        BinaryRelation::from_fn(s.order(), |a, b| s.mul(self.zero(a), b) == s.mul(a, self.zero(b)))
    }

    /// `a 𝔉 b` iff `ab⁻¹ ∈ E(S)`.
    pub fn f_relation(&self) -> BinaryRelation {
        let s = &self.s;
        BinaryRelation::from_fn(s.order(), |a, b| s.is_idempotent(s.mul(a, self.inv(b))))
    }

    /// `a 𝒴 b` iff `V(a) = V(b)`.
    pub fn y_relation(&self) -> BinaryRelation {
        y_relation(&self.s)
    }
}

impl Deref for CrSemigroup {
    type Target = Semigroup;

    fn deref(&self) -> &Semigroup {
        &self.s
    }
}

impl TryFrom<Semigroup> for CrSemigroup {
    type Error = Error;

    fn try_from(s: Semigroup) -> Result<Self> {
        CrSemigroup::new(s)
    }
}

/// `Θ` on a completely regular semigroup.
pub fn theta_relation(s: &CrSemigroup) -> BinaryRelation {
    s.theta()
}

/// `𝔉` on a completely regular semigroup.
pub fn f_relation(s: &CrSemigroup) -> BinaryRelation {
    s.f_relation()
}

/// `𝒴`, defined on any semigroup.
pub fn y_relation(s: &Semigroup) -> BinaryRelation {
    let v: Vec<Vec<usize>> = (0..s.order()).map(|a| s.inverses_set(a)).collect();
    BinaryRelation::from_fn(s.order(), |a, b| v[a] == v[b])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{cyclic_group, left_zero, rectangular_band};

    #[test]
    fn group_inverse_and_identity() {
        let z3 = cyclic_group(3);
        let v = z3.element_view(1).unwrap();
        assert_eq!((v.inverse, v.idempotent_power), (2, 0));
        assert!(!v.is_idempotent);
    }

    #[test]
    fn idempotents_are_self_inverse() {
        let l2 = left_zero(2);
        let v = l2.element_view(0).unwrap();
        assert_eq!((v.inverse, v.idempotent_power), (0, 0));
        let r22 = CrSemigroup::new(rectangular_band(2, 2)).unwrap();
        for a in 0..4 {
            assert_eq!(r22.inv(a), a);
            assert_eq!(r22.zero(a), a);
        }
    }

    #[test]
    fn non_cr_element_view_fails() {
        let null = Semigroup::from_fn(2, |_, _| 0).unwrap();
        assert_eq!(null.element_view(1), Err(Error::NotCompletelyRegular { element: 1 }));
        assert!(CrSemigroup::new(null).is_err());
    }

    #[test]
    fn theta_and_f_on_small_cases() {
        let l2 = CrSemigroup::new(left_zero(2)).unwrap();
        assert_eq!(l2.theta(), BinaryRelation::universal(2));
        assert_eq!(l2.f_relation(), BinaryRelation::universal(2));
        let z3 = CrSemigroup::new(cyclic_group(3)).unwrap();
        assert_eq!(z3.theta(), BinaryRelation::identity(3));
        assert_eq!(z3.f_relation(), BinaryRelation::identity(3));
        assert_eq!(z3.y_relation(), BinaryRelation::identity(3));
    }
}
