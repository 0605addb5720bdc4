//! Filters of a finite inverse semigroup.
//!
//! A filter is a directed, upward closed set avoiding 0. In a finite
//! semigroup every filter is `x↑` for a unique nonzero base `x`.

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideals::{self, IdealRep};
use crate::semigroup::{ElementId, ElementSet, MulTable};

/// The principal filter `base↑`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FilterRep {
    pub base: ElementId,
}

impl FilterRep {
    pub fn new(base: ElementId) -> Self {
        FilterRep { base }
    }

    pub fn members<'a>(&self, s: &'a MulTable) -> &'a ElementSet {
        s.up(self.base)
    }

    pub fn contains(&self, s: &MulTable, x: ElementId) -> bool {
        s.leq(self.base, x)
    }
}

/// All proper filters, ordered by base.
pub fn all_filters(s: &MulTable) -> Vec<FilterRep> {
    s.nonzero().map(FilterRep::new).collect()
}

/// The filter with exactly these members, if the set is one.
pub fn filter_from_set(s: &MulTable, set: &ElementSet) -> Option<FilterRep> {
    if set.contains(0) {
        return None;
    }
    let base = set.iter().map(ElementId).find(|&b| set.iter().all(|x| s.leq(b, ElementId(x))))?;
    (s.up(base) == set).then_some(FilterRep::new(base))
}

/// Whenever an existing join `a ∨ b` lies in the filter, so does `a` or `b`.
pub fn is_prime_filter(s: &MulTable, f: FilterRep) -> bool {
    s.elements().all(|a| {
        s.compatible_with(a).iter().map(ElementId).all(|b| match s.join(a, b) {
            Some(j) if f.contains(s, j) => f.contains(s, a) || f.contains(s, b),
            _ => true,
        })
    })
}

pub fn prime_filters(s: &MulTable) -> Vec<FilterRep> {
    all_filters(s).into_iter().filter(|&f| is_prime_filter(s, f)).collect()
}

/// Maximal proper filter: the base is minimal among nonzero elements.
pub fn is_ultrafilter(s: &MulTable, f: FilterRep) -> bool {
    s.down(f.base).len() == 2
}

/// Ultrafilter test through the idempotent filter `d(F)` inside `E(S)`:
/// every idempotent meeting all members of `d(F) ∩ E` nontrivially lies in it.
pub fn is_ultrafilter_via_idempotents(s: &MulTable, f: FilterRep) -> bool {
    let e = s.d(f.base);
    let members: Vec<ElementId> =
        s.up(e).intersection(s.idempotent_set()).iter().map(ElementId).collect();
    s.idempotents().into_iter().all(|a| {
        let meets_all = members.iter().all(|&y| s.mul(a, y) != ElementId::ZERO);
        !meets_all || s.leq(e, a)
    })
}

pub fn is_idempotent_filter(s: &MulTable, f: FilterRep) -> bool {
    s.is_idempotent(f.base)
}

/// `(x⁻¹x)↑`
pub fn filter_d(s: &MulTable, f: FilterRep) -> FilterRep {
    FilterRep::new(s.d(f.base))
}

/// `(xx⁻¹)↑`
pub fn filter_r(s: &MulTable, f: FilterRep) -> FilterRep {
    FilterRep::new(s.r(f.base))
}

pub fn filter_inverse(s: &MulTable, f: FilterRep) -> FilterRep {
    FilterRep::new(s.inv(f.base))
}

/// `(FG)↑`, defined when `d(F) = r(G)`.
pub fn filter_product(s: &MulTable, f: FilterRep, g: FilterRep) -> Result<FilterRep> {
    if filter_d(s, f) != filter_r(s, g) {
        return Err(Error::Undefined);
    }
    Ok(FilterRep::new(s.mul(f.base, g.base)))
}

/// A prime filter containing `b` and omitting `a`, as the complement of a
/// maximal join-closed ideal containing `a↓` and avoiding `b↑`.
pub fn separating_prime_filter(s: &MulTable, a: ElementId, b: ElementId) -> Result<FilterRep> {
    if s.leq(b, a) {
        return Err(Error::BelowViolation(a, b));
    }
    let seed = ideals::principal(s, a);
    let j: IdealRep = ideals::maximal_disjoint_ideal(s, &seed, s.up(b))?;
    let f = filter_from_set(s, &j.carrier.complement()).ok_or(Error::NoPrimeFilter)?;
    if !is_prime_filter(s, f) {
        return Err(Error::NoPrimeFilter);
    }
    Ok(f)
}

/// Indices of the filters in `filters` that contain `x`.
pub fn containing(s: &MulTable, filters: &[FilterRep], x: ElementId) -> BitSet {
    BitSet::from_iter(
        filters.len(),
        filters.iter().enumerate().filter(|(_, f)| f.contains(s, x)).map(|(i, _)| i),
    )
}
