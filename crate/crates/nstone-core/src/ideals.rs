//! Order ideals, join closure, and prime ideals.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, ElementSet, MulTable};

/// Upper bound on the number of compatible ideals enumerated at once.
pub const MAX_IDEALS: usize = 4096;

/// An order ideal, stored as its carrier together with the antichain of its
/// maximal nonzero elements. The carrier always contains 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealRep {
    pub generators: Vec<ElementId>,
    pub carrier: ElementSet,
}

impl IdealRep {
    /// Wraps a carrier that is already an order ideal.
    pub fn from_carrier(s: &MulTable, carrier: ElementSet) -> Self {
        let generators = carrier
            .iter()
            .filter(|&x| x != 0)
            .filter(|&x| carrier.iter().all(|y| y == x || !s.leq(ElementId(x), ElementId(y))))
            .map(ElementId)
            .collect();
        IdealRep { generators, carrier }
    }

    pub fn zero(s: &MulTable) -> Self {
        IdealRep { generators: Vec::new(), carrier: BitSet::singleton(s.size(), 0) }
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.carrier.contains(x.0)
    }

    /// Every element is idempotent.
    pub fn is_idempotent(&self, s: &MulTable) -> bool {
        self.carrier.is_subset(s.idempotent_set())
    }
}

impl Ord for IdealRep {
    fn cmp(&self, other: &Self) -> Ordering {
        self.carrier
            .len()
            .cmp(&other.carrier.len())
            .then_with(|| self.generators.cmp(&other.generators))
    }
}

impl PartialOrd for IdealRep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `{y : y <= a for some a in set} ∪ {0}`
pub fn down_set(s: &MulTable, set: &ElementSet) -> ElementSet {
    let mut out = BitSet::singleton(s.size(), 0);
    for a in set.iter() {
        out.union_with(s.down(ElementId(a)));
    }
    out
}

pub fn down(s: &MulTable, set: &ElementSet) -> IdealRep {
    IdealRep::from_carrier(s, down_set(s, set))
}

pub fn principal(s: &MulTable, a: ElementId) -> IdealRep {
    IdealRep::from_carrier(s, s.down(a).clone())
}

pub fn up(s: &MulTable, set: &ElementSet) -> ElementSet {
    let mut out = BitSet::new(s.size());
    for a in set.iter() {
        out.union_with(s.up(ElementId(a)));
    }
    out
}

pub fn is_order_ideal(s: &MulTable, set: &ElementSet) -> bool {
    set.contains(0) && set.iter().all(|a| s.down(ElementId(a)).is_subset(set))
}

/// Adds every existing join of a compatible pair and re-closes downwards,
/// until stable. On distributive semigroups this is the join closure.
pub fn saturate_joins(s: &MulTable, set: &ElementSet) -> ElementSet {
    let mut cur = down_set(s, set);
    loop {
        let mut next = cur.clone();
        for a in cur.iter() {
            for b in cur.intersection(s.compatible_with(ElementId(a))).iter() {
                if let Some(j) = s.join(ElementId(a), ElementId(b)) {
                    if !next.contains(j.0) {
                        next.union_with(s.down(j));
                    }
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Joins of all nonempty finite compatible subsets of an order ideal.
pub fn vee_closure(s: &MulTable, a: &IdealRep) -> Result<IdealRep> {
    if !s.is_distributive() {
        return Err(Error::NotDistributive);
    }
    Ok(IdealRep::from_carrier(s, saturate_joins(s, &a.carrier)))
}

pub fn is_vee_closed(s: &MulTable, a: &ElementSet) -> bool {
    a.iter().all(|x| {
        a.intersection(s.compatible_with(ElementId(x)))
            .iter()
            .all(|y| s.join(ElementId(x), ElementId(y)).is_none_or(|j| a.contains(j.0)))
    })
}

/// Order ideal generated by all products `ab`.
pub fn ideal_product(s: &MulTable, a: &IdealRep, b: &IdealRep) -> IdealRep {
    let mut prods = BitSet::new(s.size());
    for x in a.generators.iter().chain([&ElementId::ZERO]) {
        for y in b.generators.iter().chain([&ElementId::ZERO]) {
            prods.insert(s.mul(*x, *y).0);
        }
    }
    down(s, &prods)
}

/// Proper, and `a↓ ∩ b↓ ⊆ P` forces `a ∈ P` or `b ∈ P`.
pub fn is_prime_ideal(s: &MulTable, p: &IdealRep) -> bool {
    if p.carrier.len() == s.size() {
        return false;
    }
    s.elements().all(|a| {
        p.contains(a)
            || s.elements().all(|b| {
                p.contains(b) || !s.down(a).intersection(s.down(b)).is_subset(&p.carrier)
            })
    })
}

/// A join-closed ideal containing `seed`, disjoint from `avoid`, and maximal
/// with these properties. Candidates are tried in ascending id order.
pub fn maximal_disjoint_ideal(s: &MulTable, seed: &IdealRep, avoid: &ElementSet) -> Result<IdealRep> {
    let mut cur = saturate_joins(s, &seed.carrier);
    if cur.intersects(avoid) {
        return Err(Error::NotDisjoint);
    }
    loop {
        let mut grew = false;
        for c in 0..s.size() {
            if cur.contains(c) {
                continue;
            }
            let mut cand = cur.clone();
            cand.insert(c);
            let cand = saturate_joins(s, &cand);
            if cand.is_disjoint(avoid) {
                cur = cand;
                grew = true;
            }
        }
        if !grew {
            return Ok(IdealRep::from_carrier(s, cur));
        }
    }
}

/// All compatible order ideals, in canonical order; the zero ideal is first.
pub fn compatible_ideals(s: &MulTable) -> Result<Vec<IdealRep>> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(s, 1, &mut chosen, &mut out)?;
    out.sort();
    Ok(out)
}

fn antichains(s: &MulTable, from: usize, chosen: &mut Vec<ElementId>, out: &mut Vec<IdealRep>) -> Result<()> {
    if out.len() >= MAX_IDEALS {
        return Err(Error::TooLarge("too many compatible ideals".into()));
    }
    let gens = BitSet::from_iter(s.size(), chosen.iter().map(|x| x.0));
    out.push(IdealRep { generators: chosen.clone(), carrier: down_set(s, &gens) });
    for x in (from..s.size()).map(ElementId) {
        let fits = chosen
            .iter()
            .all(|&c| s.compatible(c, x) && !s.leq(c, x) && !s.leq(x, c));
        if fits {
            chosen.push(x);
            antichains(s, x.0 + 1, chosen, out)?;
            chosen.pop();
        }
    }
    Ok(())
}
