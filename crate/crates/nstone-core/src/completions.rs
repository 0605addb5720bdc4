//! Completions of a semigroup by compatible order ideals.
//!
//! Elements of a completion are ideals of a ground semigroup, listed in the
//! canonical ideal order so that the zero ideal is element 0.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::filters;
use crate::ideals::{self, IdealRep};
use crate::report::{Check, Report};
use crate::semigroup::{ElementId, ElementSet, MulTable};
use crate::tight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionKind {
    /// All compatible order ideals.
    Distributive,
    /// Join-closed compatible order ideals.
    JoinClosed,
    /// Tightly closed compatible ideals of the tight quotient.
    Tight,
}

#[derive(Clone, Debug)]
pub struct CompletedSemigroup {
    pub kind: CompletionKind,
    pub table: MulTable,
    /// The semigroup whose ideals are the elements.
    pub ground: MulTable,
    /// Image of each source element in the ground semigroup.
    pub to_ground: Vec<ElementId>,
    /// For each ground element, one source element mapping onto it.
    pub ground_reps: Vec<ElementId>,
    pub elem_ideals: Vec<IdealRep>,
    /// Image of each source element.
    pub embedding: Vec<ElementId>,
}

impl CompletedSemigroup {
    pub fn index_of(&self, carrier: &ElementSet) -> Option<ElementId> {
        self.elem_ideals.iter().position(|i| &i.carrier == carrier).map(ElementId)
    }
}

fn ideal_name(g: &MulTable, i: &IdealRep) -> String {
    if i.generators.is_empty() {
        return "0".into();
    }
    let names: Vec<String> = i.generators.iter().map(|&x| g.name(x)).collect();
    format!("<{}>", names.join(" "))
}

/// Tabulates a product on a canonically sorted list of ideals.
fn assemble(
    ground: &MulTable,
    elems: &[IdealRep],
    product: impl Fn(&IdealRep, &IdealRep) -> IdealRep,
) -> Result<MulTable> {
    let index: BTreeMap<&ElementSet, usize> = elems.iter().enumerate().map(|(i, x)| (&x.carrier, i)).collect();
    let mut rows = Vec::with_capacity(elems.len());
    for a in elems {
        let mut row = Vec::with_capacity(elems.len());
        for b in elems {
            let p = product(a, b);
            let i = index
                .get(&p.carrier)
                .ok_or_else(|| Error::Malformed(format!("product {:?} escapes the completion", p.carrier)))?;
            row.push(*i);
        }
        rows.push(row);
    }
    let names = elems.iter().map(|i| ideal_name(ground, i)).collect();
    MulTable::new(rows)?.with_names(names)
}

fn locate(elems: &[IdealRep], carrier: &ElementSet) -> ElementId {
    ElementId(elems.iter().position(|i| &i.carrier == carrier).expect("ideal listed in completion"))
}

/// `D(S)`, with `s ↦ s↓`.
pub fn distributive_completion(s: &MulTable) -> Result<CompletedSemigroup> {
    let elems = ideals::compatible_ideals(s)?;
    let table = assemble(s, &elems, |a, b| ideals::ideal_product(s, a, b))?;
    let embedding = s.elements().map(|x| locate(&elems, s.down(x))).collect();
    Ok(CompletedSemigroup {
        kind: CompletionKind::Distributive,
        table,
        ground: s.clone(),
        to_ground: s.elements().collect(),
        ground_reps: s.elements().collect(),
        elem_ideals: elems,
        embedding,
    })
}

/// The join of `θ` over each ideal's generators; `θ(0)` for the zero ideal.
pub fn lift_through_generators(
    c: &CompletedSemigroup,
    t: &MulTable,
    theta: &[ElementId],
) -> Result<Vec<ElementId>> {
    c.elem_ideals
        .iter()
        .map(|i| {
            let imgs = i.generators.iter().map(|&g| theta[c.ground_reps[g.0].0]);
            t.join_all(imgs.chain([theta[0]])).ok_or(Error::JoinMissing)
        })
        .collect()
}

/// The unique morphism `D(S) → T` extending a homomorphism `θ: S → T`.
pub fn lift_through_d(c: &CompletedSemigroup, t: &MulTable, theta: &[ElementId]) -> Result<Vec<ElementId>> {
    lift_through_generators(c, t, theta)
}

/// `Idl(S)` for distributive `S`; the embedding is an isomorphism.
pub fn idl_completion(s: &MulTable) -> Result<CompletedSemigroup> {
    if !s.is_distributive() {
        return Err(Error::NotDistributive);
    }
    let elems: Vec<IdealRep> = ideals::compatible_ideals(s)?
        .into_iter()
        .filter(|i| ideals::is_vee_closed(s, &i.carrier))
        .collect();
    let table = assemble(s, &elems, |a, b| {
        let p = ideals::ideal_product(s, a, b);
        IdealRep::from_carrier(s, ideals::saturate_joins(s, &p.carrier))
    })?;
    let embedding = s.elements().map(|x| locate(&elems, s.down(x))).collect();
    Ok(CompletedSemigroup {
        kind: CompletionKind::JoinClosed,
        table,
        ground: s.clone(),
        to_ground: s.elements().collect(),
        ground_reps: s.elements().collect(),
        elem_ideals: elems,
        embedding,
    })
}

/// `{x : x → (A ∩ x↓) \ {0}}`; no separativity check.
pub fn tight_closure_unchecked(s: &MulTable, a: &ElementSet) -> IdealRep {
    let closed = BitSet::from_iter(
        s.size(),
        s.elements().filter(|&x| tight::arrow(s, x, &a.intersection(s.down(x)))).map(|x| x.0),
    );
    IdealRep::from_carrier(s, closed)
}

/// Tight closure of an ideal of a separative semigroup.
pub fn tight_closure(s: &MulTable, a: &IdealRep) -> Result<IdealRep> {
    if !tight::is_separative(s) {
        return Err(Error::NotSeparative);
    }
    Ok(tight_closure_unchecked(s, &a.carrier))
}

/// `D_t(S)`: closures of the compatible ideals of the tight quotient, with
/// `s ↦ closure of σ(s)↓`.
pub fn tight_completion(s: &MulTable) -> Result<CompletedSemigroup> {
    let q = tight::tight_quotient(s)?;
    let g = &q.table;
    let closed: BTreeSet<IdealRep> = ideals::compatible_ideals(g)?
        .iter()
        .map(|i| tight_closure_unchecked(g, &i.carrier))
        .collect();
    let elems: Vec<IdealRep> = closed.into_iter().collect();
    let table = assemble(g, &elems, |a, b| {
        tight_closure_unchecked(g, &ideals::ideal_product(g, a, b).carrier)
    })?;
    let embedding = s
        .elements()
        .map(|x| locate(&elems, &tight_closure_unchecked(g, g.down(q.sigma[x.0])).carrier))
        .collect();
    let g = g.clone();
    Ok(CompletedSemigroup {
        kind: CompletionKind::Tight,
        table,
        ground: g,
        to_ground: q.sigma,
        ground_reps: q.representatives,
        elem_ideals: elems,
        embedding,
    })
}

/// The unique morphism `D_t(S) → T` through which a tight map factors.
pub fn lift_through_tight(
    s: &MulTable,
    c: &CompletedSemigroup,
    t: &MulTable,
    theta: &[ElementId],
) -> Result<Vec<ElementId>> {
    let constant_on_classes = s
        .elements()
        .all(|x| s.elements().all(|y| c.embedding[x.0] != c.embedding[y.0] || theta[x.0] == theta[y.0]));
    if !constant_on_classes {
        return Err(Error::NotTight);
    }
    lift_through_generators(c, t, theta)
}

/// The two characterizations of a Boolean tight completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PreBoolean {
    /// The tight completion is Boolean.
    pub via_completion: bool,
    /// Every tight filter is an ultrafilter.
    pub via_filters: bool,
}

impl PreBoolean {
    pub fn agree(&self) -> bool {
        self.via_completion == self.via_filters
    }
}

pub fn is_pre_boolean(s: &MulTable) -> Result<PreBoolean> {
    let via_completion = tight_completion(s)?.table.is_boolean();
    let via_filters = tight::tight_filters(s).into_iter().all(|f| filters::is_ultrafilter(s, f));
    Ok(PreBoolean { via_completion, via_filters })
}

/// Closure laws of the tight closure over all compatible ideals of the tight
/// quotient of `s`.
pub fn nucleus_check(s: &MulTable) -> Result<Report> {
    let q = tight::tight_quotient(s)?;
    let g = &q.table;
    let all = ideals::compatible_ideals(g)?;
    let close = |a: &ElementSet| tight_closure_unchecked(g, a).carrier;
    let closed: Vec<ElementSet> = all.iter().map(|a| close(&a.carrier)).collect();
    let name = |a: &IdealRep| ideal_name(g, a);

    let mut separative = Check::new("quotient separative");
    separative.record(tight::is_separative(g), String::new);
    let mut extensive = Check::new("extensive");
    let mut monotone = Check::new("monotone");
    let mut idempotent = Check::new("idempotent");
    let mut multiplicative = Check::new("multiplicative");
    let mut idempotent_ideals = Check::new("idempotent ideals stay idempotent");
    let mut ideal_valued = Check::new("closure is an order ideal");
    for (a, ca) in all.iter().zip(&closed) {
        extensive.record(a.carrier.is_subset(ca), || name(a));
        idempotent.record(close(ca) == *ca, || name(a));
        ideal_valued.record(ideals::is_order_ideal(g, ca), || name(a));
        if a.is_idempotent(g) {
            idempotent_ideals.record(ca.is_subset(g.idempotent_set()), || name(a));
        }
        for (b, cb) in all.iter().zip(&closed) {
            if a.carrier.is_subset(&b.carrier) {
                monotone.record(ca.is_subset(cb), || format!("{} {}", name(a), name(b)));
            }
            let ia = IdealRep::from_carrier(g, ca.clone());
            let ib = IdealRep::from_carrier(g, cb.clone());
            let lhs = ideals::ideal_product(g, &ia, &ib).carrier;
            let rhs = close(&ideals::ideal_product(g, a, b).carrier);
            multiplicative.record(lhs.is_subset(&rhs), || format!("{} {}", name(a), name(b)));
        }
    }
    Ok(Report {
        checks: alloc::vec![separative, extensive, monotone, idempotent, multiplicative, idempotent_ideals, ideal_valued],
    })
}
