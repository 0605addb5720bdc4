//! Homomorphisms between finite inverse semigroups, their classification,
//! exhaustive enumeration, and the dual functor of a callitic morphism.

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::filters;
use crate::groupoids::{self, TopologicalGroupoid};
use crate::ideals;
use crate::report::{Check, Report};
use crate::semigroup::{ElementId, MulTable};
use crate::tight;

/// Largest source for [`enumerate_homomorphisms`].
pub const MAX_ENUMERATION_SOURCE: usize = 8;
/// Search nodes visited before giving up.
pub const DEFAULT_NODE_LIMIT: usize = 1_000_000;
/// Most nonzero elements below one element for the direct tightness test.
pub const MAX_COVER_POOL: usize = 16;

fn well_formed(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    theta.len() == s.size() && theta.iter().all(|x| x.0 < t.size())
}

pub fn is_homomorphism(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    well_formed(s, t, theta)
        && s.elements().all(|a| s.elements().all(|b| theta[s.mul(a, b).0] == t.mul(theta[a.0], theta[b.0])))
}

/// A homomorphism preserving every existing join of a compatible pair.
pub fn is_morphism(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    is_homomorphism(s, t, theta)
        && s.elements().all(|a| {
            s.compatible_with(a).iter().map(ElementId).all(|b| match s.join(a, b) {
                Some(j) => t.join(theta[a.0], theta[b.0]) == Some(theta[j.0]),
                None => true,
            })
        })
}

/// Every element of `t` is the join of the elements below it that lie
/// under the image.
pub fn is_proper(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    if !well_formed(s, t, theta) {
        return false;
    }
    let under_image = ideals::down_set(t, &BitSet::from_iter(t.size(), theta.iter().map(|x| x.0)));
    t.elements().all(|x| t.join_set(&t.down(x).intersection(&under_image)) == Some(x))
}

/// Every prime filter of `t` has a nonempty preimage.
pub fn is_proper_via_filters(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    filters::prime_filters(t).into_iter().all(|p| s.elements().any(|x| p.contains(t, theta[x.0])))
}

/// `t <= θ(a), θ(b)` implies `t <= θ(c)` for some `c <= a, b`.
pub fn is_weakly_meet_preserving(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    s.elements().all(|a| {
        s.elements().all(|b| {
            let common_s = s.down(a).intersection(s.down(b));
            let common_t = t.down(theta[a.0]).intersection(t.down(theta[b.0]));
            let ok = common_t.iter().all(|x| common_s.iter().any(|c| t.leq(ElementId(x), theta[c])));
            ok
        })
    })
}

/// `x ⪯ s` implies `θ(x) = θ(s)`.
pub fn is_essential_map(s: &MulTable, theta: &[ElementId]) -> bool {
    s.elements().all(|a| s.down(a).iter().map(ElementId).all(|x| !tight::is_essential(s, x, a) || theta[x.0] == theta[a.0]))
}

/// `θ(a) = ⋁ θ(X)` for every tight cover `X` of every `a`. Checked on
/// inclusion-minimal covers, which suffice since the join is monotone.
pub fn is_tight_map(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> Result<bool> {
    for a in s.elements() {
        let pool: Vec<usize> = s.down(a).iter().filter(|&x| x != 0).collect();
        if pool.len() > MAX_COVER_POOL {
            return Err(Error::TooLarge(format!("{} elements below {}", pool.len(), s.name(a))));
        }
        let mut minimal: Vec<u32> = Vec::new();
        let mut masks: Vec<u32> = (0..1u32 << pool.len()).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            if minimal.iter().any(|&m| m & mask == m) {
                continue;
            }
            let cover = BitSet::from_iter(s.size(), (0..pool.len()).filter(|i| mask & (1 << i) != 0).map(|i| pool[i]));
            if !tight::arrow(s, a, &cover) {
                continue;
            }
            minimal.push(mask);
            let joined = t.join_all(cover.iter().map(|x| theta[x]).chain([theta[0]]));
            if joined != Some(theta[a.0]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `θ(s)` idempotent implies `s` idempotent.
pub fn is_idempotent_pure(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    s.elements().all(|x| !t.is_idempotent(theta[x.0]) || s.is_idempotent(x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct MorphismClass {
    pub morphism: bool,
    pub proper: bool,
    pub weakly_meet_preserving: bool,
    pub callitic: bool,
    pub tight: bool,
    pub essential: bool,
    pub idempotent_pure: bool,
}

pub fn classify_morphism(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> Result<MorphismClass> {
    if !is_homomorphism(s, t, theta) {
        return Err(Error::NotAFunctor("map is not a homomorphism".into()));
    }
    let proper = is_proper(s, t, theta);
    let weakly_meet_preserving = is_weakly_meet_preserving(s, t, theta);
    Ok(MorphismClass {
        morphism: is_morphism(s, t, theta),
        proper,
        weakly_meet_preserving,
        callitic: proper && weakly_meet_preserving,
        tight: is_tight_map(s, t, theta)?,
        essential: is_essential_map(s, theta),
        idempotent_pure: is_idempotent_pure(s, t, theta),
    })
}

/// Filter applied to enumerated homomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapClass {
    Homomorphism,
    Morphism,
    Proper,
    /// Join-preserving as well as proper and weakly meet preserving.
    Callitic,
    Tight,
    Essential,
    IdempotentPure,
}

impl MapClass {
    fn admits(self, c: &MorphismClass) -> bool {
        match self {
            MapClass::Homomorphism => true,
            MapClass::Morphism => c.morphism,
            MapClass::Proper => c.proper,
            MapClass::Callitic => c.morphism && c.callitic,
            MapClass::Tight => c.tight,
            MapClass::Essential => c.essential,
            MapClass::IdempotentPure => c.idempotent_pure,
        }
    }
}

/// All zero-preserving homomorphisms `s → t` of the given class, in
/// lexicographic order of their value lists.
pub fn enumerate_homomorphisms(s: &MulTable, t: &MulTable, class: MapClass) -> Result<Vec<Vec<ElementId>>> {
    if s.size() > MAX_ENUMERATION_SOURCE {
        return Err(Error::SearchBoundExceeded);
    }
    let require_joins = matches!(class, MapClass::Morphism | MapClass::Callitic);
    let all = search_homomorphisms(s, t, &alloc::vec![None; s.size()], require_joins, DEFAULT_NODE_LIMIT)?;
    let mut out = Vec::new();
    for theta in all {
        if class == MapClass::Homomorphism || class.admits(&classify_morphism(s, t, &theta)?) {
            out.push(theta);
        }
    }
    Ok(out)
}

/// Zero-preserving homomorphisms extending the `fixed` values, optionally
/// required to preserve joins of compatible pairs. Forced values are
/// propagated through products and joins before each branch.
pub fn search_homomorphisms(
    s: &MulTable,
    t: &MulTable,
    fixed: &[Option<ElementId>],
    require_joins: bool,
    node_limit: usize,
) -> Result<Vec<Vec<ElementId>>> {
    let mut start = fixed.to_vec();
    if start.len() != s.size() {
        return Err(Error::Malformed("constraint list has the wrong length".into()));
    }
    match start[0] {
        Some(z) if z != ElementId::ZERO => return Ok(Vec::new()),
        _ => start[0] = Some(ElementId::ZERO),
    }
    let mut out = Vec::new();
    let mut nodes = 0usize;
    branch(s, t, start, require_joins, node_limit, &mut nodes, &mut out)?;
    out.sort();
    Ok(out)
}

/// Extends `a` by forced values; `false` on a conflict.
fn propagate(s: &MulTable, t: &MulTable, a: &mut [Option<ElementId>], require_joins: bool) -> bool {
    loop {
        let mut changed = false;
        for x in s.elements() {
            let Some(tx) = a[x.0] else { continue };
            for y in s.elements() {
                let Some(ty) = a[y.0] else { continue };
                let want = t.mul(tx, ty);
                let xy = s.mul(x, y).0;
                match a[xy] {
                    Some(v) if v != want => return false,
                    Some(_) => {}
                    None => {
                        a[xy] = Some(want);
                        changed = true;
                    }
                }
                if require_joins && s.compatible(x, y) {
                    if let Some(j) = s.join(x, y) {
                        let Some(want) = t.join(tx, ty) else { return false };
                        match a[j.0] {
                            Some(v) if v != want => return false,
                            Some(_) => {}
                            None => {
                                a[j.0] = Some(want);
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn branch(
    s: &MulTable,
    t: &MulTable,
    mut a: Vec<Option<ElementId>>,
    require_joins: bool,
    node_limit: usize,
    nodes: &mut usize,
    out: &mut Vec<Vec<ElementId>>,
) -> Result<()> {
    *nodes += 1;
    if *nodes > node_limit {
        return Err(Error::SearchBoundExceeded);
    }
    if !propagate(s, t, &mut a, require_joins) {
        return Ok(());
    }
    match a.iter().position(Option::is_none) {
        None => out.push(a.into_iter().map(|x| x.expect("complete")).collect()),
        Some(free) => {
            for v in t.elements() {
                let mut next = a.clone();
                next[free] = Some(v);
                branch(s, t, next, require_joins, node_limit, nodes, out)?;
            }
        }
    }
    Ok(())
}

/// `P ↦ θ⁻¹(P)` from the prime spectrum of the target to that of the source.
#[derive(Clone, Debug)]
pub struct DualFunctor {
    pub source: TopologicalGroupoid,
    pub target: TopologicalGroupoid,
    pub map: Vec<usize>,
}

pub fn dual_functor(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> Result<DualFunctor> {
    if !is_morphism(s, t, theta) || !is_proper(s, t, theta) || !is_weakly_meet_preserving(s, t, theta) {
        return Err(Error::NotCallitic);
    }
    let source = groupoids::prime_spectrum(t)?;
    let target = groupoids::prime_spectrum(s)?;
    let tf = source.filters.as_ref().expect("prime spectrum lists its filters");
    let map = tf
        .iter()
        .map(|p| {
            let pre = BitSet::from_iter(s.size(), s.elements().filter(|&x| p.contains(t, theta[x.0])).map(|x| x.0));
            let f = filters::filter_from_set(s, &pre).ok_or(Error::NoPrimeFilter)?;
            target.arrow_of(f).ok_or(Error::NoPrimeFilter)
        })
        .collect::<Result<_>>()?;
    Ok(DualFunctor { source, target, map })
}

/// Functoriality, the covering property, and continuity of a dual functor:
/// the preimage of `X_s` is `X_θ(s)`.
pub fn dual_check(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> Result<Report> {
    let dual = dual_functor(s, t, theta)?;
    let mut rep = Report::default();
    let covering = groupoids::is_covering_functor(&dual.source.groupoid, &dual.target.groupoid, &dual.map);
    rep.push(Check::single("functor", covering.is_ok(), || "structure not preserved".into()));
    rep.push(Check::single("covering", covering.unwrap_or(false), || "not bijective on stars".into()));
    let sf = dual.target.filters.as_ref().expect("prime spectrum lists its filters");
    let tf = dual.source.filters.as_ref().expect("prime spectrum lists its filters");
    let mut continuous = Check::new("preimage of X_s is X_θ(s)");
    for x in s.elements() {
        let xs = filters::containing(s, sf, x);
        let pre = BitSet::from_iter(tf.len(), (0..tf.len()).filter(|&p| xs.contains(dual.map[p])));
        continuous.record(pre == filters::containing(t, tf, theta[x.0]), || s.name(x));
    }
    rep.push(continuous);
    Ok(rep)
}
