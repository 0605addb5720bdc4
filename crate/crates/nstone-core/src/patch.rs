//! The patch topology on prime spectra, Booleanization, and the universal
//! and tight groupoids built from completions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::completions::{self, CompletedSemigroup};
use crate::error::{Error, Result};
use crate::filters::{self, FilterRep};
use crate::groupoids::{self, BasisSet, BasisTopology, BisectionSemigroup, TopologicalGroupoid};
use crate::report::{Check, Report};
use crate::semigroup::{ElementId, MulTable};
use crate::tight;

/// Most elements strictly below one element for which the universal basis
/// is enumerated.
pub const MAX_UNIVERSAL_POOL: usize = 12;

/// `X_{s;t} X_{u;v} = X_{su; sv ∨ tu ∨ tv}`.
pub fn patch_product(
    s: &MulTable,
    (a, b): (ElementId, ElementId),
    (c, d): (ElementId, ElementId),
) -> Result<(ElementId, ElementId)> {
    if !s.leq(b, a) {
        return Err(Error::NotBelow(b, a));
    }
    if !s.leq(d, c) {
        return Err(Error::NotBelow(d, c));
    }
    let sub = s.join_all([s.mul(a, d), s.mul(b, c), s.mul(b, d)]).ok_or(Error::JoinMissing)?;
    Ok((s.mul(a, c), sub))
}

/// `X_s \ X_t` for `t <= s`, as arrow indices of `spectrum`.
pub fn patch_set(s: &MulTable, spectrum: &TopologicalGroupoid, a: ElementId, b: ElementId) -> BitSet {
    let fs = spectrum.filters.as_ref().expect("prime spectrum lists its filters");
    filters::containing(s, fs, a).difference(&filters::containing(s, fs, b))
}

/// The prime spectrum with basis `{X_s \ X_t : t <= s}`.
pub fn patch_spectrum(s: &MulTable) -> Result<TopologicalGroupoid> {
    let mut g = groupoids::prime_spectrum(s)?;
    let mut sets = Vec::new();
    for a in s.nonzero() {
        for b in s.down(a).iter().map(ElementId) {
            sets.push(BasisSet {
                label: format!("X({};{})", s.name(a), s.name(b)),
                members: patch_set(s, &g, a, b),
            });
        }
    }
    g.topology = BasisTopology::new(g.len(), sets);
    Ok(g)
}

pub fn patch_equals_usual(s: &MulTable) -> Result<bool> {
    let usual = groupoids::prime_spectrum(s)?;
    let patch = patch_spectrum(s)?;
    Ok(usual.topology.same_topology(&patch.topology))
}

/// `B(S)` with `β(s) = X_s`.
#[derive(Clone, Debug)]
pub struct Booleanization {
    pub spectrum: TopologicalGroupoid,
    pub kb: BisectionSemigroup,
    pub beta: Vec<ElementId>,
}

pub fn booleanize(s: &MulTable) -> Result<Booleanization> {
    let spectrum = patch_spectrum(s)?;
    let kb = groupoids::kb_of(&spectrum)?;
    let fs = spectrum.filters.as_ref().expect("prime spectrum lists its filters");
    let beta = s
        .elements()
        .map(|x| kb.index_of(&filters::containing(s, fs, x)).ok_or(Error::NotEtale("X_s is not a patch-open bisection".into())))
        .collect::<Result<_>>()?;
    Ok(Booleanization { spectrum, kb, beta })
}

/// All local bisections of the prime spectrum, ignoring topology.
pub fn all_local_bisections(s: &MulTable) -> Result<BisectionSemigroup> {
    let g = groupoids::prime_spectrum(s)?;
    groupoids::kb_of(&TopologicalGroupoid::discrete(g.groupoid))
}

/// Whether every prime filter of `t` pulls back along `theta` to a prime
/// filter of `s`.
pub fn pulls_back_prime_filters(s: &MulTable, t: &MulTable, theta: &[ElementId]) -> bool {
    filters::prime_filters(t).into_iter().all(|p| {
        let pre = BitSet::from_iter(s.size(), s.elements().filter(|&x| p.contains(t, theta[x.0])).map(|x| x.0));
        filters::filter_from_set(s, &pre).is_some_and(|f| filters::is_prime_filter(s, f))
    })
}

/// Pieces `(s, t)` with `X_s \ X_t` nonempty and inside `w`, chosen greedily
/// (largest first, then by ids) until `w` is covered.
pub fn decompose(s: &MulTable, spectrum: &TopologicalGroupoid, w: &BitSet) -> Vec<(ElementId, ElementId)> {
    let mut cands: Vec<(usize, ElementId, ElementId, BitSet)> = Vec::new();
    for a in s.nonzero() {
        for b in s.down(a).iter().map(ElementId) {
            let set = patch_set(s, spectrum, a, b);
            if !set.is_empty() && set.is_subset(w) {
                cands.push((set.len(), a, b, set));
            }
        }
    }
    cands.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let mut covered = BitSet::new(w.universe());
    let mut out = Vec::new();
    for (_, a, b, set) in cands {
        if !set.is_subset(&covered) {
            covered.union_with(&set);
            out.push((a, b));
        }
        if covered == *w {
            break;
        }
    }
    out
}

/// The morphism `B(S) → T` sending `X_s \ X_t` to `θ(s) \ θ(t)`, for a
/// morphism `θ` into a Boolean `T` along which prime filters pull back.
pub fn booleanization_lift(
    s: &MulTable,
    b: &Booleanization,
    t: &MulTable,
    theta: &[ElementId],
) -> Result<Vec<ElementId>> {
    if !t.is_boolean() {
        return Err(Error::NotBoolean);
    }
    if !pulls_back_prime_filters(s, t, theta) {
        return Err(Error::PullbackViolation);
    }
    b.kb
        .bisections
        .iter()
        .map(|w| {
            let mut parts = Vec::new();
            for (x, y) in decompose(s, &b.spectrum, w) {
                parts.push(t.relative_complement_unchecked(theta[x.0], theta[y.0])?);
            }
            t.join_all(parts).ok_or(Error::JoinMissing)
        })
        .collect()
}

/// All filters with basis `U_x \ (U_{x1} ∪ ... ∪ U_{xn})` for `xi <= x`.
pub fn universal_groupoid(s: &MulTable) -> Result<TopologicalGroupoid> {
    let mut g = groupoids::filter_groupoid(s)?;
    let fs = g.filters.clone().expect("filter groupoid lists its filters");
    let mut sets: Vec<BasisSet> = Vec::new();
    for x in s.nonzero() {
        let pool: Vec<ElementId> = s.down(x).iter().map(ElementId).filter(|&y| y != ElementId::ZERO && y != x).collect();
        if pool.len() > MAX_UNIVERSAL_POOL {
            return Err(Error::TooLarge(format!("{} elements below {}", pool.len(), s.name(x))));
        }
        for mask in 0u32..(1 << pool.len()) {
            let mut members = filters::containing(s, &fs, x);
            let mut names = Vec::new();
            for (i, &y) in pool.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    members.difference_with(&filters::containing(s, &fs, y));
                    names.push(s.name(y));
                }
            }
            if sets.iter().all(|b| b.members != members) {
                sets.push(BasisSet { label: format!("U({};{})", s.name(x), names.join(",")), members });
            }
        }
    }
    g.topology = BasisTopology::new(g.len(), sets);
    Ok(g)
}

/// `BS(S) = B(D(S))` with `γ(s) = β(ι(s))`.
#[derive(Clone, Debug)]
pub struct PatersonSemigroup {
    pub completion: CompletedSemigroup,
    pub booleanization: Booleanization,
    pub gamma: Vec<ElementId>,
}

pub fn paterson_bs(s: &MulTable) -> Result<PatersonSemigroup> {
    let completion = completions::distributive_completion(s)?;
    let booleanization = booleanize(&completion.table)?;
    let gamma = completion.embedding.iter().map(|i| booleanization.beta[i.0]).collect();
    Ok(PatersonSemigroup { completion, booleanization, gamma })
}

/// `G_P(D_t(S))` with the patch topology.
pub fn exel_tight_groupoid(s: &MulTable) -> Result<TopologicalGroupoid> {
    patch_spectrum(&completions::tight_completion(s)?.table)
}

/// `{A : A meets the image of F}` for a filter `F` of the source of `c`.
pub fn lift_filter(s: &MulTable, c: &CompletedSemigroup, f: FilterRep) -> Option<FilterRep> {
    let ground_image = BitSet::from_iter(c.ground.size(), s.up(f.base).iter().map(|x| c.to_ground[x].0));
    let members = BitSet::from_iter(
        c.table.size(),
        c.elem_ideals.iter().enumerate().filter(|(_, a)| a.carrier.intersects(&ground_image)).map(|(i, _)| i),
    );
    filters::filter_from_set(&c.table, &members)
}

/// Checks that `F ↦ {A : A meets F}` maps the filters of `source` onto the
/// prime filters of the completion as an isomorphism of topological
/// groupoids and of posets, matching ultrafilters.
pub fn correspondence_check(
    s: &MulTable,
    c: &CompletedSemigroup,
    source: &TopologicalGroupoid,
    target: &TopologicalGroupoid,
) -> Result<Report> {
    let mut rep = Report::default();
    let src = source.filters.as_ref().expect("filter groupoid");
    let lifted: Vec<Option<FilterRep>> = src.iter().map(|&f| lift_filter(s, c, f)).collect();
    let mut prime = Check::new("lifted filter is a prime filter");
    for (f, l) in src.iter().zip(&lifted) {
        prime.record(l.is_some_and(|l| target.arrow_of(l).is_some()), || s.name(f.base));
    }
    rep.push(prime);
    if !rep.passed() {
        return Ok(rep);
    }
    let lifted: Vec<FilterRep> = lifted.into_iter().map(|l| l.expect("checked")).collect();
    let phi: Vec<usize> = lifted.iter().map(|&l| target.arrow_of(l).expect("checked")).collect();
    rep.push(Check::single("groupoid isomorphism", source.groupoid.is_isomorphism_to(&target.groupoid, &phi), || {
        format!("{} arrows against {}", source.len(), target.len())
    }));
    rep.push(Check::single("homeomorphism", source.topology.homeomorphic_via(&target.topology, &phi), String::new));
    let mut order = Check::new("order isomorphism");
    let mut ultra = Check::new("ultrafilters correspond");
    for (i, &f) in src.iter().enumerate() {
        ultra.record(filters::is_ultrafilter(s, f) == filters::is_ultrafilter(&c.table, lifted[i]), || s.name(f.base));
        for (j, &g) in src.iter().enumerate() {
            let below = s.leq(g.base, f.base);
            let lifted_below = c.table.leq(lifted[j].base, lifted[i].base);
            order.record(below == lifted_below, || format!("{} {}", s.name(f.base), s.name(g.base)));
        }
    }
    rep.push(order);
    rep.push(ultra);
    Ok(rep)
}

/// The filter groupoid with its universal topology against the patch
/// spectrum of the distributive completion.
pub fn paterson_check(s: &MulTable) -> Result<Report> {
    let c = completions::distributive_completion(s)?;
    correspondence_check(s, &c, &universal_groupoid(s)?, &patch_spectrum(&c.table)?)
}

/// Tight filters against the prime filters of the tight completion, and the
/// arrows of the tight groupoid.
pub fn tight_check(s: &MulTable) -> Result<Report> {
    let c = completions::tight_completion(s)?;
    let mut rep = correspondence_check(s, &c, &groupoids::tight_spectrum(s)?, &groupoids::prime_spectrum(&c.table)?)?;
    let exel = exel_tight_groupoid(s)?;
    rep.push(Check::single("tight groupoid arrows", exel.len() == tight::tight_filters(s).len(), || {
        format!("{} arrows", exel.len())
    }));
    Ok(rep)
}
