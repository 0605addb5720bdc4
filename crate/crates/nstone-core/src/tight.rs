//! Tight covers, tight equivalence and tight filters.
//!
//! `a → B` holds when every nonzero `x <= a` has a nonzero common lower
//! bound with some member of `B`. A tight cover of `a` is a finite
//! `B ⊆ a↓` with `a → B`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::filters::{self, FilterRep};
use crate::report::{Check, Report};
use crate::semigroup::{ElementId, ElementSet, MulTable};

/// A candidate cover. Zero is never stored among the parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub target: ElementId,
    pub parts: ElementSet,
}

impl Cover {
    pub fn new(target: ElementId, mut parts: ElementSet) -> Self {
        parts.remove(0);
        Cover { target, parts }
    }
}

/// `x` and `y` have a nonzero common lower bound.
pub fn meets_nonzero(s: &MulTable, x: ElementId, y: ElementId) -> bool {
    s.down(x).intersection_count(s.down(y)) > 1
}

/// `a → B`; vacuous for `a = 0`.
pub fn arrow(s: &MulTable, a: ElementId, parts: &ElementSet) -> bool {
    s.down(a)
        .iter()
        .filter(|&x| x != 0)
        .all(|x| parts.iter().any(|b| b != 0 && meets_nonzero(s, ElementId(x), ElementId(b))))
}

pub fn is_tight_cover(s: &MulTable, c: &Cover) -> bool {
    c.parts.is_subset(s.down(c.target)) && arrow(s, c.target, &c.parts)
}

/// `x ⪯ a`: `x` is nonzero, `x <= a`, and `{x}` is a tight cover of `a`.
pub fn is_essential(s: &MulTable, x: ElementId, a: ElementId) -> bool {
    x != ElementId::ZERO && s.leq(x, a) && arrow(s, a, &BitSet::singleton(s.size(), x.0))
}

/// `a` and `b` share a tight cover. Since `→` is monotone in the cover, the
/// largest candidate `(a↓ ∩ b↓) \ {0}` decides.
pub fn tight_equiv(s: &MulTable, a: ElementId, b: ElementId) -> bool {
    let mut common = s.down(a).intersection(s.down(b));
    common.remove(0);
    arrow(s, a, &common) && arrow(s, b, &common)
}

pub fn is_separative(s: &MulTable) -> bool {
    s.elements().all(|a| s.elements().all(|b| a == b || !tight_equiv(s, a, b)))
}

/// Quotient by tight equivalence. Classes are numbered by their least member.
#[derive(Clone, Debug)]
pub struct TightQuotient {
    pub table: MulTable,
    /// Class of each element of the original semigroup.
    pub sigma: Vec<ElementId>,
    /// Least member of each class.
    pub representatives: Vec<ElementId>,
}

pub fn tight_quotient(s: &MulTable) -> Result<TightQuotient> {
    let mut sigma = alloc::vec![ElementId::ZERO; s.size()];
    let mut representatives: Vec<ElementId> = Vec::new();
    for a in s.elements() {
        match representatives.iter().position(|&r| tight_equiv(s, r, a)) {
            Some(c) => sigma[a.0] = ElementId(c),
            None => {
                sigma[a.0] = ElementId(representatives.len());
                representatives.push(a);
            }
        }
    }
    let names = representatives
        .iter()
        .map(|&r| {
            let members: Vec<String> =
                s.elements().filter(|&x| sigma[x.0] == sigma[r.0]).map(|x| s.name(x)).collect();
            members.join("=")
        })
        .collect();
    let k = representatives.len();
    let table = MulTable::from_fn(k, |i, j| sigma[s.mul(representatives[i], representatives[j]).0].0)?
        .with_names(names)?;
    Ok(TightQuotient { table, sigma, representatives })
}

/// `F = x↑` meets every tight cover of each of its members. It fails exactly
/// when some `y >= x` is covered by elements outside `F`.
pub fn is_tight_filter(s: &MulTable, f: FilterRep) -> bool {
    let members = s.up(f.base);
    members.iter().map(ElementId).all(|y| {
        let mut outside = s.down(y).difference(members);
        outside.remove(0);
        !arrow(s, y, &outside)
    })
}

pub fn tight_filters(s: &MulTable) -> Vec<FilterRep> {
    filters::all_filters(s).into_iter().filter(|&f| is_tight_filter(s, f)).collect()
}

/// Tight covers of `a` with at most `max_parts` nonzero parts, in canonical
/// order.
pub fn small_tight_covers(s: &MulTable, a: ElementId, max_parts: usize) -> Vec<ElementSet> {
    subsets_below(s, a, max_parts).into_iter().filter(|x| arrow(s, a, x)).collect()
}

/// Subsets of `a↓ \ {0}` with at most `max_parts` members, canonical order.
pub fn subsets_below(s: &MulTable, a: ElementId, max_parts: usize) -> Vec<ElementSet> {
    let pool: Vec<usize> = s.down(a).iter().filter(|&x| x != 0).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(pool: &[usize], from: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<BitSet>) {
        out.push(BitSet::from_iter(n, cur.iter().copied()));
        if cur.len() == k {
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i]);
            rec(pool, i + 1, k, n, cur, out);
            cur.pop();
        }
    }
    rec(&pool, 0, max_parts, s.size(), &mut cur, &mut out);
    out.sort();
    out
}

/// Sampled covers per element in the axiom checks.
pub const MAX_SAMPLED_COVERS: usize = 16;
/// Refinement choices sampled per cover in the transitivity check.
pub const MAX_REFINEMENTS: usize = 64;

fn image(s: &MulTable, set: &ElementSet, f: impl Fn(ElementId) -> ElementId) -> ElementSet {
    let mut out = BitSet::from_iter(s.size(), set.iter().map(|x| f(ElementId(x)).0));
    out.remove(0);
    out
}

fn product(s: &MulTable, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let mut out = BitSet::new(s.size());
    for a in x.iter() {
        for b in y.iter() {
            out.insert(s.mul(ElementId(a), ElementId(b)).0);
        }
    }
    out.remove(0);
    out
}

/// Pairwise meets, or `None` if some pair lacks a meet.
fn meets(s: &MulTable, x: &ElementSet, y: &ElementSet) -> Option<ElementSet> {
    let mut out = BitSet::new(s.size());
    for a in x.iter() {
        for b in y.iter() {
            out.insert(s.meet(ElementId(a), ElementId(b))?.0);
        }
    }
    out.remove(0);
    Some(out)
}

/// Checks the coverage axioms and derived cover laws on all covers with at
/// most `max_parts` parts (at most [`MAX_SAMPLED_COVERS`] per element).
pub fn coverage_axioms_check(s: &MulTable, max_parts: usize) -> Result<Report> {
    let covers: Vec<Vec<ElementSet>> = s
        .elements()
        .map(|a| {
            let mut c = small_tight_covers(s, a, max_parts);
            c.truncate(MAX_SAMPLED_COVERS);
            c
        })
        .collect();
    let fmt_set = |x: &ElementSet| format!("{:?}", x);

    let mut refl = Check::new("reflexivity");
    for a in s.elements() {
        refl.record(arrow(s, a, &Cover::new(a, BitSet::singleton(s.size(), a.0)).parts), || format!("a={a}"));
    }

    let mut inv = Check::new("inverse");
    let mut dom = Check::new("domain cover");
    for a in s.elements() {
        for x in &covers[a.0] {
            let xi = image(s, x, |v| s.inv(v));
            inv.record(is_tight_cover(s, &Cover::new(s.inv(a), xi)), || format!("a={a} X={}", fmt_set(x)));
            let dx = image(s, x, |v| s.d(v));
            dom.record(is_tight_cover(s, &Cover::new(s.d(a), dx)), || format!("a={a} X={}", fmt_set(x)));
        }
    }

    let mut mult = Check::new("multiplicative stability");
    for a in s.elements() {
        for b in s.elements() {
            let ab = s.mul(a, b);
            for x in &covers[a.0] {
                for y in &covers[b.0] {
                    let xy = product(s, x, y);
                    mult.record(is_tight_cover(s, &Cover::new(ab, xy)), || {
                        format!("a={a} b={b} X={} Y={}", fmt_set(x), fmt_set(y))
                    });
                }
            }
        }
    }

    let mut trans = Check::new("transitivity");
    for a in s.elements() {
        for x in &covers[a.0] {
            let parts: Vec<usize> = x.iter().collect();
            let radix: Vec<usize> = parts.iter().map(|&p| covers[p].len()).collect();
            let total: usize = radix.iter().product();
            for mut code in 0..total.min(MAX_REFINEMENTS) {
                let mut union = BitSet::new(s.size());
                for (i, &p) in parts.iter().enumerate() {
                    union.union_with(&covers[p][code % radix[i]]);
                    code /= radix[i];
                }
                trans.record(is_tight_cover(s, &Cover::new(a, union)), || format!("a={a} X={}", fmt_set(x)));
            }
        }
    }

    let mut restrict = Check::new("domain restriction");
    for a in s.elements() {
        for x in subsets_below(s, a, max_parts) {
            let lhs = arrow(s, a, &x);
            let rhs = arrow(s, s.d(a), &image(s, &x, |v| s.d(v)));
            restrict.record(lhs == rhs, || format!("a={a} X={}", fmt_set(&x)));
        }
    }

    let mut meet = Check::new("meet of covers");
    let mut meet_shared = Check::new("meet of shared covers");
    for a in s.elements() {
        for x in &covers[a.0] {
            for y in &covers[a.0] {
                let m = meets(s, x, y);
                let xdy = product(s, x, &image(s, y, |v| s.d(v)));
                let ydx = product(s, y, &image(s, x, |v| s.d(v)));
                let ok = m.as_ref().is_some_and(|m| {
                    is_tight_cover(s, &Cover::new(a, m.clone())) && *m == xdy && *m == ydx
                });
                meet.record(ok, || format!("a={a} X={} Y={}", fmt_set(x), fmt_set(y)));
                let Some(m) = m else { continue };
                for b in s.elements() {
                    if is_tight_cover(s, &Cover::new(b, x.clone())) {
                        meet_shared.record(is_tight_cover(s, &Cover::new(b, m.clone())), || {
                            format!("a={a} b={b} X={} Y={}", fmt_set(x), fmt_set(y))
                        });
                    }
                }
            }
        }
    }

    let q = tight_quotient(s)?;
    let mut quotient = Check::new("quotient image");
    for a in s.elements() {
        for x in &covers[a.0] {
            let img = image(&q.table, &BitSet::from_iter(q.table.size(), x.iter().map(|v| q.sigma[v].0)), |v| v);
            quotient.record(is_tight_cover(&q.table, &Cover::new(q.sigma[a.0], img)), || {
                format!("a={a} X={}", fmt_set(x))
            });
        }
    }

    Ok(Report { checks: alloc::vec![refl, inv, mult, trans, dom, restrict, meet, meet_shared, quotient] })
}
