//! Finite groupoids with a topology given by a basis, their inverse
//! semigroups of open local bisections, and the groupoids of filters.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::filters::{self, FilterRep};
use crate::report::{Check, Report};
use crate::semigroup::{ElementId, MulTable};
use crate::tight;

/// Largest inverse semigroup of open bisections that will be tabulated.
pub const MAX_BISECTIONS: usize = 1024;
/// Largest arrow count for which all open sets are listed.
pub const MAX_MATERIALIZED_POINTS: usize = 20;

/// A finite groupoid on arrows `0..len`. Identities are the arrows `g` with
/// `d(g) = g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    pub labels: Vec<String>,
    d: Vec<usize>,
    r: Vec<usize>,
    inv: Vec<usize>,
    prod: Vec<Option<usize>>,
}

impl FiniteGroupoid {
    /// Validates the groupoid laws; `mul(g, h)` is only consulted when
    /// `d(g) = r(h)`.
    pub fn new(
        labels: Vec<String>,
        d: Vec<usize>,
        r: Vec<usize>,
        inv: Vec<usize>,
        mut mul: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let m = labels.len();
        let bad = |msg: String| Err(Error::NotAFunctor(msg));
        if d.len() != m || r.len() != m || inv.len() != m {
            return bad("structure maps have the wrong length".into());
        }
        let mut prod = alloc::vec![None; m * m];
        for g in 0..m {
            for h in 0..m {
                if d[g] == r[h] {
                    let gh = mul(g, h);
                    if gh >= m {
                        return bad(format!("product of {g} and {h} out of range"));
                    }
                    prod[g * m + h] = Some(gh);
                }
            }
        }
        let gr = FiniteGroupoid { labels, d, r, inv, prod };
        for g in 0..m {
            let (dg, rg) = (gr.d[g], gr.r[g]);
            let units = gr.d[dg] == dg && gr.r[dg] == dg && gr.d[rg] == rg && gr.r[rg] == rg;
            let inverse = gr.inv[gr.inv[g]] == g
                && gr.d[gr.inv[g]] == rg
                && gr.mul(gr.inv[g], g) == Some(dg)
                && gr.mul(g, gr.inv[g]) == Some(rg);
            let unital = gr.mul(g, dg) == Some(g) && gr.mul(rg, g) == Some(g);
            if !(units && inverse && unital) {
                return bad(format!("groupoid laws fail at arrow {g}"));
            }
            for h in 0..m {
                let Some(gh) = gr.mul(g, h) else { continue };
                if gr.d[gh] != gr.d[h] || gr.r[gh] != rg {
                    return bad(format!("product {g}*{h} has wrong ends"));
                }
                for k in 0..m {
                    if let Some(hk) = gr.mul(h, k) {
                        if gr.mul(gh, k) != gr.mul(g, hk) {
                            return bad(format!("not associative at {g},{h},{k}"));
                        }
                    }
                }
            }
        }
        Ok(gr)
    }

    /// A group as a groupoid with one identity, from a table with unit 0.
    pub fn from_group(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        let inv = (0..n).map(|g| (0..n).find(|&h| table[g][h] == 0).unwrap_or(0)).collect();
        let labels = (0..n).map(|g| format!("g{g}")).collect();
        FiniteGroupoid::new(labels, alloc::vec![0; n], alloc::vec![0; n], inv, |g, h| table[g][h])
    }

    /// The pair groupoid on `n` objects; arrow `(i, j)` runs from `j` to `i`.
    pub fn pair(n: usize) -> Result<Self> {
        let code = |i: usize, j: usize| i * n + j;
        let labels = (0..n * n).map(|a| format!("({},{})", a / n, a % n)).collect();
        let d = (0..n * n).map(|a| code(a % n, a % n)).collect();
        let r = (0..n * n).map(|a| code(a / n, a / n)).collect();
        let inv = (0..n * n).map(|a| code(a % n, a / n)).collect();
        FiniteGroupoid::new(labels, d, r, inv, |g, h| code(g / n, h % n))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn d(&self, g: usize) -> usize {
        self.d[g]
    }

    pub fn r(&self, g: usize) -> usize {
        self.r[g]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn mul(&self, g: usize, h: usize) -> Option<usize> {
        self.prod[g * self.len() + h]
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.d[g] == g
    }

    pub fn identities(&self) -> BitSet {
        BitSet::from_iter(self.len(), (0..self.len()).filter(|&g| self.is_identity(g)))
    }

    pub fn set_product(&self, a: &BitSet, b: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.len());
        for g in a.iter() {
            for h in b.iter() {
                if let Some(gh) = self.mul(g, h) {
                    out.insert(gh);
                }
            }
        }
        out
    }

    pub fn set_inverse(&self, a: &BitSet) -> BitSet {
        BitSet::from_iter(self.len(), a.iter().map(|g| self.inv[g]))
    }

    /// Distinct arrows of `a` have distinct domains and distinct ranges.
    pub fn is_bisection(&self, a: &BitSet) -> bool {
        let mut ds = BitSet::new(self.len());
        let mut rs = BitSet::new(self.len());
        a.iter().all(|g| ds.insert(self.d[g]) && rs.insert(self.r[g]))
    }

    /// `φ` maps identities to identities, commutes with `d` and `r`, and
    /// preserves products.
    pub fn is_functor_to(&self, other: &FiniteGroupoid, phi: &[usize]) -> bool {
        phi.len() == self.len()
            && phi.iter().all(|&x| x < other.len())
            && (0..self.len()).all(|g| {
                other.d(phi[g]) == phi[self.d(g)]
                    && other.r(phi[g]) == phi[self.r(g)]
                    && (0..self.len()).all(|h| match self.mul(g, h) {
                        Some(gh) => other.mul(phi[g], phi[h]) == Some(phi[gh]),
                        None => true,
                    })
            })
    }

    pub fn is_isomorphism_to(&self, other: &FiniteGroupoid, phi: &[usize]) -> bool {
        self.len() == other.len()
            && self.is_functor_to(other, phi)
            && BitSet::from_iter(other.len(), phi.iter().copied()).len() == other.len()
    }
}

/// A named member of a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSet {
    pub label: String,
    pub members: BitSet,
}

/// A topology on `0..points` generated by a family of sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTopology {
    pub points: usize,
    pub sets: Vec<BasisSet>,
}

impl BasisTopology {
    pub fn new(points: usize, sets: Vec<BasisSet>) -> Self {
        BasisTopology { points, sets }
    }

    pub fn discrete(points: usize) -> Self {
        let sets = (0..points)
            .map(|p| BasisSet { label: format!("{{{p}}}"), members: BitSet::singleton(points, p) })
            .collect();
        BasisTopology { points, sets }
    }

    /// Every point of `u` lies in a basis set inside `u`.
    pub fn is_open(&self, u: &BitSet) -> bool {
        let mut covered = BitSet::new(self.points);
        for b in &self.sets {
            if b.members.is_subset(u) {
                covered.union_with(&b.members);
            }
        }
        covered == *u
    }

    /// The basis sets cover the space and their pairwise intersections are
    /// unions of basis sets.
    pub fn is_basis(&self) -> bool {
        let mut all = BitSet::new(self.points);
        for b in &self.sets {
            all.union_with(&b.members);
        }
        all.len() == self.points
            && self.sets.iter().all(|a| {
                self.sets.iter().all(|b| self.is_open(&a.members.intersection(&b.members)))
            })
    }

    /// Same open sets.
    pub fn same_topology(&self, other: &BasisTopology) -> bool {
        self.points == other.points
            && self.sets.iter().all(|b| other.is_open(&b.members))
            && other.sets.iter().all(|b| self.is_open(&b.members))
    }

    /// Same topology after relabelling points by `phi`.
    pub fn homeomorphic_via(&self, other: &BasisTopology, phi: &[usize]) -> bool {
        let image = |u: &BitSet| BitSet::from_iter(other.points, u.iter().map(|p| phi[p]));
        let mut pre = alloc::vec![0; other.points];
        for (p, &q) in phi.iter().enumerate() {
            pre[q] = p;
        }
        let preimage = |u: &BitSet| BitSet::from_iter(self.points, u.iter().map(|q| pre[q]));
        self.points == other.points
            && BitSet::from_iter(other.points, phi.iter().copied()).len() == other.points
            && self.sets.iter().all(|b| other.is_open(&image(&b.members)))
            && other.sets.iter().all(|b| self.is_open(&preimage(&b.members)))
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.points).all(|p| self.is_open(&BitSet::singleton(self.points, p)))
    }

    /// Distinct points are separated by some basis set.
    pub fn is_t0(&self) -> bool {
        (0..self.points).all(|p| {
            (p + 1..self.points).all(|q| self.sets.iter().any(|b| b.members.contains(p) != b.members.contains(q)))
        })
    }

    /// All open sets in canonical order, when there are at most `max_points`
    /// points.
    pub fn materialize_opens(&self, max_points: usize) -> Option<Vec<BitSet>> {
        if self.points > max_points {
            return None;
        }
        let mut opens: BTreeSet<BitSet> = BTreeSet::new();
        opens.insert(BitSet::new(self.points));
        let mut frontier: Vec<BitSet> = self.sets.iter().map(|b| b.members.clone()).collect();
        while let Some(u) = frontier.pop() {
            if opens.contains(&u) {
                continue;
            }
            let known: Vec<BitSet> = opens.iter().cloned().collect();
            opens.insert(u.clone());
            for v in known {
                let w = u.union(&v);
                if !opens.contains(&w) {
                    frontier.push(w);
                }
            }
        }
        Some(opens.into_iter().collect())
    }
}

/// A finite groupoid with a topology on its arrows. When the arrows are
/// filters of a semigroup, `filters` lists them.
#[derive(Clone, Debug)]
pub struct TopologicalGroupoid {
    pub groupoid: FiniteGroupoid,
    pub topology: BasisTopology,
    pub filters: Option<Vec<FilterRep>>,
}

impl TopologicalGroupoid {
    pub fn discrete(groupoid: FiniteGroupoid) -> Self {
        let topology = BasisTopology::discrete(groupoid.len());
        TopologicalGroupoid { groupoid, topology, filters: None }
    }

    pub fn len(&self) -> usize {
        self.groupoid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groupoid.is_empty()
    }

    /// Index of the arrow with this filter.
    pub fn arrow_of(&self, f: FilterRep) -> Option<usize> {
        self.filters.as_ref()?.iter().position(|&x| x == f)
    }

    /// Identities open, and inverses and products of basis sets open.
    pub fn etale_violation(&self) -> Option<String> {
        let g = &self.groupoid;
        let t = &self.topology;
        if !t.is_basis() {
            return Some("the family is not a basis".into());
        }
        if !t.is_open(&g.identities()) {
            return Some("the identity space is not open".into());
        }
        for a in &t.sets {
            if !t.is_open(&g.set_inverse(&a.members)) {
                return Some(format!("inverse of {} is not open", a.label));
            }
            for b in &t.sets {
                if !t.is_open(&g.set_product(&a.members, &b.members)) {
                    return Some(format!("{} * {} is not open", a.label, b.label));
                }
            }
        }
        None
    }

    pub fn is_etale(&self) -> bool {
        self.etale_violation().is_none()
    }

    /// Finite Hausdorff spaces are discrete.
    pub fn is_hausdorff(&self) -> bool {
        self.topology.is_discrete()
    }

    pub fn identity_space_is_discrete(&self) -> bool {
        let t = &self.topology;
        self.groupoid.identities().iter().all(|e| {
            let single = BitSet::singleton(t.points, e);
            t.sets.iter().any(|b| b.members.contains(e) && b.members.intersection(&self.groupoid.identities()) == single)
        })
    }
}

fn filter_groupoid_on(
    s: &MulTable,
    filters: Vec<FilterRep>,
    prefix: &str,
) -> Result<TopologicalGroupoid> {
    let m = filters.len();
    let index = |f: FilterRep| filters.iter().position(|&x| x == f).ok_or(Error::NotAFunctor(format!("filter {} missing", f.base)));
    let mut d = Vec::with_capacity(m);
    let mut r = Vec::with_capacity(m);
    let mut inv = Vec::with_capacity(m);
    for &f in &filters {
        d.push(index(filters::filter_d(s, f))?);
        r.push(index(filters::filter_r(s, f))?);
        inv.push(index(filters::filter_inverse(s, f))?);
    }
    let mut prods = alloc::vec![0; m * m];
    for (i, &f) in filters.iter().enumerate() {
        for (j, &g) in filters.iter().enumerate() {
            if let Ok(fg) = filters::filter_product(s, f, g) {
                prods[i * m + j] = index(fg)?;
            }
        }
    }
    let labels = filters.iter().map(|f| s.name(f.base)).collect();
    let groupoid = FiniteGroupoid::new(labels, d, r, inv, |g, h| prods[g * m + h])?;
    let sets = s
        .nonzero()
        .map(|x| BasisSet { label: format!("{prefix}({})", s.name(x)), members: filters::containing(s, &filters, x) })
        .collect();
    Ok(TopologicalGroupoid { groupoid, topology: BasisTopology::new(m, sets), filters: Some(filters) })
}

/// All proper filters, with basis `U_s = {F : s ∈ F}`.
pub fn filter_groupoid(s: &MulTable) -> Result<TopologicalGroupoid> {
    filter_groupoid_on(s, filters::all_filters(s), "U")
}

/// Prime filters, with basis `X_s = {P : s ∈ P}`.
pub fn prime_spectrum(s: &MulTable) -> Result<TopologicalGroupoid> {
    filter_groupoid_on(s, filters::prime_filters(s), "X")
}

/// Tight filters, with basis `Z_s = {F : s ∈ F}`.
pub fn tight_spectrum(s: &MulTable) -> Result<TopologicalGroupoid> {
    filter_groupoid_on(s, tight::tight_filters(s), "Z")
}

/// The inverse semigroup of open local bisections, with the bisection each
/// element stands for.
#[derive(Clone, Debug)]
pub struct BisectionSemigroup {
    pub table: MulTable,
    pub bisections: Vec<BitSet>,
}

impl BisectionSemigroup {
    pub fn index_of(&self, b: &BitSet) -> Option<ElementId> {
        self.bisections.binary_search(b).ok().map(ElementId)
    }
}

/// `KB(G)` for an étale `G`, in canonical bisection order.
pub fn kb_of(g: &TopologicalGroupoid) -> Result<BisectionSemigroup> {
    kb_of_bounded(g, MAX_BISECTIONS)
}

pub fn kb_of_bounded(g: &TopologicalGroupoid, limit: usize) -> Result<BisectionSemigroup> {
    if let Some(why) = g.etale_violation() {
        return Err(Error::NotEtale(why));
    }
    let gr = &g.groupoid;
    let mut found: BTreeSet<BitSet> = BTreeSet::new();
    let mut frontier: Vec<BitSet> = alloc::vec![BitSet::new(gr.len())];
    frontier.extend(g.topology.sets.iter().map(|b| b.members.clone()).filter(|b| gr.is_bisection(b)));
    while let Some(u) = frontier.pop() {
        if found.contains(&u) {
            continue;
        }
        if found.len() >= limit {
            return Err(Error::TooLarge(format!("more than {limit} open bisections")));
        }
        for v in &found {
            let w = u.union(v);
            if !found.contains(&w) && gr.is_bisection(&w) {
                frontier.push(w);
            }
        }
        found.insert(u);
    }
    let bisections: Vec<BitSet> = found.into_iter().collect();
    let k = bisections.len();
    let mut rows = Vec::with_capacity(k);
    for a in &bisections {
        let mut row = Vec::with_capacity(k);
        for b in &bisections {
            let p = gr.set_product(a, b);
            let i = bisections
                .binary_search(&p)
                .map_err(|_| Error::NotEtale("a product of open bisections is not open".into()))?;
            row.push(i);
        }
        rows.push(row);
    }
    let names = bisections
        .iter()
        .map(|b| {
            let parts: Vec<&str> = b.iter().map(|x| gr.labels[x].as_str()).collect();
            format!("{{{}}}", parts.join(" "))
        })
        .collect();
    let table = MulTable::new(rows)?.with_names(names)?;
    Ok(BisectionSemigroup { table, bisections })
}

/// `s ↦ X_s` into the open bisections of the prime spectrum.
pub fn epsilon(s: &MulTable) -> Result<(TopologicalGroupoid, BisectionSemigroup, Vec<Option<ElementId>>)> {
    let g = prime_spectrum(s)?;
    let kb = kb_of(&g)?;
    let filters = g.filters.as_ref().expect("prime spectrum lists its filters");
    let map = s.elements().map(|x| kb.index_of(&filters::containing(s, filters, x))).collect();
    Ok((g, kb, map))
}

/// Checks that `s ↦ X_s` is an isomorphism onto the open bisections of the
/// prime spectrum.
pub fn epsilon_check(s: &MulTable) -> Result<Report> {
    let (_, kb, map) = epsilon(s)?;
    let mut rep = Report::default();
    let name = |x: ElementId| s.name(x);
    let mut open = Check::new("X_s is an open bisection");
    for x in s.elements() {
        open.record(map[x.0].is_some(), || name(x));
    }
    rep.push(open);
    if !rep.passed() {
        return Ok(rep);
    }
    let phi: Vec<ElementId> = map.into_iter().map(|x| x.expect("checked")).collect();
    let hit = BitSet::from_iter(kb.table.size(), phi.iter().map(|x| x.0));
    rep.push(Check::single("injective", hit.len() == s.size(), || "two elements share X_s".into()));
    rep.push(Check::single("surjective", kb.table.size() == s.size(), || {
        format!("{} open bisections for {} elements", kb.table.size(), s.size())
    }));
    let mut mult = Check::new("X_st = X_s X_t");
    for a in s.elements() {
        for b in s.elements() {
            mult.record(phi[s.mul(a, b).0] == kb.table.mul(phi[a.0], phi[b.0]), || format!("{} {}", name(a), name(b)));
        }
    }
    rep.push(mult);
    Ok(rep)
}

/// `g ↦ F_g`, the open bisections containing `g`, as filters of `KB(G)`;
/// `None` where that set is not a filter.
pub fn eta(g: &TopologicalGroupoid, kb: &BisectionSemigroup) -> Vec<Option<FilterRep>> {
    (0..g.len())
        .map(|x| {
            let f = BitSet::from_iter(kb.table.size(), kb.bisections.iter().enumerate().filter(|(_, b)| b.contains(x)).map(|(i, _)| i));
            filters::filter_from_set(&kb.table, &f)
        })
        .collect()
}

/// Checks that `g ↦ F_g` is an isomorphism of topological groupoids onto the
/// prime spectrum of `KB(G)`.
pub fn eta_check(g: &TopologicalGroupoid) -> Result<Report> {
    let kb = kb_of(g)?;
    let mut rep = Report::default();
    let etas = eta(g, &kb);
    let mut is_filter = Check::new("F_g is a prime filter");
    for (x, f) in etas.iter().enumerate() {
        is_filter.record(f.is_some_and(|f| filters::is_prime_filter(&kb.table, f)), || g.groupoid.labels[x].clone());
    }
    rep.push(is_filter);
    if !rep.passed() {
        return Ok(rep);
    }
    let spec = prime_spectrum(&kb.table)?;
    let phi: Vec<usize> = etas.iter().map(|f| spec.arrow_of(f.expect("checked")).expect("prime")).collect();
    rep.push(Check::single("groupoid isomorphism", g.groupoid.is_isomorphism_to(&spec.groupoid, &phi), || {
        format!("{} arrows against {} prime filters", g.len(), spec.len())
    }));
    rep.push(Check::single("homeomorphism", g.topology.homeomorphic_via(&spec.topology, &phi), String::new));
    Ok(rep)
}

/// Whether a functor is bijective on each star `{g : d(g) = e}`.
pub fn is_covering_functor(src: &FiniteGroupoid, dst: &FiniteGroupoid, phi: &[usize]) -> Result<bool> {
    if !src.is_functor_to(dst, phi) {
        return Err(Error::NotAFunctor("structure not preserved".into()));
    }
    let star_injective = (0..src.len()).all(|g| {
        (0..src.len()).all(|h| g == h || src.d(g) != src.d(h) || phi[g] != phi[h])
    });
    let star_surjective = (0..src.len()).filter(|&e| src.is_identity(e)).all(|e| {
        (0..dst.len())
            .filter(|&h| dst.d(h) == phi[e])
            .all(|h| (0..src.len()).any(|g| src.d(g) == e && phi[g] == h))
    });
    Ok(star_injective && star_surjective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn i2_groupoids() {
        let s = catalog::sym_inv(2).unwrap();
        let g = filter_groupoid(&s).unwrap();
        assert_eq!((g.len(), g.groupoid.identities().len()), (6, 3));
        let p = prime_spectrum(&s).unwrap();
        assert_eq!((p.len(), p.groupoid.identities().len()), (4, 2));
        assert!(p.topology.is_discrete());
        assert_eq!(kb_of(&p).unwrap().table.size(), 7);
    }

    #[test]
    fn chain_spectra() {
        let s = catalog::chain(3).unwrap();
        let p = prime_spectrum(&s).unwrap();
        assert_eq!(p.groupoid.identities().len(), 2);
        assert!(!p.topology.is_discrete());
        assert_eq!(kb_of(&p).unwrap().table.size(), 3);
        assert_eq!(tight_spectrum(&s).unwrap().len(), 1);
    }

    #[test]
    fn group_as_discrete_groupoid() {
        let z3: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let g = TopologicalGroupoid::discrete(FiniteGroupoid::from_group(&z3).unwrap());
        let kb = kb_of(&g).unwrap();
        assert_eq!(kb.table.size(), 4);
        assert!(eta_check(&g).unwrap().passed());
    }

    #[test]
    fn non_etale_topology_is_rejected() {
        let g = FiniteGroupoid::pair(2).unwrap();
        let t = BasisTopology::new(4, alloc::vec![BasisSet { label: "all".into(), members: BitSet::full(4) }]);
        let err = kb_of(&TopologicalGroupoid { groupoid: g, topology: t, filters: None }).unwrap_err();
        assert!(matches!(err, Error::NotEtale(_)));
    }

    #[test]
    fn covering_functors() {
        let pair = FiniteGroupoid::pair(2).unwrap();
        let trivial = FiniteGroupoid::from_group(&[alloc::vec![0]]).unwrap();
        assert_eq!(is_covering_functor(&pair, &trivial, &[0, 0, 0, 0]), Ok(false));
        assert_eq!(is_covering_functor(&pair, &pair, &[0, 1, 2, 3]), Ok(true));
        assert!(is_covering_functor(&pair, &pair, &[1, 1, 1, 1]).is_err());
    }

    #[test]
    fn dualities_on_small_members() {
        for id in ["sym_inv:2", "chain:3", "powerset_semilattice:2", "group_with_zero:cyclic:3"] {
            let s = catalog::build_str(id).unwrap();
            assert!(epsilon_check(&s).unwrap().passed(), "{id}");
            assert!(eta_check(&prime_spectrum(&s).unwrap()).unwrap().passed(), "{id}");
        }
    }

    #[test]
    fn opens_of_the_chain_spectrum() {
        let p = prime_spectrum(&catalog::chain(3).unwrap()).unwrap();
        assert_eq!(p.topology.materialize_opens(MAX_MATERIALIZED_POINTS).unwrap().len(), 3);
    }
}
