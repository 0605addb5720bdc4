//! Brute-force oracles working from the raw product table only. Nothing here
//! calls the library beyond `MulTable::rows`, `size` and `name`.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use nstone_core::catalog::{self, CatalogId};
use nstone_core::MulTable;

pub type Set = BTreeSet<usize>;

/// A semigroup seen only through its multiplication table.
pub struct Raw {
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl Raw {
    pub fn new(t: &MulTable) -> Self {
        let rows = t.rows();
        let n = rows.len();
        let inv = (0..n)
            .map(|s| {
                (0..n)
                    .find(|&x| rows[rows[s][x]][s] == s && rows[rows[x][s]][x] == x)
                    .expect("every element has an inverse")
            })
            .collect();
        Raw { n, rows, inv }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == self.mul(b, self.mul(self.inv[a], a))
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.is_idempotent(self.mul(self.inv[a], b)) && self.is_idempotent(self.mul(a, self.inv[b]))
    }

    /// Least upper bound in the natural order, if any.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.n).filter(|&x| self.leq(a, x) && self.leq(b, x)).collect();
        ub.iter().copied().find(|&x| ub.iter().all(|&y| self.leq(x, y)))
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.n).filter(|&x| self.leq(x, a) && self.leq(x, b)).collect();
        lb.iter().copied().find(|&x| lb.iter().all(|&y| self.leq(y, x)))
    }

    pub fn down(&self, a: usize) -> Set {
        (0..self.n).filter(|&x| self.leq(x, a)).collect()
    }

    pub fn up(&self, a: usize) -> Set {
        (0..self.n).filter(|&x| self.leq(a, x)).collect()
    }

    pub fn all_subsets(&self) -> impl Iterator<Item = Set> + '_ {
        subsets((0..self.n).collect())
    }

    /// Nonempty zero-free up-closed sets in which any two members have a
    /// common lower bound inside the set.
    pub fn filters(&self) -> Vec<Set> {
        let mut out: Vec<Set> = subsets((1..self.n).collect())
            .filter(|f| !f.is_empty())
            .filter(|f| f.iter().all(|&x| self.up(x).is_subset(f)))
            .filter(|f| {
                f.iter().all(|&a| f.iter().all(|&b| f.iter().any(|&c| self.leq(c, a) && self.leq(c, b))))
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_prime(&self, f: &Set) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| match self.join(a, b) {
                Some(j) if f.contains(&j) => f.contains(&a) || f.contains(&b),
                _ => true,
            })
        })
    }

    /// Zero-free filters maximal under inclusion.
    pub fn is_ultra(&self, f: &Set, all: &[Set]) -> bool {
        all.iter().all(|g| !(f.is_subset(g) && f != g))
    }

    /// Every nonzero `x <= a` has a nonzero common lower bound with a part.
    pub fn covers(&self, a: usize, parts: &Set) -> bool {
        (1..self.n).filter(|&x| self.leq(x, a)).all(|x| {
            parts.iter().any(|&p| (1..self.n).any(|z| self.leq(z, x) && self.leq(z, p)))
        })
    }

    /// Some set of common lower bounds is a tight cover of both.
    pub fn tight_equiv(&self, a: usize, b: usize) -> bool {
        let common: Vec<usize> = (1..self.n).filter(|&x| self.leq(x, a) && self.leq(x, b)).collect();
        let found = subsets(common).any(|c| self.covers(a, &c) && self.covers(b, &c));
        found
    }

    pub fn is_tight_filter(&self, f: &Set) -> bool {
        f.iter().all(|&a| {
            let below: Vec<usize> = (1..self.n).filter(|&x| self.leq(x, a)).collect();
            let met = subsets(below).all(|c| !self.covers(a, &c) || c.iter().any(|x| f.contains(x)));
            met
        })
    }

    /// Order ideals whose members are pairwise compatible, grown one
    /// principal ideal at a time from `{0}`.
    pub fn compatible_ideals(&self) -> Vec<Set> {
        let mut seen: HashSet<Set> = HashSet::new();
        let mut stack = vec![Set::from([0])];
        while let Some(i) = stack.pop() {
            if !seen.insert(i.clone()) {
                continue;
            }
            for x in 0..self.n {
                if !i.contains(&x) && i.iter().all(|&y| self.compatible(x, y)) {
                    let mut next = i.clone();
                    next.extend(self.down(x));
                    if next.iter().all(|&a| next.iter().all(|&b| self.compatible(a, b))) {
                        stack.push(next);
                    }
                }
            }
        }
        let mut out: Vec<Set> = seen.into_iter().collect();
        out.sort();
        out
    }

    pub fn is_join_closed(&self, i: &Set) -> bool {
        i.iter().all(|&a| i.iter().all(|&b| self.join(a, b).is_none_or(|j| i.contains(&j))))
    }

    /// Zero-preserving homomorphisms into `t`, by trying every map, sorted.
    pub fn homomorphisms_to(&self, t: &Raw) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut theta = vec![0; self.n];
        loop {
            let ok = (0..self.n).all(|a| (0..self.n).all(|b| theta[self.mul(a, b)] == t.mul(theta[a], theta[b])));
            if ok {
                out.push(theta.clone());
            }
            // Odometer over positions 1.., position 0 pinned to zero.
            let mut i = 1;
            loop {
                if i == self.n {
                    out.sort();
                    return out;
                }
                theta[i] += 1;
                if theta[i] < t.n {
                    break;
                }
                theta[i] = 0;
                i += 1;
            }
        }
    }

    /// Additionally preserves every existing join.
    pub fn preserves_joins(&self, t: &Raw, theta: &[usize]) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| match self.join(a, b) {
                Some(j) => t.join(theta[a], theta[b]) == Some(theta[j]),
                None => true,
            })
        })
    }
}

pub fn subsets(pool: Vec<usize>) -> impl Iterator<Item = Set> {
    assert!(pool.len() < 24, "oracle subset enumeration is exponential");
    (0u32..1 << pool.len()).map(move |mask| {
        pool.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect()
    })
}

/// A partial bijection of `{1..n}` as `image[i]` for point `i + 1`.
pub type PartialMap = Vec<Option<usize>>;

/// Decodes names like `1>2,2>1`; `0` is the empty map.
pub fn parse_partial_map(name: &str, n: usize) -> PartialMap {
    let mut m = vec![None; n];
    if name == "0" {
        return m;
    }
    for pair in name.split(',') {
        let (a, b) = pair.split_once('>').expect("pairs look like a>b");
        m[a.parse::<usize>().unwrap() - 1] = Some(b.parse().unwrap());
    }
    m
}

/// `(f g)(x) = f(g(x))`.
pub fn compose(f: &PartialMap, g: &PartialMap) -> PartialMap {
    g.iter().map(|x| x.and_then(|y| f[y - 1])).collect()
}

/// Every partial bijection of `{1..n}`.
pub fn all_partial_bijections(n: usize) -> Vec<PartialMap> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for prefix in out {
            let mut none = prefix.clone();
            none.push(None);
            next.push(none);
            for y in 1..=n {
                if !prefix.contains(&Some(y)) {
                    let mut p = prefix.clone();
                    p.push(Some(y));
                    next.push(p);
                }
            }
        }
        out = next;
    }
    out
}

/// Catalog members with at most `max` elements.
pub fn members_up_to(max: usize) -> Vec<(CatalogId, MulTable)> {
    catalog::standard_members()
        .into_iter()
        .map(|id| (id, catalog::build(id).unwrap()))
        .filter(|(_, t)| t.size() <= max)
        .collect()
}

pub fn all_members() -> Vec<(CatalogId, MulTable)> {
    members_up_to(usize::MAX)
}
