//! Validated multiplication tables of finite inverse semigroups with zero.
//!
//! Element `0` is always the zero. The natural partial order, compatibility,
//! and all binary meets and joins are computed once at validation time.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Index of an element in a [`MulTable`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ElementId(pub usize);

impl ElementId {
    pub const ZERO: ElementId = ElementId(0);

    pub fn idx(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of elements of one table.
pub type ElementSet = BitSet;

/// A finite inverse semigroup with zero, given by its Cayley table.
#[derive(Clone)]
pub struct MulTable {
    n: usize,
    prod: Vec<ElementId>,
    inv: Vec<ElementId>,
    idem: ElementSet,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
    compat: Vec<ElementSet>,
    joins: Vec<Option<ElementId>>,
    meets: Vec<Option<ElementId>>,
    names: Option<Vec<String>>,
}

/// Structural flags of a semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_distributive: bool,
    pub is_boolean: bool,
    pub is_meet_semigroup: bool,
    pub is_boolean_meet_semigroup: bool,
    pub idempotents: Vec<ElementId>,
}

impl MulTable {
    /// Validates `rows[s][t] = st`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed("empty table".into()));
        }
        let mut prod = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::Malformed(format!("entry {x} out of range in row {i}")));
                }
                prod.push(ElementId(x));
            }
        }
        Self::from_products(n, prod)
    }

    /// Validates the table `f(s, t) = st` on `0..n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut rows = Vec::with_capacity(n);
        for s in 0..n {
            rows.push((0..n).map(|t| f(s, t)).collect());
        }
        Self::new(rows)
    }

    /// Adjoins a fresh zero at index 0 to a zero-less table on `0..rows.len()`;
    /// old element `i` becomes `i + 1`.
    pub fn adjoin_zero(rows: &[Vec<usize>]) -> Result<Self> {
        let m = rows.len();
        Self::from_fn(m + 1, |s, t| if s == 0 || t == 0 { 0 } else { rows[s - 1][t - 1] + 1 })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::Malformed(format!("{} names for {} elements", names.len(), self.n)));
        }
        self.names = Some(names);
        Ok(self)
    }

    fn from_products(n: usize, prod: Vec<ElementId>) -> Result<Self> {
        let m = |s: usize, t: usize| prod[s * n + t].0;
        for s in 0..n {
            for t in 0..n {
                let st = m(s, t);
                for u in 0..n {
                    if m(st, u) != m(s, m(t, u)) {
                        return Err(Error::NotAssociative { s: ElementId(s), t: ElementId(t), u: ElementId(u) });
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(n);
        for s in 0..n {
            let mut found = None;
            for t in 0..n {
                if m(m(s, t), s) == s && m(m(t, s), t) == t {
                    if found.is_some() {
                        return Err(Error::NotInverseSemigroup(ElementId(s)));
                    }
                    found = Some(ElementId(t));
                }
            }
            inv.push(found.ok_or(Error::NotInverseSemigroup(ElementId(s)))?);
        }
        let idem = BitSet::from_iter(n, (0..n).filter(|&e| m(e, e) == e));
        for e in idem.iter() {
            for f in idem.iter() {
                if m(e, f) != m(f, e) {
                    return Err(Error::NotInverseSemigroup(ElementId(e)));
                }
            }
        }
        if (0..n).any(|s| m(0, s) != 0 || m(s, 0) != 0) {
            return Err(Error::NoZero);
        }

        // s <= t iff s = t s^-1 s
        let mut down = vec_of(n, BitSet::new(n));
        let mut up = vec_of(n, BitSet::new(n));
        for s in 0..n {
            let ds = m(inv[s].0, s);
            for t in 0..n {
                if m(t, ds) == s {
                    down[t].insert(s);
                    up[s].insert(t);
                }
            }
        }
        let mut compat = vec_of(n, BitSet::new(n));
        for s in 0..n {
            for t in 0..n {
                if idem.contains(m(inv[s].0, t)) && idem.contains(m(s, inv[t].0)) {
                    compat[s].insert(t);
                }
            }
        }
        let mut joins = Vec::with_capacity(n * n);
        let mut meets = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let ub = up[s].intersection(&up[t]);
                joins.push(ub.iter().find(|&u| ub.is_subset(&up[u])).map(ElementId));
                let lb = down[s].intersection(&down[t]);
                meets.push(lb.iter().find(|&l| lb.is_subset(&down[l])).map(ElementId));
            }
        }
        Ok(MulTable { n, prod, inv, idem, down, up, compat, joins, meets, names: None })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.n).map(ElementId)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ElementId> + Clone {
        (1..self.n).map(ElementId)
    }

    pub fn mul(&self, s: ElementId, t: ElementId) -> ElementId {
        self.prod[s.0 * self.n + t.0]
    }

    pub fn inv(&self, s: ElementId) -> ElementId {
        self.inv[s.0]
    }

    /// `s^-1 s`
    pub fn d(&self, s: ElementId) -> ElementId {
        self.mul(self.inv(s), s)
    }

    /// `s s^-1`
    pub fn r(&self, s: ElementId) -> ElementId {
        self.mul(s, self.inv(s))
    }

    pub fn is_idempotent(&self, s: ElementId) -> bool {
        self.idem.contains(s.0)
    }

    pub fn idempotent_set(&self) -> &ElementSet {
        &self.idem
    }

    pub fn idempotents(&self) -> Vec<ElementId> {
        self.idem.iter().map(ElementId).collect()
    }

    /// Natural partial order.
    pub fn leq(&self, s: ElementId, t: ElementId) -> bool {
        self.down[t.0].contains(s.0)
    }

    /// `{y : y <= s}`, always containing 0.
    pub fn down(&self, s: ElementId) -> &ElementSet {
        &self.down[s.0]
    }

    pub fn up(&self, s: ElementId) -> &ElementSet {
        &self.up[s.0]
    }

    pub fn compatible(&self, s: ElementId, t: ElementId) -> bool {
        self.compat[s.0].contains(t.0)
    }

    pub fn compatible_with(&self, s: ElementId) -> &ElementSet {
        &self.compat[s.0]
    }

    /// Greatest lower bound, when it exists.
    pub fn meet(&self, s: ElementId, t: ElementId) -> Option<ElementId> {
        self.meets[s.0 * self.n + t.0]
    }

    /// Least upper bound, when it exists.
    pub fn join(&self, s: ElementId, t: ElementId) -> Option<ElementId> {
        self.joins[s.0 * self.n + t.0]
    }

    /// Join of a compatible pair; `Ok(None)` when the pair has no join.
    pub fn join_compatible(&self, s: ElementId, t: ElementId) -> Result<Option<ElementId>> {
        if !self.compatible(s, t) {
            return Err(Error::NotCompatible(s, t));
        }
        Ok(self.join(s, t))
    }

    /// Least upper bound of a set; the empty set joins to 0.
    pub fn join_set(&self, set: &ElementSet) -> Option<ElementId> {
        let mut ub = BitSet::full(self.n);
        for x in set.iter() {
            ub.intersect_with(&self.up[x]);
        }
        let lub = ub.iter().find(|&u| ub.is_subset(&self.up[u]));
        lub.map(ElementId)
    }

    pub fn join_all<I: IntoIterator<Item = ElementId>>(&self, items: I) -> Option<ElementId> {
        self.join_set(&BitSet::from_iter(self.n, items.into_iter().map(|x| x.0)))
    }

    pub fn is_compatible_set(&self, set: &ElementSet) -> bool {
        set.iter().all(|x| set.is_subset(&self.compat[x]))
    }

    /// Every compatible pair has a join and multiplication distributes over
    /// existing binary joins on both sides.
    pub fn is_distributive(&self) -> bool {
        for a in self.elements() {
            for b in self.compat[a.0].iter().map(ElementId) {
                let Some(j) = self.join(a, b) else { return false };
                for s in self.elements() {
                    let left = self.join(self.mul(s, a), self.mul(s, b));
                    let right = self.join(self.mul(a, s), self.mul(b, s));
                    if left != Some(self.mul(s, j)) || right != Some(self.mul(j, s)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Complement of `f` in the lattice of idempotents below `e`.
    fn idempotent_complement(&self, f: ElementId, e: ElementId) -> Option<ElementId> {
        self.down[e.0]
            .iter()
            .map(ElementId)
            .find(|&g| self.mul(f, g) == ElementId::ZERO && self.join(f, g) == Some(e))
    }

    fn idempotent_ideals_complemented(&self) -> bool {
        self.idem.iter().map(ElementId).all(|e| {
            self.down[e.0].iter().map(ElementId).all(|f| self.idempotent_complement(f, e).is_some())
        })
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.idempotent_ideals_complemented()
    }

    pub fn is_meet_semigroup(&self) -> bool {
        self.meets.iter().all(Option::is_some)
    }

    pub fn classify(&self) -> Classification {
        let is_distributive = self.is_distributive();
        let is_boolean = is_distributive && self.idempotent_ideals_complemented();
        let is_meet_semigroup = self.is_meet_semigroup();
        Classification {
            is_distributive,
            is_boolean,
            is_meet_semigroup,
            is_boolean_meet_semigroup: is_boolean && is_meet_semigroup,
            idempotents: self.idempotents(),
        }
    }

    /// `a \ b` for `b <= a` in a Boolean semigroup.
    pub fn relative_complement(&self, a: ElementId, b: ElementId) -> Result<ElementId> {
        if !self.is_boolean() {
            return Err(Error::NotBoolean);
        }
        self.relative_complement_unchecked(a, b)
    }

    /// As [`relative_complement`](Self::relative_complement) without the
    /// Boolean check; fails only when the complement is absent.
    pub fn relative_complement_unchecked(&self, a: ElementId, b: ElementId) -> Result<ElementId> {
        if !self.leq(b, a) {
            return Err(Error::NotBelow(b, a));
        }
        let g = self.idempotent_complement(self.d(b), self.d(a)).ok_or(Error::NotBoolean)?;
        Ok(self.mul(a, g))
    }

    pub fn name(&self, s: ElementId) -> String {
        match &self.names {
            Some(names) => names[s.0].clone(),
            None => format!("{}", s.0),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|s| (0..self.n).map(|t| self.prod[s * self.n + t].0).collect()).collect()
    }

    /// Whether `ids` maps this table isomorphically onto `other`.
    pub fn is_isomorphism_to(&self, other: &MulTable, ids: &[ElementId]) -> bool {
        if ids.len() != self.n || other.n != self.n {
            return false;
        }
        let mut hit = BitSet::new(self.n);
        for &x in ids {
            hit.insert(x.0);
        }
        hit.len() == self.n
            && self.elements().all(|s| {
                self.elements().all(|t| ids[self.mul(s, t).0] == other.mul(ids[s.0], ids[t.0]))
            })
    }
}

impl PartialEq for MulTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.prod == other.prod
    }
}

impl Eq for MulTable {}

impl fmt::Debug for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MulTable").field("n", &self.n).field("rows", &self.rows()).finish()
    }
}

fn vec_of<T: Clone>(n: usize, x: T) -> Vec<T> {
    alloc::vec![x; n]
}
