//! Named families of small inverse semigroups with zero.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::MulTable;

/// Largest table the builders will produce.
pub const MAX_CATALOG_SIZE: usize = 512;

/// Finite groups available as coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
}

/// A catalog entry. Text form: `sym_inv:2`, `chain:3`, `antichain:3`,
/// `powerset_semilattice:2`, `group_with_zero:cyclic:3`,
/// `group_with_zero:symmetric:3`, `brandt:cyclic:1:2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogId {
    /// All partial bijections of an `n`-set.
    SymInv(usize),
    /// `k` elements `0 < c1 < ... < c(k-1)` under minimum.
    Chain(usize),
    /// `k` elements: zero and `k - 1` pairwise orthogonal idempotents.
    Antichain(usize),
    /// Subsets of a `k`-set under intersection.
    PowersetSemilattice(usize),
    GroupWithZero(GroupSpec),
    /// Brandt semigroup over a group with `n` indices.
    Brandt(GroupSpec, usize),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::SymInv(n) => write!(f, "sym_inv:{n}"),
            CatalogId::Chain(k) => write!(f, "chain:{k}"),
            CatalogId::Antichain(k) => write!(f, "antichain:{k}"),
            CatalogId::PowersetSemilattice(k) => write!(f, "powerset_semilattice:{k}"),
            CatalogId::GroupWithZero(g) => write!(f, "group_with_zero:{g}"),
            CatalogId::Brandt(g, n) => write!(f, "brandt:{g}:{n}"),
        }
    }
}

fn parse_num(s: Option<&str>, id: &str) -> Result<usize> {
    s.and_then(|x| x.parse().ok())
        .ok_or_else(|| Error::Unsupported(format!("cannot parse catalog id `{id}`")))
}

fn parse_group<'a>(parts: &mut impl Iterator<Item = &'a str>, id: &str) -> Result<GroupSpec> {
    match parts.next() {
        Some("cyclic") => Ok(GroupSpec::Cyclic(parse_num(parts.next(), id)?)),
        Some("symmetric") => Ok(GroupSpec::Symmetric(parse_num(parts.next(), id)?)),
        _ => Err(Error::Unsupported(format!("unknown group in `{id}`"))),
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(id: &str) -> Result<Self> {
        let mut parts = id.split(':');
        let family = parts.next().unwrap_or_default();
        let parsed = match family {
            "sym_inv" => CatalogId::SymInv(parse_num(parts.next(), id)?),
            "chain" => CatalogId::Chain(parse_num(parts.next(), id)?),
            "antichain" => CatalogId::Antichain(parse_num(parts.next(), id)?),
            "powerset_semilattice" | "powerset" => {
                CatalogId::PowersetSemilattice(parse_num(parts.next(), id)?)
            }
            "group_with_zero" => CatalogId::GroupWithZero(parse_group(&mut parts, id)?),
            "brandt" => {
                let g = parse_group(&mut parts, id)?;
                CatalogId::Brandt(g, parse_num(parts.next(), id)?)
            }
            _ => return Err(Error::Unsupported(format!("unknown catalog family `{family}`"))),
        };
        if parts.next().is_some() {
            return Err(Error::Unsupported(format!("trailing fields in `{id}`")));
        }
        Ok(parsed)
    }
}

/// Builds a catalog entry.
pub fn build(id: CatalogId) -> Result<MulTable> {
    match id {
        CatalogId::SymInv(n) => sym_inv(n),
        CatalogId::Chain(k) => chain(k),
        CatalogId::Antichain(k) => antichain(k),
        CatalogId::PowersetSemilattice(k) => powerset_semilattice(k),
        CatalogId::GroupWithZero(g) => group_with_zero(g),
        CatalogId::Brandt(g, n) => brandt(g, n),
    }
}

pub fn build_str(id: &str) -> Result<MulTable> {
    build(id.parse()?)
}

fn too_large(what: &str) -> Error {
    Error::TooLarge(format!("{what} exceeds {MAX_CATALOG_SIZE} elements"))
}

/// Partial bijections of `{1..n}`, composed right to left. Elements are
/// ordered by domain bitmask and then by image list; the empty map is 0.
pub fn sym_inv(n: usize) -> Result<MulTable> {
    if n > 3 {
        return Err(Error::TooLarge(format!("sym_inv({n}) is limited to n <= 3")));
    }
    // maps[i][x] = image of point x
    let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let dom: Vec<usize> = (0..n).filter(|x| mask & (1 << x) != 0).collect();
        let mut images = Vec::new();
        injections(&dom, n, &mut Vec::new(), &mut images);
        for img in images {
            let mut m = alloc::vec![None; n];
            for (&x, y) in dom.iter().zip(img) {
                m[x] = Some(y);
            }
            maps.push(m);
        }
    }
    let index = |m: &Vec<Option<usize>>| maps.iter().position(|x| x == m).unwrap();
    let table = MulTable::from_fn(maps.len(), |s, t| {
        let st: Vec<Option<usize>> = (0..n).map(|x| maps[t][x].and_then(|y| maps[s][y])).collect();
        index(&st)
    })?;
    let names = maps
        .iter()
        .map(|m| {
            let parts: Vec<String> = (0..n)
                .filter_map(|x| m[x].map(|y| format!("{}>{}", x + 1, y + 1)))
                .collect();
            if parts.is_empty() { "0".to_string() } else { parts.join(",") }
        })
        .collect();
    table.with_names(names)
}

fn injections(dom: &[usize], n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == dom.len() {
        out.push(cur.clone());
        return;
    }
    for y in 0..n {
        if !cur.contains(&y) {
            cur.push(y);
            injections(dom, n, cur, out);
            cur.pop();
        }
    }
}

pub fn chain(k: usize) -> Result<MulTable> {
    if k == 0 {
        return Err(Error::Unsupported("chain needs at least the zero".into()));
    }
    if k > MAX_CATALOG_SIZE {
        return Err(too_large("chain"));
    }
    let names = (0..k).map(|i| if i == 0 { "0".to_string() } else { format!("c{i}") }).collect();
    MulTable::from_fn(k, |s, t| s.min(t))?.with_names(names)
}

pub fn antichain(k: usize) -> Result<MulTable> {
    if k == 0 {
        return Err(Error::Unsupported("antichain needs at least the zero".into()));
    }
    if k > MAX_CATALOG_SIZE {
        return Err(too_large("antichain"));
    }
    let names = (0..k).map(|i| if i == 0 { "0".to_string() } else { format!("a{i}") }).collect();
    MulTable::from_fn(k, |s, t| if s == t { s } else { 0 })?.with_names(names)
}

/// Subsets of `{1..k}` indexed by their bitmask.
pub fn powerset_semilattice(k: usize) -> Result<MulTable> {
    if k > 4 {
        return Err(Error::TooLarge(format!("powerset_semilattice({k}) is limited to k <= 4")));
    }
    let names = (0..1usize << k)
        .map(|m| {
            let parts: Vec<String> = (0..k).filter(|i| m & (1 << i) != 0).map(|i| format!("{}", i + 1)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    MulTable::from_fn(1 << k, |s, t| s & t)?.with_names(names)
}

/// A finite group as a Cayley table with the identity at index 0.
struct Group {
    table: Vec<Vec<usize>>,
    names: Vec<String>,
}

fn group(spec: GroupSpec) -> Result<Group> {
    match spec {
        GroupSpec::Cyclic(n) => {
            if n == 0 {
                return Err(Error::Unsupported("cyclic group of order 0".into()));
            }
            if n >= MAX_CATALOG_SIZE {
                return Err(too_large("cyclic group"));
            }
            Ok(Group {
                table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
                names: (0..n).map(|a| if a == 0 { "e".to_string() } else { format!("g{a}") }).collect(),
            })
        }
        GroupSpec::Symmetric(n) => {
            if n == 0 || n > 4 {
                return Err(Error::Unsupported(format!("symmetric group on {n} points")));
            }
            let mut perms = Vec::new();
            let all: Vec<usize> = (0..n).collect();
            injections(&all, n, &mut Vec::new(), &mut perms);
            let index = |p: &Vec<usize>| perms.iter().position(|x| x == p).unwrap();
            let table = (0..perms.len())
                .map(|a| {
                    (0..perms.len())
                        .map(|b| index(&(0..n).map(|x| perms[a][perms[b][x]]).collect()))
                        .collect()
                })
                .collect();
            let names = perms
                .iter()
                .map(|p| p.iter().map(|y| format!("{}", y + 1)).collect::<Vec<_>>().join(""))
                .collect();
            Ok(Group { table, names })
        }
    }
}

pub fn group_with_zero(spec: GroupSpec) -> Result<MulTable> {
    let g = group(spec)?;
    let mut names = alloc::vec!["0".to_string()];
    names.extend(g.names);
    MulTable::adjoin_zero(&g.table)?.with_names(names)
}

/// Elements `(i, g, j)` with `(i,g,j)(k,h,l) = (i,gh,l)` when `j = k`, else 0.
pub fn brandt(spec: GroupSpec, n: usize) -> Result<MulTable> {
    let g = group(spec)?;
    let m = g.table.len();
    if n == 0 {
        return Err(Error::Unsupported("Brandt semigroup needs n >= 1".into()));
    }
    let size = n.checked_mul(n).and_then(|x| x.checked_mul(m)).and_then(|x| x.checked_add(1));
    if size.is_none_or(|s| s > MAX_CATALOG_SIZE) {
        return Err(too_large("Brandt semigroup"));
    }
    let code = |i: usize, a: usize, j: usize| 1 + (i * m + a) * n + j;
    let decode = |x: usize| {
        let y = x - 1;
        (y / (m * n), (y / n) % m, y % n)
    };
    let mut names = alloc::vec!["0".to_string()];
    for x in 1..size.unwrap() {
        let (i, a, j) = decode(x);
        names.push(format!("({},{},{})", i + 1, g.names[a], j + 1));
    }
    MulTable::from_fn(size.unwrap(), |s, t| {
        if s == 0 || t == 0 {
            return 0;
        }
        let (i, a, j) = decode(s);
        let (k, b, l) = decode(t);
        if j == k { code(i, g.table[a][b], l) } else { 0 }
    })?
    .with_names(names)
}

/// Entries used by the exhaustive checks, smallest first.
pub fn standard_members() -> Vec<CatalogId> {
    use CatalogId::*;
    alloc::vec![
        SymInv(1),
        SymInv(2),
        SymInv(3),
        Chain(2),
        Chain(3),
        Chain(4),
        Antichain(2),
        Antichain(3),
        PowersetSemilattice(1),
        PowersetSemilattice(2),
        PowersetSemilattice(3),
        GroupWithZero(GroupSpec::Cyclic(2)),
        GroupWithZero(GroupSpec::Cyclic(3)),
        GroupWithZero(GroupSpec::Symmetric(3)),
        Brandt(GroupSpec::Cyclic(1), 2),
        Brandt(GroupSpec::Cyclic(2), 2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::ElementId;

    #[test]
    fn symmetric_inverse_monoid_sizes() {
        let sizes: Vec<usize> = (0..=3).map(|n| sym_inv(n).unwrap().size()).collect();
        assert_eq!(sizes, [1, 2, 7, 34]);
        assert!(matches!(sym_inv(4), Err(Error::TooLarge(_))));
    }

    #[test]
    fn sym_inv_two_composes_right_to_left() {
        let s = sym_inv(2).unwrap();
        let names: Vec<String> = s.elements().map(|x| s.name(x)).collect();
        assert_eq!(names, ["0", "1>1", "1>2", "2>1", "2>2", "1>1,2>2", "1>2,2>1"]);
        // (1>2)(2>1) = 2>2
        assert_eq!(s.mul(ElementId(2), ElementId(3)), ElementId(4));
    }

    #[test]
    fn ids_round_trip_through_text() {
        for id in standard_members() {
            let text = id.to_string();
            assert_eq!(text.parse::<CatalogId>().unwrap(), id, "{text}");
        }
        assert!(matches!("chain:x".parse::<CatalogId>(), Err(Error::Unsupported(_))));
        assert!(matches!("monoid:3".parse::<CatalogId>(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn every_standard_member_validates() {
        for id in standard_members() {
            build(id).unwrap_or_else(|e| panic!("{id}: {e}"));
        }
        assert_eq!(build_str("group_with_zero:symmetric:3").unwrap().size(), 7);
        assert_eq!(build_str("brandt:cyclic:1:2").unwrap().size(), 5);
        assert!(matches!(build_str("powerset_semilattice:5"), Err(Error::TooLarge(_))));
    }
}
