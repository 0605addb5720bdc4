//! Pinned counts. Each value is first recomputed by an oracle working from
//! the raw table, then compared with the library and with the pinned number.

mod common;

use common::{members_up_to, subsets, Raw, Set};
use nstone_core::catalog;
use nstone_core::completions;
use nstone_core::filters;
use nstone_core::groupoids;
use nstone_core::patch;
use nstone_core::MulTable;

fn build(id: &str) -> MulTable {
    catalog::build_str(id).unwrap()
}

fn oracle_prime_filter_count(r: &Raw) -> usize {
    (1..r.n).filter(|&x| r.is_prime(&r.up(x))).count()
}

/// Filters `x↑` as arrows with domain `d(x)↑` and range `r(x)↑`.
fn oracle_arrow_ends(r: &Raw, bases: &[usize]) -> Vec<(usize, usize)> {
    bases.iter().map(|&x| (r.mul(r.inv[x], x), r.mul(x, r.inv[x]))).collect()
}

/// Subsets of arrows on which domain and range are both injective.
fn oracle_local_bisections(ends: &[(usize, usize)]) -> usize {
    subsets((0..ends.len()).collect())
        .filter(|a| {
            let ds: Set = a.iter().map(|&i| ends[i].0).collect();
            let rs: Set = a.iter().map(|&i| ends[i].1).collect();
            ds.len() == a.len() && rs.len() == a.len()
        })
        .count()
}

/// Compatible ideals that contain every element one of whose tight covers
/// they contain.
fn oracle_tight_ideals(r: &Raw) -> usize {
    r.compatible_ideals()
        .into_iter()
        .filter(|a| {
            (1..r.n).all(|x| {
                let below: Vec<usize> = (1..r.n).filter(|&y| r.leq(y, x)).collect();
                let closed = subsets(below).all(|c| !(c.is_subset(a) && r.covers(x, &c)) || a.contains(&x));
                closed
            })
        })
        .count()
}

#[test]
fn prime_filters_of_three_point_partial_bijections() {
    let t = build("sym_inv:3");
    let oracle = oracle_prime_filter_count(&Raw::new(&t));
    assert_eq!(filters::prime_filters(&t).len(), oracle);
    assert_eq!(oracle, 9);
}

#[test]
fn distributive_completion_of_antichain() {
    let t = build("antichain:3");
    let oracle = Raw::new(&t).compatible_ideals().len();
    assert_eq!(completions::distributive_completion(&t).unwrap().table.size(), oracle);
    assert_eq!(oracle, 4);
}

#[test]
fn booleanization_of_four_chain() {
    let t = build("chain:4");
    let r = Raw::new(&t);
    let primes: Vec<usize> = (1..r.n).filter(|&x| r.is_prime(&r.up(x))).collect();
    // Prime filters of a semilattice are identities, so every subset is a bisection.
    let oracle = oracle_local_bisections(&oracle_arrow_ends(&r, &primes));
    assert_eq!(patch::booleanize(&t).unwrap().kb.table.size(), oracle);
    assert_eq!(oracle, 8);
}

#[test]
fn completion_sizes() {
    let pinned = [("sym_inv:2", 9), ("sym_inv:3", 100), ("chain:3", 3), ("antichain:3", 4), ("powerset_semilattice:2", 5)];
    for (id, n) in pinned {
        let t = build(id);
        let oracle = Raw::new(&t).compatible_ideals().len();
        assert_eq!(completions::distributive_completion(&t).unwrap().table.size(), oracle, "{id}");
        assert_eq!(oracle, n, "{id}");
    }
}

#[test]
fn tight_completion_sizes() {
    for (id, t) in members_up_to(9) {
        let oracle = oracle_tight_ideals(&Raw::new(&t));
        assert_eq!(completions::tight_completion(&t).unwrap().table.size(), oracle, "{id}");
    }
    let pinned = [("chain:3", 2), ("antichain:3", 4), ("sym_inv:2", 7)];
    for (id, n) in pinned {
        assert_eq!(completions::tight_completion(&build(id)).unwrap().table.size(), n, "{id}");
    }
}

#[test]
fn groupoid_sizes() {
    let t = build("sym_inv:2");
    let r = Raw::new(&t);
    let all: Vec<usize> = (1..r.n).collect();
    let idempotent_filters = all.iter().filter(|&&x| r.up(x).iter().any(|&e| r.is_idempotent(e))).count();
    let g = groupoids::filter_groupoid(&t).unwrap();
    assert_eq!((g.len(), g.groupoid.identities().len()), (r.filters().len(), idempotent_filters));
    assert_eq!((g.len(), idempotent_filters), (6, 3));

    let p = groupoids::prime_spectrum(&t).unwrap();
    assert_eq!((p.len(), p.groupoid.identities().len()), (4, 2));
    assert_eq!(groupoids::tight_spectrum(&build("chain:3")).unwrap().len(), 1);
}

#[test]
fn paterson_semigroup_of_two_point_partial_bijections() {
    // The universal topology is discrete here, so the semigroup consists of
    // all local bisections of the filter groupoid.
    let t = build("sym_inv:2");
    let r = Raw::new(&t);
    let all: Vec<usize> = (1..r.n).collect();
    let oracle = oracle_local_bisections(&oracle_arrow_ends(&r, &all));
    assert_eq!(patch::paterson_bs(&t).unwrap().booleanization.kb.table.size(), oracle);
    assert_eq!(oracle, 21);
}

#[test]
fn booleanization_sizes() {
    assert_eq!(patch::booleanize(&build("chain:3")).unwrap().kb.table.size(), 4);
    assert_eq!(patch::booleanize(&build("sym_inv:2")).unwrap().kb.table.size(), 7);
}
