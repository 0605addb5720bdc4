mod common;

use common::{members_up_to, Raw, Set};
use nstone_core::completions;
use nstone_core::filters;
use nstone_core::ideals;
use nstone_core::morphisms::{self, MapClass};
use nstone_core::tight;
use nstone_core::{BitSet, ElementId};

fn set_of(b: &BitSet) -> Set {
    b.iter().collect()
}

#[test]
fn filters_are_principal() {
    for (id, t) in members_up_to(7) {
        let r = Raw::new(&t);
        let mut principal: Vec<Set> = filters::all_filters(&t).iter().map(|f| set_of(f.members(&t))).collect();
        principal.sort();
        assert_eq!(principal, r.filters(), "{id}");
    }
}

#[test]
fn prime_and_ultra_flags() {
    for (id, t) in members_up_to(7) {
        let r = Raw::new(&t);
        let all = r.filters();
        for f in filters::all_filters(&t) {
            let m = set_of(f.members(&t));
            assert_eq!(filters::is_prime_filter(&t, f), r.is_prime(&m), "{id} prime {}", t.name(f.base));
            assert_eq!(filters::is_ultrafilter(&t, f), r.is_ultra(&m, &all), "{id} ultra {}", t.name(f.base));
        }
    }
}

#[test]
fn tight_relations_match_cover_enumeration() {
    for (id, t) in members_up_to(7) {
        let r = Raw::new(&t);
        for a in t.elements() {
            for b in t.elements() {
                assert_eq!(tight::tight_equiv(&t, a, b), r.tight_equiv(a.0, b.0), "{id} {} {}", t.name(a), t.name(b));
            }
        }
        for f in filters::all_filters(&t) {
            let m = set_of(f.members(&t));
            assert_eq!(tight::is_tight_filter(&t, f), r.is_tight_filter(&m), "{id} {}", t.name(f.base));
        }
    }
}

#[test]
fn tight_covers_match_definition() {
    for (id, t) in members_up_to(9) {
        let r = Raw::new(&t);
        for a in t.elements() {
            for parts in tight::subsets_below(&t, a, 3) {
                let c = tight::Cover::new(a, parts.clone());
                assert_eq!(tight::is_tight_cover(&t, &c), r.covers(a.0, &set_of(&parts)), "{id}");
            }
        }
    }
}

#[test]
fn pre_boolean_routes_agree() {
    for (id, t) in members_up_to(9) {
        let r = Raw::new(&t);
        let all = r.filters();
        let by_definition = all.iter().filter(|f| r.is_tight_filter(f)).all(|f| r.is_ultra(f, &all));
        let pb = completions::is_pre_boolean(&t).unwrap();
        assert!(pb.agree(), "{id}: {pb:?}");
        assert_eq!(pb.via_filters, by_definition, "{id}");
    }
}

#[test]
fn completions_enumerate_compatible_ideals() {
    for (id, t) in members_up_to(9) {
        let r = Raw::new(&t);
        let brute = r.compatible_ideals();
        let mut fast: Vec<Set> = ideals::compatible_ideals(&t).unwrap().iter().map(|i| set_of(&i.carrier)).collect();
        fast.sort();
        assert_eq!(fast, brute, "{id}");
        let d = completions::distributive_completion(&t).unwrap();
        assert_eq!(d.table.size(), brute.len(), "{id}");
        if t.is_distributive() {
            let closed = brute.iter().filter(|i| r.is_join_closed(i)).count();
            assert_eq!(completions::idl_completion(&t).unwrap().table.size(), closed, "{id}");
        }
    }
}

#[test]
fn homomorphism_search_is_exhaustive() {
    let small = members_up_to(5);
    for (sid, s) in &small {
        let rs = Raw::new(s);
        for (tid, t) in &small {
            let rt = Raw::new(t);
            let brute = rs.homomorphisms_to(&rt);
            let found: Vec<Vec<usize>> = morphisms::enumerate_homomorphisms(s, t, MapClass::Homomorphism)
                .unwrap()
                .into_iter()
                .map(|m| m.into_iter().map(|x| x.0).collect())
                .collect();
            assert_eq!(found, brute, "{sid} -> {tid}");
            let joins: Vec<Vec<usize>> = brute.iter().filter(|m| rs.preserves_joins(&rt, m)).cloned().collect();
            let found: Vec<Vec<usize>> = morphisms::enumerate_homomorphisms(s, t, MapClass::Morphism)
                .unwrap()
                .into_iter()
                .map(|m| m.into_iter().map(|x| x.0).collect())
                .collect();
            assert_eq!(found, joins, "{sid} -> {tid} morphisms");
        }
    }
}

#[test]
fn joins_and_meets_match_order() {
    for (id, t) in members_up_to(9) {
        let r = Raw::new(&t);
        for a in t.elements() {
            for b in t.elements() {
                assert_eq!(t.leq(a, b), r.leq(a.0, b.0), "{id}");
                assert_eq!(t.compatible(a, b), r.compatible(a.0, b.0), "{id}");
                assert_eq!(t.join(a, b).map(|x| x.0), r.join(a.0, b.0), "{id} join {} {}", t.name(a), t.name(b));
                assert_eq!(t.meet(a, b).map(|x| x.0), r.meet(a.0, b.0), "{id} meet");
            }
        }
        assert_eq!(t.inv(ElementId(1)).0, r.inv[1], "{id}");
    }
}
