//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

#[path = "../../nstone-core/tests/common/mod.rs"]
mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{members_up_to, Raw, Set};
use nstone::oracle;
use nstone_core::catalog::{self, CatalogId};
use nstone_core::completions;
use nstone_core::filters;
use nstone_core::groupoids;
use nstone_core::morphisms::{self, MapClass};
use nstone_core::patch;
use nstone_core::report::Report;
use nstone_core::tight;
use nstone_core::verify::{self, Options};
use nstone_core::MulTable;

type Outcome = Result<(), String>;

fn members() -> Vec<(CatalogId, MulTable)> {
    common::all_members()
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok { Ok(()) } else { Err(msg()) }
}

fn require_report(id: impl std::fmt::Display, r: Report) -> Outcome {
    match r.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{id}: {} failed ({:?})", c.name, c.witness)),
    }
}

fn err(e: impl std::fmt::Debug) -> String {
    format!("{e:?}")
}

/// Elements are exactly the open bisections of their prime spectrum.
fn stone_duality() -> Outcome {
    let mut checked = 0;
    for (id, s) in members() {
        if !s.is_distributive() {
            continue;
        }
        require_report(&id, groupoids::epsilon_check(&s).map_err(err)?)?;
        let (_, kb, _) = groupoids::epsilon(&s).map_err(err)?;
        require(kb.table.size() == s.size(), || format!("{id}: {} bisections", kb.table.size()))?;
        checked += 1;
    }
    // The three-element antichain has two compatible atoms without a join.
    require(!catalog::antichain(3).unwrap().is_distributive(), || "antichain:3 classified distributive".into())?;
    let pair = groupoids::epsilon(&catalog::sym_inv(2).unwrap()).map_err(err)?;
    require(pair.0.len() == 4 && pair.1.table.size() == 7, || "sym_inv:2 counts".into())?;
    require(checked == 13, || format!("{checked} distributive members"))
}

fn spectral_duality() -> Outcome {
    for (id, s) in members() {
        for g in [groupoids::prime_spectrum(&s).map_err(err)?, groupoids::tight_spectrum(&s).map_err(err)?] {
            require_report(&id, groupoids::eta_check(&g).map_err(err)?)?;
        }
    }
    Ok(())
}

fn filter_theory() -> Outcome {
    for (id, s) in members() {
        let all = filters::all_filters(&s);
        for &f in &all {
            require(!filters::is_ultrafilter(&s, f) || filters::is_prime_filter(&s, f), || {
                format!("{id}: ultrafilter {} not prime", s.name(f.base))
            })?;
        }
        if s.is_distributive() {
            let primes_ultra = all.iter().filter(|&&f| filters::is_prime_filter(&s, f)).all(|&f| filters::is_ultrafilter(&s, f));
            require(s.is_boolean() == primes_ultra, || format!("{id}: Boolean {} but prime=>ultra {primes_ultra}", s.is_boolean()))?;
        }
    }
    Ok(())
}

fn separation() -> Outcome {
    for (id, s) in members() {
        if !s.is_distributive() {
            continue;
        }
        for a in s.elements() {
            for b in s.nonzero().filter(|&b| !s.leq(b, a)) {
                let f = filters::separating_prime_filter(&s, a, b).map_err(|e| format!("{id} {a} {b}: {e:?}"))?;
                let ok = filters::is_prime_filter(&s, f) && f.contains(&s, b) && !f.contains(&s, a);
                require(ok, || format!("{id}: {} does not separate {} from {}", s.name(f.base), s.name(b), s.name(a)))?;
            }
        }
    }
    Ok(())
}

fn distributive_targets() -> Vec<(String, MulTable)> {
    verify::standard_targets(8).into_iter().filter(|(_, t)| t.is_distributive()).collect()
}

fn distributive_universal_property() -> Outcome {
    let targets = distributive_targets();
    let mut maps = 0;
    for (id, s) in members_up_to(7) {
        for (name, t) in &targets {
            let c = verify::distributive_universal(&s, name, t).map_err(err)?;
            require(c.passed(), || format!("{id} -> {name}: {:?}", c.witness))?;
            maps += c.instances;
        }
    }
    require(maps > 0, || "no homomorphisms enumerated".into())
}

fn paterson() -> Outcome {
    for (id, s) in members() {
        require_report(&id, verify::paterson(&s, &Options::default()).map_err(err)?)?;
    }
    Ok(())
}

fn isomorphic(a: &MulTable, b: &MulTable) -> bool {
    a.size() == b.size()
        && morphisms::enumerate_homomorphisms(a, b, MapClass::Homomorphism)
            .is_ok_and(|maps| maps.iter().any(|m| a.is_isomorphism_to(b, m)))
}

fn booleanization() -> Outcome {
    let boolean_targets: Vec<_> = verify::standard_targets(8).into_iter().filter(|(_, t)| t.is_boolean()).collect();
    for (id, s) in members() {
        if !s.is_distributive() {
            continue;
        }
        let b = patch::booleanize(&s).map_err(err)?;
        require(b.kb.table.is_boolean(), || format!("{id}: B(S) not Boolean"))?;
        let distinct: std::collections::BTreeSet<_> = b.beta.iter().collect();
        require(distinct.len() == s.size(), || format!("{id}: embedding not injective"))?;
        require(patch::patch_equals_usual(&s).map_err(err)? == s.is_boolean(), || format!("{id}: patch vs Boolean"))?;
        if s.size() <= 7 {
            for (name, t) in &boolean_targets {
                let c = verify::booleanization_universal(&s, &b, name, t).map_err(err)?;
                require(c.passed(), || format!("{id} -> {name}: {:?}", c.witness))?;
            }
        }
    }
    let chain = patch::booleanize(&catalog::chain(3).unwrap()).map_err(err)?;
    require(chain.kb.table.size() == 4, || "chain:3 Booleanization size".into())?;
    require(isomorphic(&chain.kb.table, &catalog::powerset_semilattice(2).unwrap()), || "chain:3 not 2^2".into())?;
    let i2 = catalog::sym_inv(2).unwrap();
    let b = patch::booleanize(&i2).map_err(err)?;
    require(b.kb.table.size() == 7 && i2.is_isomorphism_to(&b.kb.table, &b.beta), || "sym_inv:2 not fixed".into())
}

fn patch_discreteness() -> Outcome {
    for (id, s) in members() {
        let b = patch::booleanize(&s).map_err(err)?;
        require(b.spectrum.topology.is_discrete(), || format!("{id}: patch topology not discrete"))?;
        let direct = patch::all_local_bisections(&s).map_err(err)?;
        require(direct.bisections == b.kb.bisections, || format!("{id}: routes disagree"))?;
    }
    Ok(())
}

fn tight_machinery() -> Outcome {
    for (id, s) in members() {
        require_report(format!("{id} coverage"), tight::coverage_axioms_check(&s, 3).map_err(err)?)?;
        if completions::distributive_completion(&s).map_err(err)?.table.size() <= 64 {
            require_report(format!("{id} nucleus"), completions::nucleus_check(&s).map_err(err)?)?;
        }
        require_report(format!("{id} tight"), verify::tight_suite(&s, &Options::default()).map_err(err)?)?;
    }
    let exel = |id: &str| patch::exel_tight_groupoid(&catalog::build_str(id).unwrap()).map(|g| g.len());
    require(exel("chain:3").map_err(err)? == 1, || "chain:3 tight groupoid".into())?;
    require(exel("sym_inv:2").map_err(err)? == 4, || "sym_inv:2 tight groupoid".into())
}

fn set_of(b: &nstone_core::BitSet) -> Set {
    b.iter().collect()
}

fn oracle_equivalence() -> Outcome {
    for (id, s) in members_up_to(7) {
        let r = Raw::new(&s);
        let mut principal: Vec<Set> = filters::all_filters(&s).iter().map(|f| set_of(f.members(&s))).collect();
        principal.sort();
        require(principal == r.filters(), || format!("{id}: filters"))?;
        for a in s.elements() {
            for b in s.elements() {
                require(tight::tight_equiv(&s, a, b) == r.tight_equiv(a.0, b.0), || format!("{id}: tight_equiv {a} {b}"))?;
            }
        }
        for f in filters::all_filters(&s) {
            require(tight::is_tight_filter(&s, f) == r.is_tight_filter(&set_of(f.members(&s))), || format!("{id}: tight filter"))?;
        }
        let pb = completions::is_pre_boolean(&s).map_err(err)?;
        require(pb.agree(), || format!("{id}: {pb:?}"))?;
        require_report(&id, oracle::cross_check(&s).map_err(err)?)?;
    }
    Ok(())
}

fn regression_counts() -> Outcome {
    let i3 = filters::prime_filters(&catalog::sym_inv(3).unwrap()).len();
    let d = completions::distributive_completion(&catalog::antichain(3).unwrap()).map_err(err)?.table.size();
    let b = patch::booleanize(&catalog::chain(4).unwrap()).map_err(err)?.kb.table.size();
    require((i3, d, b) == (9, 4, 8), || format!("got ({i3}, {d}, {b})"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("elements are the open bisections of the prime spectrum", stone_duality),
        ("arrows are the prime filters of the open bisections", spectral_duality),
        ("ultrafilters are prime; Boolean iff prime filters are ultra", filter_theory),
        ("prime filters separate non-comparable elements", separation),
        ("homomorphisms extend uniquely to the distributive completion", distributive_universal_property),
        ("filter and universal groupoids match the completion's spectra", paterson),
        ("Booleanization is Boolean, injective and universal", booleanization),
        ("patch topology is discrete and gives all local bisections", patch_discreteness),
        ("tight coverage, closure, filters and groupoid", tight_machinery),
        ("library agrees with brute-force oracles", oracle_equivalence),
        ("regression counts (9, 4, 8)", regression_counts),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {}: {name} ({:.2?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
