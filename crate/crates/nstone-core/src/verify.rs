//! Named verification suites. Each suite runs exhaustive checks on one
//! semigroup and returns a [`Report`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::completions;
use crate::error::{Error, Result};
use crate::groupoids;
use crate::morphisms::{self, MapClass, DEFAULT_NODE_LIMIT};
use crate::patch;
use crate::report::{Check, Report};
use crate::semigroup::{ElementId, MulTable};
use crate::tight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Booleanization,
    Paterson,
    Tight,
    CoverageAxioms,
    Nucleus,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Duality, Suite::Booleanization, Suite::Paterson, Suite::Tight, Suite::CoverageAxioms, Suite::Nucleus];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Booleanization => "booleanization",
            Suite::Paterson => "paterson",
            Suite::Tight => "tight",
            Suite::CoverageAxioms => "coverage-axioms",
            Suite::Nucleus => "nucleus",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{s}`")))
    }
}

/// Settings shared by the suites.
#[derive(Clone, Debug)]
pub struct Options {
    /// Largest cover size sampled by the coverage suite.
    pub cover_size: usize,
    /// Targets for the universal-property checks.
    pub targets: Vec<(String, MulTable)>,
}

impl Default for Options {
    fn default() -> Self {
        Options { cover_size: 3, targets: Vec::new() }
    }
}

pub fn run(suite: Suite, s: &MulTable, opts: &Options) -> Result<Report> {
    match suite {
        Suite::Duality => duality(s),
        Suite::Booleanization => booleanization(s, opts),
        Suite::Paterson => paterson(s, opts),
        Suite::Tight => tight_suite(s, opts),
        Suite::CoverageAxioms => tight::coverage_axioms_check(s, opts.cover_size),
        Suite::Nucleus => completions::nucleus_check(s),
    }
}

/// Catalog members with at most `max_size` elements, by name.
pub fn standard_targets(max_size: usize) -> Vec<(String, MulTable)> {
    crate::catalog::standard_members()
        .into_iter()
        .filter_map(|id| crate::catalog::build(id).ok().map(|t| (format!("{id}"), t)))
        .filter(|(_, t)| t.size() <= max_size)
        .collect()
}

fn prefixed(prefix: &str, mut r: Report) -> Report {
    for c in &mut r.checks {
        c.name = format!("{prefix}: {}", c.name);
    }
    r
}

/// Representation by open bisections of the prime spectrum and back.
pub fn duality(s: &MulTable) -> Result<Report> {
    let class = s.classify();
    let mut rep = Report::default();
    if class.is_distributive {
        rep.extend(prefixed("elements as bisections", groupoids::epsilon_check(s)?));
    } else {
        rep.push(Check::single("elements as bisections: skipped, not distributive", true, String::new));
    }
    let spectrum = groupoids::prime_spectrum(s)?;
    rep.push(Check::single("prime spectrum is etale", spectrum.is_etale(), || spectrum.etale_violation().unwrap_or_default()));
    rep.extend(prefixed("arrows as prime filters", groupoids::eta_check(&spectrum)?));
    if class.is_distributive {
        let patch_usual = patch::patch_equals_usual(s)?;
        rep.push(Check::single("patch topology equals usual exactly when Boolean", patch_usual == class.is_boolean, || {
            format!("patch = usual: {patch_usual}, Boolean: {}", class.is_boolean)
        }));
    }
    Ok(rep)
}

pub fn booleanization(s: &MulTable, opts: &Options) -> Result<Report> {
    let class = s.classify();
    let b = patch::booleanize(s)?;
    let mut rep = Report::default();
    rep.push(Check::single("patch topology is discrete", b.spectrum.topology.is_discrete(), String::new));
    let direct = patch::all_local_bisections(s)?;
    rep.push(Check::single("open bisections are all local bisections", direct.bisections == b.kb.bisections, || {
        format!("{} against {}", b.kb.table.size(), direct.table.size())
    }));
    rep.push(Check::single("Booleanization is Boolean", b.kb.table.is_boolean(), String::new));
    if class.is_distributive {
        let c = morphisms::classify_morphism(s, &b.kb.table, &b.beta)?;
        rep.push(Check::single("embedding is a callitic morphism", c.morphism && c.callitic, || format!("{c:?}")));
        let injective = b.beta.iter().collect::<alloc::collections::BTreeSet<_>>().len() == s.size();
        rep.push(Check::single("embedding is injective", injective, String::new));
        for (name, t) in &opts.targets {
            if t.is_boolean() {
                rep.push(booleanization_universal(s, &b, name, t)?);
            }
        }
    }
    Ok(rep)
}

pub fn paterson(s: &MulTable, opts: &Options) -> Result<Report> {
    let c = completions::distributive_completion(s)?;
    let mut rep = prefixed(
        "filter groupoid",
        patch::correspondence_check(s, &c, &groupoids::filter_groupoid(s)?, &groupoids::prime_spectrum(&c.table)?)?,
    );
    rep.extend(prefixed("universal groupoid", patch::paterson_check(s)?));
    let g = patch::universal_groupoid(s)?;
    rep.push(Check::single("universal topology is discrete", g.topology.is_discrete(), String::new));
    for (name, t) in &opts.targets {
        if t.is_distributive() {
            rep.push(distributive_universal(s, name, t)?);
        }
    }
    Ok(rep)
}

pub fn tight_suite(s: &MulTable, opts: &Options) -> Result<Report> {
    let mut rep = prefixed("tight filters", patch::tight_check(s)?);
    let tight_filters = tight::tight_filters(s);
    let mut ultra = Check::new("ultrafilters are tight");
    for f in crate::filters::all_filters(s) {
        if crate::filters::is_ultrafilter(s, f) {
            ultra.record(tight_filters.contains(&f), || s.name(f.base));
        }
    }
    rep.push(ultra);
    let q = tight::tight_quotient(s)?;
    rep.push(Check::single("quotient is separative", tight::is_separative(&q.table), String::new));
    let pb = completions::is_pre_boolean(s)?;
    rep.push(Check::single("pre-Boolean characterizations agree", pb.agree(), || format!("{pb:?}")));
    let c = completions::tight_completion(s)?;
    rep.push(Check::single("tight completion is distributive", c.table.is_distributive(), String::new));
    let delta_tight = morphisms::is_tight_map(s, &c.table, &c.embedding)?;
    rep.push(Check::single("embedding into tight completion is tight", delta_tight, String::new));
    for (name, t) in &opts.targets {
        if t.is_distributive() {
            rep.push(tight_universal(s, &c, name, t)?);
        }
    }
    Ok(rep)
}

fn fixed_values(size: usize, at: &[ElementId], values: &[ElementId]) -> Vec<Option<ElementId>> {
    let mut fixed = alloc::vec![None; size];
    for (i, &x) in at.iter().enumerate() {
        fixed[x.0] = Some(values[i]);
    }
    fixed
}

fn compose(first: &[ElementId], then: &[ElementId]) -> Vec<ElementId> {
    first.iter().map(|x| then[x.0]).collect()
}

/// Every homomorphism `s → t` extends uniquely along `s ↦ s↓` to a morphism
/// of the distributive completion.
pub fn distributive_universal(s: &MulTable, name: &str, t: &MulTable) -> Result<Check> {
    let d = completions::distributive_completion(s)?;
    let mut check = Check::new(format!("unique extension to the distributive completion into {name}"));
    for theta in morphisms::enumerate_homomorphisms(s, t, MapClass::Homomorphism)? {
        let lift = completions::lift_through_d(&d, t, &theta);
        let ok = lift.as_ref().is_ok_and(|lift| {
            let all = morphisms::search_homomorphisms(&d.table, t, &fixed_values(d.table.size(), &d.embedding, &theta), true, DEFAULT_NODE_LIMIT);
            morphisms::is_morphism(&d.table, t, lift)
                && compose(&d.embedding, lift) == theta
                && all.is_ok_and(|all| all.len() == 1 && all[0] == *lift)
        });
        check.record(ok, || format!("{theta:?}"));
    }
    Ok(check)
}

/// Morphisms into a Boolean target along which prime filters pull back
/// extend uniquely to the Booleanization.
pub fn booleanization_universal(s: &MulTable, b: &patch::Booleanization, name: &str, t: &MulTable) -> Result<Check> {
    let mut check = Check::new(format!("unique extension to the Booleanization into {name}"));
    for theta in morphisms::enumerate_homomorphisms(s, t, MapClass::Morphism)? {
        if !patch::pulls_back_prime_filters(s, t, &theta) {
            continue;
        }
        let lift = patch::booleanization_lift(s, b, t, &theta);
        let ok = lift.as_ref().is_ok_and(|lift| {
            let all = morphisms::search_homomorphisms(&b.kb.table, t, &fixed_values(b.kb.table.size(), &b.beta, &theta), true, DEFAULT_NODE_LIMIT);
            morphisms::is_morphism(&b.kb.table, t, lift)
                && compose(&b.beta, lift) == theta
                && all.is_ok_and(|all| all.len() == 1 && all[0] == *lift)
        });
        check.record(ok, || format!("{theta:?}"));
    }
    Ok(check)
}

/// Tight maps into a distributive target factor uniquely through the tight
/// completion.
pub fn tight_universal(s: &MulTable, c: &completions::CompletedSemigroup, name: &str, t: &MulTable) -> Result<Check> {
    let mut check = Check::new(format!("unique factorization through the tight completion into {name}"));
    for theta in morphisms::enumerate_homomorphisms(s, t, MapClass::Tight)? {
        let lift = completions::lift_through_tight(s, c, t, &theta);
        let ok = lift.as_ref().is_ok_and(|lift| {
            let all = morphisms::search_homomorphisms(&c.table, t, &fixed_values(c.table.size(), &c.embedding, &theta), true, DEFAULT_NODE_LIMIT);
            morphisms::is_morphism(&c.table, t, lift)
                && compose(&c.embedding, lift) == theta
                && all.is_ok_and(|all| all.len() == 1 && all[0] == *lift)
        });
        check.record(ok, || format!("{theta:?}"));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn suites_pass_on_chain() {
        let s = catalog::chain(3).unwrap();
        let mut opts = Options::default();
        opts.targets.push(("powerset_semilattice:2".into(), catalog::powerset_semilattice(2).unwrap()));
        for suite in Suite::ALL {
            let r = run(suite, &s, &opts).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
    }
}
