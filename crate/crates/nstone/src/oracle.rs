//! Brute-force cross-checks by subset enumeration, for small tables only.

use nstone_core::completions;
use nstone_core::filters;
use nstone_core::report::{Check, Report};
use nstone_core::tight;
use nstone_core::{BitSet, ElementId, Error, MulTable};

/// Largest table the oracles enumerate subsets of.
pub const MAX_ORACLE_SIZE: usize = 12;

fn subsets(universe: usize, pool: &[usize]) -> impl Iterator<Item = BitSet> + '_ {
    (0u32..1 << pool.len()).map(move |mask| {
        BitSet::from_iter(universe, pool.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x))
    })
}

fn is_up_closed(s: &MulTable, f: &BitSet) -> bool {
    f.iter().all(|x| s.up(ElementId(x)).is_subset(f))
}

fn is_directed(s: &MulTable, f: &BitSet) -> bool {
    f.iter().all(|a| f.iter().all(|b| f.iter().any(|c| s.leq(ElementId(c), ElementId(a)) && s.leq(ElementId(c), ElementId(b)))))
}

/// Nonempty directed up-sets omitting zero.
pub fn filters_by_enumeration(s: &MulTable) -> Vec<BitSet> {
    let nonzero: Vec<usize> = (1..s.size()).collect();
    let mut out: Vec<BitSet> =
        subsets(s.size(), &nonzero).filter(|f| !f.is_empty() && is_up_closed(s, f) && is_directed(s, f)).collect();
    out.sort();
    out
}

/// Every existing join lying in `f` has a joinand in `f`.
pub fn is_prime_by_definition(s: &MulTable, f: &BitSet) -> bool {
    s.elements().all(|a| {
        s.elements().all(|b| match s.join(a, b) {
            Some(j) if f.contains(j.0) => f.contains(a.0) || f.contains(b.0),
            _ => true,
        })
    })
}

/// Every nonzero element below `a` shares a nonzero lower bound with some
/// member of `cover`.
pub fn covers_by_definition(s: &MulTable, a: ElementId, cover: &BitSet) -> bool {
    s.nonzero().filter(|&x| s.leq(x, a)).all(|x| {
        cover.iter().any(|c| s.nonzero().any(|z| s.leq(z, x) && s.leq(z, ElementId(c))))
    })
}

fn below(s: &MulTable, a: ElementId) -> Vec<usize> {
    s.down(a).iter().filter(|&x| x != 0).collect()
}

/// Some common lower set is a tight cover of both.
pub fn tight_equiv_by_definition(s: &MulTable, a: ElementId, b: ElementId) -> bool {
    let common: Vec<usize> = below(s, a).into_iter().filter(|&x| s.leq(ElementId(x), b)).collect();
    let found = subsets(s.size(), &common).any(|c| covers_by_definition(s, a, &c) && covers_by_definition(s, b, &c));
    found
}

/// Meets every tight cover of each of its members.
pub fn is_tight_by_definition(s: &MulTable, f: &BitSet) -> bool {
    f.iter().map(ElementId).all(|a| {
        let pool = below(s, a);
        let met = subsets(s.size(), &pool).all(|c| !covers_by_definition(s, a, &c) || c.intersects(f));
        met
    })
}

/// Compares filter enumeration, primality, tight equivalence, tightness and
/// the pre-Boolean verdicts against the definitions.
pub fn cross_check(s: &MulTable) -> Result<Report, Error> {
    if s.size() > MAX_ORACLE_SIZE {
        return Err(Error::TooLarge(format!("oracles enumerate subsets of at most {MAX_ORACLE_SIZE} elements")));
    }
    let mut rep = Report::default();
    let brute = filters_by_enumeration(s);
    let mut fast: Vec<BitSet> = filters::all_filters(s).iter().map(|f| f.members(s).clone()).collect();
    fast.sort();
    rep.push(Check::single("oracle: filters are principal up-sets", brute == fast, || {
        format!("{} directed up-sets against {} principal filters", brute.len(), fast.len())
    }));

    let mut prime = Check::new("oracle: prime filters");
    let mut tight_filter = Check::new("oracle: tight filters");
    for f in filters::all_filters(s) {
        let members = f.members(s);
        prime.record(filters::is_prime_filter(s, f) == is_prime_by_definition(s, members), || s.name(f.base));
        tight_filter.record(tight::is_tight_filter(s, f) == is_tight_by_definition(s, members), || s.name(f.base));
    }
    rep.push(prime);
    rep.push(tight_filter);

    let mut equiv = Check::new("oracle: tight equivalence");
    for a in s.elements() {
        for b in s.elements() {
            equiv.record(tight::tight_equiv(s, a, b) == tight_equiv_by_definition(s, a, b), || {
                format!("{} {}", s.name(a), s.name(b))
            });
        }
    }
    rep.push(equiv);

    let pb = completions::is_pre_boolean(s)?;
    let by_filters = filters::all_filters(s)
        .into_iter()
        .filter(|&f| is_tight_by_definition(s, f.members(s)))
        .all(|f| filters::is_ultrafilter(s, f));
    rep.push(Check::single("oracle: pre-Boolean verdicts agree", pb.agree() && pb.via_filters == by_filters, || {
        format!("{pb:?}, by definition {by_filters}")
    }));
    Ok(rep)
}
