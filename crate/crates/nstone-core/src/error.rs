use alloc::string::String;
use core::fmt;

use crate::ElementId;

/// Failures reported by the algebraic and topological constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The table is empty, not square, or has an entry outside `0..n`.
    Malformed(String),
    NotAssociative { s: ElementId, t: ElementId, u: ElementId },
    /// `s` has no unique inverse, or two idempotents fail to commute.
    NotInverseSemigroup(ElementId),
    /// Element 0 is not a two-sided zero.
    NoZero,
    NotCompatible(ElementId, ElementId),
    NotBoolean,
    NotBelow(ElementId, ElementId),
    NotDistributive,
    /// A seed ideal already meets the filter it must avoid.
    NotDisjoint,
    /// A partial product whose domain condition fails.
    Undefined,
    /// `b <= a`, so no prime filter contains `b` and omits `a`.
    BelowViolation(ElementId, ElementId),
    /// The target lacks a join that the construction needs.
    JoinMissing,
    NotSeparative,
    /// A map required to be tight is not.
    NotTight,
    NotEtale(String),
    NotAFunctor(String),
    /// A prime filter of the target pulls back to something that is not a
    /// prime filter of the source.
    PullbackViolation,
    SearchBoundExceeded,
    NotCallitic,
    Unsupported(String),
    TooLarge(String),
    /// A construction expected to produce a prime filter did not.
    NoPrimeFilter,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(m) => write!(f, "malformed table: {m}"),
            Error::NotAssociative { s, t, u } => {
                write!(f, "not associative at ({s}, {t}, {u})")
            }
            Error::NotInverseSemigroup(s) => write!(f, "not an inverse semigroup at element {s}"),
            Error::NoZero => write!(f, "element 0 is not a zero"),
            Error::NotCompatible(s, t) => write!(f, "elements {s} and {t} are not compatible"),
            Error::NotBoolean => write!(f, "semigroup is not Boolean"),
            Error::NotBelow(s, t) => write!(f, "element {s} is not below {t}"),
            Error::NotDistributive => write!(f, "semigroup is not distributive"),
            Error::NotDisjoint => write!(f, "ideal meets the filter"),
            Error::Undefined => write!(f, "product is undefined"),
            Error::BelowViolation(a, b) => write!(f, "element {b} is below {a}"),
            Error::JoinMissing => write!(f, "required join does not exist in the target"),
            Error::NotSeparative => write!(f, "semigroup is not separative"),
            Error::NotTight => write!(f, "map is not tight"),
            Error::NotEtale(m) => write!(f, "groupoid is not etale: {m}"),
            Error::NotAFunctor(m) => write!(f, "map is not a functor: {m}"),
            Error::PullbackViolation => {
                write!(f, "a prime filter of the target does not pull back to a prime filter")
            }
            Error::SearchBoundExceeded => write!(f, "search bound exceeded"),
            Error::NotCallitic => write!(f, "morphism is not callitic"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::TooLarge(m) => write!(f, "too large: {m}"),
            Error::NoPrimeFilter => write!(f, "construction did not yield a prime filter"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
