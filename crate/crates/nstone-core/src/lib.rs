//! Finite inverse semigroups with zero, their distributive, Boolean and tight
//! completions, and the étale groupoids of filters that represent them.
#![no_std]

extern crate alloc;

pub mod bitset;
pub mod catalog;
pub mod completions;
pub mod error;
pub mod filters;
pub mod groupoids;
pub mod ideals;
pub mod morphisms;
pub mod patch;
pub mod report;
pub mod semigroup;
pub mod tight;
pub mod verify;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use filters::FilterRep;
pub use ideals::IdealRep;
pub use semigroup::{Classification, ElementId, ElementSet, MulTable};
