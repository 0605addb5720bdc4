//! File formats, exports, brute-force oracles and the command-line front end
//! for `nstone-core`.

pub mod cli;
pub mod export;
pub mod io;
pub mod oracle;
