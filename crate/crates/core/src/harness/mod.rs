//! Everything around the algebra: the text syntax, seeded random ideals,
//! searches, the regression corpus and output formats.

pub mod corpus;
pub mod parse;
pub mod report;
pub mod rng;
pub mod search;

pub use parse::{infer_context, parse_ideal, parse_vars, parse_with};
pub use rng::{random_ideal, RandomIdealConfig, SplitMix64};
pub use search::{search, SearchConfig, SearchMode, SearchReport};
