//! Exact tools for deciding whether a monomial quotient ring is Golod.
//!
//! The algebra lives in [`ring`], [`ideal`], [`linalg`], [`closure`],
//! [`koszul`], [`criteria`] and [`poincare`]. Parsing, random search, the
//! regression corpus and the command line are in [`harness`] and [`cli`].

pub mod cli;
pub mod closure;
pub mod criteria;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod poincare;
pub mod ring;

pub use criteria::{golod3, verdict, Certificate, GolodVerdict, Status, VerdictOptions};
pub use error::{Error, Result};
pub use linalg::FieldSpec;
pub use ring::{Monomial, MonomialIdeal, Multidegree, RingContext};
