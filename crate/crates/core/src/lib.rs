//! Solvers for the word problem of the braid groups `B_n`.
//!
//! Five independent approaches are provided: greedy and symmetric normal
//! forms ([`gridnf`]), word redressing ([`redress`]), handle reduction
//! ([`handle`]) and Dynnikov coordinates ([`dynnikov`]). The [`oracle`]
//! module cross-checks them against each other and against brute force.

pub mod dynnikov;
pub mod error;
pub mod gridnf;
pub mod handle;
pub mod oracle;
pub mod redress;
pub mod simple;
pub mod word;

pub use error::{BraidError, Result};
pub use gridnf::{GreedyNF, SymmetricNF};
pub use simple::{Permutation, Side, SimpleBraid};
pub use word::{BraidWord, Format, Letter, Sign};
