//! Exact computations around Kronecker coefficients: characters, LR and
//! multi-LR coefficients, Horn inequalities, the polytopes controlling
//! monomial positivity, saturated Newton polytopes and plethysm.

pub mod character;
pub mod error;
pub mod expansion;
pub mod horn;
pub mod kostka;
pub mod kronecker;
pub mod lr;
pub mod oracle;
pub mod partition;
pub mod plethysm;
pub mod polytopes;
pub mod rosas;
pub mod snp;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::SchurExpansion;
pub use kronecker::MonomialSupport;
pub use partition::{Composition, Partition};
