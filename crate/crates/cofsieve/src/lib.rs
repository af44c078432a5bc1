//! Exact combinatorics of the specialized non-symmetric Macdonald polynomials
//! `E_{lambda/mu}(x; q, 0)`: coinversion-free fillings, Burge-word RSK and charge, crystal
//! operators, Kostka-Foulkes and transformed Hall-Littlewood polynomials, vertical-strip LLT
//! polynomials, and mechanical verification of cyclic sieving statements about them.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and values at roots of
//! unity are residues modulo cyclotomic polynomials.

pub mod base;
pub mod crystal;
pub mod csp;
pub mod error;
pub mod fillings;
pub mod hall_littlewood;
pub mod llt;
pub mod rsk_charge;
pub mod symfunc;
pub mod tableau;

pub use base::{Composition, Partition, QPoly};
pub use error::{Error, Result};
pub use fillings::{Filling, SkewShape};
pub use symfunc::{Basis, SymPoly};
