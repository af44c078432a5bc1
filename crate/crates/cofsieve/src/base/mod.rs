//! Partitions, compositions, polynomials in `q`, q-analogues and cyclotomic reduction.

pub mod cyclotomic;
pub mod partition;
pub mod qanalog;
pub mod qpoly;

pub use cyclotomic::{cyclotomic, eval_at_unity, q_lucas_check, CyclotomicValue};
pub use partition::{Composition, Partition};
pub use qanalog::{binomial, q_binomial, q_factorial, q_int, q_multinomial};
pub use qpoly::QPoly;
