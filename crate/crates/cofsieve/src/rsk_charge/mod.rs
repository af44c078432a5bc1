//! Burge words and their RSK correspondence, charge and postfix charge, and the Schur
//! expansion of `E_{lambda/mu}(x; q, 0)` through charge.

mod burge;
mod charge;
mod expansion;

pub use burge::{rsk, rsk_inverse, rsk_steps, BurgeWord};
pub use charge::{charge_perm, charge_tableau, charge_word, postfix_charge, standard_subwords};
pub use expansion::{kq_coefficient, lr_checks, mahonian_check, product_check, schur_expansion_via_charge, LrRow};
