//! Partitions, characters and the symmetric-function operations everything
//! else is built on.

mod character;
mod expansion;
mod lr;
mod partition;
mod plethysm;
mod weight;
mod weyl;

pub use character::Character;
pub use expansion::{expand_dominant, schur_expand, SchurExpansion};
pub use lr::{lr_coefficients, lr_product, lr_weights};
pub use partition::Partition;
pub use plethysm::{plethysm_apply, plethysm_character, Functor};
pub use weight::Weight;
pub use weyl::{block_dimension, weyl_dim};
