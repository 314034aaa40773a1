//! Schubert calculus on `Gr(k, n)` and characteristic classes of bundle
//! expressions, restricted to zero loci.

mod classes;
mod formal;
mod locus;
mod ring;

pub use classes::{
    bernoulli, chern_character, chern_character_of, chern_from_ch, discriminant, log_todd, log_todd_from_ch,
    log_todd_of, power_sums, total_chern, total_chern_of,
};
pub use formal::{sym2_discriminant_coefficient, wedge_discriminant_coefficient};
pub use locus::{BasisExpansion, BasisTerm, ModularityCertificate, ZeroLocusChow};
pub use ring::{ChowClass, SchubertRing};
