//! Algebras, coalgebras and Hopf algebras by structure constants.

mod algebra;
mod coalgebra;
mod pairing;
mod structure;

pub use algebra::AlgebraData;
pub use coalgebra::{section_of_quotient, CoalgebraData};
pub use pairing::Pairing;
pub use structure::{HopfAlgebra, HOPF_AXIOMS};
