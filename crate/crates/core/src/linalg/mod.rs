//! Exact linear algebra over ℚ and prime fields.

pub mod echelon;
pub mod field;
pub mod linmap;
pub mod poly;
pub mod solve;
pub mod subspace;
pub mod vector;

pub use field::{Field, Scalar};
pub use linmap::{flatten, unflatten, LinMap};
pub use poly::Poly;
pub use solve::{find_section, image_of, kernel_of, solve_affine};
pub use subspace::{restrict, Subspace};
pub use vector::SVec;
