//! Exact finite-dimensional verification of the correspondence between
//! coideal subalgebras and quotient module coalgebras of a Hopf algebra,
//! together with the surrounding comodule, monad and Morita machinery.

pub mod catalog;
pub mod cli;
pub mod cert;
pub mod correspondence;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod monadics;
pub mod morita;
pub mod rep;

pub use error::{Error, Result};
