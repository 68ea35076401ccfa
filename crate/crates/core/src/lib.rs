//! Exact computations with finite-dimensional Hopf algebras and Hopf-Galois
//! extensions with central invariants.

pub mod algebra;
pub mod base_change;
pub mod comodule;
pub mod connection;
pub mod descent;
pub mod error;
pub mod frobenius;
pub mod gallery;
pub mod gp;
pub mod group;
pub mod hochschild;
pub mod hopf;
pub mod linalg;
pub mod matrix;
pub mod mu;
pub mod ring;
pub mod search;
pub mod twisted;

pub use error::{Error, Result};
pub use matrix::Matrix;
