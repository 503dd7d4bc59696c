//! Numerical checks of sign-transformation symmetries in spin-½ and
//! spinless wave equations.
//!
//! - [`spinor`]: Pauli and Dirac matrices and the Clifford relations.
//! - [`pauli`]: the Pauli Hamiltonian on a periodic grid, its mass-, charge-
//!   and time-flipped variants, and spectral equivalence reports.
//! - [`dispersion`]: matter-wave dispersion for real and imaginary
//!   wavenumbers, regimes, group velocity and curvature.
//! - [`dielectric`]: Drude dielectric function, its zeros and the Gauss-law
//!   product condition.
//! - [`kleingordon`]: the Klein-Gordon spatial operator and its mass-sign
//!   invariance.

pub mod dielectric;
pub mod dispersion;
pub mod error;
pub mod grid;
pub mod kleingordon;
pub mod matrix;
pub mod operator;
pub mod pauli;
pub mod roots;
pub mod spinor;

pub use error::{Error, Result};
pub use grid::{FieldConfig, Grid1D, Profile};
pub use matrix::ComplexMatrix;
pub use operator::{spectrum, HermitianOperator};
