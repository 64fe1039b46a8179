//! Numerical p-mechanics: one Heisenberg-group toolkit for the quantum and the
//! classical harmonic oscillator.
//!
//! States and kernels live in a closed class of Gaussian-polynomial functions
//! (see [`gaussian`]), quantum observables in truncated number-basis matrices
//! (see [`fock`]), and classical observables in polynomial symbols
//! (see [`symbols`]). Every closed form has a brute-force twin for testing:
//! adaptive quadrature, RK4, or a reference matrix exponential.

pub mod classical;
pub mod coherent;
pub mod error;
pub mod fock;
pub mod forced;
pub mod gaussian;
pub mod heisenberg;
pub mod poly;
pub mod symbols;
pub mod verify;

pub use error::{PmechError, Result};
pub use gaussian::GaussFun;
pub use poly::Poly;
pub use symbols::{ForceProfile, OscillatorParams, PhasePoint, Pulse, SymbolPoly};
