//! The F/E/Θ basis of Hopf-zero classical normal forms.
//!
//! Symbols `F[l,k]`, `E[l,k]` and `Θ[l,k]` span the space of classical normal
//! forms. Brackets are computed from closed-form structure constants and can
//! be checked against coordinate realizations at any time.

mod bt;
mod cylindrical;
mod element;
mod error;
mod grading;
mod realize;
mod structure;
mod symbol;
pub mod triad;

pub use bt::{bt_map, first_integral, planar_reduce, project, BTFamily, BTSymbol};
pub use cylindrical::CylindricalSystem;
pub use element::NFElement;
pub use error::BasisError;
pub use grading::GradingScheme;
pub use realize::{decompose_cnf, realize, realize_element};
pub use structure::{bracket, extended_bracket, structure_constants, ExtendedSymbol};
pub use symbol::{Family, Symbol};
