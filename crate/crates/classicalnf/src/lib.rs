//! First-level normal forms of Hopf-zero systems.
//!
//! A system `x' = 0, y' = z, z' = -y` plus higher order terms is brought to
//! the resonant form degree by degree. Each degree is a linear problem for
//! `ad` of the rotation `v0 = z ∂y - y ∂z`, solved exactly over the rationals.

mod cubic;
mod error;
pub mod fixtures;
mod homological;
mod log;
mod system;

pub use cubic::{cubic_closed_form, cubic_snf_numbers, snf_cubic, CubicCoefficients, CubicSnfNumbers, Row};
pub use error::{ClassicalError, EntryMismatch};
pub use homological::{ad_rotation_matrix, classical_normal_form, classical_normal_form_field};
pub use log::{exp_ad_element, exp_ad_field, Generator, LogEntry, StepKind, TransformationLog};
pub use system::{rational_sqrt, rotation, validate_linear, HopfZeroSystem};
