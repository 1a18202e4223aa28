//! Normal forms beyond the first level for Hopf-zero singularities.
//!
//! Starting from a classical normal form in the F/E/Θ basis, the second
//! level removes everything off the diagonal except `F[-1,0]`; the infinite
//! level then sweeps grade by grade under the case grading, eliminating terms
//! in the order fixed by a [`Style`].

mod case;
mod error;
pub mod gamma;
pub mod kernel;
mod phase;
mod pipeline;
pub mod sequences;
mod style;
mod sweep;
pub mod theorems;
pub mod transition;

pub use case::{check_second_level_shape, classify, diagonal_coefficients, CaseTag, CaseVariant};
pub use error::HyperError;
pub use gamma::{gamma_op, gamma_printed, GammaCase};
pub use kernel::{certify, computed_kernel, kernel_generators, GeneratorKind, KernelGenerator};
pub use phase::{reinstate_phase, remove_phase, rescale_time};
pub use pipeline::{
    case_iii_certificates, infinite_level, second_level, simplest_normal_form, to_cylindrical, Certificate,
    InfiniteLevel, Pipeline,
};
pub use sequences::SequenceTable;
pub use style::Style;
pub use sweep::{exp_ad, GradeStep, SweepResult, Truncation};
pub use theorems::{asserted_zeros, vanishing_violations, Violation, ZeroRule};
pub use transition::{transition_solutions, Transition, TransitionKind};
