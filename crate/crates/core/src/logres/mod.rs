//! The logarithmic cotangent bundle of an arrangement through its
//! line-bundle resolution.

pub mod chern;
pub mod cohomology;
pub mod graded;
pub mod presentation;
pub mod splitting;

pub use chern::{chern, chern_by_division, stability_certificate, ChernVector, StabilityReport};
pub use cohomology::{cohomology, cohomology_table, euler_line, h0_line, hn_line, CohomologyTable, Resolution};
pub use graded::{zero_entry, GradedMatrix};
pub use presentation::{monad, presentation, Monad};
pub use splitting::{splitting_on_line, Line, SplittingType};
