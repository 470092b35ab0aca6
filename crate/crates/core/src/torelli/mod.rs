//! Torelli-type questions: unstable hypersurfaces, rational normal curves
//! and pairs of quadrics.

pub mod pencil;
pub mod rnc;
pub mod unstable;
pub mod witness;

pub use crate::arrangement::QuadricPair;
pub use pencil::{
    characteristic, dual_pencil_equal, iso_conditions_from_diagonals, pencil_singular_points,
    quadric_pair_iso_conditions, simultaneous_diagonal_frame, DiagonalFrame, IsoConditions, IsoVerdict, PencilAnalysis,
    PencilOutcome,
};
pub use rnc::{on_common_rnc, rnc_fit, standard_frame, Rnc};
pub use unstable::{
    check_hypotheses, recover_components, unstable_dim, unstable_dim_unchecked, HypothesisLedger, Recovery,
};
pub use witness::{iso_witness_oracle, IsoWitness, SPECIALIZATION_ATTEMPTS};
