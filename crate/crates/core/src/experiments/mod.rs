//! Exhaustive and Monte-Carlo experiments over random graphs, the
//! inductive-dimension expectation polynomials, δ-maximizers and refinement
//! trajectories.

mod enumerate;
mod polynomial;
mod random;
mod survey;

pub use enumerate::{
    delta, delta_max, delta_maximizers, dim_avg_level_set, enumerate_labeled_graphs,
    er_dim_avg_expectation, graph_from_mask, MAX_ENUMERATION_VERTICES,
};
pub use polynomial::{inductive_dim_polynomial, inductive_dim_polynomials, DimPolynomial};
pub use random::{random_complex, random_complex_seeded, sample_er, sample_er_indexed, ErParams};
pub use survey::{
    er_survey, log_gaps, rational_grid, refinement_trajectory, SurveyRow, TrajectoryPoint,
};
