//! Barycentric refinement: the explicit order complex, the refinement
//! operator on f-vectors, its Perron–Frobenius eigenvector and the limit
//! constants C_d, and Kruskal–Katona realizability of f-vectors.

mod kruskal_katona;
mod operator;
mod realizability;
mod refine;

pub use kruskal_katona::{cascade, kruskal_katona_valid};
pub use operator::{
    conjecture_a_delta, factorial, limit_constant, operator_matrix, pf_eigenvector, refine_fvector,
    stirling2, stirling2_table, PfVector, RefinementOperator,
};
pub use realizability::{
    all_complexes, candidate_fvectors, check_against_compression, check_against_enumeration,
    compressed_valid, realized_fvectors, OracleReport, MAX_COMPLEX_ENUMERATION_VERTICES,
};
pub use refine::{face_cap_from_env, refine, refine_with_cap, DEFAULT_FACE_CAP};
