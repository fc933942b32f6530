//! Constructions of explicit spinor modules for every signature.

mod alt;
mod assemble;
mod base;
mod module;

pub use alt::{asd_dimension, asd_projection, octonion_action, octonion_module, sqrt_space_action, sqrt_space_module};
pub use assemble::{assemble_euclidean, assemble_positive, assemble_signature};
pub use base::{
    base_module, base_module_pos, c40_kmatrix, c40_left_kmatrix, c4_action, c4_kmatrix, c4_left_kmatrix, split_action,
    split_signature_module,
};
pub use module::{
    bimodule_endomorphism_dim, clifford_class, commutant_dim, commutant_field, euclidean_dim, even_commutant_factor,
    intertwiners, irreducible_real_dim, joint_intertwiners, metric_checks, minus_allowed, rank_one_operator,
    spin_metric_verify, spinor_square, table_index, Family, MetricReport, SpinorModule, Variant, DIM_TABLE, K0_TABLE,
    K_TABLE,
};
