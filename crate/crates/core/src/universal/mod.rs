//! Universal (Vogel-parametrized) quantum dimensions.
//!
//! Every formula is a signed product of ratios `sinh(L·x/4)` with `L` a
//! linear form in `(α, β, γ)`; see [`SinhProduct`]. The builders in
//! [`formulas`] encode the closed forms, and the `qdim_*` functions evaluate
//! them at a parameter point as exact series.

mod forms;
pub mod formulas;
mod params;

pub use forms::{LinearForm, SinhProduct};
pub use formulas::{
    casimir_adjoint, casimir_y2, dim_adjoint, exc_line_dim, qdim, qdim_adjoint, qdim_cartan_adjoint, qdim_x2,
    qdim_y2, qdim_z, z_block_a, z_block_btilde, z_block_c1, z_block_c2, z_block_f, Representation,
};
pub use params::{exc_line_point, line_params, vogel_params, AlgebraId, LineId, Perm, Slot, VogelParams};
