//! Independent ground truth by exact linear algebra.
//!
//! Modules are turned into integer matrix representations; projective
//! covers, kernels, resolutions and `Ext` are then computed without any
//! reference to strings. Matrices have shape `target × source`.

mod check;
pub mod linalg;
mod rep;
mod resolve;

pub use check::{check_pair, PairCheck};
pub use rep::{hom_dim, Representation};
pub use resolve::{
    cosyzygy_dims_oracle, cover_and_kernel, ext_dim_oracle, ext_dims_oracle, inj_dim_oracle,
    proj_dim_oracle, resolve, syzygy_dims_oracle, CoverMap, OracleResolution, PathBasis, Subrep,
};
