//! Exact integer matrix algebra: Smith normal form, cokernels and
//! finitely generated abelian group arithmetic.

mod abelian;
mod int;
mod matrix;
mod ops;
mod snf;
pub(crate) mod stream;

pub use abelian::FgAbelianGroup;
pub(crate) use abelian::factorize;
pub use int::Int;
pub use matrix::IntMatrix;
pub use ops::{
    cokernel, is_valid_complement, solve_linear_congruences, torsion_complement, CokernelCoords,
    CokernelData, TorsionComplement,
};
pub use snf::{smith_normal_form, SnfDecomposition};
pub(crate) use snf::{snf_mod, snf_with, SnfOptions};
pub(crate) use ops::cokernel_from_snf;
