//! One-row generating functions and the symmetrizer definition of `GP_λ`.

pub mod checks;
mod gp;
mod gt;
mod laurent;

pub use gp::gp_symmetrizer;
pub use gt::{
    gt_coeff, gt_factor_product, gt_generating_function, gt_prime_from_gt, GeneratingFunction,
    Prefactor,
};
pub(crate) use gt::gt_generating_function_projected;
pub use laurent::LaurentSeriesU;
