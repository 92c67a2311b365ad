//! The subset-Pfaffian construction of `GX_λ`.

mod gx;
mod kernel;
mod pfaffian;

pub use gx::{gx_lambda, gx_lambda_with_slack, SubsetStats};
pub use kernel::{kernel_coeffs, KernelEntryJson, KernelTable};
pub use pfaffian::{pfaffian, SkewMatrix};
