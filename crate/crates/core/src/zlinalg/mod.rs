//! Exact integer linear algebra over arbitrary-precision integers.

mod hermite;
mod matrix;
mod smith;
mod solve;

pub use hermite::{hermite_normal_form, HermiteDecomposition};
pub use matrix::{determinant, IntMatrix};
pub use smith::{smith_normal_form, SmithDecomposition};
pub use solve::{integer_kernel, kernel_mod_orders, solve_integral};
