//! Exact arithmetic over the integers, the rationals and prime fields,
//! plus integer matrices and their Smith normal form.

mod intring;
mod matrix;
mod scalar;
mod snf;

pub use intring::IntRing;
pub use matrix::{IntMatrix, Matrix};
pub use scalar::{is_prime, Field, Residue, Scalar};
pub use snf::{integer_kernel, smith_normal_form, solve_linear_z, Smith};
