//! Exact linear algebra over the chain ring `Z/p^n`.

mod howell;
mod matrix;
mod ring;
mod smith;

pub use howell::{howell_form, in_row_span, kernel, pivots, solve, LinearSolver, Obstruction};
pub use matrix::RMatrix;
pub use ring::{RingSpec, MODULUS_BOUND};
pub use smith::{cokernel_shape, Cokernel};
