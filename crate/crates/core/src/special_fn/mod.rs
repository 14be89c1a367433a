//! Special functions for the angular and radial separation.

mod hypergeometric;
mod wigner;

pub use hypergeometric::{
    eval_polynomial, eval_polynomial_derivative, hypergeometric_df, hypergeometric_f,
    hypergeometric_polynomial, HypParams,
};
pub use wigner::{
    angular_basis, angular_basis_dtheta, wigner_d, wigner_recurrence_residuals, wigner_small_d,
    wigner_small_d_derivative, WignerArgs, MAX_J,
};
