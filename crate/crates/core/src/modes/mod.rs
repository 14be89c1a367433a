//! Exact mode solutions: spectrum, radial profiles, the scalar triple
//! `(F₂, F, G)`, the 3-vector and DKP fields of both parities, and the
//! potentials of electric-parity modes.

mod fields;
mod gauge;
mod index;
mod radial;

pub use fields::{
    dkp_field, dkp_field_in_gauge, dkp_to_mo, electric_amplitudes, magnetic_amplitudes,
    mo_field, mo_to_dkp, DkpField, MoField, ScalarTriple, TripleValue, DKP_SIGMA,
};
pub use gauge::{
    electric_potentials_landau, electric_potentials_lorentz, gradient_solution, GaugeKind,
    GaugePotentials,
};
pub use index::{spectrum, ModeIndex, Parity};
pub use radial::{z_of_r, RadialSolution};
