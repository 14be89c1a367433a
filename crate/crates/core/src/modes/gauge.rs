//! Electromagnetic potentials `(g₁, g₂, g₃)` of electric-parity modes.
//!
//! The potentials obey
//! `∂_τ g₂ + (b_ν/sin r) g₁ = F/(2 sin r)` and `∂_τ g₃ − ∂_r g₁ = F₂/sin r`.
//! Landau gauge takes `g₁ = 0`; adding a gradient (pure-gauge) solution with
//! `g₁ = e^{−iω_g τ} R_{ω_g}(r)/(cosh t sin r)` moves to Lorentz gauge.
//! All `τ`-integrations keep zero integration constants.

use num_complex::Complex64;

use super::fields::ScalarTriple;
use super::index::{ModeIndex, Parity};
use super::radial::RadialSolution;
use crate::error::{Error, Result};
use crate::geometry::conformal_time;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GaugeKind {
    Landau,
    Lorentz { amplitude: Complex64 },
    Gradient { omega_g: u32 },
}

#[derive(Clone, Debug, PartialEq)]
struct GradientPart {
    amplitude: Complex64,
    radial: RadialSolution,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaugePotentials {
    pub mode: ModeIndex,
    pub kind: GaugeKind,
    triple: Option<ScalarTriple>,
    gradient: Option<GradientPart>,
}

fn require_electric(mode: &ModeIndex) -> Result<()> {
    match mode.parity {
        Parity::Electric => Ok(()),
        Parity::Magnetic => Err(Error::WrongParity {
            expected: "electric",
            found: "magnetic",
        }),
    }
}

pub fn electric_potentials_landau(mode: &ModeIndex) -> Result<GaugePotentials> {
    require_electric(mode)?;
    Ok(GaugePotentials {
        mode: *mode,
        kind: GaugeKind::Landau,
        triple: Some(ScalarTriple::new(mode)?),
        gradient: None,
    })
}

/// Landau potentials plus `amplitude` times the gradient solution at the
/// mode's own frequency.
pub fn electric_potentials_lorentz(mode: &ModeIndex, amplitude: Complex64) -> Result<GaugePotentials> {
    require_electric(mode)?;
    Ok(GaugePotentials {
        mode: *mode,
        kind: GaugeKind::Lorentz { amplitude },
        triple: Some(ScalarTriple::new(mode)?),
        gradient: Some(GradientPart {
            amplitude,
            radial: RadialSolution::new(mode)?,
        }),
    })
}

/// Pure-gauge potentials with frequency `ω_g ≥ j + 1`; the field strengths vanish.
pub fn gradient_solution(mode: &ModeIndex, omega_g: u32) -> Result<GaugePotentials> {
    require_electric(mode)?;
    Ok(GaugePotentials {
        mode: *mode,
        kind: GaugeKind::Gradient { omega_g },
        triple: None,
        gradient: Some(GradientPart {
            amplitude: Complex64::new(1.0, 0.0),
            radial: RadialSolution::with_frequency(mode.j, omega_g)?,
        }),
    })
}

/// `∫ cos τ e^{−iωτ} dτ` with zero constant, `ω ≥ 2`.
fn cos_harmonic_integral(omega: f64, tau: f64) -> Complex64 {
    let lo = omega - 1.0;
    let hi = omega + 1.0;
    0.5 * I * (Complex64::from_polar(1.0, -lo * tau) / lo + Complex64::from_polar(1.0, -hi * tau) / hi)
}

impl GaugePotentials {
    /// False for pure-gauge potentials, whose field strengths vanish.
    pub fn carries_field_strength(&self) -> bool {
        self.triple.is_some()
    }

    /// `(g₁, g₂, g₃)` at conformal time `τ`.
    pub fn at(&self, tau: f64, r: f64) -> Result<[Complex64; 3]> {
        let mut g = [ZERO; 3];
        let sin_r = r.sin();
        if let Some(triple) = &self.triple {
            let v = triple.at(tau, r)?;
            let w = self.mode.omega() as f64;
            g[1] = I * v.f / (2.0 * w * sin_r);
            g[2] = I * v.f2 / (w * sin_r);
        }
        if let Some(part) = &self.gradient {
            let w = part.radial.omega as f64;
            let big_r = part.radial.evaluate(r)?;
            let dr = part.radial.derivative(r)?;
            let profile = big_r / sin_r;
            let dprofile = (dr * sin_r - big_r * r.cos()) / (sin_r * sin_r);
            let integral = cos_harmonic_integral(w, tau);
            let a = part.amplitude;
            g[0] += a * Complex64::from_polar(1.0, -w * tau) * tau.cos() * profile;
            g[1] += -a * self.mode.b_nu() / sin_r * profile * integral;
            g[2] += a * dprofile * integral;
        }
        Ok(g)
    }

    /// `(g₁, g₂, g₃)` at coordinate time `t`.
    pub fn at_t(&self, t: f64, r: f64) -> Result<[Complex64; 3]> {
        self.at(conformal_time(t), r)
    }

    /// The separated radial factor of `g₁`, if any.
    pub fn g1_radial(&self) -> Option<&RadialSolution> {
        self.gradient.as_ref().map(|p| &p.radial)
    }
}
