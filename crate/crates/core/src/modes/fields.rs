//! Mode profiles in the 3-vector (MO) and 10-component (DKP) pictures.

use num_complex::Complex64;

use super::gauge::GaugePotentials;
use super::index::{ModeIndex, Parity};
use super::radial::RadialSolution;
use crate::error::{Error, Result};
use crate::geometry::{conformal_time, SpacetimePoint};
use crate::special_fn::angular_basis;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Values of `(G, F, F₂)` at one `(τ, r)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TripleValue {
    pub g: Complex64,
    pub f: Complex64,
    pub f2: Complex64,
}

impl TripleValue {
    /// `F₁ = (F + G)/2`
    pub fn f1(&self) -> Complex64 {
        0.5 * (self.f + self.g)
    }

    /// `F₃ = (F − G)/2`
    pub fn f3(&self) -> Complex64 {
        0.5 * (self.f - self.g)
    }

    pub fn f123(&self) -> [Complex64; 3] {
        [self.f1(), self.f2, self.f3()]
    }
}

/// `G = e^{−iωτ} R`, `F₂ = −(1/iω) e^{−iωτ} (b_ν/sin r) R`, `F = (1/iω) e^{−iωτ} R′`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarTriple {
    pub mode: ModeIndex,
    pub radial: RadialSolution,
}

impl ScalarTriple {
    pub fn new(mode: &ModeIndex) -> Result<Self> {
        Ok(Self {
            mode: *mode,
            radial: RadialSolution::new(mode)?,
        })
    }

    pub fn at(&self, tau: f64, r: f64) -> Result<TripleValue> {
        let big_r = self.radial.evaluate(r)?;
        let dr = self.radial.derivative(r)?;
        let w = self.mode.omega() as f64;
        let phase = Complex64::from_polar(1.0, -w * tau);
        let inv_iw = 1.0 / (I * w);
        Ok(TripleValue {
            g: phase * big_r,
            f: inv_iw * phase * dr,
            f2: -inv_iw * phase * self.mode.b_nu() / r.sin() * big_r,
        })
    }

    /// Profiles `φ_k = F_k/(cosh²t sin r)` at coordinate time `t`.
    pub fn phi_profiles(&self, t: f64, r: f64) -> Result<[Complex64; 3]> {
        let v = self.at(conformal_time(t), r)?;
        Ok(phi_from_triple(&v, t, r))
    }
}

pub(crate) fn phi_from_triple(v: &TripleValue, t: f64, r: f64) -> [Complex64; 3] {
    let scale = 1.0 / (t.cosh().powi(2) * r.sin());
    v.f123().map(|x| x * scale)
}

/// A sample of the complex 3-vector field in the cyclic basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MoField {
    pub mode: ModeIndex,
    pub point: SpacetimePoint,
    /// `(0, φ₁D₋₁, φ₂D₀, φ₃D₊₁)`
    pub psi: [Complex64; 4],
    pub phi_profiles: [Complex64; 3],
}

pub fn mo_field(mode: &ModeIndex, p: &SpacetimePoint) -> Result<MoField> {
    let p = SpacetimePoint::new(p.t, p.r, p.theta, p.phi)?;
    let phi = ScalarTriple::new(mode)?.phi_profiles(p.t, p.r)?;
    assemble_mo(mode, &p, phi)
}

pub(crate) fn assemble_mo(
    mode: &ModeIndex,
    p: &SpacetimePoint,
    phi: [Complex64; 3],
) -> Result<MoField> {
    let d = |sigma| angular_basis(mode.j, mode.m, sigma, p.theta, p.phi);
    Ok(MoField {
        mode: *mode,
        point: *p,
        psi: [ZERO, phi[0] * d(-1)?, phi[1] * d(0)?, phi[2] * d(1)?],
        phi_profiles: phi,
    })
}

/// Column index `σ` of the angular factor multiplying `f₁ … f₁₀`.
pub const DKP_SIGMA: [i32; 10] = [0, -1, 0, 1, -1, 0, 1, -1, 0, 1];

/// Field-strength components `f₅ … f₁₀` from `(φ₁, φ₂, φ₃)`; slots 0..4 left zero.
pub fn mo_to_dkp(parity: Parity, phi: [Complex64; 3]) -> [Complex64; 10] {
    let [p1, p2, p3] = phi;
    let mut f = [ZERO; 10];
    match parity {
        Parity::Magnetic => {
            f[8] = I * p2;
            f[4] = 0.5 * (p1 - p3);
            f[7] = 0.5 * I * (p1 + p3);
            f[5] = ZERO;
            f[6] = -f[4];
            f[9] = f[7];
        }
        Parity::Electric => {
            f[5] = p2;
            f[4] = 0.5 * (p1 + p3);
            f[7] = 0.5 * I * (p1 - p3);
            f[8] = ZERO;
            f[6] = f[4];
            f[9] = -f[7];
        }
    }
    f
}

/// `φ_k` back from the DKP components.
pub fn dkp_to_mo(parity: Parity, f: &[Complex64; 10]) -> [Complex64; 3] {
    let (f5, f6, f8, f9) = (f[4], f[5], f[7], f[8]);
    match parity {
        Parity::Magnetic => [f5 - I * f8, -I * f9, -f5 - I * f8],
        Parity::Electric => [f5 - I * f8, f6, f5 + I * f8],
    }
}

/// A sample of the DKP column.
#[derive(Clone, Debug, PartialEq)]
pub struct DkpField {
    pub mode: ModeIndex,
    pub point: SpacetimePoint,
    /// `(t, r)` amplitudes `f₁ … f₁₀`.
    pub amplitudes: [Complex64; 10],
    /// Amplitudes times their angular factors `D_σ`.
    pub components: [Complex64; 10],
    /// `(g₁, g₂, g₃)` with `fᵢ = gᵢ/cosh t`, electric parity only.
    pub potentials: Option<[Complex64; 3]>,
}

impl DkpField {
    pub fn phi_profiles(&self) -> [Complex64; 3] {
        dkp_to_mo(self.mode.parity, &self.amplitudes)
    }
}

/// `(t, r)` amplitudes of the magnetic DKP column, potential
/// `f₂ = −f₄ = cosh t sin r φ₂/(2 b_ν)` included.
pub fn magnetic_amplitudes(mode: &ModeIndex, t: f64, r: f64, phi: [Complex64; 3]) -> [Complex64; 10] {
    let mut f = mo_to_dkp(Parity::Magnetic, phi);
    f[1] = t.cosh() * r.sin() * phi[1] / (2.0 * mode.b_nu());
    f[3] = -f[1];
    f
}

/// `(t, r)` amplitudes of the electric DKP column from given field profiles
/// and potentials.
pub fn electric_amplitudes(t: f64, phi: [Complex64; 3], g: [Complex64; 3]) -> [Complex64; 10] {
    let mut f = mo_to_dkp(Parity::Electric, phi);
    let ch = t.cosh();
    f[0] = g[0] / ch;
    f[1] = g[1] / ch;
    f[2] = g[2] / ch;
    f[3] = f[1];
    f
}

fn with_angles(
    mode: &ModeIndex,
    p: &SpacetimePoint,
    amplitudes: [Complex64; 10],
    potentials: Option<[Complex64; 3]>,
) -> Result<DkpField> {
    let d: Vec<Complex64> = (-1..=1)
        .map(|s| angular_basis(mode.j, mode.m, s, p.theta, p.phi))
        .collect::<Result<_>>()?;
    let components = std::array::from_fn(|k| amplitudes[k] * d[(DKP_SIGMA[k] + 1) as usize]);
    Ok(DkpField {
        mode: *mode,
        point: *p,
        amplitudes,
        components,
        potentials,
    })
}

/// DKP column of a mode; electric modes carry their Landau-gauge potentials.
pub fn dkp_field(mode: &ModeIndex, p: &SpacetimePoint) -> Result<DkpField> {
    match mode.parity {
        Parity::Magnetic => {
            let p = SpacetimePoint::new(p.t, p.r, p.theta, p.phi)?;
            let phi = ScalarTriple::new(mode)?.phi_profiles(p.t, p.r)?;
            with_angles(mode, &p, magnetic_amplitudes(mode, p.t, p.r, phi), None)
        }
        Parity::Electric => {
            dkp_field_in_gauge(mode, p, &super::gauge::electric_potentials_landau(mode)?)
        }
    }
}

/// Electric DKP column with the potentials of `gauge`. Pure-gauge (gradient)
/// potentials come with vanishing field strengths.
pub fn dkp_field_in_gauge(
    mode: &ModeIndex,
    p: &SpacetimePoint,
    gauge: &GaugePotentials,
) -> Result<DkpField> {
    if mode.parity != Parity::Electric || gauge.mode != *mode {
        return Err(Error::WrongParity {
            expected: "electric",
            found: mode.parity.name(),
        });
    }
    let p = SpacetimePoint::new(p.t, p.r, p.theta, p.phi)?;
    let phi = if gauge.carries_field_strength() {
        ScalarTriple::new(mode)?.phi_profiles(p.t, p.r)?
    } else {
        [ZERO; 3]
    };
    let g = gauge.at_t(p.t, p.r)?;
    with_angles(mode, &p, electric_amplitudes(p.t, phi, g), Some(g))
}
