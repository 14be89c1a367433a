//! Point samplers for one mode, with an optional multiplicative perturbation
//! of a single building-block profile. Every derived quantity (`F₁`, `φ_k`,
//! DKP amplitudes, `Ψ`) is rebuilt from the perturbed blocks, so a
//! perturbation reaches every suite that depends on it.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{conformal_time, SpacetimePoint};
use crate::modes::{
    electric_amplitudes, electric_potentials_landau, magnetic_amplitudes, GaugePotentials,
    ModeIndex, Parity, ScalarTriple, TripleValue,
};
use crate::special_fn::angular_basis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProfileId {
    G,
    F,
    F2,
    G1,
    G2,
    G3,
}

impl ProfileId {
    pub const ALL: [ProfileId; 6] = [
        ProfileId::G,
        ProfileId::F,
        ProfileId::F2,
        ProfileId::G1,
        ProfileId::G2,
        ProfileId::G3,
    ];
}

/// `X → X·(1 + relative)` for one profile `X`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Perturbation {
    pub profile: ProfileId,
    pub relative: f64,
}

#[derive(Clone, Debug)]
pub struct ModeSampler {
    pub mode: ModeIndex,
    triple: ScalarTriple,
    gauge: Option<GaugePotentials>,
    perturbation: Option<Perturbation>,
}

impl ModeSampler {
    /// Electric modes start in Landau gauge.
    pub fn new(mode: &ModeIndex) -> Result<Self> {
        let gauge = match mode.parity {
            Parity::Electric => Some(electric_potentials_landau(mode)?),
            Parity::Magnetic => None,
        };
        Ok(Self {
            mode: *mode,
            triple: ScalarTriple::new(mode)?,
            gauge,
            perturbation: None,
        })
    }

    pub fn with_gauge(mut self, gauge: GaugePotentials) -> Result<Self> {
        if gauge.mode != self.mode {
            return Err(Error::InvalidQuantumNumbers(format!(
                "potentials belong to {} but the sampler holds {}",
                gauge.mode, self.mode
            )));
        }
        self.gauge = Some(gauge);
        Ok(self)
    }

    pub fn perturbed(mut self, perturbation: Perturbation) -> Self {
        self.perturbation = Some(perturbation);
        self
    }

    pub fn gauge(&self) -> Option<&GaugePotentials> {
        self.gauge.as_ref()
    }

    fn factor(&self, id: ProfileId) -> f64 {
        match self.perturbation {
            Some(p) if p.profile == id => 1.0 + p.relative,
            _ => 1.0,
        }
    }

    /// `(G, F, F₂)` at coordinate time `t`.
    pub fn triple(&self, t: f64, r: f64) -> Result<TripleValue> {
        let v = self.triple.at(conformal_time(t), r)?;
        Ok(TripleValue {
            g: v.g * self.factor(ProfileId::G),
            f: v.f * self.factor(ProfileId::F),
            f2: v.f2 * self.factor(ProfileId::F2),
        })
    }

    /// `(F₁, F₂, F₃)`.
    pub fn f123(&self, t: f64, r: f64) -> Result<[Complex64; 3]> {
        Ok(self.triple(t, r)?.f123())
    }

    /// `φ_k = F_k/(cosh²t sin r)`.
    pub fn phi(&self, t: f64, r: f64) -> Result<[Complex64; 3]> {
        let scale = 1.0 / (t.cosh().powi(2) * r.sin());
        Ok(self.f123(t, r)?.map(|x| x * scale))
    }

    /// `(g₁, g₂, g₃)`; magnetic modes have none.
    pub fn potentials(&self, t: f64, r: f64) -> Result<[Complex64; 3]> {
        let gauge = self.gauge.as_ref().ok_or(Error::WrongParity {
            expected: "electric",
            found: "magnetic",
        })?;
        let g = gauge.at_t(t, r)?;
        Ok([
            g[0] * self.factor(ProfileId::G1),
            g[1] * self.factor(ProfileId::G2),
            g[2] * self.factor(ProfileId::G3),
        ])
    }

    /// DKP amplitudes `f₁ … f₁₀` at `(t, r)`.
    pub fn dkp(&self, t: f64, r: f64) -> Result<[Complex64; 10]> {
        match self.mode.parity {
            Parity::Magnetic => Ok(magnetic_amplitudes(&self.mode, t, r, self.phi(t, r)?)),
            Parity::Electric => {
                let carries = self.gauge.as_ref().is_some_and(|g| g.carries_field_strength());
                let phi = if carries {
                    self.phi(t, r)?
                } else {
                    [Complex64::new(0.0, 0.0); 3]
                };
                Ok(electric_amplitudes(t, phi, self.potentials(t, r)?))
            }
        }
    }

    /// The 3-vector column `(0, φ₁D₋₁, φ₂D₀, φ₃D₊₁)`.
    pub fn psi(&self, p: &SpacetimePoint) -> Result<[Complex64; 4]> {
        let phi = self.phi(p.t, p.r)?;
        let d = |s| angular_basis(self.mode.j, self.mode.m, s, p.theta, p.phi);
        Ok([
            Complex64::new(0.0, 0.0),
            phi[0] * d(-1)?,
            phi[1] * d(0)?,
            phi[2] * d(1)?,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::{dkp_field, mo_field};

    #[test]
    fn unperturbed_sampler_matches_constructors() {
        for parity in [Parity::Magnetic, Parity::Electric] {
            let mode = ModeIndex::new(2, 1, 1, parity).unwrap();
            let s = ModeSampler::new(&mode).unwrap();
            let p = SpacetimePoint::new(0.4, 1.1, 0.9, 0.3).unwrap();
            let mo = mo_field(&mode, &p).unwrap();
            let psi = s.psi(&p).unwrap();
            for k in 0..4 {
                assert!((psi[k] - mo.psi[k]).norm() < 1e-15);
            }
            let dkp = dkp_field(&mode, &p).unwrap();
            let f = s.dkp(p.t, p.r).unwrap();
            for k in 0..10 {
                assert!((f[k] - dkp.amplitudes[k]).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn perturbation_scales_one_profile() {
        let mode = ModeIndex::new(1, 0, 0, Parity::Magnetic).unwrap();
        let base = ModeSampler::new(&mode).unwrap();
        let pert = base.clone().perturbed(Perturbation {
            profile: ProfileId::F2,
            relative: 1e-3,
        });
        let a = base.triple(0.2, 1.0).unwrap();
        let b = pert.triple(0.2, 1.0).unwrap();
        assert_eq!(a.g, b.g);
        assert_eq!(a.f, b.f);
        assert!((b.f2 - a.f2 * 1.001).norm() < 1e-15);
        assert!(base.potentials(0.0, 1.0).is_err());
    }
}
