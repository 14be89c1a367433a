//! Numerical verification: finite differences, sampling grids, residual
//! suites and their reports.

pub mod fd;
pub mod grid;
pub mod report;
pub mod sampler;
pub mod suites;

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

pub use fd::{contour_second_derivative, fd_partial, fd_partial_array, fd_partial_with, Coord, Stencil};
pub use grid::{linspace, GridSpec};
pub use report::ResidualReport;
pub use sampler::{ModeSampler, Perturbation, ProfileId};
pub use suites::{
    lorentz_g2_coefficient, residual_conformal_kfg, residual_dkp, residual_full_maxwell,
    residual_gauge_sources, residual_gradient, residual_lorentz, residual_mo_combined,
    residual_mo_reduced, residual_radial_ode, residual_wave_g, residual_wave_g_with, SecondDerivative, Tolerances,
};

use crate::error::{Error, Result};
use crate::modes::{electric_potentials_lorentz, gradient_solution, ModeIndex, Parity, RadialSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Mo,
    Dkp,
    Maxwell,
    Gauge,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Mo, Suite::Dkp, Suite::Maxwell, Suite::Gauge];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Mo => "mo",
            Suite::Dkp => "dkp",
            Suite::Maxwell => "maxwell",
            Suite::Gauge => "gauge",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub grid: GridSpec,
    pub maxwell_grid: GridSpec,
    pub maxwell_points: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub radial_points: usize,
    pub radial_method: SecondDerivative,
    /// Gradient amplitude added to the Landau potentials in the Lorentz-gauge checks.
    pub lorentz_amplitude: Complex64,
    /// Frequency of the standalone gradient solution; `None` uses `ω + 2`.
    pub omega_g: Option<u32>,
    pub perturbation: Option<Perturbation>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            grid: GridSpec::default(),
            maxwell_grid: GridSpec::maxwell(),
            maxwell_points: 50,
            seed: 20240607,
            tolerances: Tolerances::default(),
            radial_points: 200,
            radial_method: SecondDerivative::default(),
            lorentz_amplitude: Complex64::new(1.0, 0.0),
            omega_g: None,
            perturbation: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub mode: ModeIndex,
    pub reports: Vec<ResidualReport>,
    pub metadata: BTreeMap<String, f64>,
    pub pass: bool,
}

fn sampler(mode: &ModeIndex, opts: &VerifyOptions) -> Result<ModeSampler> {
    let s = ModeSampler::new(mode)?;
    Ok(match opts.perturbation {
        Some(p) => s.perturbed(p),
        None => s,
    })
}

/// Run one suite for one mode. The gauge suite needs electric parity.
pub fn run_suite(suite: Suite, mode: &ModeIndex, opts: &VerifyOptions) -> Result<SuiteResult> {
    let tol = &opts.tolerances;
    let mut metadata = BTreeMap::new();
    let reports = match suite {
        Suite::Mo => {
            let s = sampler(mode, opts)?;
            let radial = RadialSolution::new(mode)?;
            let mut reps = vec![residual_radial_ode(
                &radial,
                opts.radial_points,
                opts.radial_method,
                tol.radial_relative,
            )?];
            reps.extend(residual_mo_reduced(&s, &opts.grid, tol.reduced)?);
            reps.extend(residual_mo_combined(&s, &opts.grid, tol.reduced)?);
            reps.push(residual_wave_g(&s, &opts.grid, tol.reduced)?);
            reps
        }
        Suite::Dkp => residual_dkp(&sampler(mode, opts)?, &opts.grid, tol.reduced)?,
        Suite::Maxwell => {
            let s = sampler(mode, opts)?;
            let pts = opts.maxwell_grid.random_points(opts.maxwell_points, opts.seed)?;
            metadata.insert("fd_step".into(), opts.maxwell_grid.fd_step);
            vec![residual_full_maxwell(
                |p| s.psi(p),
                &pts,
                opts.maxwell_grid.fd_step,
                opts.maxwell_grid.fd_accuracy,
                tol.full_maxwell,
            )?]
        }
        Suite::Gauge => {
            if mode.parity != Parity::Electric {
                return Err(Error::WrongParity {
                    expected: "electric",
                    found: mode.parity.name(),
                });
            }
            let omega_g = opts.omega_g.unwrap_or(mode.omega() + 2);
            metadata.insert("lorentz_g2_coefficient".into(), lorentz_g2_coefficient(mode.b_nu()));
            metadata.insert("omega_g".into(), f64::from(omega_g));
            let lorentz = sampler(mode, opts)?
                .with_gauge(electric_potentials_lorentz(mode, opts.lorentz_amplitude)?)?;
            let grad = sampler(mode, opts)?.with_gauge(gradient_solution(mode, omega_g)?)?;
            let mut reps = vec![residual_lorentz(&lorentz, &opts.grid, tol.reduced)?];
            reps.extend(residual_gauge_sources(&lorentz, &opts.grid, tol.reduced)?);
            reps.extend(residual_dkp(&lorentz, &opts.grid, tol.reduced)?);
            reps.extend(residual_gradient(&grad, &opts.grid, tol.gradient)?);
            reps.push(residual_conformal_kfg(
                |t, r| grad.potentials(t, r).map(|g| g[0]),
                mode.j,
                &opts.grid,
                tol.conformal_kfg,
            )?);
            reps
        }
    };
    let pass = reports.iter().all(|r| r.pass);
    Ok(SuiteResult {
        suite,
        mode: *mode,
        reports,
        metadata,
        pass,
    })
}

/// Suites that apply to a mode: the gauge suite is skipped for magnetic parity.
pub fn applicable_suites(mode: &ModeIndex) -> Vec<Suite> {
    Suite::ALL
        .into_iter()
        .filter(|s| *s != Suite::Gauge || mode.parity == Parity::Electric)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            grid: GridSpec {
                n_t: 7,
                n_r: 7,
                ..GridSpec::default()
            },
            maxwell_points: 5,
            radial_points: 20,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn every_suite_passes_for_electric_mode() {
        let mode = ModeIndex::new(1, 1, 0, Parity::Electric).unwrap();
        for suite in applicable_suites(&mode) {
            let res = run_suite(suite, &mode, &quick()).unwrap();
            assert!(res.pass, "{:#?}", res.reports);
        }
    }

    #[test]
    fn gauge_suite_rejects_magnetic() {
        let mode = ModeIndex::new(1, 0, 0, Parity::Magnetic).unwrap();
        assert_eq!(applicable_suites(&mode).len(), 3);
        assert!(matches!(
            run_suite(Suite::Gauge, &mode, &quick()),
            Err(Error::WrongParity { .. })
        ));
    }
}
