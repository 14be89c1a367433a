//! Residual suites for every reduced equation system, evaluated on a
//! `(t, r)` grid (or a list of 4-D points for the full matrix equation).
//!
//! All `t`, `r`, `θ`, `φ` derivatives are taken by finite differences of
//! the samplers, never from the closed forms used to build them.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::fd::{check_reach, contour_second_derivative, fd_partial_array, Coord, Stencil};
use super::grid::GridSpec;
use super::report::ResidualReport;
use super::sampler::ModeSampler;
use crate::algebra::{apply4, mo_alphas, BasisTag};
use crate::error::{Error, Result};
use crate::geometry::{conformal_time, frame_at, inverse_conformal_time, SpacetimePoint};
use crate::modes::{Parity, RadialSolution};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Absolute tolerances per suite; the radial one is relative to `max|R|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    pub radial_relative: f64,
    pub reduced: f64,
    pub gradient: f64,
    pub conformal_kfg: f64,
    pub full_maxwell: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            radial_relative: 1e-9,
            reduced: 1e-8,
            gradient: 1e-9,
            conformal_kfg: 1e-7,
            full_maxwell: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn uniform(tol: f64) -> Self {
        Self {
            radial_relative: tol,
            reduced: tol,
            gradient: tol,
            conformal_kfg: tol,
            full_maxwell: tol,
        }
    }
}

/// How the radial suite obtains `R″`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum SecondDerivative {
    /// Trapezoid rule for the Cauchy integral on a circle around `r`.
    Contour { radius: f64, nodes: usize },
    /// Central difference of the given order (4 is the five-point rule).
    FiniteDifference { step: f64, accuracy: u8 },
}

impl Default for SecondDerivative {
    fn default() -> Self {
        SecondDerivative::Contour {
            radius: 0.1,
            nodes: 64,
        }
    }
}

/// Finite-difference operators on `(t, r)` samplers.
#[derive(Clone, Copy, Debug)]
struct Fd {
    h: f64,
    d1: Stencil,
    d2: Stencil,
}

impl Fd {
    fn new(grid: &GridSpec) -> Result<Self> {
        Ok(Self {
            h: grid.fd_step,
            d1: Stencil::central(1, grid.fd_accuracy)?,
            d2: Stencil::central(2, grid.fd_accuracy)?,
        })
    }

    fn dt<const N: usize>(&self, f: impl Fn(f64) -> Result<[Complex64; N]>, t: f64) -> Result<[Complex64; N]> {
        self.d1.apply_array(f, t, self.h)
    }

    fn dtt<const N: usize>(&self, f: impl Fn(f64) -> Result<[Complex64; N]>, t: f64) -> Result<[Complex64; N]> {
        self.d2.apply_array(f, t, self.h)
    }

    fn dr<const N: usize>(&self, f: impl Fn(f64) -> Result<[Complex64; N]>, r: f64) -> Result<[Complex64; N]> {
        check_reach(Coord::R, r, self.d1.reach() as f64 * self.h)?;
        self.d1.apply_array(f, r, self.h)
    }

    fn drr<const N: usize>(&self, f: impl Fn(f64) -> Result<[Complex64; N]>, r: f64) -> Result<[Complex64; N]> {
        check_reach(Coord::R, r, self.d2.reach() as f64 * self.h)?;
        self.d2.apply_array(f, r, self.h)
    }
}

/// Evaluate `K` residuals at every `(t, r)` node in parallel and reduce each
/// into a report, in grid order.
fn run_tr<const K: usize, E>(
    grid: &GridSpec,
    ids: [&str; K],
    tolerances: [f64; K],
    eval: E,
) -> Result<Vec<ResidualReport>>
where
    E: Fn(f64, f64) -> Result<[Complex64; K]> + Sync,
{
    grid.validate()?;
    let nodes = grid.tr_points();
    let values: Vec<[f64; K]> = nodes
        .par_iter()
        .map(|&(t, r)| eval(t, r).map(|v| v.map(|c| c.norm())))
        .collect::<Result<_>>()?;
    let points: Vec<SpacetimePoint> = nodes
        .iter()
        .map(|&(t, r)| SpacetimePoint::on_equator(t, r))
        .collect::<Result<_>>()?;
    Ok((0..K)
        .map(|k| {
            let samples: Vec<(SpacetimePoint, f64)> =
                points.iter().zip(&values).map(|(p, v)| (*p, v[k])).collect();
            ResidualReport::from_samples(ids[k], &samples, tolerances[k])
        })
        .collect())
}

/// `R″ + (ω² − j(j+1)/sin²r) R` on `n_points` nodes `r_k = πk/(n_points+1)`;
/// tolerance `rel_tol · max|R|`.
pub fn residual_radial_ode(
    radial: &RadialSolution,
    n_points: usize,
    method: SecondDerivative,
    rel_tol: f64,
) -> Result<ResidualReport> {
    if n_points == 0 {
        return Err(Error::InvalidGrid("radial suite needs at least one point".into()));
    }
    let rs: Vec<f64> = (1..=n_points)
        .map(|k| PI * k as f64 / (n_points + 1) as f64)
        .collect();
    let values: Vec<(f64, f64)> = rs
        .par_iter()
        .map(|&r| {
            let big_r = radial.evaluate(r)?;
            let d2 = match method {
                SecondDerivative::Contour { radius, nodes } => {
                    contour_second_derivative(|z| radial.evaluate_complex(z), r, radius, nodes)
                }
                SecondDerivative::FiniteDifference { step, accuracy } => {
                    let s = Stencil::central(2, accuracy)?;
                    check_reach(Coord::R, r, s.reach() as f64 * step)?;
                    s.apply(|x| radial.evaluate(x), r, step)?
                }
            };
            Ok(((d2 + radial.potential(r) * big_r).norm(), big_r.norm()))
        })
        .collect::<Result<_>>()?;
    let scale = values.iter().map(|v| v.1).fold(0.0, f64::max);
    let samples: Vec<(SpacetimePoint, f64)> = rs
        .iter()
        .zip(&values)
        .map(|(&r, v)| Ok((SpacetimePoint::on_equator(0.0, r)?, v.0)))
        .collect::<Result<_>>()?;
    Ok(ResidualReport::from_samples("radial_ode", &samples, rel_tol * scale))
}

/// The four first-order equations for `(F₁, F₂, F₃)`, including the
/// dependent first one.
pub fn residual_mo_reduced(s: &ModeSampler, grid: &GridSpec, tol: f64) -> Result<Vec<ResidualReport>> {
    let fd = Fd::new(grid)?;
    let b = s.mode.b_nu();
    run_tr(
        grid,
        ["mo_reduced.1", "mo_reduced.2", "mo_reduced.3", "mo_reduced.4"],
        [tol; 4],
        |t, r| {
            let [f1, f2, f3] = s.f123(t, r)?;
            let dt = fd.dt(|x| s.f123(x, r), t)?;
            let dr = fd.dr(|x| s.f123(t, x), r)?;
            let ch = t.cosh();
            let (sin, cot) = (r.sin(), 1.0 / r.tan());
            Ok([
                dr[1] + cot * f2 + b / sin * (f1 + f3),
                -ch * dt[0] - dr[0] - b / sin * f2,
                -ch * dt[1] + b / sin * (f1 - f3),
                -ch * dt[2] + dr[2] + b / sin * f2,
            ])
        },
    )
}

/// The same system written for `(F₂, F, G)`.
pub fn residual_mo_combined(s: &ModeSampler, grid: &GridSpec, tol: f64) -> Result<Vec<ResidualReport>> {
    let fd = Fd::new(grid)?;
    let b = s.mode.b_nu();
    let triple = |t: f64, r: f64| s.triple(t, r).map(|v| [v.f2, v.f, v.g]);
    run_tr(
        grid,
        ["mo_combined.1", "mo_combined.2", "mo_combined.3", "mo_combined.4"],
        [tol; 4],
        |t, r| {
            let [f2, f, g] = triple(t, r)?;
            let dt = fd.dt(|x| triple(x, r), t)?;
            let dr = fd.dr(|x| triple(t, x), r)?;
            let ch = t.cosh();
            let (sin, cot) = (r.sin(), 1.0 / r.tan());
            Ok([
                dr[0] + cot * f2 + b / sin * f,
                -ch * dt[0] + b / sin * g,
                ch * dt[1] + dr[2],
                ch * dt[2] + dr[1] + 2.0 * b / sin * f2,
            ])
        },
    )
}

/// `cosh t ∂_t(cosh t ∂_t G) − (∂²_r − j(j+1)/sin²r) G` for the mode's own `G`,
/// with the time part differenced in conformal time.
pub fn residual_wave_g(s: &ModeSampler, grid: &GridSpec, tol: f64) -> Result<ResidualReport> {
    residual_wave_g_with(|t, r| s.triple(t, r).map(|v| v.g), s.mode.j, grid, tol)
}

/// The same operator applied to an arbitrary `G(t, r)`.
pub fn residual_wave_g_with<G>(g: G, j: u32, grid: &GridSpec, tol: f64) -> Result<ResidualReport>
where
    G: Fn(f64, f64) -> Result<Complex64> + Sync,
{
    let fd = Fd::new(grid)?;
    let jj = f64::from(j * (j + 1));
    let g = |t: f64, r: f64| g(t, r).map(|v| [v]);
    // cosh t ∂_t(cosh t ∂_t) = ∂²_τ: differencing in τ avoids the cosh²t
    // amplification of rounding in G_tt
    let mut reports = run_tr(grid, ["wave_g"], [tol], |t, r| {
        let [g0] = g(t, r)?;
        let tau = conformal_time(t);
        check_reach(Coord::Tau, tau, fd.d2.reach() as f64 * fd.h)?;
        let [g_tau_tau] = fd.d2.apply_array(|x| g(inverse_conformal_time(x)?, r), tau, fd.h)?;
        let [grr] = fd.drr(|x| g(t, x), r)?;
        Ok([g_tau_tau - (grr - jj / r.sin().powi(2) * g0)])
    })?;
    Ok(reports.remove(0))
}

/// The DKP `(t, r)` system of the mode's parity: four equations for
/// magnetic parity, three field-strength plus three potential equations for
/// electric parity.
pub fn residual_dkp(s: &ModeSampler, grid: &GridSpec, tol: f64) -> Result<Vec<ResidualReport>> {
    let fd = Fd::new(grid)?;
    let b = s.mode.b_nu();
    match s.mode.parity {
        Parity::Magnetic => run_tr(
            grid,
            ["dkp_magnetic.1", "dkp_magnetic.2", "dkp_magnetic.3", "dkp_magnetic.4"],
            [tol; 4],
            |t, r| {
                let f = s.dkp(t, r)?;
                let dt = fd.dt(|x| s.dkp(x, r), t)?;
                let dr = fd.dr(|x| s.dkp(t, x), r)?;
                let (ch, sh) = (t.cosh(), t.sinh());
                let (sin, cot) = (r.sin(), 1.0 / r.tan());
                Ok([
                    -(ch * dt[4] + 2.0 * sh * f[4]) + I * (dr[7] + cot * f[7]) + I * b / sin * f[8],
                    ch * (dt[1] - f[4]) + sh * f[1],
                    -ch * f[7] - I * (dr[1] + cot * f[1]),
                    -ch * f[8] + 2.0 * I * b / sin * f[1],
                ])
            },
        ),
        Parity::Electric => run_tr(
            grid,
            [
                "dkp_electric.field.1",
                "dkp_electric.field.2",
                "dkp_electric.field.3",
                "dkp_electric.potential.1",
                "dkp_electric.potential.2",
                "dkp_electric.potential.3",
            ],
            [tol; 6],
            |t, r| {
                let f = s.dkp(t, r)?;
                let dt = fd.dt(|x| s.dkp(x, r), t)?;
                let dr = fd.dr(|x| s.dkp(t, x), r)?;
                let (ch, th) = (t.cosh(), t.tanh());
                let (sin, cot) = (r.sin(), 1.0 / r.tan());
                Ok([
                    dr[5] + 2.0 * cot * f[5] + 2.0 * b / sin * f[4],
                    -ch * (dt[4] + 2.0 * th * f[4]) + I * (dr[7] + cot * f[7]),
                    -ch * (dt[5] + 2.0 * th * f[5]) - 2.0 * I * b / sin * f[7],
                    ch * (dt[1] + th * f[1]) + b / sin * f[0] - ch * f[4],
                    -ch * (dt[2] + th * f[2]) + dr[0] + ch * f[5],
                    I * (dr[1] + cot * f[1]) + I * b / sin * f[2] + ch * f[7],
                ])
            },
        ),
    }
}

fn require_potentials(s: &ModeSampler) -> Result<()> {
    if s.mode.parity != Parity::Electric || s.gauge().is_none() {
        return Err(Error::WrongParity {
            expected: "electric",
            found: s.mode.parity.name(),
        });
    }
    Ok(())
}

/// Coefficient of `g₂/sin r` in the Lorentz condition, `2 b_ν`.
pub fn lorentz_g2_coefficient(b_nu: f64) -> f64 {
    2.0 * b_nu
}

/// `−(2b_ν/sin r) g₂ + (cosh t ∂_t + 2 sinh t) g₁ − (∂_r + 2 cot r) g₃`.
pub fn residual_lorentz(s: &ModeSampler, grid: &GridSpec, tol: f64) -> Result<ResidualReport> {
    require_potentials(s)?;
    let fd = Fd::new(grid)?;
    let c = lorentz_g2_coefficient(s.mode.b_nu());
    let mut reports = run_tr(grid, ["lorentz_condition"], [tol], |t, r| {
        let g = s.potentials(t, r)?;
        let dt = fd.dt(|x| s.potentials(x, r), t)?;
        let dr = fd.dr(|x| s.potentials(t, x), r)?;
        let (ch, sh) = (t.cosh(), t.sinh());
        let (sin, cot) = (r.sin(), 1.0 / r.tan());
        Ok([-c / sin * g[1] + ch * dt[0] + 2.0 * sh * g[0] - (dr[2] + 2.0 * cot * g[2])])
    })?;
    Ok(reports.remove(0))
}

/// `[∂²_t + 3 tanh t ∂_t − (∂²_r + 2 cot r ∂_r − j(j+1)/sin²r)/cosh²t + 2] g₁`.
pub fn residual_conformal_kfg<G>(g1: G, j: u32, grid: &GridSpec, tol: f64) -> Result<ResidualReport>
where
    G: Fn(f64, f64) -> Result<Complex64> + Sync,
{
    let fd = Fd::new(grid)?;
    let jj = f64::from(j * (j + 1));
    let g = |t: f64, r: f64| g1(t, r).map(|v| [v]);
    let mut reports = run_tr(grid, ["conformal_kfg"], [tol], |t, r| {
        let [g0] = g(t, r)?;
        let [gt] = fd.dt(|x| g(x, r), t)?;
        let [gtt] = fd.dtt(|x| g(x, r), t)?;
        let [gr] = fd.dr(|x| g(t, x), r)?;
        let [grr] = fd.drr(|x| g(t, x), r)?;
        let (sin, cot) = (r.sin(), 1.0 / r.tan());
        let spatial = grr + 2.0 * cot * gr - jj / (sin * sin) * g0;
        Ok([gtt + 3.0 * t.tanh() * gt - spatial / t.cosh().powi(2) + 2.0 * g0])
    })?;
    Ok(reports.remove(0))
}

/// Pure-gauge equations: `cosh t ∂_t g₂ + (b_ν/sin r) g₁`,
/// `−cosh t ∂_t g₃ + ∂_r g₁` and the dependent `(∂_r + cot r) g₂ + (b_ν/sin r) g₃`.
pub fn residual_gradient(s: &ModeSampler, grid: &GridSpec, tol: f64) -> Result<Vec<ResidualReport>> {
    require_potentials(s)?;
    let fd = Fd::new(grid)?;
    let b = s.mode.b_nu();
    run_tr(grid, ["gradient.1", "gradient.2", "gradient.3"], [tol; 3], |t, r| {
        let g = s.potentials(t, r)?;
        let dt = fd.dt(|x| s.potentials(x, r), t)?;
        let dr = fd.dr(|x| s.potentials(t, x), r)?;
        let ch = t.cosh();
        let (sin, cot) = (r.sin(), 1.0 / r.tan());
        Ok([
            ch * dt[1] + b / sin * g[0],
            -ch * dt[2] + dr[0],
            dr[1] + cot * g[1] + b / sin * g[2],
        ])
    })
}

/// Potentials sourced by the field:
/// `cosh t ∂_t g₂ + (b_ν/sin r) g₁ − F/(2 sin r)` and
/// `cosh t ∂_t g₃ − ∂_r g₁ − F₂/sin r`.
pub fn residual_gauge_sources(s: &ModeSampler, grid: &GridSpec, tol: f64) -> Result<Vec<ResidualReport>> {
    require_potentials(s)?;
    let fd = Fd::new(grid)?;
    let b = s.mode.b_nu();
    run_tr(grid, ["gauge_source.1", "gauge_source.2"], [tol; 2], |t, r| {
        let g = s.potentials(t, r)?;
        let v = s.triple(t, r)?;
        let dt = fd.dt(|x| s.potentials(x, r), t)?;
        let dr = fd.dr(|x| s.potentials(t, x), r)?;
        let ch = t.cosh();
        let sin = r.sin();
        Ok([
            ch * dt[1] + b / sin * g[0] - v.f / (2.0 * sin),
            ch * dt[2] - dr[0] - v.f2 / sin,
        ])
    })
}

/// Modulus of the full matrix equation
/// `Σ_a α^a e_(a)^μ ∂_μ Ψ + Σ_k α^k (½ j^{ab} γ_{abk}) Ψ` in the cyclic basis,
/// all four derivatives by central differences of order `accuracy`.
pub fn residual_full_maxwell<S>(
    psi: S,
    points: &[SpacetimePoint],
    h: f64,
    accuracy: u8,
    tol: f64,
) -> Result<ResidualReport>
where
    S: Fn(&SpacetimePoint) -> Result<[Complex64; 4]> + Sync,
{
    let alphas = mo_alphas(BasisTag::Cyclic).map(|a| a.to_complex());
    let values: Vec<f64> = points
        .par_iter()
        .map(|p| {
            let frame = frame_at(p, BasisTag::Cyclic)?;
            let v = psi(p)?;
            let coords = [Coord::T, Coord::R, Coord::Theta, Coord::Phi];
            let mut grads = [[Complex64::new(0.0, 0.0); 4]; 4];
            for (mu, coord) in coords.into_iter().enumerate() {
                grads[mu] = fd_partial_array(&psi, coord, p, h, 1, accuracy)?;
            }
            let mut res = [Complex64::new(0.0, 0.0); 4];
            for (a, alpha) in alphas.iter().enumerate() {
                let mut directional = [Complex64::new(0.0, 0.0); 4];
                for (mu, grad) in grads.iter().enumerate() {
                    let e = frame.tetrad[a][mu];
                    if e != 0.0 {
                        for i in 0..4 {
                            directional[i] += e * grad[i];
                        }
                    }
                }
                if a > 0 {
                    let spin = apply4(&frame.spin_contractions[a - 1], &v);
                    for i in 0..4 {
                        directional[i] += spin[i];
                    }
                }
                let term = apply4(alpha, &directional);
                for i in 0..4 {
                    res[i] += term[i];
                }
            }
            Ok(res.iter().map(|c| c.norm()).fold(0.0, f64::max))
        })
        .collect::<Result<_>>()?;
    let samples: Vec<(SpacetimePoint, f64)> = points.iter().copied().zip(values).collect();
    Ok(ResidualReport::from_samples("full_maxwell", &samples, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::{electric_potentials_lorentz, gradient_solution, ModeIndex};
    use crate::verify::sampler::{Perturbation, ProfileId};

    fn small_grid() -> GridSpec {
        GridSpec {
            n_t: 9,
            n_r: 9,
            ..GridSpec::default()
        }
    }

    #[test]
    fn reduced_systems_hold_for_lowest_mode() {
        let mode = ModeIndex::new(1, 0, 0, Parity::Magnetic).unwrap();
        let s = ModeSampler::new(&mode).unwrap();
        let grid = small_grid();
        for rep in residual_mo_reduced(&s, &grid, 1e-8).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        for rep in residual_mo_combined(&s, &grid, 1e-8).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        assert!(residual_wave_g(&s, &grid, 1e-8).unwrap().pass);
        for rep in residual_dkp(&s, &grid, 1e-8).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
    }

    #[test]
    fn perturbing_f2_breaks_first_and_third() {
        let mode = ModeIndex::new(1, 0, 0, Parity::Magnetic).unwrap();
        let s = ModeSampler::new(&mode).unwrap().perturbed(Perturbation {
            profile: ProfileId::F2,
            relative: 1e-3,
        });
        let reps = residual_mo_reduced(&s, &small_grid(), 1e-8).unwrap();
        assert!(reps[0].max_abs > 1e-5);
        assert!(reps[2].max_abs > 1e-5);
    }

    #[test]
    fn electric_gauge_suites() {
        let mode = ModeIndex::new(2, 1, 1, Parity::Electric).unwrap();
        let grid = small_grid();
        let landau = ModeSampler::new(&mode).unwrap();
        for rep in residual_dkp(&landau, &grid, 1e-8).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        for rep in residual_gauge_sources(&landau, &grid, 1e-8).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        let lorentz = ModeSampler::new(&mode)
            .unwrap()
            .with_gauge(electric_potentials_lorentz(&mode, Complex64::new(0.7, -0.2)).unwrap())
            .unwrap();
        assert!(residual_lorentz(&lorentz, &grid, 1e-8).unwrap().pass);
        for rep in residual_dkp(&lorentz, &grid, 1e-8).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        let grad = ModeSampler::new(&mode)
            .unwrap()
            .with_gauge(gradient_solution(&mode, 5).unwrap())
            .unwrap();
        for rep in residual_gradient(&grad, &grid, 1e-9).unwrap() {
            assert!(rep.pass, "{rep:?}");
        }
        assert!(residual_lorentz(&grad, &grid, 1e-8).unwrap().pass);
        let g1 = |t: f64, r: f64| grad.potentials(t, r).map(|g| g[0]);
        assert!(residual_conformal_kfg(g1, mode.j, &grid, 1e-7).unwrap().pass);
    }

    #[test]
    fn wrong_radial_profile_fails_wave_equation() {
        let w = 2.0;
        let g = |t: f64, r: f64| {
            let tau = crate::geometry::conformal_time(t);
            Ok(Complex64::from_polar(r.sin(), -w * tau))
        };
        let rep = residual_wave_g_with(g, 1, &small_grid(), 1e-4).unwrap();
        assert!(!rep.pass);
    }

    #[test]
    fn magnetic_mode_has_no_lorentz_suite() {
        let mode = ModeIndex::new(1, 0, 0, Parity::Magnetic).unwrap();
        let s = ModeSampler::new(&mode).unwrap();
        assert!(matches!(
            residual_lorentz(&s, &small_grid(), 1e-8),
            Err(Error::WrongParity { .. })
        ));
    }

    #[test]
    fn constant_scalar_gives_conformal_term() {
        let rep = residual_conformal_kfg(|_, _| Ok(Complex64::new(0.5, 0.0)), 0, &small_grid(), 1e-7)
            .unwrap();
        assert!((rep.max_abs - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_field_has_zero_maxwell_residual() {
        let pts = GridSpec::maxwell().random_points(5, 1).unwrap();
        let rep = residual_full_maxwell(|_| Ok([Complex64::new(0.0, 0.0); 4]), &pts, 1e-4, 2, 1e-6)
            .unwrap();
        assert_eq!(rep.max_abs, 0.0);
    }

    #[test]
    fn radial_equation_holds() {
        let rad = RadialSolution::with_frequency(3, 6).unwrap();
        let rep = residual_radial_ode(&rad, 200, SecondDerivative::default(), 1e-9).unwrap();
        assert!(rep.pass, "{rep:?}");
        let fd = SecondDerivative::FiniteDifference {
            step: 1e-3,
            accuracy: 4,
        };
        assert!(residual_radial_ode(&rad, 200, fd, 1e-6).unwrap().pass);
    }
}
