//! Central finite differences on black-box samplers, plus a contour-integral
//! second derivative for samplers that are analytic in a complex variable.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{conformal_time, inverse_conformal_time, SpacetimePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coord {
    T,
    R,
    Theta,
    Phi,
    /// Conformal time; the shifted points are moved along `t = arcsinh(tan τ)`.
    Tau,
}

/// Symmetric stencil `Σ_k c_k (f(x+kh) ± f(x−kh))`, `k ≥ 1`, plus a centre weight.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stencil {
    pub derivative: u8,
    pub accuracy: u8,
    pub centre: f64,
    pub weights: &'static [f64],
}

const D1_2: [f64; 1] = [0.5];
const D1_4: [f64; 2] = [2.0 / 3.0, -1.0 / 12.0];
const D1_6: [f64; 3] = [3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0];
const D1_8: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
const D2_2: [f64; 1] = [1.0];
const D2_4: [f64; 2] = [4.0 / 3.0, -1.0 / 12.0];
const D2_6: [f64; 3] = [3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0];
const D2_8: [f64; 4] = [8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0];

impl Stencil {
    /// Central stencil for the first or second derivative with error `O(h^accuracy)`.
    pub fn central(derivative: u8, accuracy: u8) -> Result<Self> {
        let (centre, weights): (f64, &'static [f64]) = match (derivative, accuracy) {
            (1, 2) => (0.0, &D1_2),
            (1, 4) => (0.0, &D1_4),
            (1, 6) => (0.0, &D1_6),
            (1, 8) => (0.0, &D1_8),
            (2, 2) => (-2.0, &D2_2),
            (2, 4) => (-5.0 / 2.0, &D2_4),
            (2, 6) => (-49.0 / 18.0, &D2_6),
            (2, 8) => (-205.0 / 72.0, &D2_8),
            _ => {
                return Err(Error::InvalidGrid(format!(
                    "no central stencil for derivative {derivative} at accuracy {accuracy}"
                )))
            }
        };
        Ok(Self {
            derivative,
            accuracy,
            centre,
            weights,
        })
    }

    /// Largest offset `k` used.
    pub fn reach(&self) -> usize {
        self.weights.len()
    }

    /// Apply to a 1-D sampler at `x` with step `h`.
    pub fn apply<F>(&self, f: F, x: f64, h: f64) -> Result<Complex64>
    where
        F: Fn(f64) -> Result<Complex64>,
    {
        Ok(self.apply_array(|y| Ok([f(y)?]), x, h)?[0])
    }

    /// Apply componentwise to a sampler returning `N` values.
    pub fn apply_array<const N: usize, F>(&self, f: F, x: f64, h: f64) -> Result<[Complex64; N]>
    where
        F: Fn(f64) -> Result<[Complex64; N]>,
    {
        let mut acc = [Complex64::new(0.0, 0.0); N];
        for (k, w) in self.weights.iter().enumerate() {
            let dx = (k + 1) as f64 * h;
            let (plus, minus) = (f(x + dx)?, f(x - dx)?);
            for i in 0..N {
                let pair = if self.derivative == 1 {
                    plus[i] - minus[i]
                } else {
                    plus[i] + minus[i]
                };
                acc[i] += *w * pair;
            }
        }
        if self.derivative == 2 {
            let centre = f(x)?;
            for i in 0..N {
                acc[i] = (acc[i] + self.centre * centre[i]) / (h * h);
            }
        } else {
            for a in acc.iter_mut() {
                *a /= h;
            }
        }
        Ok(acc)
    }
}

pub(crate) fn check_reach(coord: Coord, x: f64, reach: f64) -> Result<()> {
    let ok = match coord {
        Coord::R | Coord::Theta => x - reach > 0.0 && x + reach < PI,
        Coord::Tau => (x - reach) > -FRAC_PI_2 && (x + reach) < FRAC_PI_2,
        Coord::T | Coord::Phi => (x + reach).is_finite(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::StepExitsDomain(format!(
            "{coord:?} = {x} with stencil reach {reach}"
        )))
    }
}

fn coordinate(p: &SpacetimePoint, coord: Coord) -> f64 {
    match coord {
        Coord::T => p.t,
        Coord::R => p.r,
        Coord::Theta => p.theta,
        Coord::Phi => p.phi,
        Coord::Tau => conformal_time(p.t),
    }
}

fn shifted(p: &SpacetimePoint, coord: Coord, x: f64) -> Result<SpacetimePoint> {
    let mut q = *p;
    match coord {
        Coord::T => q.t = x,
        Coord::R => q.r = x,
        Coord::Theta => q.theta = x,
        Coord::Phi => q.phi = x,
        Coord::Tau => q.t = inverse_conformal_time(x)?,
    }
    Ok(q)
}

/// Central difference of `sampler` along `coord`, with `accuracy` 2, 4, 6 or 8.
pub fn fd_partial_with<F>(
    sampler: F,
    coord: Coord,
    p: &SpacetimePoint,
    h: f64,
    derivative: u8,
    accuracy: u8,
) -> Result<Complex64>
where
    F: Fn(&SpacetimePoint) -> Result<Complex64>,
{
    Ok(fd_partial_array(|q| Ok([sampler(q)?]), coord, p, h, derivative, accuracy)?[0])
}

/// Componentwise central difference of an array-valued sampler.
pub fn fd_partial_array<const N: usize, F>(
    sampler: F,
    coord: Coord,
    p: &SpacetimePoint,
    h: f64,
    derivative: u8,
    accuracy: u8,
) -> Result<[Complex64; N]>
where
    F: Fn(&SpacetimePoint) -> Result<[Complex64; N]>,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidGrid(format!("step h = {h} must be positive")));
    }
    let stencil = Stencil::central(derivative, accuracy)?;
    let x = coordinate(p, coord);
    check_reach(coord, x, stencil.reach() as f64 * h)?;
    stencil.apply_array(|y| sampler(&shifted(p, coord, y)?), x, h)
}

/// Second-order central difference: `order` 1 gives `(f₊ − f₋)/2h`,
/// `order` 2 gives `(f₊ − 2f₀ + f₋)/h²`.
pub fn fd_partial<F>(sampler: F, coord: Coord, p: &SpacetimePoint, h: f64, order: u8) -> Result<Complex64>
where
    F: Fn(&SpacetimePoint) -> Result<Complex64>,
{
    fd_partial_with(sampler, coord, p, h, order, 2)
}

/// `f″(x)` of a function analytic near `x`, by the trapezoid rule on
/// `f″(x) = (2!/2πi) ∮ f(ζ)/(ζ − x)³ dζ` over a circle of `radius` with `nodes` points.
pub fn contour_second_derivative<F>(f: F, x: f64, radius: f64, nodes: usize) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
{
    // ζ = x + ρe^{iθ}: integrand reduces to 2 f(ζ) e^{−2iθ}/ρ², averaged over θ
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..nodes {
        let angle = 2.0 * PI * k as f64 / nodes as f64;
        let w = Complex64::from_polar(1.0, angle);
        acc += f(x + radius * w) * w.conj() * w.conj();
    }
    2.0 * acc / (nodes as f64 * radius * radius)
}
