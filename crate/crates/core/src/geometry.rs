//! The expanding (non-static) de Sitter chart
//! `dS² = dt² − cosh²t [dr² + sin²r (dθ² + sin²θ dφ²)]` with curvature radius 1,
//! its diagonal tetrad, Ricci rotation coefficients and the spin-connection
//! terms of the 3-vector equation.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{so3c_generators, BasisTag};
use crate::error::{Error, Result};

/// A point `(t, r, θ, φ)` with `r` and `θ` strictly inside `(0, π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpacetimePoint {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

fn interior(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v < PI {
        Ok(())
    } else {
        Err(Error::SingularPoint(format!(
            "{name} = {v} must lie strictly inside (0, π)"
        )))
    }
}

impl SpacetimePoint {
    pub fn new(t: f64, r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(t.is_finite() && phi.is_finite()) {
            return Err(Error::SingularPoint(format!(
                "non-finite coordinate t = {t}, φ = {phi}"
            )));
        }
        interior("r", r)?;
        interior("theta", theta)?;
        Ok(Self { t, r, theta, phi })
    }

    /// Point on the equatorial plane `θ = π/2, φ = 0`; used by the `(t, r)` suites.
    pub fn on_equator(t: f64, r: f64) -> Result<Self> {
        Self::new(t, r, FRAC_PI_2, 0.0)
    }

    pub fn tau(&self) -> f64 {
        conformal_time(self.t)
    }
}

/// `τ = arctan(sinh t) ∈ (−π/2, π/2)`.
pub fn conformal_time(t: f64) -> f64 {
    t.sinh().atan()
}

/// `t = arcsinh(tan τ)`.
pub fn inverse_conformal_time(tau: f64) -> Result<f64> {
    if tau.is_nan() || tau.abs() >= FRAC_PI_2 {
        return Err(Error::OutOfRange(format!(
            "conformal time τ = {tau} must satisfy |τ| < π/2"
        )));
    }
    Ok(tau.tan().asinh())
}

/// Diagonal of `g_{αβ}` in the order `(t, r, θ, φ)`.
pub fn metric_diagonal(p: &SpacetimePoint) -> [f64; 4] {
    let a2 = p.t.cosh().powi(2);
    let s2 = p.r.sin().powi(2);
    [1.0, -a2, -a2 * s2, -a2 * s2 * p.theta.sin().powi(2)]
}

/// `√(−g) = cosh³t sin²r sin θ`.
pub fn sqrt_minus_g(p: &SpacetimePoint) -> f64 {
    p.t.cosh().powi(3) * p.r.sin().powi(2) * p.theta.sin()
}

/// Tetrad vectors `e_(a)^α`, row `a`, column `α`. Frame legs 1, 2 point along
/// `θ` and `φ`; leg 3 is radial.
pub fn tetrad(p: &SpacetimePoint) -> [[f64; 4]; 4] {
    let ch = p.t.cosh();
    let sr = p.r.sin();
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0 / (ch * sr), 0.0],
        [0.0, 0.0, 0.0, 1.0 / (ch * sr * p.theta.sin())],
        [0.0, 1.0 / ch, 0.0, 0.0],
    ]
}

/// Covariant divergence `∇_α e_(a)^α` of each tetrad leg.
pub fn tetrad_divergence(p: &SpacetimePoint) -> [f64; 4] {
    let ch = p.t.cosh();
    let sr = p.r.sin();
    [
        3.0 * p.t.tanh(),
        1.0 / (p.theta.tan() * ch * sr),
        0.0,
        2.0 / (p.r.tan() * ch),
    ]
}

/// One nonzero rotation coefficient `γ_{[ab]c}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RotationCoefficient {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub value: f64,
}

pub type Matrix4 = [[Complex64; 4]; 4];

#[derive(Clone, Debug, PartialEq)]
pub struct FrameData {
    pub point: SpacetimePoint,
    pub basis: BasisTag,
    pub tetrad: [[f64; 4]; 4],
    pub rotation_coeffs: [RotationCoefficient; 6],
    /// `½ j^{ab} γ_{abk}` for `k = 1, 2, 3`.
    pub spin_contractions: [Matrix4; 3],
}

impl FrameData {
    /// `γ_{abc}`, antisymmetric in the first pair.
    pub fn gamma(&self, a: usize, b: usize, c: usize) -> f64 {
        self.rotation_coeffs
            .iter()
            .find_map(|g| {
                if (g.a, g.b, g.c) == (a, b, c) {
                    Some(g.value)
                } else if (g.b, g.a, g.c) == (a, b, c) {
                    Some(-g.value)
                } else {
                    None
                }
            })
            .unwrap_or(0.0)
    }
}

fn rotation_coefficients(p: &SpacetimePoint) -> [RotationCoefficient; 6] {
    let th = p.t.tanh();
    let ch = p.t.cosh();
    let cot_r = 1.0 / p.r.tan();
    let cot_theta = 1.0 / p.theta.tan();
    let g = |a, b, c, value| RotationCoefficient { a, b, c, value };
    [
        g(0, 1, 1, th),
        g(0, 2, 2, th),
        g(0, 3, 3, th),
        g(3, 1, 1, cot_r / ch),
        g(3, 2, 2, cot_r / ch),
        g(1, 2, 2, cot_theta / (ch * p.r.sin())),
    ]
}

pub fn frame_at(p: &SpacetimePoint, basis: BasisTag) -> Result<FrameData> {
    let p = SpacetimePoint::new(p.t, p.r, p.theta, p.phi)?;
    let gens = so3c_generators(basis);
    let s = gens.s.map(|m| m.to_complex());
    let n = gens.n.map(|m| m.to_complex());
    let mut frame = FrameData {
        point: p,
        basis,
        tetrad: tetrad(&p),
        rotation_coeffs: rotation_coefficients(&p),
        spin_contractions: [[[Complex64::new(0.0, 0.0); 4]; 4]; 3],
    };
    // ½ j^{ab} γ_{abk} = Σ_{a<b} j^{ab} γ_{abk}, with j^{0k} = N^k and
    // (j^{23}, j^{31}, j^{12}) = (S¹, S², S³).
    let pairs: [(usize, usize, &Matrix4); 6] = [
        (0, 1, &n[0]),
        (0, 2, &n[1]),
        (0, 3, &n[2]),
        (2, 3, &s[0]),
        (3, 1, &s[1]),
        (1, 2, &s[2]),
    ];
    for k in 1..=3 {
        let mut acc = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (a, b, j) in pairs {
            let g = frame.gamma(a, b, k);
            if g != 0.0 {
                for (row, jrow) in acc.iter_mut().zip(j.iter()) {
                    for (x, y) in row.iter_mut().zip(jrow) {
                        *x += y * g;
                    }
                }
            }
        }
        frame.spin_contractions[k - 1] = acc;
    }
    Ok(frame)
}
