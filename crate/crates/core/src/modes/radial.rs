//! Regular radial solutions `R(r) = z^{j+1} (1−z)^{−ω/2} F(−n, j+1; 2j+2; z)`,
//! `z = 1 − e^{−2ir}`, of `R″ + (ω² − j(j+1)/sin²r) R = 0`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::index::ModeIndex;
use crate::error::{Error, Result};
use crate::special_fn::{
    eval_polynomial, eval_polynomial_derivative, hypergeometric_polynomial, HypParams,
};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Clone, Debug, PartialEq)]
pub struct RadialSolution {
    pub j: u32,
    pub n: u32,
    pub omega: u32,
    /// Exponent of `z`, `j + 1`.
    pub a: u32,
    /// Exponent of `1 − z`, `−ω/2`.
    pub b: f64,
    /// Coefficients of `f(z)` in ascending powers, `coeffs[0] = 1`.
    pub coeffs: Vec<Complex64>,
}

/// `z = 1 − e^{−2ir} = 2i sin r e^{−ir}`; valid for complex `r`.
pub fn z_of_r(r: Complex64) -> Complex64 {
    2.0 * I * r.sin() * (-I * r).exp()
}

fn check_interior(r: f64) -> Result<()> {
    if r > 0.0 && r < PI {
        Ok(())
    } else {
        Err(Error::SingularPoint(format!(
            "radial coordinate r = {r} must lie strictly inside (0, π)"
        )))
    }
}

impl RadialSolution {
    pub fn new(mode: &ModeIndex) -> Result<Self> {
        Self::with_degree(mode.j, mode.n)
    }

    /// Solution with frequency `ω`, i.e. degree `n = ω − j − 1`.
    pub fn with_frequency(j: u32, omega: u32) -> Result<Self> {
        if j < 1 || omega < j + 1 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "frequency ω = {omega} must satisfy ω >= j + 1 with j = {j} >= 1"
            )));
        }
        Self::with_degree(j, omega - j - 1)
    }

    fn with_degree(j: u32, n: u32) -> Result<Self> {
        let omega = n + 1 + j;
        let p = HypParams::real(
            -(n as f64),
            (j + 1) as f64,
            (2 * j + 2) as f64,
            Complex64::new(0.0, 0.0),
        );
        Ok(Self {
            j,
            n,
            omega,
            a: j + 1,
            b: -(omega as f64) / 2.0,
            coeffs: hypergeometric_polynomial(&p)?,
        })
    }

    /// `R(r)` at a real interior point.
    pub fn evaluate(&self, r: f64) -> Result<Complex64> {
        check_interior(r)?;
        Ok(self.evaluate_complex(r.into()))
    }

    /// `dR/dr` at a real interior point.
    pub fn derivative(&self, r: f64) -> Result<Complex64> {
        check_interior(r)?;
        Ok(self.derivative_complex(r.into()))
    }

    /// `R` continued to complex `r`; `R` is entire in `r`.
    pub fn evaluate_complex(&self, r: Complex64) -> Complex64 {
        let z = z_of_r(r);
        // (1 − z)^b = e^{−2irb} along the whole circle, no branch cut
        let one_minus_z_b = (-2.0 * I * r * self.b).exp();
        z.powu(self.a) * one_minus_z_b * eval_polynomial(&self.coeffs, z)
    }

    /// `R′ = (dz/dr)(dR/dz)`, `dz/dr = 2i(1 − z)`, written without `1/z`.
    pub fn derivative_complex(&self, r: Complex64) -> Complex64 {
        let z = z_of_r(r);
        let one_minus_z_b = (-2.0 * I * r * self.b).exp();
        let f = eval_polynomial(&self.coeffs, z);
        let df = eval_polynomial_derivative(&self.coeffs, z);
        let za1 = z.powu(self.a - 1);
        let inner = (1.0 - z) * (self.a as f64 * za1 * f + za1 * z * df) - self.b * za1 * z * f;
        2.0 * I * one_minus_z_b * inner
    }

    /// `ω² − j(j+1)/sin²r`, the coefficient of the radial equation.
    pub fn potential(&self, r: f64) -> f64 {
        let j = self.j as f64;
        (self.omega as f64).powi(2) - j * (j + 1.0) / r.sin().powi(2)
    }
}
