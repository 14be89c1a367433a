//! Wigner rotation functions `D^j_{m′σ}(φ, θ, 0) = e^{−i m′ φ} d^j_{m′σ}(θ)`
//! with the small-d taken from Wigner's explicit factorial sum.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest `j` for which the factorial sum is trusted in double precision.
pub const MAX_J: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WignerArgs {
    pub j: u32,
    pub mprime: i32,
    pub sigma: i32,
    pub theta: f64,
    pub phi: f64,
}

fn factorial(n: i64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn check_indices(j: u32, mprime: i32, sigma: i32) -> Result<()> {
    if j > MAX_J {
        return Err(Error::InvalidQuantumNumbers(format!(
            "j = {j} exceeds the supported range j <= {MAX_J}"
        )));
    }
    let j = j as i32;
    if mprime.abs() > j || sigma.abs() > j {
        return Err(Error::InvalidQuantumNumbers(format!(
            "|m'| = {} and |σ| = {} must not exceed j = {j}",
            mprime.abs(),
            sigma.abs()
        )));
    }
    Ok(())
}

/// Terms `(coefficient, cos-power, sin-power)` of the factorial sum, so that
/// `d = Σ coefficient · cos(θ/2)^p · sin(θ/2)^q`.
fn factorial_sum_terms(j: i64, mp: i64, m: i64) -> impl Iterator<Item = (f64, i32, i32)> {
    let norm = (factorial(j + mp) * factorial(j - mp) * factorial(j + m) * factorial(j - m)).sqrt();
    let lo = 0.max(m - mp);
    let hi = (j + m).min(j - mp);
    (lo..=hi).map(move |s| {
        let sign = if (mp - m + s).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let denom =
            factorial(j + m - s) * factorial(s) * factorial(mp - m + s) * factorial(j - mp - s);
        let p = (2 * j + m - mp - 2 * s) as i32;
        let q = (mp - m + 2 * s) as i32;
        (sign * norm / denom, p, q)
    })
}

/// Small Wigner function `d^j_{m′m}(θ)`.
pub fn wigner_small_d(j: u32, mprime: i32, m: i32, theta: f64) -> Result<f64> {
    check_indices(j, mprime, m)?;
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    Ok(factorial_sum_terms(j as i64, mprime as i64, m as i64)
        .map(|(coef, p, q)| coef * c.powi(p) * s.powi(q))
        .sum())
}

/// `∂_θ d^j_{m′m}(θ)`, differentiating the factorial sum term by term.
pub fn wigner_small_d_derivative(j: u32, mprime: i32, m: i32, theta: f64) -> Result<f64> {
    check_indices(j, mprime, m)?;
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    Ok(factorial_sum_terms(j as i64, mprime as i64, m as i64)
        .map(|(coef, p, q)| {
            let mut acc = 0.0;
            if p > 0 {
                acc -= p as f64 * c.powi(p - 1) * s.powi(q + 1);
            }
            if q > 0 {
                acc += q as f64 * c.powi(p + 1) * s.powi(q - 1);
            }
            0.5 * coef * acc
        })
        .sum())
}

/// `D^j_{m′σ}(φ, θ, 0) = e^{−i m′ φ} d^j_{m′σ}(θ)`.
pub fn wigner_d(args: WignerArgs) -> Result<Complex64> {
    let d = wigner_small_d(args.j, args.mprime, args.sigma, args.theta)?;
    Ok(Complex64::from_polar(1.0, -(args.mprime as f64) * args.phi) * d)
}

/// The angular basis `D_σ = D^j_{−m,σ}(φ, θ, 0)` used for the field ansatz.
/// Columns with `|σ| > j` do not exist and evaluate to zero.
pub fn angular_basis(j: u32, m: i32, sigma: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if sigma.unsigned_abs() > j {
        check_indices(j, -m, 0)?;
        return Ok(Complex64::new(0.0, 0.0));
    }
    wigner_d(WignerArgs {
        j,
        mprime: -m,
        sigma,
        theta,
        phi,
    })
}

/// `∂_θ D_σ` for the angular basis.
pub fn angular_basis_dtheta(j: u32, m: i32, sigma: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if sigma.unsigned_abs() > j {
        check_indices(j, -m, 0)?;
        return Ok(Complex64::new(0.0, 0.0));
    }
    let dd = wigner_small_d_derivative(j, -m, sigma, theta)?;
    Ok(Complex64::from_polar(1.0, m as f64 * phi) * dd)
}

/// Residuals `|LHS − RHS|` of the six recurrences that lower and raise the
/// column index of `D_σ`, in the order
/// `∂_θ D₋₁`, `(m − cos θ)/sin θ · D₋₁`, `∂_θ D₀`, `m/sin θ · D₀`,
/// `∂_θ D₊₁`, `(m + cos θ)/sin θ · D₊₁`.
pub fn wigner_recurrence_residuals(j: u32, m: i32, theta: f64) -> Result<[f64; 6]> {
    if j < 1 {
        return Err(Error::InvalidQuantumNumbers("recurrences need j >= 1".into()));
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::AngleOutOfDomain {
            name: "theta",
            value: theta,
        });
    }
    let jf = j as f64;
    let nu = (jf * (jf + 1.0)).sqrt();
    let a = ((jf - 1.0) * (jf + 2.0)).sqrt();
    // φ = 0: the common phase e^{imφ} cancels from every identity.
    let d = |sigma: i32| angular_basis(j, m, sigma, theta, 0.0);
    let dd = |sigma: i32| angular_basis_dtheta(j, m, sigma, theta, 0.0);
    let (dm2, dm1, d0, dp1, dp2) = (d(-2)?, d(-1)?, d(0)?, d(1)?, d(2)?);
    let (sin, cos) = (theta.sin(), theta.cos());
    let mf = m as f64;
    Ok([
        (dd(-1)? - 0.5 * (a * dm2 - nu * d0)).norm(),
        ((mf - cos) / sin * dm1 - 0.5 * (a * dm2 + nu * d0)).norm(),
        (dd(0)? - 0.5 * (nu * dm1 - nu * dp1)).norm(),
        (mf / sin * d0 - 0.5 * (nu * dm1 + nu * dp1)).norm(),
        (dd(1)? - 0.5 * (nu * d0 - a * dp2)).norm(),
        ((mf + cos) / sin * dp1 - 0.5 * (nu * d0 + a * dp2)).norm(),
    ])
}
