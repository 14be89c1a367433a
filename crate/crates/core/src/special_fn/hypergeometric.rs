//! Gauss hypergeometric series `₂F₁(α, β; γ; z)`.
//!
//! The radial solutions only need the terminating case `α = −n`, where the
//! series is a polynomial of degree `n`. Terms are accumulated strictly left
//! to right so repeated evaluations are bit-identical.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Cap on the number of terms for non-terminating sums inside the unit disk.
const MAX_TERMS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub z: Complex64,
}

impl HypParams {
    pub fn real(alpha: f64, beta: f64, gamma: f64, z: Complex64) -> Self {
        Self {
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
            z,
        }
    }

    /// Number of nonzero terms when the series terminates.
    pub fn terminating_terms(&self) -> Option<usize> {
        let degree = |x: Complex64| {
            (x.im == 0.0 && x.re <= 0.0 && x.re.fract() == 0.0).then(|| (-x.re) as usize)
        };
        match (degree(self.alpha), degree(self.beta)) {
            (Some(a), Some(b)) => Some(a.min(b) + 1),
            (Some(a), None) | (None, Some(a)) => Some(a + 1),
            (None, None) => None,
        }
    }

    fn shifted(&self) -> Self {
        let one = Complex64::new(1.0, 0.0);
        Self {
            alpha: self.alpha + one,
            beta: self.beta + one,
            gamma: self.gamma + one,
            z: self.z,
        }
    }
}

/// Coefficients `c_k` of `Σ c_k z^k`, stopping after `terms` entries.
fn coefficients(p: &HypParams, terms: usize) -> Result<Vec<Complex64>> {
    let mut out = Vec::with_capacity(terms);
    let mut c = Complex64::new(1.0, 0.0);
    out.push(c);
    for k in 0..terms.saturating_sub(1) {
        let kf = k as f64;
        let denom = (p.gamma + kf) * (kf + 1.0);
        if denom == Complex64::new(0.0, 0.0) {
            return Err(Error::GammaPole { term: k + 1 });
        }
        c = c * (p.alpha + kf) * (p.beta + kf) / denom;
        out.push(c);
    }
    Ok(out)
}

/// Polynomial coefficients of a terminating series.
pub fn hypergeometric_polynomial(p: &HypParams) -> Result<Vec<Complex64>> {
    let terms = p.terminating_terms().ok_or_else(|| Error::Divergence {
        modulus: p.z.norm(),
    })?;
    coefficients(p, terms)
}

/// `Σ c_k z^k` accumulated left to right.
pub fn eval_polynomial(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for c in coeffs {
        acc += c * power;
        power *= z;
    }
    acc
}

/// `d/dz Σ c_k z^k` accumulated left to right.
pub fn eval_polynomial_derivative(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for (k, c) in coeffs.iter().enumerate().skip(1) {
        acc += c * power * k as f64;
        power *= z;
    }
    acc
}

pub fn hypergeometric_f(p: &HypParams) -> Result<Complex64> {
    if let Some(terms) = p.terminating_terms() {
        return Ok(eval_polynomial(&coefficients(p, terms)?, p.z));
    }
    if p.z.norm() >= 1.0 {
        return Err(Error::Divergence {
            modulus: p.z.norm(),
        });
    }
    let mut acc = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let denom = (p.gamma + kf) * (kf + 1.0);
        if denom == Complex64::new(0.0, 0.0) {
            return Err(Error::GammaPole { term: k + 1 });
        }
        term = term * (p.alpha + kf) * (p.beta + kf) / denom * p.z;
        acc += term;
        if term.norm() <= f64::EPSILON * acc.norm() {
            return Ok(acc);
        }
    }
    Err(Error::Divergence {
        modulus: p.z.norm(),
    })
}

/// `dF/dz = (αβ/γ) F(α+1, β+1; γ+1; z)`.
pub fn hypergeometric_df(p: &HypParams) -> Result<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    if p.alpha == zero || p.beta == zero {
        return Ok(zero);
    }
    if p.gamma == zero {
        return Err(Error::GammaPole { term: 0 });
    }
    if let Some(terms) = p.terminating_terms() {
        return Ok(eval_polynomial_derivative(&coefficients(p, terms)?, p.z));
    }
    Ok(p.alpha * p.beta / p.gamma * hypergeometric_f(&p.shifted())?)
}
