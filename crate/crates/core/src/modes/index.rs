use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Spatial parity class of a mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// `P = (−1)^{j+1}`
    Magnetic,
    /// `P = (−1)^j`
    Electric,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Magnetic => "magnetic",
            Parity::Electric => "electric",
        }
    }

    /// Eigenvalue of spatial inversion for total angular momentum `j`.
    pub fn eigenvalue(self, j: u32) -> i32 {
        let base = if j.is_multiple_of(2) { 1 } else { -1 };
        match self {
            Parity::Magnetic => -base,
            Parity::Electric => base,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `ω = n + 1 + j`.
pub fn spectrum(j: i64, n: i64) -> Result<i64> {
    if j < 1 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "j = {j}: modes need j >= 1 (the D_{{±1}} columns vanish at j = 0)"
        )));
    }
    if n < 0 {
        return Err(Error::InvalidQuantumNumbers(format!("n = {n} must be >= 0")));
    }
    Ok(n + 1 + j)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModeIndex {
    pub j: u32,
    pub m: i32,
    pub n: u32,
    pub parity: Parity,
}

impl ModeIndex {
    pub fn new(j: i64, m: i64, n: i64, parity: Parity) -> Result<Self> {
        spectrum(j, n)?;
        if j > i64::from(crate::special_fn::MAX_J) {
            return Err(Error::InvalidQuantumNumbers(format!(
                "j = {j} exceeds the supported range j <= {}",
                crate::special_fn::MAX_J
            )));
        }
        if m.abs() > j {
            return Err(Error::InvalidQuantumNumbers(format!(
                "|m| = {} must not exceed j = {j}",
                m.abs()
            )));
        }
        if n > 1000 {
            return Err(Error::InvalidQuantumNumbers(format!(
                "n = {n} is above the supported radial degree 1000"
            )));
        }
        Ok(Self {
            j: j as u32,
            m: m as i32,
            n: n as u32,
            parity,
        })
    }

    pub fn omega(&self) -> u32 {
        self.n + 1 + self.j
    }

    /// Radial coupling `b_ν = √(j(j+1)/2)`.
    pub fn b_nu(&self) -> f64 {
        b_nu(self.j)
    }

    pub fn with_parity(self, parity: Parity) -> Self {
        Self { parity, ..self }
    }
}

pub(crate) fn b_nu(j: u32) -> f64 {
    let j = j as f64;
    (j * (j + 1.0) / 2.0).sqrt()
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "j={} m={} n={} {} (ω={})",
            self.j,
            self.m,
            self.n,
            self.parity,
            self.omega()
        )
    }
}
