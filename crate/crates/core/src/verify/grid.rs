use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::SpacetimePoint;

/// Sampling grid and finite-difference settings for the residual suites.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    pub t_range: [f64; 2],
    pub r_range: [f64; 2],
    pub theta_range: [f64; 2],
    pub n_t: usize,
    pub n_r: usize,
    pub n_theta: usize,
    pub n_phi: usize,
    pub fd_step: f64,
    /// Order of the central stencils (2, 4, 6 or 8).
    pub fd_accuracy: u8,
}

impl Default for GridSpec {
    /// 40×40 `(t, r)` grid with 8th-order stencils at step `5e−3`.
    fn default() -> Self {
        Self {
            t_range: [-2.0, 2.0],
            r_range: [0.05, PI - 0.05],
            theta_range: [0.05, PI - 0.05],
            n_t: 40,
            n_r: 40,
            n_theta: 1,
            n_phi: 1,
            fd_step: 5e-3,
            fd_accuracy: 8,
        }
    }
}

pub fn linspace(range: [f64; 2], n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![range[0]],
        _ => (0..n)
            .map(|k| range[0] + (range[1] - range[0]) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}

impl GridSpec {
    /// Settings of the four-dimensional Maxwell check: second order, `h = 1e−4`.
    pub fn maxwell() -> Self {
        Self {
            fd_step: 1e-4,
            fd_accuracy: 2,
            ..Self::default()
        }
    }

    /// Distance the widest stencil reaches from a grid point.
    pub fn stencil_reach(&self) -> f64 {
        self.fd_step * f64::from(self.fd_accuracy / 2)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGrid(msg));
        if !(self.t_range[0].is_finite() && self.t_range[1].is_finite())
            || self.t_range[0] > self.t_range[1]
        {
            return bad(format!("t range {:?} must be finite and ordered", self.t_range));
        }
        for (name, range) in [("r", self.r_range), ("theta", self.theta_range)] {
            if !(range[0] > 0.0 && range[1] < PI && range[0] <= range[1]) {
                return bad(format!(
                    "{name} range {range:?} must be ordered and strictly inside (0, π)"
                ));
            }
        }
        if [self.n_t, self.n_r, self.n_theta, self.n_phi].contains(&0) {
            return bad("point counts must be at least 1".into());
        }
        if !(self.fd_step > 0.0 && self.fd_step.is_finite()) {
            return bad(format!("fd step {} must be positive", self.fd_step));
        }
        if ![2, 4, 6, 8].contains(&self.fd_accuracy) {
            return bad(format!("fd accuracy {} must be 2, 4, 6 or 8", self.fd_accuracy));
        }
        let reach = self.stencil_reach();
        let margin = [self.r_range[0], PI - self.r_range[1], self.theta_range[0], PI - self.theta_range[1]]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if reach >= margin {
            return bad(format!(
                "stencil reach {reach} is not below the grid margin {margin}"
            ));
        }
        Ok(())
    }

    pub fn t_values(&self) -> Vec<f64> {
        linspace(self.t_range, self.n_t)
    }

    pub fn r_values(&self) -> Vec<f64> {
        linspace(self.r_range, self.n_r)
    }

    pub fn theta_values(&self) -> Vec<f64> {
        linspace(self.theta_range, self.n_theta)
    }

    /// `φ_k = 2πk/n_φ`.
    pub fn phi_values(&self) -> Vec<f64> {
        (0..self.n_phi)
            .map(|k| 2.0 * PI * k as f64 / self.n_phi as f64)
            .collect()
    }

    /// `(t, r)` nodes, `t`-major.
    pub fn tr_points(&self) -> Vec<(f64, f64)> {
        let rs = self.r_values();
        self.t_values()
            .into_iter()
            .flat_map(|t| rs.iter().map(move |&r| (t, r)))
            .collect()
    }

    /// Full 4-D nodes in `(t, r, θ, φ)` lexicographic order.
    pub fn points(&self) -> Result<Vec<SpacetimePoint>> {
        let (rs, ths, phs) = (self.r_values(), self.theta_values(), self.phi_values());
        let mut out = Vec::with_capacity(self.n_t * self.n_r * self.n_theta * self.n_phi);
        for t in self.t_values() {
            for &r in &rs {
                for &th in &ths {
                    for &ph in &phs {
                        out.push(SpacetimePoint::new(t, r, th, ph)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Uniformly drawn interior points from a seeded generator.
    pub fn random_points(&self, n: usize, seed: u64) -> Result<Vec<SpacetimePoint>> {
        self.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |range: [f64; 2]| {
            if range[0] == range[1] {
                range[0]
            } else {
                rng.gen_range(range[0]..range[1])
            }
        };
        (0..n)
            .map(|_| {
                let t = draw(self.t_range);
                let r = draw(self.r_range);
                let th = draw(self.theta_range);
                let ph = draw([0.0, 2.0 * PI]);
                SpacetimePoint::new(t, r, th, ph)
            })
            .collect()
    }
}
