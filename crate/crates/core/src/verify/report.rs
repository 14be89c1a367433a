use serde::Serialize;

use crate::geometry::SpacetimePoint;

/// Maximum and RMS modulus of one equation's residual over a point set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualReport {
    pub equation_id: String,
    pub max_abs: f64,
    pub rms: f64,
    pub worst_point: SpacetimePoint,
    pub n_points: usize,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualReport {
    /// Reduce `(point, |residual|)` samples. The worst point is the first
    /// maximum in sample order; squares are summed in ascending order so the
    /// RMS does not depend on how the samples were produced. A NaN residual
    /// makes the report fail.
    pub fn from_samples(
        equation_id: impl Into<String>,
        samples: &[(SpacetimePoint, f64)],
        tolerance: f64,
    ) -> Self {
        let mut max_abs = 0.0f64;
        let mut worst = samples.first().map(|s| s.0);
        for (p, v) in samples {
            if v.is_nan() || *v > max_abs {
                max_abs = *v;
                worst = Some(*p);
                if v.is_nan() {
                    break;
                }
            }
        }
        let mut squares: Vec<f64> = samples.iter().map(|(_, v)| v * v).collect();
        squares.sort_by(f64::total_cmp);
        let rms = if samples.is_empty() {
            0.0
        } else {
            (squares.iter().sum::<f64>() / samples.len() as f64).sqrt()
        };
        let worst_point = worst.unwrap_or(SpacetimePoint {
            t: 0.0,
            r: std::f64::consts::FRAC_PI_2,
            theta: std::f64::consts::FRAC_PI_2,
            phi: 0.0,
        });
        Self {
            equation_id: equation_id.into(),
            max_abs,
            rms,
            worst_point,
            n_points: samples.len(),
            tolerance,
            pass: max_abs <= tolerance,
        }
    }
}
