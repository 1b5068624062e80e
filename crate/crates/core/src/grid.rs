//! Uniform sampling grids on the unit interval and the certification
//! metadata attached to every grid-based check.

use serde::{Deserialize, Serialize};

use crate::error::{param, Result};

/// Tolerance for operators given in closed form.
pub const CLOSED_FORM_TOL: f64 = 1e-9;
/// Tolerance for tabulated (interpolated) operators.
pub const TABULATED_TOL: f64 = 1e-6;
/// Points per axis for two-dimensional sweeps.
pub const DEFAULT_GRID: usize = 101;
/// Points per axis for three-dimensional sweeps (EP, RP, LIA).
pub const DEFAULT_CUBE_GRID: usize = 41;
/// Smallest grid accepted by the property checkers.
pub const MIN_GRID: usize = 11;

/// `points` equally spaced values in [0, 1], endpoints included exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    points: usize,
}

impl Grid {
    pub fn new(points: usize) -> Result<Self> {
        if points < 2 {
            return Err(param(format!("a grid needs at least 2 points, got {points}")));
        }
        Ok(Grid { points })
    }

    /// Like [`Grid::new`] but enforces the minimum resolution of the checkers.
    pub fn checked(points: usize) -> Result<Self> {
        if points < MIN_GRID {
            return Err(param(format!(
                "grid checks need at least {MIN_GRID} points per axis, got {points}"
            )));
        }
        Grid::new(points)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn value(&self, i: usize) -> f64 {
        let last = self.points - 1;
        if i >= last {
            1.0
        } else {
            i as f64 / last as f64
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.value(i)).collect()
    }

    pub fn step(&self) -> f64 {
        1.0 / (self.points - 1) as f64
    }
}

/// How a property was established.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum Certification {
    /// Known from the closed form of a catalog operator.
    Analytic,
    /// Checked exhaustively on a grid of `points` per axis in `dims`
    /// dimensions, plus `random_samples` seeded random points.
    GridChecked {
        points: usize,
        dims: usize,
        tolerance: f64,
        random_samples: usize,
    },
    /// Checked at the specific sets supplied (engine admission).
    Instance,
}

impl Certification {
    pub fn grid(points: usize, dims: usize, tolerance: f64) -> Self {
        Certification::GridChecked {
            points,
            dims,
            tolerance,
            random_samples: 0,
        }
    }
}

/// Tracks the largest violation seen during a sweep.
#[derive(Debug, Default)]
pub(crate) struct WorstGap {
    gap: f64,
    witness: Option<crate::error::Witness>,
}

impl WorstGap {
    pub fn observe(&mut self, point: &[f64], lhs: f64, rhs: f64, gap: f64) {
        let gap = if gap.is_nan() { f64::INFINITY } else { gap };
        if gap > self.gap {
            self.gap = gap;
            self.witness = Some(crate::error::Witness::new(point, lhs, rhs));
        }
    }

    pub fn exceeds(&self, tol: f64) -> bool {
        self.gap > tol
    }

    pub fn into_witness(self, tol: f64) -> Option<crate::error::Witness> {
        if self.gap > tol {
            self.witness
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_are_exact() {
        let g = Grid::new(41).unwrap();
        assert_eq!(g.value(0), 0.0);
        assert_eq!(g.value(40), 1.0);
        assert_eq!(g.value(32), 0.8);
        assert_eq!(Grid::new(11).unwrap().value(3), 0.3);
    }

    #[test]
    fn rejects_tiny_grids() {
        assert!(Grid::new(1).is_err());
        assert!(Grid::checked(10).is_err());
        assert!(Grid::checked(11).is_ok());
    }
}
