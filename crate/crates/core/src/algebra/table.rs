use serde::{Deserialize, Serialize};

use crate::error::{param, Result};

/// Piecewise-linear function on [0, 1] given by its values at `grid`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1D {
    grid: Vec<f64>,
    values: Vec<f64>,
}

/// Bilinear function on [0, 1]^2; `values[i][j]` is the value at
/// `(grid[i], grid[j])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table2D {
    grid: Vec<f64>,
    values: Vec<Vec<f64>>,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return Err(param("table grid needs at least two points"));
    }
    if grid[0] != 0.0 || grid[grid.len() - 1] != 1.0 {
        return Err(param("table grid must start at 0 and end at 1"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(param("table grid must be strictly increasing"));
    }
    Ok(())
}

/// Index `k` with `grid[k] <= x <= grid[k + 1]` and the interpolation weight.
fn locate(grid: &[f64], x: f64) -> (usize, f64) {
    let k = grid.partition_point(|&g| g <= x).clamp(1, grid.len() - 1) - 1;
    let t = (x - grid[k]) / (grid[k + 1] - grid[k]);
    (k, t.clamp(0.0, 1.0))
}

impl Table1D {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        check_grid(&grid)?;
        if values.len() != grid.len() {
            return Err(param(format!(
                "table has {} grid points but {} values",
                grid.len(),
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(param("table values must be finite"));
        }
        Ok(Table1D { grid, values })
    }

    /// Samples `f` on a uniform grid of `points` points.
    pub fn sample(points: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let grid = crate::grid::Grid::new(points)?.values();
        let values = grid.iter().map(|&x| f(x)).collect();
        Table1D::new(grid, values)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (k, t) = locate(&self.grid, x);
        if t == 0.0 {
            return self.values[k];
        }
        if t == 1.0 {
            return self.values[k + 1];
        }
        self.values[k] + t * (self.values[k + 1] - self.values[k])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] > w[0])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] < w[0])
    }

    pub fn is_non_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] <= w[0])
    }

    /// Inverse of a strictly monotone table, clamping `v` into its range.
    pub fn inverse(&self, v: f64) -> f64 {
        let increasing = self.values[self.values.len() - 1] > self.values[0];
        let n = self.values.len();
        // positions where the value first reaches v
        let k = if increasing {
            self.values.partition_point(|&w| w < v)
        } else {
            self.values.partition_point(|&w| w > v)
        };
        if k == 0 {
            return self.grid[0];
        }
        if k >= n {
            return self.grid[n - 1];
        }
        let (a, b) = (self.values[k - 1], self.values[k]);
        let t = (v - a) / (b - a);
        self.grid[k - 1] + t * (self.grid[k] - self.grid[k - 1])
    }
}

impl Table2D {
    pub fn new(grid: Vec<f64>, values: Vec<Vec<f64>>) -> Result<Self> {
        check_grid(&grid)?;
        if values.len() != grid.len() || values.iter().any(|row| row.len() != grid.len()) {
            return Err(param("table values must be a square matrix matching the grid"));
        }
        if values.iter().flatten().any(|v| !v.is_finite() || !(0.0..=1.0).contains(v)) {
            return Err(param("tabulated operator values must lie in [0, 1]"));
        }
        Ok(Table2D { grid, values })
    }

    pub fn sample(points: usize, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let grid = crate::grid::Grid::new(points)?.values();
        let values = grid
            .iter()
            .map(|&x| grid.iter().map(|&y| f(x, y)).collect())
            .collect();
        Table2D::new(grid, values)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let (i, s) = locate(&self.grid, x);
        let (j, t) = locate(&self.grid, y);
        let v = &self.values;
        let at = |a: usize, b: usize| v[a][b];
        if s == 0.0 && t == 0.0 {
            return at(i, j);
        }
        let i1 = (i + 1).min(self.grid.len() - 1);
        let j1 = (j + 1).min(self.grid.len() - 1);
        let low = at(i, j) + t * (at(i, j1) - at(i, j));
        let high = at(i1, j) + t * (at(i1, j1) - at(i1, j));
        low + s * (high - low)
    }
}
