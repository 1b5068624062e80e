//! Grid-based classification of aggregation functions.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::aggregation::Aggregation;
use crate::algebra::negation::Negation;
use crate::error::{param, Result, Witness};
use crate::grid::{Certification, Grid, WorstGap, DEFAULT_GRID, MIN_GRID};

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    /// Points per axis for two-dimensional checks.
    pub grid: usize,
    /// Points per axis for the associativity cube.
    pub cube_grid: usize,
    /// Defaults to the operator's own tolerance.
    pub tol: Option<f64>,
    /// Extra random points for the divisor searches.
    pub random_samples: usize,
    pub seed: u64,
    /// Negation for the excluded-middle check.
    pub lem_negation: Option<Negation>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            grid: DEFAULT_GRID,
            cube_grid: DEFAULT_GRID,
            tol: None,
            random_samples: 10_000,
            seed: 0x5eed,
            lem_negation: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeutralElement {
    pub side: Side,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub is_conjunctor: bool,
    pub is_disjunctor: bool,
    pub is_commutative: bool,
    pub is_associative: bool,
    pub neutral_elements: Vec<NeutralElement>,
    pub has_zero_divisors: bool,
    pub has_one_divisors: bool,
    pub satisfies_lem_with: Option<Negation>,
    /// Points per axis of the associativity cube.
    pub cube_points: usize,
    /// Counterexamples for failed properties and examples of divisors.
    pub witnesses: BTreeMap<String, Witness>,
    pub certification: Certification,
}

impl ClassificationRecord {
    /// Rejects internally contradictory records.
    pub fn validate(&self) -> Result<()> {
        if self.is_conjunctor && self.is_disjunctor {
            return Err(param(
                "a record cannot be both a conjunctor and a disjunctor",
            ));
        }
        Ok(())
    }

    pub fn two_sided_neutral(&self) -> Option<f64> {
        self.neutral_elements
            .iter()
            .find(|e| e.side == Side::TwoSided)
            .map(|e| e.value)
    }

    pub fn has_left_neutral(&self, e: f64) -> bool {
        self.neutral_elements
            .iter()
            .any(|n| n.value == e && matches!(n.side, Side::Left | Side::TwoSided))
    }
}

pub fn classify(a: &Aggregation, opts: &ClassifyOptions) -> Result<ClassificationRecord> {
    let grid = Grid::checked(opts.grid)?;
    let cube = Grid::checked(opts.cube_grid)?;
    let tol = opts.tol.unwrap_or_else(|| a.tolerance());
    let xs = grid.values();
    let mut witnesses = BTreeMap::new();

    let near = |u: f64, v: f64| (u - v).abs() <= tol;
    let is_conjunctor = near(a.value(1.0, 0.0), 0.0) && near(a.value(0.0, 1.0), 0.0);
    let is_disjunctor = near(a.value(1.0, 0.0), 1.0) && near(a.value(0.0, 1.0), 1.0);

    let mut comm = WorstGap::default();
    for &x in &xs {
        for &y in &xs {
            let (l, r) = (a.value(x, y), a.value(y, x));
            comm.observe(&[x, y], l, r, (l - r).abs());
        }
    }
    let is_commutative = !comm.exceeds(tol);
    if let Some(w) = comm.into_witness(tol) {
        witnesses.insert("commutativity".into(), w);
    }

    let assoc = associativity_gap(a, cube);
    let is_associative = !assoc.exceeds(tol);
    if let Some(w) = assoc.into_witness(tol) {
        witnesses.insert("associativity".into(), w);
    }

    let neutral_elements = neutral_elements(a, &xs, tol);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(xs.len() * xs.len() + opts.random_samples);
    for &x in &xs {
        for &y in &xs {
            samples.push((x, y));
        }
    }
    for _ in 0..opts.random_samples {
        samples.push((rng.gen::<f64>(), rng.gen::<f64>()));
    }
    // zero divisors need both arguments in (0, 1]; one divisors in [0, 1)
    let zero = samples
        .iter()
        .map(|&(x, y)| (1.0 - x, 1.0 - y))
        .chain(samples.iter().copied())
        .filter(|&(x, y)| x > 0.0 && y > 0.0)
        .find(|&(x, y)| a.value(x, y) <= tol);
    if let Some((x, y)) = zero {
        witnesses.insert("zero-divisor".into(), Witness::new(&[x, y], a.value(x, y), 0.0));
    }
    let one = samples
        .iter()
        .copied()
        .filter(|&(x, y)| x < 1.0 && y < 1.0)
        .find(|&(x, y)| a.value(x, y) >= 1.0 - tol);
    if let Some((x, y)) = one {
        witnesses.insert("one-divisor".into(), Witness::new(&[x, y], a.value(x, y), 1.0));
    }

    let satisfies_lem_with = match &opts.lem_negation {
        Some(n) => {
            let mut lem = WorstGap::default();
            for &x in &xs {
                let v = a.value(n.value(x), x);
                lem.observe(&[x], v, 1.0, 1.0 - v);
            }
            if let Some(w) = lem.into_witness(tol) {
                witnesses.insert("excluded-middle".into(), w);
                None
            } else {
                Some(n.clone())
            }
        }
        None => None,
    };

    let record = ClassificationRecord {
        is_conjunctor,
        is_disjunctor,
        is_commutative,
        is_associative,
        neutral_elements,
        has_zero_divisors: zero.is_some(),
        has_one_divisors: one.is_some(),
        satisfies_lem_with,
        cube_points: cube.points(),
        witnesses,
        certification: Certification::GridChecked {
            points: grid.points(),
            dims: 2,
            tolerance: tol,
            random_samples: opts.random_samples,
        },
    };
    record.validate()?;
    Ok(record)
}

/// Largest `|A(x, A(y, z)) - A(A(x, y), z)|` over a cube grid.
pub(crate) fn associativity_gap(a: &Aggregation, cube: Grid) -> WorstGap {
    let zs = cube.values();
    let table: Vec<Vec<f64>> = zs
        .iter()
        .map(|&x| zs.iter().map(|&y| a.value(x, y)).collect())
        .collect();
    let mut worst = WorstGap::default();
    for (i, &x) in zs.iter().enumerate() {
        for (j, &y) in zs.iter().enumerate() {
            let xy = table[i][j];
            for (k, &z) in zs.iter().enumerate() {
                let lhs = a.value(x, table[j][k]);
                let rhs = a.value(xy, z);
                worst.observe(&[x, y, z], lhs, rhs, (lhs - rhs).abs());
            }
        }
    }
    worst
}

pub fn is_grid_associative(a: &Aggregation, points: usize, tol: f64) -> (bool, Option<Witness>) {
    let cube = Grid::new(points.max(2)).expect("valid grid");
    let gap = associativity_gap(a, cube);
    (!gap.exceeds(tol), gap.into_witness(tol))
}

pub fn is_grid_commutative(a: &Aggregation, points: usize, tol: f64) -> (bool, Option<Witness>) {
    let xs = Grid::new(points.max(2)).expect("valid grid").values();
    let mut worst = WorstGap::default();
    for &x in &xs {
        for &y in &xs {
            let (l, r) = (a.value(x, y), a.value(y, x));
            worst.observe(&[x, y], l, r, (l - r).abs());
        }
    }
    (!worst.exceeds(tol), worst.into_witness(tol))
}

fn neutral_elements(a: &Aggregation, xs: &[f64], tol: f64) -> Vec<NeutralElement> {
    let mut candidates: Vec<f64> = xs.to_vec();
    if let Some(e) = a.declared_neutral() {
        if !candidates.contains(&e) {
            candidates.push(e);
        }
    }
    let mut out = Vec::new();
    for e in candidates {
        let left = xs.iter().all(|&x| (a.value(e, x) - x).abs() <= tol);
        let right = xs.iter().all(|&x| (a.value(x, e) - x).abs() <= tol);
        let side = match (left, right) {
            (true, true) => Side::TwoSided,
            (true, false) => Side::Left,
            (false, true) => Side::Right,
            (false, false) => continue,
        };
        out.push(NeutralElement { side, value: e });
    }
    out
}

/// Checks the copula conditions: uniform margins and the 2-increasing
/// inequality on every elementary grid cell (sums of cells cover every
/// grid rectangle).
pub fn verify_copula(a: &Aggregation, points: usize, tol: f64) -> std::result::Result<(), Witness> {
    let points = points.max(MIN_GRID);
    let xs = Grid::new(points).expect("valid grid").values();
    for &x in &xs {
        if (a.value(x, 1.0) - x).abs() > tol {
            return Err(Witness::new(&[x, 1.0], a.value(x, 1.0), x));
        }
        if (a.value(1.0, x) - x).abs() > tol {
            return Err(Witness::new(&[1.0, x], a.value(1.0, x), x));
        }
    }
    let v: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| xs.iter().map(|&y| a.value(x, y)).collect())
        .collect();
    let mut worst = WorstGap::default();
    for i in 0..xs.len() - 1 {
        for j in 0..xs.len() - 1 {
            let mass = v[i][j] - v[i][j + 1] - v[i + 1][j] + v[i + 1][j + 1];
            worst.observe(&[xs[i], xs[j], xs[i + 1], xs[j + 1]], mass, 0.0, -mass);
        }
    }
    match worst.into_witness(tol) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}
