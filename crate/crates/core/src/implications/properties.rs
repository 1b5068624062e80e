use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Implication;
use crate::algebra::{Aggregation, Negation};
use crate::error::{Result, Witness};
use crate::grid::{Certification, Grid, WorstGap, DEFAULT_CUBE_GRID, DEFAULT_GRID};

/// Step used to probe right-continuity in the second argument.
const PROBE_STEP: f64 = 1e-9;
/// A jump above this over [`PROBE_STEP`] counts as a discontinuity.
const JUMP_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone)]
pub struct PropertyOptions {
    /// Points per axis for two-dimensional properties.
    pub grid: usize,
    /// Points per axis for EP, RP and LIA.
    pub cube_grid: usize,
    /// Defaults to the implication's own tolerance.
    pub tol: Option<f64>,
    /// Enables CP(N).
    pub negation: Option<Negation>,
    /// Enables RP(A) and LIA(A).
    pub aggregation: Option<Aggregation>,
    /// Enables OP_U(e).
    pub neutral: Option<f64>,
}

impl Default for PropertyOptions {
    fn default() -> Self {
        PropertyOptions {
            grid: DEFAULT_GRID,
            cube_grid: DEFAULT_CUBE_GRID,
            tol: None,
            negation: None,
            aggregation: None,
            neutral: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub certification: Certification,
}

impl PropertyResult {
    fn from_gap(gap: WorstGap, tol: f64, certification: Certification) -> Self {
        let witness = gap.into_witness(tol);
        PropertyResult {
            holds: witness.is_none(),
            witness,
            certification,
        }
    }
}

/// Results keyed by property name: `I1`..`I5`, `NP`, `IP`, `EP`, `OP`,
/// `OP_U`, `CP`, `RP`, `LIA` and `RC2` (right-continuity in `y`).
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct PropertyReport {
    pub properties: BTreeMap<String, PropertyResult>,
}

impl PropertyReport {
    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.get(name)
    }

    /// `Some(true)` when the property was checked and holds.
    pub fn holds(&self, name: &str) -> Option<bool> {
        self.get(name).map(|p| p.holds)
    }
}

pub fn check_properties(i: &Implication, opts: &PropertyOptions) -> Result<PropertyReport> {
    let grid = Grid::checked(opts.grid)?;
    let cube = Grid::checked(opts.cube_grid)?;
    let tol = opts.tol.unwrap_or_else(|| i.tolerance());
    let xs = grid.values();
    let flat = Certification::grid(grid.points(), 2, tol);
    let solid = Certification::grid(cube.points(), 3, tol);
    let mut report = PropertyReport::default();
    let mut put = |name: &str, r: PropertyResult| {
        report.properties.insert(name.to_string(), r);
    };

    let violation = i.axiom_violation(grid.points());
    for axiom in ["I1", "I2", "I3", "I4", "I5"] {
        let witness = violation
            .as_ref()
            .filter(|(a, _)| *a == axiom)
            .map(|(_, w)| w.clone());
        let certification = if matches!(axiom, "I1" | "I2") {
            flat.clone()
        } else {
            Certification::Analytic
        };
        // the sweep stops at the first failing axiom; later ones are unknown
        put(
            axiom,
            PropertyResult {
                holds: witness.is_none(),
                witness,
                certification,
            },
        );
    }

    let mut np = WorstGap::default();
    let mut ip = WorstGap::default();
    for &y in &xs {
        let v = i.value(1.0, y);
        np.observe(&[1.0, y], v, y, (v - y).abs());
        let d = i.value(y, y);
        ip.observe(&[y, y], d, 1.0, 1.0 - d);
    }
    put("NP", PropertyResult::from_gap(np, tol, flat.clone()));
    put("IP", PropertyResult::from_gap(ip, tol, flat.clone()));

    put("OP", ordering(i, &xs, 1.0, tol, flat.clone()));
    if let Some(e) = opts.neutral {
        put("OP_U", ordering(i, &xs, e, tol, flat.clone()));
    }

    if let Some(n) = &opts.negation {
        let mut cp = WorstGap::default();
        for &x in &xs {
            for &y in &xs {
                let (l, r) = (i.value(x, y), i.value(n.value(y), n.value(x)));
                cp.observe(&[x, y], l, r, (l - r).abs());
            }
        }
        put("CP", PropertyResult::from_gap(cp, tol, flat.clone()));
    }

    put("RC2", right_continuity(i, &xs, flat.clone()));

    let zs = cube.values();
    let mut ep = WorstGap::default();
    for &x in &zs {
        for &y in &zs {
            for &z in &zs {
                let (l, r) = (i.value(x, i.value(y, z)), i.value(y, i.value(x, z)));
                ep.observe(&[x, y, z], l, r, (l - r).abs());
            }
        }
    }
    put("EP", PropertyResult::from_gap(ep, tol, solid.clone()));

    if let Some(a) = &opts.aggregation {
        put("RP", residuation(i, a, &zs, tol, solid.clone()));
        put("LIA", lia_on(i, a, &zs, tol, solid.clone()));
    }
    Ok(report)
}

/// LIA on a `points`-per-axis cube grid.
pub fn check_lia(i: &Implication, a: &Aggregation, points: usize, tol: f64) -> Result<PropertyResult> {
    let cube = Grid::checked(points)?;
    Ok(lia_on(
        i,
        a,
        &cube.values(),
        tol,
        Certification::grid(cube.points(), 3, tol),
    ))
}

/// Both sides of the law of importation at one point.
pub fn lia_sides(i: &Implication, a: &Aggregation, x: f64, y: f64, z: f64) -> (f64, f64) {
    (i.value(a.value(x, y), z), i.value(x, i.value(y, z)))
}

fn lia_on(i: &Implication, a: &Aggregation, zs: &[f64], tol: f64, cert: Certification) -> PropertyResult {
    let inner: Vec<Vec<f64>> = zs
        .iter()
        .map(|&y| zs.iter().map(|&z| i.value(y, z)).collect())
        .collect();
    let mut gap = WorstGap::default();
    for &x in zs {
        for (iy, &y) in zs.iter().enumerate() {
            let axy = a.value(x, y);
            for (iz, &z) in zs.iter().enumerate() {
                let l = i.value(axy, z);
                let r = i.value(x, inner[iy][iz]);
                gap.observe(&[x, y, z], l, r, (l - r).abs());
            }
        }
    }
    PropertyResult::from_gap(gap, tol, cert)
}

/// `I(x, y) >= e` exactly when `x <= y`; `e = 1` is plain OP.
fn ordering(i: &Implication, xs: &[f64], e: f64, tol: f64, cert: Certification) -> PropertyResult {
    let mut gap = WorstGap::default();
    for &x in xs {
        for &y in xs {
            let v = i.value(x, y);
            if x <= y {
                gap.observe(&[x, y], v, e, e - v);
            } else if v >= e - tol {
                gap.observe(&[x, y], v, e, 1.0);
            }
        }
    }
    PropertyResult::from_gap(gap, tol, cert)
}

/// OP on a `points`-per-axis grid.
pub(crate) fn ordering_holds(i: &Implication, points: usize) -> bool {
    let xs = Grid::new(points).expect("valid grid").values();
    ordering(i, &xs, 1.0, i.tolerance(), Certification::Analytic).holds
}

/// One planar property (`NP`, `OP` or `RC2`) on a `points`-per-axis grid.
pub(crate) fn planar_property(i: &Implication, name: &str, points: usize) -> Result<PropertyResult> {
    let grid = Grid::checked(points)?;
    let xs = grid.values();
    let tol = i.tolerance();
    let cert = Certification::grid(points, 2, tol);
    Ok(match name {
        "NP" => {
            let mut np = WorstGap::default();
            for &y in &xs {
                let v = i.value(1.0, y);
                np.observe(&[1.0, y], v, y, (v - y).abs());
            }
            PropertyResult::from_gap(np, tol, cert)
        }
        "OP" => ordering(i, &xs, 1.0, tol, cert),
        "RC2" => right_continuity(i, &xs, cert),
        other => return Err(crate::error::param(format!("no planar property `{other}`"))),
    })
}

/// `A(x, y) <= z` exactly when `x <= I(y, z)`.
fn residuation(
    i: &Implication,
    a: &Aggregation,
    zs: &[f64],
    tol: f64,
    cert: Certification,
) -> PropertyResult {
    let mut gap = WorstGap::default();
    for &x in zs {
        for &y in zs {
            let axy = a.value(x, y);
            for &z in zs {
                let iyz = i.value(y, z);
                let left = axy <= z + tol;
                let right = x <= iyz + tol;
                if left && !right {
                    gap.observe(&[x, y, z], x, iyz, x - iyz);
                } else if !left && right {
                    gap.observe(&[x, y, z], axy, z, axy - z);
                }
            }
        }
    }
    PropertyResult::from_gap(gap, tol, cert)
}

/// Grid heuristic: compares `I(x, y)` with `I(x, y + h)` for a tiny `h`.
fn right_continuity(i: &Implication, xs: &[f64], cert: Certification) -> PropertyResult {
    let mut gap = WorstGap::default();
    for &x in xs {
        for &y in xs.iter().filter(|&&y| y < 1.0) {
            let (l, r) = (i.value(x, y), i.value(x, y + PROBE_STEP));
            gap.observe(&[x, y], l, r, (r - l).abs());
        }
    }
    PropertyResult::from_gap(gap, JUMP_THRESHOLD, cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> PropertyOptions {
        PropertyOptions {
            grid: 41,
            cube_grid: 21,
            ..PropertyOptions::default()
        }
    }

    #[test]
    fn kleene_dienes_profile() {
        let r = check_properties(&Implication::KleeneDienes, &opts()).unwrap();
        assert_eq!(r.holds("NP"), Some(true));
        assert_eq!(r.holds("EP"), Some(true));
        let op = r.get("OP").unwrap();
        assert!(!op.holds);
        let w = op.witness.as_ref().unwrap();
        assert_eq!(w.point, vec![0.5, 0.5]);
        assert_eq!(w.lhs, 0.5);
        assert!(r.holds("LIA").is_none());
    }

    #[test]
    fn lukasiewicz_profile() {
        let o = PropertyOptions {
            negation: Some(Negation::Standard),
            aggregation: Some(Aggregation::Lukasiewicz),
            ..opts()
        };
        let r = check_properties(&Implication::Lukasiewicz, &o).unwrap();
        for p in ["I1", "I2", "I3", "I4", "I5", "NP", "IP", "EP", "OP", "CP", "RC2", "RP", "LIA"] {
            assert_eq!(r.holds(p), Some(true), "{p}");
        }
    }

    #[test]
    fn kleene_dienes_is_not_adjoint_to_min() {
        let o = PropertyOptions {
            aggregation: Some(Aggregation::Minimum),
            ..opts()
        };
        let r = check_properties(&Implication::KleeneDienes, &o).unwrap();
        assert_eq!(r.holds("RP"), Some(false));
        assert_eq!(r.holds("LIA"), Some(true));
        // min(0.3, 0.5) > 0 while 0.3 <= I(0.5, 0) = 0.5
        assert!(Aggregation::Minimum.value(0.3, 0.5) > 0.0);
        assert!(0.3 <= Implication::KleeneDienes.value(0.5, 0.0));
    }

    #[test]
    fn greatest_implication_is_not_right_continuous() {
        let r = check_properties(&Implication::Greatest, &opts()).unwrap();
        assert_eq!(r.holds("RC2"), Some(false));
        let g = check_properties(&Implication::Goedel, &opts()).unwrap();
        assert_eq!(g.holds("RC2"), Some(true));
        assert_eq!(g.holds("OP"), Some(true));
    }

    #[test]
    fn ordering_for_uninorms() {
        let o = PropertyOptions {
            neutral: Some(0.5),
            ..opts()
        };
        let r = check_properties(&Implication::Goedel, &o).unwrap();
        assert_eq!(r.holds("OP_U"), Some(false));
    }

    #[test]
    fn lia_sides_at_the_obstruction() {
        let op = Implication::residual_operation(Aggregation::cutoff_mean(0.5).unwrap());
        let (l, r) = lia_sides(&op, &Aggregation::Minimum, 1.0, 1.0, 0.8);
        assert!((l - 0.6).abs() < 1e-12 && (r - 0.5).abs() < 1e-12);
        let res = check_lia(&op, &Aggregation::Minimum, 41, 1e-9).unwrap();
        assert!(!res.holds);
    }

    #[test]
    fn tiny_grids_are_rejected() {
        let o = PropertyOptions {
            grid: 5,
            ..opts()
        };
        assert!(check_properties(&Implication::Weber, &o).is_err());
        assert!(check_lia(&Implication::Weber, &Aggregation::Minimum, 7, 1e-9).is_err());
    }
}
