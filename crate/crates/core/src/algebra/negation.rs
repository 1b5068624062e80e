use std::sync::Arc;

use crate::algebra::generator::Generator;
use crate::algebra::table::Table1D;
use crate::descriptor::{serde_via_descriptor, unknown_kind, Described, Descriptor};
use crate::error::{check_unit, param, Result};
use crate::grid::{Grid, CLOSED_FORM_TOL, TABULATED_TOL};
use crate::implications::Implication;

/// Iterations of interval halving used by numeric inverses (width 2^-60).
pub(crate) const BISECTION_STEPS: usize = 60;

/// A fuzzy negation: non-increasing with `N(0) = 1` and `N(1) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum Negation {
    /// `1 - x`
    Standard,
    /// 1 at 0, otherwise 0.
    Smallest,
    /// 0 at 1, otherwise 1.
    Greatest,
    /// `(1 - x) / (1 + lambda x)`, `lambda > -1`.
    Sugeno { lambda: f64 },
    /// `(1 - x^p)^(1/p)`
    Yager { exponent: f64 },
    /// `1 - x^p`
    OneMinusPower { exponent: f64 },
    /// `(1 - x)^p`
    ComplementPower { exponent: f64 },
    /// `g^-1(g(1) - g(x))` for an increasing `g` with `g(0) = 0`, `g(1) < inf`.
    GeneratorBased { generator: Generator },
    /// `x -> I(x, 0)`
    Natural { implication: Arc<Implication> },
    /// `sup{y : N(y) > x}`, with value 1 at 0, computed by bisection.
    PseudoInverse { of: Arc<Negation> },
    Tabulated(Table1D),
}

impl Negation {
    pub fn sugeno(lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > -1.0) {
            return Err(param(format!("Sugeno lambda must exceed -1, got {lambda}")));
        }
        Ok(Negation::Sugeno { lambda })
    }

    pub fn yager(exponent: f64) -> Result<Self> {
        positive(exponent)?;
        Ok(Negation::Yager { exponent })
    }

    pub fn one_minus_power(exponent: f64) -> Result<Self> {
        positive(exponent)?;
        Ok(Negation::OneMinusPower { exponent })
    }

    pub fn complement_power(exponent: f64) -> Result<Self> {
        positive(exponent)?;
        Ok(Negation::ComplementPower { exponent })
    }

    pub fn generator_based(generator: Generator) -> Result<Self> {
        generator.require_increasing_from_zero("negation generator")?;
        if !generator.eval(1.0).is_finite() {
            return Err(param("negation generator must have finite g(1)"));
        }
        Ok(Negation::GeneratorBased { generator })
    }

    pub fn natural(implication: Implication) -> Self {
        Negation::Natural {
            implication: Arc::new(implication),
        }
    }

    pub fn tabulated(table: Table1D) -> Result<Self> {
        let v = table.values();
        if v[0] != 1.0 || v[v.len() - 1] != 0.0 {
            return Err(param("a tabulated negation needs N(0) = 1 and N(1) = 0"));
        }
        if !table.is_non_increasing() || v.iter().any(|y| !(0.0..=1.0).contains(y)) {
            return Err(param("a tabulated negation must be non-increasing into [0, 1]"));
        }
        Ok(Negation::Tabulated(table))
    }

    /// Evaluates without a domain check.
    pub fn value(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 1.0;
        }
        if x >= 1.0 {
            return 0.0;
        }
        let v = match self {
            Negation::Standard => 1.0 - x,
            Negation::Smallest => 0.0,
            Negation::Greatest => 1.0,
            Negation::Sugeno { lambda } => (1.0 - x) / (1.0 + lambda * x),
            Negation::Yager { exponent: p } => (1.0 - x.powf(*p)).powf(1.0 / p),
            Negation::OneMinusPower { exponent } => 1.0 - x.powf(*exponent),
            Negation::ComplementPower { exponent } => (1.0 - x).powf(*exponent),
            Negation::GeneratorBased { generator: g } => g.inverse(g.eval(1.0) - g.eval(x)),
            Negation::Natural { implication } => implication.value(x, 0.0),
            Negation::PseudoInverse { of } => sup_above(of, x),
            Negation::Tabulated(t) => t.eval(x),
        };
        v.clamp(0.0, 1.0)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        Ok(self.value(x))
    }

    pub fn tolerance(&self) -> f64 {
        if self.is_tabulated() {
            TABULATED_TOL
        } else {
            CLOSED_FORM_TOL
        }
    }

    fn is_tabulated(&self) -> bool {
        match self {
            Negation::Tabulated(_) => true,
            Negation::PseudoInverse { of } => of.is_tabulated(),
            Negation::Natural { implication } => implication.is_tabulated(),
            _ => false,
        }
    }

    pub fn is_continuous(&self) -> bool {
        match self {
            Negation::Smallest | Negation::Greatest => false,
            Negation::Natural { .. } => !has_jump(|x| self.value(x)),
            _ => true,
        }
    }

    /// Continuous and strictly decreasing.
    pub fn is_strict(&self) -> bool {
        match self {
            Negation::Smallest | Negation::Greatest => false,
            Negation::Standard
            | Negation::Sugeno { .. }
            | Negation::Yager { .. }
            | Negation::OneMinusPower { .. }
            | Negation::ComplementPower { .. }
            | Negation::GeneratorBased { .. }
            | Negation::PseudoInverse { .. } => true,
            Negation::Tabulated(t) => t.is_strictly_decreasing(),
            Negation::Natural { .. } => {
                let xs = Grid::new(1001).expect("valid grid").values();
                self.is_continuous() && xs.windows(2).all(|w| self.value(w[1]) < self.value(w[0]))
            }
        }
    }

    /// Involutive: `N(N(x)) = x`.
    pub fn is_strong(&self) -> bool {
        match self {
            Negation::Standard
            | Negation::Sugeno { .. }
            | Negation::Yager { .. }
            | Negation::GeneratorBased { .. } => true,
            Negation::Smallest | Negation::Greatest => false,
            Negation::OneMinusPower { exponent } | Negation::ComplementPower { exponent } => {
                *exponent == 1.0
            }
            _ => {
                let tol = self.tolerance();
                self.is_strict()
                    && Grid::new(1001)
                        .expect("valid grid")
                        .values()
                        .into_iter()
                        .all(|x| (self.value(self.value(x)) - x).abs() <= tol)
            }
        }
    }

    /// `N(x) = 1` only at `x = 0`, checked on a 1001-point grid.
    pub fn is_non_filling(&self) -> bool {
        let g = Grid::new(1001).expect("valid grid");
        (1..g.points()).all(|i| self.value(g.value(i)) < 1.0)
    }

    /// `N(x) = 0` only at `x = 1`, checked on a 1001-point grid.
    pub fn is_non_vanishing(&self) -> bool {
        let g = Grid::new(1001).expect("valid grid");
        (0..g.points() - 1).all(|i| self.value(g.value(i)) > 0.0)
    }

    /// The strict negation `Ñ`, analytic where the catalog knows it.
    pub fn pseudo_inverse(&self) -> Result<Negation> {
        if !self.is_continuous() {
            return Err(param(
                "the pseudo-inverse is only defined here for continuous negations",
            ));
        }
        Ok(match self {
            Negation::Standard
            | Negation::Sugeno { .. }
            | Negation::Yager { .. }
            | Negation::GeneratorBased { .. } => self.clone(),
            Negation::OneMinusPower { exponent } => Negation::ComplementPower {
                exponent: 1.0 / exponent,
            },
            Negation::ComplementPower { exponent } => Negation::OneMinusPower {
                exponent: 1.0 / exponent,
            },
            _ => self.numeric_pseudo_inverse()?,
        })
    }

    /// Pseudo-inverse by bisection, never simplified.
    pub fn numeric_pseudo_inverse(&self) -> Result<Negation> {
        if !self.is_continuous() {
            return Err(param(
                "the pseudo-inverse is only defined here for continuous negations",
            ));
        }
        Ok(Negation::PseudoInverse {
            of: Arc::new(self.clone()),
        })
    }
}

fn positive(p: f64) -> Result<()> {
    if p.is_finite() && p > 0.0 {
        Ok(())
    } else {
        Err(param(format!("exponent must be positive and finite, got {p}")))
    }
}

/// `sup{y : N(y) > x}` for `x` in (0, 1).
fn sup_above(n: &Negation, x: f64) -> f64 {
    if n.value(1.0) > x {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if n.value(mid) > x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Looks for a jump of a monotone map by refining every coarse cell whose
/// increment is visible. A jump keeps its size between brackets of width
/// 1e-10 and 1e-14; steep continuous maps such as `(1 - x)^(1/p)` do not.
pub(crate) fn has_jump(f: impl Fn(f64) -> f64) -> bool {
    let g = Grid::new(1001).expect("valid grid");
    let xs = g.values();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    for k in 0..xs.len() - 1 {
        if (ys[k + 1] - ys[k]).abs() <= 1e-6 {
            continue;
        }
        let (mut a, mut b) = (xs[k], xs[k + 1]);
        let (mut fa, mut fb) = (ys[k], ys[k + 1]);
        let mut coarse = None;
        while b - a > 1e-14 {
            if coarse.is_none() && b - a <= 1e-10 {
                coarse = Some((fb - fa).abs());
            }
            let m = 0.5 * (a + b);
            let fm = f(m);
            if (fm - fa).abs() >= (fb - fm).abs() {
                b = m;
                fb = fm;
            } else {
                a = m;
                fa = fm;
            }
        }
        let fine = (fb - fa).abs();
        if fine > 1e-6 && coarse.is_none_or(|c| fine > 0.5 * c) {
            return true;
        }
    }
    false
}

impl Described for Negation {
    fn describe(&self) -> Descriptor {
        match self {
            Negation::Standard => Descriptor::bare("standard"),
            Negation::Smallest => Descriptor::bare("smallest"),
            Negation::Greatest => Descriptor::bare("greatest"),
            Negation::Sugeno { lambda } => Descriptor::bare("sugeno").with("lambda", lambda),
            Negation::Yager { exponent } => Descriptor::bare("yager").with("exponent", exponent),
            Negation::OneMinusPower { exponent } => {
                Descriptor::bare("one-minus-power").with("exponent", exponent)
            }
            Negation::ComplementPower { exponent } => {
                Descriptor::bare("complement-power").with("exponent", exponent)
            }
            Negation::GeneratorBased { generator } => {
                Descriptor::bare("generator-based").with("generator", generator)
            }
            Negation::Natural { implication } => {
                Descriptor::bare("natural").with("implication", implication.as_ref())
            }
            Negation::PseudoInverse { of } => {
                Descriptor::bare("pseudo-inverse").with("of", of.as_ref())
            }
            Negation::Tabulated(t) => Descriptor::bare("tabulated")
                .with("grid", t.grid())
                .with("values", t.values()),
        }
    }

    fn from_descriptor(d: &Descriptor) -> Result<Self> {
        let none = || d.reader(&[]).map(|_| ());
        Ok(match d.kind.as_str() {
            "standard" => none().map(|_| Negation::Standard)?,
            "smallest" => none().map(|_| Negation::Smallest)?,
            "greatest" => none().map(|_| Negation::Greatest)?,
            "sugeno" => Negation::sugeno(d.reader(&["lambda"])?.get("lambda")?)?,
            "yager" => Negation::yager(d.reader(&["exponent"])?.get("exponent")?)?,
            "one-minus-power" => {
                Negation::one_minus_power(d.reader(&["exponent"])?.get("exponent")?)?
            }
            "complement-power" => {
                Negation::complement_power(d.reader(&["exponent"])?.get("exponent")?)?
            }
            "generator-based" => {
                Negation::generator_based(d.reader(&["generator"])?.get("generator")?)?
            }
            "natural" => Negation::natural(d.reader(&["implication"])?.get("implication")?),
            "pseudo-inverse" => {
                let of: Negation = d.reader(&["of"])?.get("of")?;
                of.numeric_pseudo_inverse()?
            }
            "tabulated" => {
                let r = d.reader(&["grid", "values"])?;
                Negation::tabulated(Table1D::new(r.get("grid")?, r.get("values")?)?)?
            }
            other => return Err(unknown_kind("negation", other)),
        })
    }
}

serde_via_descriptor!(Negation);
