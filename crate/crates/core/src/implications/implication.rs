use std::sync::Arc;

use crate::algebra::aggregation::roundoff;
use crate::algebra::negation::BISECTION_STEPS;
use crate::algebra::{Aggregation, Automorphism, Generator, Negation, Table2D};
use crate::descriptor::{serde_via_descriptor, unknown_kind, Described, Descriptor};
use crate::error::{check_unit, param, Error, Result, Witness};
use crate::grid::{Grid, WorstGap, CLOSED_FORM_TOL, DEFAULT_GRID, TABULATED_TOL};

/// A fuzzy implication, or (for [`Implication::ResidualOperation`]) a
/// residual operation that has not been checked against the axioms.
#[derive(Debug, Clone, PartialEq)]
pub enum Implication {
    /// `max(1 - x, y)`
    KleeneDienes,
    /// `min(1, 1 - x + y)`
    Lukasiewicz,
    /// 1 if `x < 1`, otherwise `y`.
    Weber,
    /// 1 if `x <= y`, otherwise `y`.
    Goedel,
    /// `1 - x + xy`
    Reichenbach,
    /// 1 if `x <= y`, otherwise `y / x`.
    Goguen,
    /// 0 at (1, 0), otherwise 1.
    Greatest,
    /// `A(N(x), y)` for a disjunctor `A`.
    FromDisjunctor { disjunctor: Aggregation, negation: Negation },
    /// `sup{t : A(x, t) <= y}`, checked against the axioms.
    Residual { aggregation: Aggregation },
    /// The same supremum with no checks and no boundary shortcuts.
    ResidualOperation { aggregation: Aggregation },
    /// `A1(N(x), A2(x, y))`
    Ql {
        disjunctor: Aggregation,
        conjunctor: Aggregation,
        negation: Negation,
    },
    /// `f^-1(x f(y))` with `0 * inf = 0`.
    FGenerated { generator: Generator },
    /// `g^(-1)(g(y) / x)` with `0 * inf = inf`.
    GGenerated { generator: Generator },
    /// `C(x, y) / x`, and 1 at `x = 0`.
    Probabilistic { copula: Aggregation },
    /// `C(x, y) - x + 1`
    ProbabilisticS { copula: Aggregation },
    /// Closed forms of the power implication of min, product or Łukasiewicz.
    Power { tnorm: Aggregation },
    /// `φ^-1(I(φ(x), φ(y)))`
    Conjugate {
        implication: Arc<Implication>,
        automorphism: Automorphism,
    },
    /// `N(A(x, Ñ(y)))`
    FromAggregation {
        aggregation: Aggregation,
        negation: Negation,
        inverse: Negation,
    },
    /// 1 if `x = 0` or `y = 1`, `N(x)` if `y = 0`, otherwise `min(N(x), y)`.
    AveragingPartner { negation: Negation },
    /// `N(g^-1(max(0, g(x) + g(N^-1(y)) - g(1))))`, equivalently
    /// `f^-1(max(0, f(N(x)) + f(y) - f(0)))` with `f = g ∘ N^-1`.
    RepresentablePartner {
        generator: Generator,
        negation: Negation,
        inverse: Negation,
    },
    Tabulated(Table2D),
}

impl Implication {
    /// `(A, N)`-implication; `A` must be a disjunctor.
    pub fn from_disjunctor(disjunctor: Aggregation, negation: Negation) -> Result<Self> {
        require_disjunctor(&disjunctor)?;
        Ok(Implication::FromDisjunctor { disjunctor, negation })
    }

    /// Residual implication, rejected when it violates I1-I5.
    pub fn residual(aggregation: Aggregation) -> Result<Self> {
        let op = Implication::ResidualOperation { aggregation };
        op.check_axioms(DEFAULT_GRID)?;
        let Implication::ResidualOperation { aggregation } = op else {
            unreachable!()
        };
        Ok(Implication::Residual { aggregation })
    }

    pub fn residual_operation(aggregation: Aggregation) -> Self {
        Implication::ResidualOperation { aggregation }
    }

    /// QL-operation, accepted only when it is an implication.
    pub fn ql(disjunctor: Aggregation, conjunctor: Aggregation, negation: Negation) -> Result<Self> {
        let i = Implication::Ql {
            disjunctor,
            conjunctor,
            negation,
        };
        i.check_axioms(DEFAULT_GRID)?;
        Ok(i)
    }

    pub fn f_generated(generator: Generator) -> Result<Self> {
        generator.require_decreasing_to_zero("f-generator")?;
        Ok(Implication::FGenerated { generator })
    }

    pub fn g_generated(generator: Generator) -> Result<Self> {
        generator.require_increasing_from_zero("g-generator")?;
        Ok(Implication::GGenerated { generator })
    }

    /// Probabilistic implication; the copula must make it non-increasing
    /// in the first argument.
    pub fn probabilistic(copula: Aggregation) -> Result<Self> {
        require_copula(&copula)?;
        let i = Implication::Probabilistic { copula };
        i.check_axioms(DEFAULT_GRID)?;
        Ok(i)
    }

    pub fn probabilistic_s(copula: Aggregation) -> Result<Self> {
        require_copula(&copula)?;
        Ok(Implication::ProbabilisticS { copula })
    }

    pub fn power(tnorm: Aggregation) -> Result<Self> {
        match tnorm {
            Aggregation::Minimum | Aggregation::Product | Aggregation::Lukasiewicz => {
                Ok(Implication::Power { tnorm })
            }
            other => Err(param(format!(
                "power implications are available for min, product and lukasiewicz-tnorm, not `{}`",
                other.describe().kind
            ))),
        }
    }

    pub fn conjugate(&self, automorphism: Automorphism) -> Self {
        Implication::Conjugate {
            implication: Arc::new(self.clone()),
            automorphism,
        }
    }

    /// `N(A(x, Ñ(y)))` for a continuous negation, checked against I1-I5.
    pub fn from_aggregation(aggregation: Aggregation, negation: Negation) -> Result<Self> {
        let inverse = negation.pseudo_inverse()?;
        let i = Implication::FromAggregation {
            aggregation,
            negation,
            inverse,
        };
        i.check_axioms(DEFAULT_GRID)?;
        Ok(i)
    }

    pub fn averaging_partner(negation: Negation) -> Result<Self> {
        if !negation.is_continuous() {
            return Err(param("the averaging partner needs a continuous negation"));
        }
        Ok(Implication::AveragingPartner { negation })
    }

    pub fn representable_partner(generator: Generator, negation: Negation) -> Result<Self> {
        generator.require_increasing_from_zero("representable generator")?;
        if !generator.eval(1.0).is_finite() {
            return Err(param("representable generator must have finite g(1)"));
        }
        if !negation.is_strict() {
            return Err(param("the representable partner needs a strict negation"));
        }
        let inverse = negation.pseudo_inverse()?;
        Ok(Implication::RepresentablePartner {
            generator,
            negation,
            inverse,
        })
    }

    pub fn tabulated(table: Table2D) -> Result<Self> {
        let i = Implication::Tabulated(table);
        i.check_axioms(DEFAULT_GRID)?;
        Ok(i)
    }

    pub fn natural_negation(&self) -> Negation {
        Negation::natural(self.clone())
    }

    pub fn is_tabulated(&self) -> bool {
        match self {
            Implication::Tabulated(_) => true,
            Implication::FromDisjunctor { disjunctor: a, .. }
            | Implication::Residual { aggregation: a }
            | Implication::ResidualOperation { aggregation: a }
            | Implication::FromAggregation { aggregation: a, .. } => a.is_tabulated(),
            Implication::Conjugate { implication, .. } => implication.is_tabulated(),
            Implication::Ql {
                disjunctor,
                conjunctor,
                ..
            } => disjunctor.is_tabulated() || conjunctor.is_tabulated(),
            _ => false,
        }
    }

    pub fn tolerance(&self) -> f64 {
        if self.is_tabulated() {
            TABULATED_TOL
        } else {
            CLOSED_FORM_TOL
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        check_unit("x", x)?;
        check_unit("y", y)?;
        Ok(self.value(x, y))
    }

    /// Evaluates without a domain check.
    pub fn value(&self, x: f64, y: f64) -> f64 {
        if !matches!(self, Implication::ResidualOperation { .. }) && (x == 0.0 || y == 1.0) {
            return 1.0;
        }
        let v = match self {
            Implication::KleeneDienes => (1.0 - x).max(y),
            Implication::Lukasiewicz => (1.0 - x + y).min(1.0),
            Implication::Weber => {
                if x < 1.0 {
                    1.0
                } else {
                    y
                }
            }
            Implication::Goedel => {
                if x <= y {
                    1.0
                } else {
                    y
                }
            }
            Implication::Reichenbach => 1.0 - x + x * y,
            Implication::Goguen => {
                if x <= y {
                    1.0
                } else {
                    y / x
                }
            }
            Implication::Greatest => {
                if x == 1.0 && y == 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
            Implication::FromDisjunctor {
                disjunctor,
                negation,
            } => disjunctor.value(negation.value(x), y),
            Implication::Residual { aggregation }
            | Implication::ResidualOperation { aggregation } => residual_value(aggregation, x, y),
            Implication::Ql {
                disjunctor,
                conjunctor,
                negation,
            } => disjunctor.value(negation.value(x), conjunctor.value(x, y)),
            Implication::FGenerated { generator: f } => {
                // 0 * inf = 0
                let t = if x == 0.0 { 0.0 } else { x * f.eval(y) };
                f.inverse(t)
            }
            Implication::GGenerated { generator: g } => {
                // 0 * inf = inf, so g(y) / 0 is treated as +inf
                if x == 0.0 {
                    1.0
                } else {
                    let v = g.eval(y) / x;
                    if v > g.eval(1.0) {
                        1.0
                    } else {
                        g.inverse(v)
                    }
                }
            }
            Implication::Probabilistic { copula } => {
                if x > 0.0 {
                    copula.value(x, y) / x
                } else {
                    1.0
                }
            }
            Implication::ProbabilisticS { copula } => copula.value(x, y) - x + 1.0,
            Implication::Power { tnorm } => {
                if x <= y {
                    1.0
                } else {
                    match tnorm {
                        Aggregation::Minimum => 0.0,
                        Aggregation::Product => Generator::NegLog.eval(x) / Generator::NegLog.eval(y),
                        _ => (1.0 - x) / (1.0 - y),
                    }
                }
            }
            Implication::Conjugate {
                implication,
                automorphism: phi,
            } => phi.invert(implication.value(phi.apply(x), phi.apply(y))),
            Implication::FromAggregation {
                aggregation,
                negation,
                inverse,
            } => negation.value(aggregation.value(x, inverse.value(y))),
            Implication::AveragingPartner { negation } => {
                if y == 0.0 {
                    negation.value(x)
                } else {
                    negation.value(x).min(y)
                }
            }
            Implication::RepresentablePartner {
                generator: g,
                negation,
                inverse,
            } => {
                let (a, b) = (g.eval(x) + g.eval(inverse.value(y)), g.eval(1.0));
                let inner = a - b;
                if inner <= roundoff(a, b) {
                    1.0
                } else {
                    negation.value(g.inverse(inner))
                }
            }
            Implication::Tabulated(t) => t.eval(x, y),
        };
        if v.is_nan() {
            return 0.0;
        }
        v.clamp(0.0, 1.0)
    }

    /// Checks I3-I5 exactly and I1-I2 on a `points`-per-axis grid.
    pub fn check_axioms(&self, points: usize) -> Result<()> {
        if let Some((axiom, witness)) = self.axiom_violation(points) {
            return Err(Error::Axiom {
                operator: self.describe().kind,
                axiom: axiom.to_string(),
                witness,
            });
        }
        Ok(())
    }

    pub(crate) fn axiom_violation(&self, points: usize) -> Option<(&'static str, Witness)> {
        for (axiom, x, y, want) in [("I3", 0.0, 0.0, 1.0), ("I4", 1.0, 1.0, 1.0), ("I5", 1.0, 0.0, 0.0)] {
            let got = self.value(x, y);
            if got != want {
                return Some((axiom, Witness::new(&[x, y], got, want)));
            }
        }
        let xs = Grid::new(points).ok()?.values();
        let tol = self.tolerance();
        let v: Vec<Vec<f64>> = xs
            .iter()
            .map(|&x| xs.iter().map(|&y| self.value(x, y)).collect())
            .collect();
        let mut i1 = WorstGap::default();
        let mut i2 = WorstGap::default();
        for i in 0..xs.len() {
            for j in 0..xs.len() {
                if i + 1 < xs.len() {
                    // I(x, y) >= I(x', y) for x <= x'
                    i1.observe(&[xs[i], xs[i + 1], xs[j]], v[i][j], v[i + 1][j], v[i + 1][j] - v[i][j]);
                }
                if j + 1 < xs.len() {
                    i2.observe(&[xs[i], xs[j], xs[j + 1]], v[i][j], v[i][j + 1], v[i][j] - v[i][j + 1]);
                }
            }
        }
        if let Some(w) = i1.into_witness(tol) {
            return Some(("I1", w));
        }
        i2.into_witness(tol).map(|w| ("I2", w))
    }
}

/// `sup{t : A(x, t) <= y}`, with the empty supremum read as 0.
fn residual_value(a: &Aggregation, x: f64, y: f64) -> f64 {
    match a {
        Aggregation::Minimum => return if x <= y { 1.0 } else { y },
        Aggregation::Product => return if x <= y { 1.0 } else { y / x },
        Aggregation::Lukasiewicz => return (1.0 - x + y).min(1.0),
        _ => {}
    }
    // slack absorbs round-off in operators such as conjugates
    if a.value(x, 1.0) <= y + 1e-12 {
        return 1.0;
    }
    if a.value(x, 0.0) > y {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if a.value(x, mid) <= y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn require_disjunctor(a: &Aggregation) -> Result<()> {
    if a.value(1.0, 0.0) == 1.0 && a.value(0.0, 1.0) == 1.0 {
        Ok(())
    } else {
        Err(param(format!(
            "`{}` is not a disjunctor (needs A(1, 0) = A(0, 1) = 1)",
            a.describe().kind
        )))
    }
}

fn require_copula(c: &Aggregation) -> Result<()> {
    if c.is_declared_copula() {
        Ok(())
    } else {
        Err(param("expected a catalog copula (minimum, product, lukasiewicz or fgm)"))
    }
}

const NAMED: [(&str, Implication); 7] = [
    ("kleene-dienes", Implication::KleeneDienes),
    ("lukasiewicz", Implication::Lukasiewicz),
    ("weber", Implication::Weber),
    ("goedel", Implication::Goedel),
    ("reichenbach", Implication::Reichenbach),
    ("goguen", Implication::Goguen),
    ("greatest", Implication::Greatest),
];

fn named(name: &str) -> Option<Implication> {
    let name = match name {
        "godel" | "gödel" => "goedel",
        "lukasiewicz-implication" => "lukasiewicz",
        other => other,
    };
    NAMED.iter().find(|(n, _)| *n == name).map(|(_, i)| i.clone())
}

impl Described for Implication {
    const TAG: &'static str = "family";

    fn describe(&self) -> Descriptor {
        let b = Descriptor::bare;
        if let Some((name, _)) = NAMED.iter().find(|(_, i)| i == self) {
            return b(name);
        }
        match self {
            Implication::FromDisjunctor {
                disjunctor,
                negation,
            } => b("an-implication")
                .with("disjunctor", disjunctor)
                .with("negation", negation),
            Implication::Residual { aggregation } => b("r-implication").with("aggregation", aggregation),
            Implication::ResidualOperation { aggregation } => {
                b("residual-operation").with("aggregation", aggregation)
            }
            Implication::Ql {
                disjunctor,
                conjunctor,
                negation,
            } => b("ql-operation")
                .with("disjunctor", disjunctor)
                .with("conjunctor", conjunctor)
                .with("negation", negation),
            Implication::FGenerated { generator } => b("f-generated").with("generator", generator),
            Implication::GGenerated { generator } => b("g-generated").with("generator", generator),
            Implication::Probabilistic { copula } => b("probabilistic").with("copula", copula),
            Implication::ProbabilisticS { copula } => b("probabilistic-s").with("copula", copula),
            Implication::Power { tnorm } => b("t-power").with("tnorm", tnorm),
            Implication::Conjugate {
                implication,
                automorphism,
            } => b("conjugate-of")
                .with("implication", implication.as_ref())
                .with("automorphism", automorphism),
            Implication::FromAggregation {
                aggregation,
                negation,
                ..
            } => b("from-aggregation")
                .with("aggregation", aggregation)
                .with("negation", negation),
            Implication::AveragingPartner { negation } => {
                b("averaging-partner").with("negation", negation)
            }
            Implication::RepresentablePartner {
                generator,
                negation,
                ..
            } => b("representable-partner")
                .with("generator", generator)
                .with("negation", negation),
            Implication::Tabulated(t) => b("tabulated")
                .with("grid", t.grid())
                .with("values", t.values()),
            _ => unreachable!("named implications are handled above"),
        }
    }

    fn from_descriptor(d: &Descriptor) -> Result<Self> {
        if let Some(i) = named(&d.kind) {
            d.reader(&[])?;
            return Ok(i);
        }
        match d.kind.as_str() {
            "named" => {
                let name: String = d.reader(&["name"])?.get("name")?;
                named(&name).ok_or_else(|| unknown_kind("named implication", &name))
            }
            "yager" => {
                d.reader(&[])?;
                Implication::f_generated(Generator::NegLog)
            }
            "an-implication" => {
                let r = d.reader(&["disjunctor", "negation"])?;
                Implication::from_disjunctor(r.get("disjunctor")?, r.get("negation")?)
            }
            "a-implication" => {
                let r = d.reader(&["disjunctor"])?;
                Implication::from_disjunctor(r.get("disjunctor")?, Negation::Standard)
            }
            "r-implication" => Implication::residual(d.reader(&["aggregation"])?.get("aggregation")?),
            "residual-operation" => Ok(Implication::residual_operation(
                d.reader(&["aggregation"])?.get("aggregation")?,
            )),
            "ql-operation" => {
                let r = d.reader(&["disjunctor", "conjunctor", "negation"])?;
                Implication::ql(
                    r.get("disjunctor")?,
                    r.get("conjunctor")?,
                    r.get_or("negation", Negation::Standard)?,
                )
            }
            "f-generated" => Implication::f_generated(d.reader(&["generator"])?.get("generator")?),
            "g-generated" => Implication::g_generated(d.reader(&["generator"])?.get("generator")?),
            "probabilistic" => Implication::probabilistic(d.reader(&["copula"])?.get("copula")?),
            "probabilistic-s" => Implication::probabilistic_s(d.reader(&["copula"])?.get("copula")?),
            "t-power" => Implication::power(d.reader(&["tnorm"])?.get("tnorm")?),
            "conjugate-of" => {
                let r = d.reader(&["implication", "automorphism"])?;
                let i: Implication = r.get("implication")?;
                Ok(i.conjugate(r.get("automorphism")?))
            }
            "from-aggregation" => {
                let r = d.reader(&["aggregation", "negation"])?;
                Implication::from_aggregation(r.get("aggregation")?, r.get("negation")?)
            }
            "averaging-partner" => {
                Implication::averaging_partner(d.reader(&["negation"])?.get_or("negation", Negation::Standard)?)
            }
            "representable-partner" => {
                let r = d.reader(&["generator", "negation"])?;
                Implication::representable_partner(r.get("generator")?, r.get("negation")?)
            }
            "tabulated" => {
                let r = d.reader(&["grid", "values"])?;
                Implication::tabulated(Table2D::new(r.get("grid")?, r.get("values")?)?)
            }
            other => Err(unknown_kind("implication family", other)),
        }
    }
}

serde_via_descriptor!(Implication);

#[cfg(test)]
mod tests {
    use super::*;

    fn max_gap(i: &Implication, f: impl Fn(f64, f64) -> f64, points: usize) -> f64 {
        let xs = Grid::new(points).unwrap().values();
        let mut gap: f64 = 0.0;
        for &x in &xs {
            for &y in &xs {
                gap = gap.max((i.value(x, y) - f(x, y)).abs());
            }
        }
        gap
    }

    /// Brute-force `sup{t : A(x, t) <= y}` over a fine t-grid.
    fn brute_residual(a: &Aggregation, x: f64, y: f64) -> f64 {
        let n = 10_000;
        (0..=n)
            .map(|k| k as f64 / n as f64)
            .filter(|&t| a.value(x, t) <= y + 1e-12)
            .fold(0.0, f64::max)
    }

    #[test]
    fn named_values() {
        assert!((Implication::KleeneDienes.eval(0.7, 0.2).unwrap() - 0.3).abs() < 1e-12);
        assert!((Implication::Lukasiewicz.eval(0.5, 0.2).unwrap() - 0.7).abs() < 1e-12);
        assert_eq!(Implication::Weber.eval(0.9, 0.0).unwrap(), 1.0);
        assert!(Implication::Weber.eval(0.9, 1.5).is_err());
    }

    #[test]
    fn every_catalog_member_is_an_implication() {
        for (_, i) in NAMED.iter() {
            i.check_axioms(101).unwrap();
            assert_eq!(i.value(0.0, 0.42), 1.0);
            assert_eq!(i.value(0.42, 1.0), 1.0);
        }
    }

    #[test]
    fn residuals_match_brute_force() {
        let l = Implication::residual(Aggregation::Lukasiewicz).unwrap();
        let g = Implication::residual(Aggregation::Minimum).unwrap();
        let xs = Grid::new(21).unwrap().values();
        for &x in &xs {
            for &y in &xs {
                assert!((l.value(x, y) - brute_residual(&Aggregation::Lukasiewicz, x, y)).abs() < 2e-4);
                assert!((g.value(x, y) - brute_residual(&Aggregation::Minimum, x, y)).abs() < 2e-4);
            }
        }
        assert!(max_gap(&l, |x, y| (1.0 - x + y).min(1.0), 101) <= 1e-9);
        assert!(max_gap(&g, |x, y| if x <= y { 1.0 } else { y }, 101) <= 1e-9);
        // the numeric path agrees with the analytic one
        let numeric = Implication::residual(Aggregation::fgm(0.0).unwrap()).unwrap();
        assert!(max_gap(&numeric, |x, y| if x <= y { 1.0 } else { y / x }, 101) <= 1e-9);
    }

    #[test]
    fn cutoff_residual_is_not_an_implication() {
        let a = Aggregation::cutoff_mean(0.5).unwrap();
        let err = Implication::residual(a.clone()).unwrap_err();
        match err {
            Error::Axiom { axiom, witness, .. } => {
                assert_eq!(axiom, "I5");
                assert!((witness.lhs - 0.5).abs() < 1e-12);
            }
            other => panic!("unexpected {other}"),
        }
        let op = Implication::residual_operation(a);
        let closed = |x: f64, y: f64| {
            if x < 0.5 {
                1.0
            } else {
                (2.0 * y - x).max(1.0 / (2.0 * x)).min(1.0)
            }
        };
        assert!(max_gap(&op, closed, 101) <= 1e-9);
        assert!((op.value(1.0, 0.8) - 0.6).abs() < 1e-12);
        assert!((op.value(1.0, 0.6) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn power_implications() {
        let m = Implication::power(Aggregation::Minimum).unwrap();
        assert_eq!(m.eval(0.3, 0.5).unwrap(), 1.0);
        assert_eq!(m.eval(0.5, 0.3).unwrap(), 0.0);
        let p = Implication::power(Aggregation::Product).unwrap();
        assert!((p.eval(0.8, 0.5).unwrap() - 0.8f64.ln() / 0.5f64.ln()).abs() < 1e-12);
        assert!((p.eval(0.8, 0.5).unwrap() - 0.321928).abs() < 1e-6);
        for t in [Aggregation::Minimum, Aggregation::Product, Aggregation::Lukasiewicz] {
            let i = Implication::power(t).unwrap();
            assert_eq!(i.value(0.5, 0.5), 1.0);
            i.check_axioms(101).unwrap();
        }
        assert!(Implication::power(Aggregation::Drastic).is_err());
    }

    #[test]
    fn natural_negations() {
        let kd = Implication::KleeneDienes.natural_negation();
        let weber = Implication::Weber.natural_negation();
        for x in Grid::new(101).unwrap().values() {
            assert!((kd.value(x) - (1.0 - x)).abs() < 1e-15);
            assert_eq!(weber.value(x), Negation::Greatest.value(x));
        }
    }

    #[test]
    fn generated_families() {
        let yager = Implication::f_generated(Generator::NegLog).unwrap();
        assert!(max_gap(&yager, |x, y| y.powf(x), 101) <= 1e-12);
        assert_eq!(yager.value(0.0, 0.0), 1.0);
        let lin = Implication::f_generated(Generator::Complement).unwrap();
        assert!(max_gap(&lin, |x, y| 1.0 - x + x * y, 101) <= 1e-12);
        let g = Implication::g_generated(Generator::Identity).unwrap();
        assert!(max_gap(&g, |x, y| if x == 0.0 { 1.0 } else { (y / x).min(1.0) }, 101) <= 1e-12);
        let g2 = Implication::g_generated(Generator::NegLogComplement).unwrap();
        g2.check_axioms(101).unwrap();
        assert!(Implication::f_generated(Generator::Identity).is_err());
        assert!(Implication::g_generated(Generator::NegLog).is_err());
    }

    #[test]
    fn probabilistic_families() {
        let rb = Implication::probabilistic_s(Aggregation::Product).unwrap();
        assert!(max_gap(&rb, |x, y| 1.0 - x + x * y, 101) <= 1e-12);
        let l = Implication::probabilistic_s(Aggregation::Minimum).unwrap();
        assert!(max_gap(&l, |x, y| (1.0 - x + y).min(1.0), 101) <= 1e-12);
        let p = Implication::probabilistic(Aggregation::Product).unwrap();
        assert!(max_gap(&p, |x, y| if x == 0.0 || y == 1.0 { 1.0 } else { y }, 101) <= 1e-12);
        // W makes C(x, y) / x increase in x
        let err = Implication::probabilistic(Aggregation::Lukasiewicz).unwrap_err();
        assert!(matches!(err, Error::Axiom { ref axiom, .. } if axiom == "I1"));
    }

    #[test]
    fn ql_operations() {
        let err = Implication::ql(Aggregation::Maximum, Aggregation::Minimum, Negation::Standard)
            .unwrap_err();
        assert!(matches!(err, Error::Axiom { ref axiom, .. } if axiom == "I1"));
        let err = Implication::ql(
            Aggregation::ProbabilisticSum,
            Aggregation::Product,
            Negation::Standard,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Axiom { ref axiom, .. } if axiom == "I1"));
        let kd = Implication::ql(Aggregation::BoundedSum, Aggregation::Lukasiewicz, Negation::Standard)
            .unwrap();
        assert!(max_gap(&kd, |x, y| (1.0 - x).max(y), 101) <= 1e-12);
        let weber = Implication::ql(Aggregation::Maximum, Aggregation::Minimum, Negation::Greatest)
            .unwrap();
        assert!(max_gap(&weber, |x, y| Implication::Weber.value(x, y), 101) == 0.0);
    }

    #[test]
    fn aggregation_built_forms() {
        let kd = Implication::from_aggregation(Aggregation::Minimum, Negation::Standard).unwrap();
        assert!(max_gap(&kd, |x, y| (1.0 - x).max(y), 101) <= 1e-12);
        let top = Implication::from_aggregation(Aggregation::SmallestConjunctor, Negation::Standard)
            .unwrap();
        assert_eq!(max_gap(&top, |x, y| Implication::Greatest.value(x, y), 101), 0.0);
        let luk = Implication::representable_partner(Generator::Identity, Negation::Standard).unwrap();
        assert!(max_gap(&luk, |x, y| (1.0 - x + y).min(1.0), 101) <= 1e-12);
        let three = Implication::averaging_partner(Negation::Standard).unwrap();
        let thm = Implication::from_aggregation(
            Aggregation::GreatestAveragingConjunctor,
            Negation::Standard,
        )
        .unwrap();
        let xs = Grid::new(101).unwrap().values();
        for &x in &xs {
            for &y in &xs[1..] {
                assert!((three.value(x, y) - thm.value(x, y)).abs() < 1e-12, "{x} {y}");
            }
        }
        // the two forms differ only on the y = 0 column
        assert_eq!(three.value(0.5, 0.0), 0.5);
        assert_eq!(thm.value(0.5, 0.0), 0.0);
    }

    #[test]
    fn descriptors_round_trip() {
        let all = vec![
            Implication::KleeneDienes,
            Implication::from_disjunctor(Aggregation::Maximum, Negation::Standard).unwrap(),
            Implication::residual(Aggregation::Minimum).unwrap(),
            Implication::residual_operation(Aggregation::cutoff_mean(0.5).unwrap()),
            Implication::f_generated(Generator::NegLog).unwrap(),
            Implication::power(Aggregation::Product).unwrap(),
            Implication::from_aggregation(Aggregation::GreatestAveragingConjunctor, Negation::Standard)
                .unwrap(),
        ];
        for i in all {
            let json = i.to_json();
            assert_eq!(Implication::from_json(json).unwrap(), i);
        }
        let i: Implication = serde_json::from_str(r#"{"family":"named","params":{"name":"weber"}}"#).unwrap();
        assert_eq!(i, Implication::Weber);
        assert!(serde_json::from_str::<Implication>(r#"{"family":"a-implication","params":{"disjunctor":{"kind":"min"}}}"#).is_err());
    }
}
