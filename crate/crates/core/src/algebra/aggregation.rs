use std::sync::Arc;

use crate::algebra::generator::{Automorphism, Generator};
use crate::algebra::negation::Negation;
use crate::algebra::table::Table2D;
use crate::descriptor::{serde_via_descriptor, unknown_kind, Described, Descriptor};
use crate::error::{check_unit, param, Error, Result, Witness};
use crate::grid::{Grid, WorstGap, CLOSED_FORM_TOL, DEFAULT_GRID, TABULATED_TOL};
use crate::implications::Implication;

/// A binary aggregation function on the unit square.
#[derive(Debug, Clone, PartialEq)]
pub enum Aggregation {
    Minimum,
    Product,
    /// `max(0, x + y - 1)`
    Lukasiewicz,
    Maximum,
    /// `x + y - xy`
    ProbabilisticSum,
    /// `min(1, x + y)`
    BoundedSum,
    /// The drastic t-norm.
    Drastic,
    /// 1 at (1, 1), otherwise 0.
    SmallestConjunctor,
    /// 0 if either argument is 0, otherwise `max(x, y)`.
    GreatestAveragingConjunctor,
    /// `g^-1(max(0, g(x ∧ y) - g(N(x ∨ y))))` with `N` strong.
    Representable { generator: Generator, negation: Negation },
    /// `f^-1((1 - w) f(x) + w f(y))`
    WeightedMean { generator: Generator, weight: f64 },
    /// `f^-1((1 - w) f(T(x, y)) + w f(S(x, y)))`
    TsFunction {
        tnorm: Arc<Aggregation>,
        tconorm: Arc<Aggregation>,
        generator: Generator,
        weight: f64,
    },
    /// Conjunctive uninorm: `max` on `[e,1]^2`, `min` elsewhere.
    Uninorm { neutral: f64 },
    /// Farlie-Gumbel-Morgenstern copula `xy(1 + θ(1-x)(1-y))`.
    Fgm { theta: f64 },
    /// `Ñ(A(N(x), N(y)))`; the N-dual when `N` is strict.
    NDual {
        aggregation: Arc<Aggregation>,
        negation: Negation,
        inverse: Negation,
    },
    /// `φ^-1(A(φ(x), φ(y)))`
    Conjugate {
        aggregation: Arc<Aggregation>,
        automorphism: Automorphism,
    },
    /// 0 if `xy < c`, otherwise `(x + y) / 2`.
    CutoffMean { cutoff: f64 },
    /// `Ñ_I(I(Ñ_I(N_I(x)), N_I(y)))` built from the natural negation of `I`.
    NaturalDual {
        implication: Arc<Implication>,
        natural: Negation,
        inverse: Negation,
    },
    /// `1 - C(x, 1 - y) / x`, and 0 at `x = 0`.
    ProbabilisticDual { copula: Arc<Aggregation> },
    /// `x - C(x, 1 - y)`
    ProbabilisticSDual { copula: Arc<Aggregation> },
    Tabulated(Table2D),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Boundary {
    TNorm,
    TConorm,
}

impl Aggregation {
    pub fn representable(generator: Generator, negation: Negation) -> Result<Self> {
        generator.require_increasing_from_zero("representable generator")?;
        if !negation.is_strong() {
            return Err(param("a representable aggregation needs a strong negation"));
        }
        Ok(Aggregation::Representable { generator, negation })
    }

    /// `g^-1(max(0, g(x) + g(y) - g(1)))`, the representable form whose
    /// negation is generated by `g`.
    pub fn representable_by(generator: Generator) -> Result<Self> {
        let n = Negation::generator_based(generator.clone())?;
        Aggregation::representable(generator, n)
    }

    pub fn weighted_mean(generator: Generator, weight: f64) -> Result<Self> {
        check_weight(weight)?;
        check_mean_generator(&generator)?;
        Ok(Aggregation::WeightedMean { generator, weight })
    }

    pub fn ts_function(
        tnorm: Aggregation,
        tconorm: Aggregation,
        generator: Generator,
        weight: f64,
    ) -> Result<Self> {
        check_weight(weight)?;
        check_mean_generator(&generator)?;
        if tnorm.boundary() != Some(Boundary::TNorm) || tnorm.is_declared_copula_only() {
            return Err(param("TS-function needs a catalog t-norm"));
        }
        if tconorm.boundary() != Some(Boundary::TConorm) {
            return Err(param("TS-function needs a catalog t-conorm"));
        }
        Ok(Aggregation::TsFunction {
            tnorm: Arc::new(tnorm),
            tconorm: Arc::new(tconorm),
            generator,
            weight,
        })
    }

    pub fn uninorm(neutral: f64) -> Result<Self> {
        if !(neutral > 0.0 && neutral < 1.0) {
            return Err(param(format!("uninorm neutral element must lie in (0, 1), got {neutral}")));
        }
        Ok(Aggregation::Uninorm { neutral })
    }

    pub fn fgm(theta: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&theta) {
            return Err(param(format!("FGM theta must lie in [-1, 1], got {theta}")));
        }
        Ok(Aggregation::Fgm { theta })
    }

    pub fn cutoff_mean(cutoff: f64) -> Result<Self> {
        if !(cutoff > 0.0 && cutoff <= 1.0) {
            return Err(param(format!("cutoff must lie in (0, 1], got {cutoff}")));
        }
        Ok(Aggregation::CutoffMean { cutoff })
    }

    pub fn tabulated(table: Table2D) -> Result<Self> {
        let a = Aggregation::Tabulated(table);
        a.check_axioms(DEFAULT_GRID)?;
        Ok(a)
    }

    /// The N-dual `N^-1(A(N(x), N(y)))`; requires a strict negation.
    pub fn n_dual(&self, negation: &Negation) -> Result<Aggregation> {
        if !negation.is_strict() {
            return Err(param("the N-dual needs a strict negation"));
        }
        self.negation_transform(negation)
    }

    /// `Ñ(A(N(x), N(y)))` for a continuous negation.
    pub fn negation_transform(&self, negation: &Negation) -> Result<Aggregation> {
        let inverse = negation.pseudo_inverse()?;
        Ok(Aggregation::NDual {
            aggregation: Arc::new(self.clone()),
            negation: negation.clone(),
            inverse,
        })
    }

    pub fn conjugate(&self, automorphism: Automorphism) -> Aggregation {
        Aggregation::Conjugate {
            aggregation: Arc::new(self.clone()),
            automorphism,
        }
    }

    /// The aggregation `Ñ_I(I(Ñ_I(N_I(x)), N_I(y)))`; needs `N_I` continuous.
    pub fn natural_dual(implication: Implication) -> Result<Aggregation> {
        let natural = Negation::natural(implication.clone());
        let inverse = natural.pseudo_inverse()?;
        Ok(Aggregation::NaturalDual {
            implication: Arc::new(implication),
            natural,
            inverse,
        })
    }

    pub fn probabilistic_dual(copula: Aggregation) -> Result<Aggregation> {
        require_copula(&copula)?;
        Ok(Aggregation::ProbabilisticDual {
            copula: Arc::new(copula),
        })
    }

    pub fn probabilistic_s_dual(copula: Aggregation) -> Result<Aggregation> {
        require_copula(&copula)?;
        Ok(Aggregation::ProbabilisticSDual {
            copula: Arc::new(copula),
        })
    }

    fn boundary(&self) -> Option<Boundary> {
        match self {
            Aggregation::Minimum
            | Aggregation::Product
            | Aggregation::Lukasiewicz
            | Aggregation::Drastic
            | Aggregation::Fgm { .. } => Some(Boundary::TNorm),
            Aggregation::Maximum | Aggregation::ProbabilisticSum | Aggregation::BoundedSum => {
                Some(Boundary::TConorm)
            }
            _ => None,
        }
    }

    fn is_declared_copula_only(&self) -> bool {
        matches!(self, Aggregation::Fgm { .. })
    }

    /// Catalog members known to be copulas.
    pub fn is_declared_copula(&self) -> bool {
        matches!(
            self,
            Aggregation::Minimum
                | Aggregation::Product
                | Aggregation::Lukasiewicz
                | Aggregation::Fgm { .. }
        )
    }

    /// Catalog t-norms (associative, commutative, neutral element 1).
    pub fn is_catalog_tnorm(&self) -> bool {
        matches!(
            self,
            Aggregation::Minimum
                | Aggregation::Product
                | Aggregation::Lukasiewicz
                | Aggregation::Drastic
        )
    }

    pub fn declared_neutral(&self) -> Option<f64> {
        match self {
            Aggregation::Uninorm { neutral } => Some(*neutral),
            _ => match self.boundary() {
                Some(Boundary::TNorm) => Some(1.0),
                Some(Boundary::TConorm) => Some(0.0),
                None => None,
            },
        }
    }

    pub fn is_tabulated(&self) -> bool {
        match self {
            Aggregation::Tabulated(_) => true,
            Aggregation::NDual { aggregation, .. } | Aggregation::Conjugate { aggregation, .. } => {
                aggregation.is_tabulated()
            }
            Aggregation::NaturalDual { implication, .. } => implication.is_tabulated(),
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

    /// Evaluates without a domain check.
    pub fn value(&self, x: f64, y: f64) -> f64 {
        match self.boundary() {
            Some(Boundary::TNorm) => {
                if x == 1.0 {
                    return y;
                }
                if y == 1.0 {
                    return x;
                }
                if x == 0.0 || y == 0.0 {
                    return 0.0;
                }
            }
            Some(Boundary::TConorm) => {
                if x == 0.0 {
                    return y;
                }
                if y == 0.0 {
                    return x;
                }
                if x == 1.0 || y == 1.0 {
                    return 1.0;
                }
            }
            None => {}
        }
        let v = match self {
            Aggregation::Minimum => x.min(y),
            Aggregation::Product => x * y,
            Aggregation::Lukasiewicz => (x + y - 1.0).max(0.0),
            Aggregation::Maximum => x.max(y),
            Aggregation::ProbabilisticSum => x + y - x * y,
            Aggregation::BoundedSum => (x + y).min(1.0),
            Aggregation::Drastic => 0.0,
            Aggregation::SmallestConjunctor => {
                if x == 1.0 && y == 1.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Aggregation::GreatestAveragingConjunctor => {
                if x == 0.0 || y == 0.0 {
                    0.0
                } else {
                    x.max(y)
                }
            }
            Aggregation::Representable { generator: g, negation } => {
                let (a, b) = (g.eval(x.min(y)), g.eval(negation.value(x.max(y))));
                if a.is_nan() || b.is_nan() || a - b <= roundoff(a, b) {
                    0.0
                } else {
                    g.inverse(a - b)
                }
            }
            Aggregation::WeightedMean { generator: f, weight } => {
                mean(f, *weight, x, y)
            }
            Aggregation::TsFunction {
                tnorm,
                tconorm,
                generator,
                weight,
            } => mean(generator, *weight, tnorm.value(x, y), tconorm.value(x, y)),
            Aggregation::Uninorm { neutral } => {
                if x >= *neutral && y >= *neutral {
                    x.max(y)
                } else {
                    x.min(y)
                }
            }
            Aggregation::Fgm { theta } => x * y * (1.0 + theta * (1.0 - x) * (1.0 - y)),
            Aggregation::NDual {
                aggregation,
                negation,
                inverse,
            } => inverse.value(aggregation.value(negation.value(x), negation.value(y))),
            Aggregation::Conjugate {
                aggregation,
                automorphism: phi,
            } => phi.invert(aggregation.value(phi.apply(x), phi.apply(y))),
            Aggregation::CutoffMean { cutoff } => {
                if x * y < *cutoff {
                    0.0
                } else {
                    0.5 * (x + y)
                }
            }
            Aggregation::NaturalDual {
                implication,
                natural,
                inverse,
            } => inverse.value(
                implication.value(inverse.value(natural.value(x)), natural.value(y)),
            ),
            Aggregation::ProbabilisticDual { copula } => {
                if x == 0.0 {
                    0.0
                } else {
                    1.0 - copula.value(x, 1.0 - y) / x
                }
            }
            Aggregation::ProbabilisticSDual { copula } => x - copula.value(x, 1.0 - y),
            Aggregation::Tabulated(t) => t.eval(x, y),
        };
        v.clamp(0.0, 1.0)
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        check_unit("x", x)?;
        check_unit("y", y)?;
        Ok(self.value(x, y))
    }

    /// Checks A1 exactly and A2 on a `points`-per-axis grid.
    pub fn check_axioms(&self, points: usize) -> Result<()> {
        let name = self.describe().kind;
        for (x, y, want) in [(0.0, 0.0, 0.0), (1.0, 1.0, 1.0)] {
            let got = self.value(x, y);
            if got != want {
                return Err(Error::Axiom {
                    operator: name,
                    axiom: "A1".into(),
                    witness: Witness::new(&[x, y], got, want),
                });
            }
        }
        if let Some(w) = self.monotonicity_witness(points) {
            return Err(Error::Axiom {
                operator: name,
                axiom: "A2".into(),
                witness: w,
            });
        }
        Ok(())
    }

    fn monotonicity_witness(&self, points: usize) -> Option<Witness> {
        let g = Grid::new(points).ok()?;
        let xs = g.values();
        let tol = self.tolerance();
        let mut worst = WorstGap::default();
        for i in 0..xs.len() {
            for j in 0..xs.len() {
                let here = self.value(xs[i], xs[j]);
                if i + 1 < xs.len() {
                    let right = self.value(xs[i + 1], xs[j]);
                    worst.observe(&[xs[i], xs[j]], here, right, here - right);
                }
                if j + 1 < xs.len() {
                    let up = self.value(xs[i], xs[j + 1]);
                    worst.observe(&[xs[i], xs[j]], here, up, here - up);
                }
            }
        }
        worst.into_witness(tol)
    }

    /// Replaces recognisable constructions by the catalog member they equal.
    pub fn simplified(&self) -> Aggregation {
        match self {
            Aggregation::NDual {
                aggregation,
                negation: Negation::Standard,
                ..
            } => match aggregation.as_ref() {
                Aggregation::Maximum => Aggregation::Minimum,
                Aggregation::Minimum => Aggregation::Maximum,
                Aggregation::ProbabilisticSum => Aggregation::Product,
                Aggregation::Product => Aggregation::ProbabilisticSum,
                Aggregation::BoundedSum => Aggregation::Lukasiewicz,
                Aggregation::Lukasiewicz => Aggregation::BoundedSum,
                _ => self.clone(),
            },
            Aggregation::Conjugate {
                aggregation,
                automorphism: Automorphism::Identity,
            } => aggregation.as_ref().clone(),
            Aggregation::ProbabilisticSDual { copula } => match copula.as_ref() {
                Aggregation::Product => Aggregation::Product,
                Aggregation::Minimum => Aggregation::Lukasiewicz,
                _ => self.clone(),
            },
            _ => self.clone(),
        }
    }
}

fn check_weight(w: f64) -> Result<()> {
    if w > 0.0 && w < 1.0 {
        Ok(())
    } else {
        Err(param(format!("weight must lie in (0, 1), got {w}")))
    }
}

fn check_mean_generator(f: &Generator) -> Result<()> {
    let (a, b) = (f.eval(0.0), f.eval(1.0));
    if a.is_infinite() && b.is_infinite() {
        return Err(param("a mean generator may be infinite at one endpoint only"));
    }
    Ok(())
}

fn require_copula(c: &Aggregation) -> Result<()> {
    if c.is_declared_copula() {
        Ok(())
    } else {
        Err(param("expected a catalog copula (minimum, product, lukasiewicz or fgm)"))
    }
}

fn mean(f: &Generator, w: f64, x: f64, y: f64) -> f64 {
    let (fx, fy) = (f.eval(x), f.eval(y));
    let m = if fx == fy {
        fx
    } else {
        (1.0 - w) * fx + w * fy
    };
    f.inverse(m)
}

impl Described for Aggregation {
    fn describe(&self) -> Descriptor {
        let b = Descriptor::bare;
        match self {
            Aggregation::Minimum => b("min"),
            Aggregation::Product => b("product"),
            Aggregation::Lukasiewicz => b("lukasiewicz-tnorm"),
            Aggregation::Maximum => b("max"),
            Aggregation::ProbabilisticSum => b("probabilistic-sum"),
            Aggregation::BoundedSum => b("bounded-sum"),
            Aggregation::Drastic => b("drastic"),
            Aggregation::SmallestConjunctor => b("smallest-conjunctor"),
            Aggregation::GreatestAveragingConjunctor => b("greatest-averaging-conjunctor"),
            Aggregation::Representable { generator, negation } => b("representable")
                .with("generator", generator)
                .with("negation", negation),
            Aggregation::WeightedMean { generator, weight } => b("wqam")
                .with("generator", generator)
                .with("weight", weight),
            Aggregation::TsFunction {
                tnorm,
                tconorm,
                generator,
                weight,
            } => b("ts-function")
                .with("tnorm", tnorm.as_ref())
                .with("tconorm", tconorm.as_ref())
                .with("generator", generator)
                .with("weight", weight),
            Aggregation::Uninorm { neutral } => b("uninorm").with("neutral", neutral),
            Aggregation::Fgm { theta } => b("copula").with("family", "fgm").with("theta", theta),
            Aggregation::NDual {
                aggregation,
                negation,
                ..
            } => b("n-dual-of")
                .with("aggregation", aggregation.as_ref())
                .with("negation", negation),
            Aggregation::Conjugate {
                aggregation,
                automorphism,
            } => b("conjugate-of")
                .with("aggregation", aggregation.as_ref())
                .with("automorphism", automorphism),
            Aggregation::CutoffMean { cutoff } => b("cutoff-mean").with("cutoff", cutoff),
            Aggregation::NaturalDual { implication, .. } => {
                b("natural-dual").with("implication", implication.as_ref())
            }
            Aggregation::ProbabilisticDual { copula } => {
                b("probabilistic-dual").with("copula", copula.as_ref())
            }
            Aggregation::ProbabilisticSDual { copula } => {
                b("probabilistic-s-dual").with("copula", copula.as_ref())
            }
            Aggregation::Tabulated(t) => b("tabulated")
                .with("grid", t.grid())
                .with("values", t.values()),
        }
    }

    fn from_descriptor(d: &Descriptor) -> Result<Self> {
        let plain = |a: Aggregation| d.reader(&[]).map(|_| a);
        match d.kind.as_str() {
            "min" | "minimum" => plain(Aggregation::Minimum),
            "product" => plain(Aggregation::Product),
            "lukasiewicz-tnorm" | "lukasiewicz" => plain(Aggregation::Lukasiewicz),
            "max" | "maximum" => plain(Aggregation::Maximum),
            "probabilistic-sum" => plain(Aggregation::ProbabilisticSum),
            "bounded-sum" => plain(Aggregation::BoundedSum),
            "drastic" => plain(Aggregation::Drastic),
            "smallest-conjunctor" => plain(Aggregation::SmallestConjunctor),
            "greatest-averaging-conjunctor" => plain(Aggregation::GreatestAveragingConjunctor),
            "representable" => {
                let r = d.reader(&["generator", "negation"])?;
                let g: Generator = r.get("generator")?;
                match r.get_or::<Option<Negation>>("negation", None)? {
                    Some(n) => Aggregation::representable(g, n),
                    None => Aggregation::representable_by(g),
                }
            }
            "wqam" => {
                let r = d.reader(&["generator", "weight"])?;
                Aggregation::weighted_mean(r.get("generator")?, r.get("weight")?)
            }
            "ts-function" => {
                let r = d.reader(&["tnorm", "tconorm", "generator", "weight"])?;
                Aggregation::ts_function(
                    r.get("tnorm")?,
                    r.get("tconorm")?,
                    r.get("generator")?,
                    r.get("weight")?,
                )
            }
            "uninorm" => Aggregation::uninorm(d.reader(&["neutral"])?.get("neutral")?),
            "copula" => {
                let r = d.reader(&["family", "theta"])?;
                let family: String = r.get("family")?;
                match family.as_str() {
                    "minimum" | "min" | "M" => Ok(Aggregation::Minimum),
                    "product" | "Pi" => Ok(Aggregation::Product),
                    "lukasiewicz" | "W" => Ok(Aggregation::Lukasiewicz),
                    "fgm" => Aggregation::fgm(r.get("theta")?),
                    other => Err(unknown_kind("copula family", other)),
                }
            }
            "n-dual-of" => {
                let r = d.reader(&["aggregation", "negation"])?;
                let a: Aggregation = r.get("aggregation")?;
                a.negation_transform(&r.get("negation")?)
            }
            "conjugate-of" => {
                let r = d.reader(&["aggregation", "automorphism"])?;
                let a: Aggregation = r.get("aggregation")?;
                Ok(a.conjugate(r.get("automorphism")?))
            }
            "cutoff-mean" => Aggregation::cutoff_mean(d.reader(&["cutoff"])?.get("cutoff")?),
            "natural-dual" => {
                Aggregation::natural_dual(d.reader(&["implication"])?.get("implication")?)
            }
            "probabilistic-dual" => {
                Aggregation::probabilistic_dual(d.reader(&["copula"])?.get("copula")?)
            }
            "probabilistic-s-dual" => {
                Aggregation::probabilistic_s_dual(d.reader(&["copula"])?.get("copula")?)
            }
            "tabulated" => {
                let r = d.reader(&["grid", "values"])?;
                Aggregation::tabulated(Table2D::new(r.get("grid")?, r.get("values")?)?)
            }
            other => Err(unknown_kind("aggregation", other)),
        }
    }
}

serde_via_descriptor!(Aggregation);

/// Cancellation noise when subtracting two generator values.
pub(crate) fn roundoff(a: f64, b: f64) -> f64 {
    8.0 * f64::EPSILON * (a.abs() + b.abs())
}
