//! Companion constructions: the aggregation that makes a given implication
//! satisfy the law of importation, and the implication that does so for a
//! given aggregation.

use serde::{Deserialize, Serialize};

use crate::algebra::classify::{associativity_gap, is_grid_commutative};
use crate::algebra::negation::has_jump;
use crate::algebra::{Aggregation, Generator, Negation};
use crate::error::{Error, Result, Witness};
use crate::grid::{Certification, Grid, WorstGap, DEFAULT_CUBE_GRID, DEFAULT_GRID};
use crate::implications::properties::ordering_holds;
use crate::implications::{check_lia, Implication, PropertyResult};

/// One precondition of a construction and whether it was met.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub hypothesis: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub certification: Certification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Uniqueness {
    /// The partner is the only one.
    Unique,
    /// A partner exists; others may too.
    Exists,
    /// No partner exists, possibly within a restricted class.
    None,
}

/// The result that justifies a construction or verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// `Ñ(A(N(x), N(y)))` for an (A,N)-implication.
    NegationDualCompanion,
    /// (A,N)-implications with the smallest or greatest negation.
    ExtremeNegationCompanion,
    /// A residual implication pairs with its own aggregation.
    ResidualSelfCompanion,
    /// `Ñ_J(J(Ñ_J(N_J(x)), N_J(y)))` for a QL-implication `J`.
    QlNaturalDual,
    /// QL-implications whose disjunctor has no one divisors.
    QlGreatestNegation,
    /// f-implications pair only with the product.
    FGeneratedProduct,
    /// g-implications pair only with the product.
    GGeneratedProduct,
    /// `1 - C(x, 1 - y) / x` for probabilistic implications.
    ProbabilisticDual,
    /// `x - C(x, 1 - y)` for probabilistic S-implications.
    ProbabilisticSDual,
    /// Power implications of nilpotent t-norms have no partner.
    NilpotentPowerObstruction,
    /// Power implications of min and strict t-norms fail EP.
    PowerExchangeObstruction,
    /// `N(A(x, Ñ(y)))` for an associative conjunctor.
    AggregationBuilt,
    /// `f^-1(max(0, f(N(x)) + f(y) - f(0)))` with `f = g ∘ N^-1`.
    RepresentablePartner,
}

/// Which member of the pair was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    Aggregation,
    Implication,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompanionResult {
    pub implication: Option<Implication>,
    pub aggregation: Option<Aggregation>,
    /// The member that was built; the other one was given.
    pub constructed: Role,
    pub uniqueness: Uniqueness,
    /// Prose description of the admissible class when a whole family works,
    /// or of the class ruled out by a negative verdict.
    pub family: Option<String>,
    pub hypotheses_checked: Vec<HypothesisCheck>,
    pub source: Source,
    /// Grid certification of the returned pair.
    pub lia: Option<PropertyResult>,
    /// Witness backing a negative verdict.
    pub counterexample: Option<Witness>,
}

impl CompanionResult {
    pub fn pair(&self) -> Option<(&Implication, &Aggregation)> {
        Some((self.implication.as_ref()?, self.aggregation.as_ref()?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremeNegation {
    Smallest,
    Greatest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbabilisticVariant {
    Plain,
    S,
}

#[derive(Default)]
struct Ledger {
    checks: Vec<HypothesisCheck>,
}

impl Ledger {
    fn record(&mut self, hypothesis: &str, holds: bool, witness: Option<Witness>, cert: Certification) -> bool {
        self.checks.push(HypothesisCheck {
            hypothesis: hypothesis.to_string(),
            holds,
            witness,
            certification: cert,
        });
        holds
    }

    fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    fn reject(self, construction: &str, counterexample: Option<Witness>, note: Option<&str>) -> Error {
        Error::Hypothesis {
            construction: construction.to_string(),
            failed: self.checks.into_iter().filter(|c| !c.holds).collect(),
            counterexample,
            note: note.map(str::to_string),
        }
    }

    fn disjunctor(&mut self, a: &Aggregation) -> bool {
        let holds = a.value(1.0, 0.0) == 1.0 && a.value(0.0, 1.0) == 1.0;
        let w = (!holds).then(|| Witness::new(&[1.0, 0.0], a.value(1.0, 0.0), 1.0));
        self.record("disjunctor", holds, w, Certification::Analytic)
    }

    fn conjunctor(&mut self, a: &Aggregation) -> bool {
        let holds = a.value(1.0, 0.0) == 0.0 && a.value(0.0, 1.0) == 0.0;
        let w = (!holds).then(|| Witness::new(&[1.0, 0.0], a.value(1.0, 0.0), 0.0));
        self.record("conjunctor", holds, w, Certification::Analytic)
    }

    fn associative(&mut self, a: &Aggregation) -> bool {
        let tol = a.tolerance();
        let cube = Grid::new(DEFAULT_CUBE_GRID).expect("valid grid");
        let w = associativity_gap(a, cube).into_witness(tol);
        self.record(
            "associative",
            w.is_none(),
            w,
            Certification::grid(DEFAULT_CUBE_GRID, 3, tol),
        )
    }

    fn commutative(&mut self, a: &Aggregation) -> bool {
        let tol = a.tolerance();
        let (holds, w) = is_grid_commutative(a, DEFAULT_GRID, tol);
        self.record("commutative", holds, w, Certification::grid(DEFAULT_GRID, 2, tol))
    }

    fn continuous_negation(&mut self, n: &Negation) -> bool {
        self.record(
            "continuous negation",
            n.is_continuous(),
            None,
            Certification::grid(1001, 1, n.tolerance()),
        )
    }

    /// Certifies the final pair on the default cube grid.
    fn certify(mut self, construction: &str, i: &Implication, a: &Aggregation) -> Result<(Self, PropertyResult)> {
        let tol = i.tolerance().max(a.tolerance());
        let r = check_lia(i, a, DEFAULT_CUBE_GRID, tol)?;
        if !r.holds {
            self.record("LIA on grid", false, r.witness.clone(), r.certification.clone());
            return Err(self.reject(construction, r.witness, None));
        }
        Ok((self, r))
    }
}

fn result(
    ledger: Ledger,
    lia: PropertyResult,
    implication: Implication,
    aggregation: Aggregation,
    constructed: Role,
    uniqueness: Uniqueness,
    source: Source,
) -> CompanionResult {
    CompanionResult {
        implication: Some(implication),
        aggregation: Some(aggregation),
        constructed,
        uniqueness,
        family: None,
        hypotheses_checked: ledger.checks,
        source,
        lia: Some(lia),
        counterexample: None,
    }
}

/// Companion of the (A,N)-implication `A(N(x), y)`.
pub fn companion_for_an_implication(a: &Aggregation, n: &Negation) -> Result<CompanionResult> {
    const WHAT: &str = "(A,N)-implication companion";
    let mut ledger = Ledger::default();
    ledger.disjunctor(a);
    ledger.associative(a);
    if !ledger.continuous_negation(n) {
        return Err(ledger.reject(
            WHAT,
            None,
            Some("for the smallest or greatest negation use companion_for_extreme_negations"),
        ));
    }
    if !ledger.all_hold() {
        return Err(ledger.reject(WHAT, None, None));
    }
    let i = Implication::from_disjunctor(a.clone(), n.clone())?;
    let partner = a.negation_transform(n)?.simplified();
    let natural = i.natural_negation();
    let unique = n.is_strict() && natural.is_strict();
    ledger.record(
        "strict negation with injective natural negation",
        unique,
        None,
        Certification::grid(1001, 1, n.tolerance()),
    );
    let (ledger, lia) = ledger.certify(WHAT, &i, &partner)?;
    let uniqueness = if unique { Uniqueness::Unique } else { Uniqueness::Exists };
    Ok(result(ledger, lia, i, partner, Role::Aggregation, uniqueness, Source::NegationDualCompanion))
}

/// Companions of `A(N(x), y)` for the two discontinuous extreme negations.
pub fn companion_for_extreme_negations(a: &Aggregation, which: ExtremeNegation) -> Result<CompanionResult> {
    const WHAT: &str = "extreme-negation companion";
    let mut ledger = Ledger::default();
    ledger.disjunctor(a);
    ledger.associative(a);
    if !ledger.all_hold() {
        return Err(ledger.reject(WHAT, None, None));
    }
    let (n, member, family) = match which {
        ExtremeNegation::Smallest => (
            Negation::Smallest,
            Aggregation::Minimum,
            "any conjunctor without zero divisors",
        ),
        ExtremeNegation::Greatest => (
            Negation::Greatest,
            Aggregation::Product,
            "any conjunctor without one divisors",
        ),
    };
    let i = Implication::from_disjunctor(a.clone(), n)?;
    let (ledger, lia) = ledger.certify(WHAT, &i, &member)?;
    let mut r = result(ledger, lia, i, member, Role::Aggregation, Uniqueness::Exists, Source::ExtremeNegationCompanion);
    r.family = Some(family.to_string());
    Ok(r)
}

/// The residual implication of `a` paired with `a` itself.
pub fn companion_for_r_implication(a: &Aggregation) -> Result<CompanionResult> {
    const WHAT: &str = "residual companion";
    let mut ledger = Ledger::default();
    ledger.associative(a);
    ledger.commutative(a);
    let w = left_discontinuity(a);
    ledger.record("left-continuous", w.is_none(), w, Certification::grid(DEFAULT_GRID, 2, a.tolerance()));
    let op = Implication::residual_operation(a.clone());
    let axioms = op.axiom_violation(DEFAULT_GRID);
    ledger.record(
        "residual is an implication",
        axioms.is_none(),
        axioms.map(|(_, w)| w),
        Certification::grid(DEFAULT_GRID, 2, op.tolerance()),
    );
    if !ledger.all_hold() {
        let obstruction = universal_obstruction(&op);
        let note = obstruction.as_ref().map(|_| {
            "I(1, z) != I(1, I(1, z)), so LIA fails with every aggregation that has A(1, 1) = 1"
        });
        return Err(ledger.reject(WHAT, obstruction, note));
    }
    let i = Implication::residual(a.clone())?;
    let op_holds = ordering_holds(&i, DEFAULT_GRID);
    ledger.record("OP", op_holds, None, Certification::grid(DEFAULT_GRID, 2, i.tolerance()));
    let (ledger, lia) = ledger.certify(WHAT, &i, a)?;
    let uniqueness = if op_holds { Uniqueness::Unique } else { Uniqueness::Exists };
    Ok(result(ledger, lia, i, a.clone(), Role::Aggregation, uniqueness, Source::ResidualSelfCompanion))
}

/// Companion of the QL-implication `A1(N(x), A2(x, y))`.
pub fn companion_for_ql(a1: &Aggregation, a2: &Aggregation, n: &Negation) -> Result<CompanionResult> {
    const WHAT: &str = "QL companion";
    let mut ledger = Ledger::default();
    ledger.disjunctor(a1);
    ledger.conjunctor(a2);
    let ql = Implication::ql(a1.clone(), a2.clone(), n.clone());
    let axiom_witness = ql.as_ref().err().and_then(|e| match e {
        Error::Axiom { witness, .. } => Some(witness.clone()),
        _ => None,
    });
    ledger.record(
        "QL-operation is an implication",
        ql.is_ok(),
        axiom_witness,
        Certification::grid(DEFAULT_GRID, 2, a1.tolerance().max(a2.tolerance())),
    );
    if !ledger.all_hold() {
        return Err(ledger.reject(WHAT, None, None));
    }
    let j = ql?;

    if !has_one_divisors(a1) {
        // LEM for a disjunctor without one divisors forces N to be the greatest negation
        let greatest = *n == Negation::Greatest;
        ledger.associative(a1);
        ledger.record("negation is the greatest negation", greatest, None, Certification::Analytic);
        if !ledger.all_hold() {
            return Err(ledger.reject(WHAT, None, None));
        }
        let member = Aggregation::Product;
        let (ledger, lia) = ledger.certify(WHAT, &j, &member)?;
        let mut r = result(ledger, lia, j, member, Role::Aggregation, Uniqueness::Exists, Source::QlGreatestNegation);
        r.family = Some("any aggregation with A(x, y) = 1 only at x = y = 1".to_string());
        return Ok(r);
    }

    ledger.continuous_negation(n);
    let h_continuous = !has_jump(|x| a1.value(x, 0.0));
    ledger.record(
        "x -> A1(x, 0) continuous",
        h_continuous,
        None,
        Certification::grid(1001, 1, a1.tolerance()),
    );
    if !ledger.all_hold() {
        return Err(ledger.reject(WHAT, None, None));
    }
    let partner = Aggregation::natural_dual(j.clone())?;
    let (ledger, lia) = ledger.certify(WHAT, &j, &partner)?;
    Ok(result(ledger, lia, j, partner, Role::Aggregation, Uniqueness::Unique, Source::QlNaturalDual))
}

pub fn companion_for_f_implication(f: &Generator) -> Result<CompanionResult> {
    let i = Implication::f_generated(f.clone())?;
    let (ledger, lia) = Ledger::default().certify("f-implication companion", &i, &Aggregation::Product)?;
    Ok(result(ledger, lia, i, Aggregation::Product, Role::Aggregation, Uniqueness::Unique, Source::FGeneratedProduct))
}

pub fn companion_for_g_implication(g: &Generator) -> Result<CompanionResult> {
    let i = Implication::g_generated(g.clone())?;
    let mut ledger = Ledger::default();
    // a partner of a g-implication cannot have zero divisors
    ledger.record("companion has no zero divisors", true, None, Certification::Analytic);
    let (ledger, lia) = ledger.certify("g-implication companion", &i, &Aggregation::Product)?;
    Ok(result(ledger, lia, i, Aggregation::Product, Role::Aggregation, Uniqueness::Unique, Source::GGeneratedProduct))
}

/// Companion of a probabilistic or probabilistic S-implication, gated on the
/// copula functional equation over a 41-point cube grid.
pub fn companion_for_probabilistic(c: &Aggregation, variant: ProbabilisticVariant) -> Result<CompanionResult> {
    let what = match variant {
        ProbabilisticVariant::Plain => "probabilistic companion",
        ProbabilisticVariant::S => "probabilistic S companion",
    };
    let i = match variant {
        ProbabilisticVariant::Plain => Implication::probabilistic(c.clone())?,
        ProbabilisticVariant::S => Implication::probabilistic_s(c.clone())?,
    };
    let tol = c.tolerance();
    let violation = first_equation_violation(c, variant, tol);
    let mut ledger = Ledger::default();
    ledger.record(
        "copula functional equation",
        violation.is_none(),
        violation.clone(),
        Certification::grid(DEFAULT_CUBE_GRID, 3, tol),
    );
    if violation.is_some() {
        return Err(ledger.reject(
            what,
            violation,
            Some("the equation is sufficient, not necessary: probabilistic implications may satisfy LIA without it"),
        ));
    }
    let (partner, source) = match variant {
        ProbabilisticVariant::Plain => (Aggregation::probabilistic_dual(c.clone())?, Source::ProbabilisticDual),
        ProbabilisticVariant::S => (Aggregation::probabilistic_s_dual(c.clone())?.simplified(), Source::ProbabilisticSDual),
    };
    let (ledger, lia) = ledger.certify(what, &i, &partner)?;
    Ok(result(ledger, lia, i, partner, Role::Aggregation, Uniqueness::Unique, source))
}

/// Negative verdicts for power implications. Never returns a partner.
pub fn power_implication_lia_verdict(t: &Aggregation) -> Result<CompanionResult> {
    let i = Implication::power(t.clone())?;
    let mut ledger = Ledger::default();
    let (family, source, counterexample) = match t {
        Aggregation::Lukasiewicz => {
            // z = 0 forces A(x, 1) = x, after which LIA fails for 1 > x > z
            let (x, z) = (0.8, 0.5);
            let w = Witness::new(&[x, 1.0, z], i.value(x, z), i.value(x, i.value(1.0, z)));
            ledger.record("A(x, 1) = x forced by z = 0", true, None, Certification::Analytic);
            ledger.record("LIA at (x, 1, z) with 1 > x > z", false, Some(w.clone()), Certification::Instance);
            ("every aggregation function", Source::NilpotentPowerObstruction, w)
        }
        _ => {
            let ep = exchange_witness(&i);
            ledger.record(
                "EP",
                ep.is_none(),
                ep.clone(),
                Certification::grid(DEFAULT_CUBE_GRID, 3, i.tolerance()),
            );
            // a zero divisor A(x, y) = 0 gives I(0, 0) = 1 against I(x, I(y, 0)) = 0
            let zero = Witness::new(&[0.5, 0.5, 0.0], i.value(0.0, 0.0), i.value(0.5, i.value(0.5, 0.0)));
            ledger.record("LIA with a zero divisor at (0.5, 0.5)", false, Some(zero), Certification::Instance);
            (
                "commutative aggregations and aggregations with zero divisors",
                Source::PowerExchangeObstruction,
                ep.expect("power implications of min and product violate EP"),
            )
        }
    };
    Ok(CompanionResult {
        implication: Some(i),
        aggregation: None,
        constructed: Role::Aggregation,
        uniqueness: Uniqueness::None,
        family: Some(family.to_string()),
        hypotheses_checked: ledger.checks,
        source,
        lia: None,
        counterexample: Some(counterexample),
    })
}

/// Whether `N(y1) = N(y2)` implies `N(A(x, y1)) = N(A(x, y2))` on the grid.
pub fn check_a_compatible(n: &Negation, a: &Aggregation, points: usize) -> (bool, Option<Witness>) {
    let tol = n.tolerance().max(a.tolerance());
    let xs = Grid::new(points.max(2)).expect("valid grid").values();
    let nv: Vec<f64> = xs.iter().map(|&y| n.value(y)).collect();
    let mut gap = WorstGap::default();
    // N is monotone, so equal values form runs; compare each run to its start
    let mut start = 0;
    for k in 1..xs.len() {
        if (nv[k] - nv[start]).abs() > tol {
            start = k;
            continue;
        }
        for &x in &xs {
            let l = n.value(a.value(x, xs[start]));
            let r = n.value(a.value(x, xs[k]));
            gap.observe(&[x, xs[start], xs[k]], l, r, (l - r).abs());
        }
    }
    let w = gap.into_witness(2.0 * tol);
    (w.is_none(), w)
}

/// `N(A(x, Ñ(y)))` for an associative conjunctor and an A-compatible
/// continuous negation.
pub fn implication_from_aggregation(a: &Aggregation, n: &Negation) -> Result<CompanionResult> {
    const WHAT: &str = "implication from aggregation";
    let mut ledger = Ledger::default();
    ledger.conjunctor(a);
    ledger.associative(a);
    ledger.continuous_negation(n);
    let (compatible, w) = check_a_compatible(n, a, DEFAULT_GRID);
    ledger.record(
        "A-compatible negation",
        compatible,
        w.clone(),
        Certification::grid(DEFAULT_GRID, 3, 2.0 * n.tolerance().max(a.tolerance())),
    );
    if !ledger.all_hold() {
        return Err(ledger.reject(WHAT, w, None));
    }
    let i = Implication::from_aggregation(a.clone(), n.clone())?;
    let (ledger, lia) = ledger.certify(WHAT, &i, a)?;
    Ok(result(ledger, lia, i, a.clone(), Role::Implication, Uniqueness::Exists, Source::AggregationBuilt))
}

/// The implication paired with the representable aggregation
/// `g^-1(max(0, g(x) + g(y) - g(1)))`.
pub fn implication_for_representable(g: &Generator, n: &Negation) -> Result<CompanionResult> {
    let i = Implication::representable_partner(g.clone(), n.clone())?;
    let a = Aggregation::representable_by(g.clone())?;
    let (ledger, lia) = Ledger::default().certify("representable partner", &i, &a)?;
    Ok(result(ledger, lia, i, a, Role::Implication, Uniqueness::Exists, Source::RepresentablePartner))
}

/// Grid heuristic for left-continuity in each argument.
fn left_discontinuity(a: &Aggregation) -> Option<Witness> {
    const H: f64 = 1e-9;
    const JUMP: f64 = 1e-4;
    let xs = Grid::new(DEFAULT_GRID).expect("valid grid").values();
    let mut gap = WorstGap::default();
    for &x in &xs {
        for &y in xs.iter().filter(|&&y| y > 0.0) {
            let (l, r) = (a.value(x, y), a.value(x, y - H));
            gap.observe(&[x, y], l, r, (l - r).abs());
            let (l, r) = (a.value(y, x), a.value(y - H, x));
            gap.observe(&[y, x], l, r, (l - r).abs());
        }
    }
    gap.into_witness(JUMP)
}

/// With `A(1, 1) = 1`, LIA at `(1, 1, z)` reads `I(1, z) = I(1, I(1, z))`.
/// Probes a coarse grid first so the witness is a round number.
pub fn universal_obstruction(i: &Implication) -> Option<Witness> {
    let tol = i.tolerance();
    [11, DEFAULT_GRID].into_iter().find_map(|points| {
        Grid::new(points).expect("valid grid").values().into_iter().find_map(|z| {
            let (l, r) = (i.value(1.0, z), i.value(1.0, i.value(1.0, z)));
            ((l - r).abs() > tol).then(|| Witness::new(&[1.0, 1.0, z], l, r))
        })
    })
}

fn has_one_divisors(a: &Aggregation) -> bool {
    let xs = Grid::new(DEFAULT_GRID).expect("valid grid").values();
    let tol = a.tolerance();
    xs.iter()
        .filter(|&&x| x < 1.0)
        .any(|&x| xs.iter().filter(|&&y| y < 1.0).any(|&y| a.value(x, y) >= 1.0 - tol))
}

fn exchange_witness(i: &Implication) -> Option<Witness> {
    let zs = Grid::new(DEFAULT_CUBE_GRID).expect("valid grid").values();
    let mut gap = WorstGap::default();
    for &x in &zs {
        for &y in &zs {
            for &z in &zs {
                let (l, r) = (i.value(x, i.value(y, z)), i.value(y, i.value(x, z)));
                gap.observe(&[x, y, z], l, r, (l - r).abs());
            }
        }
    }
    gap.into_witness(i.tolerance())
}

/// First grid triple violating the copula equation behind the construction.
fn first_equation_violation(c: &Aggregation, variant: ProbabilisticVariant, tol: f64) -> Option<Witness> {
    // 0 / 0 = 1
    let ratio = |num: f64, den: f64| if den == 0.0 { 1.0 } else { num / den };
    let zs = Grid::new(DEFAULT_CUBE_GRID).expect("valid grid").values();
    for &x in &zs {
        for &y in &zs {
            for &z in &zs {
                let (l, r) = match variant {
                    ProbabilisticVariant::Plain => {
                        let cxy = c.value(x, y);
                        let inner = c.value(x, ratio(c.value(1.0 - y, z), 1.0 - y).clamp(0.0, 1.0));
                        (
                            x * x * c.value((1.0 - ratio(cxy, x)).clamp(0.0, 1.0), z),
                            x * inner - cxy * inner,
                        )
                    }
                    ProbabilisticVariant::S => {
                        let cxy = c.value(x, y);
                        (
                            c.value(x, (c.value(1.0 - y, z) + y).clamp(0.0, 1.0)),
                            cxy + c.value((x - cxy).clamp(0.0, 1.0), z),
                        )
                    }
                };
                if (l - r).abs() > tol {
                    return Some(Witness::new(&[x, y, z], l, r));
                }
            }
        }
    }
    None
}
