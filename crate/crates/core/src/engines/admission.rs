use super::fuzzy::{combine_counted, FuzzySet};
use super::{Engine, MISOSystem, Mode};
use crate::algebra::{is_grid_associative, is_grid_commutative};
use crate::error::{Error, Result, Witness};
use crate::grid::{Certification, Grid, WorstGap, DEFAULT_CUBE_GRID, DEFAULT_GRID};
use crate::implications::properties::planar_property;
use crate::implications::{check_lia, PropertyResult};
use crate::lia::HypothesisCheck;

struct Ledger {
    checks: Vec<HypothesisCheck>,
}

impl Ledger {
    fn push(&mut self, hypothesis: &str, holds: bool, witness: Option<Witness>, certification: Certification) {
        self.checks.push(HypothesisCheck {
            hypothesis: hypothesis.to_string(),
            holds,
            witness,
            certification,
        });
    }

    fn property(&mut self, hypothesis: &str, r: PropertyResult) {
        self.push(hypothesis, r.holds, r.witness, r.certification);
    }
}

/// Checks the hypotheses `engine` needs in `mode` and returns the ledger,
/// or an admission error carrying it.
pub fn admit(sys: &MISOSystem, inputs: &[FuzzySet], engine: Engine, mode: Mode) -> Result<Vec<HypothesisCheck>> {
    let a = &sys.combiner;
    let i = &sys.implication;
    let tol = a.tolerance().max(i.tolerance());
    let mut ledger = Ledger { checks: Vec::new() };
    let hierarchical = mode == Mode::Hierarchical;

    if sys.arity() > 2 || (engine == Engine::Sbr && hierarchical) {
        let (holds, w) = is_grid_associative(a, DEFAULT_CUBE_GRID, tol);
        ledger.push("combiner associative", holds, w, Certification::grid(DEFAULT_CUBE_GRID, 3, tol));
    }

    let conjunctor = |ledger: &mut Ledger| {
        let (l, r) = (a.value(1.0, 0.0), a.value(0.0, 1.0));
        let holds = l.abs() <= tol && r.abs() <= tol;
        let w = (!holds).then(|| Witness::new(&[1.0, 0.0], l, r));
        ledger.push("combiner is a conjunctor", holds, w, Certification::grid(2, 2, tol));
    };
    let singleton = |ledger: &mut Ledger| {
        let bad = inputs.iter().position(|d| d.singleton_index().is_none());
        let w = bad.map(|k| Witness::new(inputs[k].memberships(), 0.0, 1.0));
        ledger.push("singleton inputs", bad.is_none(), w, Certification::Instance);
    };
    let lia = |ledger: &mut Ledger| -> Result<()> {
        ledger.property("LIA", check_lia(i, a, DEFAULT_CUBE_GRID, tol)?);
        Ok(())
    };

    match (engine, mode) {
        (Engine::Bks, Mode::Hierarchical) => {
            ledger.property("NP", planar_property(i, "NP", DEFAULT_GRID)?);
            conjunctor(&mut ledger);
            let mut gap = WorstGap::default();
            for y in Grid::new(DEFAULT_GRID)?.values() {
                let v = a.value(1.0, y);
                gap.observe(&[1.0, y], v, y, (v - y).abs());
            }
            let w = gap.into_witness(tol);
            ledger.push(
                "combiner has left neutral element 1",
                w.is_none(),
                w,
                Certification::grid(DEFAULT_GRID, 2, tol),
            );
            lia(&mut ledger)?;
            singleton(&mut ledger);
        }
        (Engine::Sbr, Mode::Hierarchical) => {
            let (holds, w) = is_grid_commutative(a, DEFAULT_GRID, tol);
            ledger.push("combiner commutative", holds, w, Certification::grid(DEFAULT_GRID, 2, tol));
            lia(&mut ledger)?;
            let slices: Vec<&[f64]> = inputs.iter().map(FuzzySet::memberships).collect();
            let mut gap = WorstGap::default();
            for rule in &sys.rules {
                let antecedents: Vec<&[f64]> = rule.antecedents.iter().map(FuzzySet::memberships).collect();
                let parts = slices
                    .iter()
                    .zip(&antecedents)
                    .map(|(p, d)| sys.similarity.compute(p, d, &mut 0))
                    .collect::<Result<Vec<_>>>()?;
                let folded = parts[1..].iter().fold(parts[0], |acc, &s| a.value(acc, s));
                let joint = if slices.len() == 1 {
                    parts[0]
                } else {
                    let jp = combine_counted(a, &slices, &mut 0);
                    let j = combine_counted(a, &antecedents, &mut 0);
                    sys.similarity.compute(&jp.values, &j.values, &mut 0)?
                };
                gap.observe(&parts, joint, folded, (joint - folded).abs());
            }
            let w = gap.into_witness(tol);
            ledger.push("similarity distributes over the combiner", w.is_none(), w, Certification::Instance);
        }
        (Engine::Tip, _) => {
            ledger.property("RC2", planar_property(i, "RC2", DEFAULT_GRID)?);
            ledger.property("OP", planar_property(i, "OP", DEFAULT_GRID)?);
            lia(&mut ledger)?;
            if hierarchical {
                conjunctor(&mut ledger);
                singleton(&mut ledger);
            }
        }
        _ => {}
    }

    let checks = ledger.checks;
    match checks.iter().find(|c| !c.holds) {
        None => Ok(checks),
        Some(failed) => {
            let mut reason = format!("{} fails", failed.hypothesis);
            if let Some(w) = &failed.witness {
                reason.push_str(&format!(" at {w}"));
            }
            Err(Error::Admission {
                engine: format!("{engine} {mode}"),
                reason,
                ledger: checks.clone(),
            })
        }
    }
}
