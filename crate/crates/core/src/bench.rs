//! Operation counts predicted from system dimensions, complexity reports
//! and random systems for benchmarking.

use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Aggregation, Negation};
use crate::engines::{
    infer, Engine, FuzzySet, MISOSystem, Mode, Observation, OpCount, Rule, SimilarityMeasure, SingletonInput,
    Universe,
};
use crate::error::{param, Result};
use crate::implications::Implication;

/// Input universe sizes, output size and rule count of a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub inputs: Vec<usize>,
    pub output: usize,
    pub rules: usize,
}

impl Shape {
    pub fn new(inputs: Vec<usize>, output: usize) -> Self {
        Shape {
            inputs,
            output,
            rules: 1,
        }
    }

    pub fn of(sys: &MISOSystem) -> Self {
        Shape {
            inputs: sys.inputs.iter().map(Universe::len).collect(),
            output: sys.output.len(),
            rules: sys.rules.len(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.inputs.is_empty() || self.inputs.contains(&0) || self.output == 0 || self.rules == 0 {
            return Err(param(format!("sizes must be positive: {self}")));
        }
        Ok(())
    }

    /// Size of the joint input universe.
    pub fn cells(&self) -> u64 {
        self.inputs.iter().map(|&n| n as u64).product()
    }
}

/// `5x4->3`, with `*2` appended for two rules.
impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.inputs.iter().map(usize::to_string).collect();
        write!(f, "{}->{}", dims.join("x"), self.output)?;
        if self.rules != 1 {
            write!(f, "*{}", self.rules)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Shape {
    type Err = crate::error::Error;

    /// Parses `5x4->3` or `5x4->3*2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || param(format!("cannot read shape `{s}`; expected e.g. 5x4->3"));
        let (body, rules) = match s.split_once('*') {
            Some((b, r)) => (b, r.trim().parse().map_err(|_| bad())?),
            None => (s, 1),
        };
        let (ins, out) = body.split_once("->").ok_or_else(bad)?;
        let inputs = ins
            .split('x')
            .map(|n| n.trim().parse().map_err(|_| bad()))
            .collect::<Result<Vec<usize>>>()?;
        let shape = Shape {
            inputs,
            output: out.trim().parse().map_err(|_| bad())?,
            rules,
        };
        shape.validate()?;
        Ok(shape)
    }
}

/// Closed-form per-stage counts; labels match the instrumented engines for
/// inputs named `x1`, `x2`, ...
pub fn predict(engine: Engine, mode: Mode, shape: &Shape) -> Result<OpCount> {
    shape.validate()?;
    let n = shape.output as u64;
    let p = shape.cells();
    let m = shape.inputs.len();
    let mut rule = OpCount::default();
    let hierarchical = mode == Mode::Hierarchical;

    if !hierarchical && m > 1 {
        // the left fold builds every prefix tensor n1 x ... x nk once
        let joint: u64 = shape
            .inputs
            .iter()
            .scan(1u64, |acc, &size| {
                *acc *= size as u64;
                Some(*acc)
            })
            .skip(1)
            .sum();
        rule.push("joint input", joint);
        rule.push("joint antecedent", joint);
    }
    let stages: Vec<(String, u64)> = if hierarchical {
        shape
            .inputs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, &size)| (format!("x{}: ", k + 1), size as u64))
            .collect()
    } else {
        vec![(String::new(), p)]
    };
    for (prefix, w) in stages {
        let per: Vec<(&str, u64)> = match engine {
            Engine::Bks => vec![("A(D',D)", w), ("sup", w - 1), ("implication", n)],
            Engine::Sbr => vec![
                ("similarity", 2 * w - 1),
                ("modify", w),
                ("implication", w * n),
                ("sup", (w - 1) * n),
            ],
            Engine::Tip => vec![("implication", w * n), ("combine", w * n), ("sup", (w - 1) * n)],
        };
        for (label, count) in per {
            rule.push(format!("{prefix}{label}"), count);
        }
    }

    if shape.rules == 1 {
        return Ok(rule);
    }
    let mut all = OpCount::default();
    for k in 1..=shape.rules {
        all.extend_prefixed(&format!("rule {k}: "), rule.clone());
    }
    all.push("rule aggregation", (shape.rules as u64 - 1) * n);
    Ok(all)
}

/// Instrumented counts from an actual run.
pub fn count_operations(
    engine: Engine,
    mode: Mode,
    sys: &MISOSystem,
    input: &SingletonInput,
) -> Result<OpCount> {
    Ok(infer(sys, &input.clone().into(), engine, mode)?.counts)
}

/// Mean wall-clock time of a run; excluded from any exact check.
pub fn time_inference(
    engine: Engine,
    mode: Mode,
    sys: &MISOSystem,
    obs: &Observation,
    repetitions: u32,
) -> Result<Duration> {
    let reps = repetitions.max(1);
    let start = Instant::now();
    for _ in 0..reps {
        infer(sys, obs, engine, mode)?;
    }
    Ok(start.elapsed() / reps)
}

/// Dimensions of the largest object an engine keeps: the joint tensor for
/// classical runs, a vector (BKS) or a stage matrix (SBR, TIP) otherwise.
pub fn peak_storage(engine: Engine, mode: Mode, shape: &Shape) -> Vec<usize> {
    let widest = shape.inputs.iter().copied().max().unwrap_or(0);
    match (mode, engine) {
        (Mode::Classical, _) => shape.inputs.clone(),
        (Mode::Hierarchical, Engine::Bks) => vec![widest],
        (Mode::Hierarchical, _) => vec![widest, shape.output],
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexityRow {
    pub engine: Engine,
    pub mode: Mode,
    pub shape: Shape,
    pub total: u64,
    pub peak_storage: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub rows: Vec<ComplexityRow>,
}

/// Predicted totals and storage for every engine, mode and shape.
pub fn complexity_report(engines: &[Engine], shapes: &[Shape]) -> Result<ComplexityReport> {
    let mut rows = Vec::new();
    for shape in shapes {
        for &engine in engines {
            for mode in Mode::ALL {
                rows.push(ComplexityRow {
                    engine,
                    mode,
                    shape: shape.clone(),
                    total: predict(engine, mode, shape)?.total,
                    peak_storage: peak_storage(engine, mode, shape),
                });
            }
        }
    }
    Ok(ComplexityReport { rows })
}

fn storage_text(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join("x")
}

impl ComplexityReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("engine,mode,shape,total,peak_storage,peak_dims\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.engine,
                r.mode,
                r.shape,
                r.total,
                storage_text(&r.peak_storage),
                r.peak_storage.len()
            ));
        }
        out
    }
}

impl fmt::Display for ComplexityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape_w = self.rows.iter().map(|r| r.shape.to_string().len()).chain([5]).max().unwrap_or(5);
        writeln!(f, "{:<6} {:<12} {:<shape_w$} {:>10}  peak storage", "engine", "mode", "shape", "total")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<6} {:<12} {:<shape_w$} {:>10}  {}",
                r.engine.to_string(),
                r.mode.to_string(),
                r.shape.to_string(),
                r.total,
                storage_text(&r.peak_storage)
            )?;
        }
        Ok(())
    }
}

/// The certified operator pair each engine is exercised with.
pub fn reference_operators(engine: Engine) -> (Aggregation, Implication, SimilarityMeasure) {
    let similarity = SimilarityMeasure::SupportRestrictedSupDifference;
    match engine {
        Engine::Bks => (Aggregation::Minimum, Implication::KleeneDienes, similarity),
        Engine::Sbr => (
            Aggregation::GreatestAveragingConjunctor,
            Implication::from_aggregation(Aggregation::GreatestAveragingConjunctor, Negation::Standard)
                .expect("the averaging conjunctor yields an implication"),
            similarity,
        ),
        Engine::Tip => (Aggregation::Lukasiewicz, Implication::Lukasiewicz, similarity),
    }
}

/// A system of `shape` with memberships drawn uniformly and rounded to 0.1,
/// using the engine's reference operators.
pub fn random_system(engine: Engine, shape: &Shape, rng: &mut impl Rng) -> Result<MISOSystem> {
    shape.validate()?;
    let inputs: Vec<Universe> = shape
        .inputs
        .iter()
        .enumerate()
        .map(|(k, &size)| Universe::numbered(&format!("x{}", k + 1), size))
        .collect();
    let output = Universe::numbered("y", shape.output);
    let mut draw = |u: &Universe| {
        let m = (0..u.len()).map(|_| (rng.gen_range(0..=10) as f64) / 10.0).collect();
        FuzzySet::new(u.clone(), m)
    };
    let rules = (0..shape.rules)
        .map(|_| {
            Ok(Rule {
                antecedents: inputs.iter().map(&mut draw).collect::<Result<_>>()?,
                consequent: draw(&output)?,
            })
        })
        .collect::<Result<_>>()?;
    let (a, i, s) = reference_operators(engine);
    MISOSystem::new(inputs, output, rules, a, i, s)
}

/// One uniformly chosen label per input.
pub fn random_singleton(sys: &MISOSystem, rng: &mut impl Rng) -> SingletonInput {
    SingletonInput {
        labels: sys
            .inputs
            .iter()
            .map(|u| u.labels[rng.gen_range(0..u.len())].clone())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reference_shape_predictions() {
        let shape: Shape = "5x4->3".parse().unwrap();
        let c = predict(Engine::Bks, Mode::Classical, &shape).unwrap();
        assert_eq!(c.vector(), vec![20, 20, 20, 19, 3]);
        assert_eq!(c.total, 82);
        let h = predict(Engine::Bks, Mode::Hierarchical, &shape).unwrap();
        assert_eq!(h.vector(), vec![4, 3, 3, 5, 4, 3]);
        assert_eq!(h.total, 22);
    }

    #[test]
    fn single_input_modes_agree() {
        let shape = Shape::new(vec![7], 4);
        for e in Engine::ALL {
            assert_eq!(
                predict(e, Mode::Classical, &shape).unwrap().vector(),
                predict(e, Mode::Hierarchical, &shape).unwrap().vector()
            );
        }
    }

    #[test]
    fn predictions_match_instrumented_runs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for shape in ["3x2->2", "2x3x2->3", "4->2*3"] {
            let shape: Shape = shape.parse().unwrap();
            for e in Engine::ALL {
                let sys = random_system(e, &shape, &mut rng).unwrap();
                let input = random_singleton(&sys, &mut rng);
                for m in Mode::ALL {
                    let got = count_operations(e, m, &sys, &input).unwrap();
                    assert_eq!(got, predict(e, m, &shape).unwrap(), "{e} {m} {shape}");
                }
            }
        }
    }

    #[test]
    fn report_storage() {
        let report = complexity_report(&[Engine::Bks, Engine::Tip], &["5x4->3".parse().unwrap()]).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert_eq!(report.rows[0].peak_storage, vec![5, 4]);
        assert_eq!(report.rows[1].peak_storage, vec![5]);
        assert_eq!(report.rows[3].peak_storage, vec![5, 3]);
        let csv = report.to_csv();
        assert!(csv.lines().nth(1).unwrap().starts_with("bks,classical,5x4->3,82,5x4,2"));
        assert!(report.to_string().lines().count() == 5);
    }

    #[test]
    fn shape_parsing() {
        let s: Shape = "2x3->4*2".parse().unwrap();
        assert_eq!(s.rules, 2);
        assert_eq!(s.to_string(), "2x3->4*2");
        assert!("2x0->3".parse::<Shape>().is_err());
        assert!("abc".parse::<Shape>().is_err());
    }
}
