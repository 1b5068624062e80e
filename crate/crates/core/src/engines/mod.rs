//! Fuzzy sets on finite universes, MISO rule systems and the BKS, SBR and
//! TIP inference engines in classical and hierarchical form.

mod admission;
pub mod bks;
pub mod count;
pub mod fuzzy;
pub mod sbr;
pub mod system;
pub mod tip;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use admission::admit;
pub use count::{OpCount, Stage};
pub use fuzzy::{combine_antecedents, FuzzySet, Tensor, Universe};
pub use system::{similarity, MISOSystem, Observation, Rule, SimilarityMeasure, SingletonInput};

use crate::error::Result;
use crate::lia::HypothesisCheck;
use count::Counter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    /// Bandler-Kohout subproduct.
    Bks,
    /// Similarity-based reasoning.
    Sbr,
    /// Triple implication principle.
    Tip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// One pass over the joint input universe.
    Classical,
    /// A cascade of single-input stages, last input innermost.
    Hierarchical,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Bks, Engine::Sbr, Engine::Tip];
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Classical, Mode::Hierarchical];
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Engine::Bks => "bks",
            Engine::Sbr => "sbr",
            Engine::Tip => "tip",
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Mode::Classical => "classical",
            Mode::Hierarchical => "hierarchical",
        })
    }
}

/// A named intermediate vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStage {
    pub label: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RuleTrace {
    pub stages: Vec<TraceStage>,
}

impl RuleTrace {
    fn record(&mut self, label: impl Into<String>, values: Vec<f64>) {
        self.stages.push(TraceStage {
            label: label.into(),
            values,
        });
    }

    pub fn get(&self, label: &str) -> Option<&[f64]> {
        self.stages
            .iter()
            .find(|s| s.label == label)
            .map(|s| s.values.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InferenceReport {
    pub engine: Engine,
    pub mode: Mode,
    pub output: FuzzySet,
    pub counts: OpCount,
    /// One trace per rule.
    pub rules: Vec<RuleTrace>,
    /// Hypotheses checked before running.
    pub admission: Vec<HypothesisCheck>,
}

impl InferenceReport {
    pub fn memberships(&self) -> &[f64] {
        self.output.memberships()
    }

    /// An intermediate of the first rule.
    pub fn trace(&self, label: &str) -> Option<&[f64]> {
        self.rules.first().and_then(|r| r.get(label))
    }
}

/// What one rule produced.
pub(crate) struct RuleRun {
    pub output: Vec<f64>,
    pub counts: OpCount,
    pub trace: RuleTrace,
}

/// Runs `engine` in `mode` on `sys` after its admission checks.
pub fn infer(sys: &MISOSystem, obs: &Observation, engine: Engine, mode: Mode) -> Result<InferenceReport> {
    let inputs = sys.resolve(obs)?;
    let admission = admit(sys, &inputs, engine, mode)?;
    let slices: Vec<&[f64]> = inputs.iter().map(FuzzySet::memberships).collect();

    let runs: Vec<RuleRun> = sys
        .rules
        .iter()
        .map(|rule| match (engine, mode) {
            (Engine::Bks, Mode::Classical) => bks::classical(sys, &slices, rule),
            (Engine::Bks, Mode::Hierarchical) => bks::hierarchical(sys, &slices, rule),
            (Engine::Sbr, Mode::Classical) => sbr::classical(sys, &slices, rule),
            (Engine::Sbr, Mode::Hierarchical) => sbr::hierarchical(sys, &slices, rule),
            (Engine::Tip, Mode::Classical) => tip::classical(sys, &slices, rule),
            (Engine::Tip, Mode::Hierarchical) => tip::hierarchical(sys, &slices, rule),
        })
        .collect::<Result<_>>()?;

    let mut counts = OpCount::default();
    let mut rules = Vec::with_capacity(runs.len());
    let mut output: Option<Vec<f64>> = None;
    let mut c = Counter::default();
    let many = runs.len() > 1;
    for (k, run) in runs.into_iter().enumerate() {
        if many {
            counts.extend_prefixed(&format!("rule {}: ", k + 1), run.counts);
        } else {
            counts = run.counts;
        }
        output = Some(match output {
            None => run.output,
            Some(acc) => acc
                .iter()
                .zip(&run.output)
                .map(|(&u, &v)| c.tick(u.min(v)))
                .collect(),
        });
        rules.push(run.trace);
    }
    if many {
        counts.push("rule aggregation", c.take());
    }
    let memberships = output
        .expect("systems have rules")
        .into_iter()
        .map(|v| v.clamp(0.0, 1.0))
        .collect();
    Ok(InferenceReport {
        engine,
        mode,
        output: FuzzySet::new(sys.output.clone(), memberships)?,
        counts,
        rules,
        admission,
    })
}

pub fn bks_classical(sys: &MISOSystem, input: &SingletonInput) -> Result<InferenceReport> {
    infer(sys, &input.clone().into(), Engine::Bks, Mode::Classical)
}

pub fn bks_hierarchical(sys: &MISOSystem, input: &SingletonInput) -> Result<InferenceReport> {
    infer(sys, &input.clone().into(), Engine::Bks, Mode::Hierarchical)
}

pub fn sbr_classical(sys: &MISOSystem, input: &SingletonInput) -> Result<InferenceReport> {
    infer(sys, &input.clone().into(), Engine::Sbr, Mode::Classical)
}

pub fn sbr_hierarchical(sys: &MISOSystem, input: &SingletonInput) -> Result<InferenceReport> {
    infer(sys, &input.clone().into(), Engine::Sbr, Mode::Hierarchical)
}

pub fn tip_classical(sys: &MISOSystem, input: &SingletonInput) -> Result<InferenceReport> {
    infer(sys, &input.clone().into(), Engine::Tip, Mode::Classical)
}

pub fn tip_hierarchical(sys: &MISOSystem, input: &SingletonInput) -> Result<InferenceReport> {
    infer(sys, &input.clone().into(), Engine::Tip, Mode::Hierarchical)
}

/// Joint input and joint antecedent tensors, or the sets themselves when
/// there is a single input.
pub(crate) fn joints(
    sys: &MISOSystem,
    inputs: &[&[f64]],
    rule: &Rule,
    counts: &mut OpCount,
) -> (Vec<f64>, Vec<f64>) {
    if inputs.len() == 1 {
        return (inputs[0].to_vec(), rule.antecedents[0].memberships().to_vec());
    }
    let antecedents: Vec<&[f64]> = rule.antecedents.iter().map(FuzzySet::memberships).collect();
    let mut ops = 0;
    let jp = fuzzy::combine_counted(&sys.combiner, inputs, &mut ops);
    counts.push("joint input", std::mem::take(&mut ops));
    let j = fuzzy::combine_counted(&sys.combiner, &antecedents, &mut ops);
    counts.push("joint antecedent", ops);
    (jp.values, j.values)
}

/// Supremum of a non-empty sequence, one tick per comparison.
pub(crate) fn sup(values: impl IntoIterator<Item = f64>, c: &mut Counter) -> f64 {
    values
        .into_iter()
        .reduce(|m, v| c.tick(m.max(v)))
        .unwrap_or(0.0)
}

/// `out(y) = sup_x cell(x, y)`. The cell closure bumps `ops[k]` for each
/// application of the operator behind `cell_stages[k]`.
pub(crate) fn sup_project(
    width: usize,
    outputs: usize,
    mut cell: impl FnMut(usize, usize, &mut [u64]) -> f64,
    counts: &mut OpCount,
    cell_stages: &[&str],
    prefix: &str,
) -> Vec<f64> {
    let mut ops = vec![0; cell_stages.len()];
    let mut sups = Counter::default();
    let out = (0..outputs)
        .map(|y| {
            let column: Vec<f64> = (0..width).map(|x| cell(x, y, &mut ops)).collect();
            sup(column, &mut sups)
        })
        .collect();
    for (s, n) in cell_stages.iter().zip(ops) {
        counts.push(format!("{prefix}{s}"), n);
    }
    counts.push(format!("{prefix}sup"), sups.take());
    out
}
