use std::path::Path;

use serde::{Deserialize, Serialize};

use super::fuzzy::{FuzzySet, Universe};
use crate::algebra::{Aggregation, Table1D};
use crate::descriptor::{serde_via_descriptor, unknown_kind, Described, Descriptor};
use crate::error::{param, Error, Result};
use crate::implications::Implication;

/// How close an observation is to a rule antecedent.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum SimilarityMeasure {
    /// `1 - max |D'(x) - D(x)|` over the support of `D'`.
    #[default]
    SupportRestrictedSupDifference,
    /// `1 - max |D'(x) - D(x)|` over the whole universe.
    SupDifference,
    /// A non-increasing table applied to the sup-difference.
    Tabulated(Table1D),
}

impl SimilarityMeasure {
    pub fn tabulated(table: Table1D) -> Result<Self> {
        if table.eval(0.0) != 1.0 || !table.is_non_increasing() {
            return Err(param("a similarity table must be non-increasing with value 1 at 0"));
        }
        Ok(SimilarityMeasure::Tabulated(table))
    }

    pub(crate) fn compute(&self, d_prime: &[f64], d: &[f64], ops: &mut u64) -> Result<f64> {
        if d_prime.len() != d.len() {
            return Err(Error::Dimension(format!(
                "similarity of sets with {} and {} elements",
                d_prime.len(),
                d.len()
            )));
        }
        let restricted = matches!(self, SimilarityMeasure::SupportRestrictedSupDifference);
        if restricted && d_prime.iter().all(|&v| v == 0.0) {
            return Err(param("support-restricted similarity needs an observation with non-empty support"));
        }
        let diffs: Vec<f64> = d_prime
            .iter()
            .zip(d)
            .map(|(&p, &q)| if restricted && p == 0.0 { 0.0 } else { (p - q).abs() })
            .collect();
        *ops += diffs.len() as u64;
        let sup = diffs
            .into_iter()
            .reduce(|m, v| {
                *ops += 1;
                m.max(v)
            })
            .unwrap_or(0.0);
        Ok(match self {
            SimilarityMeasure::Tabulated(t) => t.eval(sup),
            _ => 1.0 - sup,
        })
    }
}

pub fn similarity(m: &SimilarityMeasure, d_prime: &FuzzySet, d: &FuzzySet) -> Result<f64> {
    if d_prime.universe() != d.universe() {
        return Err(Error::Dimension("similarity of sets on different universes".into()));
    }
    m.compute(d_prime.memberships(), d.memberships(), &mut 0)
}

impl Described for SimilarityMeasure {
    fn describe(&self) -> Descriptor {
        match self {
            SimilarityMeasure::SupportRestrictedSupDifference => {
                Descriptor::bare("support-restricted-sup-difference")
            }
            SimilarityMeasure::SupDifference => Descriptor::bare("sup-difference"),
            SimilarityMeasure::Tabulated(t) => Descriptor::bare("custom-tabulated")
                .with("grid", t.grid())
                .with("values", t.values()),
        }
    }

    fn from_descriptor(d: &Descriptor) -> Result<Self> {
        match d.kind.as_str() {
            "support-restricted-sup-difference" => {
                d.reader(&[])?;
                Ok(SimilarityMeasure::SupportRestrictedSupDifference)
            }
            "sup-difference" => {
                d.reader(&[])?;
                Ok(SimilarityMeasure::SupDifference)
            }
            "custom-tabulated" => {
                let r = d.reader(&["grid", "values"])?;
                SimilarityMeasure::tabulated(Table1D::new(r.get("grid")?, r.get("values")?)?)
            }
            other => Err(unknown_kind("similarity measure", other)),
        }
    }
}

serde_via_descriptor!(SimilarityMeasure);

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub antecedents: Vec<FuzzySet>,
    pub consequent: FuzzySet,
}

/// A multi-input single-output rule base with its operators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SystemFile", into = "SystemFile")]
pub struct MISOSystem {
    pub inputs: Vec<Universe>,
    pub output: Universe,
    pub rules: Vec<Rule>,
    pub combiner: Aggregation,
    pub implication: Implication,
    pub similarity: SimilarityMeasure,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    inputs: Vec<Universe>,
    output: Universe,
    rules: Vec<RuleFile>,
    combiner: Aggregation,
    implication: Implication,
    #[serde(default)]
    similarity: SimilarityMeasure,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleFile {
    antecedents: Vec<Vec<f64>>,
    consequent: Vec<f64>,
}

impl TryFrom<SystemFile> for MISOSystem {
    type Error = Error;

    fn try_from(f: SystemFile) -> Result<Self> {
        let rules = f
            .rules
            .into_iter()
            .map(|r| {
                if r.antecedents.len() != f.inputs.len() {
                    return Err(Error::Dimension(format!(
                        "a rule has {} antecedents for {} inputs",
                        r.antecedents.len(),
                        f.inputs.len()
                    )));
                }
                let antecedents = f
                    .inputs
                    .iter()
                    .zip(r.antecedents)
                    .map(|(u, m)| FuzzySet::new(u.clone(), m))
                    .collect::<Result<_>>()?;
                let consequent = FuzzySet::new(f.output.clone(), r.consequent)?;
                Ok(Rule {
                    antecedents,
                    consequent,
                })
            })
            .collect::<Result<_>>()?;
        MISOSystem::new(f.inputs, f.output, rules, f.combiner, f.implication, f.similarity)
    }
}

impl From<MISOSystem> for SystemFile {
    fn from(s: MISOSystem) -> Self {
        SystemFile {
            rules: s
                .rules
                .iter()
                .map(|r| RuleFile {
                    antecedents: r.antecedents.iter().map(|d| d.memberships().to_vec()).collect(),
                    consequent: r.consequent.memberships().to_vec(),
                })
                .collect(),
            inputs: s.inputs,
            output: s.output,
            combiner: s.combiner,
            implication: s.implication,
            similarity: s.similarity,
        }
    }
}

impl MISOSystem {
    pub fn new(
        inputs: Vec<Universe>,
        output: Universe,
        rules: Vec<Rule>,
        combiner: Aggregation,
        implication: Implication,
        similarity: SimilarityMeasure,
    ) -> Result<Self> {
        if inputs.is_empty() || inputs.iter().any(Universe::is_empty) || output.is_empty() {
            return Err(Error::Dimension("inputs and output need non-empty universes".into()));
        }
        if rules.is_empty() {
            return Err(Error::Dimension("a system needs at least one rule".into()));
        }
        for r in &rules {
            if r.antecedents.len() != inputs.len() {
                return Err(Error::Dimension(format!(
                    "a rule has {} antecedents for {} inputs",
                    r.antecedents.len(),
                    inputs.len()
                )));
            }
            for (d, u) in r.antecedents.iter().zip(&inputs) {
                if d.universe() != u {
                    return Err(Error::Dimension("antecedent does not conform to its universe".into()));
                }
            }
            if r.consequent.universe() != &output {
                return Err(Error::Dimension("consequent does not conform to the output universe".into()));
            }
        }
        Ok(MISOSystem {
            inputs,
            output,
            rules,
            combiner,
            implication,
            similarity,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        MISOSystem::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("systems always serialize")
    }

    /// Number of inputs `m`.
    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    /// Name of input `k`, defaulting to `x1`, `x2`, ...
    pub fn input_name(&self, k: usize) -> String {
        self.inputs[k].name.clone().unwrap_or_else(|| format!("x{}", k + 1))
    }

    /// The observed fuzzy set on each input universe.
    pub fn resolve(&self, obs: &Observation) -> Result<Vec<FuzzySet>> {
        match obs {
            Observation::Singleton(s) => {
                if s.labels.len() != self.arity() {
                    return Err(Error::Dimension(format!(
                        "{} labels for {} inputs",
                        s.labels.len(),
                        self.arity()
                    )));
                }
                s.labels
                    .iter()
                    .enumerate()
                    .map(|(k, label)| {
                        let u = &self.inputs[k];
                        let idx = u.position(label).ok_or_else(|| Error::UnknownLabel {
                            input: self.input_name(k),
                            label: label.clone(),
                        })?;
                        FuzzySet::singleton(u.clone(), idx)
                    })
                    .collect()
            }
            Observation::Memberships(sets) => {
                if sets.len() != self.arity() {
                    return Err(Error::Dimension(format!(
                        "{} observed sets for {} inputs",
                        sets.len(),
                        self.arity()
                    )));
                }
                self.inputs
                    .iter()
                    .zip(sets)
                    .map(|(u, m)| FuzzySet::new(u.clone(), m.clone()))
                    .collect()
            }
        }
    }

    /// Parses `x1=x12,x2=x23` (or positional `x12,x23`) into a singleton input.
    pub fn parse_input(&self, text: &str) -> Result<SingletonInput> {
        let mut labels: Vec<Option<String>> = vec![None; self.arity()];
        for (pos, part) in text.split(',').map(str::trim).filter(|p| !p.is_empty()).enumerate() {
            let (k, label) = match part.split_once('=') {
                Some((name, label)) => {
                    let name = name.trim();
                    let k = (0..self.arity())
                        .find(|&k| self.input_name(k) == name)
                        .ok_or_else(|| param(format!("no input named `{name}`")))?;
                    (k, label.trim())
                }
                None => (pos, part),
            };
            if k >= self.arity() {
                return Err(Error::Dimension(format!("more labels than the {} inputs", self.arity())));
            }
            labels[k] = Some(label.to_string());
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(k, l)| l.ok_or_else(|| param(format!("no label given for input `{}`", self.input_name(k)))))
            .collect::<Result<_>>()?;
        Ok(SingletonInput { labels })
    }
}

/// One observed label per input universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SingletonInput {
    pub labels: Vec<String>,
}

impl SingletonInput {
    pub fn new(labels: impl IntoIterator<Item = impl Into<String>>) -> Self {
        SingletonInput {
            labels: labels.into_iter().map(Into::into).collect(),
        }
    }
}

/// What the engines are fed: singleton labels or explicit membership vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Observation {
    Singleton(SingletonInput),
    Memberships(Vec<Vec<f64>>),
}

impl From<SingletonInput> for Observation {
    fn from(s: SingletonInput) -> Self {
        Observation::Singleton(s)
    }
}
