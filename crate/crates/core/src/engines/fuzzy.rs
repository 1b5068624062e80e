use serde::{Deserialize, Serialize};

use crate::algebra::Aggregation;
use crate::error::{check_unit, Error, Result};

/// An ordered list of element labels, optionally named (`x1`, `y`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub labels: Vec<String>,
}

impl Universe {
    pub fn new(labels: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Universe {
            name: None,
            labels: labels.into_iter().map(Into::into).collect(),
        }
    }

    pub fn named(name: &str, labels: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Universe {
            name: Some(name.to_string()),
            ..Universe::new(labels)
        }
    }

    /// Labels `prefix1`, `prefix2`, ...
    pub fn numbered(prefix: &str, size: usize) -> Self {
        Universe::new((1..=size).map(|k| format!("{prefix}{k}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A fuzzy set on a finite universe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzySet {
    universe: Universe,
    memberships: Vec<f64>,
}

impl FuzzySet {
    pub fn new(universe: Universe, memberships: Vec<f64>) -> Result<Self> {
        if universe.len() != memberships.len() {
            return Err(Error::Dimension(format!(
                "{} memberships for a universe of {} elements",
                memberships.len(),
                universe.len()
            )));
        }
        for &m in &memberships {
            check_unit("membership", m)?;
        }
        Ok(FuzzySet {
            universe,
            memberships,
        })
    }

    /// 1 at `index`, 0 elsewhere.
    pub fn singleton(universe: Universe, index: usize) -> Result<Self> {
        if index >= universe.len() {
            return Err(Error::Dimension(format!(
                "singleton index {index} outside a universe of {} elements",
                universe.len()
            )));
        }
        let mut m = vec![0.0; universe.len()];
        m[index] = 1.0;
        FuzzySet::new(universe, m)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn memberships(&self) -> &[f64] {
        &self.memberships
    }

    pub fn len(&self) -> usize {
        self.memberships.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memberships.is_empty()
    }

    /// The single element with membership 1 when every other one is 0.
    pub fn singleton_index(&self) -> Option<usize> {
        let ones: Vec<usize> = (0..self.len()).filter(|&k| self.memberships[k] == 1.0).collect();
        let zeros = self.memberships.iter().filter(|&&m| m == 0.0).count();
        (ones.len() == 1 && zeros + 1 == self.len()).then(|| ones[0])
    }
}

/// A dense row-major tensor over a product universe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor {
    pub dims: Vec<usize>,
    pub values: Vec<f64>,
}

impl Tensor {
    pub fn get(&self, index: &[usize]) -> f64 {
        let flat = index
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&i, &d)| acc * d + i);
        self.values[flat]
    }

    /// Rows of a two-dimensional tensor.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        let width = self.dims.last().copied().unwrap_or(0).max(1);
        self.values.chunks(width).map(<[f64]>::to_vec).collect()
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Tensor {
        Tensor {
            dims: self.dims.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }
}

/// `A(...A(D1(x1), D2(x2))..., Dm(xm))` over the product universe, folding
/// left to right. Each cell costs `m - 1` applications, which are added to
/// `ops`.
pub(crate) fn combine_counted(a: &Aggregation, sets: &[&[f64]], ops: &mut u64) -> Tensor {
    let mut values = sets[0].to_vec();
    let mut dims = vec![sets[0].len()];
    for set in &sets[1..] {
        values = values
            .iter()
            .flat_map(|&acc| set.iter().map(move |&d| (acc, d)))
            .map(|(acc, d)| {
                *ops += 1;
                a.value(acc, d)
            })
            .collect();
        dims.push(set.len());
    }
    Tensor { dims, values }
}

/// Joint membership tensor of the antecedents.
pub fn combine_antecedents(a: &Aggregation, sets: &[FuzzySet]) -> Result<Tensor> {
    if sets.len() < 2 {
        return Err(Error::Dimension(format!(
            "combining needs at least two sets, got {}",
            sets.len()
        )));
    }
    if sets.iter().any(FuzzySet::is_empty) {
        return Err(Error::Dimension("cannot combine an empty fuzzy set".into()));
    }
    let slices: Vec<&[f64]> = sets.iter().map(FuzzySet::memberships).collect();
    Ok(combine_counted(a, &slices, &mut 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d1() -> FuzzySet {
        FuzzySet::new(Universe::numbered("x1", 5), vec![0.9, 0.7, 0.9, 0.6, 0.8]).unwrap()
    }

    fn d2() -> FuzzySet {
        FuzzySet::new(Universe::numbered("x2", 4), vec![1.0, 0.7, 0.8, 0.9]).unwrap()
    }

    #[test]
    fn min_joint_matrix() {
        let t = combine_antecedents(&Aggregation::Minimum, &[d1(), d2()]).unwrap();
        assert_eq!(t.dims, vec![5, 4]);
        let rows = t.rows();
        assert_eq!(rows[0], vec![0.9, 0.7, 0.8, 0.9]);
        assert_eq!(rows[3], vec![0.6, 0.6, 0.6, 0.6]);
        assert_eq!(t.get(&[0, 1]), 0.7);
    }

    #[test]
    fn lukasiewicz_joint_matrix() {
        let t = combine_antecedents(&Aggregation::Lukasiewicz, &[d1(), d2()]).unwrap();
        let expected = [
            [0.9, 0.6, 0.7, 0.8],
            [0.7, 0.4, 0.5, 0.6],
            [0.9, 0.6, 0.7, 0.8],
            [0.6, 0.3, 0.4, 0.5],
            [0.8, 0.5, 0.6, 0.7],
        ];
        for (row, want) in t.rows().iter().zip(expected) {
            for (v, w) in row.iter().zip(want) {
                assert!((v - w).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn singleton_pairs_meet_in_one_cell() {
        let a = FuzzySet::singleton(Universe::numbered("a", 3), 1).unwrap();
        let b = FuzzySet::singleton(Universe::numbered("b", 2), 0).unwrap();
        let t = combine_antecedents(&Aggregation::Product, &[a, b]).unwrap();
        assert_eq!(t.values, vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn validation() {
        assert!(FuzzySet::new(Universe::numbered("x", 2), vec![0.5]).is_err());
        assert!(FuzzySet::new(Universe::numbered("x", 2), vec![0.5, 1.2]).is_err());
        assert!(combine_antecedents(&Aggregation::Minimum, &[d1()]).is_err());
        assert_eq!(d1().singleton_index(), None);
        let s = FuzzySet::singleton(Universe::numbered("x", 4), 2).unwrap();
        assert_eq!(s.singleton_index(), Some(2));
    }
}
