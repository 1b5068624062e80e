//! Implication families, their axioms and the property checkers.

pub mod implication;
pub mod properties;

pub use implication::Implication;
pub use properties::{
    check_lia, check_properties, lia_sides, PropertyOptions, PropertyReport, PropertyResult,
};

use crate::algebra::{Aggregation, Negation};
use crate::error::Result;

pub fn eval_implication(i: &Implication, x: f64, y: f64) -> Result<f64> {
    i.eval(x, y)
}

pub fn residual_implication(a: Aggregation) -> Result<Implication> {
    Implication::residual(a)
}

pub fn power_implication(t: Aggregation) -> Result<Implication> {
    Implication::power(t)
}

pub fn natural_negation(i: &Implication) -> Negation {
    i.natural_negation()
}
