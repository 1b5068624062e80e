//! Negations, aggregation functions, their transforms and classification.

pub mod aggregation;
pub mod classify;
pub mod generator;
pub mod negation;
pub mod table;

pub use aggregation::Aggregation;
pub use classify::{
    classify, is_grid_associative, is_grid_commutative, verify_copula, ClassificationRecord,
    ClassifyOptions, NeutralElement, Side,
};
pub use generator::{Automorphism, Generator};
pub use negation::Negation;
pub use table::{Table1D, Table2D};

use crate::error::Result;

pub fn eval_negation(n: &Negation, x: f64) -> Result<f64> {
    n.eval(x)
}

pub fn eval_aggregation(a: &Aggregation, x: f64, y: f64) -> Result<f64> {
    a.eval(x, y)
}

pub fn pseudo_inverse(n: &Negation) -> Result<Negation> {
    n.pseudo_inverse()
}

pub fn n_dual(a: &Aggregation, n: &Negation) -> Result<Aggregation> {
    a.n_dual(n)
}

pub fn conjugate(a: &Aggregation, phi: Automorphism) -> Aggregation {
    a.conjugate(phi)
}
