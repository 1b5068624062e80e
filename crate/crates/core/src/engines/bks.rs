//! Bandler-Kohout subproduct: `B'(y) = ⋀_x I(D'(x), I(D(x), B(y)))`, run
//! in the equivalent form `I(⋁_x A(D'(x), D(x)), B(y))`.

use super::count::{Counter, OpCount};
use super::{joints, sup, MISOSystem, Rule, RuleRun, RuleTrace};
use crate::algebra::Aggregation;
use crate::error::Result;
use crate::implications::Implication;

pub(crate) fn classical(sys: &MISOSystem, inputs: &[&[f64]], rule: &Rule) -> Result<RuleRun> {
    let mut counts = OpCount::default();
    let mut trace = RuleTrace::default();
    let (jp, j) = joints(sys, inputs, rule, &mut counts);
    let output = stage(
        &sys.combiner,
        &sys.implication,
        &jp,
        &j,
        rule.consequent.memberships(),
        &mut counts,
        &mut trace,
        "",
    );
    Ok(RuleRun {
        output,
        counts,
        trace,
    })
}

/// `D'_1 ∘ I(D_1, D'_2 ∘ I(D_2, ... B))`, last input first.
pub(crate) fn hierarchical(sys: &MISOSystem, inputs: &[&[f64]], rule: &Rule) -> Result<RuleRun> {
    let mut counts = OpCount::default();
    let mut trace = RuleTrace::default();
    let mut b = rule.consequent.memberships().to_vec();
    for k in (0..inputs.len()).rev() {
        let name = sys.input_name(k);
        b = stage(
            &sys.combiner,
            &sys.implication,
            inputs[k],
            rule.antecedents[k].memberships(),
            &b,
            &mut counts,
            &mut trace,
            &format!("{name}: "),
        );
        trace.record(format!("{name}: output"), b.clone());
    }
    Ok(RuleRun {
        output: b,
        counts,
        trace,
    })
}

#[allow(clippy::too_many_arguments)]
fn stage(
    a: &Aggregation,
    i: &Implication,
    d_prime: &[f64],
    d: &[f64],
    b: &[f64],
    counts: &mut OpCount,
    trace: &mut RuleTrace,
    prefix: &str,
) -> Vec<f64> {
    let mut c = Counter::default();
    let cells: Vec<f64> = d_prime
        .iter()
        .zip(d)
        .map(|(&p, &q)| c.tick(a.value(p, q)))
        .collect();
    counts.push(format!("{prefix}A(D',D)"), c.take());
    let s = sup(cells, &mut c);
    counts.push(format!("{prefix}sup"), c.take());
    trace.record(format!("{prefix}sup A(D',D)"), vec![s]);
    let out = b.iter().map(|&y| c.tick(i.value(s, y))).collect();
    counts.push(format!("{prefix}implication"), c.take());
    out
}

/// The defining double loop `⋀_x I(D'(x), I(D(x), B(y)))` on one universe.
pub fn double_loop(i: &Implication, d_prime: &[f64], d: &[f64], b: &[f64]) -> Vec<f64> {
    b.iter()
        .map(|&y| {
            d_prime
                .iter()
                .zip(d)
                .map(|(&p, &q)| i.value(p, i.value(q, y)))
                .fold(1.0, f64::min)
        })
        .collect()
}

/// `I(⋁_x A(D'(x), D(x)), B(y))` on one universe.
pub fn sup_form(i: &Implication, a: &Aggregation, d_prime: &[f64], d: &[f64], b: &[f64]) -> Vec<f64> {
    let s = d_prime
        .iter()
        .zip(d)
        .map(|(&p, &q)| a.value(p, q))
        .fold(0.0, f64::max);
    b.iter().map(|&y| i.value(s, y)).collect()
}
