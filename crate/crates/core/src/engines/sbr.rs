//! Similarity-based reasoning: modify the rule by `S(D', D)` through the
//! combiner, then `B''(y) = ⋁_x I(A(S, D(x)), B(y))`.

use super::count::{Counter, OpCount};
use super::{joints, sup_project, MISOSystem, Rule, RuleRun, RuleTrace};
use crate::error::Result;

pub(crate) fn classical(sys: &MISOSystem, inputs: &[&[f64]], rule: &Rule) -> Result<RuleRun> {
    let mut counts = OpCount::default();
    let mut trace = RuleTrace::default();
    let (jp, j) = joints(sys, inputs, rule, &mut counts);
    let output = stage(sys, &jp, &j, rule.consequent.memberships(), &mut counts, &mut trace, "")?;
    Ok(RuleRun {
        output,
        counts,
        trace,
    })
}

pub(crate) fn hierarchical(sys: &MISOSystem, inputs: &[&[f64]], rule: &Rule) -> Result<RuleRun> {
    let mut counts = OpCount::default();
    let mut trace = RuleTrace::default();
    let mut b = rule.consequent.memberships().to_vec();
    for k in (0..inputs.len()).rev() {
        let name = sys.input_name(k);
        let prefix = format!("{name}: ");
        b = stage(
            sys,
            inputs[k],
            rule.antecedents[k].memberships(),
            &b,
            &mut counts,
            &mut trace,
            &prefix,
        )?;
        trace.record(format!("{name}: output"), b.clone());
    }
    Ok(RuleRun {
        output: b,
        counts,
        trace,
    })
}

fn stage(
    sys: &MISOSystem,
    d_prime: &[f64],
    d: &[f64],
    b: &[f64],
    counts: &mut OpCount,
    trace: &mut RuleTrace,
    prefix: &str,
) -> Result<Vec<f64>> {
    let mut ops = 0;
    let s = sys.similarity.compute(d_prime, d, &mut ops)?;
    counts.push(format!("{prefix}similarity"), ops);
    trace.record(format!("{prefix}S"), vec![s]);

    let mut c = Counter::default();
    let modified: Vec<f64> = d.iter().map(|&q| c.tick(sys.combiner.value(s, q))).collect();
    counts.push(format!("{prefix}modify"), c.take());

    let i = &sys.implication;
    Ok(sup_project(
        d.len(),
        b.len(),
        |x, y, ops| {
            ops[0] += 1;
            i.value(modified[x], b[y])
        },
        counts,
        &["implication"],
        prefix,
    ))
}
