//! Triple implication principle: `B'(y) = ⋁_x A(I(D(x), B(y)), D'(x))`.

use super::count::OpCount;
use super::{joints, sup_project, MISOSystem, Rule, RuleRun, RuleTrace};
use crate::error::Result;

pub(crate) fn classical(sys: &MISOSystem, inputs: &[&[f64]], rule: &Rule) -> Result<RuleRun> {
    let mut counts = OpCount::default();
    let (jp, j) = joints(sys, inputs, rule, &mut counts);
    let output = stage(sys, &jp, &j, rule.consequent.memberships(), &mut counts, "");
    Ok(RuleRun {
        output,
        counts,
        trace: RuleTrace::default(),
    })
}

pub(crate) fn hierarchical(sys: &MISOSystem, inputs: &[&[f64]], rule: &Rule) -> Result<RuleRun> {
    let mut counts = OpCount::default();
    let mut trace = RuleTrace::default();
    let mut b = rule.consequent.memberships().to_vec();
    for k in (0..inputs.len()).rev() {
        let name = sys.input_name(k);
        b = stage(
            sys,
            inputs[k],
            rule.antecedents[k].memberships(),
            &b,
            &mut counts,
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

fn stage(sys: &MISOSystem, d_prime: &[f64], d: &[f64], b: &[f64], counts: &mut OpCount, prefix: &str) -> Vec<f64> {
    let (a, i) = (&sys.combiner, &sys.implication);
    sup_project(
        d.len(),
        b.len(),
        |x, y, ops| {
            ops[0] += 1;
            ops[1] += 1;
            a.value(i.value(d[x], b[y]), d_prime[x])
        },
        counts,
        &["implication", "combine"],
        prefix,
    )
}
