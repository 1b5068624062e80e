//! Negations, their pseudo-inverses and the structure of a few aggregations.

use fuzzy_lia::algebra::{classify, Aggregation, ClassifyOptions, Negation};

fn main() -> fuzzy_lia::error::Result<()> {
    let n = Negation::sugeno(2.0)?;
    let inv = n.pseudo_inverse()?;
    println!("sugeno(2): N(0.3) = {:.6}, pseudo-inverse(0.3) = {:.6}", n.value(0.3), inv.value(0.3));

    for a in [
        Aggregation::Minimum,
        Aggregation::Lukasiewicz,
        Aggregation::GreatestAveragingConjunctor,
        Aggregation::uninorm(0.5)?,
    ] {
        let r = classify(&a, &ClassifyOptions::default())?;
        println!(
            "{a:?}: conjunctor {}, commutative {}, associative {}, zero divisors {}",
            r.is_conjunctor, r.is_commutative, r.is_associative, r.has_zero_divisors
        );
    }
    Ok(())
}
