//! Building the partner that makes an implication satisfy importation.

use fuzzy_lia::algebra::{Aggregation, Generator, Negation};
use fuzzy_lia::lia::{
    companion_for_an_implication, companion_for_f_implication, implication_from_aggregation,
    power_implication_lia_verdict, CompanionResult,
};

fn show(label: &str, r: &CompanionResult) {
    match r.pair() {
        Some((i, a)) => println!("{label}: {i:?} with {a:?} ({:?}, {:?})", r.uniqueness, r.source),
        None => println!("{label}: no partner, {}", r.family.as_deref().unwrap_or("")),
    }
}

fn main() -> fuzzy_lia::error::Result<()> {
    show("max with sugeno(1)", &companion_for_an_implication(&Aggregation::Maximum, &Negation::sugeno(1.0)?)?);
    show("f = -ln", &companion_for_f_implication(&Generator::NegLog)?);
    show("from T_L", &implication_from_aggregation(&Aggregation::Lukasiewicz, &Negation::Standard)?);
    show("power of T_L", &power_implication_lia_verdict(&Aggregation::Lukasiewicz)?);

    if let Err(e) = companion_for_an_implication(&Aggregation::weighted_mean(Generator::Identity, 0.4)?, &Negation::Standard) {
        println!("weighted mean rejected: {e}");
    }
    Ok(())
}
