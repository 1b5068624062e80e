//! Property profile of catalog implications and a direct importation check.

use fuzzy_lia::algebra::Aggregation;
use fuzzy_lia::implications::{check_lia, check_properties, Implication, PropertyOptions};

fn main() -> fuzzy_lia::error::Result<()> {
    let opts = PropertyOptions {
        aggregation: Some(Aggregation::Minimum),
        ..PropertyOptions::default()
    };
    for i in [Implication::KleeneDienes, Implication::Goedel, Implication::Reichenbach] {
        let report = check_properties(&i, &opts)?;
        let held: Vec<&str> = report
            .properties
            .iter()
            .filter(|(_, r)| r.holds)
            .map(|(k, _)| k.as_str())
            .collect();
        println!("{i:?}: {}", held.join(" "));
    }

    let r = check_lia(&Implication::Goedel, &Aggregation::Product, 41, 1e-9)?;
    match r.witness {
        Some(w) => println!("goedel / product fails at {:?}: {:.6} vs {:.6}", w.point, w.lhs, w.rhs),
        None => println!("goedel / product holds"),
    }
    Ok(())
}
