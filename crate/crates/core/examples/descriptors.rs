//! Operators round-trip through their JSON descriptors.

use fuzzy_lia::algebra::{Aggregation, Negation};
use fuzzy_lia::descriptor::{parse_arg, Described};
use fuzzy_lia::implications::Implication;

fn main() -> fuzzy_lia::error::Result<()> {
    let a: Aggregation = parse_arg("lukasiewicz")?;
    let n: Negation = parse_arg(r#"{"kind": "yager", "params": {"exponent": 2}}"#)?;
    let i = Implication::from_aggregation(a.clone(), n.clone())?;
    let json = i.to_json();
    println!("{}", serde_json::to_string_pretty(&json).unwrap());

    let back = Implication::from_json(json)?;
    assert_eq!(back, i);
    println!("I(0.7, 0.4) = {:.6}", back.value(0.7, 0.4));

    match parse_arg::<Aggregation>(r#"{"kind": "min", "params": {"p": 1}}"#) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
