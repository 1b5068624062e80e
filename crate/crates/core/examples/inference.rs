//! The three engines on their reference systems, in both modes.

use fuzzy_lia::engines::{infer, Engine, Mode, Observation};
use fuzzy_lia::fixtures::{format_vector, reference_input, reference_system};

fn main() -> fuzzy_lia::error::Result<()> {
    let obs: Observation = reference_input().into();
    for engine in Engine::ALL {
        let sys = reference_system(engine)?;
        for mode in Mode::ALL {
            let r = infer(&sys, &obs, engine, mode)?;
            println!("{engine:<4}{mode:<13}{}  ({} ops)", format_vector(r.memberships()), r.counts.total);
        }
    }

    let sys = reference_system(Engine::Tip)?;
    let r = infer(&sys, &obs, Engine::Tip, Mode::Hierarchical)?;
    println!("\ntip hierarchical stages:");
    for stage in &r.rules[0].stages {
        println!("  {:<12}{}", stage.label, format_vector(&stage.values));
    }
    Ok(())
}
