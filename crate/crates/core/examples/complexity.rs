//! Closed-form operation counts against instrumented runs.

use fuzzy_lia::bench::{complexity_report, count_operations, predict, random_singleton, random_system, Shape};
use fuzzy_lia::engines::{Engine, Mode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fuzzy_lia::error::Result<()> {
    let shapes: Vec<Shape> = ["5x4->3", "6x6->5", "6x6x5->5"].iter().map(|s| s.parse().unwrap()).collect();
    print!("{}", complexity_report(&Engine::ALL, &shapes)?);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let shape: Shape = "4x3x2->3*2".parse().unwrap();
    let sys = random_system(Engine::Bks, &shape, &mut rng)?;
    let input = random_singleton(&sys, &mut rng);
    let measured = count_operations(Engine::Bks, Mode::Hierarchical, &sys, &input)?;
    let predicted = predict(Engine::Bks, Mode::Hierarchical, &shape)?;
    println!("\n{shape}: measured {}, predicted {}", measured.total, predicted.total);
    println!("{measured}");
    Ok(())
}
