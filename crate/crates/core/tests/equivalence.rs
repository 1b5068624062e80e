mod common;

use common::certified_pairs;
use fuzzy_lia::bench::{random_singleton, random_system, Shape};
use fuzzy_lia::engines::bks::{double_loop, sup_form};
use fuzzy_lia::engines::{admit, infer, Engine, MISOSystem, Mode, Observation};
use fuzzy_lia::error::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SYSTEMS: usize = 200;

fn random_shape(rng: &mut impl Rng) -> Shape {
    let m = rng.gen_range(2..=3);
    Shape::new((0..m).map(|_| rng.gen_range(1..=6)).collect(), rng.gen_range(1..=5))
}

/// Runs both modes on `SYSTEMS` random systems; returns how many were admitted.
fn classical_matches_hierarchical(engine: Engine, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut admitted = 0;
    for _ in 0..SYSTEMS {
        let shape = random_shape(&mut rng);
        let sys = random_system(engine, &shape, &mut rng).unwrap();
        let obs: Observation = random_singleton(&sys, &mut rng).into();
        let classical = infer(&sys, &obs, engine, Mode::Classical);
        let hierarchical = infer(&sys, &obs, engine, Mode::Hierarchical);
        let (c, h) = match (classical, hierarchical) {
            (Ok(c), Ok(h)) => (c, h),
            (_, Err(Error::Admission { .. })) => continue,
            // an empty support leaves the restricted similarity undefined
            (Err(Error::Parameter(_)), Err(Error::Parameter(_))) if engine == Engine::Sbr => continue,
            (c, h) => panic!("{engine} on {shape}: {c:?} / {h:?}"),
        };
        admitted += 1;
        for (a, b) in c.memberships().iter().zip(h.memberships()) {
            assert!((a - b).abs() <= 1e-12, "{engine} on {shape}: {a} vs {b}");
            assert!((0.0..=1.0).contains(a));
        }
    }
    admitted
}

#[test]
fn bks_modes_agree() {
    assert_eq!(classical_matches_hierarchical(Engine::Bks, 1), SYSTEMS);
}

#[test]
fn tip_modes_agree() {
    assert_eq!(classical_matches_hierarchical(Engine::Tip, 2), SYSTEMS);
}

#[test]
fn sbr_modes_agree() {
    assert_eq!(classical_matches_hierarchical(Engine::Sbr, 3), SYSTEMS);
}

fn resolved(sys: &MISOSystem, obs: &Observation) -> Vec<fuzzy_lia::engines::FuzzySet> {
    sys.resolve(obs).unwrap()
}

#[test]
fn admission_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for engine in Engine::ALL {
        for _ in 0..20 {
            let shape = random_shape(&mut rng);
            let sys = random_system(engine, &shape, &mut rng).unwrap();
            let obs: Observation = random_singleton(&sys, &mut rng).into();
            let sets = resolved(&sys, &obs);
            let first = admit(&sys, &sets, engine, Mode::Hierarchical).map_err(|e| e.to_string());
            let second = admit(&sys, &sets, engine, Mode::Hierarchical).map_err(|e| e.to_string());
            assert_eq!(first, second);
        }
    }
}

fn membership_vec(max: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0..=1.0f64, 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn double_loop_equals_sup_form(
        pair in 0usize..8,
        d in membership_vec(6).prop_flat_map(|d| {
            let n = d.len();
            (Just(d), prop::collection::vec(0.0..=1.0f64, n))
        }),
        b in membership_vec(5),
    ) {
        let (_, i, a) = certified_pairs().swap_remove(pair);
        let (d, d_prime) = d;
        let lhs = double_loop(&i, &d_prime, &d, &b);
        let rhs = sup_form(&i, &a, &d_prime, &d, &b);
        for (l, r) in lhs.iter().zip(&rhs) {
            prop_assert!((l - r).abs() <= 1e-9, "{} vs {}", l, r);
            prop_assert!((0.0..=1.0).contains(l));
        }
    }
}
