mod common;

use approx::assert_abs_diff_eq;
use common::{certified_pairs, tol};
use fuzzy_lia::algebra::{is_grid_associative, is_grid_commutative, Automorphism, Negation, Table1D};
use fuzzy_lia::grid::Grid;
use fuzzy_lia::implications::{check_lia, check_properties, lia_sides, Implication, PropertyOptions};
use proptest::prelude::*;

const CUBE: usize = 41;

fn exchange_gap(i: &Implication, points: usize) -> f64 {
    let zs = Grid::new(points).unwrap().values();
    let mut worst = 0.0f64;
    for &x in &zs {
        for &y in &zs {
            for &z in &zs {
                worst = worst.max((i.value(x, i.value(y, z)) - i.value(y, i.value(x, z))).abs());
            }
        }
    }
    worst
}

#[test]
fn importation_with_a_commutative_partner_gives_exchange() {
    for (name, i, a) in certified_pairs() {
        let t = tol(&i, &a);
        assert!(check_lia(&i, &a, CUBE, t).unwrap().holds, "{name}");
        assert!(is_grid_commutative(&a, CUBE, t).0, "{name}");
        let gap = exchange_gap(&i, CUBE);
        assert!(gap <= 2.0 * t, "{name}: EP gap {gap}");
    }
}

#[test]
fn residuation_with_associative_commutative_partner_gives_importation() {
    for (i, a) in [
        (Implication::Lukasiewicz, fuzzy_lia::algebra::Aggregation::Lukasiewicz),
        (Implication::Goedel, fuzzy_lia::algebra::Aggregation::Minimum),
    ] {
        let t = tol(&i, &a);
        assert!(is_grid_associative(&a, CUBE, t).0);
        assert!(is_grid_commutative(&a, CUBE, t).0);
        let opts = PropertyOptions {
            cube_grid: CUBE,
            aggregation: Some(a.clone()),
            ..PropertyOptions::default()
        };
        let report = check_properties(&i, &opts).unwrap();
        assert_eq!(report.holds("RP"), Some(true));
        let lia = check_lia(&i, &a, CUBE, 2.0 * t).unwrap();
        assert!(lia.holds);
    }
}

#[test]
fn conjugation_by_square_preserves_importation() {
    let phi = Automorphism::power(2.0).unwrap();
    for (name, i, a) in certified_pairs() {
        let (ci, ca) = (i.conjugate(phi.clone()), a.conjugate(phi.clone()));
        let t = tol(&ci, &ca);
        let r = check_lia(&ci, &ca, CUBE, t).unwrap();
        assert!(r.holds, "{name}: {:?}", r.witness);
    }
}

fn continuous_negations() -> Vec<Negation> {
    vec![
        Negation::Standard,
        Negation::sugeno(2.0).unwrap(),
        Negation::sugeno(-0.5).unwrap(),
        Negation::yager(2.0).unwrap(),
        Negation::one_minus_power(2.0).unwrap(),
        Negation::complement_power(3.0).unwrap(),
    ]
}

/// 1 on [0, 0.2], linear down to 0 at 0.8, then 0.
fn flat_negation() -> Negation {
    let grid = vec![0.0, 0.2, 0.8, 1.0];
    Negation::tabulated(Table1D::new(grid, vec![1.0, 1.0, 0.0, 0.0]).unwrap()).unwrap()
}

#[test]
fn pseudo_inverse_of_pseudo_inverse_is_the_negation() {
    let xs = Grid::new(1001).unwrap().values();
    for n in continuous_negations() {
        let twice = n.numeric_pseudo_inverse().unwrap().numeric_pseudo_inverse().unwrap();
        for &x in &xs {
            assert_abs_diff_eq!(twice.value(x), n.value(x), epsilon = 1e-9);
        }
    }
}

#[test]
fn negation_undoes_its_pseudo_inverse() {
    let xs = Grid::new(CUBE).unwrap().values();
    for n in continuous_negations().into_iter().chain([flat_negation()]) {
        let inv = n.pseudo_inverse().unwrap();
        for &x in &xs {
            assert!((n.value(inv.value(x)) - x).abs() <= 1e-9, "{n:?} at {x}");
        }
    }
}

#[test]
fn pseudo_inverse_undoes_the_negation_on_its_range() {
    let xs = Grid::new(CUBE).unwrap().values();
    for n in continuous_negations().into_iter().chain([flat_negation()]) {
        let inv = n.pseudo_inverse().unwrap();
        for &y in &xs {
            let x = inv.value(y);
            assert!((inv.value(n.value(x)) - x).abs() <= 1e-9, "{n:?} at {x}");
        }
    }
}

#[test]
fn flat_negation_has_the_expected_pseudo_inverse() {
    let inv = flat_negation().pseudo_inverse().unwrap();
    assert_eq!(inv.value(0.0), 1.0);
    assert_eq!(inv.value(1.0), 0.0);
    assert_abs_diff_eq!(inv.value(0.5), 0.5, epsilon = 1e-9);
    assert_abs_diff_eq!(inv.value(0.4), 0.56, epsilon = 1e-9);
    assert_abs_diff_eq!(inv.value(0.999), 0.2006, epsilon = 1e-9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn importation_holds_off_the_grid(x in 0.0..=1.0f64, y in 0.0..=1.0f64, z in 0.0..=1.0f64) {
        for (name, i, a) in certified_pairs() {
            let (l, r) = lia_sides(&i, &a, x, y, z);
            prop_assert!((l - r).abs() <= 1e-9, "{} at ({}, {}, {}): {} vs {}", name, x, y, z, l, r);
        }
    }

    #[test]
    fn exchange_holds_off_the_grid(x in 0.0..=1.0f64, y in 0.0..=1.0f64, z in 0.0..=1.0f64) {
        for (name, i, _) in certified_pairs() {
            let (l, r) = (i.value(x, i.value(y, z)), i.value(y, i.value(x, z)));
            prop_assert!((l - r).abs() <= 2e-9, "{} at ({}, {}, {})", name, x, y, z);
        }
    }

    #[test]
    fn pseudo_inverse_laws_off_the_grid(x in 0.0..=1.0f64, k in 0usize..6) {
        let n = &continuous_negations()[k];
        let inv = n.pseudo_inverse().unwrap();
        prop_assert!((n.value(inv.value(x)) - x).abs() <= 1e-9);
        let r = inv.value(x);
        prop_assert!((inv.value(n.value(r)) - r).abs() <= 1e-9);
    }
}
