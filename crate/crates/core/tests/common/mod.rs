#![allow(dead_code)]

use fuzzy_lia::algebra::{Aggregation, Automorphism, Generator, Negation};
use fuzzy_lia::error::Result;
use fuzzy_lia::implications::Implication;
use fuzzy_lia::lia::{
    companion_for_an_implication, companion_for_extreme_negations, companion_for_f_implication,
    companion_for_g_implication, companion_for_probabilistic, companion_for_ql, companion_for_r_implication,
    implication_for_representable, implication_from_aggregation, CompanionResult, ExtremeNegation,
    ProbabilisticVariant,
};

/// Pairs known to satisfy the law of importation.
pub fn certified_pairs() -> Vec<(&'static str, Implication, Aggregation)> {
    vec![
        ("kleene-dienes / min", Implication::KleeneDienes, Aggregation::Minimum),
        ("lukasiewicz / T_L", Implication::Lukasiewicz, Aggregation::Lukasiewicz),
        ("goedel / min", Implication::Goedel, Aggregation::Minimum),
        ("reichenbach / product", Implication::Reichenbach, Aggregation::Product),
        (
            "yager f = -ln / product",
            Implication::f_generated(Generator::NegLog).unwrap(),
            Aggregation::Product,
        ),
        (
            "g-generated g = id / product",
            Implication::g_generated(Generator::Identity).unwrap(),
            Aggregation::Product,
        ),
        (
            "probabilistic-S of min / T_L",
            Implication::probabilistic_s(Aggregation::Minimum).unwrap(),
            Aggregation::Lukasiewicz,
        ),
        (
            "from-aggregation of (C_avg)_top / (C_avg)_top",
            averaging_implication(),
            Aggregation::GreatestAveragingConjunctor,
        ),
    ]
}

pub fn averaging_implication() -> Implication {
    Implication::from_aggregation(Aggregation::GreatestAveragingConjunctor, Negation::Standard).unwrap()
}

pub fn tol(i: &Implication, a: &Aggregation) -> f64 {
    i.tolerance().max(a.tolerance())
}

fn disjunctor(k: usize) -> Aggregation {
    [Aggregation::Maximum, Aggregation::ProbabilisticSum, Aggregation::BoundedSum][k % 3].clone()
}

fn negation(k: usize, p: f64) -> Negation {
    match k % 3 {
        0 => Negation::Standard,
        1 => Negation::sugeno(p * 4.0 - 0.9).unwrap(),
        _ => Negation::yager(0.5 + p * 3.0).unwrap(),
    }
}

fn tnorm(k: usize) -> Aggregation {
    [Aggregation::Minimum, Aggregation::Product, Aggregation::Lukasiewicz][k % 3].clone()
}

/// Number of construction kinds `construct` dispatches on.
pub const CONSTRUCTIONS: usize = 9;

/// One companion construction, picked by `kind` and parametrised by the rest.
pub fn construct(kind: usize, k: usize, j: usize, p: f64) -> Result<CompanionResult> {
    match kind {
        0 => companion_for_an_implication(&disjunctor(k), &negation(j, p)),
        1 => {
            let which = if j.is_multiple_of(2) { ExtremeNegation::Smallest } else { ExtremeNegation::Greatest };
            companion_for_extreme_negations(&disjunctor(k), which)
        }
        2 => {
            let t = tnorm(k);
            let t = if j.is_multiple_of(2) { t } else { t.conjugate(Automorphism::power(0.5 + p * 2.0).unwrap()) };
            companion_for_r_implication(&t)
        }
        3 => match k % 2 {
            0 => companion_for_ql(&Aggregation::BoundedSum, &Aggregation::Minimum, &Negation::Standard),
            _ => companion_for_ql(&Aggregation::Maximum, &Aggregation::Minimum, &Negation::Greatest),
        },
        4 => companion_for_f_implication(&match k % 2 {
            0 => Generator::NegLog,
            _ => Generator::complement_power(0.5 + p * 2.0).unwrap(),
        }),
        5 => companion_for_g_implication(&match k % 3 {
            0 => Generator::Identity,
            1 => Generator::power(0.5 + p * 2.0).unwrap(),
            _ => Generator::NegLogComplement,
        }),
        6 => match k % 2 {
            0 => companion_for_probabilistic(&Aggregation::Product, ProbabilisticVariant::Plain),
            _ => companion_for_probabilistic(&tnorm(j), ProbabilisticVariant::S),
        },
        7 => implication_from_aggregation(&tnorm(k), &negation(j, p)),
        _ => implication_for_representable(
            &match k % 2 {
                0 => Generator::Identity,
                _ => Generator::power(0.5 + p * 2.0).unwrap(),
            },
            &negation(j, p),
        ),
    }
}
