//! The three embedded reference systems and the checks run against them.

use serde::Serialize;

use crate::engines::{infer, Engine, MISOSystem, Mode, Observation, SingletonInput};
use crate::error::Result;

pub const BKS_REFERENCE: &str = include_str!("../fixtures/bks_reference.json");
pub const SBR_REFERENCE: &str = include_str!("../fixtures/sbr_reference.json");
pub const TIP_REFERENCE: &str = include_str!("../fixtures/tip_reference.json");

const TOL: f64 = 1e-9;

/// A reference system with the output both modes must reproduce.
#[derive(Debug, Clone, Copy)]
pub struct Reference {
    pub engine: Engine,
    pub source: &'static str,
    pub expected: [f64; 3],
}

pub const REFERENCES: [Reference; 3] = [
    Reference {
        engine: Engine::Bks,
        source: BKS_REFERENCE,
        expected: [0.3, 0.3, 0.3],
    },
    Reference {
        engine: Engine::Sbr,
        source: SBR_REFERENCE,
        expected: [0.2, 0.1, 0.2],
    },
    Reference {
        engine: Engine::Tip,
        source: TIP_REFERENCE,
        expected: [0.7, 0.6, 0.8],
    },
];

/// Expected BKS operation totals: classical, then hierarchical.
pub const BKS_COUNT_TOTALS: [u64; 2] = [82, 20];

pub fn reference_input() -> SingletonInput {
    SingletonInput::new(["x12", "x23"])
}

pub fn reference_system(engine: Engine) -> Result<MISOSystem> {
    let r = REFERENCES.iter().find(|r| r.engine == engine).expect("every engine has a reference");
    MISOSystem::from_json_str(r.source)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Runs the eight reference checks on the embedded fixtures.
pub fn verify_examples() -> Vec<ExampleCheck> {
    verify_references(&REFERENCES)
}

/// Three outputs per mode and the two BKS count totals.
pub fn verify_references(refs: &[Reference]) -> Vec<ExampleCheck> {
    let input: Observation = reference_input().into();
    let mut checks = Vec::new();
    let mut bks_totals = [None, None];
    for mode in Mode::ALL {
        for r in refs {
            let name = format!("{} {mode} output", r.engine);
            let check = match MISOSystem::from_json_str(r.source).and_then(|s| infer(&s, &input, r.engine, mode)) {
                Err(e) => ExampleCheck {
                    name,
                    passed: false,
                    detail: e.to_string(),
                },
                Ok(report) => {
                    if r.engine == Engine::Bks {
                        bks_totals[mode as usize] = Some(report.counts.total);
                    }
                    let got = report.memberships();
                    ExampleCheck {
                        name,
                        passed: got.len() == 3 && got.iter().zip(r.expected).all(|(g, e)| (g - e).abs() <= TOL),
                        detail: format!("got {}, expected {}", format_vector(got), format_vector(&r.expected)),
                    }
                }
            };
            checks.push(check);
        }
    }
    for (mode, (got, want)) in Mode::ALL.iter().zip(bks_totals.into_iter().zip(BKS_COUNT_TOTALS)) {
        checks.push(ExampleCheck {
            name: format!("bks {mode} operation count"),
            passed: got == Some(want),
            detail: match got {
                Some(g) => format!("got {g}, expected {want}"),
                None => "engine did not run".into(),
            },
        });
    }
    checks
}

/// Memberships at six decimals, space separated.
pub fn format_vector(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        for e in Engine::ALL {
            assert_eq!(reference_system(e).unwrap().arity(), 2);
        }
    }

    #[test]
    fn corrupted_fixture_fails_validation() {
        let bad = BKS_REFERENCE.replacen("0.9", "1.2", 1);
        let leaked: &'static str = Box::leak(bad.into_boxed_str());
        let refs = [Reference {
            source: leaked,
            ..REFERENCES[0]
        }];
        let checks = verify_references(&refs);
        assert!(!checks[0].passed);
        assert!(checks[0].detail.contains("1.2"), "{}", checks[0].detail);
    }

    #[test]
    fn six_decimals() {
        assert_eq!(format_vector(&[0.3, 0.1 + 0.2, 1.0]), "0.300000 0.300000 1.000000");
    }
}
