//! The `fuzzy-lia` command line.
//!
//! Exit codes: 0 success, 1 a checked property fails, 2 bad input,
//! 3 an engine refused the system.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{classify, Aggregation, ClassifyOptions, Generator, Negation};
use crate::bench::{complexity_report, count_operations, predict, Shape};
use crate::descriptor::{parse_arg, Described};
use crate::engines::{infer, Engine, MISOSystem, Mode, Observation};
use crate::error::{Error, Witness};
use crate::fixtures::{format_vector, verify_examples};
use crate::grid::DEFAULT_CUBE_GRID;
use crate::implications::{check_lia, Implication};
use crate::lia::{self, CompanionResult, ExtremeNegation, ProbabilisticVariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ADMISSION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fuzzy-lia", version, about = "Law-of-importation pairs and hierarchical fuzzy inference")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an inference engine on a system file.
    Infer(InferArgs),
    /// Check the law of importation for an implication and an aggregation.
    CheckLia(CheckLiaArgs),
    /// Build the partner of an operator.
    Companion {
        #[command(subcommand)]
        construction: Construction,
        /// Print the full result as JSON.
        #[arg(long, global = true)]
        json: bool,
    },
    /// Classify an aggregation function.
    Classify(ClassifyArgs),
    /// Operation counts and complexity reports.
    Bench(BenchArgs),
    /// Reproduce the embedded reference systems and counts.
    VerifyExamples {
        #[arg(long)]
        json: bool,
    },
}

fn operator<T: Described>(text: &str) -> Result<T, Error> {
    parse_arg(text)
}

#[derive(Debug, Args)]
pub struct InferArgs {
    /// System JSON file.
    #[arg(long)]
    pub system: PathBuf,
    /// `x1=LABEL,x2=LABEL`, positional labels, or `@FILE` with an input object.
    #[arg(long)]
    pub input: String,
    #[arg(long, value_enum)]
    pub engine: Engine,
    #[arg(long, value_enum, default_value = "classical")]
    pub mode: Mode,
    /// Append the per-stage operation counts.
    #[arg(long)]
    pub count: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CheckLiaArgs {
    /// Implication descriptor: family name, inline JSON or `@FILE`.
    #[arg(long, value_parser = operator::<Implication>)]
    pub implication: Implication,
    /// Aggregation descriptor: kind name, inline JSON or `@FILE`.
    #[arg(long, value_parser = operator::<Aggregation>)]
    pub aggregation: Aggregation,
    /// Points per axis of the cube grid.
    #[arg(long, default_value_t = DEFAULT_CUBE_GRID)]
    pub grid: usize,
    /// Defaults to the larger operator tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Which {
    Smallest,
    Greatest,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Variant {
    Plain,
    S,
}

#[derive(Debug, Subcommand)]
pub enum Construction {
    /// Aggregation partner of the (A,N)-implication `A(N(x), y)`.
    AnImplication {
        #[arg(long, value_parser = operator::<Aggregation>)]
        disjunctor: Aggregation,
        #[arg(long, value_parser = operator::<Negation>, default_value = "standard")]
        negation: Negation,
    },
    /// Partners of (A,N)-implications built with the smallest or greatest negation.
    ExtremeNegation {
        #[arg(long, value_parser = operator::<Aggregation>)]
        disjunctor: Aggregation,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Partner of the residual of an aggregation.
    RImplication {
        #[arg(long, value_parser = operator::<Aggregation>)]
        aggregation: Aggregation,
    },
    /// Partner of the QL-implication `A1(N(x), A2(x, y))`.
    Ql {
        #[arg(long, value_parser = operator::<Aggregation>)]
        disjunctor: Aggregation,
        #[arg(long, value_parser = operator::<Aggregation>)]
        conjunctor: Aggregation,
        #[arg(long, value_parser = operator::<Negation>, default_value = "standard")]
        negation: Negation,
    },
    /// Partner of the f-generated implication.
    FImplication {
        #[arg(long, value_parser = operator::<Generator>)]
        generator: Generator,
    },
    /// Partner of the g-generated implication.
    GImplication {
        #[arg(long, value_parser = operator::<Generator>)]
        generator: Generator,
    },
    /// Partner of a probabilistic implication.
    Probabilistic {
        #[arg(long, value_parser = operator::<Aggregation>)]
        copula: Aggregation,
        #[arg(long, value_enum, default_value = "s")]
        variant: Variant,
    },
    /// Verdict for the power implication of a t-norm.
    Power {
        #[arg(long, value_parser = operator::<Aggregation>)]
        tnorm: Aggregation,
    },
    /// Implication `N(A(x, Ñ(y)))` for an associative conjunctor.
    FromAggregation {
        #[arg(long, value_parser = operator::<Aggregation>)]
        aggregation: Aggregation,
        #[arg(long, value_parser = operator::<Negation>, default_value = "standard")]
        negation: Negation,
    },
    /// Implication partner of the representable aggregation of a generator.
    Representable {
        #[arg(long, value_parser = operator::<Generator>)]
        generator: Generator,
        #[arg(long, value_parser = operator::<Negation>, default_value = "standard")]
        negation: Negation,
    },
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = operator::<Aggregation>)]
    pub aggregation: Aggregation,
    #[arg(long, default_value_t = crate::grid::DEFAULT_GRID)]
    pub grid: usize,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Count an actual run of this system instead of predicting shapes.
    #[arg(long, requires = "input")]
    pub system: Option<PathBuf>,
    #[arg(long)]
    pub input: Option<String>,
    /// Engines to report; all when omitted.
    #[arg(long, value_enum)]
    pub engine: Vec<Engine>,
    /// Restrict a system run to one mode.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Shapes such as `5x4->3`.
    #[arg(long, value_parser = parse_shape)]
    pub shape: Vec<Shape>,
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
    #[arg(long)]
    pub json: bool,
}

fn parse_shape(s: &str) -> Result<Shape, Error> {
    s.parse()
}

const DEFAULT_SHAPES: [&str; 4] = ["5x4->3", "6x6->5", "4x4x4->3", "6x6x5->5"];

/// Runs the command line on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::Admission { ledger, .. } = &e {
                for h in ledger {
                    let _ = writeln!(err, "  {} {}", if h.holds { "ok  " } else { "FAIL" }, h.hypothesis);
                }
            }
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Admission { .. } => EXIT_ADMISSION,
        Error::Hypothesis { .. } => EXIT_PROPERTY,
        _ => EXIT_INPUT,
    }
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Result<(), Error> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn witness_text(w: &Witness) -> String {
    let point: Vec<String> = w.point.iter().map(|v| format!("{v:.6}")).collect();
    format!("({}): {:.6} vs {:.6}", point.join(", "), w.lhs, w.rhs)
}

fn read_observation(sys: &MISOSystem, text: &str) -> Result<Observation, Error> {
    match text.trim().strip_prefix('@') {
        Some(path) => Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?),
        None if text.trim_start().starts_with('{') => Ok(serde_json::from_str(text)?),
        None => Ok(sys.parse_input(text)?.into()),
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<i32, Error> {
    match command {
        Command::Infer(a) => {
            let sys = MISOSystem::from_file(&a.system)?;
            let obs = read_observation(&sys, &a.input)?;
            let report = infer(&sys, &obs, a.engine, a.mode)?;
            if a.json {
                json_line(out, &report)?;
            } else {
                writeln!(out, "{}", format_vector(report.memberships()))?;
                if a.count {
                    writeln!(out, "{}", report.counts)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::CheckLia(a) => {
            let tol = a.tol.unwrap_or_else(|| a.implication.tolerance().max(a.aggregation.tolerance()));
            let r = check_lia(&a.implication, &a.aggregation, a.grid, tol)?;
            let boundary = (!r.holds && (a.aggregation.value(1.0, 1.0) - 1.0).abs() <= tol)
                .then(|| lia::universal_obstruction(&a.implication))
                .flatten();
            if a.json {
                json_line(out, &serde_json::json!({ "lia": r, "boundary_witness": boundary }))?;
            } else if r.holds {
                writeln!(out, "HOLDS on a {0}x{0}x{0} grid, tol {tol:e}", a.grid)?;
            } else {
                let w = r.witness.as_ref().expect("failures carry a witness");
                writeln!(out, "FAILS at {}", witness_text(w))?;
                if let Some(b) = &boundary {
                    writeln!(out, "boundary obstruction at {}", witness_text(b))?;
                }
            }
            Ok(if r.holds { EXIT_OK } else { EXIT_PROPERTY })
        }
        Command::Companion { construction, json } => {
            let r = construct(construction)?;
            if json {
                json_line(out, &r)?;
            } else {
                print_companion(out, &r)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify(a) => {
            let opts = ClassifyOptions {
                grid: a.grid,
                tol: a.tol,
                ..ClassifyOptions::default()
            };
            let r = classify(&a.aggregation, &opts)?;
            if a.json {
                json_line(out, &r)?;
            } else {
                writeln!(out, "conjunctor      {}", r.is_conjunctor)?;
                writeln!(out, "disjunctor      {}", r.is_disjunctor)?;
                writeln!(out, "commutative     {}", r.is_commutative)?;
                writeln!(out, "associative     {}", r.is_associative)?;
                let neutral: Vec<String> = r
                    .neutral_elements
                    .iter()
                    .map(|e| {
                        let side = serde_json::to_value(e.side).ok();
                        format!("{:.6} ({})", e.value, side.as_ref().and_then(|v| v.as_str()).unwrap_or("?"))
                    })
                    .collect();
                writeln!(out, "neutral         {}", if neutral.is_empty() { "none".into() } else { neutral.join(", ") })?;
                writeln!(out, "zero divisors   {}", r.has_zero_divisors)?;
                writeln!(out, "one divisors    {}", r.has_one_divisors)?;
                for (name, w) in &r.witnesses {
                    writeln!(out, "witness {name}: {}", witness_text(w))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Bench(a) => bench(a, out),
        Command::VerifyExamples { json } => {
            let checks = verify_examples();
            let all = checks.iter().all(|c| c.passed);
            if json {
                json_line(out, &serde_json::json!({ "passed": all, "checks": checks }))?;
            } else {
                for c in &checks {
                    writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
                }
            }
            Ok(if all { EXIT_OK } else { EXIT_PROPERTY })
        }
    }
}

fn construct(c: Construction) -> Result<CompanionResult, Error> {
    match c {
        Construction::AnImplication { disjunctor, negation } => lia::companion_for_an_implication(&disjunctor, &negation),
        Construction::ExtremeNegation { disjunctor, which } => lia::companion_for_extreme_negations(
            &disjunctor,
            match which {
                Which::Smallest => ExtremeNegation::Smallest,
                Which::Greatest => ExtremeNegation::Greatest,
            },
        ),
        Construction::RImplication { aggregation } => lia::companion_for_r_implication(&aggregation),
        Construction::Ql {
            disjunctor,
            conjunctor,
            negation,
        } => lia::companion_for_ql(&disjunctor, &conjunctor, &negation),
        Construction::FImplication { generator } => lia::companion_for_f_implication(&generator),
        Construction::GImplication { generator } => lia::companion_for_g_implication(&generator),
        Construction::Probabilistic { copula, variant } => lia::companion_for_probabilistic(
            &copula,
            match variant {
                Variant::Plain => ProbabilisticVariant::Plain,
                Variant::S => ProbabilisticVariant::S,
            },
        ),
        Construction::Power { tnorm } => lia::power_implication_lia_verdict(&tnorm),
        Construction::FromAggregation { aggregation, negation } => lia::implication_from_aggregation(&aggregation, &negation),
        Construction::Representable { generator, negation } => lia::implication_for_representable(&generator, &negation),
    }
}

fn print_companion(out: &mut impl Write, r: &CompanionResult) -> Result<(), Error> {
    if let Some(i) = &r.implication {
        writeln!(out, "implication  {}", i.to_json())?;
    }
    if let Some(a) = &r.aggregation {
        writeln!(out, "aggregation  {}", a.to_json())?;
    }
    writeln!(out, "uniqueness   {}", serde_json::to_value(r.uniqueness)?.as_str().unwrap_or_default())?;
    if let Some(f) = &r.family {
        writeln!(out, "family       {f}")?;
    }
    if let Some(l) = &r.lia {
        writeln!(out, "LIA          {}", if l.holds { "certified" } else { "fails" })?;
    }
    if let Some(w) = &r.counterexample {
        writeln!(out, "witness      {}", witness_text(w))?;
    }
    for h in &r.hypotheses_checked {
        writeln!(out, "  {} {}", if h.holds { "ok  " } else { "FAIL" }, h.hypothesis)?;
    }
    Ok(())
}

fn bench(a: BenchArgs, out: &mut impl Write) -> Result<i32, Error> {
    let engines = if a.engine.is_empty() { Engine::ALL.to_vec() } else { a.engine.clone() };
    if let (Some(path), Some(input)) = (&a.system, &a.input) {
        let sys = MISOSystem::from_file(path)?;
        let Observation::Singleton(input) = read_observation(&sys, input)? else {
            return Err(crate::error::param("bench counts need singleton inputs"));
        };
        let modes = a.mode.map_or(Mode::ALL.to_vec(), |m| vec![m]);
        let shape = Shape::of(&sys);
        let mut runs = Vec::new();
        for &engine in &engines {
            for &mode in &modes {
                let counted = count_operations(engine, mode, &sys, &input)?;
                let predicted = predict(engine, mode, &shape)?.total;
                runs.push(serde_json::json!({
                    "engine": engine, "mode": mode, "counts": counted, "predicted_total": predicted,
                }));
                if a.csv {
                    writeln!(out, "# {engine} {mode}")?;
                    write!(out, "{}", counted.to_csv())?;
                } else if !a.json {
                    writeln!(out, "{engine} {mode} (predicted total {predicted})")?;
                    writeln!(out, "{counted}\n")?;
                }
            }
        }
        if a.json {
            json_line(out, &runs)?;
        }
        return Ok(EXIT_OK);
    }
    let shapes = if a.shape.is_empty() {
        DEFAULT_SHAPES.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    } else {
        a.shape
    };
    let report = complexity_report(&engines, &shapes)?;
    if a.json {
        json_line(out, &report)?;
    } else if a.csv {
        write!(out, "{}", report.to_csv())?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("fuzzy-lia").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn check_lia_verdicts() {
        let (code, out, _) = call(&["check-lia", "--implication", "kleene-dienes", "--aggregation", "min"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("HOLDS"));
        let (code, out, _) = call(&["check-lia", "--implication", "lukasiewicz", "--aggregation", "product"]);
        assert_eq!(code, EXIT_PROPERTY);
        assert!(out.starts_with("FAILS at ("));
        let (code, _, err) = call(&["check-lia", "--implication", "nonsense", "--aggregation", "min"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("nonsense"));
    }

    #[test]
    fn cutoff_residual_reports_the_boundary_triple() {
        let i = r#"{"family":"residual-operation","params":{"aggregation":{"kind":"cutoff-mean","params":{"cutoff":0.5}}}}"#;
        let (code, out, _) = call(&["check-lia", "--implication", i, "--aggregation", "min"]);
        assert_eq!(code, EXIT_PROPERTY);
        assert!(
            out.contains("boundary obstruction at (1.000000, 1.000000, 0.800000): 0.600000 vs 0.500000"),
            "{out}"
        );
    }

    #[test]
    fn unknown_flags_are_errors() {
        assert_eq!(call(&["classify", "--aggregation", "min", "--colour"]).0, EXIT_INPUT);
        assert_eq!(call(&[]).0, EXIT_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn companion_text_and_rejection() {
        let (code, out, _) = call(&["companion", "an-implication", "--disjunctor", "max"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("\"kind\":\"min\""), "{out}");
        let cutoff = r#"{"kind":"cutoff-mean","params":{"cutoff":0.5}}"#;
        let (code, _, err) = call(&["companion", "r-implication", "--aggregation", cutoff]);
        assert_eq!(code, EXIT_PROPERTY, "{err}");
    }

    #[test]
    fn bench_reference_shape() {
        let (code, out, _) = call(&["bench", "--engine", "bks", "--shape", "5x4->3", "--csv"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "engine,mode,shape,total,peak_storage,peak_dims\nbks,classical,5x4->3,82,5x4,2\nbks,hierarchical,5x4->3,22,5,1\n"
        );
    }
}
