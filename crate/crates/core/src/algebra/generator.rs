//! Monotone generator functions on [0, 1] with values in the extended
//! reals, and automorphisms of the unit interval.

use crate::algebra::table::Table1D;
use crate::descriptor::{serde_via_descriptor, unknown_kind, Described, Descriptor};
use crate::error::{param, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    /// `u`
    Identity,
    /// `u^p`
    Power { exponent: f64 },
    /// `-ln u`, decreasing with `f(0) = +inf`.
    NegLog,
    /// `ln u`, increasing with `f(0) = -inf`.
    Log,
    /// `1 - u`
    Complement,
    /// `(1 - u)^p`
    ComplementPower { exponent: f64 },
    /// `-ln(1 - u)`, increasing with `g(1) = +inf`.
    NegLogComplement,
    /// Strictly monotone table with finite values.
    Tabulated(Table1D),
}

impl Generator {
    pub fn power(exponent: f64) -> Result<Self> {
        check_exponent(exponent)?;
        Ok(Generator::Power { exponent })
    }

    pub fn complement_power(exponent: f64) -> Result<Self> {
        check_exponent(exponent)?;
        Ok(Generator::ComplementPower { exponent })
    }

    pub fn tabulated(table: Table1D) -> Result<Self> {
        if !table.is_strictly_increasing() && !table.is_strictly_decreasing() {
            return Err(param("a tabulated generator must be strictly monotone"));
        }
        Ok(Generator::Tabulated(table))
    }

    pub fn eval(&self, u: f64) -> f64 {
        match self {
            Generator::Identity => u,
            Generator::Power { exponent } => u.powf(*exponent),
            Generator::NegLog => -u.ln(),
            Generator::Log => u.ln(),
            Generator::Complement => 1.0 - u,
            Generator::ComplementPower { exponent } => (1.0 - u).powf(*exponent),
            Generator::NegLogComplement => -(1.0 - u).ln(),
            Generator::Tabulated(t) => t.eval(u),
        }
    }

    /// Inverse on the range, with arguments outside the range clamped to
    /// the nearest endpoint of [0, 1].
    pub fn inverse(&self, v: f64) -> f64 {
        let u = match self {
            Generator::Identity => v,
            Generator::Power { exponent } => v.max(0.0).powf(1.0 / exponent),
            Generator::NegLog => (-v).exp(),
            Generator::Log => v.exp(),
            Generator::Complement => 1.0 - v,
            Generator::ComplementPower { exponent } => 1.0 - v.max(0.0).powf(1.0 / exponent),
            Generator::NegLogComplement => -(-v).exp_m1(),
            Generator::Tabulated(t) => t.inverse(v),
        };
        if u.is_nan() {
            return 0.0;
        }
        u.clamp(0.0, 1.0)
    }

    pub fn is_increasing(&self) -> bool {
        match self {
            Generator::Identity
            | Generator::Power { .. }
            | Generator::Log
            | Generator::NegLogComplement => true,
            Generator::NegLog | Generator::Complement | Generator::ComplementPower { .. } => false,
            Generator::Tabulated(t) => t.is_strictly_increasing(),
        }
    }

    /// Checks the shape `[0,1] -> [0, +inf]`, strictly increasing, `g(0) = 0`.
    pub fn require_increasing_from_zero(&self, role: &str) -> Result<()> {
        if !self.is_increasing() || self.eval(0.0) != 0.0 {
            return Err(param(format!(
                "{role} must be strictly increasing with g(0) = 0"
            )));
        }
        Ok(())
    }

    /// Checks the shape `[0,1] -> [0, +inf]`, strictly decreasing, `f(1) = 0`.
    pub fn require_decreasing_to_zero(&self, role: &str) -> Result<()> {
        if self.is_increasing() || self.eval(1.0) != 0.0 {
            return Err(param(format!(
                "{role} must be strictly decreasing with f(1) = 0"
            )));
        }
        Ok(())
    }
}

fn check_exponent(p: f64) -> Result<()> {
    if p.is_finite() && p > 0.0 {
        Ok(())
    } else {
        Err(param(format!("exponent must be positive and finite, got {p}")))
    }
}

impl Described for Generator {
    fn describe(&self) -> Descriptor {
        match self {
            Generator::Identity => Descriptor::bare("identity"),
            Generator::Power { exponent } => Descriptor::bare("power").with("exponent", exponent),
            Generator::NegLog => Descriptor::bare("neg-log"),
            Generator::Log => Descriptor::bare("log"),
            Generator::Complement => Descriptor::bare("complement"),
            Generator::ComplementPower { exponent } => {
                Descriptor::bare("complement-power").with("exponent", exponent)
            }
            Generator::NegLogComplement => Descriptor::bare("neg-log-complement"),
            Generator::Tabulated(t) => Descriptor::bare("tabulated")
                .with("grid", t.grid())
                .with("values", t.values()),
        }
    }

    fn from_descriptor(d: &Descriptor) -> Result<Self> {
        Ok(match d.kind.as_str() {
            "identity" => {
                d.reader(&[])?;
                Generator::Identity
            }
            "power" => Generator::power(d.reader(&["exponent"])?.get("exponent")?)?,
            "neg-log" => {
                d.reader(&[])?;
                Generator::NegLog
            }
            "log" => {
                d.reader(&[])?;
                Generator::Log
            }
            "complement" => {
                d.reader(&[])?;
                Generator::Complement
            }
            "complement-power" => {
                Generator::complement_power(d.reader(&["exponent"])?.get("exponent")?)?
            }
            "neg-log-complement" => {
                d.reader(&[])?;
                Generator::NegLogComplement
            }
            "tabulated" => {
                let r = d.reader(&["grid", "values"])?;
                Generator::tabulated(Table1D::new(r.get("grid")?, r.get("values")?)?)?
            }
            other => return Err(unknown_kind("generator", other)),
        })
    }
}

serde_via_descriptor!(Generator);

/// An increasing bijection of [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub enum Automorphism {
    Identity,
    Power { exponent: f64 },
    Tabulated(Table1D),
}

impl Automorphism {
    pub fn power(exponent: f64) -> Result<Self> {
        check_exponent(exponent)?;
        Ok(Automorphism::Power { exponent })
    }

    pub fn tabulated(table: Table1D) -> Result<Self> {
        let v = table.values();
        if !table.is_strictly_increasing() || v[0] != 0.0 || v[v.len() - 1] != 1.0 {
            return Err(param(
                "an automorphism must be strictly increasing with 0 -> 0 and 1 -> 1",
            ));
        }
        Ok(Automorphism::Tabulated(table))
    }

    pub fn apply(&self, x: f64) -> f64 {
        match self {
            Automorphism::Identity => x,
            Automorphism::Power { exponent } => x.powf(*exponent),
            Automorphism::Tabulated(t) => t.eval(x),
        }
    }

    pub fn invert(&self, x: f64) -> f64 {
        match self {
            Automorphism::Identity => x,
            Automorphism::Power { exponent } => x.powf(1.0 / exponent),
            Automorphism::Tabulated(t) => t.inverse(x),
        }
    }
}

impl Described for Automorphism {
    fn describe(&self) -> Descriptor {
        match self {
            Automorphism::Identity => Descriptor::bare("identity"),
            Automorphism::Power { exponent } => {
                Descriptor::bare("power").with("exponent", exponent)
            }
            Automorphism::Tabulated(t) => Descriptor::bare("tabulated")
                .with("grid", t.grid())
                .with("values", t.values()),
        }
    }

    fn from_descriptor(d: &Descriptor) -> Result<Self> {
        match d.kind.as_str() {
            "identity" => {
                d.reader(&[])?;
                Ok(Automorphism::Identity)
            }
            "power" => Automorphism::power(d.reader(&["exponent"])?.get("exponent")?),
            "tabulated" => {
                let r = d.reader(&["grid", "values"])?;
                Automorphism::tabulated(Table1D::new(r.get("grid")?, r.get("values")?)?)
            }
            other => Err(unknown_kind("automorphism", other)),
        }
    }
}

serde_via_descriptor!(Automorphism);
