//! The shared JSON shape for operator descriptors:
//! `{"kind": string, "params": object}` (implications use `"family"`).

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// A tag plus an untyped parameter object.
#[derive(Debug, Clone, PartialEq)]
pub struct Descriptor {
    pub kind: String,
    pub params: Map<String, Value>,
}

impl Descriptor {
    pub fn bare(kind: &str) -> Self {
        Descriptor {
            kind: kind.to_string(),
            params: Map::new(),
        }
    }

    /// Adds a parameter, builder style.
    pub fn with<T: Serialize>(mut self, key: &str, value: T) -> Self {
        let v = serde_json::to_value(value).expect("descriptor parameters serialize");
        self.params.insert(key.to_string(), v);
        self
    }

    pub fn from_value(value: Value, tag: &str) -> Result<Self> {
        let Value::Object(mut obj) = value else {
            return Err(Error::Descriptor(format!(
                "expected an object with a `{tag}` field"
            )));
        };
        let kind = match obj.remove(tag) {
            Some(Value::String(s)) => s,
            _ => return Err(Error::Descriptor(format!("missing string field `{tag}`"))),
        };
        let params = match obj.remove("params") {
            None | Some(Value::Null) => Map::new(),
            Some(Value::Object(m)) => m,
            Some(_) => {
                return Err(Error::Descriptor(format!("`{kind}`: params must be an object")))
            }
        };
        if let Some(extra) = obj.keys().next() {
            return Err(Error::Descriptor(format!("`{kind}`: unexpected field `{extra}`")));
        }
        Ok(Descriptor { kind, params })
    }

    pub fn into_value(self, tag: &str) -> Value {
        let mut obj = Map::new();
        obj.insert(tag.to_string(), Value::String(self.kind));
        obj.insert("params".to_string(), Value::Object(self.params));
        Value::Object(obj)
    }

    /// Typed reader that rejects parameters outside `allowed`.
    pub fn reader(&self, allowed: &[&str]) -> Result<ParamReader<'_>> {
        if let Some(k) = self.params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::Descriptor(format!(
                "`{}` does not take parameter `{k}`",
                self.kind
            )));
        }
        Ok(ParamReader { d: self })
    }
}

pub struct ParamReader<'a> {
    d: &'a Descriptor,
}

impl ParamReader<'_> {
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Result<T> {
        let v = self.d.params.get(key).ok_or_else(|| {
            Error::Descriptor(format!("`{}` is missing parameter `{key}`", self.d.kind))
        })?;
        serde_json::from_value(v.clone())
            .map_err(|e| Error::Descriptor(format!("`{}` parameter `{key}`: {e}", self.d.kind)))
    }

    pub fn get_or<T: DeserializeOwned>(&self, key: &str, default: T) -> Result<T> {
        if self.d.params.contains_key(key) {
            self.get(key)
        } else {
            Ok(default)
        }
    }
}

/// Operators that round-trip through a [`Descriptor`].
pub trait Described: Sized {
    const TAG: &'static str = "kind";

    fn describe(&self) -> Descriptor;

    fn from_descriptor(d: &Descriptor) -> Result<Self>;

    fn to_json(&self) -> Value {
        self.describe().into_value(Self::TAG)
    }

    fn from_json(value: Value) -> Result<Self> {
        Self::from_descriptor(&Descriptor::from_value(value, Self::TAG)?)
    }
}

/// Implements serde for a [`Described`] type via its descriptor.
macro_rules! serde_via_descriptor {
    ($t:ty) => {
        impl serde::Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                use $crate::descriptor::Described;
                self.to_json().serialize(s)
            }
        }

        impl<'de> serde::Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                use $crate::descriptor::Described;
                let v = serde_json::Value::deserialize(d)?;
                <$t>::from_json(v).map_err(serde::de::Error::custom)
            }
        }
    };
}
pub(crate) use serde_via_descriptor;

pub(crate) fn unknown_kind(what: &str, kind: &str) -> Error {
    Error::Descriptor(format!("unknown {what} `{kind}`"))
}

/// Parses an operator argument given on the command line: inline JSON,
/// `@path` to a JSON file, or a bare kind name.
pub fn parse_arg<T: Described>(text: &str) -> Result<T> {
    let text = text.trim();
    let value: Value = if let Some(path) = text.strip_prefix('@') {
        serde_json::from_str(&std::fs::read_to_string(path)?)?
    } else if text.starts_with('{') {
        serde_json::from_str(text)?
    } else {
        Descriptor::bare(text).into_value(T::TAG)
    };
    T::from_json(value)
}
