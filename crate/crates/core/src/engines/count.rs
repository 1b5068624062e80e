use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub label: String,
    pub count: u64,
}

/// Operator applications per stage. A binary operation costs 1 and a fold
/// over `k` items costs `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OpCount {
    pub stages: Vec<Stage>,
    pub total: u64,
}

impl OpCount {
    pub fn push(&mut self, label: impl Into<String>, count: u64) {
        self.stages.push(Stage {
            label: label.into(),
            count,
        });
        self.total += count;
    }

    /// Appends `other`'s stages, prefixing each label.
    pub fn extend_prefixed(&mut self, prefix: &str, other: OpCount) {
        for s in other.stages {
            self.push(format!("{prefix}{}", s.label), s.count);
        }
    }

    pub fn vector(&self) -> Vec<u64> {
        self.stages.iter().map(|s| s.count).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("stage,count\n");
        for s in &self.stages {
            let label = if s.label.contains([',', '"']) {
                format!("\"{}\"", s.label.replace('"', "\"\""))
            } else {
                s.label.clone()
            };
            out.push_str(&format!("{label},{}\n", s.count));
        }
        out.push_str(&format!("total,{}\n", self.total));
        out
    }
}

/// Aligned two-column table.
impl fmt::Display for OpCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .stages
            .iter()
            .map(|s| s.label.chars().count())
            .chain(["total".len()])
            .max()
            .unwrap_or(0);
        for s in &self.stages {
            writeln!(f, "{:<width$}  {:>8}", s.label, s.count)?;
        }
        write!(f, "{:<width$}  {:>8}", "total", self.total)
    }
}

/// Counts the operator calls made through it.
#[derive(Debug, Default)]
pub(crate) struct Counter(pub u64);

impl Counter {
    pub fn tick<T>(&mut self, v: T) -> T {
        self.0 += 1;
        v
    }

    pub fn take(&mut self) -> u64 {
        std::mem::take(&mut self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_tracks_stages() {
        let mut c = OpCount::default();
        c.push("a", 4);
        c.push("b, c", 3);
        assert_eq!(c.total, 7);
        assert_eq!(c.vector(), vec![4, 3]);
        assert_eq!(c.to_csv(), "stage,count\na,4\n\"b, c\",3\ntotal,7\n");
        let lines: Vec<String> = c.to_string().lines().map(str::to_string).collect();
        assert_eq!(lines[2], format!("{:<5}  {:>8}", "total", 7));
        assert_eq!(lines[0].len(), lines[2].len());
    }
}
