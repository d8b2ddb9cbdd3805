use std::fmt::{self, Display, Write};

use serde::{Deserialize, Serialize};

use super::{FinitePoset, LatticeError};

/// `{"elements": [...], "covers": [[lower, upper], ...]}` with 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl<L: Display> FinitePoset<L> {
    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels().iter().map(ToString::to_string).collect(),
            covers: self.covers().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Hasse diagram in DOT, edges pointing from lower to upper element.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        self.write_dot(&mut out, name).expect("writing to a String");
        out
    }

    fn write_dot(&self, out: &mut String, name: &str) -> fmt::Result {
        writeln!(out, "digraph \"{}\" {{", escape(name))?;
        writeln!(out, "  rankdir=BT;")?;
        for (i, label) in self.labels().iter().enumerate() {
            writeln!(out, "  {i} [label=\"{}\"];", escape(&label.to_string()))?;
        }
        for &(a, b) in self.covers() {
            writeln!(out, "  {a} -> {b};")?;
        }
        writeln!(out, "}}")
    }
}

impl PosetJson {
    /// Rebuilds a poset with string labels from the exported form.
    pub fn into_poset(self) -> Result<FinitePoset<String>, LatticeError> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        FinitePoset::from_covers(self.elements, &covers)
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use crate::lattice::fixtures::words;

    #[test]
    fn json_export_round_trips() {
        let p = words(2, 2).into_poset();
        let json = p.to_json();
        assert_eq!(json.elements[0], "00");
        assert_eq!(json.covers.len(), 11);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.starts_with(r#"{"elements":["00","03","10""#));
        let back = json.into_poset().unwrap();
        assert_eq!(back.covers(), p.covers());
    }

    #[test]
    fn dot_export() {
        let p = words(2, 2).into_poset();
        let dot = p.to_dot("W(2,2)");
        assert!(dot.starts_with("digraph \"W(2,2)\" {\n  rankdir=BT;\n"));
        assert_eq!(dot.matches("->").count(), 11);
        assert!(dot.contains("  8 [label=\"23\"];"));
    }
}
