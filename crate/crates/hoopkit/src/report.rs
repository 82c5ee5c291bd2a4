//! Whitespace-aligned text tables for stdout.

use std::fmt;

use hoopkit_core::algebra::{ClassFlags, Property};
use hoopkit_core::corpus::oracles::{OracleReport, ProblemReport};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(header: &[S]) -> Self {
        Table {
            header: header.iter().map(ToString::to_string).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: &[S]) {
        self.rows.push(row.iter().map(ToString::to_string).collect());
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.header.len();
        let mut width = vec![0; cols];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                if i + 1 < row.len() {
                    line.extend(std::iter::repeat_n(' ', width[i] - cell.chars().count()));
                }
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

pub fn problem_table(reports: &[ProblemReport]) -> Table {
    let mut t = Table::new(&["problem", "expected", "models", "tuples", "violations"]);
    for r in reports {
        t.push(&[
            r.id.clone(),
            r.expected.name().to_string(),
            r.models.to_string(),
            r.tuples.to_string(),
            r.violations.to_string(),
        ]);
    }
    t
}

pub fn oracle_table(reports: &[OracleReport]) -> Table {
    let mut t = Table::new(&["check", "models", "tuples", "violations"]);
    for r in reports {
        t.push(&[
            r.name.clone(),
            r.models.to_string(),
            r.tuples.to_string(),
            r.violation_count.to_string(),
        ]);
    }
    t
}

pub fn flags_table(flags: &ClassFlags) -> Table {
    let mut t = Table::new(&["property", "holds", "witness"]);
    let annihilator = flags.annihilator.map_or("-".to_string(), |a| a.to_string());
    for p in Property::ALL {
        let witness = match p {
            Property::Bounded => format!("annihilator {annihilator}"),
            Property::Hoop => pair(flags.cwc_witness),
            Property::Csd => pair(flags.csd_witness),
            _ => String::new(),
        };
        t.push(&[p.name().to_string(), yes_no(flags.has(p)).to_string(), witness]);
    }
    t
}

fn pair(w: Option<(usize, usize)>) -> String {
    w.map_or(String::new(), |(x, y)| format!("fails at x={x} y={y}"))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let mut t = Table::new(&["id", "n"]);
        t.push(&["LCL888", "12"]);
        t.push(&["x", "3"]);
        assert_eq!(t.to_string(), "id      n\nLCL888  12\nx       3\n");
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn flags_of_a_chain() {
        let flags = hoopkit_core::classify(&hoopkit_core::FiniteAlgebra::drastic_chain(4));
        let text = flags_table(&flags).to_string();
        assert!(text.contains("hoop        no     fails at"), "{text}");
        assert!(text.contains("bounded     yes    annihilator 3"), "{text}");
    }
}
