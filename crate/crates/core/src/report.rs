//! Structured pass/fail reports produced by the verifiers.
//!
//! A verification run yields a [`Report`]: an ordered list of named checks,
//! each carrying a detail string that pinpoints the first offending entry on
//! failure. Failure is an outcome, not an error; callers decide how to react.

use std::fmt;

use crate::exact::PolyMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckItem {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckItem { name: name.into(), pass: true, detail: String::new() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckItem { name: name.into(), pass: false, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new() -> Self {
        Report { items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    /// One-line summary: `ok (5 checks)` or the joined failure details.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("ok ({} checks)", self.items.len())
        } else {
            self.failures()
                .map(|i| {
                    if i.detail.is_empty() {
                        i.name.clone()
                    } else {
                        format!("{}: {}", i.name, i.detail)
                    }
                })
                .collect::<Vec<_>>()
                .join("; ")
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let status = if item.pass { "pass" } else { "FAIL" };
            if item.detail.is_empty() {
                writeln!(f, "{status}  {}", item.name)?;
            } else {
                writeln!(f, "{status}  {} — {}", item.name, item.detail)?;
            }
        }
        Ok(())
    }
}

/// Compares two matrices and reports the first offending entry on mismatch.
pub fn check_matrix_eq(name: impl Into<String>, lhs: &PolyMatrix, rhs: &PolyMatrix) -> CheckItem {
    match lhs.first_mismatch(rhs) {
        None => CheckItem::pass(name),
        Some((r, c)) => CheckItem::fail(
            name,
            format!(
                "first mismatch at ({r}, {c}): lhs = {}, rhs = {}",
                lhs.get(r, c),
                rhs.get(r, c)
            ),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::HPoly;

    #[test]
    fn summary_reports_failures_with_details() {
        let mut report = Report::new();
        report.push(CheckItem::pass("a"));
        assert!(report.passed());
        assert_eq!(report.summary(), "ok (1 checks)");
        report.push(CheckItem::fail("b", "entry (0, 1)"));
        assert!(!report.passed());
        assert_eq!(report.summary(), "b: entry (0, 1)");
    }

    #[test]
    fn matrix_check_pinpoints_entry() {
        let id = PolyMatrix::identity(2);
        let mut other = id.clone();
        other.set(0, 1, HPoly::h());
        let item = check_matrix_eq("eq", &id, &other);
        assert!(!item.pass);
        assert!(item.detail.contains("(0, 1)"));
        assert!(check_matrix_eq("eq", &id, &id).pass);
    }
}
