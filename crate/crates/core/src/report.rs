//! Pass/fail reports shared by every checker.
//!
//! Rendering is plain text with a stable line order, so two runs over the
//! same inputs produce byte-identical output.

use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub id: String,
    pub degree: Option<usize>,
    pub passed: bool,
    /// Basis tuple and both sides of the failing identity.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub title: String,
    pub params: Vec<(String, String)>,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport { title: title.into(), ..Default::default() }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    /// Records a check; `witness` is `None` exactly when it passed.
    pub fn record(&mut self, id: impl Into<String>, degree: Option<usize>, witness: Option<String>) {
        self.entries.push(CheckEntry { id: id.into(), degree, passed: witness.is_none(), witness });
    }

    pub fn pass(&mut self, id: impl Into<String>, degree: Option<usize>) {
        self.record(id, degree, None);
    }

    pub fn fail(&mut self, id: impl Into<String>, degree: Option<usize>, witness: impl Into<String>) {
        self.record(id, degree, Some(witness.into()));
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    /// First entry with the given id (and degree, if supplied).
    pub fn find(&self, id: &str, degree: Option<usize>) -> Option<&CheckEntry> {
        self.entries
            .iter()
            .find(|e| e.id == id && (degree.is_none() || e.degree == degree))
    }

    pub fn passed(&self, id: &str) -> bool {
        let mut hits = self.entries.iter().filter(|e| e.id == id).peekable();
        hits.peek().is_some() && hits.all(|e| e.passed)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Orders entries by (degree, id); entries without a degree come first.
    pub fn sort(&mut self) {
        self.entries.sort_by(|a, b| (a.degree, &a.id).cmp(&(b.degree, &b.id)));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report: {}", self.title);
        for (k, v) in &self.params {
            let _ = writeln!(out, "param {k} = {v}");
        }
        for e in &self.entries {
            let status = if e.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "[{status}] {}", e.id);
            if let Some(n) = e.degree {
                let _ = write!(out, " (n={n})");
            }
            if let Some(w) = &e.witness {
                let _ = write!(out, ": {w}");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "summary: {} passed, {failed} failed", self.entries.len() - failed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_is_stable() {
        let mut r = CheckReport::new("demo");
        r.param("seed", 7);
        r.fail("b", Some(2), "x");
        r.pass("a", Some(2));
        r.pass("z", None);
        r.sort();
        assert_eq!(
            r.render(),
            "report: demo\nparam seed = 7\n[PASS] z\n[PASS] a (n=2)\n[FAIL] b (n=2): x\nsummary: 2 passed, 1 failed\n"
        );
        assert!(!r.all_passed());
        assert!(r.passed("a"));
        assert!(!r.passed("missing"));
    }
}
