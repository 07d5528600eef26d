use std::fmt;

/// One checked instance: `AXIOM <name> <tuple> PASS|FAIL`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub axiom: String,
    pub tuple: String,
    pub pass: bool,
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "AXIOM {} {} {}", self.axiom, self.tuple, verdict)
    }
}

/// Ordered list of checked instances.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<ReportLine>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, axiom: &str, tuple: impl Into<String>, pass: bool) {
        let tuple: String = tuple.into();
        debug_assert!(!tuple.contains(char::is_whitespace), "tuple must not contain spaces: {tuple}");
        self.lines.push(ReportLine { axiom: axiom.to_string(), tuple, pass });
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn lines(&self) -> &[ReportLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportLine> {
        self.lines.iter().filter(|l| !l.pass)
    }

    /// Number of lines for the named axiom, and how many of them passed.
    pub fn count(&self, axiom: &str) -> (usize, usize) {
        let of: Vec<&ReportLine> = self.lines.iter().filter(|l| l.axiom == axiom).collect();
        (of.len(), of.iter().filter(|l| l.pass).count())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
