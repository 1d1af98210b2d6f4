//! Pass/fail reports with counterexample payloads.
//!
//! Text form is one line per check: `<checkId> <PASS|FAIL> [<payload>]`.
//! JSON form is an array of `{checkId, passed, counterexample}` objects.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::events::Event;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    Event(Event),
    Value(BigRational),
    Text(String),
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binding::Event(e) => f.write_str(&e.braced()),
            Binding::Value(v) => write!(f, "{v}"),
            Binding::Text(t) => f.write_str(t),
        }
    }
}

/// Named events and values that witness a failure (or, for existence
/// checks, a success).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Counterexample {
    bindings: Vec<(String, Binding)>,
}

impl Counterexample {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn event(mut self, name: &str, event: &Event) -> Self {
        self.bindings
            .push((name.to_string(), Binding::Event(event.clone())));
        self
    }

    pub fn value(mut self, name: &str, value: &BigRational) -> Self {
        self.bindings
            .push((name.to_string(), Binding::Value(value.clone())));
        self
    }

    pub fn text(mut self, name: &str, text: impl Into<String>) -> Self {
        self.bindings
            .push((name.to_string(), Binding::Text(text.into())));
        self
    }

    pub fn bindings(&self) -> &[(String, Binding)] {
        &self.bindings
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, b)| b)
    }

    pub fn get_event(&self, name: &str) -> Option<&Event> {
        match self.get(name) {
            Some(Binding::Event(e)) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, binding)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={binding}")?;
        }
        Ok(())
    }
}

impl Serialize for Counterexample {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.bindings.len()))?;
        for (name, binding) in &self.bindings {
            map.serialize_entry(name, &binding.to_string())?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckEntry {
    pub check_id: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    pub fn pass(check_id: &str) -> Self {
        CheckEntry {
            check_id: check_id.to_string(),
            passed: true,
            counterexample: None,
            note: None,
        }
    }

    pub fn fail(check_id: &str, counterexample: Counterexample) -> Self {
        CheckEntry {
            check_id: check_id.to_string(),
            passed: false,
            counterexample: Some(counterexample),
            note: None,
        }
    }

    /// `PASS` when `failure` is `None`, otherwise `FAIL` with it attached.
    pub fn from_search(check_id: &str, failure: Option<Counterexample>) -> Self {
        match failure {
            None => CheckEntry::pass(check_id),
            Some(cx) => CheckEntry::fail(check_id, cx),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_witness(mut self, witness: Counterexample) -> Self {
        self.counterexample = Some(witness);
        self
    }
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{} {}", self.check_id, status)?;
        if let Some(cx) = &self.counterexample {
            if !cx.bindings.is_empty() {
                write!(f, " {cx}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct ValidationReport {
    entries: Vec<CheckEntry>,
}

impl ValidationReport {
    pub fn new(entries: Vec<CheckEntry>) -> Self {
        ValidationReport { entries }
    }

    pub fn entries(&self) -> &[CheckEntry] {
        &self.entries
    }

    pub fn get(&self, check_id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.check_id == check_id)
    }

    pub fn passed(&self, check_id: &str) -> Option<bool> {
        self.get(check_id).map(|e| e.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.entries.extend(other.entries);
    }

    /// Orders entries by check id, comparing numeric parts numerically.
    pub fn sort_by_id(&mut self) {
        self.entries
            .sort_by(|a, b| compare_check_ids(&a.check_id, &b.check_id));
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            out.push_str(&entry.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// `L2 < L10 < L11 < P11a < P11b`; plain text comparison elsewhere.
pub fn compare_check_ids(a: &str, b: &str) -> Ordering {
    fn split(id: &str) -> (&str, u64, &str) {
        let start = id.find(|c: char| c.is_ascii_digit()).unwrap_or(id.len());
        let rest = &id[start..];
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let number = rest[..end].parse().unwrap_or(0);
        (&id[..start], number, &rest[end..])
    }
    split(a).cmp(&split(b))
}
