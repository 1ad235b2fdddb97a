//! Check reports: one record per verified instance, emitted as text
//! lines and as a single JSON document.

use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "skipped-capacity")]
    SkippedCapacity,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::SkippedCapacity => "skipped-capacity",
        };
        f.write_str(s)
    }
}

/// Outcome of one checker on one instance. A failing report always
/// carries a witness that can be replayed on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
}

impl CheckReport {
    pub fn holds(check: impl Into<String>, instance: impl Into<String>, millis: u64) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            verdict: Verdict::Holds,
            witness: None,
            millis,
        }
    }

    pub fn fails(
        check: impl Into<String>,
        instance: impl Into<String>,
        witness: String,
        millis: u64,
    ) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            verdict: Verdict::Fails,
            witness: Some(witness),
            millis,
        }
    }

    pub fn skipped(check: impl Into<String>, instance: impl Into<String>, reason: String) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            verdict: Verdict::SkippedCapacity,
            witness: Some(reason),
            millis: 0,
        }
    }

    /// Line-delimited record form.
    pub fn line(&self) -> String {
        match &self.witness {
            Some(w) => {
                format!("{} {} [{}] {}ms :: {}", self.verdict, self.check, self.instance, self.millis, w)
            }
            None => format!("{} {} [{}] {}ms", self.verdict, self.check, self.instance, self.millis),
        }
    }
}

/// Run a closure, returning its value and the elapsed milliseconds.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_millis() as u64)
}

/// Serialize the reports as a single JSON document (an array of records).
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize cleanly")
}

/// Stable aggregation order for emitted reports.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| (&a.check, &a.instance).cmp(&(&b.check, &b.instance)));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_omits_absent_witnesses() {
        let r = CheckReport::holds("higgins", "S3", 1);
        let json = reports_to_json(&[r]);
        assert!(!json.contains("witness"));
        assert!(json.contains("\"verdict\": \"holds\""));
    }

    #[test]
    fn failing_reports_serialize_their_witness() {
        let r = CheckReport::fails("higgins", "S3", "subgroup [0,2]".into(), 3);
        let json = reports_to_json(std::slice::from_ref(&r));
        assert!(json.contains("subgroup [0,2]"));
        assert!(r.line().contains("fails"));
    }
}
