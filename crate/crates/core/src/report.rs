//! Verification reports and their text / JSON-lines encodings.
//!
//! The JSON form is one object per line. Check lines look like
//!
//! ```text
//! {"type":"check","suite":"kernel","id":"kernel(0,0)","status":"pass","detail":"identity"}
//! ```
//!
//! and the last line is a summary object carrying [`SCHEMA`]:
//!
//! ```text
//! {"type":"summary","schema":"lmod-report/1","suite":"kernel","pass":121,"fail":0,"skip":0,"total":121,"wall_us":5120}
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "lmod-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skip
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub wall_us: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Line {
    Check {
        suite: String,
        id: String,
        status: Status,
        detail: String,
    },
    Summary {
        schema: String,
        suite: String,
        pass: usize,
        fail: usize,
        skip: usize,
        total: usize,
        wall_us: u64,
    },
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
            wall_us: 0,
        }
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            id: id.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(id, Status::from_bool(ok), detail);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.wall_us += other.wall_us;
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for check in &self.checks {
            match check.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::Skip => c.skip += 1,
            }
        }
        c
    }

    pub fn passed(&self) -> bool {
        self.counts().fail == 0
    }

    /// Process exit status: 0 iff nothing failed.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}  {}  {}", c.status.tag(), c.id, c.detail);
        }
        let n = self.counts();
        let _ = writeln!(
            out,
            "suite {}: {} passed, {} failed, {} skipped ({} total) in {} us",
            self.suite,
            n.pass,
            n.fail,
            n.skip,
            n.total(),
            self.wall_us
        );
        out
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let line = Line::Check {
                suite: self.suite.clone(),
                id: c.id.clone(),
                status: c.status,
                detail: c.detail.clone(),
            };
            out.push_str(&serde_json::to_string(&line).expect("serialisable"));
            out.push('\n');
        }
        let n = self.counts();
        let summary = Line::Summary {
            schema: SCHEMA.into(),
            suite: self.suite.clone(),
            pass: n.pass,
            fail: n.fail,
            skip: n.skip,
            total: n.total(),
            wall_us: self.wall_us,
        };
        out.push_str(&serde_json::to_string(&summary).expect("serialisable"));
        out.push('\n');
        out
    }

    /// Parses the JSON-lines form and cross-checks the summary counts
    /// against the check lines.
    pub fn parse_json_lines(text: &str) -> Result<Report, String> {
        let mut report: Option<Report> = None;
        let mut summary: Option<(Counts, u64)> = None;
        for (idx, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            if summary.is_some() {
                return Err(format!("line {}: content after summary", idx + 1));
            }
            let line: Line =
                serde_json::from_str(raw).map_err(|e| format!("line {}: {e}", idx + 1))?;
            match line {
                Line::Check {
                    suite,
                    id,
                    status,
                    detail,
                } => {
                    let r = report.get_or_insert_with(|| Report::new(suite));
                    r.checks.push(CheckResult { id, status, detail });
                }
                Line::Summary {
                    schema,
                    suite,
                    pass,
                    fail,
                    skip,
                    total,
                    wall_us,
                } => {
                    if schema != SCHEMA {
                        return Err(format!("unsupported schema {schema:?}"));
                    }
                    let counts = Counts { pass, fail, skip };
                    if counts.total() != total {
                        return Err("summary total does not match its counts".into());
                    }
                    report.get_or_insert_with(|| Report::new(suite));
                    summary = Some((counts, wall_us));
                }
            }
        }
        let (counts, wall_us) = summary.ok_or("missing summary line")?;
        let mut report = report.expect("summary creates the report");
        report.wall_us = wall_us;
        if report.counts() != counts {
            return Err("summary counts do not match check lines".into());
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> Report {
        let mut r = Report::new("demo");
        r.check("one", true, "fine");
        r.check("two", false, "entry (0,1) differs, \"1\" vs 2");
        r.push("three", Status::Skip, "");
        r.wall_us = 42;
        r
    }

    #[test]
    fn counts_and_exit_code() {
        let r = sample();
        assert_eq!(
            r.counts(),
            Counts {
                pass: 1,
                fail: 1,
                skip: 1
            }
        );
        assert_eq!(r.exit_code(), 1);
        assert_eq!(Report::new("empty").exit_code(), 0);
        assert!(r.to_text().contains("FAIL  two"));
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = r.to_json_lines();
        assert_eq!(text.lines().count(), 4);
        assert_eq!(Report::parse_json_lines(&text).unwrap(), r);
    }

    #[test]
    fn tampered_summary_rejected() {
        let text = sample().to_json_lines().replace("\"fail\":1", "\"fail\":0");
        assert!(Report::parse_json_lines(&text).is_err());
        assert!(Report::parse_json_lines("").is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip_any(statuses in prop::collection::vec(0u8..3, 0..20), detail in ".*") {
            let mut r = Report::new("p");
            for (i, s) in statuses.iter().enumerate() {
                let status = [Status::Pass, Status::Fail, Status::Skip][*s as usize];
                r.push(format!("c{i}"), status, detail.clone());
            }
            let back = Report::parse_json_lines(&r.to_json_lines()).unwrap();
            prop_assert_eq!(back.counts(), r.counts());
            prop_assert_eq!(back, r);
        }
    }
}
