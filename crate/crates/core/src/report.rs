//! Verification records and their text/JSON rendering.

use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Anchor for checks that exist only to support the tooling.
pub const PLUMBING: &str = "plumbing";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A negative outcome that the fixture is designed to exhibit.
    ExpectedNegative,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedNegative => "XNEG",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub anchor: String,
    pub values: BTreeMap<String, String>,
    pub status: Status,
}

impl Record {
    pub fn new(check: impl Into<String>, anchor: impl Into<String>) -> Self {
        Record {
            check: check.into(),
            anchor: anchor.into(),
            values: BTreeMap::new(),
            status: Status::Pass,
        }
    }

    pub fn value(mut self, key: impl Into<String>, v: impl Display) -> Self {
        self.values.insert(key.into(), v.to_string());
        self
    }

    pub fn pass_if(mut self, ok: bool) -> Self {
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }

    /// Marks a record whose negative outcome is the intended one.
    pub fn expect_negative(mut self, observed_negative: bool) -> Self {
        self.status = if observed_negative {
            Status::ExpectedNegative
        } else {
            Status::Fail
        };
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", self.status.tag(), self.check, self.anchor)?;
        for (k, v) in &self.values {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = Record>) {
        self.records.extend(rs);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| !r.failed())
    }

    pub fn failures(&self) -> Vec<&Record> {
        self.records.iter().filter(|r| r.failed()).collect()
    }

    /// Records with failures first, otherwise in insertion order.
    pub fn ordered(&self) -> Vec<&Record> {
        let mut out: Vec<&Record> = self.failures();
        out.extend(self.records.iter().filter(|r| !r.failed()));
        out
    }

    pub fn find(&self, check: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.check == check)
    }

    /// Converts a failed report into a verification error.
    pub fn ensure_passed(&self) -> Result<()> {
        match self.failures().first() {
            None => Ok(()),
            Some(r) => Err(Error::Verification(r.to_string())),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.title);
        for r in self.ordered() {
            let _ = writeln!(out, "{r}");
        }
        let count = |s: Status| self.records.iter().filter(|r| r.status == s).count();
        let _ = writeln!(
            out,
            "# {} checks: {} pass, {} expected negative, {} fail",
            self.records.len(),
            count(Status::Pass),
            count(Status::ExpectedNegative),
            count(Status::Fail)
        );
        out
    }

    /// JSON with records in the same order as [`Report::to_text`].
    pub fn to_json(&self) -> String {
        let ordered = Report {
            title: self.title.clone(),
            records: self.ordered().into_iter().cloned().collect(),
        };
        serde_json::to_string_pretty(&ordered).expect("report serializes") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))
    }
}
