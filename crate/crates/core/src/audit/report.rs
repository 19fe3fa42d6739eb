use serde::Serialize;

use crate::algebra::PolyJson;
use crate::MPoly;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AuditStatus {
    Match,
    Mismatch,
}

/// One compared identity: a reference display (or closed form) against the
/// value computed independently. `status` is `Match` exactly when
/// `difference` is the zero polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub item: String,
    pub status: AuditStatus,
    pub difference: MPoly,
    pub notes: String,
    /// Mandatory identities decide the audit's pass/fail outcome; the rest
    /// are informational.
    pub mandatory: bool,
}

impl AuditReport {
    /// Builds a report from `computed - reference`.
    pub fn compare(item: impl Into<String>, computed: &MPoly, reference: &MPoly, mandatory: bool) -> Self {
        let difference = computed - reference;
        let status = if difference.is_zero() {
            AuditStatus::Match
        } else {
            AuditStatus::Mismatch
        };
        Self {
            item: item.into(),
            status,
            difference,
            notes: String::new(),
            mandatory,
        }
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    pub fn is_match(&self) -> bool {
        self.status == AuditStatus::Match
    }
}

#[derive(Serialize)]
struct AuditReportJson<'a> {
    item: &'a str,
    status: AuditStatus,
    difference: PolyJson,
    notes: &'a str,
    mandatory: bool,
}

impl Serialize for AuditReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        AuditReportJson {
            item: &self.item,
            status: self.status,
            difference: PolyJson::from(&self.difference),
            notes: &self.notes,
            mandatory: self.mandatory,
        }
        .serialize(serializer)
    }
}

/// True when every mandatory entry matches.
pub fn mandatory_passed(reports: &[AuditReport]) -> bool {
    reports.iter().filter(|r| r.mandatory).all(AuditReport::is_match)
}
