//! Machine-readable check reports: one record per check, an overall
//! verdict that is `pass` only when nothing failed and nothing was
//! inconclusive, and the exit-code mapping.

use serde::Serialize;
use serde_json::Value;

use hopfint_core::hopf::AxiomReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckRecord {
    pub fn pass(name: impl Into<String>) -> CheckRecord {
        CheckRecord { name: name.into(), status: CheckStatus::Pass, witness: None }
    }

    pub fn of_bool(name: impl Into<String>, ok: bool) -> CheckRecord {
        CheckRecord {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Value) -> CheckRecord {
        self.witness = Some(witness);
        self
    }

    /// One record per named check in an axiom-style report.
    pub fn from_axiom_report(prefix: &str, report: &AxiomReport) -> Vec<CheckRecord> {
        report
            .checks
            .iter()
            .map(|(name, ok)| CheckRecord::of_bool(format!("{prefix}.{name}"), *ok))
            .collect()
    }
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub input: String,
    pub field: String,
    pub dim: usize,
    /// Seed of the pseudo-random isomorphism-certificate search; fixed
    /// so inconclusive outcomes reproduce.
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub overall: CheckStatus,
}

impl ReportDocument {
    pub fn assemble(
        command: &str,
        input: &str,
        field: String,
        dim: usize,
        seed: u64,
        checks: Vec<CheckRecord>,
    ) -> ReportDocument {
        let overall = if checks.iter().all(|c| c.status == CheckStatus::Pass) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        ReportDocument {
            command: command.to_string(),
            input: input.to_string(),
            field,
            dim,
            seed,
            checks,
            overall,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.overall == CheckStatus::Pass {
            0
        } else {
            1
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text summary for stderr: one line per check plus a
    /// verdict line.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!("{tag:>12}  {}\n", c.name));
        }
        let verdict = match self.overall {
            CheckStatus::Pass => "pass",
            _ => "FAIL",
        };
        out.push_str(&format!(
            "overall: {verdict} ({} checks, seed {})\n",
            self.checks.len(),
            self.seed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_requires_every_record_to_pass() {
        let pass = ReportDocument::assemble(
            "suite",
            "x.json",
            "Q".into(),
            2,
            7,
            vec![CheckRecord::pass("a"), CheckRecord::pass("b")],
        );
        assert_eq!(pass.overall, CheckStatus::Pass);
        assert_eq!(pass.exit_code(), 0);

        let failed = ReportDocument::assemble(
            "suite",
            "x.json",
            "Q".into(),
            2,
            7,
            vec![CheckRecord::pass("a"), CheckRecord::of_bool("b", false)],
        );
        assert_eq!(failed.overall, CheckStatus::Fail);
        assert_eq!(failed.exit_code(), 1);

        let inconclusive = ReportDocument::assemble(
            "suite",
            "x.json",
            "Q".into(),
            2,
            7,
            vec![CheckRecord {
                name: "c".into(),
                status: CheckStatus::Inconclusive,
                witness: None,
            }],
        );
        assert_eq!(inconclusive.overall, CheckStatus::Fail);
        assert_eq!(inconclusive.exit_code(), 1);
    }

    #[test]
    fn statuses_serialize_lowercase() {
        let record = CheckRecord::pass("x").with_witness(serde_json::json!({"dim": 1}));
        let json = serde_json::to_value(&record).unwrap();
        assert_eq!(json["status"], "pass");
        assert_eq!(json["witness"]["dim"], 1);
    }
}
