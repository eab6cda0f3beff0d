//! Machine-readable verification reports and their schema.

use crate::numeric::Tolerance;
use crate::scenario::Verdict;
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, Serialize)]
pub struct ToleranceOut {
    pub pass_tol: f64,
    pub fail_floor: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: String,
    pub tool_version: String,
    pub seed: u64,
    pub trials: u32,
    pub tolerance: ToleranceOut,
    pub scenarios: Vec<Verdict>,
}

impl Report {
    pub fn new(seed: u64, trials: u32, tol: &Tolerance, scenarios: Vec<Verdict>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            trials,
            tolerance: ToleranceOut {
                pass_tol: tol.pass_tol,
                fail_floor: tol.fail_floor,
            },
            scenarios,
        }
    }

    /// Deterministic serialization: field order is fixed by the structs,
    /// UTF-8 with LF line endings.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Versioned JSON schema for the report document.
pub fn report_schema() -> serde_json::Value {
    serde_json::json!({
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "planeforge verification report",
        "version": SCHEMA_VERSION,
        "type": "object",
        "required": ["schema_version", "tool_version", "seed", "trials", "tolerance", "scenarios"],
        "properties": {
            "schema_version": {"type": "string"},
            "tool_version": {"type": "string"},
            "seed": {"type": "integer", "minimum": 0},
            "trials": {"type": "integer", "minimum": 0},
            "tolerance": {
                "type": "object",
                "required": ["pass_tol", "fail_floor"],
                "properties": {
                    "pass_tol": {"type": "number"},
                    "fail_floor": {"type": "number"}
                }
            },
            "scenarios": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["id", "anchor", "tier", "trials_requested",
                                  "trials_completed", "trials_skipped", "relations", "status"],
                    "properties": {
                        "id": {"type": "string"},
                        "anchor": {"type": "string"},
                        "tier": {"type": "integer", "minimum": 1, "maximum": 4},
                        "trials_requested": {"type": "integer", "minimum": 0},
                        "trials_completed": {"type": "integer", "minimum": 0},
                        "trials_skipped": {"type": "integer", "minimum": 0},
                        "status": {"enum": ["PASS", "FAIL", "INCONCLUSIVE", "DEGENERATE"]},
                        "relations": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "required": ["name", "residual_median", "residual_max",
                                              "probe_margin_median"],
                                "properties": {
                                    "name": {"type": "string"},
                                    "residual_median": {"type": "number"},
                                    "residual_max": {"type": "number"},
                                    "probe_margin_median": {"type": "number"}
                                }
                            }
                        }
                    }
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_valid_document() {
        let tol = Tolerance::default();
        let r = Report::new(0, 0, &tol, vec![]);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["schema_version"], "1");
        assert_eq!(json["scenarios"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn schema_has_required_fields() {
        let s = report_schema();
        let req = s["required"].as_array().unwrap();
        assert!(req.iter().any(|v| v == "scenarios"));
        assert!(req.iter().any(|v| v == "seed"));
    }
}
