//! Report rendering: a human text form and a stable machine (JSON) form.
//!
//! The machine schema is versioned and append-only:
//! schemaVersion, command, seed, bounds, parallel, outcome?, printed?,
//! reports[{lawId, subject, status, casesChecked, fnMode?, witness?}].
//! Wall-clock time is deliberately excluded so identical runs are
//! byte-identical.

use serde::{Deserialize, Serialize};

use mlb_core::lawcheck::{LawReport, Status};
use mlb_core::value::Bounds;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct MachineReport {
    pub schema_version: u32,
    pub command: String,
    pub seed: u64,
    pub bounds: Bounds,
    pub parallel: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub outcome: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub printed: Vec<String>,
    pub reports: Vec<LawReport>,
}

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// The fully assembled result of one command.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub command: String,
    pub bounds: Bounds,
    pub parallel: bool,
    pub outcome: Option<String>,
    pub printed: Vec<String>,
    pub reports: Vec<LawReport>,
    pub exit_code: i32,
}

impl RunResult {
    /// Exit code from report statuses alone: 0 all PASS/VACUOUS, 1 any FAIL.
    pub fn code_from_reports(reports: &[LawReport]) -> i32 {
        if reports.iter().any(|r| r.status == Status::Fail) {
            1
        } else {
            0
        }
    }
}

pub fn render(result: &RunResult, format: Format) -> String {
    match format {
        Format::Machine => {
            let machine = MachineReport {
                schema_version: SCHEMA_VERSION,
                command: result.command.clone(),
                seed: result.bounds.sample_seed,
                bounds: result.bounds.clone(),
                parallel: result.parallel,
                outcome: result.outcome.clone(),
                printed: result.printed.clone(),
                reports: result.reports.clone(),
            };
            serde_json::to_string_pretty(&machine).expect("reports serialize")
        }
        Format::Text => {
            let b = &result.bounds;
            let mut out = String::new();
            out.push_str(&format!(
                "# {} | bounds: maxListLen={} maxTreeDepth={} maxFnEnum={} maxNestDepth={} seed={}{}\n",
                result.command,
                b.max_list_len,
                b.max_tree_depth,
                b.max_fn_enum,
                b.max_nest_depth,
                b.sample_seed,
                if result.parallel { " parallel" } else { "" },
            ));
            for line in &result.printed {
                out.push_str(line);
                out.push('\n');
            }
            for r in &result.reports {
                out.push_str(&render_report_text(r));
            }
            if let Some(outcome) = &result.outcome {
                out.push_str(outcome);
                out.push('\n');
            }
            out
        }
    }
}

fn render_report_text(r: &LawReport) -> String {
    let mut out = String::new();
    let mode = match r.fn_mode {
        Some(mlb_core::lawcheck::FnMode::Exhaustive) => ", fns exhaustive",
        Some(mlb_core::lawcheck::FnMode::Sampled) => ", fns sampled",
        None => "",
    };
    out.push_str(&format!(
        "{} [{}]: {} ({} cases{})\n",
        r.law, r.subject, r.status, r.cases_checked, mode
    ));
    if let Some(w) = &r.witness {
        out.push_str("  witness:\n");
        for (name, v) in &w.inputs {
            out.push_str(&format!("    {name} = {v}\n"));
        }
        out.push_str(&format!("    lhs ({}) = {}\n", w.lhs_path, w.lhs));
        out.push_str(&format!("    rhs ({}) = {}\n", w.rhs_path, w.rhs));
    }
    out
}
